#include "ivplab/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>

#include "ivplab/errors.hpp"
#include "ivplab/padic.hpp"

namespace ivplab {

std::vector<std::size_t> FactorizationReport::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(factorizations.size());
  for (const auto& fz : factorizations) out.push_back(fz.length());
  return out;
}

namespace {

constexpr std::uint64_t kInfinite = std::uint64_t{1} << 40;

// All exponent vectors 0 <= v <= top, indexed in mixed radix (top_i + 1).
// For v <= w componentwise, index(w - v) = index(w) - index(v).
class Lattice {
 public:
  explicit Lattice(ExponentVector top) : top_(std::move(top)), stride_(top_.size()) {
    std::size_t s = 1;
    for (std::size_t i = 0; i < top_.size(); ++i) {
      stride_[i] = s;
      if (s > (std::size_t{1} << 26) / (top_[i] + 1)) throw BudgetExceeded("exponent lattice too large");
      s *= top_[i] + 1;
    }
    size_ = s;
    digits_.resize(size_ * top_.size());
    for (std::size_t idx = 0; idx < size_; ++idx)
      for (std::size_t i = 0; i < top_.size(); ++i)
        digits_[idx * top_.size() + i] = static_cast<unsigned>(idx / stride_[i] % (top_[i] + 1));
  }

  std::size_t size() const { return size_; }
  std::size_t dims() const { return top_.size(); }
  std::size_t top_index() const { return size_ - 1; }
  std::size_t stride(std::size_t i) const { return stride_[i]; }

  std::span<const unsigned> digits(std::size_t idx) const {
    return {digits_.data() + idx * top_.size(), top_.size()};
  }

  std::size_t index(const ExponentVector& v) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) idx += v[i] * stride_[i];
    return idx;
  }

  // Calls fn(u) for every sub-vector index u of `of`, including 0 and `of`.
  template <typename Fn>
  void for_each_below(std::size_t of, Fn&& fn) const {
    auto limit = digits(of);
    std::vector<unsigned> cur(dims(), 0);
    std::size_t idx = 0;
    while (true) {
      fn(idx);
      std::size_t i = 0;
      for (; i < dims(); ++i) {
        if (cur[i] < limit[i]) {
          ++cur[i];
          idx += stride_[i];
          break;
        }
        idx -= cur[i] * stride_[i];
        cur[i] = 0;
      }
      if (i == dims()) return;
    }
  }

 private:
  ExponentVector top_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
  std::vector<unsigned> digits_;
};

// Fixed divisors of prod(basis^v) as exponent vectors over the primes up to
// the total degree; other primes cannot divide them since the numerators are
// monic. Entries are computed on first use, once, from any thread.
class FixedDivisorTable {
 public:
  FixedDivisorTable(const std::vector<IntPoly>& basis, const ExponentVector& top)
      : lattice_(top), fd_(lattice_.size()), fd_once_(new std::once_flag[lattice_.size()]),
        atom_(lattice_.size(), 0), atom_once_(new std::once_flag[lattice_.size()]) {
    for (const auto& f : basis) degrees_.push_back(static_cast<unsigned>(f.degree()));
    max_degree_ = total_degree(basis, top);
    for (auto p : primes_up_to(max_degree_)) primes_.push_back(p);

    // val_[(j * q + i) * points + a] = v_{p_j}(f_i(a)), a = 0..max_degree
    const std::size_t q = basis.size(), points = max_degree_ + 1;
    val_.assign(primes_.size() * q * points, 0);
    BigInt rest;
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t a = 0; a < points; ++a) {
        BigInt value = eval(basis[i], BigInt(static_cast<unsigned long>(a)));
        for (std::size_t j = 0; j < primes_.size(); ++j) {
          std::uint64_t v = kInfinite;
          if (sgn(value) != 0) {
            BigInt p = from_u64(primes_[j]);
            v = mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
          }
          val_[(j * q + i) * points + a] = v;
        }
      }
    }
  }

  const Lattice& lattice() const { return lattice_; }
  std::span<const std::uint64_t> primes() const { return primes_; }

  const std::vector<std::uint32_t>& fd(std::size_t idx) {
    std::call_once(fd_once_[idx], [&] { fd_[idx] = compute_fd(idx); });
    return fd_[idx];
  }

  BigInt fd_value(std::size_t idx) {
    const auto& exps = fd(idx);
    BigInt out = 1;
    for (std::size_t j = 0; j < primes_.size(); ++j)
      if (exps[j] > 0) out *= pow(from_u64(primes_[j]), exps[j]);
    return out;
  }

  bool is_atom(std::size_t idx) {
    std::call_once(atom_once_[idx], [&] { atom_[idx] = compute_atom(idx) ? 1 : 0; });
    return atom_[idx] != 0;
  }

 private:
  std::vector<std::uint32_t> compute_fd(std::size_t idx) const {
    auto v = lattice_.digits(idx);
    const std::size_t q = v.size(), points = max_degree_ + 1;
    unsigned deg = 0;
    for (std::size_t i = 0; i < q; ++i) deg += v[i] * degrees_[i];
    std::vector<std::uint32_t> out(primes_.size(), 0);
    for (std::size_t j = 0; j < primes_.size(); ++j) {
      std::uint64_t best = kInfinite;
      for (std::size_t a = 0; a <= deg; ++a) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < q && s < kInfinite; ++i) {
          if (v[i] == 0) continue;
          std::uint64_t x = val_[(j * q + i) * points + a];
          s = x >= kInfinite ? kInfinite : std::min(kInfinite, s + x * v[i]);
        }
        best = std::min(best, s);
      }
      if (best >= kInfinite) throw InvariantViolation("fixed divisor of a nonzero polynomial is zero");
      out[j] = static_cast<std::uint32_t>(best);
    }
    return out;
  }

  bool compute_atom(std::size_t idx) {
    if (idx == 0) return false;
    const auto& whole = fd(idx);
    bool atom = true;
    lattice_.for_each_below(idx, [&](std::size_t u) {
      if (!atom || u == 0 || u > idx - u) return;
      const auto& a = fd(u);
      const auto& b = fd(idx - u);
      bool equal = true;
      for (std::size_t j = 0; j < whole.size() && equal; ++j) equal = a[j] + b[j] == whole[j];
      if (equal) atom = false;
    });
    return atom;
  }

  Lattice lattice_;
  std::vector<unsigned> degrees_;
  unsigned max_degree_ = 0;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint64_t> val_;
  std::vector<std::vector<std::uint32_t>> fd_;
  std::unique_ptr<std::once_flag[]> fd_once_;
  std::vector<char> atom_;
  std::unique_ptr<std::once_flag[]> atom_once_;
};

class PartitionSearch {
 public:
  PartitionSearch(FixedDivisorTable& table, std::vector<std::uint32_t> target, std::uint64_t budget,
                  std::atomic<std::uint64_t>& nodes)
      : table_(table), target_(std::move(target)), budget_(budget), nodes_(nodes) {}

  // Part u may follow a partial factorization with fixed-divisor exponents
  // `acc` and remaining vector `rem`: the parts still to come have fixed
  // divisors dividing d(rem - u), and all of them must multiply to target.
  bool feasible(std::size_t rem, std::size_t u, const std::vector<std::uint32_t>& acc) {
    if (u == 0 || !table_.is_atom(u)) return false;
    const auto& fu = table_.fd(u);
    const auto& frest = table_.fd(rem - u);
    for (std::size_t j = 0; j < target_.size(); ++j) {
      std::uint64_t used = std::uint64_t{acc[j]} + fu[j];
      if (used > target_[j] || target_[j] - used > frest[j]) return false;
    }
    return true;
  }

  std::vector<std::size_t> candidates(std::size_t rem, std::size_t max_index, const std::vector<std::uint32_t>& acc) {
    std::vector<std::size_t> out;
    table_.lattice().for_each_below(rem, [&](std::size_t u) {
      if (u <= max_index && feasible(rem, u, acc)) out.push_back(u);
    });
    return out;
  }

  void descend(std::size_t rem, std::size_t max_index, std::vector<std::uint32_t>& acc, std::vector<std::size_t>& parts) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_)
      throw BudgetExceeded("enumeration budget of " + std::to_string(budget_) + " nodes exceeded");
    if (rem == 0) {
      found_.push_back(parts);
      return;
    }
    for (std::size_t u : candidates(rem, max_index, acc)) {
      apply(u, acc, parts, +1);
      descend(rem - u, u, acc, parts);
      apply(u, acc, parts, -1);
    }
  }

  void apply(std::size_t u, std::vector<std::uint32_t>& acc, std::vector<std::size_t>& parts, int direction) {
    const auto& fu = table_.fd(u);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = direction > 0 ? acc[j] + fu[j] : acc[j] - fu[j];
    if (direction > 0) {
      parts.push_back(u);
    } else {
      parts.pop_back();
    }
  }

  std::vector<std::vector<std::size_t>>& found() { return found_; }

 private:
  FixedDivisorTable& table_;
  std::vector<std::uint32_t> target_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<std::vector<std::size_t>> found_;
};

void require_distinct_monic(const IvpElement& e) {
  validate_shape(e);
  for (std::size_t i = 0; i < e.basis.size(); ++i)
    for (std::size_t j = i + 1; j < e.basis.size(); ++j)
      if (e.basis[i] == e.basis[j]) throw std::invalid_argument("basis polynomials must be distinct");
}

}  // namespace

FactorizationReport count_essential_factorizations(const IvpElement& e, unsigned n, const EngineConfig& config) {
  if (n < 1) throw std::invalid_argument("power n must be positive");
  require_distinct_monic(e);
  if (e.sign != 1) throw std::invalid_argument("count_essential_factorizations expects sign +1 (canonical form)");

  ExponentVector top(e.expo);
  for (auto& k : top) k *= n;
  FixedDivisorTable table(e.basis, top);

  if (table.fd_value(table.lattice().index(e.expo)) != e.denom)
    throw std::invalid_argument("element is not image-primitive (or not integer-valued)");
  const std::size_t top_index = table.lattice().top_index();
  // e image-primitive implies e^n image-primitive, so no constant factors.
  if (table.fd_value(top_index) != pow(e.denom, n))
    throw InvariantViolation("fixed divisor of the n-th power numerator is not denom^n");

  FactorizationReport report;
  report.basis = e.basis;
  report.target_expo = e.expo;
  report.target_denom = e.denom;
  report.n = n;

  std::atomic<std::uint64_t> nodes{0};
  const auto target = table.fd(top_index);
  std::vector<std::vector<std::size_t>> partitions;

  if (top_index == 0) {
    partitions.emplace_back();
  } else if (config.threads <= 1) {
    PartitionSearch search(table, target, config.budget, nodes);
    std::vector<std::uint32_t> acc(target.size(), 0);
    std::vector<std::size_t> parts;
    search.descend(top_index, top_index, acc, parts);
    partitions = std::move(search.found());
  } else {
    PartitionSearch root(table, target, config.budget, nodes);
    const std::vector<std::uint32_t> zero(target.size(), 0);
    const auto firsts = root.candidates(top_index, top_index, zero);
    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
      try {
        PartitionSearch search(table, target, config.budget, nodes);
        for (std::size_t k = next++; k < firsts.size(); k = next++) {
          std::vector<std::uint32_t> acc = zero;
          std::vector<std::size_t> parts;
          search.apply(firsts[k], acc, parts, +1);
          search.descend(top_index - firsts[k], firsts[k], acc, parts);
        }
        std::lock_guard lock(merge_mutex);
        for (auto& p : search.found()) partitions.push_back(std::move(p));
      } catch (...) {
        std::lock_guard lock(merge_mutex);
        if (!failure) failure = std::current_exception();
        next = firsts.size();
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < config.threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  std::sort(partitions.begin(), partitions.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  for (const auto& parts : partitions) {
    Factorization fz;
    for (std::size_t u : parts) {
      auto digits = table.lattice().digits(u);
      fz.factors.push_back(Factor{ExponentVector(digits.begin(), digits.end()), table.fd_value(u)});
    }
    report.factorizations.push_back(std::move(fz));
  }
  report.nodes_explored = nodes.load();
  return report;
}

bool is_irreducible_ivp(const IvpElement& raw) {
  validate_shape(raw);
  if (!is_member(raw) || is_unit(raw)) return false;
  IvpElement e = canonicalize(raw);
  if (e.basis.empty()) return false;  // constant member: a unit
  FixedDivisorTable table(e.basis, e.expo);
  const std::size_t top = table.lattice().top_index();
  if (table.fd_value(top) != e.denom) return false;
  return table.is_atom(top);
}

IvpElement materialize(const std::vector<IntPoly>& basis, const Factor& factor) {
  return IvpElement{basis, factor.expo, factor.denom, 1};
}

bool reconstructs_target(const FactorizationReport& report, const Factorization& fz) {
  IntPoly num = IntPoly::constant(1);
  BigInt den = 1;
  for (const auto& factor : fz.factors) {
    num *= basis_product(report.basis, factor.expo);
    den *= factor.denom;
  }
  return num == pow(basis_product(report.basis, report.target_expo), report.n) &&
         den == pow(report.target_denom, report.n);
}

bool refines_to_two_block_form(const Factorization& fz, std::size_t distinguished) {
  const std::size_t k = fz.length();
  if (k > 24) throw std::invalid_argument("two-block check limited to 24 factors");
  if (k == 0) return true;
  const std::size_t dims = fz.factors.front().expo.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ExponentVector sum(dims, 0);
    for (std::size_t f = 0; f < k; ++f)
      if (mask >> f & 1U)
        for (std::size_t i = 0; i < dims; ++i) sum[i] += fz.factors[f].expo[i];
    std::optional<unsigned> block;
    for (std::size_t i = 0; i < dims; ++i) {
      if (i == distinguished) continue;
      if (block && *block != sum[i]) return false;
      block = sum[i];
    }
  }
  return true;
}

}  // namespace ivplab
