#include "ivplab/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ivplab/errors.hpp"

namespace ivplab {

namespace {

void require_radius(const IntPoly& num, const OracleConfig& cfg) {
  if (static_cast<int>(cfg.sample_radius) < num.degree())
    throw std::invalid_argument("oracle sample radius below the polynomial degree");
}

std::vector<BigInt> divisors_of(const BigInt& n) {
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    BigInt other = n / d;
    if (other != d) large.push_back(other);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Every vector v with 0 <= v <= top, in lexicographic order.
std::vector<ExponentVector> all_below(const ExponentVector& top) {
  std::vector<ExponentVector> out;
  ExponentVector cur(top.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < top.size(); ++i) {
      if (cur[i] < top[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
    }
    if (i == top.size()) return out;
  }
}

ExponentVector minus(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

bool is_zero(const ExponentVector& v) {
  return std::ranges::all_of(v, [](unsigned k) { return k == 0; });
}

class BruteForce {
 public:
  BruteForce(const IvpElement& e, unsigned n, const OracleConfig& cfg) : basis_(e.basis), cfg_(cfg) {
    top_ = e.expo;
    unsigned parts = 0, degree = 0;
    for (std::size_t i = 0; i < top_.size(); ++i) {
      top_[i] *= n;
      parts += top_[i];
      degree += top_[i] * static_cast<unsigned>(basis_[i].degree());
    }
    if (parts > cfg.max_parts) throw BudgetExceeded("oracle: instance exceeds max_parts");
    sampling_ = cfg;
    sampling_.sample_radius = std::max(cfg.sample_radius, degree);

    // Sampled fixed divisors of every sub-product, expanded from scratch.
    for (const auto& v : all_below(top_)) {
      IntPoly prod = IntPoly::constant(1);
      for (std::size_t i = 0; i < v.size(); ++i)
        for (unsigned k = 0; k < v[i]; ++k) prod = prod * basis_[i];
      BigInt fd = sampled_fixed_divisor(prod, sampling_);
      values_.emplace(v, Entry{fd, divisors_of(fd)});
    }
    target_denom_ = 1;
    for (unsigned k = 0; k < n; ++k) target_denom_ *= e.denom;
    if (values_.at(top_).fd != target_denom_)
      throw std::invalid_argument("oracle: target is not image-primitive by sampling");
  }

  OracleResult run() {
    std::vector<std::pair<ExponentVector, BigInt>> tuple;
    descend(top_, target_denom_, tuple);
    OracleResult out;
    out.classes.assign(classes_.begin(), classes_.end());
    out.ordered_tuples = ordered_;
    out.nodes = nodes_;
    return out;
  }

 private:
  struct Entry {
    BigInt fd;
    std::vector<BigInt> divisors;
  };

  bool is_unit(const ExponentVector& v, const BigInt& c, const BigInt& d) const { return is_zero(v) && c == d; }

  // f^v / d with d | fd(v): irreducible iff it is not a product of two
  // non-units (c1/d1) f^v1 * (c2/d2) f^v2 with d_i | fd(v_i).
  bool is_atom(const ExponentVector& v, const BigInt& d) const {
    if (is_zero(v)) return false;
    for (const auto& v1 : all_below(v)) {
      const ExponentVector v2 = minus(v, v1);
      for (const BigInt& d1 : values_.at(v1).divisors) {
        for (const BigInt& d2 : values_.at(v2).divisors) {
          BigInt prod = d1 * d2;
          if (prod % d != 0) continue;
          for (const BigInt& c1 : divisors_of(prod / d)) {
            BigInt c2 = prod / d / c1;
            if (!is_unit(v1, c1, d1) && !is_unit(v2, c2, d2)) return false;
          }
        }
      }
    }
    return true;
  }

  void descend(const ExponentVector& rem, const BigInt& rem_denom,
               std::vector<std::pair<ExponentVector, BigInt>>& tuple) {
    if (++nodes_ > cfg_.max_nodes) throw BudgetExceeded("oracle: node cap exceeded");
    if (is_zero(rem)) {
      if (rem_denom == 1) {
        ++ordered_;
        auto cls = tuple;
        std::sort(cls.begin(), cls.end());
        classes_.insert(std::move(cls));
      }
      return;
    }
    // What remains is itself a product of integer-valued factors.
    if (values_.at(rem).fd % rem_denom != 0) return;
    for (const auto& v : all_below(rem)) {
      if (is_zero(v)) continue;
      for (const BigInt& d : values_.at(v).divisors) {
        if (rem_denom % d != 0 || !is_atom(v, d)) continue;
        tuple.emplace_back(v, d);
        descend(minus(rem, v), rem_denom / d, tuple);
        tuple.pop_back();
      }
    }
  }

  std::vector<IntPoly> basis_;
  OracleConfig cfg_;
  OracleConfig sampling_;
  ExponentVector top_;
  BigInt target_denom_;
  std::map<ExponentVector, Entry> values_;
  std::set<EssentialClass> classes_;
  std::uint64_t ordered_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

BigInt sampled_fixed_divisor(const IntPoly& num, const OracleConfig& cfg) {
  if (num.is_zero()) throw std::invalid_argument("sampled_fixed_divisor of the zero polynomial");
  require_radius(num, cfg);
  BigInt g = 0;
  const long r = static_cast<long>(cfg.sample_radius);
  for (long a = -r; a <= r; ++a) {
    BigInt value = eval(num, BigInt(a));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
  }
  return g;
}

bool sampled_integer_valuedness(const IntPoly& num, const BigInt& denom, const OracleConfig& cfg) {
  if (denom < 1) throw std::invalid_argument("denominator must be positive");
  require_radius(num, cfg);
  const long r = static_cast<long>(cfg.sample_radius);
  for (long a = -r; a <= r; ++a) {
    BigInt value = eval(num, BigInt(a));
    if (!mpz_divisible_p(value.get_mpz_t(), denom.get_mpz_t())) return false;
  }
  return true;
}

OracleResult brute_force_factorizations(const IvpElement& e, unsigned n, const OracleConfig& cfg) {
  if (n < 1) throw std::invalid_argument("power n must be positive");
  validate_shape(e);
  return BruteForce(e, n, cfg).run();
}

std::vector<EssentialClass> classes_of(const FactorizationReport& report) {
  std::vector<EssentialClass> out;
  for (const auto& fz : report.factorizations) {
    EssentialClass cls;
    for (const auto& f : fz.factors) cls.emplace_back(f.expo, f.denom);
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ivplab
