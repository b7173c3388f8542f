// ivplab: construct and verify integer-valued polynomials whose powers
// factor uniquely below N and non-uniquely at N.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ivplab/cli.hpp"

namespace {

void add_witness_source(CLI::App* cmd, ivplab::cli::WitnessSource& src, std::string& witness_path, unsigned& N,
                        std::string& p) {
  cmd->add_option("--witness", witness_path, "Witness JSON file");
  cmd->add_option("--N", N, "Power at which uniqueness first fails (N >= 2)");
  cmd->add_option("--p", p, "Prime p");
  cmd->add_option("--aux-primes", src.aux_primes, "Auxiliary Eisenstein primes, one per basis polynomial")
      ->delimiter(',');
}

void finish_source(CLI::App* cmd, ivplab::cli::WitnessSource& src, const std::string& witness_path, unsigned N,
                   const std::string& p) {
  if (cmd->count("--witness") > 0) src.witness_file = witness_path;
  if (cmd->count("--N") > 0) src.N = N;
  if (cmd->count("--p") > 0) src.p = p;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ivplab::cli;

  CLI::App app{"Integer-valued polynomial factorization lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CommonOptions opts;
  bool no_timings = false;
  bool quiet = false;
  std::string report_path;
  std::optional<std::uint64_t> budget;
  app.add_flag("--no-timings", no_timings, "Omit timings so reports are byte-identical across runs");
  app.add_option("--threads", opts.threads, "Worker threads for the enumeration engine")->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "Enumeration node budget (overrides IVPLAB_BUDGET)");
  app.add_option("--report", report_path, "Also write the run report to this file");
  app.add_flag("-q,--quiet", quiet, "No summary on stderr");

  // construct
  auto* construct = app.add_subcommand("construct", "Build the witness F for given N and p");
  unsigned c_N = 0;
  std::string c_p, c_out;
  std::vector<std::string> c_aux;
  construct->add_option("--N", c_N, "N >= 2")->required();
  construct->add_option("--p", c_p, "Prime p")->required();
  construct->add_option("--aux-primes", c_aux, "Auxiliary Eisenstein primes")->delimiter(',');
  construct->add_option("--out", c_out, "Write the witness JSON here");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify uniqueness below N and the two factorizations at N");
  WitnessSource v_src;
  std::string v_witness, v_p;
  unsigned v_N = 0, v_nmax = 0;
  add_witness_source(verify, v_src, v_witness, v_N, v_p);
  verify->add_option("--n-max", v_nmax, "Largest power examined (defaults to N)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Analyze a user-supplied element of Int(Z)");
  std::string a_element;
  unsigned a_nmax = 3;
  analyze->add_option("--element", a_element, "Element JSON file")->required();
  analyze->add_option("--n-max", a_nmax, "Largest power examined");

  // oracle-compare
  auto* compare = app.add_subcommand("oracle-compare", "Compare the engine against the brute-force oracle");
  WitnessSource o_src;
  std::string o_witness, o_p, o_element;
  unsigned o_N = 0, o_n = 0;
  add_witness_source(compare, o_src, o_witness, o_N, o_p);
  compare->add_option("--element", o_element, "Element JSON file instead of a witness");
  compare->add_option("--n", o_n, "Power to factor")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kBadInput;
  }
  opts.timings = !no_timings;
  opts.budget = budget;

  CommandResult result;
  if (*construct) {
    std::optional<std::filesystem::path> out;
    if (!c_out.empty()) out = c_out;
    result = cmd_construct(c_N, c_p, c_aux, out, opts);
  } else if (*verify) {
    finish_source(verify, v_src, v_witness, v_N, v_p);
    result = cmd_verify(v_src, v_nmax, opts);
  } else if (*analyze) {
    result = cmd_analyze(a_element, a_nmax, opts);
  } else if (*compare) {
    finish_source(compare, o_src, o_witness, o_N, o_p);
    std::optional<std::filesystem::path> element;
    if (!o_element.empty()) element = o_element;
    result = cmd_oracle_compare(o_src, element, o_n, opts);
  }

  std::cout << result.report.dump(2) << '\n';
  if (!report_path.empty()) ivplab::write_json_file(report_path, result.report);
  if (!quiet) std::cerr << result.summary;
  return result.exit_code;
}
