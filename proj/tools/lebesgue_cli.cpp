// Command-line front end: integrate a function of a spec file, print the
// adapted-sequence convergence table, or run the theorem property suite.
//
// Exit codes: 0 success, 1 property failure, 2 input error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lebesgue/lintp.hpp"
#include "lebesgue/specfile.hpp"
#include "lebesgue/suite.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

using namespace lebesgue;

PointFn lookup(const SpecModel& model, const std::string& name) {
  auto it = model.functions.find(name);
  if (it == model.functions.end()) throw Error(ErrorKind::Validation, "no function named '" + name + "'");
  return it->second;
}

int integrate(const std::string& spec_path, const std::string& fn) {
  const auto model = instantiate(load_spec(spec_path));
  std::cout << lint_p(model.measure, lookup(model, fn)) << '\n';
  return kOk;
}

int adapted_table_cmd(const std::string& spec_path, const std::string& fn, unsigned n_max, bool csv) {
  const auto model = instantiate(load_spec(spec_path));
  const auto rows = adapted_table(model.measure, lookup(model, fn), n_max);
  const char* sep = csv ? "," : "\t";
  std::cout << "n" << sep << "integral" << sep << "gap\n";
  for (const auto& r : rows) std::cout << r.n << sep << r.integral << sep << r.gap << '\n';
  return kOk;
}

int check(const std::string& spec_path, const std::vector<std::uint64_t>& random, bool corrupt) {
  SuiteOptions options;
  options.corrupt_measure = corrupt;
  SuiteReport report;
  if (!spec_path.empty()) {
    report = run_suite(load_spec(spec_path), options);
  } else {
    const std::uint64_t seed = random.size() > 0 ? random[0] : 0;
    const std::size_t count = random.size() > 1 ? random[1] : 500;
    const std::size_t size = random.size() > 2 ? random[2] : 6;
    report = run_random_suite(seed, count, size, options);
  }
  for (const auto& [name, t] : report.tallies)
    std::cout << (t.failed == 0 ? "PASS " : "FAIL ") << name << "  passed=" << t.passed << " failed=" << t.failed
              << '\n';
  for (const auto& c : report.counterexamples) std::cout << "\n" << c;
  return report.ok() ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lebesgue integration on finite measure spaces"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string fn;
  unsigned n_max = 0;
  bool csv = false;
  std::vector<std::uint64_t> random;
  bool corrupt = false;

  auto* integrate_cmd = app.add_subcommand("integrate", "Print the integral of a function");
  integrate_cmd->add_option("--spec", spec_path, "Spec file")->required();
  integrate_cmd->add_option("--fn", fn, "Function name")->required();

  auto* table_cmd = app.add_subcommand("adapted-table", "Print n, integral of phi_n, gap to the integral");
  table_cmd->add_option("--spec", spec_path, "Spec file")->required();
  table_cmd->add_option("--fn", fn, "Function name")->required();
  table_cmd->add_option("--nmax", n_max, "Last n (>= 1)")->required();
  table_cmd->add_flag("--csv", csv, "Comma separated output");

  auto* check_cmd = app.add_subcommand("check", "Run the property suite on a spec or on random cases");
  auto* spec_opt = check_cmd->add_option("--spec", spec_path, "Spec file");
  check_cmd->add_option("--random", random, "SEED COUNT SIZE (defaults 0 500 6)")
      ->expected(0, 3)
      ->excludes(spec_opt);
  check_cmd->add_flag("--corrupt-measure", corrupt, "Debug: perturb mu(E) to exercise failure reporting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*integrate_cmd) return integrate(spec_path, fn);
    if (*table_cmd) {
      if (n_max == 0) {
        std::cerr << "error: --nmax must be at least 1\n";
        return kInputError;
      }
      return adapted_table_cmd(spec_path, fn, n_max, csv);
    }
    if (*check_cmd) return check(spec_path, random, corrupt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
