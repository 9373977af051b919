// skewchar: expand, evaluate, classify and certify the skew-characteristic
// polynomial P(Lambda) = det(A - Lambda) of a quadratic form.
//
// Exit codes: 0 success, 1 selftest or contract failure, 2 input error,
// 3 dimension cap exceeded.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "skewchar/analyzer.hpp"
#include "skewchar/engine.hpp"
#include "skewchar/errors.hpp"
#include "skewchar/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw skewchar::InputError("cannot open '" + path + "'");
  return in;
}

skewchar::SymmetricMatrix load_symmetric(const std::string& path) {
  auto in = open_input(path);
  return skewchar::parse_symmetric(in);
}

skewchar::SkewMatrix load_skew(const std::string& path) {
  auto in = open_input(path);
  return skewchar::parse_skew(in);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace skewchar;

  CLI::App app{"Skew-characteristic polynomial toolkit"};
  app.require_subcommand(1, 1);

  std::string a_path;
  std::string l_path;
  int trials = 1000;
  std::uint64_t seed = 0;
  int bound = 10;
  EngineConfig config;

  auto* expand = app.add_subcommand("expand", "Print P(Lambda) as a canonical polynomial");
  expand->add_option("A-file", a_path, "symmetric matrix file")->required();
  expand->add_option("--max-dim", config.max_dimension, "dimension cap for symbolic expansion");

  auto* eval = app.add_subcommand("eval", "Evaluate P at a concrete skew matrix");
  eval->add_option("A-file", a_path, "symmetric matrix file")->required();
  eval->add_option("L-file", l_path, "skew matrix file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify the form, with witnesses");
  classify_cmd->add_option("A-file", a_path, "symmetric matrix file")->required();

  auto* witness = app.add_subcommand("witness", "Sign-change witnesses for an indefinite form");
  witness->add_option("A-file", a_path, "symmetric matrix file")->required();

  auto* certify = app.add_subcommand("certify", "Sum-of-squares certificate for a positive form");
  certify->add_option("A-file", a_path, "symmetric matrix file")->required();
  certify->add_option("--max-dim", config.max_dimension, "dimension cap for the certificate");

  auto* probe = app.add_subcommand("probe", "Tally signs of P at random skew matrices");
  probe->add_option("A-file", a_path, "symmetric matrix file")->required();
  probe->add_option("--trials", trials, "number of samples")->check(CLI::PositiveNumber);
  probe->add_option("--seed", seed, "base seed");
  probe->add_option("--bound", bound, "numerator/denominator bound")->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "Run the embedded checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (expand->parsed()) {
      std::cout << to_string(expand_skewchar(load_symmetric(a_path), config)) << "\n";
    } else if (eval->parsed()) {
      std::cout << eval_skewchar(load_symmetric(a_path), load_skew(l_path)) << "\n";
    } else if (classify_cmd->parsed()) {
      std::cout << format_report(classify(load_symmetric(a_path)));
    } else if (witness->parsed()) {
      std::cout << format_witness(witness_indefinite(load_symmetric(a_path)));
    } else if (certify->parsed()) {
      std::cout << format_certificate(certify_positive(load_symmetric(a_path), config));
    } else if (probe->parsed()) {
      std::cout << format_probe(sign_probe(load_symmetric(a_path), trials, seed, bound));
    } else if (selftest->parsed()) {
      int failures = 0;
      for (const auto& c : run_selftest()) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
        if (!c.pass) ++failures;
      }
      if (failures != 0) {
        std::cout << failures << " check(s) failed\n";
        return kExitFailure;
      }
      std::cout << "all checks passed\n";
    }
  } catch (const ExpansionTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
