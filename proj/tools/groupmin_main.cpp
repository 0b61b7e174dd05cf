#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "groupmin/boolean_ops.hpp"
#include "groupmin/dfa_io.hpp"
#include "groupmin/errors.hpp"
#include "groupmin/gf2k.hpp"
#include "groupmin/suite.hpp"
#include "groupmin/reports.hpp"

namespace {

using namespace groupmin;

int run_gen(const std::string& family, std::size_t n, std::size_t m,
            std::size_t k, const std::string& out_prefix) {
  auto write_single = [&](const Dfa& d) {
    save_dfa(d, out_prefix + ".dfa");
    std::cout << "wrote " << out_prefix << ".dfa\n";
  };
  auto write_pair = [&](const std::pair<Dfa, Dfa>& pair) {
    save_dfa(pair.first, out_prefix + "-left.dfa");
    save_dfa(pair.second, out_prefix + "-right.dfa");
    std::cout << "wrote " << out_prefix << "-left.dfa and " << out_prefix
              << "-right.dfa\n";
  };
  if (family == "cyclic") {
    write_single(cyclic_dfa(n));
  } else if (family == "symmetric") {
    write_single(symmetric_dfa(n));
  } else if (family == "alternating") {
    write_single(alternating_dfa(n));
  } else if (family == "maslov") {
    write_pair(maslov_pair(m, n));
  } else if (family == "yzs") {
    write_pair(yzs_pair(m, n));
  } else if (family == "affine-non-ubm") {
    write_pair(affine_pair_non_ubm(Gf2kField(k)));
  } else if (family == "affine-ubm") {
    write_pair(affine_pair_ubm(Gf2kField(k)));
  } else {
    throw CLI::ValidationError("unknown family '" + family + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-theoretic minimality analysis for permutation DFAs"};
  app.require_subcommand(1);

  ReportOptions opts;
  std::string path, path_left, path_right;
  bool timings = false;

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--element-cap", opts.element_cap,
                    "group enumeration element cap");
    cmd->add_option("--subset-limit", opts.subset_limit,
                    "degree bound for subset sweeps");
    cmd->add_flag("--json", opts.json, "machine-readable output");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "analyze one DFA file");
  analyze->add_option("file", path, "DFA file")->required();
  add_caps(analyze);

  CLI::App* product =
      app.add_subcommand("product", "analyze a direct product of two DFAs");
  product->add_option("left", path_left, "left DFA file")->required();
  product->add_option("right", path_right, "right DFA file")->required();
  product->add_flag("--ubm", opts.ubm,
                    "run the brute-force uniform-boolean-minimality sweep");
  product->add_flag("--boolean", opts.boolean_table,
                    "per-operation state complexities for all 10 proper ops");
  add_caps(product);

  std::string family, out_prefix = "out";
  std::size_t gen_n = 0, gen_m = 0, gen_k = 3;
  CLI::App* gen = app.add_subcommand(
      "gen",
      "generate a named DFA family (cyclic, symmetric, alternating, maslov, "
      "yzs, affine-non-ubm, affine-ubm)");
  gen->add_option("family", family, "family name")->required();
  gen->add_option("--n", gen_n, "state count (or right size for pairs)");
  gen->add_option("--m", gen_m, "left size for pair families");
  gen->add_option("--k", gen_k, "field degree for affine families");
  gen->add_option("-o,--out", out_prefix,
                  "output path prefix (writes <prefix>.dfa, or "
                  "<prefix>-left.dfa and <prefix>-right.dfa for pairs)");

  CLI::App* suite = app.add_subcommand(
      "suite", "run every worked-example check and print a table");
  suite->add_flag("--timings", timings, "append per-row runtimes");

  std::size_t conj_k = 3;
  CLI::App* conjecture = app.add_subcommand(
      "conjecture-affine-ubm",
      "report the brute-force UBM verdict for the two-letter affine pair");
  conjecture->add_option("--k", conj_k, "field degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      std::cout << analyze_report(load_dfa(path), opts);
    } else if (*product) {
      std::cout << product_report(load_dfa(path_left), load_dfa(path_right),
                                  opts);
    } else if (*gen) {
      return run_gen(family, gen_n, gen_m, gen_k, out_prefix);
    } else if (*suite) {
      SuiteResult result = run_example_suite();
      print_suite(std::cout, result, timings);
      return result.all_passed() ? 0 : 1;
    } else if (*conjecture) {
      Gf2kField field(conj_k);
      auto [a, ap] = affine_pair_ubm(field);
      bool verdict = is_uniformly_boolean_minimal(a, ap);
      std::cout << "k=" << conj_k << " uniformly-boolean-minimal: "
                << (verdict ? "yes" : "no") << '\n';
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceededError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 3;
  } catch (const LimitExceededError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
