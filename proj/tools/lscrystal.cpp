// lscrystal: explore LS path crystals B(mu) for rank-2 Kac-Moody algebras,
// compute weight multiplicities, enumerate Weyl orbits, and run the
// verification suites.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lsc/explorer.hpp"
#include "lsc/similarity.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadArguments = 2;

struct CommonArgs {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t max_reflection_length = 9;
  std::int64_t max_chain_length = 12;

  lsc::CartanMatrix cartan() const { return {a1, a2}; }
  lsc::OrderConfig order_config() const {
    lsc::OrderConfig cfg{max_reflection_length, max_chain_length};
    cfg.check();
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--a1", args.a1, "Cartan entry a1 (a12 = -a1)")->required();
  cmd->add_option("--a2", args.a2, "Cartan entry a2 (a21 = -a2)")->required();
  cmd->add_option("--max-reflection-length", args.max_reflection_length,
                  "root pool bound for order searches");
  cmd->add_option("--max-chain-length", args.max_chain_length,
                  "chain depth bound for order searches");
}

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_file);
  out << text;
}

int print_report(const lsc::CheckReport& report) {
  for (const auto& line : report.lines) {
    std::cout << (line.pass ? "PASS" : "FAIL") << ' ' << line.name;
    if (!line.detail.empty()) std::cout << " (" << line.detail << ")";
    std::cout << '\n';
  }
  return report.all_pass() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LS path crystals for rank-2 Kac-Moody algebras"};
  app.require_subcommand(1);

  CommonArgs common;

  auto* explore_cmd = app.add_subcommand("explore", "breadth-first crystal graph exploration");
  add_common(explore_cmd, common);
  std::string shape_str, seed_str, format = "json", out_file;
  std::int64_t depth = 0;
  explore_cmd->add_option("--shape", shape_str, "shape weight M1,M2")->required();
  explore_cmd->add_option("--depth", depth, "operator-application radius")->required();
  explore_cmd->add_option("--seed", seed_str, "seed path literal (default: straight path of the shape)");
  explore_cmd->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  explore_cmd->add_option("--out", out_file, "output file (default: stdout)");

  auto* character_cmd =
      app.add_subcommand("character", "weight multiplicities of the explored crystal");
  add_common(character_cmd, common);
  std::string char_shape;
  std::int64_t char_depth = 0;
  character_cmd->add_option("--shape", char_shape, "shape weight M1,M2")->required();
  character_cmd->add_option("--depth", char_depth, "operator-application radius")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "Weyl orbit of a weight");
  add_common(orbit_cmd, common);
  std::string orbit_weight;
  std::int64_t max_length = 0;
  orbit_cmd->add_option("--weight", orbit_weight, "weight M1,M2")->required();
  orbit_cmd->add_option("--max-length", max_length, "canonical word length bound")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  add_common(verify_cmd, common);
  std::string suite;
  std::int64_t verify_depth = 6, word_bound = 6;
  verify_cmd->add_option("--suite", suite, "operators|order|extremal|similarity|all")
      ->required()
      ->check(CLI::IsMember({"operators", "order", "extremal", "similarity", "all"}));
  verify_cmd->add_option("--depth", verify_depth, "exploration depth");
  verify_cmd->add_option("--word-bound", word_bound, "Weyl word length bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArguments;
  }

  try {
    const lsc::CartanMatrix cm = common.cartan();
    const lsc::OrderConfig cfg = common.order_config();

    if (explore_cmd->parsed()) {
      const lsc::Weight shape = lsc::parse_weight(shape_str);
      const lsc::LSPath seed =
          seed_str.empty() ? lsc::LSPath::straight(shape) : lsc::parse_ls_path(shape, seed_str);
      const lsc::CrystalGraph g = lsc::explore(cm, seed, depth, cfg);
      write_output(format == "json" ? lsc::export_json(g) : lsc::export_dot(g), out_file);
      return kExitOk;
    }

    if (character_cmd->parsed()) {
      const lsc::Weight shape = lsc::parse_weight(char_shape);
      const lsc::CrystalGraph g =
          lsc::explore(cm, lsc::LSPath::straight(shape), char_depth, cfg);
      for (const auto& [wt, count] : lsc::weight_multiplicities(g))
        std::cout << lsc::to_string(wt.m1) << ',' << lsc::to_string(wt.m2) << ": " << count
                  << '\n';
      return kExitOk;
    }

    if (orbit_cmd->parsed()) {
      const lsc::Weight mu = lsc::parse_weight(orbit_weight);
      const lsc::Orbit orb = lsc::orbit(cm, mu, max_length);
      for (const auto& [word, wt] : orb.elements)
        std::cout << word.str() << " -> " << lsc::to_string(wt.m1) << ','
                  << lsc::to_string(wt.m2) << '\n';
      for (const auto& [later, first] : orb.collisions)
        std::cout << "# collision: " << later.str() << " = " << first.str() << '\n';
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      lsc::CheckReport report;
      const auto append = [&report](const lsc::CheckReport& r, const std::string& prefix) {
        for (const auto& line : r.lines)
          report.add(prefix + "." + line.name, line.pass, line.detail);
      };
      if (suite == "operators" || suite == "all")
        append(lsc::verify_operators(cm, verify_depth, cfg), "operators");
      if (suite == "order" || suite == "all")
        append(lsc::verify_order(cm, word_bound, cfg), "order");
      if (suite == "extremal" || suite == "all")
        append(lsc::verify_extremal(cm, verify_depth, word_bound, cfg), "extremal");
      if (suite == "similarity" || suite == "all")
        append(lsc::verify_similarity(cm, verify_depth, cfg), "similarity");
      return print_report(report);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitBadArguments;
}
