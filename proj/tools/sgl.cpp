// sgl — semiabelian group laboratory command line.
//
// Exit codes: 0 ok, 2 parse/input error, 3 capacity exceeded,
// 4 group not semiabelian, 5 internal invariant failure.

#include <CLI11.hpp>
#include <iostream>

#include "sgl/sgl.hpp"

int main(int argc, char** argv) {
  CLI::App app{"semiabelian p-group analyzer"};
  app.require_subcommand(0, 0);

  std::string command, expr_text, ordering = "inclusion", kind = "wreath";
  std::uint64_t max_order = 0, max_verify = 0, seed = 0;
  bool emit_json = false;

  app.add_option("command", command,
                 "analyze | decompose | chain | tower | verify | census")
      ->required();
  app.add_option("expr", expr_text, "group expression, e.g. \"C2 wr C2\"");
  app.add_flag("--json", emit_json, "emit the JSON report");
  app.add_option("--max-order", max_order, "largest group order to construct");
  app.add_option("--max-verify", max_verify,
                 "largest order verified by exhaustive pair checks");
  app.add_option("--ordering", ordering, "subgroup scan order")
      ->check(CLI::IsMember({"inclusion", "order"}));
  app.add_option("--kind", kind, "tower construction for tower/verify")
      ->check(CLI::IsMember({"wreath", "semidirect"}));
  app.add_option("--seed", seed, "seed for sampled verification");

  CLI11_PARSE(app, argc, argv);

  sgl::Config cfg;
  cfg.emit_json = emit_json;
  cfg.tower_kind = kind;
  if (max_order) cfg.lim.structural_bound = max_order;
  if (max_verify) cfg.lim.verify_exhaustive_bound = max_verify;
  if (seed) cfg.lim.seed = seed;
  cfg.lim.ordering = ordering == "order" ? sgl::Limits::Ordering::order
                                         : sgl::Limits::Ordering::inclusion;

  if (command != "census" && expr_text.empty()) {
    std::cerr << "error: command '" << command << "' needs a group expression\n";
    return 2;
  }

  try {
    sgl::AnalysisReport report = sgl::run_command(command, expr_text, cfg);
    if (emit_json)
      std::cout << report.data.dump(2) << "\n";
    else
      std::cout << report.text;
    return 0;
  } catch (const sgl::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const sgl::invalid_order_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const sgl::invalid_action_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const sgl::not_normal_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const sgl::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const sgl::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const sgl::not_semiabelian_error& e) {
    std::cerr << "not semiabelian: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
}
