#pragma once

#include <json.hpp>
#include <sstream>

#include "sgl/engine.hpp"
#include "sgl/epi.hpp"
#include "sgl/expr.hpp"
#include "sgl/oracle.hpp"

namespace sgl {

using json = nlohmann::ordered_json;

struct Config {
  Limits lim;
  bool emit_json = false;
  std::string tower_kind = "wreath";  // tower --kind=wreath|semidirect
};

struct AnalysisReport {
  json data;
  std::string text;
};

namespace detail {

inline json group_info(const Group& g, const Limits& lim) {
  json j;
  j["order"] = g.order();
  if (auto p = g.prime()) {
    j["prime"] = *p;
    j["rank"] = rank(g, lim);
    j["frattini_order"] = frattini(g, lim).order();
  } else {
    j["prime"] = nullptr;
    j["rank"] = nullptr;
    j["frattini_order"] = nullptr;
  }
  return j;
}

inline json chain_json(Engine& eng, const DecompositionChain& chain) {
  json arr = json::array();
  for (const auto& [a, h] : chain.steps) {
    Decomposition d{eng.group(), a, h, true, true};
    json step;
    step["a_order"] = a.order();
    step["h_order"] = h.order();
    step["cap_condition"] = eng.verify_cap_condition(d);
    arr.push_back(std::move(step));
  }
  return arr;
}

inline json tower_json(const TowerReport& t) {
  json j;
  json layers = json::array();
  for (const Group& a : t.abelian_layers) layers.push_back(abelian_type_name(a));
  j["layers"] = std::move(layers);
  j["tower_order"] = t.tower.order();
  j["rank_sum"] = t.rank_sum;
  j["rank_preserving"] = t.rank_preserving;
  j["verify_policy"] = policy_name(t.epi.policy);
  return j;
}

inline std::string render_text(const json& j) {
  std::ostringstream out;
  out << "input: " << j["input"].get<std::string>() << "\n";
  const json& g = j["group"];
  out << "order: " << g["order"] << "\n";
  if (!g["prime"].is_null()) {
    out << "prime: " << g["prime"] << "\n";
    out << "rank: " << g["rank"] << "\n";
    out << "frattini order: " << g["frattini_order"] << "\n";
  }
  out << "semiabelian: " << (j["semiabelian"].get<bool>() ? "yes" : "no")
      << "\n";
  if (!j["chain"].is_null()) {
    out << "chain:\n";
    for (const auto& s : j["chain"])
      out << "  |A| = " << s["a_order"] << ", |H| = " << s["h_order"]
          << ", cap condition " << (s["cap_condition"].get<bool>() ? "ok" : "VIOLATED")
          << "\n";
  }
  if (!j["tower"].is_null()) {
    const json& t = j["tower"];
    out << "tower: order " << t["tower_order"] << ", layers";
    for (const auto& l : t["layers"]) out << " " << l.get<std::string>();
    out << "\n";
    out << "rank sum: " << t["rank_sum"] << ", rank preserving: "
        << (t["rank_preserving"].get<bool>() ? "yes" : "no") << "\n";
    out << "verification: " << t["verify_policy"].get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace detail

inline AnalysisReport run_census(const Config& cfg) {
  json rows = json::array();
  std::ostringstream text;
  text << "group                             order    d  semiabelian  chain\n";
  for (const std::string& entry : catalog_entries()) {
    Group g = eval_expr_text(entry, cfg.lim);
    Engine eng(g, cfg.lim);
    bool sa = eng.semiabelian();
    std::uint64_t len = 0;
    if (sa) len = eng.decomposition_chain().steps.size();
    json row;
    row["group"] = entry;
    row["order"] = g.order();
    row["d"] = rank(g, cfg.lim);
    row["semiabelian"] = sa;
    row["chain_length"] = len;
    rows.push_back(std::move(row));
    text << entry << std::string(entry.size() < 32 ? 32 - entry.size() : 1, ' ')
         << g.order() << (g.order() < 10 ? "        " : g.order() < 100 ? "       " : "      ")
         << rank(g, cfg.lim) << "  " << (sa ? "yes        " : "no         ")
         << "  " << len << "\n";
  }
  json out;
  out["schema"] = 1;
  out["census"] = std::move(rows);
  return {std::move(out), text.str()};
}

inline AnalysisReport run_command(const std::string& cmd,
                                  const std::string& expr_text,
                                  const Config& cfg) {
  if (cmd == "census") return run_census(cfg);

  Group g = eval_expr_text(expr_text, cfg.lim);
  Engine eng(g, cfg.lim);

  json j;
  j["schema"] = 1;
  j["input"] = expr_text;
  j["group"] = detail::group_info(g, cfg.lim);
  const bool sa = eng.semiabelian();
  j["semiabelian"] = sa;
  j["chain"] = nullptr;
  j["tower"] = nullptr;

  auto require_semiabelian = [&] {
    if (!sa) throw not_semiabelian_error("group is not semiabelian");
  };

  if (cmd == "analyze") {
    // group facts and the semiabelian verdict only
  } else if (cmd == "decompose") {
    require_semiabelian();
    if (g.order() > 1) {
      Decomposition d = eng.minimal_decomposition();
      json step;
      step["a_order"] = d.a.order();
      step["h_order"] = d.h.order();
      step["cap_condition"] = eng.verify_cap_condition(d);
      j["chain"] = json::array({std::move(step)});
    } else {
      j["chain"] = json::array();
    }
  } else if (cmd == "chain") {
    require_semiabelian();
    j["chain"] = detail::chain_json(eng, eng.decomposition_chain());
  } else if (cmd == "tower" || cmd == "verify") {
    require_semiabelian();
    TowerReport t = cfg.tower_kind == "semidirect"
                        ? semidirect_tower(g, cfg.lim)
                        : wreath_tower(g, cfg.lim);
    if (cmd == "verify" &&
        !(t.epi.verified && t.epi.surjective && t.rank_preserving))
      throw precondition_error("tower epimorphism failed verification");
    j["tower"] = detail::tower_json(t);
  } else {
    throw domain_error("unknown command '" + cmd + "'");
  }

  return {j, detail::render_text(j)};
}

// Cayley-table serialization for persisting small groups.
inline json cayley_json(const Group& g, const Limits& lim = {}) {
  if (g.order() > lim.table_bound)
    throw capacity_error("group too large to serialize", g.order());
  json j;
  j["order"] = g.order();
  json labels = json::array();
  for (ElementId x = 0; x < g.order(); ++x) labels.push_back(g.label(x));
  j["labels"] = std::move(labels);
  json table = json::array();
  for (ElementId x = 0; x < g.order(); ++x) {
    json row = json::array();
    for (ElementId y = 0; y < g.order(); ++y) row.push_back(g.mul(x, y));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

inline Group cayley_from_json(const json& j) {
  const std::uint64_t n = j.at("order").get<std::uint64_t>();
  std::vector<std::uint32_t> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y)
      table[x * n + y] = j.at("table").at(x).at(y).get<std::uint32_t>();
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  auto impl = std::make_shared<detail::CayleyGroup>(n, std::move(table),
                                                    std::move(labels));
  detail::tag_prime(impl.get());
  return Group(impl);
}

}  // namespace sgl
