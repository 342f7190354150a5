#ifndef SKEWRANK_REPORT_JSON_HPP
#define SKEWRANK_REPORT_JSON_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "skewrank/classify.hpp"
#include "skewrank/exact_linalg.hpp"
#include "skewrank/oriented_graph.hpp"
#include "skewrank/reductions.hpp"
#include "skewrank/sgr.hpp"
#include "skewrank/verify.hpp"

// JSON views of the library's result types, used by the command-line tool.
// Exact integers serialize as decimal strings so no value is ever rounded.

namespace skewrank {

inline const char* to_string(CycleSign s) {
  switch (s) {
    case CycleSign::Positive:
      return "positive";
    case CycleSign::Negative:
      return "negative";
    default:
      return "undefined";
  }
}

inline void to_json(nlohmann::json& j, const CycleData& c) {
  j = {{"vertices", c.vertices},
       {"length", c.length},
       {"sign", to_string(c.sign)}};
}

inline void to_json(nlohmann::json& j, const CharPoly& p) {
  std::vector<std::string> a;
  a.reserve(p.a.size());
  for (const BigInt& c : p.a) a.push_back(c.str());
  j = {{"n", p.n()},
       {"coefficients", a},
       {"rank_from_coefficients", p.rank_from_coefficients()}};
}

inline void to_json(nlohmann::json& j, const ReductionStep& s) {
  j = {{"kind", s.kind == StepKind::Delta ? "delta" : "twin"},
       {"removed", s.removed},
       {"increment", s.increment}};
}

inline void to_json(nlohmann::json& j, const ReductionTrace& t) {
  j = {{"steps", t.steps},
       {"terminal_sgr", write_sgr(t.terminal)},
       {"terminal_to_original", t.terminal_to_original},
       {"accumulated", t.accumulated}};
}

inline void to_json(nlohmann::json& j, const TwinPair& t) {
  j = {{"u", t.u},
       {"v", t.v},
       {"kind", t.kind == TwinKind::Uniform ? "uniform" : "opposite"}};
}

inline void to_json(nlohmann::json& j, const DeltaClassification& c) {
  j = {{"class", c.klass == DeltaClass::U1 ? "U1" : "U2"},
       {"confluent", c.confluent},
       {"trace", c.trace}};
}

inline void to_json(nlohmann::json& j, const EnumFilter& f) {
  const char* connectivity =
      f.connectivity == EnumFilter::Connectivity::Connected ? "connected"
                                                            : "any";
  const char* klass = "any";
  switch (f.klass) {
    case EnumFilter::Klass::Tree:
      klass = "tree";
      break;
    case EnumFilter::Klass::Unicyclic:
      klass = "unicyclic";
      break;
    case EnumFilter::Klass::Bicyclic:
      klass = "bicyclic";
      break;
    case EnumFilter::Klass::HasPendant:
      klass = "has-pendant";
      break;
    default:
      break;
  }
  j = {{"connectivity", connectivity}, {"class", klass},
       {"min_n", f.min_n},             {"max_n", f.max_n},
       {"sample", f.sample},           {"seed", f.seed}};
}

inline void to_json(nlohmann::json& j, const Violation& v) {
  j = {{"graph", v.graph_sgr},
       {"expected", v.expected},
       {"actual", v.actual},
       {"shrunk", v.shrunk_sgr}};
}

inline void to_json(nlohmann::json& j, const VerifyReport& r) {
  j = {{"theorem_id", r.theorem_id},
       {"filter", r.filter},
       {"instances_checked", r.instances_checked},
       {"violations", r.violations},
       {"elapsed_seconds", r.elapsed_seconds},
       {"notes", r.notes},
       {"pass", r.pass()},
       {"documented_discrepancy", r.documented_discrepancy}};
}

inline void to_json(nlohmann::json& j, const CatalogEntry& e) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : e.edges) edges.push_back({u, v});
  j = {{"edges", edges},
       {"orientation_bits", e.orientation_bits},
       {"achieving_count", e.achieving_count},
       {"condition", e.condition}};
}

// ---------------------------------------------------------------------------
// Classification results, uniformly {predicate, value, witness, actual_rank}.
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json classification(const char* predicate, bool value,
                                     nlohmann::json witness, int actual_rank) {
  return {{"predicate", predicate},
          {"value", value},
          {"witness", std::move(witness)},
          {"actual_rank", actual_rank}};
}

}  // namespace detail

inline nlohmann::json rank2_json(const OrientedGraph& g) {
  const Rank2Classification c = rank2_classify(g);
  return detail::classification(
      "rank-2", c.value,
      {{"rule", c.rule},
       {"parts", c.parts},
       {"four_cycles_checked", c.four_cycles_checked}},
      skew_rank(g));
}

inline nlohmann::json rank4_json(const OrientedGraph& g) {
  const Rank4Classification c = rank4_pendant_classify(g);
  return detail::classification("rank-4-with-pendant", c.value,
                                {{"center", c.center},
                                 {"leaves", c.leaves},
                                 {"core_parts", c.core_parts},
                                 {"four_cycles_checked", c.four_cycles_checked},
                                 {"note", c.note}},
                                skew_rank(g));
}

inline nlohmann::json unicyclic_rank_json(const OrientedGraph& g) {
  const UnicyclicRankReport r = unicyclic_rank_predicted(g);
  return detail::classification(
      "unicyclic-rank", r.coefficient == r.actual,
      {{"beta", r.beta},
       {"girth", r.girth},
       {"cycle_sign", to_string(r.cycle_sign)},
       {"beta_minus_cycle", r.beta_minus_cycle},
       {"stated_condition", r.stated_condition},
       {"literal_prediction", r.literal},
       {"coefficient_prediction", r.coefficient},
       {"literal_agrees", r.literal == r.actual},
       {"a_top", r.a_top.str()},
       {"a_next", r.a_next.str()}},
      r.actual);
}

inline nlohmann::json decomposition_json(const OrientedGraph& g) {
  const PendantTreeDecomposition d = pendant_tree_decompose(g);
  nlohmann::json trees = nlohmann::json::array();
  for (const RootedTree& t : d.trees)
    trees.push_back({{"root", t.root},
                     {"vertices", t.to_original},
                     {"saturated", t.saturated}});
  return detail::classification("unicyclic-split", d.identity_holds,
                                {{"cycle", d.cycle},
                                 {"trees", trees},
                                 {"case", d.case_id},
                                 {"split_vertex", d.split_vertex},
                                 {"part1", d.part1},
                                 {"part2", d.part2}},
                                d.lhs);
}

inline nlohmann::json extremal_json(const OrientedGraph& g) {
  const ExtremalClassification c = extremal_min_classify(g);
  return detail::classification("extremal-min-rank", c.value,
                                {{"case", c.case_id},
                                 {"star_root", c.star_root},
                                 {"star_members", c.star_members},
                                 {"remainder_beta", c.remainder_beta},
                                 {"bridge_vertex", c.bridge_vertex},
                                 {"star_center", c.star_center},
                                 {"note", c.note}},
                                skew_rank(g));
}

inline nlohmann::json class_bound_json(const OrientedGraph& g) {
  const CycleData c = unique_cycle(g);
  const DeltaClassification dc = delta_class(g);
  const int r = skew_rank(g);
  nlohmann::json witness = {{"class", dc.klass == DeltaClass::U1 ? "U1" : "U2"},
                            {"confluent", dc.confluent},
                            {"cycle_sign", to_string(c.sign)},
                            {"girth", c.length}};
  bool value = true;
  if (c.length < g.n()) {
    const int bound = u_class_rank_bound(g.n(), c.length, dc.klass, c.sign);
    witness["bound"] = bound;
    value = r <= bound;
  } else {
    witness["bound"] = nullptr;  // stated for graphs with a tree part only
  }
  return detail::classification("class-rank-bound", value, std::move(witness),
                                r);
}

inline nlohmann::json nonsingular_json(const OrientedGraph& g) {
  const NonsingularReport r = nonsingular_unicyclic(g);
  return detail::classification(
      "nonsingular", r.value,
      {{"class", r.klass == DeltaClass::U1 ? "U1" : "U2"},
       {"confluent", r.confluent},
       {"cycle_sign", to_string(r.cycle_sign)},
       {"perfect_matching", r.pm_whole},
       {"perfect_matching_minus_cycle", r.pm_rest},
       {"determinant", determinant_exact(skew_adjacency(g)).str()}},
      skew_rank(g));
}

// ---------------------------------------------------------------------------
// Whole-command reports.
// ---------------------------------------------------------------------------

inline nlohmann::json rank_report_json(const OrientedGraph& g) {
  const auto gth = girth(g);
  nlohmann::json j = {{"n", g.n()},
                      {"m", g.arc_count()},
                      {"rank", skew_rank(g)},
                      {"beta", matching_number(g)}};
  if (gth)
    j["girth"] = *gth;
  else
    j["girth"] = "acyclic";
  return j;
}

inline nlohmann::json charpoly_report_json(const OrientedGraph& g) {
  const CharPoly exact = char_poly_exact(skew_adjacency(g));
  std::vector<std::string> exact_str, comb_str;
  bool match = true;
  for (int i = 0; i <= g.n(); ++i) {
    const BigInt comb = coefficient_comb(g, i);
    exact_str.push_back(exact.a[i].str());
    comb_str.push_back(comb.str());
    if (comb != exact.a[i]) match = false;
  }
  return {{"n", g.n()},
          {"exact", exact_str},
          {"combinatorial", comb_str},
          {"match", match},
          {"rank_from_coefficients", exact.rank_from_coefficients()}};
}

}  // namespace skewrank

#endif  // SKEWRANK_REPORT_JSON_HPP
