#include "hypertrans/report_json.hpp"

namespace hypertrans {

using nlohmann::json;

json to_json(const Hypergraph& g) {
  return {{"k", g.k()}, {"n", g.n()}, {"m", g.m()}, {"edges", g.edges()}};
}

json to_json(const EnumerationResult& result) {
  json classes = json::array();
  json sigmas = json::array();
  for (const auto& cls : result.classes) {
    auto name = identify_family(cls.graph);
    classes.push_back({{"key", cls.key.hex()},
                       {"sigma", cls.sigma},
                       {"name", name ? json(*name) : json(nullptr)},
                       {"graph", to_json(cls.graph)}});
    sigmas.push_back(cls.sigma);
  }
  return {{"k", result.k},
          {"m", result.m},
          {"candidates", result.candidates},
          {"class_count", result.classes.size()},
          {"sigma", sigmas},
          {"argmin", result.argmin()},
          {"argmax", result.argmax()},
          {"classes", classes}};
}

json to_json(const ExtremalReport& report) {
  json keys = json::array();
  for (const auto& key : report.extremal_keys) keys.push_back(key.hex());
  json extremal = json::array();
  for (std::size_t i = 0; i < report.extremal_graphs.size(); ++i) {
    extremal.push_back({{"name", report.extremal_names[i]}, {"graph", to_json(report.extremal_graphs[i])}});
  }
  return {{"k", report.k},
          {"m", report.m},
          {"direction", report.direction == Direction::min ? "min" : "max"},
          {"formula_value", report.formula_value ? json(*report.formula_value) : json(nullptr)},
          {"enumerated_value", report.enumerated_value},
          {"extremal_keys", keys},
          {"unique", report.unique},
          {"pass", report.pass},
          {"predicted_family", report.predicted_family},
          {"predicted_value", report.predicted_value},
          {"class_count", report.class_count},
          {"extremal", extremal}};
}

namespace {

json summaries(const std::vector<ClassSummary>& list) {
  json out = json::array();
  for (const auto& c : list) {
    out.push_back({{"key", c.key.hex()},
                   {"sigma", c.sigma},
                   {"diameter", c.diameter},
                   {"name", c.name ? json(*c.name) : json(nullptr)},
                   {"graph", to_json(c.graph)}});
  }
  return out;
}

}  // namespace

json to_json(const GraphRemarkReport& report) {
  return {{"k", 2},
          {"m", report.m},
          {"bound", report.bound},
          {"min_value", report.min_value},
          {"max_value", report.max_value},
          {"class_count", report.class_count},
          {"minimizers", summaries(report.minimizers)},
          {"maximizers", summaries(report.maximizers)},
          {"bound_attained", report.bound_attained},
          {"minimizers_diameter_le_2", report.minimizers_diameter_le_2},
          {"named_minimizer_agrees", report.named_minimizer_agrees},
          {"named_maximizer_agrees", report.named_maximizer_agrees},
          {"notes", report.notes},
          {"pass", report.pass}};
}

json to_json(const LemmaReport& report) {
  json entries = json::array();
  for (const auto& t : report.entries) {
    entries.push_back({{"index", t.index},
                       {"params", t.params},
                       {"sigma_before", t.sigma_before},
                       {"sigma_after", t.sigma_after},
                       {"delta", t.delta},
                       {"relation", t.relation},
                       {"bound", t.bound},
                       {"extra", t.extra},
                       {"satisfied", t.satisfied},
                       {"instance", to_json(t.instance)},
                       {"transformed", to_json(t.transformed)}});
  }
  return {{"lemma", report.lemma},
          {"trials", report.trials},
          {"seed", report.seed},
          {"passed", report.passed()},
          {"pass", report.pass()},
          {"entries", entries}};
}

}  // namespace hypertrans
