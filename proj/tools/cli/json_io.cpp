#include "json_io.hpp"

#include <cstdio>
#include <cstdlib>

#include "ratpow/breakdown.hpp"

namespace ratpow::cli {

void round_floats(json& doc) {
  if (doc.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", doc.get<double>());
    doc = std::strtod(buf, nullptr);
  } else if (doc.is_structured()) {
    for (auto& child : doc) round_floats(child);
  }
}

std::string dump_line(json doc) {
  round_floats(doc);
  return doc.dump();
}

namespace {

json check_json(const InequalityCheck& c) {
  return {{"id", c.id},     {"lhs", c.lhs},   {"rhs", c.rhs},
          {"margin", c.margin()}, {"pass", c.pass}, {"where", c.where}};
}

json point(const std::array<double, 3>& p) { return json::array({p[0], p[1], p[2]}); }

}  // namespace

json analysis_document(const WordAnalysis& analysis, const BoundReport& report,
                       const OracleCheck& oracle) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = RATPOW_VERSION;
  doc["word"] = analysis.word().text();
  doc["n"] = report.n;
  doc["N"] = report.big_n;

  json per_class = json::object();
  for (const auto& [key, size] : analysis.breakdown.per_class) per_class[key.text()] = size;
  doc["rp"] = {{"total", analysis.breakdown.total}, {"per_class", per_class}};

  json classes = json::array();
  for (const auto& c : analysis.classes) {
    json profile = json::array();
    for (const auto& [len, count] : analysis.breakdown.per_class_length_profile.at(c.class_key)) {
      profile.push_back({{"length", len}, {"count", count}});
    }
    classes.push_back({{"class_key", c.class_key.text()},
                       {"root_len", c.root_len},
                       {"circuits", c.circuits},
                       {"active_end", c.active_end()},
                       {"active_interval", json::array({c.root_len, c.active_end() - 1})},
                       {"qclass_size", c.qclass_size},
                       {"length_profile", profile}});
  }
  doc["classes"] = classes;

  doc["sc"] = {{"per_order", analysis.sc.per_order},
               {"total", analysis.sc.total},
               {"complexity_gap", analysis.sc.complexity_gap}};

  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c));
  json class_bounds = json::array();
  for (const auto& c : report.classes) {
    class_bounds.push_back({{"class_key", c.class_key.text()},
                            {"class_bound", c.class_bound},
                            {"class_bound_tight", c.class_bound_tight},
                            {"longest_member", c.longest_member},
                            {"long_member_slack", c.long_member_slack},
                            {"f_normalized", c.f_normalized}});
  }
  doc["bounds"] = {{"all_pass", report.all_pass()},
                   {"linear_term", "n/2"},
                   {"sum_f_normalized", report.sum_f_normalized},
                   {"sum_f_unnormalized", report.sum_f_unnormalized},
                   {"checks", checks},
                   {"classes", class_bounds}};

  if (oracle.ran) {
    doc["oracle"] = {{"rp", oracle.rp}, {"oracle_agrees", oracle.agrees}};
  }
  return doc;
}

json optimization_document(const OptimizationReport& r) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = RATPOW_VERSION;
  doc["options"] = {{"resolution", r.options.resolution},
                    {"trials", r.options.trials},
                    {"seed", r.options.seed},
                    {"packing_grid", r.options.packing_grid},
                    {"max_parts", r.options.max_parts}};
  doc["packing"] = {{"cells", r.packing.cells},
                    {"samples", r.packing.samples},
                    {"worst_excess", r.packing.worst_excess},
                    {"worst_s", r.packing.worst_s},
                    {"worst_b", r.packing.worst_b},
                    {"violations", r.packing.violations},
                    {"equality_sample", r.packing.equality_sample},
                    {"equality_profile", r.packing.equality_profile}};
  doc["one_eighth"] = {{"points", r.one_eighth.points},
                       {"max_value", r.one_eighth.max_value},
                       {"argmax", point(r.one_eighth.argmax)},
                       {"maximizers", r.one_eighth.maximizers},
                       {"nearest_maximizer", point(r.one_eighth.nearest_maximizer)},
                       {"nearest_distance", r.one_eighth.nearest_distance},
                       {"grid_step", r.one_eighth.grid_step},
                       {"violations", r.one_eighth.violations}};
  doc["phi_steps"] = {{"pairs", r.phi_steps.pairs},
                      {"max_violation", r.phi_steps.max_violation},
                      {"at", json::array({r.phi_steps.at_ri, r.phi_steps.at_rj})}};
  doc["u_table"] = {{"points", r.u_table.points}, {"max_value", r.u_table.max_value}};
  doc["tolerance"] = kBoundTolerance;
  doc["all_pass"] = r.all_pass();
  return doc;
}

json search_document(const SearchResult& r) {
  return {{"schema_version", kSchemaVersion},
          {"n", r.n},
          {"sigma", r.sigma},
          {"mode", to_string(r.mode)},
          {"seed", r.seed},
          {"iterations", r.iterations},
          {"best_rp", r.best_rp},
          {"ratio", r.ratio()},
          {"witness", r.witness.text()}};
}

json construction_document(const ConstructionSpec& spec, const Word& word, bool measure) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["length"] = word.size();
  doc["expected_rp"] = nullptr;
  doc["hypothesis"] = false;
  std::optional<std::size_t> measured;
  if (measure) measured = rp_with_breakdown(word).total;

  if (spec.family == Family::wn) {
    doc["family"] = "wn";
    doc["params"] = {{"n", spec.n}};
    if (spec.n >= 2) {
      const auto e = expected_rp_wn(spec.n);
      doc["expected_rp"] = e.total;
      json classes = json::array();
      for (const auto& c : e.classes) {
        classes.push_back({{"class_key", c.class_key.text()}, {"count", c.count},
                           {"formula", c.formula}});
      }
      doc["expected_classes"] = classes;
      if (measured) doc["matches_expected"] = *measured == e.total;
    }
  } else {
    doc["family"] = "fib_morphic";
    doc["params"] = {{"t", spec.t}, {"d", spec.d}, {"prefix_len", spec.prefix_len}};
    if (const auto h = fib_morphic_hypothesis(spec.t, spec.d, spec.prefix_len)) {
      doc["hypothesis"] = true;
      json periods = json::array();
      for (const auto& p : h->per_period) {
        periods.push_back({{"period", p.period}, {"predicted", p.predicted}, {"formula", p.formula}});
      }
      json detail = {{"label", "hypothesis (draft)"},
                     {"predicted_rp", h->total},
                     {"formula", h->formula},
                     {"per_period", periods}};
      if (measure) {
        const auto audit = audit_fib_morphic(spec.t, spec.d);
        json rows = json::array();
        for (const auto& row : audit.periods) {
          rows.push_back({{"period", row.period}, {"predicted", row.predicted},
                          {"measured", row.measured}, {"confirmed", row.confirmed}});
        }
        detail["audit"] = rows;
        detail["status"] = audit.confirmed ? "confirmed" : "refuted";
      }
      doc["hypothesis_detail"] = detail;
    }
  }
  if (measured) doc["measured_rp"] = *measured;
  return doc;
}

}  // namespace ratpow::cli
