#include "lenslab/io.hpp"

#include <cstdlib>

namespace lenslab::io {

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string cf_cell(const CFExpansion& cf) {
  std::string s;
  for (auto a : cf.terms()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(a);
  }
  return s;
}

}  // namespace

std::string csv_escape(std::string_view cell) {
  if (cell.find_first_of(",\"\n") == std::string_view::npos) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(cells[i]);
  }
  return out;
}

Json to_json(const LensSpace& y) { return Json{{"p", y.p()}, {"q", y.q()}}; }

LensSpace lens_from_json(const Json& j) {
  return LensSpace::canonical(j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>());
}

std::vector<std::string> dtable_csv_rows(const DTable& t) {
  std::vector<std::string> rows;
  rows.reserve(t.size());
  const auto p = std::to_string(t.space().p()), q = std::to_string(t.space().q());
  for (std::size_t i = 0; i < t.size(); ++i) {
    rows.push_back(csv_line({p, q, std::to_string(i), t.values()[i].to_string()}));
  }
  return rows;
}

std::vector<Json> dtable_json_rows(const DTable& t) {
  std::vector<Json> rows;
  rows.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    rows.push_back(Json{{"p", t.space().p()},
                        {"q", t.space().q()},
                        {"i", i},
                        {"d", t.values()[i].to_string()}});
  }
  return rows;
}

LambdaRecord lambda_record(const LensSpace& y) {
  if (y.is_sphere()) return {y, Rational(0), Rational(0)};
  return {y, lambda_cf(y.p(), y.q()), delta(y.p(), y.q())};
}

std::string csv_row(const LambdaRecord& r) {
  return csv_line({std::to_string(r.space.p()), std::to_string(r.space.q()), r.lambda.to_string(),
                   r.delta.to_string()});
}

Json to_json(const LambdaRecord& r) {
  return Json{{"p", r.space.p()},
              {"q", r.space.q()},
              {"lambda", r.lambda.to_string()},
              {"delta", r.delta.to_string()}};
}

Json to_json(const CFExpansion& cf) { return Json(cf.terms()); }

Json to_json(const HVector& h) { return Json{{"g", h.g}, {"h", h.h}}; }

Json to_json(const FeasibilityReport& r) {
  Json feasible = Json::array();
  for (const auto& w : r.feasible) feasible.push_back(to_json(w));
  Json j;
  j["lens"] = to_json(r.candidate);
  j["feasible"] = std::move(feasible);
  j["minimal_genus"] = r.minimal_genus ? Json(*r.minimal_genus) : Json(nullptr);
  j["theorem1_ok"] = r.theorem1_ok ? Json(*r.theorem1_ok) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

std::string csv_row(const CensusRecord& r) {
  return csv_line({std::to_string(r.p), std::to_string(r.q), r.delta.to_string(),
                   r.threshold.to_string(), bool_str(r.satisfies), bool_str(r.allowed)});
}

Json to_json(const CensusRecord& r) {
  return Json{{"p", r.p},
              {"q", r.q},
              {"delta", r.delta.to_string()},
              {"threshold", r.threshold.to_string()},
              {"satisfies", r.satisfies},
              {"allowed", r.allowed}};
}

std::string csv_row(const DcwViolation& v) {
  return csv_line({std::to_string(v.p), std::to_string(v.q), v.d_sum.to_string(),
                   v.p_lambda.to_string()});
}

Json to_json(const DcwViolation& v) {
  return Json{{"p", v.p},
              {"q", v.q},
              {"d_sum", v.d_sum.to_string()},
              {"p_lambda", v.p_lambda.to_string()}};
}

std::string csv_row(const Table1Row& r) {
  return csv_line({to_string(r.family), std::to_string(r.x), cf_cell(r.cf), std::to_string(r.p),
                   std::to_string(r.q), r.delta_oracle.to_string(), r.delta_printed.to_string(),
                   bool_str(r.match), bool_str(r.routes_agree), bool_str(r.within_threshold)});
}

Json to_json(const Table1Row& r) {
  return Json{{"family", to_string(r.family)},
              {"x", r.x},
              {"cf", to_json(r.cf)},
              {"p", r.p},
              {"q", r.q},
              {"delta_oracle", r.delta_oracle.to_string()},
              {"delta_printed", r.delta_printed.to_string()},
              {"match", r.match},
              {"routes_agree", r.routes_agree},
              {"within_threshold", r.within_threshold}};
}

std::string csv_row(const TorusSlopeRecord& r) {
  return csv_line({std::to_string(r.a), std::to_string(r.b), std::to_string(r.p),
                   std::to_string(r.q), std::to_string(r.genus), bool_str(r.bound_ok),
                   bool_str(r.equality)});
}

Json to_json(const TorusSlopeRecord& r) {
  return Json{{"a", r.a},         {"b", r.b},           {"p", r.p},
              {"q", r.q},         {"genus", r.genus},   {"bound_ok", r.bound_ok},
              {"equality", r.equality}};
}

std::string csv_row(const SharpnessRecord& r) {
  return csv_line({std::to_string(r.k), std::to_string(r.p), r.candidate.to_string(),
                   r.representative.to_string(),
                   r.minimal_genus ? std::to_string(*r.minimal_genus) : "", bool_str(r.equality),
                   bool_str(r.ok)});
}

Json to_json(const SharpnessRecord& r) {
  return Json{{"k", r.k},
              {"p", r.p},
              {"candidate", to_json(r.candidate)},
              {"representative", to_json(r.representative)},
              {"minimal_genus", r.minimal_genus ? Json(*r.minimal_genus) : Json(nullptr)},
              {"equality", r.equality},
              {"ok", r.ok}};
}

std::string csv_row(const SquarePipelineEntry& e) {
  const auto& v = e.verdict;
  const bool has_values = v.status != SquareStatus::Unprinted;
  return csv_line({std::to_string(e.p), to_string(v.status),
                   has_values ? v.first.get_str() : "", has_values ? v.second.get_str() : "",
                   e.feasible ? bool_str(*e.feasible) : "", v.reason});
}

Json to_json(const SquarePipelineEntry& e) {
  const auto& v = e.verdict;
  const bool has_values = v.status != SquareStatus::Unprinted;
  return Json{{"p", e.p},
              {"status", to_string(v.status)},
              {"first", has_values ? Json(v.first.get_str()) : Json(nullptr)},
              {"second", has_values ? Json(v.second.get_str()) : Json(nullptr)},
              {"feasible", e.feasible ? Json(*e.feasible) : Json(nullptr)},
              {"reason", v.reason}};
}

}  // namespace lenslab::io
