#pragma once

// JSON and CSV forms of lenslab records. Rationals are always written as
// canonical "num/den" strings; key order is fixed so output is byte-stable.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lenslab/casson_walker.hpp"
#include "lenslab/census.hpp"
#include "lenslab/d_invariant.hpp"
#include "lenslab/lens_space.hpp"
#include "lenslab/obstruction.hpp"

namespace lenslab::io {

using Json = nlohmann::ordered_json;

std::string csv_escape(std::string_view cell);
std::string csv_line(const std::vector<std::string>& cells);

Json to_json(const LensSpace& y);
LensSpace lens_from_json(const Json& j);

// d-table: one row per Spin^c label, i ascending.
inline constexpr std::string_view kDTableHeader = "p,q,i,d";
std::vector<std::string> dtable_csv_rows(const DTable& t);
std::vector<Json> dtable_json_rows(const DTable& t);

struct LambdaRecord {
  LensSpace space;
  Rational lambda;
  Rational delta;
};
LambdaRecord lambda_record(const LensSpace& y);
inline constexpr std::string_view kLambdaHeader = "p,q,lambda,delta";
std::string csv_row(const LambdaRecord& r);
Json to_json(const LambdaRecord& r);

Json to_json(const CFExpansion& cf);

Json to_json(const HVector& h);
Json to_json(const FeasibilityReport& r);

inline constexpr std::string_view kCensusHeader = "p,q,delta,threshold,satisfies,allowed";
std::string csv_row(const CensusRecord& r);
Json to_json(const CensusRecord& r);

inline constexpr std::string_view kDcwHeader = "p,q,d_sum,p_lambda";
std::string csv_row(const DcwViolation& v);
Json to_json(const DcwViolation& v);

inline constexpr std::string_view kTable1Header =
    "family,x,cf,p,q,delta_oracle,delta_printed,match,routes_agree,within_threshold";
std::string csv_row(const Table1Row& r);
Json to_json(const Table1Row& r);

inline constexpr std::string_view kTorusHeader = "a,b,p,q,genus,bound_ok,equality";
std::string csv_row(const TorusSlopeRecord& r);
Json to_json(const TorusSlopeRecord& r);

inline constexpr std::string_view kSharpnessHeader =
    "k,p,candidate,representative,minimal_genus,equality,ok";
std::string csv_row(const SharpnessRecord& r);
Json to_json(const SharpnessRecord& r);

inline constexpr std::string_view kSquareHeader = "p,status,first,second,feasible,reason";
std::string csv_row(const SquarePipelineEntry& e);
Json to_json(const SquarePipelineEntry& e);

}  // namespace lenslab::io
