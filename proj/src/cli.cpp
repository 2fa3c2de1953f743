#include "lenslab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lenslab/cache.hpp"
#include "lenslab/casson_walker.hpp"
#include "lenslab/census.hpp"
#include "lenslab/io.hpp"
#include "lenslab/obstruction.hpp"

namespace lenslab::cli {

namespace {

using io::Json;

enum class Format { Table, Csv, Json };

struct Settings {
  std::string format = "table";
  std::string cache_path;
  unsigned jobs = 1;
  std::int64_t p = 0, q = 0;
  std::int64_t n = 0, k = 0, g = 0;
  std::optional<std::int64_t> g_max;
  std::int64_t p_max = 100;
  std::int64_t x_min = 4, x_max = 40;
  std::int64_t ab_max = 200;
  std::int64_t slope_q_max = 1;
  std::int64_t k_max = 12;
  int square_q = 2;
  bool expect_feasible = false;
  bool all_records = false;
};

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Table;
}

std::string table_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_object() && v.contains("p") && v.contains("q")) {
    return "L(" + v["p"].dump() + "," + v["q"].dump() + ")";
  }
  return v.dump();
}

void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line += "  ";
      line += r[c];
      if (c + 1 < r.size()) line.append(width[c] - r[c].size(), ' ');
    }
    out << line << '\n';
  }
}

/// Writes records in the selected format. Table output is derived from the
/// JSON form so the three formats always carry the same fields.
class Emitter {
 public:
  Emitter(Format format, std::ostream& out) : format_(format), out_(out) {}

  Format format() const { return format_; }

  template <class Rec>
  void records(const std::vector<Rec>& recs, std::string_view csv_header) {
    switch (format_) {
      case Format::Csv:
        out_ << csv_header << '\n';
        for (const auto& r : recs) out_ << io::csv_row(r) << '\n';
        break;
      case Format::Json:
        for (const auto& r : recs) out_ << io::to_json(r).dump() << '\n';
        break;
      case Format::Table: {
        std::vector<Json> js;
        js.reserve(recs.size());
        for (const auto& r : recs) js.push_back(io::to_json(r));
        table(js, csv_header);
        break;
      }
    }
  }

  void table(const std::vector<Json>& rows, std::string_view csv_header) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header;
    std::stringstream hs{std::string(csv_header)};
    for (std::string col; std::getline(hs, col, ',');) header.push_back(col);
    cells.push_back(header);
    for (const auto& j : rows) {
      std::vector<std::string> line;
      for (const auto& [key, value] : j.items()) line.push_back(table_cell(value));
      cells.push_back(std::move(line));
    }
    print_aligned(out_, cells);
  }

 private:
  Format format_;
  std::ostream& out_;
};

class Session {
 public:
  Session(const Settings& s, std::ostream& out, std::ostream& err)
      : settings_(s), out_(out), err_(err), emit_(parse_format(s.format), out) {
    std::string path = s.cache_path;
    if (path.empty()) {
      if (const char* env = std::getenv("LENSLAB_CACHE")) path = env;
    }
    if (!path.empty()) {
      cache_.emplace(path);
      const auto stats = cache_->load_into(memo_);
      err_ << "cache " << path << ": loaded " << stats.loaded << ", discarded " << stats.discarded
           << (stats.header_ok ? "" : " (schema header mismatch)") << '\n';
    }
  }

  void persist() {
    if (cache_) cache_->save(memo_);
  }

  CensusOptions census() {
    CensusOptions o;
    o.jobs = settings_.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                 : settings_.jobs;
    o.memo = &memo_;
    return o;
  }

  int d_command() {
    const auto y = LensSpace::canonical(settings_.p, settings_.q);
    const DTable t = d_table(y, &memo_);
    switch (emit_.format()) {
      case Format::Csv:
        out_ << io::kDTableHeader << '\n';
        for (const auto& row : io::dtable_csv_rows(t)) out_ << row << '\n';
        break;
      case Format::Json:
        for (const auto& row : io::dtable_json_rows(t)) out_ << row.dump() << '\n';
        break;
      case Format::Table:
        emit_.table(io::dtable_json_rows(t), io::kDTableHeader);
        break;
    }
    persist();
    return kOk;
  }

  int lambda_command() {
    const auto y = LensSpace::canonical(settings_.p, settings_.q);
    if (!y.is_sphere() && lambda_rec(y.p(), y.q()) != lambda_cf(y.p(), y.q())) {
      err_ << "internal error: lambda routes disagree for " << y.to_string() << '\n';
      return kFailed;
    }
    emit_.records(std::vector{io::lambda_record(y)}, io::kLambdaHeader);
    return kOk;
  }

  int cf_command() {
    const CFExpansion cf = hj_expand(settings_.p, settings_.q);
    const auto q_inv = mod_inverse(settings_.q, settings_.p);
    Json j{{"p", settings_.p}, {"q", settings_.q}, {"cf", io::to_json(cf)}, {"q_inverse", q_inv}};
    switch (emit_.format()) {
      case Format::Csv: {
        std::string terms;
        for (auto a : cf.terms()) terms += (terms.empty() ? "" : " ") + std::to_string(a);
        out_ << "p,q,cf,q_inverse\n"
             << io::csv_line({std::to_string(settings_.p), std::to_string(settings_.q), terms,
                              std::to_string(q_inv)})
             << '\n';
        break;
      }
      case Format::Json:
        out_ << j.dump() << '\n';
        break;
      case Format::Table:
        out_ << settings_.p << "/" << settings_.q << " = " << cf.to_string() << "  (q' = " << q_inv
             << ")\n";
        break;
    }
    return kOk;
  }

  int obstruct_command() {
    const auto y = LensSpace::canonical(settings_.p, settings_.q);
    ObstructionOptions opts;
    opts.g_max = settings_.g_max;
    opts.memo = &memo_;
    const FeasibilityReport report = feasible_genera(y, opts);
    Json j = io::to_json(report);
    j["verdict"] = theorem1_verdict(report).describe();
    out_ << j.dump() << '\n';
    persist();
    if (settings_.expect_feasible && report.feasible.empty()) return kFailed;
    return kOk;
  }

  int borromean_command() {
    const Rational v = d_borromean(settings_.n, settings_.k, settings_.g);
    Json j{{"n", settings_.n}, {"k", settings_.k}, {"g", settings_.g}, {"d", v.to_string()}};
    switch (emit_.format()) {
      case Format::Csv:
        out_ << "n,k,g,d\n"
             << io::csv_line({std::to_string(settings_.n), std::to_string(settings_.k),
                              std::to_string(settings_.g), v.to_string()})
             << '\n';
        break;
      case Format::Json:
        out_ << j.dump() << '\n';
        break;
      case Format::Table:
        emit_.table({j}, "n,k,g,d");
        break;
    }
    return kOk;
  }

  int verify_dbound_command() {
    const DBoundResult r = verify_dbound(settings_.p_max, census());
    const auto within = std::count_if(r.records.begin(), r.records.end(),
                                      [](const CensusRecord& c) { return c.satisfies; });
    out_ << "verify-dbound: pmax=" << settings_.p_max << " classes=" << r.records.size()
         << " within-bound=" << within << " " << r.violations.size() << " violations\n";
    const auto& listed = settings_.all_records ? r.records : r.violations;
    if (!listed.empty()) emit_.records(listed, io::kCensusHeader);
    return r.violations.empty() ? kOk : kFailed;
  }

  int verify_dcw_command() {
    const DcwResult r = verify_dcw(settings_.p_max, census());
    out_ << "verify-dcw: pmax=" << settings_.p_max << " pairs=" << r.pairs_checked << " "
         << r.violations.size() << " violations\n";
    if (!r.violations.empty()) emit_.records(r.violations, io::kDcwHeader);
    persist();
    return r.violations.empty() ? kOk : kFailed;
  }

  int table1_command() {
    const auto rows = table1(settings_.x_min, settings_.x_max);
    emit_.records(rows, io::kTable1Header);
    std::size_t failures = 0, printed_mismatch = 0, dual = 0;
    for (const auto& r : rows) {
      if (!r.routes_agree || !r.pq_match) ++failures;
      if (r.family == Table1Family::TwoX2) {
        ++dual;
        if (!r.match) ++printed_mismatch;
      } else if (!r.match) {
        ++failures;
      }
    }
    std::ostream& summary = emit_.format() == Format::Table ? out_ : err_;
    summary << "table1: x=" << settings_.x_min << ".." << settings_.x_max << " rows=" << rows.size()
            << " failures=" << failures << "; [2,x,2] printed 3x differs from computed delta in "
            << printed_mismatch << " of " << dual << " rows\n";
    return failures == 0 ? kOk : kFailed;
  }

  int census_torus_command() {
    const auto recs = torus_census(settings_.ab_max, settings_.slope_q_max);
    emit_.records(recs, io::kTorusHeader);
    std::size_t bad = 0;
    for (const auto& r : recs) {
      const bool sharp_family = r.a == 2 && r.q == 1 && r.p == 2 * r.b + 1;
      if (!r.bound_ok || r.equality != sharp_family) ++bad;
    }
    std::ostream& summary = emit_.format() == Format::Table ? out_ : err_;
    summary << "census-torus: ab-max=" << settings_.ab_max << " slopes=" << recs.size() << " "
            << bad << " violations\n";
    return bad == 0 ? kOk : kFailed;
  }

  int sharpness_command() {
    const auto recs = sharpness_family(settings_.k_max, census());
    emit_.records(recs, io::kSharpnessHeader);
    const auto bad = std::count_if(recs.begin(), recs.end(),
                                   [](const SharpnessRecord& r) { return !r.ok; });
    persist();
    return bad == 0 ? kOk : kFailed;
  }

  int squares_command() {
    if (settings_.square_q != 2 && settings_.square_q != 3) {
      throw std::invalid_argument("--q must be 2 or 3");
    }
    const auto entries = settings_.square_q == 2 ? square_pipeline_q2(settings_.p_max, census())
                                                 : square_pipeline_q3(settings_.p_max, census());
    emit_.records(entries, io::kSquareHeader);
    std::ostringstream list;
    for (auto p : survivors(entries)) list << (list.tellp() > 0 ? "," : "") << p;
    std::ostream& summary = emit_.format() == Format::Table ? out_ : err_;
    summary << "squares: q=" << settings_.square_q << " pmax=" << settings_.p_max
            << " survivors={" << list.str() << "}\n";
    persist();
    return kOk;
  }

 private:
  const Settings& settings_;
  std::ostream& out_;
  std::ostream& err_;
  Emitter emit_;
  DMemo memo_;
  std::optional<ResultCache> cache_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact d-invariants, Casson-Walker invariants and lens space surgery obstructions",
               "lenslab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--cache", s.cache_path, "JSON-lines result cache (default $LENSLAB_CACHE)");
  app.add_option("--jobs", s.jobs, "Worker threads for census commands (0 = all cores)");

  auto lens_args = [&s](CLI::App* sub) {
    sub->add_option("p", s.p, "Order of H_1")->required()->check(CLI::PositiveNumber);
    sub->add_option("q", s.q, "Lens space parameter")->required();
  };

  auto* d_cmd = app.add_subcommand("d", "d-invariants d(L(p,q), s_i) for every label i");
  lens_args(d_cmd);
  auto* lambda_cmd = app.add_subcommand("lambda", "Casson-Walker invariant and delta");
  lens_args(lambda_cmd);
  auto* cf_cmd = app.add_subcommand("cf", "Hirzebruch-Jung continued fraction of p/q");
  lens_args(cf_cmd);
  auto* obstruct_cmd = app.add_subcommand("obstruct", "Surgery obstruction report (JSON)");
  lens_args(obstruct_cmd);
  obstruct_cmd->add_option("--gmax", s.g_max, "Largest genus to search")->check(CLI::NonNegativeNumber);
  obstruct_cmd->add_flag("--expect-feasible", s.expect_feasible,
                         "Exit 1 when no genus passes");
  auto* borromean_cmd = app.add_subcommand("borromean", "d-invariant of B_{-n} in slot k");
  borromean_cmd->add_option("n", s.n)->required()->check(CLI::PositiveNumber);
  borromean_cmd->add_option("k", s.k)->required();
  borromean_cmd->add_option("g", s.g)->required()->check(CLI::NonNegativeNumber);

  auto* dbound_cmd = app.add_subcommand("verify-dbound", "Casson-Walker bound census");
  dbound_cmd->add_option("--pmax", s.p_max)->check(CLI::Range(std::int64_t{2}, INT64_MAX));
  dbound_cmd->add_flag("--all", s.all_records, "List every class, not only violations");
  auto* dcw_cmd = app.add_subcommand("verify-dcw", "sum of d-invariants equals p * lambda");
  dcw_cmd->add_option("--pmax", s.p_max)->check(CLI::Range(std::int64_t{1}, INT64_MAX));
  auto* table1_cmd = app.add_subcommand("table1", "delta for the extremal continued fractions");
  table1_cmd->add_option("--xmin", s.x_min)->check(CLI::Range(std::int64_t{3}, INT64_MAX));
  table1_cmd->add_option("--xmax", s.x_max);
  auto* torus_cmd = app.add_subcommand("census-torus", "Lens space slopes of torus knots");
  torus_cmd->add_option("--ab-max", s.ab_max)->check(CLI::Range(std::int64_t{6}, INT64_MAX));
  torus_cmd->add_option("--qmax", s.slope_q_max, "Largest slope denominator")
      ->check(CLI::PositiveNumber);
  auto* sharp_cmd = app.add_subcommand("sharpness", "Obstruction on L(4k+3,4), k = 1..kmax");
  sharp_cmd->add_option("--kmax", s.k_max)->check(CLI::PositiveNumber);
  auto* squares_cmd = app.add_subcommand("squares", "Square exclusions for L(p,2) or L(p,3)");
  squares_cmd->add_option("--pmax", s.p_max)->check(CLI::Range(std::int64_t{2}, INT64_MAX));
  squares_cmd->add_option("--q", s.square_q)->check(CLI::IsMember({2, 3}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kInvalidInput;
  }

  try {
    Session session(s, out, err);
    if (d_cmd->parsed()) return session.d_command();
    if (lambda_cmd->parsed()) return session.lambda_command();
    if (cf_cmd->parsed()) return session.cf_command();
    if (obstruct_cmd->parsed()) return session.obstruct_command();
    if (borromean_cmd->parsed()) return session.borromean_command();
    if (dbound_cmd->parsed()) return session.verify_dbound_command();
    if (dcw_cmd->parsed()) return session.verify_dcw_command();
    if (table1_cmd->parsed()) return session.table1_command();
    if (torus_cmd->parsed()) return session.census_torus_command();
    if (sharp_cmd->parsed()) return session.sharpness_command();
    if (squares_cmd->parsed()) return session.squares_command();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  err << app.help();
  return kInvalidInput;
}

}  // namespace lenslab::cli
