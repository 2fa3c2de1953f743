#include "lenslab/census.hpp"

#include <algorithm>
#include <stdexcept>

#include "lenslab/casson_walker.hpp"
#include "lenslab/parallel.hpp"

namespace lenslab {

namespace {

bool allowed_class(const LensSpace& y) {
  for (std::int64_t r : {1, 2, 3}) {
    if (y.p() > 1 && gcd(y.p(), r) != 1) continue;
    if (oriented_homeo(y, LensSpace::canonical(y.p(), r))) return true;
  }
  return false;
}

struct FamilyShape {
  std::vector<std::int64_t> terms;  // 0 marks the position of x
  std::int64_t p;
  std::int64_t q;
  Rational delta;
};

FamilyShape family_shape(Table1Family f, std::int64_t x) {
  auto frac = [](std::int64_t n, std::int64_t d) { return Rational(n, d); };
  switch (f) {
    case Table1Family::X:
      return {{0}, x, 1, Rational(0)};
    case Table1Family::X2: {
      const std::int64_t p = 2 * x - 1;
      return {{0, 2}, p, 2, Rational(x) - frac(x, p)};
    }
    case Table1Family::X3: {
      const std::int64_t p = 3 * x - 1;
      return {{0, 3}, p, 3, Rational(2 * x - 1) - frac(x + 1, p)};
    }
    case Table1Family::X4: {
      const std::int64_t p = 4 * x - 1;
      return {{0, 4}, p, 4, Rational(3 * x - 2) - frac(x + 2, p)};
    }
    case Table1Family::X22: {
      const std::int64_t p = 3 * x - 2;
      return {{0, 2, 2}, p, 3, Rational(2 * x) - frac(2 * x, p)};
    }
    case Table1Family::X222: {
      const std::int64_t p = 4 * x - 3;
      return {{0, 2, 2, 2}, p, 4, Rational(3 * x) - frac(3 * x, p)};
    }
    case Table1Family::TwoX2:
      return {{2, 0, 2}, 4 * x - 4, 2 * x - 1, Rational(3 * x)};
  }
  throw std::logic_error("unknown Table1Family");
}

template <class Rec>
void flatten(std::vector<std::vector<Rec>>& chunks, std::vector<Rec>& out) {
  for (auto& c : chunks) {
    std::move(c.begin(), c.end(), std::back_inserter(out));
  }
}

}  // namespace

Rational dbound_threshold(std::int64_t p) { return Rational(3 * (p - 4), 4); }

DBoundResult verify_dbound(std::int64_t p_max, const CensusOptions& options) {
  if (p_max < 2) {
    throw std::invalid_argument("verify_dbound needs p_max >= 2");
  }
  const auto n = static_cast<std::size_t>(p_max - 1);
  std::vector<std::vector<CensusRecord>> per_p(n);
  parallel_for(n, options.jobs, [&](std::size_t idx) {
    const std::int64_t p = static_cast<std::int64_t>(idx) + 2;
    const Rational threshold = dbound_threshold(p);
    for (const auto& y : enumerate_classes(p)) {
      CensusRecord r;
      r.p = p;
      r.q = y.q();
      r.delta = delta(p, y.q());
      r.threshold = threshold;
      r.satisfies = r.delta <= threshold;
      r.allowed = allowed_class(y);
      per_p[idx].push_back(std::move(r));
    }
  });
  DBoundResult result;
  flatten(per_p, result.records);
  for (const auto& r : result.records) {
    if (r.violation()) result.violations.push_back(r);
  }
  return result;
}

DcwResult verify_dcw(std::int64_t p_max, const CensusOptions& options) {
  if (p_max < 1) {
    throw std::invalid_argument("verify_dcw needs p_max >= 1");
  }
  const auto n = static_cast<std::size_t>(p_max);
  std::vector<std::vector<DcwViolation>> per_p(n);
  std::vector<std::size_t> counts(n, 0);
  parallel_for(n, options.jobs, [&](std::size_t idx) {
    const std::int64_t p = static_cast<std::int64_t>(idx) + 1;
    for (std::int64_t q = p == 1 ? 0 : 1; q < std::max<std::int64_t>(p, 1); ++q) {
      if (p > 1 && gcd(p, q) != 1) continue;
      ++counts[idx];
      const LensSpace y = LensSpace::canonical(p, q);
      const Rational d_sum = d_table(y, options.memo).sum();
      const Rational p_lambda = Rational(p) * lambda_rec(p, q);
      if (d_sum != p_lambda) per_p[idx].push_back({p, q, d_sum, p_lambda});
    }
  });
  DcwResult result;
  for (auto c : counts) result.pairs_checked += c;
  flatten(per_p, result.violations);
  return result;
}

const std::vector<Table1Family>& table1_families() {
  static const std::vector<Table1Family> all = {
      Table1Family::X,   Table1Family::X2,   Table1Family::X3,    Table1Family::X4,
      Table1Family::X22, Table1Family::X222, Table1Family::TwoX2,
  };
  return all;
}

std::string to_string(Table1Family f) {
  switch (f) {
    case Table1Family::X: return "[x]";
    case Table1Family::X2: return "[x,2]";
    case Table1Family::X3: return "[x,3]";
    case Table1Family::X4: return "[x,4]";
    case Table1Family::X22: return "[x,2,2]";
    case Table1Family::X222: return "[x,2,2,2]";
    case Table1Family::TwoX2: return "[2,x,2]";
  }
  return {};
}

std::vector<Table1Row> table1(std::int64_t x_min, std::int64_t x_max) {
  if (x_min < 3) {
    throw std::invalid_argument("table1 needs x >= 3");
  }
  std::vector<Table1Row> rows;
  for (auto family : table1_families()) {
    for (std::int64_t x = x_min; x <= x_max; ++x) {
      FamilyShape shape = family_shape(family, x);
      for (auto& t : shape.terms) {
        if (t == 0) t = x;
      }
      Table1Row row;
      row.family = family;
      row.x = x;
      row.cf = CFExpansion(shape.terms);
      std::tie(row.p, row.q) = hj_eval(row.cf);
      row.pq_match = row.p == shape.p && row.q == shape.q;
      const Rational via_cf = Rational(12) * (lambda_cf(row.p, row.q) - lambda_cf(row.p, 1));
      const Rational via_rec = Rational(12) * (lambda_rec(row.p, row.q) - lambda_rec(row.p, 1));
      row.routes_agree = via_cf == via_rec;
      row.delta_oracle = via_cf;
      row.delta_printed = shape.delta;
      row.match = row.delta_oracle == row.delta_printed;
      row.within_threshold = row.delta_oracle <= dbound_threshold(row.p);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<TorusSlopeRecord> torus_census(std::int64_t ab_max, std::int64_t slope_q_max) {
  if (ab_max < 6) {
    throw std::invalid_argument("torus_census needs ab_max >= 6");
  }
  if (slope_q_max < 1) {
    throw std::invalid_argument("torus_census needs slope_q_max >= 1");
  }
  std::vector<TorusSlopeRecord> out;
  for (std::int64_t a = 2; a * (a + 1) <= ab_max; ++a) {
    for (std::int64_t b = a + 1; a * b <= ab_max; ++b) {
      if (gcd(a, b) != 1) continue;
      const std::int64_t genus = (a - 1) * (b - 1) / 2;
      for (std::int64_t q = 1; q <= slope_q_max; ++q) {
        for (std::int64_t sign : {-1, 1}) {
          TorusSlopeRecord r;
          r.a = a;
          r.b = b;
          r.q = q;
          r.p = q * a * b + sign;
          r.genus = genus;
          r.bound_ok = r.p <= (4 * genus + 3) * q;
          r.equality = r.p == (4 * genus + 3) * q;
          out.push_back(r);
        }
      }
    }
  }
  return out;
}

std::vector<SharpnessRecord> sharpness_family(std::int64_t k_max, const CensusOptions& options) {
  if (k_max < 1) {
    throw std::invalid_argument("sharpness_family needs k_max >= 1");
  }
  std::vector<SharpnessRecord> out(static_cast<std::size_t>(k_max));
  parallel_for(out.size(), options.jobs, [&](std::size_t idx) {
    SharpnessRecord& r = out[idx];
    r.k = static_cast<std::int64_t>(idx) + 1;
    r.p = 4 * r.k + 3;
    // +p surgery on T(2, 2k+1) gives L(p, 4)^*; the -p obstruction sees its mirror.
    r.candidate = LensSpace::canonical(r.p, 4);
    r.representative = class_representative(r.candidate);
    ObstructionOptions opts;
    opts.memo = options.memo;
    const FeasibilityReport report = feasible_genera(r.candidate, opts);
    r.minimal_genus = report.minimal_genus;
    r.equality = r.minimal_genus && r.p == 4 * *r.minimal_genus + 3;
    r.ok = r.minimal_genus == r.k && r.equality;
  });
  return out;
}

namespace {

std::vector<SquarePipelineEntry> run_pipeline(std::vector<std::int64_t> ps, std::int64_t q,
                                              SquareVerdict (*filter)(std::int64_t),
                                              const CensusOptions& options) {
  std::vector<SquarePipelineEntry> out(ps.size());
  parallel_for(ps.size(), options.jobs, [&](std::size_t idx) {
    SquarePipelineEntry& e = out[idx];
    e.p = ps[idx];
    e.verdict = filter(e.p);
    if (e.verdict.defers_to_full_test()) {
      ObstructionOptions opts;
      opts.memo = options.memo;
      opts.max_witnesses_per_genus = 1;
      e.feasible = !feasible_genera(LensSpace::canonical(e.p, q), opts).feasible.empty();
    }
  });
  return out;
}

}  // namespace

std::vector<SquarePipelineEntry> square_pipeline_q2(std::int64_t p_max,
                                                    const CensusOptions& options) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 3; p <= p_max; p += 2) ps.push_back(p);
  return run_pipeline(std::move(ps), 2, &square_obstruction_q2, options);
}

std::vector<SquarePipelineEntry> square_pipeline_q3(std::int64_t p_max,
                                                    const CensusOptions& options) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p <= p_max; ++p) {
    if (p % 3 != 0) ps.push_back(p);
  }
  return run_pipeline(std::move(ps), 3, &square_obstruction_q3, options);
}

std::vector<std::int64_t> survivors(const std::vector<SquarePipelineEntry>& entries) {
  std::vector<std::int64_t> out;
  for (const auto& e : entries) {
    if (e.survives()) out.push_back(e.p);
  }
  return out;
}

}  // namespace lenslab
