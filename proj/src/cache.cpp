#include "lenslab/cache.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "lenslab/casson_walker.hpp"

namespace lenslab::cli {

namespace {

using Json = nlohmann::ordered_json;

bool header_matches(const std::string& line) {
  try {
    const auto j = Json::parse(line);
    return j.at("schema").get<std::string>() == ResultCache::kSchemaName &&
           j.at("version").get<int>() == ResultCache::kSchemaVersion;
  } catch (const std::exception&) {
    return false;
  }
}

// Parses and verifies one record; throws on any defect.
void load_record(const std::string& line, DMemo& memo) {
  const auto j = Json::parse(line);
  const auto p = j.at("p").get<std::int64_t>();
  const auto q = j.at("q").get<std::int64_t>();
  const LensSpace y = LensSpace::canonical(p, q);
  if (y.q() != q) throw std::invalid_argument("non-canonical q");
  const Rational lambda = Rational::parse(j.at("lambda").get<std::string>());
  const auto& raw = j.at("d");
  if (!raw.is_array() || raw.size() != static_cast<std::size_t>(p)) {
    throw std::invalid_argument("d-table has wrong length");
  }
  std::vector<Rational> values;
  values.reserve(raw.size());
  Rational sum;
  for (const auto& v : raw) {
    values.push_back(Rational::parse(v.get<std::string>()));
    sum += values.back();
  }
  if (lambda != lambda_cf(p, q) || sum != Rational(p) * lambda) {
    throw std::invalid_argument("cached values fail verification");
  }
  memo.insert(p, q, std::move(values));
}

}  // namespace

CacheLoadStats ResultCache::load_into(DMemo& memo) const {
  CacheLoadStats stats;
  std::ifstream in(path_);
  if (!in) return stats;
  std::string line;
  if (!std::getline(in, line) || !header_matches(line)) {
    stats.header_ok = false;
    while (std::getline(in, line)) {
      if (!line.empty()) ++stats.discarded;
    }
    return stats;
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      load_record(line, memo);
      ++stats.loaded;
    } catch (const std::exception&) {
      ++stats.discarded;
    }
  }
  return stats;
}

void ResultCache::save(const DMemo& memo) const {
  const auto tmp = std::filesystem::path(path_.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    out << Json{{"schema", kSchemaName}, {"version", kSchemaVersion}}.dump() << '\n';
    for (const auto& [key, table] : memo.entries()) {
      const auto [p, q] = key;
      Json d = Json::array();
      for (const auto& v : *table) d.push_back(v.to_string());
      out << Json{{"p", p}, {"q", q}, {"lambda", lambda_cf(p, q).to_string()}, {"d", std::move(d)}}
                 .dump()
          << '\n';
    }
    if (!out) {
      throw std::runtime_error("failed writing cache file " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace lenslab::cli
