#include "qhci/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <tuple>

namespace qhci {

Json space_json(const FanoSpace& s) {
  Json j;
  j["dim"] = s.r;
  j["degrees"] = s.degrees.values();
  j["codim"] = s.codim;
  j["fano_index"] = s.fano_index;
  j["degree"] = to_string(s.degree);
  j["euler_char"] = to_string(s.euler_char);
  j["prim_rank"] = to_string(s.prim_rank);
  j["borderline"] = s.borderline;
  return j;
}

Json ring_element_json(const RingElement& e) {
  std::vector<std::tuple<int, int, Rational>> terms;
  for (int i = 0; i <= e.context().dim(); ++i) {
    for (const auto& [p, c] : e.coeff(i).terms()) terms.emplace_back(p, i, c);
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    return std::get<1>(x) > std::get<1>(y);
  });
  Json arr = Json::array();
  for (const auto& [p, i, c] : terms) {
    arr.push_back({{"basis_index", i}, {"q_power", p}, {"value", to_string(c)}});
  }
  return {{"basis", std::string(basis_tag(e.context().basis()))}, {"terms", std::move(arr)}};
}

namespace {

Json rationals(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

std::string key_string(const DescendantKey& key) {
  return std::to_string(key.k) + "," + std::to_string(key.a) + "," + std::to_string(key.i);
}

DescendantKey parse_key(const std::string& text) {
  DescendantKey key;
  int* fields[] = {&key.k, &key.a, &key.i};
  const char* p = text.data();
  const char* end = p + text.size();
  for (int f = 0; f < 3; ++f) {
    auto [next, ec] = std::from_chars(p, end, *fields[f]);
    if (ec != std::errc() || (f < 2 && (next == end || *next != ',')) || (f == 2 && next != end)) {
      throw Error(ErrorCode::CacheMismatch, "malformed cache key \"" + text + "\"");
    }
    p = next + 1;
  }
  return key;
}

}  // namespace

Json tevelev_json(const TevelevBreakdown& bd) {
  Json j;
  j["g"] = bd.query.g;
  j["n"] = bd.query.n;
  j["k"] = bd.k;
  j["basis"] = std::string(basis_tag(bd.basis));
  j["P"] = rationals(bd.P);
  j["b"] = rationals(bd.b);
  j["disc"] = to_string(bd.disc);
  j["value"] = to_string(bd.value_direct);
  j["routes_agree"] = bd.routes_agree();
  Json extra = Json::array();
  for (const auto& t : bd.outside_window) {
    extra.push_back({{"basis_index", t.basis_index}, {"q_power", t.q_power},
                     {"value", to_string(t.value)}});
  }
  j["outside_window"] = std::move(extra);
  return j;
}

Json gw_table_json(GWTable& table, int k_max) {
  const int r = table.space().r;
  Json alphas = Json::array();
  for (int k = 1; k <= k_max; ++k) {
    std::vector<Rational> row;
    for (int s = 0; s <= r; ++s) row.push_back(alpha(table, k, s));
    alphas.push_back({{"k", k}, {"values", rationals(row)}});
  }
  Json entries = Json::array();
  for (const auto& [key, v] : table.memo()) {
    if (key.k > k_max) continue;
    entries.push_back({{"k", key.k}, {"a", key.a}, {"i", key.i},
                       {"j", second_exponent(table.space(), key)}, {"value", to_string(v)}});
  }
  return {{"k_max", k_max}, {"alpha", std::move(alphas)}, {"descendants", std::move(entries)}};
}

Json verify_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", std::string(status_name(c.status))},
                      {"detail", c.detail}});
  }
  return {{"passed", report.passed()}, {"failures", report.failures()},
          {"checks", std::move(checks)}};
}

Json document(const FanoSpace& space, const std::string& kind, Json payload) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["space"] = space_json(space);
  j[kind] = std::move(payload);
  return j;
}

Json error_json(ErrorCode code, const std::string& message) {
  return {{"error", {{"code", std::string(error_code_name(code))}, {"message", message}}}};
}

Json cache_json(const GWTable& table) {
  Json entries = Json::object();
  for (const auto& [key, v] : table.memo()) entries[key_string(key)] = to_string(v);
  Json j;
  j["schema"] = kSchemaVersion;
  j["dim"] = table.space().r;
  j["degrees"] = table.space().degrees.values();
  j["entries"] = std::move(entries);
  return j;
}

std::size_t merge_cache(const Json& cache, GWTable& table) {
  const FanoSpace& s = table.space();
  try {
    if (cache.at("schema").get<int>() != kSchemaVersion) {
      throw Error(ErrorCode::CacheMismatch, "unsupported cache schema");
    }
    const int dim = cache.at("dim").get<int>();
    auto degrees = cache.at("degrees").get<std::vector<int>>();
    std::sort(degrees.begin(), degrees.end());
    if (dim != s.r || degrees != s.degrees.values()) {
      throw Error(ErrorCode::CacheMismatch, "cache header is for a different space");
    }
    std::size_t count = 0;
    for (const auto& [text, value] : cache.at("entries").items()) {
      const DescendantKey key = parse_key(text);
      table.ensure_degree(key.k);
      table.insert_verified(key, parse_rational(value.get<std::string>()));
      ++count;
    }
    return count;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::CacheMismatch, std::string("malformed cache: ") + e.what());
  }
}

void save_cache(const std::filesystem::path& path, const GWTable& table) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << cache_json(table).dump(1) << '\n';
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

std::size_t load_cache(const std::filesystem::path& path, GWTable& table) {
  if (!std::filesystem::exists(path)) return 0;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  Json cache;
  try {
    cache = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::CacheMismatch, std::string("cache is not JSON: ") + e.what());
  }
  return merge_cache(cache, table);
}

}  // namespace qhci
