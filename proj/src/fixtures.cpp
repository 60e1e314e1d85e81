#include "ikeda/fixtures.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "ikeda/error.hpp"

namespace ikeda {

using nlohmann::json;

namespace {

std::string siegel_key(long p, const std::string& gram) { return std::to_string(p) + "|" + gram; }

json prov_json(const Provenance& p) {
  return json{{"oracle", p.oracle}, {"depth", p.depth}, {"date", p.date}};
}

Provenance prov_from(const json& j) {
  return {j.at("oracle").get<std::string>(), j.at("depth").get<int>(),
          j.at("date").get<std::string>()};
}

json read_json(const std::filesystem::path& file) {
  if (!std::filesystem::exists(file)) return json::object();
  std::ifstream in(file);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("corrupt fixture file " + file.string() + ": " + e.what());
  }
}

}  // namespace

std::string today() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[16];
  std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
  return buf;
}

std::filesystem::path FixtureStore::default_dir() {
  if (const char* env = std::getenv("ENGINE_FIXTURES"); env && *env) return env;
  return "fixtures";
}

FixtureStore::FixtureStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  try {
    const json siegel = read_json(dir_ / "siegel.json");
    for (auto it = siegel.begin(); it != siegel.end(); ++it) {
      const json& e = it.value();
      SiegelPoly F;
      F.p = e.at("p").get<long>();
      F.gram = e.at("gram").get<std::string>();
      F.size = e.at("size").get<std::size_t>();
      for (const auto& c : e.at("coeffs")) F.coeffs.emplace_back(c.get<std::string>());
      F.degIntent = e.at("degree").get<long>();
      F.oracleChecked = true;
      F.oracleDepth = e.at("provenance").at("depth").get<int>();
      siegel_[it.key()] = {F, prov_from(e.at("provenance"))};
    }
    const json schottky = read_json(dir_ / "schottky.json");
    for (auto it = schottky.begin(); it != schottky.end(); ++it)
      schottky_[it.key()] = {Int(it.value().at("value").get<std::string>()),
                             prov_from(it.value().at("provenance"))};
  } catch (const json::exception& e) {
    throw ConfigError("malformed fixture entry in " + dir_.string() + ": " + e.what());
  }
}

std::optional<SiegelPoly> FixtureStore::siegel(long p, const std::string& gram) const {
  auto it = siegel_.find(siegel_key(p, gram));
  if (it == siegel_.end()) return std::nullopt;
  return it->second.poly;
}

void FixtureStore::put_siegel(const SiegelPoly& F, const Provenance& prov) {
  siegel_[siegel_key(F.p, F.gram)] = {F, prov};
}

std::optional<Int> FixtureStore::schottky(const std::string& gram) const {
  auto it = schottky_.find(gram);
  if (it == schottky_.end()) return std::nullopt;
  return it->second.value;
}

void FixtureStore::put_schottky(const std::string& gram, const Int& value, const Provenance& prov) {
  schottky_[gram] = {value, prov};
}

void FixtureStore::save() const {
  std::filesystem::create_directories(dir_);
  json s = json::object();
  for (const auto& [key, e] : siegel_) {
    json coeffs = json::array();
    for (const auto& c : e.poly.coeffs) coeffs.push_back(c.get_str());
    s[key] = {{"p", e.poly.p},           {"gram", e.poly.gram},
              {"size", e.poly.size},     {"coeffs", coeffs},
              {"degree", e.poly.degree()}, {"provenance", prov_json(e.prov)}};
  }
  json t = json::object();
  for (const auto& [key, e] : schottky_)
    t[key] = {{"value", e.value.get_str()}, {"provenance", prov_json(e.prov)}};
  std::ofstream(dir_ / "siegel.json") << s.dump(2) << "\n";
  std::ofstream(dir_ / "schottky.json") << t.dump(2) << "\n";
}

SiegelPoly witnessed_siegel(const HalfIntegralMatrix& T, long p, FixtureStore& store, bool recheck,
                            int maxDepth) {
  SiegelPoly F = siegel_poly(T, p);
  if (!recheck) {
    if (auto hit = store.siegel(p, T.to_string())) {
      if (hit->coeffs != F.coeffs)
        throw ConsistencyError("Siegel recursion disagrees with stored oracle fixture for 2T=" +
                               T.to_string() + " p=" + std::to_string(p));
      return *hit;
    }
  }
  SiegelPoly checked = siegel_poly(T, p, SiegelOptions{true, maxDepth, false});
  store.put_siegel(checked, {"char-sum", checked.oracleDepth, today()});
  return checked;
}

}  // namespace ikeda
