#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "ikeda/siegel_series.hpp"

namespace ikeda {

struct Provenance {
  std::string oracle;  ///< e.g. "char-sum"
  int depth = 0;
  std::string date;    ///< YYYY-MM-DD
};

/// Oracle-witnessed results kept as JSON (siegel.json, schottky.json) in one directory.
class FixtureStore {
 public:
  explicit FixtureStore(std::filesystem::path dir);
  /// $ENGINE_FIXTURES, else ./fixtures.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<SiegelPoly> siegel(long p, const std::string& gram) const;
  void put_siegel(const SiegelPoly& F, const Provenance& prov);

  std::optional<Int> schottky(const std::string& gram) const;
  void put_schottky(const std::string& gram, const Int& value, const Provenance& prov);

  /// Writes both files; creates the directory when needed.
  void save() const;

 private:
  struct SiegelEntry {
    SiegelPoly poly;
    Provenance prov;
  };
  struct SchottkyEntry {
    Int value;
    Provenance prov;
  };
  std::filesystem::path dir_;
  std::map<std::string, SiegelEntry> siegel_;
  std::map<std::string, SchottkyEntry> schottky_;
};

std::string today();

/// F_p(T) checked against the oracle, served from the store unless recheck is set.
/// Fresh oracle results are written back to the store (not saved).
SiegelPoly witnessed_siegel(const HalfIntegralMatrix& T, long p, FixtureStore& store,
                            bool recheck, int maxDepth = 6);

}  // namespace ikeda
