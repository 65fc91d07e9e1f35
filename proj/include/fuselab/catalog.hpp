#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fuselab/errors.hpp"
#include "fuselab/modular_data.hpp"

namespace fuselab {

inline constexpr int kMaxCatalogLevel = 28;
inline constexpr int kMaxCyclicOrder = 32;

struct CatalogEntry {
  std::string id;  // pattern, e.g. "su2:<level>"
  std::string description;
};

inline std::vector<CatalogEntry> catalog_entries() {
  return {
      {"su2:<level>", "su(2) at level 0.." + std::to_string(kMaxCatalogLevel) + ", labels x0..x<level>"},
      {"fibonacci", "Fibonacci anyons, labels 1, tau"},
      {"ising", "Ising anyons, labels 1, sigma, psi"},
      {"zn:<n>", "pointed Z/n theory, n = 1.." + std::to_string(kMaxCyclicOrder)},
  };
}

namespace detail {

inline std::optional<int> parse_small_int(const std::string& s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace detail

/// Builds a catalog entry without validation. Throws ParseError for an
/// unknown or out-of-range id.
inline ModularData build_catalog_entry(const std::string& id) {
  if (id == "fibonacci") return fibonacci_modular_data();
  if (id == "ising") return ising_modular_data();
  const auto colon = id.find(':');
  if (colon != std::string::npos) {
    const std::string head = id.substr(0, colon);
    const auto n = detail::parse_small_int(id.substr(colon + 1));
    if (head == "su2") {
      if (!n || *n > kMaxCatalogLevel) throw ParseError("su2 level must be an integer in 0.." + std::to_string(kMaxCatalogLevel) + ": " + id);
      return su2_modular_data(*n);
    }
    if (head == "zn") {
      if (!n || *n < 1 || *n > kMaxCyclicOrder) throw ParseError("zn order must be an integer in 1.." + std::to_string(kMaxCyclicOrder) + ": " + id);
      return cyclic_modular_data(*n);
    }
  }
  if (id == "su2") throw ParseError("su2 needs a level, e.g. su2:10");
  throw ParseError("unknown catalog id: " + id);
}

/// Validated catalog entry, memoized for the lifetime of the process.
inline const ModularData& catalog(const std::string& id) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<ModularData>> memo;
  std::lock_guard lock(mu);
  if (auto it = memo.find(id); it != memo.end()) return *it->second;
  auto md = std::make_unique<ModularData>(build_catalog_entry(id));
  if (auto v = verify_modular_data(*md); !v)
    throw ValidationError("catalog entry " + id + " fails " + v.check + " at " + format_witness(v.witness), v.witness);
  return *memo.emplace(id, std::move(md)).first->second;
}

}  // namespace fuselab
