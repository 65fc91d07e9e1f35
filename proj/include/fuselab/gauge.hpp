#pragma once

#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuselab/cyclotomic.hpp"
#include "fuselab/errors.hpp"
#include "fuselab/modular_data.hpp"
#include "fuselab/nimrep.hpp"

namespace fuselab {

/// Multiplicative cochain mu on a set J of ordered pairs of boundary labels.
struct GaugeProblem {
  std::vector<std::string> nodes;
  std::map<std::pair<int, int>, CycloNumber> mu;

  int size() const noexcept { return static_cast<int>(nodes.size()); }
  bool has(int i, int j) const { return mu.contains({i, j}); }
  const CycloNumber& at(int i, int j) const { return mu.at({i, j}); }

  /// Adds the entries forced by mu_ii = 1 and mu_ji = 1/mu_ij where the
  /// caller left them out. Entries that are present are kept untouched.
  static GaugeProblem completed(std::vector<std::string> nodes, std::map<std::pair<int, int>, CycloNumber> mu) {
    GaugeProblem gp{std::move(nodes), std::move(mu)};
    for (int i = 0; i < gp.size(); ++i) gp.mu.try_emplace({i, i}, CycloNumber(1));
    std::vector<std::pair<std::pair<int, int>, CycloNumber>> extra;
    for (const auto& [p, v] : gp.mu)
      if (!gp.has(p.second, p.first) && !v.is_zero()) extra.push_back({{p.second, p.first}, v.inverse()});
    for (auto& [p, v] : extra) gp.mu.emplace(p, std::move(v));
    return gp;
  }

  friend bool operator==(const GaugeProblem&, const GaugeProblem&) = default;
};

/// Scalars lambda with mu_ij = lambda_i / lambda_j; lambda = 1 on the
/// lowest-index node of every component.
struct GaugeSolution {
  std::vector<CycloNumber> lambda;
  std::vector<std::vector<int>> components;
};

/// Checks the pair set is reflexive, symmetric and closed under composition
/// (throws MissingPair otherwise), then that mu is a cocycle: mu_ij != 0,
/// mu_ii = 1, mu_ij mu_ji = 1 and mu_ij mu_jk = mu_ik.
inline Verdict validate_mu(const GaugeProblem& gp) {
  const int n = gp.size();
  std::vector<std::vector<int>> out(n);
  for (const auto& [p, v] : gp.mu) {
    if (p.first < 0 || p.first >= n || p.second < 0 || p.second >= n)
      throw ValidationError("gauge pair refers to an unknown node", {p.first, p.second});
    out[p.first].push_back(p.second);
  }
  for (int i = 0; i < n; ++i)
    if (!gp.has(i, i)) throw MissingPair("pair set is not reflexive", {i, i});
  for (const auto& [p, v] : gp.mu)
    if (!gp.has(p.second, p.first)) throw MissingPair("pair set is not symmetric", {p.second, p.first});
  for (int i = 0; i < n; ++i)
    for (int j : out[i])
      for (int k : out[j])
        if (!gp.has(i, k)) throw MissingPair("pair set is not closed under composition", {i, j, k});

  for (const auto& [p, v] : gp.mu)
    if (v.is_zero()) return Verdict::fail("nonzero", {p.first, p.second});
  for (int i = 0; i < n; ++i)
    if (gp.at(i, i) != CycloNumber(1)) return Verdict::fail("unit", {i, i}, "mu_ii = 1");
  for (const auto& [p, v] : gp.mu)
    if (v * gp.at(p.second, p.first) != CycloNumber(1)) return Verdict::fail("inverse", {p.first, p.second}, "mu_ij mu_ji = 1");
  for (int i = 0; i < n; ++i)
    for (int j : out[i]) {
      if (j == i) continue;
      for (int k : out[j]) {
        if (k == j || k == i) continue;
        if (gp.at(i, j) * gp.at(j, k) != gp.at(i, k)) return Verdict::fail("cocycle", {i, j, k}, "mu_ij mu_jk = mu_ik");
      }
    }
  return Verdict::pass();
}

/// Every component of a composition-closed symmetric pair set is a clique,
/// so lambda_i = mu_{i,root} for the component's root.
inline GaugeSolution solve_gauge(const GaugeProblem& gp) {
  if (auto v = validate_mu(gp); !v)
    throw ValidationError("gauge data fails " + v.check + " at " + format_witness(v.witness), v.witness);
  const int n = gp.size();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  for (const auto& [p, v] : gp.mu) root[p.first] = std::min(root[p.first], p.second);

  GaugeSolution sol;
  sol.lambda.resize(n);
  std::map<int, std::size_t> comp_index;
  for (int i = 0; i < n; ++i) {
    sol.lambda[i] = gp.at(i, root[i]);
    auto [it, fresh] = comp_index.try_emplace(root[i], sol.components.size());
    if (fresh) sol.components.emplace_back();
    sol.components[it->second].push_back(i);
  }
  for (const auto& [p, v] : gp.mu)
    if (v * sol.lambda[p.second] != sol.lambda[p.first]) throw Error("internal: gauge solution violates mu", {p.first, p.second});
  return sol;
}

/// Encircling module in the boundary basis: E(a)_{ji} = (lambda_i / lambda_j) N(a)_{ji},
/// i.e. E(a) = Lambda^{-1} N(a) Lambda.
inline std::vector<CycloMatrix> encircling_matrices(const NimRep& nr, std::span<const CycloNumber> lambda) {
  const std::size_t n = nr.size();
  if (lambda.size() != n) throw ShapeMismatch("gauge vector length differs from boundary rank");
  std::vector<CycloNumber> inv;
  inv.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda[i].is_zero()) throw DegenerateScalar("gauge scalar vanishes", {int(i)});
    inv.push_back(lambda[i].inverse());
  }
  std::vector<CycloMatrix> out;
  out.reserve(nr.mats.size());
  for (const auto& N : nr.mats) {
    CycloMatrix E(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (N(j, i) != 0) E(j, i) = lambda[i] * inv[j] * CycloNumber(N(j, i));
    out.push_back(std::move(E));
  }
  return out;
}

struct PhiReport {
  bool intertwiner = false;           // Lambda E(a) = N(a) Lambda for all a
  bool lambda_is_d_eigenvector = false;  // N(a) lambda = d(a) lambda for all a
  bool ones_is_d_eigenvector = false;    // E(a) 1 = d(a) 1 for all a
  Verdict verdict;
};

inline PhiReport verify_phi_isomorphism(const NimRep& nr, std::span<const CycloNumber> lambda, const ModularData& md) {
  const int n = nr.size();
  const auto E = encircling_matrices(nr, lambda);
  PhiReport rep;
  std::vector<int> bad_intertwiner, bad_ones;

  rep.intertwiner = true;
  for (std::size_t a = 0; a < E.size() && rep.intertwiner; ++a)
    for (int j = 0; j < n && rep.intertwiner; ++j)
      for (int i = 0; i < n; ++i)
        if (lambda[j] * E[a](j, i) != CycloNumber(nr.mats[a](j, i)) * lambda[i]) {
          rep.intertwiner = false;
          bad_intertwiner = {int(a), j, i};
          break;
        }

  rep.lambda_is_d_eigenvector = true;
  for (std::size_t a = 0; a < E.size() && rep.lambda_is_d_eigenvector; ++a)
    for (int j = 0; j < n; ++j) {
      CycloNumber s;
      for (int i = 0; i < n; ++i)
        if (nr.mats[a](j, i) != 0) s += CycloNumber(nr.mats[a](j, i)) * lambda[i];
      if (s != md.d()[a] * lambda[j]) {
        rep.lambda_is_d_eigenvector = false;
        break;
      }
    }

  rep.ones_is_d_eigenvector = true;
  for (std::size_t a = 0; a < E.size() && rep.ones_is_d_eigenvector; ++a)
    for (int j = 0; j < n; ++j) {
      CycloNumber s;
      for (int i = 0; i < n; ++i) s += E[a](j, i);
      if (s != md.d()[a]) {
        rep.ones_is_d_eigenvector = false;
        bad_ones = {int(a), j};
        break;
      }
    }

  if (!rep.intertwiner) rep.verdict = Verdict::fail("intertwiner", bad_intertwiner, "Lambda E(a) = N(a) Lambda");
  else if (!rep.ones_is_d_eigenvector)
    rep.verdict = Verdict::fail("d-eigenvector of E", bad_ones, "E(a) 1 = d(a) 1");
  else if (rep.lambda_is_d_eigenvector != rep.ones_is_d_eigenvector)
    rep.verdict = Verdict::fail("eigenvector transport", {}, "lambda is a d-eigenvector of N iff 1 is one of E");
  return rep;
}

/// Character of E: tr E(a).
inline std::vector<CycloNumber> encircling_traces(std::span<const CycloMatrix> E) {
  std::vector<CycloNumber> tr;
  for (const auto& m : E) {
    CycloNumber s;
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
    tr.push_back(std::move(s));
  }
  return tr;
}

}  // namespace fuselab
