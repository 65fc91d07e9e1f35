#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fuselab/fusion_ring.hpp"
#include "fuselab/matrix.hpp"
#include "fuselab/modular_data.hpp"

namespace fuselab {

/// Finite graph given by a symmetric non-negative adjacency matrix.
struct BoundaryGraph {
  std::vector<std::string> vertices;
  IntMatrix adjacency;
  std::string family = "custom";  // A, D, E, custom, or a "+"-joined union
  int family_rank = 0;

  int size() const noexcept { return static_cast<int>(vertices.size()); }
  friend bool operator==(const BoundaryGraph&, const BoundaryGraph&) = default;
};

inline Verdict validate_graph(const BoundaryGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  if (g.adjacency.rows() != n || g.adjacency.cols() != n) return Verdict::fail("shape", {}, "adjacency must be |vertices| square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g.adjacency(i, j) < 0) return Verdict::fail("non-negative adjacency", {int(i), int(j)});
      if (g.adjacency(i, j) != g.adjacency(j, i)) return Verdict::fail("symmetric adjacency", {int(i), int(j)});
    }
  return Verdict::pass();
}

/// Dynkin graphs of type A_n, D_n, E_6, E_7, E_8, vertices numbered as in
/// Bourbaki: A and D along the chain (D_n forks at n-2 into n-1 and n),
/// E_n with the chain 1-3-4-...-n and vertex 2 attached to 4.
inline BoundaryGraph ade_graph(char family, int n) {
  std::vector<std::pair<int, int>> edges;  // 1-based
  switch (family) {
    case 'A':
      if (n < 1) throw Error("A_n needs n >= 1");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      if (n < 4) throw Error("D_n needs n >= 4");
      for (int i = 1; i < n - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n - 1);
      edges.emplace_back(n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw Error("E_n needs n in {6, 7, 8}");
      edges.emplace_back(1, 3);
      edges.emplace_back(2, 4);
      for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    default:
      throw Error(std::string("unknown Dynkin family ") + family);
  }
  BoundaryGraph g;
  g.family = std::string(1, family);
  g.family_rank = n;
  for (int i = 1; i <= n; ++i) g.vertices.push_back(std::to_string(i));
  g.adjacency = IntMatrix(n, n, 0);
  for (auto [a, b] : edges) g.adjacency(a - 1, b - 1) = g.adjacency(b - 1, a - 1) = 1;
  return g;
}

/// Coxeter number of an ADE graph (A_n: n+1, D_n: 2n-2, E_6/7/8: 12/18/30).
inline int coxeter_number(char family, int n) {
  switch (family) {
    case 'A': return n + 1;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    default: throw Error("unknown Dynkin family");
  }
}

inline BoundaryGraph disjoint_union(const BoundaryGraph& a, const BoundaryGraph& b) {
  BoundaryGraph g;
  const int na = a.size(), nb = b.size();
  g.family = "union";
  for (const auto& v : a.vertices) g.vertices.push_back("a" + v);
  for (const auto& v : b.vertices) g.vertices.push_back("b" + v);
  g.adjacency = IntMatrix(na + nb, na + nb, 0);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) g.adjacency(i, j) = a.adjacency(i, j);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) g.adjacency(na + i, na + j) = b.adjacency(i, j);
  return g;
}

/// Non-negative integer matrix representation of a fusion ring.
/// mats[a](j, i) is the multiplicity of j in a acting on i.
struct NimRep {
  FusionRing ring;
  std::vector<std::string> boundary_labels;
  std::vector<IntMatrix> mats;

  int size() const noexcept { return static_cast<int>(boundary_labels.size()); }
};

/// Checks non-negativity, N(0) = 1, N(a*) = N(a)^T and
/// N(a) N(b) = sum_c N_{ab}^c N(c).
inline Verdict verify_nimrep(const FusionRing& R, std::span<const IntMatrix> mats) {
  const int r = R.rank();
  if (static_cast<int>(mats.size()) != r) throw ShapeMismatch("need one matrix per fusion ring label");
  const std::size_t n = mats.empty() ? 0 : mats[0].rows();
  for (int a = 0; a < r; ++a)
    if (mats[a].rows() != n || mats[a].cols() != n) throw ShapeMismatch("NIM-rep matrices must be square of equal size", {a});
  for (int a = 0; a < r; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mats[a](i, j) < 0) return Verdict::fail("non-negativity", {a, int(i), int(j)});
  if (!(mats[0] == IntMatrix::identity(n))) return Verdict::fail("unit acts as identity", {0});
  for (int a = 0; a < r; ++a)
    if (!(mats[R.dual(a)] == mats[a].transpose())) return Verdict::fail("dual acts by transpose", {a});
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      const IntMatrix lhs = checked_product(mats[a], mats[b]);
      IntMatrix rhs(n, n, 0);
      for (int c = 0; c < r; ++c) {
        const int k = R.N(a, b, c);
        if (k == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) rhs(i, j) += k * mats[c](i, j);
      }
      if (!(lhs == rhs)) return Verdict::fail("module homomorphism", {a, b}, "N(a)N(b) != sum_c N_ab^c N(c)");
    }
  return Verdict::pass();
}

/// Chebyshev recurrence N(x_0) = 1, N(x_1) = A, N(x_{i+1}) = A N(x_i) - N(x_{i-1}).
/// The result is not verified and may contain negative entries.
inline std::vector<IntMatrix> su2_recurrence(const IntMatrix& adjacency, int level) {
  const std::size_t n = adjacency.rows();
  std::vector<IntMatrix> mats{IntMatrix::identity(n)};
  if (level >= 1) mats.push_back(adjacency);
  for (int i = 1; i < level; ++i) mats.push_back(checked_product(adjacency, mats[i]) - mats[i - 1]);
  return mats;
}

/// NIM-rep of su(2)_level attached to a graph; throws NotANimRep if the
/// recurrence does not produce a non-negative module.
inline NimRep su2_nimrep_from_graph(const BoundaryGraph& g, int level) {
  if (level < 0) throw Error("su(2) level must be non-negative");
  if (auto v = validate_graph(g); !v) throw ValidationError("invalid graph: " + v.check, v.witness);
  NimRep nr{su2_fusion_ring(level), g.vertices, su2_recurrence(g.adjacency, level)};
  if (auto v = verify_nimrep(nr.ring, nr.mats); !v)
    throw NotANimRep("graph does not define a NIM-rep at level " + std::to_string(level) + ": " + v.check + " fails at " +
                         format_witness(v.witness),
                     v.witness);
  return nr;
}

/// The regular module: F acting on itself.
inline NimRep regular_nimrep(const FusionRing& R) { return NimRep{R, R.labels(), regular_matrices(R)}; }

/// Block-diagonal sum of two NIM-reps over the same ring.
inline NimRep direct_sum(const NimRep& a, const NimRep& b) {
  if (!(a.ring == b.ring)) throw ShapeMismatch("direct sum needs NIM-reps over the same ring");
  NimRep s{a.ring, {}, {}};
  for (const auto& l : a.boundary_labels) s.boundary_labels.push_back("a" + l);
  for (const auto& l : b.boundary_labels) s.boundary_labels.push_back("b" + l);
  const std::size_t na = a.size(), nb = b.size();
  for (std::size_t k = 0; k < a.mats.size(); ++k) {
    IntMatrix m(na + nb, na + nb, 0);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) m(i, j) = a.mats[k](i, j);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) m(na + i, na + j) = b.mats[k](i, j);
    s.mats.push_back(std::move(m));
  }
  return s;
}

/// chi[a] = tr N(a).
inline std::vector<std::int64_t> character(const NimRep& nr) {
  std::vector<std::int64_t> chi;
  chi.reserve(nr.mats.size());
  for (const auto& m : nr.mats) chi.push_back(trace(m));
  return chi;
}

/// Multiplicity of each lambda_I in a module with the given character
/// (traces), m[I] = sum_S e_{lambda_I}[S] tr(S). Throws if not a
/// non-negative integer.
inline std::vector<std::int64_t> multiplicity_profile_from_traces(std::span<const CycloNumber> traces, const ModularData& md) {
  const int r = md.rank();
  if (static_cast<int>(traces.size()) != r) throw ShapeMismatch("trace vector length differs from rank");
  const auto& idem = md.spectral_idempotents();
  std::vector<std::int64_t> m(r);
  for (int I = 0; I < r; ++I) {
    CycloNumber s;
    for (int S = 0; S < r; ++S)
      if (!traces[S].is_zero()) s += idem[I][S] * traces[S];
    const auto z = s.to_integer();
    if (!z || *z < 0 || !z->fits_slong_p())
      throw NonIntegralMultiplicity("projector trace is not a non-negative integer: " + s.to_string(), {I});
    m[I] = z->get_si();
  }
  return m;
}

inline std::vector<std::int64_t> multiplicity_profile(const NimRep& nr, const ModularData& md) {
  if (!(nr.ring == md.ring())) throw ShapeMismatch("NIM-rep and modular data use different fusion rings");
  std::vector<CycloNumber> tr;
  for (auto c : character(nr)) tr.emplace_back(c);
  return multiplicity_profile_from_traces(tr, md);
}

/// Projector onto the lambda_I-isotypic part: P = sum_S e_{lambda_I}[S] N(S).
inline CycloMatrix isotypic_projector(const NimRep& nr, const ModularData& md, int I) {
  const std::size_t n = nr.size();
  const auto& e = md.spectral_idempotents().at(I);
  CycloMatrix P(n, n);
  for (int S = 0; S < md.rank(); ++S) {
    if (e[S].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (const auto k = nr.mats[S](i, j); k != 0) P(i, j) += e[S] * CycloNumber(k);
  }
  return P;
}

/// Common eigenvector v with N(a) v = d(a) v, normalized to v[0] = 1.
/// Requires the d-eigenspace to be one-dimensional.
inline std::vector<CycloNumber> d_eigenvector(const NimRep& nr, const ModularData& md) {
  const auto profile = multiplicity_profile(nr, md);
  if (profile[0] != 1)
    throw MultiplicityNotOne("d-eigenspace has dimension " + std::to_string(profile[0]) + ", expected 1", {0});
  const CycloMatrix P = isotypic_projector(nr, md, 0);
  const std::size_t n = nr.size();
  std::vector<CycloNumber> v;
  for (std::size_t j = 0; j < n && v.empty(); ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) nonzero = nonzero || !P(i, j).is_zero();
    if (!nonzero) continue;
    if (P(0, j).is_zero()) throw DegenerateScalar("d-eigenvector has a vanishing first entry", {0});
    const CycloNumber inv = P(0, j).inverse();
    for (std::size_t i = 0; i < n; ++i) v.push_back(P(i, j) * inv);
  }
  if (v.empty()) throw Error("internal: projector vanishes although the multiplicity is one");
  for (int a = 0; a < md.rank(); ++a)
    for (std::size_t i = 0; i < n; ++i) {
      CycloNumber s;
      for (std::size_t j = 0; j < n; ++j)
        if (const auto k = nr.mats[a](i, j); k != 0) s += CycloNumber(k) * v[j];
      if (s != md.d()[a] * v[i]) throw Error("internal: projector image is not a d-eigenvector", {a, int(i)});
    }
  return v;
}

/// Connectedness of boundary labels under the action; an indecomposable
/// module has a single orbit class.
inline bool is_indecomposable(const NimRep& nr) {
  const int n = nr.size();
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& m : nr.mats)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m(i, j) != 0) parent[find(i)] = find(j);
  for (int i = 1; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

}  // namespace fuselab
