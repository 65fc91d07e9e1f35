#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuselab/cyclotomic.hpp"
#include "fuselab/errors.hpp"
#include "fuselab/modular_data.hpp"
#include "fuselab/nimrep.hpp"

namespace fuselab {

/// Candidate modular invariant: a square integer matrix over the labels.
struct InvariantMatrix {
  IntMatrix Z;
  std::string provenance = "user";  // user | enumerated | diagonal-built

  friend bool operator==(const InvariantMatrix&, const InvariantMatrix&) = default;
};

/// d(F) = sum_S chi[S] d(S*).
inline CycloNumber rep_dimension(std::span<const std::int64_t> chi, const ModularData& md) {
  if (static_cast<int>(chi.size()) != md.rank()) throw ShapeMismatch("character length differs from rank");
  CycloNumber s;
  for (int S = 0; S < md.rank(); ++S)
    if (chi[S] != 0) s += CycloNumber(chi[S]) * md.d()[md.ring().dual(S)];
  return s;
}

struct TmDimensionReport {
  CycloNumber dTM;
  std::int64_t mult_of_unit = 0;
  bool indecomposable = false;        // boundary labels form a single class
  bool unit_space_trivial = false;    // dim TM_1^1 = 1
  bool dimension_is_global = false;   // d(TM) = d(C)
  bool dimension_formula = false;     // d(TM) = dim TM_1^1 * d(C)

  bool consistent() const { return indecomposable == unit_space_trivial && unit_space_trivial == dimension_is_global; }
};

inline TmDimensionReport tm_dimension_report(const NimRep& nr, const ModularData& md) {
  TmDimensionReport rep;
  const auto chi = character(nr);
  rep.dTM = rep_dimension(chi, md);
  rep.mult_of_unit = multiplicity_profile(nr, md)[0];
  rep.indecomposable = is_indecomposable(nr);
  rep.unit_space_trivial = rep.mult_of_unit == 1;
  rep.dimension_is_global = rep.dTM == md.global_dim();
  rep.dimension_formula = rep.dTM == CycloNumber(rep.mult_of_unit) * md.global_dim();
  return rep;
}

/// Diagonal part of the invariant determined by a NIM-rep: only the
/// (I, I*) entries are known.
struct PartialInvariant {
  int rank = 0;
  std::vector<std::optional<std::int64_t>> entries;  // row-major

  std::optional<std::int64_t> at(int I, int J) const { return entries.at(static_cast<std::size_t>(I) * rank + J); }
};

inline PartialInvariant diagonal_profile_as_Z(const NimRep& nr, const ModularData& md) {
  const auto m = multiplicity_profile(nr, md);
  PartialInvariant p{md.rank(), std::vector<std::optional<std::int64_t>>(static_cast<std::size_t>(md.rank()) * md.rank())};
  for (int I = 0; I < md.rank(); ++I) p.entries[static_cast<std::size_t>(I) * md.rank() + md.ring().dual(I)] = m[I];
  return p;
}

struct InvariantVerdict {
  Verdict integrality;
  Verdict unit;
  Verdict s_commutation;
  Verdict t_compatibility;

  bool ok() const { return integrality.ok && unit.ok && s_commutation.ok && t_compatibility.ok; }
};

inline InvariantVerdict verify_invariant(const IntMatrix& Z, const ModularData& md) {
  const int r = md.rank();
  if (Z.rows() != static_cast<std::size_t>(r) || Z.cols() != static_cast<std::size_t>(r))
    throw ShapeMismatch("invariant matrix must be rank x rank");
  InvariantVerdict v;
  for (int I = 0; I < r && v.integrality.ok; ++I)
    for (int J = 0; J < r; ++J)
      if (Z(I, J) < 0) {
        v.integrality = Verdict::fail("integrality", {I, J}, "entries must be non-negative integers");
        break;
      }
  if (Z(0, 0) != 1) v.unit = Verdict::fail("Z00", {0, 0}, "Z_00 = 1");
  const auto& S = md.S();
  for (int I = 0; I < r && v.s_commutation.ok; ++I)
    for (int J = 0; J < r; ++J) {
      CycloNumber zs, sz;
      for (int K = 0; K < r; ++K) {
        if (Z(I, K) != 0) zs += CycloNumber(Z(I, K)) * S(K, J);
        if (Z(K, J) != 0) sz += S(I, K) * CycloNumber(Z(K, J));
      }
      if (zs != sz) {
        v.s_commutation = Verdict::fail("S-commutation", {I, J}, "(ZS)_IJ != (SZ)_IJ");
        break;
      }
    }
  for (int I = 0; I < r && v.t_compatibility.ok; ++I)
    for (int J = 0; J < r; ++J)
      if (Z(I, J) != 0 && !(md.t()[I] == md.t()[J])) {
        v.t_compatibility = Verdict::fail("T-compatibility", {I, J}, "Z_IJ != 0 requires t_I = t_J");
        break;
      }
  return v;
}

/// Z_{I,I*} equals the multiplicity of lambda_I in the NIM-rep for every I.
inline Verdict match_diagonal(const IntMatrix& Z, const NimRep& nr, const ModularData& md) {
  const auto m = multiplicity_profile(nr, md);
  for (int I = 0; I < md.rank(); ++I)
    if (Z(I, md.ring().dual(I)) != m[I])
      return Verdict::fail("diagonal", {I},
                           "Z_{I,I*} = " + std::to_string(Z(I, md.ring().dual(I))) + " but multiplicity is " + std::to_string(m[I]));
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Commutant of the modular data

struct CommutantOptions {
  bool t_compatible = true;  // impose Z_IJ = 0 whenever t_I != t_J
};

/// Rational basis of {Z : ZS = SZ} (optionally T-compatible) in reduced
/// echelon form: basis[k] is 1 on unknowns[free[k]] and 0 on the other free
/// unknowns.
struct CommutantBasis {
  int rank = 0;
  std::vector<std::pair<int, int>> unknowns;  // admissible (I, J) positions
  std::vector<int> free;                      // index into unknowns, one per basis element
  std::vector<Matrix<mpq_class>> basis;

  int dimension() const noexcept { return static_cast<int>(basis.size()); }
};

namespace detail {

constexpr std::uint64_t kFilterPrime = 2147483647ULL;  // 2^31 - 1

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kFilterPrime;
  while (e) {
    if (e & 1) r = r * b % kFilterPrime;
    b = b * b % kFilterPrime;
    e >>= 1;
  }
  return r;
}

// Linear system "ZS - SZ = 0" expanded over the rational basis of the
// common cyclotomic field. One equation (I, J) yields one integer row per
// basis exponent.
class CommutationSystem {
 public:
  CommutationSystem(const ModularData& md, const std::vector<std::pair<int, int>>& unknowns) : r_(md.rank()) {
    int order = 1;
    for (int I = 0; I < r_; ++I)
      for (int J = 0; J < r_; ++J) order = std::lcm(order, md.S()(I, J).order());
    const auto& info = order_info(order);
    std::vector<int> pos(order, -1);
    for (std::size_t b = 0; b < info.basis.size(); ++b) pos[info.basis[b]] = static_cast<int>(b);
    nb_ = static_cast<int>(info.basis.size());

    mpz_class den = 1;
    std::vector<CycloNumber> lifted;
    for (int I = 0; I < r_; ++I)
      for (int J = 0; J < r_; ++J) {
        lifted.push_back(md.S()(I, J).lifted(order));
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), lifted.back().denominator().get_mpz_t());
      }
    entries_.resize(lifted.size());
    for (std::size_t e = 0; e < lifted.size(); ++e)
      for (const auto& [k, c] : lifted[e].terms()) {
        const mpz_class v = c * (den / lifted[e].denominator());
        if (mpz_sizeinbase(v.get_mpz_t(), 2) > 40) throw Overflow("S coefficients too large for the commutant solver");
        entries_[e].push_back({pos[k], v.get_si()});
      }

    uidx_.assign(static_cast<std::size_t>(r_) * r_, -1);
    for (std::size_t u = 0; u < unknowns.size(); ++u) uidx_[unknowns[u].first * r_ + unknowns[u].second] = static_cast<int>(u);
    nu_ = static_cast<int>(unknowns.size());
  }

  int equations() const { return r_ * r_; }
  int rows_per_equation() const { return nb_; }
  int unknowns() const { return nu_; }

  // rows[b * nu + u]
  void rows(int eq, std::vector<std::int64_t>& out) const {
    const int I = eq / r_, J = eq % r_;
    out.assign(static_cast<std::size_t>(nb_) * nu_, 0);
    for (int K = 0; K < r_; ++K) {
      if (const int u = uidx_[I * r_ + K]; u >= 0)
        for (auto [b, c] : entries_[K * r_ + J]) out[static_cast<std::size_t>(b) * nu_ + u] += c;
      if (const int u = uidx_[K * r_ + J]; u >= 0)
        for (auto [b, c] : entries_[I * r_ + K]) out[static_cast<std::size_t>(b) * nu_ + u] -= c;
    }
  }

 private:
  int r_ = 0, nb_ = 0, nu_ = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> entries_;
  std::vector<int> uidx_;
};

// Reduced row echelon form over Q; returns pivot columns.
inline std::vector<int> rref(std::vector<std::vector<mpq_class>>& A, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < A.size(); ++c) {
    std::size_t p = row;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[row]);
    const mpq_class inv = 1 / A[row][c];
    for (int k = c; k < cols; ++k) A[row][k] *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == row || A[i][c] == 0) continue;
      const mpq_class f = A[i][c];
      for (int k = c; k < cols; ++k) A[i][k] -= f * A[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  A.resize(row);
  return pivots;
}

}  // namespace detail

/// Method: expand S over a rational basis of its cyclotomic field, so that
/// ZS = SZ becomes an integer linear system in the admissible entries of Z.
/// Rows that are independent modulo a prime are independent over Q; those
/// are eliminated exactly, and the resulting nullspace is re-checked against
/// every row, adding back any row the filter skipped until the check passes.
inline CommutantBasis commutant_basis(const ModularData& md, CommutantOptions opt = {}) {
  const int r = md.rank();
  CommutantBasis out;
  out.rank = r;
  for (int I = 0; I < r; ++I)
    for (int J = 0; J < r; ++J)
      if (!opt.t_compatible || md.t()[I] == md.t()[J]) out.unknowns.emplace_back(I, J);

  const detail::CommutationSystem sys(md, out.unknowns);
  const int nu = sys.unknowns();
  const int nb = sys.rows_per_equation();
  const std::uint64_t p = detail::kFilterPrime;

  std::vector<std::vector<std::uint64_t>> pivot_row(nu);
  std::vector<std::vector<mpq_class>> exact;
  std::vector<std::int64_t> rows;
  std::vector<std::uint64_t> red(nu);

  auto to_exact = [&](const std::int64_t* row) {
    std::vector<mpq_class> e(nu);
    for (int u = 0; u < nu; ++u) e[u] = row[u];
    exact.push_back(std::move(e));
  };

  for (int eq = 0; eq < sys.equations(); ++eq) {
    sys.rows(eq, rows);
    for (int b = 0; b < nb; ++b) {
      const std::int64_t* row = &rows[static_cast<std::size_t>(b) * nu];
      bool any = false;
      for (int u = 0; u < nu; ++u) {
        red[u] = static_cast<std::uint64_t>(((row[u] % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
        any = any || red[u] != 0;
      }
      if (!any) continue;
      int lead = -1;
      for (int c = 0; c < nu; ++c) {
        if (red[c] == 0) continue;
        if (pivot_row[c].empty()) {
          lead = c;
          break;
        }
        const std::uint64_t f = red[c];
        const auto& pr = pivot_row[c];
        for (int k = c; k < nu; ++k) red[k] = (red[k] + (p - f) * pr[k]) % p;
      }
      if (lead < 0) continue;
      const std::uint64_t inv = detail::mod_pow(red[lead], p - 2);
      for (int k = lead; k < nu; ++k) red[k] = red[k] * inv % p;
      pivot_row[lead] = red;
      to_exact(row);
    }
  }

  for (;;) {
    auto A = exact;
    const auto pivots = detail::rref(A, nu);
    std::vector<char> is_pivot(nu, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<mpq_class>> null;
    std::vector<int> free;
    for (int f = 0; f < nu; ++f) {
      if (is_pivot[f]) continue;
      std::vector<mpq_class> z(nu);
      z[f] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) z[pivots[i]] = -A[i][f];
      null.push_back(std::move(z));
      free.push_back(f);
    }

    // Exact re-check of every row against the candidate nullspace.
    bool added = false;
    for (int eq = 0; eq < sys.equations(); ++eq) {
      sys.rows(eq, rows);
      for (int b = 0; b < nb; ++b) {
        const std::int64_t* row = &rows[static_cast<std::size_t>(b) * nu];
        for (const auto& z : null) {
          mpq_class s = 0;
          for (int u = 0; u < nu; ++u)
            if (row[u] != 0 && z[u] != 0) s += row[u] * z[u];
          if (s != 0) {
            to_exact(row);
            added = true;
            break;
          }
        }
      }
    }
    if (added) continue;

    out.free = free;
    for (const auto& z : null) {
      Matrix<mpq_class> B(r, r, mpq_class(0));
      for (int u = 0; u < nu; ++u) B(out.unknowns[u].first, out.unknowns[u].second) = z[u];
      out.basis.push_back(std::move(B));
    }
    return out;
  }
}

inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

/// All non-negative integer Z with entries <= bound, Z_00 = 1, commuting with
/// S and compatible with T, in lexicographic (row-major) order.
///
/// Z is a rational combination of the commutant basis whose coefficients are
/// the entries of Z on the free positions, so those coefficients range over
/// integers in [0, bound]. The depth-first search prunes with interval bounds
/// on every entry; each visited node counts against `cap`.
inline std::vector<InvariantMatrix> enumerate_invariants(const ModularData& md, int bound,
                                                         std::uint64_t cap = kDefaultSearchCap,
                                                         const CommutantBasis* precomputed = nullptr) {
  if (bound < 1) throw Error("entry bound must be at least 1");
  const CommutantBasis local = precomputed ? CommutantBasis{} : commutant_basis(md);
  const CommutantBasis& cb = precomputed ? *precomputed : local;
  const int r = md.rank();
  const int d = cb.dimension();
  const int nu = static_cast<int>(cb.unknowns.size());

  mpz_class D = 1;
  for (const auto& B : cb.basis)
    for (const auto& [I, J] : cb.unknowns) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), B(I, J).get_den_mpz_t());
  if (mpz_sizeinbase(D.get_mpz_t(), 2) > 40) throw Overflow("commutant denominators too large for enumeration");
  const std::int64_t scale = D.get_si();

  std::vector<std::vector<std::int64_t>> W(d, std::vector<std::int64_t>(nu));
  for (int k = 0; k < d; ++k)
    for (int u = 0; u < nu; ++u) {
      const auto& [I, J] = cb.unknowns[u];
      const mpq_class v = cb.basis[k](I, J) * D;
      if (mpz_sizeinbase(v.get_num_mpz_t(), 2) > 40) throw Overflow("commutant coefficients too large for enumeration");
      W[k][u] = v.get_num().get_si();
    }

  std::vector<std::int64_t> lo(nu, 0), hi(nu, bound);
  for (int u = 0; u < nu; ++u)
    if (cb.unknowns[u] == std::pair{0, 0}) lo[u] = hi[u] = 1;
  std::vector<std::int64_t> clo(d), chi(d);
  for (int k = 0; k < d; ++k) clo[k] = lo[cb.free[k]], chi[k] = hi[cb.free[k]];

  // suffix extremes of sum_{k' >= k} c_k' W[k'][u]
  std::vector<std::vector<std::int64_t>> smin(d + 1, std::vector<std::int64_t>(nu, 0)), smax = smin;
  for (int k = d - 1; k >= 0; --k)
    for (int u = 0; u < nu; ++u) {
      const std::int64_t a = clo[k] * W[k][u], b = chi[k] * W[k][u];
      smin[k][u] = smin[k + 1][u] + std::min(a, b);
      smax[k][u] = smax[k + 1][u] + std::max(a, b);
    }

  std::vector<InvariantMatrix> found;
  std::vector<std::int64_t> partial(nu, 0);
  std::uint64_t visited = 0;

  auto feasible = [&](int k) {
    for (int u = 0; u < nu; ++u) {
      if (partial[u] + smin[k][u] > hi[u] * scale) return false;
      if (partial[u] + smax[k][u] < lo[u] * scale) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, int k) -> void {
    if (++visited > cap)
      throw SearchBudgetExceeded("lattice search exceeded " + std::to_string(cap) + " points");
    if (!feasible(k)) return;
    if (k == d) {
      IntMatrix Z(r, r, 0);
      for (int u = 0; u < nu; ++u) {
        if (partial[u] % scale != 0) return;
        Z(cb.unknowns[u].first, cb.unknowns[u].second) = partial[u] / scale;
      }
      found.push_back({std::move(Z), "enumerated"});
      return;
    }
    for (std::int64_t c = clo[k]; c <= chi[k]; ++c) {
      for (int u = 0; u < nu; ++u) partial[u] += c * W[k][u];
      self(self, k + 1);
      for (int u = 0; u < nu; ++u) partial[u] -= c * W[k][u];
    }
  };
  dfs(dfs, 0);

  std::sort(found.begin(), found.end(), [&](const InvariantMatrix& a, const InvariantMatrix& b) {
    for (int I = 0; I < r; ++I)
      for (int J = 0; J < r; ++J)
        if (a.Z(I, J) != b.Z(I, J)) return a.Z(I, J) < b.Z(I, J);
    return false;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace fuselab
