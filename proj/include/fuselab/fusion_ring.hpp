#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "fuselab/cyclotomic.hpp"
#include "fuselab/errors.hpp"
#include "fuselab/matrix.hpp"

namespace fuselab {

using Tensor3 = std::vector<std::vector<std::vector<int>>>;

/// Based commutative ring with non-negative structure constants N_{ab}^c.
/// Index 0 is the unit.
class FusionRing {
 public:
  FusionRing() = default;

  FusionRing(std::vector<std::string> labels, std::vector<int> dual, const Tensor3& N)
      : labels_(std::move(labels)), dual_(std::move(dual)) {
    const std::size_t r = labels_.size();
    if (r == 0) throw ShapeMismatch("fusion ring needs at least one label");
    if (dual_.size() != r) throw ShapeMismatch("dual map length differs from rank");
    for (std::size_t a = 0; a < r; ++a)
      if (dual_[a] < 0 || dual_[a] >= static_cast<int>(r)) throw ShapeMismatch("dual index out of range", {static_cast<int>(a)});
    if (N.size() != r) throw ShapeMismatch("structure constants: first axis length differs from rank");
    N_.assign(r * r * r, 0);
    for (std::size_t a = 0; a < r; ++a) {
      if (N[a].size() != r) throw ShapeMismatch("structure constants: ragged second axis", {static_cast<int>(a)});
      for (std::size_t b = 0; b < r; ++b) {
        if (N[a][b].size() != r) throw ShapeMismatch("structure constants: ragged third axis", {static_cast<int>(a), static_cast<int>(b)});
        for (std::size_t c = 0; c < r; ++c) N_[(a * r + b) * r + c] = N[a][b][c];
      }
    }
  }

  int rank() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int a) const { return labels_.at(a); }
  int dual(int a) const { return dual_.at(a); }
  const std::vector<int>& duals() const noexcept { return dual_; }

  int N(int a, int b, int c) const {
    const std::size_t r = labels_.size();
    return N_[(static_cast<std::size_t>(a) * r + b) * r + c];
  }

  Tensor3 tensor() const {
    const int r = rank();
    Tensor3 t(r, std::vector<std::vector<int>>(r, std::vector<int>(r)));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c) t[a][b][c] = N(a, b, c);
    return t;
  }

  int index_of(const std::string& label) const {
    for (int i = 0; i < rank(); ++i)
      if (labels_[i] == label) return i;
    return -1;
  }

  friend bool operator==(const FusionRing&, const FusionRing&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> dual_;
  std::vector<int> N_;
};

/// Checks, in order: non-negativity, unit law, duality, associativity,
/// commutativity. Reports the first failure with an index witness.
inline Verdict verify_axioms(const FusionRing& R) {
  const int r = R.rank();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (R.N(a, b, c) < 0) return Verdict::fail("non-negativity", {a, b, c});
  for (int b = 0; b < r; ++b)
    for (int c = 0; c < r; ++c) {
      const int delta = b == c ? 1 : 0;
      if (R.N(0, b, c) != delta || R.N(b, 0, c) != delta) return Verdict::fail("unit", {b, c}, "N_{0b}^c = N_{b0}^c = delta_{bc}");
    }
  if (R.dual(0) != 0) return Verdict::fail("duality", {0}, "dual(0) must be 0");
  for (int a = 0; a < r; ++a) {
    if (R.dual(R.dual(a)) != a) return Verdict::fail("duality", {a}, "dual is not an involution");
    for (int b = 0; b < r; ++b)
      if (R.N(a, b, 0) != (b == R.dual(a) ? 1 : 0)) return Verdict::fail("duality", {a, b}, "N_{ab}^0 = delta_{b,a*}");
  }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
          long lhs = 0, rhs = 0;
          for (int e = 0; e < r; ++e) {
            lhs += static_cast<long>(R.N(a, b, e)) * R.N(e, c, d);
            rhs += static_cast<long>(R.N(b, c, e)) * R.N(a, e, d);
          }
          if (lhs != rhs) return Verdict::fail("associativity", {a, b, c, d});
        }
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (R.N(a, b, c) != R.N(b, a, c)) return Verdict::fail("commutativity", {a, b, c});
  return Verdict::pass();
}

/// Truncated SU(2) character ring at level l: labels x_0..x_l, h = l + 2.
inline FusionRing su2_fusion_ring(int level) {
  if (level < 0) throw Error("su(2) level must be non-negative");
  const int r = level + 1;
  std::vector<std::string> labels;
  for (int a = 0; a < r; ++a) labels.push_back("x" + std::to_string(a));
  std::vector<int> dual(r);
  for (int a = 0; a < r; ++a) dual[a] = a;
  Tensor3 N(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = std::abs(a - b); c <= std::min(a + b, 2 * level - a - b); c += 2) N[a][b][c] = 1;
  return FusionRing(std::move(labels), std::move(dual), N);
}

/// Element of the fusion algebra: coefficients over the simple labels.
struct FusionElement {
  std::vector<CycloNumber> coeffs;

  FusionElement() = default;
  explicit FusionElement(std::vector<CycloNumber> c) : coeffs(std::move(c)) {}

  static FusionElement basis(int rank, int a) {
    FusionElement e{std::vector<CycloNumber>(rank)};
    e.coeffs.at(a) = 1;
    return e;
  }
  static FusionElement unit(int rank) { return basis(rank, 0); }

  int size() const noexcept { return static_cast<int>(coeffs.size()); }
  const CycloNumber& operator[](int a) const { return coeffs.at(a); }
  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  friend FusionElement operator+(const FusionElement& x, const FusionElement& y) {
    if (x.size() != y.size()) throw ShapeMismatch("fusion elements of different rank");
    FusionElement r = x;
    for (int a = 0; a < r.size(); ++a) r.coeffs[a] += y.coeffs[a];
    return r;
  }
  friend FusionElement operator-(const FusionElement& x, const FusionElement& y) {
    if (x.size() != y.size()) throw ShapeMismatch("fusion elements of different rank");
    FusionElement r = x;
    for (int a = 0; a < r.size(); ++a) r.coeffs[a] -= y.coeffs[a];
    return r;
  }
  friend FusionElement operator*(const CycloNumber& s, const FusionElement& x) {
    FusionElement r = x;
    for (auto& c : r.coeffs) c = s * c;
    return r;
  }
  friend bool operator==(const FusionElement& x, const FusionElement& y) { return x.coeffs == y.coeffs; }
};

/// Product in the fusion algebra, the bilinear extension of N.
inline FusionElement multiply(const FusionRing& R, const FusionElement& x, const FusionElement& y) {
  const int r = R.rank();
  if (x.size() != r || y.size() != r) throw ShapeMismatch("fusion element rank differs from ring rank");
  std::vector<CycloNumber> out(r);
  for (int a = 0; a < r; ++a) {
    if (x.coeffs[a].is_zero()) continue;
    for (int b = 0; b < r; ++b) {
      if (y.coeffs[b].is_zero()) continue;
      const CycloNumber p = x.coeffs[a] * y.coeffs[b];
      for (int c = 0; c < r; ++c) {
        const int n = R.N(a, b, c);
        if (n == 1) out[c] += p;
        else if (n != 0) out[c] += CycloNumber(n) * p;
      }
    }
  }
  return FusionElement(std::move(out));
}

/// Regular representation: (N_a)_{cb} = N_{ab}^c.
inline std::vector<IntMatrix> regular_matrices(const FusionRing& R) {
  const int r = R.rank();
  std::vector<IntMatrix> out;
  out.reserve(r);
  for (int a = 0; a < r; ++a) {
    IntMatrix m(r, r, 0);
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) m(c, b) = R.N(a, b, c);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace fuselab
