#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "fuselab/cyclotomic.hpp"
#include "fuselab/fusion_ring.hpp"
#include "fuselab/matrix.hpp"

namespace fuselab {

using CycloMatrix = Matrix<CycloNumber>;

/// A point lambda_I of Spec(F): values[S] = lambda_I(S) = S_{IS} / d(I).
struct SpectrumPoint {
  int base_label = 0;
  std::vector<CycloNumber> values;
  CycloNumber norm_sq;  // <lambda, lambda>
};

/// Fusion ring together with unnormalized S (S_{0I} = d(I)) and topological
/// spins t_I (T_{II} = exp(2 pi i t_I)).
///
/// Derived quantities (spectrum, idempotents, inverse dimensions) are
/// computed on first use and shared between copies.
class ModularData {
 public:
  ModularData() = default;

  ModularData(std::string name, FusionRing ring, CycloMatrix S, std::vector<RationalPhase> t)
      : name_(std::move(name)), ring_(std::move(ring)), S_(std::move(S)), t_(std::move(t)), cache_(std::make_shared<Cache>()) {
    const int r = ring_.rank();
    if (S_.rows() != static_cast<std::size_t>(r) || S_.cols() != static_cast<std::size_t>(r))
      throw ShapeMismatch("S matrix must be rank x rank");
    if (t_.size() != static_cast<std::size_t>(r)) throw ShapeMismatch("spin vector length differs from rank");
    d_.reserve(r);
    for (int i = 0; i < r; ++i) {
      d_.push_back(S_(0, i));
      global_dim_ += d_.back() * d_.back();
    }
  }

  const std::string& name() const noexcept { return name_; }
  const FusionRing& ring() const noexcept { return ring_; }
  int rank() const noexcept { return ring_.rank(); }
  const CycloMatrix& S() const noexcept { return S_; }
  const std::vector<RationalPhase>& t() const noexcept { return t_; }
  const std::vector<CycloNumber>& d() const noexcept { return d_; }
  const CycloNumber& global_dim() const noexcept { return global_dim_; }

  const CycloNumber& global_dim_inverse() const {
    std::call_once(cache_->inv_flag, [&] { cache_->global_dim_inv = global_dim_.inverse(); });
    return cache_->global_dim_inv;
  }

  // Defined below, after the free functions they rely on.
  const std::vector<SpectrumPoint>& spectrum() const;
  const std::vector<FusionElement>& spectral_idempotents() const;

  friend bool operator==(const ModularData& a, const ModularData& b) {
    return a.name_ == b.name_ && a.ring_ == b.ring_ && a.S_ == b.S_ && a.t_ == b.t_;
  }

 private:
  struct Cache {
    std::once_flag inv_flag, spec_flag, idem_flag;
    CycloNumber global_dim_inv;
    std::vector<SpectrumPoint> spectrum;
    std::vector<FusionElement> idempotents;
  };

  std::string name_;
  FusionRing ring_;
  CycloMatrix S_;
  std::vector<RationalPhase> t_;
  std::vector<CycloNumber> d_;
  CycloNumber global_dim_;
  std::shared_ptr<Cache> cache_;
};

/// <a, b> = sum_S a(S) b(S*).
inline CycloNumber inner_product(const FusionRing& R, std::span<const CycloNumber> a, std::span<const CycloNumber> b) {
  const int r = R.rank();
  if (static_cast<int>(a.size()) != r || static_cast<int>(b.size()) != r)
    throw ShapeMismatch("character vectors must have the ring's rank");
  CycloNumber s;
  for (int S = 0; S < r; ++S) s += a[S] * b[R.dual(S)];
  return s;
}

/// Spec(F) read off the S matrix, one point per label.
inline std::vector<SpectrumPoint> compute_spectrum(const ModularData& md) {
  const int r = md.rank();
  std::vector<SpectrumPoint> out;
  out.reserve(r);
  for (int I = 0; I < r; ++I) {
    if (md.d()[I].is_zero()) throw DegenerateScalar("quantum dimension vanishes", {I});
    const CycloNumber inv = md.d()[I].inverse();
    SpectrumPoint p;
    p.base_label = I;
    p.values.reserve(r);
    for (int S = 0; S < r; ++S) p.values.push_back(md.S()(I, S) * inv);
    p.norm_sq = inner_product(md.ring(), p.values, p.values);
    out.push_back(std::move(p));
  }
  return out;
}

/// e_lambda = (1 / |lambda|^2) sum_S lambda(S*) S.
inline FusionElement spectral_idempotent(const ModularData& md, const SpectrumPoint& lambda) {
  const int r = md.rank();
  if (static_cast<int>(lambda.values.size()) != r) throw ShapeMismatch("spectrum point rank differs");
  const CycloNumber scale = lambda.norm_sq.inverse();
  std::vector<CycloNumber> c(r);
  for (int S = 0; S < r; ++S) c[S] = scale * lambda.values[md.ring().dual(S)];
  return FusionElement(std::move(c));
}

/// Primitive idempotent 1_I of End(1) in the tube category, in the form
///   1_I = d(I) / d(C) * sum_S d(S) lambda_{S*}(I) S,
/// evaluated straight from S and d without going through Spec(F).
inline FusionElement tube_idempotent(const ModularData& md, int I) {
  const int r = md.rank();
  if (I < 0 || I >= r) throw Error("label out of range", {I});
  const CycloNumber pre = md.d()[I] * md.global_dim_inverse();
  std::vector<CycloNumber> c(r);
  for (int S = 0; S < r; ++S) {
    const int Sd = md.ring().dual(S);
    const CycloNumber lam = md.S()(Sd, I) / md.d()[Sd];
    c[S] = pre * md.d()[S] * lam;
  }
  return FusionElement(std::move(c));
}

inline const std::vector<SpectrumPoint>& ModularData::spectrum() const {
  std::call_once(cache_->spec_flag, [&] { cache_->spectrum = compute_spectrum(*this); });
  return cache_->spectrum;
}

inline const std::vector<FusionElement>& ModularData::spectral_idempotents() const {
  std::call_once(cache_->idem_flag, [&] {
    for (const auto& p : spectrum()) cache_->idempotents.push_back(spectral_idempotent(*this, p));
  });
  return cache_->idempotents;
}

/// Verlinde formula N_{ab}^c = sum_m S_{am} S_{bm} S_{c* m} / (S_{0m} d(C)),
/// computed as (1/d(C)) sum_m lambda_m(a) S_{bm} S_{c* m}.
inline std::vector<std::vector<std::vector<CycloNumber>>> verlinde(const ModularData& md) {
  const int r = md.rank();
  const auto& spec = md.spectrum();
  const CycloNumber inv = md.global_dim_inverse();
  std::vector<std::vector<std::vector<CycloNumber>>> out(
      r, std::vector<std::vector<CycloNumber>>(r, std::vector<CycloNumber>(r)));
  std::vector<CycloNumber> prod(r);
  for (int a = 0; a < r; ++a)
    for (int b = a; b < r; ++b) {
      // lambda_m(a) = S_{am} / S_{0m} by the symmetry of S.
      for (int m = 0; m < r; ++m) prod[m] = spec[m].values[a] * md.S()(b, m);
      for (int c = 0; c < r; ++c) {
        const int cd = md.ring().dual(c);
        CycloNumber s;
        for (int m = 0; m < r; ++m)
          if (!prod[m].is_zero()) s += prod[m] * md.S()(cd, m);
        out[a][b][c] = s * inv;
        out[b][a][c] = out[a][b][c];
      }
    }
  return out;
}

/// Verlinde coefficients as integers; throws NonIntegralVerlinde otherwise.
inline Tensor3 verlinde_integer(const ModularData& md) {
  const auto v = verlinde(md);
  const int r = md.rank();
  Tensor3 out(r, std::vector<std::vector<int>>(r, std::vector<int>(r)));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        const auto z = v[a][b][c].to_integer();
        if (!z || *z < 0 || !z->fits_sint_p())
          throw NonIntegralVerlinde("Verlinde coefficient is not a non-negative integer: " + v[a][b][c].to_string(), {a, b, c});
        out[a][b][c] = static_cast<int>(z->get_si());
      }
  return out;
}

/// Checks d(0) = 1, symmetry of S, S_{IJ} = S_{I*J*}, (S^2)_{IJ} = d(C) delta_{J,I*}
/// and that the Verlinde formula reproduces the ring.
inline Verdict verify_modular_data(const ModularData& md) {
  const int r = md.rank();
  const auto& S = md.S();
  const auto& R = md.ring();
  if (S(0, 0) != CycloNumber(1)) return Verdict::fail("unit dimension", {0}, "S_00 must equal 1");
  for (int I = 0; I < r; ++I)
    for (int J = 0; J < r; ++J) {
      if (S(I, J) != S(J, I)) return Verdict::fail("S symmetric", {I, J});
      if (S(I, J) != S(R.dual(I), R.dual(J))) return Verdict::fail("S dual-invariant", {I, J});
    }
  for (int I = 0; I < r; ++I)
    for (int J = 0; J < r; ++J) {
      CycloNumber s;
      for (int K = 0; K < r; ++K) s += S(I, K) * S(K, J);
      const CycloNumber expect = J == R.dual(I) ? md.global_dim() : CycloNumber(0);
      if (s != expect) return Verdict::fail("S squared", {I, J}, "(S^2)_{IJ} = d(C) delta_{J,I*}");
    }
  Tensor3 N;
  try {
    N = verlinde_integer(md);
  } catch (const NonIntegralVerlinde& e) {
    return Verdict::fail("Verlinde integrality", e.witness(), e.what());
  }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (N[a][b][c] != R.N(a, b, c)) return Verdict::fail("Verlinde reproduces N", {a, b, c});
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Built-in modular data

inline ModularData su2_modular_data(int level) {
  if (level < 0) throw Error("su(2) level must be non-negative");
  const int h = level + 2;
  const int r = level + 1;
  CycloMatrix S(r, r);
  std::vector<RationalPhase> t;
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) S(a, b) = sin_ratio(((a + 1) * (b + 1)) % (2 * h), h);
    t.emplace_back(mpq_class(a * (a + 2), 4 * h) - mpq_class(level, 8 * h));
  }
  return ModularData("su2:" + std::to_string(level), su2_fusion_ring(level), std::move(S), std::move(t));
}

inline ModularData fibonacci_modular_data() {
  const CycloNumber phi = two_cos(1, 5);
  Tensor3 N = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}};
  CycloMatrix S = CycloMatrix::from_rows({{1, phi}, {phi, -1}});
  return ModularData("fibonacci", FusionRing({"1", "tau"}, {0, 1}, N), std::move(S), {RationalPhase(0, 1), RationalPhase(2, 5)});
}

inline ModularData ising_modular_data() {
  const CycloNumber r2 = two_cos(1, 4);
  Tensor3 N = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
               {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}},
               {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
  CycloMatrix S = CycloMatrix::from_rows({{1, r2, 1}, {r2, 0, -r2}, {1, -r2, 1}});
  return ModularData("ising", FusionRing({"1", "sigma", "psi"}, {0, 1, 2}, N), std::move(S),
                     {RationalPhase(0, 1), RationalPhase(1, 16), RationalPhase(1, 2)});
}

/// Pointed theory on Z/n: a (x) b = a + b, S_{ab} = zeta_n^{ab}.
/// Spins t_a = a^2/(2n) for even n and a^2 (n+1)/(2n) for odd n.
inline ModularData cyclic_modular_data(int n) {
  if (n < 1) throw Error("cyclic order must be positive");
  std::vector<std::string> labels;
  std::vector<int> dual(n);
  Tensor3 N(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  CycloMatrix S(n, n);
  std::vector<RationalPhase> t;
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    dual[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      N[a][b][(a + b) % n] = 1;
      S(a, b) = CycloNumber::zeta(n, static_cast<long long>(a) * b);
    }
    t.emplace_back(n % 2 == 0 ? mpq_class(a * a, 2 * n) : mpq_class(a * a * ((n + 1) / 2), n));
  }
  return ModularData("zn:" + std::to_string(n), FusionRing(std::move(labels), std::move(dual), N), std::move(S), std::move(t));
}

}  // namespace fuselab
