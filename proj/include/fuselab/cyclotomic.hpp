#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element of Q(zeta_n) is stored as sum_k c_k zeta_n^k where only the
// "basis exponents" k carry nonzero coefficients. For n = prod p^e an
// exponent k is a basis exponent iff, for every prime p | n, the digit
// floor((k mod p^e) / p^(e-1)) differs from p-1. The relation
//     sum_{t=0}^{p-1} zeta_n^(k + t n/p) = 0
// moves any other exponent onto basis exponents, and the basis exponents
// are linearly independent over Q, so the reduced form is unique.
// Coefficients share a common positive denominator coprime to the content
// of the numerators.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <complex>
#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fuselab/errors.hpp"

namespace fuselab {

namespace detail {

struct OrderInfo {
  struct PrimePart {
    int p;
    int q;  // p^e exactly dividing n
  };
  int n = 1;
  std::vector<PrimePart> parts;
  std::vector<unsigned char> is_basis;
  std::vector<int> basis;  // ascending
  std::vector<int> units;  // 1 <= k < n with gcd(k, n) = 1 (k = 1 first)
};

inline std::unique_ptr<OrderInfo> build_order_info(int n) {
  auto info = std::make_unique<OrderInfo>();
  info->n = n;
  int rest = n;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    int q = 1;
    while (rest % p == 0) rest /= p, q *= p;
    info->parts.push_back({p, q});
  }
  if (rest > 1) info->parts.push_back({rest, rest});
  info->is_basis.assign(n, 1);
  for (int k = 0; k < n; ++k) {
    for (auto [p, q] : info->parts)
      if ((k % q) / (q / p) == p - 1) info->is_basis[k] = 0;
    if (info->is_basis[k]) info->basis.push_back(k);
  }
  if (n == 1) info->units.push_back(1);
  for (int k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) info->units.push_back(k);
  return info;
}

inline const OrderInfo& order_info(int n) {
  if (n < 1) throw Error("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<OrderInfo>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[n];
  if (!slot) slot = build_order_info(n);
  return *slot;
}

// Rewrite a dense exponent vector onto basis exponents.
template <class T>
void reduce_dense(std::vector<T>& acc, const OrderInfo& info) {
  const int n = info.n;
  for (auto [p, q] : info.parts) {
    const int block = q / p;
    const int shift = n / p;
    for (int k = 0; k < n; ++k) {
      if ((k % q) / block != p - 1 || acc[k] == 0) continue;
      T c = acc[k];
      acc[k] = 0;
      for (int t = 1; t < p; ++t) acc[(k + t * shift) % n] -= c;
    }
  }
}

inline mpz_class mpz_from_i128(__int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return mpz_class(static_cast<long>(v));
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += mpz_class(static_cast<unsigned long>(u & ~0UL));
  return neg ? mpz_class(-r) : r;
}

}  // namespace detail

/// Element of a cyclotomic field Q(zeta_n), kept in reduced canonical form.
///
/// Values are immutable once built; every operation returns a new value.
/// Mixed-order operations lift both operands to the lcm of their orders.
class CycloNumber {
 public:
  using Term = std::pair<int, mpz_class>;

  CycloNumber() : info_(&detail::order_info(1)) {}

  template <std::integral I>
  CycloNumber(I v) : info_(&detail::order_info(1)) {  // NOLINT(google-explicit-constructor)
    if (v != 0) terms_.emplace_back(0, mpz_class(static_cast<long>(v)));
  }

  CycloNumber(mpq_class q) : info_(&detail::order_info(1)) {  // NOLINT(google-explicit-constructor)
    q.canonicalize();
    if (q != 0) {
      terms_.emplace_back(0, q.get_num());
      den_ = q.get_den();
    }
  }

  /// zeta_n^k.
  static CycloNumber zeta(int n, long long k = 1) {
    const auto& info = detail::order_info(n);
    std::vector<mpz_class> acc(n);
    acc[static_cast<std::size_t>(((k % n) + n) % n)] = 1;
    return from_dense(info, acc, 1);
  }

  /// Build from sum_k coeffs[k] zeta_n^k (coeffs need not be reduced).
  static CycloNumber from_coeffs(int n, const std::vector<mpq_class>& coeffs) {
    if (static_cast<int>(coeffs.size()) != n) throw ShapeMismatch("coefficient vector length must equal the order");
    const auto& info = detail::order_info(n);
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> acc(n);
    for (int k = 0; k < n; ++k) acc[k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
    return from_dense(info, acc, den);
  }

  int order() const noexcept { return info_->n; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const mpz_class& denominator() const noexcept { return den_; }

  /// Dense length-n coefficient vector of the canonical form.
  std::vector<mpq_class> coeffs() const {
    std::vector<mpq_class> out(order());
    for (const auto& [k, c] : terms_) {
      out[k] = mpq_class(c, den_);
      out[k].canonicalize();
    }
    return out;
  }

  mpq_class coeff(int k) const {
    for (const auto& [e, c] : terms_)
      if (e == k) {
        mpq_class q(c, den_);
        q.canonicalize();
        return q;
      }
    return 0;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

  std::optional<mpq_class> to_rational() const {
    if (terms_.empty()) return mpq_class(0);
    if (!is_rational()) return std::nullopt;
    mpq_class q(terms_[0].second, den_);
    q.canonicalize();
    return q;
  }

  std::optional<mpz_class> to_integer() const {
    auto q = to_rational();
    if (!q || q->get_den() != 1) return std::nullopt;
    return q->get_num();
  }

  /// Same element, viewed in Q(zeta_m) for a multiple m of the order.
  CycloNumber lifted(int m) const {
    if (m == order()) return *this;
    if (m % order() != 0) throw Error("lift target must be a multiple of the order");
    const int f = m / order();
    const auto& info = detail::order_info(m);
    std::vector<mpz_class> acc(m);
    for (const auto& [k, c] : terms_) acc[static_cast<std::size_t>(k) * f] = c;
    return from_dense(info, acc, den_);
  }

  /// Galois automorphism zeta_n -> zeta_n^k, gcd(k, n) = 1.
  CycloNumber galois(long long k) const {
    const int n = order();
    const long long kk = ((k % n) + n) % n;
    if (std::gcd(kk, static_cast<long long>(n)) != 1 && n > 1) throw Error("Galois exponent must be coprime to the order");
    std::vector<mpz_class> acc(n);
    for (const auto& [e, c] : terms_) acc[static_cast<std::size_t>((e * kk) % n)] += c;
    return from_dense(*info_, acc, den_);
  }

  /// Complex conjugation, zeta -> zeta^(n-1).
  CycloNumber conj() const { return galois(-1); }

  CycloNumber inverse() const {
    if (is_zero()) throw DegenerateScalar("division by zero in cyclotomic field");
    if (is_rational()) return CycloNumber(mpq_class(1) / *to_rational());
    // The distinct Galois conjugates are the roots of the minimal polynomial,
    // so their product is a nonzero rational (up to sign the constant term).
    std::vector<CycloNumber> orbit{*this};
    for (int k : info_->units) {
      if (k == 1) continue;
      CycloNumber c = galois(k);
      if (std::find(orbit.begin(), orbit.end(), c) == orbit.end()) orbit.push_back(std::move(c));
    }
    CycloNumber rest(1);
    for (std::size_t i = 1; i < orbit.size(); ++i) rest = rest * orbit[i];
    const auto norm = (*this * rest).to_rational();
    if (!norm || *norm == 0) throw Error("internal: conjugate product is not a nonzero rational");
    return rest * CycloNumber(mpq_class(1) / *norm);
  }

  friend CycloNumber operator-(const CycloNumber& a) {
    CycloNumber r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) { return add(a, b, false); }
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return add(a, b, true); }

  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    if (a.is_zero() || b.is_zero()) return CycloNumber();
    if (a.is_rational()) return b.scaled(a.terms_[0].second, a.den_);
    if (b.is_rational()) return a.scaled(b.terms_[0].second, b.den_);
    const int n = std::lcm(a.order(), b.order());
    CycloNumber xl, yl;
    const CycloNumber* px = &a;
    const CycloNumber* py = &b;
    if (a.order() != n) xl = a.lifted(n), px = &xl;
    if (b.order() != n) yl = b.lifted(n), py = &yl;
    const auto& info = detail::order_info(n);
    const mpz_class den = px->den_ * py->den_;
    if (n <= 4096 && px->small() && py->small()) {
      thread_local std::vector<__int128> acc;
      acc.assign(n, 0);
      for (const auto& [i, ci] : px->terms_) {
        const __int128 vi = ci.get_si();
        for (const auto& [j, cj] : py->terms_) acc[(i + j) % n] += vi * cj.get_si();
      }
      detail::reduce_dense(acc, info);
      CycloNumber r;
      r.info_ = &info;
      r.den_ = den;
      for (int k : info.basis)
        if (acc[k] != 0) r.terms_.emplace_back(k, detail::mpz_from_i128(acc[k]));
      r.normalize();
      return r;
    }
    std::vector<mpz_class> acc(n);
    for (const auto& [i, ci] : px->terms_)
      for (const auto& [j, cj] : py->terms_) mpz_addmul(acc[(i + j) % n].get_mpz_t(), ci.get_mpz_t(), cj.get_mpz_t());
    return from_dense(info, acc, den);
  }

  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) {
    if (b.is_zero()) throw DegenerateScalar("division by zero in cyclotomic field");
    return a * b.inverse();
  }

  CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
  CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    if (a.order() == b.order() || a.is_rational() || b.is_rational()) {
      if (a.is_rational() != b.is_rational()) return false;
      return a.den_ == b.den_ && a.terms_ == b.terms_;
    }
    const int n = std::lcm(a.order(), b.order());
    const CycloNumber x = a.lifted(n);
    const CycloNumber y = b.lifted(n);
    return x.den_ == y.den_ && x.terms_ == y.terms_;
  }

  /// Double-precision value, for reports and float oracles.
  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    const double tau = 2.0 * 3.14159265358979323846;
    for (const auto& [k, c] : terms_) {
      const double v = mpq_class(c, den_).get_d();
      z += v * std::polar(1.0, tau * k / order());
    }
    return z;
  }

  /// GAP-style text: "E(n)^k" denotes zeta_n^k.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      mpq_class q(c, den_);
      q.canonicalize();
      const bool neg = q < 0;
      if (neg) q = -q;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      if (k == 0) {
        os << q.get_str();
        continue;
      }
      if (q != 1) os << q.get_str() << '*';
      os << "E(" << order() << ')';
      if (k != 1) os << '^' << k;
    }
    return os.str();
  }

 private:
  static CycloNumber from_dense(const detail::OrderInfo& info, std::vector<mpz_class>& acc, const mpz_class& den) {
    detail::reduce_dense(acc, info);
    CycloNumber r;
    r.info_ = &info;
    r.den_ = den;
    for (int k : info.basis)
      if (acc[k] != 0) r.terms_.emplace_back(k, std::move(acc[k]));
    r.normalize();
    return r;
  }

  static CycloNumber add(const CycloNumber& a, const CycloNumber& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    const int n = std::lcm(a.order(), b.order());
    CycloNumber xl, yl;
    const CycloNumber* px = &a;
    const CycloNumber* py = &b;
    if (a.order() != n) xl = a.lifted(n), px = &xl;
    if (b.order() != n) yl = b.lifted(n), py = &yl;
    CycloNumber r;
    r.info_ = &detail::order_info(n);
    const bool same_den = px->den_ == py->den_;
    r.den_ = same_den ? px->den_ : mpz_class(px->den_ * py->den_);
    const mpz_class fx = same_den ? mpz_class(1) : py->den_;
    const mpz_class fy = same_den ? mpz_class(1) : px->den_;
    auto i = px->terms_.begin();
    auto j = py->terms_.begin();
    while (i != px->terms_.end() || j != py->terms_.end()) {
      if (j == py->terms_.end() || (i != px->terms_.end() && i->first < j->first)) {
        r.terms_.emplace_back(i->first, i->second * fx);
        ++i;
      } else if (i == px->terms_.end() || j->first < i->first) {
        mpz_class v = j->second * fy;
        r.terms_.emplace_back(j->first, subtract ? mpz_class(-v) : v);
        ++j;
      } else {
        mpz_class v = i->second * fx;
        if (subtract) v -= j->second * fy;
        else v += j->second * fy;
        r.terms_.emplace_back(i->first, std::move(v));
        ++i, ++j;
      }
    }
    r.normalize();
    return r;
  }

  CycloNumber scaled(const mpz_class& num, const mpz_class& den) const {
    CycloNumber r = *this;
    for (auto& t : r.terms_) t.second *= num;
    r.den_ *= den;
    r.normalize();
    return r;
  }

  bool small() const {
    for (const auto& t : terms_)
      if (mpz_sizeinbase(t.second.get_mpz_t(), 2) > 31) return false;
    return true;
  }

  void normalize() {
    std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
    if (terms_.empty()) {
      den_ = 1;
      return;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
      if (g == 1) return;
    }
    den_ /= g;
    for (auto& t : terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
  }

  const detail::OrderInfo* info_;
  std::vector<Term> terms_;
  mpz_class den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const CycloNumber& x) { return os << x.to_string(); }

/// A rational number taken modulo 1; encodes exp(2 pi i value).
class RationalPhase {
 public:
  RationalPhase() = default;
  RationalPhase(const mpq_class& v) : value_(v) {  // NOLINT(google-explicit-constructor)
    value_.canonicalize();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    value_ -= fl;
  }
  RationalPhase(long num, long den) : RationalPhase(mpq_class(num, den)) {}

  const mpq_class& value() const noexcept { return value_; }
  friend bool operator==(const RationalPhase& a, const RationalPhase& b) { return a.value_ == b.value_; }
  std::string to_string() const { return value_.get_str(); }

 private:
  mpq_class value_ = 0;
};

/// sin(k pi / h) / sin(pi / h) as the geometric sum sum_{j<k} q^(k-1-2j), q = zeta_{2h}.
inline CycloNumber sin_ratio(int k, int h) {
  if (h < 2 || k < 0 || k > 2 * h) throw Error("sin_ratio requires h >= 2 and 0 <= k <= 2h");
  const int n = 2 * h;
  std::vector<mpq_class> c(n);
  for (int j = 0; j < k; ++j) c[(((k - 1 - 2 * j) % n) + n) % n] += 1;
  return CycloNumber::from_coeffs(n, c);
}

/// 2 cos(pi m / h) = zeta_{2h}^m + zeta_{2h}^{-m}.
inline CycloNumber two_cos(int m, int h) { return CycloNumber::zeta(2 * h, m) + CycloNumber::zeta(2 * h, -m); }

/// Decimal approximation of a complex number with a fixed count of
/// fractional digits. The absolute error of each part is below 10^-digits.
struct ComplexDecimal {
  int digits = 0;
  std::string real;
  std::string imag;
  std::complex<double> approx;
};

namespace detail {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec), mpfr_set_zero(v_, 1); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

inline std::string mpfr_fixed(mpfr_ptr v, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", digits, v);
  std::string s(buf);
  mpfr_free_str(buf);
  // "-0.000" reads better as "0.000"
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

}  // namespace detail

inline ComplexDecimal embed_complex(const CycloNumber& x, int digits) {
  if (digits < 1) throw Error("embed_complex requires digits >= 1");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  detail::MpfrValue pi(prec), re(prec), im(prec), angle(prec), c(prec), s(prec), q(prec), tmp(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  for (const auto& [k, num] : x.terms()) {
    mpq_class coef(num, x.denominator());
    coef.canonicalize();
    mpfr_set_q(q.get(), coef.get_mpq_t(), MPFR_RNDN);
    mpfr_mul_ui(angle.get(), pi.get(), 2UL * static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), static_cast<unsigned long>(x.order()), MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), q.get(), c.get(), MPFR_RNDN);
    mpfr_add(re.get(), re.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), q.get(), s.get(), MPFR_RNDN);
    mpfr_add(im.get(), im.get(), tmp.get(), MPFR_RNDN);
  }
  ComplexDecimal out;
  out.digits = digits;
  out.real = detail::mpfr_fixed(re.get(), digits);
  out.imag = detail::mpfr_fixed(im.get(), digits);
  out.approx = {mpfr_get_d(re.get(), MPFR_RNDN), mpfr_get_d(im.get(), MPFR_RNDN)};
  return out;
}

}  // namespace fuselab
