#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "quc/poly.hpp"

namespace quc {

// Exact element of the cyclotomic field Q(zeta_n), zeta_n = e^{2*pi*i/n}.
// Coefficients are kept canonically reduced modulo Phi_n, so equality is a
// coefficient comparison and an element is rational iff its degree is zero.
class CycNumber {
 public:
  CycNumber() = default;  // 0 in Q(zeta_1) = Q

  static CycNumber zero(long n);
  static CycNumber from_rational(long n, const Rational& r);
  static CycNumber root_power(long n, long j);  // zeta_n^j

  long modulus() const { return n_; }
  // Reduced coefficients of 1, zeta, zeta^2, ...; trailing zeros trimmed.
  const std::vector<Rational>& coeffs() const { return c_; }

  CycNumber operator+(const CycNumber& rhs) const;
  CycNumber operator-(const CycNumber& rhs) const;
  CycNumber operator*(const CycNumber& rhs) const;
  CycNumber operator-() const;
  CycNumber scaled(const Rational& s) const;
  bool operator==(const CycNumber& rhs) const;

  CycNumber conjugate() const;                 // zeta^j -> zeta^{n-j}
  CycNumber promoted(long m) const;            // embed into Q(zeta_m), n | m
  bool is_zero() const { return c_.empty(); }
  bool is_real() const;
  bool is_rational() const { return c_.size() <= 1; }
  std::optional<Rational> as_rational() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  long n_ = 1;
  std::vector<Rational> c_;  // degree < phi(n_) after reduction

  CycNumber(long n, std::vector<Rational> raw);  // reduces modulo Phi_n
  void reduce();
};

// The angle p*pi/q in lowest terms, 0 <= p <= q. Stands for the cosine
// mu = cos(p*pi/q) or the unit e^{+-i*p*pi/q} depending on context.
struct AngleRational {
  long p = 0;
  long q = 1;
  bool operator==(const AngleRational&) const = default;
  double cosine() const;
  double radians() const;
};

// Chebyshev polynomial of the first kind, iteratively:
// T_0 = 1, T_1 = x, T_k = 2x T_{k-1} - T_{k-2}.
Rational chebyshev_t(long k, const Rational& x);
CycNumber chebyshev_t(long k, const CycNumber& x);

// Multiplicative order of e^{i*pi*p/q} for reduced (p, q).
long unit_order(const AngleRational& angle);

// Finds reduced (p, q) with mu = cos(p*pi/q), verified exactly through
// T_q(mu) = (-1)^p. Candidates come from the continued fraction of
// arccos(mu_float)/pi, with an exhaustive ascending sweep of q <= 4*n as
// fallback; nullopt means mu is not the real part of any root of unity
// with denominator within that bound.
std::optional<AngleRational> recognize_cos_angle(const CycNumber& mu_exact,
                                                 double mu_float, long n_context);

}  // namespace quc
