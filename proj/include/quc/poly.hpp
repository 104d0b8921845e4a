#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quc {

using Rational = mpq_class;

// Univariate polynomial over Q, coefficients lowest degree first.
// Invariant: no trailing zero coefficient (the zero polynomial is empty).
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(int degree, const Rational& c = Rational(1));
  // x^m - 1
  static RationalPoly power_minus_one(int m);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  bool has_integer_coeffs() const;
  bool is_palindromic() const;
  Rational coeff(int i) const;  // 0 beyond degree
  const std::vector<Rational>& coeffs() const { return c_; }

  RationalPoly operator+(const RationalPoly& rhs) const;
  RationalPoly operator-(const RationalPoly& rhs) const;
  RationalPoly operator*(const RationalPoly& rhs) const;
  bool operator==(const RationalPoly& rhs) const { return c_ == rhs.c_; }

  // Long division by a nonzero divisor; returns (quotient, remainder).
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const;
  // Quotient when the division is exact, nullopt otherwise.
  std::optional<RationalPoly> divide_exact(const RationalPoly& divisor) const;

  Rational eval(const Rational& x) const;
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
  void trim();
};

long euler_phi(long m);

// Phi_m, monic with integer coefficients, degree phi(m). Cached.
const RationalPoly& cyclotomic_poly(int m);

// g(x) = (2x)^d f((x + 1/x)/2) for monic f of degree d.
// g is monic of degree 2d and palindromic; its roots are the z with
// (z + 1/z)/2 a root of f.
RationalPoly real_part_transform(const RationalPoly& f);

// Decides whether monic g is a product of cyclotomic polynomials by greedy
// exact division, sweeping the index upward. Returns the multiset of indices
// on success.
std::optional<std::vector<int>> kronecker_cyclotomic_test(const RationalPoly& g);

}  // namespace quc
