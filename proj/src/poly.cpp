#include "quc/poly.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "quc/zn.hpp"

namespace quc {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::constant(const Rational& c) {
  return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::power_minus_one(int m) {
  std::vector<Rational> v(m + 1);
  v[0] = -1;
  v[m] = 1;
  return RationalPoly(std::move(v));
}

bool RationalPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

bool RationalPoly::has_integer_coeffs() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

bool RationalPoly::is_palindromic() const {
  const size_t n = c_.size();
  for (size_t i = 0; i < n; ++i)
    if (c_[i] != c_[n - 1 - i]) return false;
  return true;
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

RationalPoly RationalPoly::operator+(const RationalPoly& rhs) const {
  std::vector<Rational> v(std::max(c_.size(), rhs.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < c_.size()) v[i] += c_[i];
    if (i < rhs.c_.size()) v[i] += rhs.c_[i];
  }
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-(const RationalPoly& rhs) const {
  std::vector<Rational> v(std::max(c_.size(), rhs.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < c_.size()) v[i] += c_[i];
    if (i < rhs.c_.size()) v[i] -= rhs.c_[i];
  }
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator*(const RationalPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return RationalPoly();
  std::vector<Rational> v(c_.size() + rhs.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      v[i + j] += c_[i] * rhs.c_[j];
    }
  }
  return RationalPoly(std::move(v));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  const int dd = divisor.degree();
  std::vector<Rational> rem = c_;
  if (degree() < dd) return {RationalPoly(), *this};
  std::vector<Rational> quot(degree() - dd + 1);
  const Rational& lead = divisor.c_.back();
  for (int k = degree() - dd; k >= 0; --k) {
    Rational q = rem[k + dd] / lead;
    if (q == 0) continue;
    quot[k] = q;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= q * divisor.c_[i];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

std::optional<RationalPoly> RationalPoly::divide_exact(const RationalPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i > 0) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

long euler_phi(long m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  if (m == 1) return 1;
  long phi = 1;
  for (const auto& pp : factorize(m).factors) {
    long pe = pp.value;
    phi *= pe - pe / pp.p;
  }
  return phi;
}

const RationalPoly& cyclotomic_poly(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be >= 1");
  static std::map<int, RationalPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d, computed bottom-up so every
  // proper divisor is already cached.
  std::function<const RationalPoly&(int)> get = [&](int k) -> const RationalPoly& {
    auto hit = cache.find(k);
    if (hit != cache.end()) return hit->second;
    RationalPoly num = RationalPoly::power_minus_one(k);
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      auto q = num.divide_exact(get(d));
      if (!q) throw std::logic_error("cyclotomic_poly: inexact division");
      num = std::move(*q);
    }
    return cache.emplace(k, std::move(num)).first->second;
  };
  return get(m);
}

RationalPoly real_part_transform(const RationalPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("real_part_transform: f must be monic");
  const int d = f.degree();
  // (2x)^d f((x + 1/x)/2) = sum_k f_k 2^{d-k} x^{d-k} (x^2+1)^k
  RationalPoly x2p1(std::vector<Rational>{1, 0, 1});
  RationalPoly pw = RationalPoly::constant(1);
  RationalPoly g;
  Rational two_pow(1);
  std::vector<RationalPoly> powers(d + 1);
  for (int k = 0; k <= d; ++k) {
    powers[k] = pw;
    pw = pw * x2p1;
  }
  for (int k = d; k >= 0; --k) {
    if (f.coeff(k) != 0)
      g = g + RationalPoly::monomial(d - k, f.coeff(k) * two_pow) * powers[k];
    two_pow *= 2;
  }
  return g;
}

std::optional<std::vector<int>> kronecker_cyclotomic_test(const RationalPoly& g) {
  if (!g.is_monic()) throw std::invalid_argument("kronecker_cyclotomic_test: g must be monic");
  if (!g.has_integer_coeffs()) return std::nullopt;
  RationalPoly rest = g;
  std::vector<int> indices;
  // phi(m) >= sqrt(m/2), so any cyclotomic factor of the remaining degree-d
  // part has m <= 2d^2 + 2.
  for (int m = 1; rest.degree() > 0; ++m) {
    int d = rest.degree();
    if (static_cast<long>(m) > 2L * d * d + 2) break;
    if (euler_phi(m) > d) continue;
    const RationalPoly& phi = cyclotomic_poly(m);
    while (true) {
      auto q = rest.divide_exact(phi);
      if (!q) break;
      rest = std::move(*q);
      indices.push_back(m);
    }
  }
  if (rest == RationalPoly::constant(1)) return indices;
  return std::nullopt;
}

}  // namespace quc
