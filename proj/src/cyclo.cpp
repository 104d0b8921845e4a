#include "quc/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCandidateTol = 1e-9;  // float tolerance, candidate generation only
constexpr double kAngleGuard = 1e-6;    // separates same-parity neighbours up to q ~ 4000

const std::vector<Rational>& phi_coeffs(long n) {
  static std::map<long, std::vector<Rational>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, cyclotomic_poly(static_cast<int>(n)).coeffs()).first;
  return it->second;
}

}  // namespace

CycNumber::CycNumber(long n, std::vector<Rational> raw) : n_(n), c_(std::move(raw)) {
  reduce();
}

void CycNumber::reduce() {
  const auto& phi = phi_coeffs(n_);
  const size_t deg = phi.size() - 1;  // = euler_phi(n_)
  for (size_t d = c_.size(); d-- > deg;) {
    if (c_[d] == 0) continue;
    Rational lead = c_[d];
    c_[d] = 0;
    for (size_t i = 0; i < deg; ++i)
      if (phi[i] != 0) c_[d - deg + i] -= lead * phi[i];
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

CycNumber CycNumber::zero(long n) {
  if (n < 1) throw std::invalid_argument("CycNumber: modulus must be positive");
  CycNumber x;
  x.n_ = n;
  return x;
}

CycNumber CycNumber::from_rational(long n, const Rational& r) {
  CycNumber x = zero(n);
  if (r != 0) x.c_.push_back(r);
  return x;
}

CycNumber CycNumber::root_power(long n, long j) {
  if (n < 1) throw std::invalid_argument("CycNumber: modulus must be positive");
  j %= n;
  if (j < 0) j += n;
  std::vector<Rational> raw(j + 1);
  raw[j] = 1;
  return CycNumber(n, std::move(raw));
}

CycNumber CycNumber::operator+(const CycNumber& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("CycNumber: modulus mismatch");
  std::vector<Rational> v(std::max(c_.size(), rhs.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < c_.size()) v[i] += c_[i];
    if (i < rhs.c_.size()) v[i] += rhs.c_[i];
  }
  CycNumber out = zero(n_);
  out.c_ = std::move(v);
  while (!out.c_.empty() && out.c_.back() == 0) out.c_.pop_back();
  return out;
}

CycNumber CycNumber::operator-(const CycNumber& rhs) const { return *this + (-rhs); }

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

CycNumber CycNumber::scaled(const Rational& s) const {
  if (s == 0) return zero(n_);
  CycNumber out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

CycNumber CycNumber::operator*(const CycNumber& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("CycNumber: modulus mismatch");
  if (is_zero() || rhs.is_zero()) return zero(n_);
  std::vector<Rational> acc(n_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      acc[(i + j) % n_] += c_[i] * rhs.c_[j];  // zeta^n = 1
    }
  }
  return CycNumber(n_, std::move(acc));
}

bool CycNumber::operator==(const CycNumber& rhs) const {
  return n_ == rhs.n_ && c_ == rhs.c_;
}

CycNumber CycNumber::conjugate() const {
  std::vector<Rational> raw(n_);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    raw[(n_ - j) % n_] += c_[j];
  }
  return CycNumber(n_, std::move(raw));
}

CycNumber CycNumber::promoted(long m) const {
  if (m % n_ != 0) throw std::invalid_argument("CycNumber: can only promote into a multiple modulus");
  if (m == n_) return *this;
  const long stretch = m / n_;
  std::vector<Rational> raw;
  raw.resize(c_.empty() ? 1 : (c_.size() - 1) * stretch + 1);
  for (size_t j = 0; j < c_.size(); ++j) raw[j * stretch] = c_[j];
  return CycNumber(m, std::move(raw));
}

bool CycNumber::is_real() const { return *this == conjugate(); }

std::optional<Rational> CycNumber::as_rational() const {
  if (c_.empty()) return Rational(0);
  if (c_.size() == 1) return c_[0];
  return std::nullopt;
}

std::complex<double> CycNumber::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double angle = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_);
    acc += c_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string CycNumber::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!first) os << " + ";
    os << c_[j].get_str();
    if (j > 0) os << "*z" << n_ << "^" << j;
    first = false;
  }
  return os.str();
}

double AngleRational::cosine() const { return std::cos(radians()); }
double AngleRational::radians() const {
  return kPi * static_cast<double>(p) / static_cast<double>(q);
}

Rational chebyshev_t(long k, const Rational& x) {
  if (k < 0) throw std::invalid_argument("chebyshev_t: k must be non-negative");
  if (k == 0) return Rational(1);
  Rational prev(1), cur(x);
  for (long i = 2; i <= k; ++i) {
    Rational next = 2 * x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CycNumber chebyshev_t(long k, const CycNumber& x) {
  if (k < 0) throw std::invalid_argument("chebyshev_t: k must be non-negative");
  CycNumber one = CycNumber::from_rational(x.modulus(), 1);
  if (k == 0) return one;
  CycNumber two_x = x.scaled(2);
  CycNumber prev = one, cur = x;
  for (long i = 2; i <= k; ++i) {
    CycNumber next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

long unit_order(const AngleRational& angle) {
  // e^{i*pi*p/q} = zeta_{2q}^p; order 2q/gcd(p, 2q) = q for even p, 2q for odd.
  return angle.p % 2 == 0 ? angle.q : 2 * angle.q;
}

namespace {

// Denominator-cleared Chebyshev series: with mu = M/D (M integral),
// S_k = D^k T_k(mu) follows S_k = 2 M S_{k-1} - D^2 S_{k-2} and stays in
// Z[zeta]. T_q(mu) = +-1 iff S_q = +-D^q.
struct ScaledCheb {
  CycNumber two_m;
  Rational d2;
  CycNumber s_prev, s_cur;  // S_{k-1}, S_k
  Rational dk;              // D^k
  Rational d;
  long k = 1;

  ScaledCheb(const CycNumber& mu, const mpz_class& den)
      : two_m(mu.scaled(Rational(2 * den))),
        d2(Rational(den) * Rational(den)),
        s_prev(CycNumber::from_rational(mu.modulus(), 1)),
        s_cur(mu.scaled(Rational(den))),
        dk(den),
        d(den) {}

  void step() {
    CycNumber next = two_m * s_cur - s_prev.scaled(d2);
    s_prev = std::move(s_cur);
    s_cur = std::move(next);
    dk *= d;
    ++k;
  }

  // 0 if T_k(mu) != +-1, else the sign.
  int pm_one() const {
    auto r = s_cur.as_rational();
    if (!r) return 0;
    if (*r == dk) return 1;
    if (*r == -dk) return -1;
    return 0;
  }
};

mpz_class common_denominator(const CycNumber& mu) {
  mpz_class den(1);
  for (const auto& c : mu.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  return den;
}

// 2*cos(p*pi/q) is always an algebraic integer, and Z[zeta_n] is the full
// ring of integers of Q(zeta_n) with the power basis integral; so if 2*mu has
// a non-integer reduced coefficient, mu cannot be the real part of any root
// of unity.
bool doubled_is_integral(const CycNumber& mu) {
  for (const auto& c : mu.coeffs())
    if (Rational(2 * c).get_den() != 1) return false;
  return true;
}

std::optional<AngleRational> finish_candidate(long p, long q, int sign, double mu_float) {
  if (p < 0 || p > q) return std::nullopt;
  if ((p % 2 == 0 ? 1 : -1) != sign) return std::nullopt;
  if (std::abs(std::cos(kPi * double(p) / double(q)) - mu_float) > kAngleGuard)
    return std::nullopt;
  long g = std::gcd(p, q);
  return AngleRational{p / g, q / g};
}

}  // namespace

std::optional<AngleRational> recognize_cos_angle(const CycNumber& mu_exact,
                                                 double mu_float, long n_context) {
  if (!mu_exact.is_real())
    throw std::invalid_argument("recognize_cos_angle: mu must be real");
  if (std::abs(mu_float) > 1.0 + kCandidateTol)
    throw std::invalid_argument("recognize_cos_angle: |mu| exceeds 1");
  if (!doubled_is_integral(mu_exact)) return std::nullopt;

  const long bound = 4 * n_context;
  const double theta = std::acos(std::clamp(mu_float, -1.0, 1.0)) / kPi;  // in [0, 1]
  const mpz_class den = common_denominator(mu_exact);

  auto verify = [&](long p, long q) -> std::optional<AngleRational> {
    if (q < 1 || q > bound) return std::nullopt;
    ScaledCheb cheb(mu_exact, den);
    while (cheb.k < q) cheb.step();
    int sign = q == 0 ? 0 : cheb.pm_one();
    if (sign == 0) return std::nullopt;
    return finish_candidate(p, q, sign, mu_float);
  };

  // Continued-fraction convergents of theta as candidates (p, q).
  {
    long p_prev = 1, q_prev = 0, p_cur = 0, q_cur = 1;  // convergents of a0 = 0
    double frac = theta;
    // a0 = floor(theta) folded in up front
    long a0 = static_cast<long>(std::floor(frac));
    p_cur = a0;
    frac -= a0;
    for (int iter = 0; iter < 40 && q_cur <= bound; ++iter) {
      if (auto hit = verify(p_cur, q_cur)) return hit;
      if (frac < 1e-14) break;
      frac = 1.0 / frac;
      long a = static_cast<long>(std::floor(frac));
      frac -= a;
      long p_next = a * p_cur + p_prev;
      long q_next = a * q_cur + q_prev;
      p_prev = p_cur;
      q_prev = q_cur;
      p_cur = p_next;
      q_cur = q_next;
    }
  }

  // Exhaustive ascending sweep; the first verifying q gives the minimal
  // denominator.
  ScaledCheb cheb(mu_exact, den);
  for (long q = 1; q <= bound; ++q) {
    if (q > 1) cheb.step();
    int sign = cheb.pm_one();
    if (sign == 0) continue;
    long p_near = std::lround(double(q) * theta);
    for (long p : {p_near, p_near - 1, p_near + 1}) {
      if (auto hit = finish_candidate(p, q, sign, mu_float)) return hit;
    }
  }
  return std::nullopt;
}

}  // namespace quc
