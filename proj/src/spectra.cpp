#include "quc/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace quc {

GraphSpec GraphSpec::make(long n) {
  if (n < 2) throw std::invalid_argument("GraphSpec: n must be >= 2");
  GraphSpec spec;
  spec.n = n;
  spec.fact = factorize(n);
  spec.vn = connection_set(n);
  spec.degree = spec.vn.size();
  for (const auto& pp : spec.fact.factors)
    if (minus_one_in_q(pp.p, pp.t)) spec.r_split += 1;
  return spec;
}

CycNumber gauss_sum_scaled(long p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("gauss_sum_scaled: p must be an odd prime");
  CycNumber sum = CycNumber::zero(p);
  for (long k = 0; k < p; ++k) {
    long e = static_cast<long>((__int128)k * k % p);
    sum = sum + CycNumber::root_power(p, (p - e) % p);  // zeta^{-k^2}
  }
  return sum;
}

CycNumber chi_prime_power(long p, int t, long a) {
  if (!is_prime(p) || t < 1) throw std::invalid_argument("chi_prime_power: need prime p, t >= 1");
  long pt = 1;
  for (int i = 0; i < t; ++i) pt *= p;
  if (a < 0 || a >= pt) throw std::invalid_argument("chi_prime_power: a out of range");

  if (p == 2) {
    if (t == 1)  // chi_a(Q_2) = cos(a*pi)
      return CycNumber::from_rational(2, a == 0 ? 1 : -1);
    if (t == 2)  // chi_a(Q_4) = e^{-a*pi*i/2}
      return CycNumber::root_power(4, (4 - a) % 4);
    const long eighth = pt / 8;  // 2^{t-3}
    const long quarter = pt / 4;
    if (a % quarter == 0)  // a in {0, 2^{t-2}, 2^{t-1}, 3*2^{t-2}}: 2^{t-3} (-i)^{a/2^{t-2}}
      return CycNumber::root_power(pt, (pt - a) % pt).scaled(eighth);
    if (a % quarter == eighth)  // odd multiples of 2^{t-3}: 2^{t-3} e^{-a*pi*i/2^{t-1}}
      return CycNumber::root_power(pt, pt - a).scaled(eighth);
    return CycNumber::zero(pt);
  }

  const long size_q = (pt / p) * (p - 1) / 2;  // |Q_{p^t}| = p^{t-1}(p-1)/2
  if (a == 0) return CycNumber::from_rational(pt, size_q);
  const long pe = pt / p;  // p^{t-1}
  if (a % pe != 0) return CycNumber::zero(pt);
  // a = m * p^{t-1}, m != 0: (1/2) p^{t-1} [ sqrt(p)(m/p) G_p(1) - 1 ]
  const long m = a / pe;
  CycNumber gauss = gauss_sum_scaled(p).promoted(pt).scaled(legendre(m, p));
  CycNumber bracket = gauss - CycNumber::from_rational(pt, 1);
  return bracket.scaled(Rational(pe) / 2);
}

CycNumber lambda_charsum(const GraphSpec& spec, long a) {
  if (a < 0 || a >= spec.n) throw std::invalid_argument("lambda_charsum: a out of range");
  CycNumber sum = CycNumber::zero(spec.n);
  for (long r : spec.vn.elements) {
    long e = static_cast<long>((__int128)a * r % spec.n);
    sum = sum + CycNumber::root_power(spec.n, (spec.n - e) % spec.n);
  }
  return sum;
}

CycNumber lambda_closed(const GraphSpec& spec, long a) {
  if (a < 0 || a >= spec.n) throw std::invalid_argument("lambda_closed: a out of range");
  CycNumber with_minus_one = CycNumber::from_rational(spec.n, 1);
  CycNumber without = CycNumber::from_rational(spec.n, 1);
  bool any_without = false;
  for (size_t i = 0; i < spec.fact.factors.size(); ++i) {
    const auto& pp = spec.fact.factors[i];
    // The character e^{-2 pi i a x / n} splits across the CRT factors with
    // the dual component a * (n / p^t)^{-1} mod p^t, not the plain residue:
    // a x / n = sum_i a m_i x_i / p_i^{t_i} (mod 1) for m_i n_i = 1 mod p_i^{t_i}.
    long cofactor = spec.n / pp.value;
    long component = static_cast<long>(
        (__int128)(a % pp.value) * mod_inverse(cofactor, pp.value) % pp.value);
    CycNumber chi = chi_prime_power(pp.p, pp.t, component).promoted(spec.n);
    if (minus_one_in_q(pp.p, pp.t)) {
      with_minus_one = with_minus_one * chi;
    } else {
      without = without * chi;
      any_without = true;
    }
  }
  if (!any_without) return with_minus_one;  // r = s
  return with_minus_one * (without + without.conjugate());
}

SpectrumTable discriminant_spectrum(const GraphSpec& spec) {
  SpectrumTable table;
  table.spec = spec;
  table.rows.reserve(spec.n);
  const Rational inv_k = Rational(1) / spec.degree;
  for (long a = 0; a < spec.n; ++a) {
    SpectrumRow row;
    row.a = a;
    row.lambda = lambda_charsum(spec, a);
    CycNumber closed = lambda_closed(spec, a);
    if (!(closed == row.lambda))
      throw ConsistencyError("discriminant_spectrum: closed form disagrees with character sum at n=" +
                             std::to_string(spec.n) + ", a=" + std::to_string(a));
    if (!row.lambda.is_real())
      throw ConsistencyError("discriminant_spectrum: non-real eigenvalue at a=" + std::to_string(a));
    row.mu = row.lambda.scaled(inv_k);
    auto z = row.mu.to_complex();
    if (std::abs(z.imag()) > 1e-9 || std::abs(z.real()) > 1.0 + 1e-9)
      throw ConsistencyError("discriminant_spectrum: mu outside the unit interval at a=" +
                             std::to_string(a));
    row.mu_float = z.real();

    int idx = -1;
    for (int i = 0; i < table.distinct_count(); ++i) {
      if (table.distinct_mu[i] == row.mu) {
        idx = i;
        break;
      }
    }
    if (idx < 0) {
      idx = table.distinct_count();
      table.distinct_mu.push_back(row.mu);
      table.distinct_mu_float.push_back(row.mu_float);
    }
    table.distinct_index.push_back(idx);
    table.rows.push_back(std::move(row));
  }
  table.slots_.resize(table.distinct_count());
  return table;
}

const std::optional<AngleRational>& SpectrumTable::resolve_angle(int i) {
  AngleSlot& slot = slots_.at(i);
  if (!slot.evaluated) {
    slot.angle = recognize_cos_angle(distinct_mu[i], distinct_mu_float[i], spec.n);
    slot.evaluated = true;
  }
  return slot.angle;
}

void SpectrumTable::resolve_all_angles() {
  for (int i = 0; i < distinct_count(); ++i) resolve_angle(i);
}

std::optional<AngleRational> SpectrumTable::angle_of_row(long a) {
  return resolve_angle(distinct_index.at(a));
}

void write_spectrum_csv(std::ostream& os, SpectrumTable& table) {
  os << "a,lambda_float_re,mu_float,angle_p,angle_q\n";
  char buf[64];
  for (auto& row : table.rows) {
    auto angle = table.angle_of_row(row.a);
    double lam = row.lambda.to_complex().real();
    std::snprintf(buf, sizeof buf, "%ld,%.12g,%.12g", row.a, lam, row.mu_float);
    os << buf;
    if (angle)
      os << ',' << angle->p << ',' << angle->q << '\n';
    else
      os << ",,\n";
  }
}

}  // namespace quc
