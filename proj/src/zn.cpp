#include "quc/zn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace quc {

bool ResidueSet::contains(long r) const {
  return std::binary_search(elements.begin(), elements.end(), r);
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

long mod_pow(long base, long exp, long mod) {
  if (mod <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
  long result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<long>((__int128)result * base % mod);
    base = static_cast<long>((__int128)base * base % mod);
    exp >>= 1;
  }
  return result;
}

Factorization factorize(long n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  Factorization fact;
  fact.n = n;
  long m = n;
  for (long p = 2; p * p <= m; p == 2 ? p = 3 : p += 2) {
    if (m % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (m % p == 0) {
      m /= p;
      pp.t += 1;
      pp.value *= p;
    }
    fact.factors.push_back(pp);
  }
  if (m > 1) fact.factors.push_back(PrimePower{m, 1, m});
  return fact;
}

ResidueSet unit_group(long n) {
  if (n < 2) throw std::invalid_argument("unit_group: n must be >= 2");
  ResidueSet set{n, {}};
  for (long a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) set.elements.push_back(a);
  return set;
}

ResidueSet quadratic_units(long n) {
  if (n < 2) throw std::invalid_argument("quadratic_units: n must be >= 2");
  ResidueSet set{n, {}};
  for (long r = 1; r < n; ++r) {
    if (std::gcd(r, n) != 1) continue;
    long sq = static_cast<long>((__int128)r * r % n);
    if (!std::binary_search(set.elements.begin(), set.elements.end(), sq)) {
      set.elements.insert(
          std::upper_bound(set.elements.begin(), set.elements.end(), sq), sq);
    }
  }
  return set;
}

ResidueSet connection_set(long n) {
  ResidueSet q = quadratic_units(n);
  ResidueSet set{n, q.elements};
  for (long r : q.elements) {
    long neg = (n - r) % n;
    if (!std::binary_search(set.elements.begin(), set.elements.end(), neg)) {
      set.elements.insert(
          std::upper_bound(set.elements.begin(), set.elements.end(), neg), neg);
    }
  }
  return set;
}

int legendre(long a, long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("legendre: p must be an odd prime");
  long r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  long e = mod_pow(r, (p - 1) / 2, p);  // Euler's criterion
  return e == 1 ? 1 : -1;
}

bool minus_one_in_q(long p, int t) {
  if (!is_prime(p) || t < 1) throw std::invalid_argument("minus_one_in_q: need prime p, t >= 1");
  long pt = 1;
  for (int i = 0; i < t; ++i) pt *= p;
  if (pt == 2) return true;  // -1 = 1 in Z_2
  return quadratic_units(pt).contains(pt - 1);
}

long mod_inverse(long a, long m) {
  long r0 = m, r1 = ((a % m) + m) % m;
  long s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return ((s0 % m) + m) % m;
}

std::vector<long> crt_components(const Factorization& fact, long a) {
  if (a < 0 || a >= fact.n) throw std::invalid_argument("crt_components: residue out of range");
  std::vector<long> parts;
  parts.reserve(fact.factors.size());
  for (const auto& pp : fact.factors) parts.push_back(a % pp.value);
  return parts;
}

}  // namespace quc
