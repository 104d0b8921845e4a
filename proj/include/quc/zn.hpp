#pragma once

#include <vector>

namespace quc {

struct PrimePower {
  long p = 0;      // prime
  int t = 0;       // exponent >= 1
  long value = 0;  // p^t

  bool operator==(const PrimePower&) const = default;
};

// Prime factorization of n >= 2, primes strictly increasing.
struct Factorization {
  long n = 0;
  std::vector<PrimePower> factors;
};

// A set of residues modulo `modulus`, stored sorted for canonical equality.
struct ResidueSet {
  long modulus = 0;
  std::vector<long> elements;  // sorted, all in [0, modulus)

  bool contains(long r) const;
  long size() const { return static_cast<long>(elements.size()); }
  bool operator==(const ResidueSet&) const = default;
};

bool is_prime(long n);
long mod_pow(long base, long exp, long mod);

Factorization factorize(long n);

// Z_n^* = { a : gcd(a, n) = 1 }
ResidueSet unit_group(long n);

// Q_n = { r^2 mod n : r a unit }
ResidueSet quadratic_units(long n);

// V_n = Q_n ∪ (-Q_n); symmetric, 0-free, always contains 1.
ResidueSet connection_set(long n);

// Legendre symbol (a/p) for an odd prime p.
int legendre(long a, long p);

// Whether -1 is a square of a unit modulo p^t.
bool minus_one_in_q(long p, int t);

// Inverse of a modulo m for coprime a, m.
long mod_inverse(long a, long m);

// Components (a mod p_i^{t_i}) in factor order.
std::vector<long> crt_components(const Factorization& fact, long a);

}  // namespace quc
