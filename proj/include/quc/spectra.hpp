#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quc/cyclo.hpp"
#include "quc/zn.hpp"

namespace quc {

// Raised when two independent computation routes disagree; signals an
// implementation bug, never bad input.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The quadratic unitary Cayley graph Cay(Z_n, V_n), V_n = Q_n ∪ (-Q_n).
struct GraphSpec {
  long n = 0;
  Factorization fact;
  ResidueSet vn;
  long degree = 0;
  int r_split = 0;  // prime-power factors whose Q contains -1

  static GraphSpec make(long n);
};

struct SpectrumRow {
  long a = 0;
  CycNumber lambda;  // adjacency eigenvalue, exact
  CycNumber mu;      // lambda / degree, exact
  double mu_float = 0.0;
};

// Eigenvalues indexed by a in Z_n, plus the deduplicated mu values with
// lazily resolved angle recognition.
struct SpectrumTable {
  GraphSpec spec;
  std::vector<SpectrumRow> rows;
  std::vector<int> distinct_index;  // row a -> index into distinct_mu
  std::vector<CycNumber> distinct_mu;
  std::vector<double> distinct_mu_float;

  int distinct_count() const { return static_cast<int>(distinct_mu.size()); }
  // Recognized angle of distinct value i, memoized; nullopt = not the real
  // part of a root of unity within the search bound.
  const std::optional<AngleRational>& resolve_angle(int i);
  void resolve_all_angles();
  std::optional<AngleRational> angle_of_row(long a);  // resolves on demand

 private:
  struct AngleSlot {
    bool evaluated = false;
    std::optional<AngleRational> angle;
  };
  std::vector<AngleSlot> slots_;
  friend SpectrumTable discriminant_spectrum(const GraphSpec&);
};

// Unscaled quadratic Gauss sum sum_k zeta_p^{-k^2} = sqrt(p) * G_p(1);
// evaluates to sqrt(p) for p = 1 mod 4 and -i*sqrt(p) for p = 3 mod 4.
CycNumber gauss_sum_scaled(long p);

// chi_a(Q_{p^t}) by the closed-form branches (Gauss sums and Legendre
// symbols); must agree with the defining sum over Q_{p^t}.
CycNumber chi_prime_power(long p, int t, long a);

// lambda_a as the defining character sum over V_n.
CycNumber lambda_charsum(const GraphSpec& spec, long a);

// lambda_a assembled from chi_prime_power over the CRT components.
CycNumber lambda_closed(const GraphSpec& spec, long a);

// Full table; cross-checks lambda_closed against lambda_charsum for every a
// and throws ConsistencyError on any mismatch.
SpectrumTable discriminant_spectrum(const GraphSpec& spec);

// Columns: a, lambda_float_re, mu_float, angle_p, angle_q.
void write_spectrum_csv(std::ostream& os, SpectrumTable& table);

}  // namespace quc
