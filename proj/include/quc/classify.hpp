#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quc/grover.hpp"
#include "quc/spectra.hpp"

namespace quc {

struct MuEntry {
  double mu_float = 0.0;
  std::optional<AngleRational> angle;
};

struct PstInfo {
  long tau = 0;
  int partner = 0;
  std::optional<std::complex<double>> gamma;  // from simulation when available
};

struct ClassificationReport {
  long n = 0;
  long degree = 0;
  std::vector<long> connection_set;
  bool bipartite = false;
  long b1 = 0;
  std::vector<MuEntry> mu;  // distinct, sorted by mu_float descending
  bool periodic = false;
  std::optional<long> period;
  bool paper_periodic = false;
  std::optional<long> paper_period;  // nullopt encodes the table's infinity
  std::optional<PstInfo> pst;
  bool paper_pst = false;
  bool period_matches_paper = false;
  bool pst_matches_paper = false;
  std::optional<bool> simulation_confirms;  // nullopt when simulation skipped
};

struct PeriodicityWitness {
  struct Item {
    double mu_float = 0.0;
    std::optional<AngleRational> angle;
  };
  bool periodic = false;
  std::vector<Item> checked;  // stops at the first unrecognized mu
  int failing_index = -1;     // into checked; -1 when periodic
};

// Lemma-style test: periodic iff every distinct discriminant eigenvalue is
// the real part of a root of unity. Short-circuits at the first failure.
PeriodicityWitness is_periodic(SpectrumTable& table);

// lcm of the orders of the distinct mapped U-eigenvalues; requires every
// distinct mu recognized (is_periodic true).
long compute_period(SpectrumTable& table, long b1, bool bipartite);

// The published period table; nullopt encodes infinity.
std::optional<long> paper_period(long n);
bool paper_periodic(long n);

// Exact Chebyshev decision for perfect state transfer from vertex 0; the
// partner is n/2. nullopt when n is odd or no tau <= period works.
std::optional<std::pair<long, int>> pst_decide(SpectrumTable& table, long period, long n);
bool paper_pst(long n);

struct ClassifyOptions {
  bool simulate = true;
  long sim_limit_n = 300;
  long sim_limit_arcs = 8000;  // dense-matrix memory guard
};

ClassificationReport classify_report(long n, const ClassifyOptions& options = {});

nlohmann::json report_to_json(const ClassificationReport& report);

}  // namespace quc
