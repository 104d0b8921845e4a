#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "quc/spectra.hpp"

namespace quc {

// Finite simple undirected graph; adjacency lists sorted.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  static Graph circulant(long n, const ResidueSet& connection);
  static Graph from_spec(const GraphSpec& spec);

  long edge_count() const;
  long arc_count() const { return 2 * edge_count(); }
  bool is_connected() const;
  bool is_bipartite() const;
};

// Symmetric arcs in lexicographic (origin, terminus) order.
struct ArcSpace {
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> inverse;     // involution without fixed points
  std::vector<int> offset;      // offset[v] = first arc with origin v

  static ArcSpace build(const Graph& g);
  int index(int origin, int terminus, const Graph& g) const;
};

// Grover-walk matrices. Every entry of N, R, C, U, P is real, so they are
// held as real dense matrices; states remain complex vectors.
struct WalkOperators {
  Graph graph;
  ArcSpace arcs;
  Eigen::MatrixXd N;  // vertices x arcs, N(x,a) = 1/sqrt(deg x) when x = t(a)
  Eigen::MatrixXd R;  // shift, R(a,b) = [a = b^{-1}]
  Eigen::MatrixXd C;  // coin, 2 N^T N - I
  Eigen::MatrixXd U;  // time evolution R C
  Eigen::MatrixXd P;  // discriminant N R N^T
  long b1 = 0;        // |E| - |V| + 1
  bool bipartite = false;
};

WalkOperators build_operators(const Graph& g);

struct State {
  Eigen::VectorXcd amp;  // unit norm over arcs
};

State vertex_state(const WalkOperators& ops, int u);
State evolve(const WalkOperators& ops, const State& s, long t);

// All eigenvalues of U from a dense numeric eigensolver; checked to lie on
// the unit circle within 1e-8.
std::vector<std::complex<double>> direct_u_spectrum(const WalkOperators& ops);

// Distinct U-eigenvalues predicted by the spectral mapping: e^{+-i arccos mu}
// over the discriminant spectrum, plus 1 when b1 >= 1 and -1 when
// b1 - 1 + [bipartite] >= 1. Angles are exact where the table recognized mu.
struct MappedSpectrum {
  std::vector<std::complex<double>> values;  // distinct
  std::vector<AngleRational> angles;         // distinct, only recognized ones
  bool all_exact = false;                    // every distinct mu recognized
};

MappedSpectrum mapped_u_spectrum(SpectrumTable& table, long b1, bool bipartite);

// Smallest tau <= tau_max with |<vertex_state(v), U^tau vertex_state(u)>|
// >= 1 - 1e-8; the inner product is returned as gamma.
std::optional<std::pair<long, std::complex<double>>> pst_numeric(
    const WalkOperators& ops, int u, int v, long tau_max);

// Sparse mirror of R, C, U (identical entries) for structure checks and
// long evolutions on graphs too large for comfortable dense storage.
struct SparseOperators {
  Eigen::SparseMatrix<double> N, R, C, U;
  long b1 = 0;
  bool bipartite = false;
  long arc_count = 0;
};

SparseOperators build_sparse_operators(const Graph& g);

// Same search as pst_numeric but scanning every target vertex at once;
// returns (tau, vertex, gamma) for the first arrival at any v != u.
std::optional<std::tuple<long, int, std::complex<double>>> pst_numeric_scan(
    const SparseOperators& ops, const Graph& g, int u, long tau_max);

}  // namespace quc
