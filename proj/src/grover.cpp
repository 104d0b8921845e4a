#include "quc/grover.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace quc {

namespace {

void validate_graph(const Graph& g) {
  if (g.n <= 0 || static_cast<int>(g.adj.size()) != g.n)
    throw std::invalid_argument("graph: empty or malformed");
  for (int u = 0; u < g.n; ++u) {
    const auto& nb = g.adj[u];
    if (nb.empty()) throw std::invalid_argument("graph: isolated vertex");
    if (!std::is_sorted(nb.begin(), nb.end()) ||
        std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("graph: adjacency lists must be sorted and duplicate-free");
    for (int v : nb) {
      if (v < 0 || v >= g.n || v == u)
        throw std::invalid_argument("graph: loop or out-of-range neighbour");
      if (!std::binary_search(g.adj[v].begin(), g.adj[v].end(), u))
        throw std::invalid_argument("graph: adjacency not symmetric");
    }
  }
  if (!g.is_connected()) throw std::invalid_argument("graph: not connected");
}

}  // namespace

Graph Graph::circulant(long n, const ResidueSet& connection) {
  if (n < 2) throw std::invalid_argument("circulant: n must be >= 2");
  if (connection.modulus != n)
    throw std::invalid_argument("circulant: connection set modulus mismatch");
  Graph g;
  g.n = static_cast<int>(n);
  g.adj.resize(g.n);
  for (int u = 0; u < g.n; ++u) {
    for (long r : connection.elements) g.adj[u].push_back(static_cast<int>((u + r) % n));
    std::sort(g.adj[u].begin(), g.adj[u].end());
  }
  return g;
}

Graph Graph::from_spec(const GraphSpec& spec) { return circulant(spec.n, spec.vn); }

long Graph::edge_count() const {
  long deg_sum = 0;
  for (const auto& nb : adj) deg_sum += static_cast<long>(nb.size());
  return deg_sum / 2;
}

bool Graph::is_connected() const {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        queue.push_back(v);
      }
  }
  return count == n;
}

bool Graph::is_bipartite() const {
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

ArcSpace ArcSpace::build(const Graph& g) {
  ArcSpace space;
  space.offset.resize(g.n + 1, 0);
  for (int o = 0; o < g.n; ++o) {
    space.offset[o] = static_cast<int>(space.arcs.size());
    for (int t : g.adj[o]) space.arcs.emplace_back(o, t);
  }
  space.offset[g.n] = static_cast<int>(space.arcs.size());
  space.inverse.resize(space.arcs.size());
  for (size_t a = 0; a < space.arcs.size(); ++a)
    space.inverse[a] = space.index(space.arcs[a].second, space.arcs[a].first, g);
  return space;
}

int ArcSpace::index(int origin, int terminus, const Graph& g) const {
  const auto& nb = g.adj[origin];
  auto it = std::lower_bound(nb.begin(), nb.end(), terminus);
  if (it == nb.end() || *it != terminus)
    throw std::invalid_argument("ArcSpace: no such arc");
  return offset[origin] + static_cast<int>(it - nb.begin());
}

WalkOperators build_operators(const Graph& g) {
  validate_graph(g);
  WalkOperators ops;
  ops.graph = g;
  ops.arcs = ArcSpace::build(g);
  const int A = static_cast<int>(ops.arcs.arcs.size());
  const int V = g.n;

  ops.N = Eigen::MatrixXd::Zero(V, A);
  for (int a = 0; a < A; ++a) {
    int t = ops.arcs.arcs[a].second;
    ops.N(t, a) = 1.0 / std::sqrt(static_cast<double>(g.adj[t].size()));
  }

  // C = 2 N^T N - I is block diagonal over arcs sharing a terminus.
  ops.C = Eigen::MatrixXd::Zero(A, A);
  std::vector<std::vector<int>> in_arcs(V);
  for (int a = 0; a < A; ++a) in_arcs[ops.arcs.arcs[a].second].push_back(a);
  for (int v = 0; v < V; ++v) {
    const double w = 2.0 / static_cast<double>(g.adj[v].size());
    for (int a : in_arcs[v])
      for (int b : in_arcs[v]) ops.C(a, b) = w - (a == b ? 1.0 : 0.0);
  }

  ops.R = Eigen::MatrixXd::Zero(A, A);
  for (int a = 0; a < A; ++a) ops.R(a, ops.arcs.inverse[a]) = 1.0;

  // U = R C; since R is the arc-inversion permutation this is a row gather.
  ops.U = Eigen::MatrixXd::Zero(A, A);
  for (int a = 0; a < A; ++a) ops.U.row(a) = ops.C.row(ops.arcs.inverse[a]);

  // P = N R N^T: each arc b contributes at (o(b), t(b)).
  ops.P = Eigen::MatrixXd::Zero(V, V);
  for (int b = 0; b < A; ++b) {
    auto [o, t] = ops.arcs.arcs[b];
    ops.P(o, t) = 1.0 / std::sqrt(static_cast<double>(g.adj[o].size()) *
                                  static_cast<double>(g.adj[t].size()));
  }

  ops.b1 = g.edge_count() - V + 1;
  ops.bipartite = g.is_bipartite();
  return ops;
}

State vertex_state(const WalkOperators& ops, int u) {
  if (u < 0 || u >= ops.graph.n) throw std::invalid_argument("vertex_state: no such vertex");
  State s;
  s.amp = Eigen::VectorXcd::Zero(ops.arcs.arcs.size());
  const double w = 1.0 / std::sqrt(static_cast<double>(ops.graph.adj[u].size()));
  for (int v : ops.graph.adj[u]) s.amp(ops.arcs.index(v, u, ops.graph)) = w;
  return s;
}

State evolve(const WalkOperators& ops, const State& s, long t) {
  if (t < 0) throw std::invalid_argument("evolve: t must be non-negative");
  Eigen::VectorXd re = s.amp.real(), im = s.amp.imag();
  for (long step = 0; step < t; ++step) {
    re = (ops.U * re).eval();
    im = (ops.U * im).eval();
  }
  State out;
  out.amp = re.cast<std::complex<double>>() +
            std::complex<double>(0, 1) * im.cast<std::complex<double>>();
  return out;
}

std::vector<std::complex<double>> direct_u_spectrum(const WalkOperators& ops) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(ops.U, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("direct_u_spectrum: eigensolver failed");
  std::vector<std::complex<double>> values(solver.eigenvalues().data(),
                                           solver.eigenvalues().data() + solver.eigenvalues().size());
  for (const auto& v : values)
    if (std::abs(std::abs(v) - 1.0) > 1e-8)
      throw std::runtime_error("direct_u_spectrum: eigenvalue off the unit circle");
  return values;
}

MappedSpectrum mapped_u_spectrum(SpectrumTable& table, long b1, bool bipartite) {
  MappedSpectrum out;
  out.all_exact = true;
  auto push_value = [&](std::complex<double> z) {
    for (const auto& w : out.values)
      if (std::abs(w - z) <= 1e-9) return;
    out.values.push_back(z);
  };
  auto push_angle = [&](const AngleRational& angle) {
    if (std::find(out.angles.begin(), out.angles.end(), angle) == out.angles.end())
      out.angles.push_back(angle);
  };

  for (int i = 0; i < table.distinct_count(); ++i) {
    double mu = table.distinct_mu_float[i];
    if (std::abs(mu) > 1.0 + 1e-9)
      throw std::invalid_argument("mapped_u_spectrum: mu outside [-1, 1]");
    const auto& angle = table.resolve_angle(i);
    double theta;
    if (angle) {
      theta = angle->radians();
      push_angle(*angle);
    } else {
      theta = std::acos(std::clamp(mu, -1.0, 1.0));
      out.all_exact = false;
    }
    push_value({std::cos(theta), std::sin(theta)});
    push_value({std::cos(theta), -std::sin(theta)});
  }
  if (b1 >= 1) {
    push_value({1.0, 0.0});
    push_angle(AngleRational{0, 1});
  }
  if (b1 - 1 + (bipartite ? 1 : 0) >= 1) {
    push_value({-1.0, 0.0});
    push_angle(AngleRational{1, 1});
  }
  return out;
}

std::optional<std::pair<long, std::complex<double>>> pst_numeric(
    const WalkOperators& ops, int u, int v, long tau_max) {
  if (u == v) throw std::invalid_argument("pst_numeric: u and v must differ");
  if (tau_max < 1) throw std::invalid_argument("pst_numeric: tau_max must be >= 1");
  State psi = vertex_state(ops, u);
  const State target = vertex_state(ops, v);
  for (long tau = 1; tau <= tau_max; ++tau) {
    psi = evolve(ops, psi, 1);
    std::complex<double> gamma = target.amp.dot(psi.amp);
    if (std::abs(gamma) >= 1.0 - 1e-8) return std::make_pair(tau, gamma);
  }
  return std::nullopt;
}

SparseOperators build_sparse_operators(const Graph& g) {
  validate_graph(g);
  ArcSpace arcs = ArcSpace::build(g);
  const int A = static_cast<int>(arcs.arcs.size());
  const int V = g.n;
  SparseOperators ops;
  ops.arc_count = A;

  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> tn, tr, tc;
  tn.reserve(A);
  tr.reserve(A);
  for (int a = 0; a < A; ++a) {
    int t = arcs.arcs[a].second;
    tn.emplace_back(t, a, 1.0 / std::sqrt(static_cast<double>(g.adj[t].size())));
    tr.emplace_back(a, arcs.inverse[a], 1.0);
  }
  std::vector<std::vector<int>> in_arcs(V);
  for (int a = 0; a < A; ++a) in_arcs[arcs.arcs[a].second].push_back(a);
  for (int v = 0; v < V; ++v) {
    const double w = 2.0 / static_cast<double>(g.adj[v].size());
    for (int a : in_arcs[v])
      for (int b : in_arcs[v]) {
        double val = w - (a == b ? 1.0 : 0.0);
        if (val != 0.0) tc.emplace_back(a, b, val);
      }
  }
  ops.N.resize(V, A);
  ops.N.setFromTriplets(tn.begin(), tn.end());
  ops.R.resize(A, A);
  ops.R.setFromTriplets(tr.begin(), tr.end());
  ops.C.resize(A, A);
  ops.C.setFromTriplets(tc.begin(), tc.end());
  ops.U = ops.R * ops.C;
  ops.U.makeCompressed();
  ops.b1 = g.edge_count() - V + 1;
  ops.bipartite = g.is_bipartite();
  return ops;
}

std::optional<std::tuple<long, int, std::complex<double>>> pst_numeric_scan(
    const SparseOperators& ops, const Graph& g, int u, long tau_max) {
  Eigen::VectorXd psi = Eigen::VectorXd::Zero(ops.arc_count);
  {
    ArcSpace arcs = ArcSpace::build(g);
    const double w = 1.0 / std::sqrt(static_cast<double>(g.adj[u].size()));
    for (int v : g.adj[u]) psi(arcs.index(v, u, g)) = w;
  }
  for (long tau = 1; tau <= tau_max; ++tau) {
    psi = ops.U * psi;
    Eigen::VectorXd overlaps = ops.N * psi;  // <vertex_state(v), psi> per v
    for (int v = 0; v < g.n; ++v) {
      if (v == u) continue;
      if (std::abs(overlaps(v)) >= 1.0 - 1e-8)
        return std::make_tuple(tau, v, std::complex<double>(overlaps(v), 0.0));
    }
  }
  return std::nullopt;
}

}  // namespace quc
