#include "quc/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace quc {

namespace {

struct Exponents {
  long alpha = 0, beta = 0, gamma = 0;
  bool other = false;  // a prime factor outside {2, 3, 5}
};

Exponents split_235(long n) {
  Exponents e;
  for (const auto& pp : factorize(n).factors) {
    if (pp.p == 2)
      e.alpha = pp.t;
    else if (pp.p == 3)
      e.beta = pp.t;
    else if (pp.p == 5)
      e.gamma = pp.t;
    else
      e.other = true;
  }
  return e;
}

Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& m, long e) {
  if (e < 1) throw std::invalid_argument("matrix_power: exponent must be >= 1");
  if (e == 1) return m;
  if (e % 2 == 0) {
    Eigen::MatrixXd half = matrix_power(m, e / 2);
    return half * half;
  }
  return matrix_power(m, e - 1) * m;
}

}  // namespace

PeriodicityWitness is_periodic(SpectrumTable& table) {
  PeriodicityWitness wit;
  wit.periodic = true;
  for (int i = 0; i < table.distinct_count(); ++i) {
    const auto& angle = table.resolve_angle(i);
    wit.checked.push_back({table.distinct_mu_float[i], angle});
    if (!angle) {
      wit.periodic = false;
      wit.failing_index = static_cast<int>(wit.checked.size()) - 1;
      break;
    }
  }
  return wit;
}

long compute_period(SpectrumTable& table, long b1, bool bipartite) {
  MappedSpectrum mapped = mapped_u_spectrum(table, b1, bipartite);
  if (!mapped.all_exact)
    throw std::invalid_argument("compute_period: spectrum has unrecognized eigenvalues");
  long period = 1;
  for (const auto& angle : mapped.angles) period = std::lcm(period, unit_order(angle));
  return period;
}

bool paper_periodic(long n) {
  if (n < 2) throw std::invalid_argument("paper_periodic: n must be >= 2");
  Exponents e = split_235(n);
  if (e.other) return false;
  if (e.gamma == 0) return true;                 // 2^a 3^b, a + b >= 1
  return e.beta == 0 && e.alpha <= 2;            // 2^d 5^g, g >= 1, d <= 2
}

std::optional<long> paper_period(long n) {
  if (n < 2) throw std::invalid_argument("paper_period: n must be >= 2");
  Exponents e = split_235(n);
  if (e.other) return std::nullopt;
  if (n == 2) return 2;
  if (n == 4) return 4;
  if (e.beta == 0 && e.gamma == 0 && e.alpha >= 3) return 8;
  if (e.gamma == 0 && e.beta >= 1 && e.alpha <= 2) return 12;
  if (e.beta == 0 && e.gamma >= 1 && e.alpha <= 2) return 20;
  if (e.gamma == 0 && e.beta >= 1 && e.alpha >= 3) return 24;
  return std::nullopt;
}

std::optional<std::pair<long, int>> pst_decide(SpectrumTable& table, long period, long n) {
  if (period < 1) throw std::invalid_argument("pst_decide: graph must be periodic");
  if (n % 2 != 0) return std::nullopt;  // condition (i) before any Chebyshev work

  const int d = table.distinct_count();
  const CycNumber one = CycNumber::from_rational(n, 1);
  const CycNumber minus_one = CycNumber::from_rational(n, -1);
  std::vector<CycNumber> prev(d), cur(d), two_mu(d);
  for (int i = 0; i < d; ++i) {
    prev[i] = one;                        // T_0
    cur[i] = table.distinct_mu[i];        // T_1
    two_mu[i] = table.distinct_mu[i].scaled(2);
  }
  std::vector<int> sign(d);
  for (long tau = 1; tau <= period; ++tau) {
    if (tau > 1) {
      for (int i = 0; i < d; ++i) {
        CycNumber next = two_mu[i] * cur[i] - prev[i];
        prev[i] = std::move(cur[i]);
        cur[i] = std::move(next);
      }
    }
    bool all_pm_one = true;
    for (int i = 0; i < d && all_pm_one; ++i) {
      if (cur[i] == one)
        sign[i] = 1;
      else if (cur[i] == minus_one)
        sign[i] = -1;
      else
        all_pm_one = false;  // condition (ii) fails
    }
    if (!all_pm_one) continue;
    bool alternating = true;  // condition (iii) over adjacent indices
    for (long j = 0; j + 1 < n && alternating; ++j)
      if (sign[table.distinct_index[j]] == sign[table.distinct_index[j + 1]])
        alternating = false;
    if (alternating) return std::make_pair(tau, static_cast<int>(n / 2));
  }
  return std::nullopt;
}

bool paper_pst(long n) {
  return n == 2 || n == 4 || n == 6 || n == 8 || n == 10 || n == 12 || n == 20 || n == 24;
}

ClassificationReport classify_report(long n, const ClassifyOptions& options) {
  GraphSpec spec = GraphSpec::make(n);
  Graph graph = Graph::from_spec(spec);
  SpectrumTable table = discriminant_spectrum(spec);

  ClassificationReport rep;
  rep.n = n;
  rep.degree = spec.degree;
  rep.connection_set = spec.vn.elements;
  rep.bipartite = graph.is_bipartite();
  rep.b1 = graph.edge_count() - n + 1;

  PeriodicityWitness wit = is_periodic(table);
  rep.periodic = wit.periodic;
  if (rep.periodic) rep.period = compute_period(table, rep.b1, rep.bipartite);

  table.resolve_all_angles();
  std::vector<int> order(table.distinct_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return table.distinct_mu_float[a] > table.distinct_mu_float[b];
  });
  for (int i : order) rep.mu.push_back({table.distinct_mu_float[i], table.resolve_angle(i)});

  if (rep.periodic && n % 2 == 0) {
    if (auto hit = pst_decide(table, *rep.period, n))
      rep.pst = PstInfo{hit->first, hit->second, std::nullopt};
  }

  rep.paper_periodic = paper_periodic(n);
  rep.paper_period = paper_period(n);
  rep.paper_pst = paper_pst(n);
  rep.period_matches_paper = rep.periodic == rep.paper_periodic &&
                             (!rep.periodic || rep.period == rep.paper_period);
  rep.pst_matches_paper = rep.pst.has_value() == rep.paper_pst;

  const long arc_count = 2 * graph.edge_count();
  if (options.simulate && n <= options.sim_limit_n && arc_count <= options.sim_limit_arcs) {
    WalkOperators ops = build_operators(graph);
    bool confirmed = true;
    if (rep.periodic) {
      Eigen::MatrixXd power = matrix_power(ops.U, *rep.period);
      double dist = (power - Eigen::MatrixXd::Identity(power.rows(), power.cols()))
                        .cwiseAbs()
                        .maxCoeff();
      confirmed = confirmed && dist <= 1e-8;
    }
    if (n % 2 == 0) {
      long bound = rep.periodic ? *rep.period : 2 * n + 20;
      auto numeric = pst_numeric(ops, 0, static_cast<int>(n / 2), bound);
      if (numeric.has_value() != rep.pst.has_value())
        confirmed = false;
      else if (numeric && rep.pst) {
        confirmed = confirmed && numeric->first == rep.pst->tau &&
                    std::abs(std::abs(numeric->second) - 1.0) <= 1e-8;
        rep.pst->gamma = numeric->second;
      }
    }
    rep.simulation_confirms = confirmed;
  }
  return rep;
}

nlohmann::json report_to_json(const ClassificationReport& rep) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["degree"] = rep.degree;
  j["connection_set"] = rep.connection_set;
  j["bipartite"] = rep.bipartite;
  j["b1"] = rep.b1;
  nlohmann::json mus = nlohmann::json::array();
  for (const auto& entry : rep.mu) {
    nlohmann::json m;
    m["mu"] = entry.mu_float;
    if (entry.angle)
      m["angle"] = {entry.angle->p, entry.angle->q};
    else
      m["angle"] = nullptr;
    mus.push_back(m);
  }
  j["mu"] = mus;
  j["periodic"] = rep.periodic;
  j["period"] = rep.period ? nlohmann::json(*rep.period) : nlohmann::json(nullptr);
  j["paper_period"] = rep.paper_period ? nlohmann::json(*rep.paper_period) : nlohmann::json(nullptr);
  if (rep.pst) {
    nlohmann::json p;
    p["tau"] = rep.pst->tau;
    p["partner"] = rep.pst->partner;
    if (rep.pst->gamma)
      p["gamma"] = {rep.pst->gamma->real(), rep.pst->gamma->imag()};
    else
      p["gamma"] = nullptr;
    j["pst"] = p;
  } else {
    j["pst"] = nullptr;
  }
  j["paper_pst"] = rep.paper_pst;
  j["flags"] = {
      {"period_matches_paper", rep.period_matches_paper},
      {"pst_matches_paper", rep.pst_matches_paper},
      {"simulation_confirms",
       rep.simulation_confirms ? nlohmann::json(*rep.simulation_confirms) : nlohmann::json(nullptr)},
  };
  return j;
}

}  // namespace quc
