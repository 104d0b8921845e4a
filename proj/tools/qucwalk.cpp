// Command-line front end: classification of quadratic unitary Cayley graphs,
// range sweeps, spectrum dumps, walk simulation and operator export.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "quc/classify.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitConsistency = 3;

std::string fmt_double(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string opt_str(const std::optional<long>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string opt_bool_str(const std::optional<bool>& v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

void print_report_text(std::ostream& os, const quc::ClassificationReport& rep) {
  os << "n: " << rep.n << "\n";
  os << "degree: " << rep.degree << "\n";
  os << "connection_set: {" << join_longs(rep.connection_set) << "}\n";
  os << "bipartite: " << (rep.bipartite ? "yes" : "no") << ", b1: " << rep.b1 << "\n";
  os << "spectrum (distinct mu):\n";
  for (const auto& entry : rep.mu) {
    os << "  " << fmt_double(entry.mu_float);
    if (entry.angle)
      os << " = cos(" << entry.angle->p << "*pi/" << entry.angle->q << ")";
    else
      os << " (not a real part of a root of unity within bound 4n)";
    os << "\n";
  }
  if (rep.periodic) {
    os << "verdict: periodic, period " << *rep.period;
    if (rep.pst)
      os << "; PST at tau=" << rep.pst->tau << " to vertex " << rep.pst->partner;
    else
      os << "; no PST";
    os << "\n";
  } else {
    os << "verdict: aperiodic; no PST\n";
  }
  os << "paper: periodic=" << (rep.paper_periodic ? "yes" : "no") << " period="
     << (rep.paper_period ? std::to_string(*rep.paper_period) : "inf")
     << " pst=" << (rep.paper_pst ? "yes" : "no") << "\n";
  os << "agreement: period_matches_paper=" << (rep.period_matches_paper ? "true" : "false")
     << " pst_matches_paper=" << (rep.pst_matches_paper ? "true" : "false")
     << " simulation_confirms="
     << (rep.simulation_confirms ? (*rep.simulation_confirms ? "true" : "false") : "skipped")
     << "\n";
}

const char* kSweepCsvHeader =
    "n,degree,bipartite,b1,periodic,period,paper_period,pst_tau,pst_partner,"
    "paper_pst,period_matches_paper,pst_matches_paper,simulation_confirms";

std::string report_csv_row(const quc::ClassificationReport& rep) {
  std::ostringstream os;
  os << rep.n << ',' << rep.degree << ',' << (rep.bipartite ? "true" : "false") << ',' << rep.b1
     << ',' << (rep.periodic ? "true" : "false") << ',' << opt_str(rep.period) << ','
     << opt_str(rep.paper_period) << ',';
  if (rep.pst)
    os << rep.pst->tau << ',' << rep.pst->partner;
  else
    os << ',';
  os << ',' << (rep.paper_pst ? "true" : "false") << ','
     << (rep.period_matches_paper ? "true" : "false") << ','
     << (rep.pst_matches_paper ? "true" : "false") << ','
     << opt_bool_str(rep.simulation_confirms);
  return os.str();
}

struct FormatOpts {
  std::string format = "text";
};

void add_format_flags(CLI::App* cmd, FormatOpts& fmt) {
  cmd->add_option("--format", fmt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_flag_callback("--json", [&fmt] { fmt.format = "json"; }, "Shorthand for --format json");
  cmd->add_flag_callback("--csv", [&fmt] { fmt.format = "csv"; }, "Shorthand for --format csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover walks on quadratic unitary Cayley graphs"};
  app.require_subcommand(1);

  long n = 0, lo = 0, hi = 0;
  FormatOpts fmt;
  quc::ClassifyOptions copts;
  bool no_sim = false;
  long source = 0, steps = 0;
  long target = -1;
  std::string dump_dir;

  auto* classify = app.add_subcommand("classify", "Classify a single graph");
  classify->add_option("n", n, "Modulus (n >= 2)")->required();
  add_format_flags(classify, fmt);
  classify->add_flag("--no-sim", no_sim, "Skip the matrix simulation cross-check");
  classify->add_option("--sim-limit", copts.sim_limit_n, "Largest n simulated (default 300)");
  classify->add_option("--sim-arcs", copts.sim_limit_arcs,
                       "Largest arc count simulated (default 8000)");

  auto* sweep = app.add_subcommand("sweep", "Classify a range of n");
  sweep->add_option("lo", lo, "Range start")->required();
  sweep->add_option("hi", hi, "Range end (inclusive)")->required();
  add_format_flags(sweep, fmt);
  sweep->add_flag("--no-sim", no_sim, "Skip the matrix simulation cross-check");
  sweep->add_option("--sim-limit", copts.sim_limit_n, "Largest n simulated (default 300)");
  sweep->add_option("--sim-arcs", copts.sim_limit_arcs,
                    "Largest arc count simulated (default 8000)");
  long jobs = 1;
  sweep->add_option("--jobs", jobs, "Worker threads (default 1)")->check(CLI::Range(1, 64));

  auto* spectrum = app.add_subcommand("spectrum", "Print the discriminant spectrum");
  spectrum->add_option("n", n, "Modulus (n >= 2)")->required();
  add_format_flags(spectrum, fmt);

  auto* simulate = app.add_subcommand("simulate", "Run the walk step by step");
  simulate->add_option("n", n, "Modulus (n >= 2)")->required();
  simulate->add_option("--source", source, "Start vertex")->required();
  simulate->add_option("--steps", steps, "Number of steps")->required();
  simulate->add_option("--target", target, "Track overlap with this vertex");

  auto* operators = app.add_subcommand("operators", "Dump U and P as CSV");
  operators->add_option("n", n, "Modulus (n >= 2)")->required();
  operators->add_option("--dump", dump_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  copts.simulate = !no_sim;

  try {
    if (classify->parsed()) {
      quc::ClassificationReport rep = quc::classify_report(n, copts);
      if (fmt.format == "json") {
        std::cout << quc::report_to_json(rep).dump() << "\n";
      } else if (fmt.format == "csv") {
        std::cout << kSweepCsvHeader << "\n" << report_csv_row(rep) << "\n";
      } else {
        print_report_text(std::cout, rep);
      }
    } else if (sweep->parsed()) {
      if (lo < 2 || hi < lo) throw std::invalid_argument("sweep: need 2 <= lo <= hi");
      long periodic_count = 0, pst_count = 0, disagreements = 0;
      if (fmt.format == "csv") std::cout << kSweepCsvHeader << "\n";

      // Reports are computed per-n (possibly fanned out) and emitted in
      // ascending order.
      std::vector<std::optional<quc::ClassificationReport>> slots(hi - lo + 1);
      {
        std::atomic<long> next{lo};
        std::vector<std::exception_ptr> errors(jobs);
        auto worker = [&](long w) {
          try {
            for (long m = next.fetch_add(1); m <= hi; m = next.fetch_add(1))
              slots[m - lo] = quc::classify_report(m, copts);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        };
        if (jobs <= 1) {
          worker(0);
        } else {
          std::vector<std::thread> pool;
          for (long w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
          for (auto& t : pool) t.join();
        }
        for (auto& e : errors)
          if (e) std::rethrow_exception(e);
      }

      for (long m = lo; m <= hi; ++m) {
        quc::ClassificationReport& rep = *slots[m - lo];
        periodic_count += rep.periodic;
        pst_count += rep.pst.has_value();
        bool disagree = !rep.period_matches_paper || !rep.pst_matches_paper ||
                        (rep.simulation_confirms && !*rep.simulation_confirms);
        disagreements += disagree;
        if (fmt.format == "json")
          std::cout << quc::report_to_json(rep).dump() << "\n";
        else if (fmt.format == "csv")
          std::cout << report_csv_row(rep) << "\n";
        else {
          std::cout << "n=" << m << " degree=" << rep.degree
                    << (rep.periodic ? " periodic period=" + std::to_string(*rep.period)
                                     : " aperiodic")
                    << " paper_period=" << (rep.paper_period ? std::to_string(*rep.paper_period) : "inf")
                    << (rep.pst ? " pst_tau=" + std::to_string(rep.pst->tau) : " pst=none")
                    << (disagree ? "  [disagrees with paper table]" : "") << "\n";
        }
      }
      std::ostringstream summary;
      summary << "summary: range " << lo << ".." << hi << " periodic=" << periodic_count
              << " pst=" << pst_count << " paper_disagreements=" << disagreements;
      if (fmt.format == "json") {
        nlohmann::json j;
        j["summary"] = {{"lo", lo},
                        {"hi", hi},
                        {"periodic", periodic_count},
                        {"pst", pst_count},
                        {"paper_disagreements", disagreements}};
        std::cout << j.dump() << "\n";
      } else if (fmt.format == "csv") {
        std::cerr << summary.str() << "\n";  // keep stdout parseable
      } else {
        std::cout << summary.str() << "\n";
      }
    } else if (spectrum->parsed()) {
      quc::GraphSpec spec = quc::GraphSpec::make(n);
      quc::SpectrumTable table = quc::discriminant_spectrum(spec);
      if (fmt.format == "csv") {
        quc::write_spectrum_csv(std::cout, table);
      } else if (fmt.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (auto& row : table.rows) {
          nlohmann::json r;
          r["a"] = row.a;
          r["lambda_re"] = row.lambda.to_complex().real();
          r["mu"] = row.mu_float;
          auto angle = table.angle_of_row(row.a);
          r["angle"] = angle ? nlohmann::json({angle->p, angle->q}) : nlohmann::json(nullptr);
          rows.push_back(r);
        }
        std::cout << rows.dump() << "\n";
      } else {
        std::cout << "a\tlambda\tmu\tangle\n";
        for (auto& row : table.rows) {
          std::cout << row.a << "\t" << fmt_double(row.lambda.to_complex().real()) << "\t"
                    << fmt_double(row.mu_float) << "\t";
          auto angle = table.angle_of_row(row.a);
          if (angle)
            std::cout << angle->p << "*pi/" << angle->q;
          else
            std::cout << "-";
          std::cout << "\n";
        }
      }
    } else if (simulate->parsed()) {
      quc::GraphSpec spec = quc::GraphSpec::make(n);
      quc::Graph graph = quc::Graph::from_spec(spec);
      if (source < 0 || source >= n || (target >= 0 && target >= n))
        throw std::invalid_argument("simulate: vertex out of range");
      if (steps < 0) throw std::invalid_argument("simulate: steps must be >= 0");
      quc::SparseOperators ops = quc::build_sparse_operators(graph);
      quc::ArcSpace arcs = quc::ArcSpace::build(graph);
      Eigen::VectorXd psi = Eigen::VectorXd::Zero(ops.arc_count);
      const double w = 1.0 / std::sqrt(static_cast<double>(graph.adj[source].size()));
      for (int v : graph.adj[source]) psi(arcs.index(v, static_cast<int>(source), graph)) = w;
      bool hit = false;
      for (long t = 0; t <= steps; ++t) {
        if (t > 0) psi = ops.U * psi;
        Eigen::VectorXd overlaps = ops.N * psi;
        if (target >= 0) {
          double gamma = overlaps(target);
          bool arrived = std::abs(gamma) >= 1.0 - 1e-8;
          hit = hit || arrived;
          std::cout << "t=" << t << " overlap2=" << fmt_double(gamma * gamma)
                    << (arrived ? "  <-- perfect state transfer" : "") << "\n";
        } else {
          std::cout << "t=" << t;
          for (long v = 0; v < n; ++v)
            std::cout << " " << fmt_double(overlaps(v) * overlaps(v));
          std::cout << "\n";
        }
      }
      if (target >= 0)
        std::cout << (hit ? "perfect state transfer observed" : "no perfect state transfer within range")
                  << "\n";
    } else if (operators->parsed()) {
      quc::GraphSpec spec = quc::GraphSpec::make(n);
      quc::Graph graph = quc::Graph::from_spec(spec);
      if (2 * graph.edge_count() > copts.sim_limit_arcs)
        throw std::invalid_argument("operators: arc space too large for a dense dump");
      quc::WalkOperators ops = quc::build_operators(graph);
      std::filesystem::create_directories(dump_dir);
      auto write_matrix = [](const std::string& path, const Eigen::MatrixXd& m) {
        std::ofstream os(path);
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
          for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << '"' << fmt_double(m(i, j)) << ",0\"";
          }
          os << '\n';
        }
      };
      write_matrix(dump_dir + "/U.csv", ops.U);
      write_matrix(dump_dir + "/P.csv", ops.P);
      std::cout << "wrote " << dump_dir << "/U.csv and " << dump_dir << "/P.csv\n";
    }
  } catch (const quc::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
