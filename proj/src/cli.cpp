#include "discpot/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <vector>

#include "discpot/asymptotics.hpp"
#include "discpot/oracle.hpp"
#include "discpot/potential.hpp"
#include "discpot/validation.hpp"

namespace discpot {

namespace {

const std::map<std::string, EvalMode> kModes = {
    {"exact", EvalMode::Exact}, {"stable", EvalMode::Stable}, {"asymptotic", EvalMode::Asymptotic}, {"oracle", EvalMode::Oracle}};

struct Value {
  double value;
  double err;
};

Value evaluate(const OverlapQuery& q, EvalMode mode, double tol) {
  switch (mode) {
    case EvalMode::Exact: return {E(q), 0.0};
    case EvalMode::Stable: return {E_stable(q), 0.0};
    case EvalMode::Asymptotic: return {E_asymptotic(q), 0.0};
    case EvalMode::Oracle: {
      const QuadResult r = quad_E(q, tol);
      return {r.value, r.err_estimate};
    }
  }
  return {0.0, 0.0};
}

void write_row(std::ostream& out, const OverlapQuery& q, Value v, bool with_err, bool scaled) {
  out << format_double(q.a()) << ',' << format_double(q.eps()) << ',' << to_string(classify_regime(q)) << ','
      << format_double(v.value);
  if (scaled) {
    const double e2 = q.eps() * q.eps();
    out << ',' << format_double(v.value / (e2 * std::log(e2)));
  }
  if (with_err) out << ',' << format_double(v.err);
  out << '\n';
}

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }
  void close() {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw std::runtime_error("write failed");
    }
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void validate_spec(const SweepSpec& s) {
  if (!(s.eps > 0.0 && s.eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  if (s.n < 2) throw DomainError("n must be at least 2");
  if (!s.lambda_grid && !(s.a_min <= s.a_max)) throw DomainError("a-min must not exceed a-max");
  if (!s.lambda_grid && s.a_min < 0.0) throw DomainError("a-min must be non-negative");
  if (s.mode == EvalMode::Oracle && !(s.tol >= kMinOracleTol)) throw DomainError("tol must be at least 1e-13");
}

void write_sweep(const SweepSpec& s, std::ostream& out) {
  validate_spec(s);
  out << "a,eps,regime,value" << (s.scaled ? ",scaled" : "") << '\n';
  for (std::size_t k = 0; k < s.n; ++k) {
    const double t = double(k) / double(s.n - 1);
    const double a = s.lambda_grid ? a_of_lambda({t, s.eps}) : s.a_min + (s.a_max - s.a_min) * t;
    const auto q = OverlapQuery::make(a, s.eps);
    write_row(out, q, evaluate(q, s.mode, s.tol), false, s.scaled);
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newtonian potential of the indicator of two overlapping discs"};
  app.require_subcommand(1);

  double a = 0.0;
  double eps = 0.1;
  std::string mode_name = "exact";
  double tol = 1e-12;
  std::size_t n = 0;
  std::string out_path;
  bool scaled = false;
  bool lambda_grid = false;
  double a_min = 0.0;
  double a_max = 2.0;
  std::vector<double> eps_list;
  bool asymptotic = false;
  bool eta = false;

  auto* eval = app.add_subcommand("eval", "evaluate E at one point, prints a,eps,regime,value[,err]");
  eval->add_option("--a", a, "distance between the disc centres")->required();
  eval->add_option("--eps", eps, "radius of the small disc")->required();
  eval->add_option("--mode", mode_name, "evaluation mode (default exact)")
      ->check(CLI::IsMember(kModes));
  eval->add_option("--tol", tol, "oracle tolerance");

  auto* sweep = app.add_subcommand("sweep", "tabulate E over a grid of a");
  sweep->add_option("--eps", eps, "radius of the small disc")->required();
  sweep->add_option("--a-min", a_min, "first a");
  sweep->add_option("--a-max", a_max, "last a");
  sweep->add_option("--n", n, "number of grid points (default 101)");
  sweep->add_option("--mode", mode_name, "evaluation mode (default exact)")
      ->check(CLI::IsMember(kModes));
  sweep->add_option("--tol", tol, "oracle tolerance");
  sweep->add_option("--out", out_path, "output CSV (default stdout)");
  sweep->add_flag("--scaled", scaled, "add value / (eps^2 log eps^2)");
  sweep->add_flag("--lambda-grid", lambda_grid, "grid over the overlap band, lam in [0, 1]");

  auto* validate = app.add_subcommand("validate", "closed forms against the oracle and each other");
  auto* eps_opt = validate->add_option("--eps", eps_list, "eps values (default 0.5 0.1 0.01)");
  validate->add_option("--n", n, "a-points per eps for the oracle comparison (default 200)");
  validate->add_option("--tol", tol, "oracle tolerance");
  validate->add_flag("--asymptotic", asymptotic, "check H against its small-eps expansion");
  validate->add_flag("--eta", eta, "tabulate the asymmetry index with a power-law fit");

  auto* diag = app.add_subcommand("diagnostics", "scaled profile J(lam) and asymmetry index");
  diag->add_option("--eps", eps, "radius of the small disc")->required();
  diag->add_option("--n", n, "lambda grid size (default 201)");
  diag->add_option("--out", out_path, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  const EvalMode mode = kModes.at(mode_name);
  try {
    if (*eval) {
      if (mode == EvalMode::Oracle && !(tol >= kMinOracleTol)) throw DomainError("tol must be at least 1e-13");
      const auto q = OverlapQuery::make(a, eps);
      write_row(out, q, evaluate(q, mode, tol), mode == EvalMode::Oracle, false);
      return 0;
    }
    if (*sweep) {
      SweepSpec s{eps, a_min, a_max, n == 0 ? 101 : n, mode, tol, lambda_grid, scaled};
      validate_spec(s);
      OutputTarget target(out_path, out);
      write_sweep(s, target.get());
      target.close();
      return 0;
    }
    if (*validate) {
      const bool eps_given = eps_opt->count() > 0;
      std::vector<CheckResult> results;
      if (!asymptotic && !eta) {
        const std::vector<double> el = eps_given ? eps_list : std::vector<double>{0.5, 0.1, 0.01};
        const std::size_t grid = n == 0 ? 200 : n;
        if (grid < 2) throw DomainError("n must be at least 2");
        if (!(tol >= kMinOracleTol)) throw DomainError("tol must be at least 1e-13");
        results.push_back(check_oracle_equivalence(el, grid, tol));
        results.push_back(check_branch_continuity(el));
        results.push_back(check_representation_equivalence(el, 100));
        results.push_back(check_global_bound(sample_queries(el, grid, el, 100)));
      }
      const std::vector<double> small = eps_given ? eps_list : std::vector<double>{1e-2, 1e-3, 1e-4};
      if (asymptotic) results.push_back(check_asymptotic_accuracy(small, n == 0 ? 51 : n));
      if (eta) {
        const std::size_t grid = n == 0 ? 201 : n;
        out << "eps,eta,eta_over_eps\n";
        for (double e : small) {
          const double v = diagnostics_J_eta(e, grid).eta;
          out << format_double(e) << ',' << format_double(v) << ',' << format_double(v / e) << '\n';
        }
        if (small.size() >= 2) {
          results.push_back(check_asymmetry(small, grid));
        }
      }
      bool ok = true;
      for (const auto& r : results) {
        out << format_check(r) << '\n';
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    }
    if (*diag) {
      const auto d = diagnostics_J_eta(eps, n == 0 ? 201 : n);
      OutputTarget target(out_path, out);
      std::ostream& o = target.get();
      o << "lambda,a,J\n";
      for (std::size_t k = 0; k < d.lambda.size(); ++k) {
        o << format_double(d.lambda[k]) << ',' << format_double(a_of_lambda({d.lambda[k], eps})) << ','
          << format_double(d.J[k]) << '\n';
      }
      target.close();
      (out_path.empty() ? err : out) << "eta," << format_double(d.eta) << '\n';
      return 0;
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace discpot
