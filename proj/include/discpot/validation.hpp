#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "discpot/geometry.hpp"

namespace discpot {

struct CheckResult {
  std::string id;
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;
};

// Least-squares fit of log y = slope * log x + log prefactor.
struct PowerFit {
  double slope = 0.0;
  double prefactor = 0.0;
};
PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

// The a-points visited by the oracle, continuity and representation checks.
std::vector<OverlapQuery> sample_queries(const std::vector<double>& eps_oracle, std::size_t n_oracle,
                                         const std::vector<double>& eps_band, std::size_t n_band);

CheckResult check_oracle_equivalence(const std::vector<double>& eps_list, std::size_t n, double tol,
                                     double threshold = 1e-9);
CheckResult check_branch_continuity(const std::vector<double>& eps_list, double offset = 1e-9,
                                    double threshold = 1e-10);
CheckResult check_representation_equivalence(const std::vector<double>& eps_list, std::size_t n,
                                             double threshold = 1e-10);
CheckResult check_global_bound(const std::vector<OverlapQuery>& queries);
CheckResult check_golden_tables();
CheckResult check_asymptotic_accuracy(const std::vector<double>& eps_list, std::size_t n_per_branch);
CheckResult check_unit_cubic_expansion();
CheckResult check_phi_expansion(const std::vector<double>& eps_list, std::size_t n);
CheckResult check_stability();
CheckResult check_asymmetry(const std::vector<double>& eps_list, std::size_t grid_n);
CheckResult check_dilog();

// All acceptance criteria with their reference parameters, in order.
std::vector<CheckResult> run_acceptance();

std::string format_check(const CheckResult& r);

}  // namespace discpot
