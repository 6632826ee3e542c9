#pragma once

#include <cstddef>
#include <functional>

namespace discpot {

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t subdivisions = 0;  // number of panels in the final partition
  bool converged = true;
};

inline constexpr std::size_t kDefaultPanelBudget = 10000;

// Globally adaptive Gauss-Kronrod 7/15. Panels with the largest |K15 - G7| are
// bisected until the summed estimate drops below tol or the budget runs out.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi, double tol,
                              std::size_t max_panels = kDefaultPanelBudget);

// Adds b to a, combining the error estimates and panel counts.
void accumulate(QuadResult& a, const QuadResult& b);

}  // namespace discpot
