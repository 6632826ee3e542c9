#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

namespace discpot {

enum class EvalMode { Exact, Stable, Asymptotic, Oracle };

struct SweepSpec {
  double eps = 0.1;
  double a_min = 0.0;
  double a_max = 2.0;
  std::size_t n = 101;
  EvalMode mode = EvalMode::Exact;
  double tol = 1e-12;
  bool lambda_grid = false;  // a runs over the band via lam in [0, 1]
  bool scaled = false;
};

void validate_spec(const SweepSpec& s);

// Writes the sweep CSV (header plus n rows) to out.
void write_sweep(const SweepSpec& s, std::ostream& out);

// Exit codes: 0 success, 1 failed validation check, 2 usage, domain or I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string format_double(double v);

}  // namespace discpot
