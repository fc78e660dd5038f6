#pragma once

#include <functional>
#include <vector>

namespace bzip {

struct NelderMeadConfig {
  int max_iterations = 1000;
  // Stop when the objective spread over the simplex falls below
  // max(abstol, reltol * (|f_best| + reltol)).
  double reltol = 1e-6;
  double abstol = 0.0;
  double initial_step = 0.1;  // absolute offset per coordinate
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimisation with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2). Non-finite
/// objective values are treated as +infinity, i.e. rejected steps.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> start, const NelderMeadConfig& config = {});

/// Minimiser of a univariate function on [lo, hi] (Brent), to ~1e-9 in x.
double minimize_scalar(const std::function<double(double)>& f, double lo, double hi);

/// Root of a monotone function on [lo, hi] with f(lo), f(hi) of opposite
/// sign, bracketed to `tol` in x.
double find_root(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace bzip
