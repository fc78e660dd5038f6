#include "bzip/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "bzip/errors.hpp"

namespace bzip {

namespace {

double sanitize(double v) { return std::isfinite(v) ? v : std::numeric_limits<double>::infinity(); }

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> start, const NelderMeadConfig& config) {
  const std::size_t d = start.size();
  if (d == 0) throw InvalidParameter("nelder_mead needs at least one coordinate");
  NelderMeadResult res;
  auto eval = [&](const std::vector<double>& x) {
    ++res.evaluations;
    return sanitize(objective(x));
  };

  std::vector<std::vector<double>> simplex(d + 1, start);
  std::vector<double> values(d + 1);
  for (std::size_t i = 0; i < d; ++i) simplex[i + 1][i] += config.initial_step;
  for (std::size_t i = 0; i <= d; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(d + 1);
  std::vector<double> centroid(d), trial(d), trial2(d);
  auto point = [&](double t, std::vector<double>& out, const std::vector<double>& worst) {
    for (std::size_t k = 0; k < d; ++k) out[k] = centroid[k] + t * (worst[k] - centroid[k]);
  };

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[d - 1];

    const double spread = values[worst] - values[best];
    if (std::isfinite(values[best]) &&
        (spread <= std::max(config.abstol, config.reltol * (std::fabs(values[best]) + config.reltol)))) {
      res.converged = true;
      break;
    }
    if (res.iterations >= config.max_iterations) break;
    ++res.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < d; ++k) centroid[k] += simplex[i][k] / static_cast<double>(d);
    }

    point(-1.0, trial, simplex[worst]);
    const double f_reflect = eval(trial);
    if (f_reflect < values[best]) {
      point(-2.0, trial2, simplex[worst]);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        simplex[worst] = trial2;
        values[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[second]) {
      simplex[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }
    // Contraction: outside if the reflection improved on the worst point.
    const bool outside = f_reflect < values[worst];
    point(outside ? -0.5 : 0.5, trial2, simplex[worst]);
    const double f_contract = eval(trial2);
    if (f_contract < (outside ? f_reflect : values[worst])) {
      simplex[worst] = trial2;
      values[worst] = f_contract;
      continue;
    }
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < d; ++k) simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
      values[i] = eval(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best_index = static_cast<std::size_t>(best_it - values.begin());
  res.x = simplex[best_index];
  res.value = *best_it;
  return res;
}

double minimize_scalar(const std::function<double(double)>& f, double lo, double hi) {
  std::uintmax_t max_iter = 200;
  const auto r = boost::math::tools::brent_find_minima([&](double x) { return sanitize(f(x)); }, lo, hi, 30,
                                                        max_iter);
  return r.first;
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  std::uintmax_t max_iter = 200;
  const auto r = boost::math::tools::toms748_solve(
      f, lo, hi, [tol](double a, double b) { return std::fabs(b - a) <= tol; }, max_iter);
  return 0.5 * (r.first + r.second);
}

}  // namespace bzip
