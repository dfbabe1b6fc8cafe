#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace nccsim {

struct NelderMeadOptions {
  int max_evals = 500;
  double f_tol = 1e-9;  // stop when the simplex f-spread falls below this
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0;
  int evaluations = 0;
  bool converged = false;
};

// Downhill simplex minimization (alpha=1, gamma=2, rho=1/2, sigma=1/2).
// `step` sets the initial simplex extent per coordinate.
inline NelderMeadResult nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, const std::vector<double>& step,
    const NelderMeadOptions& opt = {}) {
  const size_t n = x0.size();
  NelderMeadResult res;

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
  for (size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]);
  res.evaluations = static_cast<int>(n) + 1;

  std::vector<size_t> order(n + 1);
  while (res.evaluations < opt.max_evals) {
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return fv[a] < fv[b]; });
    size_t best = order[0], worst = order[n], second = order[n - 1];

    if (std::abs(fv[worst] - fv[best]) < opt.f_tol) {
      res.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (size_t d = 0; d < n; ++d) centroid[d] += pts[i][d];
    }
    for (size_t d = 0; d < n; ++d) centroid[d] /= static_cast<double>(n);

    auto blend = [&](double coef) {
      std::vector<double> p(n);
      for (size_t d = 0; d < n; ++d)
        p[d] = centroid[d] + coef * (pts[worst][d] - centroid[d]);
      return p;
    };

    std::vector<double> refl = blend(-1.0);
    double f_refl = f(refl);
    ++res.evaluations;

    if (f_refl < fv[order[0]]) {
      std::vector<double> exp_pt = blend(-2.0);
      double f_exp = f(exp_pt);
      ++res.evaluations;
      if (f_exp < f_refl) {
        pts[worst] = std::move(exp_pt);
        fv[worst] = f_exp;
      } else {
        pts[worst] = std::move(refl);
        fv[worst] = f_refl;
      }
      continue;
    }
    if (f_refl < fv[second]) {
      pts[worst] = std::move(refl);
      fv[worst] = f_refl;
      continue;
    }

    std::vector<double> contr = blend(0.5);
    double f_contr = f(contr);
    ++res.evaluations;
    if (f_contr < fv[worst]) {
      pts[worst] = std::move(contr);
      fv[worst] = f_contr;
      continue;
    }

    // Shrink toward the best vertex.
    for (size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (size_t d = 0; d < n; ++d)
        pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
      fv[i] = f(pts[i]);
      ++res.evaluations;
    }
  }

  size_t best = 0;
  for (size_t i = 1; i <= n; ++i)
    if (fv[i] < fv[best]) best = i;
  res.x = pts[best];
  res.value = fv[best];
  return res;
}

}  // namespace nccsim
