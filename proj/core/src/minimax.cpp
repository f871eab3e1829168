// Copyright 2026 The SoftEx Model Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "softex/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Dense>

#include "softex/errors.hpp"
#include "softex/qfunction.hpp"

namespace softex {

void MinimaxProblem::Validate() const {
  if (n_terms < 1 || n_terms > 8) throw DomainError("n_terms must be in [1, 8]");
  if (!(x_end > 0.0)) throw DomainError("x_end must be positive");
  if (max_iterations < 1) throw DomainError("max_iterations must be positive");
}

SumExpParams chiani_init(int n) {
  if (n < 1) throw DomainError("chiani_init needs n >= 1");
  SumExpParams p;
  const double step = std::numbers::pi / 2.0 / n;
  for (int i = 1; i <= n; ++i) {
    const double s = std::sin(step * i);
    p.terms.push_back({step / std::numbers::pi, 1.0 / (2.0 * s * s)});
  }
  return p;
}

namespace {

double Approx(const SumExpParams& p, double x) {
  double s = 0.0;
  for (const SumExpTerm& t : p.terms) s += t.a * std::exp(-t.b * x * x);
  return s;
}

// Parameters are carried as logs so positivity never has to be enforced.
class Model {
 public:
  Model(ErrorMetric metric, int n) : metric_(metric), n_(n) {}

  int n() const { return n_; }

  double R(const Eigen::VectorXd& th, double x) const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += std::exp(th[i] - std::exp(th[n_ + i]) * x * x);
    const double q = q_reference(x);
    return metric_ == ErrorMetric::kRelative ? s / q - 1.0 : s - q;
  }

  // r and dr/dtheta at x.
  double Grad(const Eigen::VectorXd& th, double x, Eigen::Ref<Eigen::RowVectorXd> g) const {
    double s = 0.0;
    const double q = q_reference(x);
    const double scale = metric_ == ErrorMetric::kRelative ? 1.0 / q : 1.0;
    for (int i = 0; i < n_; ++i) {
      const double b = std::exp(th[n_ + i]);
      const double term = std::exp(th[i] - b * x * x);
      s += term;
      g[i] = term * scale;
      g[n_ + i] = -term * b * x * x * scale;
    }
    return metric_ == ErrorMetric::kRelative ? s / q - 1.0 : s - q;
  }

  SumExpParams ToParams(const Eigen::VectorXd& th) const {
    SumExpParams p;
    for (int i = 0; i < n_; ++i) p.terms.push_back({std::exp(th[i]), std::exp(th[n_ + i])});
    return p;
  }

 private:
  ErrorMetric metric_;
  int n_;
};

std::vector<double> Linspace(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return g;
}

// Levenberg-Marquardt on rho = |r|^(p/2) sign(r) over the grid, i.e. an
// L^p fit of the residual.
Eigen::VectorXd LpFit(const Model& m, Eigen::VectorXd th, const std::vector<double>& grid,
                      double p) {
  const int k = 2 * m.n();
  const auto rows = static_cast<Eigen::Index>(grid.size());
  auto eval = [&](const Eigen::VectorXd& t, Eigen::VectorXd& rho, Eigen::MatrixXd* jac) {
    Eigen::RowVectorXd g(k);
    for (Eigen::Index j = 0; j < rows; ++j) {
      const double r = m.Grad(t, grid[static_cast<std::size_t>(j)], g);
      const double mag = std::pow(std::fabs(r), p / 2.0);
      rho[j] = r < 0 ? -mag : mag;
      if (jac) {
        const double d = (p / 2.0) * std::pow(std::fabs(r), p / 2.0 - 1.0);
        jac->row(j) = (r == 0.0 && p > 2.0) ? Eigen::RowVectorXd::Zero(k) : Eigen::RowVectorXd(d * g);
      }
    }
    return rho.squaredNorm();
  };

  Eigen::VectorXd rho(rows), trial_rho(rows);
  Eigen::MatrixXd jac(rows, k);
  double cost = eval(th, rho, &jac);
  double lambda = 1e-3;
  int stalls = 0;
  for (int it = 0; it < 500 && stalls < 3; ++it) {
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * rho;
    bool improved = false;
    while (lambda < 1e16) {
      Eigen::MatrixXd a = jtj;
      for (int i = 0; i < k; ++i) a(i, i) += lambda * std::max(jtj(i, i), 1e-300);
      const Eigen::VectorXd step = a.ldlt().solve(-jtr);
      const Eigen::VectorXd cand = th + step;
      const double c = eval(cand, trial_rho, nullptr);
      if (std::isfinite(c) && c < cost) {
        stalls = (cost - c) < 1e-12 * cost ? stalls + 1 : 0;
        th = cand;
        cost = eval(th, rho, &jac);
        lambda = std::max(lambda / 3.0, 1e-12);
        improved = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!improved) break;
  }
  return th;
}

double Golden(const std::function<double(double)>& f, double lo, double hi) {
  // Maximizes f on [lo, hi].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::fabs(hi)); ++i) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return (lo + hi) / 2.0;
}

// Interior local extrema of r, located on the grid and polished.
std::vector<double> LocateExtrema(const Model& m, const Eigen::VectorXd& th,
                                  const std::vector<double>& grid) {
  std::vector<double> r(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) r[i] = m.R(th, grid[i]);
  std::vector<double> pts;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double d0 = r[i] - r[i - 1];
    const double d1 = r[i + 1] - r[i];
    if (d0 * d1 < 0.0) {
      const double sign = r[i] > 0 ? 1.0 : -1.0;
      pts.push_back(Golden([&](double x) { return sign * m.R(th, x); }, grid[i - 1], grid[i + 1]));
    }
  }
  return pts;
}

std::vector<std::pair<double, double>> Profile(const Model& m, const Eigen::VectorXd& th,
                                               double x_end) {
  std::vector<std::pair<double, double>> out;
  for (const double x : Linspace(0.0, x_end, 1001)) out.emplace_back(x, m.R(th, x));
  return out;
}

struct Equations {
  std::vector<double> points;
  std::vector<double> signs;  // multiplier of E; 0 pins r to zero
};

Equations BuildEquations(const MinimaxProblem& pr, const std::vector<double>& interior) {
  Equations eq;
  eq.points.push_back(0.0);
  eq.signs.push_back(pr.r0_mode == R0Mode::kMinusMax ? -1.0 : 0.0);
  // Alternation runs backwards from a negative ripple at the far end.
  const bool relative = pr.metric == ErrorMetric::kRelative;
  const std::size_t total = interior.size() + (relative ? 1 : 0);
  for (std::size_t i = 0; i < interior.size(); ++i) {
    eq.points.push_back(interior[i]);
    eq.signs.push_back((total - 1 - i) % 2 == 0 ? -1.0 : 1.0);
  }
  if (relative) {
    eq.points.push_back(pr.x_end);
    eq.signs.push_back(-1.0);
  }
  return eq;
}

// Damped Newton on r(theta, x_j) - s_j E = 0 with the points held fixed.
bool SolveRipple(const Model& m, const Equations& eq, Eigen::VectorXd& th, double& e) {
  const int k = 2 * m.n();
  const auto rows = static_cast<Eigen::Index>(eq.points.size());
  auto residuals = [&](const Eigen::VectorXd& t, double ev, Eigen::VectorXd& f,
                       Eigen::MatrixXd* jac) {
    Eigen::RowVectorXd g(k);
    for (Eigen::Index j = 0; j < rows; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      const double r = m.Grad(t, eq.points[ju], g);
      f[j] = r - eq.signs[ju] * ev;
      if (jac) {
        jac->row(j).head(k) = g;
        (*jac)(j, k) = -eq.signs[ju];
      }
    }
    return f.norm();
  };

  Eigen::VectorXd f(rows), trial(rows);
  Eigen::MatrixXd jac(rows, k + 1);
  double norm = residuals(th, e, f, &jac);
  for (int it = 0; it < 60; ++it) {
    if (norm < 1e-15) return true;
    const Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-f);
    double damp = 1.0;
    bool accepted = false;
    for (int h = 0; h < 40; ++h, damp /= 2.0) {
      const Eigen::VectorXd t = th + damp * step.head(k);
      const double ev = e + damp * step[k];
      const double n2 = residuals(t, ev, trial, nullptr);
      if (std::isfinite(n2) && n2 < norm) {
        th = t;
        e = ev;
        norm = residuals(th, e, f, &jac);
        accepted = true;
        break;
      }
    }
    if (!accepted) return norm < 1e-12;
  }
  return norm < 1e-12;
}

bool Alternates(const Model& m, const Eigen::VectorXd& th, const std::vector<double>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (m.R(th, pts[i]) * m.R(th, pts[i - 1]) >= 0.0) return false;
  }
  return true;
}

}  // namespace

double residual(const SumExpParams& params, double x, ErrorMetric metric) {
  const double q = q_reference(x);
  const double s = Approx(params, x);
  return metric == ErrorMetric::kRelative ? (s - q) / q : s - q;
}

MinimaxSolution solve_minimax(const MinimaxProblem& pr) {
  pr.Validate();
  const int n = pr.n_terms;
  const Model m(pr.metric, n);
  const bool relative = pr.metric == ErrorMetric::kRelative;
  const std::size_t expected = relative ? 2 * static_cast<std::size_t>(n) - 1
                                        : 2 * static_cast<std::size_t>(n);
  const std::vector<double> grid = Linspace(0.0, pr.x_end, 4000);

  const SumExpParams init = chiani_init(n);
  Eigen::VectorXd start(2 * n);
  for (int i = 0; i < n; ++i) {
    start[i] = std::log(init.terms[static_cast<std::size_t>(i)].a);
    start[n + i] = std::log(init.terms[static_cast<std::size_t>(i)].b);
  }

  Eigen::VectorXd th;
  std::vector<double> interior;
  // Merged extrema after the prefit: restart from a perturbed start.
  for (int attempt = 0; attempt < 4; ++attempt) {
    th = start;
    for (int i = 0; i < 2 * n; ++i) th[i] += 0.05 * attempt * ((i % 2) ? 1.0 : -1.0);
    for (const double p : {2.0, 4.0, 8.0, 16.0}) th = LpFit(m, th, grid, p);
    interior = LocateExtrema(m, th, grid);
    if (interior.size() == expected) break;
  }
  if (interior.size() != expected) {
    throw ConvergenceError("prefit found " + std::to_string(interior.size()) +
                               " extrema, expected " + std::to_string(expected),
                           Profile(m, th, pr.x_end));
  }

  double e = 0.0;
  for (const double x : grid) e = std::max(e, std::fabs(m.R(th, x)));

  int iterations = 0;
  bool converged = false;
  for (; iterations < pr.max_iterations && !converged; ++iterations) {
    const Equations eq = BuildEquations(pr, interior);
    const double previous = e;
    if (!SolveRipple(m, eq, th, e)) {
      throw ConvergenceError("equal-ripple Newton solve failed", Profile(m, th, pr.x_end));
    }
    interior = LocateExtrema(m, th, grid);
    if (interior.size() != expected) {
      throw ConvergenceError("extremum count changed during exchange", Profile(m, th, pr.x_end));
    }
    converged = std::fabs(e - previous) < 1e-10 && iterations > 0;
  }
  if (!converged) {
    throw ConvergenceError("exchange did not converge", Profile(m, th, pr.x_end));
  }

  MinimaxSolution sol;
  sol.params = m.ToParams(th);
  sol.extrema = interior;
  if (relative) sol.extrema.push_back(pr.x_end);
  if (!Alternates(m, th, sol.extrema)) {
    throw ConvergenceError("residual signs do not alternate", Profile(m, th, pr.x_end));
  }
  sol.err_max = std::fabs(e);
  sol.params.r_max = sol.err_max;
  sol.residual_profile = Profile(m, th, pr.x_end);
  sol.iterations = iterations;
  return sol;
}

std::string to_string(ErrorMetric m) {
  return m == ErrorMetric::kRelative ? "relative" : "absolute";
}

std::string to_string(R0Mode m) { return m == R0Mode::kZero ? "zero" : "minus_rmax"; }

ErrorMetric error_metric_from_string(const std::string& s) {
  if (s == "relative") return ErrorMetric::kRelative;
  if (s == "absolute") return ErrorMetric::kAbsolute;
  throw ConfigError("unknown error metric: " + s);
}

R0Mode r0_mode_from_string(const std::string& s) {
  if (s == "zero") return R0Mode::kZero;
  if (s == "minus_rmax") return R0Mode::kMinusMax;
  throw ConfigError("unknown r0 mode: " + s);
}

}  // namespace softex
