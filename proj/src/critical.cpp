#include "curvedef/critical.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace curvedef {

namespace {

Eigen::VectorXd eval_vec(const std::vector<ParamPoly>& eqs,
                         const std::vector<double>& a) {
  Eigen::VectorXd v(eqs.size());
  for (size_t i = 0; i < eqs.size(); ++i) v[i] = eqs[i].eval(a);
  return v;
}

Eigen::MatrixXd eval_jacobian(const std::vector<std::vector<ParamPoly>>& jac,
                              const std::vector<double>& a) {
  Eigen::MatrixXd m(jac.size(), jac.empty() ? 0 : jac[0].size());
  for (size_t i = 0; i < jac.size(); ++i)
    for (size_t j = 0; j < jac[i].size(); ++j) m(i, j) = jac[i][j].eval(a);
  return m;
}

std::vector<std::vector<ParamPoly>> symbolic_jacobian(
    const std::vector<ParamPoly>& eqs, int arity) {
  std::vector<std::vector<ParamPoly>> jac;
  for (const auto& k : eqs) {
    std::vector<ParamPoly> row;
    for (int j = 0; j < arity; ++j) row.push_back(k.derivative(j));
    jac.push_back(std::move(row));
  }
  return jac;
}

double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<double> eval_field(const std::vector<ParamPoly>& eqs,
                               const std::vector<double>& a) {
  std::vector<double> out;
  out.reserve(eqs.size());
  for (const auto& p : eqs) out.push_back(p.eval(a));
  return out;
}

FdGradientReport fd_gradient_check(const Superpotential& w,
                                   const DeformationResult& eqs,
                                   int num_points, double radius, double step,
                                   double tol, std::uint64_t seed) {
  if (!eqs.square())
    throw NotCalabiYauError("finite-difference check needs a square system");
  const int arity = eqs.arity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-radius, radius);

  FdGradientReport report;
  for (int p = 0; p < num_points; ++p) {
    std::vector<double> a(arity);
    for (double& x : a) x = dist(rng);
    for (int i = 0; i < arity; ++i) {
      std::vector<double> hi = a, lo = a;
      hi[i] += step;
      lo[i] -= step;
      double fd = (w.w.eval(hi) - w.w.eval(lo)) / (2.0 * step);
      double exact = eqs.equations[eqs.n - 2 - i].eval(a);
      double rel = std::abs(fd - exact) / std::max(1.0, std::abs(exact));
      if (rel > report.max_relative_deviation) {
        report.max_relative_deviation = rel;
        report.worst_point = a;
        report.worst_index = i;
      }
    }
  }
  report.pass = report.max_relative_deviation <= tol;
  return report;
}

CriticalPoint newton_solve(const DeformationResult& eqs,
                           const std::vector<double>& start, double tol,
                           int max_iter, double box) {
  const int arity = eqs.arity();
  if (static_cast<int>(start.size()) != arity)
    throw StructureError("start vector length mismatch");
  auto jac = symbolic_jacobian(eqs.equations, arity);

  CriticalPoint result;
  result.point = start;
  std::vector<double> a = start;
  for (int iter = 0; iter <= max_iter; ++iter) {
    Eigen::VectorXd k = eval_vec(eqs.equations, a);
    result.point = a;
    result.gradient_norm = k.norm();
    result.iterations = iter;
    Eigen::MatrixXd J = eval_jacobian(jac, a);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    result.hessian_min_singular_value =
        svd.singularValues().minCoeff();
    // Flag degenerate roots: at a point with |k| <= tol, a regular Jacobian
    // keeps its smallest singular value on the scale of the matrix itself,
    // while a rank drop pushes it below sqrt(tol) * scale.
    const double max_sv = svd.singularValues().maxCoeff();
    if (result.hessian_min_singular_value <
        std::sqrt(tol) * std::max(max_sv, 1.0))
      result.singular_jacobian = true;
    if (result.gradient_norm <= tol) {
      result.converged = true;
      return result;
    }
    if (iter == max_iter) break;
    svd.setThreshold(1e-12);
    Eigen::VectorXd step = svd.solve(k);
    for (int i = 0; i < arity; ++i) a[i] -= step[i];
    if (max_abs(a) > 10.0 * std::max(box, 1e-8)) {
      result.point = a;
      result.converged = false;
      return result;
    }
  }
  result.converged = result.gradient_norm <= tol;
  return result;
}

std::vector<CriticalPoint> newton_multistart(const DeformationResult& eqs,
                                             int num_starts, double box,
                                             double tol, int max_iter,
                                             std::uint64_t seed) {
  const int arity = eqs.arity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-box, box);
  std::vector<CriticalPoint> out;
  for (int s = 0; s < num_starts; ++s) {
    std::vector<double> start(arity);
    for (double& x : start) x = dist(rng);
    out.push_back(newton_solve(eqs, start, tol, max_iter, box));
  }
  std::sort(out.begin(), out.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) {
              return a.point < b.point;
            });
  return out;
}

}  // namespace curvedef
