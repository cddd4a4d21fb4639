#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>
#include <algorithm>

#include "steiner/error.hpp"
#include "steiner/forms.hpp"
#include "steiner/nullspace.hpp"
#include "steiner/random.hpp"

namespace steiner {

namespace {

using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

struct Evaluation {
  Vector residual;  // (Re F, Im F, |x|^2 - 1)
  Matrix jacobian;
  Real cost;
};

std::vector<CFloat> to_complex(const Vector& theta, int n) {
  std::vector<CFloat> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = CFloat(theta(i), theta(n + i));
  return x;
}

Evaluation evaluate_system(const Tree& t, int k, const Vector& theta, bool with_jacobian) {
  const int n = t.size();
  const auto x = to_complex(theta, n);
  const auto grad = gradient_direct(t, k, x);
  Evaluation ev;
  ev.residual.resize(2 * n + 1);
  Real norm2 = 0;
  for (int i = 0; i < n; ++i) {
    ev.residual(i) = grad[i].real();
    ev.residual(n + i) = grad[i].imag();
    norm2 += theta(i) * theta(i) + theta(n + i) * theta(n + i);
  }
  ev.residual(2 * n) = norm2 - 1;
  ev.cost = ev.residual.squaredNorm() / 2;
  if (!with_jacobian) return ev;

  // The gradient map is holomorphic with complex Jacobian H (the Hessian), so
  // d/da = H and d/db = iH in real coordinates x = a + ib.
  const auto hess = hessian_direct(t, k, x);
  ev.jacobian = Matrix::Zero(2 * n + 1, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CFloat& h = hess[static_cast<std::size_t>(i) * n + j];
      ev.jacobian(i, j) = h.real();
      ev.jacobian(i, n + j) = -h.imag();
      ev.jacobian(n + i, j) = h.imag();
      ev.jacobian(n + i, n + j) = h.real();
    }
    ev.jacobian(2 * n, i) = 2 * theta(i);
    ev.jacobian(2 * n, n + i) = 2 * theta(n + i);
  }
  return ev;
}

double gradient_residual(const Tree& t, int k, std::span<const CFloat> x) {
  double r = 0.0;
  for (const auto& g : gradient_direct(t, k, x)) r = std::max(r, magnitude(g));
  return r;
}

SearchCandidate run_restart(const Tree& t, int k, const SearchOptions& options, int restart) {
  const int n = t.size();
  SplitMix64 rng = SplitMix64::substream(options.seed, static_cast<std::uint64_t>(restart));
  Vector theta(2 * n);
  for (int i = 0; i < 2 * n; ++i) theta(i) = Real(2 * rng.unit() - 1);
  theta /= theta.norm();

  Evaluation ev = evaluate_system(t, k, theta, true);
  Real lambda = 1e-3;
  // Stop once the cost reaches the 128-bit noise floor, or a step gains less
  // than a 1e-24 fraction of the cost (a stationary point that is not a zero).
  const Real floor = Real(1e-70);
  const Real relative_gain = Real(1e-24);
  int it = 0;
  bool done = false;
  while (!done && it < options.max_iterations) {
    ++it;
    const Matrix jtj = ev.jacobian.transpose() * ev.jacobian;
    const Vector jtr = ev.jacobian.transpose() * ev.residual;
    bool improved = false;
    while (!improved && lambda < Real(1e30)) {
      Matrix damped = jtj;
      for (int i = 0; i < damped.rows(); ++i) damped(i, i) += lambda * (1 + jtj(i, i));
      const Vector step = damped.partialPivLu().solve(-jtr);
      const Vector trial = theta + step;
      const Evaluation next = evaluate_system(t, k, trial, false);
      if (next.cost < ev.cost) {
        const Real gain = ev.cost - next.cost;
        theta = trial;
        ev = evaluate_system(t, k, theta, true);
        lambda = std::max(lambda / 3, Real(1e-40));
        improved = true;
        done = ev.cost <= floor || gain <= relative_gain * ev.cost;
      } else {
        lambda *= 4;
      }
    }
    if (!improved) done = true;
  }

  theta /= theta.norm();
  SearchCandidate cand;
  cand.point = to_complex(theta, n);
  cand.residual = gradient_residual(t, k, cand.point);
  cand.restart = restart;
  cand.iterations = it;
  return cand;
}

}  // namespace

std::vector<SearchCandidate> numeric_search(const Tree& t, int k, const SearchOptions& options) {
  if (k < 2) fail(ErrorCode::InvalidArgument, "order must be at least 2");
  if (options.restarts < 0) fail(ErrorCode::InvalidArgument, "restarts must be nonnegative");
  std::vector<SearchCandidate> out;
  out.reserve(static_cast<std::size_t>(options.restarts));
  for (int r = 0; r < options.restarts; ++r) out.push_back(run_restart(t, k, options, r));
  std::stable_sort(out.begin(), out.end(),
                   [](const SearchCandidate& a, const SearchCandidate& b) { return a.residual < b.residual; });
  return out;
}

}  // namespace steiner
