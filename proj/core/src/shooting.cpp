#include "percycle/shooting.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "percycle/errors.hpp"
#include "percycle/model.hpp"

namespace percycle::solver {

namespace {

using Matrix5d = Eigen::Matrix<double, 5, 5>;
using Vector5d = Eigen::Matrix<double, 5, 1>;

double inf_norm(const State5& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

struct PeriodResidual {
  const ParamSet& p;
  const IntegratorOptions& iopt;

  State5 operator()(const State5& x) const {
    State5 px = poincare_map(p, x, iopt);
    State5 r;
    for (std::size_t i = 0; i < 5; ++i) r[i] = px[i] - x[i];
    return r;
  }
};

// Forward-difference Jacobian of F at x, reusing the residual Fx.
Matrix5d fd_jacobian(const PeriodResidual& F, const State5& x,
                     const State5& Fx) {
  const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  Matrix5d J;
  for (int i = 0; i < 5; ++i) {
    const double eps = sqrt_eps * std::max(std::abs(x[i]), 1.0);
    State5 xp = x;
    xp[i] += eps;
    const State5 Fp = F(xp);
    for (int j = 0; j < 5; ++j) J(j, i) = (Fp[j] - Fx[j]) / eps;
  }
  return J;
}

struct NewtonAttempt {
  bool converged = false;
  State5 x{};
  State5 Fx{};
  double rnorm = 0.0;
  int iterations = 0;
};

// One damped Newton run. Residual norms of every accepted iterate (the
// starting point included) are appended to `history`.
NewtonAttempt newton_attempt(const PeriodResidual& F, State5 x,
                             const ShootingOptions& opt,
                             std::vector<double>& history) {
  NewtonAttempt res;
  State5 Fx = F(x);
  double rnorm = inf_norm(Fx);
  const std::size_t base = history.size();
  history.push_back(rnorm);

  for (int iter = 0; iter < opt.newton_max_iter; ++iter) {
    if (rnorm <= opt.newton_tol) {
      res.converged = true;
      break;
    }
    Matrix5d J = fd_jacobian(F, x, Fx);
    Vector5d rhs;
    for (int j = 0; j < 5; ++j) rhs(j) = -Fx[j];
    Vector5d d = J.partialPivLu().solve(rhs);
    if (!d.allFinite()) break;

    bool accepted = false;
    for (double alpha = 1.0; alpha >= 0x1p-20; alpha *= 0.5) {
      State5 xn;
      bool positive = true;
      for (std::size_t i = 0; i < 5; ++i) {
        xn[i] = x[i] + alpha * d(static_cast<int>(i));
        positive = positive && xn[i] > 0.0;
      }
      if (!positive) continue;
      State5 Fn;
      double rn;
      try {
        Fn = F(xn);
        rn = inf_norm(Fn);
      } catch (const PercycleError& e) {
        if (e.code() != ErrorCode::domain_error &&
            e.code() != ErrorCode::step_failure) {
          throw;
        }
        continue;
      }
      if (rn < rnorm) {
        x = xn;
        Fx = Fn;
        rnorm = rn;
        accepted = true;
        break;
      }
    }
    ++res.iterations;
    if (!accepted) break;  // damping exhausted: stall
    history.push_back(rnorm);
    // Stall window: less than 10% total progress over 5 accepted steps.
    const std::size_t n = history.size();
    if (n >= base + 6 && rnorm > 0.9 * history[n - 6]) break;
  }
  if (rnorm <= opt.newton_tol) res.converged = true;
  res.x = x;
  res.Fx = Fx;
  res.rnorm = rnorm;
  return res;
}

FloquetData floquet_from(const ParamSet& p, const IntegratorOptions& iopt,
                         const State5& x) {
  // Monodromy = d/dx of the period map.  The Newton iteration tolerates a
  // crude forward-difference Jacobian, but the reported multipliers do not:
  // eigenvalues of the monodromy below the differencing noise floor are pure
  // noise.  Use central differences with a step that balances the O(h^2)
  // truncation against the integrator error, and integrate the probe
  // trajectories a couple of digits tighter than the Newton residuals.
  IntegratorOptions tight = iopt;
  tight.abs_tol = std::min(tight.abs_tol, 1e-12);
  tight.rel_tol = std::min(tight.rel_tol, 1e-11);
  Matrix5d M;
  for (int i = 0; i < 5; ++i) {
    const double h = 1e-4 * std::max(std::abs(x[i]), 1.0);
    State5 xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    const State5 fp = poincare_map(p, xp, tight);
    const State5 fm = poincare_map(p, xm, tight);
    for (int j = 0; j < 5; ++j) M(j, i) = (fp[j] - fm[j]) / (2.0 * h);
  }
  Eigen::EigenSolver<Matrix5d> es(M);
  FloquetData fd;
  for (int i = 0; i < 5; ++i) fd.multipliers[i] = es.eigenvalues()(i);
  std::sort(fd.multipliers.begin(), fd.multipliers.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              double ma = std::abs(a), mb = std::abs(b);
              if (ma != mb) return ma > mb;
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });
  fd.max_abs = std::abs(fd.multipliers[0]);
  return fd;
}

}  // namespace

State5 poincare_map(const ParamSet& p, const State5& x,
                    const IntegratorOptions& opt) {
  return integrate(model_field(p), 0.0, p.T, x, opt);
}

OrbitResult find_periodic_orbit(const ParamSet& p, const State5& x0,
                                const ShootingOptions& opt) {
  for (double v : x0) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw PercycleError(ErrorCode::precondition,
                          "shooting start must be finite and nonnegative");
    }
  }
  const PeriodResidual F{p, opt.integrator};
  OrbitResult out;

  NewtonAttempt at = newton_attempt(F, x0, opt, out.residual_history);
  out.newton_iterations = at.iterations;
  if (!at.converged) {
    // One rescue: ride the flow for a while, then shoot again from there.
    out.used_fallback = true;
    State5 settled =
        integrate(model_field(p), 0.0, opt.fallback_periods * p.T, at.x,
                  opt.integrator);
    at = newton_attempt(F, settled, opt, out.residual_history);
    out.newton_iterations += at.iterations;
    if (!at.converged) {
      throw PercycleError(
          ErrorCode::newton_failure,
          "shooting did not converge; best residual " +
              std::to_string(at.rnorm));
    }
  }
  out.x_star = at.x;
  out.residual_norm = at.rnorm;
  out.floquet = floquet_from(p, opt.integrator, at.x);
  return out;
}

OrbitCheck verify_orbit(const ParamSet& p, const State5& x_star,
                        const bounds::Box5& box, const ShootingOptions& opt) {
  OrbitCheck chk;
  DenseOutput dense;
  const State5 yT =
      integrate(model_field(p), 0.0, p.T, x_star, opt.integrator, &dense);
  State5 diff;
  for (std::size_t i = 0; i < 5; ++i) diff[i] = yT[i] - x_star[i];
  chk.defect = inf_norm(diff);
  chk.defect_limit = 10.0 * opt.newton_tol;

  const int n = std::max(2, opt.verify_samples);
  chk.inside_box = true;
  chk.positive = true;
  for (int k = 0; k < n; ++k) {
    const double t = p.T * k / (n - 1);
    const State5 v = dense.eval(t);
    for (std::size_t i = 0; i < 5; ++i) {
      if (k == 0) {
        chk.min_coord[i] = chk.max_coord[i] = v[i];
      } else {
        chk.min_coord[i] = std::min(chk.min_coord[i], v[i]);
        chk.max_coord[i] = std::max(chk.max_coord[i], v[i]);
      }
      chk.positive = chk.positive && v[i] > 0.0;
    }
    chk.inside_box = chk.inside_box && box.contains(v);
  }
  chk.pass = chk.inside_box && chk.positive && chk.defect <= chk.defect_limit;
  return chk;
}

}  // namespace percycle::solver
