#include "schubert/tracker.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "schubert/error.hpp"
#include "schubert/random.hpp"

namespace schubert::tracker {

namespace {

constexpr double kRankTol = 1e-8;
constexpr int kResamples = 5;

double max_norm(const ComplexVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

ComplexMatrix unit_circle_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.unit_circle();
  return m;
}

bool full_rank_at(const SquaredHomotopy& h, const ComplexVector& x) {
  ComplexMatrix jac;
  h.evaluate(x, 0.0, nullptr, &jac, nullptr);
  if (!all_finite(jac)) return false;
  // column equilibration: rank is invariant, badly scaled coordinates are not penalized
  for (Eigen::Index c = 0; c < jac.cols(); ++c) {
    double nrm = jac.col(c).norm();
    if (nrm > 0.0) jac.col(c) /= nrm;
  }
  auto s = singular_values(jac);
  const auto n = s.size();
  if (n == 0) return true;
  return s(0) > 0.0 && s(n - 1) / s(0) > kRankTol;
}

// Solve J dx = rhs by partial-pivot LU, reporting a reciprocal condition estimate.
bool lu_solve(const ComplexMatrix& j, const ComplexVector& rhs, ComplexVector& out, double& rcond) {
  Eigen::PartialPivLU<ComplexMatrix> lu(j);
  const auto& u = lu.matrixLU();
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    double d = std::abs(u(i, i));
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  rcond = hi > 0.0 ? lo / hi : 0.0;
  if (rcond < 1e-15) return false;
  out = lu.solve(rhs);
  return all_finite(out);
}

}  // namespace

Complex GammaPath::at(double s) const {
  if (reversed) s = 1.0 - s;
  const Complex g = std::polar(1.0, theta);
  return s * g / (1.0 + s * (g - 1.0));
}

Complex GammaPath::derivative(double s) const {
  double sign = 1.0;
  if (reversed) {
    s = 1.0 - s;
    sign = -1.0;
  }
  const Complex g = std::polar(1.0, theta);
  const Complex d = 1.0 + s * (g - 1.0);
  return sign * g / (d * d);
}

GammaPath gamma_path(std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x9a77a, 0));
  return {rng.uniform(0.1, std::numbers::pi - 0.1), false};
}

void SquaredHomotopy::evaluate(const ComplexVector& x, double s, ComplexVector* value, ComplexMatrix* jac,
                               ComplexVector* d_s) const {
  ComplexVector v, dt;
  ComplexMatrix j;
  base.evaluate(x, path.at(s), value ? &v : nullptr, jac ? &j : nullptr, d_s ? &dt : nullptr);
  if (value) *value = m * v;
  if (jac) *jac = m * j;
  if (d_s) *d_s = (m * dt) * path.derivative(s);
}

double SquaredHomotopy::full_residual(const ComplexVector& x, double s) const {
  return max_norm(base(x, path.at(s)));
}

SquaredHomotopy SquaredHomotopy::reverse() const {
  SquaredHomotopy r = *this;
  r.path = path.reverse();
  return r;
}

SquaredHomotopy square(const ParametricSystem& system, const std::vector<ComplexVector>& starts,
                       std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(system.num_equations());
  const auto vars = static_cast<Eigen::Index>(system.num_variables());
  if (n < vars) fail_argument("square: fewer equations than unknowns");
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (starts[i].size() != vars) fail_argument("square: start " + std::to_string(i) + " has the wrong dimension");
    double r = max_norm(system(starts[i], 0.0));
    if (!(r <= 1e-6 * std::max(1.0, starts[i].cwiseAbs().maxCoeff())))
      fail_argument("square: start " + std::to_string(i) + " is not a solution at t = 0 (residual " +
                    std::to_string(r) + ")");
  }
  SquaredHomotopy h{system, ComplexMatrix::Identity(vars, n), gamma_path(seed), seed};
  Rng rng(derive_seed(seed, 0x5a0a7e, 0));
  std::size_t bad = 0;
  for (int attempt = 0; attempt <= kResamples; ++attempt) {
    if (n != vars || attempt > 0) h.m = unit_circle_matrix(rng, vars, n);
    bad = starts.size();
    for (std::size_t i = 0; i < starts.size(); ++i)
      if (!full_rank_at(h, starts[i])) {
        bad = i;
        break;
      }
    if (bad == starts.size()) return h;
  }
  fail_nongeneric("square: Jacobian is rank deficient at start " + std::to_string(bad));
}

std::string to_string(PathStatus s) {
  switch (s) {
    case PathStatus::Success: return "Success";
    case PathStatus::Diverged: return "Diverged";
    case PathStatus::StepUnderflow: return "StepUnderflow";
    case PathStatus::MaxSteps: return "MaxSteps";
    case PathStatus::ResidualTooLarge: return "ResidualTooLarge";
  }
  return "?";
}

PathResult track(const SquaredHomotopy& h, const ComplexVector& start, const TrackOptions& opts) {
  if (!(opts.min_step > 0 && opts.min_step < opts.max_step && opts.max_step <= 1.0))
    fail_argument("track: need 0 < minStep < maxStep <= 1");
  PathResult res;
  res.theta = h.path.theta;
  ComplexVector x = start;
  double s = 0.0, step = std::min(opts.initial_step, opts.max_step);
  int easy = 0;

  auto velocity = [&](const ComplexVector& y, double at, ComplexVector& out) {
    ComplexMatrix j;
    ComplexVector ds;
    h.evaluate(y, at, nullptr, &j, &ds);
    double rc = 0.0;
    bool ok = lu_solve(j, -ds, out, rc);
    res.worst_rcond = std::min(res.worst_rcond, rc);
    return ok;
  };

  while (s < 1.0) {
    if (res.steps >= opts.max_steps) {
      res.status = PathStatus::MaxSteps;
      res.endpoint = x;
      res.final_residual = h.full_residual(x, s);
      return res;
    }
    const double ds = std::min(step, 1.0 - s);
    const double s1 = (1.0 - s - ds < 1e-14) ? 1.0 : s + ds;
    ComplexVector k1, k2, k3, k4, y;
    bool ok = velocity(x, s, k1) && velocity(x + 0.5 * ds * k1, s + 0.5 * ds, k2) &&
              velocity(x + 0.5 * ds * k2, s + 0.5 * ds, k3) && velocity(x + ds * k3, s1, k4);
    if (ok) {
      y = x + (ds / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      ok = false;
      for (int it = 0; it < opts.corrector_iters; ++it) {
        ComplexVector f, dx;
        ComplexMatrix j;
        h.evaluate(y, s1, &f, &j, nullptr);
        double rc = 0.0;
        if (!lu_solve(j, -f, dx, rc)) break;
        y += dx;
        if (dx.norm() <= opts.path_tol * (1.0 + y.norm())) {
          ok = true;
          break;
        }
      }
    }
    if (ok) {
      x = y;
      s = s1;
      ++res.steps;
      if (++easy >= 3) {
        step = std::min(2.0 * step, opts.max_step);
        easy = 0;
      }
      if (x.norm() > opts.divergence_norm) {
        res.status = PathStatus::Diverged;
        res.endpoint = x;
        res.final_residual = h.full_residual(x, s);
        return res;
      }
    } else {
      step *= 0.5;
      easy = 0;
      if (step < opts.min_step) {
        res.status = x.norm() > opts.underflow_divergence_norm ? PathStatus::Diverged : PathStatus::StepUnderflow;
        res.endpoint = x;
        res.final_residual = h.full_residual(x, s);
        return res;
      }
    }
  }

  // Gauss-Newton on the full system at the end of the path.
  const Complex t1 = h.path.at(1.0);
  double best = h.full_residual(x, 1.0);
  for (int it = 0; it < opts.max_newton_iters; ++it) {
    ComplexVector f;
    ComplexMatrix j;
    h.base.evaluate(x, t1, &f, &j, nullptr);
    ComplexVector dx = j.colPivHouseholderQr().solve(-f);
    if (!all_finite(dx)) break;
    ComplexVector y = x + dx;
    double r = h.full_residual(y, 1.0);
    if (r > best && dx.norm() > opts.newton_tol * (1.0 + x.norm())) break;
    if (r <= best) {
      x = y;
      best = r;
    }
    if (dx.norm() <= opts.end_refine_tol * (1.0 + x.norm())) break;
  }
  res.endpoint = x;
  res.final_residual = best;
  res.status = best < opts.success_residual ? PathStatus::Success : PathStatus::ResidualTooLarge;
  if (res.status != PathStatus::Success && x.norm() > opts.underflow_divergence_norm)
    res.status = PathStatus::Diverged;
  return res;
}

std::vector<PathResult> track_all(const SquaredHomotopy& h, const std::vector<ComplexVector>& starts,
                                  const TrackOptions& opts) {
  return track_each(std::vector<SquaredHomotopy>(starts.size(), h), starts, opts);
}

std::vector<PathResult> track_each(const std::vector<SquaredHomotopy>& hs, const std::vector<ComplexVector>& starts,
                                   const TrackOptions& opts) {
  if (hs.size() != starts.size()) fail_argument("track_each: one homotopy per start expected");
  std::vector<PathResult> out(starts.size());
  auto run = [&](std::size_t i) {
    const SquaredHomotopy& h = hs[i];
    PathResult r = track(h, starts[i], opts);
    int attempt = 1;
    while (r.status != PathStatus::Success && attempt <= opts.max_retries) {
      std::uint64_t seed = derive_seed(h.seed, i, static_cast<std::uint64_t>(attempt));
      SquaredHomotopy fresh = h;
      fresh.seed = seed;
      Rng rng(derive_seed(seed, 0x5a0a7e, 0));
      bool usable = h.m.rows() == h.m.cols();
      for (int k = 0; k <= kResamples && !usable; ++k) {
        fresh.m = unit_circle_matrix(rng, h.m.rows(), h.m.cols());
        usable = full_rank_at(fresh, starts[i]);
      }
      TrackOptions finer = opts;
      const double shrink = std::pow(0.5, attempt);
      finer.max_step = std::max(opts.max_step * shrink, 2.0 * opts.min_step);
      finer.initial_step = std::min(opts.initial_step * shrink, finer.max_step);
      if (usable) r = track(fresh, starts[i], finer);
      ++attempt;
    }
    r.attempts = attempt;
    r.path_id = static_cast<int>(i);
    out[i] = std::move(r);
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, starts.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < starts.size(); ++i) run(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < starts.size();) run(i);
    });
  pool.clear();
  return out;
}

}  // namespace schubert::tracker
