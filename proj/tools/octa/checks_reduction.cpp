#include <cmath>
#include <numbers>

#include <octa/cayley.hpp>
#include <octa/errors.hpp>
#include <octa/reduction.hpp>

#include "checks.hpp"
#include "fixtures.hpp"

namespace octa::cli {

namespace {

constexpr double kPi = std::numbers::pi;

SpherePoint random_sphere_point(Rng& rng) {
  SpherePoint h;
  for (int a = 0; a < 8; ++a) h.h[a] = rng.normal_quaternion();
  const double n = std::sqrt(sphere_norm2(h));
  for (int a = 0; a < 8; ++a) h.h[a] = (1.0 / n) * h.h[a];
  return h;
}

// A zero-set point with known provenance: Cayley frame, hidden rotation
// angle, hidden Sp(1) element.
SpherePoint forward_point(Rng& rng, double* theta_out = nullptr) {
  const CayleyPlane p = random_cayley_plane(rng);
  const SpherePoint h0 = frame_to_sphere(canonical_cayley_frame(p));
  const double theta = rng.uniform(0.0, 2.0 * kPi);
  if (theta_out) *theta_out = theta;
  return sp1_act(u1_act(h0, theta), rng.unit_quaternion());
}

double quat_dist(const Quaternion& a, const Quaternion& b) { return norm(a - b); }

CheckResult moment_pins(const CheckContext& ctx) {
  CheckResult r{"reduction.moment_pins", 1, 0.0, 1e-12, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);

  const SpherePoint hq = frame_to_sphere(hframe_fixture());
  const MomentMu m = moment_mu(hq);
  double res = std::max({norm(im(m.mi)), norm(im(m.mj)), norm(im(m.mk))});
  res = std::max(res, norm(im(moment_nu(hq))));

  // frame (1, i, j, e): nu = i/2
  Frame4 f = Frame4::Zero();
  f(0, 0) = 1.0;
  f(1, 1) = 1.0;
  f(2, 2) = 1.0;
  f(4, 3) = 1.0;
  const Quaternion nu = moment_nu(frame_to_sphere(f));
  res = std::max(res, quat_dist(nu, Quaternion{0.0, 0.5, 0.0, 0.0}));

  r.max_residual = res;
  r.pass = res < r.threshold;
  return r;
}

// mu(h q) = conj(q) mu(h) q, componentwise in (i, j, k).
CheckResult mu_sp1_equivariance(const CheckContext& ctx) {
  CheckResult r{"reduction.mu_sp1_equivariance", ctx.trials, 0.0, 1e-12, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, ctx.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const SpherePoint h = random_sphere_point(rng);
    const Quaternion q = rng.unit_quaternion();
    const MomentMu lhs = moment_mu(sp1_act(h, q));
    const MomentMu m = moment_mu(h);
    const Quaternion qc = conj(q);
    double res = quat_dist(lhs.mi, qc * (m.mi * q));
    res = std::max(res, quat_dist(lhs.mj, qc * (m.mj * q)));
    res = std::max(res, quat_dist(lhs.mk, qc * (m.mk * q)));
    return TrialOut{res, 0, 0};
  });
  r.max_residual = s.max_res;
  r.pass = s.max_res < r.threshold;
  return r;
}

CheckResult mu_u1_invariance(const CheckContext& ctx) {
  CheckResult r{"reduction.mu_u1_invariance", ctx.trials, 0.0, 1e-12, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, ctx.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const SpherePoint h = random_sphere_point(rng);
    const MomentMu lhs = moment_mu(u1_act(h, rng.uniform(0.0, 2.0 * kPi)));
    const MomentMu m = moment_mu(h);
    const double res = std::max(
        {quat_dist(lhs.mi, m.mi), quat_dist(lhs.mj, m.mj), quat_dist(lhs.mk, m.mk)});
    return TrialOut{res, 0, 0};
  });
  r.max_residual = s.max_res;
  r.pass = s.max_res < r.threshold;
  return r;
}

// Tests nu(h q) = conj(q) nu(h) q on generic sphere points. The observed
// behavior of this nu is plain invariance, nu(h q) = nu(h), which is what
// the zero set and the quotient construction actually use; the conjugation
// form fails whenever nu(h) does not commute with q. Reported as a finding,
// not patched over. See the note for the invariance residual.
CheckResult nu_sp1_equivariance(const CheckContext& ctx) {
  CheckResult r{"reduction.nu_sp1_equivariance", ctx.trials, 0.0, 1e-12, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, ctx.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const SpherePoint h = random_sphere_point(rng);
    const Quaternion q = rng.unit_quaternion();
    const Quaternion lhs = moment_nu(sp1_act(h, q));
    const Quaternion n = moment_nu(h);
    return TrialOut{quat_dist(lhs, conj(q) * (n * q)), 0, 0};
  });
  r.max_residual = s.max_res;
  r.pass = s.max_res < r.threshold;
  r.note = "conjugation form; the invariance form nu(hq)=nu(h) holds (see "
           "reduction.nu_sp1_invariance)";
  return r;
}

CheckResult nu_sp1_invariance(const CheckContext& ctx) {
  CheckResult r{"reduction.nu_sp1_invariance", ctx.trials, 0.0, 1e-12, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, ctx.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const SpherePoint h = random_sphere_point(rng);
    const Quaternion q = rng.unit_quaternion();
    return TrialOut{quat_dist(moment_nu(sp1_act(h, q)), moment_nu(h)), 0, 0};
  });
  r.max_residual = s.max_res;
  r.pass = s.max_res < r.threshold;
  return r;
}

CheckResult nu_u1_invariance(const CheckContext& ctx) {
  CheckResult r{"reduction.nu_u1_invariance", ctx.trials, 0.0, 1e-12, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, ctx.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const SpherePoint h = random_sphere_point(rng);
    return TrialOut{
        quat_dist(moment_nu(u1_act(h, rng.uniform(0.0, 2.0 * kPi))), moment_nu(h)), 0, 0};
  });
  r.max_residual = s.max_res;
  r.pass = s.max_res < r.threshold;
  return r;
}

// Every U(1) x Sp(1) translate of a Cayley-frame point lies on the common
// zero set.
CheckResult orbit_forward(const CheckContext& ctx) {
  CheckResult r{"reduction.orbit_forward", 10 * ctx.trials, 0.0, 1e-9, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, r.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const ZeroSetResult z = in_zero_set(forward_point(rng), 1.0);
    return TrialOut{std::max(z.mu_res, z.nu_res), 0, 0};
  });
  r.max_residual = s.max_res;
  r.pass = s.max_res < r.threshold;
  return r;
}

// Reverse direction at desk scale: hidden-parameter zero-set points must
// admit an angle whose rotated frame closes, and the returned angle set is
// closed under adding pi/2.
CheckResult angle_search_check(const CheckContext& ctx) {
  CheckResult r{"reduction.angle_search", ctx.trials, 0.0, 1e-8, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const double tol = r.threshold;
  const TrialStats s = run_trials(ctx, r.name, ctx.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const SpherePoint h = forward_point(rng);
    TrialOut out;
    try {
      const std::vector<double> sols = angle_search(h, tol);
      double best = 1.0;
      for (double th : sols) best = std::min(best, orbit_frame_residual(h, th));
      out.res = best;
      for (double th : sols) {
        const double target = std::fmod(th + kPi / 2.0, 2.0 * kPi);
        double dist = 1.0;
        for (double other : sols) {
          double d = std::abs(other - target);
          d = std::min(d, 2.0 * kPi - d);
          dist = std::min(dist, d);
        }
        if (dist > 1e-5) ++out.b;
      }
    } catch (const NoSolution&) {
      out.a = 1;
      out.res = 1.0;
    }
    return out;
  });
  r.max_residual = s.max_res;
  r.pass = s.a == 0 && s.b == 0 && s.max_res < tol;
  r.note = std::to_string(s.a) + " points without a solution, " + std::to_string(s.b) +
           " angles breaking pi/2 closure";
  return r;
}

// Pinned reverse case: hidden angle pi/3 on the frame (1, i, j, k), with
// the 4-element expected set {pi/6, 2pi/3, 7pi/6, 5pi/3}. The span of
// (1, i, j, k) is closed under the circle action, so the orbit residual is
// identically zero and every angle qualifies; the search therefore returns
// the whole deduplicated grid, not 4 elements. Reported as-is.
CheckResult angle_search_pinned(const CheckContext& ctx) {
  CheckResult r{"reduction.angle_search_pinned", 1, 0.0, 0.5, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const SpherePoint h = u1_act(frame_to_sphere(hframe_fixture()), kPi / 3.0);
  const double expected[4] = {kPi / 6.0, 2.0 * kPi / 3.0, 7.0 * kPi / 6.0,
                              5.0 * kPi / 3.0};
  long long bad = 0;
  std::size_t count = 0;
  try {
    const std::vector<double> sols = angle_search(h, 1e-8);
    count = sols.size();
    if (count != 4) {
      bad = static_cast<long long>(count > 4 ? count - 4 : 4 - count);
    } else {
      for (int m = 0; m < 4; ++m)
        if (std::abs(sols[m] - expected[m]) > 1e-8) ++bad;
    }
  } catch (const NoSolution&) {
    bad = 4;
  }
  r.max_residual = static_cast<double>(bad);
  r.pass = bad == 0;
  r.note = "returned " + std::to_string(count) +
           " angles; the orbit keeps the frame equation satisfied at every "
           "angle, so no 4-element set exists";
  return r;
}

// tau^2 maps every frame to its negative: same plane, orientation +1.
CheckResult tau_squared(const CheckContext& ctx) {
  CheckResult r{"reduction.tau_squared", ctx.trials, 0.0, 0.5, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, ctx.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const CayleyPlane p = random_cayley_plane(rng);
    const Frame4 f2 = sphere_to_frame(tau_act(tau_act(frame_to_sphere(p.plane.frame))));
    TrialOut out;
    if (!same_plane(make_plane(f2), p.plane, 1e-8)) out.a = 1;
    if (orientation_sign(f2, p.plane.frame) != 1) out.a = 1;
    out.res = static_cast<double>(out.a);
    return out;
  });
  r.max_residual = static_cast<double>(s.a);
  r.pass = s.a == 0;
  return r;
}

// tau fixes span{1,i,j,k} and the worked example plane; both are
// jstd-invariant.
CheckResult tau_pins(const CheckContext& ctx) {
  CheckResult r{"reduction.tau_pins", 1, 0.0, 0.5, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  long long bad = 0;
  for (const Frame4& f : {hframe_fixture(), example_plane_frame()}) {
    const Plane4 p = make_plane(f);
    const Frame4 tf = sphere_to_frame(tau_act(frame_to_sphere(f)));
    if (!same_plane(make_plane(tf), p, 1e-8)) ++bad;
    if (!is_jstd_invariant(p, 1e-8)) ++bad;
  }
  r.max_residual = static_cast<double>(bad);
  r.pass = bad == 0;
  return r;
}

// The tau-fixed planes form a measure-zero stratum: the invariant fraction
// among random Cayley planes stays below 1%, and the fixed-plane test
// agrees with jstd-invariance everywhere.
CheckResult tau_stratum_fraction(const CheckContext& ctx) {
  CheckResult r{"reduction.tau_stratum_fraction", ctx.trials, 0.0, 0.01, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, ctx.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const CayleyPlane p = random_cayley_plane(rng);
    const bool inv = is_jstd_invariant(p.plane, 1e-8);
    const Frame4 tf = sphere_to_frame(tau_act(frame_to_sphere(p.plane.frame)));
    const bool fixed = same_plane(make_plane(tf), p.plane, 1e-8);
    TrialOut out;
    out.a = inv ? 1 : 0;
    out.b = inv != fixed ? 1 : 0;
    return out;
  });
  const double frac = static_cast<double>(s.a) / static_cast<double>(ctx.trials);
  r.max_residual = frac + static_cast<double>(s.b);
  r.pass = frac < r.threshold && s.b == 0;
  r.note = std::to_string(s.a) + " invariant planes, " + std::to_string(s.b) +
           " disagreements with the fixed-plane test";
  return r;
}

template <class Sampler, class RankFn>
CheckResult rank_check(const CheckContext& ctx, const char* name, int expected,
                       Sampler sample, RankFn rank_of) {
  const long long n = std::max<long long>(1, ctx.trials / 50);
  CheckResult r{name, n, 0.0, 0.5, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, n, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    TrialOut out;
    for (int attempt = 0; attempt < 8; ++attempt) {
      auto point = sample(rng);
      try {
        const int rank = rank_of(point);
        if (rank != expected) {
          out.a = 1;
          out.res = std::abs(static_cast<double>(rank - expected));
        }
        return out;
      } catch (const RankAmbiguous&) {
        ++out.b;
      }
    }
    out.a = 1;
    out.res = 1.0;
    return out;
  });
  r.max_residual = s.max_res;
  r.pass = s.a == 0;
  r.note = std::to_string(s.b) + " ambiguous samples redrawn";
  return r;
}

CheckResult rank_plane_chart(const CheckContext& ctx) {
  return rank_check(
      ctx, "reduction.rank_plane_chart", 4,
      [](Rng& rng) { return random_cayley_plane(rng); },
      [](const CayleyPlane& p) { return tangent_rank_plane_chart(p); });
}

CheckResult rank_frame_point(const CheckContext& ctx) {
  return rank_check(
      ctx, "reduction.rank_frame_point", 13,
      [](Rng& rng) {
        return frame_to_sphere(canonical_cayley_frame(random_cayley_plane(rng)));
      },
      [](const SpherePoint& h) { return tangent_rank_frame_point(h); });
}

CheckResult rank_zero_set(const CheckContext& ctx) {
  return rank_check(
      ctx, "reduction.rank_zero_set", 12, [](Rng& rng) { return forward_point(rng); },
      [](const SpherePoint& h) { return tangent_rank_zero_set(h); });
}

// Diagnostic, excluded from the verdict: solve (mu, nu) = 0 from random
// starts by projected Gauss-Newton and feed converged points to the angle
// search. Zero-set points found without construction provenance exercising
// the reverse direction from scratch.
CheckResult newton_diagnostic(const CheckContext& ctx) {
  const long long n = std::max<long long>(1, ctx.trials / 100);
  CheckResult r{"reduction.newton_diagnostic", n, 0.0, 1e-8, false, true, ""};
  r.threshold = ctx.tol(r.name, r.threshold);

  const auto values = [](const Eigen::VectorXd& x) {
    SpherePoint h;
    for (int a = 0; a < 8; ++a)
      h.h[a] = {x[4 * a], x[4 * a + 1], x[4 * a + 2], x[4 * a + 3]};
    const MomentMu m = moment_mu(h);
    const Quaternion nu = moment_nu(h);
    Eigen::VectorXd v(12);
    v << m.mi.x, m.mi.y, m.mi.z, m.mj.x, m.mj.y, m.mj.z, m.mk.x, m.mk.y, m.mk.z,
        nu.x, nu.y, nu.z;
    return v;
  };

  const TrialStats s = run_trials(ctx, r.name, n, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    Eigen::VectorXd x(32);
    for (int sl = 0; sl < 32; ++sl) x[sl] = rng.normal();
    x.normalize();
    TrialOut out;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      const Eigen::VectorXd g = values(x);
      if (g.norm() < 1e-12) {
        converged = true;
        break;
      }
      const double step = 1e-6;
      Eigen::MatrixXd jac(12, 32);
      for (int c = 0; c < 32; ++c) {
        Eigen::VectorXd xp = x, xm = x;
        xp[c] += step;
        xm[c] -= step;
        jac.col(c) = (values(xp) - values(xm)) / (2.0 * step);
      }
      const Eigen::MatrixXd jt = jac.transpose();
      x -= jt * (jac * jt).ldlt().solve(g);
      x.normalize();
    }
    if (!converged) return out;
    out.a = 1;
    SpherePoint h;
    for (int a = 0; a < 8; ++a)
      h.h[a] = {x[4 * a], x[4 * a + 1], x[4 * a + 2], x[4 * a + 3]};
    try {
      const std::vector<double> sols = angle_search(h, 1e-8);
      double best = 1.0;
      for (double th : sols) best = std::min(best, orbit_frame_residual(h, th));
      out.res = best;
      out.b = 1;
    } catch (const NoSolution&) {
      out.res = 1.0;
    }
    return out;
  });
  r.max_residual = s.max_res;
  r.pass = true;
  r.note = std::to_string(s.a) + " of " + std::to_string(n) + " starts converged, " +
           std::to_string(s.b) + " of those passed the angle search";
  return r;
}

}  // namespace

std::vector<Check> reduction_checks() {
  return {
      {"reduction.moment_pins", moment_pins},
      {"reduction.mu_sp1_equivariance", mu_sp1_equivariance},
      {"reduction.mu_u1_invariance", mu_u1_invariance},
      {"reduction.nu_sp1_equivariance", nu_sp1_equivariance},
      {"reduction.nu_sp1_invariance", nu_sp1_invariance},
      {"reduction.nu_u1_invariance", nu_u1_invariance},
      {"reduction.orbit_forward", orbit_forward},
      {"reduction.angle_search", angle_search_check},
      {"reduction.angle_search_pinned", angle_search_pinned},
      {"reduction.tau_squared", tau_squared},
      {"reduction.tau_pins", tau_pins},
      {"reduction.tau_stratum_fraction", tau_stratum_fraction},
      {"reduction.rank_plane_chart", rank_plane_chart},
      {"reduction.rank_frame_point", rank_frame_point},
      {"reduction.rank_zero_set", rank_zero_set},
      {"reduction.newton_diagnostic", newton_diagnostic},
  };
}

}  // namespace octa::cli
