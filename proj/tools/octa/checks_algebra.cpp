#include <cmath>

#include <octa/octonion.hpp>
#include <octa/quaternion.hpp>

#include "checks.hpp"

namespace octa::cli {

namespace {

// i*e = f, j*e = g, k*e = h, plus the non-associativity witness
// (ij)e = h, i(je) = -h. Exact slot and sign matches.
CheckResult mul_table_pins(const CheckContext& ctx) {
  CheckResult r{"algebra.mul_table_pins", 1, 0.0, 0.5, false, false, ""};
  const Octonion i = Octonion::unit(1), j = Octonion::unit(2), k = Octonion::unit(3),
                 e = Octonion::unit(4), f = Octonion::unit(5), g = Octonion::unit(6),
                 h = Octonion::unit(7);
  long long bad = 0;
  bad += !(i * e == f);
  bad += !(j * e == g);
  bad += !(k * e == h);
  bad += !((i * j) * e == h);
  bad += !(i * (j * e) == -h);
  bad += !(associator(i, j, e) == 2.0 * h);
  // the table path must agree with the pair construction on all 64 products
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q) {
      const Octonion lhs = mul(Octonion::unit(p), Octonion::unit(q));
      const Octonion rhs = mul_cd(Octonion::unit(p), Octonion::unit(q));
      if (!(lhs == rhs)) ++bad;
    }
  r.max_residual = static_cast<double>(bad);
  r.pass = bad == 0;
  r.threshold = ctx.tol(r.name, r.threshold);
  return r;
}

// The Hamilton product and the table path restricted to the first four
// slots accumulate the same monomials in the same order, so quaternion
// results embed bit-identically.
CheckResult quaternion_embed_bitwise(const CheckContext& ctx) {
  CheckResult r{"algebra.quaternion_embed_bitwise", ctx.trials, 0.0, 0.5, false, false, ""};
  const TrialStats s = run_trials(ctx, r.name, r.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const Quaternion a = rng.normal_quaternion(), b = rng.normal_quaternion();
    const Quaternion ab = a * b;
    Octonion oa{}, ob{};
    for (int sl = 0; sl < 4; ++sl) {
      oa.c[sl] = a[sl];
      ob.c[sl] = b[sl];
    }
    const Octonion oab = oa * ob;
    TrialOut out;
    for (int sl = 0; sl < 4; ++sl)
      if (oab.c[sl] != ab[sl] || oab.c[sl + 4] != 0.0) out.a = 1;
    out.res = static_cast<double>(out.a);
    return out;
  });
  r.max_residual = static_cast<double>(s.a);
  r.pass = s.a == 0;
  r.threshold = ctx.tol(r.name, r.threshold);
  return r;
}

CheckResult conj_antihomomorphism(const CheckContext& ctx) {
  CheckResult r{"algebra.conj_antihomomorphism", 10 * ctx.trials, 0.0, 1e-11, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, r.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const Octonion x = rng.unit_octonion(), y = rng.unit_octonion();
    return TrialOut{norm(conj(x * y) - conj(y) * conj(x)), 0, 0};
  });
  r.max_residual = s.max_res;
  r.pass = s.max_res < r.threshold;
  return r;
}

// [x,y,z] changes sign under transpositions and vanishes when two
// arguments are equal or conjugate.
CheckResult associator_alternation(const CheckContext& ctx) {
  CheckResult r{"algebra.associator_alternation", 10 * ctx.trials, 0.0, 1e-11, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, r.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const Octonion x = rng.unit_octonion(), y = rng.unit_octonion(), z = rng.unit_octonion();
    const Octonion base = associator(x, y, z);
    double res = norm(base + associator(y, x, z));
    res = std::max(res, norm(base + associator(x, z, y)));
    res = std::max(res, norm(base + associator(z, y, x)));
    res = std::max(res, norm(associator(x, x, z)));
    res = std::max(res, norm(associator(x, y, y)));
    res = std::max(res, norm(associator(x, y, x)));
    res = std::max(res, norm(associator(x, conj(x), z)));
    res = std::max(res, norm(associator(x, y, conj(y))));
    return TrialOut{res, 0, 0};
  });
  r.max_residual = s.max_res;
  r.pass = s.max_res < r.threshold;
  return r;
}

// x(conj(y)w) = -y(conj(x)w) and (w conj(y))x = -(w conj(x))y for
// orthogonal x, y.
CheckResult orthogonal_pair_identity(const CheckContext& ctx) {
  CheckResult r{"algebra.orthogonal_pair_identity", 10 * ctx.trials, 0.0, 1e-11, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, r.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const Octonion x = rng.unit_octonion();
    Octonion y = rng.normal_octonion();
    y = y - inner(y, x) * x;
    while (norm(y) < 1e-6) {
      y = rng.normal_octonion();
      y = y - inner(y, x) * x;
    }
    y = normalized(y);
    const Octonion w = rng.unit_octonion();
    return TrialOut{orthogonal_pair_residual(x, y, w), 0, 0};
  });
  r.max_residual = s.max_res;
  r.pass = s.max_res < r.threshold;
  return r;
}

CheckResult moufang(const CheckContext& ctx) {
  CheckResult r{"algebra.moufang", 10 * ctx.trials, 0.0, 1e-11, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  const TrialStats s = run_trials(ctx, r.name, r.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    return TrialOut{
        moufang_residual(rng.unit_octonion(), rng.unit_octonion(), rng.unit_octonion()),
        0, 0};
  });
  r.max_residual = s.max_res;
  r.pass = s.max_res < r.threshold;
  return r;
}

// cross2(i,j) = k exactly; cross2 equals the algebra product on orthogonal
// imaginary pairs.
CheckResult cross2(const CheckContext& ctx) {
  CheckResult r{"algebra.cross2", 10 * ctx.trials, 0.0, 1e-12, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  long long pin_bad =
      !(octa::cross2(Octonion::unit(1), Octonion::unit(2)) == Octonion::unit(3));
  const TrialStats s = run_trials(ctx, r.name, r.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    const Octonion x = rng.unit_imaginary_octonion();
    Octonion y = rng.normal_octonion();
    y.c[0] = 0.0;
    y = y - inner(y, x) * x;
    while (norm(y) < 1e-6) {
      y = rng.normal_octonion();
      y.c[0] = 0.0;
      y = y - inner(y, x) * x;
    }
    y = normalized(y);
    return TrialOut{norm(octa::cross2(x, y) - x * y), 0, 0};
  });
  r.max_residual = std::max(s.max_res, static_cast<double>(pin_bad));
  r.pass = pin_bad == 0 && s.max_res < r.threshold;
  if (pin_bad) r.note = "pin cross2(i,j)=k failed";
  return r;
}

// cross3(i,j,k) = 1 exactly; for orthonormal inputs the result is a unit
// vector orthogonal to all three.
CheckResult cross3(const CheckContext& ctx) {
  CheckResult r{"algebra.cross3", 10 * ctx.trials, 0.0, 1e-10, false, false, ""};
  r.threshold = ctx.tol(r.name, r.threshold);
  long long pin_bad = !(octa::cross3(Octonion::unit(1), Octonion::unit(2),
                                     Octonion::unit(3)) == Octonion::unit(0));
  const TrialStats s = run_trials(ctx, r.name, r.trials, [&](long long t) {
    Rng rng = ctx.rng(r.name, t);
    Octonion v[3];
    for (int m = 0; m < 3; ++m) {
      Octonion w = rng.normal_octonion();
      for (int p = 0; p < m; ++p) w = w - inner(w, v[p]) * v[p];
      while (norm(w) < 1e-6) {
        w = rng.normal_octonion();
        for (int p = 0; p < m; ++p) w = w - inner(w, v[p]) * v[p];
      }
      v[m] = normalized(w);
    }
    const Octonion c = octa::cross3(v[0], v[1], v[2]);
    double res = std::abs(norm(c) - 1.0);
    for (int m = 0; m < 3; ++m) res = std::max(res, std::abs(inner(c, v[m])));
    return TrialOut{res, 0, 0};
  });
  r.max_residual = std::max(s.max_res, static_cast<double>(pin_bad));
  r.pass = pin_bad == 0 && s.max_res < r.threshold;
  if (pin_bad) r.note = "pin cross3(i,j,k)=1 failed";
  return r;
}

}  // namespace

std::vector<Check> algebra_checks() {
  return {
      {"algebra.mul_table_pins", mul_table_pins},
      {"algebra.quaternion_embed_bitwise", quaternion_embed_bitwise},
      {"algebra.conj_antihomomorphism", conj_antihomomorphism},
      {"algebra.associator_alternation", associator_alternation},
      {"algebra.orthogonal_pair_identity", orthogonal_pair_identity},
      {"algebra.moufang", moufang},
      {"algebra.cross2", cross2},
      {"algebra.cross3", cross3},
  };
}

}  // namespace octa::cli
