#include "octa/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "octa/errors.hpp"

namespace octa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Quaternion kQi{0, 1, 0, 0}, kQj{0, 0, 1, 0}, kQk{0, 0, 0, 1};

}  // namespace

SpherePoint frame_to_sphere(const Frame4& f) {
  SpherePoint h;
  for (int a = 0; a < 8; ++a)
    h.h[a] = {f(a, 0) / 2.0, f(a, 1) / 2.0, f(a, 2) / 2.0, f(a, 3) / 2.0};
  return h;
}

void sphere_to_vectors(const SpherePoint& h, Vec8& a, Vec8& b, Vec8& c, Vec8& d) {
  for (int s = 0; s < 8; ++s) {
    a[s] = h.h[s].w;
    b[s] = h.h[s].x;
    c[s] = h.h[s].y;
    d[s] = h.h[s].z;
  }
}

Frame4 sphere_to_frame(const SpherePoint& h) {
  Vec8 a, b, c, d;
  sphere_to_vectors(h, a, b, c, d);
  Frame4 f;
  f.col(0) = 2.0 * a;
  f.col(1) = 2.0 * b;
  f.col(2) = 2.0 * c;
  f.col(3) = 2.0 * d;
  return f;
}

double sphere_norm2(const SpherePoint& h) {
  double s = 0.0;
  for (const Quaternion& q : h.h) s += norm2(q);
  return s;
}

MomentMu moment_mu(const SpherePoint& h) {
  MomentMu m;
  for (const Quaternion& q : h.h) {
    const Quaternion qc = conj(q);
    m.mi = m.mi + qc * (kQi * q);
    m.mj = m.mj + qc * (kQj * q);
    m.mk = m.mk + qc * (kQk * q);
  }
  return m;
}

Quaternion moment_nu(const SpherePoint& h) {
  Quaternion s;
  for (int b = 0; b < 4; ++b) {
    const Quaternion &p = h.h[2 * b], &q = h.h[2 * b + 1];
    s = s + kNuOrientation[b] * (p * conj(q) - q * conj(p));
  }
  return s;
}

SpherePoint sp1_act(const SpherePoint& h, const Quaternion& q) {
  SpherePoint r;
  for (int a = 0; a < 8; ++a) r.h[a] = h.h[a] * q;
  return r;
}

SpherePoint u1_act(const SpherePoint& h, double theta) {
  SpherePoint r;
  for (int b = 0; b < 4; ++b) {
    const double c = std::cos(kU1Orientation[b] * theta);
    const double s = std::sin(kU1Orientation[b] * theta);
    r.h[2 * b] = c * h.h[2 * b] - s * h.h[2 * b + 1];
    r.h[2 * b + 1] = s * h.h[2 * b] + c * h.h[2 * b + 1];
  }
  return r;
}

SpherePoint tau_act(const SpherePoint& h) { return u1_act(h, std::numbers::pi / 2.0); }

ZeroSetResult in_zero_set(const SpherePoint& h, double tol) {
  const MomentMu m = moment_mu(h);
  const Quaternion n = moment_nu(h);
  ZeroSetResult r;
  r.mu_res = std::sqrt(norm2(im(m.mi)) + norm2(im(m.mj)) + norm2(im(m.mk)));
  r.nu_res = norm(im(n));
  r.in = r.mu_res < tol && r.nu_res < tol;
  return r;
}

double orbit_frame_residual(const SpherePoint& h, double theta) {
  return cayley_frame_residual(sphere_to_frame(u1_act(h, theta)));
}

std::vector<double> angle_search(const SpherePoint& h, double tol) {
  if (!in_zero_set(h, 1e-8).in) return {};

  constexpr int kGrid = 720;
  const double step = kTwoPi / kGrid;
  double r[kGrid];
  for (int i = 0; i < kGrid; ++i) r[i] = orbit_frame_residual(h, i * step);

  const auto f = [&](double t) { return orbit_frame_residual(h, t); };
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;

  std::vector<double> sols;
  for (int i = 0; i < kGrid; ++i) {
    const double prev = r[(i + kGrid - 1) % kGrid];
    const double next = r[(i + 1) % kGrid];
    // non-strict so that plateaus (residual identically zero on invariant
    // orbits) still count as minima
    if (!(r[i] <= prev && r[i] <= next && r[i] < 0.1)) continue;
    double a = i * step - step, b = i * step + step;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-12) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = f(d);
      }
    }
    const double t = std::fmod((a + b) / 2.0 + kTwoPi, kTwoPi);
    if (f(t) < tol) sols.push_back(t);
  }

  std::sort(sols.begin(), sols.end());
  std::vector<double> out;
  for (double s : sols)
    if (out.empty() || s - out.back() > 1e-6) out.push_back(s);
  if (out.size() > 1 && out.front() + kTwoPi - out.back() < 1e-6) out.pop_back();

  if (out.empty())
    throw NoSolution("angle_search: zero-set point with no angle below tolerance");
  return out;
}

Mat8 jstd_operator() { return right_mult_operator(Octonion::unit(1)); }

bool is_jstd_invariant(const Plane4& p, double tol) {
  const Mat8 j = jstd_operator();
  const Plane4 q{j * p.frame, j * p.proj * j.transpose()};
  return same_plane(p, q, tol);
}

namespace {

Eigen::VectorXd flat(const SpherePoint& h) {
  Eigen::VectorXd x(32);
  for (int a = 0; a < 8; ++a)
    for (int s = 0; s < 4; ++s) x[4 * a + s] = h.h[a][s];
  return x;
}

SpherePoint unflat(const Eigen::VectorXd& x) {
  SpherePoint h;
  for (int a = 0; a < 8; ++a)
    h.h[a] = {x[4 * a], x[4 * a + 1], x[4 * a + 2], x[4 * a + 3]};
  return h;
}

Eigen::MatrixXd central_diff(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& fn,
                             const Eigen::VectorXd& x0) {
  const double step = 1e-5;
  const Eigen::VectorXd f0 = fn(x0);
  Eigen::MatrixXd jac(f0.size(), x0.size());
  for (int i = 0; i < x0.size(); ++i) {
    Eigen::VectorXd xp = x0, xm = x0;
    xp[i] += step;
    xm[i] -= step;
    jac.col(i) = (fn(xp) - fn(xm)) / (2.0 * step);
  }
  return jac;
}

Eigen::VectorXd mu_nu_values(const SpherePoint& h) {
  const MomentMu m = moment_mu(h);
  const Quaternion n = moment_nu(h);
  Eigen::VectorXd v(12);
  v << m.mi.x, m.mi.y, m.mi.z, m.mj.x, m.mj.y, m.mj.z, m.mk.x, m.mk.y, m.mk.z,
      n.x, n.y, n.z;
  return v;
}

Eigen::VectorXd mu_frame_values(const SpherePoint& h) {
  const MomentMu m = moment_mu(h);
  const Frame4 f = sphere_to_frame(h);
  const Octonion res = conj(to_oct(f.col(1))) * to_oct(f.col(0)) -
                       conj(to_oct(f.col(2))) * to_oct(f.col(3));
  Eigen::VectorXd v(17);
  v << m.mi.x, m.mi.y, m.mi.z, m.mj.x, m.mj.y, m.mj.z, m.mk.x, m.mk.y, m.mk.z,
      res.c[0], res.c[1], res.c[2], res.c[3], res.c[4], res.c[5], res.c[6],
      res.c[7];
  return v;
}

int tangent_rank(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& fn,
                 const Eigen::VectorXd& x0, const char* what) {
  Eigen::MatrixXd jac = central_diff(fn, x0);
  const Eigen::MatrixXd tangent =
      Eigen::MatrixXd::Identity(x0.size(), x0.size()) - x0 * x0.transpose();
  jac = jac * tangent;
  const RankInfo info = numerical_rank(jac, 1e-6);
  if (info.gap < 10.0)
    throw RankAmbiguous(std::string(what) + ": spectral gap below 10 at the cut");
  return info.rank;
}

}  // namespace

int tangent_rank_zero_set(const SpherePoint& h) {
  return tangent_rank([](const Eigen::VectorXd& x) { return mu_nu_values(unflat(x)); },
                      flat(h), "tangent_rank_zero_set");
}

int tangent_rank_frame_point(const SpherePoint& h) {
  return tangent_rank(
      [](const Eigen::VectorXd& x) { return mu_frame_values(unflat(x)); }, flat(h),
      "tangent_rank_frame_point");
}

int tangent_rank_plane_chart(const CayleyPlane& p) {
  const Frame4 frame = p.plane.frame;
  const std::vector<Vec8> normals = kernel(p.plane.proj, 0.5);
  if (normals.size() != 4)
    throw BadKernelDimension("tangent_rank_plane_chart: complement dimension");

  const auto residual = [&](const Eigen::VectorXd& b) -> Eigen::VectorXd {
    std::vector<Vec8> g(4);
    for (int m = 0; m < 4; ++m) {
      g[m] = frame.col(m);
      for (int k = 0; k < 4; ++k) g[m] += b[4 * m + k] * normals[k];
    }
    const std::vector<Vec8> on = gram_schmidt(g);
    Frame4 gf;
    for (int m = 0; m < 4; ++m) gf.col(m) = on[m];
    const Mat8 out = Mat8::Identity() - projector(gf);
    const int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    Eigen::VectorXd v(32);
    for (int t = 0; t < 4; ++t) {
      const Octonion c = cross3(to_oct(gf.col(triples[t][0])), to_oct(gf.col(triples[t][1])),
                                to_oct(gf.col(triples[t][2])));
      v.segment<8>(8 * t) = out * to_vec(c);
    }
    return v;
  };

  const Eigen::MatrixXd jac = central_diff(residual, Eigen::VectorXd::Zero(16));
  const RankInfo info = numerical_rank(jac, 1e-6);
  if (info.gap < 10.0)
    throw RankAmbiguous("tangent_rank_plane_chart: spectral gap below 10 at the cut");
  return info.rank;
}

}  // namespace octa
