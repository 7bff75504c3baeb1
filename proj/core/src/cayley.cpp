#include "octa/cayley.hpp"

#include <cmath>
#include <cstdlib>

#include "octa/errors.hpp"

namespace octa {

namespace {

const int kTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

Octonion col_oct(const Frame4& f, int m) { return to_oct(f.col(m)); }

}  // namespace

double cayley_plane_residual(const Plane4& p) {
  const Mat8 out = Mat8::Identity() - p.proj;
  double mx = 0.0;
  for (const auto& t : kTriples) {
    const Octonion c =
        cross3(col_oct(p.frame, t[0]), col_oct(p.frame, t[1]), col_oct(p.frame, t[2]));
    const double r = (out * to_vec(c)).norm();
    if (r > mx) mx = r;
  }
  return mx;
}

bool is_cayley_plane(const Plane4& p, double tol) {
  return cayley_plane_residual(p) < tol;
}

double cayley_frame_residual(const Frame4& f) {
  return norm(conj(col_oct(f, 1)) * col_oct(f, 0) -
              conj(col_oct(f, 2)) * col_oct(f, 3));
}

bool is_cayley_frame(const Frame4& f, double tol) {
  return cayley_frame_residual(f) < tol;
}

Mat8 right_mult_operator(const Octonion& u) {
  Mat8 m;
  for (int s = 0; s < 8; ++s) m.col(s) = to_vec(Octonion::unit(s) * u);
  return m;
}

TricomplexTriple tricomplex_of_plane(const Plane4& p) {
  if (cayley_plane_residual(p) > 1e-8)
    throw NotCayley("tricomplex_of_plane: plane fails the closure test");

  Octonion x, y, z;
  Eigen::Vector4d r;
  for (int m = 0; m < 4; ++m) r[m] = p.frame(0, m);

  if (r.norm() < 1e-8) {
    // The plane lies inside Im O. Drop the frame vector most parallel to the
    // cross product of the other three; on the unavoidable ties (closure
    // makes every score 1 here) the first index wins.
    double best = -1.0;
    int drop = 0;
    for (int m = 0; m < 4; ++m) {
      int o[3], n = 0;
      for (int s = 0; s < 4; ++s)
        if (s != m) o[n++] = s;
      const Octonion c =
          cross3(col_oct(p.frame, o[0]), col_oct(p.frame, o[1]), col_oct(p.frame, o[2]));
      const double score = std::abs(inner(col_oct(p.frame, m), c));
      if (score > best) {
        best = score;
        drop = m;
      }
    }
    Octonion* dst[3] = {&x, &y, &z};
    int n = 0;
    for (int m = 0; m < 4; ++m)
      if (m != drop) *dst[n++] = col_oct(p.frame, m);
  } else {
    // Intersection with Im O is the kernel of the real-part functional on
    // the plane: combinations c orthogonal to the real-part vector r.
    // Deterministic completion of r-hat to a basis of R^4.
    Eigen::Vector4d basis[4];
    int kept = 0;
    Eigen::Vector4d cand[5];
    cand[0] = r / r.norm();
    for (int s = 0; s < 4; ++s) cand[s + 1] = Eigen::Vector4d::Unit(s);
    for (int c = 0; c < 5 && kept < 4; ++c) {
      Eigen::Vector4d w = cand[c];
      for (int b = 0; b < kept; ++b) w -= basis[b].dot(w) * basis[b];
      const double n = w.norm();
      if (n < 1e-8) continue;
      basis[kept++] = w / n;
    }
    if (kept < 4) throw DegenerateInput("tricomplex_of_plane: completion failed");
    Octonion* dst[3] = {&x, &y, &z};
    for (int b = 1; b < 4; ++b) {
      Vec8 v = Vec8::Zero();
      for (int m = 0; m < 4; ++m) v += basis[b][m] * p.frame.col(m);
      *dst[b - 1] = to_oct(v);
    }
  }

  const TricomplexTriple t{cross2(y, z), cross2(z, x), cross2(x, y)};
  const double unit_res =
      std::max({std::abs(norm(t.u) - 1.0), std::abs(norm(t.v) - 1.0),
                std::abs(norm(t.w) - 1.0), std::abs(re(t.u)), std::abs(re(t.v)),
                std::abs(re(t.w)), std::abs(inner(t.u, t.v)),
                std::abs(inner(t.v, t.w)), std::abs(inner(t.u, t.w))});
  if (unit_res > 1e-9)
    throw DegenerateInput("tricomplex_of_plane: triple fails orthonormality");
  return t;
}

CayleyPlane make_cayley_plane(const Frame4& frame) {
  CayleyPlane p;
  p.plane = make_plane(frame);
  if (cayley_plane_residual(p.plane) > 1e-8)
    throw NotCayley("make_cayley_plane: plane fails the closure test");
  p.triple = tricomplex_of_plane(p.plane);
  p.I1 = right_mult_operator(p.triple.u);
  p.I2 = right_mult_operator(p.triple.v);
  p.I3 = right_mult_operator(p.triple.w);
  return p;
}

CayleyPlane cayley_plane_from_xyz(const Octonion& x, const Octonion& y, const Octonion& z) {
  const std::vector<Vec8> on = gram_schmidt({to_vec(x), to_vec(y), to_vec(z)});
  const Octonion ox = to_oct(on[0]), oy = to_oct(on[1]), oz = to_oct(on[2]);
  const Octonion w = cross3(ox, oy, oz);
  Frame4 f;
  f.col(0) = to_vec(w);
  f.col(1) = on[0];
  f.col(2) = on[1];
  f.col(3) = on[2];
  return make_cayley_plane(f);
}

CayleyPlane random_cayley_plane(Rng& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      return cayley_plane_from_xyz(rng.normal_octonion(), rng.normal_octonion(),
                                   rng.normal_octonion());
    } catch (const DegenerateInput&) {
    }
  }
  throw DegenerateInput("random_cayley_plane: repeated degenerate samples");
}

double hypercomplex_residual_at(const CayleyPlane& p, const Vec8& x) {
  const Vec8 i1 = p.I1 * x, i2 = p.I2 * x, i3 = p.I3 * x;
  const double sq = std::max({(p.I1 * i1 + x).norm(), (p.I2 * i2 + x).norm(),
                              (p.I3 * i3 + x).norm()});
  const double comp = std::max({(p.I2 * i1 - i3).norm(), (p.I1 * i2 + i3).norm(),
                                (p.I3 * i2 - i1).norm(), (p.I2 * i3 + i1).norm(),
                                (p.I1 * i3 - i2).norm(), (p.I3 * i1 + i2).norm()});
  return std::max(sq, comp);
}

double hypercomplex_check(const CayleyPlane& p) {
  double mx = 0.0;
  for (int m = 0; m < 4; ++m)
    mx = std::max(mx, hypercomplex_residual_at(p, p.plane.frame.col(m)));
  return mx;
}

CayleyPlane plane_from_tricomplex(const TricomplexTriple& t) {
  const Mat8 mu = right_mult_operator(t.u);
  const Mat8 mv = right_mult_operator(t.v);
  const Mat8 mw = right_mult_operator(t.w);
  const std::vector<Vec8> kern = kernel(mv * mu - mw, 1e-8);
  if (kern.size() != 4)
    throw BadKernelDimension("plane_from_tricomplex: kernel dimension " +
                             std::to_string(kern.size()));
  const Vec8 x0 = kern[0];
  Frame4 f;
  f.col(0) = x0;
  f.col(1) = mu * x0;
  f.col(2) = mv * x0;
  f.col(3) = mw * x0;

  CayleyPlane p;
  p.plane = make_plane(f);
  if (cayley_plane_residual(p.plane) > 1e-8)
    throw NotCayley("plane_from_tricomplex: result fails the closure test");
  p.triple = t;
  p.I1 = mu;
  p.I2 = mv;
  p.I3 = mw;
  if (hypercomplex_check(p) > 1e-8)
    throw NotCayley("plane_from_tricomplex: hypercomplex relations fail");
  return p;
}

Frame4 canonical_cayley_frame(const CayleyPlane& p) {
  const Vec8 x = p.plane.frame.col(0);
  Frame4 f;
  f.col(0) = x;
  f.col(1) = p.I1 * x;
  f.col(2) = p.I2 * x;
  f.col(3) = p.I3 * x;
  if (!is_cayley_frame(f, 1e-8))
    throw NotCayley("canonical_cayley_frame: frame fails the product test");
  return f;
}

}  // namespace octa
