#include <octa/cayley.hpp>
#include <octa/errors.hpp>

#include <doctest.h>

#include <cmath>

using namespace octa;

namespace {

Frame4 quaternion_frame() {
  Frame4 f = Frame4::Zero();
  for (int s = 0; s < 4; ++s) f(s, s) = 1.0;
  return f;
}

// span{1-h, i+g, j-f, k+e} / sqrt(2), ordered (w, x, y, z)
Frame4 example_frame() {
  const double s = 1.0 / std::sqrt(2.0);
  Frame4 f = Frame4::Zero();
  f(0, 0) = s; f(7, 0) = -s;
  f(1, 1) = s; f(6, 1) = s;
  f(2, 2) = s; f(5, 2) = -s;
  f(3, 3) = s; f(4, 3) = s;
  return f;
}

double span_distance(const TricomplexTriple& a, const TricomplexTriple& b) {
  auto proj3 = [](const TricomplexTriple& t) {
    const Vec8 u = to_vec(t.u), v = to_vec(t.v), w = to_vec(t.w);
    return Mat8(u * u.transpose() + v * v.transpose() + w * w.transpose());
  };
  return (proj3(a) - proj3(b)).norm();
}

}  // namespace

TEST_CASE("worked example plane") {
  const Frame4 f = example_frame();
  CHECK(cayley_frame_residual(f) < 1e-14);
  CHECK(is_cayley_frame(f, 1e-10));

  const CayleyPlane p = make_cayley_plane(f);
  CHECK(cayley_plane_residual(p.plane) < 1e-10);
  CHECK(is_cayley_plane(p.plane, 1e-10));

  // both frame products equal -i
  const Octonion prod = conj(to_oct(f.col(1))) * to_oct(f.col(0));
  CHECK(norm(prod + Octonion::unit(1)) < 1e-14);
  CHECK(norm(conj(to_oct(f.col(2))) * to_oct(f.col(3)) + Octonion::unit(1)) < 1e-14);

  // tricomplex triple spans span{i, j, e}
  const TricomplexTriple ije{Octonion::unit(1), Octonion::unit(2), Octonion::unit(4)};
  CHECK(span_distance(p.triple, ije) < 1e-12);

  // and regenerates the same plane
  const CayleyPlane back = plane_from_tricomplex(ije);
  CHECK(same_plane(back.plane, p.plane, 1e-8));
}

TEST_CASE("hypercomplex relations on the example") {
  const CayleyPlane p = make_cayley_plane(example_frame());
  CHECK(hypercomplex_check(p) < 1e-12);

  // the triple acts on the frame like the quaternion units: with frame
  // (w,x,y,z), right multiplication sends y -> -z, x -> z, x -> -y
  const Vec8 x = p.plane.frame.col(1), y = p.plane.frame.col(2), z = p.plane.frame.col(3);
  CHECK((p.I1 * y + z).norm() < 1e-13);
  CHECK((p.I2 * x - z).norm() < 1e-13);
  CHECK((p.I3 * x + y).norm() < 1e-13);

  // relations fail away from the plane
  CHECK(hypercomplex_residual_at(p, Vec8::Unit(1)) > 0.1);
}

TEST_CASE("quaternion plane pins") {
  const CayleyPlane p = make_cayley_plane(quaternion_frame());
  CHECK(cayley_plane_residual(p.plane) < 1e-14);
  // intersection with the imaginary part is 3-dimensional: triple is (i,j,k)
  const TricomplexTriple ijk{Octonion::unit(1), Octonion::unit(2), Octonion::unit(3)};
  CHECK(span_distance(p.triple, ijk) < 1e-12);
  const CayleyPlane back = plane_from_tricomplex(ijk);
  CHECK(same_plane(back.plane, p.plane, 1e-10));
}

TEST_CASE("fully imaginary plane uses the drop rule") {
  // span{i, j, e, h} meets Im O in dimension 4
  Frame4 f = Frame4::Zero();
  f(1, 0) = 1.0; f(2, 1) = 1.0; f(4, 2) = 1.0; f(7, 3) = 1.0;
  const CayleyPlane p = make_cayley_plane(f);
  const TricomplexTriple kfg{Octonion::unit(3), Octonion::unit(5), Octonion::unit(6)};
  CHECK(span_distance(p.triple, kfg) < 1e-12);
  CHECK(same_plane(plane_from_tricomplex(p.triple).plane, p.plane, 1e-8));
}

TEST_CASE("non-closing frames are rejected") {
  Frame4 f = quaternion_frame();
  f(3, 3) = 0.0;
  f(4, 3) = 1.0;  // (1, i, j, e) does not close
  CHECK(cayley_frame_residual(f) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(!is_cayley_frame(f, 1e-8));
  CHECK_THROWS_AS(make_cayley_plane(f), NotCayley);
}

TEST_CASE("degenerate tricomplex triples are rejected") {
  const TricomplexTriple iik{Octonion::unit(1), Octonion::unit(1), Octonion::unit(3)};
  CHECK_THROWS_AS(plane_from_tricomplex(iik), BadKernelDimension);
}

TEST_CASE("random cayley planes close and round trip") {
  for (int t = 0; t < 25; ++t) {
    Rng rng = Rng::derive(5, "unit", "cayley_rand", t);
    const CayleyPlane p = random_cayley_plane(rng);
    CHECK(cayley_plane_residual(p.plane) < 1e-12);
    CHECK(frame_gram_residual(p.plane.frame) < 1e-12);
    CHECK(hypercomplex_check(p) < 1e-10);

    // triple is orthonormal imaginary
    CHECK(std::abs(re(p.triple.u)) < 1e-14);
    CHECK(std::abs(norm(p.triple.v) - 1.0) < 1e-12);
    CHECK(std::abs(inner(p.triple.u, p.triple.w)) < 1e-12);

    const TricomplexTriple t2 = tricomplex_of_plane(p.plane);
    CHECK(span_distance(p.triple, t2) < 1e-7);
    CHECK(same_plane(plane_from_tricomplex(t2).plane, p.plane, 1e-7));

    // canonical frame spans the plane and closes
    const Frame4 cf = canonical_cayley_frame(p);
    CHECK(cayley_frame_residual(cf) < 1e-10);
    CHECK(same_plane(make_plane(cf), p.plane, 1e-10));
  }
}

TEST_CASE("cayley_plane_from_xyz reproduces its inputs") {
  Rng rng = Rng::derive(5, "unit", "cayley_xyz", 0);
  const CayleyPlane seed = random_cayley_plane(rng);
  const Vec8 x = seed.plane.frame.col(1), y = seed.plane.frame.col(2),
             z = seed.plane.frame.col(3);
  const CayleyPlane p = cayley_plane_from_xyz(to_oct(x), to_oct(y), to_oct(z));
  CHECK(same_plane(p.plane, seed.plane, 1e-10));
  CHECK((p.plane.frame.col(1) - x).norm() < 1e-14);
  CHECK(orientation_sign(p.plane.frame, seed.plane.frame) == 1);
}

TEST_CASE("right_mult_operator is orthogonal with square -Id") {
  Rng rng = Rng::derive(5, "unit", "rmul", 0);
  const Octonion u = rng.unit_imaginary_octonion();
  const Mat8 J = right_mult_operator(u);
  CHECK((J * J.transpose() - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((J * J + Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-13);
  // matches the multiplication table columnwise
  for (int s = 0; s < 8; ++s) {
    const Octonion col = Octonion::unit(s) * u;
    CHECK((J.col(s) - to_vec(col)).norm() < 1e-14);
  }
}
