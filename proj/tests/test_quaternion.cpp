#include <octa/quaternion.hpp>
#include <octa/rng.hpp>

#include <doctest.h>

#include <cmath>

using namespace octa;

namespace {
const Quaternion q1{1, 0, 0, 0};
const Quaternion qi{0, 1, 0, 0};
const Quaternion qj{0, 0, 1, 0};
const Quaternion qk{0, 0, 0, 1};
}  // namespace

TEST_CASE("hamilton basis products") {
  CHECK(qi * qj == qk);
  CHECK(qj * qk == qi);
  CHECK(qk * qi == qj);
  CHECK(qj * qi == -1.0 * qk);
  CHECK(qi * qi == -1.0 * q1);
  CHECK(qj * qj == -1.0 * q1);
  CHECK(qk * qk == -1.0 * q1);
  CHECK(q1 * qi == qi);
}

TEST_CASE("conjugation reverses products") {
  Rng rng = Rng::derive(3, "unit", "quat_conj", 0);
  for (int t = 0; t < 100; ++t) {
    const Quaternion a = rng.normal_quaternion();
    const Quaternion b = rng.normal_quaternion();
    const Quaternion d = conj(a * b) + -1.0 * (conj(b) * conj(a));
    CHECK(norm(d) < 1e-12 * (1.0 + norm(a) * norm(b)));
  }
}

TEST_CASE("norm is multiplicative") {
  Rng rng = Rng::derive(3, "unit", "quat_norm", 0);
  for (int t = 0; t < 100; ++t) {
    const Quaternion a = rng.normal_quaternion();
    const Quaternion b = rng.normal_quaternion();
    CHECK(norm(a * b) == doctest::Approx(norm(a) * norm(b)).epsilon(1e-12));
  }
}

TEST_CASE("re im inner") {
  const Quaternion q{2, 3, 5, 7};
  CHECK(re(q) == 2.0);
  CHECK(im(q) == Quaternion{0, 3, 5, 7});
  CHECK(inner(q, q) == doctest::Approx(norm2(q)));
  CHECK(inner(qi, qj) == 0.0);
  CHECK(conj(q) == Quaternion{2, -3, -5, -7});
}

TEST_CASE("normalized gives unit norm") {
  Rng rng = Rng::derive(3, "unit", "quat_unit", 0);
  for (int t = 0; t < 50; ++t) {
    const Quaternion u = normalized(rng.normal_quaternion());
    CHECK(std::abs(norm(u) - 1.0) < 1e-14);
  }
}
