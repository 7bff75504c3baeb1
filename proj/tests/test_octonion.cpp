#include <octa/octonion.hpp>
#include <octa/rng.hpp>

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

using namespace octa;

namespace {

// Full basis multiplication table in basis order (1,i,j,k,e,f,g,h), worked
// out by hand from the doubling formula (a,b)(c,d) = (ac - conj(d)b,
// d a + b conj(c)) with e = (0,1). Row = left factor, column = right factor.
const char* const kTable[8][8] = {
    {"1", "i", "j", "k", "e", "f", "g", "h"},
    {"i", "-1", "k", "-j", "f", "-e", "-h", "g"},
    {"j", "-k", "-1", "i", "g", "h", "-e", "-f"},
    {"k", "j", "-i", "-1", "h", "-g", "f", "-e"},
    {"e", "-f", "-g", "-h", "-1", "i", "j", "k"},
    {"f", "e", "-h", "g", "-i", "-1", "-k", "j"},
    {"g", "h", "e", "-f", "-j", "k", "-1", "-i"},
    {"h", "-g", "f", "e", "-k", "-j", "i", "-1"}};

int slot_of(const char* name) {
  static const char* names[8] = {"1", "i", "j", "k", "e", "f", "g", "h"};
  for (int s = 0; s < 8; ++s)
    if (std::strcmp(name, names[s]) == 0) return s;
  return -1;
}

// Parses "-k" style entries into (sign, slot).
void parse_entry(const char* e, double* sign, int* slot) {
  *sign = e[0] == '-' ? -1.0 : 1.0;
  *slot = slot_of(e[0] == '-' ? e + 1 : e);
  REQUIRE(*slot >= 0);
}

}  // namespace

TEST_CASE("basis multiplication matches the hand table exactly") {
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      double sign;
      int slot;
      parse_entry(kTable[r][c], &sign, &slot);
      const Octonion p = Octonion::unit(r) * Octonion::unit(c);
      const Octonion q = mul_cd(Octonion::unit(r), Octonion::unit(c));
      for (int s = 0; s < 8; ++s) {
        const double want = s == slot ? sign : 0.0;
        CHECK(p.c[s] == want);
        CHECK(q.c[s] == want);
      }
    }
  }
}

TEST_CASE("doubling formula and table path agree on random inputs") {
  Rng rng = Rng::derive(3, "unit", "oct_cd", 0);
  for (int t = 0; t < 200; ++t) {
    const Octonion x = rng.unit_octonion();
    const Octonion y = rng.unit_octonion();
    CHECK(norm(mul(x, y) - mul_cd(x, y)) < 1e-14);
  }
}

TEST_CASE("non-associativity pins") {
  const Octonion i = Octonion::unit(1), j = Octonion::unit(2);
  const Octonion k = Octonion::unit(3), e = Octonion::unit(4);
  const Octonion h = Octonion::unit(7);
  CHECK(norm(i * e - Octonion::unit(5)) == 0.0);
  CHECK(norm(j * e - Octonion::unit(6)) == 0.0);
  CHECK(norm(k * e - h) == 0.0);
  CHECK(norm((i * j) * e - h) == 0.0);
  CHECK(norm(i * (j * e) + h) == 0.0);
  CHECK(norm(associator(i, j, e) - 2.0 * h) == 0.0);
  CHECK(norm(associator(i, j, k)) == 0.0);  // quaternions associate
}

TEST_CASE("associator is alternating and vanishes with conjugate arguments") {
  Rng rng = Rng::derive(3, "unit", "oct_assoc", 0);
  for (int t = 0; t < 100; ++t) {
    const Octonion x = rng.unit_octonion();
    const Octonion y = rng.unit_octonion();
    const Octonion z = rng.unit_octonion();
    const Octonion a = associator(x, y, z);
    CHECK(norm(associator(y, x, z) + a) < 1e-13);
    CHECK(norm(associator(x, z, y) + a) < 1e-13);
    CHECK(norm(associator(x, x, z)) < 1e-13);
    CHECK(norm(associator(x, conj(x), z)) < 1e-13);
  }
}

TEST_CASE("conjugation and norm over the full algebra") {
  Rng rng = Rng::derive(3, "unit", "oct_norm", 0);
  for (int t = 0; t < 100; ++t) {
    const Octonion x = rng.normal_octonion();
    const Octonion y = rng.normal_octonion();
    CHECK(norm(conj(x * y) - conj(y) * conj(x)) <
          1e-12 * (1.0 + norm(x) * norm(y)));
    CHECK(norm(x * y) ==
          doctest::Approx(norm(x) * norm(y)).epsilon(1e-12));
    CHECK(norm(x * conj(x) - norm2(x) * Octonion::unit(0)) <
          1e-12 * (1.0 + norm2(x)));
  }
}

TEST_CASE("quaternion embedding is bitwise") {
  Rng rng = Rng::derive(3, "unit", "oct_embed", 0);
  for (int t = 0; t < 100; ++t) {
    const Quaternion a = rng.normal_quaternion();
    const Quaternion b = rng.normal_quaternion();
    const Quaternion h = a * b;
    const Octonion o =
        Octonion::from_pair(a, Quaternion{}) * Octonion::from_pair(b, Quaternion{});
    CHECK(o.c[0] == h.w);
    CHECK(o.c[1] == h.x);
    CHECK(o.c[2] == h.y);
    CHECK(o.c[3] == h.z);
    for (int s = 4; s < 8; ++s) CHECK(o.c[s] == 0.0);
  }
}

TEST_CASE("two-fold cross product pins") {
  const Octonion i = Octonion::unit(1), j = Octonion::unit(2);
  CHECK(norm(cross2(i, j) - Octonion::unit(3)) == 0.0);
  Rng rng = Rng::derive(3, "unit", "oct_cross2", 0);
  for (int t = 0; t < 200; ++t) {
    // orthogonal imaginary pair: cross2 degenerates to the product
    const Octonion x = rng.unit_imaginary_octonion();
    Octonion y = rng.unit_imaginary_octonion();
    y = normalized(y - inner(x, y) * x);
    CHECK(norm(cross2(x, y) - x * y) < 1e-13);
    CHECK(std::abs(inner(cross2(x, y), x)) < 1e-13);
    CHECK(std::abs(inner(cross2(x, y), y)) < 1e-13);
  }
}

TEST_CASE("three-fold cross product pins") {
  const Octonion one = Octonion::unit(0);
  const Octonion i = Octonion::unit(1), j = Octonion::unit(2);
  const Octonion k = Octonion::unit(3);
  CHECK(norm(cross3(i, j, k) - one) == 0.0);
  CHECK(norm(cross3(one, i, j) + k) == 0.0);

  // orientation pin inside the worked example plane
  const double s = 1.0 / std::sqrt(2.0);
  Octonion x{}, y{}, z{}, w{};
  x.c[1] = s; x.c[6] = s;   // (i+g)/sqrt2
  y.c[2] = s; y.c[5] = -s;  // (j-f)/sqrt2
  z.c[3] = s; z.c[4] = s;   // (k+e)/sqrt2
  w.c[0] = s; w.c[7] = -s;  // (1-h)/sqrt2
  CHECK(norm(cross3(x, y, z) - w) < 1e-14);
}

TEST_CASE("three-fold cross product is orthogonal to orthonormal inputs") {
  Rng rng = Rng::derive(3, "unit", "oct_cross3", 0);
  for (int t = 0; t < 200; ++t) {
    const Octonion x = rng.unit_octonion();
    Octonion y = rng.normal_octonion();
    y = normalized(y - inner(x, y) * x);
    Octonion z = rng.normal_octonion();
    z = normalized(z - inner(x, z) * x - inner(y, z) * y);
    const Octonion c = cross3(x, y, z);
    CHECK(std::abs(norm(c) - 1.0) < 1e-12);
    CHECK(std::abs(inner(c, x)) < 1e-12);
    CHECK(std::abs(inner(c, y)) < 1e-12);
    CHECK(std::abs(inner(c, z)) < 1e-12);
  }
}

TEST_CASE("identity residuals vanish on valid inputs") {
  Rng rng = Rng::derive(3, "unit", "oct_ident", 0);
  for (int t = 0; t < 100; ++t) {
    const Octonion x = rng.unit_octonion();
    Octonion y = rng.normal_octonion();
    y = normalized(y - inner(x, y) * x);
    const Octonion w = rng.unit_octonion();
    CHECK(orthogonal_pair_residual(x, y, w) < 1e-13);
    CHECK(moufang_residual(x, y, w) < 1e-13);
  }
}

TEST_CASE("table dump") {
  const std::string csv = mul_table_csv();
  int lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 64);
  CHECK(csv.find("i,e,+1,f") != std::string::npos);
  CHECK(csv.find("e,i,-1,f") != std::string::npos);
  CHECK(csv.find("k,e,+1,h") != std::string::npos);
  CHECK(std::string(basis_name(0)) == "1");
  CHECK(std::string(basis_name(7)) == "h");
}
