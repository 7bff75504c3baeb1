#include <octa/cayley.hpp>
#include <octa/errors.hpp>
#include <octa/reduction.hpp>
#include <octa/serialize.hpp>

#include <doctest.h>

#include <string>

using namespace octa;

TEST_CASE("frame json round trip is exact") {
  Rng rng = Rng::derive(13, "unit", "ser_frame", 0);
  const Frame4 f = random_frame(rng);
  const std::string text = frame_to_json(f);
  CHECK(text.find("\"schema\": \"octa.frame/1\"") != std::string::npos);
  const Frame4 back = frame_from_json(text);
  CHECK((back - f).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("plane json carries the projector and still parses as a frame") {
  Rng rng = Rng::derive(13, "unit", "ser_plane", 0);
  const CayleyPlane p = random_cayley_plane(rng);
  const std::string plane_text = plane_to_json(p.plane);
  CHECK(plane_text.find("\"projector\"") != std::string::npos);
  CHECK((frame_from_json(plane_text) - p.plane.frame).cwiseAbs().maxCoeff() == 0.0);

  const std::string full = cayley_plane_to_json(p);
  CHECK(full.find("\"tricomplex\"") != std::string::npos);
  const TricomplexTriple t = tricomplex_from_json(full);
  CHECK(norm(t.u - p.triple.u) == 0.0);
  CHECK(norm(t.w - p.triple.w) == 0.0);
}

TEST_CASE("tricomplex json round trip") {
  Rng rng = Rng::derive(13, "unit", "ser_tri", 0);
  const CayleyPlane p = random_cayley_plane(rng);
  const TricomplexTriple back = tricomplex_from_json(tricomplex_to_json(p.triple));
  CHECK(norm(back.u - p.triple.u) == 0.0);
  CHECK(norm(back.v - p.triple.v) == 0.0);
  CHECK(norm(back.w - p.triple.w) == 0.0);
}

TEST_CASE("sphere json round trip") {
  Rng rng = Rng::derive(13, "unit", "ser_sphere", 0);
  SpherePoint h;
  for (auto& q : h.h) q = rng.normal_quaternion();
  const std::string text = sphere_to_json(h);
  CHECK(text.find("\"schema\": \"octa.sphere/1\"") != std::string::npos);
  const SpherePoint back = sphere_from_json(text);
  for (int s = 0; s < 8; ++s) CHECK(back.h[s] == h.h[s]);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(frame_from_json("not json at all"), ParseError);
  CHECK_THROWS_AS(frame_from_json("{}"), ParseError);
  CHECK_THROWS_AS(frame_from_json("{\"schema\": \"octa.frame/1\"}"), ParseError);
  CHECK_THROWS_AS(frame_from_json(
                      "{\"schema\": \"octa.sphere/1\", \"frame\": []}"),
                  ParseError);
  CHECK_THROWS_AS(
      frame_from_json("{\"schema\": \"octa.frame/1\", \"frame\": [[1, 2]]}"),
      ParseError);
  CHECK_THROWS_AS(sphere_from_json("{\"schema\": \"octa.sphere/1\", \"h\": [[0]]}"),
                  ParseError);
  CHECK_THROWS_AS(tricomplex_from_json("[1, 2, 3]"), ParseError);
}
