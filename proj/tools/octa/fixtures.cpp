#include "fixtures.hpp"

#include <cmath>

#include <octa/cayley.hpp>
#include <octa/errors.hpp>
#include <octa/octonion.hpp>
#include <octa/reduction.hpp>
#include <octa/serialize.hpp>

namespace octa::cli {

Frame4 hframe_fixture() {
  Frame4 f = Frame4::Zero();
  f(0, 0) = 1.0;
  f(1, 1) = 1.0;
  f(2, 2) = 1.0;
  f(3, 3) = 1.0;
  return f;
}

Frame4 example_plane_frame() {
  const double s = 1.0 / std::sqrt(2.0);
  Frame4 f = Frame4::Zero();
  f(0, 0) = s;
  f(7, 0) = -s;
  f(1, 1) = s;
  f(6, 1) = s;
  f(2, 2) = s;
  f(5, 2) = -s;
  f(3, 3) = s;
  f(4, 3) = s;
  return f;
}

std::vector<std::string> fixture_names() {
  return {"example-plane", "hframe", "tricomplex-ije", "sphere-hframe"};
}

std::string fixture_json(const std::string& name) {
  if (name == "example-plane")
    return cayley_plane_to_json(make_cayley_plane(example_plane_frame()));
  if (name == "hframe") return frame_to_json(hframe_fixture());
  if (name == "tricomplex-ije")
    return tricomplex_to_json(
        {Octonion::unit(1), Octonion::unit(2), Octonion::unit(4)});
  if (name == "sphere-hframe")
    return sphere_to_json(frame_to_sphere(hframe_fixture()));
  throw UnknownFixture("unknown fixture '" + name +
                       "'; known: example-plane, hframe, tricomplex-ije, sphere-hframe");
}

std::string table_csv() { return mul_table_csv(); }

}  // namespace octa::cli
