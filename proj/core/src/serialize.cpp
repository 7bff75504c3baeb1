#include "octa/serialize.hpp"

#include <json.hpp>

#include "octa/errors.hpp"

namespace octa {

namespace {

using json = nlohmann::ordered_json;

json vec_to_array(const Vec8& v) {
  json a = json::array();
  for (int s = 0; s < 8; ++s) a.push_back(v[s]);
  return a;
}

json frame_to_array(const Frame4& f) {
  json a = json::array();
  for (int m = 0; m < 4; ++m) a.push_back(vec_to_array(f.col(m)));
  return a;
}

Vec8 array_to_vec(const json& a) {
  if (!a.is_array() || a.size() != 8) throw ParseError("expected an array of 8 reals");
  Vec8 v;
  for (int s = 0; s < 8; ++s) {
    if (!a[s].is_number()) throw ParseError("expected an array of 8 reals");
    v[s] = a[s].get<double>();
  }
  return v;
}

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON");
  return doc;
}

}  // namespace

std::string frame_to_json(const Frame4& f) {
  json doc;
  doc["schema"] = "octa.frame/1";
  doc["frame"] = frame_to_array(f);
  return doc.dump(2) + "\n";
}

std::string plane_to_json(const Plane4& p) {
  json doc;
  doc["schema"] = "octa.frame/1";
  doc["frame"] = frame_to_array(p.frame);
  json proj = json::array();
  for (int r = 0; r < 8; ++r) proj.push_back(vec_to_array(p.proj.row(r).transpose()));
  doc["projector"] = proj;
  return doc.dump(2) + "\n";
}

std::string cayley_plane_to_json(const CayleyPlane& p) {
  json doc = json::parse(plane_to_json(p.plane));
  json triple = json::array();
  triple.push_back(vec_to_array(to_vec(p.triple.u)));
  triple.push_back(vec_to_array(to_vec(p.triple.v)));
  triple.push_back(vec_to_array(to_vec(p.triple.w)));
  json out;
  out["schema"] = "octa.frame/1";
  out["frame"] = doc["frame"];
  out["projector"] = doc["projector"];
  out["tricomplex"] = triple;
  return out.dump(2) + "\n";
}

std::string tricomplex_to_json(const TricomplexTriple& t) {
  json doc;
  doc["schema"] = "octa.tricomplex/1";
  json triple = json::array();
  triple.push_back(vec_to_array(to_vec(t.u)));
  triple.push_back(vec_to_array(to_vec(t.v)));
  triple.push_back(vec_to_array(to_vec(t.w)));
  doc["tricomplex"] = triple;
  return doc.dump(2) + "\n";
}

std::string sphere_to_json(const SpherePoint& h) {
  json doc;
  doc["schema"] = "octa.sphere/1";
  json qs = json::array();
  for (const Quaternion& q : h.h) qs.push_back(json::array({q.w, q.x, q.y, q.z}));
  doc["h"] = qs;
  return doc.dump(2) + "\n";
}

Frame4 frame_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.contains("frame")) throw ParseError("missing field: frame");
  const json& fr = doc["frame"];
  if (!fr.is_array() || fr.size() != 4) throw ParseError("frame: expected 4 vectors");
  Frame4 f;
  for (int m = 0; m < 4; ++m) f.col(m) = array_to_vec(fr[m]);
  return f;
}

TricomplexTriple tricomplex_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.contains("tricomplex")) throw ParseError("missing field: tricomplex");
  const json& tr = doc["tricomplex"];
  if (!tr.is_array() || tr.size() != 3) throw ParseError("tricomplex: expected 3 vectors");
  return {to_oct(array_to_vec(tr[0])), to_oct(array_to_vec(tr[1])),
          to_oct(array_to_vec(tr[2]))};
}

SpherePoint sphere_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.contains("h")) throw ParseError("missing field: h");
  const json& qs = doc["h"];
  if (!qs.is_array() || qs.size() != 8) throw ParseError("h: expected 8 quaternions");
  SpherePoint h;
  for (int a = 0; a < 8; ++a) {
    const json& q = qs[a];
    if (!q.is_array() || q.size() != 4 || !q[0].is_number() || !q[1].is_number() ||
        !q[2].is_number() || !q[3].is_number())
      throw ParseError("h: expected quadruples of reals");
    h.h[a] = {q[0].get<double>(), q[1].get<double>(), q[2].get<double>(),
              q[3].get<double>()};
  }
  return h;
}

}  // namespace octa
