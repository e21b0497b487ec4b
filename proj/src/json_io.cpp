#include "torsion/json_io.hpp"

#include <algorithm>

namespace torsion::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw CertificateError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

an::Interval interval_from_json(const json& j, int n) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    fail("interval must be a pair [a,b] of integers, got " + j.dump());
  }
  an::Interval x{j[0].get<int>(), j[1].get<int>()};
  if (x.a < 1 || x.b < x.a || x.b > n) {
    fail("interval " + j.dump() + " is not a module of A_" + std::to_string(n));
  }
  return x;
}

std::vector<an::Interval> intervals_from_json(const json& j, int n) {
  if (!j.is_array()) fail("subcategory must be an array of intervals");
  std::vector<an::Interval> out;
  for (const auto& e : j) out.push_back(interval_from_json(e, n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json category_json(const Category& cat) {
  if (cat.family() == Family::LinearA) {
    return {{"shape", "linearA"}, {"n", cat.vertex_count()}};
  }
  return {{"shape", "tube"}, {"rank", cat.vertex_count()}, {"cap", cat.cap()}};
}

void check_schema(const json& j) {
  if (!j.is_object()) fail("certificate must be a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema) {
    fail("unsupported schema " + j.at("schema").dump() + ", expected \"" + kSchema + "\"");
  }
}

TubeCertificate parse_tube(const json& j, int rank) {
  if (rank < 1) fail("tube rank must be >= 1");
  TubeCertificate c;
  c.rank = rank;
  if (j.contains("kind")) {
    const int kind = int_field(j, "kind");
    if (kind != 1 && kind != 2) fail("tube kind must be 1 or 2");
    PartPartition s;
    s.kind = kind == 1 ? kStrong1 : kStrong2;
    s.complete = true;
    s.parts.push_back(vertices_from_json(field(j, "delta")));
    if (j.contains("residual_partition")) {
      const json& rp = j.at("residual_partition");
      if (!rp.is_array()) fail("residual_partition must be an array of vertex arrays");
      for (const auto& part : rp) s.parts.push_back(vertices_from_json(part));
    }
    c.partition = s;
  }
  if (j.contains("torsion") || j.contains("free")) {
    c.torsion = descriptor_from_json(field(j, "torsion"), rank);
    c.free = descriptor_from_json(field(j, "free"), rank);
  }
  if (!c.partition && !c.torsion) fail("tube certificate needs kind/delta or torsion/free");
  return c;
}

}  // namespace

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& [s, t] : q.arrows()) arrows.push_back({s, t});
  return {{"shape", to_string(q.shape())}, {"vertices", vertices_to_json(q.vertices())},
          {"arrows", arrows}};
}

json vertices_to_json(const VertexSet& s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

VertexSet vertices_from_json(const json& j) {
  if (!j.is_array()) fail("vertex set must be an array of integers");
  VertexSet s;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail("vertex must be an integer, got " + v.dump());
    s.insert(v.get<int>());
  }
  return s;
}

json to_json(const PartPartition& p) {
  json parts = json::array();
  for (const auto& part : p.parts) parts.push_back(vertices_to_json(part));
  return {{"parts", parts}, {"kind", to_string(p.kind)}, {"complete", p.complete}};
}

PartPartition partition_from_json(const json& j) {
  PartPartition p;
  const json& parts = field(j, "parts");
  if (!parts.is_array()) fail("\"parts\" must be an array");
  for (const auto& part : parts) p.parts.push_back(vertices_from_json(part));
  const json& kind = field(j, "kind");
  if (!kind.is_string()) fail("\"kind\" must be a string");
  try {
    p.kind = partition_kind_from_string(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  const json& complete = field(j, "complete");
  if (!complete.is_boolean()) fail("\"complete\" must be a boolean");
  p.complete = complete.get<bool>();
  return p;
}

json intervals_to_json(const Category& cat, ObjectSet s) {
  json out = json::array();
  for (const auto& x : an::to_intervals(cat, s)) out.push_back({x.a, x.b});
  return out;
}

json pair_to_json(const Category& cat, const TorsionPair& tp) {
  return {{"schema", kSchema},
          {"category", category_json(cat)},
          {"torsion", intervals_to_json(cat, tp.torsion)},
          {"free", intervals_to_json(cat, tp.free)}};
}

json ntp_to_json(const Category& cat, const NTorsionPair& t) {
  json parts = json::array();
  for (ObjectSet p : t.parts) parts.push_back(intervals_to_json(cat, p));
  return {{"schema", kSchema}, {"category", category_json(cat)}, {"parts", parts}};
}

json to_json(const Category& cat, const an::DecompositionResult& d) {
  json trace = json::array();
  for (const auto& step : d.trace) {
    trace.push_back({{"stage", step.stage},
                     {"vertices", vertices_to_json(step.vertices)},
                     {"source", step.source == an::StageSource::Projective ? "projective"
                                                                            : "injective"}});
  }
  return {{"side", an::to_string(d.side)},
          {"partition", to_json(d.partition)},
          {"residual",
           {{"support", vertices_to_json(d.residual_support)},
            {"torsion", intervals_to_json(cat, d.residual.torsion)},
            {"free", intervals_to_json(cat, d.residual.free)}}},
          {"trace", trace}};
}

json to_json(const tube::TubeModule& x) { return {{"socle", x.socle}, {"length", x.length}}; }

json to_json(const tube::TubeSubcatDescriptor& d) {
  json finite = json::array();
  for (const auto& x : d.finite) finite.push_back(to_json(x));
  return {{"kind", tube::to_string(d.kind)}, {"delta", vertices_to_json(d.delta)}, {"finite", finite}};
}

json to_json(const tube::TubeTorsionPair& p) {
  json rp = json::array();
  for (const auto& part : p.residual_partition) rp.push_back(vertices_to_json(part));
  return {{"schema", kSchema},
          {"category", {{"shape", "tube"}, {"rank", p.rank}}},
          {"rank", p.rank},
          {"kind", p.kind},
          {"delta", vertices_to_json(p.delta)},
          {"residual_partition", rp},
          {"torsion", to_json(p.torsion)},
          {"free", to_json(p.free)}};
}

tube::TubeSubcatDescriptor descriptor_from_json(const json& j, int rank) {
  tube::TubeSubcatDescriptor d;
  d.rank = rank;
  const json& kind = field(j, "kind");
  if (!kind.is_string()) fail("descriptor \"kind\" must be a string");
  try {
    d.kind = tube::descriptor_kind_from_string(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  if (j.contains("delta")) d.delta = vertices_from_json(j.at("delta"));
  for (Vertex v : d.delta) {
    if (v < 1 || v > rank) fail("delta vertex " + std::to_string(v) + " outside 1.." + std::to_string(rank));
  }
  if (j.contains("finite")) {
    const json& fin = j.at("finite");
    if (!fin.is_array()) fail("\"finite\" must be an array of modules");
    for (const auto& m : fin) {
      tube::TubeModule x{int_field(m, "socle"), int_field(m, "length"), rank};
      if (x.socle < 1 || x.socle > rank || x.length < 1) fail("invalid tube module " + m.dump());
      d.finite.push_back(x);
    }
  }
  std::sort(d.finite.begin(), d.finite.end());
  d.finite.erase(std::unique(d.finite.begin(), d.finite.end()), d.finite.end());
  return d;
}

Certificate parse_certificate(const json& j) {
  check_schema(j);
  const json* cat = j.contains("category") ? &j.at("category") : nullptr;
  std::string shape;
  if (cat) {
    const json& s = field(*cat, "shape");
    if (!s.is_string()) fail("category \"shape\" must be a string");
    shape = s.get<std::string>();
  } else if (j.contains("rank")) {
    shape = "tube";
  } else {
    fail("missing field \"category\"");
  }
  if (shape == "tube") {
    const int rank = cat && cat->contains("rank") ? int_field(*cat, "rank") : int_field(j, "rank");
    return parse_tube(j, rank);
  }
  if (shape != "linearA") fail("unsupported category shape \"" + shape + "\"");
  LinearCertificate c;
  c.n = int_field(*cat, "n");
  if (c.n < 1) fail("n must be >= 1");
  if (j.contains("support")) {
    c.support = vertices_from_json(j.at("support"));
    for (Vertex v : *c.support) {
      if (v < 1 || v > c.n) fail("support vertex " + std::to_string(v) + " outside 1..n");
    }
  }
  if (j.contains("parts")) {
    c.is_ntp = true;
    const json& parts = j.at("parts");
    if (!parts.is_array() || parts.empty()) fail("\"parts\" must be a nonempty array");
    for (const auto& p : parts) c.parts.push_back(intervals_from_json(p, c.n));
  } else {
    c.parts.push_back(intervals_from_json(field(j, "torsion"), c.n));
    c.parts.push_back(intervals_from_json(field(j, "free"), c.n));
  }
  return c;
}

std::vector<Certificate> parse_certificates(const json& j) {
  std::vector<Certificate> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(parse_certificate(e));
  } else {
    out.push_back(parse_certificate(j));
  }
  return out;
}

}  // namespace torsion::io
