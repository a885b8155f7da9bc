#include "json_io.hpp"

#include "toric/error.hpp"

#include <limits>

namespace toric::io {

namespace {

std::string at(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string at(const std::string& pointer, std::size_t i) { return pointer + "/" + std::to_string(i); }

const Json& member(const Json& j, const std::string& pointer, const std::string& key) {
  if (!j.is_object()) throw InputError(pointer.empty() ? "" : pointer, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(at(pointer, key), "missing required member");
  return *it;
}

void only_members(const Json& j, const std::string& pointer, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw InputError(at(pointer, it.key()), "unknown member");
  }
}

const Json& array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw InputError(pointer, "expected an array");
  return j;
}

std::size_t positive_size(const Json& j, const std::string& pointer, std::size_t min) {
  if (!j.is_number_integer() || j.get<long long>() < static_cast<long long>(min))
    throw InputError(pointer, "expected an integer >= " + std::to_string(min));
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Integer& v) {
  if (v <= std::numeric_limits<long long>::max() && v >= std::numeric_limits<long long>::min())
    return static_cast<long long>(v);
  return v.str();
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Rational& v) { return format_rational(v); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const ConeClassification& c) {
  return {{"strictly_convex", c.strictly_convex},
          {"good", c.good},
          {"lineality", c.lineality_dim},
          {"reeb_type", c.reeb_type}};
}

Json to_json(const Cone& c) {
  Json normals = Json::array();
  for (const auto& v : c.normals()) normals.push_back(to_json(v));
  return {{"dim", c.dim()}, {"normals", normals}};
}

Json to_json(const ReebSynthesis& r) {
  return {{"reeb", to_json(r.reeb)}, {"coefficients", to_json(r.coefficients)}, {"basis_witness", r.basis_witness}};
}

Json to_json(const LabeledPolytope& p) {
  Json facets = Json::array();
  for (const auto& f : p.facets())
    facets.push_back({{"normal", to_json(f.normal)}, {"constant", to_json(f.constant)}, {"label", to_json(f.label)}});
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(to_json(v));
  return {{"dim", p.dim()}, {"facets", facets}, {"vertices", vertices}};
}

Json to_json(const Probe& p) {
  return {{"facet", p.facet}, {"entry", to_json(p.entry)}, {"direction", to_json(p.direction)}, {"length", to_json(p.length)}};
}

Json to_json(const ProbeVerdict& v) {
  Json out = {{"point", to_json(v.point)}, {"displaceable", v.displaceable}};
  if (v.witness) {
    out["witness"] = to_json(*v.witness);
    out["parameter"] = to_json(v.parameter);
  }
  return out;
}

Json to_json(const Fiber& f) {
  return {{"spec", f.spec.name()}, {"levels", to_json(f.levels)}, {"extra", to_json(f.extra)}};
}

namespace {

struct EvidenceJson {
  Json operator()(const GirouxWitness& w) const {
    return {{"type", "giroux"}, {"fiber", to_json(w.fiber)}, {"c1", w.c1}, {"t", w.t}, {"bound", w.bound}, {"criterion", w.criterion}};
  }
  Json operator()(const ProbeWitness& w) const {
    return {{"type", "probe"}, {"base", to_json(w.base)}, {"point", to_json(w.point)}, {"probe", to_json(w.probe)}};
  }
  Json operator()(const ReductionStep& s) const {
    return {{"type", "reduction"}, {"inner", to_json(s.inner)}, {"outer", to_json(s.outer)}};
  }
  Json operator()(const PrequantizationStep& s) const {
    return {{"type", "prequantization"}, {"base_point", to_json(s.base_point)}, {"outer", to_json(s.outer)}};
  }
  Json operator()(const Citation& c) const { return {{"type", "citation"}, {"text", c.text}}; }
};

}  // namespace

Json to_json(const Verdict& v) {
  Json prov = Json::array();
  for (const auto& e : v.provenance) prov.push_back(std::visit(EvidenceJson{}, e));
  return {{"status", to_string(v.status)}, {"method", to_string(v.method)}, {"provenance", prov}};
}

Json to_json(const numerics::VerificationReport& r) {
  Json values = Json::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  return {{"check", r.check},
          {"samples", r.samples},
          {"max_residual", r.max_residual},
          {"min_margin", r.min_margin},
          {"passed", r.passed},
          {"parameters", {{"fd_step", r.fd_step}, {"tolerance", r.tolerance}, {"seed", r.seed}}},
          {"values", values}};
}

Integer integer_from(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Integer(s);
  }
  throw InputError(pointer, "expected an integer");
}

IntVector int_vector_from(const Json& j, const std::string& pointer) {
  IntVector out;
  for (std::size_t i = 0; i < array(j, pointer).size(); ++i) out.push_back(integer_from(j[i], at(pointer, i)));
  return out;
}

Rational rational_from(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
    }
  }
  throw InputError(pointer, "expected a rational \"p/q\" or an integer");
}

RatVector rat_vector_from(const Json& j, const std::string& pointer) {
  RatVector out;
  for (std::size_t i = 0; i < array(j, pointer).size(); ++i) out.push_back(rational_from(j[i], at(pointer, i)));
  return out;
}

Cone cone_from(const Json& j) {
  const std::size_t dim = positive_size(member(j, "", "dim"), "/dim", 1);
  only_members(j, "", {"dim", "normals"});
  const Json& normals = array(member(j, "", "normals"), "/normals");
  std::vector<IntVector> vs;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const std::string p = at("/normals", i);
    IntVector v = int_vector_from(normals[i], p);
    if (v.size() != dim) throw InputError(p, "expected " + std::to_string(dim) + " entries");
    vs.push_back(std::move(v));
  }
  return Cone::make(dim, std::move(vs));
}

LabeledPolytope polytope_from(const Json& j) {
  const std::size_t dim = positive_size(member(j, "", "dim"), "/dim", 0);
  only_members(j, "", {"dim", "facets", "vertices"});
  const Json& facets = array(member(j, "", "facets"), "/facets");
  std::vector<LabeledFacet> fs;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string p = at("/facets", i);
    const Json& f = facets[i];
    LabeledFacet lf;
    lf.normal = int_vector_from(member(f, p, "normal"), at(p, "normal"));
    if (lf.normal.size() != dim) throw InputError(at(p, "normal"), "expected " + std::to_string(dim) + " entries");
    lf.constant = rational_from(member(f, p, "constant"), at(p, "constant"));
    if (f.contains("label")) lf.label = integer_from(f["label"], at(p, "label"));
    only_members(f, p, {"normal", "constant", "label"});
    fs.push_back(std::move(lf));
  }
  return LabeledPolytope::make(dim, std::move(fs));
}

Fiber fiber_from(const Json& j) {
  const Json& spec = member(j, "", "spec");
  if (!spec.is_string()) throw InputError("/spec", "expected a manifold name such as \"sphere:3\"");
  only_members(j, "", {"spec", "levels", "extra"});
  ManifoldSpec s;
  try {
    s = parse_manifold(spec.get<std::string>());
  } catch (const Error& e) {
    throw InputError("/spec", e.what());
  }
  const RatVector levels = j.contains("levels") ? rat_vector_from(j["levels"], "/levels") : RatVector{};
  const RatVector extra = j.contains("extra") ? rat_vector_from(j["extra"], "/extra") : RatVector{};
  return make_fiber(s, levels, extra);
}

}  // namespace toric::io
