#include "hb/io.hpp"

#include <algorithm>

namespace hb {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

Simplex simplex_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("a simplex must be a list of vertex ids");
  return Simplex(j.get<std::vector<Vertex>>());
}

Json simplex_list(std::vector<Simplex> list) {
  std::sort(list.begin(), list.end());
  Json out = Json::array();
  for (const auto& s : list) out.push_back(s.vertices());
  return out;
}

Simplex simplex_from_key(const std::string& key) {
  return key.empty() ? Simplex{} : Simplex::from_key(key);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const SimplicialComplex& k) {
  return Json{{"vertices", k.vertices()}, {"maximal_simplices", simplex_list(k.maximal_simplices())}};
}

SimplicialComplex complex_from_json(const Json& j) {
  return guarded("complex", [&] {
    if (!j.is_object()) throw InputError("a complex must be a JSON object");
    std::vector<Simplex> tops;
    for (const auto& s : j.at("maximal_simplices")) tops.push_back(simplex_from_json(s));
    if (j.contains("vertices")) {
      for (Vertex v : j.at("vertices").get<std::vector<Vertex>>()) tops.push_back(Simplex{v});
    }
    return SimplicialComplex::closure(tops);
  });
}

Json to_json(const SetFamily& f) {
  Json members = Json::array();
  for (const auto& m : f.members()) members.push_back(to_json(m));
  return Json{{"ambient", to_json(f.ambient())}, {"members", std::move(members)}};
}

SetFamily family_from_json(const Json& j) {
  return guarded("family", [&] {
    if (!j.is_object()) throw InputError("a family must be a JSON object");
    std::vector<SimplicialComplex> members;
    for (const auto& m : j.at("members")) members.push_back(complex_from_json(m));
    return SetFamily(complex_from_json(j.at("ambient")), std::move(members));
  });
}

Json to_json(const Chain& c) { return simplex_list(c.support()); }

Chain chain_from_json(const Json& j, int grade) {
  return guarded("chain", [&] {
    if (!j.is_array()) throw InputError("a chain must be a list of simplices");
    std::vector<Simplex> simplices;
    for (const auto& s : j) simplices.push_back(simplex_from_json(s));
    return Chain(grade, std::move(simplices));
  });
}

namespace {

Json assignment_json(const std::map<Simplex, Chain>& a) {
  Json out = Json::object();
  for (const auto& [s, c] : a) out[s.key()] = to_json(c);
  return out;
}

std::map<Simplex, Chain> assignment_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("an assignment must be a JSON object");
  std::map<Simplex, Chain> out;
  for (const auto& [key, value] : j.items()) {
    const Simplex s = simplex_from_key(key);
    if (s.empty()) throw InputError("assignments are defined on nonempty simplices");
    out.emplace(s, chain_from_json(value, s.dimension()));
  }
  return out;
}

}  // namespace

Json to_json(const SimplicialChainMap& g) {
  return Json{{"source", to_json(*g.source)},
              {"target", to_json(*g.target)},
              {"assignment", assignment_json(g.assignment)}};
}

SimplicialChainMap chain_map_from_json(const Json& j) {
  return guarded("chain map", [&] {
    SimplicialChainMap g;
    g.source = std::make_shared<const SimplicialComplex>(complex_from_json(j.at("source")));
    g.target = std::make_shared<const SimplicialComplex>(complex_from_json(j.at("target")));
    g.assignment = assignment_from_json(j.at("assignment"));
    return g;
  });
}

Json to_json(const ConstrainedChainMap& c) {
  Json phi = Json::object();
  for (const auto& [s, idx] : c.phi) phi[s.key()] = idx;
  return Json{{"complex", to_json(*c.complex)},
              {"family", to_json(*c.family)},
              {"gamma", assignment_json(c.gamma.assignment)},
              {"phi", std::move(phi)}};
}

ConstrainedChainMap bundle_from_json(const Json& j) {
  return guarded("bundle", [&] {
    ConstrainedChainMap c;
    c.complex = std::make_shared<const SimplicialComplex>(complex_from_json(j.at("complex")));
    c.family = std::make_shared<const SetFamily>(family_from_json(j.at("family")));
    c.gamma.source = c.complex;
    c.gamma.target = ambient_of(c.family);
    c.gamma.assignment = assignment_from_json(j.at("gamma"));
    if (!j.at("phi").is_object()) throw InputError("phi must be a JSON object");
    for (const auto& [key, value] : j.at("phi").items()) {
      auto idx = value.get<IndexSet>();
      std::sort(idx.begin(), idx.end());
      c.phi[simplex_from_key(key)] = std::move(idx);
    }
    return c;
  });
}

const char* kind_name(ConstraintViolation::Kind kind) {
  using Kind = ConstraintViolation::Kind;
  switch (kind) {
    case Kind::ChainMap: return "chain_map";
    case Kind::Trivial: return "trivial";
    case Kind::MissingPhi: return "missing_phi";
    case Kind::EmptyPhi: return "empty_phi";
    case Kind::IndexRange: return "index_range";
    case Kind::Intersection: return "intersection";
    case Kind::Support: return "support";
  }
  return "unknown";
}

}  // namespace hb
