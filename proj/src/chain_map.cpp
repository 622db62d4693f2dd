#include "hb/chain_map.hpp"

#include <algorithm>
#include <set>

#include "hb/error.hpp"

namespace hb {

Chain SimplicialChainMap::image(const Simplex& s) const {
  auto it = assignment.find(s);
  return it == assignment.end() ? Chain(s.dimension()) : it->second;
}

Chain SimplicialChainMap::apply(const Chain& c) const {
  Chain out(c.grade());
  for (const auto& s : c.support()) out += image(s);
  return out;
}

std::vector<Simplex> verify_chain_map(const SimplicialChainMap& g) {
  std::vector<Simplex> bad;
  for (const auto& [s, c] : g.assignment) {
    if (!g.source->contains(s)) bad.push_back(s);
  }
  for (const auto& s : g.source->all_faces()) {
    const Chain img = g.image(s);
    bool ok = img.is_zero() || img.grade() == s.dimension();
    for (const auto& t : img.support()) ok = ok && g.target->contains(t);
    if (ok && s.dimension() > 0) ok = img.boundary() == g.apply(Chain::of(s).boundary());
    if (!ok) bad.push_back(s);
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

bool is_nontrivial(const SimplicialChainMap& g) {
  for (const auto& v : g.source->faces(0)) {
    if (g.image(v).size() % 2 == 0) return false;
  }
  return true;
}

std::vector<Vertex> support(const Chain& c, const SimplicialComplex& t) {
  for (const auto& s : c.support()) {
    if (!t.contains(s)) throw InputError("chain leaves the target complex at " + s.key());
  }
  return c.vertices();
}

AlmostEmbeddingCheck is_homological_almost_embedding(const SimplicialChainMap& g) {
  if (!verify_chain_map(g).empty()) throw InputError("not a chain map");
  AlmostEmbeddingCheck out;
  if (!is_nontrivial(g)) {
    out.reason = "a vertex maps to an even 0-chain";
    return out;
  }
  const auto faces = g.source->all_faces();
  std::vector<std::vector<Vertex>> supports;
  supports.reserve(faces.size());
  for (const auto& s : faces) supports.push_back(support(g.image(s), *g.target));
  auto meet = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return true;
      if (*i < *j) ++i; else ++j;
    }
    return false;
  };
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      if (!faces[i].disjoint(faces[j])) continue;
      if (meet(supports[i], supports[j])) {
        out.violation = std::make_pair(faces[i], faces[j]);
        out.reason = "images of " + faces[i].key() + " and " + faces[j].key() + " share a vertex";
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

SimplicialChainMap induced_chain_map(std::shared_ptr<const SimplicialComplex> source,
                                     std::shared_ptr<const SimplicialComplex> target,
                                     const std::map<Vertex, Vertex>& f) {
  SimplicialChainMap g{source, target, {}};
  for (const auto& s : source->all_faces()) {
    std::vector<Vertex> img;
    for (Vertex v : s) {
      auto it = f.find(v);
      if (it == f.end()) throw InputError("vertex map is undefined at " + std::to_string(v));
      img.push_back(it->second);
    }
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
      throw InputError("vertex map collapses simplex " + s.key());
    }
    Simplex t(std::move(img));
    if (!target->contains(t)) throw InputError("image of " + s.key() + " is not a simplex of the target");
    g.assignment.emplace(s, Chain::of(t));
  }
  return g;
}

SimplicialChainMap compose(const SimplicialChainMap& g, const SimplicialChainMap& f) {
  if (!(*f.target == *g.source)) throw InputError("compose: target and source differ");
  SimplicialChainMap out{f.source, g.target, {}};
  for (const auto& [s, c] : f.assignment) {
    Chain img = g.apply(c);
    if (!img.is_zero()) out.assignment.emplace(s, std::move(img));
  }
  return out;
}

StaircaseTriangulation eml_triangulation(int p, int q) {
  if (p < 0 || q < 0) throw InputError("eml_triangulation needs p, q >= 0");
  StaircaseTriangulation t{p, q, {}};
  // `ups` lists the steps that move in the second coordinate.
  const int n = p + q;
  std::vector<int> picks(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) picks[static_cast<std::size_t>(i)] = i;
  for (const auto& ups : subsets_of_size(picks, static_cast<std::size_t>(q))) {
    std::vector<GridPoint> path{{0, 0}};
    std::size_t u = 0;
    for (int step = 0; step < n; ++step) {
      auto [i, j] = path.back();
      if (u < ups.size() && ups[u] == step) {
        ++j;
        ++u;
      } else {
        ++i;
      }
      path.emplace_back(i, j);
    }
    t.simplices.push_back(std::move(path));
  }
  std::sort(t.simplices.begin(), t.simplices.end());
  return t;
}

bool eml_flip_check(int p, int q) {
  const auto forward = eml_triangulation(p, q);
  std::set<std::vector<GridPoint>> flipped;
  for (const auto& s : forward.simplices) {
    std::vector<GridPoint> f;
    for (auto [i, j] : s) f.emplace_back(j, i);
    flipped.insert(std::move(f));
  }
  const auto backward = eml_triangulation(q, p);
  return flipped.size() == forward.simplices.size() &&
         std::set<std::vector<GridPoint>>(backward.simplices.begin(), backward.simplices.end()) == flipped;
}

}  // namespace hb
