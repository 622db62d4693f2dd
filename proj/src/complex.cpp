#include "hb/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hb/error.hpp"

namespace hb {

namespace {

const std::vector<Simplex> kNoFaces;

}  // namespace

SimplicialComplex SimplicialComplex::closure(const std::vector<Simplex>& simplices) {
  std::set<Simplex> all;
  for (const auto& s : simplices) {
    if (s.empty()) continue;
    if (all.contains(s)) continue;
    for (auto& f : s.faces()) all.insert(std::move(f));
  }
  return from_closed_faces(std::vector<Simplex>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::vector<Simplex> faces) {
  SimplicialComplex out;
  int top = -1;
  for (const auto& f : faces) top = std::max(top, f.dimension());
  out.faces_.resize(static_cast<std::size_t>(top + 1));
  for (auto& f : faces) {
    if (f.empty()) continue;
    out.faces_[static_cast<std::size_t>(f.dimension())].push_back(std::move(f));
  }
  for (auto& layer : out.faces_) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  out.compute_maximal();
  return out;
}

void SimplicialComplex::compute_maximal() {
  maximal_.clear();
  for (int d = 0; d <= dimension(); ++d) {
    const auto& layer = faces_[static_cast<std::size_t>(d)];
    std::vector<bool> covered(layer.size(), false);
    if (d < dimension()) {
      for (const auto& up : faces_[static_cast<std::size_t>(d + 1)]) {
        for (const auto& f : up.facets()) {
          covered[static_cast<std::size_t>(
              std::lower_bound(layer.begin(), layer.end(), f) - layer.begin())] = true;
        }
      }
    }
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (!covered[i]) maximal_.push_back(layer[i]);
    }
  }
  std::sort(maximal_.begin(), maximal_.end());
}

const std::vector<Simplex>& SimplicialComplex::faces(int dim) const {
  if (dim < 0 || dim > dimension()) return kNoFaces;
  return faces_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::num_faces() const {
  std::size_t total = 0;
  for (const auto& layer : faces_) total += layer.size();
  return total;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& layer : faces_) f.push_back(layer.size());
  return f;
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
  std::vector<Simplex> out;
  out.reserve(num_faces());
  for (const auto& layer : faces_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : faces(0)) out.push_back(s[0]);
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  const auto& layer = faces(s.dimension());
  return std::binary_search(layer.begin(), layer.end(), s);
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const auto& layer = faces(s.dimension());
  auto it = std::lower_bound(layer.begin(), layer.end(), s);
  if (it == layer.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - layer.begin());
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& s : maximal_) {
    if (!other.contains(s)) return false;
  }
  return true;
}

ChainComplex SimplicialComplex::chain_complex() const {
  ChainComplex cc;
  for (int d = 0; d <= dimension(); ++d) cc.cell_counts.push_back(num_faces(d));
  for (int d = 0; d <= dimension(); ++d) {
    Gf2Matrix m(d == 0 ? 0 : num_faces(d - 1), num_faces(d));
    if (d > 0) {
      const auto& layer = faces(d);
      for (std::size_t j = 0; j < layer.size(); ++j) {
        for (const auto& f : layer[j].facets()) m.set(*index_of(f), j);
      }
    }
    cc.boundary.push_back(std::move(m));
  }
  return cc;
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  const auto& small = a.num_faces() <= b.num_faces() ? a : b;
  const auto& large = a.num_faces() <= b.num_faces() ? b : a;
  std::vector<Simplex> keep;
  for (int d = 0; d <= small.dimension(); ++d) {
    for (const auto& s : small.faces(d)) {
      if (large.contains(s)) keep.push_back(s);
    }
  }
  return SimplicialComplex::from_closed_faces(std::move(keep));
}

SimplicialComplex simplex_skeleton(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw InputError("simplex_skeleton requires 0 <= k <= n");
  }
  std::vector<Vertex> verts(static_cast<std::size_t>(n + 1));
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<Simplex> faces;
  for (int size = 1; size <= k + 1; ++size) {
    for (auto& pick : subsets_of_size(verts, static_cast<std::size_t>(size))) {
      faces.emplace_back(std::move(pick));
    }
  }
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

SimplicialComplex full_simplex(int n) { return simplex_skeleton(n, n); }

SimplicialComplex simplex_boundary(int n) {
  if (n < 1) throw InputError("simplex_boundary requires n >= 1");
  return simplex_skeleton(n, n - 1);
}

SimplicialComplex skeleton(const SimplicialComplex& k, int dim) {
  std::vector<Simplex> keep;
  for (int d = 0; d <= std::min(dim, k.dimension()); ++d) {
    keep.insert(keep.end(), k.faces(d).begin(), k.faces(d).end());
  }
  return SimplicialComplex::from_closed_faces(std::move(keep));
}

Vertex cone_apex(const SimplicialComplex& k) {
  const auto vs = k.vertices();
  return vs.empty() ? 0 : vs.back() + 1;
}

SimplicialComplex cone(const SimplicialComplex& k) {
  const Vertex apex = cone_apex(k);
  std::vector<Simplex> faces = k.all_faces();
  const std::size_t base = faces.size();
  faces.push_back(Simplex{apex});
  for (std::size_t i = 0; i < base; ++i) faces.push_back(faces[i].with(apex));
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<Vertex>& keep) {
  std::vector<Vertex> allowed(keep);
  std::sort(allowed.begin(), allowed.end());
  std::vector<Simplex> out;
  for (int d = 0; d <= k.dimension(); ++d) {
    for (const auto& s : k.faces(d)) {
      if (std::includes(allowed.begin(), allowed.end(), s.begin(), s.end())) out.push_back(s);
    }
  }
  return SimplicialComplex::from_closed_faces(std::move(out));
}

Vertex Subdivision::vertex_of(const Simplex& face) const {
  auto by_dim = [](const Simplex& a, const Simplex& b) {
    return a.dimension() != b.dimension() ? a.dimension() < b.dimension() : a < b;
  };
  auto it = std::lower_bound(labels.begin(), labels.end(), face, by_dim);
  if (it == labels.end() || *it != face) throw InputError("face " + face.key() + " is not in the subdivided complex");
  return static_cast<Vertex>(it - labels.begin());
}

std::vector<std::vector<Simplex>> maximal_face_chains(const Simplex& s) {
  std::vector<std::vector<Simplex>> out;
  std::vector<Vertex> order(s.begin(), s.end());
  do {
    std::vector<Simplex> chain;
    std::vector<Vertex> acc;
    for (auto v : order) {
      acc.push_back(v);
      chain.emplace_back(acc);
    }
    out.push_back(std::move(chain));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Subdivision barycentric_subdivision(const SimplicialComplex& k) {
  Subdivision sd;
  sd.labels = k.all_faces();
  auto id_of = [&](const Simplex& f) {
    // all_faces() is sorted by (dimension, lex); search within the dimension block.
    std::size_t offset = 0;
    for (int d = 0; d < f.dimension(); ++d) offset += k.num_faces(d);
    return static_cast<Vertex>(offset + *k.index_of(f));
  };
  std::vector<Simplex> tops;
  for (const auto& m : k.maximal_simplices()) {
    for (const auto& chain : maximal_face_chains(m)) {
      std::vector<Vertex> ids;
      for (const auto& f : chain) ids.push_back(id_of(f));
      tops.emplace_back(std::move(ids));
    }
  }
  sd.complex = SimplicialComplex::closure(tops);
  return sd;
}

}  // namespace hb
