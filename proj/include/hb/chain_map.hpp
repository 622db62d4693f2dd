#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hb/complex.hpp"
#include "hb/homology.hpp"

namespace hb {

/// Chain map C(K) -> C(T) given on the simplices of K; unlisted simplices map to zero.
struct SimplicialChainMap {
  std::shared_ptr<const SimplicialComplex> source;
  std::shared_ptr<const SimplicialComplex> target;
  std::map<Simplex, Chain> assignment;

  Chain image(const Simplex& s) const;
  /// Linear extension to chains of K.
  Chain apply(const Chain& c) const;
};

/// Simplices where the image has the wrong grade, leaves the target, or
/// breaks d(gamma(s)) = gamma(ds). Empty means the map is a chain map.
std::vector<Simplex> verify_chain_map(const SimplicialChainMap& g);

/// Every vertex goes to a 0-chain of odd size.
bool is_nontrivial(const SimplicialChainMap& g);

/// Vertices of the closed support of c. Throws InputError if c leaves `t`.
std::vector<Vertex> support(const Chain& c, const SimplicialComplex& t);

struct AlmostEmbeddingCheck {
  bool ok = false;
  /// First vertex-disjoint pair (in lexicographic face order) whose images meet.
  std::optional<std::pair<Simplex, Simplex>> violation;
  std::string reason;
};

/// Throws InputError when g is not a chain map.
AlmostEmbeddingCheck is_homological_almost_embedding(const SimplicialChainMap& g);

/// Chain map of a vertex map that is injective on every simplex of K.
/// Throws InputError for degenerate images or images outside T.
SimplicialChainMap induced_chain_map(std::shared_ptr<const SimplicialComplex> source,
                                     std::shared_ptr<const SimplicialComplex> target,
                                     const std::map<Vertex, Vertex>& f);

/// g after f; requires f.target == g.source as complexes.
SimplicialChainMap compose(const SimplicialChainMap& g, const SimplicialChainMap& f);

using GridPoint = std::pair<int, int>;

/// Staircase triangulation of Delta_p x Delta_q: each simplex is a maximal
/// chain of grid points from (0,0) to (p,q).
struct StaircaseTriangulation {
  int p = 0;
  int q = 0;
  std::vector<std::vector<GridPoint>> simplices;
};

StaircaseTriangulation eml_triangulation(int p, int q);

/// Swapping the coordinates of every staircase of (p,q) gives exactly the staircases of (q,p).
bool eml_flip_check(int p, int q);

}  // namespace hb
