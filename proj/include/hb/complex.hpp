#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hb/gf2.hpp"
#include "hb/simplex.hpp"

namespace hb {

/// Finite abstract simplicial complex. Immutable once built; the full face
/// poset is materialized per dimension in lexicographic order, so a face's
/// position in faces(dim) doubles as its chain-group index.
class SimplicialComplex {
 public:
  /// The empty complex (dimension -1).
  SimplicialComplex() = default;

  /// Downward closure of the given simplices (empty simplices are ignored).
  static SimplicialComplex closure(const std::vector<Simplex>& simplices);
  /// Trusted constructor from an already downward-closed face list.
  static SimplicialComplex from_closed_faces(std::vector<Simplex> faces);

  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  bool empty() const { return faces_.empty(); }

  const std::vector<Simplex>& faces(int dim) const;
  std::size_t num_faces(int dim) const { return faces(dim).size(); }
  std::size_t num_faces() const;
  std::vector<std::size_t> f_vector() const;
  /// Every nonempty face, ordered by dimension then lexicographically.
  std::vector<Simplex> all_faces() const;
  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }

  std::vector<Vertex> vertices() const;
  std::size_t num_vertices() const { return num_faces(0); }
  bool contains(const Simplex& s) const;
  bool contains_vertex(Vertex v) const { return contains(Simplex{v}); }
  std::optional<std::size_t> index_of(const Simplex& s) const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;

  /// Simplicial chain complex over GF(2) with cells indexed as in faces(dim).
  ChainComplex chain_complex() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.faces_ == b.faces_;
  }

 private:
  std::vector<std::vector<Simplex>> faces_;
  std::vector<Simplex> maximal_;

  void compute_maximal();
};

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);

/// The k-skeleton of the n-simplex on vertices {0..n}.
SimplicialComplex simplex_skeleton(int n, int k);
/// The full n-simplex on {0..n}.
SimplicialComplex full_simplex(int n);
/// Boundary of the n-simplex on {0..n}.
SimplicialComplex simplex_boundary(int n);

SimplicialComplex skeleton(const SimplicialComplex& k, int dim);

/// Cone with apex = (largest vertex + 1), or vertex 0 for the empty complex.
SimplicialComplex cone(const SimplicialComplex& k);
Vertex cone_apex(const SimplicialComplex& k);

/// All simplices of k whose vertices lie in `keep`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<Vertex>& keep);

/// Barycentric subdivision. Vertex i of the result stands for labels[i], a
/// nonempty face of the input; labels are in all_faces() order.
struct Subdivision {
  SimplicialComplex complex;
  std::vector<Simplex> labels;

  Vertex vertex_of(const Simplex& face) const;
};

Subdivision barycentric_subdivision(const SimplicialComplex& k);

/// Maximal chains of nonempty faces of `s` (one per vertex ordering), each
/// listed from the smallest face up; these are the top simplices of sd(s).
std::vector<std::vector<Simplex>> maximal_face_chains(const Simplex& s);

}  // namespace hb
