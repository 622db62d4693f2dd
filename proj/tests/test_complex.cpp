#include <map>
#include <random>

#include "doctest.h"
#include "hb/complex.hpp"
#include "hb/error.hpp"
#include "oracles.hpp"

using namespace hb;

TEST_CASE("simplex canonical form") {
  CHECK(Simplex{2, 0, 1}.vertices() == std::vector<Vertex>{0, 1, 2});
  CHECK_THROWS_AS(Simplex({1, 1}), InputError);
  CHECK_THROWS_AS(Simplex({-1}), InputError);
  CHECK(Simplex{}.dimension() == -1);
  CHECK(Simplex::from_key("0,3,5") == Simplex{0, 3, 5});
  CHECK(Simplex{0, 3, 5}.key() == "0,3,5");
}

TEST_CASE("closure") {
  const auto tri = SimplicialComplex::closure({Simplex{0, 1, 2}});
  CHECK(tri.num_faces() == 7);
  CHECK(SimplicialComplex::closure({}).dimension() == -1);
  const auto circle = SimplicialComplex::closure({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
  CHECK(circle.num_faces() == 6);
  CHECK(circle == simplex_boundary(2));
  CHECK(SimplicialComplex::closure(tri.all_faces()) == tri);
}

TEST_CASE("skeleta") {
  CHECK(simplex_skeleton(4, 1).num_faces(1) == 10);
  CHECK(simplex_skeleton(2, 2) == full_simplex(2));
  CHECK(simplex_skeleton(4, 2).num_faces(2) == 10);
  CHECK_THROWS_AS(simplex_skeleton(2, 3), InputError);
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto s = simplex_skeleton(n, k);
      for (int i = 0; i <= k; ++i) CHECK(static_cast<long long>(s.num_faces(i)) == binomial(n + 1, i + 1));
    }
  }
}

TEST_CASE("cone") {
  const auto g = cone(simplex_boundary(2));
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_faces(2) == 3);
  CHECK(cone(SimplicialComplex{}).num_faces() == 1);
  const auto two = SimplicialComplex::closure({Simplex{0}, Simplex{1}});
  CHECK(cone(two) == SimplicialComplex::closure({Simplex{0, 2}, Simplex{1, 2}}));
}

TEST_CASE("barycentric subdivision") {
  const auto sd = barycentric_subdivision(full_simplex(2));
  CHECK(sd.complex.f_vector() == std::vector<std::size_t>{7, 12, 6});
  const auto edge = barycentric_subdivision(full_simplex(1));
  CHECK(edge.complex.f_vector() == std::vector<std::size_t>{3, 2});
  CHECK(barycentric_subdivision(full_simplex(3)).complex.num_faces(3) == 24);
  CHECK(sd.labels.size() == 7);
  CHECK(sd.labels[sd.vertex_of(Simplex{0, 2})] == Simplex{0, 2});
}

// j-simplices of sd K are chains of j+1 faces under strict inclusion.
TEST_CASE("sd f-vector matches face-poset chain counts") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = oracle::random_complex(rng, 3 + trial % 4, 1 + trial % 4, 3);
    const auto faces = k.all_faces();
    // chains[f][len]: number of chains of length len ending at f.
    std::map<Simplex, std::vector<std::size_t>> chains;
    std::vector<std::size_t> counts(faces.size() + 1, 0);
    for (const auto& f : faces) {
      std::vector<std::size_t> c(static_cast<std::size_t>(f.dimension()) + 2, 0);
      c[1] = 1;
      for (const auto& g : faces) {
        if (g.dimension() >= f.dimension() || !g.is_face_of(f)) continue;
        const auto& below = chains.at(g);
        for (std::size_t len = 1; len < below.size(); ++len) c[len + 1] += below[len];
      }
      for (std::size_t len = 1; len < c.size(); ++len) counts[len] += c[len];
      chains.emplace(f, std::move(c));
    }
    const auto fv = barycentric_subdivision(k).complex.f_vector();
    for (std::size_t j = 0; j < fv.size(); ++j) CHECK(fv[j] == counts[j + 1]);
  }
}

TEST_CASE("induced subcomplexes") {
  const auto g = cone(simplex_boundary(2));
  CHECK(induced_subcomplex(g, {0, 1, 2}) == simplex_boundary(2));
  CHECK(induced_subcomplex(g, {}).empty());
  CHECK(induced_subcomplex(simplex_skeleton(4, 1), {0, 1, 2}) == simplex_boundary(2));
  CHECK(induced_subcomplex(g, g.vertices()) == g);
}
