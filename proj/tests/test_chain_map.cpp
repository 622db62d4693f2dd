#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hb/chain_map.hpp"
#include "oracles.hpp"

using namespace hb;

namespace {

std::shared_ptr<const SimplicialComplex> share(SimplicialComplex k) {
  return std::make_shared<const SimplicialComplex>(std::move(k));
}

SimplicialChainMap identity(const std::shared_ptr<const SimplicialComplex>& k) {
  std::map<Vertex, Vertex> id;
  for (Vertex v : k->vertices()) id[v] = v;
  return induced_chain_map(k, k, id);
}

}  // namespace

TEST_CASE("verify_chain_map") {
  const auto tri = share(full_simplex(2));
  CHECK(verify_chain_map(identity(tri)).empty());

  auto bad = identity(tri);
  bad.assignment[Simplex{0, 1}] = Chain::of(Simplex{1, 2});
  CHECK_FALSE(verify_chain_map(bad).empty());
}

TEST_CASE("nontriviality") {
  const auto pt = share(SimplicialComplex::closure({Simplex{0}}));
  const auto target = share(SimplicialComplex::closure({Simplex{0}, Simplex{1}, Simplex{2}}));
  SimplicialChainMap g{pt, target, {{Simplex{0}, Chain::of(Simplex{1})}}};
  CHECK(is_nontrivial(g));
  g.assignment[Simplex{0}] = Chain(0);
  CHECK_FALSE(is_nontrivial(g));
  g.assignment[Simplex{0}] = Chain(0, {Simplex{0}, Simplex{1}, Simplex{2}});
  CHECK(is_nontrivial(g));
}

TEST_CASE("support") {
  const auto tri = full_simplex(2);
  CHECK(support(Chain::of(Simplex{0, 1}), tri) == std::vector<Vertex>{0, 1});
  CHECK(support(Chain(1), tri).empty());
  CHECK(support(Chain::of(Simplex{0, 1, 2}).boundary(), tri) == std::vector<Vertex>{0, 1, 2});
  CHECK_THROWS_AS(support(Chain::of(Simplex{0, 7}), tri), InputError);
}

TEST_CASE("almost-embeddings") {
  const auto tri = share(full_simplex(2));
  CHECK(is_homological_almost_embedding(identity(tri)).ok);

  const auto small = share(SimplicialComplex::closure({Simplex{0, 1}, Simplex{1, 2}}));
  std::vector<Simplex> edges;
  for (int v = 0; v < 6; ++v) edges.push_back(Simplex{v, v + 1});
  const auto big = share(SimplicialComplex::closure(edges));
  CHECK(is_homological_almost_embedding(induced_chain_map(small, big, {{0, 2}, {1, 3}, {2, 4}})).ok);

  // Collapsing an edge is rejected rather than sent to zero.
  const auto target = share(simplex_boundary(2));
  const auto path3 = share(SimplicialComplex::closure({Simplex{0, 1}, Simplex{1, 2}, Simplex{2, 3}}));
  CHECK_THROWS_AS(induced_chain_map(path3, target, {{0, 0}, {1, 0}, {2, 1}, {3, 2}}), InputError);

  auto broken = identity(tri);
  broken.assignment[Simplex{0, 1}] = Chain::of(Simplex{1, 2});
  CHECK_THROWS_AS(is_homological_almost_embedding(broken), InputError);
}

// Brute force: f injective on vertices, and images of vertex-disjoint simplices share no vertex.
TEST_CASE("induced maps of injective vertex maps are almost-embeddings") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = share(oracle::random_complex(rng, 4 + trial % 3, 2 + trial % 3, 2));
    std::vector<Vertex> targets(12);
    for (int i = 0; i < 12; ++i) targets[static_cast<std::size_t>(i)] = i;
    std::shuffle(targets.begin(), targets.end(), rng);
    std::map<Vertex, Vertex> f;
    std::vector<Simplex> images;
    const auto verts = k->vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) f[verts[i]] = targets[i];
    for (const auto& s : k->maximal_simplices()) {
      std::vector<Vertex> img;
      for (Vertex v : s) img.push_back(f.at(v));
      images.emplace_back(img);
    }
    const auto t = share(SimplicialComplex::closure(images));
    const auto g = induced_chain_map(k, t, f);
    CHECK(verify_chain_map(g).empty());
    CHECK(is_homological_almost_embedding(g).ok);
  }
}

TEST_CASE("composition preserves the chain-map law and nontriviality") {
  const auto a = share(SimplicialComplex::closure({Simplex{0, 1}, Simplex{1, 2}}));
  const auto b = share(SimplicialComplex::closure({Simplex{3, 4}, Simplex{4, 5}, Simplex{5, 6}}));
  const auto c = share(full_simplex(7));
  const auto f = induced_chain_map(a, b, {{0, 3}, {1, 4}, {2, 5}});
  const auto g = induced_chain_map(b, c, {{3, 0}, {4, 2}, {5, 4}, {6, 6}});
  const auto h = compose(g, f);
  CHECK(verify_chain_map(h).empty());
  CHECK(is_nontrivial(h));
  CHECK(h.image(Simplex{0, 1}) == Chain::of(Simplex{0, 2}));
}

TEST_CASE("staircase triangulations") {
  CHECK(eml_triangulation(1, 1).simplices.size() == 2);
  CHECK(eml_triangulation(2, 1).simplices.size() == 3);
  CHECK(eml_triangulation(3, 0).simplices.size() == 1);
  CHECK(eml_flip_check(1, 1));
  CHECK(eml_flip_check(2, 2));
  CHECK(eml_flip_check(3, 1));
  for (const auto& s : eml_triangulation(2, 3).simplices) {
    CHECK(s.size() == 6);
    CHECK(s.front() == GridPoint{0, 0});
    CHECK(s.back() == GridPoint{2, 3});
  }
}
