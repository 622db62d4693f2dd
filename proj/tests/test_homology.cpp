#include <random>

#include "doctest.h"
#include "hb/homology.hpp"
#include "oracles.hpp"

using namespace hb;

namespace {

// Triangulated annulus: outer triangle 0,1,2, inner triangle 3,4,5.
SimplicialComplex annulus() {
  return SimplicialComplex::closure({Simplex{0, 1, 3}, Simplex{1, 3, 4}, Simplex{1, 2, 4}, Simplex{2, 4, 5},
                                     Simplex{0, 2, 5}, Simplex{0, 3, 5}});
}

Chain cycle(std::initializer_list<Simplex> edges) { return Chain(1, std::vector<Simplex>(edges)); }

}  // namespace

TEST_CASE("chains cancel in pairs") {
  const Chain c(1, {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 1}});
  CHECK(c.size() == 1);
  CHECK_THROWS_AS(Chain(1, {Simplex{0}}), InputError);
  CHECK(Chain::of(Simplex{0, 1, 2}).boundary().boundary().is_zero());
}

TEST_CASE("betti examples") {
  CHECK(betti(simplex_skeleton(4, 1), 1, true) == 6);
  const auto s2 = simplex_boundary(3);
  CHECK(betti(s2, 2, true) == 1);
  CHECK(betti(s2, 0, true) == 0);
  CHECK(betti(s2, 1, true) == 0);
  const auto points = SimplicialComplex::closure({Simplex{0}, Simplex{1}});
  CHECK(betti(points, 0, false) == 2);
  CHECK(betti(SimplicialComplex{}, 0, true) == 0);
  CHECK(betti(SimplicialComplex{}, 0, false) == 0);
}

TEST_CASE("is_boundary") {
  const auto filled = is_boundary(Chain::of(Simplex{0, 1, 2}).boundary(), full_simplex(2));
  REQUIRE(filled.has_value());
  CHECK(*filled == Chain::of(Simplex{0, 1, 2}));
  CHECK_FALSE(is_boundary(Chain::of(Simplex{0, 1, 2}).boundary(), simplex_boundary(2)).has_value());
  CHECK_THROWS_AS(is_boundary(Chain::of(Simplex{0, 1}), full_simplex(2)), InputError);
  CHECK_THROWS_AS(is_boundary(Chain::of(Simplex{0, 9}).boundary(), full_simplex(2)), InputError);

  const auto a = annulus();
  const auto outer = cycle({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
  const auto inner = cycle({Simplex{3, 4}, Simplex{4, 5}, Simplex{3, 5}});
  CHECK_FALSE(is_boundary(outer, a).has_value());
  const auto fill = is_boundary(outer + inner, a);
  REQUIRE(fill.has_value());
  CHECK(fill->boundary() == outer + inner);
}

TEST_CASE("homology classes on a wedge of two circles") {
  const auto wedge = SimplicialComplex::closure(
      {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}, Simplex{0, 3}, Simplex{3, 4}, Simplex{0, 4}});
  const HomologyBasis basis(wedge, 1);
  CHECK(basis.rank() == 2);
  const auto l1 = homology_class(cycle({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}}), basis);
  const auto l2 = homology_class(cycle({Simplex{0, 3}, Simplex{3, 4}, Simplex{0, 4}}), basis);
  CHECK(l1.any());
  CHECK(l2.any());
  CHECK_FALSE(l1 == l2);
  CHECK((l1 ^ l1).none());
  const HomologyBasis filled(full_simplex(2), 1);
  CHECK(homology_class(Chain::of(Simplex{0, 1, 2}).boundary(), filled).none());
}

TEST_CASE("is_boundary agrees with homology_class on random cycles") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = oracle::random_complex(rng, 5 + trial % 3, 3 + trial % 4, 2);
    for (int grade = 0; grade <= std::min(1, k.dimension()); ++grade) {
      const HomologyBasis basis(k, grade);
      const auto cc = k.chain_complex();
      for (const auto& z : kernel_basis(cc.boundary_map(grade))) {
        const auto chain = from_vector(grade, z, k);
        CHECK(is_boundary(chain, k).has_value() == homology_class(chain, basis).none());
      }
    }
  }
}

TEST_CASE("Euler characteristic") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = oracle::random_complex(rng, 4 + trial % 4, 2 + trial % 5, 3);
    long long chi_f = 0;
    long long chi_b = 0;
    const auto b = betti_vector(k);
    for (int i = 0; i <= k.dimension(); ++i) {
      const long long sign = i % 2 == 0 ? 1 : -1;
      chi_f += sign * static_cast<long long>(k.num_faces(i));
      chi_b += sign * static_cast<long long>(b[static_cast<std::size_t>(i)]);
    }
    CHECK(chi_f == chi_b);
  }
}

TEST_CASE("is_coboundary") {
  const auto tri = simplex_boundary(2).chain_complex();
  const auto zero = is_coboundary(BitVector(3), tri, 1);
  REQUIRE(zero.has_value());
  CHECK(zero->none());
  CHECK_FALSE(is_coboundary(BitVector::unit(3, 0), tri, 1).has_value());
  const auto tree = SimplicialComplex::closure({Simplex{0, 1}, Simplex{1, 2}, Simplex{1, 3}}).chain_complex();
  for (std::size_t e = 0; e < 3; ++e) CHECK(is_coboundary(BitVector::unit(3, e), tree, 1).has_value());
  // A single edge of a filled triangle is not a cocycle.
  CHECK_THROWS_AS(is_coboundary(BitVector::unit(3, 0), full_simplex(2).chain_complex(), 1), InputError);
}
