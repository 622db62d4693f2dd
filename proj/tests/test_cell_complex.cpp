#include <random>

#include "doctest.h"
#include "hb/cell_complex.hpp"
#include "hb/homology.hpp"
#include "oracles.hpp"

using namespace hb;

TEST_CASE("product cells") {
  CHECK_THROWS_AS(ProductCell(Simplex{0, 1}, Simplex{1, 2}), InputError);
  CHECK_THROWS_AS(ProductCell(Simplex{}, Simplex{1}), InputError);
  const ProductCell c(Simplex{0, 1}, Simplex{2});
  CHECK(c.dimension() == 1);
  CHECK(c.swapped().left == Simplex{2});
}

TEST_CASE("deleted product of the triangle boundary is a hexagon") {
  const auto dp = deleted_product(simplex_boundary(2));
  CHECK(dp.complex.f_vector() == std::vector<std::size_t>{6, 6});
  CHECK(betti_vector(dp.complex.chains) == std::vector<std::size_t>{1, 1});
  const auto quo = quotient_by_involution(dp.complex, dp.swap);
  CHECK(quo.f_vector() == std::vector<std::size_t>{3, 3});
  CHECK(betti_vector(quo.chains) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("small deleted products") {
  const auto edge = deleted_product(full_simplex(1));
  CHECK(edge.complex.f_vector() == std::vector<std::size_t>{2});
  CHECK(betti_vector(deleted_product(simplex_boundary(3)).complex.chains) == std::vector<std::size_t>{1, 0, 1});
  const auto k5 = deleted_product(simplex_skeleton(4, 1));
  CHECK(quotient_by_involution(k5.complex, k5.swap).num_cells(2) == 15);
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(deleted_product(simplex_skeleton(4, 1), 10), BudgetExceeded);
}

TEST_CASE("swap is a free cellular involution and the quotient halves every count") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = oracle::random_complex(rng, 3 + trial % 4, 2 + trial % 3, 2);
    const auto dp = deleted_product(k);
    CHECK(dp.swap.is_involution());
    CHECK(dp.swap.is_free());
    CHECK(dp.swap.is_cellular(dp.complex));
    CHECK_NOTHROW(dp.complex.chains.check_boundary_squared());
    const auto quo = quotient_by_involution(dp.complex, dp.swap);
    CHECK_NOTHROW(quo.chains.check_boundary_squared());
    for (int d = 0; d <= dp.complex.dimension(); ++d) CHECK(2 * quo.num_cells(d) == dp.complex.num_cells(d));
  }
}
