#pragma once

// Slow, independent reference computations. None of these call the
// elimination, mask or search code they are used to check.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hb/chain_map.hpp"
#include "hb/complex.hpp"
#include "hb/construction.hpp"
#include "hb/helly.hpp"

namespace hb::oracle {

/// Betti number by enumerating every GF(2) vector of C_i and C_{i+1}.
/// Needs at most ~20 cells per dimension.
std::size_t betti(const SimplicialComplex& k, int i, bool reduced);

/// Helly number by checking every subfamily for a common vertex.
int helly(const SetFamily& f);

/// Maximal chains of the grid poset {0..p} x {0..q}, by recursion.
std::vector<std::vector<GridPoint>> grid_chains(int p, int q);

/// Empty string if (pi, W_i) satisfies every conclusion of the selection lemma.
std::string check_rescale(const SelectionPattern& q, const std::vector<int>& y, const std::vector<int>& z,
                          const std::vector<std::vector<int>>& a, const RescaleResult& r);

/// Closure of `tops` random simplices on `vertices` vertices, each of dimension <= max_dim.
SimplicialComplex random_complex(std::mt19937& rng, int vertices, int tops, int max_dim);

/// Random members: induced subcomplexes on random vertex subsets, or closures of random
/// subsets of the ambient's maximal simplices.
SetFamily random_family(std::mt19937& rng, const SimplicialComplex& ambient, int members);

/// Largest number of faces in a single dimension.
std::size_t max_cells_per_dim(const SimplicialComplex& k);

}  // namespace hb::oracle
