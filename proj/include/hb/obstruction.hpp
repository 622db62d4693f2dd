#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hb/cell_complex.hpp"
#include "hb/complex.hpp"
#include "hb/error.hpp"
#include "hb/exact.hpp"
#include "hb/gf2.hpp"

namespace hb {

enum class ParamScheme { Consecutive, Primes };

/// Vertex v sits at the moment-curve point (t, t^2, ..., t^d) with t = params[v].
struct GenericPointConfig {
  int d = 0;
  std::vector<long long> params;

  /// Consecutive gives t = v + 1, Primes gives t = the (v+1)-th prime.
  static GenericPointConfig moment_curve(int d, std::size_t num_vertices, ParamScheme scheme);

  std::vector<BigInt> point(Vertex v) const;
  /// Throws InputError when two used vertices share a parameter or a vertex has none.
  void validate(const std::vector<Vertex>& used) const;
};

/// True iff every <= d+1 of the given vertices' points are affinely independent.
bool in_general_position(const GenericPointConfig& cfg, const std::vector<Vertex>& vertices);

/// Parity of the number of crossings of the open linear images of two
/// vertex-disjoint simplices with dim(sigma) + dim(tau) = d.
/// Throws DegenerateConfiguration if the points are not generic for this pair.
bool intersection_parity(const Simplex& sigma, const Simplex& tau, const GenericPointConfig& cfg);

struct ObstructionOptions {
  std::size_t cell_budget = kDefaultCellBudget;
  ParamScheme scheme = ParamScheme::Consecutive;
  /// Recompute with the other scheme and require the same verdict.
  bool cross_check = true;
  int max_retries = 5;
};

struct ObstructionResult {
  bool nonzero = false;
  int d = 0;
  std::vector<long long> params;
  /// Cocycle values on the quotient d-cells, in quotient cell order.
  BitVector cocycle;
  /// When the class vanishes: a (d-1)-cochain on the quotient with coboundary equal to the cocycle.
  std::optional<BitVector> witness;
  CellComplex quotient;
  int retries = 0;
};

ObstructionResult obstruction_nonzero(const SimplicialComplex& k, int d,
                                      const ObstructionOptions& options = {});

/// (obstruction of K in R^d, obstruction of cone(K) in R^{d+1}).
std::pair<bool, bool> cone_obstruction_check(const SimplicialComplex& k, int d,
                                             const ObstructionOptions& options = {});

/// Non-reduced Betti numbers of the deleted product of the boundary of the (d+1)-simplex.
std::vector<std::size_t> sphere_check_deleted_boundary(int d,
                                                       std::size_t cell_budget = kDefaultCellBudget);

}  // namespace hb
