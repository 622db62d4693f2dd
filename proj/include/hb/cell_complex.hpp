#pragma once

#include <cstddef>
#include <vector>

#include "hb/complex.hpp"
#include "hb/error.hpp"
#include "hb/gf2.hpp"

namespace hb {

/// Product cell left x right of two vertex-disjoint nonempty simplices.
struct ProductCell {
  Simplex left;
  Simplex right;

  ProductCell(Simplex l, Simplex r);
  int dimension() const { return left.dimension() + right.dimension(); }
  ProductCell swapped() const { return ProductCell(right, left); }

  friend auto operator<=>(const ProductCell&, const ProductCell&) = default;
  friend bool operator==(const ProductCell&, const ProductCell&) = default;
};

/// Finite cell complex with GF(2) boundary. In a quotient complex each label
/// is the smaller representative of its orbit.
struct CellComplex {
  std::vector<std::vector<ProductCell>> cells;
  ChainComplex chains;
  bool is_quotient = false;

  int dimension() const { return static_cast<int>(cells.size()) - 1; }
  std::size_t num_cells(int dim) const {
    return dim < 0 || dim > dimension() ? 0 : cells[static_cast<std::size_t>(dim)].size();
  }
  std::vector<std::size_t> f_vector() const;
  /// Index of a cell in its dimension, or throws InputError.
  std::size_t index_of(const ProductCell& c) const;
};

/// Cellular Z2 action given as one permutation of cell ids per dimension.
struct Involution {
  std::vector<std::vector<std::size_t>> images;

  std::size_t operator()(int dim, std::size_t cell) const {
    return images[static_cast<std::size_t>(dim)][cell];
  }
  bool is_involution() const;
  bool is_free() const;
  /// Checks that the action commutes with every boundary map of `c`.
  bool is_cellular(const CellComplex& c) const;
};

struct DeletedProduct {
  CellComplex complex;
  Involution swap;
};

/// Cells sigma x tau for ordered pairs of vertex-disjoint nonempty faces.
/// Throws BudgetExceeded if the cell count would pass `cell_budget`.
DeletedProduct deleted_product(const SimplicialComplex& k,
                               std::size_t cell_budget = kDefaultCellBudget);

/// One cell per orbit; requires a free action.
CellComplex quotient_by_involution(const CellComplex& c, const Involution& iota);

}  // namespace hb
