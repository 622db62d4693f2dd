#include "hb/cell_complex.hpp"

#include <algorithm>
#include <string>

namespace hb {

ProductCell::ProductCell(Simplex l, Simplex r) : left(std::move(l)), right(std::move(r)) {
  if (left.empty() || right.empty()) throw InputError("product cell factors must be nonempty");
  if (!left.disjoint(right)) throw InputError("product cell factors must be vertex-disjoint");
}

std::vector<std::size_t> CellComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& layer : cells) f.push_back(layer.size());
  return f;
}

std::size_t CellComplex::index_of(const ProductCell& c) const {
  const int d = c.dimension();
  if (d < 0 || d > dimension()) throw InputError("cell dimension out of range");
  const auto& layer = cells[static_cast<std::size_t>(d)];
  auto it = std::lower_bound(layer.begin(), layer.end(), c);
  if (it == layer.end() || !(*it == c)) throw InputError("cell not in complex");
  return static_cast<std::size_t>(it - layer.begin());
}

bool Involution::is_involution() const {
  for (const auto& perm : images) {
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] >= perm.size() || perm[perm[i]] != i) return false;
    }
  }
  return true;
}

bool Involution::is_free() const {
  for (const auto& perm : images) {
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] == i) return false;
    }
  }
  return true;
}

bool Involution::is_cellular(const CellComplex& c) const {
  auto permutation = [&](int dim) {
    const auto& perm = images[static_cast<std::size_t>(dim)];
    Gf2Matrix p(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) p.set(perm[i], i);
    return p;
  };
  for (int d = 1; d <= c.dimension(); ++d) {
    const auto bd = c.chains.boundary_map(d);
    if (!(permutation(d - 1).multiply(bd) == bd.multiply(permutation(d)))) return false;
  }
  return true;
}

DeletedProduct deleted_product(const SimplicialComplex& k, std::size_t cell_budget) {
  const auto faces = k.all_faces();
  std::vector<std::vector<ProductCell>> cells;
  std::size_t total = 0;
  for (const auto& a : faces) {
    for (const auto& b : faces) {
      if (!a.disjoint(b)) continue;
      if (++total > cell_budget) {
        throw BudgetExceeded("deleted product exceeds the cell budget of " +
                             std::to_string(cell_budget));
      }
      ProductCell cell(a, b);
      const auto d = static_cast<std::size_t>(cell.dimension());
      if (cells.size() <= d) cells.resize(d + 1);
      cells[d].push_back(std::move(cell));
    }
  }
  for (auto& layer : cells) std::sort(layer.begin(), layer.end());

  DeletedProduct out;
  out.complex.cells = std::move(cells);
  auto& cc = out.complex.chains;
  for (int d = 0; d <= out.complex.dimension(); ++d) cc.cell_counts.push_back(out.complex.num_cells(d));
  for (int d = 0; d <= out.complex.dimension(); ++d) {
    Gf2Matrix m(d == 0 ? 0 : out.complex.num_cells(d - 1), out.complex.num_cells(d));
    if (d > 0) {
      const auto& layer = out.complex.cells[static_cast<std::size_t>(d)];
      for (std::size_t j = 0; j < layer.size(); ++j) {
        // d(s x t) = ds x t + s x dt over Z2; vertices have no facets.
        for (const auto& f : layer[j].left.facets()) {
          m.flip(out.complex.index_of(ProductCell(f, layer[j].right)), j);
        }
        for (const auto& f : layer[j].right.facets()) {
          m.flip(out.complex.index_of(ProductCell(layer[j].left, f)), j);
        }
      }
    }
    cc.boundary.push_back(std::move(m));
  }
  cc.check_boundary_squared();

  for (int d = 0; d <= out.complex.dimension(); ++d) {
    const auto& layer = out.complex.cells[static_cast<std::size_t>(d)];
    std::vector<std::size_t> perm(layer.size());
    for (std::size_t i = 0; i < layer.size(); ++i) perm[i] = out.complex.index_of(layer[i].swapped());
    out.swap.images.push_back(std::move(perm));
  }
  return out;
}

CellComplex quotient_by_involution(const CellComplex& c, const Involution& iota) {
  if (iota.images.size() != c.cells.size() || !iota.is_involution()) {
    throw InputError("quotient: the map is not an involution on this complex");
  }
  if (!iota.is_free()) throw InputError("quotient: the action has a fixed cell");

  CellComplex q;
  q.is_quotient = true;
  std::vector<std::vector<std::size_t>> orbit_of(c.cells.size());
  for (int d = 0; d <= c.dimension(); ++d) {
    const auto du = static_cast<std::size_t>(d);
    const auto& layer = c.cells[du];
    orbit_of[du].assign(layer.size(), 0);
    std::vector<ProductCell> reps;
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const std::size_t j = iota(d, i);
      if (i < j) {
        orbit_of[du][i] = orbit_of[du][j] = reps.size();
        reps.push_back(layer[i]);
      }
    }
    q.cells.push_back(std::move(reps));
    q.chains.cell_counts.push_back(q.cells.back().size());
  }
  for (int d = 0; d <= c.dimension(); ++d) {
    Gf2Matrix m(d == 0 ? 0 : q.num_cells(d - 1), q.num_cells(d));
    if (d > 0) {
      const auto du = static_cast<std::size_t>(d);
      const auto bd = c.chains.boundary_map(d);
      for (std::size_t i = 0; i < c.cells[du].size(); ++i) {
        if (i > iota(d, i)) continue;
        for (std::size_t r = 0; r < bd.rows(); ++r) {
          if (bd.get(r, i)) m.flip(orbit_of[du - 1][r], orbit_of[du][i]);
        }
      }
    }
    q.chains.boundary.push_back(std::move(m));
  }
  q.chains.check_boundary_squared();
  return q;
}

}  // namespace hb
