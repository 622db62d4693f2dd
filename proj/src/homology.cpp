#include "hb/homology.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "hb/error.hpp"

namespace hb {

Chain::Chain(int grade, std::vector<Simplex> simplices) : grade_(grade) {
  for (const auto& s : simplices) {
    if (s.dimension() != grade) {
      throw InputError("chain of grade " + std::to_string(grade) + " given simplex " + s.key());
    }
  }
  std::sort(simplices.begin(), simplices.end());
  for (std::size_t i = 0; i < simplices.size();) {
    std::size_t j = i;
    while (j < simplices.size() && simplices[j] == simplices[i]) ++j;
    if ((j - i) % 2 == 1) support_.push_back(simplices[i]);
    i = j;
  }
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    grade_ = other.grade_;
  } else if (grade_ != other.grade_) {
    throw InputError("cannot add chains of different grades");
  }
  std::vector<Simplex> out;
  std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(),
                                other.support_.end(), std::back_inserter(out));
  support_ = std::move(out);
  return *this;
}

Chain Chain::boundary() const {
  if (grade_ <= 0) return Chain(grade_ - 1);
  std::vector<Simplex> faces;
  faces.reserve(support_.size() * static_cast<std::size_t>(grade_ + 1));
  for (const auto& s : support_) {
    for (auto& f : s.facets()) faces.push_back(std::move(f));
  }
  return Chain(grade_ - 1, std::move(faces));
}

std::vector<Vertex> Chain::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : support_) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BitVector to_vector(const Chain& c, const SimplicialComplex& k) {
  BitVector v(k.num_faces(c.grade()));
  for (const auto& s : c.support()) {
    auto idx = k.index_of(s);
    if (!idx) throw InputError("simplex " + s.key() + " is not in the complex");
    v.set(*idx);
  }
  return v;
}

Chain from_vector(int grade, const BitVector& v, const SimplicialComplex& k) {
  std::vector<Simplex> support;
  for (auto i : v.ones()) support.push_back(k.faces(grade)[i]);
  return Chain(grade, std::move(support));
}

std::size_t betti(const ChainComplex& c, int i, bool reduced) {
  if (i < 0 || i > c.top_dimension()) return 0;
  const std::size_t n = c.cells(i);
  const std::size_t kernel = n - rank(c.boundary_map(i));
  std::size_t b = kernel - rank(c.boundary_map(i + 1));
  if (reduced && i == 0 && n > 0) --b;
  return b;
}

std::size_t betti(const SimplicialComplex& k, int i, bool reduced) {
  if (i < 0 || i > k.dimension()) return 0;
  return betti(k.chain_complex(), i, reduced);
}

std::vector<std::size_t> betti_vector(const ChainComplex& c, bool reduced) {
  std::vector<std::size_t> ranks;
  for (int d = 0; d <= c.top_dimension() + 1; ++d) ranks.push_back(rank(c.boundary_map(d)));
  std::vector<std::size_t> out;
  for (int d = 0; d <= c.top_dimension(); ++d) {
    const auto du = static_cast<std::size_t>(d);
    out.push_back(c.cells(d) - ranks[du] - ranks[du + 1]);
  }
  if (reduced && !out.empty() && c.cells(0) > 0) --out[0];
  return out;
}

std::vector<std::size_t> betti_vector(const SimplicialComplex& k, bool reduced) {
  return betti_vector(k.chain_complex(), reduced);
}

namespace {

Gf2Matrix boundary_matrix(const SimplicialComplex& k, int dim) {
  Gf2Matrix m(dim <= 0 ? 0 : k.num_faces(dim - 1), k.num_faces(dim));
  if (dim <= 0) return m;
  const auto& layer = k.faces(dim);
  for (std::size_t j = 0; j < layer.size(); ++j) {
    for (const auto& f : layer[j].facets()) m.set(*k.index_of(f), j);
  }
  return m;
}

void require_cycle(const Chain& z, const SimplicialComplex& k) {
  to_vector(z, k);  // throws when z leaves k
  if (z.grade() > 0 && !z.boundary().is_zero()) throw InputError("chain is not a cycle");
}

}  // namespace

std::optional<Chain> is_boundary(const Chain& z, const SimplicialComplex& k) {
  if (z.is_zero()) return Chain(z.grade() + 1);
  require_cycle(z, k);
  const auto x = solve(boundary_matrix(k, z.grade() + 1), to_vector(z, k));
  if (!x) return std::nullopt;
  return from_vector(z.grade() + 1, *x, k);
}

HomologyBasis::HomologyBasis(const SimplicialComplex& k, int grade)
    : complex_(std::make_shared<const SimplicialComplex>(k)),
      grade_(grade),
      boundary_(boundary_matrix(k, grade)),
      span_(k.num_faces(grade), betti(k, grade)) {
  const std::size_t b = betti(k, grade);
  const auto up = boundary_matrix(k, grade + 1);
  for (std::size_t c = 0; c < up.cols(); ++c) span_.insert(up.column(c));
  for (const auto& z : kernel_basis(boundary_)) {
    if (reps_.size() == b) break;
    if (span_.insert(z, BitVector::unit(b, reps_.size()))) reps_.push_back(from_vector(grade, z, k));
  }
  if (reps_.size() != b) throw InvariantViolation("homology basis size differs from the Betti number");
}

BitVector HomologyBasis::coordinates(const Chain& z) const {
  if (z.is_zero()) return BitVector(reps_.size());
  if (z.grade() != grade_) throw InputError("cycle has the wrong grade for this homology basis");
  require_cycle(z, *complex_);
  const auto red = span_.reduce(to_vector(z, *complex_));
  if (red.residual.any()) throw InvariantViolation("cycle not spanned by boundaries and representatives");
  return red.tags;
}

BitVector homology_class(const Chain& z, const HomologyBasis& basis) { return basis.coordinates(z); }

std::optional<BitVector> is_coboundary(const BitVector& c, const ChainComplex& cc, int d) {
  if (c.size() != cc.cells(d)) throw InputError("cochain has the wrong length");
  if (cc.boundary_map(d + 1).transpose().multiply(c).any()) {
    throw InputError("cochain is not a cocycle");
  }
  return solve(cc.boundary_map(d).transpose(), c);
}

}  // namespace hb
