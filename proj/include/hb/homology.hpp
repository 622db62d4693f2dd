#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hb/cell_complex.hpp"
#include "hb/complex.hpp"
#include "hb/gf2.hpp"

namespace hb {

/// Formal Z2 sum of simplices of one dimension. The support is kept sorted and
/// free of repeats, so equal chains compare equal.
class Chain {
 public:
  Chain() = default;
  explicit Chain(int grade) : grade_(grade) {}
  /// Repeated simplices cancel in pairs. Throws InputError on a dimension mismatch.
  Chain(int grade, std::vector<Simplex> simplices);
  static Chain of(const Simplex& s) { return Chain(s.dimension(), {s}); }

  int grade() const { return grade_; }
  const std::vector<Simplex>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  bool is_zero() const { return support_.empty(); }

  /// Grades must agree unless one side is zero.
  Chain& operator+=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }

  /// Non-augmented boundary; the boundary of a 0-chain is the zero chain of grade -1.
  Chain boundary() const;
  /// Vertices of all simplices in the support, sorted.
  std::vector<Vertex> vertices() const;

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.support_ == b.support_ && (a.support_.empty() || a.grade_ == b.grade_);
  }

 private:
  int grade_ = 0;
  std::vector<Simplex> support_;
};

/// Coordinates of a chain in the cell basis faces(grade) of `k`.
/// Throws InputError if a simplex is missing from `k`.
BitVector to_vector(const Chain& c, const SimplicialComplex& k);
Chain from_vector(int grade, const BitVector& v, const SimplicialComplex& k);

/// dim ker d_i - rank d_{i+1}; reduced subtracts 1 in degree 0 for nonempty
/// complexes. The empty complex reports 0 everywhere.
std::size_t betti(const ChainComplex& c, int i, bool reduced = false);
std::size_t betti(const SimplicialComplex& k, int i, bool reduced = false);
/// Betti numbers in degrees 0..top dimension.
std::vector<std::size_t> betti_vector(const ChainComplex& c, bool reduced = false);
std::vector<std::size_t> betti_vector(const SimplicialComplex& k, bool reduced = false);

/// A chain c in `k` with dc = z, or nullopt if z does not bound there.
/// Throws InputError if z is not a cycle or leaves `k`.
std::optional<Chain> is_boundary(const Chain& z, const SimplicialComplex& k);

/// Non-reduced homology of `k` in degree `grade` with a fixed representative basis.
class HomologyBasis {
 public:
  HomologyBasis(const SimplicialComplex& k, int grade);

  int grade() const { return grade_; }
  std::size_t rank() const { return reps_.size(); }
  const std::vector<Chain>& representatives() const { return reps_; }

  /// Coordinates in the representative basis; zero iff z bounds.
  /// Throws InputError if z is not a cycle of the complex.
  BitVector coordinates(const Chain& z) const;

 private:
  std::shared_ptr<const SimplicialComplex> complex_;
  int grade_;
  Gf2Matrix boundary_;
  EchelonBasis span_;
  std::vector<Chain> reps_;
};

BitVector homology_class(const Chain& z, const HomologyBasis& basis);

/// Solves d nu = c for a (d-1)-cochain nu on the cells of `cc`.
/// Throws InputError if c has the wrong length or is not a cocycle.
std::optional<BitVector> is_coboundary(const BitVector& c, const ChainComplex& cc, int d);

}  // namespace hb
