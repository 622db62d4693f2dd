#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hb {

/// Fixed-length vector over GF(2), packed 64 entries per word.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  /// Index of the lowest set entry, or size() when the vector is zero.
  std::size_t first_set() const;
  /// Indices of the set entries in increasing order.
  std::vector<std::size_t> ones() const;
  /// Inner product over GF(2).
  bool dot(const BitVector& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix stored as packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector column(std::size_t c) const;

  Gf2Matrix transpose() const;
  BitVector multiply(const BitVector& x) const;
  Gf2Matrix multiply(const Gf2Matrix& other) const;
  bool is_zero() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

std::size_t rank(const Gf2Matrix& m);

/// Some x with m x = b, free variables set to zero; nullopt when b is not in the column space.
/// Throws InputError when b has the wrong length.
std::optional<BitVector> solve(const Gf2Matrix& m, const BitVector& b);

/// Basis of the null space, one vector per free column (in column order).
std::vector<BitVector> kernel_basis(const Gf2Matrix& m);

/// Incrementally built echelon basis of a subspace. Every inserted vector carries a tag
/// vector so that reductions report which tagged generators they used.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, std::size_t tag_dim) : dim_(dim), tag_dim_(tag_dim) {}

  struct Reduction {
    BitVector residual;
    BitVector tags;
  };

  Reduction reduce(const BitVector& v) const;
  /// Inserts v with the given tag; returns false (and stores nothing) if v is already spanned.
  bool insert(const BitVector& v, const BitVector& tag);
  bool insert(const BitVector& v) { return insert(v, BitVector(tag_dim_)); }
  bool contains(const BitVector& v) const { return reduce(v).residual.none(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    BitVector vec;
    BitVector tag;
  };
  std::size_t dim_;
  std::size_t tag_dim_;
  std::vector<Row> rows_;
};

/// Graded GF(2) chain complex: boundary[i] maps C_i -> C_{i-1} (rows = (i-1)-cells).
/// boundary[0] is the 0 x n_0 matrix.
struct ChainComplex {
  std::vector<std::size_t> cell_counts;
  std::vector<Gf2Matrix> boundary;

  int top_dimension() const { return static_cast<int>(cell_counts.size()) - 1; }
  std::size_t cells(int dim) const;
  /// Boundary map out of dimension `dim`; a zero matrix of the right shape outside the stored range.
  Gf2Matrix boundary_map(int dim) const;
  /// Throws InvariantViolation unless every composite of consecutive boundaries vanishes.
  void check_boundary_squared() const;
};

}  // namespace hb
