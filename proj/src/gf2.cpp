#include "hb/gf2.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "hb/error.hpp"

namespace hb {

std::size_t budget_from_env(std::size_t fallback) {
  const char* raw = std::getenv("HB_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw InputError(std::string("HB_BUDGET must be a positive integer, got '") + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

// ---------------------------------------------------------------------------
// BitVector

BitVector BitVector::unit(std::size_t size, std::size_t index) {
  BitVector v(size);
  v.set(index);
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw InputError("BitVector length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw InputError("BitVector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

// ---------------------------------------------------------------------------
// Gf2Matrix

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVector Gf2Matrix::column(std::size_t c) const {
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) out.set(r);
  }
  return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (auto c : data_[r].ones()) t.set(c, r);
  }
  return t;
}

BitVector Gf2Matrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].dot(x)) out.set(r);
  }
  return out;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& other) const {
  if (other.rows_ != cols_) throw InputError("matrix-matrix dimension mismatch");
  Gf2Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    BitVector acc(other.cols_);
    for (auto k : data_[r].ones()) acc ^= other.data_[k];
    out.data_[r] = std::move(acc);
  }
  return out;
}

bool Gf2Matrix::is_zero() const {
  for (const auto& row : data_) {
    if (row.any()) return false;
  }
  return true;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
// Columns are scanned left to right and the first available row is taken as pivot.
std::vector<std::size_t> row_reduce(std::vector<BitVector>& rows, std::size_t cols,
                                    std::vector<BitVector>* companion = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t found = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r].get(c)) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[found], rows[next]);
    if (companion != nullptr) std::swap((*companion)[found], (*companion)[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) {
        rows[r] ^= rows[next];
        if (companion != nullptr) (*companion)[r] ^= (*companion)[next];
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::vector<BitVector> rows_of(const Gf2Matrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

std::size_t rank(const Gf2Matrix& m) {
  auto rows = rows_of(m);
  return row_reduce(rows, m.cols()).size();
}

std::optional<BitVector> solve(const Gf2Matrix& m, const BitVector& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
  auto rows = rows_of(m);
  std::vector<BitVector> rhs;
  rhs.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    BitVector bit(1);
    bit.set(0, b.get(r));
    rhs.push_back(std::move(bit));
  }
  const auto pivots = row_reduce(rows, m.cols(), &rhs);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (rhs[r].get(0)) return std::nullopt;
  }
  BitVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (rhs[i].get(0)) x.set(pivots[i]);
  }
  return x;
}

std::vector<BitVector> kernel_basis(const Gf2Matrix& m) {
  auto rows = rows_of(m);
  const auto pivots = row_reduce(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(free)) v.set(pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::Reduction EchelonBasis::reduce(const BitVector& v) const {
  if (v.size() != dim_) throw InputError("EchelonBasis: vector length mismatch");
  Reduction out{v, BitVector(tag_dim_)};
  for (const auto& row : rows_) {
    if (out.residual.get(row.pivot)) {
      out.residual ^= row.vec;
      out.tags ^= row.tag;
    }
  }
  return out;
}

bool EchelonBasis::insert(const BitVector& v, const BitVector& tag) {
  auto red = reduce(v);
  if (red.residual.none()) return false;
  red.tags ^= tag;
  const std::size_t pivot = red.residual.first_set();
  // Keep rows fully reduced against the new pivot so reduce() stays a single pass.
  for (auto& row : rows_) {
    if (row.vec.get(pivot)) {
      row.vec ^= red.residual;
      row.tag ^= red.tags;
    }
  }
  rows_.push_back(Row{pivot, std::move(red.residual), std::move(red.tags)});
  return true;
}

// ---------------------------------------------------------------------------
// ChainComplex

std::size_t ChainComplex::cells(int dim) const {
  if (dim < 0 || dim > top_dimension()) return 0;
  return cell_counts[static_cast<std::size_t>(dim)];
}

Gf2Matrix ChainComplex::boundary_map(int dim) const {
  if (dim >= 0 && dim <= top_dimension()) return boundary[static_cast<std::size_t>(dim)];
  return Gf2Matrix(cells(dim - 1), cells(dim));
}

void ChainComplex::check_boundary_squared() const {
  for (int dim = 2; dim <= top_dimension(); ++dim) {
    if (!boundary_map(dim - 1).multiply(boundary_map(dim)).is_zero()) {
      throw InvariantViolation("boundary of boundary is nonzero in dimension " +
                               std::to_string(dim));
    }
  }
}

}  // namespace hb
