#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hb {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt bareiss_determinant(IntMatrix m);

/// Rank of an integer matrix over Q, by fraction-free elimination.
std::size_t integer_rank(IntMatrix m);

}  // namespace hb
