#include "hb/simplex.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "hb/error.hpp"

namespace hb {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("simplex has a repeated vertex");
  }
  if (!vertices_.empty() && vertices_.front() < 0) {
    throw InputError("vertex ids must be non-negative");
  }
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::disjoint(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Simplex Simplex::intersection(const Simplex& other) const {
  Simplex out;
  std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out.vertices_));
  return out;
}

Simplex Simplex::with(Vertex v) const {
  auto copy = vertices_;
  copy.push_back(v);
  return Simplex(std::move(copy));
}

Simplex Simplex::without_index(std::size_t i) const {
  Simplex out;
  out.vertices_.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    if (j != i) out.vertices_.push_back(vertices_[j]);
  }
  return out;
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() <= 1) return out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(without_index(i));
  return out;
}

std::vector<Simplex> Simplex::faces() const {
  std::vector<Simplex> out;
  const std::size_t n = vertices_.size();
  if (n > 24) throw BudgetExceeded("simplex too large to enumerate its faces");
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) face.vertices_.push_back(vertices_[i]);
    }
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Simplex::key() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ',';
    os << vertices_[i];
  }
  return os.str();
}

Simplex Simplex::from_key(const std::string& key) {
  std::vector<Vertex> vs;
  if (key.empty()) return Simplex{};
  std::istringstream is(key);
  std::string part;
  while (std::getline(is, part, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) throw InputError("bad simplex key '" + key + "'");
      vs.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad simplex key '" + key + "'");
    }
  }
  return Simplex(std::move(vs));
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace hb
