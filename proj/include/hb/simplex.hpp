#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace hb {

using Vertex = int;

/// A simplex in canonical form: strictly increasing non-negative vertex ids.
/// The empty simplex (dimension -1) is representable.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the input; throws InputError on duplicate or negative vertices.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;
  bool disjoint(const Simplex& other) const;
  Simplex intersection(const Simplex& other) const;
  Simplex with(Vertex v) const;
  Simplex without_index(std::size_t i) const;

  /// Codimension-one faces, dropping vertex 0, 1, ... in turn.
  std::vector<Simplex> facets() const;
  /// All nonempty faces (including the simplex itself).
  std::vector<Simplex> faces() const;

  /// "0,1,2": the key format of the chain-map JSON.
  std::string key() const;
  static Simplex from_key(const std::string& key);

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Number of k-element subsets of an n-set (0 when k is out of range).
long long binomial(long long n, long long k);

/// Lexicographically ordered k-element subsets of `items`.
template <typename T>
std::vector<std::vector<T>> subsets_of_size(const std::vector<T>& items, std::size_t k) {
  std::vector<std::vector<T>> out;
  if (k > items.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<T> pick;
    pick.reserve(k);
    for (auto i : idx) pick.push_back(items[i]);
    out.push_back(std::move(pick));
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == items.size() - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace hb
