#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace hb::oracle {

namespace {

using Word = std::uint32_t;

// Boundary of each i-simplex as a bit pattern over the (i-1)-simplices.
std::vector<Word> boundary_patterns(const std::vector<Simplex>& cells, const std::vector<Simplex>& lower) {
  std::map<Simplex, int> pos;
  for (std::size_t j = 0; j < lower.size(); ++j) pos[lower[j]] = static_cast<int>(j);
  std::vector<Word> out;
  for (const auto& s : cells) {
    Word w = 0;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<Vertex> rest;
      for (std::size_t t = 0; t < s.size(); ++t) {
        if (t != drop) rest.push_back(s[t]);
      }
      if (rest.empty()) {
        w ^= 1;  // augmentation: the single empty simplex
      } else {
        w ^= Word{1} << pos.at(Simplex(rest));
      }
    }
    out.push_back(w);
  }
  return out;
}

Word image_of(const std::vector<Word>& cols, Word x) {
  Word y = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (x >> c & 1) y ^= cols[c];
  }
  return y;
}

std::size_t log2_exact(std::size_t v) {
  std::size_t out = 0;
  while (v > 1) {
    v >>= 1;
    ++out;
  }
  return out;
}

}  // namespace

std::size_t betti(const SimplicialComplex& k, int i, bool reduced) {
  if (i < 0 || k.empty() || i > k.dimension()) return 0;
  const auto& cells = k.faces(i);
  if (cells.size() > 20) throw InputError("oracle::betti is limited to 20 cells per dimension");
  std::vector<Word> down;
  if (i > 0) {
    down = boundary_patterns(cells, k.faces(i - 1));
  } else if (reduced) {
    down = boundary_patterns(cells, {});
  }
  std::size_t cycles = 0;
  const Word total = Word{1} << cells.size();
  for (Word x = 0; x < total; ++x) {
    if (down.empty() || image_of(down, x) == 0) ++cycles;
  }
  std::set<Word> bounds{0};
  if (i + 1 <= k.dimension()) {
    const auto& upper = k.faces(i + 1);
    if (upper.size() > 20) throw InputError("oracle::betti is limited to 20 cells per dimension");
    const auto up = boundary_patterns(upper, cells);
    for (Word x = 0; x < (Word{1} << upper.size()); ++x) bounds.insert(image_of(up, x));
  }
  return log2_exact(cycles) - log2_exact(bounds.size());
}

int helly(const SetFamily& f) {
  const auto& members = f.members();
  const int n = f.size();
  const auto verts = f.ambient().vertices();
  auto meets = [&](std::uint32_t g) {
    for (Vertex v : verts) {
      bool everywhere = true;
      for (int i = 0; i < n && everywhere; ++i) {
        if ((g >> i & 1) && !members[static_cast<std::size_t>(i)].contains(Simplex{v})) everywhere = false;
      }
      if (everywhere) return true;
    }
    return false;
  };
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  if (meets(full)) return 1;
  int best = 0;
  for (std::uint32_t g = 1; g <= full; ++g) {
    if (meets(g)) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      if ((g >> i & 1) && !meets(g & ~(std::uint32_t{1} << i))) minimal = false;
    }
    if (minimal) best = std::max(best, std::popcount(g));
  }
  return best;
}

std::vector<std::vector<GridPoint>> grid_chains(int p, int q) {
  std::vector<std::vector<GridPoint>> out;
  std::vector<GridPoint> path{{0, 0}};
  auto walk = [&](auto&& self, int x, int y) -> void {
    if (x == p && y == q) {
      out.push_back(path);
      return;
    }
    if (x < p) {
      path.emplace_back(x + 1, y);
      self(self, x + 1, y);
      path.pop_back();
    }
    if (y < q) {
      path.emplace_back(x, y + 1);
      self(self, x, y + 1);
      path.pop_back();
    }
  };
  walk(walk, 0, 0);
  return out;
}

std::string check_rescale(const SelectionPattern& q, const std::vector<int>& y, const std::vector<int>& z,
                          const std::vector<std::vector<int>>& a, const RescaleResult& r) {
  if (r.pi.size() != y.size()) return "pi is not defined on all of Y";
  const std::set<int> zset(z.begin(), z.end());
  int prev = 0;
  bool first = true;
  for (int v : y) {
    const int img = r.pi.at(v);
    if (!zset.contains(img)) return "pi leaves Z";
    if (!first && img <= prev) return "pi is not strictly increasing";
    prev = img;
    first = false;
  }
  if (r.windows.size() != a.size()) return "wrong number of windows";
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<int> w = r.windows[i];
    if (!std::is_sorted(w.begin(), w.end()) || std::adjacent_find(w.begin(), w.end()) != w.end()) {
      return "window is not a sorted set";
    }
    if (static_cast<int>(w.size()) != q.w) return "window has the wrong size";
    for (int v : w) {
      if (!zset.contains(v)) return "window leaves Z";
    }
    std::vector<int> want;
    for (int v : a[i]) want.push_back(r.pi.at(v));
    std::sort(want.begin(), want.end());
    std::vector<int> got;
    for (int pos : q.positions) got.push_back(w[static_cast<std::size_t>(pos - 1)]);
    if (got != want) return "Q does not select pi(A_i) in W_i";
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      std::set<int> wi(w.begin(), w.end());
      std::vector<int> meet;
      for (int v : r.windows[j]) {
        if (wi.contains(v)) meet.push_back(v);
      }
      std::set<int> aj(a[j].begin(), a[j].end());
      std::vector<int> expect;
      for (int v : a[i]) {
        if (aj.contains(v)) expect.push_back(r.pi.at(v));
      }
      std::sort(meet.begin(), meet.end());
      std::sort(expect.begin(), expect.end());
      if (meet != expect) return "W_i and W_j meet outside pi(A_i & A_j)";
    }
  }
  return {};
}

SimplicialComplex random_complex(std::mt19937& rng, int vertices, int tops, int max_dim) {
  std::uniform_int_distribution<int> dim_pick(0, max_dim);
  std::vector<Simplex> simplices;
  std::vector<Vertex> all(static_cast<std::size_t>(vertices));
  for (int v = 0; v < vertices; ++v) all[static_cast<std::size_t>(v)] = v;
  for (int t = 0; t < tops; ++t) {
    std::shuffle(all.begin(), all.end(), rng);
    const int size = std::min(vertices, dim_pick(rng) + 1);
    simplices.emplace_back(std::vector<Vertex>(all.begin(), all.begin() + size));
  }
  return SimplicialComplex::closure(simplices);
}

SetFamily random_family(std::mt19937& rng, const SimplicialComplex& ambient, int members) {
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution keep(0.7);
  std::vector<SimplicialComplex> out;
  for (int i = 0; i < members; ++i) {
    if (coin(rng)) {
      std::vector<Vertex> vs;
      for (Vertex v : ambient.vertices()) {
        if (keep(rng)) vs.push_back(v);
      }
      out.push_back(induced_subcomplex(ambient, vs));
    } else {
      std::vector<Simplex> tops;
      for (const auto& s : ambient.maximal_simplices()) {
        if (keep(rng)) tops.push_back(s);
      }
      out.push_back(SimplicialComplex::closure(tops));
    }
  }
  return SetFamily(ambient, std::move(out));
}

std::size_t max_cells_per_dim(const SimplicialComplex& k) {
  std::size_t best = 0;
  for (int d = 0; d <= k.dimension(); ++d) best = std::max(best, k.num_faces(d));
  return best;
}

}  // namespace hb::oracle
