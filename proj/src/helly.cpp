#include "hb/helly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "hb/homology.hpp"

namespace hb {

SetFamily::SetFamily(SimplicialComplex ambient, std::vector<SimplicialComplex> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
  if (members_.size() > 64) throw InputError("families are limited to 64 members");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!members_[i].is_subcomplex_of(ambient_)) {
      throw InputError("member " + std::to_string(i) + " is not a subcomplex of the ambient complex");
    }
  }
  faces_ = ambient_.all_faces();
  missing_.assign(faces_.size(), 0);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (!members_[i].contains(faces_[f])) missing_[f] |= std::uint64_t{1} << i;
    }
  }
}

std::uint64_t SetFamily::full_mask() const {
  return members_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << members_.size()) - 1;
}

SimplicialComplex SetFamily::u_set_mask(std::uint64_t kept) const {
  std::vector<Simplex> out;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if ((missing_[f] & ~kept) == 0) out.push_back(faces_[f]);
  }
  return SimplicialComplex::from_closed_faces(std::move(out));
}

bool SetFamily::in_u_set(const Simplex& s, std::uint64_t kept) const {
  if (s.empty()) return true;
  auto by_dim = [](const Simplex& a, const Simplex& b) {
    return a.dimension() != b.dimension() ? a.dimension() < b.dimension() : a < b;
  };
  auto it = std::lower_bound(faces_.begin(), faces_.end(), s, by_dim);
  if (it == faces_.end() || *it != s) return false;
  return (missing_[static_cast<std::size_t>(it - faces_.begin())] & ~kept) == 0;
}

SimplicialComplex SetFamily::intersection_mask(std::uint64_t members) const {
  return u_set_mask(full_mask() & ~members);
}

std::uint64_t to_mask(const IndexSet& s, int n) {
  std::uint64_t m = 0;
  for (int i : s) {
    if (i < 0 || i >= n) throw InputError("member index " + std::to_string(i) + " out of range");
    m |= std::uint64_t{1} << i;
  }
  return m;
}

IndexSet from_mask(std::uint64_t m) {
  IndexSet out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1) out.push_back(i);
  }
  return out;
}

SimplicialComplex u_set(const SetFamily& f, const IndexSet& i) {
  return f.u_set_mask(to_mask(i, f.size()));
}

namespace {

void check_budget(const SetFamily& f, std::size_t budget) {
  if (static_cast<std::size_t>(f.size()) > budget) {
    throw BudgetExceeded("family has " + std::to_string(f.size()) + " members, budget is " +
                         std::to_string(budget));
  }
}

}  // namespace

HellyResult helly_number(const SetFamily& f, std::size_t budget) {
  check_budget(f, budget);
  if (f.ambient().empty()) throw InputError("helly_number needs a nonempty ambient complex");
  const int n = f.size();
  const std::size_t total = std::size_t{1} << n;
  // meets[m]: the members in m share a vertex (enough for subcomplexes).
  std::vector<char> meets(total, 0);
  for (const auto& v : f.ambient().faces(0)) {
    std::uint64_t holders = 0;
    for (int i = 0; i < n; ++i) {
      if (f.members()[static_cast<std::size_t>(i)].contains(v)) holders |= std::uint64_t{1} << i;
    }
    meets[holders] = 1;
  }
  for (int bit = 0; bit < n; ++bit) {
    for (std::size_t m = total; m-- > 0;) {
      if (meets[m] && (m >> bit & 1)) meets[m & ~(std::size_t{1} << bit)] = 1;
    }
  }
  HellyResult out;
  if (meets[total - 1]) return out;
  out.helly = 0;
  for (std::size_t m = 1; m < total; ++m) {
    if (meets[m]) continue;
    bool minimal = true;
    for (int bit = 0; bit < n && minimal; ++bit) {
      if ((m >> bit & 1) && !meets[m & ~(std::size_t{1} << bit)]) minimal = false;
    }
    if (!minimal) continue;
    out.minimal_empty.push_back(m);
    out.helly = std::max(out.helly, std::popcount(m));
  }
  return out;
}

HypothesisReport hypothesis_audit(const SetFamily& f, int d, std::optional<int> max_index,
                                  std::size_t budget) {
  check_budget(f, budget);
  HypothesisReport report;
  report.d = d;
  report.max_index = max_index.value_or((d + 1) / 2 - 1);
  report.helly = helly_number(f, budget).helly;
  const std::uint64_t full = f.full_mask();
  for (std::uint64_t g = 0; g < full; ++g) {
    const auto inter = f.intersection_mask(g);
    AuditRow row{g, {}};
    const auto b = betti_vector(inter, true);
    for (int i = 0; i <= report.max_index; ++i) {
      row.reduced_betti.push_back(static_cast<std::size_t>(i) < b.size() ? b[static_cast<std::size_t>(i)] : 0);
      report.max_betti = std::max(report.max_betti, row.reduced_betti.back());
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

SimplicialComplex gamma_complex(int d) {
  if (d < 1) throw InputError("gamma_complex needs d >= 1");
  return cone(simplex_boundary(d));
}

namespace {

SetFamily vertex_deletion_family(const SimplicialComplex& ambient) {
  const auto vs = ambient.vertices();
  std::vector<SimplicialComplex> members;
  for (Vertex v : vs) {
    std::vector<Vertex> keep;
    for (Vertex w : vs) {
      if (w != v) keep.push_back(w);
    }
    members.push_back(induced_subcomplex(ambient, keep));
  }
  return SetFamily(ambient, std::move(members));
}

}  // namespace

SetFamily gamma_family(int b, int d) {
  if (b < 1 || d < 2) throw InputError("gamma_family needs b >= 1 and d >= 2");
  std::vector<Simplex> tops;
  const auto g = gamma_complex(d);
  for (int c = 0; c < b; ++c) {
    const int base = c * (d + 2);
    for (const auto& s : g.maximal_simplices()) {
      std::vector<Vertex> shifted;
      for (Vertex v : s) shifted.push_back(v + base);
      tops.emplace_back(std::move(shifted));
    }
  }
  return vertex_deletion_family(SimplicialComplex::closure(tops));
}

SimplicialComplex gamma3_prime() {
  const std::vector<std::vector<Vertex>> labels = {{1, 2, 4, 5}, {1, 2, 3, 5}, {3, 4, 1, 6},
                                                   {3, 4, 2, 6}, {5, 6, 1, 3}, {5, 6, 1, 4},
                                                   {5, 6, 2, 3}, {5, 6, 2, 4}};
  std::vector<Simplex> tops;
  for (auto l : labels) {
    for (auto& v : l) --v;
    tops.emplace_back(std::move(l));
  }
  return SimplicialComplex::closure(tops);
}

SetFamily skeleton_family(int n, int k) {
  if (k < 0 || k + 1 > n) throw InputError("skeleton_family needs 1 <= k+1 <= n");
  return vertex_deletion_family(simplex_skeleton(n - 1, k));
}

SetFamily interval_family(int n) {
  if (n < 1) throw InputError("interval_family needs n >= 1");
  std::vector<Simplex> edges;
  for (int v = 0; v < 10 * n; ++v) edges.push_back(Simplex{v, v + 1});
  auto ambient = SimplicialComplex::closure(edges);
  std::vector<SimplicialComplex> members;
  for (int i = 1; i <= n; ++i) {
    std::vector<Vertex> keep;
    for (int v = 0; v <= 10 * n; ++v) {
      if (v <= 10 * i - 11 || v >= 10 * i + 1) keep.push_back(v);
    }
    members.push_back(induced_subcomplex(ambient, keep));
  }
  return SetFamily(std::move(ambient), std::move(members));
}

SetFamily tight_family(int d, int k, int n) {
  const bool simplex_case = k == d && n == d + 1;
  const bool barycentre_case = k == d - 1 && n == d + 2;
  if (d < 1 || !(simplex_case || barycentre_case)) {
    throw InputError("tight_family supports (k, n) = (d, d+1) or (d-1, d+2) only");
  }
  return skeleton_family(n, k);
}

}  // namespace hb
