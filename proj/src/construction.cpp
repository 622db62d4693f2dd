#include "hb/construction.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hb/homology.hpp"

namespace hb {

namespace {

int last_points(int n, int t, const BuildOptions& options) {
  return options.s_slack < 0 ? n : std::min(n, t + options.s_slack);
}

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::string index_key(std::uint64_t m) {
  std::string out = "{";
  bool first = true;
  for (int i : from_mask(m)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

/// Lazily built U_I complexes and homology bases, keyed by the member mask I.
class USetCache {
 public:
  explicit USetCache(const SetFamily& f) : family_(f) {}

  const SimplicialComplex& complex(std::uint64_t kept) {
    auto it = complexes_.find(kept);
    if (it == complexes_.end()) {
      it = complexes_.emplace(kept, std::make_unique<SimplicialComplex>(family_.u_set_mask(kept))).first;
    }
    return *it->second;
  }

  const HomologyBasis& basis(std::uint64_t kept, int grade) {
    const auto key = std::make_pair(kept, grade);
    auto it = bases_.find(key);
    if (it == bases_.end()) {
      it = bases_.emplace(key, std::make_unique<HomologyBasis>(complex(kept), grade)).first;
    }
    return *it->second;
  }

 private:
  const SetFamily& family_;
  std::map<std::uint64_t, std::unique_ptr<SimplicialComplex>> complexes_;
  std::map<std::pair<std::uint64_t, int>, std::unique_ptr<HomologyBasis>> bases_;
};

void require_verified(const ConstrainedChainMap& c, const std::string& who) {
  const auto bad = verify_constrained(c);
  if (!bad.empty()) throw InvariantViolation(who + " produced an unconstrained map: " + bad.front().message);
}

std::vector<int> iota_vector(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

std::shared_ptr<const SimplicialComplex> ambient_of(const std::shared_ptr<const SetFamily>& f) {
  return std::shared_ptr<const SimplicialComplex>(f, &f->ambient());
}

std::vector<ConstraintViolation> verify_constrained(const ConstrainedChainMap& c) {
  using Kind = ConstraintViolation::Kind;
  std::vector<ConstraintViolation> out;
  const auto& k = *c.complex;
  const auto& f = *c.family;
  const int n = f.size();

  for (const auto& s : verify_chain_map(c.gamma)) {
    out.push_back({Kind::ChainMap, s, {}, "chain-map law fails at " + s.key()});
  }
  for (const auto& v : k.faces(0)) {
    if (c.gamma.image(v).size() % 2 == 0) {
      out.push_back({Kind::Trivial, v, {}, "vertex " + v.key() + " maps to an even 0-chain"});
    }
  }

  auto empty_it = c.phi.find(Simplex{});
  if (empty_it != c.phi.end() && !empty_it->second.empty()) {
    out.push_back({Kind::EmptyPhi, {}, {}, "Phi(empty) is not empty"});
  }

  const auto faces = k.all_faces();
  std::vector<std::uint64_t> masks(faces.size(), 0);
  std::vector<bool> known(faces.size(), false);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    auto it = c.phi.find(faces[i]);
    if (it == c.phi.end()) {
      out.push_back({Kind::MissingPhi, faces[i], {}, "Phi undefined at " + faces[i].key()});
      continue;
    }
    try {
      masks[i] = to_mask(it->second, n);
      known[i] = true;
    } catch (const InputError&) {
      out.push_back({Kind::IndexRange, faces[i], {}, "Phi(" + faces[i].key() + ") has an index out of range"});
    }
  }

  std::map<Simplex, std::size_t> position;
  for (std::size_t i = 0; i < faces.size(); ++i) position.emplace(faces[i], i);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (!known[i]) continue;
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      if (!known[j]) continue;
      const Simplex meet = faces[i].intersection(faces[j]);
      std::uint64_t expected = 0;
      if (!meet.empty()) {
        const auto p = position.at(meet);
        if (!known[p]) continue;
        expected = masks[p];
      }
      if ((masks[i] & masks[j]) != expected) {
        out.push_back({Kind::Intersection, faces[i], faces[j],
                       "Phi(" + faces[i].key() + ") & Phi(" + faces[j].key() + ") = " +
                           index_key(masks[i] & masks[j]) + " but Phi of the meet is " + index_key(expected)});
      }
    }
  }

  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (!known[i]) continue;
    const auto img = c.gamma.image(faces[i]);
    for (const auto& t : img.support()) {
      if (!f.in_u_set(t, masks[i])) {
        out.push_back({Kind::Support, faces[i], t,
                       "gamma(" + faces[i].key() + ") uses " + t.key() + " outside U_" + index_key(masks[i])});
        break;
      }
    }
  }
  return out;
}

bool almost_embedding_verdict(const ConstrainedChainMap& c) {
  if (!verify_constrained(c).empty()) throw InputError("bundle does not verify as a constrained chain map");
  const bool verdict = is_homological_almost_embedding(c.gamma).ok;
  if (!verdict && c.family->u_set_mask(0).empty()) {
    throw InvariantViolation("constrained nontrivial map over an empty-intersection family is not an almost-embedding");
  }
  return verdict;
}

void SelectionPattern::validate() const {
  if (w < 0 || w > 62) throw InputError("selection window must be in [0, 62]");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || positions[i] > w || (i > 0 && positions[i] <= positions[i - 1])) {
      throw InputError("selection positions must increase within [1, w]");
    }
  }
}

RescaleResult rescale(const SelectionPattern& q, const std::vector<int>& y, const std::vector<int>& z,
                      const std::vector<std::vector<int>>& a) {
  q.validate();
  if (!std::is_sorted(y.begin(), y.end()) || std::adjacent_find(y.begin(), y.end()) != y.end() ||
      !std::is_sorted(z.begin(), z.end()) || std::adjacent_find(z.begin(), z.end()) != z.end()) {
    throw InputError("rescale: Y and Z must be strictly increasing");
  }
  const long long r = static_cast<long long>(a.size());
  const long long w = q.w;
  const long long gap = w - q.q();
  if (static_cast<long long>(z.size()) < static_cast<long long>(y.size()) + r * gap) {
    throw InputError("rescale: |Z| < |Y| + r(w - q)");
  }
  // pi0: Y -> {1..|Y|}, order preserving.
  std::map<int, long long> pi0;
  for (std::size_t i = 0; i < y.size(); ++i) pi0.emplace(y[i], static_cast<long long>(i) + 1);

  RescaleResult out;
  std::set<Rational> z_prime;
  for (std::size_t i = 1; i <= y.size(); ++i) z_prime.insert(Rational(static_cast<long long>(i)));
  const long long denom = r * w + 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(a[i].size()) != q.q()) throw InputError("rescale: every A_i needs q elements");
    std::vector<long long> img;
    for (int v : a[i]) {
      auto it = pi0.find(v);
      if (it == pi0.end()) throw InputError("rescale: A_i is not inside Y");
      img.push_back(it->second);
    }
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) throw InputError("rescale: A_i has repeats");
    // Dummy at window position x sits just above the integer preceding it,
    // with a numerator unique to (i, x) so different D_i never collide.
    std::vector<Rational> window;
    std::size_t used = 0;
    for (long long x = 1; x <= w; ++x) {
      if (used < img.size() && q.positions[used] == x) {
        window.emplace_back(img[used]);
        ++used;
        continue;
      }
      const long long floor_value = used == 0 ? img.front() - 1 : img[used - 1];
      const long long numerator = static_cast<long long>(i) * w + x;
      window.push_back(Rational(floor_value) + Rational(numerator, denom));
    }
    for (const auto& v : window) z_prime.insert(v);
    out.blueprint.push_back(std::move(window));
  }
  // nu: Z' -> Z, order preserving onto the first |Z'| elements.
  std::map<Rational, int> nu;
  std::size_t idx = 0;
  for (const auto& v : z_prime) nu.emplace(v, z[idx++]);
  for (const auto& [v, p] : pi0) out.pi.emplace(v, nu.at(Rational(p)));
  for (const auto& window : out.blueprint) {
    std::vector<int> wi;
    for (const auto& v : window) wi.push_back(nu.at(v));
    out.windows.push_back(std::move(wi));
  }
  return out;
}

std::optional<std::vector<int>> ramsey_find(int x, const std::vector<int>& vertices,
                                            const Coloring& coloring, int z, std::size_t node_budget) {
  if (x < 1) throw InputError("ramsey_find needs x >= 1");
  if (z <= 0) return std::vector<int>{};
  if (static_cast<int>(vertices.size()) < z) return std::nullopt;
  if (z < x) return std::vector<int>(vertices.begin(), vertices.begin() + z);

  std::map<std::vector<int>, std::optional<std::int64_t>> memo;
  auto color = [&](const std::vector<int>& s) {
    auto it = memo.find(s);
    if (it == memo.end()) it = memo.emplace(s, coloring(s)).first;
    return it->second;
  };
  std::vector<int> chosen;
  std::optional<std::int64_t> target;
  std::size_t nodes = 0;
  const auto total = static_cast<int>(vertices.size());

  std::function<bool(int)> extend = [&](int start) -> bool {
    if (static_cast<int>(chosen.size()) == z) return true;
    const int need = z - static_cast<int>(chosen.size());
    for (int i = start; i <= total - need; ++i) {
      if (++nodes > node_budget) throw BudgetExceeded("ramsey_find exceeded its node budget");
      const auto saved = target;
      bool ok = true;
      if (static_cast<int>(chosen.size()) >= x - 1) {
        for (auto pick : subsets_of_size(chosen, static_cast<std::size_t>(x - 1))) {
          pick.push_back(vertices[static_cast<std::size_t>(i)]);
          const auto c = color(pick);
          if (!c || (target && *c != *target)) {
            ok = false;
            break;
          }
          target = c;
        }
      }
      if (ok) {
        chosen.push_back(vertices[static_cast<std::size_t>(i)]);
        if (extend(i + 1)) return true;
        chosen.pop_back();
      }
      target = saved;
    }
    return false;
  };
  if (extend(0)) return chosen;
  return std::nullopt;
}

ConstrainedChainMap build_dim0(const SimplicialComplex& k, const std::shared_ptr<const SetFamily>& f) {
  if (k.dimension() > 0) throw InputError("build_dim0 needs a 0-dimensional complex");
  const auto verts = k.vertices();
  if (static_cast<int>(verts.size()) > f->size()) {
    throw InsufficientFamily("build_dim0 needs at least as many members as vertices");
  }
  ConstrainedChainMap out{std::make_shared<const SimplicialComplex>(k), f, {}, {}};
  out.gamma.source = out.complex;
  out.gamma.target = ambient_of(f);
  out.phi[Simplex{}] = {};
  for (std::size_t j = 0; j < verts.size(); ++j) {
    const auto u = f->u_set_mask(bit(static_cast<int>(j)));
    if (u.empty()) throw InputError("U_{" + std::to_string(j) + "} is empty");
    out.phi[Simplex{verts[j]}] = {static_cast<int>(j)};
    out.gamma.assignment.emplace(Simplex{verts[j]}, Chain::of(Simplex{u.vertices().front()}));
  }
  require_verified(out, "build_dim0");
  return out;
}

PsiExtension::PsiExtension(const ConstraintMap& psi, int n) {
  for (const auto& [s, idx] : psi) {
    if (s.empty()) continue;
    psi_.emplace(s, to_mask(idx, n));
    top_ = std::max(top_, s.dimension());
  }
  for (const auto& [s, m] : psi_) {
    for (const auto& facet : s.facets()) {
      auto it = psi_.find(facet);
      if (it != psi_.end() && (it->second & ~m) != 0) {
        throw InputError("Psi is not monotone at " + facet.key() + " < " + s.key());
      }
    }
  }
}

std::uint64_t PsiExtension::mask(const std::vector<Vertex>& a) const {
  std::vector<Vertex> sorted(a);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::uint64_t out = 0;
  long long subsets = 0;
  for (int size = 1; size <= top_ + 1; ++size) subsets += binomial(static_cast<long long>(sorted.size()), size);
  if (subsets <= static_cast<long long>(psi_.size())) {
    for (int size = 1; size <= top_ + 1; ++size) {
      for (auto& pick : subsets_of_size(sorted, static_cast<std::size_t>(size))) {
        auto it = psi_.find(Simplex(std::move(pick)));
        if (it != psi_.end()) out |= it->second;
      }
    }
  } else {
    for (const auto& [s, m] : psi_) {
      if (std::includes(sorted.begin(), sorted.end(), s.begin(), s.end())) out |= m;
    }
  }
  return out;
}

IndexSet psi_extend(const ConstraintMap& psi, const std::vector<Vertex>& a, int n) {
  return PsiExtension(psi, n)(a);
}

long long subdivision_top_count(int k) {
  long long f = 1;
  for (int i = 2; i <= k + 1; ++i) f *= i;
  return f;
}

std::vector<Simplex> subdivided_tops(const Subdivision& sd, const Simplex& sigma) {
  std::vector<Simplex> out;
  for (const auto& chain : maximal_face_chains(sigma)) {
    std::vector<Vertex> ids;
    for (const auto& face : chain) ids.push_back(sd.vertex_of(face));
    out.emplace_back(std::move(ids));
  }
  return out;
}

AlphaMap alpha_map(const SimplicialComplex& k, int top) {
  AlphaMap out{barycentric_subdivision(k), {}};
  auto source = std::make_shared<const SimplicialComplex>(skeleton(k, top - 1));
  out.map.source = source;
  out.map.target = std::make_shared<const SimplicialComplex>(out.sd.complex);
  for (const auto& s : source->all_faces()) {
    out.map.assignment.emplace(s, Chain(s.dimension(), subdivided_tops(out.sd, s)));
  }
  return out;
}

bool alpha_boundary_identity(const AlphaMap& alpha, const Simplex& sigma) {
  if (sigma.dimension() <= 0) return true;
  Chain lhs(sigma.dimension() - 1);
  for (const auto& facet : sigma.facets()) lhs += alpha.map.image(facet);
  Chain rhs(sigma.dimension() - 1);
  for (const auto& tau : subdivided_tops(alpha.sd, sigma)) rhs += Chain::of(tau).boundary();
  return lhs == rhs;
}

namespace {

std::vector<int> mask_positions(std::uint64_t m) {
  std::vector<int> out;
  for (int i : from_mask(m)) out.push_back(i + 1);
  return out;
}

Simplex image_simplex(const Simplex& s, const std::map<int, int>& map) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(map.at(v));
  return Simplex(std::move(out));
}

Chain image_chain(const Chain& c, const std::map<int, int>& map) {
  std::vector<Simplex> out;
  for (const auto& s : c.support()) out.push_back(image_simplex(s, map));
  return Chain(c.grade(), std::move(out));
}

}  // namespace

ConstrainedChainMap build_dim1(const SimplicialComplex& k, const std::shared_ptr<const SetFamily>& f, int b,
                               const BuildOptions& options) {
  if (k.dimension() > 1) throw InputError("build_dim1 needs a complex of dimension at most 1");
  if (b < 0 || b > 5) throw InputError("build_dim1 supports 0 <= b <= 5");
  const int w = (1 << b) + 1;
  const auto verts = k.vertices();
  const auto& edges = k.faces(1);
  const int r = static_cast<int>(edges.size());
  const int t = r * (w - 2) + static_cast<int>(verts.size());
  const int n = f->size();
  if (n < t) throw InsufficientFamily("build_dim1 needs at least " + std::to_string(t) + " members");

  USetCache cache(*f);
  for (int points = t; points <= last_points(n, t, options); ++points) {
    const auto base = build_dim0(simplex_skeleton(points - 1, 0), f);
    const PsiExtension psi(base.phi, n);
    auto gamma_prime = [&](int v) { return base.gamma.image(Simplex{v}); };

    // Step 1: color S by the first pair of positions whose images bound in U_{Psi(S)}.
    const Coloring coloring = [&](const std::vector<int>& s) -> std::optional<std::int64_t> {
      const auto& u = cache.complex(psi.mask(s));
      for (int i = 0; i < w; ++i) {
        for (int j = i + 1; j < w; ++j) {
          const Chain z = gamma_prime(s[static_cast<std::size_t>(i)]) + gamma_prime(s[static_cast<std::size_t>(j)]);
          if (is_boundary(z, u)) return i * w + j;
        }
      }
      return std::nullopt;
    };
    // Step 2: a t-set T on which the chosen pair is uniform.
    const auto found = ramsey_find(w, iota_vector(points), coloring, t, options.node_budget);
    if (!found) continue;
    const std::vector<int>& tset = *found;
    SelectionPattern q{{1, 2}, w};
    if (static_cast<int>(tset.size()) >= w) {
      const auto c = *coloring(std::vector<int>(tset.begin(), tset.begin() + w));
      q.positions = {static_cast<int>(c / w) + 1, static_cast<int>(c % w) + 1};
    }
    // Step 3: inject V(K) into T with windows for the edges.
    std::vector<std::vector<int>> a;
    for (const auto& e : edges) a.push_back(e.vertices());
    const auto rs = rescale(q, verts, tset, a);

    // Step 4.
    ConstrainedChainMap out{std::make_shared<const SimplicialComplex>(k), f, {}, {}};
    out.gamma.source = out.complex;
    out.gamma.target = ambient_of(f);
    out.phi[Simplex{}] = {};
    for (Vertex v : verts) {
      const int fv = rs.pi.at(v);
      out.phi[Simplex{v}] = from_mask(psi.mask({fv}));
      out.gamma.assignment.emplace(Simplex{v}, gamma_prime(fv));
    }
    for (int i = 0; i < r; ++i) {
      const auto& e = edges[static_cast<std::size_t>(i)];
      const auto window_mask = psi.mask(rs.windows[static_cast<std::size_t>(i)]);
      out.phi[e] = from_mask(window_mask);
      const Chain z = gamma_prime(rs.pi.at(e[0])) + gamma_prime(rs.pi.at(e[1]));
      auto fill = is_boundary(z, cache.complex(window_mask));
      if (!fill) throw InvariantViolation("edge " + e.key() + " cannot be filled in its window");
      out.gamma.assignment.emplace(e, std::move(*fill));
    }
    require_verified(out, "build_dim1");
    return out;
  }
  throw InsufficientFamily("no uniform pair selection found for build_dim1");
}

ConstrainedChainMap build_step(const SimplicialComplex& k, const std::shared_ptr<const SetFamily>& f, int b,
                               const Builder& recurse, const BuildOptions& options) {
  const int dim = k.dimension();
  if (dim < 1) throw InputError("build_step needs a complex of dimension >= 1");
  if (dim > 4) throw InputError("build_step supports dimension at most 4");
  const int ell = (1 << (dim + 1)) - 1;
  const int n = f->size();

  const AlphaMap alpha = alpha_map(k, dim);
  const auto& sd = alpha.sd;
  const auto& tops = k.faces(dim);
  const int r = static_cast<int>(tops.size());
  const int sd_vertices = static_cast<int>(sd.labels.size());

  std::vector<std::vector<int>> a;
  for (const auto& sigma : tops) {
    const long long count = static_cast<long long>(subdivided_tops(sd, sigma).size());
    if (count != subdivision_top_count(dim) || count % 2 != 0) {
      throw InvariantViolation("sd of a " + std::to_string(dim) + "-simplex has an odd number of top simplices");
    }
    if (!alpha_boundary_identity(alpha, sigma)) {
      throw InvariantViolation("alpha boundary identity fails at " + sigma.key());
    }
    std::vector<int> ids;
    for (const auto& face : sigma.faces()) ids.push_back(sd.vertex_of(face));
    std::sort(ids.begin(), ids.end());
    a.push_back(std::move(ids));
  }
  std::vector<int> y = iota_vector(sd_vertices);

  for (int m = ell; m <= std::min(ell + options.m_slack, 62); ++m) {
    const int t = sd_vertices + r * (m - ell);
    if (n < t) break;
    for (int points = t; points <= last_points(n, t, options); ++points) {
      std::optional<ConstrainedChainMap> base;
      try {
        base = recurse(simplex_skeleton(points - 1, dim - 1), f, b);
      } catch (const InsufficientFamily&) {
        break;
      }
      const PsiExtension psi(base->phi, n);
      USetCache cache(*f);
      auto gamma_prime = [&](const Chain& c) { return base->gamma.apply(c); };

      // Claim: color M by the first l positions whose k-simplices all have
      // boundary images in one homology class of U_{Psi(M)}.
      const Coloring coloring = [&](const std::vector<int>& mset) -> std::optional<std::int64_t> {
        const auto kept = psi.mask(mset);
        const auto& basis = cache.basis(kept, dim - 1);
        std::map<std::vector<int>, BitVector> cls;
        for (const auto& pos : subsets_of_size(iota_vector(m), static_cast<std::size_t>(dim + 1))) {
          std::vector<Vertex> vs;
          for (int p : pos) vs.push_back(mset[static_cast<std::size_t>(p)]);
          cls.emplace(pos, basis.coordinates(gamma_prime(Chain::of(Simplex(vs)).boundary())));
        }
        for (const auto& pick : subsets_of_size(iota_vector(m), static_cast<std::size_t>(ell))) {
          const BitVector* first = nullptr;
          bool uniform = true;
          for (const auto& pos : subsets_of_size(pick, static_cast<std::size_t>(dim + 1))) {
            const auto& c = cls.at(pos);
            if (first == nullptr) {
              first = &c;
            } else if (!(c == *first)) {
              uniform = false;
              break;
            }
          }
          if (uniform) {
            std::uint64_t mask = 0;
            for (int p : pick) mask |= bit(p);
            return static_cast<std::int64_t>(mask);
          }
        }
        return std::nullopt;
      };
      const auto found = ramsey_find(m, iota_vector(points), coloring, t, options.node_budget);
      if (!found) continue;
      const std::vector<int>& tset = *found;
      SelectionPattern q{{}, m};
      if (static_cast<int>(tset.size()) >= m) {
        q.positions = mask_positions(static_cast<std::uint64_t>(
            *coloring(std::vector<int>(tset.begin(), tset.begin() + m))));
      } else {
        q.positions = mask_positions((bit(ell) - 1));
      }
      const auto rs = rescale(q, y, tset, a);
      const auto& beta = rs.pi;
      const auto& kappa = rs.windows;

      // (P1), (P2), (P3).
      std::set<int> image;
      for (const auto& [from, to] : beta) image.insert(to);
      std::vector<std::vector<int>> beta_a;
      for (const auto& ai : a) {
        std::vector<int> img;
        for (int v : ai) img.push_back(beta.at(v));
        std::sort(img.begin(), img.end());
        beta_a.push_back(std::move(img));
      }
      auto meet = [](const std::vector<int>& u, const std::vector<int>& v) {
        std::vector<int> out;
        std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(out));
        return out;
      };
      for (int i = 0; i < r; ++i) {
        std::vector<int> in_image;
        for (int v : kappa[static_cast<std::size_t>(i)]) {
          if (image.contains(v)) in_image.push_back(v);
        }
        if (in_image != beta_a[static_cast<std::size_t>(i)]) throw InvariantViolation("property P1 fails");
        for (int j = i + 1; j < r; ++j) {
          if (meet(kappa[static_cast<std::size_t>(i)], kappa[static_cast<std::size_t>(j)]) !=
              meet(beta_a[static_cast<std::size_t>(i)], beta_a[static_cast<std::size_t>(j)])) {
            throw InvariantViolation("property P2 fails");
          }
        }
        const auto kept = psi.mask(kappa[static_cast<std::size_t>(i)]);
        const auto& basis = cache.basis(kept, dim - 1);
        std::optional<BitVector> shared;
        for (const auto& tau : subdivided_tops(sd, tops[static_cast<std::size_t>(i)])) {
          const auto c = basis.coordinates(gamma_prime(image_chain(Chain::of(tau).boundary(), beta)));
          if (shared && !(c == *shared)) throw InvariantViolation("property P3 fails");
          shared = c;
        }
      }

      // gamma = gamma' . beta# . alpha below the top dimension, filled on top simplices.
      ConstrainedChainMap out{std::make_shared<const SimplicialComplex>(k), f, {}, {}};
      out.gamma.source = out.complex;
      out.gamma.target = ambient_of(f);
      out.phi[Simplex{}] = {};
      for (int d = 0; d < dim; ++d) {
        for (const auto& s : k.faces(d)) {
          out.gamma.assignment.emplace(s, gamma_prime(image_chain(alpha.map.image(s), beta)));
          std::vector<Vertex> ids;
          for (const auto& face : s.faces()) ids.push_back(beta.at(sd.vertex_of(face)));
          out.phi[s] = from_mask(psi.mask(ids));
        }
      }
      for (int i = 0; i < r; ++i) {
        const auto& sigma = tops[static_cast<std::size_t>(i)];
        Chain z(dim - 1);
        for (const auto& facet : sigma.facets()) z += out.gamma.image(facet);
        Chain summed(dim - 1);
        for (const auto& tau : subdivided_tops(sd, sigma)) {
          summed += gamma_prime(image_chain(Chain::of(tau).boundary(), beta));
        }
        if (!(z == summed)) throw InvariantViolation("boundary-sum identity fails at " + sigma.key());
        const auto kept = psi.mask(kappa[static_cast<std::size_t>(i)]);
        auto fill = is_boundary(z, cache.complex(kept));
        if (!fill) throw InvariantViolation("parity fill fails at " + sigma.key());
        out.gamma.assignment.emplace(sigma, std::move(*fill));
        out.phi[sigma] = from_mask(kept);
      }
      require_verified(out, "build_step");
      return out;
    }
  }
  throw InsufficientFamily("no uniform selection found for build_step in dimension " + std::to_string(dim));
}

ConstrainedChainMap build_ccm(const SimplicialComplex& k, const std::shared_ptr<const SetFamily>& f, int b,
                              const BuildOptions& options) {
  if (k.dimension() <= 0) return build_dim0(k, f);
  if (k.dimension() == 1) return build_dim1(k, f, b, options);
  const Builder recurse = [options](const SimplicialComplex& sub, const std::shared_ptr<const SetFamily>& fam,
                                    int bb) { return build_ccm(sub, fam, bb, options); };
  return build_step(k, f, b, recurse, options);
}

}  // namespace hb
