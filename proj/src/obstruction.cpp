#include "hb/obstruction.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hb/homology.hpp"

namespace hb {

namespace {

std::vector<long long> first_primes(std::size_t n) {
  std::vector<long long> out;
  for (long long c = 2; out.size() < n; ++c) {
    bool prime = true;
    for (long long p : out) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(c);
  }
  return out;
}

int sign_of(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

GenericPointConfig GenericPointConfig::moment_curve(int d, std::size_t num_vertices,
                                                    ParamScheme scheme) {
  if (d < 0) throw InputError("ambient dimension must be non-negative");
  GenericPointConfig cfg;
  cfg.d = d;
  if (scheme == ParamScheme::Primes) {
    cfg.params = first_primes(num_vertices);
  } else {
    for (std::size_t v = 0; v < num_vertices; ++v) cfg.params.push_back(static_cast<long long>(v) + 1);
  }
  return cfg;
}

std::vector<BigInt> GenericPointConfig::point(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= params.size()) {
    throw InputError("vertex " + std::to_string(v) + " has no moment-curve parameter");
  }
  std::vector<BigInt> p;
  BigInt power = 1;
  for (int m = 1; m <= d; ++m) {
    power *= params[static_cast<std::size_t>(v)];
    p.push_back(power);
  }
  return p;
}

void GenericPointConfig::validate(const std::vector<Vertex>& used) const {
  std::set<long long> seen;
  for (Vertex v : used) {
    if (v < 0 || static_cast<std::size_t>(v) >= params.size()) {
      throw InputError("vertex " + std::to_string(v) + " has no moment-curve parameter");
    }
    if (!seen.insert(params[static_cast<std::size_t>(v)]).second) {
      throw InputError("moment-curve parameters must be distinct");
    }
  }
}

bool in_general_position(const GenericPointConfig& cfg, const std::vector<Vertex>& vertices) {
  const std::size_t top = std::min(vertices.size(), static_cast<std::size_t>(cfg.d + 1));
  for (std::size_t size = 2; size <= top; ++size) {
    for (const auto& pick : subsets_of_size(vertices, size)) {
      // Affine independence: the homogeneous columns (p; 1) have full column rank.
      IntMatrix m(static_cast<std::size_t>(cfg.d + 1), std::vector<BigInt>(size));
      for (std::size_t j = 0; j < size; ++j) {
        const auto p = cfg.point(pick[j]);
        for (int r = 0; r < cfg.d; ++r) m[static_cast<std::size_t>(r)][j] = p[static_cast<std::size_t>(r)];
        m[static_cast<std::size_t>(cfg.d)][j] = 1;
      }
      if (integer_rank(m) != size) return false;
    }
  }
  return true;
}

bool intersection_parity(const Simplex& sigma, const Simplex& tau, const GenericPointConfig& cfg) {
  if (sigma.empty() || tau.empty() || !sigma.disjoint(tau)) {
    throw InputError("intersection_parity needs two nonempty vertex-disjoint simplices");
  }
  if (sigma.dimension() + tau.dimension() != cfg.d) {
    throw InputError("intersection_parity needs dim(sigma) + dim(tau) = d");
  }
  const int d = cfg.d;
  const auto n = static_cast<std::size_t>(d + 2);
  // Unknowns: barycentric weights of sigma's vertices, then tau's.
  IntMatrix a(n, std::vector<BigInt>(n));
  std::size_t col = 0;
  for (Vertex v : sigma) {
    const auto p = cfg.point(v);
    for (int r = 0; r < d; ++r) a[static_cast<std::size_t>(r)][col] = p[static_cast<std::size_t>(r)];
    a[n - 2][col] = 1;
    ++col;
  }
  for (Vertex v : tau) {
    const auto p = cfg.point(v);
    for (int r = 0; r < d; ++r) a[static_cast<std::size_t>(r)][col] = -p[static_cast<std::size_t>(r)];
    a[n - 1][col] = 1;
    ++col;
  }
  const BigInt det = bareiss_determinant(a);
  if (det == 0) {
    // With d+2 points spanning R^d the affine dependence is unique up to scale;
    // a singular system then means the two affine hulls miss each other.
    IntMatrix hom(static_cast<std::size_t>(d + 1), std::vector<BigInt>(n));
    for (std::size_t j = 0; j < n; ++j) {
      for (int r = 0; r < d; ++r) {
        hom[static_cast<std::size_t>(r)][j] = a[static_cast<std::size_t>(r)][j] * (j < sigma.size() ? 1 : -1);
      }
      hom[static_cast<std::size_t>(d)][j] = 1;
    }
    if (integer_rank(hom) != static_cast<std::size_t>(d + 1)) {
      throw DegenerateConfiguration("points of " + sigma.key() + " | " + tau.key() +
                                    " are not in general position");
    }
    return false;
  }
  const int s = sign_of(det);
  bool inside = true;
  for (std::size_t j = 0; j < n; ++j) {
    auto replaced = a;
    for (std::size_t r = 0; r < n; ++r) replaced[r][j] = r + 2 >= n ? 1 : 0;
    const int sj = sign_of(bareiss_determinant(std::move(replaced)));
    if (sj == 0) {
      throw DegenerateConfiguration("crossing of " + sigma.key() + " | " + tau.key() +
                                    " lies on a proper face");
    }
    if (sj != s) inside = false;
  }
  return inside;
}

namespace {

ObstructionResult evaluate(const DeletedProduct& dp, const CellComplex& quotient,
                           const GenericPointConfig& cfg) {
  const int d = cfg.d;
  const auto& cells = dp.complex;
  ObstructionResult out;
  out.d = d;
  out.params = cfg.params;

  BitVector full(cells.num_cells(d));
  if (d <= cells.dimension()) {
    const auto& layer = cells.cells[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (intersection_parity(layer[i].left, layer[i].right, cfg)) full.set(i);
    }
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (full.get(i) != full.get(dp.swap(d, i))) {
        throw InvariantViolation("intersection cocycle is not swap-invariant");
      }
    }
  }
  if (cells.chains.boundary_map(d + 1).transpose().multiply(full).any()) {
    throw InvariantViolation("intersection cochain is not a cocycle");
  }

  out.cocycle = BitVector(quotient.num_cells(d));
  for (std::size_t i = 0; i < quotient.num_cells(d); ++i) {
    const auto& label = quotient.cells[static_cast<std::size_t>(d)][i];
    if (full.get(cells.index_of(label))) out.cocycle.set(i);
  }
  out.witness = is_coboundary(out.cocycle, quotient.chains, d);
  out.nonzero = !out.witness.has_value();
  return out;
}

ObstructionResult with_retries(const SimplicialComplex& k, int d, const DeletedProduct& dp,
                               const CellComplex& quotient, ParamScheme scheme, int max_retries) {
  const auto vertices = k.vertices();
  const std::size_t count = vertices.empty() ? 0 : static_cast<std::size_t>(vertices.back()) + 1;
  const auto base = GenericPointConfig::moment_curve(d, count, scheme);
  const auto primes = first_primes(static_cast<std::size_t>(max_retries) + 1);
  for (int attempt = 0;; ++attempt) {
    auto cfg = base;
    if (attempt > 0) {
      // Shifting every parameter by one constant is an affine change of the
      // curve and keeps any degeneracy, so the perturbation is quadratic in the index.
      for (std::size_t i = 0; i < cfg.params.size(); ++i) {
        const auto ii = static_cast<long long>(i);
        cfg.params[i] += primes[static_cast<std::size_t>(attempt)] * ii * ii;
      }
    }
    cfg.validate(vertices);
    try {
      auto r = evaluate(dp, quotient, cfg);
      r.retries = attempt;
      return r;
    } catch (const DegenerateConfiguration&) {
      if (attempt >= max_retries) throw;
    }
  }
}

}  // namespace

ObstructionResult obstruction_nonzero(const SimplicialComplex& k, int d,
                                      const ObstructionOptions& options) {
  if (d < 0) throw InputError("ambient dimension must be non-negative");
  const auto dp = deleted_product(k, options.cell_budget);
  if (!dp.swap.is_free()) throw InvariantViolation("swap action on the deleted product has a fixed cell");
  auto quotient = quotient_by_involution(dp.complex, dp.swap);
  auto result = with_retries(k, d, dp, quotient, options.scheme, options.max_retries);
  if (options.cross_check) {
    const auto other = options.scheme == ParamScheme::Consecutive ? ParamScheme::Primes
                                                                  : ParamScheme::Consecutive;
    const auto second = with_retries(k, d, dp, quotient, other, options.max_retries);
    if (second.nonzero != result.nonzero) {
      throw InvariantViolation("obstruction verdict depends on the moment-curve parameters");
    }
  }
  result.quotient = std::move(quotient);
  return result;
}

std::pair<bool, bool> cone_obstruction_check(const SimplicialComplex& k, int d,
                                             const ObstructionOptions& options) {
  return {obstruction_nonzero(k, d, options).nonzero,
          obstruction_nonzero(cone(k), d + 1, options).nonzero};
}

std::vector<std::size_t> sphere_check_deleted_boundary(int d, std::size_t cell_budget) {
  if (d < 1) throw InputError("sphere check needs d >= 1");
  const auto dp = deleted_product(simplex_boundary(d + 1), cell_budget);
  auto b = betti_vector(dp.complex.chains);
  b.resize(static_cast<std::size_t>(d + 1), 0);
  return b;
}

}  // namespace hb
