#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hb/chain_map.hpp"
#include "hb/complex.hpp"
#include "hb/error.hpp"
#include "hb/helly.hpp"

namespace hb {

/// Phi: simplex of K (the empty simplex included) -> member indices.
using ConstraintMap = std::map<Simplex, IndexSet>;

struct ConstrainedChainMap {
  std::shared_ptr<const SimplicialComplex> complex;
  std::shared_ptr<const SetFamily> family;
  SimplicialChainMap gamma;
  ConstraintMap phi;
};

/// Target of gamma: the family's ambient complex, sharing ownership with the family.
std::shared_ptr<const SimplicialComplex> ambient_of(const std::shared_ptr<const SetFamily>& f);

struct ConstraintViolation {
  enum class Kind { ChainMap, Trivial, MissingPhi, EmptyPhi, IndexRange, Intersection, Support };
  Kind kind;
  Simplex first;
  Simplex second;
  std::string message;
};

/// Audits chain-map law, nontriviality, Phi(empty) = empty, the intersection
/// law on all pairs, and supp gamma(s) in U_{Phi(s)} on all simplices.
std::vector<ConstraintViolation> verify_constrained(const ConstrainedChainMap& c);

/// Raw almost-embedding verdict of gamma. Throws InputError on an unverified
/// bundle and InvariantViolation if the family has empty intersection but the
/// verdict is negative.
bool almost_embedding_verdict(const ConstrainedChainMap& c);

/// Q: sorted 1-based positions in [w].
struct SelectionPattern {
  std::vector<int> positions;
  int w = 0;

  int q() const { return static_cast<int>(positions.size()); }
  /// Throws InputError unless positions are strictly increasing within [1, w].
  void validate() const;
};

/// Elements of the sorted set `w_set` at the positions of Q.
template <typename T>
std::vector<T> selected_subset(const SelectionPattern& q, const std::vector<T>& w_set) {
  q.validate();
  if (static_cast<int>(w_set.size()) != q.w) throw InputError("selected_subset: |W| differs from w");
  std::vector<T> out;
  for (int p : q.positions) out.push_back(w_set[static_cast<std::size_t>(p - 1)]);
  return out;
}

using Rational = boost::rational<long long>;

struct RescaleResult {
  std::map<int, int> pi;
  std::vector<std::vector<int>> windows;
  /// Blueprint sets D_i plus pi0(A_i) inside the rationals, before the re-embedding into Z.
  std::vector<std::vector<Rational>> blueprint;
};

/// Injection pi: Y -> Z and w-subsets W_i of Z with Q selecting pi(A_i) in W_i and
/// W_i cap W_j = pi(A_i cap A_j). Y and Z must be sorted; each A_i is a q-subset of Y.
/// Throws InputError if |Z| < |Y| + r(w - q).
RescaleResult rescale(const SelectionPattern& q, const std::vector<int>& y, const std::vector<int>& z,
                      const std::vector<std::vector<int>>& a);

/// nullopt marks an x-subset with no admissible color.
using Coloring = std::function<std::optional<std::int64_t>(const std::vector<int>&)>;

/// Lexicographically first z-subset of `vertices` whose x-subsets all carry one
/// color, or nullopt. Throws BudgetExceeded after `node_budget` search nodes.
std::optional<std::vector<int>> ramsey_find(int x, const std::vector<int>& vertices,
                                            const Coloring& coloring, int z,
                                            std::size_t node_budget = 5'000'000);

struct BuildOptions {
  /// Extra vertices of Delta_s tried beyond the minimum; negative means up to the family size.
  int s_slack = -1;
  /// Extra window sizes m tried beyond l = 2^{k+1} - 1.
  int m_slack = 2;
  std::size_t node_budget = 5'000'000;
};

using Builder = std::function<ConstrainedChainMap(const SimplicialComplex&,
                                                  const std::shared_ptr<const SetFamily>&, int)>;

/// Vertex v_j (j-th smallest) gets Phi = {j} and the smallest vertex of U_{j}.
ConstrainedChainMap build_dim0(const SimplicialComplex& k, const std::shared_ptr<const SetFamily>& f);

/// The four-step construction for complexes of dimension <= 1 with non-reduced b0 <= b.
ConstrainedChainMap build_dim1(const SimplicialComplex& k, const std::shared_ptr<const SetFamily>& f,
                               int b, const BuildOptions& options = {});

struct AlphaMap {
  Subdivision sd;
  /// From K^{(k-1)} into sd K.
  SimplicialChainMap map;
};

/// sigma -> sum of the dim(sigma)-simplices of sd(sigma), on K^{(k-1)}.
AlphaMap alpha_map(const SimplicialComplex& k, int top);

/// Top simplices of sd(sigma), as simplices of sd K.
std::vector<Simplex> subdivided_tops(const Subdivision& sd, const Simplex& sigma);

/// alpha(d sigma) equals the sum of d tau over the top simplices tau of sd(sigma).
bool alpha_boundary_identity(const AlphaMap& alpha, const Simplex& sigma);

/// Extension of a monotone Psi from the simplices of a skeleton to arbitrary vertex sets.
class PsiExtension {
 public:
  /// Throws InputError when Psi is not monotone on its domain.
  PsiExtension(const ConstraintMap& psi, int n);

  /// Union of Psi(tau) over domain simplices tau inside `a`, as a member mask.
  std::uint64_t mask(const std::vector<Vertex>& a) const;
  IndexSet operator()(const std::vector<Vertex>& a) const { return from_mask(mask(a)); }

 private:
  std::map<Simplex, std::uint64_t> psi_;
  int top_ = -1;
};

IndexSet psi_extend(const ConstraintMap& psi, const std::vector<Vertex>& a, int n);

/// Number of top simplices in sd of a k-simplex, (k+1)!.
long long subdivision_top_count(int k);

/// Induction step for a complex of dimension k >= 1, on top of a builder for dimension k-1.
ConstrainedChainMap build_step(const SimplicialComplex& k, const std::shared_ptr<const SetFamily>& f,
                               int b, const Builder& recurse, const BuildOptions& options = {});

/// build_dim0 / build_dim1 / build_step chosen by dimension, recursing through build_ccm.
ConstrainedChainMap build_ccm(const SimplicialComplex& k, const std::shared_ptr<const SetFamily>& f,
                              int b, const BuildOptions& options = {});

}  // namespace hb
