#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hb/complex.hpp"
#include "hb/error.hpp"

namespace hb {

/// Sorted, 0-based member indices.
using IndexSet = std::vector<int>;

/// Ambient complex with members U_0..U_{n-1}, each a subcomplex of it. At most 64 members.
class SetFamily {
 public:
  SetFamily() = default;
  /// Throws InputError if a member is not a subcomplex of the ambient complex.
  SetFamily(SimplicialComplex ambient, std::vector<SimplicialComplex> members);

  const SimplicialComplex& ambient() const { return ambient_; }
  const std::vector<SimplicialComplex>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

  /// Intersection of the members whose bit is clear in `kept`; the ambient complex when all bits are set.
  SimplicialComplex u_set_mask(std::uint64_t kept) const;
  /// Intersection of the members listed in `members` (the ambient complex for none).
  SimplicialComplex intersection_mask(std::uint64_t members) const;
  std::uint64_t full_mask() const;
  /// True iff `s` is a simplex of u_set_mask(kept), without building that complex.
  bool in_u_set(const Simplex& s, std::uint64_t kept) const;

 private:
  SimplicialComplex ambient_;
  std::vector<SimplicialComplex> members_;
  std::vector<Simplex> faces_;
  /// missing_[f] has bit i set iff member i lacks faces_[f].
  std::vector<std::uint64_t> missing_;
};

std::uint64_t to_mask(const IndexSet& s, int n);
IndexSet from_mask(std::uint64_t m);

/// U_I: intersection of the members not indexed by I.
SimplicialComplex u_set(const SetFamily& f, const IndexSet& i);

struct HellyResult {
  int helly = 1;
  /// Minimal subfamilies with empty intersection, as member-index masks.
  std::vector<std::uint64_t> minimal_empty;
};

/// 1 if the whole family intersects, else the largest minimal empty-intersection subfamily.
/// Throws BudgetExceeded above `budget` members.
HellyResult helly_number(const SetFamily& f, std::size_t budget = kDefaultFamilyBudget);

struct AuditRow {
  std::uint64_t subfamily;
  std::vector<std::size_t> reduced_betti;
};

struct HypothesisReport {
  int d = 0;
  int max_index = 0;
  std::vector<AuditRow> rows;
  std::size_t max_betti = 0;
  int helly = 1;
};

/// Reduced Betti numbers of every proper subfamily intersection (the empty
/// subfamily gives the ambient complex) in degrees 0..max_index, where
/// max_index defaults to ceil(d/2) - 1.
HypothesisReport hypothesis_audit(const SetFamily& f, int d,
                                  std::optional<int> max_index = std::nullopt,
                                  std::size_t budget = kDefaultFamilyBudget);

/// Cone over the boundary of the d-simplex, apex d+1.
SimplicialComplex gamma_complex(int d);
/// b disjoint copies of gamma_complex(d); copy c uses vertices c(d+2)..c(d+2)+d+1.
/// Member v is the induced subcomplex on all vertices but v (the sets called
/// both U_v and F_v in the literature are the same sets).
SetFamily gamma_family(int b, int d);
/// Six vertices 0..5 standing for v1..v6, with the eight tetrahedra
/// 1245, 1235, 3416, 3426, 5613, 5614, 5623, 5624.
SimplicialComplex gamma3_prime();
/// Ambient: k-skeleton of the (n-1)-simplex; member j drops vertex j.
SetFamily skeleton_family(int n, int k);
/// Path on 0..10n; member i (1-based i = index + 1) keeps v <= 10i-11 or v >= 10i+1.
SetFamily interval_family(int n);
/// (k, n) must be (d, d+1) or (d-1, d+2); same shape as skeleton_family(n, k).
SetFamily tight_family(int d, int k, int n);

}  // namespace hb
