#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hb/complex.hpp"
#include "hb/helly.hpp"

namespace hb::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  /// 0 means no limit.
  double limit_seconds = 0.0;
};

std::vector<CriterionResult> run_all();
CriterionResult run_one(int id);

/// "criterion 3 PASS hypothesis audits: ..." with the elapsed time when `timing` is set.
std::string format(const CriterionResult& r, bool timing);

// Crafted corpora, shared with the unit tests.

/// Path 0 - 1 - ... - edges.
SimplicialComplex path_complex(int edges);
/// Path on 0..n; member i keeps the vertices v >= i + 1. Nested, with common vertex n.
SetFamily nested_path_family(int n);
/// Two complete graphs: sheet A holds a_j = j for even j, sheet B holds b_j = n + j
/// for every j. Member i drops a_i and b_i. U_I has at most two components.
SetFamily two_sheet_family(int n);

}  // namespace hb::acceptance
