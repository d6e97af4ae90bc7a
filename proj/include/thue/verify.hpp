#pragma once

// Recomputes every golden fixture from first principles and diffs the
// result against the embedded data.

#include <optional>
#include <string>
#include <vector>

#include "thue/isofield.hpp"
#include "thue/solver.hpp"

namespace thue {

struct VerifyReport {
  std::string name;
  bool ok = false;
  std::string summary;
  std::vector<std::string> notes;
  std::optional<std::string> first_diff;
};

/// Range covered by the solution-table fixture.
inline const BigInt kTableLo{-1};
inline const BigInt kTableHi{2500};

/// `range` must cover [kTableLo, kTableHi].
VerifyReport verify_table1(const RangeResult& range);
VerifyReport verify_table1(unsigned workers = 0);

VerifyReport verify_table2();

/// `c` must cover the fixture's range exactly.
VerifyReport verify_equal_fields(const Classification& c);
VerifyReport verify_equal_fields(unsigned workers = 0);

/// `range` must cover [kTableLo, kTableHi].
VerifyReport verify_full_norm(const RangeResult& range);
VerifyReport verify_full_norm(unsigned workers = 0);

/// Membership of every listed solution for each m in [-1, hi].
VerifyReport verify_small_lambda(const BigInt& hi = kTableHi);

/// Every solution of F_m(x, y) = m^2+3m+9, trivial ones included, in the
/// order: orbits by display order, then the trivial orbit if present.
std::vector<Point> full_norm_solutions(const SolutionSet& set);

std::string format_report(const VerifyReport& r);

}  // namespace thue
