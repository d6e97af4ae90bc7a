#include "thue/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "thue/fixtures.hpp"
#include "thue/report.hpp"

namespace thue {

namespace {

std::string point_text(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

std::string points_text(const std::vector<Point>& pts) {
  std::string out;
  for (const auto& p : pts) out += (out.empty() ? "" : " ") + point_text(p);
  return out;
}

bool covers(const RangeResult& range, const BigInt& lo, const BigInt& hi) {
  return !range.sets.empty() && range.sets.front().m <= lo && range.sets.back().m >= hi;
}

// First differing field between a fixture value and its recomputation.
std::optional<std::string> compare_factored(const std::string& column, const fixtures::FactoredValue& printed,
                                            const BigInt& value) {
  if (printed.value != value) {
    return column + " printed " + printed.text + ", recomputed " + to_string(value);
  }
  if (printed.factors && !(*printed.factors == factor(value))) {
    return column + " printed " + printed.text + ", recomputed " + factor(value).to_string();
  }
  return std::nullopt;
}

std::optional<std::string> compare_row(const fixtures::SolutionRow& f, const TableRow& r) {
  auto scalar = [](const std::string& column, const BigInt& printed, const BigInt& value) -> std::optional<std::string> {
    if (printed == value) return std::nullopt;
    return column + " printed " + to_string(printed) + ", recomputed " + to_string(value);
  };
  if (auto d = scalar("-N-3", f.minus_N_minus_3, r.minus_N_minus_3)) return d;
  if (auto d = scalar("2m+3", f.two_m_plus_3, r.two_m_plus_3)) return d;
  if (auto d = compare_factored("lambda", f.lambda, r.lambda)) return d;
  if (auto d = compare_factored("m^2+3m+9", f.disc, r.disc)) return d;
  if (auto d = scalar("xy(x+y)", f.cross, r.cross)) return d;
  return std::nullopt;
}

}  // namespace

VerifyReport verify_table1(const RangeResult& range) {
  VerifyReport report{"table1", false, "", {}, std::nullopt};
  if (!covers(range, kTableLo, kTableHi)) throw std::invalid_argument("verify_table1: range does not cover [-1, 2500]");
  const fixtures::SolutionTable table = fixtures::solution_table();
  for (const auto& e : table.errata) {
    report.notes.push_back("row " + std::to_string(e.row) + ": " + e.column + " printed " + e.printed +
                           ", corrected to " + e.corrected + " as implied by the row's own solutions");
  }
  const auto expected = table.corrected_rows();

  std::vector<TableRow> computed;
  for (const auto& s : range.sets) {
    if (s.m < kTableLo || s.m > kTableHi) continue;
    auto rows = table_rows(s);
    computed.insert(computed.end(), rows.begin(), rows.end());
  }

  auto diff = [&](std::string text) {
    if (!report.first_diff) report.first_diff = std::move(text);
  };
  for (const auto& p : range.problems) diff("cross-check: " + p);

  std::vector<bool> used(computed.size(), false);
  std::size_t matched = 0;
  for (const auto& row : expected) {
    auto it = std::find_if(computed.begin(), computed.end(),
                           [&](const TableRow& r) { return r.m == row.m && r.N == row.N; });
    const std::string where = "row " + std::to_string(row.row) + " (m=" + to_string(row.m) + ", N=" + to_string(row.N) + ")";
    if (it == computed.end()) {
      diff(where + ": no computed orbit");
      continue;
    }
    used[it - computed.begin()] = true;
    if (auto d = compare_row(row, *it)) {
      diff(where + ": " + *d);
      continue;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (row.solutions[i] == it->solutions[i]) {
        ++matched;
      } else {
        diff(where + ": solution " + std::to_string(i + 1) + " printed " + point_text(row.solutions[i]) +
             ", recomputed " + point_text(it->solutions[i]));
      }
    }
  }
  for (std::size_t i = 0; i < computed.size(); ++i) {
    if (!used[i]) {
      const auto& r = computed[i];
      diff("unexpected orbit m=" + to_string(r.m) + " N=" + to_string(r.N) + " lambda=" + to_string(r.lambda) +
           " " + point_text(r.solutions[0]));
    }
  }

  const std::size_t expected_solutions = 3 * expected.size();
  std::size_t computed_solutions = 3 * computed.size();
  report.summary = std::to_string(matched) + "/" + std::to_string(expected_solutions) + " solutions matched (" +
                   std::to_string(expected.size()) + " rows, " + std::to_string(computed_solutions) +
                   " solutions recomputed)";
  report.ok = !report.first_diff && matched == expected_solutions && computed_solutions == expected_solutions;
  return report;
}

VerifyReport verify_table1(unsigned workers) { return verify_table1(solve_range(kTableLo, kTableHi, workers)); }

VerifyReport verify_table2() {
  VerifyReport report{"table2", false, "", {}, std::nullopt};
  const auto rows = fixtures::conductor_rows();
  std::size_t matched = 0;
  for (const auto& row : rows) {
    const std::string where = "line " + std::to_string(row.line) + " (" + to_string(row.m) + ", " + to_string(row.n) + ")";
    std::optional<std::string> d = compare_factored("m^2+3m+9", row.disc_m, sqrt_disc(row.m));
    if (!d) d = compare_factored("n^2+3n+9", row.disc_n, sqrt_disc(row.n));
    if (!d) d = compare_factored("conductor(m)", row.conductor, conductor(row.m).f);
    if (!d) d = compare_factored("conductor(n)", row.conductor, conductor(row.n).f);
    if (!d && is_isomorphic(row.m, row.n).isomorphic) d = "fields coincide";
    if (d) {
      if (!report.first_diff) report.first_diff = where + ": " + *d;
    } else {
      ++matched;
    }
  }
  report.summary = std::to_string(matched) + "/" + std::to_string(rows.size()) + " rows matched";
  report.ok = matched == rows.size();
  return report;
}

VerifyReport verify_equal_fields(const Classification& c) {
  VerifyReport report{"ennola", false, "", {}, std::nullopt};
  const auto list = fixtures::overlap_list();
  if (c.lo != list.lo || c.hi != list.hi) {
    throw std::invalid_argument("verify_equal_fields: classification must cover [" + to_string(list.lo) + ", " +
                                to_string(list.hi) + "]");
  }
  const std::set<std::pair<BigInt, BigInt>> expected(list.pairs.begin(), list.pairs.end());
  const auto found_list = c.pairs();
  const std::set<std::pair<BigInt, BigInt>> found(found_list.begin(), found_list.end());
  std::size_t matched = 0;
  for (const auto& p : expected) {
    if (found.count(p)) {
      ++matched;
    } else if (!report.first_diff) {
      report.first_diff = "missing pair (" + to_string(p.first) + ", " + to_string(p.second) + ")";
    }
  }
  std::size_t unexpected = 0;
  for (const auto& p : found) {
    if (expected.count(p)) continue;
    ++unexpected;
    if (!report.first_diff) {
      report.first_diff = "unexpected pair (" + to_string(p.first) + ", " + to_string(p.second) + ")";
    }
  }
  report.summary = std::to_string(matched) + "/" + std::to_string(expected.size()) + " pairs matched, " +
                   std::to_string(unexpected) + " unexpected";
  report.ok = matched == expected.size() && unexpected == 0;
  return report;
}

VerifyReport verify_equal_fields(unsigned workers) {
  const auto list = fixtures::overlap_list();
  return verify_equal_fields(classify_range(list.lo, list.hi, workers));
}

std::vector<Point> full_norm_solutions(const SolutionSet& set) {
  const BigInt d = sqrt_disc(set.m);
  std::vector<Point> out;
  for (const auto& o : set.orbits) {
    if (o.lambda != d) continue;
    for (const auto& p : o.orbit.display_order()) out.push_back(p);
  }
  if (const auto c = is_cube(d)) {
    out.push_back({*c, 0});
    out.push_back({0, -*c});
    out.push_back({-*c, *c});
  }
  return out;
}

VerifyReport verify_full_norm(const RangeResult& range) {
  VerifyReport report{"corollary15", false, "", {}, std::nullopt};
  if (!covers(range, kTableLo, kTableHi)) {
    throw std::invalid_argument("verify_full_norm: range does not cover [-1, 2500]");
  }
  std::map<BigInt, std::vector<Point>> computed;
  for (const auto& s : range.sets) {
    if (s.m < kTableLo || s.m > kTableHi) continue;
    auto pts = full_norm_solutions(s);
    if (!pts.empty()) computed[s.m] = std::move(pts);
  }
  const auto blocks = fixtures::norm_blocks();
  std::size_t matched = 0;
  for (const auto& b : blocks) {
    auto it = computed.find(b.m);
    std::vector<Point> expected = b.solutions;
    std::vector<Point> got = it == computed.end() ? std::vector<Point>{} : it->second;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (expected == got) {
      ++matched;
    } else if (!report.first_diff) {
      report.first_diff = "m=" + to_string(b.m) + ": printed " + points_text(b.solutions) + ", recomputed " +
                          points_text(it == computed.end() ? std::vector<Point>{} : it->second);
    }
    if (it != computed.end()) computed.erase(it);
  }
  for (const auto& [m, pts] : computed) {
    if (!report.first_diff) report.first_diff = "unexpected block m=" + to_string(m) + ": " + points_text(pts);
  }
  report.summary = std::to_string(matched) + "/" + std::to_string(blocks.size()) + " blocks matched, " +
                   std::to_string(computed.size()) + " unexpected";
  report.ok = matched == blocks.size() && computed.empty();
  return report;
}

VerifyReport verify_full_norm(unsigned workers) {
  return verify_full_norm(solve_range(kTableLo, kTableHi, workers));
}

VerifyReport verify_small_lambda(const BigInt& hi) {
  VerifyReport report{"mpl96", false, "", {}, std::nullopt};
  std::size_t checks = 0;
  std::size_t passed = 0;
  auto check = [&](const BigInt& m, const BigInt& lambda, const BigInt& x, const BigInt& y, std::size_t line) {
    ++checks;
    const BigInt value = eval_form(m, x, y);
    if (value == lambda) {
      ++passed;
    } else if (!report.first_diff) {
      report.first_diff = "line " + std::to_string(line) + ", m=" + to_string(m) + ": F(" + to_string(x) + "," +
                          to_string(y) + ") = " + to_string(value) + ", expected " + to_string(lambda);
    }
  };
  for (const auto& e : fixtures::small_lambda_entries()) {
    if (e.m) {
      for (const auto& [x, y] : e.points) check(*e.m, e.lambda.at(*e.m), x.at(*e.m), y.at(*e.m), e.line);
      continue;
    }
    for (BigInt m = kTableLo; m <= hi; ++m) {
      for (const auto& [x, y] : e.points) check(m, e.lambda.at(m), x.at(m), y.at(m), e.line);
    }
  }
  report.summary = std::to_string(passed) + "/" + std::to_string(checks) + " memberships hold";
  report.ok = checks > 0 && passed == checks;
  return report;
}

std::string format_report(const VerifyReport& r) {
  std::ostringstream out;
  out << r.name << ": " << (r.ok ? "ok" : "MISMATCH") << ", " << r.summary << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  if (r.first_diff) out << "  first difference: " << *r.first_diff << "\n";
  return out.str();
}

}  // namespace thue
