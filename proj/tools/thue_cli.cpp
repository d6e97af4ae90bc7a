// Command-line front end.
//
// Exit status: 0 success, 1 verification mismatch or failed cross-check,
// 2 usage error, 3 internal error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "thue/cf.hpp"
#include "thue/isofield.hpp"
#include "thue/report.hpp"
#include "thue/solver.hpp"
#include "thue/verify.hpp"

namespace {

using thue::BigInt;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "text";
  std::string path;
  bool quiet = false;

  thue::Format parsed() const { return *thue::parse_format(format); }
};

BigInt flag_int(const std::string& flag, const std::string& value) {
  try {
    return thue::parse_bigint(value);
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected an integer, got '" + value + "'");
  }
}

void check_range(const BigInt& lo, const BigInt& hi) {
  if (lo < -1) throw UsageError("--from: must be >= -1");
  if (hi < lo) throw UsageError("--to: must be >= --from");
}

void emit(const Output& out, const std::string& body) {
  if (!out.path.empty()) {
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw UsageError("--output: cannot open " + out.path);
    file << body;
    return;
  }
  if (!out.quiet) std::cout << body;
}

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--output,-o", out.path, "Write the report to this file instead of stdout");
  cmd->add_flag("--quiet,-q", out.quiet, "Suppress the report on stdout");
}

std::string render_verify(const std::vector<thue::VerifyReport>& reports, thue::Format format) {
  switch (format) {
    case thue::Format::Json: {
      nlohmann::ordered_json j;
      j["schema"] = 1;
      j["reports"] = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        nlohmann::ordered_json entry;
        entry["name"] = r.name;
        entry["ok"] = r.ok;
        entry["summary"] = r.summary;
        entry["notes"] = r.notes;
        entry["first_diff"] = r.first_diff ? nlohmann::ordered_json(*r.first_diff) : nlohmann::ordered_json(nullptr);
        j["reports"].push_back(std::move(entry));
      }
      return j.dump(2) + "\n";
    }
    case thue::Format::Csv: {
      std::string out = "name,ok,summary,first_diff\n";
      for (const auto& r : reports) {
        out += r.name + "," + (r.ok ? "true" : "false") + ",\"" + r.summary + "\",\"" + r.first_diff.value_or("") + "\"\n";
      }
      return out;
    }
    case thue::Format::Text: {
      std::string out;
      for (const auto& r : reports) out += thue::format_report(r);
      return out;
    }
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver and verifier for the cubic Thue family F_m(x, y) = lambda"};
  app.require_subcommand(1);
  Output out;

  std::string m_text;
  std::string from_text;
  std::string to_text;
  std::size_t terms = 20;
  int root_index = 2;
  bool table1 = false, table2 = false, ennola = false, corollary15 = false, mpl96 = false;

  auto* solve = app.add_subcommand("solve", "All non-trivial solutions for one m");
  solve->add_option("--m", m_text, "Family index")->required();
  add_output_options(solve, out);

  auto* solve_range = app.add_subcommand("solve-range", "All non-trivial solutions for m in [from, to]");
  solve_range->add_option("--from", from_text, "First index (>= -1)")->required();
  solve_range->add_option("--to", to_text, "Last index")->required();
  add_output_options(solve_range, out);

  auto* classify = app.add_subcommand("classify", "Group indices in [from, to] by field");
  classify->add_option("--from", from_text, "First index (>= -1)")->required();
  classify->add_option("--to", to_text, "Last index")->required();
  add_output_options(classify, out);

  auto* cond = app.add_subcommand("conductor", "Conductor of L_m");
  cond->add_option("--m", m_text, "Family index")->required();
  add_output_options(cond, out);

  auto* cf = app.add_subcommand("cf", "Continued fraction of a root of f_m");
  cf->add_option("--m", m_text, "Family index (>= -1)")->required();
  cf->add_option("--terms", terms, "Number of partial quotients")->check(CLI::PositiveNumber);
  cf->add_option("--root", root_index, "1: root > 1, 2: root in (-1/2, 0), 3: root in (-2, -1)")
      ->check(CLI::Range(1, 3));
  add_output_options(cf, out);

  auto* verify = app.add_subcommand("verify", "Recompute golden tables and report differences");
  verify->add_flag("--table1", table1, "Solutions for -1 <= m <= 2500");
  verify->add_flag("--table2", table2, "Equal-conductor pairs with distinct fields");
  verify->add_flag("--ennola", ennola, "Coinciding fields for -1 <= m < n <= 10000");
  verify->add_flag("--corollary15", corollary15, "Solutions with lambda = m^2+3m+9");
  verify->add_flag("--mpl96", mpl96, "Known solutions with lambda <= 2m+3");
  add_output_options(verify, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const thue::Format format = out.parsed();
    if (solve->parsed()) {
      const BigInt m = flag_int("--m", m_text);
      emit(out, thue::render_solutions(thue::solve_family(m), format));
      return kOk;
    }
    if (solve_range->parsed()) {
      const BigInt lo = flag_int("--from", from_text);
      const BigInt hi = flag_int("--to", to_text);
      check_range(lo, hi);
      const thue::RangeResult result = thue::solve_range(lo, hi);
      emit(out, thue::render_range(result, lo, hi, format));
      for (const auto& p : result.problems) std::cerr << "cross-check failed: " << p << "\n";
      return result.ok() ? kOk : kMismatch;
    }
    if (classify->parsed()) {
      const BigInt lo = flag_int("--from", from_text);
      const BigInt hi = flag_int("--to", to_text);
      check_range(lo, hi);
      emit(out, thue::render_classification(thue::classify_range(lo, hi), format));
      return kOk;
    }
    if (cond->parsed()) {
      const BigInt m = flag_int("--m", m_text);
      emit(out, thue::render_conductor(m, thue::conductor(m), format));
      return kOk;
    }
    if (cf->parsed()) {
      const BigInt m = flag_int("--m", m_text);
      if (m < -1) throw UsageError("--m: must be >= -1");
      const thue::IsolatedRoot root = root_index == 1   ? thue::isolate_theta1(m)
                                      : root_index == 2 ? thue::isolate_theta2(m)
                                                        : thue::isolate_theta3(m);
      emit(out, thue::render_cf(m, thue::cf_expand(root, terms), format));
      return kOk;
    }
    if (verify->parsed()) {
      if (!(table1 || table2 || ennola || corollary15 || mpl96)) {
        throw UsageError("verify: choose at least one of --table1 --table2 --ennola --corollary15 --mpl96");
      }
      std::vector<thue::VerifyReport> reports;
      std::optional<thue::RangeResult> range;
      auto shared_range = [&]() -> const thue::RangeResult& {
        if (!range) range = thue::solve_range(thue::kTableLo, thue::kTableHi);
        return *range;
      };
      if (table1) reports.push_back(thue::verify_table1(shared_range()));
      if (table2) reports.push_back(thue::verify_table2());
      if (ennola) reports.push_back(thue::verify_equal_fields());
      if (corollary15) reports.push_back(thue::verify_full_norm(shared_range()));
      if (mpl96) reports.push_back(thue::verify_small_lambda());
      emit(out, render_verify(reports, format));
      for (const auto& r : reports) {
        if (!r.ok) return kMismatch;
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
