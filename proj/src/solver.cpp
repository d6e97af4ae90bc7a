#include "thue/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "thue/cf.hpp"
#include "thue/isofield.hpp"
#include "thue/parallel.hpp"

namespace thue {

const char* to_string(Certificate c) {
  return c == Certificate::BoundedConvergent ? "bounded+convergent" : "bounded-only";
}

std::size_t SolutionSet::primitive_solution_count() const {
  return 3 * static_cast<std::size_t>(
                 std::count_if(orbits.begin(), orbits.end(), [](const OrbitSolution& o) { return o.primitive(); }));
}

std::size_t RangeResult::total_solutions() const {
  std::size_t total = 0;
  for (const auto& s : sets) total += s.solution_count();
  return total;
}

SearchPlan make_plan(const BigInt& m) {
  if (m < -1) throw std::invalid_argument("make_plan: expected m >= -1");
  SearchPlan plan;
  plan.m = m;
  plan.lambdas = divisors(factor(sqrt_disc(m)));
  if (m < kConvergentThreshold) {
    plan.brute_y_bound = kSmallIndexYBound;
    return plan;
  }
  plan.brute_y_bound = convergent_threshold_y(m);
  plan.use_convergents = true;
  plan.kappa = lpv_kappa(m);
  plan.y_ceiling = y_ceiling(m, plan.lambdas.back());
  return plan;
}

namespace {

// Collects orbits keyed by (lambda, canonical member).
class OrbitCollector {
 public:
  explicit OrbitCollector(BigInt m) : m_(std::move(m)) {}

  // Records F_m(x, y) = value with |value| a target; flips sign so lambda > 0.
  void add(BigInt x, BigInt y, const BigInt& value) {
    if (value == 0 || is_trivial(x, y)) return;
    BigInt lambda = value;
    if (value < 0) {
      x = -x;
      y = -y;
      lambda = -value;
    }
    OrbitClass orb({std::move(x), std::move(y)});
    auto key = std::make_pair(lambda, orb.canonical());
    found_.emplace(std::move(key), std::move(orb));
  }

  SolutionSet finish(Certificate certificate) && {
    SolutionSet set;
    set.m = m_;
    set.certificate = certificate;
    for (auto& [key, orb] : found_) {
      OrbitSolution o{key.first, std::move(orb), std::nullopt};
      o.N = n_from_solution(m_, o.orbit.canonical().x, o.orbit.canonical().y);
      set.orbits.push_back(std::move(o));
    }
    std::sort(set.orbits.begin(), set.orbits.end(), [](const OrbitSolution& a, const OrbitSolution& b) {
      if (a.lambda != b.lambda) return a.lambda < b.lambda;
      const BigInt ca = a.cross(), cb = b.cross();
      const BigInt aa = abs(ca), ab = abs(cb);
      if (aa != ab) return aa < ab;
      if (ca != cb) return ca < cb;
      return a.orbit.canonical() < b.orbit.canonical();
    });
    return set;
  }

 private:
  struct KeyLess {
    bool operator()(const std::pair<BigInt, Point>& a, const std::pair<BigInt, Point>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    }
  };
  BigInt m_;
  std::map<std::pair<BigInt, Point>, OrbitClass, KeyLess> found_;
};

using i128 = __int128;

i128 to_i128(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("value exceeds 64-bit range: " + to_string(v));
  return static_cast<i128>(v.get_si());
}

BigInt from_i128(i128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(mag >> 64));
  BigInt lo(static_cast<unsigned long>(mag & ~0ULL));
  BigInt out = (hi << 64) + lo;
  return negative ? BigInt(-out) : out;
}

// Root data for the window bound: centre theta_i and a lower bound for
// |f_m'(theta_i)|, both as doubles derived from exact brackets.
struct RootWindow {
  double theta = 0;
  double slope_floor = 0;
};

std::array<RootWindow, 3> root_windows(const BigInt& m) {
  const std::array<IsolatedRoot, 3> roots = {isolate_theta1(m), isolate_theta2(m), isolate_theta3(m)};
  const Rational width = make_rational(1, BigInt(1) << 64);
  const Rational vertex = make_rational(m, 3);
  std::array<RootWindow, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const IsolatedRoot r = refine(roots[i], width);
    // f' is monotone on a bracket that avoids its vertex m/3.
    if (r.lo() <= vertex && vertex <= r.hi()) throw std::logic_error("root bracket straddles vertex of f'");
    const Rational dlo = abs(r.poly().derivative_at(r.lo()));
    const Rational dhi = abs(r.poly().derivative_at(r.hi()));
    if (sign(r.poly().derivative_at(r.lo())) != sign(r.poly().derivative_at(r.hi())) || dlo == 0 || dhi == 0) {
      throw std::logic_error("derivative changes sign inside root bracket");
    }
    Rational mid = (r.lo() + r.hi()) / 2;
    out[i].theta = mid.get_d();
    out[i].slope_floor = std::min(dlo, dhi).get_d() * (1.0 - 1e-12);  // get_d truncates toward zero
  }
  return out;
}

struct Interval {
  std::int64_t lo;
  std::int64_t hi;
};

std::int64_t checked_floor(double v) {
  const double f = std::floor(v);
  if (!(std::fabs(f) < 9.0e18)) throw std::overflow_error("brute_search: x window exceeds 64-bit range");
  return static_cast<std::int64_t>(f);
}

template <class Eval, class Record>
void scan_y(std::int64_t y, double lambda_max, const std::array<RootWindow, 3>& roots, Eval&& evaluate,
            Record&& record) {
  // For |F| <= L and theta_i the root nearest x/y:
  //   |x - theta_i y| <= 4 L / (y^2 |f'(theta_i)|).
  std::array<Interval, 3> windows;
  const double yd = static_cast<double>(y);
  for (std::size_t i = 0; i < 3; ++i) {
    const double centre = roots[i].theta * yd;
    const double half = 4.0 * lambda_max / (yd * yd * roots[i].slope_floor);
    const double margin = 2.0 + (std::fabs(centre) + half) * 1e-13;
    windows[i] = {checked_floor(centre - half - margin), checked_floor(centre + half + margin) + 1};
  }
  std::sort(windows.begin(), windows.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::int64_t next = windows[0].lo;
  for (const auto& w : windows) {
    for (std::int64_t x = std::max(next, w.lo); x <= w.hi; ++x) {
      if (auto value = evaluate(x, y)) record(x, y, *value);
    }
    next = std::max(next, w.hi + 1);
  }
}

}  // namespace

SolutionSet brute_search(const BigInt& m, const std::vector<BigInt>& lambdas, const BigInt& y_bound) {
  if (m < -1) throw std::invalid_argument("brute_search: expected m >= -1");
  if (y_bound < 1) throw std::invalid_argument("brute_search: y_bound must be >= 1");
  OrbitCollector collector(m);
  if (lambdas.empty()) return std::move(collector).finish(Certificate::BoundedOnly);

  std::vector<BigInt> targets = lambdas;
  std::sort(targets.begin(), targets.end());
  if (targets.front() <= 0) throw std::invalid_argument("brute_search: lambdas must be positive");
  const BigInt& lambda_max = targets.back();

  const auto roots = root_windows(m);
  const std::int64_t y_max = static_cast<std::int64_t>(to_i128(y_bound));

  // |x| <= (m+3) y + window; the fast path needs 4 (|m|+3) X^3 < 2^125.
  const double lmax_d = lambda_max.get_d();
  const double x_bound = (m.get_d() + 3.0) * static_cast<double>(y_max) + 4.0 * lmax_d / roots[2].slope_floor +
                         4.0 * lmax_d / roots[1].slope_floor + 16.0;
  const double size_bound = 4.0 * (std::fabs(m.get_d()) + 3.0) * std::pow(std::max(x_bound, double(y_max)), 3.0);
  const bool fast = size_bound < std::ldexp(1.0, 124) && m.fits_slong_p() && lambda_max.fits_slong_p();

  if (fast) {
    const i128 mm = m.get_si();
    const i128 lmax = lambda_max.get_si();
    std::vector<i128> small_targets;
    for (const auto& t : targets) small_targets.push_back(t.get_si());
    auto evaluate = [&](std::int64_t x64, std::int64_t y64) -> std::optional<i128> {
      const i128 x = x64, y = y64;
      const i128 f = ((x - mm * y) * x - (mm + 3) * y * y) * x - y * y * y;
      const i128 mag = f < 0 ? -f : f;
      if (mag == 0 || mag > lmax) return std::nullopt;
      if (!std::binary_search(small_targets.begin(), small_targets.end(), mag)) return std::nullopt;
      return f;
    };
    auto record = [&](std::int64_t x, std::int64_t y, i128 f) {
      collector.add(BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)), from_i128(f));
    };
    for (std::int64_t y = 1; y <= y_max; ++y) scan_y(y, lmax_d, roots, evaluate, record);
  } else {
    auto evaluate = [&](std::int64_t x, std::int64_t y) -> std::optional<BigInt> {
      BigInt f = eval_form(m, BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)));
      const BigInt mag = abs(f);
      if (mag == 0 || mag > lambda_max) return std::nullopt;
      if (!std::binary_search(targets.begin(), targets.end(), mag)) return std::nullopt;
      return f;
    };
    auto record = [&](std::int64_t x, std::int64_t y, const BigInt& f) {
      collector.add(BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)), f);
    };
    for (std::int64_t y = 1; y <= y_max; ++y) scan_y(y, lmax_d, roots, evaluate, record);
  }
  return std::move(collector).finish(Certificate::BoundedOnly);
}

SolutionSet convergent_search(const BigInt& m, const std::vector<BigInt>& lambdas) {
  if (m < kConvergentThreshold) throw std::invalid_argument("convergent_search: expected m >= 30");
  OrbitCollector collector(m);
  if (lambdas.empty()) return std::move(collector).finish(Certificate::BoundedConvergent);
  const BigInt lambda_max = *std::max_element(lambdas.begin(), lambdas.end());
  const BigInt ceiling = y_ceiling(m, lambda_max);

  CfExpander expander(isolate_theta2(m));
  ConvergentRecurrence recurrence;
  while (true) {
    const Convergent c = recurrence.push(expander.next());
    if (c.q > ceiling) break;
    const BigInt value = eval_form(m, c.p, c.q);
    const BigInt mag = abs(value);
    if (mag == 0 || mag > lambda_max) continue;
    // All six images of (p, q) share |F|; scaling by g multiplies F by g^3.
    for (const auto& lambda : lambdas) {
      if (!mpz_divisible_p(lambda.get_mpz_t(), mag.get_mpz_t())) continue;
      const auto g = is_cube(BigInt(lambda / mag));
      if (!g) continue;
      collector.add(*g * c.p, *g * c.q, sgn(value) * lambda);
    }
  }
  return std::move(collector).finish(Certificate::BoundedConvergent);
}

namespace {

// Adds g * (x', y') for every primitive orbit (x', y') and every g with
// g^3 lambda' a target, so non-primitive solutions are complete.
void lift_multiples(const BigInt& m, const std::vector<BigInt>& lambdas, const SolutionSet& found,
                    OrbitCollector& out) {
  for (const auto& o : found.orbits) {
    const Point& p = o.orbit.canonical();
    const BigInt g0 = gcd(p.x, p.y);
    const BigInt x = p.x / g0, y = p.y / g0;
    const BigInt base = eval_form(m, x, y);
    const BigInt mag = abs(base);
    for (const auto& lambda : lambdas) {
      if (!mpz_divisible_p(lambda.get_mpz_t(), mag.get_mpz_t())) continue;
      if (const auto g = is_cube(BigInt(lambda / mag))) out.add(*g * x, *g * y, sgn(base) * lambda);
    }
  }
}

}  // namespace

SolutionSet solve_family(const BigInt& m_in) {
  const FamilyIndex idx = normalize_index(m_in);
  const BigInt& m = idx.m;
  assert_irreducible(m);
  const SearchPlan plan = make_plan(m);

  std::vector<SolutionSet> parts;
  parts.push_back(brute_search(m, plan.lambdas, plan.brute_y_bound));
  if (plan.use_convergents) parts.push_back(convergent_search(m, plan.lambdas));

  OrbitCollector merged(m_in);
  for (const auto& part : parts) {
    OrbitCollector lifted(m);
    lift_multiples(m, plan.lambdas, part, lifted);
    const SolutionSet extra = std::move(lifted).finish(Certificate::BoundedOnly);
    for (const SolutionSet* s : {&part, &extra}) {
      for (const auto& o : s->orbits) {
        Point p = o.orbit.canonical();
        if (idx.transformed) p = swap_negate(p);
        merged.add(p.x, p.y, o.lambda);
      }
    }
  }
  return std::move(merged).finish(plan.use_convergents ? Certificate::BoundedConvergent : Certificate::BoundedOnly);
}

RangeResult solve_range(const BigInt& lo, const BigInt& hi, unsigned workers) {
  if (lo < -1) throw std::invalid_argument("solve_range: lo must be >= -1");
  if (hi < lo) throw std::invalid_argument("solve_range: hi must be >= lo");
  const BigInt span = hi - lo + 1;
  if (!span.fits_ulong_p()) throw std::invalid_argument("solve_range: range too large");
  const std::size_t count = span.get_ui();

  RangeResult result;
  result.sets.resize(count);
  std::vector<std::vector<std::string>> problems(count);
  parallel_for(count, workers, [&](std::size_t i) {
    const BigInt m = lo + BigInt(i);
    SolutionSet set = solve_family(m);
    std::set<BigInt> partners;
    for (const auto& o : set.orbits) {
      if (!o.N) {
        problems[i].push_back("m=" + to_string(m) + ": non-integral N for lambda=" + to_string(o.lambda));
        continue;
      }
      if (!o.primitive()) continue;
      const BigInt partner = partner_index(*o.N);
      if (partner == m || !is_isomorphic(m, partner).isomorphic) {
        problems[i].push_back("m=" + to_string(m) + ": N=" + to_string(*o.N) + " is not an isomorphic partner");
      }
      partners.insert(partner);
    }
    if (3 * partners.size() != set.primitive_solution_count()) {
      problems[i].push_back("m=" + to_string(m) + ": " + std::to_string(partners.size()) + " partners vs " +
                            std::to_string(set.primitive_solution_count()) + " primitive solutions");
    }
    result.sets[i] = std::move(set);
  });
  for (auto& p : problems) result.problems.insert(result.problems.end(), p.begin(), p.end());
  return result;
}

}  // namespace thue
