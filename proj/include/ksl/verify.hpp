#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ksl/int.hpp"
#include "ksl/pairs.hpp"
#include "ksl/report.hpp"
#include "ksl/staircase.hpp"
#include "ksl/surgery.hpp"
#include "ksl/torus_knot.hpp"

namespace ksl {

enum class VerifyScope { All, Appendix, Staircase, Surgery };

inline std::optional<VerifyScope> parse_scope(const std::string& s) {
  if (s == "all") return VerifyScope::All;
  if (s == "appendix") return VerifyScope::Appendix;
  if (s == "staircase") return VerifyScope::Staircase;
  if (s == "surgery") return VerifyScope::Surgery;
  return std::nullopt;
}

inline std::string scope_name(VerifyScope s) {
  switch (s) {
    case VerifyScope::All:
      return "all";
    case VerifyScope::Appendix:
      return "appendix";
    case VerifyScope::Staircase:
      return "staircase";
    case VerifyScope::Surgery:
      return "surgery";
  }
  return "";
}

/// Worker count: KSL_THREADS when set (clamped to [1,64]), else the hardware
/// concurrency.
inline int default_thread_count() {
  if (const char* env = std::getenv("KSL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(std::min(v, 64l));
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

namespace detail {

/// Index-parallel loop with deterministic result placement.
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  const std::size_t n = std::min(static_cast<std::size_t>(threads), count);
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace detail

struct CheckSink {
  std::vector<CheckRecord> records;

  void add(std::string id, std::string description, std::string anchor, bool pass,
           std::string witness) {
    records.push_back(
        {std::move(id), std::move(description), std::move(anchor), pass, std::move(witness)});
  }
};

struct Criterion {
  std::string id;
  std::string title;
  VerifyScope scope;
  double budget_seconds;  // 0 = no stated bound
  std::function<void(CheckSink&, int)> run;
};

namespace checks {

inline void appendix_table(CheckSink& sink, int) {
  struct Row {
    const char *a, *b, *c, *d, *p;
  };
  // Canonical rendering of the six-polynomial family at levels 1..5.
  static const Row expected[5] = {
      {"n + 2", "n^2 + n - 1", "n", "n^2 + 3n + 1", "n^3 + 3n^2 + n - 1"},
      {"n^2 + 3n + 1", "n^3 + 2n^2 - n - 1", "n^2 + n - 1", "n^3 + 4n^2 + 3n - 1",
       "n^5 + 5n^4 + 6n^3 - 2n^2 - 4n"},
      {"n^3 + 4n^2 + 3n - 1", "n^4 + 3n^3 - 3n", "n^3 + 2n^2 - n - 1",
       "n^4 + 5n^3 + 6n^2 - n - 2", "n^7 + 7n^6 + 15n^5 + 5n^4 - 15n^3 - 9n^2 + 3n + 1"},
      {"n^4 + 5n^3 + 6n^2 - n - 2", "n^5 + 4n^4 + 2n^3 - 5n^2 - 2n + 1", "n^4 + 3n^3 - 3n",
       "n^5 + 6n^4 + 10n^3 + n^2 - 6n - 1",
       "n^9 + 9n^8 + 28n^7 + 28n^6 - 21n^5 - 49n^4 - 6n^3 + 18n^2 + 3n - 1"},
      {"n^5 + 6n^4 + 10n^3 + n^2 - 6n - 1", "n^6 + 5n^5 + 5n^4 - 6n^3 - 7n^2 + 2n + 1",
       "n^5 + 4n^4 + 2n^3 - 5n^2 - 2n + 1", "n^6 + 7n^5 + 15n^4 + 6n^3 - 11n^2 - 6n + 1",
       "n^11 + 11n^10 + 45n^9 + 75n^8 + 6n^7 - 126n^6 - 98n^5 + 50n^4 + 60n^3 - 4n^2 - 8n"}};
  const auto states = generate(5);
  for (long k = 1; k <= 5; ++k) {
    const auto& s = states[static_cast<std::size_t>(k + 1)];
    const Row& row = expected[k - 1];
    const std::pair<const char*, std::pair<const char*, std::string>> entries[5] = {
        {"a", {row.a, s.a.to_string()}},
        {"b", {row.b, s.b.to_string()}},
        {"c", {row.c, s.c.to_string()}},
        {"d", {row.d, s.d.to_string()}},
        {"p", {row.p, s.p.to_string()}}};
    for (const auto& [name, cmp] : entries) {
      const bool ok = cmp.second == cmp.first;
      sink.add("c01-table/k" + std::to_string(k) + "/" + name,
               std::string("level-") + std::to_string(k) + " polynomial " + name +
                   " matches the tabulated form",
               "torus-pair-family-table", ok,
               ok ? cmp.second : cmp.second + " != " + cmp.first);
    }
  }
}

inline void appendix_identities(CheckSink& sink, int) {
  PairFamilyState s = initial_state();
  for (long k = 0; k <= 20; ++k) {
    std::string witness = "ok";
    bool ok = true;
    try {
      s = step(s);
      check_state_invariants(s);
      const IntPoly two = IntPoly::constant(2);
      if (s.c * s.d - s.a * s.b != two) {
        ok = false;
        witness = "c*d - a*b != 2";
      }
    } catch (const std::exception& e) {
      ok = false;
      witness = e.what();
    }
    sink.add("c02-identities/k" + std::to_string(k),
             "defining identities, degrees, and monicity at level " + std::to_string(k),
             "pair-family-defining-identities", ok, witness);
  }
}

inline void appendix_instance(CheckSink& sink, int) {
  const auto states = generate(1);
  const PairInstance inst = instantiate(states[2], Int(2));
  sink.add("c03-instance/knots", "level 1 at n = 2 yields T(4,5) and T(2,11)",
           "shared-21-surgery-on-t45-t211",
           inst.knot1 == TorusKnot(4, 5) && inst.knot2 == TorusKnot(2, 11),
           inst.knot1.to_string() + ", " + inst.knot2.to_string());
  sink.add("c03-instance/slope", "shared surgery slope is 21", "shared-21-surgery-on-t45-t211",
           inst.slope == 21, inst.slope.get_str());
  sink.add("c03-instance/lens", "surgeries are L(21,4) and L(21,16)",
           "shared-21-surgery-on-t45-t211",
           inst.lens1 == LensSpace(Int(21), Int(4)) && inst.lens2 == LensSpace(Int(21), Int(16)),
           inst.lens1.to_string() + ", " + inst.lens2.to_string());
  sink.add("c03-instance/lens-homeo", "the two lens spaces are oriented-homeomorphic",
           "shared-21-surgery-on-t45-t211", lens_homeo_oriented(inst.lens1, inst.lens2),
           "4 * 16 = 1 (mod 21)");
  sink.add("c03-instance/genus", "genera are 6 and 5", "shared-21-surgery-on-t45-t211",
           inst.knot1.genus() == 6 && inst.knot2.genus() == 5,
           inst.knot1.genus().get_str() + ", " + inst.knot2.genus().get_str());
  sink.add("c03-instance/casson", "both knots have Delta''(1)/2 = 15",
           "shared-21-surgery-on-t45-t211",
           inst.knot1.delta_dd_half() == 15 && inst.knot2.delta_dd_half() == 15,
           inst.knot1.delta_dd_half().get_str() + ", " + inst.knot2.delta_dd_half().get_str());
}

inline void appendix_grid(CheckSink& sink, int threads) {
  const auto states = generate(8);
  struct Cell {
    long k;
    long n;
    bool pass = false;
    std::string witness;
  };
  std::vector<Cell> cells;
  for (long k = 1; k <= 8; ++k)
    for (long n = 2; n <= 8; ++n) cells.push_back({k, n, false, ""});
  detail::parallel_for(cells.size(), threads, [&](std::size_t i) {
    Cell& cell = cells[i];
    try {
      const PairInstance inst = instantiate(states[static_cast<std::size_t>(cell.k + 1)],
                                            Int(cell.n));
      const PairReport rep = verify_pair(inst);
      cell.pass = rep.all_pass();
      if (cell.pass) {
        cell.witness = inst.knot1.to_string() + " ~ " + inst.knot2.to_string() + " at slope " +
                       inst.slope.get_str();
      } else {
        for (const auto& c : rep.checks)
          if (!c.pass) cell.witness += c.id + " failed (" + c.witness + "); ";
      }
    } catch (const std::exception& e) {
      cell.pass = false;
      cell.witness = e.what();
    }
  });
  for (const auto& cell : cells)
    sink.add("c04-grid/k" + std::to_string(cell.k) + "/n" + std::to_string(cell.n),
             "all five pair checks at (k,n) = (" + std::to_string(cell.k) + "," +
                 std::to_string(cell.n) + ")",
             "pair-family-verification-grid", cell.pass, cell.witness);
}

inline void appendix_specializations(CheckSink& sink, int) {
  for (long k = -1; k <= 15; ++k) {
    sink.add("c05-special/fib/k" + std::to_string(k),
             "Fibonacci closed form at n = 2, level " + std::to_string(k),
             "fibonacci-specialization-at-n2", fibonacci_specialization(k), "");
    sink.add("c05-special/n1/k" + std::to_string(k),
             "collapse to (2k+1, 1, 1, 2k+3, 2k+2, 2k+4) at n = 1, level " + std::to_string(k),
             "unknot-collapse-at-n1", n1_specialization(k), "");
  }
}

inline void staircase_extremality(CheckSink& sink, int) {
  for (long long g = 1; g <= 12; ++g) {
    const auto all = enumerate_staircases(g);
    const Int bound = exact_div(to_int(g) * to_int(g + 1), Int(2));
    std::vector<long long> expected;
    for (long long i = 0; i < g; ++i) expected.push_back(g - 2 * i);
    const Staircase extremal(std::move(expected));
    Int max;
    std::size_t argmax_count = 0;
    const Staircase* argmax = nullptr;
    for (const auto& s : all) {
      const Int v = s.delta_dd_half();
      if (!argmax || v > max) {
        max = v;
        argmax = &s;
        argmax_count = 1;
      } else if (v == max) {
        ++argmax_count;
      }
    }
    const bool ok = argmax && max == bound && argmax_count == 1 && *argmax == extremal;
    sink.add("c06-extremal/g" + std::to_string(g),
             "max of Delta''(1)/2 over genus-" + std::to_string(g) +
                 " staircases is g(g+1)/2, attained only by the alternating staircase",
             "extremal-staircase-bound", ok,
             "max " + max.get_str() + " at " + (argmax ? argmax->to_string() : "-") + " among " +
                 std::to_string(all.size()));
  }
}

inline void staircase_collisions(CheckSink& sink, int) {
  const auto low = dd_collision_search(5);
  sink.add("c07-collisions/g-le-5",
           "no two distinct staircases of the same genus <= 5 share Delta''(1)/2",
           "staircase-casson-injectivity-low-genus", low.empty(),
           low.empty() ? "no collisions"
                       : "first at genus " + std::to_string(low.front().genus));
  const auto wide = dd_collision_search(10);
  std::string witness = "none up to genus 10";
  if (!wide.empty())
    witness = "first collision at genus " + std::to_string(wide.front().genus) + ": " +
              wide.front().first.to_string() + " vs " + wide.front().second.to_string();
  sink.add("c07-collisions/search-g-le-10",
           "collision search to genus 10 (reported, not asserted)",
           "staircase-casson-injectivity-low-genus", true, witness);
}

inline void dual_route_dd(CheckSink& sink, int threads) {
  std::vector<std::pair<long, long>> pairs;
  for (long a = 2; a <= 30; ++a)
    for (long b = a + 1; b <= 30; ++b)
      if (gcd(Int(a), Int(b)) == 1) pairs.emplace_back(a, b);
  std::vector<char> ok(pairs.size(), 0);
  detail::parallel_for(pairs.size(), threads, [&](std::size_t i) {
    const TorusKnot t(pairs[i].first, pairs[i].second);
    ok[i] = t.delta_dd_half() == exact_div(t.alexander().second_derivative_at_one(), Int(2));
  });
  std::string bad;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!ok[i])
      bad += "T(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ") ";
  sink.add("c08-dual-route/torus",
           "closed-form Delta''(1)/2 equals the term-wise second derivative for all coprime "
           "parameters <= 30",
           "second-derivative-dual-route", bad.empty(),
           bad.empty() ? std::to_string(pairs.size()) + " knots checked" : bad);

  bool stair_ok = true;
  std::size_t count = 0;
  for (long long g = 1; g <= 12 && stair_ok; ++g)
    for (const auto& s : enumerate_staircases(g)) {
      ++count;
      if (s.delta_dd_half() != exact_div(s.to_alexander().second_derivative_at_one(), Int(2))) {
        stair_ok = false;
        break;
      }
    }
  sink.add("c08-dual-route/staircase",
           "staircase Delta''(1)/2 formula equals the term-wise second derivative for g <= 12",
           "second-derivative-dual-route", stair_ok, std::to_string(count) + " staircases checked");
}

inline void satellite_exclusion_sweep(CheckSink& sink, int threads) {
  std::vector<char> empty(200, 1);
  detail::parallel_for(200, threads, [&](std::size_t i) {
    empty[i] = satellite_lspace_exclusion(static_cast<long long>(i + 1)).empty() ? 1 : 0;
  });
  std::string bad;
  for (std::size_t i = 0; i < empty.size(); ++i)
    if (!empty[i]) bad += "g=" + std::to_string(i + 1) + " ";
  sink.add("c09-satellite/g-le-200",
           "no satellite decomposition survives the three constraints for any genus <= 200",
           "satellite-exclusion-for-extremal-alexander", bad.empty(),
           bad.empty() ? "all 200 genera excluded" : bad);
}

inline void zero_surgery_sweep(CheckSink& sink, int threads) {
  std::vector<TorusKnot> knots;
  for (long a = 2; a <= 12; ++a)
    for (long b = a + 1; b <= 12; ++b)
      if (gcd(Int(a), Int(b)) == 1) {
        knots.emplace_back(a, b);
        knots.emplace_back(-a, b);
      }
  struct Task {
    std::size_t i, j;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < knots.size(); ++i)
    for (std::size_t j = i; j < knots.size(); ++j) tasks.push_back({i, j});
  std::vector<char> ok(tasks.size(), 0);
  detail::parallel_for(tasks.size(), threads, [&](std::size_t t) {
    const auto& [i, j] = tasks[t];
    const auto verdict = zero_surgery_torus_compare(knots[i], knots[j]);
    if (i == j) {
      ok[t] = verdict == ZeroSurgeryVerdict::Same;
    } else if (knots[i].A() == knots[j].A() && knots[i].B() == knots[j].B()) {
      ok[t] = verdict == ZeroSurgeryVerdict::SignatureDistinct;
    } else {
      ok[t] = verdict == ZeroSurgeryVerdict::AlexanderDistinct;
    }
  });
  std::size_t bad = 0;
  for (char v : ok)
    if (!v) ++bad;
  sink.add("c10-zero-surgery/params-le-12",
           "zero-surgery comparison distinguishes every pair of distinct canonical torus knots "
           "with parameters <= 12 and fixes each knot",
           "zero-surgery-detects-torus-knots", bad == 0,
           std::to_string(tasks.size()) + " comparisons over " + std::to_string(knots.size()) +
               " knots" + (bad ? ", " + std::to_string(bad) + " wrong" : ""));
}

inline void hfk_consistency(CheckSink& sink, int) {
  for (long long g = 1; g <= 10; ++g) {
    bool ok = true;
    std::string witness;
    std::size_t count = 0;
    for (const auto& s : enumerate_staircases(g)) {
      ++count;
      try {
        (void)hfk_bigraded(s);  // self-checks Euler characteristic, symmetry, top grading
      } catch (const std::exception& e) {
        ok = false;
        witness = s.to_string() + ": " + e.what();
        break;
      }
    }
    if (ok) witness = std::to_string(count) + " staircases";
    sink.add("c11-hfk/g" + std::to_string(g),
             "bigraded generators satisfy Euler/symmetry/top-grading postconditions at genus " +
                 std::to_string(g),
             "staircase-hfk-gradings", ok, witness);
  }
  const auto trefoil = hfk_bigraded(Staircase({1}));
  const std::vector<HfkGenerator> want = {{1, 0}, {0, -1}, {-1, -2}};
  sink.add("c11-hfk/trefoil", "genus-1 staircase has generators (1,0),(0,-1),(-1,-2)",
           "staircase-hfk-gradings", trefoil == want, "");
}

inline void surgery_dimensions(CheckSink& sink, int) {
  bool grid_ok = true;
  std::string witness;
  std::size_t count = 0;
  for (long long g = 1; g <= 6 && grid_ok; ++g)
    for (const auto& s : enumerate_staircases(g)) {
      for (long p = -40; p <= 40 && grid_ok; ++p) {
        if (p == 0) continue;
        for (long q = 1; q <= 5; ++q) {
          if (gcd(Int(std::abs(p)), Int(q)) != 1) continue;
          ++count;
          const Int dim = surgery_hf_dim(s, Int(p), Int(q));
          const bool lspace = is_lspace_slope(s, Int(p), Int(q));
          const bool matches = lspace ? dim == iabs(Int(p)) : dim > iabs(Int(p));
          if (!matches || lspace != (Int(p) >= Int(q) * to_int(2 * g - 1))) {
            grid_ok = false;
            witness = "failed at g=" + std::to_string(g) + " p=" + std::to_string(p) +
                      " q=" + std::to_string(q);
            break;
          }
        }
      }
    }
  sink.add("c12-surgery-dim/grid",
           "dim HF-hat equals |p| exactly on L-space slopes and exceeds it otherwise "
           "(g <= 6, |p| <= 40, q <= 5)",
           "lspace-surgery-dimension-formula", grid_ok,
           grid_ok ? std::to_string(count) + " slopes checked" : witness);

  bool odd_ok = true;
  for (long long g = 1; g <= 6 && odd_ok; ++g)
    for (const auto& s : enumerate_staircases(g)) {
      for (long m = std::max(1ll, 2 * g - 1); m <= 2 * g + 20; ++m)
        if (hf_odd_dim_large(s, Int(m)) != 0) {
          odd_ok = false;
          break;
        }
    }
  sink.add("c12-surgery-dim/odd", "odd-graded dimension of large surgeries vanishes on staircases",
           "lspace-surgery-dimension-formula", odd_ok, "");
}

}  // namespace checks

inline const std::vector<Criterion>& verification_criteria() {
  static const std::vector<Criterion> list = {
      {"c01-table", "Family polynomial table, levels 1..5", VerifyScope::Appendix, 1.0,
       checks::appendix_table},
      {"c02-identities", "Defining identities and degrees, levels 0..20", VerifyScope::Appendix,
       10.0, checks::appendix_identities},
      {"c03-instance", "Shared 21-surgery of T(4,5) and T(2,11)", VerifyScope::Appendix, 1.0,
       checks::appendix_instance},
      {"c04-grid", "Pair verification grid, k <= 8, n <= 8", VerifyScope::Appendix, 60.0,
       checks::appendix_grid},
      {"c05-special", "Specializations at n = 2 and n = 1, levels -1..15", VerifyScope::Appendix,
       1.0, checks::appendix_specializations},
      {"c06-extremal", "Staircase extremality, genus 1..12", VerifyScope::Staircase, 30.0,
       checks::staircase_extremality},
      {"c07-collisions", "Staircase Delta'' collision search", VerifyScope::Staircase, 60.0,
       checks::staircase_collisions},
      {"c08-dual-route", "Second-derivative dual routes", VerifyScope::Staircase, 0.0,
       checks::dual_route_dd},
      {"c09-satellite", "Satellite exclusion sweep, genus 1..200", VerifyScope::Surgery, 10.0,
       checks::satellite_exclusion_sweep},
      {"c10-zero-surgery", "Zero-surgery comparison sweep, parameters <= 12", VerifyScope::Surgery,
       0.0, checks::zero_surgery_sweep},
      {"c11-hfk", "Bigraded staircase generators, genus 1..10", VerifyScope::Staircase, 0.0,
       checks::hfk_consistency},
      {"c12-surgery-dim", "Surgery dimension formula grid", VerifyScope::Staircase, 0.0,
       checks::surgery_dimensions},
  };
  return list;
}

inline Report run_verification(VerifyScope scope, int threads) {
  Report report;
  report.suite = "verify:" + scope_name(scope);
  for (const auto& criterion : verification_criteria()) {
    if (scope != VerifyScope::All && criterion.scope != scope) continue;
    CheckSink sink;
    criterion.run(sink, threads);
    for (auto& r : sink.records) report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace ksl
