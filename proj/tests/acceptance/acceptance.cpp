// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Every comparison is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "deloop/constructions.hpp"
#include "deloop/cycles.hpp"
#include "deloop/kernels.hpp"
#include "deloop/notation.hpp"
#include "deloop/verify.hpp"
#include "mutations.hpp"
#include "oracles.hpp"

using namespace deloop;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

std::string at(std::size_t n) { return "n = " + std::to_string(n); }

Outcome sign_agreement() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& q : all_deloopings(n))
      for (const auto& e : symmetric_group(n))
        o.require(sign_from_delooping(q, e) == sign_inversions(e), q.name() + " at " + format_cycles(e));
  return o;
}

Outcome cartier_fiber() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    auto classes = cartier_classes(LabeledSet::fin(n), Execution::parallel);
    const std::size_t half = std::size_t{1} << (pair_count(n) - 1);
    o.require(classes.carrier().size() == 2 * half, at(n) + ": wrong number of orientations");
    o.require(classes.block_count() == 2, at(n) + ": " + std::to_string(classes.block_count()) + " classes");
    for (const auto& b : classes.blocks()) o.require(b.size() == half, at(n) + ": unequal classes");
  }
  return o;
}

Outcome transposition_oddness() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    auto fin = LabeledSet::fin(n);
    auto d = canonical_orientation(fin);
    for (const auto& p : k_subsets(fin, 2)) {
      auto t = transposition_of_pair(fin, p);
      o.require(relative_inversions(d, orientation_action(t, d)) % 2 == 1, at(n) + ": " + format_cycles(t));
    }
  }
  return o;
}

Outcome parity_triangle() {
  Outcome o;
  for (std::size_t n : {3, 4})
    o.require(kernels::parallel::triangle_violations_exhaustive(n) == 0, at(n) + ": exhaustive violation");
  for (std::size_t n = 5; n <= 8; ++n) {
    auto triples = kernels::random_triples(n, 10000, n);
    o.require(kernels::parallel::triangle_violations(n, triples) == 0, at(n) + ": random violation");
  }
  return o;
}

Outcome fixed_points() {
  Outcome o;
  for (std::size_t n : {3, 4}) {
    auto tables = exhaustive_fixed_points(n);
    o.require(tables.size() == 2, at(n) + ": " + std::to_string(tables.size()) + " fixed tables");
    auto reps = FixedPointModel::representatives(LabeledSet::fin(n));
    std::vector<SignValue> sign;
    for (const auto& e : symmetric_group(n)) sign.push_back(sign_inversions(e));
    o.require(reps[0].table() == sign, at(n) + ": +1 representative is not sign");
    const auto plus = reps[0].table(), minus = reps[1].table();
    const bool both = tables.size() == 2 && ((tables[0] == plus && tables[1] == minus) ||
                                             (tables[0] == minus && tables[1] == plus));
    o.require(both, at(n) + ": fixed tables are not +sign and -sign");
  }
  return o;
}

Outcome orbits() {
  Outcome o;
  for (std::size_t n = 2; n <= 5; ++n) {
    auto p = orbit_classes(LabeledSet::fin(n));
    o.require(p.block_count() == 2, at(n) + ": " + std::to_string(p.block_count()) + " orbits");
    for (const auto& b : p.blocks()) o.require(b.size() == oracle::factorial(n), at(n) + ": orbit of wrong size");
  }
  return o;
}

Outcome simpson() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    auto p = simpson_classes(LabeledSet::fin(n), Execution::parallel);
    o.require(p.block_count() == 2, at(n) + ": " + std::to_string(p.block_count()) + " classes");
    for (const auto& b : p.blocks()) o.require(b.size() == oracle::factorial(n) / 2, at(n) + ": class of wrong size");
  }
  return o;
}

Outcome cycle_roundtrip() {
  Outcome o;
  for (std::size_t n = 2; n <= 7; ++n) {
    std::set<CycleForm> forms;
    for (const auto& e : symmetric_group(n)) {
      auto dec = cycle_decompose(e);
      o.require(recompose(dec) == e, at(n) + ": " + format_cycles(e));
      forms.insert(canonical_form(dec));
    }
    o.require(forms.size() == oracle::factorial(n), at(n) + ": canonical forms collide");
  }
  return o;
}

Outcome endofunction_roundtrip() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto fin = LabeledSet::fin(n);
    for (const auto& images : oracle::endofunctions(n)) {
      std::vector<Label> labels;
      for (auto v : images) labels.emplace_back(v);
      auto f = EndoFunction::from_labels(fin, labels);
      auto dec = decompose_endofunction(f);
      auto back = recompose_endofunction(dec);
      o.require(back == f, at(n) + ": recompose(decompose(f)) != f");
      o.require(canonical_form(decompose_endofunction(back)) == canonical_form(dec),
                at(n) + ": decompose(recompose(d)) != d");
    }
  }
  return o;
}

Outcome recognition() {
  Outcome o;
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& q : all_deloopings(n))
      o.require(check_recognition(q).all_hold(), q.name() + " at " + at(n));
  std::size_t index = 0;
  for (const auto& [family, kind] : mutations::seeded_mutants(200, 20240601)) {
    auto r = check_recognition(family);
    o.require(r.consistent(), "mutant " + std::to_string(index) + " (" + family.name() + ") splits the conditions");
    o.require(r.all_hold() == mutations::sign_like(kind), "mutant " + std::to_string(index) + " misclassified");
    ++index;
  }
  return o;
}

Outcome uniqueness() {
  Outcome o;
  Rng rng(11);
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<Bijection> squares;
    for (int i = 0; i < 50; ++i)
      squares.push_back(random_bijection(rng, random_labeled_set(rng, n), random_labeled_set(rng, n)));
    for (const auto& a : all_deloopings(n))
      for (const auto& b : all_deloopings(n)) {
        auto iso = natural_isomorphism(a, b, squares);
        const std::string pair = a.name() + " => " + b.name() + " at " + at(n);
        o.require(iso.iso.at_base()(a.base_point()) == b.base_point(), pair + ": base point moved");
        o.require(iso.squares_checked >= squares.size(), pair + ": squares skipped");
        o.require(iso.unique, pair + ": not unique");
      }
  }
  return o;
}

Outcome alternating_order() {
  Outcome o;
  for (std::size_t n = 2; n <= 7; ++n) {
    auto a = alternating_kernel(n);
    o.require(a.size() == oracle::factorial(n) / 2, at(n) + ": wrong order");
    std::vector<oracle::Images> raw;
    std::set<oracle::Images> members;
    for (const auto& e : a) {
      raw.emplace_back(e.forward().begin(), e.forward().end());
      members.insert(raw.back());
    }
    for (const auto& p : raw) {
      o.require(members.count(oracle::inverse(p)) == 1, at(n) + ": not closed under inverse");
      for (const auto& q : raw)
        if (!members.count(oracle::then(p, q))) o.require(false, at(n) + ": not closed under composition");
    }
  }
  return o;
}

Outcome label_independence() {
  Outcome o;
  Rng rng(13);
  const auto names = construction_names();
  std::size_t cases = 0;
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    auto q = make_delooping(names[trial % names.size()], 2 + (trial / names.size()) % 4);
    auto r = check_label_independence(q, rng, 1);
    cases += r.cases;
    o.require(r.passed, q.name() + ": " + r.detail);
  }
  o.require(cases >= 1000, "too few cases");
  return o;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"sign agreement, four constructions, n = 2..6", 60, sign_agreement},
      {"cartier: two equal classes of orientations, n = 2..6", 10, cartier_fiber},
      {"transpositions have odd relative inversions, n = 2..6", 5, transposition_oddness},
      {"parity triangle, exhaustive n = 3,4 and random n = 5..8", 30, parity_triangle},
      {"fixed points are exactly +sign and -sign, n = 3,4", 300, fixed_points},
      {"two orbits of size n!, n = 2..5", 5, orbits},
      {"simpson: two classes of size n!/2, n = 2..6", 10, simpson},
      {"cycle decomposition round trip, n = 2..7", 20, cycle_roundtrip},
      {"endofunction round trip, n = 2..4", 10, endofunction_roundtrip},
      {"recognition conditions co-vary, 200 mutants", 60, recognition},
      {"unique base-point-preserving natural isomorphism, n = 2..5", 30, uniqueness},
      {"alternating kernel has order n!/2 and is closed, n = 2..7", 10, alternating_order},
      {"label independence, 1000 relabeling trials", 30, label_independence},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2zu  %-60s %7.2f s (budget %g s)%s%s\n", o.passed ? "PASS" : "FAIL", i + 1, c.name, seconds,
                c.budget_seconds, seconds > c.budget_seconds ? " over budget" : "",
                o.passed ? "" : ("  " + o.detail).c_str());
    if (!o.passed) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
