#include "deloop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "deloop/constructions.hpp"
#include "deloop/kernels.hpp"
#include "deloop/notation.hpp"

namespace deloop {

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> construction_names() { return {"fixed", "orbit", "simpson", "cartier"}; }

TwoElementFamily make_delooping(const std::string& name, std::size_t n) {
  if (name == "fixed") return fixed_point_delooping(n);
  if (name == "orbit") return orbit_delooping(n);
  if (name == "simpson") return simpson_delooping(n);
  if (name == "cartier") return cartier_delooping(n);
  throw Error(ErrorKind::ParseError, "unknown construction '" + name + "'");
}

namespace {

std::string describe(const Bijection& e) {
  std::ostringstream out;
  out << e;
  return out.str();
}

void fail(CheckResult& r, const std::string& detail) {
  if (r.passed) r.detail = detail;
  r.passed = false;
}

// Random elements of D_X for each model.
Orientation random_element(CartierModel, Rng& rng, const LabeledSet& x) {
  std::uniform_int_distribution<std::uint64_t> mask(0, full_mask(x.size()));
  return Orientation::from_bits(x, mask(rng));
}
Bijection random_element(SimpsonModel, Rng& rng, const LabeledSet& x) {
  return random_bijection(rng, LabeledSet::fin(x.size()), x);
}
OrbitElement random_element(OrbitModel, Rng& rng, const LabeledSet& x) {
  return {random_bijection(rng, LabeledSet::fin(x.size()), x), SignValue::from_fin2(rng() & 1u)};
}
FixedPointElement random_element(FixedPointModel, Rng& rng, const LabeledSet& x) {
  return {random_bijection(rng, LabeledSet::fin(x.size()), x), SignValue::from_fin2(rng() & 1u)};
}

/// Calls f(Model{}) for the model behind a named construction; false when
/// the family is not one of the four.
template <class F>
bool with_model(const std::string& name, F&& f) {
  if (name == "cartier") return f(CartierModel{}), true;
  if (name == "simpson") return f(SimpsonModel{}), true;
  if (name == "orbit") return f(OrbitModel{}), true;
  if (name == "fixed") return f(FixedPointModel{}), true;
  return false;
}

template <class Model>
bool square_commutes(const TwoElementFamily& q, const Bijection& e, const typename Model::Element& u) {
  const auto below = Model::project(e.codomain(), Model::transport(e, u));
  return below == q.action(e).image_index(Model::project(e.domain(), u));
}

}  // namespace

CheckResult check_functor_laws(const TwoElementFamily& q, Rng& rng, std::size_t random_pairs) {
  CheckResult r{"functor_laws"};
  const std::size_t n = q.arity();
  const auto fin = LabeledSet::fin(n);
  for (std::size_t i = 0; i < 50; ++i) {
    const auto x = i == 0 ? fin : random_labeled_set(rng, n);
    ++r.cases;
    if (!q.action(Bijection::identity(x)).is_identity()) fail(r, "action(id) != id on " + describe(Bijection::identity(x)));
  }
  if (n <= 4) {
    const auto group = symmetric_group(n);
    for (const auto& e : group)
      for (const auto& f : group) {
        ++r.cases;
        if (!(q.action(after(f, e)) == after(q.action(f), q.action(e))))
          fail(r, "e = " + format_one_line(e) + ", f = " + format_one_line(f));
      }
  } else {
    for (std::size_t i = 0; i < random_pairs; ++i) {
      const auto x = random_labeled_set(rng, n);
      const auto y = random_labeled_set(rng, n);
      const auto z = random_labeled_set(rng, n);
      const auto e = random_bijection(rng, x, y);
      const auto f = random_bijection(rng, y, z);
      ++r.cases;
      if (!(q.action(after(f, e)) == after(q.action(f), q.action(e))))
        fail(r, "e = " + describe(e) + ", f = " + describe(f));
    }
  }
  return r;
}

CheckResult check_fiber_cardinality(const TwoElementFamily& q, Rng& rng, std::size_t sets) {
  CheckResult r{"fiber_cardinality"};
  for (std::size_t i = 0; i < sets; ++i) {
    const auto x = random_labeled_set(rng, q.arity());
    ++r.cases;
    if (q.fiber(x).size() != 2) fail(r, "fiber has the wrong size");
  }
  return r;
}

CheckResult check_transposition_swap(const TwoElementFamily& q) {
  CheckResult r{"transposition_swap"};
  const auto fin = LabeledSet::fin(q.arity());
  const auto swap = swap_two(q.fiber(fin));
  for (const auto& pair : k_subsets(fin, 2)) {
    const auto t = transposition_of_pair(fin, pair);
    ++r.cases;
    if (!(q.action(t) == swap)) fail(r, "transposition " + format_cycles(t) + " does not swap");
  }
  return r;
}

CheckResult check_quotient_naturality(const TwoElementFamily& q, Rng& rng, std::size_t random_bijections) {
  CheckResult r{"quotient_naturality"};
  const std::size_t n = q.arity();
  const bool known = with_model(q.name(), [&](auto model) {
    using Model = decltype(model);
    auto check = [&](const Bijection& e) {
      auto elements = Model::representatives(e.domain());
      std::vector<typename Model::Element> all(elements.begin(), elements.end());
      for (int i = 0; i < 4; ++i) all.push_back(random_element(model, rng, e.domain()));
      for (const auto& u : all) {
        ++r.cases;
        if (!square_commutes<Model>(q, e, u)) fail(r, "square over " + describe(e));
      }
    };
    if (n <= 5)
      for (const auto& e : symmetric_group(n)) check(e);
    for (std::size_t i = 0; i < random_bijections; ++i) {
      const auto x = random_labeled_set(rng, n);
      check(random_bijection(rng, x, random_labeled_set(rng, n)));
    }
  });
  if (!known) {
    r.skipped = true;
    r.detail = "no quotient model for " + q.name();
  }
  return r;
}

CheckResult check_label_independence(const TwoElementFamily& q, Rng& rng, std::size_t trials) {
  CheckResult r{"label_independence"};
  const std::size_t n = q.arity();
  for (std::size_t i = 0; i < trials; ++i) {
    const auto x = random_labeled_set(rng, n);
    const auto y = random_labeled_set(rng, n);
    const auto g = random_bijection(rng, x, x);
    const auto relabel = random_bijection(rng, x, y);
    // g moved to Y along the relabeling.
    const auto moved = after(relabel, after(g, invert(relabel)));
    const auto a = q.action(relabel);
    ++r.cases;
    if (!(q.action(moved) == after(a, after(q.action(g), invert(a)))))
      fail(r, "g = " + describe(g) + ", relabel = " + describe(relabel));
    with_model(q.name(), [&](auto model) {
      using Model = decltype(model);
      const auto u = random_element(model, rng, x);
      ++r.cases;
      if (!square_commutes<Model>(q, relabel, u)) fail(r, "element square over " + describe(relabel));
    });
  }
  return r;
}

CheckResult check_sign_agreement(const TwoElementFamily& q) {
  CheckResult r{"sign_agreement"};
  r.cases = symmetric_group(q.arity()).size();
  if (auto bad = kernels::parallel::sign_disagreements(q))
    fail(r, std::to_string(bad) + " permutations disagree");
  return r;
}

CheckResult check_recognition_holds(const TwoElementFamily& q) {
  CheckResult r{"recognition"};
  const auto report = check_recognition(q);
  r.cases = 3;
  if (!report.all_hold()) {
    std::ostringstream msg;
    msg << "conditions " << report.condition3_surjective << report.condition4_transpositions_swap
        << report.condition5_sign_matches;
    if (report.counterexample) msg << ", counterexample " << format_cycles(*report.counterexample);
    fail(r, msg.str());
  }
  return r;
}

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

CheckResult two_equal_blocks(std::string name, const Partition& p, std::size_t block_size) {
  CheckResult r{std::move(name)};
  r.cases = p.carrier().size();
  if (p.block_count() != 2) {
    fail(r, std::to_string(p.block_count()) + " classes");
    return r;
  }
  for (const auto& b : p.blocks())
    if (b.size() != block_size) fail(r, "class of size " + std::to_string(b.size()));
  return r;
}

void cartier_checks(VerifyReport& report, Rng& rng) {
  const std::size_t n = report.n;
  const auto fin = LabeledSet::fin(n);
  const auto d = canonical_orientation(fin);

  const auto classes = cartier_classes(fin, Execution::parallel);
  auto c = two_equal_blocks("cartier_classes", classes, std::size_t{1} << (pair_count(n) - 1));
  for (std::size_t m = 0; m < classes.carrier().size(); ++m) {
    const auto u = Orientation::from_bits(fin, m);
    const bool with_d = classes.block_of_index(m) == classes.block_of(Label(static_cast<std::uint32_t>(d.bits())));
    if (CartierModel::project(fin, u) != (with_d ? 0u : 1u)) fail(c, "projection disagrees at mask " + std::to_string(m));
  }
  report.checks.push_back(c);

  CheckResult bridge{"bridge_identity"};
  for (const auto& e : symmetric_group(n)) {
    ++bridge.cases;
    if (relative_inversions(d, orientation_action(e, d)) % 2 != inversion_count(e) % 2)
      fail(bridge, "e = " + format_one_line(e));
  }
  report.checks.push_back(bridge);

  CheckResult odd{"transposition_oddness"};
  for (const auto& pair : k_subsets(fin, 2)) {
    const auto t = transposition_of_pair(fin, pair);
    ++odd.cases;
    if (relative_inversions(d, orientation_action(t, d)) % 2 != 1) fail(odd, "transposition " + format_cycles(t));
  }
  report.checks.push_back(odd);

  CheckResult triangle{"parity_triangle"};
  if (n <= 4) {
    const auto states = full_mask(n) + 1;
    triangle.cases = states * states * states;
    if (auto bad = kernels::parallel::triangle_violations_exhaustive(n))
      fail(triangle, std::to_string(bad) + " violating triples");
  } else {
    const auto triples = kernels::random_triples(n, 10000, rng());
    triangle.cases = triples.size();
    if (auto bad = kernels::parallel::triangle_violations(n, triples))
      fail(triangle, std::to_string(bad) + " violating triples");
  }
  report.checks.push_back(triangle);
}

void simpson_checks(VerifyReport& report) {
  const std::size_t n = report.n;
  const auto fin = LabeledSet::fin(n);
  const auto classes = simpson_classes(fin, Execution::parallel);
  auto c = two_equal_blocks("simpson_classes", classes, factorial(n) / 2);
  const auto maps = enumerate_bijections(fin, fin);
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (SimpsonModel::project(fin, maps[k]) != (classes.block_of_index(k) == classes.block_of_index(0) ? 0u : 1u))
      fail(c, "projection disagrees at " + format_one_line(maps[k]));
  report.checks.push_back(c);
}

void orbit_checks(VerifyReport& report) {
  const std::size_t n = report.n;
  const auto fin = LabeledSet::fin(n);
  const auto orbits = orbit_classes(fin);
  auto c = two_equal_blocks("orbit_classes", orbits, factorial(n));
  for (std::size_t code = 0; code < orbits.carrier().size(); ++code) {
    const auto b = decode_orbit_element(fin, Label(static_cast<std::uint32_t>(code)));
    // (h, s) lies in the orbit of (id, sign(h) s).
    const auto normal = static_cast<std::uint32_t>((sign_inversions(b.chart) * b.sign).to_fin2());
    if (orbits.block_of_index(code) != orbits.block_of_index(normal))
      fail(c, "(h, s) not in the orbit of (id, sign(h) s) for h = " + format_one_line(b.chart));
    if (OrbitModel::project(fin, b) != (orbits.block_of_index(code) == orbits.block_of_index(0) ? 0u : 1u))
      fail(c, "projection disagrees for h = " + format_one_line(b.chart));
  }
  report.checks.push_back(c);
}

void fixed_checks(VerifyReport& report, Rng& rng, bool exhaustive) {
  const std::size_t n = report.n;
  const auto fin = LabeledSet::fin(n);

  CheckResult plus{"plus_fixed_point_is_sign"};
  const auto reps = FixedPointModel::representatives(fin);
  for (const auto& alpha : symmetric_group(n)) {
    ++plus.cases;
    if (reps[0].evaluate(alpha) != sign_inversions(alpha)) fail(plus, "alpha = " + format_one_line(alpha));
    if (reps[1].evaluate(alpha) != -sign_inversions(alpha)) fail(plus, "alpha = " + format_one_line(alpha));
  }
  report.checks.push_back(plus);

  CheckResult eq{"equivariance"};
  if (n > 5) {
    eq.skipped = true;
    eq.detail = "tables of S_n x S_n are checked for n <= 5";
  } else {
    const auto group = symmetric_group(n);
    for (const auto& x : {fin, random_labeled_set(rng, n)}) {
      const auto maps = enumerate_bijections(fin, x);
      for (const auto& f : FixedPointModel::representatives(x))
        for (const auto& alpha : group) {
          const auto inv = invert(alpha);
          for (const auto& h : maps) {
            ++eq.cases;
            if (f.evaluate(after(h, inv)) != sign_inversions(alpha) * f.evaluate(h))
              fail(eq, "alpha = " + format_one_line(alpha) + ", h = " + describe(h));
          }
        }
    }
  }
  report.checks.push_back(eq);

  if (exhaustive) {
    CheckResult ex{"exhaustive_fixed_points"};
    if (n > 4) {
      ex.skipped = true;
      ex.detail = "2^(n!) tables are only enumerated for n <= 4";
    } else {
      const auto tables = exhaustive_fixed_points(n);
      ex.cases = std::size_t{1} << factorial(n);
      const auto plus_table = reps[0].table();
      const auto minus_table = reps[1].table();
      const bool both = tables.size() == 2 && std::find(tables.begin(), tables.end(), plus_table) != tables.end() &&
                        std::find(tables.begin(), tables.end(), minus_table) != tables.end();
      if (!both)
        fail(ex, std::to_string(tables.size()) + " fixed tables, expected +sign and -sign");
    }
    report.checks.push_back(ex);
  }
}

}  // namespace

std::vector<VerifyReport> run_verify(const VerifyOptions& options) {
  if (options.n < kVerifyMinN || options.n > kVerifyMaxN) {
    std::ostringstream msg;
    msg << "verify supports " << kVerifyMinN << " <= n <= " << kVerifyMaxN;
    throw Error(ErrorKind::SizeGuard, msg.str());
  }
  std::vector<std::string> names;
  if (options.construction == "all") {
    names = construction_names();
  } else {
    make_delooping(options.construction, options.n);  // validates the name
    names = {options.construction};
  }

  std::vector<VerifyReport> reports;
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    const auto q = make_delooping(names[k], options.n);
    Rng rng(options.seed + k);
    VerifyReport report{names[k], options.n, options.seed};
    report.checks.push_back(check_functor_laws(q, rng));
    report.checks.push_back(check_fiber_cardinality(q, rng));
    report.checks.push_back(check_transposition_swap(q));
    report.checks.push_back(check_quotient_naturality(q, rng));
    report.checks.push_back(check_label_independence(q, rng, 200));
    report.checks.push_back(check_sign_agreement(q));
    report.checks.push_back(check_recognition_holds(q));
    if (names[k] == "cartier") cartier_checks(report, rng);
    if (names[k] == "simpson") simpson_checks(report);
    if (names[k] == "orbit") orbit_checks(report);
    if (names[k] == "fixed") fixed_checks(report, rng, options.exhaustive_fixed);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    reports.push_back(std::move(report));
  }

  if (names.size() > 1) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(options.seed + names.size());
    VerifyReport cross{"uniqueness", options.n, options.seed};
    std::vector<Bijection> squares;
    for (int i = 0; i < 50; ++i) {
      const auto x = i % 5 == 0 ? LabeledSet::fin(options.n) : random_labeled_set(rng, options.n);
      squares.push_back(random_bijection(rng, x, random_labeled_set(rng, options.n)));
    }
    for (const auto& a : names)
      for (const auto& b : names) {
        CheckResult r{"natural_isomorphism " + a + " => " + b};
        try {
          const auto iso = natural_isomorphism(make_delooping(a, options.n), make_delooping(b, options.n), squares);
          r.cases = iso.squares_checked;
          if (!iso.unique) fail(r, "a second natural family survived the squares");
        } catch (const Error& e) {
          fail(r, e.what());
        }
        cross.checks.push_back(r);
      }
    cross.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    reports.push_back(std::move(cross));
  }
  return reports;
}

}  // namespace deloop
