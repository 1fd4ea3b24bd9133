#include <doctest.h>

#include <algorithm>
#include <functional>

#include "dgrep/errors.hpp"
#include "dgrep/generators.hpp"
#include "dgrep/grothendieck.hpp"
#include "dgrep/preadditive.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dgrep;

namespace {

/// Center and idempotents by walking every family of endomorphisms.
std::pair<std::size_t, std::size_t> brute_center(const DgCategory& a) {
  const long n = a.ring().modulus();
  const std::size_t c = a.object_count();
  std::vector<std::vector<oracle::Elem>> ends(c);
  for (std::size_t x = 0; x < c; ++x) ends[x] = oracle::all_elements(a.hom_dim(x, x), n);
  std::size_t central = 0, idempotent = 0;
  std::vector<oracle::Elem> z(c);
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x < c) {
      for (const auto& e : ends[x]) {
        z[x] = e;
        rec(x + 1);
      }
      return;
    }
    for (std::size_t s = 0; s < c; ++s)
      for (std::size_t t = 0; t < c; ++t)
        for (const auto& f : oracle::all_elements(a.hom_dim(s, t), n))
          if (oracle::compose(a, s, t, t, z[t], f, n) != oracle::compose(a, s, s, t, f, z[s], n)) return;
    ++central;
    bool idem = true;
    for (std::size_t s = 0; s < c; ++s) idem = idem && oracle::compose(a, s, s, s, z[s], z[s], n) == z[s];
    if (idem) ++idempotent;
  };
  rec(0);
  return {central, idempotent};
}

std::vector<oracle::ElemSet> as_sets(const Ideal& i) {
  std::vector<oracle::ElemSet> out;
  for (const auto& p : i.parts) out.push_back(oracle::as_set(p.elements(), i.category->ring().modulus()));
  return out;
}

std::vector<Element> basis_elements(const DgCategory& a) {
  std::vector<Element> out;
  for (std::size_t x = 0; x < a.object_count(); ++x)
    for (std::size_t y = 0; y < a.object_count(); ++y)
      for (std::size_t k = 0; k < a.hom_dim(x, y); ++k) out.push_back({x, y, unit_vector(a.hom_dim(x, y), k)});
  return out;
}

std::vector<std::vector<oracle::Sieve>> as_sieves(const DgCategory& a, const TopologyCandidate& j) {
  std::vector<std::vector<oracle::Sieve>> out(j.size());
  for (std::size_t x = 0; x < j.size(); ++x)
    for (const auto& s : j[x]) out[x].push_back(oracle::to_sieve(a, s));
  return out;
}

/// Small degree-0 categories over a finite ring.
std::vector<std::pair<std::string, DgCategoryPtr>> finite_examples(const Ring& ring) {
  std::vector<std::pair<std::string, DgCategoryPtr>> out = {
      {"ground", ground_category(ring, "*")},
      {"a2", fixtures::a2(ring)},
      {"a3", fixtures::a3(ring)},
      {"dual", fixtures::dual_numbers(ring)},
      {"a2 + ground", disjoint_union(*fixtures::a2(ring), *ground_category(ring, "*"))},
  };
  for (const std::string name : {"arrow", "z2-strict", "z2-twisted"})
    out.emplace_back(name, Grothendieck(corpus_representation(name, ring)).category_ptr());
  return out;
}

}  // namespace

TEST_CASE("preadditive check") {
  const Ring z = Ring::integers();
  CHECK(check_preadditive(*fixtures::a2(z)).passed());
  CHECK(check_preadditive(*fixtures::dual_numbers(z)).passed());
  CHECK(check_preadditive(*fixtures::epsilon_category(z)).failed("degree zero"));
}

TEST_CASE("centers of small categories") {
  const Ring z2 = Ring::modular(2);
  Center k = center(ground_category(z2, "*"));
  CHECK(k.space.cardinality() == Integer(2));
  CHECK(k.one() == Vector{1});

  // z_1 a = a z_0 forces z_0 = z_1
  Center a2 = center(fixtures::a2(z2));
  CHECK(a2.space.cardinality() == Integer(2));
  CHECK(idempotents(a2).size() == 2);

  auto two = disjoint_union(*ground_category(z2, "*"), *ground_category(z2, "*"));
  CHECK(idempotents(center(two)).size() == 4);

  auto z4 = center(ground_category(Ring::modular(4), "*"));
  CHECK(idempotents(z4) == std::vector<Vector>{{0}, {1}});

  for (const Ring& ring : {Ring::integers(), Ring::rationals()}) {
    CHECK(center(ground_category(ring, "*")).space.rank() == 1);
    CHECK(idempotents(center(ground_category(ring, "*"))).size() == 2);
    auto pair = disjoint_union(*ground_category(ring, "*"), *ground_category(ring, "*"));
    CHECK(idempotents(center(pair)).size() == 4);
    CHECK(center(fixtures::a2(ring)).space.rank() == 1);
  }
  CHECK_THROWS_AS(idempotents(center(fixtures::dual_numbers(Ring::integers()))), Refusal);
}

TEST_CASE("center and idempotent counts agree with enumeration") {
  for (const Ring& ring : {Ring::modular(2), Ring::modular(3), Ring::modular(4)})
    for (const auto& [name, a] : finite_examples(ring)) {
      Center z = center(a);
      auto [central, idem] = brute_center(*a);
      CHECK_MESSAGE(z.space.cardinality() == Integer(central), name << " over " << ring.name());
      CHECK_MESSAGE(idempotents(z).size() == idem, name << " over " << ring.name());
    }
}

TEST_CASE("the center is commutative") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(2)})
    for (const auto& [name, a] : finite_examples(ring)) {
      Center z = center(a);
      for (std::size_t i = 0; i < z.generators.size(); ++i)
        for (std::size_t j = 0; j < z.generators.size(); ++j) CHECK_MESSAGE(z.table[i][j] == z.table[j][i], name);
      for (const auto& g : z.generators) CHECK(z.multiply(z.one(), g) == g);
    }
}

TEST_CASE("ideal closure and products agree with enumeration") {
  for (const Ring& ring : {Ring::modular(2), Ring::modular(3)})
    for (const auto& [name, a] : finite_examples(ring)) {
      std::vector<std::vector<Element>> gen_sets = {{}};
      for (const auto& e : basis_elements(*a)) gen_sets.push_back({e});
      std::vector<Ideal> ideals;
      for (const auto& gens : gen_sets) {
        Ideal i = ideal_generated(a, gens);
        CHECK_MESSAGE(check_ideal(i).passed(), name);
        CHECK_MESSAGE(as_sets(i) == oracle::ideal_closure(*a, gens), name);
        ideals.push_back(std::move(i));
      }
      CHECK(ideals[0] == zero_ideal(a));
      for (const auto& i : ideals)
        for (const auto& k : {ideals.back(), ideals[1], whole_ideal(a)}) {
          Ideal p = ideal_product(i, k);
          CHECK_MESSAGE(as_sets(p) == oracle::ideal_product(*a, as_sets(i), as_sets(k)), name);
        }
      for (const auto& i : ideals)
        CHECK_MESSAGE(is_idempotent(i) == (as_sets(i) == oracle::ideal_product(*a, as_sets(i), as_sets(i))), name);
    }
}

TEST_CASE("idempotent and nilpotent ideals") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(2)}) {
    auto a = fixtures::a2(ring);
    CHECK(is_idempotent(zero_ideal(a)));
    CHECK(is_idempotent(whole_ideal(a)));
    std::vector<Element> ids;
    for (std::size_t x = 0; x < 2; ++x) ids.push_back({x, x, a->identity(x)});
    CHECK(ideal_generated(a, ids) == whole_ideal(a));
    Ideal arrow = ideal_generated(a, {{0, 1, {1}}});
    CHECK(arrow.at(0, 1).is_whole());
    CHECK(arrow.at(0, 0).is_zero());
    CHECK(ideal_product(arrow, arrow) == zero_ideal(a));
    CHECK_FALSE(is_idempotent(arrow));
    // the ideal of t in k[t]/(t^2)
    auto d = fixtures::dual_numbers(ring);
    CHECK_FALSE(is_idempotent(ideal_generated(d, {{0, 0, {0, 1}}})));
  }
  // 1_0 without a = a o 1_0
  const Ring z = Ring::integers();
  Ideal open{fixtures::a2(z), {Submodule::whole(z, 1), Submodule(z, 1), Submodule(z, 0), Submodule(z, 1)}};
  CHECK_FALSE(check_ideal(open).passed());
}

TEST_CASE("traces of representables") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(2)}) {
    auto a = fixtures::a2(ring);
    DgModule p0 = representable(a, 0), p1 = representable(a, 1);
    // maps P_0 -> P_1 pick out the arrow, maps P_1 -> P_0 are zero
    SubmoduleFamily t = trace({p0}, p1);
    CHECK(t[0].is_whole());
    CHECK(t[1].is_zero());
    SubmoduleFamily u = trace({p1}, p0);
    CHECK(u[0].is_zero());
    CHECK(u[1].is_zero());
    SubmoduleFamily all = trace({p0, p1}, p1);
    CHECK(all[0].is_whole());
    CHECK(all[1].is_whole());

    CHECK(trace_ideal({p0, p1}, a) == whole_ideal(a));
    Ideal t0 = trace_ideal({p0}, a);
    CHECK(t0 == ideal_generated(a, {{0, 0, {1}}}));
    CHECK(is_idempotent(t0));
    Ideal t1 = trace_ideal({p1}, a);
    CHECK(t1 == ideal_generated(a, {{1, 1, {1}}}));
    CHECK(is_idempotent(t1));
  }
  for (const auto& [name, a] : finite_examples(Ring::modular(2)))
    for (std::size_t x = 0; x < a->object_count(); ++x) {
      Ideal t = trace_ideal({representable(a, x)}, a);
      CHECK_MESSAGE(is_idempotent(t), name);
      CHECK_MESSAGE(t == ideal_generated(a, {{x, x, a->identity(x)}}), name);
    }
}

TEST_CASE("subfunctors") {
  const Ring z2 = Ring::modular(2);
  for (const auto& [name, a] : finite_examples(z2)) {
    for (std::size_t x = 0; x < a->object_count(); ++x) {
      auto subs = all_subfunctors(*a, x);
      auto sieves = oracle::all_sieves(*a, x);
      CHECK_MESSAGE(subs.size() == sieves.size(), name);
      for (const auto& s : subs) {
        CHECK(is_subfunctor(*a, s));
        CHECK(std::find(sieves.begin(), sieves.end(), oracle::to_sieve(*a, s)) != sieves.end());
      }
      CHECK(std::find(subs.begin(), subs.end(), full_subfunctor(*a, x)) != subs.end());
      CHECK(std::find(subs.begin(), subs.end(), zero_subfunctor(*a, x)) != subs.end());
      for (std::size_t y = 0; y < a->object_count(); ++y)
        for (const auto& f : Submodule::whole(z2, a->hom_dim(y, x)).elements()) {
          const auto& s = subs.back();
          Subfunctor p = pullback(*a, s, y, f);
          CHECK(is_subfunctor(*a, p));
          CHECK(oracle::to_sieve(*a, p) == oracle::pull_back(*a, x, oracle::to_sieve(*a, s), y, oracle::to_elem(f, 2)));
        }
    }
  }
  auto a = fixtures::a2(z2);
  Subfunctor arrow = generated_subfunctor(*a, 1, {{0, {1}}});
  CHECK(arrow.parts[0].is_whole());
  CHECK(arrow.parts[1].is_zero());
  CHECK(all_subfunctors(*a, 1).size() == 3);
}

TEST_CASE("maximal and trivial topologies pass, single deletions match the oracle") {
  const Ring z2 = Ring::modular(2);
  for (const auto& [name, a] : finite_examples(z2)) {
    for (const auto& j : {maximal_topology(*a), trivial_topology(*a)}) {
      CHECK_MESSAGE(check_linear_topology(*a, j).passed(), name);
      CHECK_MESSAGE(oracle::is_topology(*a, as_sieves(*a, j)), name);
    }
    // On one object, dropping the zero subfunctor leaves the trivial topology.
    TopologyCandidate j = maximal_topology(*a);
    for (std::size_t x = 0; x < j.size(); ++x)
      for (std::size_t k = 0; k < j[x].size(); ++k) {
        TopologyCandidate mutant = j;
        mutant[x].erase(mutant[x].begin() + static_cast<std::ptrdiff_t>(k));
        Report r = check_linear_topology(*a, mutant);
        CHECK_MESSAGE(r.passed() == oracle::is_topology(*a, as_sieves(*a, mutant)), name);
        if (name == "a2") CHECK(!r.passed());
        if (!r.passed()) CHECK((r.failed("maximality") || r.failed("stability") || r.failed("local character")));
      }
  }
}

TEST_CASE("every candidate on A2 over Z/2 is judged like the oracle") {
  const Ring z2 = Ring::modular(2);
  auto a = fixtures::a2(z2);
  std::vector<std::vector<Subfunctor>> subs = {all_subfunctors(*a, 0), all_subfunctors(*a, 1)};
  std::size_t topologies = 0;
  for (unsigned m0 = 0; m0 < (1U << subs[0].size()); ++m0)
    for (unsigned m1 = 0; m1 < (1U << subs[1].size()); ++m1) {
      TopologyCandidate j(2);
      for (std::size_t k = 0; k < subs[0].size(); ++k)
        if (m0 & (1U << k)) j[0].push_back(subs[0][k]);
      for (std::size_t k = 0; k < subs[1].size(); ++k)
        if (m1 & (1U << k)) j[1].push_back(subs[1][k]);
      const bool expected = oracle::is_topology(*a, as_sieves(*a, j));
      CHECK(check_linear_topology(*a, j).passed() == expected);
      if (expected) ++topologies;
    }
  CHECK(topologies >= 2);
}

TEST_CASE("torsion splitting from central idempotents") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(2)}) {
    auto a = fixtures::a2(ring);
    Center z = center(a);
    std::vector<DgModule> samples = {representable(a, 0), representable(a, 1)};
    samples.push_back(direct_sum(samples[0], samples[1]));
    CHECK(torsion_split(z, z.one(), samples).passed());
    CHECK(torsion_split(z, Vector(z.ambient), samples).passed());
    for (const Ideal& i : {zero_ideal(a), whole_ideal(a), trace_ideal({samples[0]}, a)}) {
      Report r = torsion_split(i, samples);
      CHECK(r.passed());
    }
    CHECK_THROWS_AS(torsion_split(ideal_generated(a, {{0, 1, {1}}}), samples), Refusal);

    auto two = disjoint_union(*a, *ground_category(ring, "*"));
    Center zz = center(two);
    std::vector<DgModule> ss;
    for (std::size_t x = 0; x < 3; ++x) ss.push_back(representable(two, x));
    ss.push_back(direct_sum(ss[1], ss[2]));
    for (const auto& e : idempotents(zz)) CHECK(torsion_split(zz, e, ss).passed());
    Vector left(zz.ambient);
    left[zz.offsets[0]] = 1;
    left[zz.offsets[1]] = 1;
    CHECK(torsion_split(zz, left, ss).passed());
    Vector half(zz.ambient);
    half[zz.offsets[0]] = 1;
    CHECK_THROWS_AS(torsion_split(zz, half, ss), Refusal);
    Vector twice = z.one();
    for (auto& v : twice) v = ring.reduce(2 * v);
    if (ring == Ring::integers()) CHECK_THROWS_AS(torsion_split(z, twice, samples), Refusal);
  }
}

TEST_CASE("torsion parts of sample modules") {
  const Ring z2 = Ring::modular(2);
  auto a = fixtures::a2(z2);
  DgModule p1 = representable(a, 1);
  Ideal arrow = ideal_generated(a, {{0, 1, {1}}});
  SubmoduleFamily t = torsion_part(p1, arrow);
  CHECK(t[0].is_whole());
  CHECK(t[1].is_zero());
  SubmoduleFamily w = torsion_part(p1, whole_ideal(a));
  CHECK(w[0].is_whole());
  CHECK(w[1].is_whole());
}
