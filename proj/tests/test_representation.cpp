#include <doctest.h>

#include "dgrep/errors.hpp"
#include "dgrep/representation.hpp"
#include "fixtures.hpp"

using namespace dgrep;

namespace {

FiniteCategory cyclic_two() { return FiniteCategory({"*"}, {{"1", 0, 0}, {"s", 0, 0}}, {0}, {{{1, 1}, 0}}); }

/// The twisted Z/2 representation with mu_{s,s} given per object.
RepresentationPtr twisted(const Ring& ring, long at_x, long at_y) {
  auto base = corpus_representation("z2-twisted", ring);
  CoherenceData data = strict_coherence(base->base, base->fibers, base->functors);
  data.mu[{1, 1}] = {{ring.reduce(Scalar(at_x))}, {ring.reduce(Scalar(at_y))}};
  data.theta[{1, 1}] = data.mu[{1, 1}];
  return std::make_shared<DgRepresentation>(
      make_representation(ring, base->base, base->fibers, base->functors, std::move(data)));
}

}  // namespace

TEST_CASE("finite base categories") {
  CHECK(check_finite_category(FiniteCategory({"*"}, {{"1", 0, 0}}, {0}, {})).passed());
  FiniteCategory arrow({"0", "1"}, {{"1_0", 0, 0}, {"1_1", 1, 1}, {"a", 0, 1}}, {0, 1}, {});
  CHECK(check_finite_category(arrow).passed());
  CHECK(arrow.compose(2, 0) == std::optional<std::size_t>(2));
  CHECK_FALSE(arrow.compose(0, 2).has_value());
  CHECK(check_finite_category(cyclic_two()).passed());

  // s o s left undefined
  FiniteCategory partial({"*"}, {{"1", 0, 0}, {"s", 0, 0}}, {0}, {});
  CHECK(check_finite_category(partial).failed("total"));
  // s o s = s is total but s is then idempotent, still a category
  FiniteCategory idem({"*"}, {{"1", 0, 0}, {"s", 0, 0}}, {0}, {{{1, 1}, 1}});
  CHECK(check_finite_category(idem).passed());
}

TEST_CASE("corpus representations satisfy the coherence conditions") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(2), Ring::modular(3), Ring::rationals()})
    for (const auto& [name, rep] : fixtures::corpus(ring)) {
      Report r = check_representation(*rep);
      CHECK_MESSAGE(r.passed(), name << " over " << ring.name() << "\n" << r.text());
      CHECK_MESSAGE(is_strict(*rep) == (name != "z2-twisted" || ring == Ring::modular(2)), name);
    }
}

TEST_CASE("twisted coherence: mu_{s,s} = -1 passes, negating one component fails") {
  const Ring z = Ring::integers();
  CHECK(check_representation(*twisted(z, -1, -1)).passed());
  CHECK(check_representation(*twisted(z, 1, 1)).passed());
  Report r = check_representation(*twisted(z, -1, 1));
  CHECK(r.failed("associativity coherence"));
  CHECK(r.failures()[0].detail.find("(s,s,s)") != std::string::npos);
  // Over Z/2 the sign disappears and the mixed choice is coherent.
  CHECK(check_representation(*twisted(Ring::modular(2), -1, 1)).passed());
}

TEST_CASE("unit coherence failures") {
  const Ring q = Ring::rationals();
  auto base = corpus_representation("trivial", q);
  CoherenceData data = strict_coherence(base->base, base->fibers, base->functors);
  data.delta[0] = {{2}};
  data.eta[0] = {{Scalar(1, 2)}};
  auto bad = make_representation(q, base->base, base->fibers, base->functors, data);
  CHECK(check_representation(bad).failed("unit coherence"));
  data.mu[{0, 0}] = {{Scalar(1, 2)}};
  data.theta[{0, 0}] = {{2}};
  auto good = make_representation(q, base->base, base->fibers, base->functors, data);
  CHECK(check_representation(good).passed());
  CHECK_FALSE(is_strict(good));
}

TEST_CASE("missing composition data is a structural error") {
  const Ring z = Ring::integers();
  auto base = corpus_representation("z2-strict", z);
  CoherenceData data = strict_coherence(base->base, base->fibers, base->functors);
  data.mu.erase({1, 1});
  data.theta.erase({1, 1});
  CHECK_THROWS_AS(make_representation(z, base->base, base->fibers, base->functors, data), StructuralError);
}

TEST_CASE("for strict data the check reduces to functors and on-the-nose functoriality") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(2)})
    for (const auto& [name, rep] : fixtures::corpus(ring)) {
      if (!is_strict(*rep)) continue;
      bool functors_ok = true;
      for (const auto& f : rep->functors) functors_ok = functors_ok && check_dg_functor(*f).passed();
      bool functorial = true;
      const FiniteCategory& c = rep->base;
      for (std::size_t b = 0; b < c.morphism_count(); ++b)
        for (std::size_t a = 0; a < c.morphism_count(); ++a) {
          auto ba = c.compose(b, a);
          if (!ba) continue;
          DgFunctor composite = compose(rep->functor(b), rep->functor(a));
          functorial = functorial && composite.object_map == rep->functor(*ba).object_map &&
                       composite.hom_maps == rep->functor(*ba).hom_maps;
        }
      CHECK_MESSAGE(check_representation(*rep).passed() == (functors_ok && functorial), name);
    }
}

TEST_CASE("whiskering") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(3)})
    for (const auto& [name, rep] : fixtures::corpus(ring))
      for (const auto& [ba, mu] : rep->mu)
        for (const auto& f : rep->functors) {
          if (f->source != mu.source->target) continue;
          DgNatIso left = whisker_left(f, mu);
          CHECK_MESSAGE(check_dg_nat_iso(left).passed(), name);
          for (std::size_t x = 0; x < left.components.size(); ++x)
            CHECK(left.components[x] == f->apply(mu.source->operator()(x), mu.target->operator()(x), mu.components[x]));
          if (f->target != mu.source->source) continue;
          DgNatIso right = whisker_right(mu, f);
          CHECK_MESSAGE(check_dg_nat_iso(right).passed(), name);
          for (std::size_t x = 0; x < right.components.size(); ++x)
            CHECK(right.components[x] == mu.components[(*f)(x)]);
        }
}
