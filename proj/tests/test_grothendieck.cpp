#include <doctest.h>

#include "dgrep/grothendieck.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dgrep;

namespace {

RepresentationPtr strict_rep(const Ring& ring, FiniteCategory base, std::vector<DgCategoryPtr> fibers,
                             std::vector<DgFunctorPtr> functors) {
  CoherenceData data = strict_coherence(base, fibers, functors);
  return std::make_shared<DgRepresentation>(
      make_representation(ring, std::move(base), std::move(fibers), std::move(functors), std::move(data)));
}

FiniteCategory one_object() { return FiniteCategory({"*"}, {{"1", 0, 0}}, {0}, {}); }
FiniteCategory cyclic_two() { return FiniteCategory({"*"}, {{"1", 0, 0}, {"s", 0, 0}}, {0}, {{{1, 1}, 0}}); }

/// Z/2 acting on k[t]/(t^2) by t -> -t.
RepresentationPtr sign_on_dual_numbers(const Ring& ring) {
  DgCategoryPtr d = fixtures::dual_numbers(ring);
  auto id = std::make_shared<DgFunctor>(identity_functor(d));
  auto flip = std::make_shared<DgFunctor>(identity_functor(d));
  flip->hom_maps[0](1, 1) = ring.reduce(Scalar(-1));
  return strict_rep(ring, cyclic_two(), {d}, {id, flip});
}

/// Trivial base with delta = 2 and mu = 1/2 on the ground ring.
RepresentationPtr scaled_unit(const Ring& ring) {
  auto base = corpus_representation("trivial", ring);
  CoherenceData data = strict_coherence(base->base, base->fibers, base->functors);
  data.delta[0] = {{ring.reduce(Scalar(2))}};
  data.eta[0] = {{ring.reduce(Scalar(1, 2))}};
  data.mu[{0, 0}] = {{ring.reduce(Scalar(1, 2))}};
  data.theta[{0, 0}] = {{ring.reduce(Scalar(2))}};
  return std::make_shared<DgRepresentation>(
      make_representation(ring, base->base, base->fibers, base->functors, std::move(data)));
}

}  // namespace

TEST_CASE("Gr(R) is a dg-category for every corpus representation") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(2), Ring::modular(4), Ring::rationals()})
    for (const auto& [name, rep] : fixtures::corpus(ring)) {
      Grothendieck gr(rep);
      Report r = check_dg_category(gr.category());
      CHECK_MESSAGE(r.passed(), name << " over " << ring.name() << "\n" << r.text());
    }
}

TEST_CASE("trivial base reproduces the fiber") {
  const Ring z = Ring::integers();
  auto eps = fixtures::epsilon_category(z);
  auto rep = strict_rep(z, one_object(), {eps}, {std::make_shared<DgFunctor>(identity_functor(eps))});
  Grothendieck gr(rep);
  const DgCategory& g = gr.category();
  REQUIRE(g.object_count() == 1);
  CHECK(g.hom(0, 0).carrier().degrees() == eps->hom(0, 0).carrier().degrees());
  CHECK(g.hom(0, 0).carrier().label(1) == "1/e");
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) CHECK(g.basis_composite(0, 0, 0, a, b) == eps->basis_composite(0, 0, 0, a, b));
  CHECK(g.basis_composite(0, 0, 0, 1, 1) == Vector{0, 0});
  CHECK(check_dg_category(g).passed());
}

TEST_CASE("hom ranks of the arrow and Z/2 examples") {
  const Ring z = Ring::integers();
  Grothendieck arrow(corpus_representation("arrow", z));
  const std::size_t p = arrow.index(0, 0), q = arrow.index(1, 0);
  CHECK(arrow.category().object(p) == "0:p");
  CHECK(arrow.category().hom_dim(p, p) == 1);
  CHECK(arrow.category().hom_dim(q, q) == 1);
  CHECK(arrow.category().hom_dim(p, q) == 1);
  CHECK(arrow.category().hom_dim(q, p) == 0);

  Grothendieck group(corpus_representation("z2-strict", z));
  REQUIRE(group.object_count() == 1);
  CHECK(group.category().hom_dim(0, 0) == 2);
  CHECK(group.category().identity(0) == Vector{1, 0});
  // s o s = 1: the group algebra k[Z/2]
  CHECK(group.category().basis_composite(0, 0, 0, 1, 1) == Vector{1, 0});

  Grothendieck tw(corpus_representation("z2-twisted", z));
  const std::size_t x = tw.index(0, 0), y = tw.index(0, 1);
  // s/1x o s/1y picks up theta_{s,s} = -1
  CHECK(tw.category().basis_composite(x, y, x, 0, 0) == Vector{-1});
}

TEST_CASE("hom ranks are sums over base morphisms") {
  for (const auto& [name, rep] : fixtures::corpus(Ring::integers())) {
    Grothendieck gr(rep);
    for (std::size_t X = 0; X < gr.object_count(); ++X)
      for (std::size_t Y = 0; Y < gr.object_count(); ++Y) {
        const GrObject a = gr.object(X), b = gr.object(Y);
        std::map<int, std::size_t> expected;
        for (std::size_t m : rep->base.hom(a.i, b.i)) {
          const Complex& h = rep->fiber(b.i).hom(rep->functor(m)(a.x), b.x);
          for (int d : h.carrier().support()) expected[d] += h.carrier().rank(d);
        }
        for (int d = -3; d <= 3; ++d) {
          const std::size_t want = expected.count(d) ? expected[d] : 0;
          CHECK_MESSAGE(gr.category().hom(X, Y).carrier().rank(d) == want, name);
        }
      }
  }
}

TEST_CASE("identities are eta at the unit morphism and are closed") {
  for (const auto& [name, rep] : fixtures::corpus(Ring::integers())) {
    Grothendieck gr(rep);
    for (std::size_t X = 0; X < gr.object_count(); ++X) {
      GrMorphism id = gr_identity(*rep, gr.object(X));
      CHECK(gr.assemble(id) == gr.category().identity(X));
      GrMorphism d = gr_differential(*rep, id);
      for (const auto& [a, v] : d.components) CHECK(is_zero(v));
    }
  }
}

TEST_CASE("gr_compose is unital on every basis element") {
  for (const auto& [name, rep] : fixtures::corpus(Ring::integers())) {
    Grothendieck gr(rep);
    const DgCategory& g = gr.category();
    for (std::size_t X = 0; X < g.object_count(); ++X)
      for (std::size_t Y = 0; Y < g.object_count(); ++Y)
        for (std::size_t k = 0; k < g.hom_dim(X, Y); ++k) {
          GrMorphism f = gr.split(X, Y, unit_vector(g.hom_dim(X, Y), k));
          CHECK(gr.assemble(gr_compose(*rep, gr_identity(*rep, gr.object(Y)), f)) == unit_vector(g.hom_dim(X, Y), k));
          CHECK(gr.assemble(gr_compose(*rep, f, gr_identity(*rep, gr.object(X)))) == unit_vector(g.hom_dim(X, Y), k));
        }
  }
}

TEST_CASE("degree-0 data matches the classical construction") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(2), Ring::modular(3)})
    for (const std::string name : {"trivial", "arrow", "z2-strict", "z2-twisted"})
      CHECK_MESSAGE(oracle::degree_zero_discrepancies(corpus_representation(name, ring)) == 0, name);
  CHECK(oracle::degree_zero_discrepancies(sign_on_dual_numbers(Ring::integers())) == 0);
  CHECK(oracle::degree_zero_discrepancies(scaled_unit(Ring::rationals())) == 0);
  CHECK(oracle::degree_zero_discrepancies(scaled_unit(Ring::modular(5))) == 0);
}

TEST_CASE("non-strict and nontrivially acting examples are dg-categories") {
  CHECK(check_representation(*sign_on_dual_numbers(Ring::integers())).passed());
  CHECK(check_dg_category(Grothendieck(sign_on_dual_numbers(Ring::integers())).category()).passed());
  CHECK(check_representation(*scaled_unit(Ring::rationals())).passed());
  Grothendieck gr(scaled_unit(Ring::rationals()));
  CHECK(check_dg_category(gr.category()).passed());
  CHECK(gr.category().identity(0) == Vector{Scalar(1, 2)});
}

TEST_CASE("construction is independent of the thread count") {
  for (const auto& [name, rep] : fixtures::corpus(Ring::integers())) {
    Grothendieck one(rep, 1), many(rep, 4);
    const DgCategory &a = one.category(), &b = many.category();
    REQUIRE(a.objects() == b.objects());
    for (std::size_t x = 0; x < a.object_count(); ++x)
      for (std::size_t y = 0; y < a.object_count(); ++y) {
        CHECK(a.hom(x, y) == b.hom(x, y));
        for (std::size_t z = 0; z < a.object_count(); ++z)
          for (std::size_t g = 0; g < a.hom_dim(y, z); ++g)
            for (std::size_t f = 0; f < a.hom_dim(x, y); ++f)
              CHECK(a.basis_composite(x, y, z, g, f) == b.basis_composite(x, y, z, g, f));
      }
    CHECK(check_dg_category(a, 4).text() == check_dg_category(a, 1).text());
  }
}
