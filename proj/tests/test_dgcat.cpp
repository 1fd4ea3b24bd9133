#include <doctest.h>

#include "dgrep/dgcat.hpp"
#include "dgrep/errors.hpp"
#include "dgrep/grothendieck.hpp"
#include "fixtures.hpp"

using namespace dgrep;

namespace {

DgFunctorPtr scaling_functor(const DgCategoryPtr& a, const Scalar& factor) {
  auto f = std::make_shared<DgFunctor>();
  f->source = a;
  f->target = a;
  f->object_map = {0};
  Matrix m = Matrix::identity(2);
  m(1, 1) = factor;
  f->hom_maps = {m};
  return f;
}

bool same_structure(const DgCategory& a, const DgCategory& b) {
  if (a.objects() != b.objects()) return false;
  const std::size_t n = a.object_count();
  for (std::size_t x = 0; x < n; ++x) {
    if (a.identity(x) != b.identity(x)) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (!(a.hom(x, y) == b.hom(x, y))) return false;
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t g = 0; g < a.hom_dim(y, z); ++g)
          for (std::size_t f = 0; f < a.hom_dim(x, y); ++f)
            if (a.basis_composite(x, y, z, g, f) != b.basis_composite(x, y, z, g, f)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("the ground ring and the epsilon category are dg-categories") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(2), Ring::rationals()}) {
    CHECK(check_dg_category(*ground_category(ring, "*")).passed());
    CHECK(check_dg_category(*fixtures::epsilon_category(ring)).passed());
  }
}

TEST_CASE("a differential that lowers degree is rejected") {
  Matrix d(2, 2);
  d(0, 1) = 1;  // d(e) = 1
  CHECK_THROWS_AS(Complex(GradedModule({{0, {"1"}}, {1, {"e"}}}), d), StructuralError);
}

TEST_CASE("broken structure constants are named") {
  const Ring z = Ring::integers();
  auto c = fixtures::epsilon_category(z);
  c->set_composite(0, 0, 0, 1, 1, {1, 0});  // e o e = 1 has degree 0, not 2
  CHECK(check_dg_category(*c).failed("degree additivity"));

  auto d = fixtures::epsilon_category(z);
  d->set_composite(0, 0, 0, 0, 1, {0, 2});
  CHECK(check_dg_category(*d).failed("left unit"));

  // Negating s o t in End(D^1) breaks the Leibniz rule.
  auto e = std::make_shared<DgCategory>(*disk_endomorphisms(z));
  Vector st = e->basis_composite(0, 0, 0, 0, 3);
  for (auto& v : st) v = -v;
  e->set_composite(0, 0, 0, 0, 3, st);
  Report r = check_dg_category(*e);
  CHECK_FALSE(r.passed());
}

TEST_CASE("End(D^1) satisfies every axiom, with odd elements composing nontrivially") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(3), Ring::rationals()}) {
    auto e = disk_endomorphisms(ring);
    CHECK(check_dg_category(*e).passed());
    // s o t = E_ef E_fe = E_ee = p, and d(s) = 1 up to sign
    CHECK(e->basis_composite(0, 0, 0, 0, 3) == Vector{0, 0, 1, 0});
    CHECK_FALSE(is_zero(e->differential(0, 0, unit_vector(4, 0))));
  }
}

TEST_CASE("dg-functors") {
  const Ring q = Ring::rationals();
  auto eps = fixtures::epsilon_category(q);
  CHECK(check_dg_functor(identity_functor(eps)).passed());
  CHECK(check_dg_functor(*scaling_functor(eps, 2)).passed());
  DgFunctor killer = identity_functor(eps);
  killer.hom_maps[0](0, 0) = 0;
  CHECK(check_dg_functor(killer).failed("identity"));
  CHECK(compose(*scaling_functor(eps, 2), *scaling_functor(eps, 3)).hom_maps[0](1, 1) == 6);
}

TEST_CASE("natural isomorphisms") {
  const Ring q = Ring::rationals();
  auto k = ground_category(q, "*");
  auto id = std::make_shared<DgFunctor>(identity_functor(k));
  CHECK(check_dg_nat_iso(identity_nat_iso(id)).passed());
  DgNatIso twice{id, id, {{2}}, {{Scalar(1, 2)}}};
  CHECK(check_dg_nat_iso(twice).passed());

  const Ring z = Ring::integers();
  auto kz = ground_category(z, "*");
  auto idz = std::make_shared<DgFunctor>(identity_functor(kz));
  DgNatIso bad{idz, idz, {{2}}, {{2}}};
  CHECK(check_dg_nat_iso(bad).failed("invertible"));
}

TEST_CASE("opposite categories") {
  const Ring z = Ring::integers();
  auto a2 = fixtures::a2(z);
  DgCategory op = opposite(*a2);
  CHECK(check_dg_category(op).passed());
  CHECK(op.hom_dim(1, 0) == 1);
  CHECK(op.hom_dim(0, 1) == 0);

  auto eps = fixtures::epsilon_category(z);
  CHECK(opposite(*eps).basis_composite(0, 0, 0, 1, 1) == Vector{0, 0});

  // Odd elements pick up the sign: in End(D^1)^op, s o_op t = -(t o s).
  auto e = disk_endomorphisms(z);
  DgCategory eop = opposite(*e);
  CHECK(check_dg_category(eop).passed());
  Vector ts = e->basis_composite(0, 0, 0, 3, 0);
  for (auto& v : ts) v = -v;
  CHECK(eop.basis_composite(0, 0, 0, 0, 3) == ts);
  CHECK(same_structure(opposite(eop), *e));

  for (const auto& [name, rep] : fixtures::corpus(z)) {
    Grothendieck gr(rep);
    CHECK_MESSAGE(same_structure(opposite(opposite(gr.category())), gr.category()), name);
    CHECK_MESSAGE(check_dg_category(opposite(gr.category())).passed(), name);
  }
}

TEST_CASE("composition of arbitrary elements is bilinear") {
  const Ring z = Ring::integers();
  auto e = disk_endomorphisms(z);
  Vector g = {1, 2, 0, -1};
  Vector f = {0, 1, 3, 0};
  Vector expected(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) axpy(expected, g[i] * f[j], e->basis_composite(0, 0, 0, i, j));
  CHECK(e->compose(0, 0, 0, g, f) == reduce(z, expected));
}
