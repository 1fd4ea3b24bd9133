#include "dgrep/representation.hpp"

#include <algorithm>

#include "dgrep/errors.hpp"

namespace dgrep {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<BaseMorphism> morphisms,
                               std::vector<std::size_t> identities,
                               const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& composites)
    : objects_(std::move(objects)), morphisms_(std::move(morphisms)), identities_(std::move(identities)) {
  const std::size_t m = morphisms_.size();
  for (const auto& a : morphisms_)
    if (a.source >= objects_.size() || a.target >= objects_.size())
      throw StructuralError("morphism '" + a.name + "' has a dangling endpoint");
  if (identities_.size() != objects_.size()) throw StructuralError("every object needs an identity morphism");
  for (std::size_t id : identities_)
    if (id >= m) throw StructuralError("identity refers to an unknown morphism");
  table_.assign(m * m, std::nullopt);
  for (const auto& [ba, c] : composites) {
    if (ba.first >= m || ba.second >= m || c >= m) throw StructuralError("composition table refers to an unknown morphism");
    table_[ba.first * m + ba.second] = c;
  }
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    const std::size_t id = identities_[i];
    for (std::size_t a = 0; a < m; ++a) {
      if (morphisms_[a].target == i && !table_[id * m + a]) table_[id * m + a] = a;
      if (morphisms_[a].source == i && !table_[a * m + id]) table_[a * m + id] = a;
    }
  }
}

std::vector<std::size_t> FiniteCategory::hom(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < morphisms_.size(); ++a)
    if (morphisms_[a].source == i && morphisms_[a].target == j) out.push_back(a);
  return out;
}

std::optional<std::size_t> FiniteCategory::find_object(const std::string& name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

std::optional<std::size_t> FiniteCategory::find_morphism(const std::string& name) const {
  for (std::size_t a = 0; a < morphisms_.size(); ++a)
    if (morphisms_[a].name == name) return a;
  return std::nullopt;
}

Report check_finite_category(const FiniteCategory& c) {
  Report report("finite category");
  const std::size_t m = c.morphism_count();
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    const auto& id = c.morphism(c.identity(i));
    if (id.source != i || id.target != i) report.fail("identity", "1_" + c.object(i) + " is not an endomorphism of " + c.object(i));
  }
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t a = 0; a < m; ++a) {
      const auto& A = c.morphism(a);
      const auto& B = c.morphism(b);
      auto ba = c.compose(b, a);
      if (A.target != B.source) {
        if (ba) report.fail("composable", B.name + " o " + A.name + " is defined but not composable");
        continue;
      }
      if (!ba) {
        report.fail("total", "missing composite " + B.name + " o " + A.name);
        continue;
      }
      const auto& C = c.morphism(*ba);
      if (C.source != A.source || C.target != B.target)
        report.fail("endpoints", B.name + " o " + A.name + " = " + C.name + " has the wrong endpoints");
    }
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    const std::size_t id = c.identity(i);
    for (std::size_t a = 0; a < m; ++a) {
      if (c.morphism(a).target == i && c.compose(id, a) != a)
        report.fail("left unit", "1_" + c.object(i) + " o " + c.morphism(a).name);
      if (c.morphism(a).source == i && c.compose(a, id) != a)
        report.fail("right unit", c.morphism(a).name + " o 1_" + c.object(i));
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t cc = 0; cc < m; ++cc) {
        auto ba = c.compose(b, a);
        auto cb = c.compose(cc, b);
        if (!ba || !cb) continue;
        auto left = c.compose(cc, *ba);
        auto right = c.compose(*cb, a);
        if (left != right)
          report.fail("associativity",
                      c.morphism(cc).name + ", " + c.morphism(b).name + ", " + c.morphism(a).name);
      }
  return report;
}

const DgNatIso& DgRepresentation::mu_at(std::size_t b, std::size_t a) const {
  auto it = mu.find({b, a});
  if (it == mu.end())
    throw StructuralError("missing mu for (" + base.morphism(b).name + ", " + base.morphism(a).name + ")");
  return it->second;
}

namespace {

bool same_category(const DgCategoryPtr& x, const DgCategoryPtr& y) {
  return x.get() == y.get() || x->objects() == y->objects();
}

}  // namespace

DgRepresentation make_representation(Ring ring, FiniteCategory base, std::vector<DgCategoryPtr> fibers,
                                     std::vector<DgFunctorPtr> functors, CoherenceData coherence) {
  DgRepresentation r;
  r.ring = ring;
  r.base = std::move(base);
  r.fibers = std::move(fibers);
  r.functors = std::move(functors);
  const auto& C = r.base;
  if (r.fibers.size() != C.object_count()) throw StructuralError("need one fiber dg-category per base object");
  if (r.functors.size() != C.morphism_count()) throw StructuralError("need one dg-functor per base morphism");
  for (std::size_t a = 0; a < C.morphism_count(); ++a) {
    const auto& F = *r.functors[a];
    if (!same_category(F.source, r.fibers[C.morphism(a).source]) || !same_category(F.target, r.fibers[C.morphism(a).target]))
      throw StructuralError("functor R(" + C.morphism(a).name + ") has endpoints that do not match the base morphism");
  }
  if (coherence.delta.size() != C.object_count() || coherence.eta.size() != C.object_count())
    throw StructuralError("need delta and eta for every base object");
  for (std::size_t i = 0; i < C.object_count(); ++i) {
    DgNatIso t;
    t.source = std::make_shared<DgFunctor>(identity_functor(r.fibers[i]));
    t.target = r.functors[C.identity(i)];
    t.components = std::move(coherence.delta[i]);
    t.inverse = std::move(coherence.eta[i]);
    r.delta.push_back(std::move(t));
  }
  for (std::size_t b = 0; b < C.morphism_count(); ++b)
    for (std::size_t a = 0; a < C.morphism_count(); ++a) {
      if (C.morphism(a).target != C.morphism(b).source) continue;
      auto ba = C.compose(b, a);
      if (!ba) throw StructuralError("base category has no composite for (" + C.morphism(b).name + ", " + C.morphism(a).name + ")");
      auto mit = coherence.mu.find({b, a});
      auto tit = coherence.theta.find({b, a});
      if (mit == coherence.mu.end())
        throw StructuralError("missing mu for (" + C.morphism(b).name + ", " + C.morphism(a).name + ")");
      if (tit == coherence.theta.end())
        throw StructuralError("missing theta for (" + C.morphism(b).name + ", " + C.morphism(a).name + ")");
      DgNatIso t;
      t.source = std::make_shared<DgFunctor>(compose(*r.functors[b], *r.functors[a]));
      t.target = r.functors[*ba];
      t.components = std::move(mit->second);
      t.inverse = std::move(tit->second);
      r.mu.emplace(std::make_pair(b, a), std::move(t));
    }
  return r;
}

CoherenceData strict_coherence(const FiniteCategory& base, const std::vector<DgCategoryPtr>& fibers,
                               const std::vector<DgFunctorPtr>& functors) {
  CoherenceData data;
  for (std::size_t i = 0; i < base.object_count(); ++i) {
    const auto& R1 = *functors[base.identity(i)];
    std::vector<Vector> comps;
    for (std::size_t x = 0; x < fibers[i]->object_count(); ++x) {
      if (R1(x) != x) throw StructuralError("strict coherence needs R(1_i) to fix objects");
      comps.push_back(fibers[i]->identity(x));
    }
    data.delta.push_back(comps);
    data.eta.push_back(comps);
  }
  for (std::size_t b = 0; b < base.morphism_count(); ++b)
    for (std::size_t a = 0; a < base.morphism_count(); ++a) {
      if (base.morphism(a).target != base.morphism(b).source) continue;
      auto ba = base.compose(b, a);
      if (!ba) continue;
      const std::size_t i = base.morphism(a).source;
      const std::size_t k = base.morphism(b).target;
      std::vector<Vector> comps;
      for (std::size_t x = 0; x < fibers[i]->object_count(); ++x) {
        std::size_t bax = (*functors[b])((*functors[a])(x));
        if (bax != (*functors[*ba])(x)) throw StructuralError("strict coherence needs R(b)R(a) = R(ba) on objects");
        comps.push_back(fibers[k]->identity(bax));
      }
      data.mu[{b, a}] = comps;
      data.theta[{b, a}] = comps;
    }
  return data;
}

Report check_representation(const DgRepresentation& r, unsigned threads) {
  Report report("dg-representation");
  const auto& C = r.base;
  report.absorb(check_finite_category(C), "base ");
  for (std::size_t i = 0; i < C.object_count(); ++i)
    report.absorb(check_dg_category(r.fiber(i), threads), "R(" + C.object(i) + ") ");
  for (std::size_t a = 0; a < C.morphism_count(); ++a)
    report.absorb(check_dg_functor(r.functor(a)), "R(" + C.morphism(a).name + ") ");
  for (std::size_t i = 0; i < C.object_count(); ++i)
    report.absorb(check_dg_nat_iso(r.delta[i]), "delta_" + C.object(i) + " ");
  for (const auto& [ba, t] : r.mu)
    report.absorb(check_dg_nat_iso(t), "mu_{" + C.morphism(ba.first).name + "," + C.morphism(ba.second).name + "} ");

  // Associativity coherence: mu_{c,ba} o R(c)mu_{b,a} = mu_{cb,a} o mu_{c,b}R(a).
  for (std::size_t a = 0; a < C.morphism_count(); ++a)
    for (std::size_t b = 0; b < C.morphism_count(); ++b)
      for (std::size_t c = 0; c < C.morphism_count(); ++c) {
        if (C.morphism(a).target != C.morphism(b).source || C.morphism(b).target != C.morphism(c).source) continue;
        const std::size_t ba = *C.compose(b, a);
        const std::size_t cb = *C.compose(c, b);
        const std::size_t cba = *C.compose(c, ba);
        const DgCategory& H = r.fiber(C.morphism(c).target);
        const auto &Ra = r.functor(a), &Rb = r.functor(b), &Rc = r.functor(c);
        const auto &Rba = r.functor(ba), &Rcb = r.functor(cb), &Rcba = r.functor(cba);
        for (std::size_t x = 0; x < r.fiber(C.morphism(a).source).object_count(); ++x) {
          const std::size_t s = Rc(Rb(Ra(x)));
          const std::size_t m1 = Rc(Rba(x));
          const std::size_t m2 = Rcb(Ra(x));
          const std::size_t t = Rcba(x);
          Vector rc_mu = Rc.apply(Rb(Ra(x)), Rba(x), r.mu_at(b, a).components[x]);
          Vector lhs = H.compose(s, m1, t, r.mu_at(c, ba).components[x], rc_mu);
          Vector rhs = H.compose(s, m2, t, r.mu_at(cb, a).components[x], r.mu_at(c, b).components[Ra(x)]);
          if (lhs != rhs)
            report.fail("associativity coherence", "(" + C.morphism(a).name + "," + C.morphism(b).name + "," + C.morphism(c).name +
                                     ") at " + r.fiber(C.morphism(a).source).object(x) + ": " +
                                     element_text(H.hom(s, t), lhs) + " vs " + element_text(H.hom(s, t), rhs));
        }
      }

  // Unit coherence: mu_{a,1_i} o R(a)delta_i = 1 = mu_{1_j,a} o delta_j R(a).
  for (std::size_t a = 0; a < C.morphism_count(); ++a) {
    const std::size_t i = C.morphism(a).source;
    const std::size_t j = C.morphism(a).target;
    const auto& Ra = r.functor(a);
    const auto& R1i = r.functor(C.identity(i));
    const auto& R1j = r.functor(C.identity(j));
    const DgCategory& J = r.fiber(j);
    for (std::size_t x = 0; x < r.fiber(i).object_count(); ++x) {
      const std::size_t ax = Ra(x);
      Vector ra_delta = Ra.apply(x, R1i(x), r.delta[i].components[x]);
      Vector left = J.compose(ax, Ra(R1i(x)), ax, r.mu_at(a, C.identity(i)).components[x], ra_delta);
      Vector right = J.compose(ax, R1j(ax), ax, r.mu_at(C.identity(j), a).components[x], r.delta[j].components[ax]);
      const std::string where = C.morphism(a).name + " at " + r.fiber(i).object(x);
      if (left != J.identity(ax)) report.fail("unit coherence", where + ": mu_{a,1} o R(a)delta != 1");
      if (right != J.identity(ax)) report.fail("unit coherence", where + ": mu_{1,a} o delta R(a) != 1");
    }
  }
  return report;
}

bool is_strict(const DgRepresentation& r) {
  const auto& C = r.base;
  for (std::size_t i = 0; i < C.object_count(); ++i) {
    const auto& R1 = r.functor(C.identity(i));
    const auto& I = r.fiber(i);
    for (std::size_t x = 0; x < I.object_count(); ++x) {
      if (R1(x) != x) return false;
      for (std::size_t y = 0; y < I.object_count(); ++y)
        if (!(R1.on_hom(x, y) == Matrix::identity(I.hom_dim(x, y)))) return false;
      if (r.delta[i].components[x] != I.identity(x) || r.delta[i].inverse[x] != I.identity(x)) return false;
    }
  }
  for (const auto& [ba, t] : r.mu) {
    const auto composite = compose(r.functor(ba.first), r.functor(ba.second));
    const auto& target = r.functor(*C.compose(ba.first, ba.second));
    if (composite.object_map != target.object_map || composite.hom_maps != target.hom_maps) return false;
    const auto& K = *target.target;
    for (std::size_t x = 0; x < t.components.size(); ++x)
      if (t.components[x] != K.identity(target(x)) || t.inverse[x] != K.identity(target(x))) return false;
  }
  return true;
}

DgNatIso whisker_left(DgFunctorPtr f, const DgNatIso& tau) {
  DgNatIso out;
  out.source = std::make_shared<DgFunctor>(compose(*f, *tau.source));
  out.target = std::make_shared<DgFunctor>(compose(*f, *tau.target));
  const auto& S = *tau.source;
  const auto& T = *tau.target;
  for (std::size_t x = 0; x < S.source->object_count(); ++x) {
    out.components.push_back(f->apply(S(x), T(x), tau.components[x]));
    out.inverse.push_back(f->apply(T(x), S(x), tau.inverse[x]));
  }
  return out;
}

DgNatIso whisker_right(const DgNatIso& tau, DgFunctorPtr f) {
  DgNatIso out;
  out.source = std::make_shared<DgFunctor>(compose(*tau.source, *f));
  out.target = std::make_shared<DgFunctor>(compose(*tau.target, *f));
  for (std::size_t x = 0; x < f->source->object_count(); ++x) {
    out.components.push_back(tau.components[(*f)(x)]);
    out.inverse.push_back(tau.inverse[(*f)(x)]);
  }
  return out;
}

}  // namespace dgrep
