#include "dgrep/grothendieck.hpp"

#include "dgrep/errors.hpp"
#include "dgrep/parallel.hpp"

namespace dgrep {

namespace {

std::map<int, Vector> pieces(const Complex& hom, const Vector& v) {
  std::map<int, Vector> out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    auto [it, fresh] = out.try_emplace(hom.degree(t), Vector(v.size()));
    it->second[t] = v[t];
  }
  return out;
}

void check_component(const DgRepresentation& r, const GrMorphism& m, std::size_t a) {
  const auto& A = r.base.morphism(a);
  if (A.source != m.source.i || A.target != m.target.i)
    throw StructuralError("Grothendieck component along '" + A.name + "' has mismatched endpoints");
}

}  // namespace

GrMorphism gr_compose(const DgRepresentation& r, const GrMorphism& g, const GrMorphism& f) {
  if (!(f.target == g.source)) throw StructuralError("gr_compose: endpoint mismatch");
  const Ring& ring = r.ring;
  const std::size_t x = f.source.x;
  const std::size_t z = g.target.x;
  const DgCategory& K = r.fiber(g.target.i);
  GrMorphism out{f.source, g.target, {}};
  for (const auto& [a, fa] : f.components) {
    check_component(r, f, a);
    const auto& Ra = r.functor(a);
    for (const auto& [b, gb] : g.components) {
      check_component(r, g, b);
      const auto& Rb = r.functor(b);
      const std::size_t c = *r.base.compose(b, a);
      const std::size_t ax = Ra(x);
      const std::size_t bax = Rb(ax);
      const std::size_t by = Rb(f.target.x);
      const std::size_t cx = r.functor(c)(x);
      Vector rbfa = Rb.apply(ax, f.target.x, fa);
      auto gq = pieces(K.hom(by, z), gb);
      auto fp = pieces(K.hom(bax, by), rbfa);
      auto tr = pieces(K.hom(cx, bax), r.theta(b, a, x));
      auto [it, fresh] = out.components.try_emplace(c, Vector(K.hom_dim(cx, z)));
      Vector& acc = it->second;
      for (const auto& [rd, th] : tr)
        for (const auto& [pd, fv] : fp) {
          Vector inner = K.compose(cx, bax, by, fv, th);
          for (const auto& [qd, gv] : gq) {
            Vector term = K.compose(cx, by, z, gv, inner);
            const bool odd = (((qd + pd) * rd) % 2) != 0;
            axpy(acc, odd ? Scalar(-1) : Scalar(1), term);
          }
        }
      acc = reduce(ring, acc);
    }
  }
  return out;
}

GrMorphism gr_identity(const DgRepresentation& r, GrObject ix) {
  GrMorphism out{ix, ix, {}};
  out.components[r.base.identity(ix.i)] = r.eta(ix.i, ix.x);
  return out;
}

GrMorphism gr_differential(const DgRepresentation& r, const GrMorphism& f) {
  GrMorphism out{f.source, f.target, {}};
  const DgCategory& J = r.fiber(f.target.i);
  for (const auto& [a, fa] : f.components)
    out.components[a] = J.differential(r.functor(a)(f.source.x), f.target.x, fa);
  return out;
}

Grothendieck::Grothendieck(RepresentationPtr r, unsigned threads) : rep_(std::move(r)) {
  const DgRepresentation& R = *rep_;
  const FiniteCategory& C = R.base;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < C.object_count(); ++i)
    for (std::size_t x = 0; x < R.fiber(i).object_count(); ++x) {
      objects_.push_back({i, x});
      names.push_back(C.object(i) + ":" + R.fiber(i).object(x));
    }
  const std::size_t n = objects_.size();
  layouts_.resize(n * n);
  positions_.resize(n * n);
  std::vector<Complex> homs;
  for (std::size_t X = 0; X < n; ++X)
    for (std::size_t Y = 0; Y < n; ++Y) {
      const auto [i, x] = objects_[X];
      const auto [j, y] = objects_[Y];
      const DgCategory& J = R.fiber(j);
      const auto arrows = C.hom(i, j);
      std::map<int, std::vector<std::string>> labels;
      std::map<int, std::vector<Slot>> by_degree;
      for (std::size_t a : arrows) {
        const Complex& h = J.hom(R.functor(a)(x), y);
        for (std::size_t k = 0; k < h.dim(); ++k) {
          labels[h.degree(k)].push_back(C.morphism(a).name + "/" + h.carrier().label(k));
          by_degree[h.degree(k)].push_back({a, k});
        }
      }
      auto& layout = layouts_[X * n + Y];
      auto& pos = positions_[X * n + Y];
      for (const auto& [deg, slots] : by_degree)
        for (const Slot& s : slots) {
          pos[{s.a, s.k}] = layout.size();
          layout.push_back(s);
        }
      Matrix d(layout.size(), layout.size());
      for (std::size_t t = 0; t < layout.size(); ++t) {
        const auto& s = layout[t];
        const Matrix& dh = J.hom(R.functor(s.a)(x), y).differential();
        for (std::size_t k2 = 0; k2 < dh.rows(); ++k2)
          if (dh(k2, s.k) != 0) d(pos.at({s.a, k2}), t) = dh(k2, s.k);
      }
      homs.emplace_back(GradedModule(labels), std::move(d));
    }

  auto cat = std::make_shared<DgCategory>(R.ring, names, std::move(homs));
  for (std::size_t X = 0; X < n; ++X) cat->set_identity(X, assemble(gr_identity(R, objects_[X])));

  // Structure constants, computed per source object and stored in order.
  struct Entry {
    std::size_t Y, Z, g, f;
    Vector value;
  };
  std::vector<std::vector<Entry>> results(n);
  parallel_for(n, threads, [&](std::size_t X) {
    for (std::size_t Y = 0; Y < n; ++Y)
      for (std::size_t Z = 0; Z < n; ++Z) {
        const std::size_t df = layout(X, Y).size();
        const std::size_t dg = layout(Y, Z).size();
        for (std::size_t g = 0; g < dg; ++g) {
          GrMorphism gm = split(Y, Z, unit_vector(dg, g));
          for (std::size_t f = 0; f < df; ++f) {
            GrMorphism fm = split(X, Y, unit_vector(df, f));
            results[X].push_back({Y, Z, g, f, assemble(gr_compose(R, gm, fm))});
          }
        }
      }
  });
  for (std::size_t X = 0; X < n; ++X)
    for (auto& e : results[X]) cat->set_composite(X, e.Y, e.Z, e.g, e.f, std::move(e.value));
  cat_ = std::move(cat);
}

std::size_t Grothendieck::index(GrObject ix) const {
  for (std::size_t X = 0; X < objects_.size(); ++X)
    if (objects_[X] == ix) return X;
  throw StructuralError("unknown Grothendieck object");
}

std::size_t Grothendieck::position(std::size_t X, std::size_t Y, std::size_t a, std::size_t k) const {
  return positions_[X * objects_.size() + Y].at({a, k});
}

GrMorphism Grothendieck::split(std::size_t X, std::size_t Y, const Vector& v) const {
  const DgRepresentation& R = *rep_;
  GrMorphism out{objects_[X], objects_[Y], {}};
  const auto& lay = layout(X, Y);
  for (std::size_t t = 0; t < lay.size(); ++t) {
    const auto& s = lay[t];
    auto [it, fresh] = out.components.try_emplace(s.a);
    if (fresh) it->second.assign(R.fiber(objects_[Y].i).hom_dim(R.functor(s.a)(objects_[X].x), objects_[Y].x), 0);
    it->second[s.k] = v[t];
  }
  return out;
}

Vector Grothendieck::assemble(const GrMorphism& m) const {
  const std::size_t X = index(m.source);
  const std::size_t Y = index(m.target);
  Vector out(layout(X, Y).size());
  for (const auto& [a, comp] : m.components)
    for (std::size_t k = 0; k < comp.size(); ++k)
      if (comp[k] != 0) out[position(X, Y, a, k)] = comp[k];
  return out;
}

}  // namespace dgrep
