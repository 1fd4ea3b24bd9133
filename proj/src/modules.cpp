#include "dgrep/modules.hpp"

#include <random>
#include <sstream>

#include "dgrep/errors.hpp"
#include "dgrep/linsys.hpp"
#include "dgrep/parallel.hpp"

namespace dgrep {

namespace {

struct SumLayout {
  Complex complex;
  std::vector<std::size_t> left, right;  // old index -> new index
};

SumLayout sum_complex(const Complex& a, const Complex& b) {
  std::map<int, std::vector<std::string>> labels;
  for (std::size_t i = 0; i < a.dim(); ++i) labels[a.degree(i)].push_back("1." + a.carrier().label(i));
  for (std::size_t i = 0; i < b.dim(); ++i) labels[b.degree(i)].push_back("2." + b.carrier().label(i));
  GradedModule carrier(labels);
  SumLayout out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.left.push_back(*carrier.find("1." + a.carrier().label(i)));
  for (std::size_t i = 0; i < b.dim(); ++i) out.right.push_back(*carrier.find("2." + b.carrier().label(i)));
  Matrix d(carrier.dim(), carrier.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) d(out.left[r], out.left[c]) = a.differential()(r, c);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) d(out.right[r], out.right[c]) = b.differential()(r, c);
  out.complex = Complex(std::move(carrier), std::move(d));
  return out;
}

Matrix sum_matrix(const SumLayout& rows, const SumLayout& cols, const Matrix& a, const Matrix& b) {
  Matrix m(rows.complex.dim(), cols.complex.dim());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(rows.left[r], cols.left[c]) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(rows.right[r], cols.right[c]) = b(r, c);
  return m;
}

std::string where(const DgCategory& a, std::size_t x, std::size_t y, std::size_t f) {
  return a.object(x) + "->" + a.object(y) + " " + a.hom(x, y).carrier().label(f);
}

void require_same_base(const DgCategory& a, const DgCategory& b) {
  if (a.objects() != b.objects()) throw StructuralError("modules live over different dg-categories");
}

bool same_module(const DgModule& m, const DgModule& n) {
  return m.base->objects() == n.base->objects() && m.values == n.values && m.actions == n.actions;
}

// Adds the equations making block `h[x]` a module map source -> target.
void add_module_map_equations(LinearSystem& sys, const DgModule& source, const DgModule& target,
                              const std::vector<std::size_t>& h) {
  const DgCategory& A = *source.base;
  const std::size_t n = A.object_count();
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix& dm = source.values[x].differential();
    const Matrix& dn = target.values[x].differential();
    sys.add_equation(dn.rows(), dm.cols(), {{1, &dn, h[x], nullptr}, {-1, nullptr, h[x], &dm}});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t f = 0; f < A.hom_dim(x, y); ++f) {
        const Matrix& am = source.action(x, y, f);
        const Matrix& an = target.action(x, y, f);
        sys.add_equation(target.values[x].dim(), source.values[y].dim(),
                         {{1, nullptr, h[x], &am}, {-1, &an, h[y], nullptr}});
      }
}

struct IsoSearch {
  std::optional<std::vector<Matrix>> witness;
  bool exhaustive = false;
  bool no_maps = false;
};

IsoSearch search_isomorphism(const Ring& ring, const LinearSystem& sys) {
  IsoSearch out;
  Submodule space = sys.solution_space();
  auto invertible = [&](const std::vector<Matrix>& blocks) {
    for (const auto& b : blocks)
      if (b.rows() != b.cols() || !is_invertible(ring, b)) return false;
    return true;
  };
  const auto gens = space.generators();
  if (gens.empty()) {
    out.no_maps = true;
    out.exhaustive = true;
    std::vector<Matrix> zero = sys.unpack(Vector(sys.unknown_count()));
    if (invertible(zero)) out.witness = zero;
    return out;
  }
  auto card = space.cardinality();
  if (card && *card <= Integer(1 << 16)) {
    out.exhaustive = true;
    for (const auto& v : space.elements()) {
      auto blocks = sys.unpack(v);
      if (invertible(blocks)) {
        out.witness = blocks;
        return out;
      }
    }
    return out;
  }
  for (const auto& g : gens) {
    auto blocks = sys.unpack(g);
    if (invertible(blocks)) {
      out.witness = blocks;
      return out;
    }
  }
  std::mt19937 rng(20260415u);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 64; ++trial) {
    Vector v(sys.unknown_count());
    for (const auto& g : gens) axpy(v, Scalar(coeff(rng)), g);
    auto blocks = sys.unpack(reduce(ring, v));
    if (invertible(blocks)) {
      out.witness = blocks;
      return out;
    }
  }
  return out;
}

Verdict finish(const IsoSearch& s) {
  Verdict v;
  if (s.witness) {
    v.kind = Verdict::Kind::isomorphic;
    v.witness = *s.witness;
    return v;
  }
  v.kind = Verdict::Kind::not_isomorphic;
  v.exhaustive = s.exhaustive;
  if (s.no_maps)
    v.reason = "only the zero module map exists";
  else if (s.exhaustive)
    v.reason = "no module map is invertible";
  else
    v.reason = "no invertible module map found among generators and 64 seeded combinations";
  return v;
}

}  // namespace

Matrix DgModule::act(std::size_t x, std::size_t y, const Vector& f) const {
  const Ring& ring = base->ring();
  Matrix out(values[x].dim(), values[y].dim());
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    out = add(ring, out, scale(ring, f[k], action(x, y, k)));
  }
  return out;
}

DgModule zero_module(DgCategoryPtr base) {
  DgModule m;
  const std::size_t n = base->object_count();
  m.values.assign(n, Complex());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m.actions.emplace_back(base->hom_dim(x, y), Matrix());
  m.base = std::move(base);
  return m;
}

DgModule direct_sum(const DgModule& m, const DgModule& n) {
  require_same_base(*m.base, *n.base);
  const std::size_t k = m.object_count();
  std::vector<SumLayout> layouts;
  for (std::size_t x = 0; x < k; ++x) layouts.push_back(sum_complex(m.values[x], n.values[x]));
  DgModule out;
  out.base = m.base;
  for (auto& l : layouts) out.values.push_back(l.complex);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      std::vector<Matrix> acts;
      for (std::size_t f = 0; f < m.base->hom_dim(x, y); ++f)
        acts.push_back(sum_matrix(layouts[x], layouts[y], m.action(x, y, f), n.action(x, y, f)));
      out.actions.push_back(std::move(acts));
    }
  return out;
}

Report check_dg_module(const DgModule& m, unsigned threads) {
  Report report("dg-module");
  const DgCategory& A = *m.base;
  const Ring& ring = A.ring();
  const std::size_t n = A.object_count();
  if (m.values.size() != n || m.actions.size() != n * n) throw StructuralError("dg-module has the wrong number of values");
  for (std::size_t x = 0; x < n; ++x) {
    report.absorb(check_complex(ring, m.values[x]), "value " + A.object(x) + " ");
    for (std::size_t y = 0; y < n; ++y) {
      if (m.actions[x * n + y].size() != A.hom_dim(x, y)) throw StructuralError("dg-module is missing actions");
      for (std::size_t f = 0; f < A.hom_dim(x, y); ++f) {
        const Matrix& a = m.action(x, y, f);
        if (a.rows() != m.values[x].dim() || a.cols() != m.values[y].dim())
          throw StructuralError("action of " + where(A, x, y, f) + " has the wrong shape");
        if (!is_homogeneous(a, m.values[y].carrier(), m.values[x].carrier(), A.basis_degree(x, y, f)))
          report.fail("degree", "action of " + where(A, x, y, f) + " is not homogeneous of its degree");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!(m.act(x, x, A.identity(x)) == Matrix::identity(m.values[x].dim())))
      report.fail("identity", "identity of " + A.object(x) + " does not act trivially");

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t f = 0; f < A.hom_dim(x, y); ++f) {
        const Matrix& a = m.action(x, y, f);
        const int p = A.basis_degree(x, y, f);
        Matrix lhs = subtract(ring, multiply(ring, m.values[x].differential(), a),
                              scale(ring, ring.sign(p), multiply(ring, a, m.values[y].differential())));
        if (!(lhs == m.act(x, y, A.differential(x, y, unit_vector(A.hom_dim(x, y), f)))))
          report.fail("differential", "d(action) != action(d) for " + where(A, x, y, f));
      }

  std::vector<Report> parts(n);
  parallel_for(n, threads, [&](std::size_t x) {
    Report& part = parts[x];
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t g = 0; g < A.hom_dim(y, z); ++g)
          for (std::size_t f = 0; f < A.hom_dim(x, y); ++f) {
            const int s = A.basis_degree(x, y, f) * A.basis_degree(y, z, g);
            Matrix rhs = scale(ring, ring.sign(s), multiply(ring, m.action(x, y, f), m.action(y, z, g)));
            if (!(m.act(x, z, A.basis_composite(x, y, z, g, f)) == rhs))
              part.fail("functoriality", "action(g o f) != (-1)^{|f||g|} action(f) action(g) for g = " +
                                             where(A, y, z, g) + ", f = " + where(A, x, y, f));
          }
  });
  for (const auto& p : parts) report.absorb(p);
  return report;
}

Report check_module_map(const DgModule& source, const DgModule& target, const ModuleMap& h) {
  Report report("module map");
  const DgCategory& A = *source.base;
  const Ring& ring = A.ring();
  require_same_base(A, *target.base);
  const std::size_t n = A.object_count();
  if (h.components.size() != n) throw StructuralError("module map needs one component per object");
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix& c = h.components[x];
    if (c.rows() != target.values[x].dim() || c.cols() != source.values[x].dim())
      throw StructuralError("module map component at " + A.object(x) + " has the wrong shape");
    if (!is_homogeneous(c, source.values[x].carrier(), target.values[x].carrier(), 0))
      report.fail("degree", "component at " + A.object(x) + " is not of degree 0");
    if (!(multiply(ring, target.values[x].differential(), c) == multiply(ring, c, source.values[x].differential())))
      report.fail("closed", "component at " + A.object(x) + " does not commute with d");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t f = 0; f < A.hom_dim(x, y); ++f)
        if (!(multiply(ring, h.components[x], source.action(x, y, f)) ==
              multiply(ring, target.action(x, y, f), h.components[y])))
          report.fail("linear", "map does not commute with the action of " + where(A, x, y, f));
  return report;
}

DgModule restrict(const DgFunctor& ra, const DgModule& m) {
  const DgCategory& I = *ra.source;
  const std::size_t n = I.object_count();
  DgModule out;
  out.base = ra.source;
  for (std::size_t x = 0; x < n; ++x) out.values.push_back(m.values[ra(x)]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<Matrix> acts;
      for (std::size_t f = 0; f < I.hom_dim(x, y); ++f) acts.push_back(m.act(ra(x), ra(y), ra.on_hom(x, y).column(f)));
      out.actions.push_back(std::move(acts));
    }
  return out;
}

RModule zero_r_module(RepresentationPtr rep) {
  RModule m;
  const auto& C = rep->base;
  for (std::size_t i = 0; i < C.object_count(); ++i) m.parts.push_back(zero_module(rep->fibers[i]));
  for (std::size_t a = 0; a < C.morphism_count(); ++a)
    m.structure.emplace_back(rep->fiber(C.morphism(a).source).object_count(), Matrix());
  m.rep = std::move(rep);
  return m;
}

RModule direct_sum(const RModule& m, const RModule& n) {
  const auto& R = *m.rep;
  const auto& C = R.base;
  RModule out;
  out.rep = m.rep;
  for (std::size_t i = 0; i < C.object_count(); ++i) out.parts.push_back(direct_sum(m.parts[i], n.parts[i]));
  for (std::size_t a = 0; a < C.morphism_count(); ++a) {
    const std::size_t i = C.morphism(a).source;
    const std::size_t j = C.morphism(a).target;
    std::vector<Matrix> comps;
    for (std::size_t x = 0; x < R.fiber(i).object_count(); ++x) {
      const std::size_t ax = R.functor(a)(x);
      SumLayout rows = sum_complex(m.parts[i].values[x], n.parts[i].values[x]);
      SumLayout cols = sum_complex(m.parts[j].values[ax], n.parts[j].values[ax]);
      comps.push_back(sum_matrix(rows, cols, m.structure[a][x], n.structure[a][x]));
    }
    out.structure.push_back(std::move(comps));
  }
  return out;
}

Report check_r_module(const RModule& m, unsigned threads) {
  Report report("right R-module");
  const DgRepresentation& R = *m.rep;
  const FiniteCategory& C = R.base;
  const Ring& ring = R.ring;
  if (m.parts.size() != C.object_count()) throw StructuralError("right R-module needs one part per base object");
  if (m.structure.size() != C.morphism_count()) throw StructuralError("missing structure map M(a)");
  for (std::size_t i = 0; i < C.object_count(); ++i) {
    require_same_base(*m.parts[i].base, R.fiber(i));
    report.absorb(check_dg_module(m.parts[i], threads), "M_" + C.object(i) + " ");
  }
  for (std::size_t a = 0; a < C.morphism_count(); ++a) {
    const std::size_t i = C.morphism(a).source;
    const std::size_t j = C.morphism(a).target;
    const DgCategory& I = R.fiber(i);
    const auto& Ra = R.functor(a);
    const std::string name = "M(" + C.morphism(a).name + ")";
    if (m.structure[a].size() != I.object_count()) throw StructuralError("missing components of " + name);
    for (std::size_t x = 0; x < I.object_count(); ++x) {
      const Matrix& s = m.structure[a][x];
      const Complex& src = m.parts[j].values[Ra(x)];
      const Complex& tgt = m.parts[i].values[x];
      if (s.rows() != tgt.dim() || s.cols() != src.dim())
        throw StructuralError(name + " at " + I.object(x) + " has the wrong shape");
      if (!is_homogeneous(s, src.carrier(), tgt.carrier(), 0))
        report.fail("degree", name + " at " + I.object(x) + " is not of degree 0");
      if (!(multiply(ring, tgt.differential(), s) == multiply(ring, s, src.differential())))
        report.fail("closed", name + " at " + I.object(x) + " does not commute with d");
    }
    for (std::size_t x = 0; x < I.object_count(); ++x)
      for (std::size_t y = 0; y < I.object_count(); ++y)
        for (std::size_t f = 0; f < I.hom_dim(x, y); ++f) {
          Matrix lhs = multiply(ring, m.structure[a][x], m.parts[j].act(Ra(x), Ra(y), Ra.on_hom(x, y).column(f)));
          Matrix rhs = multiply(ring, m.parts[i].action(x, y, f), m.structure[a][y]);
          if (!(lhs == rhs)) report.fail("natural", name + " is not natural for " + where(I, x, y, f));
        }
  }

  // Composition compatibility: M(ba)_x o M_k(theta_{b,a,x}) = M(a)_x o M(b)_{R(a)x}.
  for (const auto& [ba, t] : R.mu) {
    const auto [b, a] = ba;
    const std::size_t c = *C.compose(b, a);
    const std::size_t i = C.morphism(a).source;
    const std::size_t k = C.morphism(b).target;
    const auto& Ra = R.functor(a);
    const auto& Rb = R.functor(b);
    for (std::size_t x = 0; x < R.fiber(i).object_count(); ++x) {
      const std::size_t cx = R.functor(c)(x);
      const std::size_t bax = Rb(Ra(x));
      Matrix lhs = multiply(ring, m.structure[c][x], m.parts[k].act(cx, bax, R.theta(b, a, x)));
      Matrix rhs = multiply(ring, m.structure[a][x], m.structure[b][Ra(x)]);
      if (!(lhs == rhs))
        report.fail("composition compatibility", "(" + C.morphism(a).name + ", " + C.morphism(b).name + ") at " + R.fiber(i).object(x));
    }
  }
  // Unit compatibility: M(1_i)_x o M_i(eta_{i,x}) = 1.
  for (std::size_t i = 0; i < C.object_count(); ++i) {
    const std::size_t id = C.identity(i);
    for (std::size_t x = 0; x < R.fiber(i).object_count(); ++x) {
      const std::size_t ix = R.functor(id)(x);
      Matrix lhs = multiply(ring, m.structure[id][x], m.parts[i].act(x, ix, R.eta(i, x)));
      if (!(lhs == Matrix::identity(m.parts[i].values[x].dim())))
        report.fail("unit compatibility", C.object(i) + " at " + R.fiber(i).object(x));
    }
  }
  return report;
}

Report check_r_module_map(const RModule& source, const RModule& target, const RModuleMap& h) {
  Report report("R-module map");
  const DgRepresentation& R = *source.rep;
  const FiniteCategory& C = R.base;
  if (h.parts.size() != C.object_count()) throw StructuralError("R-module map needs one part per base object");
  for (std::size_t i = 0; i < C.object_count(); ++i)
    report.absorb(check_module_map(source.parts[i], target.parts[i], h.parts[i]), C.object(i) + " ");
  for (std::size_t a = 0; a < C.morphism_count(); ++a) {
    const std::size_t i = C.morphism(a).source;
    const std::size_t j = C.morphism(a).target;
    for (std::size_t x = 0; x < R.fiber(i).object_count(); ++x) {
      Matrix lhs = multiply(R.ring, target.structure[a][x], h.parts[j].components[R.functor(a)(x)]);
      Matrix rhs = multiply(R.ring, h.parts[i].components[x], source.structure[a][x]);
      if (!(lhs == rhs)) report.fail("structure", "M(" + C.morphism(a).name + ") at " + R.fiber(i).object(x));
    }
  }
  return report;
}

DgModule phi(const Grothendieck& gr, const RModule& m) {
  const DgRepresentation& R = gr.representation();
  const std::size_t n = gr.object_count();
  DgModule out;
  out.base = gr.category_ptr();
  for (std::size_t X = 0; X < n; ++X) out.values.push_back(m.parts[gr.object(X).i].values[gr.object(X).x]);
  for (std::size_t X = 0; X < n; ++X)
    for (std::size_t Y = 0; Y < n; ++Y) {
      const auto [i, x] = gr.object(X);
      const auto [j, y] = gr.object(Y);
      std::vector<Matrix> acts;
      for (const auto& s : gr.layout(X, Y))
        acts.push_back(multiply(R.ring, m.structure[s.a][x], m.parts[j].action(R.functor(s.a)(x), y, s.k)));
      out.actions.push_back(std::move(acts));
    }
  return out;
}

RModule psi(const Grothendieck& gr, const DgModule& f) {
  const DgRepresentation& R = gr.representation();
  const FiniteCategory& C = R.base;
  RModule out;
  out.rep = gr.representation_ptr();
  for (std::size_t i = 0; i < C.object_count(); ++i) {
    const DgCategory& I = R.fiber(i);
    const std::size_t one = C.identity(i);
    const std::size_t n = I.object_count();
    DgModule part;
    part.base = R.fibers[i];
    for (std::size_t x = 0; x < n; ++x) part.values.push_back(f.values[gr.index(i, x)]);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::vector<Matrix> acts;
        const std::size_t ox = R.functor(one)(x);
        for (std::size_t g = 0; g < I.hom_dim(x, y); ++g) {
          GrMorphism h{{i, x}, {i, y}, {}};
          h.components[one] = I.compose(ox, x, y, unit_vector(I.hom_dim(x, y), g), R.eta(i, x));
          acts.push_back(f.act(gr.index(i, x), gr.index(i, y), gr.assemble(h)));
        }
        part.actions.push_back(std::move(acts));
      }
    out.parts.push_back(std::move(part));
  }
  for (std::size_t a = 0; a < C.morphism_count(); ++a) {
    const std::size_t i = C.morphism(a).source;
    const std::size_t j = C.morphism(a).target;
    std::vector<Matrix> comps;
    for (std::size_t x = 0; x < R.fiber(i).object_count(); ++x) {
      const std::size_t ax = R.functor(a)(x);
      GrMorphism h{{i, x}, {j, ax}, {}};
      h.components[a] = R.fiber(j).identity(ax);
      comps.push_back(f.act(gr.index(i, x), gr.index(j, ax), gr.assemble(h)));
    }
    out.structure.push_back(std::move(comps));
  }
  return out;
}

ModuleMap phi(const Grothendieck& gr, const RModuleMap& h) {
  ModuleMap out;
  for (std::size_t X = 0; X < gr.object_count(); ++X)
    out.components.push_back(h.parts[gr.object(X).i].components[gr.object(X).x]);
  return out;
}

RModuleMap psi(const Grothendieck& gr, const ModuleMap& h) {
  const DgRepresentation& R = gr.representation();
  RModuleMap out;
  for (std::size_t i = 0; i < R.base.object_count(); ++i) {
    ModuleMap part;
    for (std::size_t x = 0; x < R.fiber(i).object_count(); ++x) part.components.push_back(h.components[gr.index(i, x)]);
    out.parts.push_back(std::move(part));
  }
  return out;
}

namespace {

LinearSystem map_system(const DgModule& source, const DgModule& target) {
  require_same_base(*source.base, *target.base);
  LinearSystem sys(source.base->ring());
  std::vector<std::size_t> h;
  for (std::size_t x = 0; x < source.object_count(); ++x)
    h.push_back(sys.add_block(target.values[x].carrier(), source.values[x].carrier()));
  add_module_map_equations(sys, source, target, h);
  return sys;
}

struct RSystem {
  LinearSystem sys;
  std::vector<std::vector<std::size_t>> blocks;  // [i][x]
};

RSystem map_system(const RModule& source, const RModule& target) {
  const DgRepresentation& R = *source.rep;
  const FiniteCategory& C = R.base;
  RSystem out{LinearSystem(R.ring), {}};
  for (std::size_t i = 0; i < C.object_count(); ++i) {
    std::vector<std::size_t> h;
    for (std::size_t x = 0; x < R.fiber(i).object_count(); ++x)
      h.push_back(out.sys.add_block(target.parts[i].values[x].carrier(), source.parts[i].values[x].carrier()));
    add_module_map_equations(out.sys, source.parts[i], target.parts[i], h);
    out.blocks.push_back(std::move(h));
  }
  for (std::size_t a = 0; a < C.morphism_count(); ++a) {
    const std::size_t i = C.morphism(a).source;
    const std::size_t j = C.morphism(a).target;
    for (std::size_t x = 0; x < R.fiber(i).object_count(); ++x) {
      const std::size_t ax = R.functor(a)(x);
      const Matrix& sm = source.structure[a][x];
      const Matrix& tm = target.structure[a][x];
      out.sys.add_equation(target.parts[i].values[x].dim(), source.parts[j].values[ax].dim(),
                           {{1, &tm, out.blocks[j][ax], nullptr}, {-1, nullptr, out.blocks[i][x], &sm}});
    }
  }
  return out;
}

}  // namespace

std::vector<ModuleMap> module_map_basis(const DgModule& source, const DgModule& target) {
  std::vector<ModuleMap> out;
  for (auto& blocks : map_system(source, target).solve()) out.push_back({std::move(blocks)});
  return out;
}

std::vector<RModuleMap> module_map_basis(const RModule& source, const RModule& target) {
  RSystem rs = map_system(source, target);
  std::vector<RModuleMap> out;
  for (auto& blocks : rs.sys.solve()) {
    RModuleMap h;
    for (const auto& row : rs.blocks) {
      ModuleMap part;
      for (std::size_t b : row) part.components.push_back(blocks[b]);
      h.parts.push_back(std::move(part));
    }
    out.push_back(std::move(h));
  }
  return out;
}

Integer module_map_count(const DgModule& source, const DgModule& target) {
  auto card = map_system(source, target).solution_space().cardinality();
  if (!card) throw Refusal("module maps over an infinite ring cannot be counted");
  return *card;
}

std::string Verdict::text() const {
  switch (kind) {
    case Kind::equal:
      return "Equal";
    case Kind::isomorphic:
      return "Isomorphic";
    case Kind::not_isomorphic:
      break;
  }
  return "NotIsomorphic: " + reason;
}

std::vector<std::map<int, std::size_t>> rank_profile(const DgModule& m) {
  std::vector<std::map<int, std::size_t>> out;
  for (const auto& v : m.values) {
    std::map<int, std::size_t> ranks;
    for (int n : v.carrier().support()) ranks[n] = v.carrier().rank(n);
    out.push_back(std::move(ranks));
  }
  return out;
}

Verdict compare_modules(const DgModule& m, const DgModule& n) {
  require_same_base(*m.base, *n.base);
  Verdict v;
  if (same_module(m, n)) {
    v.kind = Verdict::Kind::equal;
    return v;
  }
  auto pm = rank_profile(m);
  auto pn = rank_profile(n);
  for (std::size_t x = 0; x < pm.size(); ++x)
    if (pm[x] != pn[x]) {
      v.reason = "rank profiles differ at " + m.base->object(x);
      return v;
    }
  return finish(search_isomorphism(m.base->ring(), map_system(m, n)));
}

Verdict compare_modules(const RModule& m, const RModule& n) {
  const DgRepresentation& R = *m.rep;
  Verdict v;
  bool equal = m.structure == n.structure;
  for (std::size_t i = 0; equal && i < m.parts.size(); ++i) equal = same_module(m.parts[i], n.parts[i]);
  if (equal) {
    v.kind = Verdict::Kind::equal;
    return v;
  }
  for (std::size_t i = 0; i < m.parts.size(); ++i)
    if (rank_profile(m.parts[i]) != rank_profile(n.parts[i])) {
      v.reason = "rank profiles differ over " + R.base.object(i);
      return v;
    }
  return finish(search_isomorphism(R.ring, map_system(m, n).sys));
}

}  // namespace dgrep
