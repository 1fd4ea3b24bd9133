#include "dgrep/dgcat.hpp"

#include <algorithm>
#include <sstream>

#include "dgrep/errors.hpp"
#include "dgrep/parallel.hpp"

namespace dgrep {

DgCategory::DgCategory(Ring ring, std::vector<std::string> objects, std::vector<Complex> homs)
    : ring_(ring), objects_(std::move(objects)), homs_(std::move(homs)) {
  const std::size_t n = objects_.size();
  if (homs_.size() != n * n) throw StructuralError("dg-category needs one hom complex per ordered pair of objects");
  composition_.resize(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        composition_[table_index(x, y, z)].assign(hom_dim(y, z) * hom_dim(x, y), Vector(hom_dim(x, z)));
  identities_.reserve(n);
  for (std::size_t x = 0; x < n; ++x) identities_.emplace_back(hom_dim(x, x));
}

std::optional<std::size_t> DgCategory::find_object(const std::string& name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

std::size_t DgCategory::total_basis_size() const {
  std::size_t total = 0;
  for (const auto& h : homs_) total += h.dim();
  return total;
}

std::size_t DgCategory::table_index(std::size_t x, std::size_t y, std::size_t z) const {
  const std::size_t n = objects_.size();
  return (x * n + y) * n + z;
}

const Vector& DgCategory::basis_composite(std::size_t x, std::size_t y, std::size_t z, std::size_t g,
                                          std::size_t f) const {
  return composition_[table_index(x, y, z)][g * hom_dim(x, y) + f];
}

void DgCategory::set_composite(std::size_t x, std::size_t y, std::size_t z, std::size_t g, std::size_t f,
                               Vector result) {
  if (result.size() != hom_dim(x, z)) throw StructuralError("composite has the wrong length");
  composition_[table_index(x, y, z)][g * hom_dim(x, y) + f] = reduce(ring_, result);
}

Vector DgCategory::compose(std::size_t x, std::size_t y, std::size_t z, const Vector& g, const Vector& f) const {
  Vector out(hom_dim(x, z));
  const auto& table = composition_[table_index(x, y, z)];
  const std::size_t df = hom_dim(x, y);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[j] == 0) continue;
      axpy(out, g[i] * f[j], table[i * df + j]);
    }
  }
  return reduce(ring_, out);
}

void DgCategory::set_identity(std::size_t x, Vector v) {
  if (v.size() != hom_dim(x, x)) throw StructuralError("identity has the wrong length");
  identities_[x] = reduce(ring_, v);
}

Vector DgCategory::differential(std::size_t x, std::size_t y, const Vector& v) const {
  return apply(ring_, hom(x, y).differential(), v);
}

bool DgCategory::is_degree_zero() const {
  for (const auto& h : homs_) {
    for (std::size_t i = 0; i < h.dim(); ++i)
      if (h.degree(i) != 0) return false;
    if (!h.differential().is_zero()) return false;
  }
  return true;
}

std::string element_text(const Complex& hom, const Vector& v) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (v[i] != 1) out << v[i].get_str() << '*';
    out << hom.carrier().label(i);
  }
  if (first) out << '0';
  return out.str();
}

namespace {

bool homogeneous_of(const Complex& hom, const Vector& v, int degree) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0 && hom.degree(i) != degree) return false;
  return true;
}

}  // namespace

Report check_dg_category(const DgCategory& a, unsigned threads) {
  Report report("dg-category");
  const Ring& ring = a.ring();
  const std::size_t n = a.object_count();

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Report r = check_complex(ring, a.hom(x, y));
      report.absorb(r, "hom(" + a.object(x) + "," + a.object(y) + ") ");
    }

  for (std::size_t x = 0; x < n; ++x) {
    const auto& id = a.identity(x);
    if (!homogeneous_of(a.hom(x, x), id, 0)) report.fail("identity degree", "identity of " + a.object(x) + " is not of degree 0");
    if (!is_zero(a.differential(x, x, id))) report.fail("identity closed", "d(1_" + a.object(x) + ") != 0");
  }

  // Per-source-object slots keep the merged report independent of threads.
  std::vector<Report> slots(n);
  parallel_for(n, threads, [&](std::size_t w) {
    Report& r = slots[w];
    const std::string W = a.object(w);
    for (std::size_t x = 0; x < n; ++x) {
      const Complex& hwx = a.hom(w, x);
      // units
      for (std::size_t f = 0; f < hwx.dim(); ++f) {
        Vector ef = unit_vector(hwx.dim(), f);
        if (a.compose(w, x, x, a.identity(x), ef) != ef)
          r.fail("left unit", "1_" + a.object(x) + " o " + hwx.carrier().label(f) + " != " + hwx.carrier().label(f));
        if (a.compose(w, w, x, ef, a.identity(w)) != ef)
          r.fail("right unit", hwx.carrier().label(f) + " o 1_" + W + " != " + hwx.carrier().label(f));
      }
      for (std::size_t y = 0; y < n; ++y) {
        const Complex& hxy = a.hom(x, y);
        const Complex& hwy = a.hom(w, y);
        for (std::size_t g = 0; g < hxy.dim(); ++g)
          for (std::size_t f = 0; f < hwx.dim(); ++f) {
            const Vector& gf = a.basis_composite(w, x, y, g, f);
            const int dg = hxy.degree(g);
            const int df = hwx.degree(f);
            const std::string witness = "(" + W + "," + a.object(x) + "," + a.object(y) + ") " +
                                        hxy.carrier().label(g) + " o " + hwx.carrier().label(f);
            if (!homogeneous_of(hwy, gf, dg + df)) r.fail("degree additivity", witness);
            Vector eg = unit_vector(hxy.dim(), g);
            Vector ef = unit_vector(hwx.dim(), f);
            Vector lhs = a.differential(w, y, gf);
            Vector rhs = add(ring, a.compose(w, x, y, a.differential(x, y, eg), ef),
                             scale(ring, ring.sign(dg), a.compose(w, x, y, eg, a.differential(w, x, ef))));
            if (lhs != rhs)
              r.fail("Leibniz", witness + ": d(gf) = " + element_text(hwy, lhs) + " but dg f + (-1)^|g| g df = " +
                                    element_text(hwy, rhs));
          }
        for (std::size_t z = 0; z < n; ++z) {
          const Complex& hyz = a.hom(y, z);
          for (std::size_t h = 0; h < hyz.dim(); ++h)
            for (std::size_t g = 0; g < hxy.dim(); ++g) {
              const Vector& hg = a.basis_composite(x, y, z, h, g);
              for (std::size_t f = 0; f < hwx.dim(); ++f) {
                Vector left = a.compose(w, x, z, hg, unit_vector(hwx.dim(), f));
                Vector right = a.compose(w, y, z, unit_vector(hyz.dim(), h), a.basis_composite(w, x, y, g, f));
                if (left != right)
                  r.fail("associativity", "(" + W + "," + a.object(x) + "," + a.object(y) + "," + a.object(z) + ") " +
                                              hyz.carrier().label(h) + ", " + hxy.carrier().label(g) + ", " +
                                              hwx.carrier().label(f));
              }
            }
        }
      }
    }
  });
  for (const auto& r : slots) report.absorb(r);
  return report;
}

DgCategory opposite(const DgCategory& a) {
  const std::size_t n = a.object_count();
  std::vector<Complex> homs;
  homs.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) homs.push_back(a.hom(y, x));
  DgCategory op(a.ring(), a.objects(), std::move(homs));
  const Ring& ring = a.ring();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        // f in op(y,z) = a(z,y), g in op(x,y) = a(y,x); f o_op g = (-1)^{|f||g|} g o f.
        const Complex& fz = a.hom(z, y);
        const Complex& gy = a.hom(y, x);
        for (std::size_t f = 0; f < fz.dim(); ++f)
          for (std::size_t g = 0; g < gy.dim(); ++g) {
            const Vector& gf = a.basis_composite(z, y, x, g, f);
            op.set_composite(x, y, z, f, g, scale(ring, ring.sign(fz.degree(f) * gy.degree(g)), gf));
          }
      }
  for (std::size_t x = 0; x < n; ++x) op.set_identity(x, a.identity(x));
  return op;
}

Vector DgFunctor::apply(std::size_t x, std::size_t y, const Vector& v) const {
  return dgrep::apply(source->ring(), on_hom(x, y), v);
}

DgFunctor identity_functor(DgCategoryPtr a) {
  DgFunctor f;
  const std::size_t n = a->object_count();
  f.source = a;
  f.target = a;
  for (std::size_t x = 0; x < n; ++x) f.object_map.push_back(x);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) f.hom_maps.push_back(Matrix::identity(a->hom_dim(x, y)));
  return f;
}

DgFunctor compose(const DgFunctor& outer, const DgFunctor& inner) {
  if (inner.target.get() != outer.source.get() && !(inner.target->objects() == outer.source->objects()))
    throw StructuralError("composing dg-functors with mismatched endpoints");
  DgFunctor f;
  f.source = inner.source;
  f.target = outer.target;
  const std::size_t n = inner.source->object_count();
  for (std::size_t x = 0; x < n; ++x) f.object_map.push_back(outer(inner(x)));
  const Ring& ring = inner.source->ring();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      f.hom_maps.push_back(multiply(ring, outer.on_hom(inner(x), inner(y)), inner.on_hom(x, y)));
  return f;
}

Report check_dg_functor(const DgFunctor& F) {
  Report report("dg-functor");
  const DgCategory& A = *F.source;
  const DgCategory& B = *F.target;
  const Ring& ring = A.ring();
  const std::size_t n = A.object_count();
  if (F.object_map.size() != n) throw StructuralError("dg-functor object map has the wrong size");
  for (std::size_t x : F.object_map)
    if (x >= B.object_count()) throw StructuralError("dg-functor sends an object outside its target");
  if (F.hom_maps.size() != n * n) throw StructuralError("dg-functor needs a map for every hom");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Matrix& m = F.on_hom(x, y);
      if (m.rows() != B.hom_dim(F(x), F(y)) || m.cols() != A.hom_dim(x, y))
        throw StructuralError("dg-functor hom map on (" + A.object(x) + "," + A.object(y) + ") has the wrong shape");
      const std::string where = "(" + A.object(x) + "," + A.object(y) + ")";
      if (!is_homogeneous(m, A.hom(x, y).carrier(), B.hom(F(x), F(y)).carrier(), 0))
        report.fail("degree", where + " map is not of degree 0");
      if (!(multiply(ring, B.hom(F(x), F(y)).differential(), m) == multiply(ring, m, A.hom(x, y).differential())))
        report.fail("differential", where + " map does not commute with d");
    }
  for (std::size_t x = 0; x < n; ++x)
    if (F.apply(x, x, A.identity(x)) != B.identity(F(x)))
      report.fail("identity", "F(1_" + A.object(x) + ") != 1_" + B.object(F(x)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t g = 0; g < A.hom_dim(y, z); ++g)
          for (std::size_t f = 0; f < A.hom_dim(x, y); ++f) {
            Vector lhs = F.apply(x, z, A.basis_composite(x, y, z, g, f));
            Vector rhs = B.compose(F(x), F(y), F(z), F.apply(y, z, unit_vector(A.hom_dim(y, z), g)),
                                   F.apply(x, y, unit_vector(A.hom_dim(x, y), f)));
            if (lhs != rhs)
              report.fail("composition", "F(" + A.hom(y, z).carrier().label(g) + " o " +
                                             A.hom(x, y).carrier().label(f) + ") != F(g) o F(f)");
          }
  return report;
}

DgNatIso identity_nat_iso(DgFunctorPtr f) {
  DgNatIso t;
  t.source = f;
  t.target = f;
  for (std::size_t x = 0; x < f->source->object_count(); ++x) {
    t.components.push_back(f->target->identity((*f)(x)));
    t.inverse.push_back(f->target->identity((*f)(x)));
  }
  return t;
}

Report check_dg_nat_iso(const DgNatIso& t) {
  Report report("natural isomorphism");
  const DgFunctor& F = *t.source;
  const DgFunctor& G = *t.target;
  const DgCategory& A = *F.source;
  const DgCategory& B = *F.target;
  const std::size_t n = A.object_count();
  if (t.components.size() != n) throw StructuralError("natural transformation is missing components");
  if (t.inverse.size() != n) throw StructuralError("natural isomorphism is missing inverse components");
  for (std::size_t x = 0; x < n; ++x) {
    const std::string X = A.object(x);
    if (t.components[x].size() != B.hom_dim(F(x), G(x)) || t.inverse[x].size() != B.hom_dim(G(x), F(x)))
      throw StructuralError("component at " + X + " has the wrong length");
    if (!homogeneous_of(B.hom(F(x), G(x)), t.components[x], 0) ||
        !homogeneous_of(B.hom(G(x), F(x)), t.inverse[x], 0))
      report.fail("degree", "component at " + X + " is not of degree 0");
    if (!is_zero(B.differential(F(x), G(x), t.components[x])) || !is_zero(B.differential(G(x), F(x), t.inverse[x])))
      report.fail("closed", "component at " + X + " is not closed");
    if (B.compose(F(x), G(x), F(x), t.inverse[x], t.components[x]) != B.identity(F(x)))
      report.fail("invertible", "inverse o component != 1 at " + X);
    if (B.compose(G(x), F(x), G(x), t.components[x], t.inverse[x]) != B.identity(G(x)))
      report.fail("invertible", "component o inverse != 1 at " + X);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t f = 0; f < A.hom_dim(x, y); ++f) {
        Vector ef = unit_vector(A.hom_dim(x, y), f);
        Vector lhs = B.compose(F(x), F(y), G(y), t.components[y], F.apply(x, y, ef));
        Vector rhs = B.compose(F(x), G(x), G(y), G.apply(x, y, ef), t.components[x]);
        if (lhs != rhs) report.fail("naturality", "square for " + A.hom(x, y).carrier().label(f) + " does not commute");
      }
  return report;
}

}  // namespace dgrep
