#include "dgrep/preadditive.hpp"

#include <set>
#include <sstream>

#include "dgrep/errors.hpp"
#include "dgrep/generators.hpp"

namespace dgrep {

namespace {

void require_degree_zero(const DgCategory& a) {
  if (!a.is_degree_zero()) throw StructuralError("expected a preadditive category (degree 0, zero differential)");
}

using Key = std::vector<std::vector<Vector>>;

Key key_of(const Subfunctor& s) {
  Key k;
  for (const auto& p : s.parts) k.push_back(p.canonical_rows());
  return k;
}

bool listed(const std::vector<Subfunctor>& js, const Subfunctor& s) {
  for (const auto& t : js)
    if (t == s) return true;
  return false;
}

std::vector<Vector> elements_or_generators(const Submodule& s) {
  if (s.ring().is_finite()) return s.elements();
  return s.generators();
}

std::vector<Vector> all_morphisms(const DgCategory& a, std::size_t y, std::size_t x) {
  const Ring& ring = a.ring();
  if (ring.is_finite()) return Submodule::whole(ring, a.hom_dim(y, x)).elements();
  std::vector<Vector> out;
  for (std::size_t k = 0; k < a.hom_dim(y, x); ++k) out.push_back(unit_vector(a.hom_dim(y, x), k));
  return out;
}

SubmoduleFamily apply_ideal(const DgModule& m, const Ideal& ideal, const SubmoduleFamily& inside) {
  const DgCategory& A = *m.base;
  const Ring& ring = A.ring();
  const std::size_t n = A.object_count();
  SubmoduleFamily out;
  for (std::size_t x = 0; x < n; ++x) {
    Submodule t(ring, m.values[x].dim());
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& f : ideal.at(x, y).generators()) {
        Matrix act = m.act(x, y, f);
        for (const auto& v : inside[y].generators()) t.insert(apply(ring, act, v));
      }
    out.push_back(std::move(t));
  }
  return out;
}

std::string sample_name(std::size_t s) { return "sample " + std::to_string(s); }

}  // namespace

Report check_preadditive(const DgCategory& a) {
  Report report("preadditive category");
  if (!a.is_degree_zero()) report.fail("degree zero", "some hom has a nonzero degree or differential");
  report.absorb(check_dg_category(a));
  return report;
}

DgCategoryPtr disjoint_union(const DgCategory& a, const DgCategory& b) {
  const std::size_t na = a.object_count();
  const std::size_t nb = b.object_count();
  const std::size_t n = na + nb;
  std::vector<std::string> names;
  bool clash = false;
  for (const auto& o : b.objects()) clash = clash || a.find_object(o).has_value();
  for (const auto& o : a.objects()) names.push_back(clash ? "1." + o : o);
  for (const auto& o : b.objects()) names.push_back(clash ? "2." + o : o);
  auto part = [&](std::size_t x) { return x < na ? std::make_pair(0, x) : std::make_pair(1, x - na); };
  std::vector<Complex> homs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto [px, ix] = part(x);
      auto [py, iy] = part(y);
      if (px != py)
        homs.emplace_back();
      else
        homs.push_back(px == 0 ? a.hom(ix, iy) : b.hom(ix, iy));
    }
  auto out = std::make_shared<DgCategory>(a.ring(), names, homs);
  for (std::size_t x = 0; x < n; ++x) {
    auto [px, ix] = part(x);
    const DgCategory& c = px == 0 ? a : b;
    out->set_identity(x, c.identity(ix));
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto [py, iy] = part(y);
        auto [pz, iz] = part(z);
        if (px != py || py != pz) continue;
        for (std::size_t g = 0; g < c.hom_dim(iy, iz); ++g)
          for (std::size_t f = 0; f < c.hom_dim(ix, iy); ++f)
            out->set_composite(x, y, z, g, f, c.basis_composite(ix, iy, iz, g, f));
      }
  }
  return out;
}

Vector Center::component(const Vector& z, std::size_t x) const {
  const std::size_t d = category->hom_dim(x, x);
  return Vector(z.begin() + static_cast<long>(offsets[x]), z.begin() + static_cast<long>(offsets[x] + d));
}

Vector Center::multiply(const Vector& a, const Vector& b) const {
  Vector out;
  for (std::size_t x = 0; x < category->object_count(); ++x) {
    Vector c = category->compose(x, x, x, component(a, x), component(b, x));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Vector Center::one() const {
  Vector out;
  for (std::size_t x = 0; x < category->object_count(); ++x)
    out.insert(out.end(), category->identity(x).begin(), category->identity(x).end());
  return out;
}

Center center(DgCategoryPtr a) {
  const DgCategory& A = *a;
  require_degree_zero(A);
  const Ring& ring = A.ring();
  const std::size_t n = A.object_count();
  std::vector<std::size_t> offsets;
  std::size_t ambient = 0;
  for (std::size_t x = 0; x < n; ++x) {
    offsets.push_back(ambient);
    ambient += A.hom_dim(x, x);
  }
  std::vector<Vector> rows;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t f = 0; f < A.hom_dim(x, y); ++f) {
        // z_y o f - f o z_x = 0, one row per coordinate of hom(x, y).
        std::vector<Vector> eq(A.hom_dim(x, y), Vector(ambient));
        for (std::size_t k = 0; k < A.hom_dim(y, y); ++k) {
          const Vector& c = A.basis_composite(x, y, y, k, f);
          for (std::size_t r = 0; r < c.size(); ++r) eq[r][offsets[y] + k] += c[r];
        }
        for (std::size_t k = 0; k < A.hom_dim(x, x); ++k) {
          const Vector& c = A.basis_composite(x, x, y, f, k);
          for (std::size_t r = 0; r < c.size(); ++r) eq[r][offsets[x] + k] -= c[r];
        }
        for (auto& e : eq) rows.push_back(reduce(ring, e));
      }
  Matrix m(rows.size(), ambient);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c) m(r, c) = rows[r][c];
  Submodule space = rows.empty() ? Submodule::whole(ring, ambient) : Submodule::span(ring, ambient, kernel(ring, m));
  Center z{a, offsets, ambient, space, space.generators(), {}};
  for (const auto& g : z.generators) {
    std::vector<Vector> row;
    for (const auto& h : z.generators) row.push_back(z.multiply(g, h));
    z.table.push_back(std::move(row));
  }
  return z;
}

std::vector<Vector> idempotents(const Center& z) {
  const Ring& ring = z.category->ring();
  std::vector<Vector> out;
  if (ring.is_finite()) {
    for (const auto& e : z.space.elements())
      if (z.multiply(e, e) == e) out.push_back(e);
    return out;
  }
  const std::size_t r = z.generators.size();
  if (r > 4) throw Refusal("center of rank " + std::to_string(r) + " over " + ring.name() + " exceeds the rank-4 search");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Vector expected = i == j ? z.generators[i] : Vector(z.ambient);
      if (z.table[i][j] != expected)
        throw Refusal("center over " + ring.name() + " is not presented by orthogonal idempotents");
    }
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    Vector e(z.ambient);
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t{1} << i)) e = add(ring, e, z.generators[i]);
    out.push_back(e);
  }
  return out;
}

Ideal zero_ideal(DgCategoryPtr a) {
  Ideal i{a, {}};
  for (std::size_t x = 0; x < a->object_count(); ++x)
    for (std::size_t y = 0; y < a->object_count(); ++y) i.parts.emplace_back(a->ring(), a->hom_dim(x, y));
  return i;
}

Ideal whole_ideal(DgCategoryPtr a) {
  Ideal i{a, {}};
  for (std::size_t x = 0; x < a->object_count(); ++x)
    for (std::size_t y = 0; y < a->object_count(); ++y) i.parts.push_back(Submodule::whole(a->ring(), a->hom_dim(x, y)));
  return i;
}

Ideal ideal_generated(DgCategoryPtr a, const std::vector<Element>& gens) {
  const DgCategory& A = *a;
  require_degree_zero(A);
  const std::size_t n = A.object_count();
  Ideal ideal = zero_ideal(a);
  for (const auto& g : gens) {
    if (g.source >= n || g.target >= n || g.value.size() != A.hom_dim(g.source, g.target))
      throw StructuralError("ideal generator is not a morphism of the category");
    ideal.parts[g.source * n + g.target].insert(g.value);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (const auto& g : ideal.at(x, y).generators()) {
          for (std::size_t z = 0; z < n; ++z)
            for (std::size_t l = 0; l < A.hom_dim(y, z); ++l) {
              Vector v = A.compose(x, y, z, unit_vector(A.hom_dim(y, z), l), g);
              if (!ideal.at(x, z).contains(v)) {
                ideal.parts[x * n + z].insert(v);
                changed = true;
              }
            }
          for (std::size_t w = 0; w < n; ++w)
            for (std::size_t r = 0; r < A.hom_dim(w, x); ++r) {
              Vector v = A.compose(w, x, y, g, unit_vector(A.hom_dim(w, x), r));
              if (!ideal.at(w, y).contains(v)) {
                ideal.parts[w * n + y].insert(v);
                changed = true;
              }
            }
        }
  }
  return ideal;
}

Ideal ideal_product(const Ideal& i, const Ideal& k) {
  const DgCategory& A = *i.category;
  const std::size_t n = A.object_count();
  Ideal out = zero_ideal(i.category);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z)
      for (const auto& f : k.at(x, z).generators())
        for (std::size_t y = 0; y < n; ++y)
          for (const auto& g : i.at(z, y).generators()) out.parts[x * n + y].insert(A.compose(x, z, y, g, f));
  return out;
}

bool is_idempotent(const Ideal& i) { return ideal_product(i, i) == i; }

Report check_ideal(const Ideal& ideal) {
  Report report("ideal");
  const DgCategory& A = *ideal.category;
  const std::size_t n = A.object_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& g : ideal.at(x, y).generators()) {
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t l = 0; l < A.hom_dim(y, z); ++l)
            if (!ideal.at(x, z).contains(A.compose(x, y, z, unit_vector(A.hom_dim(y, z), l), g)))
              report.fail("left closed", A.object(x) + "->" + A.object(y) + " " + element_text(A.hom(x, y), g) +
                                             " composed with " + A.hom(y, z).carrier().label(l));
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t r = 0; r < A.hom_dim(w, x); ++r)
            if (!ideal.at(w, y).contains(A.compose(w, x, y, g, unit_vector(A.hom_dim(w, x), r))))
              report.fail("right closed", A.object(x) + "->" + A.object(y) + " " + element_text(A.hom(x, y), g) +
                                              " precomposed with " + A.hom(w, x).carrier().label(r));
      }
  return report;
}

SubmoduleFamily trace(const std::vector<DgModule>& sources, const DgModule& m) {
  const Ring& ring = m.base->ring();
  SubmoduleFamily out;
  for (const auto& v : m.values) out.emplace_back(ring, v.dim());
  for (const auto& s : sources)
    for (const auto& h : module_map_basis(s, m))
      for (std::size_t x = 0; x < out.size(); ++x)
        for (std::size_t c = 0; c < h.components[x].cols(); ++c) out[x].insert(h.components[x].column(c));
  return out;
}

Ideal trace_ideal(const std::vector<DgModule>& sources, DgCategoryPtr a) {
  const std::size_t n = a->object_count();
  Ideal ideal = zero_ideal(a);
  for (std::size_t x = 0; x < n; ++x) {
    SubmoduleFamily t = trace(sources, representable(a, x));
    for (std::size_t y = 0; y < n; ++y) ideal.parts[y * n + x] = t[y];
  }
  return ideal;
}

Subfunctor full_subfunctor(const DgCategory& a, std::size_t x) {
  Subfunctor s{x, {}};
  for (std::size_t y = 0; y < a.object_count(); ++y) s.parts.push_back(Submodule::whole(a.ring(), a.hom_dim(y, x)));
  return s;
}

Subfunctor zero_subfunctor(const DgCategory& a, std::size_t x) {
  Subfunctor s{x, {}};
  for (std::size_t y = 0; y < a.object_count(); ++y) s.parts.emplace_back(a.ring(), a.hom_dim(y, x));
  return s;
}

Subfunctor pullback(const DgCategory& a, const Subfunctor& s, std::size_t y, const Vector& f) {
  const std::size_t x = s.object;
  Subfunctor out{y, {}};
  for (std::size_t z = 0; z < a.object_count(); ++z) {
    Matrix l(a.hom_dim(z, x), a.hom_dim(z, y));
    for (std::size_t k = 0; k < a.hom_dim(z, y); ++k) l.set_column(k, a.compose(z, y, x, f, unit_vector(a.hom_dim(z, y), k)));
    out.parts.push_back(Submodule::span(a.ring(), a.hom_dim(z, y), preimage(a.ring(), l, s.parts[z])));
  }
  return out;
}

Subfunctor generated_subfunctor(const DgCategory& a, std::size_t x,
                                const std::vector<std::pair<std::size_t, Vector>>& elements) {
  const std::size_t n = a.object_count();
  Subfunctor s = zero_subfunctor(a, x);
  for (const auto& [y, v] : elements) s.parts[y].insert(v);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& g : s.parts[y].generators())
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t r = 0; r < a.hom_dim(z, y); ++r) {
            Vector v = a.compose(z, y, x, g, unit_vector(a.hom_dim(z, y), r));
            if (!s.parts[z].contains(v)) {
              s.parts[z].insert(v);
              changed = true;
            }
          }
  }
  return s;
}

bool is_subfunctor(const DgCategory& a, const Subfunctor& s) {
  const std::size_t n = a.object_count();
  if (s.object >= n || s.parts.size() != n) return false;
  for (std::size_t y = 0; y < n; ++y)
    if (s.parts[y].ambient() != a.hom_dim(y, s.object)) return false;
  for (std::size_t y = 0; y < n; ++y)
    for (const auto& g : s.parts[y].generators())
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t r = 0; r < a.hom_dim(z, y); ++r)
          if (!s.parts[z].contains(a.compose(z, y, s.object, g, unit_vector(a.hom_dim(z, y), r)))) return false;
  return true;
}

std::vector<Subfunctor> all_subfunctors(const DgCategory& a, std::size_t x, std::size_t limit) {
  if (!a.ring().is_finite()) throw Refusal("subfunctors can only be enumerated over a finite ring");
  const std::size_t n = a.object_count();
  std::vector<Subfunctor> found = {zero_subfunctor(a, x)};
  std::set<Key> seen = {key_of(found[0])};
  std::vector<std::vector<Vector>> morphisms;
  for (std::size_t y = 0; y < n; ++y) morphisms.push_back(all_morphisms(a, y, x));
  for (std::size_t next = 0; next < found.size(); ++next) {
    const Subfunctor s = found[next];
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& v : morphisms[y]) {
        if (s.parts[y].contains(v)) continue;
        std::vector<std::pair<std::size_t, Vector>> gens;
        for (std::size_t z = 0; z < n; ++z)
          for (const auto& g : s.parts[z].generators()) gens.emplace_back(z, g);
        gens.emplace_back(y, v);
        Subfunctor t = generated_subfunctor(a, x, gens);
        if (seen.insert(key_of(t)).second) {
          if (found.size() >= limit) throw Refusal("more than " + std::to_string(limit) + " subfunctors");
          found.push_back(std::move(t));
        }
      }
  }
  return found;
}

std::string subfunctor_text(const DgCategory& a, const Subfunctor& s) {
  std::ostringstream out;
  out << "S<=A(-," << a.object(s.object) << ")[";
  for (std::size_t y = 0; y < s.parts.size(); ++y) {
    if (y) out << "; ";
    out << a.object(y) << ":";
    auto gens = s.parts[y].generators();
    if (gens.empty()) out << " 0";
    for (std::size_t g = 0; g < gens.size(); ++g) out << (g ? ", " : " ") << element_text(a.hom(y, s.object), gens[g]);
  }
  out << "]";
  return out.str();
}

TopologyCandidate maximal_topology(const DgCategory& a) {
  TopologyCandidate j;
  for (std::size_t x = 0; x < a.object_count(); ++x) j.push_back(all_subfunctors(a, x));
  return j;
}

TopologyCandidate trivial_topology(const DgCategory& a) {
  TopologyCandidate j;
  for (std::size_t x = 0; x < a.object_count(); ++x) j.push_back({full_subfunctor(a, x)});
  return j;
}

Report check_linear_topology(const DgCategory& a, const TopologyCandidate& j) {
  require_degree_zero(a);
  Report report("linear topology");
  const std::size_t n = a.object_count();
  if (j.size() != n) throw StructuralError("topology candidate needs a list for every object");
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& s : j[x])
      if (s.object != x || !is_subfunctor(a, s))
        throw StructuralError("J(" + a.object(x) + ") lists something that is not a subfunctor of A(-," + a.object(x) + ")");

  for (std::size_t x = 0; x < n; ++x)
    if (!listed(j[x], full_subfunctor(a, x))) report.fail("maximality", "A(-," + a.object(x) + ") is missing from J(" + a.object(x) + ")");

  std::vector<std::vector<std::vector<Vector>>> morphisms(n, std::vector<std::vector<Vector>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) morphisms[y][x] = all_morphisms(a, y, x);

  for (std::size_t x = 0; x < n; ++x)
    for (const auto& s : j[x])
      for (std::size_t y = 0; y < n; ++y)
        for (const auto& f : morphisms[y][x])
          if (!listed(j[y], pullback(a, s, y, f)))
            report.fail("stability", "pullback of " + subfunctor_text(a, s) + " along " + element_text(a.hom(y, x), f) +
                                       " is not in J(" + a.object(y) + ")");

  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Subfunctor> candidates;
    if (a.ring().is_finite()) {
      candidates = all_subfunctors(a, x);
    } else {
      candidates.push_back(zero_subfunctor(a, x));
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t k = 0; k < a.hom_dim(y, x); ++k)
          candidates.push_back(generated_subfunctor(a, x, {{y, unit_vector(a.hom_dim(y, x), k)}}));
    }
    for (const auto& s2 : candidates) {
      if (listed(j[x], s2)) continue;
      for (const auto& s1 : j[x]) {
        bool all_covered = true;
        for (std::size_t y = 0; y < n && all_covered; ++y)
          for (const auto& f : elements_or_generators(s1.parts[y]))
            if (!listed(j[y], pullback(a, s2, y, f))) {
              all_covered = false;
              break;
            }
        if (all_covered)
          report.fail("local character", subfunctor_text(a, s2) + " is locally covered by " + subfunctor_text(a, s1) +
                                     " but is not in J(" + a.object(x) + ")");
      }
    }
  }
  return report;
}

SubmoduleFamily torsion_part(const DgModule& m, const Ideal& i) {
  SubmoduleFamily whole;
  for (const auto& v : m.values) whole.push_back(Submodule::whole(m.base->ring(), v.dim()));
  return apply_ideal(m, i, whole);
}

Report torsion_split(const Ideal& ideal, const std::vector<DgModule>& samples, const std::vector<SampleMap>& maps) {
  if (!is_idempotent(ideal)) throw Refusal("torsion splitting needs an idempotent ideal");
  Report report("torsion split");
  const DgCategory& A = *ideal.category;
  std::vector<SubmoduleFamily> parts;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const DgModule& m = samples[s];
    SubmoduleFamily t = torsion_part(m, ideal);
    SubmoduleFamily tt = apply_ideal(m, ideal, t);
    for (std::size_t x = 0; x < A.object_count(); ++x)
      if (!(tt[x] == t[x])) report.fail("t(t(M)) = t(M)", sample_name(s) + " at " + A.object(x));
    parts.push_back(std::move(t));
  }
  for (const auto& h : maps) {
    const Ring& ring = A.ring();
    for (std::size_t x = 0; x < A.object_count(); ++x)
      for (const auto& v : parts[h.source][x].generators())
        if (!parts[h.target][x].contains(apply(ring, h.map.components[x], v))) {
          report.fail("functorial", "map " + sample_name(h.source) + " -> " + sample_name(h.target) + " at " + A.object(x));
          break;
        }
  }
  return report;
}

Report torsion_split(const Center& z, const Vector& e, const std::vector<DgModule>& samples,
                     const std::vector<SampleMap>& maps) {
  if (!z.space.contains(e)) throw Refusal("element is not central");
  if (z.multiply(e, e) != e) throw Refusal("element is not idempotent");
  const DgCategory& A = *z.category;
  const Ring& ring = A.ring();
  std::vector<Element> gens;
  for (std::size_t x = 0; x < A.object_count(); ++x) gens.push_back({x, x, z.component(e, x)});
  Ideal ideal = ideal_generated(z.category, gens);
  Report report = torsion_split(ideal, samples, maps);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const DgModule& m = samples[s];
    SubmoduleFamily t = torsion_part(m, ideal);
    for (std::size_t x = 0; x < A.object_count(); ++x) {
      const std::size_t d = m.values[x].dim();
      Matrix ex = m.act(x, x, z.component(e, x));
      Submodule em = image(ring, ex);
      Submodule fm = image(ring, subtract(ring, Matrix::identity(d), ex));
      if (!em.sum(fm).is_whole() || !em.intersect(fm).is_zero())
        report.fail("split", sample_name(s) + " at " + A.object(x) + " is not eM (+) (1-e)M");
      if (!(t[x] == em)) report.fail("trace = eM", sample_name(s) + " at " + A.object(x));
    }
  }
  return report;
}

}  // namespace dgrep
