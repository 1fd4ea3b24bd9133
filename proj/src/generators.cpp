#include "dgrep/generators.hpp"

#include "dgrep/errors.hpp"
#include "dgrep/linalg.hpp"

namespace dgrep {

DgModule representable(DgCategoryPtr a, std::size_t x) {
  const DgCategory& A = *a;
  const Ring& ring = A.ring();
  const std::size_t n = A.object_count();
  DgModule m;
  for (std::size_t y = 0; y < n; ++y) m.values.push_back(A.hom(y, x));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      std::vector<Matrix> acts;
      const Complex& target = A.hom(y, x);
      const Complex& source = A.hom(z, x);
      for (std::size_t f = 0; f < A.hom_dim(y, z); ++f) {
        Matrix act(target.dim(), source.dim());
        const int p = A.basis_degree(y, z, f);
        for (std::size_t h = 0; h < source.dim(); ++h)
          act.set_column(h, scale(ring, ring.sign(p * source.degree(h)), A.basis_composite(y, z, x, h, f)));
        acts.push_back(std::move(act));
      }
      m.actions.push_back(std::move(acts));
    }
  m.base = std::move(a);
  return m;
}

DgModule oslash(const DgModule& f, const Complex& v) {
  const Ring& ring = f.base->ring();
  const std::size_t n = f.object_count();
  std::vector<TensorProduct> values;
  for (std::size_t y = 0; y < n; ++y) values.push_back(tensor(ring, f.values[y], v));
  DgModule out;
  out.base = f.base;
  for (const auto& t : values) out.values.push_back(t.complex);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      std::vector<Matrix> acts;
      const TensorProduct& ty = values[y];
      const TensorProduct& tz = values[z];
      for (std::size_t g = 0; g < f.base->hom_dim(y, z); ++g) {
        const Matrix& a = f.action(y, z, g);
        Matrix act(ty.complex.dim(), tz.complex.dim());
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a(r, c) == 0) continue;
            for (std::size_t k = 0; k < v.dim(); ++k) act(ty.at(r, k), tz.at(c, k)) = a(r, c);
          }
        acts.push_back(std::move(act));
      }
      out.actions.push_back(std::move(acts));
    }
  return out;
}

DgModule generator(DgCategoryPtr a, std::size_t x, int n) { return oslash(representable(std::move(a), x), disk(n)); }

std::vector<std::size_t> degree_positions(const Complex& c, int k) {
  std::vector<std::size_t> out;
  for (std::size_t i = c.carrier().offset(k); i < c.carrier().offset(k) + c.carrier().rank(k); ++i) out.push_back(i);
  return out;
}

ModuleMap yoneda_map(const DgModule& m, std::size_t x, int n, const Vector& element) {
  const DgCategory& A = *m.base;
  const Ring& ring = A.ring();
  if (element.size() != m.values[x].dim()) throw StructuralError("element has the wrong length");
  for (std::size_t i = 0; i < element.size(); ++i)
    if (element[i] != 0 && m.values[x].degree(i) != n - 1)
      throw StructuralError("a map out of G_{x," + std::to_string(n) + "} needs an element of degree " +
                            std::to_string(n - 1));
  const Vector dm = apply(ring, m.values[x].differential(), element);
  const Complex d = disk(n);
  ModuleMap out;
  for (std::size_t y = 0; y < A.object_count(); ++y) {
    TensorProduct t = tensor(ring, A.hom(y, x), d);
    Matrix c(m.values[y].dim(), t.complex.dim());
    for (std::size_t h = 0; h < A.hom_dim(y, x); ++h) {
      const Matrix& act = m.action(y, x, h);
      c.set_column(t.at(h, 0), apply(ring, act, element));
      c.set_column(t.at(h, 1), apply(ring, act, dm));
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

Report check_generates(const DgModule& m, int lo, int hi) {
  if (lo > hi) throw StructuralError("empty degree window");
  Report report("generation");
  const DgCategory& A = *m.base;
  const Ring& ring = A.ring();
  const std::size_t n = A.object_count();
  std::vector<Submodule> images;
  for (std::size_t y = 0; y < n; ++y) images.emplace_back(ring, m.values[y].dim());
  for (std::size_t x = 0; x < n; ++x)
    for (int k = lo; k <= hi; ++k)
      for (std::size_t pos : degree_positions(m.values[x], k - 1)) {
        ModuleMap h = yoneda_map(m, x, k, unit_vector(m.values[x].dim(), pos));
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t c = 0; c < h.components[y].cols(); ++c) images[y].insert(h.components[y].column(c));
      }
  for (std::size_t y = 0; y < n; ++y)
    for (int k = lo; k <= hi; ++k)
      for (std::size_t pos : degree_positions(m.values[y], k))
        if (!images[y].contains(unit_vector(m.values[y].dim(), pos)))
          report.fail("generated", "(" + A.object(y) + ", " + std::to_string(k) + "): basis element " +
                                       m.values[y].carrier().label(pos) + " is not in the image of the generators");
  return report;
}

DgCategoryPtr p_window(DgCategoryPtr a, const std::vector<std::pair<std::size_t, int>>& pairs) {
  const DgCategory& A = *a;
  const Ring& ring = A.ring();
  const std::size_t k = pairs.size();
  std::vector<DgModule> gens;
  std::vector<std::string> names;
  for (const auto& [x, n] : pairs) {
    gens.push_back(generator(a, x, n));
    names.push_back(A.object(x) + "[" + std::to_string(n) + "]");
  }
  // hom(P, Q) for P = (x, n) is G_Q(x) in degree n - 1.
  std::vector<std::vector<std::size_t>> positions(k * k);
  std::vector<Complex> homs;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      const Complex& value = gens[q].values[pairs[p].first];
      auto pos = degree_positions(value, pairs[p].second - 1);
      std::vector<std::string> labels;
      for (std::size_t i : pos) labels.push_back(value.carrier().label(i));
      positions[p * k + q] = pos;
      homs.push_back(Complex::zero_differential(GradedModule(labels.empty() ? std::map<int, std::vector<std::string>>{}
                                                                           : std::map<int, std::vector<std::string>>{{0, labels}})));
    }
  auto window = std::make_shared<DgCategory>(ring, names, homs);
  auto embed = [&](std::size_t p, std::size_t q, std::size_t i) {
    const Complex& value = gens[q].values[pairs[p].first];
    return unit_vector(value.dim(), positions[p * k + q][i]);
  };
  auto restrict_to = [&](std::size_t p, std::size_t q, const Vector& v) {
    const auto& pos = positions[p * k + q];
    Vector out(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) out[i] = v[pos[i]];
    return out;
  };
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t g = 0; g < positions[q * k + r].size(); ++g) {
          const auto [y, m] = pairs[q];
          ModuleMap psi = yoneda_map(gens[r], y, m, embed(q, r, g));
          const Matrix& at_x = psi.components[pairs[p].first];
          for (std::size_t f = 0; f < positions[p * k + q].size(); ++f)
            window->set_composite(p, q, r, g, f, restrict_to(p, r, apply(ring, at_x, embed(p, q, f))));
        }
  for (std::size_t p = 0; p < k; ++p) {
    // The identity of G_P corresponds to 1_x (x) e.
    const auto [x, n] = pairs[p];
    TensorProduct t = tensor(ring, A.hom(x, x), disk(n));
    Vector id(t.complex.dim());
    for (std::size_t h = 0; h < A.hom_dim(x, x); ++h) id[t.at(h, 0)] = A.identity(x)[h];
    window->set_identity(p, restrict_to(p, p, id));
  }
  return window;
}

}  // namespace dgrep
