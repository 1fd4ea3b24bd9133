#include "dgrep/corpus.hpp"

#include <array>

#include "dgrep/errors.hpp"

namespace dgrep {

namespace {

Matrix scalar_matrix(const Ring& ring, long value) {
  Matrix m(1, 1);
  m(0, 0) = ring.reduce(Scalar(value));
  return m;
}

DgCategoryPtr two_discrete_objects(const Ring& ring) {
  Complex one_x = Complex::zero_differential(GradedModule({{0, {"1x"}}}));
  Complex one_y = Complex::zero_differential(GradedModule({{0, {"1y"}}}));
  auto c = std::make_shared<DgCategory>(ring, std::vector<std::string>{"x", "y"},
                                        std::vector<Complex>{one_x, Complex(), Complex(), one_y});
  c->set_composite(0, 0, 0, 0, 0, {1});
  c->set_composite(1, 1, 1, 0, 0, {1});
  c->set_identity(0, {1});
  c->set_identity(1, {1});
  return c;
}

DgFunctorPtr identity_of(const DgCategoryPtr& a) { return std::make_shared<DgFunctor>(identity_functor(a)); }

DgFunctorPtr between_ground(const Ring& ring, const DgCategoryPtr& s, const DgCategoryPtr& t) {
  auto f = std::make_shared<DgFunctor>();
  f->source = s;
  f->target = t;
  f->object_map = {0};
  f->hom_maps = {scalar_matrix(ring, 1)};
  return f;
}

FiniteCategory one_object() { return FiniteCategory({"*"}, {{"1", 0, 0}}, {0}, {}); }

FiniteCategory arrow_category() {
  return FiniteCategory({"0", "1"}, {{"1_0", 0, 0}, {"1_1", 1, 1}, {"a", 0, 1}}, {0, 1}, {});
}

FiniteCategory cyclic_two() { return FiniteCategory({"*"}, {{"1", 0, 0}, {"s", 0, 0}}, {0}, {{{1, 1}, 0}}); }

RepresentationPtr strict(const Ring& ring, FiniteCategory base, std::vector<DgCategoryPtr> fibers,
                         std::vector<DgFunctorPtr> functors) {
  CoherenceData data = strict_coherence(base, fibers, functors);
  return std::make_shared<DgRepresentation>(
      make_representation(ring, std::move(base), std::move(fibers), std::move(functors), std::move(data)));
}

DgModule one_object_module(const DgCategoryPtr& base, Complex value, std::vector<Matrix> actions) {
  DgModule m;
  m.base = base;
  m.values = {std::move(value)};
  m.actions = {std::move(actions)};
  return m;
}

// Right action of End(D^1) on the dual complex: f acts by phi -> (-1)^{|f||phi|} phi o f.
DgModule dual_disk_module(const DgCategoryPtr& end) {
  const Ring& ring = end->ring();
  Matrix d(2, 2);
  d(1, 0) = 1;  // d(b*) = a*
  Complex dual(GradedModule({{-1, {"b*"}}, {0, {"a*"}}}), d);
  // Functionals as row vectors over (e, f): b* = (0, 1), a* = (1, 0).
  const int phi_row[2][2] = {{0, 1}, {1, 0}};
  const int phi_degree[2] = {-1, 0};
  // Basis of End(D^1) in total order s, 1, p, t as 2x2 matrices over (e, f).
  const int basis[4][2][2] = {{{0, 1}, {0, 0}}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}};
  std::vector<Matrix> actions;
  for (std::size_t f = 0; f < 4; ++f) {
    const int deg = end->basis_degree(0, 0, f);
    Matrix a(2, 2);
    for (std::size_t c = 0; c < 2; ++c) {
      int row[2] = {0, 0};
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) row[l] += phi_row[c][k] * basis[f][k][l];
      const long sign = (deg * phi_degree[c]) % 2 == 0 ? 1 : -1;
      a(1, c) = ring.reduce(Scalar(sign * row[0]));  // coefficient of a*
      a(0, c) = ring.reduce(Scalar(sign * row[1]));  // coefficient of b*
    }
    actions.push_back(std::move(a));
  }
  return one_object_module(end, dual, std::move(actions));
}

}  // namespace

DgCategoryPtr ground_category(const Ring& ring, const std::string& object) {
  Complex h = Complex::zero_differential(GradedModule({{0, {"1"}}}));
  auto c = std::make_shared<DgCategory>(ring, std::vector<std::string>{object}, std::vector<Complex>{h});
  c->set_composite(0, 0, 0, 0, 0, {1});
  c->set_identity(0, {1});
  return c;
}

DgCategoryPtr disk_endomorphisms(const Ring& ring) {
  // Endomorphisms of D^1 = k e (degree 0) + k f (degree 1), written as 2x2
  // matrices over (e, f) and expanded in the basis s = E_ef, 1, p = E_ee, t = E_fe.
  using M2 = std::array<std::array<long, 2>, 2>;
  const std::vector<M2> basis = {M2{{{0, 1}, {0, 0}}}, M2{{{1, 0}, {0, 1}}}, M2{{{1, 0}, {0, 0}}}, M2{{{0, 0}, {1, 0}}}};
  const int degree[4] = {-1, 0, 0, 1};
  auto product = [](const M2& a, const M2& b) {
    M2 c{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  auto expand = [&](const M2& m) {
    Vector v(4);
    v[0] = m[0][1];
    v[3] = m[1][0];
    v[1] = m[1][1];
    v[2] = m[0][0] - m[1][1];
    return reduce(ring, v);
  };
  const M2& t = basis[3];
  Matrix d(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    // d(phi) = d_V phi - (-1)^{|phi|} phi d_V with d_V = t
    M2 left = product(t, basis[k]);
    M2 right = product(basis[k], t);
    M2 diff{};
    const long sign = degree[k] % 2 == 0 ? 1 : -1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) diff[i][j] = left[i][j] - sign * right[i][j];
    d.set_column(k, expand(diff));
  }
  Complex hom(GradedModule({{-1, {"s"}}, {0, {"1", "p"}}, {1, {"t"}}}), reduce(ring, d));
  auto c = std::make_shared<DgCategory>(ring, std::vector<std::string>{"o"}, std::vector<Complex>{hom});
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t f = 0; f < 4; ++f) c->set_composite(0, 0, 0, g, f, expand(product(basis[g], basis[f])));
  c->set_identity(0, unit_vector(4, 1));
  return c;
}

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {"trivial", "arrow", "z2-strict", "z2-twisted", "arrow-disk"};
  return names;
}

RepresentationPtr corpus_representation(const std::string& name, const Ring& ring) {
  if (name == "trivial") {
    auto k = ground_category(ring, "p");
    return strict(ring, one_object(), {k}, {identity_of(k)});
  }
  if (name == "arrow") {
    auto p = ground_category(ring, "p");
    auto q = ground_category(ring, "q");
    return strict(ring, arrow_category(), {p, q}, {identity_of(p), identity_of(q), between_ground(ring, p, q)});
  }
  if (name == "z2-strict") {
    auto k = ground_category(ring, "p");
    return strict(ring, cyclic_two(), {k}, {identity_of(k), identity_of(k)});
  }
  if (name == "z2-twisted") {
    auto a = two_discrete_objects(ring);
    auto swap = std::make_shared<DgFunctor>();
    swap->source = a;
    swap->target = a;
    swap->object_map = {1, 0};
    swap->hom_maps = {scalar_matrix(ring, 1), Matrix(0, 0), Matrix(0, 0), scalar_matrix(ring, 1)};
    FiniteCategory base = cyclic_two();
    std::vector<DgCategoryPtr> fibers = {a};
    std::vector<DgFunctorPtr> functors = {identity_of(a), swap};
    CoherenceData data = strict_coherence(base, fibers, functors);
    const Vector minus = {ring.reduce(Scalar(-1))};
    data.mu[{1, 1}] = {minus, minus};
    data.theta[{1, 1}] = {minus, minus};
    return std::make_shared<DgRepresentation>(
        make_representation(ring, std::move(base), std::move(fibers), std::move(functors), std::move(data)));
  }
  if (name == "arrow-disk") {
    auto e = disk_endomorphisms(ring);
    return strict(ring, arrow_category(), {e, e}, {identity_of(e), identity_of(e), identity_of(e)});
  }
  throw StructuralError("unknown corpus representation '" + name + "'");
}

RModule corpus_sample(const std::string& name, RepresentationPtr rep) {
  const Ring& ring = rep->ring;
  RModule m;
  m.rep = rep;
  if (name == "trivial") {
    Complex value = Complex::zero_differential(GradedModule({{0, {"u"}}, {1, {"v"}}}));
    m.parts = {one_object_module(rep->fibers[0], value, {Matrix::identity(2)})};
    m.structure = {{Matrix::identity(2)}};
  } else if (name == "arrow") {
    Complex k = Complex::zero_differential(GradedModule({{0, {"u"}}}));
    m.parts = {one_object_module(rep->fibers[0], Complex(), {Matrix()}),
               one_object_module(rep->fibers[1], k, {Matrix::identity(1)})};
    m.structure = {{Matrix()}, {Matrix::identity(1)}, {Matrix(0, 1)}};
  } else if (name == "z2-strict") {
    Complex k = Complex::zero_differential(GradedModule({{0, {"u"}}}));
    m.parts = {one_object_module(rep->fibers[0], k, {Matrix::identity(1)})};
    m.structure = {{Matrix::identity(1)}, {scalar_matrix(ring, -1)}};
  } else if (name == "z2-twisted") {
    DgModule part;
    part.base = rep->fibers[0];
    part.values = {Complex::zero_differential(GradedModule({{0, {"u"}}})),
                   Complex::zero_differential(GradedModule({{0, {"w"}}}))};
    part.actions = {{Matrix::identity(1)}, {}, {}, {Matrix::identity(1)}};
    m.parts = {part};
    m.structure = {{Matrix::identity(1), Matrix::identity(1)}, {scalar_matrix(ring, 1), scalar_matrix(ring, -1)}};
  } else if (name == "arrow-disk") {
    DgModule dual = dual_disk_module(rep->fibers[0]);
    m.parts = {dual, dual};
    m.structure = {{Matrix::identity(2)}, {Matrix::identity(2)}, {Matrix::identity(2)}};
  } else {
    throw StructuralError("unknown corpus representation '" + name + "'");
  }
  return m;
}

}  // namespace dgrep
