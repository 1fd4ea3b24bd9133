#include "dgrep/json_io.hpp"

#include <fstream>
#include <sstream>

#include "dgrep/errors.hpp"

namespace dgrep {

namespace {

std::string hom_key(const std::string& x, const std::string& y) { return x + "->" + y; }

std::size_t object_index(const std::vector<std::string>& objects, const std::string& name, const std::string& what) {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return i;
  throw ParseError("unknown " + what + " '" + name + "'");
}

std::size_t label_index(const Complex& c, const std::string& label) {
  auto i = c.carrier().find(label);
  if (!i) throw ParseError("unknown basis label '" + label + "'");
  return *i;
}

const Json* member(const Json& j, const std::string& key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

Json functor_to_json(const DgFunctor& f) {
  const DgCategory& A = *f.source;
  const DgCategory& B = *f.target;
  Json out;
  out["objects"] = Json::object();
  for (std::size_t x = 0; x < A.object_count(); ++x) out["objects"][A.object(x)] = B.object(f(x));
  out["hom"] = Json::object();
  for (std::size_t x = 0; x < A.object_count(); ++x)
    for (std::size_t y = 0; y < A.object_count(); ++y) {
      if (A.hom_dim(x, y) == 0) continue;
      Json images = Json::object();
      for (std::size_t k = 0; k < A.hom_dim(x, y); ++k)
        images[A.hom(x, y).carrier().label(k)] = vector_to_json(f.on_hom(x, y).column(k), B.hom(f(x), f(y)));
      out["hom"][hom_key(A.object(x), A.object(y))] = images;
    }
  return out;
}

DgFunctorPtr functor_from_json(const Json& j, DgCategoryPtr source, DgCategoryPtr target, const Ring& ring) {
  auto f = std::make_shared<DgFunctor>();
  const DgCategory& A = *source;
  const DgCategory& B = *target;
  const Json* objects = member(j, "objects");
  for (std::size_t x = 0; x < A.object_count(); ++x) {
    std::string image = A.object(x);
    if (objects && objects->contains(A.object(x))) image = objects->at(A.object(x)).get<std::string>();
    f->object_map.push_back(object_index(B.objects(), image, "object of the target fiber"));
  }
  const Json* homs = member(j, "hom");
  for (std::size_t x = 0; x < A.object_count(); ++x)
    for (std::size_t y = 0; y < A.object_count(); ++y) {
      const Complex& src = A.hom(x, y);
      const Complex& tgt = B.hom(f->object_map[x], f->object_map[y]);
      Matrix m(tgt.dim(), src.dim());
      const Json* entry = homs ? member(*homs, hom_key(A.object(x), A.object(y))) : nullptr;
      for (std::size_t k = 0; k < src.dim(); ++k) {
        const std::string& label = src.carrier().label(k);
        if (entry) {
          if (entry->contains(label)) m.set_column(k, vector_from_json(entry->at(label), tgt, ring));
        } else {
          // Without an explicit table, basis elements go to the equally labelled ones.
          m(label_index(tgt, label), k) = 1;
        }
      }
      f->hom_maps.push_back(std::move(m));
    }
  f->source = std::move(source);
  f->target = std::move(target);
  return f;
}

Json components_to_json(const DgCategory& target, const DgCategory& source, const DgFunctor& from, const DgFunctor& to,
                        const std::vector<Vector>& comps) {
  Json out = Json::object();
  for (std::size_t x = 0; x < source.object_count(); ++x)
    out[source.object(x)] = vector_to_json(comps[x], target.hom(from(x), to(x)));
  return out;
}

std::vector<Vector> components_from_json(const Json* j, const DgCategory& source, const DgCategory& target,
                                         const DgFunctor& from, const DgFunctor& to, const Ring& ring,
                                         const std::string& what) {
  std::vector<Vector> out;
  for (std::size_t x = 0; x < source.object_count(); ++x) {
    const std::size_t fx = from(x);
    const std::size_t tx = to(x);
    if (j && j->contains(source.object(x))) {
      out.push_back(vector_from_json(j->at(source.object(x)), target.hom(fx, tx), ring));
    } else {
      if (fx != tx) throw ParseError(what + " at " + source.object(x) + " must be given: its endpoints differ");
      out.push_back(target.identity(fx));
    }
  }
  return out;
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Ring ring_from_json(const Json& j, const std::optional<Ring>& override) {
  if (override) return *override;
  const Json* r = member(j, "ring");
  if (!r) throw ParseError("missing \"ring\"");
  std::string name = r->get<std::string>();
  if (name == "Z/n") {
    const Json* n = member(j, "n");
    if (!n) throw ParseError("ring Z/n needs \"n\"");
    name = "Z/" + std::to_string(n->get<long>());
  }
  try {
    return Ring::parse(name);
  } catch (const RingError& e) {
    throw ParseError(e.what());
  }
}

Json ring_to_json(const Ring& ring) {
  Json out;
  if (ring.kind() == Ring::Kind::modular) {
    out["ring"] = "Z/n";
    out["n"] = ring.modulus();
  } else {
    out["ring"] = ring.name();
  }
  return out;
}

Scalar scalar_from_json(const Json& j, const Ring& ring) {
  if (j.is_number_integer()) return ring.reduce(Scalar(j.get<long>()));
  if (j.is_string()) {
    try {
      return ring.reduce(parse_scalar(j.get<std::string>()));
    } catch (const RingError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("coefficient must be an integer or a string like \"1/2\", got " + j.dump());
}

Json scalar_to_json(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return format_scalar(s);
}

Vector vector_from_json(const Json& j, const Complex& basis, const Ring& ring) {
  if (!j.is_object()) throw ParseError("expected a {label: coefficient} object, got " + j.dump());
  Vector v(basis.dim());
  for (const auto& [label, value] : j.items()) v[label_index(basis, label)] = scalar_from_json(value, ring);
  return v;
}

Json vector_to_json(const Vector& v, const Complex& basis) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[basis.carrier().label(i)] = scalar_to_json(v[i]);
  return out;
}

Matrix matrix_from_json(const Json& j, const Complex& rows, const Complex& cols, const Ring& ring) {
  if (!j.is_array()) throw ParseError("expected a list of [row, column, value] entries");
  Matrix m(rows.dim(), cols.dim());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw ParseError("matrix entry must be [row, column, value], got " + e.dump());
    m(label_index(rows, e[0].get<std::string>()), label_index(cols, e[1].get<std::string>())) = scalar_from_json(e[2], ring);
  }
  return m;
}

Json matrix_to_json(const Matrix& m, const Complex& rows, const Complex& cols) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) out.push_back({rows.carrier().label(r), cols.carrier().label(c), scalar_to_json(m(r, c))});
  return out;
}

Complex complex_from_json(const Json& j, const Ring& ring) {
  std::map<int, std::vector<std::string>> labels;
  if (const Json* degrees = member(j, "degrees"))
    for (const auto& [deg, names] : degrees->items()) labels[std::stoi(deg)] = names.get<std::vector<std::string>>();
  GradedModule carrier(labels);
  std::map<int, Matrix> blocks;
  if (const Json* d = member(j, "d"))
    for (const auto& [deg, rows] : d->items()) {
      const int n = std::stoi(deg);
      Matrix b(rows.size(), rows.empty() ? 0 : rows[0].size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != b.cols()) throw ParseError("ragged matrix for d_" + deg);
        for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = scalar_from_json(rows[r][c], ring);
      }
      if (b.rows() == 0) b = Matrix(carrier.rank(n + 1), carrier.rank(n));
      blocks[n] = std::move(b);
    }
  return Complex::from_blocks(std::move(carrier), blocks);
}

Json complex_to_json(const Complex& c) {
  Json out;
  out["degrees"] = Json::object();
  for (const auto& [deg, names] : c.carrier().labels_by_degree()) out["degrees"][std::to_string(deg)] = names;
  out["d"] = Json::object();
  for (int n : c.carrier().support()) {
    Matrix b = c.block(n);
    if (b.is_zero()) continue;
    Json rows = Json::array();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t col = 0; col < b.cols(); ++col) row.push_back(scalar_to_json(b(r, col)));
      rows.push_back(row);
    }
    out["d"][std::to_string(n)] = rows;
  }
  return out;
}

DgCategoryPtr category_from_json(const Json& j, const Ring& ring) {
  const auto objects = j.at("objects").get<std::vector<std::string>>();
  const std::size_t n = objects.size();
  const Json* homs = member(j, "hom");
  if (homs)
    for (const auto& [key, value] : homs->items()) {
      auto arrow = key.find("->");
      if (arrow == std::string::npos) throw ParseError("hom key '" + key + "' is not of the form x->y");
      object_index(objects, key.substr(0, arrow), "object");
      object_index(objects, key.substr(arrow + 2), "object");
    }
  std::vector<Complex> complexes;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Json* h = homs ? member(*homs, hom_key(objects[x], objects[y])) : nullptr;
      complexes.push_back(h ? complex_from_json(*h, ring) : Complex());
    }
  auto a = std::make_shared<DgCategory>(ring, objects, std::move(complexes));
  const Json* ids = member(j, "id");
  for (std::size_t x = 0; x < n; ++x) {
    if (!ids || !ids->contains(objects[x])) throw ParseError("missing identity for object '" + objects[x] + "'");
    const Json& id = ids->at(objects[x]);
    if (id.is_string()) {
      const std::size_t i = label_index(a->hom(x, x), id.get<std::string>());
      a->set_identity(x, unit_vector(a->hom_dim(x, x), i));
      // Unit law for a basis identity; explicit entries below may override.
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t f = 0; f < a->hom_dim(x, y); ++f) a->set_composite(x, x, y, f, i, unit_vector(a->hom_dim(x, y), f));
        for (std::size_t g = 0; g < a->hom_dim(y, x); ++g) a->set_composite(y, x, x, i, g, unit_vector(a->hom_dim(y, x), g));
      }
    } else {
      a->set_identity(x, vector_from_json(id, a->hom(x, x), ring));
    }
  }
  if (const Json* comp = member(j, "compose"))
    for (const auto& e : *comp) {
      const auto path = e.at("path").get<std::vector<std::string>>();
      if (path.size() != 3) throw ParseError("compose path must list three objects");
      const std::size_t x = object_index(objects, path[0], "object");
      const std::size_t y = object_index(objects, path[1], "object");
      const std::size_t z = object_index(objects, path[2], "object");
      const std::size_t g = label_index(a->hom(y, z), e.at("g").get<std::string>());
      const std::size_t f = label_index(a->hom(x, y), e.at("f").get<std::string>());
      a->set_composite(x, y, z, g, f, vector_from_json(e.at("result"), a->hom(x, z), ring));
    }
  return a;
}

Json category_to_json(const DgCategory& a) {
  Json out = ring_to_json(a.ring());
  out["kind"] = "category";
  out["objects"] = a.objects();
  out["hom"] = Json::object();
  const std::size_t n = a.object_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (a.hom_dim(x, y) > 0) out["hom"][hom_key(a.object(x), a.object(y))] = complex_to_json(a.hom(x, y));
  out["compose"] = Json::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t g = 0; g < a.hom_dim(y, z); ++g)
          for (std::size_t f = 0; f < a.hom_dim(x, y); ++f) {
            const Vector& v = a.basis_composite(x, y, z, g, f);
            if (is_zero(v)) continue;
            out["compose"].push_back({{"path", {a.object(x), a.object(y), a.object(z)}},
                                      {"g", a.hom(y, z).carrier().label(g)},
                                      {"f", a.hom(x, y).carrier().label(f)},
                                      {"result", vector_to_json(v, a.hom(x, z))}});
          }
  out["id"] = Json::object();
  for (std::size_t x = 0; x < n; ++x) out["id"][a.object(x)] = vector_to_json(a.identity(x), a.hom(x, x));
  return out;
}

RepresentationPtr representation_from_json(const Json& j, const Ring& ring) {
  const Json& base = j.at("base");
  const auto objects = base.at("objects").get<std::vector<std::string>>();
  std::vector<BaseMorphism> morphisms;
  std::vector<std::string> names;
  for (const auto& m : base.at("morphisms")) {
    morphisms.push_back({m.at("name").get<std::string>(),
                         object_index(objects, m.at("source").get<std::string>(), "base object"),
                         object_index(objects, m.at("target").get<std::string>(), "base object")});
    names.push_back(morphisms.back().name);
  }
  std::vector<std::size_t> identities;
  for (const auto& o : objects) identities.push_back(object_index(names, base.at("identities").at(o).get<std::string>(), "base morphism"));
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> table;
  if (const Json* comp = member(base, "compose"))
    for (const auto& e : *comp) {
      const auto t = e.get<std::vector<std::string>>();
      if (t.size() != 3) throw ParseError("base compose entries are [b, a, b o a]");
      table[{object_index(names, t[0], "base morphism"), object_index(names, t[1], "base morphism")}] =
          object_index(names, t[2], "base morphism");
    }
  FiniteCategory c(objects, morphisms, identities, table);

  std::vector<DgCategoryPtr> fibers;
  for (const auto& o : objects) fibers.push_back(category_from_json(j.at("fibers").at(o), ring));
  std::vector<DgFunctorPtr> functors;
  const Json* fj = member(j, "functors");
  for (const auto& m : morphisms) {
    const Json* entry = fj ? member(*fj, m.name) : nullptr;
    functors.push_back(functor_from_json(entry ? *entry : Json::object(), fibers[m.source], fibers[m.target], ring));
  }

  CoherenceData data;
  const Json* delta = member(j, "delta");
  const Json* eta = member(j, "eta");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const DgCategory& I = *fibers[i];
    DgFunctor id = identity_functor(fibers[i]);
    const DgFunctor& r1 = *functors[identities[i]];
    data.delta.push_back(components_from_json(delta ? member(*delta, objects[i]) : nullptr, I, I, id, r1, ring, "delta"));
    data.eta.push_back(components_from_json(eta ? member(*eta, objects[i]) : nullptr, I, I, r1, id, ring, "eta"));
  }
  const Json* mu = member(j, "mu");
  const Json* theta = member(j, "theta");
  for (std::size_t b = 0; b < morphisms.size(); ++b)
    for (std::size_t a = 0; a < morphisms.size(); ++a) {
      if (morphisms[a].target != morphisms[b].source) continue;
      auto ba = c.compose(b, a);
      if (!ba) throw ParseError("base composition table has no entry for " + names[b] + " o " + names[a]);
      const std::string key = names[b] + "," + names[a];
      DgFunctor composite = compose(*functors[b], *functors[a]);
      const DgCategory& I = *fibers[morphisms[a].source];
      const DgCategory& K = *fibers[morphisms[b].target];
      data.mu[{b, a}] = components_from_json(mu ? member(*mu, key) : nullptr, I, K, composite, *functors[*ba], ring, "mu");
      data.theta[{b, a}] =
          components_from_json(theta ? member(*theta, key) : nullptr, I, K, *functors[*ba], composite, ring, "theta");
    }
  return std::make_shared<DgRepresentation>(
      make_representation(ring, std::move(c), std::move(fibers), std::move(functors), std::move(data)));
}

Json representation_to_json(const DgRepresentation& r) {
  const FiniteCategory& c = r.base;
  Json out = ring_to_json(r.ring);
  out["kind"] = "representation";
  Json base;
  base["objects"] = c.objects();
  base["morphisms"] = Json::array();
  for (const auto& m : c.morphisms())
    base["morphisms"].push_back({{"name", m.name}, {"source", c.object(m.source)}, {"target", c.object(m.target)}});
  base["identities"] = Json::object();
  for (std::size_t i = 0; i < c.object_count(); ++i) base["identities"][c.object(i)] = c.morphism(c.identity(i)).name;
  base["compose"] = Json::array();
  for (std::size_t b = 0; b < c.morphism_count(); ++b)
    for (std::size_t a = 0; a < c.morphism_count(); ++a)
      if (auto ba = c.compose(b, a))
        base["compose"].push_back({c.morphism(b).name, c.morphism(a).name, c.morphism(*ba).name});
  out["base"] = base;
  out["fibers"] = Json::object();
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    Json f = category_to_json(r.fiber(i));
    f.erase("ring");
    f.erase("kind");
    out["fibers"][c.object(i)] = f;
  }
  out["functors"] = Json::object();
  for (std::size_t a = 0; a < c.morphism_count(); ++a) out["functors"][c.morphism(a).name] = functor_to_json(r.functor(a));
  out["delta"] = Json::object();
  out["eta"] = Json::object();
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    const auto& t = r.delta[i];
    out["delta"][c.object(i)] = components_to_json(r.fiber(i), r.fiber(i), *t.source, *t.target, t.components);
    out["eta"][c.object(i)] = components_to_json(r.fiber(i), r.fiber(i), *t.target, *t.source, t.inverse);
  }
  out["mu"] = Json::object();
  out["theta"] = Json::object();
  for (const auto& [ba, t] : r.mu) {
    const std::string key = c.morphism(ba.first).name + "," + c.morphism(ba.second).name;
    const DgCategory& I = r.fiber(c.morphism(ba.second).source);
    const DgCategory& K = r.fiber(c.morphism(ba.first).target);
    out["mu"][key] = components_to_json(K, I, *t.source, *t.target, t.components);
    out["theta"][key] = components_to_json(K, I, *t.target, *t.source, t.inverse);
  }
  return out;
}

DgModule dg_module_from_json(const Json& j, DgCategoryPtr base) {
  const DgCategory& A = *base;
  const Ring& ring = A.ring();
  const std::size_t n = A.object_count();
  DgModule m;
  const Json* values = member(j, "values");
  for (std::size_t x = 0; x < n; ++x) {
    const Json* v = values ? member(*values, A.object(x)) : nullptr;
    m.values.push_back(v ? complex_from_json(*v, ring) : Complex());
  }
  const Json* actions = member(j, "actions");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Json* entry = actions ? member(*actions, hom_key(A.object(x), A.object(y))) : nullptr;
      std::vector<Matrix> acts;
      for (std::size_t f = 0; f < A.hom_dim(x, y); ++f) {
        const std::string& label = A.hom(x, y).carrier().label(f);
        if (entry && entry->contains(label))
          acts.push_back(matrix_from_json(entry->at(label), m.values[x], m.values[y], ring));
        else
          acts.emplace_back(m.values[x].dim(), m.values[y].dim());
      }
      m.actions.push_back(std::move(acts));
    }
  m.base = std::move(base);
  return m;
}

Json dg_module_to_json(const DgModule& m) {
  const DgCategory& A = *m.base;
  const std::size_t n = A.object_count();
  Json out = ring_to_json(A.ring());
  out["kind"] = "dg-module";
  out["values"] = Json::object();
  for (std::size_t x = 0; x < n; ++x)
    if (m.values[x].dim() > 0) out["values"][A.object(x)] = complex_to_json(m.values[x]);
  out["actions"] = Json::object();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Json entry = Json::object();
      for (std::size_t f = 0; f < A.hom_dim(x, y); ++f) {
        Json mat = matrix_to_json(m.action(x, y, f), m.values[x], m.values[y]);
        if (!mat.empty()) entry[A.hom(x, y).carrier().label(f)] = mat;
      }
      if (!entry.empty()) out["actions"][hom_key(A.object(x), A.object(y))] = entry;
    }
  return out;
}

RModule r_module_from_json(const Json& j, RepresentationPtr rep) {
  const DgRepresentation& R = *rep;
  const FiniteCategory& C = R.base;
  RModule m;
  const Json* parts = member(j, "parts");
  for (std::size_t i = 0; i < C.object_count(); ++i) {
    const Json* p = parts ? member(*parts, C.object(i)) : nullptr;
    m.parts.push_back(dg_module_from_json(p ? *p : Json::object(), R.fibers[i]));
  }
  const Json* structure = member(j, "structure");
  for (std::size_t a = 0; a < C.morphism_count(); ++a) {
    const std::size_t i = C.morphism(a).source;
    const std::size_t jj = C.morphism(a).target;
    const Json* s = structure ? member(*structure, C.morphism(a).name) : nullptr;
    std::vector<Matrix> comps;
    for (std::size_t x = 0; x < R.fiber(i).object_count(); ++x) {
      const Complex& rows = m.parts[i].values[x];
      const Complex& cols = m.parts[jj].values[R.functor(a)(x)];
      const Json* e = s ? member(*s, R.fiber(i).object(x)) : nullptr;
      comps.push_back(e ? matrix_from_json(*e, rows, cols, R.ring) : Matrix(rows.dim(), cols.dim()));
    }
    m.structure.push_back(std::move(comps));
  }
  m.rep = std::move(rep);
  return m;
}

Json r_module_to_json(const RModule& m) {
  const DgRepresentation& R = *m.rep;
  const FiniteCategory& C = R.base;
  Json out = ring_to_json(R.ring);
  out["kind"] = "r-module";
  out["parts"] = Json::object();
  for (std::size_t i = 0; i < C.object_count(); ++i) {
    Json p = dg_module_to_json(m.parts[i]);
    p.erase("ring");
    p.erase("kind");
    out["parts"][C.object(i)] = p;
  }
  out["structure"] = Json::object();
  for (std::size_t a = 0; a < C.morphism_count(); ++a) {
    const std::size_t i = C.morphism(a).source;
    const std::size_t j = C.morphism(a).target;
    Json s = Json::object();
    for (std::size_t x = 0; x < R.fiber(i).object_count(); ++x) {
      Json mat = matrix_to_json(m.structure[a][x], m.parts[i].values[x], m.parts[j].values[R.functor(a)(x)]);
      if (!mat.empty()) s[R.fiber(i).object(x)] = mat;
    }
    out["structure"][C.morphism(a).name] = s;
  }
  return out;
}

std::vector<Element> elements_from_json(const Json& j, const DgCategory& a) {
  std::vector<Element> out;
  for (const auto& e : j) {
    const std::string key = e.at("hom").get<std::string>();
    auto arrow = key.find("->");
    if (arrow == std::string::npos) throw ParseError("hom key '" + key + "' is not of the form x->y");
    const std::size_t x = object_index(a.objects(), key.substr(0, arrow), "object");
    const std::size_t y = object_index(a.objects(), key.substr(arrow + 2), "object");
    out.push_back({x, y, vector_from_json(e.at("value"), a.hom(x, y), a.ring())});
  }
  return out;
}

TopologyCandidate topology_from_json(const Json& j, const DgCategory& a) {
  const std::size_t n = a.object_count();
  TopologyCandidate out(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Json* list = member(j, a.object(x));
    if (!list) continue;
    for (const auto& s : *list) {
      Subfunctor sub = zero_subfunctor(a, x);
      for (std::size_t y = 0; y < n; ++y)
        if (const Json* gens = member(s, a.object(y)))
          for (const auto& g : *gens) sub.parts[y].insert(vector_from_json(g, a.hom(y, x), a.ring()));
      out[x].push_back(std::move(sub));
    }
  }
  return out;
}

Json subfunctor_to_json(const DgCategory& a, const Subfunctor& s) {
  Json out = Json::object();
  for (std::size_t y = 0; y < s.parts.size(); ++y) {
    Json gens = Json::array();
    for (const auto& g : s.parts[y].generators()) gens.push_back(vector_to_json(g, a.hom(y, s.object)));
    if (!gens.empty()) out[a.object(y)] = gens;
  }
  return out;
}

Json report_to_json(const Report& r) {
  Json out;
  out["subject"] = r.subject();
  out["passed"] = r.passed();
  out["failure_count"] = r.failure_count();
  out["failures"] = Json::array();
  for (const auto& f : r.failures()) out["failures"].push_back({{"check", f.check}, {"detail", f.detail}});
  return out;
}

}  // namespace dgrep
