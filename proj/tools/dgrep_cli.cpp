// dgrep: validation, construction and comparison for dg-representations,
// right modules over them, and preadditive categories, over JSON files.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dgrep/corpus.hpp"
#include "dgrep/errors.hpp"
#include "dgrep/generators.hpp"
#include "dgrep/grothendieck.hpp"
#include "dgrep/json_io.hpp"
#include "dgrep/modules.hpp"
#include "dgrep/preadditive.hpp"

using namespace dgrep;

namespace {

struct Options {
  std::string ring;
  std::string window = "-3:3";
  bool json_report = false;
  std::string output;
  unsigned threads = 1;
};

std::optional<Ring> ring_override(const Options& o) {
  if (o.ring.empty()) return std::nullopt;
  try {
    return Ring::parse(o.ring);
  } catch (const RingError& e) {
    throw ParseError(std::string("--ring: ") + e.what());
  }
}

std::pair<int, int> parse_window(const std::string& text) {
  auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw ParseError("--window expects LO:HI, got '" + text + "'");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(text.substr(0, colon));
    hi = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParseError("--window expects LO:HI, got '" + text + "'");
  }
  if (lo > hi) throw ParseError("--window: LO must not exceed HI");
  return {lo, hi};
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw ParseError(o.output + ": cannot write");
  out << text;
}

int finish(const Options& o, const std::vector<Report>& reports) {
  bool ok = true;
  std::string text;
  if (o.json_report) {
    Json all = Json::array();
    for (const auto& r : reports) all.push_back(report_to_json(r));
    text = dump_json(reports.size() == 1 ? all[0] : all);
  } else {
    for (const auto& r : reports) text += r.text();
  }
  for (const auto& r : reports) ok = ok && r.passed();
  emit(o, text);
  return ok ? 0 : 1;
}

/// A representation file, or a category file; either way a category to work in.
struct Context {
  RepresentationPtr rep;
  std::shared_ptr<Grothendieck> gr;
  DgCategoryPtr category;
};

Context load_context(const std::string& path, const Options& o) {
  Json j = load_json(path);
  Ring ring = ring_from_json(j, ring_override(o));
  Context c;
  if (j.contains("base")) {
    c.rep = representation_from_json(j, ring);
    c.gr = std::make_shared<Grothendieck>(c.rep, o.threads);
    c.category = c.gr->category_ptr();
  } else {
    c.category = category_from_json(j, ring);
  }
  return c;
}

RepresentationPtr load_representation(const std::string& path, const Options& o) {
  Json j = load_json(path);
  if (!j.contains("base")) throw ParseError(path + ": not a representation (no \"base\")");
  return representation_from_json(j, ring_from_json(j, ring_override(o)));
}

std::size_t find_object(const DgCategory& a, const std::string& name) {
  auto x = a.find_object(name);
  if (!x) throw ParseError("unknown object '" + name + "'");
  return *x;
}

std::string kind_of(const Json& j) {
  if (j.contains("kind")) return j.at("kind").get<std::string>();
  if (j.contains("base")) return "representation";
  if (j.contains("parts")) return "r-module";
  if (j.contains("values")) return "dg-module";
  return "category";
}

int cmd_validate(const std::string& file, const std::string& context, const Options& o) {
  Json j = load_json(file);
  const std::string kind = kind_of(j);
  if (kind == "representation") {
    auto rep = representation_from_json(j, ring_from_json(j, ring_override(o)));
    Report r = check_representation(*rep, o.threads);
    Grothendieck gr(rep, o.threads);
    Report g = check_dg_category(gr.category(), o.threads);
    Report out("representation " + file);
    out.absorb(r);
    out.absorb(g, "Gr: ");
    return finish(o, {out});
  }
  if (kind == "category") {
    auto a = category_from_json(j, ring_from_json(j, ring_override(o)));
    Report out("category " + file);
    out.absorb(check_dg_category(*a, o.threads));
    return finish(o, {out});
  }
  if (context.empty()) throw ParseError("validating a " + kind + " needs the representation or category it lives over");
  if (kind == "r-module") {
    auto rep = load_representation(context, o);
    Report out("r-module " + file);
    out.absorb(check_r_module(r_module_from_json(j, rep), o.threads));
    return finish(o, {out});
  }
  if (kind == "dg-module") {
    Context c = load_context(context, o);
    Report out("dg-module " + file);
    out.absorb(check_dg_module(dg_module_from_json(j, c.category), o.threads));
    return finish(o, {out});
  }
  throw ParseError(file + ": unknown kind '" + kind + "'");
}

int cmd_groth(const std::string& rep_path, const Options& o) {
  Grothendieck gr(load_representation(rep_path, o), o.threads);
  emit(o, dump_json(category_to_json(gr.category())));
  return 0;
}

int cmd_check_module(const std::string& rep_path, const std::string& module_path, const Options& o) {
  const auto [lo, hi] = parse_window(o.window);
  auto rep = load_representation(rep_path, o);
  Grothendieck gr(rep, o.threads);
  Json j = load_json(module_path);
  Report out("module " + module_path);
  if (kind_of(j) == "r-module") {
    RModule m = r_module_from_json(j, rep);
    Report r = check_r_module(m, o.threads);
    out.absorb(r);
    if (r.passed()) out.absorb(check_generates(phi(gr, m), lo, hi), "phi(M): ");
  } else {
    DgModule f = dg_module_from_json(j, gr.category_ptr());
    Report r = check_dg_module(f, o.threads);
    out.absorb(r);
    if (r.passed()) out.absorb(check_generates(f, lo, hi));
  }
  return finish(o, {out});
}

int cmd_phi(const std::string& rep_path, const std::string& module_path, const Options& o) {
  auto rep = load_representation(rep_path, o);
  Grothendieck gr(rep, o.threads);
  RModule m = r_module_from_json(load_json(module_path), rep);
  Report r = check_r_module(m, o.threads);
  if (!r.passed()) return finish(o, {r});
  emit(o, dump_json(dg_module_to_json(phi(gr, m))));
  return 0;
}

int cmd_psi(const std::string& rep_path, const std::string& module_path, const Options& o) {
  auto rep = load_representation(rep_path, o);
  Grothendieck gr(rep, o.threads);
  DgModule f = dg_module_from_json(load_json(module_path), gr.category_ptr());
  Report r = check_dg_module(f, o.threads);
  if (!r.passed()) return finish(o, {r});
  emit(o, dump_json(r_module_to_json(psi(gr, f))));
  return 0;
}

int cmd_roundtrip(const std::string& rep_path, const std::string& module_path, const Options& o) {
  auto rep = load_representation(rep_path, o);
  Grothendieck gr(rep, o.threads);
  Json j = load_json(module_path);
  Verdict first, second;
  std::string first_name, second_name;
  if (kind_of(j) == "r-module") {
    RModule m = r_module_from_json(j, rep);
    Report r = check_r_module(m, o.threads);
    if (!r.passed()) return finish(o, {r});
    DgModule f = phi(gr, m);
    first = compare_modules(psi(gr, f), m);
    second = compare_modules(phi(gr, psi(gr, f)), f);
    first_name = "psi(phi(M)) vs M";
    second_name = "phi(psi(phi(M))) vs phi(M)";
  } else {
    DgModule f = dg_module_from_json(j, gr.category_ptr());
    Report r = check_dg_module(f, o.threads);
    if (!r.passed()) return finish(o, {r});
    RModule m = psi(gr, f);
    first = compare_modules(phi(gr, m), f);
    second = compare_modules(psi(gr, phi(gr, m)), m);
    first_name = "phi(psi(F)) vs F";
    second_name = "psi(phi(psi(F))) vs psi(F)";
  }
  const bool ok = first.equivalent() && second.equivalent();
  if (o.json_report) {
    Json out;
    out["passed"] = ok;
    out["verdicts"] = Json::array({{{"comparison", first_name}, {"verdict", first.text()}},
                                   {{"comparison", second_name}, {"verdict", second.text()}}});
    emit(o, dump_json(out));
  } else {
    emit(o, first_name + ": " + first.text() + "\n" + second_name + ": " + second.text() + "\n");
  }
  return ok ? 0 : 1;
}

int cmd_generator(const std::string& path, const std::string& object, int degree, const Options& o) {
  Context c = load_context(path, o);
  DgModule g = generator(c.category, find_object(*c.category, object), degree);
  emit(o, dump_json(dg_module_to_json(g)));
  return 0;
}

std::vector<std::pair<std::size_t, int>> parse_pairs(const DgCategory& a, const std::string& text) {
  std::vector<std::pair<std::size_t, int>> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto at = item.rfind('@');
    if (at == std::string::npos) throw ParseError("--pairs entries are OBJECT@DEGREE, got '" + item + "'");
    int n = 0;
    try {
      n = std::stoi(item.substr(at + 1));
    } catch (const std::exception&) {
      throw ParseError("bad degree in '" + item + "'");
    }
    out.emplace_back(find_object(a, item.substr(0, at)), n);
  }
  if (out.empty()) throw ParseError("--pairs is empty");
  return out;
}

int cmd_p_window(const std::string& path, const std::string& pairs, const Options& o) {
  Context c = load_context(path, o);
  emit(o, dump_json(category_to_json(*p_window(c.category, parse_pairs(*c.category, pairs)))));
  return 0;
}

DgCategoryPtr load_preadditive(const std::string& path, const Options& o) {
  Context c = load_context(path, o);
  Report r = check_preadditive(*c.category);
  if (!r.passed()) throw StructuralError(path + " is not preadditive:\n" + r.text());
  return c.category;
}

std::string center_element_text(const Center& z, const Vector& e) {
  const DgCategory& a = *z.category;
  std::string out = "[";
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    if (x) out += ", ";
    out += a.object(x) + ": " + element_text(a.hom(x, x), z.component(e, x));
  }
  return out + "]";
}

Json center_element_json(const Center& z, const Vector& e) {
  const DgCategory& a = *z.category;
  Json out = Json::object();
  for (std::size_t x = 0; x < a.object_count(); ++x) out[a.object(x)] = vector_to_json(z.component(e, x), a.hom(x, x));
  return out;
}

int cmd_center(const std::string& path, const Options& o) {
  Center z = center(load_preadditive(path, o));
  auto size = z.space.cardinality();
  if (o.json_report) {
    Json out;
    out["rank"] = z.space.rank();
    if (size) out["size"] = size->get_str();
    out["generators"] = Json::array();
    for (const auto& g : z.generators) out["generators"].push_back(center_element_json(z, g));
    emit(o, dump_json(out));
    return 0;
  }
  std::string text = "center rank " + std::to_string(z.space.rank());
  if (size) text += ", " + size->get_str() + " elements";
  text += "\n";
  for (const auto& g : z.generators) text += "  " + center_element_text(z, g) + "\n";
  emit(o, text);
  return 0;
}

int cmd_idempotents(const std::string& path, const Options& o) {
  Center z = center(load_preadditive(path, o));
  auto es = idempotents(z);
  if (o.json_report) {
    Json out;
    out["count"] = es.size();
    out["idempotents"] = Json::array();
    for (const auto& e : es) out["idempotents"].push_back(center_element_json(z, e));
    emit(o, dump_json(out));
    return 0;
  }
  std::string text = std::to_string(es.size()) + " idempotents\n";
  for (const auto& e : es) text += "  " + center_element_text(z, e) + "\n";
  emit(o, text);
  return 0;
}

Json ideal_json(const Ideal& i) {
  const DgCategory& a = *i.category;
  Json out = Json::object();
  for (std::size_t x = 0; x < a.object_count(); ++x)
    for (std::size_t y = 0; y < a.object_count(); ++y) {
      if (a.hom_dim(x, y) == 0) continue;
      Json gens = Json::array();
      for (const auto& g : i.at(x, y).generators()) gens.push_back(vector_to_json(g, a.hom(x, y)));
      out[a.object(x) + "->" + a.object(y)] = gens;
    }
  return out;
}

std::string ideal_text(const Ideal& i) {
  const DgCategory& a = *i.category;
  std::string out;
  for (std::size_t x = 0; x < a.object_count(); ++x)
    for (std::size_t y = 0; y < a.object_count(); ++y) {
      if (a.hom_dim(x, y) == 0) continue;
      out += "  (" + a.object(x) + ", " + a.object(y) + "):";
      auto gens = i.at(x, y).generators();
      if (gens.empty()) out += " 0";
      for (std::size_t k = 0; k < gens.size(); ++k) out += (k ? ", " : " ") + element_text(a.hom(x, y), gens[k]);
      out += "\n";
    }
  return out;
}

Ideal load_ideal(DgCategoryPtr a, const std::string& path) {
  Json j = load_json(path);
  return ideal_generated(a, elements_from_json(j.at("generators"), *a));
}

int cmd_ideal(const std::string& path, const std::string& gens_path, const Options& o) {
  DgCategoryPtr a = load_preadditive(path, o);
  Ideal i = load_ideal(a, gens_path);
  Ideal square = ideal_product(i, i);
  Report r = check_ideal(i);
  const bool idem = square == i;
  if (o.json_report) {
    Json out;
    out["ideal"] = ideal_json(i);
    out["product"] = ideal_json(square);
    out["idempotent"] = idem;
    out["report"] = report_to_json(r);
    emit(o, dump_json(out));
  } else {
    emit(o, "ideal\n" + ideal_text(i) + "product I.I\n" + ideal_text(square) +
                "idempotent: " + (idem ? "yes" : "no") + "\n" + r.text());
  }
  return r.passed() ? 0 : 1;
}

int cmd_topology(const std::string& path, const std::string& candidate, bool maximal, bool trivial, bool mutants,
                 const Options& o) {
  DgCategoryPtr a = load_preadditive(path, o);
  if (int(maximal) + int(trivial) + int(!candidate.empty()) != 1)
    throw ParseError("give exactly one of a topology file, --maximal or --trivial");
  TopologyCandidate j = maximal ? maximal_topology(*a)
                        : trivial ? trivial_topology(*a)
                                  : topology_from_json(load_json(candidate), *a);
  std::vector<Report> reports{check_linear_topology(*a, j)};
  if (mutants) {
    Report m("single-deletion mutants");
    for (std::size_t x = 0; x < j.size(); ++x)
      for (std::size_t k = 0; k < j[x].size(); ++k) {
        TopologyCandidate mutant = j;
        mutant[x].erase(mutant[x].begin() + static_cast<std::ptrdiff_t>(k));
        if (check_linear_topology(*a, mutant).passed())
          m.fail("mutant survives", "J(" + a->object(x) + ") without " + subfunctor_text(*a, j[x][k]));
      }
    reports.push_back(m);
  }
  return finish(o, reports);
}

int cmd_ttf(const std::string& path, const std::string& ideal_path, const Options& o) {
  DgCategoryPtr a = load_preadditive(path, o);
  std::vector<DgModule> samples;
  for (std::size_t x = 0; x < a->object_count(); ++x) samples.push_back(representable(a, x));
  DgModule sum = samples[0];
  for (std::size_t x = 1; x < samples.size(); ++x) sum = direct_sum(sum, samples[x]);
  samples.push_back(sum);
  std::vector<Report> reports;
  if (!ideal_path.empty()) {
    Report r = torsion_split(load_ideal(a, ideal_path), samples);
    reports.push_back(r);
  } else {
    Center z = center(a);
    for (const auto& e : idempotents(z)) {
      Report r("e = " + center_element_text(z, e));
      r.absorb(torsion_split(z, e, samples));
      reports.push_back(r);
    }
  }
  return finish(o, reports);
}

int cmd_corpus(const std::string& dir, const Options& o) {
  Ring ring = o.ring.empty() ? Ring::integers() : *ring_override(o);
  std::filesystem::create_directories(dir);
  for (const auto& name : corpus_names()) {
    auto rep = corpus_representation(name, ring);
    std::ofstream(std::filesystem::path(dir) / (name + ".json"), std::ios::binary)
        << dump_json(representation_to_json(*rep));
    Json m = r_module_to_json(corpus_sample(name, rep));
    m["representation"] = name + ".json";
    std::ofstream(std::filesystem::path(dir) / (name + "-sample.json"), std::ios::binary) << dump_json(m);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dgrep: dg-representations, their modules, and preadditive categories"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--ring", o.ring, "Ground ring override: Z, Q or Z/n");
  app.add_option("--window", o.window, "Degree window LO:HI for generation checks")->capture_default_str();
  app.add_flag("--json-report", o.json_report, "Print reports as JSON");
  app.add_option("-o,--output", o.output, "Write the result to a file instead of stdout");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  std::string a, b, pairs, object, topology_file, ideal_file;
  int degree = 0;
  bool maximal = false, trivial = false, mutants = false;

  auto* validate = app.add_subcommand("validate", "Check a representation, category or module file");
  validate->add_option("file", a, "File to check")->required()->check(CLI::ExistingFile);
  validate->add_option("context", b, "Representation or category a module lives over")->check(CLI::ExistingFile);

  auto* groth = app.add_subcommand("groth", "Write the Grothendieck construction of a representation");
  groth->add_option("representation", a)->required()->check(CLI::ExistingFile);

  auto add_rep_module = [&](CLI::App* s) {
    s->add_option("representation", a)->required()->check(CLI::ExistingFile);
    s->add_option("module", b)->required()->check(CLI::ExistingFile);
  };
  auto* check_module = app.add_subcommand("check-module", "Check a module and that generators reach it");
  add_rep_module(check_module);
  auto* phi_cmd = app.add_subcommand("phi", "R-module to dg-module over Gr(R)");
  add_rep_module(phi_cmd);
  auto* psi_cmd = app.add_subcommand("psi", "dg-module over Gr(R) to R-module");
  add_rep_module(psi_cmd);
  auto* roundtrip = app.add_subcommand("roundtrip", "Compare both round trips through phi and psi");
  add_rep_module(roundtrip);

  auto* gen = app.add_subcommand("generator", "Write the generator G_{x,n}");
  gen->add_option("input", a, "Representation or category")->required()->check(CLI::ExistingFile);
  gen->add_option("--object", object, "Object name (i:x for a representation)")->required();
  gen->add_option("--degree", degree)->required();

  auto* window = app.add_subcommand("p-window", "Write the category spanned by chosen generators");
  window->add_option("input", a, "Representation or category")->required()->check(CLI::ExistingFile);
  window->add_option("--pairs", pairs, "OBJECT@DEGREE,...")->required();

  auto* center_cmd = app.add_subcommand("center", "Center of a preadditive category");
  center_cmd->add_option("category", a)->required()->check(CLI::ExistingFile);
  auto* idem_cmd = app.add_subcommand("idempotents", "Idempotents of the center");
  idem_cmd->add_option("category", a)->required()->check(CLI::ExistingFile);

  auto* ideal = app.add_subcommand("ideal", "Ideal generated by a list of morphisms");
  ideal->add_option("category", a)->required()->check(CLI::ExistingFile);
  ideal->add_option("generators", b)->required()->check(CLI::ExistingFile);

  auto* topo = app.add_subcommand("topology-check", "Check the axioms of a linear Grothendieck topology");
  topo->add_option("category", a)->required()->check(CLI::ExistingFile);
  topo->add_option("topology", topology_file)->check(CLI::ExistingFile);
  topo->add_flag("--maximal", maximal, "Every subfunctor covers");
  topo->add_flag("--trivial", trivial, "Only representables cover");
  topo->add_flag("--mutants", mutants, "Also require every single-deletion mutant to fail");

  auto* ttf = app.add_subcommand("ttf-check", "Torsion splitting for central idempotents or an ideal");
  ttf->add_option("category", a)->required()->check(CLI::ExistingFile);
  ttf->add_option("--ideal", ideal_file, "Generators of an idempotent ideal")->check(CLI::ExistingFile);

  auto* corpus = app.add_subcommand("corpus", "Write the bundled representations and sample modules");
  corpus->add_option("directory", a)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(a, b, o);
    if (*groth) return cmd_groth(a, o);
    if (*check_module) return cmd_check_module(a, b, o);
    if (*phi_cmd) return cmd_phi(a, b, o);
    if (*psi_cmd) return cmd_psi(a, b, o);
    if (*roundtrip) return cmd_roundtrip(a, b, o);
    if (*gen) return cmd_generator(a, object, degree, o);
    if (*window) return cmd_p_window(a, pairs, o);
    if (*center_cmd) return cmd_center(a, o);
    if (*idem_cmd) return cmd_idempotents(a, o);
    if (*ideal) return cmd_ideal(a, b, o);
    if (*topo) return cmd_topology(a, topology_file, maximal, trivial, mutants, o);
    if (*ttf) return cmd_ttf(a, ideal_file, o);
    if (*corpus) return cmd_corpus(a, o);
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return 1;
  } catch (const RingError& e) {
    std::cerr << "ring error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
