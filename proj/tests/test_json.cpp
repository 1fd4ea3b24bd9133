#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dgrep/generators.hpp"
#include "dgrep/grothendieck.hpp"
#include "dgrep/json_io.hpp"
#include "fixtures.hpp"

using namespace dgrep;

namespace {

const std::filesystem::path corpus_dir = DGREP_CORPUS_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
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

TEST_CASE("rings and scalars") {
  for (const Ring& ring : {Ring::integers(), Ring::rationals(), Ring::modular(6)})
    CHECK(ring_from_json(ring_to_json(ring)) == ring);
  CHECK(ring_from_json(Json{{"ring", "Z"}}, Ring::modular(2)) == Ring::modular(2));
  CHECK(scalar_from_json(Json("3/4"), Ring::rationals()) == Scalar(3, 4));
  CHECK(scalar_from_json(Json(-1), Ring::modular(3)) == Scalar(2));
  CHECK_THROWS_AS(ring_from_json(Json{{"ring", "R"}}), ParseError);
}

TEST_CASE("complexes round trip") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(2)}) {
    Complex d = disk(1);
    CHECK(complex_from_json(complex_to_json(d), ring) == d);
    Complex e = disk_endomorphisms(ring)->hom(0, 0);
    CHECK(complex_from_json(complex_to_json(e), ring) == e);
  }
}

TEST_CASE("categories round trip") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(3)}) {
    for (const DgCategoryPtr& a : std::vector<DgCategoryPtr>{fixtures::a2(ring), fixtures::a3(ring), fixtures::dual_numbers(ring),
                          fixtures::epsilon_category(ring), disk_endomorphisms(ring)}) {
      Json j = category_to_json(*a);
      CHECK(same_structure(*category_from_json(j, ring), *a));
      CHECK(dump_json(category_to_json(*category_from_json(j, ring))) == dump_json(j));
    }
    for (const auto& [name, rep] : fixtures::corpus(ring)) {
      Grothendieck gr(rep);
      CHECK_MESSAGE(same_structure(*category_from_json(category_to_json(gr.category()), ring), gr.category()), name);
    }
  }
}

TEST_CASE("representations and modules round trip") {
  for (const Ring& ring : {Ring::integers(), Ring::modular(2), Ring::rationals()})
    for (const auto& [name, rep] : fixtures::corpus(ring)) {
      Json j = representation_to_json(*rep);
      RepresentationPtr back = representation_from_json(j, ring);
      CHECK_MESSAGE(dump_json(representation_to_json(*back)) == dump_json(j), name);
      CHECK(check_representation(*back).passed());

      RModule m = corpus_sample(name, back);
      Json mj = r_module_to_json(m);
      RModule m2 = r_module_from_json(mj, back);
      CHECK_MESSAGE(compare_modules(m, m2).text() == "Equal", name);

      Grothendieck gr(back);
      DgModule f = phi(gr, m);
      DgModule f2 = dg_module_from_json(dg_module_to_json(f), gr.category_ptr());
      CHECK_MESSAGE(compare_modules(f, f2).text() == "Equal", name);
    }
}

TEST_CASE("the bundled corpus files match the built-in corpus") {
  const Ring z = Ring::integers();
  for (const auto& name : corpus_names()) {
    auto rep = corpus_representation(name, z);
    CHECK_MESSAGE(slurp(corpus_dir / (name + ".json")) == dump_json(representation_to_json(*rep)), name);
    Json sample = load_json((corpus_dir / (name + "-sample.json")).string());
    CHECK(sample["representation"] == name + ".json");
    RModule m = r_module_from_json(sample, representation_from_json(load_json((corpus_dir / (name + ".json")).string()), z));
    CHECK_MESSAGE(check_r_module(m).passed(), name);
    CHECK_MESSAGE(compare_modules(m, corpus_sample(name, rep)).text() == "Equal", name);
  }
}

TEST_CASE("preadditive inputs") {
  const Ring z2 = Ring::modular(2);
  Json aj = load_json((corpus_dir / "preadditive" / "a2.json").string());
  DgCategoryPtr a = category_from_json(aj, ring_from_json(aj));
  CHECK(a->ring() == z2);
  CHECK(same_structure(*a, *fixtures::a2(z2)));
  auto gens = elements_from_json(load_json((corpus_dir / "preadditive" / "a2-ideal.json").string()).at("generators"), *a);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].source == 0);
  CHECK(gens[0].target == 1);
  CHECK(gens[0].value == Vector{1});

  Json t = Json::object();
  t["0"] = Json::array({Json{{"0", Json::array({Json{{"1_0", 1}}})}}});
  t["1"] = Json::array({Json{{"0", Json::array({Json{{"a", 1}}})}, {"1", Json::array({Json{{"1_1", 1}}})}}});
  TopologyCandidate j = topology_from_json(t, *a);
  CHECK(j == trivial_topology(*a));
}

TEST_CASE("malformed input") {
  const Ring z = Ring::integers();
  auto path = std::filesystem::temp_directory_path() / "dgrep-bad.json";
  std::ofstream(path) << "{\"ring\": \"Z\", ";
  CHECK_THROWS_AS(load_json(path.string()), ParseError);
  CHECK_THROWS_AS(load_json((corpus_dir / "missing.json").string()), ParseError);
  std::filesystem::remove(path);

  Json rep = representation_to_json(*corpus_representation("arrow", z));
  Json broken = rep;
  broken["base"]["morphisms"][2]["target"] = "2";
  CHECK_THROWS(representation_from_json(broken, z));

  Complex d = disk(0);
  CHECK_THROWS_AS(vector_from_json(Json{{"nope", 1}}, d, z), ParseError);
  Json c = complex_to_json(d);
  c["d"] = Json::object();
  CHECK_NOTHROW(complex_from_json(c, z));
}

TEST_CASE("reports serialise their failures") {
  Report r("demo");
  r.fail("closed", "x");
  Json j = report_to_json(r);
  CHECK(j["subject"] == "demo");
  CHECK(j["passed"] == false);
  CHECK(j["failure_count"] == 1);
  CHECK(j["failures"][0]["check"] == "closed");
}
