#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dgrep/corpus.hpp"
#include "dgrep/dgcat.hpp"

namespace fixtures {

using namespace dgrep;

/// One object with basis 1 (degree 0) and e (degree 1), e o e = 0.
inline std::shared_ptr<DgCategory> epsilon_category(const Ring& ring) {
  Complex hom = Complex::zero_differential(GradedModule({{0, {"1"}}, {1, {"e"}}}));
  auto c = std::make_shared<DgCategory>(ring, std::vector<std::string>{"o"}, std::vector<Complex>{hom});
  c->set_composite(0, 0, 0, 0, 0, {1, 0});
  c->set_composite(0, 0, 0, 0, 1, {0, 1});
  c->set_composite(0, 0, 0, 1, 0, {0, 1});
  c->set_composite(0, 0, 0, 1, 1, {0, 0});
  c->set_identity(0, {1, 0});
  return c;
}

/// The path category of 0 -> 1 concentrated in degree 0.
inline std::shared_ptr<DgCategory> a2(const Ring& ring) {
  auto one = [](const std::string& l) { return Complex::zero_differential(GradedModule({{0, {l}}})); };
  auto c = std::make_shared<DgCategory>(ring, std::vector<std::string>{"0", "1"},
                                        std::vector<Complex>{one("1_0"), one("a"), Complex(), one("1_1")});
  c->set_composite(0, 0, 0, 0, 0, {1});
  c->set_composite(1, 1, 1, 0, 0, {1});
  c->set_composite(0, 0, 1, 0, 0, {1});
  c->set_composite(0, 1, 1, 0, 0, {1});
  c->set_identity(0, {1});
  c->set_identity(1, {1});
  return c;
}

/// One object with endomorphisms k[t]/(t^2), in degree 0.
inline std::shared_ptr<DgCategory> dual_numbers(const Ring& ring) {
  Complex hom = Complex::zero_differential(GradedModule({{0, {"1", "t"}}}));
  auto c = std::make_shared<DgCategory>(ring, std::vector<std::string>{"o"}, std::vector<Complex>{hom});
  c->set_composite(0, 0, 0, 0, 0, {1, 0});
  c->set_composite(0, 0, 0, 0, 1, {0, 1});
  c->set_composite(0, 0, 0, 1, 0, {0, 1});
  c->set_composite(0, 0, 0, 1, 1, {0, 0});
  c->set_identity(0, {1, 0});
  return c;
}

/// The path category of 0 -> 1 -> 2 with the composite kept.
inline std::shared_ptr<DgCategory> a3(const Ring& ring) {
  auto one = [](const std::string& l) { return Complex::zero_differential(GradedModule({{0, {l}}})); };
  auto c = std::make_shared<DgCategory>(
      ring, std::vector<std::string>{"0", "1", "2"},
      std::vector<Complex>{one("1_0"), one("a"), one("ba"), Complex(), one("1_1"), one("b"), Complex(), Complex(),
                           one("1_2")});
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = x; y < 3; ++y) {
      c->set_composite(x, x, y, 0, 0, {1});
      c->set_composite(x, y, y, 0, 0, {1});
    }
  c->set_composite(0, 1, 2, 0, 0, {1});
  for (std::size_t x = 0; x < 3; ++x) c->set_identity(x, {1});
  return c;
}

/// Every representation of the bundled corpus over `ring`.
inline std::vector<std::pair<std::string, RepresentationPtr>> corpus(const Ring& ring) {
  std::vector<std::pair<std::string, RepresentationPtr>> out;
  for (const auto& name : corpus_names()) out.emplace_back(name, corpus_representation(name, ring));
  return out;
}

}  // namespace fixtures
