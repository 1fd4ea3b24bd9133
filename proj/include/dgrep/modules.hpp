#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgrep/complex.hpp"
#include "dgrep/dgcat.hpp"
#include "dgrep/grothendieck.hpp"
#include "dgrep/linalg.hpp"
#include "dgrep/report.hpp"
#include "dgrep/representation.hpp"

namespace dgrep {

/// A right dg-module: a contravariant dg-functor from `base` to complexes.
///
/// For a basis morphism f: x -> y of degree p, action(x, y, f) is a degree-p
/// map value(y) -> value(x). With the opposite-category sign convention:
///   action(g o f) = (-1)^{|f||g|} action(f) action(g),
///   d action(f) - (-1)^p action(f) d = action(df).
struct DgModule {
  DgCategoryPtr base;
  std::vector<Complex> values;
  std::vector<std::vector<Matrix>> actions;  // [x * n + y][f]

  const Matrix& action(std::size_t x, std::size_t y, std::size_t f) const {
    return actions[x * base->object_count() + y][f];
  }
  /// Action of an arbitrary element of hom(x, y).
  Matrix act(std::size_t x, std::size_t y, const Vector& f) const;
  std::size_t object_count() const { return base->object_count(); }
};

/// A family of degree-0 maps value_M(x) -> value_N(x).
struct ModuleMap {
  std::vector<Matrix> components;
};

DgModule zero_module(DgCategoryPtr base);
DgModule direct_sum(const DgModule& m, const DgModule& n);

Report check_dg_module(const DgModule& m, unsigned threads = 1);
/// Degree 0, closed, and commuting with every basis action.
Report check_module_map(const DgModule& source, const DgModule& target, const ModuleMap& h);

/// a*M: values M(R(a)x), actions through R(a).
DgModule restrict(const DgFunctor& ra, const DgModule& m);

/// A right R-module: dg-modules M_i over each fiber and degree-0 closed
/// structure maps M(a)_x : M_j(R(a)x) -> M_i(x) for a: i -> j.
struct RModule {
  RepresentationPtr rep;
  std::vector<DgModule> parts;                  // [i]
  std::vector<std::vector<Matrix>> structure;   // [a][x]
};

RModule zero_r_module(RepresentationPtr rep);
RModule direct_sum(const RModule& m, const RModule& n);

/// Each part, naturality and closedness of each M(a), then compatibility
/// with composition on every composable pair and with units on every object.
Report check_r_module(const RModule& m, unsigned threads = 1);

/// Families h_i of module maps with N(a) o a*h_j = h_i o M(a).
struct RModuleMap {
  std::vector<ModuleMap> parts;
};

Report check_r_module_map(const RModule& source, const RModule& target, const RModuleMap& h);

DgModule phi(const Grothendieck& gr, const RModule& m);
RModule psi(const Grothendieck& gr, const DgModule& f);
ModuleMap phi(const Grothendieck& gr, const RModuleMap& h);
RModuleMap psi(const Grothendieck& gr, const ModuleMap& h);

/// Generators of the module of all module maps source -> target.
std::vector<ModuleMap> module_map_basis(const DgModule& source, const DgModule& target);
std::vector<RModuleMap> module_map_basis(const RModule& source, const RModule& target);
/// Number of module maps, for a finite ground ring.
Integer module_map_count(const DgModule& source, const DgModule& target);

struct Verdict {
  enum class Kind { equal, isomorphic, not_isomorphic };
  Kind kind = Kind::not_isomorphic;
  std::string reason;
  /// For not_isomorphic: true when the search covered every module map.
  bool exhaustive = true;
  std::vector<Matrix> witness;  // components of an isomorphism, flattened per object

  bool equivalent() const { return kind != Kind::not_isomorphic; }
  std::string text() const;
};

Verdict compare_modules(const DgModule& m, const DgModule& n);
Verdict compare_modules(const RModule& m, const RModule& n);

/// Ranks per object and degree, for quick comparisons.
std::vector<std::map<int, std::size_t>> rank_profile(const DgModule& m);

}  // namespace dgrep
