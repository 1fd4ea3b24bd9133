#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgrep/dgcat.hpp"
#include "dgrep/linalg.hpp"
#include "dgrep/modules.hpp"
#include "dgrep/report.hpp"

namespace dgrep {

// Preadditive categories are dg-categories concentrated in degree 0 with
// zero differentials; their modules are dg-modules over them.

Report check_preadditive(const DgCategory& a);

/// Disjoint union: no morphisms between the two parts.
DgCategoryPtr disjoint_union(const DgCategory& a, const DgCategory& b);

/// A morphism of a preadditive category, for generator lists.
struct Element {
  std::size_t source;
  std::size_t target;
  Vector value;
};

/// Center: families z_x in End(x) with z_y f = f z_x for every f: x -> y.
/// Elements are stored as the concatenation of their components.
struct Center {
  DgCategoryPtr category;
  std::vector<std::size_t> offsets;  // component x starts at offsets[x]
  std::size_t ambient = 0;
  Submodule space;
  std::vector<Vector> generators;
  std::vector<std::vector<Vector>> table;  // table[i][j] = generators[i] * generators[j]

  Vector component(const Vector& z, std::size_t x) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector one() const;
};

Center center(DgCategoryPtr a);

/// All e in the center with e e = e. Exhaustive over a finite ring; over Z
/// and Q only when the generators are orthogonal idempotents and at most
/// four of them, otherwise throws Refusal.
std::vector<Vector> idempotents(const Center& z);

/// A subgroup of every hom(x, y).
struct Ideal {
  DgCategoryPtr category;
  std::vector<Submodule> parts;  // [x * n + y]

  const Submodule& at(std::size_t x, std::size_t y) const { return parts[x * category->object_count() + y]; }
  bool operator==(const Ideal& other) const { return parts == other.parts; }
};

Ideal zero_ideal(DgCategoryPtr a);
Ideal whole_ideal(DgCategoryPtr a);
/// Two-sided closure of the generators, iterated to a fixed point.
Ideal ideal_generated(DgCategoryPtr a, const std::vector<Element>& gens);
/// (I K)(x, y) spanned by g o f with g in I(z, y), f in K(x, z).
Ideal ideal_product(const Ideal& i, const Ideal& k);
bool is_idempotent(const Ideal& i);
/// Closure of every part under composition with basis morphisms on both sides.
Report check_ideal(const Ideal& i);

/// Per-object submodules of a module's values.
using SubmoduleFamily = std::vector<Submodule>;

/// Sum of images of all module maps from members of `sources` into `m`.
SubmoduleFamily trace(const std::vector<DgModule>& sources, const DgModule& m);
/// x -> tr_S(A(-, x)), as an ideal.
Ideal trace_ideal(const std::vector<DgModule>& sources, DgCategoryPtr a);

/// A subfunctor of A(-, x).
struct Subfunctor {
  std::size_t object = 0;
  std::vector<Submodule> parts;  // parts[y] <= hom(y, x)

  bool operator==(const Subfunctor& other) const { return object == other.object && parts == other.parts; }
};

Subfunctor full_subfunctor(const DgCategory& a, std::size_t x);
Subfunctor zero_subfunctor(const DgCategory& a, std::size_t x);
/// {g : f o g in S} for f: y -> x.
Subfunctor pullback(const DgCategory& a, const Subfunctor& s, std::size_t y, const Vector& f);
/// Smallest subfunctor containing the given elements of A(-, x).
Subfunctor generated_subfunctor(const DgCategory& a, std::size_t x, const std::vector<std::pair<std::size_t, Vector>>& elements);
bool is_subfunctor(const DgCategory& a, const Subfunctor& s);
/// Every subfunctor of A(-, x), in a deterministic order. Finite rings only;
/// throws Refusal above `limit` subfunctors.
std::vector<Subfunctor> all_subfunctors(const DgCategory& a, std::size_t x, std::size_t limit = 4096);
std::string subfunctor_text(const DgCategory& a, const Subfunctor& s);

/// J(x) for every object x.
using TopologyCandidate = std::vector<std::vector<Subfunctor>>;

TopologyCandidate maximal_topology(const DgCategory& a);
TopologyCandidate trivial_topology(const DgCategory& a);

/// Axioms of a linear Grothendieck topology. Over a finite ring, pullbacks
/// range over all morphisms and the local-character axiom over all
/// subfunctors; otherwise over basis morphisms and the listed subfunctors.
Report check_linear_topology(const DgCategory& a, const TopologyCandidate& j);

/// t(M) = M I, the span of all actions of ideal elements.
SubmoduleFamily torsion_part(const DgModule& m, const Ideal& i);

struct SampleMap {
  std::size_t source;
  std::size_t target;
  ModuleMap map;
};

/// t(t(M)) = t(M) and h(t(M)) <= t(N) on sample maps. Throws Refusal for a
/// non-idempotent ideal.
Report torsion_split(const Ideal& i, const std::vector<DgModule>& samples, const std::vector<SampleMap>& maps = {});
/// The ideal generated by e, plus the exact splitting M = eM (+) (1-e)M.
Report torsion_split(const Center& z, const Vector& e, const std::vector<DgModule>& samples,
                     const std::vector<SampleMap>& maps = {});

}  // namespace dgrep
