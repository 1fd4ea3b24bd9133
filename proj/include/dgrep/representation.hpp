#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgrep/dgcat.hpp"
#include "dgrep/report.hpp"
#include "dgrep/ring.hpp"

namespace dgrep {

struct BaseMorphism {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// A finite category given by its full composition table.
class FiniteCategory {
 public:
  FiniteCategory() = default;
  /// `composites` maps (b, a) with target(a) == source(b) to b o a. Missing
  /// entries involving identities are filled by the unit law.
  FiniteCategory(std::vector<std::string> objects, std::vector<BaseMorphism> morphisms,
                 std::vector<std::size_t> identities, const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& composites);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object(std::size_t i) const { return objects_[i]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const BaseMorphism& morphism(std::size_t a) const { return morphisms_[a]; }
  const std::vector<BaseMorphism>& morphisms() const { return morphisms_; }
  std::size_t identity(std::size_t i) const { return identities_[i]; }

  /// b o a, or nullopt when undefined (not composable or missing from the table).
  std::optional<std::size_t> compose(std::size_t b, std::size_t a) const { return table_[b * morphisms_.size() + a]; }
  /// Morphisms i -> j in declaration order.
  std::vector<std::size_t> hom(std::size_t i, std::size_t j) const;

  std::optional<std::size_t> find_object(const std::string& name) const;
  std::optional<std::size_t> find_morphism(const std::string& name) const;

 private:
  std::vector<std::string> objects_;
  std::vector<BaseMorphism> morphisms_;
  std::vector<std::size_t> identities_;
  std::vector<std::optional<std::size_t>> table_;
};

/// Category axioms, exhaustively over all composable pairs and triples.
Report check_finite_category(const FiniteCategory& c);

/// A pseudofunctor from a finite category to finite dg-categories.
///
/// delta[i] : 1_{R(i)} => R(1_i) carries eta_i as its declared inverse, and
/// mu[(b, a)] : R(b) R(a) => R(ba) carries theta_{b,a}.
struct DgRepresentation {
  Ring ring = Ring::integers();
  FiniteCategory base;
  std::vector<DgCategoryPtr> fibers;   // R(i)
  std::vector<DgFunctorPtr> functors;  // R(a)
  std::vector<DgNatIso> delta;
  std::map<std::pair<std::size_t, std::size_t>, DgNatIso> mu;

  const DgCategory& fiber(std::size_t i) const { return *fibers[i]; }
  const DgFunctor& functor(std::size_t a) const { return *functors[a]; }
  /// eta_i at x: an element of R(i)(R(1_i)x, x).
  const Vector& eta(std::size_t i, std::size_t x) const { return delta[i].inverse[x]; }
  /// theta_{b,a} at x: an element of R(k)(R(ba)x, R(b)R(a)x).
  const Vector& theta(std::size_t b, std::size_t a, std::size_t x) const { return mu.at({b, a}).inverse[x]; }
  const DgNatIso& mu_at(std::size_t b, std::size_t a) const;
};

using RepresentationPtr = std::shared_ptr<const DgRepresentation>;

/// Coherence data as plain components, used to assemble a representation.
struct CoherenceData {
  std::vector<std::vector<Vector>> delta, eta;  // [i][x]
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Vector>> mu, theta;  // [(b,a)][x]
};

/// Wires functor endpoints for delta and mu. Throws StructuralError for
/// missing mu on a composable pair or mismatched functor endpoints.
DgRepresentation make_representation(Ring ring, FiniteCategory base, std::vector<DgCategoryPtr> fibers,
                                     std::vector<DgFunctorPtr> functors, CoherenceData coherence);

/// Strict coherence data: every delta, mu and inverse is an identity. Requires
/// R(1_i) and R(b)R(a) = R(ba) on objects.
CoherenceData strict_coherence(const FiniteCategory& base, const std::vector<DgCategoryPtr>& fibers,
                               const std::vector<DgFunctorPtr>& functors);

/// Checks fibers, functors, every delta and mu as natural isomorphisms, the
/// associativity coherence on every composable triple and both unit
/// triangles on every morphism.
Report check_representation(const DgRepresentation& r, unsigned threads = 1);

/// True iff all coherence components are identities and R(b)R(a) = R(ba),
/// R(1_i) = 1 hold on the nose.
bool is_strict(const DgRepresentation& r);

/// (F tau)_x = F(tau_x).
DgNatIso whisker_left(DgFunctorPtr f, const DgNatIso& tau);
/// (tau F)_x = tau_{F x}.
DgNatIso whisker_right(const DgNatIso& tau, DgFunctorPtr f);

}  // namespace dgrep
