#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgrep/complex.hpp"
#include "dgrep/matrix.hpp"
#include "dgrep/report.hpp"
#include "dgrep/ring.hpp"

namespace dgrep {

/// A finite dg-category over an exact ring.
///
/// Hom complexes have labelled total bases; composition is bilinear and given
/// by structure constants on basis pairs; identities are elements of the
/// degree-0 part of each endomorphism complex. Composition order follows the
/// usual convention: compose(x, y, z, g, f) is g after f for f: x -> y and
/// g: y -> z.
class DgCategory {
 public:
  DgCategory() = default;
  /// `homs[x * n + y]` is hom(x, y). Composition starts out zero and
  /// identities start out as zero vectors.
  DgCategory(Ring ring, std::vector<std::string> objects, std::vector<Complex> homs);

  const Ring& ring() const { return ring_; }
  std::size_t object_count() const { return objects_.size(); }
  const std::string& object(std::size_t x) const { return objects_[x]; }
  const std::vector<std::string>& objects() const { return objects_; }
  std::optional<std::size_t> find_object(const std::string& name) const;

  const Complex& hom(std::size_t x, std::size_t y) const { return homs_[x * objects_.size() + y]; }
  std::size_t hom_dim(std::size_t x, std::size_t y) const { return hom(x, y).dim(); }
  int basis_degree(std::size_t x, std::size_t y, std::size_t i) const { return hom(x, y).degree(i); }
  std::size_t total_basis_size() const;

  /// Composite of basis elements g in hom(y, z) and f in hom(x, y).
  const Vector& basis_composite(std::size_t x, std::size_t y, std::size_t z, std::size_t g, std::size_t f) const;
  void set_composite(std::size_t x, std::size_t y, std::size_t z, std::size_t g, std::size_t f, Vector result);

  Vector compose(std::size_t x, std::size_t y, std::size_t z, const Vector& g, const Vector& f) const;

  const Vector& identity(std::size_t x) const { return identities_[x]; }
  void set_identity(std::size_t x, Vector v);

  Vector differential(std::size_t x, std::size_t y, const Vector& v) const;

  /// True iff every hom basis element has degree 0 and all differentials vanish.
  bool is_degree_zero() const;

 private:
  std::size_t table_index(std::size_t x, std::size_t y, std::size_t z) const;

  Ring ring_ = Ring::integers();
  std::vector<std::string> objects_;
  std::vector<Complex> homs_;
  // composition_[table_index(x,y,z)][g * dim(x,y) + f]
  std::vector<std::vector<Vector>> composition_;
  std::vector<Vector> identities_;
};

using DgCategoryPtr = std::shared_ptr<const DgCategory>;

/// Exhaustive validation of all dg-category axioms: identity degree and
/// closedness, homogeneity of structure constants, d^2 = 0, two-sided unit,
/// Leibniz and associativity on every basis pair and triple.
Report check_dg_category(const DgCategory& a, unsigned threads = 1);

/// hom_op(x, y) = hom(y, x) with f o_op g = (-1)^{|f||g|} g o f.
DgCategory opposite(const DgCategory& a);

/// A dg-functor: object map plus degree-0 linear maps on hom complexes.
struct DgFunctor {
  DgCategoryPtr source;
  DgCategoryPtr target;
  std::vector<std::size_t> object_map;
  std::vector<Matrix> hom_maps;  // [x * n + y]: hom(x, y) -> hom(Fx, Fy)

  std::size_t operator()(std::size_t x) const { return object_map[x]; }
  const Matrix& on_hom(std::size_t x, std::size_t y) const { return hom_maps[x * source->object_count() + y]; }
  Vector apply(std::size_t x, std::size_t y, const Vector& v) const;
};

using DgFunctorPtr = std::shared_ptr<const DgFunctor>;

DgFunctor identity_functor(DgCategoryPtr a);
/// outer after inner.
DgFunctor compose(const DgFunctor& outer, const DgFunctor& inner);

Report check_dg_functor(const DgFunctor& f);

/// A natural isomorphism between parallel dg-functors, with declared inverse.
struct DgNatIso {
  DgFunctorPtr source;
  DgFunctorPtr target;
  std::vector<Vector> components;  // per object x: element of B(Fx, Gx)
  std::vector<Vector> inverse;     // per object x: element of B(Gx, Fx)
};

DgNatIso identity_nat_iso(DgFunctorPtr f);

/// Closedness, degree 0, naturality on every basis morphism, and two-sided
/// invertibility against the declared inverse.
Report check_dg_nat_iso(const DgNatIso& t);

/// Vector rendering "2*a + -1*b" used in failure witnesses.
std::string element_text(const Complex& hom, const Vector& v);

}  // namespace dgrep
