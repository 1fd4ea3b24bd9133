#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dgrep/dgcat.hpp"
#include "dgrep/representation.hpp"

namespace dgrep {

struct GrObject {
  std::size_t i = 0;  // base object
  std::size_t x = 0;  // object of R(i)

  bool operator==(const GrObject&) const = default;
};

/// An element of the direct sum over a in C(i, j) of R(j)(R(a)x, y). Each
/// component is a full vector over the total basis of its summand; absent
/// components are zero.
struct GrMorphism {
  GrObject source;
  GrObject target;
  std::map<std::size_t, Vector> components;
};

/// (g o f)_c^n = sum_{ba=c} sum_{p,r} (-1)^{(n-r)r} g_b^{n-r-p} o (R(b)f_a)^p o (theta_{b,a}x)^r.
GrMorphism gr_compose(const DgRepresentation& r, const GrMorphism& g, const GrMorphism& f);

/// eta_i x at a = 1_i, zero elsewhere.
GrMorphism gr_identity(const DgRepresentation& r, GrObject ix);

/// Componentwise differential.
GrMorphism gr_differential(const DgRepresentation& r, const GrMorphism& f);

/// The linear Grothendieck construction together with the bookkeeping that
/// identifies each hom basis element with a (base morphism, summand basis
/// element) pair.
class Grothendieck {
 public:
  struct Slot {
    std::size_t a;  // base morphism
    std::size_t k;  // index in the total basis of R(j)(R(a)x, y)
  };

  explicit Grothendieck(RepresentationPtr r, unsigned threads = 1);

  const DgRepresentation& representation() const { return *rep_; }
  RepresentationPtr representation_ptr() const { return rep_; }
  const DgCategory& category() const { return *cat_; }
  DgCategoryPtr category_ptr() const { return cat_; }

  std::size_t object_count() const { return objects_.size(); }
  const GrObject& object(std::size_t X) const { return objects_[X]; }
  std::size_t index(GrObject ix) const;
  std::size_t index(std::size_t i, std::size_t x) const { return index(GrObject{i, x}); }

  const std::vector<Slot>& layout(std::size_t X, std::size_t Y) const { return layouts_[X * objects_.size() + Y]; }
  /// Position of (a, k) in the total basis of hom(X, Y).
  std::size_t position(std::size_t X, std::size_t Y, std::size_t a, std::size_t k) const;

  GrMorphism split(std::size_t X, std::size_t Y, const Vector& v) const;
  Vector assemble(const GrMorphism& m) const;

 private:
  RepresentationPtr rep_;
  std::vector<GrObject> objects_;
  std::vector<std::vector<Slot>> layouts_;
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> positions_;
  DgCategoryPtr cat_;
};

}  // namespace dgrep
