#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dgrep/matrix.hpp"
#include "dgrep/ring.hpp"

namespace dgrep {

/// Elements of a finite submodule are only enumerated below this bound.
inline constexpr std::size_t kEnumerationLimit = std::size_t{1} << 20;

/// A submodule of the free module R^n, held in a canonical echelon form:
///  - over Q, the reduced row echelon form of a spanning set;
///  - over Z, the Hermite normal form;
///  - over Z/n, the Hermite normal form of the full-rank lattice
///    L = (lifted generators) + nZ^n, which determines the submodule L / nZ^n.
/// Two submodules are equal iff their canonical forms agree.
class Submodule {
 public:
  Submodule(Ring ring, std::size_t ambient);

  static Submodule span(const Ring& ring, std::size_t ambient, const std::vector<Vector>& generators);
  static Submodule whole(const Ring& ring, std::size_t ambient);

  void insert(const Vector& v);
  void insert_all(const std::vector<Vector>& vs);

  const Ring& ring() const { return ring_; }
  std::size_t ambient() const { return n_; }

  /// Canonical rows (the full lattice basis over Z/n).
  std::vector<Vector> canonical_rows() const;
  /// Nonzero canonical rows reduced into the ring; spans the submodule.
  std::vector<Vector> generators() const;

  bool contains(const Vector& v) const;
  bool contains(const Submodule& other) const;
  bool is_zero() const;
  bool is_whole() const;

  /// Number of elements, for finite rings.
  std::optional<Integer> cardinality() const;
  /// Number of nonzero canonical generators; the free rank over Q or Z.
  std::size_t rank() const;

  /// All elements, in a deterministic order. Requires a finite ring and
  /// cardinality at most `limit`; throws Refusal otherwise.
  std::vector<Vector> elements(std::size_t limit = kEnumerationLimit) const;

  Submodule sum(const Submodule& other) const;
  Submodule intersect(const Submodule& other) const;

  bool operator==(const Submodule& other) const;

 private:
  void normalize() const;
  Vector lift(const Vector& v) const;

  Ring ring_;
  std::size_t n_;
  // rows_[c] holds the echelon row whose pivot sits in column c, if any.
  mutable std::vector<std::optional<Vector>> rows_;
  mutable bool normalized_ = true;
};

/// Generators of {x : A x = 0}. Over Q and Z the result is a basis.
std::vector<Vector> kernel(const Ring& ring, const Matrix& a);

/// Generators of {x : A x in S}.
std::vector<Vector> preimage(const Ring& ring, const Matrix& a, const Submodule& s);

/// Image of A as a submodule of its target.
Submodule image(const Ring& ring, const Matrix& a);

/// Exact determinant, computed over Q on the lifted entries and reduced.
Scalar determinant(const Ring& ring, const Matrix& a);
bool is_invertible(const Ring& ring, const Matrix& a);
/// Inverse of an invertible square matrix; throws RingError otherwise.
Matrix inverse(const Ring& ring, const Matrix& a);

/// Rank of a matrix over Q (entries taken as rationals).
std::size_t rational_rank(const Matrix& a);

}  // namespace dgrep
