#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgrep/matrix.hpp"
#include "dgrep/report.hpp"
#include "dgrep/ring.hpp"

namespace dgrep {

/// Free graded module with finitely many labelled basis elements.
///
/// The basis is flattened ("total basis") in ascending degree; within a degree
/// the declared label order is kept. Labels are unique across the module so
/// they can be referenced without a degree.
class GradedModule {
 public:
  GradedModule() = default;
  explicit GradedModule(const std::map<int, std::vector<std::string>>& labels_by_degree);

  std::size_t dim() const { return degrees_.size(); }
  int degree(std::size_t i) const { return degrees_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }

  std::size_t rank(int n) const;
  /// Index of the first total-basis element of degree n (or where it would be).
  std::size_t offset(int n) const;
  /// Degrees with nonzero rank, ascending.
  std::vector<int> support() const;
  std::optional<std::size_t> find(const std::string& label) const;
  std::map<int, std::vector<std::string>> labels_by_degree() const;

  bool operator==(const GradedModule& other) const = default;

 private:
  std::vector<int> degrees_;
  std::vector<std::string> labels_;
};

/// Cochain complex: a graded module with a degree +1 differential, stored as
/// a total (dim x dim) matrix.
class Complex {
 public:
  Complex() = default;
  /// Throws StructuralError if `d` has entries not raising degree by one.
  Complex(GradedModule carrier, Matrix d);

  /// `blocks[n]` is d_n, a rank(n+1) x rank(n) matrix.
  static Complex from_blocks(GradedModule carrier, const std::map<int, Matrix>& blocks);
  static Complex zero_differential(GradedModule carrier);

  const GradedModule& carrier() const { return carrier_; }
  const Matrix& differential() const { return d_; }
  std::size_t dim() const { return carrier_.dim(); }
  int degree(std::size_t i) const { return carrier_.degree(i); }

  /// d_n : degree n -> degree n+1.
  Matrix block(int n) const;

  bool operator==(const Complex& other) const = default;

 private:
  GradedModule carrier_;
  Matrix d_;
};

/// A homogeneous linear map of some degree between complexes.
struct ChainMap {
  Complex source;
  Complex target;
  int degree = 0;
  Matrix matrix;  // target.dim() x source.dim()
};

/// Checks that a total matrix only maps degree n into degree n + shift.
bool is_homogeneous(const Matrix& m, const GradedModule& source, const GradedModule& target, int shift);

/// The complex with the ground ring in degrees n-1 and n, joined by the
/// identity.
Complex disk(int n);

/// The ground ring in degree 0.
Complex unit_complex();

Report check_complex(const Ring& ring, const Complex& c);

/// Shape and degree checks, and (when `require_closed`) d f = (-1)^p f d.
Report check_chain_map(const Ring& ring, const ChainMap& f, bool require_closed = true);

/// Result of the tensor product together with the pair -> index table.
struct TensorProduct {
  Complex complex;
  std::size_t right_dim = 0;
  std::vector<std::size_t> index;  // index[i * right_dim + j] for basis pair (i, j)

  std::size_t at(std::size_t i, std::size_t j) const { return index[i * right_dim + j]; }
};

/// Total-degree tensor product; d(u (x) v) = du (x) v + (-1)^|u| u (x) dv.
TensorProduct tensor(const Ring& ring, const Complex& left, const Complex& right);

/// True iff every cohomology group vanishes (ker d_n = im d_{n-1} for all n).
bool is_acyclic(const Ring& ring, const Complex& c);

}  // namespace dgrep
