#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dgrep/complex.hpp"
#include "dgrep/linalg.hpp"
#include "dgrep/matrix.hpp"
#include "dgrep/ring.hpp"

namespace dgrep {

/// Homogeneous linear equations whose unknowns are the entries of a list of
/// matrices ("blocks"). A block of degree p between graded modules only has
/// free entries from source degree n to target degree n + p.
class LinearSystem {
 public:
  /// coeff * left * H_block * right; a null side means the identity.
  struct Term {
    Scalar coeff;
    const Matrix* left;
    std::size_t block;
    const Matrix* right;
  };

  explicit LinearSystem(Ring ring) : ring_(std::move(ring)) {}

  std::size_t add_block(const GradedModule& target, const GradedModule& source, int degree = 0);
  /// Adds the entrywise equations sum of terms = 0, a rows x cols matrix identity.
  void add_equation(std::size_t rows, std::size_t cols, const std::vector<Term>& terms);

  std::size_t unknown_count() const { return unknowns_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// Generators of the solution module, each unpacked into its blocks.
  std::vector<std::vector<Matrix>> solve() const;
  /// The solution module inside the space of free entries.
  Submodule solution_space() const;
  std::vector<Matrix> unpack(const Vector& solution) const;
  Vector pack(const std::vector<Matrix>& blocks) const;

 private:
  struct Block {
    std::size_t rows, cols;
    std::vector<long> slot;  // row * cols + col -> unknown index, or -1 if forced zero
  };

  Ring ring_;
  std::vector<Block> blocks_;
  std::size_t unknowns_ = 0;
  std::vector<Vector> equations_;
};

}  // namespace dgrep
