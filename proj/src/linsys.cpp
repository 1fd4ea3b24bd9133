#include "dgrep/linsys.hpp"

#include <set>

#include "dgrep/errors.hpp"

namespace dgrep {

std::size_t LinearSystem::add_block(const GradedModule& target, const GradedModule& source, int degree) {
  Block b{target.dim(), source.dim(), {}};
  b.slot.assign(b.rows * b.cols, -1);
  for (std::size_t r = 0; r < b.rows; ++r)
    for (std::size_t c = 0; c < b.cols; ++c)
      if (target.degree(r) == source.degree(c) + degree) b.slot[r * b.cols + c] = static_cast<long>(unknowns_++);
  blocks_.push_back(std::move(b));
  for (auto& e : equations_) e.resize(unknowns_);
  return blocks_.size() - 1;
}

void LinearSystem::add_equation(std::size_t rows, std::size_t cols, const std::vector<Term>& terms) {
  for (const auto& t : terms) {
    const Block& b = blocks_.at(t.block);
    const std::size_t lr = t.left ? t.left->rows() : b.rows;
    const std::size_t rc = t.right ? t.right->cols() : b.cols;
    if ((t.left && t.left->cols() != b.rows) || (t.right && t.right->rows() != b.cols) || lr != rows || rc != cols)
      throw StructuralError("linear system term has inconsistent shape");
  }
  std::vector<Vector> eqs(rows * cols, Vector(unknowns_));
  for (const auto& t : terms) {
    const Block& b = blocks_[t.block];
    for (std::size_t k = 0; k < b.rows; ++k)
      for (std::size_t l = 0; l < b.cols; ++l) {
        const long u = b.slot[k * b.cols + l];
        if (u < 0) continue;
        // entry (r, c) of left * E_{kl} * right is left(r, k) * right(l, c)
        for (std::size_t r = 0; r < rows; ++r) {
          Scalar lv = t.left ? (*t.left)(r, k) : Scalar(r == k ? 1 : 0);
          if (lv == 0) continue;
          for (std::size_t c = 0; c < cols; ++c) {
            Scalar rv = t.right ? (*t.right)(l, c) : Scalar(l == c ? 1 : 0);
            if (rv == 0) continue;
            eqs[r * cols + c][u] += t.coeff * lv * rv;
          }
        }
      }
  }
  std::set<Vector> seen(equations_.begin(), equations_.end());
  for (auto& e : eqs) {
    e = reduce(ring_, e);
    if (is_zero(e) || seen.count(e)) continue;
    seen.insert(e);
    equations_.push_back(std::move(e));
  }
}

Submodule LinearSystem::solution_space() const {
  if (equations_.empty()) return Submodule::whole(ring_, unknowns_);
  Matrix a(equations_.size(), unknowns_);
  for (std::size_t r = 0; r < equations_.size(); ++r)
    for (std::size_t c = 0; c < unknowns_; ++c) a(r, c) = equations_[r][c];
  return Submodule::span(ring_, unknowns_, kernel(ring_, a));
}

std::vector<std::vector<Matrix>> LinearSystem::solve() const {
  std::vector<std::vector<Matrix>> out;
  for (const auto& v : solution_space().generators()) out.push_back(unpack(v));
  return out;
}

std::vector<Matrix> LinearSystem::unpack(const Vector& solution) const {
  std::vector<Matrix> out;
  for (const auto& b : blocks_) {
    Matrix m(b.rows, b.cols);
    for (std::size_t r = 0; r < b.rows; ++r)
      for (std::size_t c = 0; c < b.cols; ++c)
        if (long u = b.slot[r * b.cols + c]; u >= 0) m(r, c) = solution[u];
    out.push_back(std::move(m));
  }
  return out;
}

Vector LinearSystem::pack(const std::vector<Matrix>& blocks) const {
  Vector out(unknowns_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    for (std::size_t r = 0; r < b.rows; ++r)
      for (std::size_t c = 0; c < b.cols; ++c)
        if (long u = b.slot[r * b.cols + c]; u >= 0) out[u] = blocks[i](r, c);
  }
  return out;
}

}  // namespace dgrep
