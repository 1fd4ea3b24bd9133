#include "dgrep/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dgrep/errors.hpp"
#include "dgrep/linalg.hpp"

namespace dgrep {

namespace {

std::string matrix_text(const Matrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << m(r, c).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace

GradedModule::GradedModule(const std::map<int, std::vector<std::string>>& labels_by_degree) {
  std::set<std::string> seen;
  for (const auto& [deg, labels] : labels_by_degree)
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw StructuralError("duplicate basis label '" + l + "'");
      degrees_.push_back(deg);
      labels_.push_back(l);
    }
}

std::size_t GradedModule::rank(int n) const {
  return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), n));
}

std::size_t GradedModule::offset(int n) const {
  return static_cast<std::size_t>(std::lower_bound(degrees_.begin(), degrees_.end(), n) - degrees_.begin());
}

std::vector<int> GradedModule::support() const {
  std::vector<int> out;
  for (int d : degrees_)
    if (out.empty() || out.back() != d) out.push_back(d);
  return out;
}

std::optional<std::size_t> GradedModule::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::map<int, std::vector<std::string>> GradedModule::labels_by_degree() const {
  std::map<int, std::vector<std::string>> out;
  for (std::size_t i = 0; i < dim(); ++i) out[degrees_[i]].push_back(labels_[i]);
  return out;
}

bool is_homogeneous(const Matrix& m, const GradedModule& source, const GradedModule& target, int shift) {
  if (m.rows() != target.dim() || m.cols() != source.dim()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && target.degree(r) != source.degree(c) + shift) return false;
  return true;
}

Complex::Complex(GradedModule carrier, Matrix d) : carrier_(std::move(carrier)), d_(std::move(d)) {
  if (d_.rows() != carrier_.dim() || d_.cols() != carrier_.dim())
    throw StructuralError("differential shape does not match the graded module");
  if (!is_homogeneous(d_, carrier_, carrier_, 1)) throw StructuralError("differential does not raise degree by one");
}

Complex Complex::from_blocks(GradedModule carrier, const std::map<int, Matrix>& blocks) {
  Matrix d(carrier.dim(), carrier.dim());
  for (const auto& [n, b] : blocks) {
    if (b.rows() != carrier.rank(n + 1) || b.cols() != carrier.rank(n)) {
      std::ostringstream msg;
      msg << "d_" << n << " has shape " << b.rows() << "x" << b.cols() << ", expected " << carrier.rank(n + 1)
          << "x" << carrier.rank(n);
      throw StructuralError(msg.str());
    }
    std::size_t r0 = carrier.offset(n + 1);
    std::size_t c0 = carrier.offset(n);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) d(r0 + r, c0 + c) = b(r, c);
  }
  return Complex(std::move(carrier), std::move(d));
}

Complex Complex::zero_differential(GradedModule carrier) {
  std::size_t n = carrier.dim();
  return Complex(std::move(carrier), Matrix(n, n));
}

Matrix Complex::block(int n) const {
  return d_.block(carrier_.offset(n + 1), carrier_.offset(n), carrier_.rank(n + 1), carrier_.rank(n));
}

Complex disk(int n) {
  GradedModule carrier({{n - 1, {"e"}}, {n, {"f"}}});
  Matrix one(1, 1);
  one(0, 0) = 1;
  return Complex::from_blocks(std::move(carrier), {{n - 1, one}});
}

Complex unit_complex() { return Complex::zero_differential(GradedModule({{0, {"1"}}})); }

Report check_complex(const Ring& ring, const Complex& c) {
  Report report("complex");
  for (int n : c.carrier().support()) {
    Matrix sq = multiply(ring, c.block(n + 1), c.block(n));
    if (!sq.is_zero()) report.fail("d^2=0", "degree " + std::to_string(n) + ": d_{n+1} d_n = " + matrix_text(sq));
  }
  return report;
}

Report check_chain_map(const Ring& ring, const ChainMap& f, bool require_closed) {
  Report report("chain map of degree " + std::to_string(f.degree));
  if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim())
    throw StructuralError("chain map matrix shape does not match source/target");
  if (!is_homogeneous(f.matrix, f.source.carrier(), f.target.carrier(), f.degree)) {
    report.fail("degree", "components do not have degree " + std::to_string(f.degree));
    return report;
  }
  if (require_closed) {
    Matrix lhs = multiply(ring, f.target.differential(), f.matrix);
    Matrix rhs = scale(ring, ring.sign(f.degree), multiply(ring, f.matrix, f.source.differential()));
    if (!(lhs == rhs)) {
      for (int n : f.source.carrier().support()) {
        std::size_t c0 = f.source.carrier().offset(n);
        std::size_t cn = f.source.carrier().rank(n);
        if (!(lhs.block(0, c0, lhs.rows(), cn) == rhs.block(0, c0, rhs.rows(), cn)))
          report.fail("closed", "d f != (-1)^p f d on source degree " + std::to_string(n));
      }
    }
  }
  return report;
}

TensorProduct tensor(const Ring& ring, const Complex& left, const Complex& right) {
  const std::size_t dl = left.dim();
  const std::size_t dr = right.dim();
  std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> by_degree;
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = 0; j < dr; ++j) by_degree[left.degree(i) + right.degree(j)].emplace_back(i, j);

  std::map<int, std::vector<std::string>> labels;
  TensorProduct out;
  out.right_dim = dr;
  out.index.assign(dl * dr, 0);
  std::size_t next = 0;
  for (const auto& [deg, pairs] : by_degree)
    for (auto [i, j] : pairs) {
      labels[deg].push_back(left.carrier().label(i) + "⊗" + right.carrier().label(j));
      out.index[i * dr + j] = next++;
    }

  Matrix d(next, next);
  const Matrix& dL = left.differential();
  const Matrix& dR = right.differential();
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = 0; j < dr; ++j) {
      std::size_t src = out.index[i * dr + j];
      for (std::size_t k = 0; k < dl; ++k)
        if (dL(k, i) != 0) d(out.index[k * dr + j], src) += dL(k, i);
      Scalar sign = ring.sign(left.degree(i));
      for (std::size_t k = 0; k < dr; ++k)
        if (dR(k, j) != 0) d(out.index[i * dr + k], src) += sign * dR(k, j);
    }
  out.complex = Complex(GradedModule(labels), reduce(ring, d));
  return out;
}

bool is_acyclic(const Ring& ring, const Complex& c) {
  for (int n : c.carrier().support()) {
    Matrix out = c.block(n);
    Matrix in = c.block(n - 1);
    const std::size_t rank = c.carrier().rank(n);
    Submodule ker = Submodule::span(ring, rank, kernel(ring, out));
    Submodule im(ring, rank);
    for (std::size_t j = 0; j < in.cols(); ++j) im.insert(in.column(j));
    if (!(ker == im)) return false;
  }
  return true;
}

}  // namespace dgrep
