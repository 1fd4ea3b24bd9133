#include "dgrep/linalg.hpp"

#include <stdexcept>

#include "dgrep/errors.hpp"

namespace dgrep {

namespace {

// floor division for integers held as mpq with unit denominator
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer as_integer(const Scalar& s) { return s.get_num(); }

void reduce_mod(Vector& v, const Integer& n, std::size_t from) {
  for (std::size_t i = from; i < v.size(); ++i) {
    Integer x = as_integer(v[i]) % n;
    if (x < 0) x += n;
    v[i] = x;
  }
}

// Combines a pivot row p (pivot in column c) with v so that v[c] becomes 0,
// via the unimodular transform [[s, t], [-b/g, a/g]].
void gcd_combine(Vector& p, Vector& v, std::size_t c) {
  Integer a = as_integer(p[c]);
  Integer b = as_integer(v[c]);
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer ag = a / g;
  Integer bg = b / g;
  for (std::size_t i = c; i < p.size(); ++i) {
    Scalar pi = p[i];
    Scalar vi = v[i];
    p[i] = Scalar(s) * pi + Scalar(t) * vi;
    v[i] = Scalar(ag) * vi - Scalar(bg) * pi;
  }
}

}  // namespace

Submodule::Submodule(Ring ring, std::size_t ambient) : ring_(ring), n_(ambient), rows_(ambient) {
  if (ring_.kind() == Ring::Kind::modular) {
    for (std::size_t c = 0; c < n_; ++c) {
      Vector row(n_);
      row[c] = ring_.modulus();
      rows_[c] = std::move(row);
    }
  }
}

Submodule Submodule::span(const Ring& ring, std::size_t ambient, const std::vector<Vector>& generators) {
  Submodule s(ring, ambient);
  s.insert_all(generators);
  return s;
}

Submodule Submodule::whole(const Ring& ring, std::size_t ambient) {
  Submodule s(ring, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.insert(unit_vector(ambient, i));
  return s;
}

Vector Submodule::lift(const Vector& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector does not match submodule ambient rank");
  Vector out = reduce(ring_, v);
  return out;
}

void Submodule::insert(const Vector& input) {
  Vector v = lift(input);
  const bool modular = ring_.kind() == Ring::Kind::modular;
  const Integer modulus = modular ? Integer(ring_.modulus()) : Integer(0);
  for (std::size_t c = 0; c < n_; ++c) {
    if (v[c] == 0) continue;
    auto& slot = rows_[c];
    if (ring_.kind() == Ring::Kind::rationals) {
      if (!slot) {
        Scalar inv = Scalar(1) / v[c];
        for (std::size_t i = c; i < n_; ++i) v[i] *= inv;
        slot = std::move(v);
        normalized_ = false;
        return;
      }
      Scalar f = v[c];
      for (std::size_t i = c; i < n_; ++i) v[i] -= f * (*slot)[i];
      continue;
    }
    if (!slot) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      slot = std::move(v);
      normalized_ = false;
      return;
    }
    gcd_combine(*slot, v, c);
    if ((*slot)[c] < 0)
      for (auto& x : *slot) x = -x;
    if (modular) {
      reduce_mod(*slot, modulus, c + 1);
      reduce_mod(v, modulus, c + 1);
    }
    normalized_ = false;
  }
}

void Submodule::insert_all(const std::vector<Vector>& vs) {
  for (const auto& v : vs) insert(v);
}

void Submodule::normalize() const {
  if (normalized_) return;
  for (std::size_t c = 0; c < n_; ++c) {
    if (!rows_[c]) continue;
    const Vector& p = *rows_[c];
    for (std::size_t r = 0; r < c; ++r) {
      if (!rows_[r]) continue;
      Vector& q = *rows_[r];
      if (q[c] == 0) continue;
      Scalar factor;
      if (ring_.kind() == Ring::Kind::rationals) {
        factor = q[c];
      } else {
        factor = Scalar(floor_div(as_integer(q[c]), as_integer(p[c])));
        if (factor == 0) continue;
      }
      for (std::size_t i = c; i < n_; ++i) q[i] -= factor * p[i];
    }
  }
  normalized_ = true;
}

std::vector<Vector> Submodule::canonical_rows() const {
  normalize();
  std::vector<Vector> out;
  for (const auto& r : rows_)
    if (r) out.push_back(*r);
  return out;
}

std::vector<Vector> Submodule::generators() const {
  std::vector<Vector> out;
  for (auto& r : canonical_rows()) {
    Vector v = reduce(ring_, r);
    if (!dgrep::is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

bool Submodule::contains(const Vector& input) const {
  normalize();
  Vector v = lift(input);
  for (std::size_t c = 0; c < n_; ++c) {
    if (v[c] == 0) continue;
    if (!rows_[c]) return false;
    const Vector& p = *rows_[c];
    Scalar factor;
    if (ring_.kind() == Ring::Kind::rationals) {
      factor = v[c];
    } else {
      Integer num = as_integer(v[c]);
      Integer piv = as_integer(p[c]);
      if (num % piv != 0) return false;
      factor = Scalar(num / piv);
    }
    for (std::size_t i = c; i < n_; ++i) v[i] -= factor * p[i];
    if (ring_.kind() == Ring::Kind::modular) reduce_mod(v, ring_.modulus(), c + 1);
  }
  return true;
}

bool Submodule::contains(const Submodule& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Submodule::is_zero() const { return generators().empty(); }

bool Submodule::is_whole() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!contains(unit_vector(n_, i))) return false;
  return true;
}

std::optional<Integer> Submodule::cardinality() const {
  if (!ring_.is_finite()) return std::nullopt;
  normalize();
  Integer count = 1;
  for (std::size_t c = 0; c < n_; ++c) count *= Integer(ring_.modulus()) / as_integer((*rows_[c])[c]);
  return count;
}

std::size_t Submodule::rank() const { return generators().size(); }

std::vector<Vector> Submodule::elements(std::size_t limit) const {
  auto card = cardinality();
  if (!card) throw Refusal("cannot enumerate a submodule over infinite ring " + ring_.name());
  if (*card > Integer(static_cast<unsigned long>(limit)))
    throw Refusal("submodule has " + card->get_str() + " elements, above the enumeration limit");
  normalize();
  std::vector<Vector> basis;
  std::vector<long> orders;
  for (std::size_t c = 0; c < n_; ++c) {
    long order = ring_.modulus() / as_integer((*rows_[c])[c]).get_si();
    if (order > 1) {
      basis.push_back(*rows_[c]);
      orders.push_back(order);
    }
  }
  std::vector<Vector> out;
  std::vector<long> coeff(basis.size(), 0);
  while (true) {
    Vector v(n_);
    for (std::size_t i = 0; i < basis.size(); ++i) axpy(v, Scalar(coeff[i]), basis[i]);
    out.push_back(reduce(ring_, v));
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == orders[i]) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  return out;
}

Submodule Submodule::sum(const Submodule& other) const {
  Submodule out = *this;
  out.insert_all(other.generators());
  return out;
}

Submodule Submodule::intersect(const Submodule& other) const {
  auto gs = generators();
  auto hs = other.generators();
  Matrix m(n_, gs.size() + hs.size());
  for (std::size_t j = 0; j < gs.size(); ++j) m.set_column(j, gs[j]);
  for (std::size_t j = 0; j < hs.size(); ++j) m.set_column(gs.size() + j, scale(ring_, Scalar(-1), hs[j]));
  Submodule out(ring_, n_);
  for (const auto& k : kernel(ring_, m)) {
    Vector v(n_);
    for (std::size_t j = 0; j < gs.size(); ++j) axpy(v, k[j], gs[j]);
    out.insert(reduce(ring_, v));
  }
  return out;
}

bool Submodule::operator==(const Submodule& other) const {
  if (!(ring_ == other.ring_) || n_ != other.n_) return false;
  return canonical_rows() == other.canonical_rows();
}

namespace {

// Integer kernel of the rows of `b` (each of length k): the x with b x = 0.
// Runs a unimodular echelon reduction on [b^T | I_k], restricted to pivots in
// the first r columns; rows whose prefix vanishes carry a kernel basis.
std::vector<Vector> integer_kernel(const std::vector<Vector>& b, std::size_t k) {
  const std::size_t r = b.size();
  std::vector<std::optional<Vector>> pivots(r);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < k; ++i) {
    Vector v(r + k);
    for (std::size_t j = 0; j < r; ++j) v[j] = b[j][i];
    v[r + i] = 1;
    bool placed = false;
    for (std::size_t c = 0; c < r && !placed; ++c) {
      if (v[c] == 0) continue;
      if (!pivots[c]) {
        pivots[c] = std::move(v);
        placed = true;
        break;
      }
      gcd_combine(*pivots[c], v, c);
    }
    if (!placed) out.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
  }
  return out;
}

}  // namespace

std::vector<Vector> kernel(const Ring& ring, const Matrix& a) {
  const std::size_t k = a.cols();
  if (k == 0) return {};
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  Submodule rowspace = Submodule::span(ring, k, rows);
  switch (ring.kind()) {
    case Ring::Kind::rationals: {
      auto rref = rowspace.canonical_rows();
      std::vector<long> pivot_of_col(k, -1);
      for (std::size_t i = 0; i < rref.size(); ++i)
        for (std::size_t c = 0; c < k; ++c)
          if (rref[i][c] != 0) {
            pivot_of_col[c] = static_cast<long>(i);
            break;
          }
      std::vector<Vector> out;
      for (std::size_t f = 0; f < k; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        Vector x(k);
        x[f] = 1;
        for (std::size_t c = 0; c < k; ++c)
          if (pivot_of_col[c] >= 0) x[c] = -rref[static_cast<std::size_t>(pivot_of_col[c])][f];
        out.push_back(std::move(x));
      }
      return out;
    }
    case Ring::Kind::integers:
      return integer_kernel(rowspace.canonical_rows(), k);
    case Ring::Kind::modular: {
      // x with B x = 0 mod n  <=>  (x, y) in ker [B | n I] over Z.
      auto lattice = rowspace.canonical_rows();
      std::vector<Vector> aug;
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        Vector row(k + lattice.size());
        for (std::size_t c = 0; c < k; ++c) row[c] = lattice[i][c];
        row[k + i] = ring.modulus();
        aug.push_back(std::move(row));
      }
      std::vector<Vector> out;
      for (const auto& z : integer_kernel(aug, k + lattice.size())) {
        Vector x = reduce(ring, Vector(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(k)));
        if (!is_zero(x)) out.push_back(std::move(x));
      }
      return Submodule::span(ring, k, out).generators();
    }
  }
  return {};
}

std::vector<Vector> preimage(const Ring& ring, const Matrix& a, const Submodule& s) {
  auto gs = s.generators();
  const std::size_t k = a.cols();
  Matrix m(a.rows(), k + gs.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = a(i, j);
  for (std::size_t j = 0; j < gs.size(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, k + j) = ring.neg(gs[j][i]);
  std::vector<Vector> out;
  for (const auto& z : kernel(ring, m)) {
    Vector x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(k));
    if (!is_zero(x)) out.push_back(std::move(x));
  }
  if (k == 0) return out;
  return Submodule::span(ring, k, out).generators();
}

Submodule image(const Ring& ring, const Matrix& a) {
  Submodule s(ring, a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) s.insert(a.column(c));
  return s;
}

namespace {

// Gaussian elimination over Q on lifted entries. Returns det and, when
// requested, the inverse.
Scalar rational_det(Matrix m, Matrix* inv) {
  const std::size_t n = m.rows();
  Matrix aug = Matrix::identity(n);
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(aug(p, j), aug(c, j));
      }
      det = -det;
    }
    Scalar piv = m(c, c);
    det *= piv;
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= piv;
      aug(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      Scalar f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        aug(r, j) -= f * aug(c, j);
      }
    }
  }
  if (inv) *inv = aug;
  return det;
}

}  // namespace

Scalar determinant(const Ring& ring, const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  return ring.reduce(rational_det(a, nullptr));
}

bool is_invertible(const Ring& ring, const Matrix& a) {
  return a.rows() == a.cols() && ring.is_unit(determinant(ring, a));
}

Matrix inverse(const Ring& ring, const Matrix& a) {
  if (a.rows() != a.cols()) throw RingError("inverse of a non-square matrix");
  Matrix inv;
  Scalar det = rational_det(a, &inv);
  if (!ring.is_unit(det)) throw RingError("matrix is not invertible over " + ring.name());
  if (ring.kind() != Ring::Kind::modular) return inv;
  // adjugate = det * inverse is integral; divide by det in the ring.
  Scalar det_inv = ring.inverse(det);
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.mul(ring.reduce(det * inv(i, j)), det_inv);
  return out;
}

std::size_t rational_rank(const Matrix& a) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return Submodule::span(Ring::rationals(), a.cols(), rows).rank();
}

}  // namespace dgrep
