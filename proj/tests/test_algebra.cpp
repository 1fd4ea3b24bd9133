#include <doctest.h>

#include <random>

#include "dgrep/complex.hpp"
#include "dgrep/errors.hpp"
#include "dgrep/linalg.hpp"
#include "oracles.hpp"

using namespace dgrep;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = coeff(rng);
  return m;
}

Complex three_term(long d0, long d1) {
  std::map<int, Matrix> blocks;
  Matrix a(1, 1), b(1, 1);
  a(0, 0) = d0;
  b(0, 0) = d1;
  blocks[0] = a;
  blocks[1] = b;
  return Complex::from_blocks(GradedModule({{0, {"x"}}, {1, {"y"}}, {2, {"z"}}}), blocks);
}

}  // namespace

TEST_CASE("rings parse and reduce to canonical representatives") {
  CHECK(Ring::parse("Z") == Ring::integers());
  CHECK(Ring::parse("Q") == Ring::rationals());
  CHECK(Ring::parse("Z/6").modulus() == 6);
  CHECK_THROWS_AS(Ring::parse("Z/1"), RingError);
  CHECK_THROWS_AS(Ring::parse("R"), RingError);
  const Ring z5 = Ring::modular(5);
  CHECK(z5.reduce(Scalar(-1)) == 4);
  CHECK(z5.reduce(Scalar(1, 2)) == 3);
  CHECK_THROWS_AS(Ring::modular(4).reduce(Scalar(1, 2)), RingError);
  CHECK_THROWS_AS(Ring::integers().reduce(Scalar(1, 2)), RingError);
  CHECK(Ring::modular(2).sign(1) == 1);
  CHECK(Ring::integers().sign(3) == -1);
  CHECK(parse_scalar("-3/6") == Scalar(-1, 2));
  CHECK(format_scalar(Scalar(-1, 2)) == "-1/2");
}

TEST_CASE("determinant and invertibility agree with cofactor expansion over Q") {
  std::mt19937 rng(7);
  const Ring q = Ring::rationals();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix m = random_matrix(rng, n, n, -2, 2);
    std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) rows[r][c] = m(r, c);
    const Scalar expected = oracle::laplace_det(rows);
    CHECK(determinant(q, m) == expected);
    CHECK(is_invertible(q, m) == (expected != 0));
    if (expected != 0) CHECK(multiply(q, m, inverse(q, m)) == Matrix::identity(n));
  }
}

TEST_CASE("row-reduction rank agrees with the largest nonvanishing minor") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + (trial / 4) % 4;
    Matrix m = random_matrix(rng, rows, cols, -1, 1);
    CHECK(rational_rank(m) == oracle::minor_rank(m));
  }
}

TEST_CASE("kernels are annihilated and span the full solution space over Z/n") {
  std::mt19937 rng(3);
  for (long n : {2L, 4L, 6L}) {
    const Ring ring = Ring::modular(n);
    for (int trial = 0; trial < 30; ++trial) {
      Matrix m = reduce(ring, random_matrix(rng, 2, 3, 0, static_cast<int>(n - 1)));
      auto basis = kernel(ring, m);
      Submodule k = Submodule::span(ring, 3, basis);
      long brute = 0;
      for (const auto& v : oracle::all_elements(3, n)) {
        Vector x(v.begin(), v.end());
        const bool in_kernel = is_zero(apply(ring, m, x));
        brute += in_kernel;
        CHECK(k.contains(x) == in_kernel);
      }
      CHECK(*k.cardinality() == brute);
    }
  }
}

TEST_CASE("submodules over Z/4 track torsion") {
  const Ring z4 = Ring::modular(4);
  Submodule s = Submodule::span(z4, 2, {{2, 0}});
  CHECK(*s.cardinality() == 2);
  CHECK(s.contains(Vector{2, 0}));
  CHECK_FALSE(s.contains(Vector{1, 0}));
  CHECK(s.rank() == 1);
  CHECK(Submodule(z4, 2).rank() == 0);
  CHECK(Submodule::whole(z4, 2).elements().size() == 16);
}

TEST_CASE("disk complexes") {
  const Ring z = Ring::integers();
  Complex d0 = disk(0);
  CHECK(d0.carrier().rank(-1) == 1);
  CHECK(d0.carrier().rank(0) == 1);
  CHECK(d0.block(-1) == Matrix::identity(1));
  CHECK(check_complex(z, disk(5)).passed());
  for (int n = -3; n <= 3; ++n) {
    CHECK(is_acyclic(z, disk(n)));
    CHECK(is_acyclic(Ring::modular(2), disk(n)));
  }
}

TEST_CASE("complex checks") {
  const Ring z = Ring::integers();
  CHECK(check_complex(z, disk(3)).passed());
  Report bad = check_complex(z, three_term(1, 1));
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.failure_count() == 1);
  CHECK(bad.failures()[0].check == "d^2=0");
  CHECK(bad.failures()[0].detail.find("degree 0") != std::string::npos);
  CHECK(check_complex(z, Complex::zero_differential(GradedModule({{0, {"a"}}, {1, {"b"}}, {2, {"c"}}}))).passed());
  CHECK_THROWS_AS(Complex(GradedModule({{0, {"a", "b"}}}), Matrix::identity(2)), StructuralError);
}

TEST_CASE("chain maps on disk(0)") {
  const Ring z = Ring::integers();
  CHECK(check_chain_map(z, {disk(0), disk(0), 0, Matrix::identity(2)}).passed());
  CHECK(check_chain_map(z, {disk(0), disk(0), 0, Matrix(2, 2)}).passed());
  Matrix twice = Matrix::identity(2);
  twice(0, 0) = 2;  // the degree -1 basis vector
  Report r = check_chain_map(z, {disk(0), disk(0), 0, twice});
  CHECK(r.failed("closed"));
}

TEST_CASE("tensor products") {
  const Ring z = Ring::integers();
  TensorProduct unit = tensor(z, disk(0), unit_complex());
  CHECK(unit.complex.carrier().degrees() == disk(0).carrier().degrees());
  CHECK(unit.complex.differential() == disk(0).differential());
  CHECK(check_complex(z, tensor(z, disk(0), disk(0)).complex).passed());
  Complex t = tensor(z, disk(1), disk(1)).complex;
  CHECK(t.carrier().rank(0) == 1);
  CHECK(t.carrier().rank(1) == 2);
  CHECK(t.carrier().rank(2) == 1);
  CHECK(t.carrier().support() == std::vector<int>{0, 1, 2});
}

TEST_CASE("tensor differential follows the sign rule") {
  const Ring z = Ring::integers();
  Matrix d(3, 3);
  d(1, 0) = 2;
  d(2, 1) = 0;
  Complex odd(GradedModule({{-1, {"a"}}, {0, {"b"}}, {1, {"c"}}}), d);
  const std::vector<Complex> samples = {disk(0), disk(1), disk(-2), odd, unit_complex()};
  for (const auto& u : samples)
    for (const auto& v : samples) {
      TensorProduct t = tensor(z, u, v);
      std::vector<std::pair<std::size_t, std::size_t>> order;
      Matrix expected = oracle::tensor_differential(z, u, v, order);
      for (std::size_t p = 0; p < order.size(); ++p)
        for (std::size_t q = 0; q < order.size(); ++q)
          CHECK(t.complex.differential()(t.at(order[p].first, order[p].second),
                                         t.at(order[q].first, order[q].second)) == expected(p, q));
      CHECK(check_complex(z, t.complex).passed());
    }
}

TEST_CASE("tensor is associative up to rebracketing") {
  const Ring z = Ring::integers();
  Matrix d(3, 3);
  d(1, 0) = 1;
  Complex odd(GradedModule({{-1, {"a"}}, {0, {"b"}}, {1, {"c"}}}), d);
  const std::vector<Complex> samples = {disk(0), disk(1), odd};
  for (const auto& u : samples)
    for (const auto& v : samples)
      for (const auto& w : samples) {
        TensorProduct uv = tensor(z, u, v);
        TensorProduct left = tensor(z, uv.complex, w);
        TensorProduct vw = tensor(z, v, w);
        TensorProduct right = tensor(z, u, vw.complex);
        auto l = [&](std::size_t i, std::size_t j, std::size_t k) { return left.at(uv.at(i, j), k); };
        auto r = [&](std::size_t i, std::size_t j, std::size_t k) { return right.at(i, vw.at(j, k)); };
        for (std::size_t i = 0; i < u.dim(); ++i)
          for (std::size_t j = 0; j < v.dim(); ++j)
            for (std::size_t k = 0; k < w.dim(); ++k) {
              CHECK(left.complex.degree(l(i, j, k)) == right.complex.degree(r(i, j, k)));
              for (std::size_t i2 = 0; i2 < u.dim(); ++i2)
                for (std::size_t j2 = 0; j2 < v.dim(); ++j2)
                  for (std::size_t k2 = 0; k2 < w.dim(); ++k2)
                    CHECK(left.complex.differential()(l(i2, j2, k2), l(i, j, k)) ==
                          right.complex.differential()(r(i2, j2, k2), r(i, j, k)));
            }
      }
}
