#include "qmat/laurent.hpp"
#include "qmat/linsolve.hpp"
#include "qmat/oracle.hpp"
#include "qmat/ratscalar.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <map>

using namespace qmat;
using testutil::Rng;

namespace {

// Independent convolution of exponent maps, for cross-checking products.
Laurent brute_mul(const Laurent& a, const Laurent& b) {
  std::map<int, Rational> acc;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) acc[ea + eb] += ca * cb;
  Laurent r;
  for (const auto& [e, c] : acc) r += Laurent::q_power(e, c);
  return r;
}

Laurent random_nonzero(Rng& rng) {
  Laurent c = testutil::random_laurent(rng);
  while (c.is_zero()) c = testutil::random_laurent(rng);
  return c;
}

}  // namespace

TEST_CASE("laurent product examples") {
  const Laurent q = Laurent::q_power(1), qi = Laurent::q_power(-1);
  CHECK(q * qi == Laurent(1));
  CHECK((q - qi) * q == Laurent::q_power(2) - Laurent(1));
  // expanded by hand and by brute-force convolution
  const Laurent lhs = (q - qi) * (q + qi);
  CHECK(lhs == Laurent::q_power(2) - Laurent::q_power(-2));
  CHECK(lhs == brute_mul(q - qi, q + qi));
}

TEST_CASE("laurent specialization examples") {
  const Laurent q = Laurent::q_power(1), qi = Laurent::q_power(-1);
  CHECK((q - qi).specialize(Rational(1)) == 0);
  CHECK(Laurent::q_power(2).specialize(Rational(2)) == 4);
  CHECK((-q).specialize(Rational(3)) == -3);
  CHECK_THROWS_AS(q.specialize(Rational(0)), std::invalid_argument);
}

TEST_CASE("laurent canonical string") {
  CHECK(Laurent().str() == "0");
  CHECK((Laurent::q_power(2) - Laurent::q_power(-2)).str() == "1*q^2 - 1*q^-2");
  CHECK(Laurent(make_rational(3, 2)).str() == "3/2*q^0");
  CHECK((-Laurent::q_power(1)).str() == "-1*q^1");
}

TEST_CASE("laurent ring axioms on random triples") {
  Rng rng(20240701);
  for (int it = 0; it < 200; ++it) {
    Laurent a = testutil::random_laurent(rng), b = testutil::random_laurent(rng),
            c = testutil::random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("nonzero products stay nonzero and degrees add") {
  Rng rng(20240702);
  for (int it = 0; it < 200; ++it) {
    Laurent a = random_nonzero(rng), b = random_nonzero(rng);
    Laurent p = a * b;
    REQUIRE(!p.is_zero());
    CHECK(p.min_degree() == a.min_degree() + b.min_degree());
    CHECK(p.max_degree() == a.max_degree() + b.max_degree());
  }
}

TEST_CASE("specialization is multiplicative") {
  Rng rng(20240703);
  std::uniform_int_distribution<int> cnum(-5, 5);
  for (int it = 0; it < 200; ++it) {
    Laurent a = testutil::random_laurent(rng), b = testutil::random_laurent(rng);
    int c = cnum(rng);
    if (c == 0) c = 2;
    const Rational cv(c);
    CHECK((a * b).specialize(cv) == a.specialize(cv) * b.specialize(cv));
  }
}

TEST_CASE("q-rational arithmetic and equality by cross-multiplication") {
  const Laurent q = Laurent::q_power(1);
  RatScalar half(Laurent(1), q + Laurent(1));
  RatScalar twice = half + half;
  CHECK(twice == RatScalar(Laurent(2), q + Laurent(1)));
  CHECK(half * RatScalar(q + Laurent(1)) == RatScalar(1));
  CHECK_THROWS_AS(RatScalar(Laurent(1), Laurent()), std::invalid_argument);
  CHECK((RatScalar(q) / RatScalar(q)) == RatScalar(1));
  // reduction through a common factor
  RatScalar r(q * q - Laurent(1), q - Laurent(1));
  CHECK(r == RatScalar(q + Laurent(1)));
}

TEST_CASE("poly gcd and exact division") {
  const Laurent q = Laurent::q_power(1);
  const Laurent a = (q - Laurent(1)) * (q + Laurent(1));
  CHECK(divide_exact(a, q - Laurent(1)) == q + Laurent(1));
  CHECK(poly_gcd(a, (q - Laurent(1)) * q) == q - Laurent(1));
  CHECK_THROWS_AS(divide_exact(q + Laurent(1), q - Laurent(1)), std::domain_error);
}

TEST_CASE("rank and kernel of small matrices") {
  const Laurent q = Laurent::q_power(1);
  RatMatrix id3(3, std::vector<RatScalar>(3));
  for (int i = 0; i < 3; ++i) id3[i][i] = RatScalar(1);
  CHECK(matrix_rank(id3) == 3);
  CHECK(kernel_basis(id3).empty());

  RatMatrix row{{RatScalar(1), RatScalar(-q)}};
  CHECK(matrix_rank(row) == 1);
  auto kb = kernel_basis(row);
  REQUIRE(kb.size() == 1);
  // (q, 1) up to scalar
  CHECK(kb[0][0] * Laurent(1) == kb[0][1] * q);
}

TEST_CASE("rank of the degree-2 tensor-map matrix") {
  TruncatedMap tm = build_theta_matrix(2, 2, 2);
  REQUIRE(tm.source_basis.size() == 10);
  REQUIRE(tm.target_basis.size() == 9);
  RatMatrix dense = tm.dense();
  CHECK(matrix_rank(dense) == 9);
  CHECK(kernel_basis(dense).size() == 1);
}

TEST_CASE("symbolic rank agrees with a random specialization") {
  Rng rng(20240704);
  const Laurent q = Laurent::q_power(1);
  std::uniform_int_distribution<int> entry(-2, 2), exp(-1, 1), denpick(0, 2);
  const Laurent dens[3] = {Laurent(1), q + Laurent(1), q};
  for (int it = 0; it < 20; ++it) {
    RatMatrix m(4, std::vector<RatScalar>(5));
    for (auto& r : m)
      for (auto& e : r)
        e = RatScalar(Laurent::q_power(exp(rng), Rational(entry(rng))), dens[denpick(rng)]);
    const Rational c(5, 3);  // avoids every denominator zero
    std::vector<std::vector<Rational>> spec(m.size(), std::vector<Rational>(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m[0].size(); ++j) spec[i][j] = m[i][j].specialize(c);
    // specialized rank can only drop; at a generic rational it must agree
    CHECK(matrix_rank(m) == testutil::rational_rank(spec));
  }
}
