#include "qmat/detid.hpp"

#include "qmat/maps.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace qmat;
using testutil::Rng;

namespace {

Word mat_word(const Algebra& a, std::initializer_list<std::pair<int, int>> entries) {
  Word w;
  for (auto [i, j] : entries) w.push_back(a.gen_ordinal(GeneratorId::matrix_entry(i, j)));
  return w;
}

NCPoly quantum_det(const AlgebraPtr& a) {
  std::vector<int> all(a->rows());
  for (int i = 0; i < a->rows(); ++i) all[i] = i + 1;
  return quantum_minor(a, {all, all});
}

}  // namespace

TEST_CASE("quantum minor examples") {
  auto a2 = Algebra::quantum_matrix(2, 2);
  CHECK(quantum_minor(a2, {{1}, {2}}) == NCPoly::generator(a2, GeneratorId::matrix_entry(1, 2)));

  NCPoly det = quantum_minor(a2, {{1, 2}, {1, 2}});
  NCPoly expect = NCPoly::monomial(a2, mat_word(*a2, {{1, 1}, {2, 2}}));
  expect.add_word(mat_word(*a2, {{1, 2}, {2, 1}}), Laurent::q_power(1, Rational(-1)));
  CHECK(det == expect);

  // 3x3 determinant: six terms with coefficients (-q)^{0..3}
  auto a3 = Algebra::quantum_matrix(3, 3);
  NCPoly det3 = quantum_det(a3);
  CHECK(det3.term_count() == 6);
  int by_inv[4] = {0, 0, 0, 0};
  for (const auto& [w, c] : det3.sorted_terms()) {
    (void)w;
    REQUIRE(c.is_monomial());
    const int e = c.min_degree();
    REQUIRE(e >= 0);
    REQUIRE(e <= 3);
    CHECK(c.coeff(e) == ((e % 2 == 0) ? Rational(1) : Rational(-1)));
    ++by_inv[e];
  }
  CHECK(by_inv[0] == 1);
  CHECK(by_inv[1] == 2);
  CHECK(by_inv[2] == 2);
  CHECK(by_inv[3] == 1);

  CHECK_THROWS_AS(quantum_minor(a2, {{1, 2}, {1}}), std::invalid_argument);
}

TEST_CASE("quantum determinant is central") {
  for (int n : {2, 3}) {
    auto a = Algebra::quantum_matrix(n, n);
    NCPoly det = quantum_det(a);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NCPoly x = NCPoly::generator(a, GeneratorId::matrix_entry(i, j));
        CHECK(normal_form(multiply(det, x) - multiply(x, det)).is_zero());
      }
  }
}

TEST_CASE("minor ideal generators") {
  CHECK(i1_generators(Algebra::quantum_matrix(1, 5)).empty());

  auto a2 = Algebra::quantum_matrix(2, 2);
  auto gens2 = i1_generators(a2);
  REQUIRE(gens2.size() == 1);
  CHECK(gens2[0] == quantum_minor(a2, {{1, 2}, {1, 2}}));

  CHECK(i1_generators(Algebra::quantum_matrix(2, 3)).size() == 3);
  CHECK(i1_generators(Algebra::quantum_matrix(3, 3)).size() == 9);
}

TEST_CASE("reduction examples") {
  auto a = Algebra::quantum_matrix(2, 2);
  NCPoly p = reduce_mod_i1(NCPoly::monomial(a, mat_word(*a, {{1, 1}, {2, 2}})));
  CHECK(p == NCPoly::monomial(a, mat_word(*a, {{2, 1}, {1, 2}}), Laurent::q_power(1)));

  CHECK(reduce_mod_i1(quantum_minor(a, {{1, 2}, {1, 2}})).is_zero());

  NCPoly swap = reduce_mod_i1(NCPoly::monomial(a, mat_word(*a, {{1, 2}, {2, 1}})));
  CHECK(swap == NCPoly::monomial(a, mat_word(*a, {{2, 1}, {1, 2}})));
}

TEST_CASE("every minor generator reduces to zero") {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    auto a = Algebra::quantum_matrix(m, n);
    for (const NCPoly& g : i1_generators(a)) {
      CHECK(reduce_mod_i1(g).is_zero());
      CHECK(reduce_mod_i1_by_exchanges(g).is_zero());
    }
  }
}

TEST_CASE("reduction is a projection onto s-words") {
  auto a = Algebra::quantum_matrix(3, 3);
  Rng rng(20240720);
  for (int it = 0; it < 100; ++it) {
    NCPoly p = testutil::random_poly(a, 4, 3, rng);
    NCPoly r = reduce_mod_i1(p);
    CHECK(reduce_mod_i1(r) == r);
    for (const auto& [w, c] : r.sorted_terms()) {
      (void)c;
      CHECK(is_s_word(*a, w));
    }
  }
}

TEST_CASE("s-basis enumeration") {
  auto a22 = Algebra::quantum_matrix(2, 2);
  CHECK(s_basis(*a22, 0).size() == 1);
  CHECK(s_basis(*a22, 0).front().empty());
  CHECK(s_basis(*a22, 2).size() == 9);

  auto a23 = Algebra::quantum_matrix(2, 3);
  CHECK(s_basis(*a23, 1).size() == 6);

  for (const Word& w : s_basis(*a22, 3)) CHECK(is_s_word(*a22, w));
}

TEST_CASE("reduction is sound for the tensor map") {
  auto a = Algebra::quantum_matrix(2, 3);
  auto t = tensor_target(*a);
  Rng rng(20240721);
  for (int it = 0; it < 60; ++it) {
    NCPoly p = testutil::random_poly(a, 4, 3, rng);
    CHECK(theta(p, t) == theta(reduce_mod_i1(p), t));
  }
}

TEST_CASE("pullback route agrees with the exchange route") {
  auto a = Algebra::quantum_matrix(3, 3);
  Rng rng(20240722);
  std::uniform_int_distribution<int> len(0, 5);
  for (int it = 0; it < 1000; ++it) {
    Word w = testutil::random_word(*a, len(rng), rng);
    NCPoly p = NCPoly::monomial(a, w);
    CHECK(reduce_mod_i1(p) == reduce_mod_i1_by_exchanges(p));
  }
}

TEST_CASE("larger minors vanish modulo the ideal") {
  // in the rank<=1 quotient every txt minor with t >= 2 dies
  auto a = Algebra::quantum_matrix(3, 4);
  std::vector<std::vector<int>> cols3{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  for (const auto& cols : cols3) {
    NCPoly m = quantum_minor(a, {{1, 2, 3}, cols});
    CHECK(reduce_mod_i1(m).is_zero());
    CHECK(reduce_mod_i1_by_exchanges(m).is_zero());
  }
  CHECK(reduce_mod_i1(quantum_minor(a, {{1, 3}, {2, 4}})).is_zero());
}

TEST_CASE("reduction is multiplicative modulo the ideal") {
  auto alg = Algebra::quantum_matrix(2, 2);
  Rng rng(20240723);
  for (int it = 0; it < 60; ++it) {
    NCPoly a = testutil::random_poly(alg, 3, 2, rng);
    NCPoly b = testutil::random_poly(alg, 3, 2, rng);
    CHECK(reduce_mod_i1(multiply(a, b)) ==
          reduce_mod_i1(multiply(reduce_mod_i1(a), reduce_mod_i1(b))));
  }
}
