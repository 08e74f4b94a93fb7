#include <doctest.h>

#include <stdexcept>

#include "qeuler/qpoly.hpp"
#include "test_util.hpp"

using namespace qeuler;

TEST_CASE("QPoly arithmetic basics") {
  const QPoly one_plus_q = qp({1, 1});
  CHECK(one_plus_q * one_plus_q == qp({1, 2, 1}));
  CHECK(qp({1, 1, 1}) * qp({1, 1}) == qp({1, 2, 2, 1}));

  const QPoly p = qp({3, 0, -2, 7});
  CHECK(p + QPoly{} == p);
  CHECK(p - p == QPoly{});
  CHECK(p * QPoly{1} == p);
  CHECK((-p) + p == QPoly{});
  CHECK(p * QPoly{} == QPoly{});
}

TEST_CASE("QPoly canonical form and accessors") {
  CHECK(QPoly(std::vector<Int>{1, 2, 0, 0}) == qp({1, 2}));
  CHECK(QPoly{}.degree() == -1);
  CHECK(QPoly{}.is_zero());
  CHECK(qp({0, 0, 5}).degree() == 2);
  CHECK(qp({1, 2}).coeff(7) == 0);
  CHECK(QPoly::monomial(3, 2) == qp({0, 0, 3}));
  CHECK(QPoly::monomial(0, 5) == QPoly{});
}

TEST_CASE("times_q_pow and pow") {
  CHECK(qp({1, 1}).times_q_pow(2) == qp({0, 0, 1, 1}));
  CHECK(qp({1, 1}).times_q_pow(0) == qp({1, 1}));
  CHECK(qp({1, 1}).pow(2) == qp({1, 2, 1}));
  CHECK(qp({1, 1}).pow(0) == QPoly{1});
  CHECK(QPoly{}.pow(0) == QPoly{1});  // empty product
  CHECK(QPoly{}.pow(3) == QPoly{});
}

TEST_CASE("q_int") {
  CHECK(q_int(0) == QPoly{});
  CHECK(q_int(1) == QPoly{1});
  CHECK(q_int(3) == qp({1, 1, 1}));
  CHECK_THROWS_AS(q_int(-1), std::invalid_argument);
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(0) == QPoly{1});
  CHECK(q_factorial(2) == qp({1, 1}));
  CHECK(q_factorial(3) == qp({1, 2, 2, 1}));
  CHECK_THROWS_AS(q_factorial(-2), std::invalid_argument);
}

TEST_CASE("q_binomial values and conventions") {
  for (long r = 0; r <= 5; ++r) CHECK(q_binomial(r, 0) == QPoly{1});
  CHECK(q_binomial(4, 2) == qp({1, 1, 2, 1, 1}));
  CHECK(q_binomial(3, 5) == QPoly{});
  CHECK(q_binomial(2, -1) == QPoly{});
  CHECK(q_binomial(-1, 0) == QPoly{1});  // empty bottom, any top
  CHECK(q_binomial(-1, 1) == QPoly{});
  CHECK(q_binomial(2, 1) == qp({1, 1}));
}

TEST_CASE("q_binomial against the factorial-quotient route") {
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= n; ++k) {
      const QPoly quotient = q_factorial(n).div_exact(q_factorial(k) * q_factorial(n - k));
      CHECK(q_binomial(n, k) == quotient);
    }
}

TEST_CASE("q_binomial symmetry and q=1 specialization") {
  // independent integer Pascal triangle
  std::vector<std::vector<Int>> pascal{{1}};
  for (int n = 1; n <= 10; ++n) {
    std::vector<Int> row(n + 1, 1);
    for (int k = 1; k < n; ++k) row[k] = pascal.back()[k - 1] + pascal.back()[k];
    pascal.push_back(row);
  }
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k) == q_binomial(n, n - k));
      CHECK(q_binomial(n, k).eval_at(1) == pascal[n][k]);
    }
}

TEST_CASE("q_factorial factorization through q_binomial") {
  for (long r = 0; r <= 12; ++r)
    for (long k = 0; k <= r; ++k)
      CHECK(q_factorial(r) == q_binomial(r, k) * q_factorial(k) * q_factorial(r - k));
}

TEST_CASE("q_int additivity") {
  for (long a = 0; a <= 10; ++a)
    for (long b = 0; b <= 10; ++b)
      CHECK(q_int(a + b) == q_int(a) + q_int(b).times_q_pow(a));
}

TEST_CASE("eval_at") {
  CHECK(qp({1, 1, 1}).eval_at(1) == 3);
  CHECK(QPoly{}.eval_at(42) == 0);
  CHECK(qp({1, 2, 1}).eval_at(2) == 9);
  CHECK(qp({1, 2, 1}).eval_at(-1) == 0);
  // big result stays exact: [5] at q=10 is 11111, raised to the 20th power
  Int expected = 1;
  for (int i = 0; i < 20; ++i) expected *= 11111;
  CHECK(q_int(5).pow(20).eval_at(10) == expected);
}

TEST_CASE("div_exact") {
  const QPoly a = qp({1, 2, 2, 1});
  const QPoly b = qp({1, 1});
  CHECK((a * b).div_exact(b) == a);
  CHECK((a * b).div_exact(a) == b);
  CHECK(QPoly{}.div_exact(b) == QPoly{});
  CHECK_THROWS_AS(qp({0, 1}).div_exact(qp({1, 1})), std::logic_error);
  CHECK_THROWS_AS(qp({1, 1, 1}).div_exact(qp({2, 2})), std::logic_error);
  CHECK_THROWS_AS(a.div_exact(QPoly{}), std::invalid_argument);
}

TEST_CASE("coefficient strings round-trip") {
  CHECK(qp({1, 0, -3}).coeff_string() == "1,0,-3");
  CHECK(QPoly{}.coeff_string() == "0");
  CHECK(QPoly::parse_coeff_string("0") == QPoly{});
  CHECK(QPoly::parse_coeff_string("1,0,-3") == qp({1, 0, -3}));
  CHECK(QPoly::parse_coeff_string("0,1") == qp({0, 1}));
  for (const QPoly& p : {QPoly{}, qp({5}), qp({0, 1}), qp({-1, 0, 0, 7})})
    CHECK(QPoly::parse_coeff_string(p.coeff_string()) == p);
  CHECK_THROWS_AS(QPoly::parse_coeff_string("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(QPoly::parse_coeff_string(""), std::invalid_argument);
}

TEST_CASE("pretty and latex rendering") {
  CHECK(qp({1, 2, 1}).pretty() == "1 + 2q + q^2");
  CHECK(qp({0, 2, 2}).latex() == "2q^{2} + 2q");
  CHECK(qp({0, 0, 0, 1}).latex() == "q^{3}");
  CHECK(qp({-1, 1}).pretty() == "-1 + q");
  CHECK(QPoly{}.pretty() == "0");
}
