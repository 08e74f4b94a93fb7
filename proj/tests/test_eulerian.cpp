#include <doctest.h>

#include <stdexcept>

#include "qeuler/eulerian.hpp"
#include "test_util.hpp"

using namespace qeuler;

TEST_CASE("euler_rec row 0 and range conventions") {
  EulerTable t(Params{2, 3});
  CHECK(t.at(0, 0) == QPoly{1});
  CHECK(t.at(2, -1) == QPoly{});
  CHECK(t.at(2, 3) == QPoly{});
  CHECK(t.at(-1, 0) == QPoly{});
  CHECK_THROWS_AS(EulerTable(Params{-1, 0}), std::invalid_argument);
}

TEST_CASE("rows 1 and 2 match the closed displays") {
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      EulerTable t(Params{a, b});
      // E_{1,0} = [beta], E_{1,1} = q^beta [alpha]
      CHECK(t.at(1, 0) == q_int(b));
      CHECK(t.at(1, 1) == q_int(a).times_q_pow(static_cast<std::size_t>(b)));
      // E_{2,1} = q^beta ([1+alpha][beta] + [alpha][beta+1])
      const QPoly middle = (q_int(1 + a) * q_int(b) + q_int(a) * q_int(b + 1))
                               .times_q_pow(static_cast<std::size_t>(b));
      CHECK(t.at(2, 1) == middle);
      // E_{2,0} = [beta]^2, E_{2,2} = q^{2 beta + 1} [alpha]^2
      CHECK(t.at(2, 0) == q_int(b).pow(2));
      CHECK(t.at(2, 2) == q_int(a).pow(2).times_q_pow(static_cast<std::size_t>(2 * b + 1)));
    }
}

TEST_CASE("euler_poly") {
  CHECK(euler_poly(0, Params{3, 2}) == XPoly{1});
  CHECK(euler_poly(1, Params{1, 1}) == XPoly::from_coeffs({qp({1}), qp({0, 1})}));
  CHECK(euler_poly(2, Params{1, 1}) ==
        XPoly::from_coeffs({qp({1}), qp({0, 2, 2}), qp({0, 0, 0, 1})}));
}

TEST_CASE("euler_poly_via_qderiv matches euler_poly") {
  CHECK(euler_poly_via_qderiv(1, Params{1, 1}) == XPoly::from_coeffs({qp({1}), qp({0, 1})}));
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long n = 0; n <= 5; ++n)
        CHECK(euler_poly_via_qderiv(n, Params{a, b}) == euler_poly(n, Params{a, b}));
}

TEST_CASE("euler_explicit") {
  for (long b = 0; b <= 3; ++b)
    for (long n = 0; n <= 4; ++n)
      CHECK(euler_explicit(n, 0, Params{2, b}) == q_int(b).pow(static_cast<unsigned long>(n)));
  CHECK(euler_explicit(1, 1, Params{1, 1}) == qp({0, 1}));
  CHECK(euler_explicit(2, 2, Params{1, 1}) == qp({0, 0, 0, 1}));
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b) {
      EulerTable t(Params{a, b});
      for (long n = 0; n <= 5; ++n)
        for (long k = 0; k <= n; ++k) CHECK(euler_explicit(n, k, Params{a, b}) == t.at(n, k));
    }
}

TEST_CASE("worpitzky_sides") {
  for (long n = 0; n <= 3; ++n) {
    const auto [lhs, rhs] = worpitzky_sides(n, 0, Params{2, 3});
    CHECK(lhs == q_int(3).pow(static_cast<unsigned long>(n)));
    CHECK(lhs == rhs);
  }
  const auto [lhs11, rhs11] = worpitzky_sides(1, 1, Params{1, 1});
  CHECK(lhs11 == qp({1, 2, 1}));
  CHECK(rhs11 == qp({1, 2, 1}));

  // q = 1 reduces to the classical Worpitzky identity: rhs(1) = C(j+a+b-1, j) (j+b)^n
  for (long n = 0; n <= 4; ++n)
    for (long j = 0; j <= 4; ++j) {
      const auto [lhs, rhs] = worpitzky_sides(n, j, Params{1, 1});
      Int expect = j + 1;  // C(j+1, j) = j+1
      for (long i = 0; i < n; ++i) expect *= j + 1;
      CHECK(lhs.eval_at(1) == expect);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("series identity") {
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b) CHECK(series_identity_check(0, Params{a, b}, 5));
  CHECK(series_identity_check(2, Params{1, 1}, 8));
  CHECK(series_identity_check(3, Params{0, 2}, 8));
  CHECK_THROWS_AS(series_identity_check(3, Params{1, 1}, 2), std::invalid_argument);
}

TEST_CASE("sum_at_one") {
  CHECK(sum_at_one(0, Params{2, 2}) == QPoly{1});
  CHECK(sum_at_one(2, Params{1, 1}) == qp({1, 2, 2, 1}));
  CHECK(sum_at_one(1, Params{2, 0}) == qp({1, 1}));
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      EulerTable t(Params{a, b});
      for (long n = 0; n <= 5; ++n) {
        QPoly total;
        for (long k = 0; k <= n; ++k) total += t.at(n, k);
        CHECK(total == sum_at_one(n, Params{a, b}));
      }
    }
}

TEST_CASE("euler_star") {
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      for (long n = 0; n <= 4; ++n)
        CHECK(euler_star(n, 0, Params{a, b}) == q_int(b).pow(static_cast<unsigned long>(n)));
      CHECK(euler_star(2, 2, Params{a, b}) == q_int(a).pow(2));
      CHECK(euler_star(2, 1, Params{a, b}) ==
            q_int(1 + a) * q_int(b) + q_int(a) * q_int(b + 1));
    }
  // symmetry E*(n,k;a,b) = E*(n,n-k;b,a)
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      for (long n = 0; n <= 5; ++n)
        for (long k = 0; k <= n; ++k)
          CHECK(euler_star(n, k, Params{a, b}) == euler_star(n, n - k, Params{b, a}));
}

TEST_CASE("rawlings_rec") {
  for (int r = 1; r <= 3; ++r) CHECK(rawlings_rec(r, 0, r) == q_factorial(r));
  CHECK(rawlings_rec(3, 1, 1) == qp({0, 2, 2}));
  CHECK(rawlings_rec(4, 1, 2) == q_factorial(2) * euler_rec(2, 1, Params{1, 2}));
  CHECK(rawlings_rec(5, 3, 3) == QPoly{});  // k > n - r
  CHECK(rawlings_rec(2, 0, 3) == q_factorial(2));  // degenerate region n < r
  CHECK_THROWS_AS(rawlings_rec(3, 0, 0), std::invalid_argument);

  for (int r = 1; r <= 3; ++r)
    for (long n = 0; n <= 6; ++n) {
      const auto row = brute_force_rawlings_row(n, r);
      for (long k = 0; k <= n; ++k) CHECK(rawlings_rec(n, k, r) == row[k]);
    }
}

TEST_CASE("rawlings relation to the two-parameter family") {
  for (int r = 1; r <= 3; ++r) {
    const QPoly rfact = q_factorial(r);
    EulerTable t(Params{1, r});
    for (long n = 0; n <= 5; ++n)
      for (long k = 0; k <= n; ++k)
        CHECK(rawlings_rec(n + r, k, r) == rfact * t.at(n, k));
  }
}

TEST_CASE("st_eulerian") {
  CHECK(st_eulerian(0, 0, 2, 3) == 1);
  CHECK(st_eulerian(0, 1, 2, 3) == 0);
  CHECK(st_eulerian(-1, 0, 1, 1) == 0);
  CHECK(st_eulerian(1, 1, 0, 3) == 3);  // <1,1> = t
  CHECK_THROWS_AS(st_eulerian(2, 1, -1, 0), std::invalid_argument);
  for (long s = 0; s <= 3; ++s)
    for (long t = 0; t <= 3; ++t) {
      EulerTable table(Params{t, s});
      for (long n = 0; n <= 5; ++n)
        for (long k = 0; k <= n; ++k)
          CHECK(st_eulerian(n, k, s, t) == table.at(n, k).eval_at(1));
    }
}

TEST_CASE("classical_eulerian") {
  CHECK(classical_eulerian(0, 0) == 1);
  CHECK(classical_eulerian(3, 1) == 4);
  CHECK(classical_eulerian(4, 4) == 0);
  CHECK(classical_eulerian(2, -1) == 0);
  for (long n = 1; n <= 7; ++n)
    for (long k = 0; k <= n - 1; ++k)
      CHECK(classical_eulerian(n, k) == classical_eulerian(n, n - 1 - k));
  for (long n = 0; n <= 7; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK(st_eulerian(n, k, 1, 0) == classical_eulerian(n, k));
      CHECK(st_eulerian(n, k, 1, 1) == classical_eulerian(n + 1, k));
    }
}

TEST_CASE("q_hit_check") {
  for (int r = 1; r <= 3; ++r)
    for (long n = 0; n <= 3; ++n) {
      const auto [lhs, rhs] = q_hit_sides(n, 0, r);
      CHECK(lhs == q_factorial(r) * q_int(r).pow(static_cast<unsigned long>(n)));
      CHECK(lhs == rhs);
    }
  CHECK(q_hit_check(1, 1, 1));
  CHECK(q_hit_check(2, 1, 2));
  CHECK_THROWS_AS(q_hit_check(1, 1, 0), std::invalid_argument);
}

TEST_CASE("q=1 golden expansion coefficients") {
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b) {
      CHECK(euler_rec(2, 1, Params{a, b}).eval_at(1) == 2 * a * b + a + b);
      CHECK(euler_rec(3, 2, Params{a, b}).eval_at(1) ==
            3 * a * a * b + 3 * a * a + 3 * a * b + a + b);
      CHECK(euler_rec(3, 1, Params{a, b}).eval_at(1) ==
            3 * a * b * b + 3 * a * b + 3 * b * b + a + b);
      // q=1 symmetry of the two-parameter cells
      for (long n = 0; n <= 5; ++n)
        for (long k = 0; k <= n; ++k)
          CHECK(euler_rec(n, k, Params{a, b}).eval_at(1) ==
                euler_rec(n, n - k, Params{b, a}).eval_at(1));
    }
}
