#include <doctest.h>

#include <map>
#include <stdexcept>

#include "qeuler/permstat.hpp"
#include "test_util.hpp"

using namespace qeuler;

TEST_CASE("stat_profile") {
  const StatProfile id = stat_profile({1, 2, 3});
  CHECK(id.des == 0);
  CHECK(id.maj == 0);
  CHECK(id.inv == 0);
  CHECK(id.lrmin == 1);
  CHECK(id.rlmin == 3);

  const StatProfile rev = stat_profile({3, 2, 1});
  CHECK(rev.des == 2);
  CHECK(rev.maj == 3);
  CHECK(rev.inv == 3);
  CHECK(rev.lrmin == 3);
  CHECK(rev.rlmin == 1);

  const StatProfile s = stat_profile({3, 1, 4, 2});
  CHECK(s.des == 2);
  CHECK(s.maj == 4);
  CHECK(s.inv == 3);
  CHECK(s.lrmin == 2);
  CHECK(s.rlmin == 2);
}

TEST_CASE("perm parsing and validation") {
  CHECK(parse_perm("3 1 4 2") == Perm{3, 1, 4, 2});
  CHECK(parse_perm("3,1,4,2") == Perm{3, 1, 4, 2});
  CHECK_THROWS_AS(parse_perm("1 2 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm("0 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm("1 2 x"), std::invalid_argument);
  CHECK(is_permutation({}));
  CHECK_FALSE(is_permutation({2, 3}));
}

TEST_CASE("mixed_major") {
  CHECK(mixed_major({1, 2, 3, 4}, Params{5, 7}) == 0);
  CHECK(mixed_major({3, 1, 4, 2}, Params{1, 1}) == 4);  // reduces to maj
  CHECK(mixed_major({3, 1, 4, 2}, Params{2, 3}) == 9);
  // negative values are possible when a parameter is 0
  CHECK(mixed_major({2, 3, 1}, Params{0, 0}) < mixed_major({2, 3, 1}, Params{1, 1}));
}

TEST_CASE("mixed_major_reduced") {
  CHECK(mixed_major_reduced({1, 2, 3}, 4, ReducedVariant::Maj1) == 0);
  CHECK(mixed_major_reduced({1, 2, 3}, 4, ReducedVariant::Maj2) == 0);
  CHECK(mixed_major_reduced({2, 1, 3}, 2, ReducedVariant::Maj1) == 2);
  CHECK(mixed_major_reduced({2, 1, 3}, 2, ReducedVariant::Maj2) == 1);
}

TEST_CASE("r_stats") {
  const RStats a = r_stats({2, 1}, 2);
  CHECK(a.rdes == 0);
  CHECK(a.rmaj == 1);
  const RStats b = r_stats({1, 2}, 2);
  CHECK(b.rdes == 0);
  CHECK(b.rmaj == 0);
  CHECK_THROWS_AS(r_stats({1, 2}, 0), std::invalid_argument);

  // r = 1 degenerates to (des, maj)
  for_each_permutation(4, [](const Perm& p) {
    const StatProfile s = stat_profile(p);
    const RStats rs = r_stats(p, 1);
    CHECK(rs.rdes == s.des);
    CHECK(rs.rmaj == s.maj);
  });
}

TEST_CASE("for_each_permutation order and count") {
  int count = 0;
  Perm first, last;
  for_each_permutation(3, [&](const Perm& p) {
    if (count == 0) first = p;
    last = p;
    ++count;
  });
  CHECK(count == 6);
  CHECK(first == Perm{1, 2, 3});
  CHECK(last == Perm{3, 2, 1});
  int zero_count = 0;
  for_each_permutation(0, [&](const Perm& p) {
    CHECK(p.empty());
    ++zero_count;
  });
  CHECK(zero_count == 1);
}

TEST_CASE("brute_force_euler examples") {
  CHECK(brute_force_euler(0, 0, Params{2, 3}) == QPoly{1});
  for (long beta = 0; beta <= 3; ++beta)
    CHECK(brute_force_euler(1, 0, Params{2, beta}) == q_int(beta));
  CHECK(brute_force_euler(2, 1, Params{1, 1}) == qp({0, 2, 2}));
}

TEST_CASE("brute_force_euler zero-weight skip guard") {
  // alpha = 0: only permutations starting with 1 survive; no exponent blow-up
  const auto row = brute_force_euler_row(3, Params{0, 2});
  for (const auto& cell : row) CHECK(cell.nonneg_coeffs());
  // alpha = beta = 0 kills everything past n = 0
  for (long k = 0; k <= 2; ++k) CHECK(brute_force_euler(2, k, Params{0, 0}) == QPoly{});
}

TEST_CASE("brute_force_rawlings examples") {
  for (int r = 1; r <= 3; ++r) CHECK(brute_force_rawlings(r, 0, r) == q_factorial(r));
  CHECK(brute_force_rawlings(2, 0, 2) == qp({1, 1}));
  CHECK(brute_force_rawlings(3, 1, 1) == qp({0, 2, 2}));
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(brute_force_euler_row(10, Params{1, 1}), resource_limit_error);
  CHECK_THROWS_AS(brute_force_rawlings_row(5, 1, 4), resource_limit_error);
  CHECK_THROWS_AS(lrmin_distribution(5, 4), resource_limit_error);
  CHECK_NOTHROW(brute_force_rawlings_row(4, 1, 4));
}

TEST_CASE("insert_max examples") {
  auto [a, ca] = insert_max({1, 2}, 0);
  CHECK(a == Perm{3, 1, 2});
  CHECK(ca == InsertCase::Front);

  auto [b, cb] = insert_max({1, 2}, 2);
  CHECK(b == Perm{1, 2, 3});
  CHECK(cb == InsertCase::End);

  auto [c, cc] = insert_max({2, 1}, 1);
  CHECK(c == Perm{2, 3, 1});
  CHECK(cc == InsertCase::AtDescent);

  auto [d, cd] = insert_max({1, 2, 4, 3}, 1);
  CHECK(d == Perm{1, 5, 2, 4, 3});
  CHECK(cd == InsertCase::AtAscent);

  CHECK(insert_max({}, 0).second == InsertCase::End);
  CHECK_THROWS_AS(insert_max({1, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(insert_max({1, 2}, -1), std::invalid_argument);
  CHECK_THROWS_AS(insert_max({1, 1}, 0), std::invalid_argument);
}

TEST_CASE("insert_max statistic deltas, small sweep") {
  // case (a): lrmin and des go up; (b): rlmin goes up; (c): nothing moves;
  // (d): only des goes up
  for (int n = 1; n <= 5; ++n)
    for_each_permutation(n, [n](const Perm& w) {
      const StatProfile sw = stat_profile(w);
      for (int pos = 0; pos <= n; ++pos) {
        const auto [pi, label] = insert_max(w, pos);
        const StatProfile sp = stat_profile(pi);
        switch (label) {
          case InsertCase::Front:
            CHECK(sp.lrmin == sw.lrmin + 1);
            CHECK(sp.rlmin == sw.rlmin);
            CHECK(sp.des == sw.des + 1);
            break;
          case InsertCase::End:
            CHECK(sp.lrmin == sw.lrmin);
            CHECK(sp.rlmin == sw.rlmin + 1);
            CHECK(sp.des == sw.des);
            CHECK(sp.maj == sw.maj);
            break;
          case InsertCase::AtDescent:
            CHECK(sp.lrmin == sw.lrmin);
            CHECK(sp.rlmin == sw.rlmin);
            CHECK(sp.des == sw.des);
            break;
          case InsertCase::AtAscent:
            CHECK(sp.lrmin == sw.lrmin);
            CHECK(sp.rlmin == sw.rlmin);
            CHECK(sp.des == sw.des + 1);
            break;
        }
      }
    });
}

TEST_CASE("record distributions") {
  CHECK(lrmin_distribution(1) == std::vector<unsigned long long>{0, 1});
  CHECK(lrmin_distribution(2) == std::vector<unsigned long long>{0, 1, 1});
  CHECK(lrmin_distribution(3) == std::vector<unsigned long long>{0, 2, 3, 1});

  // lrmin ~ rlmin, and both match the unsigned Stirling first-kind rows
  for (long n = 1; n <= 6; ++n) {
    const auto left = lrmin_distribution(n);
    CHECK(left == rlmin_distribution(n));
    std::vector<unsigned long long> stirling{1};  // row 0
    for (long m = 1; m <= n; ++m) {
      std::vector<unsigned long long> next(m + 1, 0);
      for (long k = 0; k < m; ++k) {
        next[k + 1] += stirling[k];
        next[k] += (m - 1) * stirling[k];
      }
      stirling = next;
    }
    CHECK(left == stirling);
  }
}

TEST_CASE("profile bounds hold across S_n") {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [n](const Perm& p) {
      const StatProfile s = stat_profile(p);
      CHECK(s.lrmin >= 1);
      CHECK(s.lrmin <= n);
      CHECK(s.rlmin >= 1);
      CHECK(s.rlmin <= n);
      CHECK(s.des >= 0);
      CHECK(s.des <= n - 1);
      CHECK(s.maj <= static_cast<long long>(n) * (n - 1) / 2);
      CHECK(s.inv <= static_cast<long long>(n) * (n - 1) / 2);
      // every left-to-right minimum after the first sits right after a descent
      CHECK(s.lrmin <= s.des + 1);
    });
}

TEST_CASE("Mahonian equidistribution at small n") {
  for (long n = 1; n <= 6; ++n) {
    QPoly inv_sum, maj_sum;
    for_each_permutation(static_cast<int>(n), [&](const Perm& p) {
      const StatProfile s = stat_profile(p);
      inv_sum += QPoly::monomial(1, static_cast<std::size_t>(s.inv));
      maj_sum += QPoly::monomial(1, static_cast<std::size_t>(s.maj));
    });
    CHECK(inv_sum == q_factorial(n));
    CHECK(maj_sum == q_factorial(n));
  }
}
