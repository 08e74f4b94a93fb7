#include "qeuler/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <random>
#include <stdexcept>

#include "qeuler/eulerian.hpp"

namespace qeuler::verify {

namespace {

std::string kv(std::initializer_list<std::pair<const char*, long long>> items) {
  std::string s;
  for (const auto& [k, v] : items) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += std::to_string(v);
  }
  return s;
}

long long mixed_major_profile(const StatProfile& s, long alpha, long beta) {
  return (1 + s.des - s.lrmin) * (alpha - 1) +
         static_cast<long long>(s.len - s.rlmin) * (beta - 1) + s.maj;
}

// unsigned Stirling numbers of the first kind, c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
std::vector<unsigned long long> stirling_first_row(int n) {
  std::vector<unsigned long long> row{1};  // n = 0
  for (int m = 1; m <= n; ++m) {
    std::vector<unsigned long long> next(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 0; k < m; ++k) {
      next[static_cast<std::size_t>(k + 1)] += row[static_cast<std::size_t>(k)];
      next[static_cast<std::size_t>(k)] +=
          static_cast<unsigned long long>(m - 1) * row[static_cast<std::size_t>(k)];
    }
    row = std::move(next);
  }
  return row;
}

Int binomial_int(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

QPoly random_qpoly(std::mt19937& gen, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
  std::vector<Int> v(static_cast<std::size_t>(deg(gen)) + 1);
  for (auto& c : v) c = coeff(gen);
  return QPoly(std::move(v));
}

XPoly random_xpoly(std::mt19937& gen, int max_xdeg, int max_qdeg, int max_abs) {
  std::uniform_int_distribution<int> deg(0, max_xdeg);
  std::vector<QPoly> v(static_cast<std::size_t>(deg(gen)) + 1);
  for (auto& c : v) c = random_qpoly(gen, max_qdeg, max_abs);
  return XPoly::from_coeffs(std::move(v));
}

// ---------------------------------------------------------------- catalog

void check_ring_laws(const Ranges&, CheckRecorder& rec) {
  std::mt19937 gen(12345);
  for (int i = 0; i < 150 && !rec.failed(); ++i) {
    const QPoly a = random_qpoly(gen, 5, 9);
    const QPoly b = random_qpoly(gen, 5, 9);
    const QPoly c = random_qpoly(gen, 5, 9);
    const std::string inputs = "sample=" + std::to_string(i) + " a=" + a.coeff_string() +
                               " b=" + b.coeff_string() + " c=" + c.coeff_string();
    if (!rec.expect_eq((a + b) + c, a + (b + c), inputs)) return;
    if (!rec.expect_eq(a + b, b + a, inputs)) return;
    if (!rec.expect_eq(a * b, b * a, inputs)) return;
    if (!rec.expect_eq((a * b) * c, a * (b * c), inputs)) return;
    if (!rec.expect_eq(a * (b + c), a * b + a * c, inputs)) return;
    if (!rec.expect_eq(a + (-a), QPoly{}, inputs)) return;
    if (!rec.expect_eq(a * QPoly{1}, a, inputs)) return;
  }
}

void check_qbin_symmetry(const Ranges&, CheckRecorder& rec) {
  for (long n = 0; n <= 12; ++n)
    for (long k = 0; k <= n; ++k)
      if (!rec.expect_eq(q_binomial(n, k), q_binomial(n, n - k), kv({{"n", n}, {"k", k}}))) return;
}

void check_qbin_at_one(const Ranges&, CheckRecorder& rec) {
  for (long n = 0; n <= 12; ++n)
    for (long k = 0; k <= n; ++k)
      if (!rec.expect_eq(q_binomial(n, k).eval_at(1), binomial_int(n, k),
                         kv({{"n", n}, {"k", k}})))
        return;
}

void check_qfact_product(const Ranges&, CheckRecorder& rec) {
  for (long r = 0; r <= 12; ++r)
    for (long k = 0; k <= r; ++k)
      if (!rec.expect_eq(q_factorial(r), q_binomial(r, k) * q_factorial(k) * q_factorial(r - k),
                         kv({{"r", r}, {"k", k}})))
        return;
}

void check_qint_additivity(const Ranges&, CheckRecorder& rec) {
  for (long a = 0; a <= 10; ++a)
    for (long b = 0; b <= 10; ++b)
      if (!rec.expect_eq(q_int(a + b), q_int(a) + q_int(b).times_q_pow(static_cast<std::size_t>(a)),
                         kv({{"a", a}, {"b", b}})))
        return;
}

void check_q_leibniz(const Ranges&, CheckRecorder& rec) {
  std::mt19937 gen(54321);
  for (int i = 0; i < 60 && !rec.failed(); ++i) {
    const XPoly f = random_xpoly(gen, 3, 2, 3);
    const XPoly g = random_xpoly(gen, 3, 2, 3);
    const std::string inputs =
        "sample=" + std::to_string(i) + " f=" + f.pretty() + " g=" + g.pretty();
    if (!rec.expect_eq(delta_x(f * g), delta_x(f) * g.subst_qx() + f * delta_x(g), inputs)) return;
  }
}

void check_poch_inverse(const Ranges& r, CheckRecorder& rec) {
  const auto J = static_cast<std::size_t>(r.series_order);
  for (long N = 0; N <= 8; ++N)
    if (!rec.expect_eq(pochhammer_x(N) * pochhammer_inv_series(N, r.series_order),
                       XPoly{1}.truncated(J), kv({{"N", N}, {"J", r.series_order}})))
      return;
}

void check_poch_coeffs(const Ranges&, CheckRecorder& rec) {
  for (long N = 0; N <= 8; ++N) {
    const XPoly p = pochhammer_x(N);
    for (long i = 0; i <= N; ++i) {
      QPoly expected =
          q_binomial(N, i).times_q_pow(static_cast<std::size_t>(i * (i - 1) / 2));
      if (i % 2 == 1) expected = -expected;
      if (!rec.expect_eq(p.coeff(static_cast<std::size_t>(i)), expected,
                         kv({{"N", N}, {"i", i}})))
        return;
    }
  }
}

void check_poch_at_one(const Ranges&, CheckRecorder& rec) {
  for (long N = 0; N <= 8; ++N) {
    const XPoly p = pochhammer_x(N);
    for (long i = 0; i <= N; ++i) {
      Int expected = binomial_int(N, i);
      if (i % 2 == 1) expected = -expected;
      if (!rec.expect_eq(p.coeff(static_cast<std::size_t>(i)).eval_at(1), expected,
                         kv({{"N", N}, {"i", i}})))
        return;
    }
  }
}

void check_mahonian(const Ranges& r, CheckRecorder& rec) {
  for (int n = 1; n <= r.n_rec; ++n) {
    QPoly inv_sum, maj_sum;
    for_each_permutation(n, [&](const Perm& p) {
      const StatProfile s = stat_profile(p);
      inv_sum += QPoly::monomial(1, static_cast<std::size_t>(s.inv));
      maj_sum += QPoly::monomial(1, static_cast<std::size_t>(s.maj));
    });
    const QPoly fact = q_factorial(n);
    if (!rec.expect_eq(inv_sum, fact, kv({{"n", n}, {"stat", 0}}))) return;
    if (!rec.expect_eq(maj_sum, fact, kv({{"n", n}, {"stat", 1}}))) return;
  }
}

void check_records_match(const Ranges& r, CheckRecorder& rec) {
  for (int n = 1; n <= r.n_rec; ++n) {
    const auto left = lrmin_distribution(n, r.enum_cap);
    const auto right = rlmin_distribution(n, r.enum_cap);
    for (std::size_t k = 1; k < left.size(); ++k)
      if (!rec.expect_eq(left[k], right[k], kv({{"n", n}, {"k", static_cast<long long>(k)}})))
        return;
  }
}

void check_records_stirling(const Ranges& r, CheckRecorder& rec) {
  for (int n = 1; n <= r.n_rec; ++n) {
    const auto hist = lrmin_distribution(n, r.enum_cap);
    const auto stirling = stirling_first_row(n);
    for (std::size_t k = 1; k < hist.size(); ++k)
      if (!rec.expect_eq(hist[k], stirling[k], kv({{"n", n}, {"k", static_cast<long long>(k)}})))
        return;
  }
}

void check_insertion_bijection(const Ranges& r, CheckRecorder& rec) {
  for (int n = 1; n <= r.n_oracle; ++n) {
    bool stop = false;
    for_each_permutation(n + 1, [&](const Perm& pi) {
      if (stop) return;
      // locate n+1, delete it, re-insert at its position
      int pos = 0;
      while (pi[static_cast<std::size_t>(pos)] != n + 1) ++pos;
      Perm w = pi;
      w.erase(w.begin() + pos);
      const auto [rebuilt, label] = insert_max(w, pos);
      if (!rec.expect_true(rebuilt == pi, kv({{"n", n}, {"pos", pos}}))) {
        stop = true;
        return;
      }
      const StatProfile sw = stat_profile(w);
      const StatProfile sp = stat_profile(pi);
      int dl = 0, dr = 0, dd = 0;
      long long dmaj_expected = 0;
      const int k = sp.des;
      switch (label) {
        case InsertCase::Front:
          dl = 1, dd = 1;
          break;
        case InsertCase::End:
          dr = 1;
          break;
        case InsertCase::AtDescent: {
          // j = 1-based rank of the descent at pos among w's descents
          int j = 0;
          for (int i = 1; i <= pos; ++i)
            if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) ++j;
          dmaj_expected = k - j + 1;
          break;
        }
        case InsertCase::AtAscent: {
          dd = 1;
          int before = 0;
          for (int i = 1; i < pos; ++i)
            if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) ++before;
          const int after = sw.des - before;
          dmaj_expected = (pos + 1) + after;
          break;
        }
      }
      const std::string inputs =
          kv({{"n", n}, {"pos", pos}}) + " case=" + static_cast<char>(label);
      if (!rec.expect_eq(static_cast<long long>(sp.lrmin - sw.lrmin), static_cast<long long>(dl),
                         inputs) ||
          !rec.expect_eq(static_cast<long long>(sp.rlmin - sw.rlmin), static_cast<long long>(dr),
                         inputs) ||
          !rec.expect_eq(static_cast<long long>(sp.des - sw.des), static_cast<long long>(dd),
                         inputs)) {
        stop = true;
        return;
      }
      // mixed-major deltas per case, checked on a small (alpha,beta) grid:
      //   front: beta+k-1, end: 0, at the j-th descent: beta+k-j,
      //   at an ascent: (alpha-1)+(beta-1)+(pos+1)+(descents of w after pos)
      for (long a = 0; a <= 2 && !stop; ++a)
        for (long b = 0; b <= 2; ++b) {
          long long want = 0;
          switch (label) {
            case InsertCase::Front: want = b + k - 1; break;
            case InsertCase::End: want = 0; break;
            case InsertCase::AtDescent: want = b + dmaj_expected - 1; break;
            case InsertCase::AtAscent: want = (a - 1) + (b - 1) + dmaj_expected; break;
          }
          const long long got = mixed_major_profile(sp, a, b) - mixed_major_profile(sw, a, b);
          if (!rec.expect_eq(got, want,
                             inputs + " " + kv({{"alpha", a}, {"beta", b}}))) {
            stop = true;
            return;
          }
        }
    });
    if (stop) return;
  }
}

void check_oracle_carlitz(const Ranges& r, CheckRecorder& rec) {
  for (long n = 0; n <= r.n_oracle; ++n) {
    const auto lhs = brute_force_euler_row(n, Params{1, 1}, r.enum_cap);
    const auto rhs = brute_force_rawlings_row(n + 1, 1, r.enum_cap);
    for (long k = 0; k <= n; ++k)
      if (!rec.expect_eq(lhs[static_cast<std::size_t>(k)], rhs[static_cast<std::size_t>(k)],
                         kv({{"n", n}, {"k", k}})))
        return;
  }
}

void check_r_stats_degenerate(const Ranges& r, CheckRecorder& rec) {
  for (int n = 1; n <= r.n_oracle; ++n) {
    bool stop = false;
    for_each_permutation(n, [&](const Perm& p) {
      if (stop) return;
      const StatProfile s = stat_profile(p);
      const RStats rs = r_stats(p, 1);
      const std::string inputs = kv({{"n", n}}) + " perm=" + [&] {
        std::string w;
        for (int v : p) w += std::to_string(v);
        return w;
      }();
      if (!rec.expect_eq(static_cast<long long>(rs.rdes), static_cast<long long>(s.des), inputs) ||
          !rec.expect_eq(rs.rmaj, s.maj, inputs))
        stop = true;
    });
    if (stop) return;
  }
}

void check_oracle_agreement(const Ranges& r, CheckRecorder& rec) {
  for (long a = 0; a <= r.ab_max; ++a)
    for (long b = 0; b <= r.ab_max; ++b) {
      EulerTable table(Params{a, b});
      for (long n = 0; n <= r.n_oracle; ++n) {
        const auto row = brute_force_euler_row(n, Params{a, b}, r.enum_cap);
        for (long k = 0; k <= n; ++k)
          if (!rec.expect_eq(table.at(n, k), row[static_cast<std::size_t>(k)],
                             kv({{"alpha", a}, {"beta", b}, {"n", n}, {"k", k}})))
            return;
      }
    }
}

void check_explicit_agreement(const Ranges& r, CheckRecorder& rec) {
  for (long a = 0; a <= r.ab_max; ++a)
    for (long b = 0; b <= r.ab_max; ++b) {
      EulerTable table(Params{a, b});
      for (long n = 0; n <= r.n_rec; ++n)
        for (long k = 0; k <= n; ++k)
          if (!rec.expect_eq(euler_explicit(n, k, Params{a, b}), table.at(n, k),
                             kv({{"alpha", a}, {"beta", b}, {"n", n}, {"k", k}})))
            return;
    }
}

void check_qderiv(const Ranges& r, CheckRecorder& rec) {
  for (long a = 0; a <= r.ab_max; ++a)
    for (long b = 0; b <= r.ab_max; ++b)
      for (long n = 0; n <= r.n_rec; ++n)
        if (!rec.expect_eq(euler_poly_via_qderiv(n, Params{a, b}), euler_poly(n, Params{a, b}),
                           kv({{"alpha", a}, {"beta", b}, {"n", n}})))
          return;
}

void check_worpitzky(const Ranges& r, CheckRecorder& rec) {
  for (long a = 0; a <= r.ab_max; ++a)
    for (long b = 0; b <= r.ab_max; ++b)
      for (long n = 0; n <= r.n_rec; ++n)
        for (long j = 0; j <= r.j_max; ++j) {
          const auto [lhs, rhs] = worpitzky_sides(n, j, Params{a, b});
          if (!rec.expect_eq(lhs, rhs, kv({{"alpha", a}, {"beta", b}, {"n", n}, {"j", j}})))
            return;
        }
}

void check_series_identity(const Ranges& r, CheckRecorder& rec) {
  const long J = r.series_order;
  for (long a = 0; a <= r.ab_max; ++a)
    for (long b = 0; b <= r.ab_max; ++b)
      for (long n = 0; n <= std::min<long>(r.n_rec, J); ++n) {
        const auto [lhs, rhs] = series_identity_sides(n, Params{a, b}, J);
        if (!rec.expect_eq(lhs, rhs, kv({{"alpha", a}, {"beta", b}, {"n", n}, {"J", J}})))
          return;
      }
}

void check_row_sum(const Ranges& r, CheckRecorder& rec) {
  if (!rec.expect_eq(sum_at_one(2, Params{1, 1}), QPoly(std::vector<Int>{1, 2, 2, 1}),
                     "spot n=2 alpha=1 beta=1"))
    return;
  for (long a = 0; a <= r.ab_max; ++a)
    for (long b = 0; b <= r.ab_max; ++b) {
      EulerTable table(Params{a, b});
      for (long n = 0; n <= r.n_rec; ++n) {
        QPoly sum;
        for (long k = 0; k <= n; ++k) sum += table.at(n, k);
        if (!rec.expect_eq(sum, sum_at_one(n, Params{a, b}),
                           kv({{"alpha", a}, {"beta", b}, {"n", n}})))
          return;
      }
    }
}

void check_star_symmetry(const Ranges& r, CheckRecorder& rec) {
  for (long a = 0; a <= r.ab_max; ++a)
    for (long b = 0; b <= r.ab_max; ++b)
      for (long n = 0; n <= r.n_rec; ++n)
        for (long k = 0; k <= n; ++k)
          if (!rec.expect_eq(euler_star(n, k, Params{a, b}), euler_star(n, n - k, Params{b, a}),
                             kv({{"alpha", a}, {"beta", b}, {"n", n}, {"k", k}})))
            return;
}

void check_rawlings_base(const Ranges& r, CheckRecorder& rec) {
  for (int rr = 1; rr <= r.r_max; ++rr)
    if (!rec.expect_eq(rawlings_rec(rr, 0, rr), q_factorial(rr), kv({{"r", rr}}))) return;
}

void check_rawlings_oracle(const Ranges& r, CheckRecorder& rec) {
  for (int rr = 1; rr <= r.r_max; ++rr)
    for (long n = 0; n <= r.n_rec; ++n) {
      const auto row = brute_force_rawlings_row(n, rr, r.enum_cap);
      for (long k = 0; k <= n; ++k)
        if (!rec.expect_eq(rawlings_rec(n, k, rr), row[static_cast<std::size_t>(k)],
                           kv({{"r", rr}, {"n", n}, {"k", k}})))
          return;
    }
}

void check_rawlings_relation(const Ranges& r, CheckRecorder& rec) {
  for (int rr = 1; rr <= r.r_max; ++rr) {
    const QPoly rfact = q_factorial(rr);
    EulerTable table(Params{1, rr});
    for (long n = 0; n <= r.n_rec; ++n)
      for (long k = 0; k <= n; ++k)
        if (!rec.expect_eq(rawlings_rec(n + rr, k, rr), rfact * table.at(n, k),
                           kv({{"r", rr}, {"n", n}, {"k", k}})))
          return;
  }
}

void check_q_hit(const Ranges& r, CheckRecorder& rec) {
  for (int rr = 1; rr <= r.r_max; ++rr)
    for (long n = 0; n <= r.n_rec; ++n)
      for (long j = 0; j <= r.j_max; ++j) {
        const auto [lhs, rhs] = q_hit_sides(n, j, rr);
        if (!rec.expect_eq(lhs, rhs, kv({{"r", rr}, {"n", n}, {"j", j}}))) return;
      }
}

void check_golden_q1(const Ranges& r, CheckRecorder& rec) {
  for (long a = 0; a <= r.ab_max; ++a)
    for (long b = 0; b <= r.ab_max; ++b) {
      const Int a2 = a * a, b2 = b * b;
      if (!rec.expect_eq(euler_rec(2, 1, Params{a, b}).eval_at(1), Int(2 * a * b + a + b),
                         kv({{"alpha", a}, {"beta", b}, {"n", 2}, {"k", 1}})))
        return;
      if (!rec.expect_eq(euler_rec(3, 2, Params{a, b}).eval_at(1),
                         Int(3 * a2 * b + 3 * a2 + 3 * a * b + a + b),
                         kv({{"alpha", a}, {"beta", b}, {"n", 3}, {"k", 2}})))
        return;
      if (!rec.expect_eq(euler_rec(3, 1, Params{a, b}).eval_at(1),
                         Int(3 * a * b2 + 3 * a * b + 3 * b2 + a + b),
                         kv({{"alpha", a}, {"beta", b}, {"n", 3}, {"k", 1}})))
        return;
    }
}

void check_st_euler_link(const Ranges& r, CheckRecorder& rec) {
  for (long s = 0; s <= r.ab_max; ++s)
    for (long t = 0; t <= r.ab_max; ++t) {
      EulerTable table(Params{t, s});
      for (long n = 0; n <= r.n_rec; ++n)
        for (long k = 0; k <= n; ++k)
          if (!rec.expect_eq(st_eulerian(n, k, s, t), table.at(n, k).eval_at(1),
                             kv({{"s", s}, {"t", t}, {"n", n}, {"k", k}})))
            return;
    }
}

void check_classical_links(const Ranges& r, CheckRecorder& rec) {
  for (long n = 0; n <= r.n_rec; ++n)
    for (long k = 0; k <= n; ++k) {
      if (!rec.expect_eq(st_eulerian(n, k, 1, 0), classical_eulerian(n, k),
                         kv({{"n", n}, {"k", k}, {"s", 1}, {"t", 0}})))
        return;
      if (!rec.expect_eq(st_eulerian(n, k, 1, 1), classical_eulerian(n + 1, k),
                         kv({{"n", n}, {"k", k}, {"s", 1}, {"t", 1}})))
        return;
      if (n >= 1 && k <= n - 1 &&
          !rec.expect_eq(classical_eulerian(n, k), classical_eulerian(n, n - 1 - k),
                         kv({{"n", n}, {"k", k}})))
        return;
    }
}

void check_r_euler_link(const Ranges& r, CheckRecorder& rec) {
  for (int rr = 1; rr <= r.r_max; ++rr) {
    Int rfact = 1;
    for (int i = 2; i <= rr; ++i) rfact *= i;
    for (long n = 0; n <= r.n_rec; ++n)
      for (long k = 0; k <= n; ++k)
        if (!rec.expect_eq(rfact * st_eulerian(n, k, rr, 1),
                           rawlings_rec(n + rr, k, rr).eval_at(1),
                           kv({{"r", rr}, {"n", n}, {"k", k}})))
          return;
  }
}

void check_butler_alpha0(const Ranges& r, CheckRecorder& rec) {
  for (long beta = 1; beta <= r.ab_max; ++beta) {
    EulerTable table(Params{0, beta});
    for (int n = 1; n <= r.n_oracle; ++n) {
      std::vector<QPoly> rows(static_cast<std::size_t>(n) + 1);
      std::vector<QPoly> bpow(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i <= n; ++i) bpow[static_cast<std::size_t>(i)] = q_int(beta).pow(i);
      for_each_permutation(n, [&](const Perm& p) {
        const StatProfile s = stat_profile(p);
        const long long e = mixed_major_reduced(p, beta, ReducedVariant::Maj1);
        if (e < 0) throw std::logic_error("butler alpha=0: negative reduced exponent");
        rows[static_cast<std::size_t>(s.des)] +=
            bpow[static_cast<std::size_t>(s.rlmin)].times_q_pow(static_cast<std::size_t>(e));
      });
      for (long k = 0; k <= n; ++k)
        if (!rec.expect_eq(table.at(n, k), rows[static_cast<std::size_t>(k)],
                           kv({{"beta", beta}, {"n", n}, {"k", k}})))
          return;
    }
  }
}

void check_butler_beta0(const Ranges& r, CheckRecorder& rec) {
  for (long alpha = 1; alpha <= r.ab_max; ++alpha) {
    EulerTable table(Params{alpha, 0});
    for (int n = 1; n <= r.n_oracle; ++n) {
      std::vector<QPoly> rows(static_cast<std::size_t>(n) + 1);
      std::vector<QPoly> apow(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i <= n; ++i) apow[static_cast<std::size_t>(i)] = q_int(alpha).pow(i);
      for_each_permutation(n, [&](const Perm& p) {
        const StatProfile s = stat_profile(p);
        const long long e = mixed_major_reduced(p, alpha, ReducedVariant::Maj2);
        if (e < 0) throw std::logic_error("butler beta=0: negative reduced exponent");
        rows[static_cast<std::size_t>(1 + s.des)] +=  // x-shift: coefficient of x^{1+des}
            apow[static_cast<std::size_t>(s.lrmin)].times_q_pow(static_cast<std::size_t>(e));
      });
      for (long k = 0; k <= n; ++k)
        if (!rec.expect_eq(table.at(n, k), rows[static_cast<std::size_t>(k)],
                           kv({{"alpha", alpha}, {"n", n}, {"k", k}})))
          return;
    }
  }
}

void check_carlitz_identity(const Ranges& r, CheckRecorder& rec) {
  const long J = r.series_order;
  for (int m = 1; m <= r.n_oracle + 1; ++m) {
    // sum over S_m of x^des q^maj, by exhaustive enumeration (r = 1 statistics)
    const auto row = brute_force_rawlings_row(m, 1, r.enum_cap);
    const XPoly lhs = XPoly::from_coeffs(row).truncated(static_cast<std::size_t>(J));
    std::vector<QPoly> sum(static_cast<std::size_t>(J) + 1);
    for (long j = 0; j <= J; ++j)
      sum[static_cast<std::size_t>(j)] = q_int(j + 1).pow(static_cast<unsigned long>(m));
    const XPoly rhs =
        pochhammer_x(m + 1) * XPoly::from_coeffs(std::move(sum), static_cast<std::size_t>(J));
    if (!rec.expect_eq(lhs, rhs, kv({{"m", m}, {"J", J}}))) return;
  }
}

void check_q1_symmetry(const Ranges& r, CheckRecorder& rec) {
  for (long a = 0; a <= r.ab_max; ++a)
    for (long b = 0; b <= r.ab_max; ++b) {
      EulerTable ab(Params{a, b});
      EulerTable ba(Params{b, a});
      for (long n = 0; n <= r.n_rec; ++n)
        for (long k = 0; k <= n; ++k)
          if (!rec.expect_eq(ab.at(n, k).eval_at(1), ba.at(n, n - k).eval_at(1),
                             kv({{"alpha", a}, {"beta", b}, {"n", n}, {"k", k}})))
            return;
    }
}

void check_boundary_cells(const Ranges& r, CheckRecorder& rec) {
  for (long a = 0; a <= r.ab_max; ++a)
    for (long b = 0; b <= r.ab_max; ++b) {
      EulerTable table(Params{a, b});
      for (long n = 0; n <= r.n_rec; ++n) {
        const std::string inputs = kv({{"alpha", a}, {"beta", b}, {"n", n}});
        if (!rec.expect_eq(table.at(n, 0), q_int(b).pow(static_cast<unsigned long>(n)), inputs))
          return;
        const QPoly corner = q_int(a).pow(static_cast<unsigned long>(n))
                                 .times_q_pow(static_cast<std::size_t>(n * b + n * (n - 1) / 2));
        if (!rec.expect_eq(table.at(n, n), corner, inputs)) return;
      }
    }
}

}  // namespace

const std::vector<CheckDef>& default_catalog() {
  static const std::vector<CheckDef> catalog = {
      {"qpoly-ring-laws", "ring axioms for q-polynomial arithmetic on seeded random operands",
       false, check_ring_laws},
      {"qbin-symmetry", "Gaussian binomial symmetry qbin(n,k) = qbin(n,n-k)", false,
       check_qbin_symmetry},
      {"qbin-at-one", "Gaussian binomial at q=1 equals the ordinary binomial coefficient", false,
       check_qbin_at_one},
      {"qfact-product", "[r]! = qbin(r,k) [k]! [r-k]!", false, check_qfact_product},
      {"qint-additivity", "[a+b] = [a] + q^a [b]", false, check_qint_additivity},
      {"q-leibniz", "delta(fg) = delta(f) g(qx) + f delta(g) on seeded random operands", false,
       check_q_leibniz},
      {"poch-inverse", "(x;q)_N times its inverse series is 1 up to the truncation order", false,
       check_poch_inverse},
      {"poch-coeffs", "coefficients of (x;q)_N are (-1)^i q^{i(i-1)/2} qbin(N,i)", false,
       check_poch_coeffs},
      {"poch-at-one", "(x;q)_N at q=1 equals (1-x)^N", false, check_poch_at_one},
      {"mahonian-equidistribution", "inv and maj both generate [n]! over S_n", true,
       check_mahonian},
      {"records-match", "lrmin and rlmin are equidistributed over S_n", true, check_records_match},
      {"records-stirling",
       "lrmin distribution equals the unsigned Stirling numbers of the first kind", true,
       check_records_stirling},
      {"insertion-bijection",
       "removing and re-inserting the maximum letter is bijective and each insertion case obeys "
       "its statistic deltas",
       true, check_insertion_bijection},
      {"oracle-carlitz",
       "the enumeration oracle at alpha=beta=1 reduces to the maj q-Eulerian distribution", true,
       check_oracle_carlitz},
      {"r-stats-degenerate", "r=1 statistics coincide with (des, maj)", true,
       check_r_stats_degenerate},
      {"oracle-agreement", "recurrence cells equal the exhaustive permutation oracle", true,
       check_oracle_agreement},
      {"explicit-agreement", "alternating explicit formula equals the recurrence", false,
       check_explicit_agreement},
      {"qderiv-recurrence", "q-derivative route reproduces the row polynomials", false,
       check_qderiv},
      {"worpitzky", "Worpitzky-type expansion: both sides agree", false, check_worpitzky},
      {"series-identity", "Carlitz-type series identity at the declared truncation order", false,
       check_series_identity},
      {"row-sum", "row sums telescope to prod_i [alpha+beta+i] (with pinned spot value)", false,
       check_row_sum},
      {"star-symmetry", "rescaled triangle satisfies E*(n,k;a,b) = E*(n,n-k;b,a)", false,
       check_star_symmetry},
      {"rawlings-base", "A[r,0;r] = [r]!", false, check_rawlings_base},
      {"rawlings-oracle", "Rawlings recurrence equals exhaustive r-descent enumeration", true,
       check_rawlings_oracle},
      {"rawlings-relation", "A[n+r,k;r] = [r]! E_{n,k}(1,r,q)", false, check_rawlings_relation},
      {"q-hit", "q-hit style expansion of the Rawlings triangle", false, check_q_hit},
      {"golden-q1", "q=1 cells match the printed two-variable expansion coefficients", false,
       check_golden_q1},
      {"st-euler-link", "(s,t)-Eulerian numbers equal E_{n,k}(t,s,1)", false,
       check_st_euler_link},
      {"classical-links", "(1,0) and (1,1) specializations hit the classical Eulerian triangle",
       false, check_classical_links},
      {"r-euler-link", "r! <n,k>_(r,1) equals the Rawlings cell A[n+r,k;r] at q=1", false,
       check_r_euler_link},
      {"butler-alpha0",
       "alpha=0 rows equal direct enumeration with the beta-reduced mixed major index", true,
       check_butler_alpha0},
      {"butler-beta0",
       "beta=0 rows equal direct enumeration with the alpha-reduced mixed major index (x-shift)",
       true, check_butler_beta0},
      {"carlitz-identity", "classical Carlitz identity over S_m against enumeration", true,
       check_carlitz_identity},
      {"q1-symmetry", "E_{n,k}(a,b,1) = E_{n,n-k}(b,a,1)", false, check_q1_symmetry},
      {"boundary-cells", "E_{n,0} = [beta]^n and E_{n,n} = q^{n beta + C(n,2)} [alpha]^n", false,
       check_boundary_cells},
  };
  return catalog;
}

std::vector<CheckSpec> default_specs() {
  std::vector<CheckSpec> specs;
  for (const auto& def : default_catalog()) specs.push_back({def.name, Ranges{}});
  return specs;
}

bool CheckRecorder::record(bool ok, const std::string& inputs, std::string lhs, std::string rhs) {
  if (cex_) return false;
  ++instances_;
  if (!ok) cex_ = Counterexample{inputs, std::move(lhs), std::move(rhs)};
  return ok;
}

bool CheckRecorder::expect_eq(const QPoly& lhs, const QPoly& rhs, const std::string& inputs) {
  return record(lhs == rhs, inputs, lhs.coeff_string(), rhs.coeff_string());
}

bool CheckRecorder::expect_eq(const XPoly& lhs, const XPoly& rhs, const std::string& inputs) {
  return record(lhs == rhs, inputs, lhs.pretty(), rhs.pretty());
}

bool CheckRecorder::expect_eq(const Int& lhs, const Int& rhs, const std::string& inputs) {
  return record(lhs == rhs, inputs, lhs.get_str(), rhs.get_str());
}

bool CheckRecorder::expect_eq(unsigned long long lhs, unsigned long long rhs,
                              const std::string& inputs) {
  return record(lhs == rhs, inputs, std::to_string(lhs), std::to_string(rhs));
}

bool CheckRecorder::expect_eq(long long lhs, long long rhs, const std::string& inputs) {
  return record(lhs == rhs, inputs, std::to_string(lhs), std::to_string(rhs));
}

bool CheckRecorder::expect_true(bool ok, const std::string& inputs) {
  return record(ok, inputs, ok ? "true" : "false", "true");
}

bool VerifyReport::all_pass() const {
  for (const auto& res : results)
    if (res.status != CheckStatus::Pass) return false;
  return true;
}

bool VerifyReport::any_resource_error() const {
  for (const auto& res : results)
    if (res.status == CheckStatus::ResourceError) return true;
  return false;
}

VerifyReport run_suite(const std::vector<CheckSpec>& specs) {
  return run_suite(specs, default_catalog());
}

VerifyReport run_suite(const std::vector<CheckSpec>& specs, const std::vector<CheckDef>& catalog) {
  VerifyReport report;
  for (const auto& def : catalog)
    report.manifest.push_back({def.name, def.description, def.uses_oracle, false});

  for (const auto& spec : specs) {
    const CheckDef* def = nullptr;
    for (std::size_t i = 0; i < catalog.size(); ++i)
      if (catalog[i].name == spec.name) {
        def = &catalog[i];
        report.manifest[i].selected = true;
        break;
      }
    if (!def) throw std::invalid_argument("unknown check: " + spec.name);

    CheckResult res;
    res.name = def->name;
    res.description = def->description;
    CheckRecorder rec;
    const auto start = std::chrono::steady_clock::now();
    try {
      def->body(spec.ranges, rec);
      res.status = rec.failed() ? CheckStatus::Fail : CheckStatus::Pass;
    } catch (const resource_limit_error& e) {
      res.status = CheckStatus::ResourceError;
      res.error = e.what();
    } catch (const std::exception& e) {
      res.status = CheckStatus::InternalError;
      res.error = e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    res.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    res.instances = rec.instances();
    res.counterexample = rec.counterexample();
    report.results.push_back(std::move(res));
  }
  return report;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ResourceError: return "resource-error";
    case CheckStatus::InternalError: return "internal-error";
  }
  return "unknown";
}

std::string report_json(const VerifyReport& report, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["kind"] = "verify-report";
  doc["all_pass"] = report.all_pass();
  auto& checks = doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& res : report.results) {
    nlohmann::ordered_json item;
    item["name"] = res.name;
    item["description"] = res.description;
    item["status"] = status_name(res.status);
    item["instances"] = res.instances;
    if (res.counterexample) {
      item["counterexample"] = {{"inputs", res.counterexample->inputs},
                                {"lhs", res.counterexample->lhs},
                                {"rhs", res.counterexample->rhs}};
    } else {
      item["counterexample"] = nullptr;
    }
    if (!res.error.empty()) item["error"] = res.error;
    if (include_timing) item["millis"] = res.millis;
    checks.push_back(std::move(item));
  }
  auto& manifest = doc["manifest"] = nlohmann::ordered_json::array();
  for (const auto& entry : report.manifest)
    manifest.push_back({{"name", entry.name},
                        {"description", entry.description},
                        {"oracle", entry.uses_oracle},
                        {"selected", entry.selected}});
  return doc.dump(2);
}

}  // namespace qeuler::verify
