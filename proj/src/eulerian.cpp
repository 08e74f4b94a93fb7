#include "qeuler/eulerian.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qeuler {

namespace {
const QPoly kZeroPoly{};
}  // namespace

void EulerTable::ensure_rows(long n) {
  if (rows_.empty()) rows_.push_back({QPoly{1}});
  while (static_cast<long>(rows_.size()) <= n) {
    const auto& prev = rows_.back();
    const long m = static_cast<long>(rows_.size());  // row being built
    std::vector<QPoly> row(static_cast<std::size_t>(m) + 1);
    for (long k = 0; k <= m; ++k) {
      QPoly cell;
      if (k >= 1 && k - 1 <= m - 1) {
        // q^{beta+k-1} [m-k+alpha] E_{m-1,k-1}; k >= 1 keeps the power nonnegative
        cell += (q_int(m - k + params_.alpha) * prev[static_cast<std::size_t>(k - 1)])
                    .times_q_pow(static_cast<std::size_t>(params_.beta + k - 1));
      }
      if (k <= m - 1) cell += q_int(k + params_.beta) * prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = std::move(cell);
    }
    rows_.push_back(std::move(row));
  }
}

const QPoly& EulerTable::at(long n, long k) {
  if (n < 0 || k < 0 || k > n) return kZeroPoly;
  ensure_rows(n);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

QPoly euler_rec(long n, long k, const Params& params) {
  params.validate();
  static std::mutex mtx;
  static std::map<std::pair<long, long>, EulerTable> cache;
  std::lock_guard<std::mutex> guard(mtx);
  auto it = cache.try_emplace({params.alpha, params.beta}, params).first;
  return it->second.at(n, k);
}

XPoly euler_poly(long n, const Params& params) {
  if (n < 0) throw std::invalid_argument("euler_poly: n must be >= 0");
  EulerTable table(params);
  std::vector<QPoly> row(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) row[static_cast<std::size_t>(k)] = table.at(n, k);
  return XPoly::from_coeffs(std::move(row));
}

XPoly euler_poly_via_qderiv(long n, const Params& params) {
  params.validate();
  if (n < 0) throw std::invalid_argument("euler_poly_via_qderiv: n must be >= 0");
  XPoly e{1};
  const QPoly qbeta = QPoly::monomial(1, static_cast<std::size_t>(params.beta));
  // (1-x) x q^beta
  const XPoly bump = XPoly::from_coeffs({QPoly{}, qbeta, -qbeta});
  for (long m = 1; m <= n; ++m) {
    const XPoly affine =
        XPoly::from_coeffs({q_int(params.beta), qbeta * q_int(m - 1 + params.alpha)});
    e = affine * e + bump * delta_x(e);
  }
  return e;
}

QPoly euler_explicit(long n, long k, const Params& params) {
  params.validate();
  if (n < 0 || k < 0 || k > n) return QPoly{};
  const long ab = params.alpha + params.beta;
  QPoly sum;
  for (long j = 0; j <= k; ++j) {
    QPoly term = q_binomial(n + ab, k - j) * q_binomial(j + ab - 1, j) *
                 q_int(params.beta + j).pow(static_cast<unsigned long>(n));
    const long d = k - j;
    term = term.times_q_pow(static_cast<std::size_t>(d * (d - 1) / 2));
    if (d % 2 == 1)
      sum -= term;
    else
      sum += term;
  }
  if (!sum.nonneg_coeffs())
    throw std::logic_error("euler_explicit: alternating sum left a negative coefficient");
  return sum;
}

std::pair<QPoly, QPoly> worpitzky_sides(long n, long j, const Params& params) {
  params.validate();
  if (n < 0 || j < 0) throw std::invalid_argument("worpitzky_sides: n, j must be >= 0");
  const long ab = params.alpha + params.beta;
  EulerTable table(params);
  QPoly lhs;
  for (long k = 0; k <= j; ++k) lhs += q_binomial(j - k + n + ab - 1, j - k) * table.at(n, k);
  QPoly rhs =
      q_binomial(j + ab - 1, j) * q_int(j + params.beta).pow(static_cast<unsigned long>(n));
  return {std::move(lhs), std::move(rhs)};
}

std::pair<XPoly, XPoly> series_identity_sides(long n, const Params& params, long J) {
  params.validate();
  if (n < 0) throw std::invalid_argument("series_identity_sides: n must be >= 0");
  if (J < n) throw std::invalid_argument("series_identity_sides: truncation order below n");
  const long ab = params.alpha + params.beta;
  std::vector<QPoly> sum(static_cast<std::size_t>(J) + 1);
  for (long j = 0; j <= J; ++j)
    sum[static_cast<std::size_t>(j)] =
        q_binomial(j + ab - 1, j) * q_int(j + params.beta).pow(static_cast<unsigned long>(n));
  XPoly product =
      pochhammer_x(n + ab) * XPoly::from_coeffs(std::move(sum), static_cast<std::size_t>(J));
  XPoly en = euler_poly(n, params).truncated(static_cast<std::size_t>(J));
  return {std::move(product), std::move(en)};
}

bool series_identity_check(long n, const Params& params, long J) {
  auto [lhs, rhs] = series_identity_sides(n, params, J);
  return lhs == rhs;
}

QPoly sum_at_one(long n, const Params& params) {
  params.validate();
  if (n < 0) throw std::invalid_argument("sum_at_one: n must be >= 0");
  QPoly p{1};
  for (long i = 0; i < n; ++i) p *= q_int(params.alpha + params.beta + i);
  return p;
}

QPoly euler_star(long n, long k, const Params& params) {
  const QPoly cell = euler_rec(n, k, params);
  if (cell.is_zero()) return cell;
  const std::size_t shift = static_cast<std::size_t>(k * params.beta + k * (k - 1) / 2);
  for (std::size_t i = 0; i < shift; ++i)
    if (cell.coeff(i) != 0)
      throw std::logic_error("euler_star: monomial division is not exact");
  std::vector<Int> rest(cell.coeffs().begin() + static_cast<long>(shift), cell.coeffs().end());
  return QPoly(std::move(rest));
}

QPoly rawlings_rec(long n, long k, int r) {
  if (r <= 0) throw std::invalid_argument("rawlings_rec: r must be >= 1");
  if (n < 0 || k < 0 || k > std::max<long>(0, n - r)) return QPoly{};

  static std::mutex mtx;
  static std::map<int, std::vector<std::vector<QPoly>>> cache;
  std::lock_guard<std::mutex> guard(mtx);
  auto& rows = cache[r];
  if (rows.empty())
    for (long m = 0; m <= r; ++m) rows.push_back({q_factorial(m)});  // A[m,0;r] = [m]! for m <= r
  while (static_cast<long>(rows.size()) <= n) {
    const long m = static_cast<long>(rows.size());
    const auto& prev = rows.back();
    const long kmax = m - r;  // >= 1 here
    std::vector<QPoly> row(static_cast<std::size_t>(kmax) + 1);
    for (long kk = 0; kk <= kmax; ++kk) {
      QPoly cell;
      if (kk < static_cast<long>(prev.size()))
        cell += q_int(kk + r) * prev[static_cast<std::size_t>(kk)];
      if (kk >= 1 && kk - 1 < static_cast<long>(prev.size()))
        cell += (q_int(m + 1 - kk - r) * prev[static_cast<std::size_t>(kk - 1)])
                    .times_q_pow(static_cast<std::size_t>(kk + r - 1));
      row[static_cast<std::size_t>(kk)] = std::move(cell);
    }
    rows.push_back(std::move(row));
  }
  const auto& row = rows[static_cast<std::size_t>(n)];
  return k < static_cast<long>(row.size()) ? row[static_cast<std::size_t>(k)] : QPoly{};
}

Int st_eulerian(long n, long k, long s, long t) {
  if (s < 0 || t < 0) throw std::invalid_argument("st_eulerian: s, t must be >= 0");
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<std::vector<Int>> rows{{Int(1)}};
  for (long m = 1; m <= n; ++m) {
    const auto& prev = rows.back();
    std::vector<Int> row(static_cast<std::size_t>(m) + 1);
    for (long kk = 0; kk <= m; ++kk) {
      Int cell = 0;
      if (kk < static_cast<long>(prev.size())) cell += (kk + s) * prev[static_cast<std::size_t>(kk)];
      if (kk >= 1) cell += (m - kk + t) * prev[static_cast<std::size_t>(kk - 1)];
      row[static_cast<std::size_t>(kk)] = std::move(cell);
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Int classical_eulerian(long n, long k) {
  if (n < 0 || k < 0) return 0;
  if (n == 0) return k == 0 ? Int(1) : Int(0);
  if (k > n - 1) return 0;
  std::vector<Int> prev{Int(1)};  // row 0
  for (long m = 1; m <= n; ++m) {
    std::vector<Int> row(static_cast<std::size_t>(m), 0);
    for (long kk = 0; kk < m; ++kk) {
      Int cell = 0;
      if (kk < static_cast<long>(prev.size())) cell += (kk + 1) * prev[static_cast<std::size_t>(kk)];
      if (kk >= 1 && kk - 1 < static_cast<long>(prev.size()))
        cell += (m - kk) * prev[static_cast<std::size_t>(kk - 1)];
      row[static_cast<std::size_t>(kk)] = std::move(cell);
    }
    prev = std::move(row);
  }
  return prev[static_cast<std::size_t>(k)];
}

std::pair<QPoly, QPoly> q_hit_sides(long n, long j, int r) {
  if (r <= 0) throw std::invalid_argument("q_hit_sides: r must be >= 1");
  if (n < 0 || j < 0) throw std::invalid_argument("q_hit_sides: n, j must be >= 0");
  QPoly lhs;
  for (long k = 0; k <= j; ++k) lhs += q_binomial(j - k + n + r, j - k) * rawlings_rec(n + r, k, r);
  QPoly rhs = q_factorial(j + r).div_exact(q_factorial(j)) *
              q_int(j + r).pow(static_cast<unsigned long>(n));
  return {std::move(lhs), std::move(rhs)};
}

bool q_hit_check(long n, long j, int r) {
  auto [lhs, rhs] = q_hit_sides(n, j, r);
  return lhs == rhs;
}

}  // namespace qeuler
