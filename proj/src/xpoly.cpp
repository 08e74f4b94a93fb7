#include "qeuler/xpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qeuler {

namespace {
const QPoly kZeroPoly{};

std::optional<std::size_t> merged_trunc(const XPoly& a, const XPoly& b) {
  if (a.is_series() && b.is_series()) return std::min(*a.trunc(), *b.trunc());
  if (a.is_series()) return a.trunc();
  return b.trunc();
}
}  // namespace

void XPoly::trim_exact() {
  while (!xcoeffs_.empty() && xcoeffs_.back().is_zero()) xcoeffs_.pop_back();
}

void XPoly::normalize() {
  if (trunc_) {
    xcoeffs_.resize(*trunc_ + 1);
  } else {
    trim_exact();
  }
}

XPoly XPoly::from_coeffs(std::vector<QPoly> xcoeffs, std::optional<std::size_t> trunc) {
  XPoly p;
  p.xcoeffs_ = std::move(xcoeffs);
  p.trunc_ = trunc;
  p.normalize();
  return p;
}

XPoly XPoly::monomial(QPoly c, std::size_t e) {
  std::vector<QPoly> v(e + 1);
  v.back() = std::move(c);
  return from_coeffs(std::move(v));
}

bool XPoly::is_zero() const { return degree() < 0; }

int XPoly::degree() const {
  for (std::size_t j = xcoeffs_.size(); j-- > 0;)
    if (!xcoeffs_[j].is_zero()) return static_cast<int>(j);
  return -1;
}

const QPoly& XPoly::coeff(std::size_t j) const {
  return j < xcoeffs_.size() ? xcoeffs_[j] : kZeroPoly;
}

XPoly XPoly::operator+(const XPoly& o) const {
  auto t = merged_trunc(*this, o);
  std::size_t n = std::max(xcoeffs_.size(), o.xcoeffs_.size());
  if (t) n = *t + 1;
  std::vector<QPoly> r(n);
  for (std::size_t j = 0; j < n; ++j) r[j] = coeff(j) + o.coeff(j);
  return from_coeffs(std::move(r), t);
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + (-o); }

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.xcoeffs_) c = -c;
  return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
  auto t = merged_trunc(*this, o);
  if (!t && (is_zero() || o.is_zero())) return XPoly{};
  std::size_t limit;  // highest x-power kept
  if (t)
    limit = *t;
  else
    limit = static_cast<std::size_t>(degree() + o.degree());
  std::vector<QPoly> r(limit + 1);
  for (std::size_t i = 0; i < xcoeffs_.size() && i <= limit; ++i) {
    if (xcoeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j + i <= limit && j < o.xcoeffs_.size(); ++j) {
      if (o.xcoeffs_[j].is_zero()) continue;
      r[i + j] += xcoeffs_[i] * o.xcoeffs_[j];
    }
  }
  return from_coeffs(std::move(r), t);
}

XPoly XPoly::truncated(std::size_t J) const {
  std::vector<QPoly> r(J + 1);
  for (std::size_t j = 0; j <= J; ++j) r[j] = coeff(j);
  return from_coeffs(std::move(r), J);
}

XPoly XPoly::subst_qx() const {
  XPoly r = *this;
  for (std::size_t j = 0; j < r.xcoeffs_.size(); ++j)
    r.xcoeffs_[j] = r.xcoeffs_[j].times_q_pow(j);
  return r;
}

std::string XPoly::pretty(const std::string& xvar, const std::string& qvar) const {
  if (is_zero() && !is_series()) return "0";
  std::string out;
  for (std::size_t j = 0; j < xcoeffs_.size(); ++j) {
    if (xcoeffs_[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + xcoeffs_[j].pretty(qvar) + ")";
    if (j >= 1) out += xvar;
    if (j >= 2) out += "^" + std::to_string(j);
  }
  if (out.empty()) out = "0";
  if (is_series()) out += " + O(" + xvar + "^" + std::to_string(*trunc_ + 1) + ")";
  return out;
}

XPoly operator*(const QPoly& scalar, const XPoly& p) { return XPoly(scalar) * p; }

XPoly delta_x(const XPoly& p) {
  std::optional<std::size_t> t;
  if (p.is_series()) {
    if (*p.trunc() == 0)
      throw std::invalid_argument("delta_x: series truncation order must be >= 1");
    t = *p.trunc() - 1;
  }
  std::size_t n = p.coeffs().size();
  std::vector<QPoly> r(n > 0 ? n - 1 : 0);
  for (std::size_t j = 1; j < n; ++j) r[j - 1] = q_int(static_cast<long>(j)) * p.coeff(j);
  return XPoly::from_coeffs(std::move(r), t);
}

XPoly pochhammer_x(long N) {
  if (N < 0) throw std::invalid_argument("pochhammer_x: negative order");
  XPoly p{1};
  for (long i = 0; i < N; ++i) {
    // 1 - x q^i
    XPoly factor = XPoly::from_coeffs({QPoly{1}, -QPoly::monomial(1, static_cast<std::size_t>(i))});
    p = p * factor;
  }
  return p;
}

XPoly pochhammer_inv_series(long N, long J) {
  if (N < 0) throw std::invalid_argument("pochhammer_inv_series: negative order");
  if (J < 0) throw std::invalid_argument("pochhammer_inv_series: negative truncation");
  std::vector<QPoly> r(static_cast<std::size_t>(J) + 1);
  for (long j = 0; j <= J; ++j) r[static_cast<std::size_t>(j)] = q_binomial(N + j - 1, j);
  return XPoly::from_coeffs(std::move(r), static_cast<std::size_t>(J));
}

}  // namespace qeuler
