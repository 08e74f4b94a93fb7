#pragma once

#include <optional>
#include <vector>

#include "qeuler/qpoly.hpp"

namespace qeuler {

/**
 * Polynomial (exact mode) or truncated power series (series mode) in x
 * whose coefficients are QPoly values.
 *
 * Exact mode stores a trimmed coefficient vector. Series mode carries an
 * explicit truncation order J and stores exactly J+1 coefficients; x-powers
 * beyond J are discarded. Any operation involving a series operand yields a
 * series whose order is the minimum of the operand orders (exact operands
 * count as unbounded).
 */
class XPoly {
public:
  XPoly() = default;
  XPoly(QPoly constant) { xcoeffs_.push_back(std::move(constant)); trim_exact(); }
  XPoly(long constant) : XPoly(QPoly(constant)) {}

  static XPoly from_coeffs(std::vector<QPoly> xcoeffs,
                           std::optional<std::size_t> trunc = std::nullopt);
  /// c * x^e (exact mode)
  static XPoly monomial(QPoly c, std::size_t e);

  bool is_series() const { return trunc_.has_value(); }
  std::optional<std::size_t> trunc() const { return trunc_; }
  bool is_zero() const;
  /// Largest e with a nonzero coefficient of x^e; -1 if none.
  int degree() const;
  /// Coefficient of x^j (zero beyond the stored range).
  const QPoly& coeff(std::size_t j) const;
  const std::vector<QPoly>& coeffs() const { return xcoeffs_; }

  XPoly operator+(const XPoly& o) const;
  XPoly operator-(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly operator-() const;

  /// Demote to series mode with order J (pads or drops coefficients).
  XPoly truncated(std::size_t J) const;
  /// Substitute x -> qx: the coefficient of x^j picks up a factor q^j.
  XPoly subst_qx() const;

  bool operator==(const XPoly&) const = default;

  std::string pretty(const std::string& xvar = "x", const std::string& qvar = "q") const;

private:
  void trim_exact();
  void normalize();
  std::vector<QPoly> xcoeffs_;
  std::optional<std::size_t> trunc_;
};

XPoly operator*(const QPoly& scalar, const XPoly& p);

/// q-difference operator: x^k -> [k] x^{k-1}. On a series of order J the
/// result has order J-1 (J >= 1 required in series mode).
XPoly delta_x(const XPoly& p);

/// (x;q)_N = (1-x)(1-xq)...(1-xq^{N-1}) as an exact polynomial.
/// Coefficient of x^i is (-1)^i q^{i(i-1)/2} qbin(N,i).
XPoly pochhammer_x(long N);

/// Truncated series for 1/(x;q)_N: coefficient of x^j is qbin(N+j-1, j).
XPoly pochhammer_inv_series(long N, long J);

}  // namespace qeuler
