#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace qeuler {

/// Arbitrary-precision integer (GMP).
using Int = mpz_class;

/**
 * Dense polynomial in the single variable q with arbitrary-precision
 * integer coefficients.
 *
 * Canonical form: the coefficient vector is empty for the zero polynomial
 * and otherwise ends with a nonzero entry, so structural equality equals
 * mathematical equality. Values are immutable in spirit: every operation
 * returns a new canonical polynomial, and const objects are safe to share
 * across threads.
 */
class QPoly {
public:
  QPoly() = default;
  QPoly(long constant) : QPoly(Int(constant)) {}
  QPoly(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  explicit QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c * q^e
  static QPoly monomial(Int c, std::size_t e);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of q^i (zero beyond the degree).
  const Int& coeff(std::size_t i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Int& scalar);
  QPoly operator-() const;

  /// Multiply by q^e, e >= 0.
  QPoly times_q_pow(std::size_t e) const;
  /// p^e with the empty-product convention p^0 = 1 (also for p = 0).
  QPoly pow(unsigned long e) const;
  /// Exact division; throws std::logic_error if the division leaves a
  /// remainder and std::invalid_argument on a zero divisor.
  QPoly div_exact(const QPoly& divisor) const;

  /// Exact integer evaluation at q = q0.
  Int eval_at(const Int& q0) const;

  bool nonneg_coeffs() const;

  bool operator==(const QPoly&) const = default;

  /// "c0,c1,..." with decimal coefficients; "0" for the zero polynomial.
  /// parse_coeff_string is the exact inverse.
  std::string coeff_string() const;
  static QPoly parse_coeff_string(const std::string& s);

  /// Human-readable, ascending powers: "1 + 2q + q^2".
  std::string pretty(const std::string& var = "q") const;
  /// LaTeX, descending powers: "q^{2} + 2q + 1".
  std::string latex(const std::string& var = "q") const;

private:
  void trim();
  std::vector<Int> coeffs_;
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(QPoly a, const Int& scalar);
QPoly operator*(const Int& scalar, QPoly a);
std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// q-integer [a] = 1 + q + ... + q^{a-1}; [0] = 0. Rejects a < 0.
QPoly q_int(long a);

/// q-factorial [r]! = [1][2]...[r]; [0]! = 1. Rejects r < 0.
QPoly q_factorial(long r);

/**
 * Gaussian binomial coefficient, always a polynomial in q.
 *
 * Computed through the Pascal-type recurrence
 *   qbin(n,k) = qbin(n-1,k-1) + q^k qbin(n-1,k)
 * with a process-wide memo table guarded by a mutex (safe for concurrent
 * callers). Conventions: qbin(t,0) = 1 for every integer t, and the result
 * is 0 whenever bottom < 0 or bottom > top.
 */
QPoly q_binomial(long top, long bottom);

inline Int eval_at(const QPoly& p, const Int& q0) { return p.eval_at(q0); }

}  // namespace qeuler
