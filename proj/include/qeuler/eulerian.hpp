#pragma once

#include <utility>
#include <vector>

#include "qeuler/permstat.hpp"
#include "qeuler/qpoly.hpp"
#include "qeuler/xpoly.hpp"

namespace qeuler {

/**
 * Memoized triangle of the two-parameter q-Eulerian polynomials
 * E_{n,k}(alpha,beta,q), defined for all integer alpha, beta >= 0 by
 *
 *   E_{0,0} = 1,
 *   E_{n,k} = q^{beta+k-1} [n-k+alpha] E_{n-1,k-1} + [k+beta] E_{n-1,k},
 *
 * with E_{n,k} = 0 outside 0 <= k <= n. The k = 0 branch never evaluates
 * the first term (its predecessor is zero), so the formally negative power
 * q^{beta-1} at beta = 0 never materializes.
 *
 * Rows are built bottom-up on demand. Build the rows you need before
 * sharing a table across threads; a fully built table is read-only.
 */
class EulerTable {
public:
  explicit EulerTable(Params params) : params_(params) { params_.validate(); }

  /// E_{n,k}; zero for k outside {0..n} or n < 0.
  const QPoly& at(long n, long k);
  const Params& params() const { return params_; }

private:
  void ensure_rows(long n);
  Params params_;
  std::vector<std::vector<QPoly>> rows_;
};

/// E_{n,k}(alpha,beta,q) through a process-wide per-params table cache
/// (mutex-guarded; hot loops should hold their own EulerTable instead).
QPoly euler_rec(long n, long k, const Params& params);

/// Row generating polynomial E_n(x) = sum_k E_{n,k} x^k (exact mode).
XPoly euler_poly(long n, const Params& params);

/// E_n(x) computed by n applications of the q-derivative recurrence
///   E_m(x) = ([beta] + q^beta [m-1+alpha] x) E_{m-1}(x)
///            + (1-x) x q^beta delta_x(E_{m-1}(x)),
/// an independent route that must agree with euler_poly.
XPoly euler_poly_via_qderiv(long n, const Params& params);

/// Alternating explicit formula
///   E_{n,k} = sum_{j=0}^{k} qbin(n+a+b, k-j) qbin(j+a+b-1, j)
///             (-1)^{k-j} q^{C(k-j,2)} [b+j]^n.
/// Signed arithmetic internally; throws std::logic_error if the final
/// result has a negative coefficient.
QPoly euler_explicit(long n, long k, const Params& params);

/// Worpitzky-type identity: returns (lhs, rhs) of
///   sum_{k=0}^{j} qbin(j-k+n+a+b-1, j-k) E_{n,k} = qbin(j+a+b-1, j) [j+b]^n.
std::pair<QPoly, QPoly> worpitzky_sides(long n, long j, const Params& params);

/// Carlitz-type series identity: both sides of
///   E_n(x) = (x;q)_{n+a+b} * sum_j x^j qbin(j+a+b-1, j) [j+b]^n
/// as series truncated at order J (requires J >= n). Since the pochhammer
/// factor is exact, every coefficient up to J is compared exactly.
std::pair<XPoly, XPoly> series_identity_sides(long n, const Params& params, long J);
bool series_identity_check(long n, const Params& params, long J);

/// E_n(1;q) in closed form: prod_{i=0}^{n-1} [alpha+beta+i].
QPoly sum_at_one(long n, const Params& params);

/// Rescaled triangle E*_{n,k} = E_{n,k} / q^{k beta + k(k-1)/2};
/// the division is asserted exact (std::logic_error otherwise).
/// Satisfies the symmetry E*_{n,k}(a,b,q) = E*_{n,n-k}(b,a,q).
QPoly euler_star(long n, long k, const Params& params);

/// Rawlings (q,r)-Eulerian numbers A[n,k;r]: base rows A[n,k;r] =
/// [n]! delta_{k0} for n <= r, then
///   A[n,k;r] = [k+r] A[n-1,k;r] + q^{k+r-1} [n+1-k-r] A[n-1,k-1;r]
/// for n > r, 0 <= k <= n-r; zero outside. Satisfies
/// A[n+r,k;r] = [r]! E_{n,k}(1,r,q).
QPoly rawlings_rec(long n, long k, int r);

/// (s,t)-Eulerian numbers (first order):
///   <n,k> = (k+s) <n-1,k> + (n-k+t) <n-1,k-1>, <0,0> = 1,
/// zero for n < 0 or k < 0. Equals E_{n,k}(t,s,1).
Int st_eulerian(long n, long k, long s, long t);

/// Classical Eulerian numbers <n,k> (permutations of [n] with k descents).
Int classical_eulerian(long n, long k);

/// q-hit-style identity built from the Rawlings triangle:
///   sum_{k=0}^{j} qbin(j-k+n+r, j-k) A[n+r,k;r] = ([j+r]!/[j]!) [j+r]^n,
/// with the right side obtained by exact q-factorial division.
std::pair<QPoly, QPoly> q_hit_sides(long n, long j, int r);
bool q_hit_check(long n, long j, int r);

}  // namespace qeuler
