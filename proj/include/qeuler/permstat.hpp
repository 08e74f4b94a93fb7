#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qeuler/qpoly.hpp"

namespace qeuler {

/// One-line word of a permutation of {1..m}.
using Perm = std::vector<int>;

/// Parameter pair (alpha, beta) of the two-parameter Eulerian family.
struct Params {
  long alpha = 1;
  long beta = 1;
  void validate() const {
    if (alpha < 0 || beta < 0) throw std::invalid_argument("Params: alpha, beta must be >= 0");
  }
  bool operator==(const Params&) const = default;
};

/// des, maj, inv plus the two record statistics of one permutation.
struct StatProfile {
  int len = 0;
  int des = 0;
  int lrmin = 0;  // left-to-right minima (position 1 always counts)
  int rlmin = 0;  // right-to-left minima (last position always counts)
  long long maj = 0;
  long long inv = 0;
};

/// Thrown when an exhaustive sweep would exceed the enumeration cap.
class resource_limit_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Permutations up to this length are enumerated by default (10! = 3628800).
inline constexpr int kDefaultEnumCap = 10;

bool is_permutation(const Perm& p);
/// Parses "3 1 4 2" (spaces and/or commas); throws std::invalid_argument
/// unless the word is a permutation of {1..m}.
Perm parse_perm(const std::string& word);

StatProfile stat_profile(const Perm& p);

/// Mixed major index
///   (1 + des - lrmin)(alpha-1) + (m - rlmin)(beta-1) + maj.
/// May be negative when alpha = 0 or beta = 0; such permutations carry a
/// zero weight in every generating sum (see brute_force_euler_row).
long long mixed_major(const Perm& p, const Params& params);

enum class ReducedVariant {
  Maj1,  // (m - rlmin)(beta-1) + maj     -- alpha = 0 reduction
  Maj2,  // (1 + des - lrmin)(alpha-1) + maj  -- beta = 0 reduction
};
long long mixed_major_reduced(const Perm& p, long param, ReducedVariant variant);

struct RStats {
  int rdes = 0;
  long long rmaj = 0;
};
/// Rawlings r-descents (sigma_i >= sigma_{i+1} + r) and r-major index
/// (sum of r-descent positions plus the number of pairs i<j with
/// sigma_i > sigma_j > sigma_i - r). r = 1 degenerates to (des, maj).
RStats r_stats(const Perm& p, int r);

/**
 * Exhaustive oracle for the two-parameter q-Eulerian cell:
 * the sum over all sigma in S_{n+1} with des(sigma) = k of
 *   [alpha]^{lrmin-1} [beta]^{rlmin-1} q^{mixed_major(sigma)}.
 *
 * Permutations whose weight factor vanishes (alpha = 0 with lrmin > 1, or
 * beta = 0 with rlmin > 1) are skipped before the exponent is used; every
 * surviving exponent is asserted to be >= 0 (std::logic_error otherwise).
 * The sweep is partitioned by first letter and the per-letter partial sums
 * are merged in letter order, so the result is schedule-independent.
 * Throws resource_limit_error when n + 1 exceeds the cap.
 */
std::vector<QPoly> brute_force_euler_row(long n, const Params& params,
                                         int enum_cap = kDefaultEnumCap);
QPoly brute_force_euler(long n, long k, const Params& params, int enum_cap = kDefaultEnumCap);

/// Sum over sigma in S_n with rdes(sigma) = k of q^{rmaj(sigma)}, by
/// exhaustive enumeration. Row variant returns all k at once.
std::vector<QPoly> brute_force_rawlings_row(long n, int r, int enum_cap = kDefaultEnumCap);
QPoly brute_force_rawlings(long n, long k, int r, int enum_cap = kDefaultEnumCap);

/// Insertion used in the recurrence bijection: place m+1 after position pos
/// of a word of length m (pos = 0 means at the front).
enum class InsertCase : char { Front = 'a', End = 'b', AtDescent = 'c', AtAscent = 'd' };
std::pair<Perm, InsertCase> insert_max(const Perm& w, int pos);

/// Histogram of lrmin (resp. rlmin) over S_n; entry k counts permutations
/// with exactly k records, entry 0 is unused.
std::vector<unsigned long long> lrmin_distribution(long n, int enum_cap = kDefaultEnumCap);
std::vector<unsigned long long> rlmin_distribution(long n, int enum_cap = kDefaultEnumCap);

/// Visits all of S_m in lexicographic order (the empty word once for m = 0).
void for_each_permutation(int m, const std::function<void(const Perm&)>& visit);

}  // namespace qeuler
