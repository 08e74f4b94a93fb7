#include "qeuler/permstat.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

namespace qeuler {

bool is_permutation(const Perm& p) {
  const int m = static_cast<int>(p.size());
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int v : p) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Perm parse_perm(const std::string& word) {
  Perm p;
  std::string cleaned = word;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  long v;
  while (in >> v) p.push_back(static_cast<int>(v));
  if (!in.eof()) throw std::invalid_argument("not a permutation word: \"" + word + "\"");
  if (!is_permutation(p)) throw std::invalid_argument("not a permutation of {1..m}: \"" + word + "\"");
  return p;
}

StatProfile stat_profile(const Perm& p) {
  const int m = static_cast<int>(p.size());
  StatProfile s;
  s.len = m;
  int min_so_far = m + 1;
  for (int i = 0; i < m; ++i) {
    if (i + 1 < m && p[i] > p[i + 1]) {
      ++s.des;
      s.maj += i + 1;  // 1-based descent position
    }
    if (p[i] < min_so_far) {
      min_so_far = p[i];
      ++s.lrmin;
    }
    for (int j = i + 1; j < m; ++j)
      if (p[i] > p[j]) ++s.inv;
  }
  int min_from_right = m + 1;
  for (int i = m - 1; i >= 0; --i) {
    if (p[i] < min_from_right) {
      min_from_right = p[i];
      ++s.rlmin;
    }
  }
  return s;
}

namespace {

long long mixed_major_of(const StatProfile& s, const Params& params) {
  return (1 + s.des - s.lrmin) * (params.alpha - 1) +
         static_cast<long long>(s.len - s.rlmin) * (params.beta - 1) + s.maj;
}

}  // namespace

long long mixed_major(const Perm& p, const Params& params) {
  return mixed_major_of(stat_profile(p), params);
}

long long mixed_major_reduced(const Perm& p, long param, ReducedVariant variant) {
  const StatProfile s = stat_profile(p);
  switch (variant) {
    case ReducedVariant::Maj1:
      return static_cast<long long>(s.len - s.rlmin) * (param - 1) + s.maj;
    case ReducedVariant::Maj2:
      return (1 + s.des - s.lrmin) * (param - 1) + s.maj;
  }
  throw std::invalid_argument("mixed_major_reduced: bad variant");
}

RStats r_stats(const Perm& p, int r) {
  if (r <= 0) throw std::invalid_argument("r_stats: r must be >= 1");
  const int m = static_cast<int>(p.size());
  RStats out;
  for (int i = 0; i + 1 < m; ++i) {
    if (p[i] >= p[i + 1] + r) {
      ++out.rdes;
      out.rmaj += i + 1;
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (p[i] > p[j] && p[j] > p[i] - r) ++out.rmaj;
  return out;
}

void for_each_permutation(int m, const std::function<void(const Perm&)>& visit) {
  if (m < 0) throw std::invalid_argument("for_each_permutation: negative length");
  Perm p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  if (m == 0) {
    visit(p);
    return;
  }
  do {
    visit(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

namespace {

// Sweep of S_m partitioned by first letter; partials merged in letter order
// so the result does not depend on scheduling.
template <typename T>
T partitioned_perm_reduce(int m, const std::function<T()>& make_acc,
                          const std::function<void(T&, const Perm&)>& visit,
                          const std::function<void(T&, T&&)>& merge) {
  if (m == 0) {
    T acc = make_acc();
    visit(acc, Perm{});
    return acc;
  }
  std::vector<std::future<T>> parts;
  parts.reserve(static_cast<std::size_t>(m));
  for (int first = 1; first <= m; ++first) {
    parts.push_back(std::async(std::launch::async, [m, first, &make_acc, &visit]() {
      T acc = make_acc();
      Perm p(static_cast<std::size_t>(m));
      p[0] = first;
      int next = 1;
      for (int i = 1; i < m; ++i) {
        if (next == first) ++next;
        p[static_cast<std::size_t>(i)] = next++;
      }
      do {
        visit(acc, p);
      } while (std::next_permutation(p.begin() + 1, p.end()));
      return acc;
    }));
  }
  T total = make_acc();
  for (auto& part : parts) merge(total, part.get());
  return total;
}

void check_cap(long m, int enum_cap, const char* who) {
  if (m > enum_cap)
    throw resource_limit_error(std::string(who) + ": permutations of length " + std::to_string(m) +
                               " exceed the enumeration cap " + std::to_string(enum_cap));
}

}  // namespace

std::vector<QPoly> brute_force_euler_row(long n, const Params& params, int enum_cap) {
  params.validate();
  if (n < 0) throw std::invalid_argument("brute_force_euler_row: n must be >= 0");
  const long m = n + 1;
  check_cap(m, enum_cap, "brute_force_euler_row");

  // weight(lrmin, rlmin) = [alpha]^{lrmin-1} [beta]^{rlmin-1}
  std::vector<QPoly> apow(static_cast<std::size_t>(m)), bpow(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    apow[static_cast<std::size_t>(i)] = q_int(params.alpha).pow(static_cast<unsigned long>(i));
    bpow[static_cast<std::size_t>(i)] = q_int(params.beta).pow(static_cast<unsigned long>(i));
  }
  std::vector<std::vector<QPoly>> weight(static_cast<std::size_t>(m),
                                         std::vector<QPoly>(static_cast<std::size_t>(m)));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          apow[static_cast<std::size_t>(i)] * bpow[static_cast<std::size_t>(j)];

  using Acc = std::vector<QPoly>;
  return partitioned_perm_reduce<Acc>(
      static_cast<int>(m), [n]() { return Acc(static_cast<std::size_t>(n) + 1); },
      [&](Acc& acc, const Perm& p) {
        const StatProfile s = stat_profile(p);
        if (params.alpha == 0 && s.lrmin > 1) return;  // zero weight factor
        if (params.beta == 0 && s.rlmin > 1) return;
        const long long e = mixed_major_of(s, params);
        if (e < 0)
          throw std::logic_error("brute_force_euler_row: negative exponent on a surviving term");
        acc[static_cast<std::size_t>(s.des)] +=
            weight[static_cast<std::size_t>(s.lrmin - 1)][static_cast<std::size_t>(s.rlmin - 1)]
                .times_q_pow(static_cast<std::size_t>(e));
      },
      [](Acc& total, Acc&& part) {
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += part[k];
      });
}

QPoly brute_force_euler(long n, long k, const Params& params, int enum_cap) {
  if (k < 0 || k > n) return QPoly{};
  return brute_force_euler_row(n, params, enum_cap)[static_cast<std::size_t>(k)];
}

std::vector<QPoly> brute_force_rawlings_row(long n, int r, int enum_cap) {
  if (r <= 0) throw std::invalid_argument("brute_force_rawlings_row: r must be >= 1");
  if (n < 0) throw std::invalid_argument("brute_force_rawlings_row: n must be >= 0");
  check_cap(n, enum_cap, "brute_force_rawlings_row");
  using Acc = std::vector<QPoly>;
  return partitioned_perm_reduce<Acc>(
      static_cast<int>(n), [n]() { return Acc(static_cast<std::size_t>(n) + 1); },
      [r](Acc& acc, const Perm& p) {
        const RStats s = r_stats(p, r);
        acc[static_cast<std::size_t>(s.rdes)] +=
            QPoly::monomial(1, static_cast<std::size_t>(s.rmaj));
      },
      [](Acc& total, Acc&& part) {
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += part[k];
      });
}

QPoly brute_force_rawlings(long n, long k, int r, int enum_cap) {
  if (k < 0 || k > n) return QPoly{};
  return brute_force_rawlings_row(n, r, enum_cap)[static_cast<std::size_t>(k)];
}

std::pair<Perm, InsertCase> insert_max(const Perm& w, int pos) {
  if (!is_permutation(w)) throw std::invalid_argument("insert_max: not a permutation");
  const int n = static_cast<int>(w.size());
  if (pos < 0 || pos > n) throw std::invalid_argument("insert_max: position out of range");
  Perm out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.push_back(n + 1);
  out.insert(out.end(), w.begin() + pos, w.end());

  InsertCase label;
  if (pos == n)  // covers the empty word, whose single insertion counts as an end insertion
    label = InsertCase::End;
  else if (pos == 0)
    label = InsertCase::Front;
  else if (w[static_cast<std::size_t>(pos - 1)] > w[static_cast<std::size_t>(pos)])
    label = InsertCase::AtDescent;
  else
    label = InsertCase::AtAscent;
  return {std::move(out), label};
}

namespace {

std::vector<unsigned long long> record_distribution(long n, int enum_cap, bool left) {
  if (n < 0) throw std::invalid_argument("record_distribution: n must be >= 0");
  check_cap(n, enum_cap, "record_distribution");
  std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
  for_each_permutation(static_cast<int>(n), [&](const Perm& p) {
    const StatProfile s = stat_profile(p);
    counts[static_cast<std::size_t>(left ? s.lrmin : s.rlmin)] += 1;
  });
  return counts;
}

}  // namespace

std::vector<unsigned long long> lrmin_distribution(long n, int enum_cap) {
  return record_distribution(n, enum_cap, true);
}

std::vector<unsigned long long> rlmin_distribution(long n, int enum_cap) {
  return record_distribution(n, enum_cap, false);
}

}  // namespace qeuler
