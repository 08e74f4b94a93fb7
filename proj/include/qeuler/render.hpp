#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qeuler/permstat.hpp"
#include "qeuler/qpoly.hpp"
#include "qeuler/verify.hpp"

namespace qeuler {

enum class DocFormat { Json, Csv, Latex };
DocFormat parse_format(const std::string& name);  // throws std::invalid_argument

/**
 * Triangle document for the E_{n,k} family. Every polynomial is carried as
 * its decimal coefficient string "c0,c1,...", so all formats are lossless
 * and the JSON payload round-trips through QPoly::parse_coeff_string.
 */
struct TableDoc {
  Params params;
  long n_max = 0;
  bool star = false;                  // rescaled E* cells
  std::optional<long> only_k;         // single column when set
  std::optional<Int> at_q;            // additionally evaluate at this q
  std::vector<std::vector<QPoly>> cells;  // one row per n; a single cell per row when only_k is set
};

TableDoc build_table(long n_max, const Params& params, bool star,
                     std::optional<long> only_k = std::nullopt,
                     std::optional<Int> at_q = std::nullopt);
std::string render_table(const TableDoc& doc, DocFormat format);

/// Statistics document for one permutation word.
struct StatsDoc {
  Perm word;
  StatProfile profile;
  std::optional<Params> params;       // adds the mixed major index
  std::optional<long long> mixed;
  std::optional<int> r;               // adds the r-statistics
  std::optional<RStats> rstats;
};

StatsDoc build_stats(const Perm& word, std::optional<Params> params, std::optional<int> r);
std::string render_stats(const StatsDoc& doc, DocFormat format);

std::string render_report(const verify::VerifyReport& report, DocFormat format,
                          bool include_timing = true);

}  // namespace qeuler
