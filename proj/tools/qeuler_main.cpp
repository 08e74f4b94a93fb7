#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qeuler/eulerian.hpp"
#include "qeuler/render.hpp"
#include "qeuler/verify.hpp"

namespace {

using namespace qeuler;

struct TableOpts {
  long n_max = 0;
  long alpha = 1;
  long beta = 1;
  std::string format = "json";
  bool star = false;
  long k = -1;
  long at_q = 0;
  bool has_k = false;
  bool has_at_q = false;
  std::string out;  // export only
};

void add_table_options(CLI::App* cmd, TableOpts& opts) {
  cmd->add_option("--n-max", opts.n_max, "largest row index n")->required();
  cmd->add_option("--alpha", opts.alpha, "alpha parameter (>= 0)");
  cmd->add_option("--beta", opts.beta, "beta parameter (>= 0)");
  cmd->add_option("--k", opts.k, "emit only column k")->each([&](const std::string&) {
    opts.has_k = true;
  });
  cmd->add_flag("--star", opts.star, "emit the rescaled cells E* = E / q^{k beta + C(k,2)}");
  cmd->add_option("--at-q", opts.at_q, "additionally evaluate every cell at this integer q")
      ->each([&](const std::string&) { opts.has_at_q = true; });
  cmd->add_option("--format", opts.format, "output format: json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));
}

std::string make_table_output(const TableOpts& opts) {
  const TableDoc doc = build_table(
      opts.n_max, Params{opts.alpha, opts.beta}, opts.star,
      opts.has_k ? std::optional<long>(opts.k) : std::nullopt,
      opts.has_at_q ? std::optional<Int>(Int(opts.at_q)) : std::nullopt);
  return render_table(doc, parse_format(opts.format));
}

int run_verify(const std::vector<std::string>& only, const verify::Ranges& ranges,
               const std::string& format, bool list_only, bool timing) {
  if (list_only) {
    for (const auto& def : verify::default_catalog())
      std::cout << def.name << (def.uses_oracle ? "  [oracle]  " : "  ") << def.description
                << "\n";
    return 0;
  }
  std::vector<verify::CheckSpec> specs;
  if (only.empty()) {
    specs = verify::default_specs();
    for (auto& spec : specs) spec.ranges = ranges;
  } else {
    for (const auto& name : only) specs.push_back({name, ranges});
  }
  const verify::VerifyReport report = verify::run_suite(specs);
  std::cout << render_report(report, parse_format(format), timing);
  if (report.any_resource_error()) return 3;
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qeuler: exact tables, permutation statistics and identity verification for the\n"
      "two-parameter q-Eulerian polynomials E_{n,k}(alpha,beta,q)"};
  app.require_subcommand(1);

  TableOpts table_opts;
  CLI::App* table_cmd = app.add_subcommand("table", "print the triangle of E_{n,k}");
  add_table_options(table_cmd, table_opts);

  TableOpts export_opts;
  CLI::App* export_cmd =
      app.add_subcommand("export", "write the triangle to a file in QEULER_OUTPUT_DIR");
  add_table_options(export_cmd, export_opts);
  export_cmd->add_option("--out", export_opts.out, "file name (default derived from parameters)");

  std::vector<std::string> stat_words;
  TableOpts stats_opts;  // reuse alpha/beta/format fields
  bool stats_has_alpha = false, stats_has_beta = false, stats_has_r = false;
  int stats_r = 1;
  CLI::App* stats_cmd = app.add_subcommand("stats", "statistics of one permutation word");
  stats_cmd->add_option("word", stat_words, "permutation word, e.g. \"3 1 4 2\"")->required();
  stats_cmd->add_option("--alpha", stats_opts.alpha, "alpha for the mixed major index")
      ->each([&](const std::string&) { stats_has_alpha = true; });
  stats_cmd->add_option("--beta", stats_opts.beta, "beta for the mixed major index")
      ->each([&](const std::string&) { stats_has_beta = true; });
  stats_cmd->add_option("--r", stats_r, "also compute the r-descent and r-major statistics")
      ->each([&](const std::string&) { stats_has_r = true; });
  stats_cmd->add_option("--format", stats_opts.format, "output format: json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));

  std::vector<std::string> only;
  verify::Ranges ranges;
  std::string verify_format = "json";
  bool verify_list = false;
  bool verify_no_timing = false;
  long verify_n_max = -1;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity verification suite");
  verify_cmd->add_option("--only", only, "run only the named checks (see --list)");
  verify_cmd->add_flag("--list", verify_list, "list the available checks and exit");
  verify_cmd->add_option("--n-max", verify_n_max,
                         "cap n for all checks (oracle and recurrence sweeps alike)");
  verify_cmd->add_option("--ab-max", ranges.ab_max, "alpha/beta (and s,t) sweep upper bound");
  verify_cmd->add_option("--r", ranges.r_max, "largest r for the r-statistic sweeps");
  verify_cmd->add_option("--j-max", ranges.j_max, "largest j for the expansion sweeps");
  verify_cmd->add_option("--truncation", ranges.series_order,
                         "series truncation order for the series checks");
  verify_cmd->add_option("--max-enum", ranges.enum_cap,
                         "largest permutation length the oracle may enumerate");
  verify_cmd->add_flag("--no-timing", verify_no_timing, "omit wall times from the report");
  verify_cmd->add_option("--format", verify_format, "output format: json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*table_cmd) {
      std::cout << make_table_output(table_opts);
      return 0;
    }
    if (*export_cmd) {
      const char* env_dir = std::getenv("QEULER_OUTPUT_DIR");
      std::filesystem::path dir = env_dir ? env_dir : ".";
      std::string name = export_opts.out;
      if (name.empty()) {
        const char* ext = export_opts.format == "json"  ? ".json"
                          : export_opts.format == "csv" ? ".csv"
                                                        : ".tex";
        name = std::string("euler_table") + (export_opts.star ? "_star" : "") + "_a" +
               std::to_string(export_opts.alpha) + "_b" + std::to_string(export_opts.beta) +
               "_n" + std::to_string(export_opts.n_max) + ext;
      }
      const std::filesystem::path path = dir / name;
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
      out << make_table_output(export_opts);
      std::cout << path.string() << "\n";
      return 0;
    }
    if (*stats_cmd) {
      std::string joined;
      for (const auto& w : stat_words) {
        if (!joined.empty()) joined += ' ';
        joined += w;
      }
      const Perm word = parse_perm(joined);
      std::optional<Params> params;
      if (stats_has_alpha || stats_has_beta)
        params = Params{stats_opts.alpha, stats_opts.beta};
      const StatsDoc doc =
          build_stats(word, params, stats_has_r ? std::optional<int>(stats_r) : std::nullopt);
      std::cout << render_stats(doc, parse_format(stats_opts.format));
      return 0;
    }
    if (*verify_cmd) {
      if (verify_n_max >= 0) {
        ranges.n_rec = static_cast<int>(verify_n_max);
        ranges.n_oracle = static_cast<int>(verify_n_max);
      }
      return run_verify(only, ranges, verify_format, verify_list, !verify_no_timing);
    }
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
