#include "qeuler/render.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

#include "qeuler/eulerian.hpp"

namespace qeuler {

using nlohmann::ordered_json;

DocFormat parse_format(const std::string& name) {
  if (name == "json") return DocFormat::Json;
  if (name == "csv") return DocFormat::Csv;
  if (name == "latex") return DocFormat::Latex;
  throw std::invalid_argument("unknown format: " + name + " (expected json, csv or latex)");
}

namespace {

// RFC-4180 style: cells holding commas or quotes get quoted.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string perm_string(const Perm& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace

TableDoc build_table(long n_max, const Params& params, bool star, std::optional<long> only_k,
                     std::optional<Int> at_q) {
  params.validate();
  if (n_max < 0) throw std::invalid_argument("build_table: n_max must be >= 0");
  if (only_k && *only_k < 0) throw std::invalid_argument("build_table: k must be >= 0");
  TableDoc doc;
  doc.params = params;
  doc.n_max = n_max;
  doc.star = star;
  doc.only_k = only_k;
  doc.at_q = std::move(at_q);
  EulerTable table(params);
  for (long n = 0; n <= n_max; ++n) {
    std::vector<QPoly> row;
    if (only_k) {
      row.push_back(star ? euler_star(n, *only_k, params) : table.at(n, *only_k));
    } else {
      for (long k = 0; k <= n; ++k)
        row.push_back(star ? euler_star(n, k, params) : table.at(n, k));
    }
    doc.cells.push_back(std::move(row));
  }
  return doc;
}

std::string render_table(const TableDoc& doc, DocFormat format) {
  switch (format) {
    case DocFormat::Json: {
      ordered_json out;
      out["kind"] = "euler-table";
      out["alpha"] = doc.params.alpha;
      out["beta"] = doc.params.beta;
      out["n_max"] = doc.n_max;
      out["star"] = doc.star;
      if (doc.only_k) out["k"] = *doc.only_k;
      auto& rows = out["rows"] = ordered_json::array();
      for (const auto& row : doc.cells) {
        ordered_json cells = ordered_json::array();
        for (const auto& cell : row) cells.push_back(cell.coeff_string());
        rows.push_back(std::move(cells));
      }
      if (doc.at_q) {
        ordered_json at;
        at["q"] = doc.at_q->get_str();
        auto& values = at["values"] = ordered_json::array();
        for (const auto& row : doc.cells) {
          ordered_json cells = ordered_json::array();
          for (const auto& cell : row) cells.push_back(cell.eval_at(*doc.at_q).get_str());
          values.push_back(std::move(cells));
        }
        out["at_q"] = std::move(at);
      }
      return out.dump(2) + "\n";
    }
    case DocFormat::Csv: {
      std::ostringstream out;
      out << "n,k,coeffs";
      if (doc.at_q) out << ",value_at_q";
      out << "\n";
      for (long n = 0; n < static_cast<long>(doc.cells.size()); ++n) {
        const auto& row = doc.cells[static_cast<std::size_t>(n)];
        for (long i = 0; i < static_cast<long>(row.size()); ++i) {
          const long k = doc.only_k ? *doc.only_k : i;
          out << n << ',' << k << ',' << csv_cell(row[static_cast<std::size_t>(i)].coeff_string());
          if (doc.at_q) out << ',' << row[static_cast<std::size_t>(i)].eval_at(*doc.at_q).get_str();
          out << "\n";
        }
      }
      return out.str();
    }
    case DocFormat::Latex: {
      std::ostringstream out;
      const long width = doc.only_k ? 1 : doc.n_max + 1;
      out << "% E_{n,k}(alpha=" << doc.params.alpha << ", beta=" << doc.params.beta << ", q)";
      if (doc.star) out << " rescaled (star)";
      out << "\n\\begin{tabular}{r|";
      for (long i = 0; i < width; ++i) out << 'l';
      out << "}\n";
      out << "$n \\backslash k$";
      if (doc.only_k)
        out << " & $" << *doc.only_k << "$";
      else
        for (long k = 0; k <= doc.n_max; ++k) out << " & $" << k << "$";
      out << " \\\\\n\\hline\n";
      for (long n = 0; n < static_cast<long>(doc.cells.size()); ++n) {
        const auto& row = doc.cells[static_cast<std::size_t>(n)];
        out << '$' << n << '$';
        for (long i = 0; i < width; ++i) {
          out << " & ";
          if (i < static_cast<long>(row.size()))
            out << '$' << row[static_cast<std::size_t>(i)].latex() << '$';
        }
        out << " \\\\\n";
      }
      out << "\\end{tabular}\n";
      return out.str();
    }
  }
  throw std::logic_error("render_table: unhandled format");
}

StatsDoc build_stats(const Perm& word, std::optional<Params> params, std::optional<int> r) {
  StatsDoc doc;
  doc.word = word;
  doc.profile = stat_profile(word);
  doc.params = params;
  if (params) {
    params->validate();
    doc.mixed = mixed_major(word, *params);
  }
  doc.r = r;
  if (r) doc.rstats = r_stats(word, *r);
  return doc;
}

std::string render_stats(const StatsDoc& doc, DocFormat format) {
  const auto& s = doc.profile;
  switch (format) {
    case DocFormat::Json: {
      ordered_json out;
      out["kind"] = "perm-stats";
      out["word"] = doc.word;
      out["len"] = s.len;
      out["des"] = s.des;
      out["maj"] = s.maj;
      out["inv"] = s.inv;
      out["lrmin"] = s.lrmin;
      out["rlmin"] = s.rlmin;
      if (doc.params) {
        out["alpha"] = doc.params->alpha;
        out["beta"] = doc.params->beta;
        out["mixed_major"] = *doc.mixed;
      }
      if (doc.r) {
        out["r"] = *doc.r;
        out["rdes"] = doc.rstats->rdes;
        out["rmaj"] = doc.rstats->rmaj;
      }
      return out.dump(2) + "\n";
    }
    case DocFormat::Csv: {
      std::ostringstream head, vals;
      head << "word,len,des,maj,inv,lrmin,rlmin";
      vals << csv_cell(perm_string(doc.word)) << ',' << s.len << ',' << s.des << ',' << s.maj
           << ',' << s.inv << ',' << s.lrmin << ',' << s.rlmin;
      if (doc.params) {
        head << ",alpha,beta,mixed_major";
        vals << ',' << doc.params->alpha << ',' << doc.params->beta << ',' << *doc.mixed;
      }
      if (doc.r) {
        head << ",r,rdes,rmaj";
        vals << ',' << *doc.r << ',' << doc.rstats->rdes << ',' << doc.rstats->rmaj;
      }
      return head.str() + "\n" + vals.str() + "\n";
    }
    case DocFormat::Latex: {
      std::ostringstream out;
      out << "\\begin{tabular}{ll}\n";
      out << "word & $" << perm_string(doc.word) << "$ \\\\\n";
      out << "des & $" << s.des << "$ \\\\\n";
      out << "maj & $" << s.maj << "$ \\\\\n";
      out << "inv & $" << s.inv << "$ \\\\\n";
      out << "lrmin & $" << s.lrmin << "$ \\\\\n";
      out << "rlmin & $" << s.rlmin << "$ \\\\\n";
      if (doc.params)
        out << "mixed major $(\\alpha=" << doc.params->alpha << ",\\beta=" << doc.params->beta
            << ")$ & $" << *doc.mixed << "$ \\\\\n";
      if (doc.r)
        out << "$r$-stats $(r=" << *doc.r << ")$ & rdes $" << doc.rstats->rdes << "$, rmaj $"
            << doc.rstats->rmaj << "$ \\\\\n";
      out << "\\end{tabular}\n";
      return out.str();
    }
  }
  throw std::logic_error("render_stats: unhandled format");
}

std::string render_report(const verify::VerifyReport& report, DocFormat format,
                          bool include_timing) {
  switch (format) {
    case DocFormat::Json:
      return verify::report_json(report, include_timing) + "\n";
    case DocFormat::Csv: {
      std::ostringstream out;
      out << "check,status,instances,millis,counterexample\n";
      for (const auto& res : report.results) {
        std::string cex;
        if (res.counterexample)
          cex = res.counterexample->inputs + " lhs=" + res.counterexample->lhs +
                " rhs=" + res.counterexample->rhs;
        else if (!res.error.empty())
          cex = res.error;
        out << res.name << ',' << verify::status_name(res.status) << ',' << res.instances << ',';
        if (include_timing) out << res.millis;
        out << ',' << csv_cell(cex) << "\n";
      }
      return out.str();
    }
    case DocFormat::Latex: {
      std::ostringstream out;
      out << "\\begin{tabular}{lrl}\n";
      out << "check & instances & status \\\\\n\\hline\n";
      for (const auto& res : report.results)
        out << "\\texttt{" << res.name << "} & $" << res.instances << "$ & "
            << verify::status_name(res.status) << " \\\\\n";
      out << "\\end{tabular}\n";
      return out.str();
    }
  }
  throw std::logic_error("render_report: unhandled format");
}

}  // namespace qeuler
