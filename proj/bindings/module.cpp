#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qeuler/eulerian.hpp"
#include "qeuler/render.hpp"
#include "qeuler/verify.hpp"

namespace py = pybind11;
using namespace qeuler;

namespace {

py::object to_pyint(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::list poly_to_list(const QPoly& p) {
  py::list out;
  for (const Int& c : p.coeffs()) out.append(to_pyint(c));
  return out;
}

py::list row_to_list(const std::vector<QPoly>& row) {
  py::list out;
  for (const QPoly& p : row) out.append(poly_to_list(p));
  return out;
}

Int int_from_py(py::handle h) { return Int(py::str(h).cast<std::string>()); }

py::dict profile_to_dict(const StatProfile& s) {
  py::dict out;
  out["len"] = s.len;
  out["des"] = s.des;
  out["maj"] = s.maj;
  out["inv"] = s.inv;
  out["lrmin"] = s.lrmin;
  out["rlmin"] = s.rlmin;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact arithmetic for the two-parameter q-Eulerian polynomials "
      "E_{n,k}(alpha,beta,q): recurrence, explicit formula, exhaustive "
      "permutation oracle and the identity verification suite. Polynomials "
      "in q travel as coefficient lists of python ints (index = power of q).";

  m.def(
      "q_int", [](long a) { return poly_to_list(q_int(a)); }, py::arg("a"),
      "[a] = 1 + q + ... + q^{a-1} as a coefficient list");
  m.def(
      "q_factorial", [](long r) { return poly_to_list(q_factorial(r)); }, py::arg("r"),
      "[r]! as a coefficient list");
  m.def(
      "q_binomial", [](long top, long bottom) { return poly_to_list(q_binomial(top, bottom)); },
      py::arg("top"), py::arg("bottom"), "Gaussian binomial as a coefficient list");
  m.def(
      "eval_poly",
      [](const std::vector<py::object>& coeffs, py::object q0) {
        std::vector<Int> v;
        v.reserve(coeffs.size());
        for (const auto& c : coeffs) v.push_back(int_from_py(c));
        return to_pyint(QPoly(std::move(v)).eval_at(int_from_py(q0)));
      },
      py::arg("coeffs"), py::arg("q0"), "evaluate a coefficient list at an integer q");

  m.def(
      "euler", [](long n, long k, long a, long b) { return poly_to_list(euler_rec(n, k, Params{a, b})); },
      py::arg("n"), py::arg("k"), py::arg("alpha"), py::arg("beta"),
      "E_{n,k}(alpha,beta,q) by the defining recurrence");
  m.def(
      "euler_row",
      [](long n, long a, long b) {
        EulerTable t(Params{a, b});
        std::vector<QPoly> row;
        for (long k = 0; k <= n; ++k) row.push_back(t.at(n, k));
        return row_to_list(row);
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), "row n of the E-triangle");
  m.def(
      "euler_explicit",
      [](long n, long k, long a, long b) { return poly_to_list(euler_explicit(n, k, Params{a, b})); },
      py::arg("n"), py::arg("k"), py::arg("alpha"), py::arg("beta"),
      "E_{n,k} by the alternating explicit formula");
  m.def(
      "euler_star",
      [](long n, long k, long a, long b) { return poly_to_list(euler_star(n, k, Params{a, b})); },
      py::arg("n"), py::arg("k"), py::arg("alpha"), py::arg("beta"),
      "rescaled cell E*_{n,k}");
  m.def(
      "brute_force_euler",
      [](long n, long k, long a, long b, int cap) {
        return poly_to_list(brute_force_euler(n, k, Params{a, b}, cap));
      },
      py::arg("n"), py::arg("k"), py::arg("alpha"), py::arg("beta"),
      py::arg("enum_cap") = kDefaultEnumCap, "E_{n,k} by exhaustive enumeration of S_{n+1}");
  m.def(
      "sum_at_one", [](long n, long a, long b) { return poly_to_list(sum_at_one(n, Params{a, b})); },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), "E_n(1;q) = prod_i [alpha+beta+i]");
  m.def(
      "worpitzky_sides",
      [](long n, long j, long a, long b) {
        const auto [lhs, rhs] = worpitzky_sides(n, j, Params{a, b});
        return py::make_tuple(poly_to_list(lhs), poly_to_list(rhs));
      },
      py::arg("n"), py::arg("j"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "series_identity_check",
      [](long n, long a, long b, long J) { return series_identity_check(n, Params{a, b}, J); },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("truncation") = 10);
  m.def(
      "rawlings", [](long n, long k, int r) { return poly_to_list(rawlings_rec(n, k, r)); },
      py::arg("n"), py::arg("k"), py::arg("r"), "Rawlings cell A[n,k;r]");
  m.def(
      "brute_force_rawlings",
      [](long n, long k, int r, int cap) { return poly_to_list(brute_force_rawlings(n, k, r, cap)); },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("enum_cap") = kDefaultEnumCap);
  m.def(
      "q_hit_check", [](long n, long j, int r) { return q_hit_check(n, j, r); }, py::arg("n"),
      py::arg("j"), py::arg("r"));
  m.def(
      "st_eulerian",
      [](long n, long k, long s, long t) { return to_pyint(st_eulerian(n, k, s, t)); },
      py::arg("n"), py::arg("k"), py::arg("s"), py::arg("t"));
  m.def(
      "classical_eulerian", [](long n, long k) { return to_pyint(classical_eulerian(n, k)); },
      py::arg("n"), py::arg("k"));

  m.def(
      "stat_profile", [](const Perm& word) {
        if (!is_permutation(word)) throw std::invalid_argument("not a permutation of {1..m}");
        return profile_to_dict(stat_profile(word));
      },
      py::arg("word"));
  m.def(
      "mixed_major",
      [](const Perm& word, long a, long b) {
        if (!is_permutation(word)) throw std::invalid_argument("not a permutation of {1..m}");
        return mixed_major(word, Params{a, b});
      },
      py::arg("word"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "r_stats",
      [](const Perm& word, int r) {
        if (!is_permutation(word)) throw std::invalid_argument("not a permutation of {1..m}");
        const RStats s = r_stats(word, r);
        return py::make_tuple(s.rdes, s.rmaj);
      },
      py::arg("word"), py::arg("r"), "(rdes, rmaj) of the word");
  m.def(
      "insert_max",
      [](const Perm& word, int pos) {
        const auto [pi, label] = insert_max(word, pos);
        return py::make_tuple(pi, std::string(1, static_cast<char>(label)));
      },
      py::arg("word"), py::arg("pos"), "insert m+1 after position pos; returns (word, case)");
  m.def(
      "lrmin_distribution",
      [](long n, int cap) { return lrmin_distribution(n, cap); }, py::arg("n"),
      py::arg("enum_cap") = kDefaultEnumCap);
  m.def(
      "rlmin_distribution",
      [](long n, int cap) { return rlmin_distribution(n, cap); }, py::arg("n"),
      py::arg("enum_cap") = kDefaultEnumCap);

  m.def(
      "table_json",
      [](long n_max, long a, long b, bool star) {
        return render_table(build_table(n_max, Params{a, b}, star), DocFormat::Json);
      },
      py::arg("n_max"), py::arg("alpha"), py::arg("beta"), py::arg("star") = false,
      "the triangle as the same JSON document the CLI emits");

  m.def(
      "verify_report_json",
      [](const std::vector<std::string>& only, int n_max, int ab_max, int r_max, int j_max,
         int truncation, int enum_cap, bool timing) {
        verify::Ranges ranges;
        if (n_max >= 0) {
          ranges.n_rec = n_max;
          ranges.n_oracle = n_max;
        }
        ranges.ab_max = ab_max;
        ranges.r_max = r_max;
        ranges.j_max = j_max;
        ranges.series_order = truncation;
        ranges.enum_cap = enum_cap;
        std::vector<verify::CheckSpec> specs;
        if (only.empty()) {
          specs = verify::default_specs();
          for (auto& spec : specs) spec.ranges = ranges;
        } else {
          for (const auto& name : only) specs.push_back({name, ranges});
        }
        return verify::report_json(verify::run_suite(specs), timing);
      },
      py::arg("only") = std::vector<std::string>{}, py::arg("n_max") = -1, py::arg("ab_max") = 3,
      py::arg("r_max") = 3, py::arg("j_max") = 6, py::arg("truncation") = 10,
      py::arg("enum_cap") = kDefaultEnumCap, py::arg("timing") = true,
      "run the identity suite and return the JSON report");

  m.attr("__version__") = "0.1.0";
}
