#include "qeuler/qpoly.hpp"

#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qeuler {

namespace {
const Int kZero{0};
}  // namespace

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::monomial(Int c, std::size_t e) {
  if (c == 0) return QPoly{};
  std::vector<Int> v(e + 1);
  v.back() = std::move(c);
  QPoly p;
  p.coeffs_ = std::move(v);
  return p;
}

const Int& QPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

QPoly& QPoly::operator*=(const Int& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly QPoly::times_q_pow(std::size_t e) const {
  if (is_zero() || e == 0) return *this;
  QPoly r;
  r.coeffs_.resize(coeffs_.size() + e);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + e] = coeffs_[i];
  return r;
}

QPoly QPoly::pow(unsigned long e) const {
  QPoly r{1};
  for (unsigned long i = 0; i < e; ++i) r *= *this;
  return r;
}

QPoly QPoly::div_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("QPoly::div_exact: zero divisor");
  if (is_zero()) return QPoly{};
  if (degree() < divisor.degree())
    throw std::logic_error("QPoly::div_exact: inexact division (degree too small)");

  std::vector<Int> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const Int& lead = divisor.coeffs_.back();
  std::vector<Int> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t()))
      throw std::logic_error("QPoly::div_exact: inexact division");
    Int f = rem[i] / lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.coeffs_[j];
    quot[i - dd] = std::move(f);
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("QPoly::div_exact: nonzero remainder");
  return QPoly(std::move(quot));
}

Int QPoly::eval_at(const Int& q0) const {
  Int acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q0 + coeffs_[i];
  return acc;
}

bool QPoly::nonneg_coeffs() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

std::string QPoly::coeff_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += coeffs_[i].get_str();
  }
  return s;
}

QPoly QPoly::parse_coeff_string(const std::string& s) {
  std::vector<Int> v;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    // leading/trailing blanks are tolerated; mpz rejects anything else
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty coefficient in \"" + s + "\"");
    v.emplace_back(tok.substr(b, e - b + 1));
  }
  if (v.empty()) throw std::invalid_argument("empty coefficient list");
  return QPoly(std::move(v));
}

namespace {

void append_term(std::string& out, const Int& c, std::size_t e, const std::string& var,
                 bool latex_style) {
  const bool first = out.empty();
  Int a = c < 0 ? Int(-c) : c;
  if (c < 0)
    out += first ? "-" : " - ";
  else if (!first)
    out += " + ";
  if (a != 1 || e == 0) out += a.get_str();
  if (e >= 1) {
    out += var;
    if (e >= 2) {
      if (latex_style)
        out += "^{" + std::to_string(e) + "}";
      else
        out += "^" + std::to_string(e);
    }
  }
}

}  // namespace

std::string QPoly::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) append_term(out, coeffs_[i], i, var, false);
  return out;
}

std::string QPoly::latex(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (coeffs_[i] != 0) append_term(out, coeffs_[i], i, var, true);
  return out;
}

QPoly operator+(QPoly a, const QPoly& b) {
  a += b;
  return a;
}

QPoly operator-(QPoly a, const QPoly& b) {
  a -= b;
  return a;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly{};
  std::vector<Int> r(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Int& ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += ai * b.coeffs()[j];
  }
  return QPoly(std::move(r));
}

QPoly operator*(QPoly a, const Int& scalar) {
  a *= scalar;
  return a;
}

QPoly operator*(const Int& scalar, QPoly a) {
  a *= scalar;
  return a;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.pretty(); }

QPoly q_int(long a) {
  if (a < 0) throw std::invalid_argument("q_int: negative argument");
  std::vector<Int> v(static_cast<std::size_t>(a), Int(1));
  return QPoly(std::move(v));
}

QPoly q_factorial(long r) {
  if (r < 0) throw std::invalid_argument("q_factorial: negative argument");
  QPoly p{1};
  for (long i = 1; i <= r; ++i) p *= q_int(i);
  return p;
}

QPoly q_binomial(long top, long bottom) {
  if (bottom < 0) return QPoly{};
  if (bottom == 0) return QPoly{1};
  if (top < 0 || bottom > top) return QPoly{};

  static std::mutex mtx;
  static std::vector<std::vector<QPoly>> triangle;  // triangle[n][k]
  std::lock_guard<std::mutex> guard(mtx);
  if (triangle.empty()) triangle.push_back({QPoly{1}});
  while (static_cast<long>(triangle.size()) <= top) {
    const auto& prev = triangle.back();
    const std::size_t n = triangle.size();
    std::vector<QPoly> row(n + 1);
    row.front() = QPoly{1};
    row.back() = QPoly{1};
    for (std::size_t k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k].times_q_pow(k);
    triangle.push_back(std::move(row));
  }
  return triangle[static_cast<std::size_t>(top)][static_cast<std::size_t>(bottom)];
}

}  // namespace qeuler
