#include "turanlab/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "turanlab/errors.hpp"

namespace turanlab {

int Exponent::total_degree() const {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool GrLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.e.begin(), b.e.end(), a.e.begin(), a.e.end());
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxPolyVars) {
    throw ArgumentError("Polynomial: nvars must lie in [1, " + std::to_string(kMaxPolyVars) + "]");
  }
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent{}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  if (i < 0 || i >= nvars) throw ArgumentError("Polynomial::variable: index out of range");
  Exponent exp;
  exp.e[i] = 1;
  p.add_term(exp, 1);
  return p;
}

Polynomial Polynomial::difference(int nvars, int a, int b) {
  return variable(nvars, a) - variable(nvars, b);
}

void Polynomial::add_term(const Exponent& exp, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_arity(const Polynomial& other, const char* op) const {
  if (nvars_ != other.nvars_) {
    throw ArgumentError(std::string(op) + ": mismatched nvars " + std::to_string(nvars_) + " vs " +
                        std::to_string(other.nvars_));
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_arity(other, "poly_add");
  Polynomial out = *this;
  for (const auto& [exp, c] : other.terms_) out.add_term(exp, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_same_arity(other, "poly_sub");
  Polynomial out = *this;
  for (const auto& [exp, c] : other.terms_) out.add_term(exp, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [exp, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_arity(other, "poly_mul");
  Polynomial out(nvars_);
  Rational prod;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponent sum;
      for (int i = 0; i < nvars_; ++i) {
        const int s = ea.e[i] + eb.e[i];
        if (s > 0xFFFF) throw ScaleGuardError("poly_mul: exponent overflow");
        sum.e[i] = static_cast<std::uint16_t>(s);
      }
      prod = ca * cb;
      out.add_term(sum, prod);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool has_vars = exp.total_degree() > 0;
    if (mag != 1 || !has_vars) os << mag.get_str();
    bool need_star = mag != 1;
    for (int i = 0; i < nvars_; ++i) {
      if (exp.e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (exp.e[i] > 1) os << "^" << exp.e[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial poly_derivative(const Polynomial& p, int i, int j) {
  if (i < 0 || i >= p.nvars()) throw ArgumentError("poly_derivative: variable index out of range");
  if (j < 0) throw ArgumentError("poly_derivative: negative order");
  if (j == 0) return p;
  Polynomial out(p.nvars());
  for (const auto& [exp, c] : p.terms()) {
    const int k = exp.e[i];
    if (k < j) continue;
    // falling factorial k (k-1) ... (k-j+1)
    mpz_class factor = 1;
    for (int t = 0; t < j; ++t) factor *= k - t;
    Exponent lowered = exp;
    lowered.e[i] = static_cast<std::uint16_t>(k - j);
    out.add_term(lowered, c * factor);
  }
  return out;
}

Polynomial poly_identify(const Polynomial& p, std::span<const int> vars) {
  if (vars.empty()) throw ArgumentError("poly_identify: empty variable set");
  for (int v : vars) {
    if (v < 0 || v >= p.nvars()) throw ArgumentError("poly_identify: variable index out of range");
  }
  const int target = *std::min_element(vars.begin(), vars.end());
  Polynomial out(p.nvars());
  for (const auto& [exp, c] : p.terms()) {
    Exponent merged = exp;
    int gathered = 0;
    for (int v : vars) {
      if (v == target) continue;
      gathered += merged.e[v];
      merged.e[v] = 0;
    }
    const int s = merged.e[target] + gathered;
    if (s > 0xFFFF) throw ScaleGuardError("poly_identify: exponent overflow");
    merged.e[target] = static_cast<std::uint16_t>(s);
    out.add_term(merged, c);
  }
  return out;
}

DegreeInfo poly_degree_info(const Polynomial& p) {
  DegreeInfo info;
  if (p.is_zero()) return info;
  // descending grlex: the first term has the top degree
  const int top = p.terms().begin()->first.total_degree();
  info.degree = top;
  info.homogeneous = p.terms().rbegin()->first.total_degree() == top;
  return info;
}

Rational poly_evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != p.nvars()) {
    throw ArgumentError("poly_evaluate: point has wrong dimension");
  }
  Rational total = 0;
  for (const auto& [exp, c] : p.terms()) {
    Rational term = c;
    for (int i = 0; i < p.nvars(); ++i) {
      for (int t = 0; t < exp.e[i]; ++t) term *= point[i];
    }
    total += term;
  }
  return total;
}

}  // namespace turanlab
