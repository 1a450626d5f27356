#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace turanlab {

using Rational = mpq_class;

inline constexpr int kMaxPolyVars = 16;

// Exponent vector of a monomial in x_0..x_{n-1}; slots past nvars stay zero.
struct Exponent {
  std::array<std::uint16_t, kMaxPolyVars> e{};

  int total_degree() const;
  bool operator==(const Exponent&) const = default;
};

// Graded lexicographic order: total degree first, then lexicographic with
// x_0 > x_1 > ... . Terms are stored in descending order.
struct GrLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

struct DegreeInfo {
  std::optional<int> degree;  // nullopt for the zero polynomial
  bool homogeneous = true;
};

// Sparse multivariate polynomial with exact rational coefficients in a fixed
// number of variables. Zero coefficients are never stored, so two
// polynomials are equal exactly when their term maps are equal.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrLexGreater>;

  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  // x_a - x_b
  static Polynomial difference(int nvars, int a, int b);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Adds c * x^exp; drops the term if the coefficient cancels.
  void add_term(const Exponent& exp, const Rational& c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator*=(const Polynomial& other);

  bool operator==(const Polynomial& other) const;

  std::string to_string() const;

 private:
  void check_same_arity(const Polynomial& other, const char* op) const;

  int nvars_;
  TermMap terms_;
};

// Exact product. Throws ArgumentError on mismatched nvars.
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

// j-th partial derivative with respect to x_i (0-based i); j = 0 returns p.
Polynomial poly_derivative(const Polynomial& p, int i, int j);

// Substitutes every variable in `vars` by the smallest index among them.
Polynomial poly_identify(const Polynomial& p, std::span<const int> vars);

DegreeInfo poly_degree_info(const Polynomial& p);

// Evaluates p at an integer point; used by tests as an independent check.
Rational poly_evaluate(const Polynomial& p, std::span<const Rational> point);

}  // namespace turanlab
