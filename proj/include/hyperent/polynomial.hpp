#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace hyperent {

/// Multivariate polynomial with arbitrary-precision rational coefficients.
///
/// Variables are identified by an integer id. Randomization polynomials use
/// the hyperedge order k as the id of p_k; id 0 is the single variable p used
/// once every p_k has been bound to a common value.
class RationalPolynomial {
 public:
  /// var id -> exponent (> 0). The empty monomial is the constant term.
  using Monomial = std::map<int, int>;

  RationalPolynomial() = default;
  static RationalPolynomial constant(const mpq_class& c);
  static RationalPolynomial variable(int id);
  /// sum_i coefficients[i] * p_id^i / denominator.
  static RationalPolynomial univariate(int id, const std::vector<long>& coefficients, long denominator = 1);

  const std::map<Monomial, mpq_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<int> variables() const;
  int degree(int id) const;
  int total_degree() const;
  mpq_class coefficient(const Monomial& m) const;
  /// Coefficients c_0..c_deg of a polynomial in at most the variable `id`.
  std::vector<mpq_class> univariate_coefficients(int id) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const mpq_class& c);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const mpq_class& c) { return a *= c; }
  friend RationalPolynomial operator-(const RationalPolynomial& a) { return a * mpq_class(-1); }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.terms_ == b.terms_; }

  RationalPolynomial pow(int e) const;
  RationalPolynomial derivative(int id) const;
  /// Replaces every variable by variable `target` (p_k -> p for all k).
  RationalPolynomial bind_all(int target = 0) const;

  /// Unlisted variables evaluate to 0.
  mpq_class evaluate(const std::map<int, mpq_class>& point) const;
  double evaluate(const std::map<int, double>& point) const;
  /// Evaluates with every variable set to x.
  mpq_class evaluate_uniform(const mpq_class& x) const;

  /// "(c0 + c1*p + ...)/d" with integer c_i and common denominator d; terms
  /// ascending by total degree, then by variable id.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const mpq_class& c);

  std::map<Monomial, mpq_class> terms_;
};

std::string variable_name(int id);

}  // namespace hyperent
