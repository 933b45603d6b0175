#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace schubert {

inline constexpr int kMaxVariables = 8;

/// Exponent vector; unused trailing slots stay zero.
using Monomial = std::array<std::uint8_t, kMaxVariables>;

/// Multivariate polynomial in x_1..x_n with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(int variables = 0);

  static Polynomial constant(int variables, const mpq_class& value);
  static Polynomial variable(int variables, int index);
  /// sum_j coeffs[j] * x_{j+1}
  static Polynomial linear(std::span<const int> coeffs);

  int variables() const { return variables_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  void add_term(const Monomial& m, const mpq_class& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const mpq_class& c);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const mpq_class& c) { return lhs *= c; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Substitutes x_i -> sign(images[i-1]) * x_{|images[i-1]|}.
  Polynomial substitute(std::span<const int> images) const;

  /// Exact quotient by a nonzero linear form. Throws InvariantViolation if
  /// the remainder is nonzero.
  Polynomial divide_linear(std::span<const int> coeffs) const;

  /// Human-readable form such as "1/2*x1^2*x2 - 3*x3 + 1".
  std::string to_string() const;

 private:
  int variables_;
  std::map<Monomial, mpq_class> terms_;
};

}  // namespace schubert
