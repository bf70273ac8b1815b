#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vacuum {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in one variable with exact rational coefficients;
/// coefficients()[k] multiplies x^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial monomial(const Rational& coefficient, unsigned degree);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  /// Antiderivative vanishing at 0.
  Polynomial antiderivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// Truncated Laurent series in the cutoff sharpness lambda whose coefficients
/// are polynomials in the mode offset a:
///   S(a; lambda) = sum_{k >= kmin} P_k(a) lambda^k,   k <= max_order.
/// Arithmetic drops every power above max_order, so the lambda^0 coefficient
/// is exact as long as max_order >= 0 after all multiplications.
class LaurentSeries {
 public:
  explicit LaurentSeries(int max_order) : max_order_(max_order) {}

  /// exp(-lambda a) expanded through lambda^max_order.
  static LaurentSeries exp_minus_lambda_a(int max_order);
  /// P(a) lambda^power.
  static LaurentSeries term(const Polynomial& p, int power, int max_order);

  int max_order() const { return max_order_; }
  Polynomial coefficient(int power) const;

  LaurentSeries& operator+=(const LaurentSeries& rhs);
  friend LaurentSeries operator*(const LaurentSeries& lhs, const LaurentSeries& rhs);

  /// d/da applied coefficient-wise.
  LaurentSeries derivative() const;
  /// int_lower^upper da applied coefficient-wise.
  LaurentSeries definite_integral(const Rational& lower, const Rational& upper) const;
  /// Substitute a; the result has constant coefficients.
  LaurentSeries at(const Rational& a) const;

  /// Counterterm subtraction: the lambda^0 coefficient evaluated at a = 0
  /// (call at() first). Negative powers are the cutoff-dependent divergences,
  /// positive powers vanish as lambda -> 0.
  Rational finite_part() const;
  /// True when no negative power survives.
  bool is_regular() const;

 private:
  int max_order_;
  std::map<int, Polynomial> terms_;
};

std::string to_string(const Rational& r);
double to_double(const Rational& r);

}  // namespace vacuum
