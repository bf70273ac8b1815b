#include "vacuum/exact_series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace vacuum {
namespace {

// Order used for series that are exact Laurent polynomials.
constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;

int min_power(const std::map<int, Polynomial>& terms) {
  return terms.empty() ? kExactOrder : terms.begin()->first;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(const Rational& coefficient, unsigned degree) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational result = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result = result * x + *it;
  }
  return result;
}

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<Rational> c(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) {
    c[k - 1] = coefficients_[k] * static_cast<long long>(k);
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::antiderivative() const {
  if (coefficients_.empty()) return {};
  std::vector<Rational> c(coefficients_.size() + 1, Rational(0));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    c[k + 1] = coefficients_[k] / static_cast<long long>(k + 1);
  }
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size(), Rational(0));
  }
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> c(lhs.coefficients_.size() + rhs.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      c[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coefficients_;
  for (auto& v : c) v *= s;
  return Polynomial(std::move(c));
}

LaurentSeries LaurentSeries::exp_minus_lambda_a(int max_order) {
  LaurentSeries series(max_order);
  Rational factorial = 1;
  for (int k = 0; k <= max_order; ++k) {
    if (k > 0) factorial *= k;
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    series.terms_[k] = Polynomial::monomial(sign / factorial, static_cast<unsigned>(k));
  }
  return series;
}

LaurentSeries LaurentSeries::term(const Polynomial& p, int power, int max_order) {
  LaurentSeries series(max_order);
  if (!p.is_zero() && power <= max_order) series.terms_[power] = p;
  return series;
}

Polynomial LaurentSeries::coefficient(int power) const {
  const auto it = terms_.find(power);
  return it == terms_.end() ? Polynomial{} : it->second;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& rhs) {
  max_order_ = std::min(max_order_, rhs.max_order_);
  for (const auto& [power, poly] : rhs.terms_) terms_[power] += poly;
  std::erase_if(terms_, [this](const auto& kv) { return kv.second.is_zero() || kv.first > max_order_; });
  return *this;
}

LaurentSeries operator*(const LaurentSeries& lhs, const LaurentSeries& rhs) {
  // A product is only known through the lowest order covered by both
  // truncations once the other factor's leading power is accounted for.
  const long long bound_l = static_cast<long long>(lhs.max_order_) + min_power(rhs.terms_);
  const long long bound_r = static_cast<long long>(rhs.max_order_) + min_power(lhs.terms_);
  const int order = static_cast<int>(std::min<long long>({bound_l, bound_r, kExactOrder}));
  LaurentSeries product(order);
  for (const auto& [pl, ql] : lhs.terms_) {
    for (const auto& [pr, qr] : rhs.terms_) {
      if (pl + pr > order) continue;
      product.terms_[pl + pr] += ql * qr;
    }
  }
  std::erase_if(product.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return product;
}

LaurentSeries LaurentSeries::derivative() const {
  LaurentSeries result(max_order_);
  for (const auto& [power, poly] : terms_) {
    auto d = poly.derivative();
    if (!d.is_zero()) result.terms_[power] = std::move(d);
  }
  return result;
}

LaurentSeries LaurentSeries::definite_integral(const Rational& lower, const Rational& upper) const {
  LaurentSeries result(max_order_);
  for (const auto& [power, poly] : terms_) {
    const auto anti = poly.antiderivative();
    const Rational value = anti(upper) - anti(lower);
    if (value != 0) result.terms_[power] = Polynomial({value});
  }
  return result;
}

LaurentSeries LaurentSeries::at(const Rational& a) const {
  LaurentSeries result(max_order_);
  for (const auto& [power, poly] : terms_) {
    const Rational value = poly(a);
    if (value != 0) result.terms_[power] = Polynomial({value});
  }
  return result;
}

Rational LaurentSeries::finite_part() const {
  if (max_order_ < 0) {
    throw std::logic_error("LaurentSeries::finite_part: series truncated below lambda^0");
  }
  const auto c = coefficient(0);
  if (c.degree() > 0) {
    throw std::logic_error("LaurentSeries::finite_part: substitute the offset with at() first");
  }
  return c.is_zero() ? Rational(0) : c.coefficients().front();
}

bool LaurentSeries::is_regular() const { return terms_.empty() || terms_.begin()->first >= 0; }

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace vacuum
