#include "vacuum/regularization.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "vacuum/errors.hpp"

namespace vacuum {
namespace {

// Geometric-series closed forms of the exponential-cutoff tangential bracket.
double cc_closed_form(double lam) {
  const double s = std::sinh(lam / 2.0);
  return 8.0 / std::pow(lam, 4) - 1.0 / (lam * lam * s * s) - 2.0 / (std::pow(lam, 3) * std::tanh(lam / 2.0));
}

double cp_closed_form(double lam) {
  const double s = std::sinh(lam / 2.0);
  return 8.0 / std::pow(lam, 4) - std::cosh(lam / 2.0) / (lam * lam * s * s) -
         2.0 / (std::pow(lam, 3) * s);
}

double closed_form(BoundaryKind kind, double lam) {
  return kind == BoundaryKind::CC ? cc_closed_form(lam) : cp_closed_form(lam);
}

// Direct summation of I(a) = e^{-lam a}(4a/lam^2 + 4/lam^3) against its integral 8/lam^4.
double direct_bracket(BoundaryKind kind, double lam) {
  long double sum = 0.0L;
  for (int n = 5000; n >= 0; --n) {
    const long double a = kind == BoundaryKind::CC ? n : n + 0.5L;
    const long double w = (kind == BoundaryKind::CC && n == 0) ? 0.5L : 1.0L;
    sum += w * std::exp(-lam * a) * (4.0L * a / (lam * lam) + 4.0L / (lam * lam * lam));
  }
  return static_cast<double>(8.0L / std::pow(static_cast<long double>(lam), 4) - sum);
}

const CutoffSpec kExp1{CutoffFamily::Exponential, 1.0};

TEST(ClosedFormOracle, AgreesWithDirectSummation) {
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    for (double lam : {0.5, 1.0, 2.0, 4.0}) {
      EXPECT_NEAR(closed_form(kind, lam), direct_bracket(kind, lam), 1e-10) << lam;
    }
  }
  EXPECT_NEAR(cc_closed_form(1.0), -0.0106012043084749733, 1e-15);
}

TEST(BracketFiniteLambda, MatchesClosedForm) {
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    for (double lam : {0.0625, 0.125, 0.25, 0.5, 1.0, 3.0}) {
      const auto r = bracket_finite_lambda(kind, {CutoffFamily::Exponential, lam}, 1e-12);
      // The double closed form cancels O(lam^-4) terms; use the long double sum at small lam.
      const double exact = lam < 0.5 ? direct_bracket(kind, lam) : closed_form(kind, lam);
      EXPECT_NEAR(r.value, exact, 1e-10) << to_string(kind) << " lam=" << lam;
      EXPECT_LE(std::abs(r.value - exact), std::max(r.error_estimate, 1e-13));
      EXPECT_FALSE(r.non_convergent);
      EXPECT_EQ(r.lambda, lam);
      EXPECT_EQ(r.route, BracketRoute::NumericFiniteLambda);
    }
  }
}

TEST(BracketModeSum, AgreesWithKernelRoute) {
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    for (auto family : {CutoffFamily::Exponential, CutoffFamily::Gaussian}) {
      for (auto weight : {ModeWeight::Tangential, ModeWeight::Normal, ModeWeight::Energy}) {
        const CutoffSpec spec{family, 1.0};
        const auto a = bracket_mode_sum(kind, spec, 1e-12, weight);
        const auto b = bracket_finite_lambda(kind, spec, 1e-12, weight);
        EXPECT_NEAR(a.value, b.value, 1e-9)
            << to_string(kind) << " " << to_string(family) << " " << to_string(weight);
      }
    }
  }
}

TEST(BracketFiniteLambda, WeightsSatisfyEnergyMinusNormal) {
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    const CutoffSpec spec{CutoffFamily::Gaussian, 0.3};
    const double t = bracket_finite_lambda(kind, spec, 1e-12, ModeWeight::Tangential).value;
    const double e = bracket_finite_lambda(kind, spec, 1e-12, ModeWeight::Energy).value;
    const double n = bracket_finite_lambda(kind, spec, 1e-12, ModeWeight::Normal).value;
    EXPECT_NEAR(e - n, t, 1e-10);
  }
}

TEST(BracketFiniteLambda, ApproachesLimitMonotonically) {
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    double previous_step = INFINITY;
    double previous_ratio = 0.0;
    for (double lam = 0.5; lam > 0.01; lam /= 2.0) {
      const double here = bracket_finite_lambda(kind, {CutoffFamily::Exponential, lam}, 1e-12).value;
      const double half =
          bracket_finite_lambda(kind, {CutoffFamily::Exponential, lam / 2}, 1e-12).value;
      const double step = std::abs(here - half);
      EXPECT_LT(step, previous_step) << "lam=" << lam;
      if (std::isfinite(previous_step)) previous_ratio = previous_step / step;
      previous_step = step;
    }
    EXPECT_NEAR(previous_ratio, 4.0, 0.05);  // O(lam^2)
  }
}

TEST(BracketFiniteLambda, SharpCutoffIsFlagged) {
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    for (double edge = 2.0; edge < 12.0; edge += 0.07) {
      const auto r = bracket_finite_lambda(kind, {CutoffFamily::Sharp, 1.0 / edge}, 1e-12);
      EXPECT_TRUE(r.non_convergent) << to_string(kind) << " 1/lam=" << edge;
    }
    for (auto family : {CutoffFamily::Exponential, CutoffFamily::Gaussian}) {
      EXPECT_FALSE(bracket_finite_lambda(kind, {family, 0.3}, 1e-12).non_convergent);
    }
  }
}

TEST(BracketFiniteLambda, RejectsBadSharpness) {
  EXPECT_THROW(bracket_finite_lambda(BoundaryKind::CC, {CutoffFamily::Exponential, 0.0}, 1e-10),
               DomainError);
}

std::vector<LambdaSample> oracle_samples(BoundaryKind kind, std::vector<double> grid) {
  std::vector<LambdaSample> samples;
  for (double lam : grid) samples.push_back({lam, closed_form(kind, lam), 0.0});
  return samples;
}

TEST(ExtrapolateToZero, OracleSamples) {
  const auto cc = extrapolate_to_zero(oracle_samples(BoundaryKind::CC, {0.5, 0.25, 0.125}));
  EXPECT_NEAR(cc.value, -1.0 / 90.0, 1e-6);
  EXPECT_EQ(cc.route, BracketRoute::Extrapolated);
  EXPECT_EQ(cc.lambda, 0.0);
  const auto cp = extrapolate_to_zero(oracle_samples(BoundaryKind::CP, {0.5, 0.25, 0.125}));
  EXPECT_NEAR(cp.value, 7.0 / 720.0, 1e-6);
  const auto fine =
      extrapolate_to_zero(oracle_samples(BoundaryKind::CC, {0.5, 0.25, 0.125, 0.0625}));
  EXPECT_NEAR(fine.value, -1.0 / 90.0, 1e-9);
  EXPECT_LE(std::abs(fine.value + 1.0 / 90.0), fine.error_estimate);
}

TEST(ExtrapolateToZero, ConstantSamples) {
  const std::vector<LambdaSample> samples{{0.5, 0.25, 0.0}, {0.25, 0.25, 0.0}, {0.125, 0.25, 0.0}};
  const auto r = extrapolate_to_zero(samples);
  EXPECT_NEAR(r.value, 0.25, 1e-15);
  EXPECT_NEAR(r.error_estimate, 0.0, 1e-15);
}

TEST(ExtrapolateToZero, RejectsDegenerateSampleSets) {
  const std::vector<LambdaSample> two{{0.5, 1.0, 0.0}, {0.25, 1.0, 0.0}};
  EXPECT_THROW(extrapolate_to_zero(two), FitError);
  const std::vector<LambdaSample> repeated{{0.5, 1.0, 0.0}, {0.5, 1.0, 0.0}, {0.25, 1.0, 0.0}};
  EXPECT_THROW(extrapolate_to_zero(repeated), FitError);
  const std::vector<LambdaSample> increasing{{0.1, 1.0, 0.0}, {0.2, 1.0, 0.0}, {0.3, 1.0, 0.0}};
  EXPECT_THROW(extrapolate_to_zero(increasing), FitError);
  const std::vector<LambdaSample> negative{{0.5, 1.0, 0.0}, {0.25, 1.0, 0.0}, {-0.1, 1.0, 0.0}};
  EXPECT_THROW(extrapolate_to_zero(negative), FitError);
}

TEST(ExtrapolatedBracket, MatchesLimits) {
  const std::vector<double> grid{0.5, 0.25, 0.125, 0.0625};
  const auto cc = extrapolated_bracket(BoundaryKind::CC, CutoffFamily::Exponential, grid, 1e-10);
  EXPECT_NEAR(cc.value, -1.0 / 90.0, 1e-8);
  const auto cp = extrapolated_bracket(BoundaryKind::CP, CutoffFamily::Exponential, grid, 1e-10);
  EXPECT_NEAR(cp.value, 7.0 / 720.0, 1e-8);
}

TEST(ExtrapolatedBracket, GaussianAgreesWithExponential) {
  const std::vector<double> grid{0.5, 0.25, 0.125, 0.0625};
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    const double e = extrapolated_bracket(kind, CutoffFamily::Exponential, grid, 1e-10).value;
    const double g = extrapolated_bracket(kind, CutoffFamily::Gaussian, grid, 1e-10).value;
    EXPECT_LT(std::abs(g - e), 1e-3 * std::abs(e)) << to_string(kind);
  }
}

TEST(ExtrapolatedBracket, SharpIsFlagged) {
  const std::vector<double> grid{0.5, 0.25, 0.125, 0.0625};
  EXPECT_TRUE(extrapolated_bracket(BoundaryKind::CC, CutoffFamily::Sharp, grid, 1e-10).non_convergent);
}

TEST(ExtrapolationPower, EvenOnlyForExponential) {
  EXPECT_EQ(extrapolation_power(CutoffFamily::Exponential), 2);
  EXPECT_EQ(extrapolation_power(CutoffFamily::Gaussian), 1);
}

TEST(EulerMaclaurinFinitePart, Examples) {
  EXPECT_EQ(euler_maclaurin_finite_part(Rational(1), Rational(8)), Rational(13, 180));
  EXPECT_EQ(euler_maclaurin_finite_part(Rational(0), Rational(0)), Rational(0));
  EXPECT_EQ(euler_maclaurin_finite_part(Rational(12), Rational(0)), Rational(1));
  EXPECT_DOUBLE_EQ(euler_maclaurin_finite_part(1.0, 8.0), 13.0 / 180.0);
}

TEST(EulerMaclaurinFinitePart, Linear) {
  const Rational a1(3, 7), a3(-5, 11), b1(2, 3), b3(9, 4), s(-13, 5);
  const Rational mixed1 = a1 + s * b1;
  const Rational mixed3 = a3 + s * b3;
  EXPECT_EQ(euler_maclaurin_finite_part(mixed1, mixed3),
            euler_maclaurin_finite_part(a1, a3) + s * euler_maclaurin_finite_part(b1, b3));
}

TEST(EulerMaclaurinFinitePart, HigherOrdersUseBernoulliNumbers) {
  const std::vector<Rational> odd{1, 8, 0, 0, 0};
  EXPECT_EQ(euler_maclaurin_finite_part(odd), Rational(13, 180));
  const std::vector<Rational> fifth{0, 0, 1};
  EXPECT_EQ(euler_maclaurin_finite_part(fifth), Rational(1, 30240));
}

TEST(FDerivatives, RenormalizedValues) {
  const auto f = f_derivatives();
  EXPECT_EQ(f.first, Rational(1));
  EXPECT_EQ(f.third, Rational(8));
  ASSERT_GE(f.higher.size(), 2u);
  for (const auto& h : f.higher) EXPECT_EQ(h, Rational(0));
}

// Test-side oracle: for J(a) = e^{-lam a} sum_j q_j a^{m_j} lam^{-j}, the lam^0 coefficient is
// sum_j q_j a^{m_j} (-a)^j / j!, a polynomial in a.  Returned as dense coefficients.
struct PoleTerm {
  Rational q;
  unsigned a_power;
  unsigned pole;
};

std::vector<Rational> finite_part_polynomial(const std::vector<PoleTerm>& terms) {
  std::vector<Rational> p(8, Rational(0));
  for (const auto& t : terms) {
    Rational factorial = 1;
    for (unsigned k = 2; k <= t.pole; ++k) factorial *= k;
    const Rational sign = t.pole % 2 == 0 ? 1 : -1;
    p[t.a_power + t.pole] += t.q * sign / factorial;
  }
  return p;
}

Rational eval(const std::vector<Rational>& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

Rational derivative_at(const std::vector<Rational>& p, unsigned order, const Rational& x) {
  std::vector<Rational> d = p;
  for (unsigned k = 0; k < order; ++k) {
    std::vector<Rational> next(d.size(), Rational(0));
    for (std::size_t i = 1; i < d.size(); ++i) next[i - 1] = d[i] * static_cast<int>(i);
    d = next;
  }
  return eval(d, x);
}

Rational integral(const std::vector<Rational>& p, const Rational& lo, const Rational& hi) {
  std::vector<Rational> anti(p.size() + 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) anti[i + 1] = p[i] / static_cast<int>(i + 1);
  return eval(anti, hi) - eval(anti, lo);
}

Rational em_oracle(const std::vector<Rational>& p, const Rational& offset) {
  // int_0^inf - sum' for a polynomial: B2/2! p' - ... ; p has degree <= 7.
  const Rational b[] = {Rational(1, 12), Rational(-1, 720), Rational(1, 30240), Rational(-1, 1209600)};
  Rational sum = 0;
  for (unsigned k = 0; k < 4; ++k) sum += b[k] * derivative_at(p, 2 * k + 1, offset);
  return sum;
}

std::vector<Rational> mode_polynomial(ModeWeight weight) {
  switch (weight) {
    case ModeWeight::Tangential:
      return finite_part_polynomial({{4, 1, 2}, {4, 0, 3}});
    case ModeWeight::Normal:
      return finite_part_polynomial({{2, 2, 1}});
    case ModeWeight::Energy:
      return finite_part_polynomial({{2, 2, 1}, {4, 1, 2}, {4, 0, 3}});
  }
  return {};
}

TEST(RenormalizedCTerms, MatchOracle) {
  const auto c = renormalized_c_terms();
  EXPECT_EQ(c.c1, Rational(1, 6));
  EXPECT_EQ(c.c2, Rational(1, 48));
  EXPECT_EQ(c.c3, Rational(13, 180));
  EXPECT_EQ(c.combination(), Rational(7, 720));

  const auto p = mode_polynomial(ModeWeight::Tangential);
  const Rational half(1, 2);
  EXPECT_EQ(c.c1, eval(p, half));
  EXPECT_EQ(c.c2, integral(p, 0, half));
  EXPECT_EQ(c.c3, em_oracle(p, half));
}

TEST(AnalyticBracket, ExactLimits) {
  EXPECT_EQ(analytic_bracket(BoundaryKind::CC), Rational(-1, 90));
  EXPECT_EQ(analytic_bracket(BoundaryKind::CP), Rational(7, 720));
  const auto r = analytic_bracket_result(BoundaryKind::CP);
  EXPECT_EQ(r.route, BracketRoute::AnalyticEM);
  EXPECT_DOUBLE_EQ(r.value, 7.0 / 720.0);
  EXPECT_EQ(r.error_estimate, 0.0);
}

TEST(AnalyticBracket, AllWeightsMatchOracle) {
  const Rational half(1, 2);
  for (auto weight : {ModeWeight::Tangential, ModeWeight::Normal, ModeWeight::Energy}) {
    const auto p = mode_polynomial(weight);
    EXPECT_EQ(analytic_bracket(BoundaryKind::CC, weight), em_oracle(p, 0)) << to_string(weight);
    EXPECT_EQ(analytic_bracket(BoundaryKind::CP, weight),
              -half * eval(p, half) + integral(p, 0, half) + em_oracle(p, half))
        << to_string(weight);
  }
  EXPECT_EQ(analytic_bracket(BoundaryKind::CC, ModeWeight::Normal), Rational(1, 60));
  EXPECT_EQ(analytic_bracket(BoundaryKind::CP, ModeWeight::Energy), Rational(-7, 1440));
}

TEST(RouteAgreement, AnalyticVersusExtrapolated) {
  const std::vector<double> grid{0.5, 0.25, 0.125, 0.0625};
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    for (auto weight : {ModeWeight::Tangential, ModeWeight::Normal, ModeWeight::Energy}) {
      const double analytic = to_double(analytic_bracket(kind, weight));
      const double numeric =
          extrapolated_bracket(kind, CutoffFamily::Exponential, grid, 1e-10, weight).value;
      EXPECT_NEAR(numeric, analytic, 1e-5) << to_string(kind) << " " << to_string(weight);
    }
  }
}

TEST(ExponentialModeFunction, PolesAndFinitePart) {
  const auto j = exponential_mode_function(ModeWeight::Tangential);
  EXPECT_EQ(j.coefficient(-3), Polynomial::monomial(4, 0));
  EXPECT_EQ(j.at(Rational(1, 2)).finite_part(), Rational(1, 6));
}

}  // namespace
}  // namespace vacuum
