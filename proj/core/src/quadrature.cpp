#include "vacuum/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "vacuum/errors.hpp"

namespace vacuum {
namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

// Kronrod abscissae (decreasing, last is the centre) and weights; the Gauss
// 7-point rule uses every other abscissa starting from index 1.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double abs_value;
};

struct PanelOrder {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.a > rhs.a;
  }
};

Panel kronrod15(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 15> samples{};
  samples[7] = f(centre);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    samples[j] = f(centre - dx);
    samples[14 - j] = f(centre + dx);
  }
  for (double v : samples) {
    if (!std::isfinite(v)) {
      throw DomainError("integrate: integrand is not finite on [" + std::to_string(a) + ", " +
                        std::to_string(b) + "]");
    }
  }

  double kronrod = kKronrodWeights[7] * samples[7];
  double gauss = kGaussWeights[3] * samples[7];
  double abs_sum = std::abs(kronrod);
  for (std::size_t j = 0; j < 7; ++j) {
    const double pair = samples[j] + samples[14 - j];
    kronrod += kKronrodWeights[j] * pair;
    abs_sum += kKronrodWeights[j] * (std::abs(samples[j]) + std::abs(samples[14 - j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }

  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(samples[7] - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    asc += kKronrodWeights[j] * (std::abs(samples[j] - mean) + std::abs(samples[14 - j] - mean));
  }

  const double value = kronrod * half;
  const double abs_value = abs_sum * std::abs(half);
  const double resasc = asc * std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && error != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  }
  if (abs_value > std::numeric_limits<double>::min() / (50.0 * kEpsilon)) {
    error = std::max(50.0 * kEpsilon * abs_value, error);
  }
  return {a, b, value, error, abs_value};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate: limits must be finite");
  }
  if (a == b) return {0.0, 0.0, 1};

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
  std::size_t evaluations = 15;
  queue.push(kronrod15(f, a, b));
  double total = queue.top().value;
  double total_error = queue.top().error;
  double total_abs = queue.top().abs_value;

  auto finish = [&]() {
    // Re-add in a fixed panel order so the sum does not depend on the
    // running-total history.
    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
      panels.push_back(queue.top());
      queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& l, const Panel& r) { return l.a < r.a; });
    QuadratureResult result{0.0, 0.0, evaluations};
    for (const auto& p : panels) {
      result.value += p.value;
      result.abs_error += p.error;
    }
    return result;
  };

  while (true) {
    const double target = std::max(options.abs_tol, options.rel_tol * std::abs(total));
    if (total_error <= target || total_error <= 100.0 * kEpsilon * total_abs) {
      return finish();
    }
    if (evaluations + 30 > options.max_evaluations) {
      const auto partial = finish();
      throw ConvergenceError("integrate: evaluation budget exhausted", partial.value,
                             partial.abs_error);
    }
    const Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      const auto partial = finish();
      throw ConvergenceError("integrate: interval cannot be subdivided further", partial.value,
                             partial.abs_error);
    }
    queue.pop();
    const Panel left = kronrod15(f, worst.a, mid);
    const Panel right = kronrod15(f, mid, worst.b);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    queue.push(left);
    queue.push(right);
  }
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureOptions& options) {
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: lower limit must be finite");
  auto mapped = [&f, a](double s) {
    const double gap = 1.0 - s;
    const double t = a + s / gap;
    if (!std::isfinite(t)) return 0.0;
    const double value = f(t);
    return value == 0.0 ? 0.0 : value / (gap * gap);
  };
  return integrate(mapped, 0.0, 1.0, options);
}

QuadratureResult sum_series(const std::function<double(std::size_t)>& term, bool weight_first,
                            const std::function<double(std::size_t)>& tail_bound,
                            const SeriesOptions& options) {
  double sum = 0.0;
  double compensation = 0.0;
  double abs_sum = 0.0;
  double last_bound = std::numeric_limits<double>::infinity();

  for (std::size_t n = 0; n < options.max_terms; ++n) {
    double value = term(n);
    if (n == 0 && weight_first) value *= 0.5;
    if (!std::isfinite(value)) {
      throw DomainError("sum_series: term " + std::to_string(n) + " is not finite");
    }
    // Neumaier compensated summation.
    const double next = sum + value;
    compensation += std::abs(sum) >= std::abs(value) ? (sum - next) + value : (value - next) + sum;
    sum = next;
    abs_sum += std::abs(value);

    last_bound = tail_bound(n);
    const double partial = sum + compensation;
    if (last_bound <= std::max(options.rel_tol * std::abs(partial), options.abs_tol)) {
      const double rounding = 2.0 * kEpsilon * std::abs(partial) +
                              static_cast<double>(n + 1) * kEpsilon * kEpsilon * abs_sum;
      return {partial, last_bound + rounding, n + 1};
    }
  }
  throw ConvergenceError("sum_series: tail bound not met within term budget", sum + compensation,
                         last_bound);
}

}  // namespace vacuum
