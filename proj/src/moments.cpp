#include "boundscope/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "boundscope/errors.hpp"

namespace boundscope {

namespace {

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) carry += (sum - t) + x;
    else carry += (x - t) + sum;
    sum = t;
  }
  [[nodiscard]] double value() const { return sum + carry; }
};

// P_m(x) and P_m'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(std::size_t m, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (m == 0) return {1.0, 0.0};
  for (std::size_t k = 2; k <= m; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
    p0 = p1;
    p1 = pk;
  }
  const double dp = static_cast<double>(m) * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

Box::Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw InputError("box must have at least one axis");
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& [lo, hi] = intervals_[i];
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      std::ostringstream msg;
      msg << "box axis " << (i + 1) << " must satisfy lo < hi, got [" << lo << ", " << hi << "]";
      throw InputError(msg.str());
    }
  }
}

Box Box::cube(std::size_t n, double lo, double hi) {
  return Box(std::vector<Interval>(n, Interval{lo, hi}));
}

double Box::volume() const noexcept {
  double v = 1.0;
  for (const auto& iv : intervals_) v *= iv.length();
  return v;
}

double Box::diameter() const noexcept {
  double s = 0.0;
  for (const auto& iv : intervals_) s += iv.length() * iv.length();
  return std::sqrt(s);
}

bool Box::origin_symmetric() const noexcept {
  return std::all_of(intervals_.begin(), intervals_.end(),
                     [](const Interval& iv) { return iv.lo == -iv.hi; });
}

std::string Box::to_string() const {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    out << (i ? "," : "") << intervals_[i].lo << ':' << intervals_[i].hi;
  }
  return out.str();
}

MonomialBasis::MonomialBasis(std::size_t n, std::uint32_t r) : n_(n), r_(r) {
  if (n == 0) throw InputError("basis dimension must be positive");
  // Within each degree, walk compositions with the leading exponent
  // decreasing; that is graded-lex order.
  for (std::uint32_t degree = 0; degree <= r; ++degree) {
    ExponentVector alpha(n);
    std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t axis, std::uint32_t left) {
      if (axis + 1 == n) {
        alpha[axis] = left;
        members_.push_back(alpha);
        return;
      }
      for (std::uint32_t e = left + 1; e-- > 0;) {
        alpha[axis] = e;
        fill(axis + 1, left - e);
      }
    };
    fill(0, degree);
  }
}

MonomialBasis enumerate_basis(std::size_t n, std::uint32_t r) { return MonomialBasis(n, r); }

double box_moment(const Box& box, const ExponentVector& alpha) {
  if (alpha.size() != box.dimension()) throw InputError("exponent vector length does not match box");
  double m = 1.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const double k = alpha[i] + 1.0;
    const auto e = static_cast<int>(alpha[i]) + 1;
    m *= (std::pow(box[i].hi, e) - std::pow(box[i].lo, e)) / k;
  }
  return m;
}

double integrate_polynomial(const Box& box, const Polynomial& p) {
  if (p.dimension() != box.dimension()) throw InputError("polynomial dimension does not match box");
  CompensatedSum sum;
  for (const auto& [alpha, c] : p.terms()) sum.add(c * box_moment(box, alpha));
  return sum.value();
}

QuadratureRule gauss_legendre_rule(std::size_t m, Interval interval) {
  if (m == 0) throw InputError("quadrature rule needs at least one node");
  if (!(interval.lo < interval.hi)) throw InputError("quadrature interval must satisfy lo < hi");
  std::vector<double> x(m);
  std::vector<double> w(m);
  const double md = static_cast<double>(m);
  for (std::size_t k = 0; k < (m + 1) / 2; ++k) {
    // Asymptotic guess for the (k+1)-th largest root.
    double root = (1.0 - 1.0 / (8.0 * md * md) + 1.0 / (8.0 * md * md * md)) *
                  std::cos(std::numbers::pi * (static_cast<double>(k) + 0.75) / (md + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, d] = legendre_with_derivative(m, root);
      dp = d;
      const double step = p / d;
      root -= step;
      if (std::abs(step) <= 1e-15) break;
    }
    dp = legendre_with_derivative(m, root).second;
    const double weight = 2.0 / ((1.0 - root * root) * dp * dp);
    x[k] = -root;
    x[m - 1 - k] = root;
    w[k] = weight;
    w[m - 1 - k] = weight;
  }
  if (m % 2 == 1) x[m / 2] = 0.0;

  const double half = 0.5 * interval.length();
  const double mid = 0.5 * (interval.lo + interval.hi);
  QuadratureRule rule{std::move(x), std::move(w), interval};
  for (std::size_t i = 0; i < m; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    CompensatedSum s;
    for (double v : values) s.add(v);
    return s.value();
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

TensorGrid::TensorGrid(const Box& box, std::size_t nodes_per_axis) : m_(nodes_per_axis), count_(1) {
  rules_.reserve(box.dimension());
  for (const auto& iv : box.intervals()) {
    rules_.push_back(gauss_legendre_rule(nodes_per_axis, iv));
    count_ *= nodes_per_axis;
  }
}

void TensorGrid::for_each(const std::function<void(std::span<const double>, double)>& visit) const {
  const std::size_t n = rules_.size();
  std::vector<std::size_t> index(n, 0);
  std::vector<double> point(n);
  for (std::size_t node = 0; node < count_; ++node) {
    double weight = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      point[i] = rules_[i].nodes[index[i]];
      weight *= rules_[i].weights[index[i]];
    }
    visit(point, weight);
    for (std::size_t i = n; i-- > 0;) {
      if (++index[i] < m_) break;
      index[i] = 0;
    }
  }
}

std::vector<double> TensorGrid::integrate(
    std::size_t outputs, const std::function<void(std::span<const double>, std::span<double>)>& g) const {
  const std::size_t per_row = count_ / m_;
  std::vector<std::vector<double>> row_sums(outputs, std::vector<double>(m_, 0.0));
  std::vector<CompensatedSum> acc(outputs);
  std::vector<double> values(outputs);
  std::size_t visited = 0;
  for_each([&](std::span<const double> point, double weight) {
    g(point, values);
    for (std::size_t k = 0; k < outputs; ++k) acc[k].add(weight * values[k]);
    if (++visited % per_row == 0) {
      const std::size_t row = visited / per_row - 1;
      for (std::size_t k = 0; k < outputs; ++k) {
        row_sums[k][row] = acc[k].value();
        acc[k] = {};
      }
    }
  });
  std::vector<double> result(outputs);
  for (std::size_t k = 0; k < outputs; ++k) result[k] = pairwise_sum(row_sums[k]);
  return result;
}

SmoothIntegral integrate_smooth_detailed(const Box& box,
                                         const std::function<double(std::span<const double>)>& g,
                                         const SmoothOptions& options) {
  if (!(options.rel_tol > 0.0)) throw InputError("rel_tol must be positive");
  SmoothIntegral result;
  double previous = 0.0;
  for (std::size_t m = std::max<std::size_t>(options.initial_nodes, 1); m <= options.max_nodes; m *= 2) {
    const double total = std::pow(static_cast<double>(m), static_cast<double>(box.dimension()));
    if (total > static_cast<double>(options.max_total_nodes)) break;
    const auto sums = TensorGrid(box, m).integrate(2, [&](std::span<const double> x, std::span<double> out) {
      out[0] = g(x);
      out[1] = std::abs(out[0]);
    });
    result.history.emplace_back(m, sums[0]);
    result.value = sums[0];
    if (result.history.size() > 1 && std::abs(sums[0] - previous) <= options.rel_tol * sums[1]) {
      return result;
    }
    previous = sums[0];
  }
  const double last = result.history.empty() ? 0.0 : result.history.back().second;
  const double before = result.history.size() > 1 ? result.history[result.history.size() - 2].second : last;
  throw AccuracyError("adaptive quadrature did not converge within the node cap", before, last);
}

double integrate_smooth(const Box& box, const std::function<double(std::span<const double>)>& g,
                        double rel_tol) {
  SmoothOptions options;
  options.rel_tol = rel_tol;
  return integrate_smooth_detailed(box, g, options).value;
}

}  // namespace boundscope
