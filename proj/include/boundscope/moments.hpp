#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "boundscope/poly.hpp"

namespace boundscope {

struct Interval {
  double lo;
  double hi;

  [[nodiscard]] double length() const noexcept { return hi - lo; }
};

/// Axis-aligned box prod_i [lo_i, hi_i] with lo_i < hi_i on every axis.
class Box {
 public:
  explicit Box(std::vector<Interval> intervals);

  /// [lo, hi]^n.
  static Box cube(std::size_t n, double lo, double hi);

  [[nodiscard]] std::size_t dimension() const noexcept { return intervals_.size(); }
  [[nodiscard]] const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  [[nodiscard]] std::span<const Interval> intervals() const noexcept { return intervals_; }
  [[nodiscard]] double volume() const noexcept;
  [[nodiscard]] double diameter() const noexcept;
  [[nodiscard]] bool origin_symmetric() const noexcept;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Interval> intervals_;
};

/// The exponent set N(n, r) = {alpha : |alpha| <= r} in graded-lex order.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, std::uint32_t r);

  [[nodiscard]] std::size_t dimension() const noexcept { return n_; }
  [[nodiscard]] std::uint32_t degree() const noexcept { return r_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] const ExponentVector& operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] const std::vector<ExponentVector>& members() const noexcept { return members_; }
  [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
  [[nodiscard]] auto end() const noexcept { return members_.end(); }

 private:
  std::size_t n_;
  std::uint32_t r_;
  std::vector<ExponentVector> members_;
};

MonomialBasis enumerate_basis(std::size_t n, std::uint32_t r);

/// Lebesgue moment m_alpha(K) = int_K x^alpha dx.
double box_moment(const Box& box, const ExponentVector& alpha);

/// int_K p(x) dx from the closed-form moments.
double integrate_polynomial(const Box& box, const Polynomial& p);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  Interval interval;

  [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

/// m-point Gauss-Legendre rule on the interval; exact through degree 2m-1.
QuadratureRule gauss_legendre_rule(std::size_t m, Interval interval = {-1.0, 1.0});

/// Tensor product of one Gauss-Legendre rule per axis.
///
/// Sums are accumulated with compensated summation along the innermost
/// axes and reduced pairwise across the outermost axis, so results do not
/// depend on evaluation order.
class TensorGrid {
 public:
  TensorGrid(const Box& box, std::size_t nodes_per_axis);

  [[nodiscard]] std::size_t dimension() const noexcept { return rules_.size(); }
  [[nodiscard]] std::size_t nodes_per_axis() const noexcept { return m_; }
  [[nodiscard]] std::size_t node_count() const noexcept { return count_; }
  [[nodiscard]] const QuadratureRule& rule(std::size_t axis) const { return rules_[axis]; }

  /// Calls visit(point, weight) for every node in canonical order.
  void for_each(const std::function<void(std::span<const double>, double)>& visit) const;

  /// Integrates a vector-valued integrand with `outputs` components;
  /// g(point, values) writes the integrand values at point.
  [[nodiscard]] std::vector<double> integrate(
      std::size_t outputs,
      const std::function<void(std::span<const double>, std::span<double>)>& g) const;

 private:
  std::vector<QuadratureRule> rules_;
  std::size_t m_;
  std::size_t count_;
};

struct SmoothOptions {
  double rel_tol = 1e-9;
  std::size_t initial_nodes = 16;
  std::size_t max_nodes = 2048;
  /// Upper limit on the total number of tensor nodes in one pass.
  std::size_t max_total_nodes = std::size_t{1} << 24;
};

struct SmoothIntegral {
  double value = 0.0;
  /// (nodes per axis, estimate) for every pass, in order.
  std::vector<std::pair<std::size_t, double>> history;
};

/// Adaptive tensor Gauss-Legendre integration of a continuous function.
///
/// The per-axis node count doubles until two successive estimates differ by
/// at most rel_tol times the integral of |g|. Throws AccuracyError carrying
/// the last two estimates if the node cap is reached first.
SmoothIntegral integrate_smooth_detailed(const Box& box,
                                         const std::function<double(std::span<const double>)>& g,
                                         const SmoothOptions& options = {});

double integrate_smooth(const Box& box, const std::function<double(std::span<const double>)>& g,
                        double rel_tol = 1e-9);

/// Pairwise sum of values in their given order.
double pairwise_sum(std::span<const double> values);

}  // namespace boundscope
