#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boundscope/moments.hpp"
#include "boundscope/poly.hpp"

namespace boundscope {

/// phi_2r(lambda) = sum_{k=0}^{2r} (-lambda)^k / k!, the degree-2r Taylor
/// prefix of e^{-lambda}. It is a sum of squares and, for lambda >= 0,
///   0 <= phi_2r(lambda) - e^{-lambda} <= lambda^{2r+1} / (2r+1)!.
struct TruncatedExp {
  std::uint32_t r = 0;
  std::vector<double> coefficients;

  [[nodiscard]] std::uint32_t degree() const noexcept { return 2 * r; }
  /// Horner evaluation of the polynomial.
  [[nodiscard]] double operator()(double lambda) const;

  /// log(phi_2r(lambda) - e^{-lambda}) for lambda >= 0, -infinity at 0.
  /// Small lambda uses the alternating tail of the exponential series, which
  /// keeps full relative accuracy where the direct difference cancels.
  [[nodiscard]] double log_excess(double lambda) const;
};

TruncatedExp truncated_exp(std::uint32_t r);

/// log(lambda^{2r+1} / (2r+1)!), the Taylor remainder bound.
double log_remainder_bound(std::uint32_t r, double lambda);

/// Largest degree taylor_density_bound will expand phi_2r(f/t) to.
inline constexpr std::uint32_t kMaxTaylorDegree = 200;
/// Largest coefficient magnitude tolerated in the expansion.
inline constexpr double kMaxTaylorCoefficient = 1e280;

/// phi_2r(f/t) expanded as a polynomial in x. Throws RangeError past the
/// degree or coefficient guards.
Polynomial taylor_polynomial(const Polynomial& f, std::uint32_t r, double t);

/// phi_2r(f/t) / int_K phi_2r(f/t), a sum-of-squares probability density.
Polynomial taylor_density(const Polynomial& f, const Box& box, std::uint32_t r, double t);

/// int_K f phi_2r(f/t) / int_K phi_2r(f/t), evaluated exactly through moments.
double taylor_density_bound(const Polynomial& f, const Box& box, std::uint32_t r, double t);

struct ChainOptions {
  /// Known minimum of f on K; a grid estimate is used when absent.
  std::optional<double> f_min;
  /// Overrides the computed max |f| on K.
  std::optional<double> fhat_max;
};

/// Every quantity in the chain
///   lasserre(r d) <= taylor <= boltzmann + error_term,
///   lasserre(r d) <= boltzmann + fhat_max / 2^r   when r >= e fhat_max / t.
struct ChainReport {
  std::uint32_t r = 0;
  double t = 0.0;
  std::uint32_t lasserre_order = 0;
  double lasserre_value = 0.0;
  double taylor_value = 0.0;
  double boltzmann_value = 0.0;
  double error_term = 0.0;
  double theorem_bound = 0.0;
  bool schedule_ok = false;
  double fhat_max = 0.0;
  double f_min = 0.0;
  double tolerance = 0.0;

  [[nodiscard]] bool lasserre_below_taylor() const { return lasserre_value <= taylor_value + tolerance; }
  [[nodiscard]] bool taylor_below_boltzmann() const {
    return taylor_value <= boltzmann_value + error_term + tolerance;
  }
  [[nodiscard]] bool theorem_holds() const { return !schedule_ok || lasserre_value <= theorem_bound + tolerance; }
  [[nodiscard]] bool holds() const { return lasserre_below_taylor() && taylor_below_boltzmann() && theorem_holds(); }
};

ChainReport verify_chain(const Polynomial& f, const Box& box, std::uint32_t r, double t,
                         const ChainOptions& options = {});

}  // namespace boundscope
