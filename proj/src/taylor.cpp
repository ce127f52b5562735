#include "boundscope/taylor.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "boundscope/annealing.hpp"
#include "boundscope/errors.hpp"
#include "boundscope/lasserre.hpp"

namespace boundscope {

TruncatedExp truncated_exp(std::uint32_t r) {
  TruncatedExp phi;
  phi.r = r;
  phi.coefficients.resize(2 * static_cast<std::size_t>(r) + 1);
  double c = 1.0;
  for (std::size_t k = 0; k < phi.coefficients.size(); ++k) {
    if (k > 0) c = -c / static_cast<double>(k);
    phi.coefficients[k] = c;
  }
  return phi;
}

double TruncatedExp::operator()(double lambda) const {
  double sum = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) sum = sum * lambda + *it;
  return sum;
}

double log_remainder_bound(std::uint32_t r, double lambda) {
  const double k = 2.0 * r + 1.0;
  if (lambda == 0.0) return -std::numeric_limits<double>::infinity();
  return k * std::log(lambda) - std::lgamma(k + 1.0);
}

double TruncatedExp::log_excess(double lambda) const {
  if (lambda < 0.0) throw InputError("log_excess needs lambda >= 0");
  if (lambda == 0.0) return -std::numeric_limits<double>::infinity();
  const double first = 2.0 * r + 1.0;
  if (lambda <= first + 1.0) {
    // phi - e^{-lambda} = lambda^{2r+1}/(2r+1)! * (1 - lambda/(2r+2) + lambda^2/((2r+2)(2r+3)) - ...)
    double bracket = 0.0;
    double term = 1.0;
    for (int k = 1; k < 10000; ++k) {
      bracket += term;
      term *= -lambda / (first + k);
      if (std::abs(term) < 1e-18 * std::abs(bracket)) break;
    }
    return log_remainder_bound(r, lambda) + std::log(bracket);
  }
  return std::log((*this)(lambda) - std::exp(-lambda));
}

Polynomial taylor_polynomial(const Polynomial& f, std::uint32_t r, double t) {
  if (!(t > 0.0)) throw InputError("temperature must be positive");
  if (static_cast<std::uint64_t>(f.degree()) * 2 * r > kMaxTaylorDegree) {
    throw RangeError("truncated exponential of degree " + std::to_string(2 * r) + " composed with a degree-" +
                     std::to_string(f.degree()) + " polynomial exceeds the degree limit " +
                     std::to_string(kMaxTaylorDegree));
  }
  const TruncatedExp phi = truncated_exp(r);
  const Polynomial scaled = f * (1.0 / t);
  // Horner composition, checking magnitudes as the expansion grows.
  Polynomial result(f.dimension());
  for (auto it = phi.coefficients.rbegin(); it != phi.coefficients.rend(); ++it) {
    result = result * scaled;
    result += Polynomial::constant(f.dimension(), *it);
    if (!(result.max_abs_coefficient() <= kMaxTaylorCoefficient)) {
      throw RangeError("coefficients of the truncated exponential density exceed " +
                       format_number(kMaxTaylorCoefficient));
    }
  }
  return result;
}

Polynomial taylor_density(const Polynomial& f, const Box& box, std::uint32_t r, double t) {
  const Polynomial phi = taylor_polynomial(f, r, t);
  const double mass = integrate_polynomial(box, phi);
  if (!(mass > 0.0)) throw NumericError("truncated exponential density has nonpositive mass");
  return phi * (1.0 / mass);
}

double taylor_density_bound(const Polynomial& f, const Box& box, std::uint32_t r, double t) {
  if (f.dimension() != box.dimension()) throw InputError("polynomial dimension does not match box");
  const Polynomial phi = taylor_polynomial(f, r, t);
  return integrate_polynomial(box, f * phi) / integrate_polynomial(box, phi);
}

ChainReport verify_chain(const Polynomial& f, const Box& box, std::uint32_t r, double t,
                         const ChainOptions& options) {
  if (r == 0) throw InputError("chain verification needs r >= 1");
  if (!(t > 0.0)) throw InputError("temperature must be positive");

  ChainReport report;
  report.r = r;
  report.t = t;
  report.fhat_max = options.fhat_max ? *options.fhat_max : fhat_max(f, box);
  report.f_min = options.f_min ? *options.f_min : grid_minimum(f, box);
  report.tolerance = 1e-6 * (1.0 + report.fhat_max);
  report.schedule_ok = static_cast<double>(r) >= std::numbers::e * report.fhat_max / t;

  report.lasserre_order = r * f.degree();
  report.lasserre_value = lasserre_upper_bound(f, box, report.lasserre_order).value;
  report.taylor_value = taylor_density_bound(f, box, r, t);

  const BoltzmannIntegrals boltzmann = boltzmann_integrals(f, box, t);
  report.boltzmann_value = boltzmann.expectation();

  // T = int (f - f_min) f^{2r+1} / (t^{2r+1} (2r+1)! int e^{-f/t}), with the
  // factorial, the power of t and the denominator combined in log space.
  const Polynomial shifted = f - Polynomial::constant(f.dimension(), report.f_min);
  const double numerator = integrate_polynomial(box, shifted * power(f, 2 * r + 1));
  if (numerator != 0.0) {
    const double k = 2.0 * r + 1.0;
    const double log_t = std::log(std::abs(numerator)) - boltzmann.log_denominator() - k * std::log(t) -
                         std::lgamma(k + 1.0);
    report.error_term = std::copysign(std::exp(log_t), numerator);
  }
  report.theorem_bound = report.boltzmann_value + report.fhat_max / std::ldexp(1.0, static_cast<int>(r));
  return report;
}

}  // namespace boundscope
