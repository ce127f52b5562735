#include "boundscope/annealing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "boundscope/errors.hpp"
#include "boundscope/search.hpp"

namespace boundscope {

double TemperatureSchedule::temperature(std::uint32_t r) const {
  if (r == 0) throw InputError("temperature schedule needs r >= 1");
  return std::numbers::e * static_cast<double>(degree) * fhat_max / static_cast<double>(r);
}

double fhat_max(const Polynomial& f, const Box& box) {
  if (f.dimension() != box.dimension()) throw InputError("polynomial dimension does not match box");
  if (f.is_zero()) return 0.0;
  return maximize_on_box(box, [&](std::span<const double> x) { return std::abs(f(x)); }).value;
}

double grid_minimum(const Polynomial& f, const Box& box) {
  if (f.dimension() != box.dimension()) throw InputError("polynomial dimension does not match box");
  return minimize_on_box(box, [&](std::span<const double> x) { return f(x); }).value;
}

double BoltzmannIntegrals::log_denominator() const { return std::log(denominator) - shift / t; }

BoltzmannIntegrals boltzmann_integrals(const Polynomial& f, const Box& box, double t, double rel_tol) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InputError("temperature must be positive and finite");
  if (f.dimension() != box.dimension()) throw InputError("polynomial dimension does not match box");

  const SmoothOptions options{.rel_tol = rel_tol};
  BoltzmannIntegrals previous;
  double previous_scale = 0.0;
  bool have_previous = false;
  for (std::size_t m = options.initial_nodes; m <= options.max_nodes; m *= 2) {
    const double total = std::pow(static_cast<double>(m), static_cast<double>(box.dimension()));
    if (total > static_cast<double>(options.max_total_nodes)) break;
    const TensorGrid grid(box, m);

    std::vector<double> values;
    values.reserve(grid.node_count());
    grid.for_each([&](std::span<const double> x, double) { values.push_back(f(x)); });
    const double shift = *std::min_element(values.begin(), values.end());

    std::size_t next = 0;
    const auto sums = grid.integrate(3, [&](std::span<const double>, std::span<double> out) {
      const double fx = values[next++];
      const double weight = std::exp(-(fx - shift) / t);
      out[0] = fx * weight;
      out[1] = weight;
      out[2] = std::abs(fx) * weight;
    });

    BoltzmannIntegrals current{sums[0], sums[1], shift, t, m};
    const double scale = sums[2] / sums[1];
    if (have_previous) {
      const bool mean_settled = std::abs(current.expectation() - previous.expectation()) <=
                                rel_tol * std::max(scale, previous_scale);
      const bool mass_settled = std::abs(current.log_denominator() - previous.log_denominator()) <= rel_tol;
      if (mean_settled && mass_settled) return current;
    }
    previous = current;
    previous_scale = scale;
    have_previous = true;
  }
  throw AccuracyError("Boltzmann integrals did not converge within the node cap", previous.expectation(),
                      previous.expectation());
}

double boltzmann_expectation(const Polynomial& f, const Box& box, double t, double rel_tol) {
  return boltzmann_integrals(f, box, t, rel_tol).expectation();
}

BoundReport sa_bound(const Polynomial& f, const Box& box, std::uint32_t r, std::optional<double> fhat_override,
                     std::string function) {
  if (r == 0) throw InputError("the annealing bound needs r >= 1");
  const auto start = std::chrono::steady_clock::now();
  BoundReport report;
  report.method = Method::sa;
  report.function = std::move(function);
  report.r = r;
  if (f.is_constant()) {
    // The Boltzmann density is uniform and the schedule degenerates (d = 0).
    report.value = f.coefficient(ExponentVector(f.dimension()));
    report.notes.emplace_back("constant objective; temperature undefined");
  } else {
    const double fhat = fhat_override ? *fhat_override : fhat_max(f, box);
    const double t = TemperatureSchedule{f.degree(), fhat}.temperature(r);
    const BoltzmannIntegrals integrals = boltzmann_integrals(f, box, t);
    report.t = t;
    report.value = integrals.expectation();
    report.notes.emplace_back("fhat_max=" + format_number(fhat));
    report.notes.emplace_back("nodes_per_axis=" + std::to_string(integrals.nodes_per_axis));
  }
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

LiftedIdentity lifted_identity_check(const Polynomial& f, const Box& box, double t) {
  if (!(t > 0.0)) throw InputError("temperature must be positive");
  LiftedIdentity result;
  if (f.is_constant()) {
    // The lifted body is flat; E_K + t is the limit of the identity under
    // any perturbation of a constant f.
    const double c = f.coefficient(ExponentVector(f.dimension()));
    result.expectation = c;
    result.lhs = result.rhs = c + t;
    return result;
  }
  const BoltzmannIntegrals k = boltzmann_integrals(f, box, t);
  const double e_k = k.expectation();
  const double vol = box.volume();
  // All quantities below carry the common factor e^{shift/t}.
  const double tail = std::exp(-(e_k - k.shift) / t) * vol;
  const double d_lifted = t * k.denominator - t * tail;
  const double n_lifted = -t * e_k * tail + t * k.numerator + t * d_lifted;
  result.expectation = e_k;
  result.lhs = n_lifted / d_lifted;
  result.rhs = e_k + t;
  result.gap = std::abs(result.lhs - result.rhs);
  return result;
}

}  // namespace boundscope
