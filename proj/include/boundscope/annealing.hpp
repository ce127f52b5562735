#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "boundscope/moments.hpp"
#include "boundscope/poly.hpp"
#include "boundscope/report.hpp"

namespace boundscope {

/// Temperature schedule t(r) = e * d * fhat_max / r.
struct TemperatureSchedule {
  std::uint32_t degree;
  double fhat_max;

  [[nodiscard]] double temperature(std::uint32_t r) const;
};

/// max over K of |f|, from a dense grid plus local refinement.
double fhat_max(const Polynomial& f, const Box& box);

/// Grid estimate of min over K of f (an upper bound on the true minimum).
double grid_minimum(const Polynomial& f, const Box& box);

/// Shifted Boltzmann integrals at temperature t. With s = shift,
///   numerator   = int_K f e^{-(f-s)/t},
///   denominator = int_K e^{-(f-s)/t},
/// so the unshifted integrals are these times e^{-s/t}.
struct BoltzmannIntegrals {
  double numerator = 0.0;
  double denominator = 0.0;
  double shift = 0.0;
  double t = 0.0;
  std::size_t nodes_per_axis = 0;

  [[nodiscard]] double expectation() const { return numerator / denominator; }
  /// log of the unshifted denominator int_K e^{-f/t}.
  [[nodiscard]] double log_denominator() const;
};

/// Adaptive quadrature of the Boltzmann integrals. The shift is the minimum
/// of f over each pass's quadrature grid; passes double the nodes per axis
/// until the expectation and log-denominator settle to rel_tol.
BoltzmannIntegrals boltzmann_integrals(const Polynomial& f, const Box& box, double t, double rel_tol = 1e-9);

/// E_{X ~ P_{f/t}}[f(X)].
double boltzmann_expectation(const Polynomial& f, const Box& box, double t, double rel_tol = 1e-9);

/// Boltzmann bound at the scheduled temperature for level r. fhat_override
/// replaces the computed fhat_max (used to reproduce published constants).
BoundReport sa_bound(const Polynomial& f, const Box& box, std::uint32_t r,
                     std::optional<double> fhat_override = std::nullopt, std::string function = {});

struct LiftedIdentity {
  /// E over the lifted body, assembled from the closed-form integrals.
  double lhs = 0.0;
  /// E_K + t.
  double rhs = 0.0;
  double gap = 0.0;
  double expectation = 0.0;
};

/// Checks that lifting f to {(x, y) : x in K, f(x) <= y <= E_K} shifts the
/// Boltzmann expectation of y by exactly t.
LiftedIdentity lifted_identity_check(const Polynomial& f, const Box& box, double t);

}  // namespace boundscope
