#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boundscope/linalg.hpp"
#include "boundscope/moments.hpp"
#include "boundscope/poly.hpp"
#include "boundscope/report.hpp"

namespace boundscope {

enum class BasisKind { monomial, orthonormal };

std::string_view to_string(BasisKind kind);
BasisKind parse_basis_kind(std::string_view text);

/// The pencil (A, B) whose smallest generalized eigenvalue is the
/// degree-2r measure-based upper bound. Rows and columns follow `basis`;
/// for the orthonormal kind member alpha stands for the product of
/// orthonormal Legendre polynomials of degrees alpha_i on the box axes.
struct MatrixPair {
  Matrix a;
  Matrix b;
  MonomialBasis basis;
  BasisKind kind;
  Box box;
};

MatrixPair assemble_pair(const Polynomial& f, const Box& box, std::uint32_t r,
                         BasisKind kind = BasisKind::orthonormal);

struct GeneralizedEigenpair {
  double value = 0.0;
  /// Normalized so that v^T B v = 1.
  std::vector<double> vector;
  /// Second smallest eigenvalue, when the pencil has order >= 2.
  std::optional<double> next_value;
  /// Largest eigenvalue magnitude of the pencil.
  double spectral_radius = 0.0;
};

/// Smallest eigenvalue of A v = lambda B v via B = L L^T and a symmetric
/// eigensolve of L^{-1} A L^{-T}. Throws ConditioningError if B is not
/// numerically positive definite.
GeneralizedEigenpair solve_smallest_gev(const Matrix& a, const Matrix& b);
GeneralizedEigenpair solve_smallest_gev(const MatrixPair& pair);

/// Measure-based upper bound over sum-of-squares densities of degree 2r.
BoundReport lasserre_upper_bound(const Polynomial& f, const Box& box, std::uint32_t r,
                                 BasisKind kind = BasisKind::orthonormal, std::string function = {});

/// The minimizing sum-of-squares density, normalized to integrate to 1.
Polynomial optimal_density(const Polynomial& f, const Box& box, std::uint32_t r,
                           BasisKind kind = BasisKind::orthonormal);

/// Degree-k Legendre polynomial on the interval, scaled to unit L2 norm.
/// Returned as a polynomial in x_{axis+1} among n variables.
Polynomial orthonormal_legendre(std::uint32_t k, const Interval& interval, std::size_t n, std::size_t axis);

/// Values of the orthonormal Legendre polynomials of degree 0..max_degree at x.
std::vector<double> orthonormal_legendre_values(std::uint32_t max_degree, double x, const Interval& interval);

}  // namespace boundscope
