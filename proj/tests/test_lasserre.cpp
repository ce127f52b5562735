#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "boundscope/annealing.hpp"
#include "boundscope/corpus.hpp"
#include "boundscope/errors.hpp"
#include "boundscope/lasserre.hpp"
#include "boundscope/parser.hpp"
#include "boundscope/search.hpp"

using namespace boundscope;

namespace {

const double kLinearRoot = (3.0 - std::sqrt(3.0)) / 6.0;  // root of 6 l^2 - 6 l + 1

double spectral_norm(const Matrix& a) {
  const auto values = symmetric_eigen(a).values;
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

double residual(const Matrix& a, const Matrix& b, const GeneralizedEigenpair& eig) {
  auto av = multiply(a, eig.vector);
  const auto bv = multiply(b, eig.vector);
  for (std::size_t i = 0; i < av.size(); ++i) av[i] -= eig.value * bv[i];
  return norm2(av);
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

TEST_CASE("assemble_pair monomial entries") {
  const auto x = Polynomial::variable(1, 0);
  const Box unit = Box::cube(1, 0.0, 1.0);
  const MatrixPair pair = assemble_pair(x, unit, 1, BasisKind::monomial);
  CHECK(pair.a(0, 0) == doctest::Approx(1.0 / 2));
  CHECK(pair.a(0, 1) == doctest::Approx(1.0 / 3));
  CHECK(pair.a(1, 0) == doctest::Approx(1.0 / 3));
  CHECK(pair.a(1, 1) == doctest::Approx(1.0 / 4));
  CHECK(pair.b(0, 0) == doctest::Approx(1.0));
  CHECK(pair.b(0, 1) == doctest::Approx(1.0 / 2));
  CHECK(pair.b(1, 1) == doctest::Approx(1.0 / 3));

  const auto motzkin = find_builtin("motzkin")->polynomial();
  const Box square = Box::cube(2, -1.0, 1.0);
  const MatrixPair trivial = assemble_pair(motzkin, square, 0, BasisKind::monomial);
  REQUIRE(trivial.a.rows() == 1);
  CHECK(trivial.a(0, 0) == doctest::Approx(integrate_polynomial(square, motzkin)));
  CHECK(trivial.b(0, 0) == 4.0);
}

TEST_CASE("assemble_pair orthonormal has identity B") {
  const auto motzkin = find_builtin("motzkin")->polynomial();
  const MatrixPair pair = assemble_pair(motzkin, Box::cube(2, -1.0, 1.0), 3);
  REQUIRE(pair.b.rows() == 10);
  CHECK(pair.a.max_asymmetry() == 0.0);
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = 0; j < 10; ++j) CHECK(std::abs(pair.b(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-12);
  }
  // Non-symmetric box too.
  const MatrixPair skew = assemble_pair(parse_polynomial("x1*x2 + x3^3", 3), Box({{0.0, 2.0}, {-3.0, 1.0}, {0.5, 0.75}}), 4);
  for (std::size_t i = 0; i < skew.b.rows(); ++i) {
    for (std::size_t j = 0; j < skew.b.cols(); ++j) CHECK(std::abs(skew.b(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-12);
  }
}

TEST_CASE("solve_smallest_gev small cases") {
  Matrix a(2, 2);
  a(0, 0) = 2.0;
  a(1, 1) = 5.0;
  auto eig = solve_smallest_gev(a, Matrix::identity(2));
  CHECK(eig.value == doctest::Approx(2.0));
  CHECK(std::abs(eig.vector[0]) == doctest::Approx(1.0));
  CHECK(eig.vector[1] == doctest::Approx(0.0));

  Matrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  CHECK(solve_smallest_gev(swap, Matrix::identity(2)).value == doctest::Approx(-1.0));

  const auto pair = assemble_pair(Polynomial::variable(1, 0), Box::cube(1, 0.0, 1.0), 1, BasisKind::monomial);
  eig = solve_smallest_gev(pair);
  CHECK(std::abs(eig.value - kLinearRoot) <= 1e-12);
  CHECK(dot(eig.vector, multiply(pair.b, eig.vector)) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix indefinite = Matrix::identity(2);
  indefinite(0, 1) = indefinite(1, 0) = 2.0;
  CHECK_THROWS_AS(solve_smallest_gev(Matrix::identity(2), indefinite), ConditioningError);
}

TEST_CASE("solve_smallest_gev residual and agreement with Eigen") {
  const Box square = Box::cube(2, -1.0, 1.0);
  for (const auto& fn : builtin_corpus()) {
    for (BasisKind kind : {BasisKind::monomial, BasisKind::orthonormal}) {
      const std::uint32_t r = kind == BasisKind::monomial ? 4 : 10;
      const MatrixPair pair = assemble_pair(fn.polynomial(), square, r, kind);
      const auto eig = solve_smallest_gev(pair);
      CHECK(residual(pair.a, pair.b, eig) <= 1e-8 * spectral_norm(pair.a));
      CHECK(dot(eig.vector, multiply(pair.b, eig.vector)) == doctest::Approx(1.0).epsilon(1e-9));

      const std::size_t n = pair.a.rows();
      Eigen::MatrixXd ea(n, n), eb(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          ea(i, j) = pair.a(i, j);
          eb(i, j) = pair.b(i, j);
        }
      }
      const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> reference(ea, eb);
      CHECK(eig.value == doctest::Approx(reference.eigenvalues()(0)).epsilon(1e-9));
    }
  }
}

TEST_CASE("lasserre_upper_bound values") {
  const auto motzkin = find_builtin("motzkin")->polynomial();
  const Box square = Box::cube(2, -1.0, 1.0);
  CHECK(std::abs(lasserre_upper_bound(motzkin, square, 6).value - 0.8010) <= 1e-3);
  CHECK(std::abs(lasserre_upper_bound(motzkin, square, 7).value - 0.7088) <= 1e-3);

  for (std::uint32_t r = 0; r <= 5; ++r) {
    CHECK(lasserre_upper_bound(Polynomial::constant(2, 3.25), square, r).value == doctest::Approx(3.25).epsilon(1e-12));
  }
  const auto x = Polynomial::variable(1, 0);
  for (BasisKind kind : {BasisKind::monomial, BasisKind::orthonormal}) {
    const auto report = lasserre_upper_bound(x, Box::cube(1, 0.0, 1.0), 1, kind);
    CHECK(std::abs(report.value - kLinearRoot) <= 1e-10);
    CHECK(report.basis_size == 2);
    REQUIRE(report.condition.has_value());
  }
}

TEST_CASE("optimal_density") {
  const Box square = Box::cube(2, -1.0, 1.0);
  const auto motzkin = find_builtin("motzkin")->polynomial();

  const auto uniform = optimal_density(motzkin, square, 0);
  CHECK(uniform.is_constant());
  CHECK(uniform.coefficient(ExponentVector(2)) == doctest::Approx(0.25));

  const Box unit = Box::cube(1, 0.0, 1.0);
  const auto x = Polynomial::variable(1, 0);
  for (BasisKind kind : {BasisKind::monomial, BasisKind::orthonormal}) {
    const auto h = optimal_density(x, unit, 1, kind);
    CHECK(h.degree() == 2);
    CHECK(integrate_polynomial(unit, h) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(integrate_polynomial(unit, x * h) - kLinearRoot) <= 1e-10);
  }

  const auto h7 = optimal_density(motzkin, square, 7);
  CHECK(std::abs(integrate_polynomial(square, h7) - 1.0) <= 1e-9);
  const double value = integrate_polynomial(square, motzkin * h7);
  const double lambda = lasserre_upper_bound(motzkin, square, 7).value;
  CHECK(std::abs(value - lambda) <= 1e-6 * lambda);
  CHECK(std::abs(value - 0.7088) <= 1e-3);
}

TEST_CASE("property: upper bound, monotone in r, basis invariant") {
  for (const auto& fn : builtin_corpus()) {
    const auto f = fn.polynomial();
    const double f_min = grid_minimum(f, fn.box());
    CHECK(f_min <= 1e-9);
    double previous = INFINITY;
    for (std::uint32_t r = 0; r <= 20; ++r) {
      const double value = lasserre_upper_bound(f, fn.box(), r).value;
      CHECK(value >= f_min - 1e-9);
      CHECK(value <= previous + 1e-9);
      previous = value;
      if (r <= 6) {
        const double monomial = lasserre_upper_bound(f, fn.box(), r, BasisKind::monomial).value;
        CHECK(std::abs(monomial - value) <= 1e-8);
      }
    }
  }
}

TEST_CASE("property: bounded rate for even levels") {
  // (value(2r) - f_min) r <= (n e + 1)(f_min + C1 diam + C2 diam^2)
  for (const auto& fn : builtin_corpus()) {
    const auto f = fn.polynomial();
    const Box box = fn.box();
    const Polynomial dx = f.derivative(0), dy = f.derivative(1);
    const Polynomial dxx = dx.derivative(0), dxy = dx.derivative(1), dyy = dy.derivative(1);
    const double c1 = maximize_on_box(box, [&](std::span<const double> p) { return std::hypot(dx(p), dy(p)); }).value;
    const double c2 = maximize_on_box(box, [&](std::span<const double> p) {
                        const double a = dxx(p), b = dxy(p), c = dyy(p);
                        const double mean = 0.5 * (a + c);
                        const double radius = std::hypot(0.5 * (a - c), b);
                        return std::max(std::abs(mean + radius), std::abs(mean - radius));
                      }).value;
    const double diam = box.diameter();
    const double c = (2.0 * std::numbers::e + 1.0) * (fn.f_min + c1 * diam + c2 * diam * diam);
    for (std::uint32_t r = 1; r <= 10; ++r) {
      const double value = lasserre_upper_bound(f, box, 2 * r).value;
      CHECK((value - fn.f_min) * r <= c);
    }
  }
}

TEST_CASE("brute-force oracle for one variable, r = 1") {
  // min over (a, b) on the unit circle of int f (a + b x)^2 / int (a + b x)^2.
  auto moment = [](double lo, double hi, int k) { return (std::pow(hi, k + 1) - std::pow(lo, k + 1)) / (k + 1); };
  struct Case {
    const char* expr;
    double lo, hi;
    std::vector<double> coeffs;  // f = sum coeffs[k] x^k
  };
  const std::vector<Case> cases = {{"x1", 0.0, 1.0, {0.0, 1.0}}, {"3*x1^2 - x1", -1.0, 2.0, {0.0, -1.0, 3.0}}};
  for (const auto& c : cases) {
    auto integral_f_times = [&](int k) {
      double s = 0.0;
      for (std::size_t j = 0; j < c.coeffs.size(); ++j) s += c.coeffs[j] * moment(c.lo, c.hi, static_cast<int>(j) + k);
      return s;
    };
    const double f0 = integral_f_times(0), f1 = integral_f_times(1), f2 = integral_f_times(2);
    const double m0 = moment(c.lo, c.hi, 0), m1 = moment(c.lo, c.hi, 1), m2 = moment(c.lo, c.hi, 2);
    auto quotient = [&](double theta) {
      const double a = std::cos(theta), b = std::sin(theta);
      return (a * a * f0 + 2 * a * b * f1 + b * b * f2) / (a * a * m0 + 2 * a * b * m1 + b * b * m2);
    };
    const int samples = 1'000'000;
    double best = INFINITY;
    double best_theta = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double theta = std::numbers::pi * i / samples;
      if (const double q = quotient(theta); q < best) {
        best = q;
        best_theta = theta;
      }
    }
    // Golden-section polish around the best sample.
    double lo = best_theta - std::numbers::pi / samples, hi = best_theta + std::numbers::pi / samples;
    for (int it = 0; it < 100; ++it) {
      const double m1t = lo + (hi - lo) / 3, m2t = hi - (hi - lo) / 3;
      if (quotient(m1t) < quotient(m2t)) hi = m2t;
      else lo = m1t;
    }
    best = std::min(best, quotient(0.5 * (lo + hi)));
    const double lambda = lasserre_upper_bound(parse_polynomial(c.expr, 1), Box::cube(1, c.lo, c.hi), 1).value;
    CHECK(std::abs(lambda - best) <= 1e-6);
  }
}

TEST_CASE("orthonormal Legendre polynomials") {
  // Expanded in monomials, an off-center interval loses digits to
  // cancellation, hence the looser tolerance there.
  for (const auto& [iv, tol] : {std::pair{Interval{-1.0, 1.0}, 1e-12}, std::pair{Interval{-0.5, 2.5}, 1e-6}}) {
    const Box box({iv});
    for (std::uint32_t j = 0; j <= 8; ++j) {
      const auto pj = orthonormal_legendre(j, iv, 1, 0);
      CHECK(pj.degree() == j);
      for (std::uint32_t k = 0; k <= j; ++k) {
        const double inner = integrate_polynomial(box, pj * orthonormal_legendre(k, iv, 1, 0));
        CHECK(std::abs(inner - (j == k ? 1.0 : 0.0)) <= tol);
      }
      const auto values = orthonormal_legendre_values(8, 0.7, iv);
      CHECK(values[j] == doctest::Approx(pj(std::vector<double>{0.7})).epsilon(1e-10));
    }
  }
}
