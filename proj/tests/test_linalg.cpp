#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "boundscope/errors.hpp"
#include "boundscope/linalg.hpp"

using namespace boundscope;

namespace {

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = g(rng);
  }
  return a;
}

}  // namespace

TEST_CASE("symmetric eigen matches Eigen's solver") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 2u, 3u, 10u, 57u, 150u}) {
    const Matrix a = random_symmetric(rng, n);
    const SymmetricEigen mine = symmetric_eigen(a);
    Eigen::MatrixXd ea(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) ea(i, j) = a(i, j);
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> reference(ea);
    for (std::size_t k = 0; k < n; ++k) CHECK(mine.values[k] == doctest::Approx(reference.eigenvalues()(k)).epsilon(1e-11));
    // A v = lambda v for every pair.
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<double> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = mine.vectors(i, k);
      auto av = multiply(a, v);
      for (std::size_t i = 0; i < n; ++i) av[i] -= mine.values[k] * v[i];
      CHECK(norm2(av) <= 1e-11 * std::max(1.0, a.frobenius_norm()));
      CHECK(norm2(v) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("symmetric eigen on structured matrices") {
  CHECK(symmetric_eigen(Matrix::identity(4)).values == std::vector<double>(4, 1.0));
  Matrix zero(3, 3);
  CHECK(symmetric_eigen(zero).values == std::vector<double>(3, 0.0));
  Matrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  const auto values = symmetric_eigen(swap).values;
  CHECK(values[0] == doctest::Approx(-1.0));
  CHECK(values[1] == doctest::Approx(1.0));
}

TEST_CASE("cholesky") {
  std::mt19937_64 rng(2);
  const std::size_t n = 30;
  const Matrix g = random_symmetric(rng, n);
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) b(i, j) += g(i, k) * g(j, k);
    }
    b(i, i) += 1.0;
  }
  const Matrix l = cholesky(b);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += l(i, k) * l(j, k);
      CHECK(s == doctest::Approx(b(i, j)).epsilon(1e-12).scale(1.0));
    }
  }

  Matrix indefinite = Matrix::identity(2);
  indefinite(1, 1) = -1.0;
  CHECK_THROWS_AS(cholesky(indefinite), ConditioningError);
}
