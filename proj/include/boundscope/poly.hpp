#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace boundscope {

/// Exponent vector alpha of a monomial x^alpha = prod_i x_i^alpha_i.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : exps_(n, 0) {}
  ExponentVector(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  explicit ExponentVector(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  /// e_i, the exponent vector of the single variable x_i.
  static ExponentVector unit(std::size_t n, std::size_t i);

  [[nodiscard]] std::size_t size() const noexcept { return exps_.size(); }
  [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  [[nodiscard]] std::uint32_t total_degree() const noexcept;

  [[nodiscard]] auto begin() const noexcept { return exps_.begin(); }
  [[nodiscard]] auto end() const noexcept { return exps_.end(); }

  ExponentVector& operator+=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order: lower total degree first; within a degree the
/// vector with the larger leading exponent comes first, so x1 precedes x2.
struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Sparse real polynomial in a fixed number of variables.
///
/// Terms are kept in graded-lex order so iteration and floating-point
/// summation are reproducible. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, double, GradedLexLess>;

  /// Zero polynomial in n variables.
  explicit Polynomial(std::size_t n);
  Polynomial(std::size_t n, Terms terms);

  static Polynomial constant(std::size_t n, double c);
  /// The coordinate function x_{i+1} (0-based index i).
  static Polynomial variable(std::size_t n, std::size_t i);
  static Polynomial monomial(const ExponentVector& alpha, double c = 1.0);

  [[nodiscard]] std::size_t dimension() const noexcept { return n_; }
  /// Maximum total degree of a stored term; 0 for the zero polynomial.
  [[nodiscard]] std::uint32_t degree() const noexcept;
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const noexcept { return degree() == 0; }
  [[nodiscard]] double coefficient(const ExponentVector& alpha) const;
  /// Largest absolute coefficient; 0 for the zero polynomial.
  [[nodiscard]] double max_abs_coefficient() const noexcept;

  /// Evaluates at point; throws InputError on a length mismatch.
  [[nodiscard]] double operator()(std::span<const double> point) const;

  /// Partial derivative with respect to x_{i+1}.
  [[nodiscard]] Polynomial derivative(std::size_t i) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= -1.0; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void prune();

  std::size_t n_;
  Terms terms_;
};

/// Coefficients with magnitude below this are treated as exact zeros.
inline constexpr double kZeroCoefficient = 1e-300;

double eval(const Polynomial& p, std::span<const double> point);
Polynomial multiply(const Polynomial& p, const Polynomial& q);
/// p^k by repeated squaring; p^0 is the constant 1.
Polynomial power(const Polynomial& p, unsigned k);
/// sum_k coeffs[k] * p^k, accumulated in Horner form.
Polynomial compose_univariate(std::span<const double> coeffs, const Polynomial& p);

}  // namespace boundscope
