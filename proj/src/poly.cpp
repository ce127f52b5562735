#include "boundscope/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "boundscope/errors.hpp"

namespace boundscope {

namespace {

void require_same_dimension(const Polynomial& p, const Polynomial& q) {
  if (p.dimension() != q.dimension()) {
    throw InputError("polynomial dimension mismatch: " + std::to_string(p.dimension()) +
                     " vs " + std::to_string(q.dimension()));
  }
}

double int_power(double x, std::uint32_t k) {
  double result = 1.0;
  while (k != 0) {
    if (k & 1U) result *= x;
    x *= x;
    k >>= 1U;
  }
  return result;
}

}  // namespace

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
  ExponentVector e(n);
  e.exps_.at(i) = 1;
  return e;
}

std::uint32_t ExponentVector::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (other.size() != size()) throw InputError("exponent vector length mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

std::string ExponentVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < exps_.size(); ++i) out << (i ? "," : "") << exps_[i];
  out << ')';
  return out.str();
}

bool GradedLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.size() < b.size();
}

Polynomial::Polynomial(std::size_t n) : n_(n) {
  if (n == 0) throw InputError("polynomial dimension must be positive");
}

Polynomial::Polynomial(std::size_t n, Terms terms) : n_(n), terms_(std::move(terms)) {
  if (n == 0) throw InputError("polynomial dimension must be positive");
  for (const auto& [alpha, c] : terms_) {
    if (alpha.size() != n) throw InputError("exponent vector length does not match dimension");
  }
  prune();
}

Polynomial Polynomial::constant(std::size_t n, double c) {
  Polynomial p(n);
  if (std::abs(c) >= kZeroCoefficient) p.terms_.emplace(ExponentVector(n), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw InputError("variable index out of range");
  Polynomial p(n);
  p.terms_.emplace(ExponentVector::unit(n, i), 1.0);
  return p;
}

Polynomial Polynomial::monomial(const ExponentVector& alpha, double c) {
  Polynomial p(alpha.size());
  if (std::abs(c) >= kZeroCoefficient) p.terms_.emplace(alpha, c);
  return p;
}

std::uint32_t Polynomial::degree() const noexcept {
  // Graded order puts the highest degree last.
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

double Polynomial::coefficient(const ExponentVector& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (const auto& [alpha, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::operator()(std::span<const double> point) const {
  if (point.size() != n_) {
    throw InputError("evaluation point has length " + std::to_string(point.size()) +
                     ", polynomial has dimension " + std::to_string(n_));
  }
  double sum = 0.0;
  for (const auto& [alpha, c] : terms_) {
    double term = c;
    for (std::size_t i = 0; i < n_; ++i) {
      if (alpha[i] != 0) term *= int_power(point[i], alpha[i]);
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= n_) throw InputError("variable index out of range");
  Polynomial d(n_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha[i] == 0) continue;
    ExponentVector beta = alpha;
    beta[i] -= 1;
    d.terms_.emplace(std::move(beta), c * alpha[i]);
  }
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_dimension(*this, other);
  for (const auto& [alpha, c] : other.terms_) terms_[alpha] += c;
  prune();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_dimension(*this, other);
  for (const auto& [alpha, c] : other.terms_) terms_[alpha] -= c;
  prune();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto& [alpha, c] : terms_) c *= s;
  prune();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_dimension(a, b);
  Polynomial product(a.n_);
  for (const auto& [alpha, ca] : a.terms_) {
    for (const auto& [beta, cb] : b.terms_) product.terms_[alpha + beta] += ca * cb;
  }
  product.prune();
  return product;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  out.precision(17);
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    out << std::abs(c);
    for (std::size_t i = 0; i < n_; ++i) {
      if (alpha[i] == 0) continue;
      out << "*x" << (i + 1);
      if (alpha[i] > 1) out << '^' << alpha[i];
    }
  }
  return out.str();
}

void Polynomial::prune() {
  std::erase_if(terms_, [](const auto& term) { return std::abs(term.second) < kZeroCoefficient; });
}

double eval(const Polynomial& p, std::span<const double> point) { return p(point); }

Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial power(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.dimension(), 1.0);
  Polynomial base = p;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

Polynomial compose_univariate(std::span<const double> coeffs, const Polynomial& p) {
  Polynomial result(p.dimension());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result = result * p;
    result += Polynomial::constant(p.dimension(), *it);
  }
  return result;
}

}  // namespace boundscope
