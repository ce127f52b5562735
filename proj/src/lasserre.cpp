#include "boundscope/lasserre.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "boundscope/errors.hpp"

namespace boundscope {

std::string_view to_string(BasisKind kind) {
  return kind == BasisKind::monomial ? "monomial" : "orthonormal";
}

BasisKind parse_basis_kind(std::string_view text) {
  if (text == "monomial") return BasisKind::monomial;
  if (text == "orthonormal") return BasisKind::orthonormal;
  throw InputError("unknown basis '" + std::string(text) + "' (expected monomial or orthonormal)");
}

std::vector<double> orthonormal_legendre_values(std::uint32_t max_degree, double x, const Interval& interval) {
  const double s = (2.0 * x - interval.lo - interval.hi) / interval.length();
  std::vector<double> p(max_degree + 1);
  p[0] = 1.0;
  if (max_degree >= 1) p[1] = s;
  for (std::uint32_t k = 2; k <= max_degree; ++k) {
    p[k] = ((2.0 * k - 1.0) * s * p[k - 1] - (k - 1.0) * p[k - 2]) / k;
  }
  for (std::uint32_t k = 0; k <= max_degree; ++k) p[k] *= std::sqrt((2.0 * k + 1.0) / interval.length());
  return p;
}

Polynomial orthonormal_legendre(std::uint32_t k, const Interval& interval, std::size_t n, std::size_t axis) {
  // Legendre recurrence in the affine variable s = (2x - lo - hi) / (hi - lo).
  const Polynomial s = Polynomial::variable(n, axis) * (2.0 / interval.length()) +
                       Polynomial::constant(n, -(interval.lo + interval.hi) / interval.length());
  Polynomial previous = Polynomial::constant(n, 1.0);
  Polynomial current = s;
  if (k == 0) current = previous;
  for (std::uint32_t j = 2; j <= k; ++j) {
    Polynomial next = (s * current) * ((2.0 * j - 1.0) / j) - previous * ((j - 1.0) / j);
    previous = std::move(current);
    current = std::move(next);
  }
  return current * std::sqrt((2.0 * k + 1.0) / interval.length());
}

namespace {

MatrixPair assemble_monomial(const Polynomial& f, const Box& box, MonomialBasis basis) {
  const std::size_t size = basis.size();
  Matrix a(size, size);
  Matrix b(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const ExponentVector ab = basis[i] + basis[j];
      double aij = 0.0;
      for (const auto& [delta, c] : f.terms()) aij += c * box_moment(box, ab + delta);
      a(i, j) = a(j, i) = aij;
      b(i, j) = b(j, i) = box_moment(box, ab);
    }
  }
  return {std::move(a), std::move(b), std::move(basis), BasisKind::monomial, box};
}

MatrixPair assemble_orthonormal(const Polynomial& f, const Box& box, MonomialBasis basis) {
  const std::uint32_t r = basis.degree();
  const std::size_t n = box.dimension();
  const std::size_t nodes = (2 * r + f.degree() + 2 + 1) / 2;
  const TensorGrid grid(box, nodes);

  // Per-axis basis values at each 1-D node.
  std::vector<std::vector<std::vector<double>>> axis_values(n);
  for (std::size_t axis = 0; axis < n; ++axis) {
    for (double x : grid.rule(axis).nodes) axis_values[axis].push_back(orthonormal_legendre_values(r, x, box[axis]));
  }

  const std::size_t size = basis.size();
  const std::size_t count = grid.node_count();
  Matrix phi(count, size);
  std::vector<double> fw(count);
  std::vector<double> w(count);
  std::vector<std::size_t> index(n, 0);
  std::size_t node = 0;
  grid.for_each([&](std::span<const double> point, double weight) {
    for (std::size_t k = 0; k < size; ++k) {
      double v = 1.0;
      for (std::size_t axis = 0; axis < n; ++axis) v *= axis_values[axis][index[axis]][basis[k][axis]];
      phi(node, k) = v;
    }
    w[node] = weight;
    fw[node] = weight * f(point);
    ++node;
    for (std::size_t axis = n; axis-- > 0;) {
      if (++index[axis] < nodes) break;
      index[axis] = 0;
    }
  });

  Matrix a(size, size);
  Matrix b(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double aij = 0.0;
      double bij = 0.0;
      for (std::size_t q = 0; q < count; ++q) {
        const double pp = phi(q, i) * phi(q, j);
        aij += fw[q] * pp;
        bij += w[q] * pp;
      }
      a(i, j) = a(j, i) = aij;
      b(i, j) = b(j, i) = bij;
    }
  }
  return {std::move(a), std::move(b), std::move(basis), BasisKind::orthonormal, box};
}

// Solves L X = M column by column, overwriting m with X.
void forward_solve(const Matrix& l, Matrix& m) {
  const std::size_t n = l.rows();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = m(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * m(k, c);
      m(i, c) = s / l(i, i);
    }
  }
}

}  // namespace

MatrixPair assemble_pair(const Polynomial& f, const Box& box, std::uint32_t r, BasisKind kind) {
  if (f.dimension() != box.dimension()) throw InputError("polynomial dimension does not match box");
  MonomialBasis basis(box.dimension(), r);
  return kind == BasisKind::monomial ? assemble_monomial(f, box, std::move(basis))
                                     : assemble_orthonormal(f, box, std::move(basis));
}

GeneralizedEigenpair solve_smallest_gev(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n) throw InputError("pencil matrices must be square and equal size");
  if (n == 0) throw InputError("empty pencil");

  // Symmetric diagonal scaling leaves the eigenvalues unchanged and tames the
  // spread of magnitudes in moment matrices.
  std::vector<double> scale(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(b(i, i) > 0.0)) throw ConditioningError("B has a nonpositive diagonal entry; it is not positive definite");
    scale[i] = 1.0 / std::sqrt(b(i, i));
  }
  Matrix bs(n, n);
  Matrix as(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bs(i, j) = b(i, j) * scale[i] * scale[j];
      as(i, j) = a(i, j) * scale[i] * scale[j];
    }
  }

  const Matrix l = cholesky(bs);
  // C = L^{-1} A L^{-T}: X = L^{-1} A, then C = L^{-1} X^T.
  forward_solve(l, as);
  Matrix xt(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) xt(i, j) = as(j, i);
  }
  forward_solve(l, xt);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) xt(i, j) = xt(j, i) = 0.5 * (xt(i, j) + xt(j, i));
  }

  const SymmetricEigen eig = symmetric_eigen(xt);
  GeneralizedEigenpair result;
  result.value = eig.values.front();
  if (n > 1) result.next_value = eig.values[1];
  result.spectral_radius = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));

  // v = D L^{-T} y.
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = eig.vectors(i, 0);
  for (std::size_t i = n; i-- > 0;) {
    double s = v[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * v[k];
    v[i] = s / l(i, i);
  }
  for (std::size_t i = 0; i < n; ++i) v[i] *= scale[i];
  result.vector = std::move(v);
  return result;
}

GeneralizedEigenpair solve_smallest_gev(const MatrixPair& pair) { return solve_smallest_gev(pair.a, pair.b); }

BoundReport lasserre_upper_bound(const Polynomial& f, const Box& box, std::uint32_t r, BasisKind kind,
                                 std::string function) {
  const auto start = std::chrono::steady_clock::now();
  const MatrixPair pair = assemble_pair(f, box, r, kind);
  const GeneralizedEigenpair eig = solve_smallest_gev(pair);

  BoundReport report;
  report.method = Method::lasserre;
  report.function = std::move(function);
  report.r = r;
  report.value = eig.value;
  report.basis_size = pair.basis.size();
  const auto b_spectrum = symmetric_eigen(pair.b).values;
  if (b_spectrum.front() > 0.0) report.condition = b_spectrum.back() / b_spectrum.front();
  if (eig.next_value && *eig.next_value - eig.value < 1e-10 * eig.spectral_radius) {
    report.notes.emplace_back("smallest eigenvalue is (nearly) multiple; density not unique");
  }
  report.notes.emplace_back(std::string("basis=") + std::string(to_string(kind)));
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Polynomial optimal_density(const Polynomial& f, const Box& box, std::uint32_t r, BasisKind kind) {
  const MatrixPair pair = assemble_pair(f, box, r, kind);
  const GeneralizedEigenpair eig = solve_smallest_gev(pair);
  const std::size_t n = box.dimension();

  std::vector<std::vector<Polynomial>> axis_polys(n);
  if (kind == BasisKind::orthonormal) {
    for (std::size_t axis = 0; axis < n; ++axis) {
      for (std::uint32_t k = 0; k <= r; ++k) axis_polys[axis].push_back(orthonormal_legendre(k, box[axis], n, axis));
    }
  }

  Polynomial q(n);
  for (std::size_t i = 0; i < pair.basis.size(); ++i) {
    const ExponentVector& alpha = pair.basis[i];
    if (kind == BasisKind::monomial) {
      q += Polynomial::monomial(alpha, eig.vector[i]);
      continue;
    }
    Polynomial member = Polynomial::constant(n, eig.vector[i]);
    for (std::size_t axis = 0; axis < n; ++axis) member = member * axis_polys[axis][alpha[axis]];
    q += member;
  }
  Polynomial h = q * q;
  const double mass = integrate_polynomial(box, h);
  if (!(mass > 0.0)) throw NumericError("optimal density has nonpositive mass");
  return h * (1.0 / mass);
}

}  // namespace boundscope
