#pragma once

// Hand-rolled generators shared by the unit and acceptance tests.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ipx/linalg.hpp"
#include "ipx/operators.hpp"

namespace ipx::testing {

inline Vec cvec(std::initializer_list<Complex> e, bool real = false) { return Vec(std::vector<Complex>(e), real); }
inline Vec rvec(std::initializer_list<double> e) {
  std::vector<Complex> v;
  for (double x : e) v.emplace_back(x, 0.0);
  return Vec(std::move(v), true);
}

inline Vec random_vec(std::size_t dim, Rng& rng, bool real = false) { return gaussian_vec(dim, real, rng); }

inline Vec random_unit(std::size_t dim, Rng& rng, bool real = false) {
  Vec v = gaussian_vec(dim, real, rng);
  v *= Complex(1.0 / norm(v), 0.0);
  return v;
}

inline std::vector<Vec> random_family(std::size_t size, std::size_t dim, Rng& rng, bool real = false) {
  std::vector<Vec> zs;
  for (std::size_t i = 0; i < size; ++i) zs.push_back(gaussian_vec(dim, real, rng));
  return zs;
}

inline Complex random_scalar(Rng& rng, double radius = 3.0) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(rng), u(rng)};
}

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Gaussian rational p/q + (r/s) i with small numerators and denominators.
inline GaussianRational random_gq(Rng& rng, bool real = false) {
  std::uniform_int_distribution<long> num(-7, 7);
  std::uniform_int_distribution<long> den(1, 6);
  Rational re(num(rng), den(rng));
  re.canonicalize();
  Rational im(0);
  if (!real) {
    im = Rational(num(rng), den(rng));
    im.canonicalize();
  }
  return GaussianRational(re, im);
}

inline ExactVec random_exact(std::size_t dim, Rng& rng, bool real = false, bool nonzero = true) {
  for (;;) {
    std::vector<GaussianRational> e;
    for (std::size_t i = 0; i < dim; ++i) e.push_back(random_gq(rng, real));
    ExactVec v(std::move(e), real);
    if (!nonzero || !is_zero_vec(v)) return v;
  }
}

/// Haar-ish random unitary from Gram-Schmidt on a complex Gaussian matrix.
inline std::vector<Vec> random_unitary_columns(std::size_t dim, Rng& rng) {
  std::vector<Vec> cols;
  while (cols.size() < dim) {
    Vec v = gaussian_vec(dim, false, rng);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : cols) v -= inner(v, q) * q;
    }
    const double n = norm(v);
    if (n < 1e-8) continue;
    v *= Complex(1.0 / n, 0.0);
    cols.push_back(std::move(v));
  }
  return cols;
}

/// U w where U has the given orthonormal columns.
inline Vec apply_columns(const std::vector<Vec>& cols, const Vec& w) {
  Vec out = Vec::zeros(cols.front().dim(), false);
  for (std::size_t j = 0; j < w.dim(); ++j) out += w[j] * cols[j];
  return out;
}

/// Plain triple loop over an explicit matrix, independent of the structured path.
inline DenseMatrix<Complex> dense_product(const DenseMatrix<Complex>& a, const DenseMatrix<Complex>& b) {
  const std::size_t n = a.size();
  DenseMatrix<Complex> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

/// Largest singular value by power iteration on A^H A; an oracle independent of Eigen.
inline double power_norm(const DenseMatrix<Complex>& a, int iters = 2000) {
  const std::size_t n = a.size();
  std::vector<Complex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(1.0 + 0.1 * static_cast<double>(i), 0.3 * static_cast<double>(i % 3));
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    std::vector<Complex> w(n), u(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) w[i] += a(i, j) * v[j];
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) u[i] += std::conj(a(j, i)) * w[j];
    }
    double nu = 0.0;
    for (auto z : u) nu += std::norm(z);
    nu = std::sqrt(nu);
    if (nu == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / nu;
    lambda = nu;
  }
  return std::sqrt(lambda);
}

}  // namespace ipx::testing
