#include "ipx/operators.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/Dense>

namespace ipx {

namespace {

using MatC = Eigen::MatrixXcd;

MatC to_eigen(const DenseMatrix<Complex>& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  MatC out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return out;
}

Eigen::VectorXcd to_eigen(const Vec& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.dim()));
  for (std::size_t i = 0; i < v.dim(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

double max_abs_entry(const MatC& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double largest_singular_value(const MatC& m) {
  if (m.size() == 0) return 0.0;
  const double scale = max_abs_entry(m);
  const MatC herm_defect = m - m.adjoint();
  if (max_abs_entry(herm_defect) <= 1e-13 * std::max(1.0, scale)) {
    Eigen::SelfAdjointEigenSolver<MatC> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::JacobiSVD<MatC> svd(m);
  return svd.singularValues()(0);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<double> selberg_weights(const std::vector<Vec>& zs) {
  if (zs.empty()) throw std::invalid_argument("Selberg set must be nonempty");
  for (const auto& z : zs) {
    if (is_zero_vec(z)) throw std::invalid_argument("Selberg set must contain nonzero vectors");
  }
  const auto g = gram(zs);
  std::vector<double> d(zs.size(), 0.0);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = 0; j < zs.size(); ++j) d[i] += std::abs(g(i, j));
  }
  return d;
}

std::vector<Rational> selberg_weights(const std::vector<ExactVec>& zs) {
  if (zs.empty()) throw std::invalid_argument("Selberg set must be nonempty");
  for (const auto& z : zs) {
    if (is_zero_vec(z)) throw std::invalid_argument("Selberg set must contain nonzero vectors");
  }
  const auto g = gram(zs);
  std::vector<Rational> d(zs.size(), Rational(0));
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = 0; j < zs.size(); ++j) {
      auto m = rational_sqrt(abs2(g(i, j)));
      if (!m) throw std::domain_error("Selberg weight is irrational on the exact backend");
      d[i] += *m;
    }
  }
  return d;
}

Operator selberg(const std::vector<Vec>& zs) {
  const auto d = selberg_weights(zs);
  std::vector<RankOneTerm<Complex>> terms;
  terms.reserve(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) terms.push_back({Complex(1.0 / d[i], 0.0), zs[i], zs[i]});
  return Operator(zs.front().dim(), std::move(terms), Complex{});
}

ExactOperator selberg(const std::vector<ExactVec>& zs) {
  const auto d = selberg_weights(zs);
  std::vector<RankOneTerm<GaussianRational>> terms;
  terms.reserve(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    terms.push_back({GaussianRational(Rational(1) / d[i], 0), zs[i], zs[i]});
  }
  return ExactOperator(zs.front().dim(), std::move(terms), GaussianRational{});
}

double spectral_norm(const Operator& t) {
  const auto n = static_cast<Eigen::Index>(t.dim());
  const double mu = std::abs(t.shift());
  const auto m = static_cast<Eigen::Index>(t.terms().size());
  if (m == 0) return mu;

  MatC left(n, m), right(n, m), y(n, 2 * m);
  Eigen::VectorXcd coeff(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto& term = t.terms()[static_cast<std::size_t>(k)];
    left.col(k) = to_eigen(term.left);
    right.col(k) = to_eigen(term.right);
    coeff(k) = term.coeff;
  }
  y << left, right;

  // Orthonormal basis of span(y) from the eigendecomposition of its Gram matrix.
  const MatC g = y.adjoint() * y;
  Eigen::SelfAdjointEigenSolver<MatC> es(g);
  const auto& lambda = es.eigenvalues();
  const double lmax = lambda.maxCoeff();
  if (!(lmax > 0.0)) return mu;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > 1e-12 * lmax) keep.push_back(i);
  }
  const auto k = static_cast<Eigen::Index>(keep.size());
  MatC basis(2 * m, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    basis.col(c) = es.eigenvectors().col(keep[static_cast<std::size_t>(c)]) / std::sqrt(lambda(keep[static_cast<std::size_t>(c)]));
  }
  const MatC q = y * basis;

  // Restriction to span(y): M = (Q^H U) C (Q^H V)^H + mu I_k.
  const MatC lq = q.adjoint() * left;
  const MatC rq = q.adjoint() * right;
  MatC reduced = lq * coeff.asDiagonal() * rq.adjoint();
  reduced += t.shift() * MatC::Identity(k, k);

  double sigma = largest_singular_value(reduced);
  if (k < n) sigma = std::max(sigma, mu);
  return sigma;
}

double spectral_norm(const ExactOperator& t) { return spectral_norm(to_float(t)); }

double spectral_norm_dense(const DenseMatrix<Complex>& m) {
  const MatC a = to_eigen(m);
  Eigen::JacobiSVD<MatC> svd(a);
  return svd.singularValues()(0);
}

double spectral_norm_dense(const Operator& t) { return spectral_norm_dense(t.dense()); }

bool is_self_adjoint(const Operator& t, const TolerancePolicy& policy) {
  const MatC a = to_eigen(t.dense());
  return max_abs_entry(a - a.adjoint()) <= policy.tolerance(max_abs_entry(a));
}

bool is_positive(const Operator& t, const TolerancePolicy& policy) {
  const MatC a = to_eigen(t.dense());
  const double scale = max_abs_entry(a);
  if (max_abs_entry(a - a.adjoint()) > policy.tolerance(scale)) return false;
  Eigen::SelfAdjointEigenSolver<MatC> es(0.5 * (a + a.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -policy.tolerance(scale);
}

double max_abs_diff(const DenseMatrix<Complex>& a, const DenseMatrix<Complex>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  }
  return worst;
}

Vec to_float(const ExactVec& v) {
  std::vector<Complex> e(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) e[i] = to_complex(v[i]);
  return Vec(std::move(e), v.is_real());
}

Operator to_float(const ExactOperator& t) {
  std::vector<RankOneTerm<Complex>> terms;
  terms.reserve(t.terms().size());
  for (const auto& term : t.terms()) terms.push_back({to_complex(term.coeff), to_float(term.left), to_float(term.right)});
  return Operator(t.dim(), std::move(terms), to_complex(t.shift()));
}

}  // namespace ipx
