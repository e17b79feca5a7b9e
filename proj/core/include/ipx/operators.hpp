#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ipx/linalg.hpp"

namespace ipx {

/// Square n x n matrix, row-major.
template <class F>
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, F{}) {}
  std::size_t size() const { return n_; }
  F& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  std::size_t n_;
  std::vector<F> data_;
};

/// coeff * (left ⊗ right), acting as w -> coeff <w, right> left.
template <class F>
struct RankOneTerm {
  F coeff;
  BasicVec<F> left;
  BasicVec<F> right;
};

/// T = sum_i c_i (u_i ⊗ v_i) + mu I on a coordinate space of fixed dimension.
template <class F>
class BasicOperator {
 public:
  BasicOperator(std::size_t dim, std::vector<RankOneTerm<F>> terms, F shift)
      : dim_(dim), terms_(std::move(terms)), shift_(std::move(shift)) {
    if (dim_ == 0) throw std::invalid_argument("operator dimension must be at least 1");
    for (const auto& t : terms_) {
      if (t.left.dim() != dim_ || t.right.dim() != dim_) throw std::invalid_argument("dimension mismatch");
    }
  }

  static BasicOperator identity(std::size_t dim) { return BasicOperator(dim, {}, F(1)); }
  static BasicOperator zero(std::size_t dim) { return BasicOperator(dim, {}, F{}); }

  std::size_t dim() const { return dim_; }
  const std::vector<RankOneTerm<F>>& terms() const { return terms_; }
  const F& shift() const { return shift_; }

  BasicVec<F> apply(const BasicVec<F>& w) const {
    if (w.dim() != dim_) throw std::invalid_argument("dimension mismatch");
    BasicVec<F> out = shift_ * w;
    for (const auto& t : terms_) out += (t.coeff * inner(w, t.right)) * t.left;
    return out;
  }

  DenseMatrix<F> dense() const {
    DenseMatrix<F> m(dim_);
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < dim_; ++i) {
        const F ci = t.coeff * t.left[i];
        for (std::size_t j = 0; j < dim_; ++j) m(i, j) += ci * conj(t.right[j]);
      }
    }
    for (std::size_t i = 0; i < dim_; ++i) m(i, i) += shift_;
    return m;
  }

  BasicOperator adjoint() const {
    std::vector<RankOneTerm<F>> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back({conj(t.coeff), t.right, t.left});
    return BasicOperator(dim_, std::move(terms), conj(shift_));
  }

 private:
  std::size_t dim_;
  std::vector<RankOneTerm<F>> terms_;
  F shift_;
};

using Operator = BasicOperator<Complex>;
using ExactOperator = BasicOperator<GaussianRational>;

template <class F>
BasicOperator<F> rank_one(const BasicVec<F>& x, const BasicVec<F>& y) {
  x.check_dim(y);
  return BasicOperator<F>(x.dim(), {{F(1), x, y}}, F{});
}

/// d_i = sum_j |<z_i, z_j>|. Float backend.
std::vector<double> selberg_weights(const std::vector<Vec>& zs);
/// Exact backend; throws std::domain_error when some |<z_i, z_j>| is irrational.
std::vector<Rational> selberg_weights(const std::vector<ExactVec>& zs);

/// S_Z = sum_i (z_i ⊗ z_i) / d_i.
Operator selberg(const std::vector<Vec>& zs);
ExactOperator selberg(const std::vector<ExactVec>& zs);

/// sum_k s_k T_k + shift I.
template <class F>
BasicOperator<F> combine(const std::vector<std::pair<F, BasicOperator<F>>>& parts, const F& shift, std::size_t dim) {
  std::vector<RankOneTerm<F>> terms;
  F mu = shift;
  for (const auto& [s, op] : parts) {
    if (op.dim() != dim) throw std::invalid_argument("dimension mismatch");
    for (const auto& t : op.terms()) terms.push_back({s * t.coeff, t.left, t.right});
    mu += s * op.shift();
  }
  return BasicOperator<F>(dim, std::move(terms), mu);
}

template <class F>
BasicOperator<F> combine(const std::vector<std::pair<F, BasicOperator<F>>>& parts, const F& shift) {
  if (parts.empty()) throw std::invalid_argument("combine without parts needs an explicit dimension");
  return combine(parts, shift, parts.front().second.dim());
}

/// T ∘ U, kept in structured form.
template <class F>
BasicOperator<F> compose(const BasicOperator<F>& t, const BasicOperator<F>& u) {
  if (t.dim() != u.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<RankOneTerm<F>> terms;
  for (const auto& ti : t.terms()) {
    for (const auto& uj : u.terms()) {
      F c = ti.coeff * uj.coeff * inner(uj.left, ti.right);
      if (!is_zero(c)) terms.push_back({std::move(c), ti.left, uj.right});
    }
  }
  if (!is_zero(u.shift())) {
    for (const auto& ti : t.terms()) terms.push_back({u.shift() * ti.coeff, ti.left, ti.right});
  }
  if (!is_zero(t.shift())) {
    for (const auto& uj : u.terms()) terms.push_back({t.shift() * uj.coeff, uj.left, uj.right});
  }
  return BasicOperator<F>(t.dim(), std::move(terms), t.shift() * u.shift());
}

/// Largest singular value. Structured route: orthonormalise the span of all term
/// vectors through their Gram matrix, reduce to a k x k problem and add |mu| when
/// the span is a proper subspace.
double spectral_norm(const Operator& t);
double spectral_norm(const ExactOperator& t);
/// Largest singular value of the dense realisation (SVD).
double spectral_norm_dense(const Operator& t);
double spectral_norm_dense(const DenseMatrix<Complex>& m);

/// Entrywise max |T - T*| <= tolerance(max |T_ij|).
bool is_self_adjoint(const Operator& t, const TolerancePolicy& policy = {});
/// Self-adjoint and lambda_min >= -tolerance(max |T_ij|).
bool is_positive(const Operator& t, const TolerancePolicy& policy = {});

/// max_ij |A_ij - B_ij|.
double max_abs_diff(const DenseMatrix<Complex>& a, const DenseMatrix<Complex>& b);

Operator to_float(const ExactOperator& t);
Vec to_float(const ExactVec& v);

}  // namespace ipx
