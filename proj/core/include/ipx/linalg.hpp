#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "ipx/scalars.hpp"

namespace ipx {

/// Finite-dimensional coordinate vector over Complex or GaussianRational.
/// A vector flagged real has every imaginary part equal to zero.
template <class F>
class BasicVec {
 public:
  explicit BasicVec(std::vector<F> entries, bool real = false) : entries_(std::move(entries)), real_(real) {
    if (entries_.empty()) throw std::invalid_argument("vector dimension must be at least 1");
    if (real_) {
      for (const auto& e : entries_) {
        if (!has_zero_imag(e)) throw std::invalid_argument("real vector has a nonzero imaginary part");
      }
    }
  }

  static BasicVec zeros(std::size_t dim, bool real = true) { return BasicVec(std::vector<F>(dim, F{}), real); }
  /// i-th standard basis vector.
  static BasicVec basis(std::size_t dim, std::size_t i) {
    std::vector<F> e(dim, F{});
    e.at(i) = F(1);
    return BasicVec(std::move(e), true);
  }

  std::size_t dim() const { return entries_.size(); }
  bool is_real() const { return real_; }
  const F& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const F> entries() const { return entries_; }

  BasicVec& operator+=(const BasicVec& o) {
    check_dim(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    real_ = real_ && o.real_;
    return *this;
  }
  BasicVec& operator-=(const BasicVec& o) {
    check_dim(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    real_ = real_ && o.real_;
    return *this;
  }
  BasicVec& operator*=(const F& s) {
    for (auto& e : entries_) e *= s;
    real_ = real_ && has_zero_imag(s);
    return *this;
  }

  friend BasicVec operator+(BasicVec a, const BasicVec& b) { return a += b; }
  friend BasicVec operator-(BasicVec a, const BasicVec& b) { return a -= b; }
  friend BasicVec operator*(const F& s, BasicVec v) { return v *= s; }
  friend BasicVec operator*(BasicVec v, const F& s) { return v *= s; }

  friend bool operator==(const BasicVec& a, const BasicVec& b) { return a.entries_ == b.entries_; }

  void check_dim(const BasicVec& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  }

 private:
  std::vector<F> entries_;
  bool real_;
};

using Vec = BasicVec<Complex>;
using ExactVec = BasicVec<GaussianRational>;

/// <x, y> = sum_i x_i conj(y_i): linear in the first slot, conjugate-linear in the second.
template <class F>
F inner(const BasicVec<F>& x, const BasicVec<F>& y) {
  x.check_dim(y);
  F acc{};
  for (std::size_t i = 0; i < x.dim(); ++i) acc += x[i] * conj(y[i]);
  return acc;
}

template <class F>
real_of_t<F> norm_sq(const BasicVec<F>& x) {
  real_of_t<F> acc{0};
  for (std::size_t i = 0; i < x.dim(); ++i) acc += abs2(x[i]);
  return acc;
}

/// Euclidean norm. Float backend only; the exact backend works with norm_sq.
double norm(const Vec& x);

template <class F>
bool is_zero_vec(const BasicVec<F>& x) {
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!is_zero(x[i])) return false;
  }
  return true;
}

/// y - (<y,z>/||z||^2) z.
template <class F>
BasicVec<F> project_out(const BasicVec<F>& y, const BasicVec<F>& z) {
  y.check_dim(z);
  const real_of_t<F> zz = norm_sq(z);
  if (zz == real_of_t<F>{0}) throw std::invalid_argument("projection onto zero vector");
  const F coeff = inner(y, z) / F(zz);
  return y - coeff * z;
}

/// Hermitian matrix G(i,j) = <z_i, z_j>, stored row-major.
template <class F>
class GramMatrix {
 public:
  GramMatrix(std::size_t n, std::vector<F> data) : n_(n), data_(std::move(data)) {}
  std::size_t size() const { return n_; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<F> data_;
};

template <class F>
GramMatrix<F> gram(std::span<const BasicVec<F>> zs) {
  const std::size_t n = zs.size();
  std::vector<F> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    zs[0].check_dim(zs[i]);
    for (std::size_t j = i; j < n; ++j) {
      g[i * n + j] = inner(zs[i], zs[j]);
      g[j * n + i] = conj(g[i * n + j]);
    }
  }
  return GramMatrix<F>(n, std::move(g));
}

template <class F>
GramMatrix<F> gram(const std::vector<BasicVec<F>>& zs) {
  return gram(std::span<const BasicVec<F>>(zs));
}

// ---------------------------------------------------------------------------
// Constrained random sampling
// ---------------------------------------------------------------------------

using Rng = std::mt19937_64;

/// Decorrelated child seed (splitmix64 finaliser over the pair).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

enum class ConstraintKind { Real, Nonzero, Unit, OrthogonalTo, InnerEqualsOne, NotProportionalTo };

struct Constraint {
  ConstraintKind kind;
  std::vector<Vec> refs;  // OrthogonalTo may carry several vectors; the others carry one or none

  static Constraint real() { return {ConstraintKind::Real, {}}; }
  static Constraint nonzero() { return {ConstraintKind::Nonzero, {}}; }
  static Constraint unit() { return {ConstraintKind::Unit, {}}; }
  static Constraint orthogonal_to(Vec z) { return {ConstraintKind::OrthogonalTo, {std::move(z)}}; }
  static Constraint orthogonal_to(std::vector<Vec> zs) { return {ConstraintKind::OrthogonalTo, std::move(zs)}; }
  static Constraint inner_equals_one(Vec z) { return {ConstraintKind::InnerEqualsOne, {std::move(z)}}; }
  static Constraint not_proportional_to(Vec w) { return {ConstraintKind::NotProportionalTo, {std::move(w)}}; }
};

using ConstraintSet = std::vector<Constraint>;

struct SamplerLimits {
  double nonzero_threshold = 1e-6;
  double proportional_threshold = 1e-6;
  double check_tolerance = 1e-9;
  int max_attempts = 100;
};

/// Standard (complex or real) Gaussian vector, then the constraints enforced in
/// list order. Every constraint is re-validated at the end; failures resample,
/// and after `max_attempts` failures std::runtime_error("infeasible constraint set")
/// is thrown.
Vec sample(std::size_t dim, const ConstraintSet& constraints, Rng& rng, const SamplerLimits& limits = {});
Vec sample(std::size_t dim, const ConstraintSet& constraints, std::uint64_t seed, const SamplerLimits& limits = {});

/// Deterministically re-imposes the constraints on an existing vector (no
/// resampling). Returns false when the result does not satisfy them.
bool enforce(Vec& v, const ConstraintSet& constraints, const SamplerLimits& limits = {});
bool satisfies(const Vec& v, const ConstraintSet& constraints, const SamplerLimits& limits = {});

Vec gaussian_vec(std::size_t dim, bool real, Rng& rng);

}  // namespace ipx
