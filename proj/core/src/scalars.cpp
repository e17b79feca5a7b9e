#include "ipx/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ipx {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return GaussianRational(Rational(num, den), 0);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational den = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(den) == 0) throw std::domain_error("division by zero");
  Rational re = (re_ * o.re_ + im_ * o.im_) / den;
  Rational im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::str() const {
  std::string s = re_.get_str();
  if (sgn(im_) >= 0) s += "+";
  s += im_.get_str();
  s += "i";
  return s;
}

GaussianRational conj(const GaussianRational& z) { return {z.re(), -z.im()}; }

Rational abs2(const GaussianRational& z) { return z.re() * z.re() + z.im() * z.im(); }

Complex to_complex(const GaussianRational& z) { return {z.re().get_d(), z.im().get_d()}; }

const Complex& Scalar::as_float() const {
  if (const auto* z = std::get_if<Complex>(&value_)) return *z;
  throw std::logic_error("scalar is not on the float backend");
}

const GaussianRational& Scalar::as_exact() const {
  if (const auto* z = std::get_if<GaussianRational>(&value_)) return *z;
  throw std::logic_error("scalar is not on the exact backend");
}

Complex Scalar::approx() const {
  return std::visit([](const auto& z) { return to_complex(z); }, value_);
}

Scalar Scalar::conj() const {
  return std::visit([](const auto& z) -> Scalar { return Scalar(ipx::conj(z)); }, value_);
}

Scalar Scalar::abs2() const {
  if (backend() == Backend::Float) return Scalar(Complex(ipx::abs2(as_float()), 0.0));
  return Scalar(GaussianRational(ipx::abs2(as_exact()), 0));
}

namespace {

template <class Op>
Scalar combine_same_backend(const Scalar& a, const Scalar& b, Op op) {
  if (a.backend() != b.backend()) throw std::invalid_argument("backend mismatch");
  if (a.backend() == Backend::Float) return Scalar(op(a.as_float(), b.as_float()));
  return Scalar(op(a.as_exact(), b.as_exact()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine_same_backend(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine_same_backend(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine_same_backend(a, b, [](const auto& x, const auto& y) { return x * y; });
}

void TolerancePolicy::validate() const {
  if (!(eps_rel > 0.0) || !std::isfinite(eps_rel) || !(eps_abs > 0.0) || !std::isfinite(eps_abs)) {
    throw std::invalid_argument("tolerance epsilons must be positive and finite");
  }
}

double TolerancePolicy::tolerance(double scale) const {
  return eps_abs + eps_rel * std::max(1.0, std::abs(scale));
}

bool approx_le(double lhs, double rhs, double scale, const TolerancePolicy& policy) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs) || !std::isfinite(scale)) {
    throw std::domain_error("non-finite comparison");
  }
  return lhs <= rhs + policy.tolerance(scale);
}

bool approx_eq(double lhs, double rhs, double scale, const TolerancePolicy& policy) {
  return approx_le(lhs, rhs, scale, policy) && approx_le(rhs, lhs, scale, policy);
}

bool exact_eq(const Scalar& a, const Scalar& b) {
  if (a.backend() != Backend::Exact || b.backend() != Backend::Exact) {
    throw std::invalid_argument("exact comparison requires exact backend");
  }
  return is_zero(a.as_exact() - b.as_exact());
}

}  // namespace ipx
