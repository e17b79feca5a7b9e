#pragma once

#include <complex>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace ipx {

using Complex = std::complex<double>;
using Rational = mpq_class;

/// Complex number with rational real and imaginary parts. Arithmetic is exact
/// and every value is kept in canonical (reduced) form.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);
  /// num/den + 0i.
  static GaussianRational ratio(long num, long den);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

GaussianRational conj(const GaussianRational& z);
Rational abs2(const GaussianRational& z);
inline double abs2(const Complex& z) { return std::norm(z); }
inline Complex conj(const Complex& z) { return std::conj(z); }
Complex to_complex(const GaussianRational& z);
inline Complex to_complex(const Complex& z) { return z; }

inline bool is_zero(const Complex& z) { return z == Complex{}; }
inline bool is_zero(const GaussianRational& z) { return sgn(z.re()) == 0 && sgn(z.im()) == 0; }
inline bool has_zero_imag(const Complex& z) { return z.imag() == 0.0; }
inline bool has_zero_imag(const GaussianRational& z) { return sgn(z.im()) == 0; }

/// Real counterpart of a field type: double for Complex, Rational for GaussianRational.
template <class F>
struct real_of;
template <>
struct real_of<Complex> {
  using type = double;
};
template <>
struct real_of<GaussianRational> {
  using type = Rational;
};
template <class F>
using real_of_t = typename real_of<F>::type;

enum class Backend { Float, Exact };

/// Backend-tagged scalar used where values of either backend travel through a
/// common interface.
class Scalar {
 public:
  Scalar(Complex z) : value_(z) {}            // NOLINT(google-explicit-constructor)
  Scalar(GaussianRational z) : value_(std::move(z)) {}  // NOLINT(google-explicit-constructor)

  Backend backend() const {
    return std::holds_alternative<Complex>(value_) ? Backend::Float : Backend::Exact;
  }
  const Complex& as_float() const;
  const GaussianRational& as_exact() const;

  /// Double-precision view regardless of backend.
  Complex approx() const;

  Scalar conj() const;
  /// |z|^2 on the same backend (imaginary part zero).
  Scalar abs2() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);

 private:
  std::variant<Complex, GaussianRational> value_;
};

/// Relative-plus-absolute tolerance. Callers supply the scale (normally the
/// largest magnitude taking part in the comparison).
struct TolerancePolicy {
  double eps_rel = 1e-9;
  double eps_abs = 1e-12;

  /// Throws std::invalid_argument unless both epsilons are positive and finite.
  void validate() const;
  double tolerance(double scale) const;
};

/// lhs <= rhs + tolerance(scale). Throws std::domain_error("non-finite comparison").
bool approx_le(double lhs, double rhs, double scale, const TolerancePolicy& policy = {});
bool approx_eq(double lhs, double rhs, double scale, const TolerancePolicy& policy = {});

/// a - b == 0 exactly. Both operands must be on the exact backend.
bool exact_eq(const Scalar& a, const Scalar& b);

}  // namespace ipx
