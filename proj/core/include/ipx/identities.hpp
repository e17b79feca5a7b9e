#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipx/linalg.hpp"

namespace ipx {

/// Polynomial identities (and the scalar max-lemma) checked instance by instance.
/// Every identity is evaluated in squared, denominator-cleared form so the exact
/// backend never needs a square root:
///
///   Lagrange    (sum a_i^2)(sum b_i^2) = (sum a_i b_i)^2 + sum_{i<j} (a_i b_j - a_j b_i)^2      (real a, b)
///   Auxiliary   ||y||^2 ||x + alpha y||^2 = |alpha ||y||^2 + <x,y>|^2 + ||y||^2 ||x - <x,y>/||y||^2 y||^2   (y != 0)
///   Id10        ||alpha<a,x>x - beta||x||^2 a||^2 = ||x||^2 |<a,x>|^2 |beta-alpha|^2 + |beta|^2 || ||x||^2 a - <a,x> x ||^2
///   Id12        ||alpha<a,x>x - beta||x||^2 a||^2 = ||x||^2 (|alpha-beta|^2|<a,x>|^2 + |beta|^2||a||^2||x||^2 - |beta|^2|<a,x>|^2)
///   Id13        ||<a,x>x - 1/2 ||x||^2 a||^2 = 1/4 ||x||^4 ||a||^2
///   Residual    || ||x||^2 a - <a,x> x ||^2 = ||x||^2 (||a||^2 ||x||^2 - |<a,x>|^2)
///   ScalarMax   p p1 + q q1 <= max{p,q} (p1 + q1)        (p, p1, q, q1 >= 0)
enum class IdentityId { Lagrange, Auxiliary, Id10, Id12, Id13, Residual, ScalarMax };

inline constexpr IdentityId kAllIdentities[] = {IdentityId::Lagrange, IdentityId::Auxiliary, IdentityId::Id10,
                                                IdentityId::Id12,     IdentityId::Id13,      IdentityId::Residual,
                                                IdentityId::ScalarMax};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

template <class F>
struct IdentityInputs {
  std::map<std::string, BasicVec<F>> vectors;
  std::map<std::string, F> scalars;
};

/// Both sides of an identity, LHS and RHS, in the backend's field.
template <class F>
struct IdentitySides {
  F lhs;
  F rhs;
};

struct ExactIdentityReport {
  IdentityId id;
  std::string digest;
  GaussianRational residual;  // lhs - rhs
  bool exact_pass = false;    // residual == 0 (ScalarMax: residual <= 0)
};

struct FloatIdentityReport {
  IdentityId id;
  std::string digest;
  double residual = 0.0;  // |lhs - rhs| (ScalarMax: max(0, lhs - rhs))
  double scale = 0.0;     // max(|lhs|, |rhs|)
  bool pass = false;
};

IdentitySides<GaussianRational> identity_sides(IdentityId id, const IdentityInputs<GaussianRational>& in);
IdentitySides<Complex> identity_sides(IdentityId id, const IdentityInputs<Complex>& in);

ExactIdentityReport check_identity(IdentityId id, const IdentityInputs<GaussianRational>& in);
FloatIdentityReport check_identity(IdentityId id, const IdentityInputs<Complex>& in, const TolerancePolicy& policy = {});

/// ||alpha<a,x>x - beta||x||^2 a||^2 - ||x||^2 |<a,x>|^2 |beta - alpha|^2, which the
/// lower bound of the norm form claims is nonnegative.
Rational lower_bound_defect(const ExactVec& a, const ExactVec& x, const GaussianRational& alpha,
                            const GaussianRational& beta);

/// Random Gaussian-rational inputs matching the identity's signature.
IdentityInputs<GaussianRational> random_exact_instance(IdentityId id, std::size_t dim, Rng& rng);
IdentityInputs<Complex> to_float(const IdentityInputs<GaussianRational>& in);

}  // namespace ipx
