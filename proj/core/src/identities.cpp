#include "ipx/identities.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ipx {

namespace {

constexpr std::string_view kNames[] = {"LAGRANGE", "ID_AUX", "ID_10", "ID_12", "ID_13", "RESIDUAL", "SCALAR_MAX"};

template <class F>
const BasicVec<F>& vec_arg(const IdentityInputs<F>& in, const std::string& name) {
  auto it = in.vectors.find(name);
  if (it == in.vectors.end()) throw std::invalid_argument("signature mismatch: missing vector '" + name + "'");
  return it->second;
}

template <class F>
const F& scalar_arg(const IdentityInputs<F>& in, const std::string& name) {
  auto it = in.scalars.find(name);
  if (it == in.scalars.end()) throw std::invalid_argument("signature mismatch: missing scalar '" + name + "'");
  return it->second;
}

template <class F>
F lift(const real_of_t<F>& r) {
  return F(r);
}

template <class F>
real_of_t<F> real_part(const F& z) {
  if constexpr (std::is_same_v<F, Complex>) {
    return z.real();
  } else {
    return z.re();
  }
}

template <class F>
void require_nonzero(const BasicVec<F>& v, const char* what) {
  if (is_zero_vec(v)) throw std::invalid_argument(std::string("zero denominator: ") + what + " must be nonzero");
}

template <class F>
void require_real(const BasicVec<F>& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!has_zero_imag(v[i])) throw std::invalid_argument("signature mismatch: LAGRANGE requires real tuples");
  }
}

template <class F>
IdentitySides<F> sides_impl(IdentityId id, const IdentityInputs<F>& in) {
  const F half = F(1) / F(2);
  switch (id) {
    case IdentityId::Lagrange: {
      const auto& a = vec_arg(in, "a");
      const auto& b = vec_arg(in, "b");
      a.check_dim(b);
      require_real(a);
      require_real(b);
      F cross{};
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
          const F m = a[i] * b[j] - a[j] * b[i];
          cross += m * m;
        }
      }
      const F ab = inner(a, b);
      return {lift<F>(norm_sq(a)) * lift<F>(norm_sq(b)), ab * ab + cross};
    }
    case IdentityId::Auxiliary: {
      const auto& x = vec_arg(in, "x");
      const auto& y = vec_arg(in, "y");
      const F& alpha = scalar_arg(in, "alpha");
      require_nonzero(y, "y");
      const F yy = lift<F>(norm_sq(y));
      const F shifted = alpha * yy + inner(x, y);
      return {yy * lift<F>(norm_sq(x + alpha * y)), lift<F>(abs2(shifted)) + yy * lift<F>(norm_sq(project_out(x, y)))};
    }
    case IdentityId::Id10:
    case IdentityId::Id12: {
      const auto& a = vec_arg(in, "a");
      const auto& x = vec_arg(in, "x");
      const F& alpha = scalar_arg(in, "alpha");
      const F& beta = scalar_arg(in, "beta");
      require_nonzero(x, "x");
      const F xx = lift<F>(norm_sq(x));
      const F ax = inner(a, x);
      const F lhs = lift<F>(norm_sq((alpha * ax) * x - (beta * xx) * a));
      const F ax2 = lift<F>(abs2(ax));
      const F bb = lift<F>(abs2(beta));
      if (id == IdentityId::Id10) {
        const F resid = lift<F>(norm_sq(xx * a - ax * x));
        return {lhs, xx * ax2 * lift<F>(abs2(beta - alpha)) + bb * resid};
      }
      const F aa = lift<F>(norm_sq(a));
      return {lhs, xx * (lift<F>(abs2(alpha - beta)) * ax2 + bb * aa * xx - bb * ax2)};
    }
    case IdentityId::Id13: {
      const auto& a = vec_arg(in, "a");
      const auto& x = vec_arg(in, "x");
      const F xx = lift<F>(norm_sq(x));
      const F lhs = lift<F>(norm_sq(inner(a, x) * x - (half * xx) * a));
      return {lhs, half * half * xx * xx * lift<F>(norm_sq(a))};
    }
    case IdentityId::Residual: {
      const auto& a = vec_arg(in, "a");
      const auto& x = vec_arg(in, "x");
      const F xx = lift<F>(norm_sq(x));
      const F ax = inner(a, x);
      return {lift<F>(norm_sq(xx * a - ax * x)), xx * (lift<F>(norm_sq(a)) * xx - lift<F>(abs2(ax)))};
    }
    case IdentityId::ScalarMax: {
      real_of_t<F> p, p1, q, q1;
      if (in.scalars.count("p") != 0) {
        const F* raw[] = {&scalar_arg(in, "p"), &scalar_arg(in, "p1"), &scalar_arg(in, "q"), &scalar_arg(in, "q1")};
        for (const F* z : raw) {
          if (!has_zero_imag(*z) || real_part(*z) < real_of_t<F>(0)) {
            throw std::invalid_argument("signature mismatch: SCALAR_MAX needs nonnegative reals");
          }
        }
        p = real_part(*raw[0]);
        p1 = real_part(*raw[1]);
        q = real_part(*raw[2]);
        q1 = real_part(*raw[3]);
      } else {
        const auto& a = vec_arg(in, "a");
        const auto& x = vec_arg(in, "x");
        const F& alpha = scalar_arg(in, "alpha");
        const F& beta = scalar_arg(in, "beta");
        p = abs2(alpha - beta);
        q = abs2(beta);
        p1 = abs2(inner(a, x));
        q1 = norm_sq(a) * norm_sq(x) - p1;
      }
      const real_of_t<F> lhs = p * p1 + q * q1;
      const real_of_t<F> rhs = std::max<real_of_t<F>>(p, q) * (p1 + q1);
      return {lift<F>(lhs), lift<F>(rhs)};
    }
  }
  throw std::invalid_argument("unknown identity");
}

void fnv1a(std::uint64_t& h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
}

std::string hex_digest(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string token(const GaussianRational& z) { return z.str(); }
std::string token(const Complex& z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%a%+ai", z.real(), z.imag());
  return buf;
}

template <class F>
std::string digest_of(IdentityId id, const IdentityInputs<F>& in) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv1a(h, to_string(id));
  for (const auto& [name, v] : in.vectors) {
    fnv1a(h, "|v:" + name);
    for (std::size_t i = 0; i < v.dim(); ++i) fnv1a(h, "," + token(v[i]));
  }
  for (const auto& [name, s] : in.scalars) fnv1a(h, "|s:" + name + "=" + token(s));
  return hex_digest(h);
}

GaussianRational random_gaussian_rational(Rng& rng, bool real) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  Rational re(num(rng), den(rng));
  re.canonicalize();
  Rational im(0);
  if (!real) {
    im = Rational(num(rng), den(rng));
    im.canonicalize();
  }
  return GaussianRational(re, im);
}

ExactVec random_exact_vec(std::size_t dim, bool real, bool nonzero, Rng& rng) {
  for (;;) {
    std::vector<GaussianRational> e;
    e.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) e.push_back(random_gaussian_rational(rng, real));
    ExactVec v(std::move(e), real);
    if (!nonzero || !is_zero_vec(v)) return v;
  }
}

}  // namespace

std::string_view to_string(IdentityId id) { return kNames[static_cast<int>(id)]; }

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (auto id : kAllIdentities) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

IdentitySides<GaussianRational> identity_sides(IdentityId id, const IdentityInputs<GaussianRational>& in) {
  return sides_impl(id, in);
}

IdentitySides<Complex> identity_sides(IdentityId id, const IdentityInputs<Complex>& in) { return sides_impl(id, in); }

ExactIdentityReport check_identity(IdentityId id, const IdentityInputs<GaussianRational>& in) {
  auto s = identity_sides(id, in);
  ExactIdentityReport r{id, digest_of(id, in), s.lhs - s.rhs, false};
  if (id == IdentityId::ScalarMax) {
    r.exact_pass = has_zero_imag(r.residual) && sgn(r.residual.re()) <= 0;
  } else {
    r.exact_pass = is_zero(r.residual);
  }
  return r;
}

FloatIdentityReport check_identity(IdentityId id, const IdentityInputs<Complex>& in, const TolerancePolicy& policy) {
  auto s = identity_sides(id, in);
  FloatIdentityReport r{id, digest_of(id, in), 0.0, std::max(std::abs(s.lhs), std::abs(s.rhs)), false};
  if (id == IdentityId::ScalarMax) {
    r.residual = std::max(0.0, s.lhs.real() - s.rhs.real());
    r.pass = approx_le(s.lhs.real(), s.rhs.real(), r.scale, policy);
  } else {
    r.residual = std::abs(s.lhs - s.rhs);
    r.pass = approx_le(r.residual, 0.0, r.scale, policy);
  }
  return r;
}

Rational lower_bound_defect(const ExactVec& a, const ExactVec& x, const GaussianRational& alpha,
                            const GaussianRational& beta) {
  const GaussianRational xx(norm_sq(x), 0);
  const GaussianRational ax = inner(a, x);
  const Rational lhs = norm_sq((alpha * ax) * x - (beta * xx) * a);
  return lhs - norm_sq(x) * abs2(ax) * abs2(beta - alpha);
}

IdentityInputs<GaussianRational> random_exact_instance(IdentityId id, std::size_t dim, Rng& rng) {
  IdentityInputs<GaussianRational> in;
  switch (id) {
    case IdentityId::Lagrange:
      in.vectors.emplace("a", random_exact_vec(dim, true, false, rng));
      in.vectors.emplace("b", random_exact_vec(dim, true, false, rng));
      break;
    case IdentityId::Auxiliary:
      in.vectors.emplace("x", random_exact_vec(dim, false, false, rng));
      in.vectors.emplace("y", random_exact_vec(dim, false, true, rng));
      in.scalars.emplace("alpha", random_gaussian_rational(rng, false));
      break;
    case IdentityId::Id10:
    case IdentityId::Id12:
    case IdentityId::ScalarMax:
      in.vectors.emplace("a", random_exact_vec(dim, false, false, rng));
      in.vectors.emplace("x", random_exact_vec(dim, false, true, rng));
      in.scalars.emplace("alpha", random_gaussian_rational(rng, false));
      in.scalars.emplace("beta", random_gaussian_rational(rng, false));
      break;
    case IdentityId::Id13:
    case IdentityId::Residual:
      in.vectors.emplace("a", random_exact_vec(dim, false, false, rng));
      in.vectors.emplace("x", random_exact_vec(dim, false, false, rng));
      break;
  }
  return in;
}

IdentityInputs<Complex> to_float(const IdentityInputs<GaussianRational>& in) {
  IdentityInputs<Complex> out;
  for (const auto& [name, v] : in.vectors) {
    std::vector<Complex> e(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) e[i] = to_complex(v[i]);
    out.vectors.emplace(name, Vec(std::move(e), v.is_real()));
  }
  for (const auto& [name, s] : in.scalars) out.scalars.emplace(name, to_complex(s));
  return out;
}

}  // namespace ipx
