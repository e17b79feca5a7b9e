#include "ipx/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ipx {

double norm(const Vec& x) { return std::sqrt(norm_sq(x)); }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Vec gaussian_vec(std::size_t dim, bool real, Rng& rng) {
  std::vector<Complex> e(dim);
  if (real) {
    std::normal_distribution<double> nd(0.0, 1.0);
    for (auto& v : e) v = Complex(nd(rng), 0.0);
  } else {
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
    for (auto& v : e) {
      const double re = nd(rng);
      const double im = nd(rng);
      v = Complex(re, im);
    }
  }
  return Vec(std::move(e), real);
}

namespace {

bool wants_real(const ConstraintSet& cs) {
  return std::any_of(cs.begin(), cs.end(), [](const Constraint& c) { return c.kind == ConstraintKind::Real; });
}

// Orthonormal basis for the span of every OrthogonalTo reference in the set.
std::vector<Vec> orthogonal_basis(const ConstraintSet& cs) {
  std::vector<Vec> basis;
  for (const auto& c : cs) {
    if (c.kind != ConstraintKind::OrthogonalTo) continue;
    for (const auto& r : c.refs) {
      const double r0 = norm(r);
      if (r0 == 0.0) continue;
      Vec q = r;
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) q -= inner(q, b) * b;
      }
      const double rn = norm(q);
      if (rn <= 1e-10 * r0) continue;
      q *= Complex(1.0 / rn, 0.0);
      basis.push_back(std::move(q));
    }
  }
  return basis;
}

Vec project_off(Vec v, const std::vector<Vec>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) v -= inner(v, b) * b;
  }
  return v;
}

Vec real_part(const Vec& v) {
  std::vector<Complex> e(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) e[i] = Complex(v[i].real(), 0.0);
  return Vec(std::move(e), true);
}

double rel_scale(double a, double b) { return std::max(1.0, a * b); }

}  // namespace

bool satisfies(const Vec& v, const ConstraintSet& constraints, const SamplerLimits& limits) {
  const double vn = norm(v);
  for (const auto& c : constraints) {
    switch (c.kind) {
      case ConstraintKind::Real:
        for (std::size_t i = 0; i < v.dim(); ++i) {
          if (v[i].imag() != 0.0) return false;
        }
        break;
      case ConstraintKind::Nonzero:
        if (!(vn > limits.nonzero_threshold)) return false;
        break;
      case ConstraintKind::Unit:
        if (!(std::abs(vn - 1.0) <= limits.check_tolerance)) return false;
        break;
      case ConstraintKind::OrthogonalTo:
        for (const auto& r : c.refs) {
          if (!(std::abs(inner(v, r)) <= limits.check_tolerance * rel_scale(vn, norm(r)))) return false;
        }
        break;
      case ConstraintKind::InnerEqualsOne: {
        const auto& t = c.refs.at(0);
        if (!(std::abs(inner(v, t) - 1.0) <= limits.check_tolerance * rel_scale(vn, norm(t)))) return false;
        break;
      }
      case ConstraintKind::NotProportionalTo: {
        const auto& w = c.refs.at(0);
        if (norm_sq(w) == 0.0) break;
        if (!(norm(project_out(v, w)) >= limits.proportional_threshold * vn)) return false;
        break;
      }
    }
  }
  return true;
}

bool enforce(Vec& v, const ConstraintSet& constraints, const SamplerLimits& limits) {
  const auto basis = orthogonal_basis(constraints);
  for (const auto& c : constraints) {
    switch (c.kind) {
      case ConstraintKind::Real:
        v = real_part(v);
        break;
      case ConstraintKind::Unit: {
        const double n = norm(v);
        if (!(n > limits.nonzero_threshold)) return false;
        v *= Complex(1.0 / n, 0.0);
        break;
      }
      case ConstraintKind::OrthogonalTo:
        v = project_off(std::move(v), basis);
        break;
      case ConstraintKind::InnerEqualsOne: {
        const auto& t = c.refs.at(0);
        const Vec tp = project_off(t, basis);
        const double tt = norm_sq(tp);
        if (!(tt > 0.0)) return false;
        v += ((1.0 - inner(v, t)) / tt) * tp;
        break;
      }
      case ConstraintKind::Nonzero:
      case ConstraintKind::NotProportionalTo:
        break;
    }
  }
  return satisfies(v, constraints, limits);
}

Vec sample(std::size_t dim, const ConstraintSet& constraints, Rng& rng, const SamplerLimits& limits) {
  if (dim == 0) throw std::invalid_argument("vector dimension must be at least 1");
  const bool real = wants_real(constraints);
  for (int attempt = 0; attempt < limits.max_attempts; ++attempt) {
    Vec v = gaussian_vec(dim, real, rng);
    if (enforce(v, constraints, limits)) return v;
  }
  throw std::runtime_error("infeasible constraint set");
}

Vec sample(std::size_t dim, const ConstraintSet& constraints, std::uint64_t seed, const SamplerLimits& limits) {
  Rng rng(seed);
  return sample(dim, constraints, rng, limits);
}

}  // namespace ipx
