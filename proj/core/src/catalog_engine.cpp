#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <exception>
#include <mutex>
#include <thread>

#include "ipx/catalog.hpp"

namespace ipx {

const Vec& Case::vec(const std::string& name) const {
  auto it = vectors.find(name);
  if (it == vectors.end()) throw std::invalid_argument("constraint violation: missing vector '" + name + "'");
  return it->second;
}

const std::vector<Vec>& Case::family(const std::string& name) const {
  auto it = families.find(name);
  if (it == families.end()) throw std::invalid_argument("constraint violation: missing family '" + name + "'");
  return it->second;
}

Complex Case::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw std::invalid_argument("constraint violation: missing parameter '" + name + "'");
  return it->second;
}

void FuzzSummary::merge(const FuzzSummary& other) {
  samples += other.samples;
  violations += other.violations;
  max_excess = std::max(max_excess, other.max_excess);
  max_tightness = std::max(max_tightness, other.max_tightness);
  pass = pass && other.pass;
}

const InequalityEntry& find_entry(std::string_view id) {
  for (const auto& e : list_entries()) {
    if (e.id == id) return e;
  }
  if (synthetic_violation_entry().id == id) return synthetic_violation_entry();
  throw std::invalid_argument("unknown entry id: " + std::string(id));
}

double link_ratio(double lo, double hi) {
  if (lo >= 0.0 && hi > 0.0) return lo / hi;
  if (lo <= 0.0 && hi <= 0.0) {
    if (lo == 0.0) return hi == 0.0 ? 0.0 : 1.0 + (0.0 - hi) / std::abs(hi);
    return hi / lo;
  }
  if (lo < 0.0 && hi > 0.0) return 0.0;
  // lo > 0 >= hi: violated link.
  return 1.0 + (lo - hi) / std::max(std::abs(lo), std::abs(hi));
}

double cs_defect(const Vec& x, const Vec& y) {
  const double yy = norm_sq(y);
  if (yy == 0.0) return 0.0;
  return yy * norm_sq(project_out(x, y));
}

double a_term(const Vec& a, const Vec& b, const Vec& x, Complex alpha, Complex beta) {
  const double u = std::abs(alpha) * std::abs(inner(a, x)) * std::sqrt(cs_defect(x, b));
  const double v = std::abs(beta) * norm_sq(x) * std::sqrt(cs_defect(a, b));
  return (u - v) * (u - v);
}

namespace {

[[noreturn]] void violation(const std::string& what) { throw std::invalid_argument("constraint violation: " + what); }

double rel(double a, double b) { return std::max(1.0, a * b); }

ConstraintSet to_constraints(const InequalityEntry& entry, const VectorSpec& spec, const Case& c) {
  ConstraintSet cs;
  if (entry.real_space) cs.push_back(Constraint::real());
  for (const auto& k : spec.constraints) {
    switch (k.rule) {
      case VecRule::Nonzero:
        cs.push_back(Constraint::nonzero());
        break;
      case VecRule::Unit:
        cs.push_back(Constraint::unit());
        break;
      case VecRule::OrthogonalTo:
        cs.push_back(Constraint::orthogonal_to(c.vec(k.ref)));
        break;
      case VecRule::OrthogonalToFamily:
        cs.push_back(Constraint::orthogonal_to(c.family(k.ref)));
        break;
      case VecRule::InnerEqualsOne:
      case VecRule::InnerModulusOne:
        cs.push_back(Constraint::inner_equals_one(c.vec(k.ref)));
        break;
      case VecRule::NotProportionalTo:
        cs.push_back(Constraint::not_proportional_to(c.vec(k.ref)));
        break;
    }
  }
  return cs;
}

void check_real(const Vec& v, const std::string& name) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].imag() != 0.0) violation(name + " must be real");
  }
}

std::size_t case_dim(const Case& c) {
  if (!c.vectors.empty()) return c.vectors.begin()->second.dim();
  for (const auto& [_, f] : c.families) {
    if (!f.empty()) return f.front().dim();
  }
  for (const auto& s : c.subsets) {
    if (!s.empty()) return s.front().dim();
  }
  throw std::invalid_argument("constraint violation: case has no vectors");
}

void check_set(const std::vector<Vec>& zs, std::size_t dim, bool real, const std::string& name) {
  if (zs.empty()) violation(name + " must be nonempty");
  for (const auto& z : zs) {
    if (z.dim() != dim) violation("dimension mismatch in " + name);
    if (is_zero_vec(z)) violation(name + " must contain nonzero vectors");
    if (real) check_real(z, name);
  }
}

}  // namespace

void validate_case(const InequalityEntry& entry, const Case& c, const SamplerLimits& limits) {
  const std::size_t dim = case_dim(c);
  const double tol = limits.check_tolerance;

  for (const auto& f : entry.families) {
    const auto& zs = c.family(f.name);
    check_set(zs, dim, entry.real_space, f.name);
  }
  if (entry.subsets.max_count > 0) {
    if (c.subsets.size() < std::max<std::size_t>(1, entry.subsets.min_count)) violation("too few operator subsets");
    if (c.weights.size() != c.subsets.size()) violation("one weight per subset required");
    for (const auto& s : c.subsets) check_set(s, dim, entry.real_space, "subset");
  }

  for (const auto& spec : entry.vectors) {
    const Vec& v = c.vec(spec.name);
    if (v.dim() != dim) violation("dimension mismatch in " + spec.name);
    if (entry.real_space) check_real(v, spec.name);
    const double vn = norm(v);
    for (const auto& k : spec.constraints) {
      switch (k.rule) {
        case VecRule::Nonzero:
          if (!(vn > 0.0)) violation(spec.name + " must be nonzero");
          break;
        case VecRule::Unit:
          if (!(std::abs(vn - 1.0) <= tol)) violation(spec.name + " must be a unit vector");
          break;
        case VecRule::OrthogonalTo: {
          const Vec& r = c.vec(k.ref);
          if (!(std::abs(inner(v, r)) <= tol * rel(vn, norm(r)))) violation(spec.name + " must be orthogonal to " + k.ref);
          break;
        }
        case VecRule::OrthogonalToFamily:
          for (const auto& z : c.family(k.ref)) {
            if (!(std::abs(inner(v, z)) <= tol * rel(vn, norm(z)))) {
              violation(spec.name + " must be orthogonal to every member of " + k.ref);
            }
          }
          break;
        case VecRule::InnerEqualsOne: {
          const Vec& r = c.vec(k.ref);
          if (!(std::abs(inner(v, r) - 1.0) <= tol * rel(vn, norm(r)))) violation("<" + spec.name + "," + k.ref + "> must be 1");
          break;
        }
        case VecRule::InnerModulusOne: {
          const Vec& r = c.vec(k.ref);
          if (!(std::abs(std::abs(inner(v, r)) - 1.0) <= tol * rel(vn, norm(r)))) {
            violation("|<" + spec.name + "," + k.ref + ">| must be 1");
          }
          break;
        }
        case VecRule::NotProportionalTo: {
          const Vec& w = c.vec(k.ref);
          if (is_zero_vec(w)) break;
          if (!(norm(project_out(v, w)) > tol * vn)) violation(spec.name + " must not be proportional to " + k.ref);
          break;
        }
      }
    }
  }

  if (entry.params) {
    if (auto err = entry.params->check(c)) violation(*err);
  }
}

CheckResult evaluate(const InequalityEntry& entry, const Case& c, const TolerancePolicy& policy) {
  validate_case(entry, c);
  CheckResult r;
  r.id = entry.id;
  r.values = entry.chain(c);
  double scale = 0.0;
  bool finite = true;
  for (double v : r.values) {
    if (!std::isfinite(v)) finite = false;
    else scale = std::max(scale, std::abs(v));
  }
  const double tol = policy.tolerance(scale);
  auto snap = [tol](double v) { return std::abs(v) <= tol ? 0.0 : v; };
  for (std::size_t i = 0; i + 1 < r.values.size(); ++i) {
    const double lo = r.values[i];
    const double hi = r.values[i + 1];
    if (!finite || !std::isfinite(lo) || !std::isfinite(hi)) {
      r.violations.push_back({i, std::numeric_limits<double>::infinity()});
      r.link_ratios.push_back(std::numeric_limits<double>::infinity());
      r.tightness = std::numeric_limits<double>::infinity();
      continue;
    }
    if (!approx_le(lo, hi, scale, policy)) r.violations.push_back({i, lo - hi});
    r.link_ratios.push_back(link_ratio(snap(lo), snap(hi)));
    r.tightness = std::max(r.tightness, r.link_ratios.back());
  }
  r.pass = r.violations.empty();
  return r;
}

CheckResult evaluate(std::string_view entry_id, const Case& c, const TolerancePolicy& policy) {
  return evaluate(find_entry(entry_id), c, policy);
}

bool dim_feasible(const InequalityEntry& entry, std::size_t dim) {
  if (dim < std::max<std::size_t>(1, entry.min_dim)) return false;
  for (const auto& f : entry.families) {
    if (f.leave_complement && dim < 2) return false;
  }
  return true;
}

Case sample_case(const InequalityEntry& entry, std::size_t dim, Rng& rng, const SampleOptions& options) {
  if (!dim_feasible(entry, dim)) throw std::runtime_error("infeasible constraints for requested dim");
  Case c;
  ConstraintSet member;
  if (entry.real_space) member.push_back(Constraint::real());
  member.push_back(Constraint::nonzero());

  for (const auto& f : entry.families) {
    std::size_t hi = f.max_size;
    if (f.leave_complement) hi = std::min(hi, dim - 1);
    std::size_t size = 0;
    if (options.family_size) {
      size = *options.family_size;
      if (size < 1 || size > hi) throw std::runtime_error("infeasible constraints for requested dim");
    } else {
      size = std::uniform_int_distribution<std::size_t>(std::min(f.min_size, hi), hi)(rng);
    }
    std::vector<Vec> zs;
    for (std::size_t i = 0; i < size; ++i) zs.push_back(sample(dim, member, rng));
    c.families.emplace(f.name, std::move(zs));
  }

  if (entry.subsets.max_count > 0) {
    const auto count = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(1, entry.subsets.min_count),
                                                                   entry.subsets.max_count)(rng);
    for (std::size_t k = 0; k < count; ++k) {
      const auto size = std::uniform_int_distribution<std::size_t>(1, entry.subsets.max_size)(rng);
      std::vector<Vec> zs;
      for (std::size_t i = 0; i < size; ++i) zs.push_back(sample(dim, member, rng));
      c.subsets.push_back(std::move(zs));
    }
  }

  for (const auto& spec : entry.vectors) {
    c.vectors.insert_or_assign(spec.name, sample(dim, to_constraints(entry, spec, c), rng));
  }

  if (entry.params) entry.params->sample(c, rng);
  return c;
}

bool project_case(const InequalityEntry& entry, Case& c, const SamplerLimits& limits) {
  auto fix_set = [&](std::vector<Vec>& zs) {
    for (auto& z : zs) {
      if (entry.real_space) {
        ConstraintSet cs{Constraint::real()};
        enforce(z, cs, limits);
      }
      if (!(norm(z) > limits.nonzero_threshold)) return false;
    }
    return true;
  };
  for (auto& [_, zs] : c.families) {
    if (!fix_set(zs)) return false;
  }
  for (auto& zs : c.subsets) {
    if (!fix_set(zs)) return false;
  }
  for (const auto& spec : entry.vectors) {
    auto it = c.vectors.find(spec.name);
    if (it == c.vectors.end()) return false;
    const ConstraintSet cs = to_constraints(entry, spec, c);
    Vec v = it->second;
    if (!enforce(v, cs, limits)) return false;
    it->second = std::move(v);
  }
  if (entry.params && entry.params->project && !entry.params->project(c)) return false;
  try {
    validate_case(entry, c, limits);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

namespace {

FuzzSummary fuzz_range(const InequalityEntry& entry, std::size_t dim, std::uint64_t begin, std::uint64_t end,
                       std::uint64_t seed, const TolerancePolicy& policy) {
  FuzzSummary s;
  s.id = entry.id;
  s.seed = seed;
  const std::uint64_t dim_seed = derive_seed(seed, dim);
  for (std::uint64_t i = begin; i < end; ++i) {
    Rng rng(derive_seed(dim_seed, i));
    const Case c = sample_case(entry, dim, rng);
    const CheckResult r = evaluate(entry, c, policy);
    ++s.samples;
    for (std::size_t k = 0; k + 1 < r.values.size(); ++k) {
      const double lo = r.values[k];
      const double hi = r.values[k + 1];
      const double excess = (std::isfinite(lo) && std::isfinite(hi)) ? lo - hi : std::numeric_limits<double>::infinity();
      s.max_excess = std::max(s.max_excess, excess);
    }
    s.max_tightness = std::max(s.max_tightness, r.tightness);
    if (!r.pass) {
      ++s.violations;
      s.pass = false;
    }
  }
  return s;
}

}  // namespace

FuzzSummary fuzz(const InequalityEntry& entry, std::uint64_t n, const std::vector<std::size_t>& dims, std::uint64_t seed,
                 const TolerancePolicy& policy, unsigned threads) {
  if (n < 1) throw std::invalid_argument("fuzz needs at least one sample");
  if (dims.empty()) throw std::invalid_argument("fuzz needs at least one dimension");
  for (auto d : dims) {
    if (!dim_feasible(entry, d)) {
      throw std::invalid_argument("infeasible constraints for requested dim " + std::to_string(d) + " (" + entry.id + ")");
    }
  }
  policy.validate();
  threads = std::max(1u, threads);

  FuzzSummary total;
  total.id = entry.id;
  total.seed = seed;
  for (auto d : dims) {
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
    std::vector<FuzzSummary> parts(workers);
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = n * w / workers;
      const std::uint64_t end = n * (w + 1) / workers;
      auto job = [&, w, begin, end] {
        try {
          parts[w] = fuzz_range(entry, d, begin, end, seed, policy);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      };
      if (workers == 1) job();
      else pool.emplace_back(job);
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    for (const auto& p : parts) total.merge(p);
  }
  return total;
}

FuzzSummary fuzz(std::string_view entry_id, std::uint64_t n, const std::vector<std::size_t>& dims, std::uint64_t seed,
                 const TolerancePolicy& policy, unsigned threads) {
  return fuzz(find_entry(entry_id), n, dims, seed, policy, threads);
}

}  // namespace ipx
