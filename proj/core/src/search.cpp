#include "ipx/search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ipx/operators.hpp"

namespace ipx {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void push_vec(std::vector<double>& out, const Vec& v, bool real_space) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out.push_back(v[i].real());
    if (!real_space) out.push_back(v[i].imag());
  }
}

Vec pull_vec(const std::vector<double>& in, std::size_t& pos, std::size_t dim, bool real_space) {
  std::vector<Complex> e(dim);
  for (auto& z : e) {
    const double re = in.at(pos++);
    const double im = real_space ? 0.0 : in.at(pos++);
    z = Complex(re, im);
  }
  return Vec(std::move(e), real_space);
}

Complex pull_scalar(const std::vector<double>& in, std::size_t& pos) {
  const double re = in.at(pos++);
  return Complex(re, in.at(pos++));
}

double objective(const InequalityEntry& entry, const Case& c, std::size_t link) {
  try {
    const CheckResult r = evaluate(entry, c);
    const double t = r.link_ratios.at(link);
    return std::isfinite(t) ? t : kNegInf;
  } catch (const std::invalid_argument&) {
    return kNegInf;
  } catch (const std::domain_error&) {
    return kNegInf;
  }
}

struct Start {
  Case c;
  double tightness = kNegInf;
};

struct Refined {
  Case c;
  double tightness = kNegInf;
  std::uint64_t evaluations = 0;
  std::vector<double> trajectory;
};

Refined refine(const InequalityEntry& entry, Start start, std::size_t link, const SearchOptions& opt) {
  Refined out{std::move(start.c), start.tightness, 0, {start.tightness}};
  std::vector<double> x = flatten(out.c, entry.real_space);
  double step = opt.initial_step;
  for (int sweep = 0; sweep < opt.max_sweeps && step >= opt.min_step; ++sweep) {
    bool improved = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (double dir : {1.0, -1.0}) {
        std::vector<double> y = x;
        y[i] += dir * step;
        Case cand = out.c;
        unflatten(cand, y, entry.real_space);
        if (!project_case(entry, cand)) continue;
        const double t = objective(entry, cand, link);
        ++out.evaluations;
        if (t > out.tightness) {
          out.tightness = t;
          out.c = std::move(cand);
          x = flatten(out.c, entry.real_space);
          out.trajectory.push_back(t);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return out;
}

template <class Job>
void run_parallel(std::size_t count, unsigned threads, Job job) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex m;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) job(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(m);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<double> flatten(const Case& c, bool real_space) {
  std::vector<double> out;
  for (const auto& [_, v] : c.vectors) push_vec(out, v, real_space);
  for (const auto& [_, zs] : c.families) {
    for (const auto& z : zs) push_vec(out, z, real_space);
  }
  for (const auto& zs : c.subsets) {
    for (const auto& z : zs) push_vec(out, z, real_space);
  }
  for (const auto& [_, p] : c.params) {
    out.push_back(p.real());
    out.push_back(p.imag());
  }
  for (auto w : c.weights) {
    out.push_back(w.real());
    out.push_back(w.imag());
  }
  return out;
}

void unflatten(Case& c, const std::vector<double>& coords, bool real_space) {
  std::size_t pos = 0;
  for (auto& [_, v] : c.vectors) v = pull_vec(coords, pos, v.dim(), real_space);
  for (auto& [_, zs] : c.families) {
    for (auto& z : zs) z = pull_vec(coords, pos, z.dim(), real_space);
  }
  for (auto& zs : c.subsets) {
    for (auto& z : zs) z = pull_vec(coords, pos, z.dim(), real_space);
  }
  for (auto& [_, p] : c.params) p = pull_scalar(coords, pos);
  for (auto& w : c.weights) w = pull_scalar(coords, pos);
  if (pos != coords.size()) throw std::invalid_argument("coordinate count does not match the case shape");
}

SearchResult tightness_search(const InequalityEntry& entry, std::size_t link, std::size_t dim, std::size_t budget,
                              std::uint64_t seed, const SearchOptions& options) {
  if (budget < 1) throw std::invalid_argument("search budget must be at least 1");
  if (!dim_feasible(entry, dim)) {
    throw std::invalid_argument("infeasible constraints for requested dim " + std::to_string(dim) + " (" + entry.id + ")");
  }

  if (link + 1 >= entry.chain_labels.size()) throw std::invalid_argument("link index out of range for " + entry.id);

  std::vector<Start> starts(budget);
  const std::uint64_t dim_seed = derive_seed(seed, dim);
  SampleOptions so{options.family_size};
  run_parallel(budget, options.threads, [&](std::size_t i) {
    Rng rng(derive_seed(dim_seed, i));
    starts[i].c = sample_case(entry, dim, rng, so);
    starts[i].tightness = objective(entry, starts[i].c, link);
  });

  // Ranking is stable, so equal tightness keeps the lower start index first.
  std::vector<std::size_t> order(budget);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return starts[l].tightness > starts[r].tightness; });
  order.resize(std::min(budget, std::max<std::size_t>(1, options.refine_top)));

  std::vector<Refined> refined(order.size());
  run_parallel(order.size(), options.threads,
               [&](std::size_t k) { refined[k] = refine(entry, starts[order[k]], link, options); });

  SearchResult res;
  res.id = entry.id;
  res.link = link;
  res.seed = seed;
  res.iterations = budget;
  res.best_tightness = kNegInf;
  std::size_t best = 0;
  for (std::size_t k = 0; k < refined.size(); ++k) {
    res.iterations += refined[k].evaluations;
    const bool better = refined[k].tightness > res.best_tightness ||
                        (refined[k].tightness == res.best_tightness && order[k] < order[best]);
    if (better) {
      res.best_tightness = refined[k].tightness;
      best = k;
    }
  }
  res.best_start = order[best];
  res.argmax = refined[best].c;
  res.trajectory = refined[best].trajectory;
  return res;
}

SearchResult tightness_search(std::string_view entry_id, std::size_t link, std::size_t dim, std::size_t budget,
                              std::uint64_t seed, const SearchOptions& options) {
  return tightness_search(find_entry(entry_id), link, dim, budget, seed, options);
}

EqualityCertificate certify_equality(const Vec& a, const Vec& b, const std::vector<Vec>& zs,
                                     const TolerancePolicy& policy) {
  if (is_zero_vec(a)) throw std::invalid_argument("equality certificate needs a nonzero a");
  if (is_zero_vec(b)) throw std::invalid_argument("equality certificate needs a nonzero b");
  policy.validate();
  const Operator s = selberg(zs);
  const Vec d = s.apply(a) - Complex(0.5) * a;
  const Complex db = inner(d, b);
  double theta = std::abs(db) > 0.0 ? std::arg(db) : 0.0;
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  if (theta >= 2.0 * std::numbers::pi) theta = 0.0;

  const double na = norm(a);
  const Complex delta = std::polar(0.5 * na / norm(b), theta);
  EqualityCertificate cert;
  cert.theta = theta;
  cert.residual = norm(d - delta * b);
  cert.holds = cert.residual <= policy.tolerance(na);
  return cert;
}

}  // namespace ipx
