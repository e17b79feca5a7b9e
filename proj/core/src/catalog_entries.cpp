#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ipx/catalog.hpp"
#include "ipx/operators.hpp"

namespace ipx {

namespace {

using Values = std::vector<double>;

VecConstraint nonzero() { return {VecRule::Nonzero, {}}; }
VecConstraint unit() { return {VecRule::Unit, {}}; }
VecConstraint orthogonal_to(std::string ref) { return {VecRule::OrthogonalTo, std::move(ref)}; }
VecConstraint orthogonal_to_family(std::string ref) { return {VecRule::OrthogonalToFamily, std::move(ref)}; }
VecConstraint inner_equals_one(std::string ref) { return {VecRule::InnerEqualsOne, std::move(ref)}; }
VecConstraint inner_modulus_one(std::string ref) { return {VecRule::InnerModulusOne, std::move(ref)}; }
VecConstraint not_proportional_to(std::string ref) { return {VecRule::NotProportionalTo, std::move(ref)}; }

VectorSpec free_vec(std::string name) { return {std::move(name), {}}; }
VectorSpec nonzero_vec(std::string name) { return {std::move(name), {nonzero()}}; }
VectorSpec unit_vec(std::string name) { return {std::move(name), {unit()}}; }

// ---------------------------------------------------------------------------
// Parameter regions
// ---------------------------------------------------------------------------

constexpr double kRadius = 3.0;
constexpr int kParamAttempts = 1000;
constexpr double kParamTol = 1e-9;

Complex polar_sample(Rng& rng, double r_lo, double r_hi) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = std::sqrt(r_lo * r_lo + u(rng) * (r_hi * r_hi - r_lo * r_lo));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

Complex disk(Rng& rng) { return polar_sample(rng, 0.0, kRadius); }
Complex annulus(Rng& rng, double lo = 0.1) { return polar_sample(rng, lo, kRadius); }

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double mx(Complex alpha, Complex beta) { return std::max(std::abs(alpha - beta), std::abs(beta)); }

using Condition = std::function<std::optional<std::string>(Complex, Complex)>;

/// alpha, beta drawn from the radius-3 disk (beta from an annulus when it must be
/// nonzero), rejecting draws that fail `cond`.
ParamSpec alpha_beta(std::string region, bool beta_nonzero, Condition cond = {}) {
  ParamSpec p;
  p.names = {"alpha", "beta"};
  p.region = std::move(region);
  p.check = [cond, beta_nonzero](const Case& c) -> std::optional<std::string> {
    const Complex alpha = c.param("alpha");
    const Complex beta = c.param("beta");
    if (!finite(alpha) || !finite(beta)) return "parameters must be finite";
    if (beta_nonzero && beta == Complex{}) return "beta must be nonzero";
    if (cond) return cond(alpha, beta);
    return std::nullopt;
  };
  p.sample = [cond, beta_nonzero](Case& c, Rng& rng) {
    for (int i = 0; i < kParamAttempts; ++i) {
      const Complex alpha = disk(rng);
      const Complex beta = beta_nonzero ? annulus(rng) : disk(rng);
      if (!cond || !cond(alpha, beta)) {
        c.params["alpha"] = alpha;
        c.params["beta"] = beta;
        return;
      }
    }
    throw std::runtime_error("infeasible constraints: parameter region rejected every draw");
  };
  p.project = [check = p.check](Case& c) { return !check(c); };
  return p;
}

ParamSpec alpha_only() {
  ParamSpec p;
  p.names = {"alpha"};
  p.region = "alpha in C";
  p.check = [](const Case& c) -> std::optional<std::string> {
    if (!finite(c.param("alpha"))) return "parameters must be finite";
    return std::nullopt;
  };
  p.sample = [](Case& c, Rng& rng) { c.params["alpha"] = disk(rng); };
  p.project = [check = p.check](Case& c) { return !check(c); };
  return p;
}

std::optional<std::string> finite_weights(const Case& c) {
  for (auto z : c.weights) {
    if (!finite(z)) return "weights must be finite";
  }
  return std::nullopt;
}

ParamSpec free_weights() {
  ParamSpec p;
  p.names = {"z"};
  p.region = "z_k in C";
  p.check = finite_weights;
  p.sample = [](Case& c, Rng& rng) {
    c.weights.clear();
    for (std::size_t k = 0; k < c.subsets.size(); ++k) c.weights.push_back(disk(rng));
  };
  p.project = [](Case& c) { return !finite_weights(c); };
  return p;
}

double two_pow(std::size_t n) { return std::ldexp(1.0, static_cast<int>(n)); }

// (-1)^n prod z_k = 2^(n-1), with the last weight solved for.
bool close_product(Case& c) {
  const std::size_t n = c.weights.size();
  if (n == 0) return false;
  Complex head(1.0, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) head *= c.weights[k];
  if (!(std::abs(head) > 0.0)) return false;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  c.weights.back() = sign * two_pow(n - 1) / head;
  return !finite_weights(c);
}

ParamSpec product_weights() {
  ParamSpec p;
  p.names = {"z"};
  p.region = "(-1)^n prod z_k = 2^(n-1)";
  p.check = [](const Case& c) -> std::optional<std::string> {
    if (auto e = finite_weights(c)) return e;
    const std::size_t n = c.weights.size();
    Complex prod(1.0, 0.0);
    for (auto z : c.weights) prod *= z;
    if (n % 2 == 1) prod = -prod;
    const double target = two_pow(n - 1);
    if (!(std::abs(prod - target) <= kParamTol * target)) return "weights must satisfy (-1)^n prod z_k = 2^(n-1)";
    return std::nullopt;
  };
  p.sample = [](Case& c, Rng& rng) {
    c.weights.clear();
    for (std::size_t k = 0; k < c.subsets.size(); ++k) c.weights.push_back(annulus(rng, 0.3));
    close_product(c);
  };
  p.project = close_product;
  return p;
}

// z_k >= 0 with sum 1: the only complex weights with sum z_k = sum |z_k| = 1.
bool normalise_simplex(Case& c) {
  double total = 0.0;
  for (auto& z : c.weights) {
    z = Complex(std::max(0.0, z.real()), 0.0);
    total += z.real();
  }
  if (!(total > 0.0) || !std::isfinite(total)) return false;
  for (auto& z : c.weights) z /= total;
  return true;
}

ParamSpec simplex_weights() {
  ParamSpec p;
  p.names = {"z"};
  p.region = "sum z_k = sum |z_k| = 1";
  p.check = [](const Case& c) -> std::optional<std::string> {
    if (auto e = finite_weights(c)) return e;
    Complex sum{};
    double abs_sum = 0.0;
    for (auto z : c.weights) {
      sum += z;
      abs_sum += std::abs(z);
    }
    if (!(std::abs(sum - 1.0) <= kParamTol && std::abs(abs_sum - 1.0) <= kParamTol)) {
      return "weights must satisfy sum z_k = sum |z_k| = 1";
    }
    return std::nullopt;
  };
  p.sample = [](Case& c, Rng& rng) {
    std::exponential_distribution<double> ex(1.0);
    c.weights.clear();
    for (std::size_t k = 0; k < c.subsets.size(); ++k) c.weights.emplace_back(ex(rng), 0.0);
    normalise_simplex(c);
  };
  p.project = normalise_simplex;
  return p;
}

// ---------------------------------------------------------------------------
// Expression helpers
// ---------------------------------------------------------------------------

double abs_ip(const Vec& u, const Vec& v) { return std::abs(inner(u, v)); }

/// <T a, b>
Complex form(const Operator& t, const Vec& a, const Vec& b) { return inner(t.apply(a), b); }

Operator half_shifted(const Operator& s) { return combine<Complex>({{Complex(1.0), s}}, Complex(-0.5)); }

struct Abx {
  const Vec& a;
  const Vec& b;
  const Vec& x;
  explicit Abx(const Case& c) : a(c.vec("a")), b(c.vec("b")), x(c.vec("x")) {}
};

/// alpha <a,x><x,b> - beta ||x||^2 <a,b>
Complex kdm(const Abx& v, Complex alpha, Complex beta) {
  return alpha * inner(v.a, v.x) * inner(v.x, v.b) - beta * norm_sq(v.x) * inner(v.a, v.b);
}

/// M from the w, z form: <a,w><w,b>/|w|^2 + <a,z><z,b>/|z|^2 - 2<a,w><w,z><z,b>/(|w|^2|z|^2)
Complex precupanu_middle(const Case& c) {
  const Vec& a = c.vec("a");
  const Vec& b = c.vec("b");
  const Vec& w = c.vec("w");
  const Vec& z = c.vec("z");
  const double ww = norm_sq(w);
  const double zz = norm_sq(z);
  return inner(a, w) * inner(w, b) / ww + inner(a, z) * inner(z, b) / zz -
         2.0 * inner(a, w) * inner(w, z) * inner(z, b) / (ww * zz);
}

/// Three-term chain for a Selberg operator with a unit vector e in its kernel.
Values eorth_chain(const Operator& s, const Vec& a, const Vec& b, const Vec& e) {
  const Complex g = form(s, a, b) - 0.5 * inner(a, b);
  const Complex p = inner(a, e) * inner(e, b);
  return {std::abs(g), std::abs(g + 0.5 * p) + 0.5 * std::abs(p), 0.5 * norm(a) * norm(b)};
}

/// T_1 T_2 ... T_n a with T_k = S_k - I/2.
Vec product_apply(const Case& c, const Vec& a) {
  Vec v = a;
  for (std::size_t k = c.subsets.size(); k-- > 0;) v = half_shifted(selberg(c.subsets[k])).apply(v);
  return v;
}

Complex weight_product(const Case& c) {
  Complex p(1.0, 0.0);
  for (auto z : c.weights) p *= z;
  return p;
}

Operator weighted_selberg_sum(const Case& c, Complex shift) {
  std::vector<std::pair<Complex, Operator>> parts;
  for (std::size_t k = 0; k < c.subsets.size(); ++k) parts.emplace_back(c.weights[k], selberg(c.subsets[k]));
  return combine(parts, shift, c.vec("a").dim());
}

SubsetSpec operator_subsets() { return {1, 4, 3}; }

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

std::vector<InequalityEntry> build() {
  std::vector<InequalityEntry> r;

  r.push_back({.id = "CS_DISCRETE",
               .quote = "called the Cauchy-Buniakowski-Schwarz inequality",
               .statement = "(sum a_k b_k)^2 <= (sum a_k^2)(sum b_k^2)",
               .chain_labels = {"(sum a_k b_k)^2", "(sum a_k^2)(sum b_k^2)"},
               .vectors = {free_vec("a"), free_vec("b")},
               .real_space = true,
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 const double ab = inner(a, b).real();
                 return {ab * ab, norm_sq(a) * norm_sq(b)};
               }});

  r.push_back({.id = "OSTROWSKI_DISCRETE",
               .quote = "Ostrowski \\cite{11}, showed the following",
               .statement = "sum y_k^2 / sum z_k^2 <= sum x_k^2 sum y_k^2 - (sum x_k y_k)^2, sum y_k z_k = 0, sum x_k z_k = 1",
               .chain_labels = {"|y|^2/|z|^2", "|x|^2|y|^2 - <x,y>^2"},
               .vectors = {nonzero_vec("x"),
                           {"y", {nonzero(), not_proportional_to("x")}},
                           {"z", {orthogonal_to("y"), inner_equals_one("x")}}},
               .real_space = true,
               .min_dim = 2,
               .chain = [](const Case& c) -> Values {
                 const Vec& x = c.vec("x");
                 const Vec& y = c.vec("y");
                 const Vec& z = c.vec("z");
                 return {norm_sq(y) / norm_sq(z), cs_defect(x, y)};
               }});

  r.push_back({.id = "CS",
               .quote = "the Cauchy--Schwarz inequality (C-S)",
               .statement = "|<x,y>| <= |x||y|",
               .chain_labels = {"|<x,y>|", "|x||y|"},
               .vectors = {free_vec("x"), free_vec("y")},
               .chain = [](const Case& c) -> Values {
                 const Vec& x = c.vec("x");
                 const Vec& y = c.vec("y");
                 return {abs_ip(x, y), norm(x) * norm(y)};
               }});

  r.push_back({.id = "BUZANO",
               .quote = "proved an extension of the Cauchy-Schwarz",
               .statement = "|<a,x><x,b>| <= 1/2 |x|^2 (|<a,b>| + |a||b|)",
               .chain_labels = {"|<a,x><x,b>|", "1/2|x|^2(|<a,b>|+|a||b|)"},
               .vectors = {free_vec("a"), free_vec("b"), free_vec("x")},
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 return {std::abs(inner(v.a, v.x) * inner(v.x, v.b)),
                         0.5 * norm_sq(v.x) * (abs_ip(v.a, v.b) + norm(v.a) * norm(v.b))};
               }});

  r.push_back({.id = "RICHARD",
               .quote = "gave the following inequality",
               .statement = "|<a,x><x,b> - 1/2|x|^2<a,b>| <= 1/2 |x|^2 |a||b|  (real space)",
               .chain_labels = {"|<a,x><x,b> - 1/2|x|^2<a,b>|", "1/2|x|^2|a||b|"},
               .vectors = {free_vec("a"), free_vec("b"), free_vec("x")},
               .real_space = true,
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 return {std::abs(kdm(v, 1.0, 0.5)), 0.5 * norm_sq(v.x) * norm(v.a) * norm(v.b)};
               }});

  r.push_back({.id = "PRECUPANU",
               .quote = "related to the Richard inequality",
               .statement = "(<a,b> - |a||b|)/2 <= M(a,b,w,z) <= (<a,b> + |a||b|)/2  (real space)",
               .chain_labels = {"(<a,b>-|a||b|)/2", "M", "(<a,b>+|a||b|)/2"},
               .vectors = {free_vec("a"), free_vec("b"), nonzero_vec("w"), nonzero_vec("z")},
               .real_space = true,
               .two_sided = true,
               .principal_link = 1,
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 const double ab = inner(a, b).real();
                 const double nab = norm(a) * norm(b);
                 return {(ab - nab) / 2.0, precupanu_middle(c).real(), (ab + nab) / 2.0};
               }});

  r.push_back({.id = "POPA_RASA",
               .quote = "Popa and Ra\\c{s}a showed",
               .statement = "|Re(<a,x><x,b> - 1/2|x|^2<a,b>)| <= 1/2|x|^2 sqrt(|a|^2|b|^2 - (Im<a,b>)^2)",
               .chain_labels = {"|Re(<a,x><x,b> - 1/2|x|^2<a,b>)|", "1/2|x|^2 sqrt(|a|^2|b|^2-(Im<a,b>)^2)"},
               .vectors = {free_vec("a"), free_vec("b"), free_vec("x")},
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 const double im = inner(v.a, v.b).imag();
                 const double rad = std::max(0.0, norm_sq(v.a) * norm_sq(v.b) - im * im);
                 return {std::abs(kdm(v, 1.0, 0.5).real()), 0.5 * norm_sq(v.x) * std::sqrt(rad)};
               }});

  r.push_back({.id = "LUPU",
               .quote = "Lupu and Schwarz gave",
               .statement = "|a|^2|<b,x>|^2 + |b|^2|<x,a>|^2 + |x|^2|<a,b>|^2 <= |a|^2|b|^2|x|^2 + 2|<a,b><b,x><x,a>|",
               .chain_labels = {"|a|^2|<b,x>|^2+|b|^2|<x,a>|^2+|x|^2|<a,b>|^2", "|a|^2|b|^2|x|^2+2|<a,b><b,x><x,a>|"},
               .vectors = {free_vec("a"), free_vec("b"), free_vec("x")},
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 const Complex ab = inner(v.a, v.b);
                 const Complex bx = inner(v.b, v.x);
                 const Complex xa = inner(v.x, v.a);
                 const double aa = norm_sq(v.a);
                 const double bb = norm_sq(v.b);
                 const double xx = norm_sq(v.x);
                 return {aa * std::norm(bx) + bb * std::norm(xa) + xx * std::norm(ab),
                         aa * bb * xx + 2.0 * std::abs(ab * bx * xa)};
               }});

  r.push_back({.id = "LUPU_REFINEMENT",
               .quote = "another refinement of the (C-S) inequality",
               .statement = "0 <= (|a||<b,x>| - |b||<x,a>|)^2/|x|^2 <= |a|^2|b|^2 - |<a,b>|^2",
               .chain_labels = {"0", "(|a||<b,x>|-|b||<x,a>|)^2/|x|^2", "|a|^2|b|^2-|<a,b>|^2"},
               .vectors = {free_vec("a"), free_vec("b"), nonzero_vec("x")},
               .principal_link = 1,
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 const double d = norm(v.a) * abs_ip(v.b, v.x) - norm(v.b) * abs_ip(v.x, v.a);
                 return {0.0, d * d / norm_sq(v.x), cs_defect(v.a, v.b)};
               }});

  r.push_back({.id = "LOWER_11",
               .quote = "from equality \\eqref{10}, we find",
               .statement = "|x||<a,x>||beta-alpha| <= |alpha<a,x>x - beta|x|^2 a|",
               .chain_labels = {"|x||<a,x>||beta-alpha|", "|alpha<a,x>x - beta|x|^2 a|"},
               .vectors = {free_vec("a"), free_vec("x")},
               .params = alpha_beta("alpha, beta in C", false),
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& x = c.vec("x");
                 const Complex alpha = c.param("alpha");
                 const Complex beta = c.param("beta");
                 const Complex ax = inner(a, x);
                 return {norm(x) * std::abs(ax) * std::abs(beta - alpha), norm((alpha * ax) * x - (beta * norm_sq(x)) * a)};
               }});

  r.push_back({.id = "UPPER_14",
               .quote = "which is equivalent to",
               .statement = "|alpha<a,x>x - beta|x|^2 a| <= max{|alpha-beta|,|beta|} |a||x|^2",
               .chain_labels = {"|alpha<a,x>x - beta|x|^2 a|", "max{|alpha-beta|,|beta|}|a||x|^2"},
               .vectors = {free_vec("a"), free_vec("x")},
               .params = alpha_beta("alpha, beta in C", false),
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& x = c.vec("x");
                 const Complex alpha = c.param("alpha");
                 const Complex beta = c.param("beta");
                 return {norm((alpha * inner(a, x)) * x - (beta * norm_sq(x)) * a), mx(alpha, beta) * norm(a) * norm_sq(x)};
               }});

  r.push_back({.id = "SANDWICH_15",
               .quote = "improvement of the Cauchy--Schwarz inequality",
               .statement = "|<a,x>| <= |alpha<a,x>x - beta|x|^2 a| / (|alpha-beta||x|) <= |a||x|,  |alpha-beta| >= |beta| > 0",
               .chain_labels = {"|<a,x>|", "|alpha<a,x>x - beta|x|^2 a|/(|alpha-beta||x|)", "|a||x|"},
               .vectors = {free_vec("a"), nonzero_vec("x")},
               .params = alpha_beta("|alpha-beta| >= |beta| > 0", true,
                                    [](Complex alpha, Complex beta) -> std::optional<std::string> {
                                      if (!(std::abs(alpha - beta) >= std::abs(beta))) {
                                        return "parameters must satisfy |alpha-beta| >= |beta|";
                                      }
                                      return std::nullopt;
                                    }),
               .principal_link = 1,
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& x = c.vec("x");
                 const Complex alpha = c.param("alpha");
                 const Complex beta = c.param("beta");
                 const Complex ax = inner(a, x);
                 const double mid = norm((alpha * ax) * x - (beta * norm_sq(x)) * a) / (std::abs(alpha - beta) * norm(x));
                 return {std::abs(ax), mid, norm(a) * norm(x)};
               }});

  r.push_back({.id = "KDM_16",
               .quote = "the inequality of the statement was proven",
               .statement = "|alpha<a,x><x,b> - beta|x|^2<a,b>| <= max{|beta|,|alpha-beta|} |x|^2|a||b|",
               .chain_labels = {"|alpha<a,x><x,b> - beta|x|^2<a,b>|", "max{|beta|,|alpha-beta|}|x|^2|a||b|"},
               .vectors = {free_vec("a"), free_vec("b"), free_vec("x")},
               .params = alpha_beta("alpha, beta in C", false),
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 const Complex alpha = c.param("alpha");
                 const Complex beta = c.param("beta");
                 return {std::abs(kdm(v, alpha, beta)), mx(alpha, beta) * norm_sq(v.x) * norm(v.a) * norm(v.b)};
               }});

  r.push_back({.id = "KDM_17",
               .quote = "an extension of Buzano's inequality",
               .statement = "|alpha<a,x><x,b> - |x|^2<a,b>| <= max{1,|alpha-1|} |x|^2|a||b|",
               .chain_labels = {"|alpha<a,x><x,b> - |x|^2<a,b>|", "max{1,|alpha-1|}|x|^2|a||b|"},
               .vectors = {free_vec("a"), free_vec("b"), free_vec("x")},
               .params = alpha_only(),
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 const Complex alpha = c.param("alpha");
                 return {std::abs(kdm(v, alpha, 1.0)), mx(alpha, 1.0) * norm_sq(v.x) * norm(v.a) * norm(v.b)};
               }});

  auto th18 = [](const Case& c, Complex alpha, Complex beta) -> Values {
    const Abx v(c);
    const double xx = norm_sq(v.x);
    const Complex ax = inner(v.a, v.x);
    const Complex mid = alpha * ax * inner(v.x, v.b) / xx - beta * inner(v.a, v.b);
    return {0.0, xx / norm_sq(v.b) * std::norm(mid), std::norm(alpha - beta) * std::norm(ax) + std::norm(beta) * cs_defect(v.a, v.x)};
  };

  r.push_back({.id = "TH_18",
               .quote = "we make the following calculations",
               .statement = "0 <= |x|^2/|b|^2 |alpha<a,x><x,b>/|x|^2 - beta<a,b>|^2 <= |alpha-beta|^2|<a,x>|^2 + |beta|^2(|a|^2|x|^2 - |<a,x>|^2)",
               .chain_labels = {"0", "|x|^2/|b|^2 |alpha<a,x><x,b>/|x|^2 - beta<a,b>|^2",
                                "|alpha-beta|^2|<a,x>|^2+|beta|^2(|a|^2|x|^2-|<a,x>|^2)"},
               .vectors = {free_vec("a"), nonzero_vec("b"), nonzero_vec("x")},
               .params = alpha_beta("alpha, beta in C", false),
               .principal_link = 1,
               .chain = [th18](const Case& c) { return th18(c, c.param("alpha"), c.param("beta")); }});

  r.push_back({.id = "COR_19",
               .quote = "the following inequality",
               .statement = "0 <= |x|^2/|b|^2 |<a,x><x,b>/|x|^2 - <a,b>|^2 <= |a|^2|x|^2 - |<a,x>|^2",
               .chain_labels = {"0", "|x|^2/|b|^2 |<a,x><x,b>/|x|^2 - <a,b>|^2", "|a|^2|x|^2-|<a,x>|^2"},
               .vectors = {free_vec("a"), nonzero_vec("b"), nonzero_vec("x")},
               .principal_link = 1,
               .chain = [th18](const Case& c) { return th18(c, 1.0, 1.0); }});

  r.push_back({.id = "DRAGOMIR_GOSA",
               .quote = "obtained by Dragomir and Go\\c sa",
               .statement = "|x|^2/|b|^2 |<a,b>|^2 <= |a|^2|x|^2 - |<a,x>|^2,  <x,b> = 0",
               .chain_labels = {"|x|^2/|b|^2|<a,b>|^2", "|a|^2|x|^2-|<a,x>|^2"},
               .vectors = {nonzero_vec("x"), {"b", {orthogonal_to("x"), nonzero()}}, free_vec("a")},
               .min_dim = 2,
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 return {norm_sq(v.x) / norm_sq(v.b) * std::norm(inner(v.a, v.b)), cs_defect(v.a, v.x)};
               }});

  r.push_back({.id = "OSTROWSKI_IP",
               .quote = "the inequality of Ostrowski",
               .statement = "|x|^2/|b|^2 <= |a|^2|x|^2 - |<a,x>|^2,  <x,b> = 0, |<a,b>| = 1",
               .chain_labels = {"|x|^2/|b|^2", "|a|^2|x|^2-|<a,x>|^2"},
               .vectors = {nonzero_vec("b"), {"x", {orthogonal_to("b"), nonzero()}}, {"a", {inner_modulus_one("b")}}},
               .min_dim = 2,
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 return {norm_sq(v.x) / norm_sq(v.b), cs_defect(v.a, v.x)};
               }});

  r.push_back(
      {.id = "TH_21",
       .quote = "Consequently, the inequality of the statement is true",
       .statement = "|beta||x|^2|a||b| - |alpha<a,x><x,b> - beta|x|^2<a,b>| >= (|beta|^2-|alpha-beta|^2)|b||<a,x>|^2/(2|beta||a|) >= 0",
       .chain_labels = {"0", "(|beta|^2-|alpha-beta|^2)|b||<a,x>|^2/(2|beta||a|)",
                        "|beta||x|^2|a||b| - |alpha<a,x><x,b> - beta|x|^2<a,b>|"},
       .vectors = {nonzero_vec("a"), free_vec("b"), free_vec("x")},
       .params = alpha_beta("alpha != beta, |alpha-beta| <= |beta|, beta != 0", true,
                            [](Complex alpha, Complex beta) -> std::optional<std::string> {
                              if (alpha == beta) return "parameters must satisfy alpha != beta";
                              if (!(std::abs(alpha - beta) <= std::abs(beta))) {
                                return "parameters must satisfy |alpha-beta| <= |beta|";
                              }
                              return std::nullopt;
                            }),
       .principal_link = 1,
       .chain = [](const Case& c) -> Values {
         const Abx v(c);
         const Complex alpha = c.param("alpha");
         const Complex beta = c.param("beta");
         const double nb = std::abs(beta);
         const double bound = (nb * nb - std::norm(alpha - beta)) * norm(v.b) * std::norm(inner(v.a, v.x)) / (2.0 * nb * norm(v.a));
         const double gap = nb * norm_sq(v.x) * norm(v.a) * norm(v.b) - std::abs(kdm(v, alpha, beta));
         return {0.0, bound, gap};
       }});

  r.push_back({.id = "TH_22",
               .quote = "for any nonzero vectors",
               .statement = "M|x|^2|a||b| - |alpha<a,x><x,b> - beta|x|^2<a,b>| >= A(alpha,beta)/(2M|x|^2|a||b|) >= 0,  M = max{|alpha-beta|,|beta|} != 0",
               .chain_labels = {"0", "A(alpha,beta)/(2M|x|^2|a||b|)", "M|x|^2|a||b| - |alpha<a,x><x,b> - beta|x|^2<a,b>|"},
               .vectors = {nonzero_vec("a"), nonzero_vec("b"), nonzero_vec("x")},
               .params = alpha_beta("max{|alpha-beta|,|beta|} != 0", false,
                                    [](Complex alpha, Complex beta) -> std::optional<std::string> {
                                      if (!(mx(alpha, beta) > 0.0)) return "parameters must satisfy max{|alpha-beta|,|beta|} != 0";
                                      return std::nullopt;
                                    }),
               .principal_link = 1,
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 const Complex alpha = c.param("alpha");
                 const Complex beta = c.param("beta");
                 const double m = mx(alpha, beta);
                 const double s = norm_sq(v.x) * norm(v.a) * norm(v.b);
                 return {0.0, a_term(v.a, v.b, v.x, alpha, beta) / (2.0 * m * s), m * s - std::abs(kdm(v, alpha, beta))};
               }});

  r.push_back({.id = "REM_23",
               .quote = "an important inequality given in",
               .statement = "1/2|x|^2|a||b| - |<a,x><x,b> - 1/2|x|^2<a,b>| >= A/(|x|^2|a||b|) >= 0,  A = A(1,1/2)",
               .chain_labels = {"0", "A/(|x|^2|a||b|)", "1/2|x|^2|a||b| - |<a,x><x,b> - 1/2|x|^2<a,b>|"},
               .vectors = {nonzero_vec("a"), nonzero_vec("b"), nonzero_vec("x")},
               .principal_link = 1,
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 const double s = norm_sq(v.x) * norm(v.a) * norm(v.b);
                 return {0.0, a_term(v.a, v.b, v.x, 1.0, 0.5) / s, 0.5 * s - std::abs(kdm(v, 1.0, 0.5))};
               }});

  r.push_back({.id = "COR_24",
               .quote = "the continuity property of the modulus",
               .statement = "|x|^2(|beta||<a,b>| - M|a||b|) + A/(2M|x|^2|a||b|) <= |alpha||<a,x><x,b>| <= |x|^2(|beta||<a,b>| + M|a||b|) - A/(2M|x|^2|a||b|)",
               .chain_labels = {"|x|^2(|beta||<a,b>|-M|a||b|)+A/(2M|x|^2|a||b|)", "|alpha||<a,x><x,b>|",
                                "|x|^2(|beta||<a,b>|+M|a||b|)-A/(2M|x|^2|a||b|)"},
               .vectors = {nonzero_vec("a"), nonzero_vec("b"), nonzero_vec("x")},
               .params = alpha_beta("beta != 0", true),
               .two_sided = true,
               .principal_link = 1,
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 const Complex alpha = c.param("alpha");
                 const Complex beta = c.param("beta");
                 const double m = mx(alpha, beta);
                 const double xx = norm_sq(v.x);
                 const double nab = norm(v.a) * norm(v.b);
                 const double corr = a_term(v.a, v.b, v.x, alpha, beta) / (2.0 * m * xx * nab);
                 const double base = std::abs(beta) * abs_ip(v.a, v.b);
                 return {xx * (base - m * nab) + corr, std::abs(alpha) * std::abs(inner(v.a, v.x) * inner(v.x, v.b)),
                         xx * (base + m * nab) - corr};
               }});

  r.push_back({.id = "PROP_25",
               .quote = "a refinement of Buzano's inequality",
               .statement = "|<a,x><x,b>| <= |x|^2(1/2|<a,b>| + 1/2|a||b|) - max{A(1,1/2), 1/4 A(2,1)}/(|x|^2|a||b|)",
               .chain_labels = {"|<a,x><x,b>|", "|x|^2(|<a,b>|+|a||b|)/2 - max{A(1,1/2),A(2,1)/4}/(|x|^2|a||b|)"},
               .vectors = {nonzero_vec("a"), nonzero_vec("b"), nonzero_vec("x")},
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 const double xx = norm_sq(v.x);
                 const double nab = norm(v.a) * norm(v.b);
                 const double a = std::max(a_term(v.a, v.b, v.x, 1.0, 0.5), 0.25 * a_term(v.a, v.b, v.x, 2.0, 1.0));
                 return {std::abs(inner(v.a, v.x) * inner(v.x, v.b)), 0.5 * xx * (abs_ip(v.a, v.b) + nab) - a / (xx * nab)};
               }});

  r.push_back({.id = "OPNORM_26",
               .quote = "we can rewrite inequality",
               .statement = "|<(alpha x(x) - beta|x|^2 I)a, b>| <= max{|beta|,|alpha-beta|} |x|^2|a||b|",
               .chain_labels = {"|<(alpha x(x) - beta|x|^2 I)a,b>|", "max{|beta|,|alpha-beta|}|x|^2|a||b|"},
               .vectors = {free_vec("a"), free_vec("b"), free_vec("x")},
               .params = alpha_beta("alpha, beta in C", false),
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 const Complex alpha = c.param("alpha");
                 const Complex beta = c.param("beta");
                 const Operator t = combine<Complex>({{alpha, rank_one(v.x, v.x)}}, -beta * norm_sq(v.x));
                 return {std::abs(form(t, v.a, v.b)), mx(alpha, beta) * norm_sq(v.x) * norm(v.a) * norm(v.b)};
               }});

  r.push_back({.id = "FUJII_KUBO",
               .quote = "simpler proof of Buzano's inequality",
               .statement = "|2 x(x) - I| <= 1,  |x| = 1",
               .chain_labels = {"|2 x(x) - I|", "1"},
               .vectors = {unit_vec("x")},
               .chain = [](const Case& c) -> Values {
                 const Vec& x = c.vec("x");
                 return {spectral_norm(combine<Complex>({{2.0, rank_one(x, x)}}, -1.0)), 1.0};
               }});

  r.push_back({.id = "SELBERG",
               .quote = "Selberg's inequality, which asserts",
               .statement = "sum_i |<x,z_i>|^2 / sum_j |<z_i,z_j>| <= |x|^2",
               .chain_labels = {"<S_Z x, x>", "|x|^2"},
               .vectors = {free_vec("x")},
               .families = {{"Z"}},
               .chain = [](const Case& c) -> Values {
                 const Vec& x = c.vec("x");
                 const auto& zs = c.family("Z");
                 const auto d = selberg_weights(zs);
                 double lhs = 0.0;
                 for (std::size_t i = 0; i < zs.size(); ++i) lhs += std::norm(inner(x, zs[i])) / d[i];
                 return {lhs, norm_sq(x)};
               }});

  r.push_back({.id = "SELBERG_CS_REF",
               .quote = "another refinement of the (C-S) inequality",
               .statement = "0 <= (|a|^2 - <S_{b}a,a>)(|b|^2 - <S_{a}b,b>) <= |a|^2|b|^2 - |<a,b>|^2",
               .chain_labels = {"0", "(|a|^2-<S_{b}a,a>)(|b|^2-<S_{a}b,b>)", "|a|^2|b|^2-|<a,b>|^2"},
               .vectors = {nonzero_vec("a"), nonzero_vec("b")},
               .principal_link = 1,
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 const double fa = norm_sq(a) - form(selberg(std::vector<Vec>{b}), a, a).real();
                 const double fb = norm_sq(b) - form(selberg(std::vector<Vec>{a}), b, b).real();
                 return {0.0, fa * fb, cs_defect(a, b)};
               }});

  r.push_back({.id = "RICHARD_SELBERG",
               .quote = "using an appropiate Selberg operator",
               .statement = "|<S_{x}a,b> - 1/2<a,b>| <= 1/2|a||b|,  |x| = 1",
               .chain_labels = {"|<S_{x}a,b> - 1/2<a,b>|", "1/2|a||b|"},
               .vectors = {free_vec("a"), free_vec("b"), unit_vec("x")},
               .chain = [](const Case& c) -> Values {
                 const Abx v(c);
                 const Operator s = selberg(std::vector<Vec>{v.x});
                 return {std::abs(form(s, v.a, v.b) - 0.5 * inner(v.a, v.b)), 0.5 * norm(v.a) * norm(v.b)};
               }});

  r.push_back({.id = "LEMMA_PREV_CHAIN",
               .quote = "For any $a, b \\in \\mathcal{X}$",
               .statement = "|<a,b>| <= |<a,b>| - |<S a,b>| + r <= |<a,b> - <S a,b>| + r <= |a||b|,  r = <S a,a>^(1/2)<S b,b>^(1/2)",
               .chain_labels = {"|<a,b>|", "|<a,b>|-|<Sa,b>|+r", "|<a,b>-<Sa,b>|+r", "|a||b|"},
               .vectors = {free_vec("a"), free_vec("b")},
               .families = {{"Z"}},
               .principal_link = 2,
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 const Operator s = selberg(c.family("Z"));
                 const Complex ab = inner(a, b);
                 const Complex sab = form(s, a, b);
                 const double r = std::sqrt(std::max(0.0, form(s, a, a).real())) * std::sqrt(std::max(0.0, form(s, b, b).real()));
                 return {std::abs(ab), std::abs(ab) - std::abs(sab) + r, std::abs(ab - sab) + r, norm(a) * norm(b)};
               }});

  r.push_back({.id = "TH_GEN",
               .quote = "The case of equality holds",
               .statement = "|<S_Z a,b> - 1/2<a,b>| <= 1/2|a||b|",
               .chain_labels = {"|<S_Z a,b> - 1/2<a,b>|", "1/2|a||b|"},
               .vectors = {free_vec("a"), free_vec("b")},
               .families = {{"Z"}},
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 const Operator s = selberg(c.family("Z"));
                 return {std::abs(form(s, a, b) - 0.5 * inner(a, b)), 0.5 * norm(a) * norm(b)};
               }});

  r.push_back({.id = "PROP_EORTH",
               .quote = "a refinement of the Cauchy",
               .statement = "|<S_Z a,b> - 1/2<a,b>| <= |<S_Z a,b> - 1/2<a,b> + 1/2<a,e><e,b>| + 1/2|<a,e><e,b>| <= 1/2|a||b|,  e in Z^perp, |e| = 1",
               .chain_labels = {"|<S_Z a,b> - 1/2<a,b>|", "|<S_Z a,b> - 1/2<a,b> + 1/2<a,e><e,b>| + 1/2|<a,e><e,b>|", "1/2|a||b|"},
               .vectors = {free_vec("a"), free_vec("b"), {"e", {orthogonal_to_family("Z"), unit()}}},
               .families = {{.name = "Z", .leave_complement = true}},
               .min_dim = 2,
               .principal_link = 1,
               .chain = [](const Case& c) -> Values {
                 return eorth_chain(selberg(c.family("Z")), c.vec("a"), c.vec("b"), c.vec("e"));
               }});

  r.push_back({.id = "REF_CS_DRAGOMIR",
               .quote = "is also established by Dragomir",
               .statement = "|<a,b>| <= |<a,b> - <a,e><e,b>| + |<a,e><e,b>| <= |a||b|,  |e| = 1",
               .chain_labels = {"|<a,b>|", "|<a,b>-<a,e><e,b>|+|<a,e><e,b>|", "|a||b|"},
               .vectors = {free_vec("a"), free_vec("b"), unit_vec("e")},
               .principal_link = 1,
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 const Vec& e = c.vec("e");
                 const Complex ab = inner(a, b);
                 const Complex p = inner(a, e) * inner(e, b);
                 return {std::abs(ab), std::abs(ab - p) + std::abs(p), norm(a) * norm(b)};
               }});

  r.push_back({.id = "COR_RICHARD_REF",
               .quote = "refinement of Richard's inequality, from",
               .statement = "|<a,x><x,b> - 1/2<a,b>| <= |<a,x><x,b> - 1/2<a,b> + 1/2<a,e><e,b>| + 1/2|<a,e><e,b>| <= 1/2|a||b|,  |x| = 1, <x,e> = 0",
               .chain_labels = {"|<a,x><x,b> - 1/2<a,b>|", "|<a,x><x,b> - 1/2<a,b> + 1/2<a,e><e,b>| + 1/2|<a,e><e,b>|", "1/2|a||b|"},
               .vectors = {free_vec("a"), free_vec("b"), unit_vec("x"), {"e", {orthogonal_to("x"), unit()}}},
               .min_dim = 2,
               .principal_link = 1,
               .chain = [](const Case& c) -> Values {
                 const Vec& x = c.vec("x");
                 return eorth_chain(rank_one(x, x), c.vec("a"), c.vec("b"), c.vec("e"));
               }});

  r.push_back({.id = "COR_BUZANO_SELBERG",
               .quote = "refinement of Buzano type inequality",
               .statement = "|<S_Z a,b>| <= |<S_Z a,b> - 1/2<a,b> + 1/2<a,e><e,b>| + |1/2<a,e><e,b>| + 1/2|<a,b>| <= 1/2(|<a,b>| + |a||b|)",
               .chain_labels = {"|<S_Z a,b>|", "|<S_Z a,b>-1/2<a,b>+1/2<a,e><e,b>|+1/2|<a,e><e,b>|+1/2|<a,b>|",
                                "1/2(|<a,b>|+|a||b|)"},
               .vectors = {free_vec("a"), free_vec("b"), {"e", {orthogonal_to_family("Z"), unit()}}},
               .families = {{.name = "Z", .leave_complement = true}},
               .min_dim = 2,
               .principal_link = 1,
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 const Vec& e = c.vec("e");
                 const Complex sab = form(selberg(c.family("Z")), a, b);
                 const Complex ab = inner(a, b);
                 const Complex p = inner(a, e) * inner(e, b);
                 return {std::abs(sab), std::abs(sab - 0.5 * ab + 0.5 * p) + 0.5 * std::abs(p) + 0.5 * std::abs(ab),
                         0.5 * (std::abs(ab) + norm(a) * norm(b))};
               }});

  r.push_back({.id = "PREC_GEN",
               .quote = "complex version of Precupanu",
               .statement = "|M(a,b,w,z) - 1/2<a,b>| <= 1/2|a||b|,  w, z nonzero",
               .chain_labels = {"|M - 1/2<a,b>|", "1/2|a||b|"},
               .vectors = {free_vec("a"), free_vec("b"), nonzero_vec("w"), nonzero_vec("z")},
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 return {std::abs(precupanu_middle(c) - 0.5 * inner(a, b)), 0.5 * norm(a) * norm(b)};
               }});

  r.push_back({.id = "PREC_GEN2",
               .quote = "generalization of Buzano's inequality",
               .statement = "|M(a,b,w,z)| <= 1/2(|<a,b>| + |a||b|),  w, z nonzero",
               .chain_labels = {"|M|", "1/2(|<a,b>|+|a||b|)"},
               .vectors = {free_vec("a"), free_vec("b"), nonzero_vec("w"), nonzero_vec("z")},
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 return {std::abs(precupanu_middle(c)), 0.5 * (abs_ip(a, b) + norm(a) * norm(b))};
               }});

  r.push_back({.id = "SUM_BOUND",
               .quote = "is a submultiplicative norm",
               .statement = "|<sum_k z_k(S_k - 1/2 I)a, b>| <= sum_k |z_k| / 2 |a||b|",
               .chain_labels = {"|<sum z_k(S_k - I/2)a,b>|", "sum|z_k|/2 |a||b|"},
               .vectors = {free_vec("a"), free_vec("b")},
               .subsets = operator_subsets(),
               .params = free_weights(),
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 Complex zsum{};
                 double abs_sum = 0.0;
                 for (auto z : c.weights) {
                   zsum += z;
                   abs_sum += std::abs(z);
                 }
                 const Operator t = weighted_selberg_sum(c, -0.5 * zsum);
                 return {std::abs(form(t, a, b)), abs_sum / 2.0 * norm(a) * norm(b)};
               }});

  r.push_back({.id = "PROD_BOUND",
               .quote = "is a submultiplicative norm",
               .statement = "|<prod_k z_k(S_k - 1/2 I)a, b>| <= prod_k |z_k| / 2^n |a||b|",
               .chain_labels = {"|<prod z_k(S_k - I/2)a,b>|", "prod|z_k|/2^n |a||b|"},
               .vectors = {free_vec("a"), free_vec("b")},
               .subsets = operator_subsets(),
               .params = free_weights(),
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 const Complex zp = weight_product(c);
                 const Complex lhs = zp * inner(product_apply(c, a), b);
                 return {std::abs(lhs), std::abs(zp) / two_pow(c.weights.size()) * norm(a) * norm(b)};
               }});

  // Q = I/2 - prod_k z_k(S_k - I/2); for n = 2 this is S_1 + S_2 - 2 S_1 S_2.
  r.push_back({.id = "PROD_RICHARD",
               .quote = "In particular, if",
               .statement = "|<Q a,b> - 1/2<a,b>| <= 1/2|a||b|,  Q = 1/2 I - prod_k z_k(S_k - 1/2 I),  (-1)^n prod z_k = 2^(n-1)",
               .chain_labels = {"|<Qa,b> - 1/2<a,b>|", "1/2|a||b|"},
               .vectors = {free_vec("a"), free_vec("b")},
               .subsets = operator_subsets(),
               .params = product_weights(),
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 const Vec qa = Complex(0.5) * a - weight_product(c) * product_apply(c, a);
                 return {std::abs(inner(qa, b) - 0.5 * inner(a, b)), 0.5 * norm(a) * norm(b)};
               }});

  r.push_back({.id = "COR_CONVEX",
               .quote = "complex numbers such that",
               .statement = "|<(sum_k z_k S_k)a, b> - 1/2<a,b>| <= 1/2|a||b|,  sum z_k = sum |z_k| = 1",
               .chain_labels = {"|<(sum z_k S_k)a,b> - 1/2<a,b>|", "1/2|a||b|"},
               .vectors = {free_vec("a"), free_vec("b")},
               .subsets = operator_subsets(),
               .params = simplex_weights(),
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 const Operator t = weighted_selberg_sum(c, Complex{});
                 return {std::abs(form(t, a, b) - 0.5 * inner(a, b)), 0.5 * norm(a) * norm(b)};
               }});

  r.push_back({.id = "PROP_BUZANO_GEN",
               .quote = "attain a generalization of Buzano's",
               .statement = "|<(sum_k z_k S_k)a, b>| <= 1/2(|<a,b>| + |a||b|),  sum z_k = sum |z_k| = 1",
               .chain_labels = {"|<(sum z_k S_k)a,b>|", "1/2(|<a,b>|+|a||b|)"},
               .vectors = {free_vec("a"), free_vec("b")},
               .subsets = operator_subsets(),
               .params = simplex_weights(),
               .chain = [](const Case& c) -> Values {
                 const Vec& a = c.vec("a");
                 const Vec& b = c.vec("b");
                 const Operator t = weighted_selberg_sum(c, Complex{});
                 return {std::abs(form(t, a, b)), 0.5 * (abs_ip(a, b) + norm(a) * norm(b))};
               }});

  r.push_back({.id = "OPNORM_16_3",
               .quote = "Taking the supremum in above relation",
               .statement = "|alpha S_{x} - beta I| <= max{|beta|,|alpha-beta|},  x nonzero",
               .chain_labels = {"|alpha S_{x} - beta I|", "max{|beta|,|alpha-beta|}"},
               .vectors = {nonzero_vec("x")},
               .params = alpha_beta("alpha, beta in C", false),
               .chain = [](const Case& c) -> Values {
                 const Vec& x = c.vec("x");
                 const Complex alpha = c.param("alpha");
                 const Complex beta = c.param("beta");
                 const Operator t = combine<Complex>({{alpha, selberg(std::vector<Vec>{x})}}, -beta);
                 return {spectral_norm(t), mx(alpha, beta)};
               }});

  return r;
}

}  // namespace

const std::vector<InequalityEntry>& list_entries() {
  static const std::vector<InequalityEntry> entries = build();
  return entries;
}

const InequalityEntry& synthetic_violation_entry() {
  static const InequalityEntry entry{.id = "SYNTHETIC_VIOLATION",
                                     .quote = "deliberately false chain for exercising failure reporting",
                                     .statement = "2|a|^2 <= |a|^2",
                                     .chain_labels = {"2|a|^2", "|a|^2"},
                                     .vectors = {nonzero_vec("a")},
                                     .chain = [](const Case& c) -> Values {
                                       const double aa = norm_sq(c.vec("a"));
                                       return {2.0 * aa, aa};
                                     }};
  return entry;
}

}  // namespace ipx
