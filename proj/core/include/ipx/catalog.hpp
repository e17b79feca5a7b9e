#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipx/linalg.hpp"
#include "ipx/scalars.hpp"

namespace ipx {

/// Concrete inputs for one evaluation of a catalog entry.
struct Case {
  std::map<std::string, Vec> vectors;
  std::map<std::string, std::vector<Vec>> families;  // finite sets Z of nonzero vectors
  std::vector<std::vector<Vec>> subsets;             // Z_1, ..., Z_n for operator sums and products
  std::map<std::string, Complex> params;             // alpha, beta
  std::vector<Complex> weights;                      // z_1, ..., z_n paired with `subsets`

  const Vec& vec(const std::string& name) const;
  const std::vector<Vec>& family(const std::string& name) const;
  Complex param(const std::string& name) const;
};

// ---------------------------------------------------------------------------
// Signatures
// ---------------------------------------------------------------------------

enum class VecRule {
  Nonzero,
  Unit,
  OrthogonalTo,        // ref names a vector
  OrthogonalToFamily,  // ref names a family; the vector lies in its orthogonal complement
  InnerEqualsOne,      // <v, ref> = 1
  InnerModulusOne,     // |<v, ref>| = 1 (sampled with <v, ref> = 1)
  NotProportionalTo,
};

struct VecConstraint {
  VecRule rule;
  std::string ref;
};

struct VectorSpec {
  std::string name;
  std::vector<VecConstraint> constraints;
};

struct FamilySpec {
  std::string name;
  std::size_t min_size = 1;
  std::size_t max_size = 5;
  /// Keep |Z| <= dim - 1 so that the orthogonal complement is nontrivial.
  bool leave_complement = false;
};

struct SubsetSpec {
  std::size_t min_count = 0;  // 0: the entry has no operator family list
  std::size_t max_count = 0;
  std::size_t max_size = 3;
};

/// Region for the complex parameters and weights. Validation returns an error
/// message for cases outside the region.
struct ParamSpec {
  std::vector<std::string> names;  // e.g. {"alpha", "beta"}
  std::string region;              // human-readable side condition
  std::function<void(Case&, Rng&)> sample;
  std::function<std::optional<std::string>(const Case&)> check;
  /// Maps a perturbed case back into the region; false when that is impossible.
  std::function<bool(Case&)> project;
};

using ChainFn = std::function<std::vector<double>(const Case&)>;

/// One inequality of the catalogue: an ascending chain e_0 <= e_1 <= ... <= e_m.
struct InequalityEntry {
  std::string id;
  std::string quote;      // short anchor identifying the statement in the source text
  std::string statement;  // the chain in plain notation
  std::vector<std::string> chain_labels;
  std::vector<VectorSpec> vectors;
  std::vector<FamilySpec> families;
  SubsetSpec subsets;
  std::optional<ParamSpec> params;
  bool real_space = false;
  bool two_sided = false;
  std::size_t min_dim = 1;
  std::size_t principal_link = 0;  // link certifying the headline bound
  ChainFn chain;
};

struct Violation {
  std::size_t link;
  double excess;  // e_link - e_{link+1}
};

struct CheckResult {
  std::string id;
  std::vector<double> values;
  std::vector<Violation> violations;
  bool pass = false;
  /// link_ratio per adjacent pair, after values within tolerance of zero are
  /// snapped to zero (so rounding noise on a degenerate 0 <= 0 link reads as 0/0).
  std::vector<double> link_ratios;
  double tightness = 0.0;  // max of link_ratios
};

struct FuzzSummary {
  std::string id;
  std::uint64_t samples = 0;
  double max_excess = -std::numeric_limits<double>::infinity();
  double max_tightness = 0.0;
  std::uint64_t violations = 0;
  std::uint64_t seed = 0;
  bool pass = true;

  /// Associative merge (sum / max / max).
  void merge(const FuzzSummary& other);
};

/// The full registry, in a fixed order.
const std::vector<InequalityEntry>& list_entries();
/// Throws std::invalid_argument("unknown entry id: ...").
const InequalityEntry& find_entry(std::string_view id);
/// Entry with a deliberately false chain (2 <= 1 scaled by ||a||^2), used to
/// exercise failure reporting end to end. Not part of the registry.
const InequalityEntry& synthetic_violation_entry();

/// Ratio e_lo / e_hi with 0/0 -> 0; signed chains use the mirrored ratio. A value
/// above 1 means the link is violated.
double link_ratio(double lo, double hi);

/// Throws std::invalid_argument("constraint violation: ...") when the case does
/// not satisfy the entry's signature.
void validate_case(const InequalityEntry& entry, const Case& c, const SamplerLimits& limits = {});

CheckResult evaluate(const InequalityEntry& entry, const Case& c, const TolerancePolicy& policy = {});
CheckResult evaluate(std::string_view entry_id, const Case& c, const TolerancePolicy& policy = {});

struct SampleOptions {
  std::optional<std::size_t> family_size;  // fixes |Z| for every family
};

/// Draws a case honouring the entry's signature. Throws std::runtime_error on
/// infeasible constraints.
Case sample_case(const InequalityEntry& entry, std::size_t dim, Rng& rng, const SampleOptions& options = {});

/// Re-imposes all constraints on a perturbed case; false when it cannot.
bool project_case(const InequalityEntry& entry, Case& c, const SamplerLimits& limits = {});

bool dim_feasible(const InequalityEntry& entry, std::size_t dim);

/// n samples per dimension; deterministic per seed (sample i of dim d uses a seed
/// derived from (seed, d, i)).
FuzzSummary fuzz(const InequalityEntry& entry, std::uint64_t n, const std::vector<std::size_t>& dims,
                 std::uint64_t seed, const TolerancePolicy& policy = {}, unsigned threads = 1);
FuzzSummary fuzz(std::string_view entry_id, std::uint64_t n, const std::vector<std::size_t>& dims,
                 std::uint64_t seed, const TolerancePolicy& policy = {}, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Shared building blocks, exposed for cross-entry consistency checks
// ---------------------------------------------------------------------------

/// ||x||^2 ||y||^2 - |<x,y>|^2, computed as ||y||^2 ||x - proj_y x||^2.
double cs_defect(const Vec& x, const Vec& y);
/// A(alpha, beta) = (|alpha||<a,x>| sqrt(cs_defect(x,b)) - |beta| ||x||^2 sqrt(cs_defect(a,b)))^2.
double a_term(const Vec& a, const Vec& b, const Vec& x, Complex alpha, Complex beta);

}  // namespace ipx
