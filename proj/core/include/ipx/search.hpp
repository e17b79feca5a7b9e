#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipx/catalog.hpp"

namespace ipx {

struct SearchOptions {
  std::optional<std::size_t> family_size;
  /// Starts handed to local refinement, ranked by their initial tightness.
  std::size_t refine_top = 16;
  double initial_step = 0.25;
  double min_step = 1e-8;
  int max_sweeps = 500;
  unsigned threads = 1;
};

struct SearchResult {
  std::string id;
  std::size_t link = 0;
  double best_tightness = 0.0;
  Case argmax;
  std::uint64_t iterations = 0;  // objective evaluations, all starts included
  std::uint64_t seed = 0;
  std::size_t best_start = 0;
  /// Tightness of the winning start after each accepted refinement step.
  std::vector<double> trajectory;
};

/// Multistart plus coordinate-wise perturbation ascent of link_ratio on one link.
/// Throws std::invalid_argument for a bad budget or link and for infeasible dims.
SearchResult tightness_search(const InequalityEntry& entry, std::size_t link, std::size_t dim, std::size_t budget,
                              std::uint64_t seed, const SearchOptions& options = {});
SearchResult tightness_search(std::string_view entry_id, std::size_t link, std::size_t dim, std::size_t budget,
                              std::uint64_t seed, const SearchOptions& options = {});

struct EqualityCertificate {
  bool holds = false;
  double theta = 0.0;     // in [0, 2 pi)
  double residual = 0.0;  // |S_Z a - a/2 - (|a|/(2|b|)) e^{i theta} b|
};

/// Tests S_Z a = a/2 + (|a|/(2|b|)) e^{i theta} b with theta = arg <S_Z a - a/2, b>.
EqualityCertificate certify_equality(const Vec& a, const Vec& b, const std::vector<Vec>& zs,
                                     const TolerancePolicy& policy = {});

/// Real coordinates of every free input of a case, in a fixed order.
std::vector<double> flatten(const Case& c, bool real_space);
/// Inverse of flatten on a case with the same shape.
void unflatten(Case& c, const std::vector<double>& coords, bool real_space);

}  // namespace ipx
