#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pcdpe/delaunay.hpp"
#include "pcdpe/graph.hpp"
#include "pcdpe/patterns.hpp"

namespace pcdpe {

// Relative arc / AND-edge / OR-edge densities of one replicate at one r.
struct DensityTriple {
  double arc = 0.0;
  double and_ = 0.0;
  double or_ = 0.0;
};

struct ReplicateResult {
  int index = 0;
  std::vector<DensityTriple> by_r;  // parallel to McConfig::r_list
};

using Geometry = std::variant<Triangle, DelaunayMesh>;

struct McConfig {
  Geometry geometry = Triangle::equilateral();
  PatternSpec pattern;
  int n = 0;
  std::vector<ProximityParam> r_list;
  int n_mc = 0;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
  // Optional append-only JSONL record; completed replicates found there are
  // reused, making long runs resumable.
  std::string checkpoint_path;
};

// Run cfg.n_mc replicates; replicate k draws from RNG stream k, so the output
// is identical for any thread count.  Results are ordered by index.
std::vector<ReplicateResult> run_replicates(const McConfig& cfg);

struct SampleMoments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
};

SampleMoments estimate_moments(std::span<const double> xs);

// Direct estimator of nu = Cov[h12, h13]: sample triples (X1, X2, X3), average
// h(X1,X2) h(X1,X3) and subtract the squared kernel mean.  The standard error
// comes from batch means.
struct KernelCovEstimate {
  double nu_hat = 0.0;
  double mu_hat = 0.0;
  double se = 0.0;
  std::uint64_t n_triples = 0;
};

KernelCovEstimate estimate_kernel_cov(const Triangle& tri,
                                      const PatternSpec& pattern,
                                      ProximityParam r, EdgeMode mode,
                                      std::uint64_t n_triples, RngSeed seed,
                                      int threads = 0);

// Column extraction helpers for replicate tables.
enum class DensityKind { Arc, And, Or };
std::vector<double> density_column(std::span<const ReplicateResult> results,
                                   int r_index, DensityKind kind);

}  // namespace pcdpe
