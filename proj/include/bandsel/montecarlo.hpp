#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bandsel/asymptotics.hpp"
#include "bandsel/criteria.hpp"

namespace bandsel {

// Simulation study: replicate paths y = r + eps on the equispaced design,
// ASE and Mallows-CL curves over a bandwidth grid, and the gap between their
// minimizers. Defaults mirror the benchmark experiment at desk scale.
struct StudyConfig {
  std::size_t n = 512;
  std::vector<double> alphas{0.01, 0.162, 0.577, 0.75, 0.9, 0.98};
  double sigma = 0.32;
  std::size_t replicates = 100;
  std::uint64_t base_seed = 42;
  std::string kernel = "biweight";
  std::string trend = "benchmark";
  std::string weight = "uniform";
  bool periodic = true;
  bool use_fft = true;         // periodic plans only; ignored otherwise
  bool store_curves = false;   // keep per-replicate criterion curves
  std::size_t threads = 1;     // worker threads; 0 = hardware concurrency
  std::size_t grid_points = 200;
  double grid_lo = 0.0;        // both 0 -> automatic n-dependent grid
  double grid_hi = 0.0;
  bool wide_grid = false;      // fixed wide range instead of the automatic one
};

// Throws invalid_argument on out-of-range settings. Non-periodic smoothing
// with the uniform weight is rejected: boundary bias would dominate every
// criterion, so those runs need a weight vanishing at the edges.
void validate(const StudyConfig& cfg);

struct ReplicateRecord {
  std::uint64_t seed = 0;
  double h_ase = 0.0;  // ASE minimizer over the grid
  double h_cl = 0.0;   // CL minimizer over the grid
  double gap = 0.0;    // h_cl - h_ase
  // Filled only when the config asks for curves.
  std::vector<double> ase_curve;
  std::vector<double> cl_centered_curve;  // CL minus (1/n) sum u eps^2
};

struct AlphaSummary {
  double alpha = 0.0;
  std::vector<ReplicateRecord> records;
  // Pointwise over the grid, across replicates:
  std::vector<double> emase;             // mean ASE (empirical MASE)
  std::vector<double> emase_se;
  std::vector<double> cl_centered_mean;  // mean of CL - (1/n) sum u eps^2
  std::vector<double> cl_centered_se;
  double mean_ratio = 0.0;    // mean of h_cl / h_ase
  double median_ratio = 0.0;
  double mean_h_ase = 0.0;
  double mean_h_cl = 0.0;
  double mean_gap = 0.0;
  double sd_gap = 0.0;
  double gap_sd_theory = 0.0;           // bandwidth_gap_sd at this n
  double ks_standardized_gaps = 0.0;    // KS of (h_ase-h_cl)/gap_sd_theory vs N(0,1)
};

struct StudySummary {
  StudyConfig config;  // resolved (threads substituted, grid recorded below)
  BandwidthGrid grid;
  bool has_theory = false;  // false for degenerate (flat/linear) trends
  AsymptoticInputs inputs;  // valid when has_theory
  double h_star = 0.0;      // c n^{-1/5}, when has_theory
  std::vector<double> mase_curve;        // exact MASE over the grid
  std::vector<double> asymptotic_curve;  // leading-order MASE over the grid
  std::vector<AlphaSummary> per_alpha;
};

// Deterministic given (base_seed, alpha, index); alpha must be one of
// cfg.alphas because the replicate seed hashes the alpha's position.
ReplicateRecord run_replicate(const StudyConfig& cfg, double alpha, std::size_t index);

// Replicates may run on several threads; aggregation is a sequential fold in
// replicate order, so summaries are bitwise identical for any thread count.
StudySummary run_study(const StudyConfig& cfg);

// Two-sided Kolmogorov-Smirnov distance between a sample and a reference CDF.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

// Pointwise mean of stored ASE curves; throws if any record lacks one.
std::vector<double> empirical_mase(const std::vector<ReplicateRecord>& records);

}  // namespace bandsel
