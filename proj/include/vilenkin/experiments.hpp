#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vilenkin/io.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

inline constexpr const char* kVersion = "0.1.0";

/// Parameters shared by all batch experiments. A fixed seed makes every
/// report byte-identical except for the wall-clock columns of the bench.
struct ExperimentConfig {
    std::string experiment; ///< theorem1-bounded | theorem1-growth | theorem1-convergence |
                            ///< theorem2 | corollary | kernel-dump | transform-bench
    std::vector<int> radices{2};
    std::size_t resolution = 8;
    std::vector<double> p_list;
    std::size_t a_min = 1;
    std::size_t a_max = 8;
    std::int64_t n_max = 0;            ///< 0 means M_R
    std::string index_set = "Mk";      ///< theorem1-bounded: "Mk" or "all"
    std::size_t random_count = 20;
    std::uint64_t seed = 1;
    double alpha = 2.0;                ///< spectral decay of generated test functions
    std::string kernel_kind = "dirichlet";
    std::int64_t kernel_n = 1;
    std::size_t bench_min_log2 = 12;   ///< transform-bench sweeps 2^min .. 2^resolution
    std::string out = "-";
    std::string format = "csv";
};

/// Test function with spectrum |c_n| = (n+1)^(-alpha) and uniform random
/// phases from the given stream; c_0 is kept real positive so nothing
/// degenerates. Deterministic for a fixed (profile, alpha, seed).
GridFunction random_function(const RadixProfile& profile, double alpha, std::uint64_t seed);

/// Scales f so that its Hp quasi-norm is 1.
GridFunction normalize_hp(const GridFunction& f, double p);

Report run_theorem1_bounded(const ExperimentConfig& config);
Report run_theorem1_growth(const ExperimentConfig& config);
Report run_convergence(const ExperimentConfig& config);
Report run_theorem2(const ExperimentConfig& config);
Report run_corollary(const ExperimentConfig& config);
Report run_kernel_dump(const ExperimentConfig& config);
Report run_transform_bench(const ExperimentConfig& config);

/// Dispatches on config.experiment.
Report run_experiment(const ExperimentConfig& config);

} // namespace vilenkin
