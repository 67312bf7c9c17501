#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fnls/fourier.hpp"
#include "fnls/rng.hpp"

namespace fnls {

// Gaussian measure mu_{s,N}: law of sum_{|n|<=N} g_n <n>^{-s} e^{inx} with
// i.i.d. standard complex Gaussians g_n. An optional L2 radius restricts to
// the cutoff measure mu_{s,N,r}.
struct MeasureSpec {
    double s = 1.0;
    int n_max = 0;
    std::optional<double> cutoff_r;

    void validate() const;
};

struct MCEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    std::int64_t n_rejected = 0;
};

// One draw from mu_{s,N} (or, with cutoff_r set, from the conditional law
// given ||phi||_{L2} <= r via rejection). Coefficient n is (x+iy)/<n>^s with
// x, y independent N(0, 1/2), so E|g_n|^2 = 1 for every n including n = 0.
// n_rejected, when given, accumulates the rejection count.
FourierState sample(const MeasureSpec& spec, RandomStream& stream,
                    std::int64_t* n_rejected = nullptr);

// Sample mean and standard error of F over M independent draws, one
// counter-based substream per sample index. Results are bit-identical for
// identical (seed, M, spec) regardless of the worker count: per-sample values
// are written into preallocated slots and reduced sequentially.
MCEstimate mc_expectation(const std::function<double(const FourierState&)>& F,
                          const MeasureSpec& spec, std::int64_t M, std::uint64_t seed,
                          int workers = 0);

// Shared-draw variant: evaluates a vector-valued functional once per sample
// and returns one estimate per component. Component k is bit-identical to a
// scalar mc_expectation of that component with the same (seed, M, spec).
std::vector<MCEstimate> mc_expectation_multi(
    const std::function<std::vector<double>(const FourierState&)>& F, std::size_t n_outputs,
    const MeasureSpec& spec, std::int64_t M, std::uint64_t seed, int workers = 0);

// Monte Carlo estimate of E[ 1_{||phi||_{L2} <= r} exp( (||D^sigma phi||_{L2}^2)^q ) ]
// under mu_{s,N}; the indicator enters as a 0/1 weight, not by rejection.
// Requires cutoff_r set, q >= 1 and sigma*q < s. Exponents above 700 are
// clamped there and counted in *n_saturated.
MCEstimate partition_estimate(const MeasureSpec& spec, double q, double sigma, std::int64_t M,
                              std::uint64_t seed, std::int64_t* n_saturated = nullptr,
                              int workers = 0);

}  // namespace fnls
