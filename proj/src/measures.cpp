#include "fnls/measures.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fnls/errors.hpp"
#include "fnls/util.hpp"

namespace fnls {

void MeasureSpec::validate() const {
    if (n_max < 0) throw std::invalid_argument("MeasureSpec: n_max must be >= 0");
    if (cutoff_r && !(*cutoff_r > 0.0))
        throw std::invalid_argument("MeasureSpec: cutoff_r, if present, must be positive");
    if (!std::isfinite(s)) throw std::invalid_argument("MeasureSpec: s must be finite");
}

namespace {

constexpr std::int64_t MAX_CONSECUTIVE_REJECTIONS = 1'000'000;

FourierState draw_free(const MeasureSpec& spec, RandomStream& stream) {
    FourierState phi(spec.n_max);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int n = -spec.n_max; n <= spec.n_max; ++n) {
        const auto [x, y] = stream.next_normal_pair();
        const double w = bracket_pow(n, -spec.s) * inv_sqrt2;
        phi.at(n) = Complex{x * w, y * w};
    }
    return phi;
}

}  // namespace

FourierState sample(const MeasureSpec& spec, RandomStream& stream, std::int64_t* n_rejected) {
    spec.validate();
    if (!spec.cutoff_r) return draw_free(spec, stream);
    for (std::int64_t attempt = 0; attempt < MAX_CONSECUTIVE_REJECTIONS; ++attempt) {
        FourierState phi = draw_free(spec, stream);
        if (sobolev_norm(phi, {0.0}) <= *spec.cutoff_r) return phi;
        if (n_rejected) ++*n_rejected;
    }
    throw CutoffStarvation("sample: " + std::to_string(MAX_CONSECUTIVE_REJECTIONS) +
                           " consecutive rejections; cutoff radius too small for (s, N)");
}

MCEstimate mc_expectation(const std::function<double(const FourierState&)>& F,
                          const MeasureSpec& spec, std::int64_t M, std::uint64_t seed,
                          int workers) {
    auto wrapped = [&F](const FourierState& phi) { return std::vector<double>{F(phi)}; };
    return mc_expectation_multi(wrapped, 1, spec, M, seed, workers).front();
}

std::vector<MCEstimate> mc_expectation_multi(
    const std::function<std::vector<double>(const FourierState&)>& F, std::size_t n_outputs,
    const MeasureSpec& spec, std::int64_t M, std::uint64_t seed, int workers) {
    spec.validate();
    if (M < 2) throw std::invalid_argument("mc_expectation: M must be >= 2");
    if (n_outputs == 0) throw std::invalid_argument("mc_expectation: n_outputs must be >= 1");

    std::vector<double> values(static_cast<std::size_t>(M) * n_outputs);
    std::vector<std::int64_t> rejected(static_cast<std::size_t>(M), 0);

    parallel_for(M, workers, [&](std::int64_t j) {
        RandomStream stream(seed, static_cast<std::uint64_t>(j));
        FourierState phi;
        try {
            phi = sample(spec, stream, &rejected[static_cast<std::size_t>(j)]);
        } catch (const CutoffStarvation& e) {
            throw CutoffStarvation(std::string(e.what()) + " (sample index " + std::to_string(j) +
                                   ")");
        }
        std::vector<double> out;
        try {
            out = F(phi);
        } catch (const StepFailure& e) {
            throw StepFailure(std::string(e.what()) + " (sample index " + std::to_string(j) + ")");
        }
        if (out.size() != n_outputs)
            throw std::logic_error("mc_expectation: functional returned wrong arity");
        for (std::size_t k = 0; k < n_outputs; ++k)
            values[static_cast<std::size_t>(j) * n_outputs + k] = out[k];
    });

    std::int64_t total_rejected = 0;
    for (auto r : rejected) total_rejected += r;

    std::vector<MCEstimate> results(n_outputs);
    for (std::size_t k = 0; k < n_outputs; ++k) {
        KahanSum acc;
        for (std::int64_t j = 0; j < M; ++j)
            acc.add(values[static_cast<std::size_t>(j) * n_outputs + k]);
        const double mean = acc.value() / static_cast<double>(M);
        KahanSum var;
        for (std::int64_t j = 0; j < M; ++j) {
            const double d = values[static_cast<std::size_t>(j) * n_outputs + k] - mean;
            var.add(d * d);
        }
        const double sample_var = var.value() / static_cast<double>(M - 1);
        results[k] = MCEstimate{mean, std::sqrt(sample_var / static_cast<double>(M)), M, seed,
                                total_rejected};
    }
    return results;
}

MCEstimate partition_estimate(const MeasureSpec& spec, double q, double sigma, std::int64_t M,
                              std::uint64_t seed, std::int64_t* n_saturated, int workers) {
    spec.validate();
    if (!spec.cutoff_r)
        throw std::invalid_argument("partition_estimate: spec.cutoff_r must be set");
    if (!(q >= 1.0)) throw std::invalid_argument("partition_estimate: q must be >= 1");
    if (!(sigma * q < spec.s))
        throw std::invalid_argument("partition_estimate: requires sigma*q < s");

    MeasureSpec free_spec = spec;
    free_spec.cutoff_r.reset();  // indicator enters as a weight, not by rejection
    const double r = *spec.cutoff_r;

    std::atomic<std::int64_t> saturated{0};
    auto F = [&](const FourierState& phi) {
        if (sobolev_norm(phi, {0.0}) > r) return 0.0;
        const double d2 = sobolev_norm(bracket_multiplier(phi, sigma), {0.0});
        double expo = std::pow(d2 * d2, q);
        if (expo > 700.0) {
            expo = 700.0;
            saturated.fetch_add(1, std::memory_order_relaxed);
        }
        return std::exp(expo);
    };
    MCEstimate est = mc_expectation(F, free_spec, M, seed, workers);
    if (n_saturated) *n_saturated = saturated.load();
    return est;
}

}  // namespace fnls
