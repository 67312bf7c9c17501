#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace fnls {

// Japanese bracket <n> = sqrt(1 + n^2).
inline double bracket(double n) { return std::sqrt(1.0 + n * n); }

// <n>^p without going through bracket() twice; p = 0 returns exactly 1.
inline double bracket_pow(double n, double p) {
    if (p == 0.0) return 1.0;
    return std::pow(1.0 + n * n, 0.5 * p);
}

// Neumaier compensated accumulator. The quadruple sums difference nearly
// equal large terms, so plain summation would drown the identity residuals.
class KahanSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Worker count resolution: explicit value wins, then FNLS_WORKERS, then
// hardware concurrency. Always at least 1.
int resolve_workers(int requested);

// Runs fn(i) for i in [0, n). Work is split into fixed contiguous blocks so
// that any per-index output written by fn lands in a caller-owned slot;
// results are then independent of the worker count.
void parallel_for(std::int64_t n, int workers, const std::function<void(std::int64_t)>& fn);

}  // namespace fnls
