#pragma once

#include <complex>
#include <vector>

#include "fnls/util.hpp"

namespace fnls {

using Complex = std::complex<double>;

// Fourier coefficient vector on the torus, frequencies |n| <= n_max.
// Storage is centered: coeffs[k] holds the coefficient of e^{inx} with
// n = k - n_max, so the array has length 2*n_max + 1 in ascending n.
class FourierState {
  public:
    FourierState() : n_max_(0), coeffs_(1, Complex{0.0, 0.0}) {}
    explicit FourierState(int n_max)
        : n_max_(n_max), coeffs_(2 * static_cast<std::size_t>(n_max) + 1, Complex{0.0, 0.0}) {}
    FourierState(int n_max, std::vector<Complex> coeffs);

    int n_max() const { return n_max_; }
    std::size_t dim() const { return coeffs_.size(); }

    Complex& at(int n) { return coeffs_[static_cast<std::size_t>(n + n_max_)]; }
    const Complex& at(int n) const { return coeffs_[static_cast<std::size_t>(n + n_max_)]; }

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    std::vector<Complex>& coeffs() { return coeffs_; }

    bool all_finite() const;

    friend bool operator==(const FourierState&, const FourierState&) = default;

  private:
    int n_max_;
    std::vector<Complex> coeffs_;
};

// Sobolev regularity exponent; kept as a distinct type so call sites do not
// confuse it with time or the dispersion exponent.
struct SobolevIndex {
    double s = 0.0;
};

// Sharp Dirichlet projection to |n| <= M. Shrinks the support when M < n_max,
// otherwise returns the state unchanged.
FourierState project(const FourierState& state, int M);

// H^s norm in sequence space: (sum <n>^{2s} |c_n|^2)^{1/2}. s = 0 is L^2.
double sobolev_norm(const FourierState& state, SobolevIndex s);

// Multiplier <n>^p applied coefficient-wise.
FourierState bracket_multiplier(const FourierState& state, double p);

// Exact cubic convolution (|u|^2 u)^(n) = sum_{n = n1 - n2 + n3} c1 conj(c2) c3
// on the full extended support |n| <= 3 n_max; the caller projects.
FourierState cubic_convolution(const FourierState& state);

// Cubic convolution with the resonant interactions (n1 = n or n3 = n) removed,
// again on the extended support. Equals cubic_convolution minus the diagonal
// corrections 2 ||u||^2 c_n - |c_n|^2 c_n on |n| <= n_max.
FourierState nonresonant_convolution(const FourierState& state);

// Inner product sum c_n conj(d_n) over the common support.
Complex sequence_inner(const FourierState& a, const FourierState& b);

}  // namespace fnls
