#include "fnls/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fnls {

FourierState::FourierState(int n_max, std::vector<Complex> coeffs)
    : n_max_(n_max), coeffs_(std::move(coeffs)) {
    if (n_max_ < 0) throw std::invalid_argument("FourierState: n_max must be >= 0");
    if (coeffs_.size() != 2 * static_cast<std::size_t>(n_max_) + 1)
        throw std::invalid_argument("FourierState: coefficient array must have length 2*n_max+1");
}

bool FourierState::all_finite() const {
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

FourierState project(const FourierState& state, int M) {
    if (M < 0) throw std::invalid_argument("project: M must be >= 0");
    if (M >= state.n_max()) return state;
    FourierState out(M);
    for (int n = -M; n <= M; ++n) out.at(n) = state.at(n);
    return out;
}

double sobolev_norm(const FourierState& state, SobolevIndex s) {
    KahanSum acc;
    for (int n = -state.n_max(); n <= state.n_max(); ++n)
        acc.add(bracket_pow(n, 2.0 * s.s) * std::norm(state.at(n)));
    return std::sqrt(acc.value());
}

FourierState bracket_multiplier(const FourierState& state, double p) {
    FourierState out = state;
    for (int n = -state.n_max(); n <= state.n_max(); ++n) out.at(n) *= bracket_pow(n, p);
    return out;
}

namespace {

// Linear convolution of centered coefficient arrays: (a * b)(n) = sum a_k b_{n-k}.
// Support grows to the sum of the half-widths; no wrap-around, so no aliasing.
FourierState convolve(const FourierState& a, const FourierState& b) {
    FourierState out(a.n_max() + b.n_max());
    for (int k = -a.n_max(); k <= a.n_max(); ++k) {
        const Complex ak = a.at(k);
        if (ak == Complex{0.0, 0.0}) continue;
        for (int m = -b.n_max(); m <= b.n_max(); ++m) out.at(k + m) += ak * b.at(m);
    }
    return out;
}

// Coefficients of conj(u): (conj u)^(m) = conj(u^(-m)).
FourierState reflected_conjugate(const FourierState& u) {
    FourierState out(u.n_max());
    for (int n = -u.n_max(); n <= u.n_max(); ++n) out.at(n) = std::conj(u.at(-n));
    return out;
}

}  // namespace

FourierState cubic_convolution(const FourierState& state) {
    return convolve(convolve(state, reflected_conjugate(state)), state);
}

FourierState nonresonant_convolution(const FourierState& state) {
    FourierState out = cubic_convolution(state);
    double mass = 0.0;
    for (int n = -state.n_max(); n <= state.n_max(); ++n) mass += std::norm(state.at(n));
    for (int n = -state.n_max(); n <= state.n_max(); ++n) {
        const Complex c = state.at(n);
        out.at(n) -= 2.0 * mass * c - std::norm(c) * c;
    }
    return out;
}

Complex sequence_inner(const FourierState& a, const FourierState& b) {
    const int m = std::min(a.n_max(), b.n_max());
    KahanSum re, im;
    for (int n = -m; n <= m; ++n) {
        const Complex t = a.at(n) * std::conj(b.at(n));
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.value(), im.value()};
}

}  // namespace fnls
