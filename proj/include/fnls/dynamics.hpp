#pragma once

#include <vector>

#include "fnls/errors.hpp"
#include "fnls/fourier.hpp"

namespace fnls {

enum class Sign { focusing, defocusing };

// +1 for the focusing (+|u|^2 u) equation, -1 for defocusing.
inline double equation_sign(Sign s) { return s == Sign::focusing ? 1.0 : -1.0; }

// Everything that determines the truncated flow: dispersion exponent,
// nonlinearity sign, truncation, and integrator controls.
struct FlowParams {
    double alpha = 1.0;
    Sign sign = Sign::defocusing;
    int n_max = 0;
    double dt_max = 0.1;
    double rel_tol = 1e-10;
    bool linear_only = false;  // drops the nonlinearity; used by integrator checks

    void validate() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<FourierState> states;
    FlowParams params;
};

// Exact free evolution: coefficient n multiplied by exp(i t |n|^{2 alpha}).
FourierState linear_propagator(const FourierState& state, double t, double alpha);

// Right-hand side d/dt c_n = i |n|^{2a} c_n - i sign (P_{<=N} |u|^2 u)_n.
FourierState vector_field(const FourierState& state, const FlowParams& params);

// Flow map of the truncated equation, integrated in the interaction picture
// (exact linear phases) with an embedded Dormand-Prince 5(4) pair and PI step
// control. Negative t_target integrates backward. Throws StepFailure when the
// controller stalls at the minimum step.
FourierState evolve(const FourierState& state, double t_target, const FlowParams& params);

// Conserved energy of the truncated flow:
//   H = 1/2 sum |n|^{2a} |c_n|^2 - sign/4 sum_{n1-n2+n3-n4=0} c1 conj(c2) c3 conj(c4),
// all frequencies restricted to |n| <= n_max.
double hamiltonian(const FourierState& state, const FlowParams& params);

// Central finite-difference trace of the Jacobian of vector_field in real
// coordinates (Re c_n, Im c_n). The field is divergence-free, so the returned
// value is the discretization residual and must vanish as h -> 0.
double divergence_check(const FourierState& state, const FlowParams& params, double h);

// States at the given strictly increasing times (which must include the
// starting time as first entry; state is the datum at times.front()).
Trajectory integrate_trajectory(const FourierState& state, const std::vector<double>& times,
                                const FlowParams& params);

}  // namespace fnls
