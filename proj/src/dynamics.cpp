#include "fnls/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fnls {

void FlowParams::validate() const {
    if (!(alpha > 0.5)) throw std::invalid_argument("FlowParams: alpha must exceed 0.5");
    if (!(dt_max > 0.0)) throw std::invalid_argument("FlowParams: dt_max must be positive");
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
        throw std::invalid_argument("FlowParams: rel_tol must lie in (0, 1e-2]");
    if (n_max < 0) throw std::invalid_argument("FlowParams: n_max must be >= 0");
}

namespace {

std::vector<double> dispersion_symbol(int n_max, double alpha) {
    std::vector<double> omega(2 * static_cast<std::size_t>(n_max) + 1);
    for (int n = -n_max; n <= n_max; ++n)
        omega[static_cast<std::size_t>(n + n_max)] = std::pow(std::abs(static_cast<double>(n)), 2.0 * alpha);
    return omega;
}

void check_state(const FourierState& state, const FlowParams& params) {
    params.validate();
    if (state.n_max() != params.n_max)
        throw std::invalid_argument("state truncation does not match FlowParams::n_max");
}

}  // namespace

FourierState linear_propagator(const FourierState& state, double t, double alpha) {
    FourierState out = state;
    for (int n = -state.n_max(); n <= state.n_max(); ++n) {
        const double w = std::pow(std::abs(static_cast<double>(n)), 2.0 * alpha);
        out.at(n) *= std::polar(1.0, t * w);
    }
    return out;
}

FourierState vector_field(const FourierState& state, const FlowParams& params) {
    check_state(state, params);
    const double sgn = equation_sign(params.sign);
    const auto omega = dispersion_symbol(params.n_max, params.alpha);
    FourierState out(params.n_max);
    if (!params.linear_only) {
        const FourierState cubic = project(cubic_convolution(state), params.n_max);
        for (int n = -params.n_max; n <= params.n_max; ++n)
            out.at(n) = Complex{0.0, 1.0} *
                        (omega[static_cast<std::size_t>(n + params.n_max)] * state.at(n) - sgn * cubic.at(n));
    } else {
        for (int n = -params.n_max; n <= params.n_max; ++n)
            out.at(n) = Complex{0.0, 1.0} * omega[static_cast<std::size_t>(n + params.n_max)] * state.at(n);
    }
    return out;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
// Difference between the 5th- and 4th-order weights (defect of the embedded pair).
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920, E5 = -17253.0 / 339200,
                 E6 = 22.0 / 525, E7 = -1.0 / 40;
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;

constexpr double DT_MIN = 1e-12;

using CVec = std::vector<Complex>;

// Interaction-picture right-hand side at interior time t:
//   dv_n/dt = -i sign e^{-i t w_n} (P_{<=N} |u|^2 u)_n,  u_n = e^{i t w_n} v_n.
class InteractionField {
  public:
    InteractionField(const FlowParams& params, std::vector<double> omega)
        : params_(params), omega_(std::move(omega)), scratch_(params.n_max) {}

    void eval(double t, const CVec& v, CVec& out) {
        const int N = params_.n_max;
        if (params_.linear_only) {
            std::fill(out.begin(), out.end(), Complex{0.0, 0.0});
            return;
        }
        auto& u = scratch_.coeffs();
        for (std::size_t k = 0; k < v.size(); ++k) u[k] = std::polar(1.0, t * omega_[k]) * v[k];
        const FourierState cubic = project(cubic_convolution(scratch_), N);
        const double sgn = equation_sign(params_.sign);
        for (std::size_t k = 0; k < v.size(); ++k)
            out[k] = Complex{0.0, -sgn} * std::polar(1.0, -t * omega_[k]) * cubic.coeffs()[k];
    }

  private:
    const FlowParams& params_;
    std::vector<double> omega_;
    FourierState scratch_;
};

double error_norm(const CVec& err, const CVec& v0, const CVec& v1, double rel_tol, double atol) {
    double acc = 0.0;
    for (std::size_t k = 0; k < err.size(); ++k) {
        const double sc = atol + rel_tol * std::max(std::abs(v0[k]), std::abs(v1[k]));
        const double e = std::abs(err[k]) / sc;
        acc += e * e;
    }
    return std::sqrt(acc / static_cast<double>(err.size()));
}

}  // namespace

FourierState evolve(const FourierState& state, double t_target, const FlowParams& params) {
    check_state(state, params);
    if (t_target == 0.0) return state;

    const auto omega = dispersion_symbol(params.n_max, params.alpha);
    InteractionField field(params, omega);

    CVec v = state.coeffs();
    const std::size_t dim = v.size();
    double vmax = 0.0;
    for (const auto& c : v) vmax = std::max(vmax, std::abs(c));
    const double atol = params.rel_tol * std::max(vmax, 1e-30);

    CVec k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim), vtmp(dim), vnew(dim),
        errv(dim);

    const double dir = t_target > 0.0 ? 1.0 : -1.0;
    double t = 0.0;
    double dt = dir * std::min(params.dt_max, std::abs(t_target));
    double err_prev = 1.0;
    bool have_k1 = false;

    while (dir * (t_target - t) > 0.0) {
        if (dir * (t + dt) > dir * t_target) dt = t_target - t;
        if (!have_k1) {
            field.eval(t, v, k1);
            have_k1 = true;
        }

        for (std::size_t i = 0; i < dim; ++i) vtmp[i] = v[i] + dt * A21 * k1[i];
        field.eval(t + C2 * dt, vtmp, k2);
        for (std::size_t i = 0; i < dim; ++i) vtmp[i] = v[i] + dt * (A31 * k1[i] + A32 * k2[i]);
        field.eval(t + C3 * dt, vtmp, k3);
        for (std::size_t i = 0; i < dim; ++i)
            vtmp[i] = v[i] + dt * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
        field.eval(t + C4 * dt, vtmp, k4);
        for (std::size_t i = 0; i < dim; ++i)
            vtmp[i] = v[i] + dt * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
        field.eval(t + C5 * dt, vtmp, k5);
        for (std::size_t i = 0; i < dim; ++i)
            vtmp[i] = v[i] + dt * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
        field.eval(t + dt, vtmp, k6);
        for (std::size_t i = 0; i < dim; ++i)
            vnew[i] = v[i] + dt * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
        field.eval(t + dt, vnew, k7);
        for (std::size_t i = 0; i < dim; ++i)
            errv[i] = dt * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);

        const double err = error_norm(errv, v, vnew, params.rel_tol, atol);
        if (err <= 1.0) {
            t += dt;
            v.swap(vnew);
            k1.swap(k7);  // FSAL
            const double e = std::max(err, 1e-10);
            double fac = 0.9 * std::pow(e, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
            fac = std::clamp(fac, 0.2, 5.0);
            dt = dir * std::min(std::abs(dt) * fac, params.dt_max);
            err_prev = e;
        } else {
            const double fac = std::max(0.2, 0.9 * std::pow(err, -0.2));
            dt = dir * std::abs(dt) * fac;
            have_k1 = true;  // k1 is still the derivative at t
            if (std::abs(dt) < DT_MIN)
                throw StepFailure("evolve: step controller stalled below dt_min = 1e-12");
        }
    }

    // Undo the interaction picture at the final time.
    FourierState out(params.n_max);
    for (std::size_t k = 0; k < dim; ++k)
        out.coeffs()[k] = std::polar(1.0, t_target * omega[k]) * v[k];
    return out;
}

double hamiltonian(const FourierState& state, const FlowParams& params) {
    check_state(state, params);
    const auto omega = dispersion_symbol(params.n_max, params.alpha);
    KahanSum quad;
    for (int n = -params.n_max; n <= params.n_max; ++n)
        quad.add(omega[static_cast<std::size_t>(n + params.n_max)] * std::norm(state.at(n)));
    const FourierState cubic = project(cubic_convolution(state), params.n_max);
    const double quartic = sequence_inner(cubic, state).real();
    return 0.5 * quad.value() - 0.25 * equation_sign(params.sign) * quartic;
}

double divergence_check(const FourierState& state, const FlowParams& params, double h) {
    check_state(state, params);
    if (!(h > 0.0)) throw std::invalid_argument("divergence_check: h must be positive");
    KahanSum trace;
    FourierState pert = state;
    for (int n = -params.n_max; n <= params.n_max; ++n) {
        for (int part = 0; part < 2; ++part) {
            const Complex delta = part == 0 ? Complex{h, 0.0} : Complex{0.0, h};
            pert.at(n) = state.at(n) + delta;
            const FourierState fp = vector_field(pert, params);
            pert.at(n) = state.at(n) - delta;
            const FourierState fm = vector_field(pert, params);
            pert.at(n) = state.at(n);
            const Complex diff = (fp.at(n) - fm.at(n)) / (2.0 * h);
            trace.add(part == 0 ? diff.real() : diff.imag());
        }
    }
    return trace.value();
}

Trajectory integrate_trajectory(const FourierState& state, const std::vector<double>& times,
                                const FlowParams& params) {
    check_state(state, params);
    if (times.empty()) throw std::invalid_argument("integrate_trajectory: empty time grid");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("integrate_trajectory: times must be strictly increasing");
    Trajectory traj;
    traj.params = params;
    traj.times = times;
    traj.states.reserve(times.size());
    traj.states.push_back(state);
    for (std::size_t i = 1; i < times.size(); ++i)
        traj.states.push_back(evolve(traj.states.back(), times[i] - times[i - 1], params));
    return traj;
}

}  // namespace fnls
