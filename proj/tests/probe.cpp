// Dev probe: integrator cost and conservation at the hard corner.
#include <chrono>
#include <cstdio>
#include "fnls/dynamics.hpp"
#include "fnls/measures.hpp"

using namespace fnls;

int main(int argc, char** argv) {
    double alpha = argc > 1 ? atof(argv[1]) : 2.0;
    int N = argc > 2 ? atoi(argv[2]) : 32;
    double t = argc > 3 ? atof(argv[3]) : 1.0;
    double rtol = argc > 4 ? atof(argv[4]) : 1e-10;
    FlowParams p{alpha, Sign::defocusing, N, 0.1, rtol};
    MeasureSpec spec{1.0, N, {}};
    RandomStream st(7, 0);
    FourierState phi = sample(spec, st);
    double l2a = sobolev_norm(phi, {0.0});
    double Ha = hamiltonian(phi, p);
    auto t0 = std::chrono::steady_clock::now();
    FourierState u = evolve(phi, t, p);
    auto t1 = std::chrono::steady_clock::now();
    double l2b = sobolev_norm(u, {0.0});
    double Hb = hamiltonian(u, p);
    FourierState back = evolve(u, -t, p);
    double reverr = 0;
    for (int n = -N; n <= N; ++n) reverr += std::norm(back.at(n) - phi.at(n));
    reverr = std::sqrt(reverr);
    printf("alpha=%g N=%d t=%g rtol=%g\n", alpha, N, t, rtol);
    printf("L2 drift rel   = %.3e\n", std::abs(l2b - l2a) / l2a);
    printf("H drift rel    = %.3e\n", std::abs(Hb - Ha) / std::abs(Ha));
    printf("reversibility  = %.3e\n", reverr);
    printf("forward wall   = %.2f s\n", std::chrono::duration<double>(t1 - t0).count());
    return 0;
}
