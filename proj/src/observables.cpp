#include "coinqubit/observables.hpp"

#include "coinqubit/error.hpp"

namespace coinqubit {

CoinMoments classical_means(const CoinObservable& obs, const ProbabilityTriple& p) noexcept {
    return {obs.x * (2.0 * p.p1() - 1.0), obs.y * (2.0 * p.p2() - 1.0),
            obs.z1 * p.p3() + obs.z2 * (1.0 - p.p3())};
}

CoinMoments second_moments(const CoinObservable& obs, const ProbabilityTriple& p) noexcept {
    return {obs.x * obs.x, obs.y * obs.y,
            (obs.z1 * obs.z1 - obs.z2 * obs.z2) * p.p3() + obs.z2 * obs.z2};
}

Eigen::Matrix2cd observable_matrix(const CoinObservable& obs) {
    Eigen::Matrix2cd h;
    h << Complex(obs.z1, 0.0), Complex(obs.x, -obs.y), Complex(obs.x, obs.y),
        Complex(obs.z2, 0.0);
    return h;
}

double quantum_mean(const CoinObservable& obs, const ProbabilityTriple& p) {
    if (!is_quantum(p)) {
        throw Error(ErrorCode::classical_state,
                    "quantum mean requires a state inside the Bloch ball");
    }
    const DensityMatrix2 rho = prob_to_density(p);
    const Eigen::Matrix2cd h = observable_matrix(obs);
    Complex trace = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            trace += rho.entry(i, j) * h(j, i);
        }
    }
    return trace.real();
}

}  // namespace coinqubit
