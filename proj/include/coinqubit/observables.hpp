#pragma once

#include <Eigen/Core>

#include "coinqubit/qubit_core.hpp"

namespace coinqubit {

/// Values of the dichotomic random variables attached to the three coins:
/// X takes (x, -x), Y takes (y, -y), Z takes (z1, z2).
struct CoinObservable {
    double x = 0.0;
    double y = 0.0;
    double z1 = 0.0;
    double z2 = 0.0;
};

struct CoinMoments {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double sum() const noexcept { return x + y + z; }
};

/// <X> = x(2p1 - 1), <Y> = y(2p2 - 1), <Z> = z1 p3 + z2 (1 - p3).
/// Defined for any triple, classical ones included.
CoinMoments classical_means(const CoinObservable& obs, const ProbabilityTriple& p) noexcept;

/// <X^2> = x^2, <Y^2> = y^2, <Z^2> = (z1^2 - z2^2) p3 + z2^2.
CoinMoments second_moments(const CoinObservable& obs, const ProbabilityTriple& p) noexcept;

/// Hermitian matrix [[z1, x - iy], [x + iy, z2]].
Eigen::Matrix2cd observable_matrix(const CoinObservable& obs);

/// Tr(rho H) from the matrix entries. Throws for classical triples.
double quantum_mean(const CoinObservable& obs, const ProbabilityTriple& p);

}  // namespace coinqubit
