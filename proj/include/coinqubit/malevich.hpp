#pragma once

#include <array>
#include <string>

#include "coinqubit/qubit_core.hpp"

namespace coinqubit {

/// Side lengths of the black (L1), red (L2) and white (L3) squares.
class MalevichTriada {
public:
    /// Throws ErrorCode::out_of_range unless every side lies in [0, sqrt(3)].
    MalevichTriada(double l1, double l2, double l3);

    double l1() const noexcept { return sides_[0]; }
    double l2() const noexcept { return sides_[1]; }
    double l3() const noexcept { return sides_[2]; }
    const std::array<double, 3>& sides() const noexcept { return sides_; }

private:
    std::array<double, 3> sides_;
};

/// L1 = sqrt(2 + 2p1^2 - 4p1 - 2p2 + 2p2^2 + 2p1p2), cyclically for L2 and L3.
/// Classical triples are allowed.
MalevichTriada triada_sides(const ProbabilityTriple& p);

struct SvgOptions {
    double scale = 100.0;  ///< pixels per unit side length
    bool labels = false;
};

/// Renders the triada as a row of bottom-aligned squares (black, red,
/// white) separated by 0.25 * max side. Zero-area squares are skipped.
/// The output depends only on the arguments.
std::string render_svg(const MalevichTriada& triada, const SvgOptions& options = {});

}  // namespace coinqubit
