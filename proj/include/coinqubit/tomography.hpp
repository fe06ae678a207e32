#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "coinqubit/qubit_core.hpp"

namespace coinqubit {

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };
enum class Outcome : std::uint8_t { up, down };

const char* to_string(Axis axis) noexcept;
const char* to_string(Outcome outcome) noexcept;

struct FlipRecord {
    Axis axis;
    Outcome outcome;
    std::uint64_t trial;

    friend bool operator==(const FlipRecord&, const FlipRecord&) = default;
};

/// Per-axis random stream: std::mt19937_64 seeded with
/// splitmix64(seed ^ splitmix64(axis + 1)). A flip is "up" when the top 53
/// bits of the next output, read as a uniform double in [0, 1), fall below
/// the axis probability. Exposed so other implementations can reproduce
/// streams bit for bit.
std::uint64_t axis_stream_seed(std::uint64_t seed, Axis axis) noexcept;

/// Draws n_per_axis flips for each of x, y, z (in that order, trial index
/// restarting at 0 per axis). The three axes are sampled concurrently.
/// Throws ErrorCode::classical_state for triples outside the Bloch ball and
/// ErrorCode::invalid_argument for n_per_axis == 0.
std::vector<FlipRecord> sample_flips(const ProbabilityTriple& p, std::uint64_t n_per_axis,
                                     std::uint64_t seed);

struct EstimateReport {
    ProbabilityTriple estimate;
    std::array<std::uint64_t, 3> counts;
    /// sqrt(p_hat (1 - p_hat) / N) per axis
    std::array<double, 3> standard_errors;
    std::uint64_t seed;
};

/// Frequencies of "up" per axis. Throws ErrorCode::insufficient_data when
/// an axis has no flips.
EstimateReport estimate(std::span<const FlipRecord> flips, std::uint64_t seed);

struct Reconstruction {
    DensityMatrix2 density;
    Classification classification;
    /// Tr(rho_hat^2); exceeds 1 when sampling noise leaves the Bloch ball.
    double purity;

    bool inside_ball() const noexcept { return classification.is_quantum(); }
};

/// Density matrix of the estimated triple. Out-of-ball estimates are
/// reported as such, never projected back.
Reconstruction reconstruct(const EstimateReport& report);

/// CSV with header "trial,axis,outcome".
void write_flips_csv(std::ostream& out, std::span<const FlipRecord> flips);

}  // namespace coinqubit
