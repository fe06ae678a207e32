#include "coinqubit/tomography.hpp"

#include <cmath>
#include <future>
#include <ostream>
#include <random>

#include "coinqubit/error.hpp"

namespace coinqubit {
namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void sample_axis(std::span<FlipRecord> out, Axis axis, double probability, std::uint64_t seed) {
    std::mt19937_64 engine(axis_stream_seed(seed, axis));
    for (std::uint64_t i = 0; i < out.size(); ++i) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        out[i] = {axis, u < probability ? Outcome::up : Outcome::down, i};
    }
}

}  // namespace

const char* to_string(Axis axis) noexcept {
    switch (axis) {
        case Axis::x: return "x";
        case Axis::y: return "y";
        case Axis::z: return "z";
    }
    return "?";
}

const char* to_string(Outcome outcome) noexcept {
    return outcome == Outcome::up ? "up" : "down";
}

std::uint64_t axis_stream_seed(std::uint64_t seed, Axis axis) noexcept {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(axis) + 1));
}

std::vector<FlipRecord> sample_flips(const ProbabilityTriple& p, std::uint64_t n_per_axis,
                                     std::uint64_t seed) {
    if (!is_quantum(p)) {
        throw Error(ErrorCode::classical_state,
                    "only states inside the Bloch ball can be sampled");
    }
    if (n_per_axis == 0) {
        throw Error(ErrorCode::invalid_argument, "at least one flip per axis is required");
    }
    std::vector<FlipRecord> flips(3 * n_per_axis);
    std::span<FlipRecord> all(flips);
    std::array<std::future<void>, 3> workers;
    for (std::size_t a = 0; a < 3; ++a) {
        workers[a] = std::async(std::launch::async, sample_axis,
                                all.subspan(a * n_per_axis, n_per_axis), static_cast<Axis>(a),
                                p[a], seed);
    }
    for (auto& w : workers) {
        w.get();
    }
    return flips;
}

EstimateReport estimate(std::span<const FlipRecord> flips, std::uint64_t seed) {
    std::array<std::uint64_t, 3> counts{};
    std::array<std::uint64_t, 3> ups{};
    for (const FlipRecord& f : flips) {
        const auto a = static_cast<std::size_t>(f.axis);
        ++counts[a];
        if (f.outcome == Outcome::up) {
            ++ups[a];
        }
    }
    std::array<double, 3> freq{};
    std::array<double, 3> errors{};
    for (std::size_t a = 0; a < 3; ++a) {
        if (counts[a] == 0) {
            throw Error(ErrorCode::insufficient_data,
                        std::string("no flips recorded for axis ") +
                            to_string(static_cast<Axis>(a)));
        }
        const auto n = static_cast<double>(counts[a]);
        freq[a] = static_cast<double>(ups[a]) / n;
        errors[a] = std::sqrt(freq[a] * (1.0 - freq[a]) / n);
    }
    return {ProbabilityTriple(freq[0], freq[1], freq[2]), counts, errors, seed};
}

Reconstruction reconstruct(const EstimateReport& report) {
    const DensityMatrix2 rho = prob_to_density(report.estimate);
    const double purity = rho.rho00() * rho.rho00() + rho.rho11() * rho.rho11() +
                          2.0 * std::norm(rho.rho01());
    return {rho, classify(report.estimate), purity};
}

void write_flips_csv(std::ostream& out, std::span<const FlipRecord> flips) {
    out << "trial,axis,outcome\n";
    for (const FlipRecord& f : flips) {
        out << f.trial << ',' << to_string(f.axis) << ',' << to_string(f.outcome) << '\n';
    }
}

}  // namespace coinqubit
