#include "coinqubit/qubit_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "coinqubit/error.hpp"

namespace coinqubit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this magnitude the off-diagonal carries no phase information.
constexpr double kPhaseCutoff = 1e-15;

std::string describe(const ProbabilityTriple& p) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << p.p1() << ", " << p.p2() << ", " << p.p3() << ")";
    return os.str();
}

double wrap_phase(double phase) {
    double wrapped = std::fmod(phase, kTwoPi);
    if (wrapped < 0.0) {
        wrapped += kTwoPi;
    }
    // fmod of values just below a multiple of 2pi can round up to 2pi.
    if (wrapped >= kTwoPi) {
        wrapped = 0.0;
    }
    return wrapped;
}

void require_quantum(const ProbabilityTriple& p) {
    if (!is_quantum(p)) {
        throw Error(ErrorCode::classical_state,
                    "triple " + describe(p) +
                        " lies outside the Bloch ball (sum of (p_i - 1/2)^2 exceeds 1/4); "
                        "it describes uncorrelated classical coins, not a qubit state");
    }
}

void require_pure(const ProbabilityTriple& p) {
    if (!is_pure(p)) {
        throw Error(ErrorCode::not_pure,
                    "triple " + describe(p) +
                        " is not pure: (p1 - 1/2)^2 + (p2 - 1/2)^2 + (p3 - 1/2)^2 != 1/4");
    }
}

}  // namespace

ProbabilityTriple::ProbabilityTriple(double p1, double p2, double p3) : values_{p1, p2, p3} {
    for (double v : values_) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            std::ostringstream os;
            os.precision(17);
            os << "coin probability " << v << " is outside [0, 1]";
            throw Error(ErrorCode::out_of_range, os.str());
        }
    }
}

ProbabilityTriple ProbabilityTriple::clamped(double p1, double p2, double p3, double slack) {
    auto clamp = [slack](double v) {
        if (std::isfinite(v) && v >= -slack && v <= 1.0 + slack) {
            return std::clamp(v, 0.0, 1.0);
        }
        return v;  // rejected by the constructor
    };
    return {clamp(p1), clamp(p2), clamp(p3)};
}

const char* to_string(StateClass c) noexcept {
    switch (c) {
        case StateClass::classical: return "classical";
        case StateClass::mixed: return "mixed";
        case StateClass::pure: return "pure";
    }
    return "unknown";
}

DensityMatrix2 DensityMatrix2::from_entries(Complex rho00, Complex rho01, Complex rho10,
                                            Complex rho11) {
    if (std::abs(rho00.imag()) > kMatrixTolerance || std::abs(rho11.imag()) > kMatrixTolerance ||
        std::abs(rho10 - std::conj(rho01)) > kMatrixTolerance) {
        throw Error(ErrorCode::not_hermitian, "matrix is not Hermitian");
    }
    if (std::abs(rho00.real() + rho11.real() - 1.0) > kMatrixTolerance) {
        throw Error(ErrorCode::trace_not_one, "matrix trace differs from 1");
    }
    return DensityMatrix2({0.5 + rho01.real(), 0.5 - rho01.imag(), rho00.real()});
}

DensityMatrix2 DensityMatrix2::from_matrix(const Eigen::Matrix2cd& m) {
    return from_entries(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

Complex DensityMatrix2::entry(int row, int col) const {
    if (row == 0 && col == 0) return rho00();
    if (row == 0 && col == 1) return rho01();
    if (row == 1 && col == 0) return rho10();
    if (row == 1 && col == 1) return rho11();
    throw Error(ErrorCode::invalid_argument, "matrix index out of range");
}

double DensityMatrix2::determinant() const noexcept {
    return rho00() * rho11() - std::norm(rho01());
}

std::array<double, 2> DensityMatrix2::eigenvalues() const noexcept {
    // Trace is 1, so the eigenvalues are 1/2 -/+ sqrt(1/4 - det).
    const double half_gap = std::sqrt(std::max(0.25 - determinant(), 0.0));
    return {0.5 - half_gap, 0.5 + half_gap};
}

bool DensityMatrix2::is_nonnegative(double tolerance) const noexcept {
    return determinant() >= -tolerance;
}

Eigen::Matrix2cd DensityMatrix2::matrix() const {
    Eigen::Matrix2cd m;
    m << rho00(), rho01(), rho10(), rho11();
    return m;
}

Spinor2::Spinor2(double amplitude0, double amplitude1, double phase)
    : amplitude0_(amplitude0), amplitude1_(amplitude1), phase_(0.0) {
    if (!std::isfinite(amplitude0) || !std::isfinite(amplitude1) || !std::isfinite(phase) ||
        amplitude0 < 0.0 || amplitude1 < 0.0) {
        throw Error(ErrorCode::invalid_argument,
                    "spinor amplitudes must be finite and nonnegative and the phase finite");
    }
    if (std::abs(amplitude0 * amplitude0 + amplitude1 * amplitude1 - 1.0) > kMatrixTolerance) {
        throw Error(ErrorCode::invalid_argument, "spinor is not normalized");
    }
    phase_ = wrap_phase(phase);
}

Eigen::Vector2cd Spinor2::vector() const {
    return {Complex(amplitude0_, 0.0), std::polar(amplitude1_, phase_)};
}

DensityMatrix2 prob_to_density(const ProbabilityTriple& p) {
    return DensityMatrix2(p.values());
}

ProbabilityTriple density_to_prob(const DensityMatrix2& rho) {
    return ProbabilityTriple::clamped(rho.coins_[0], rho.coins_[1], rho.coins_[2]);
}

Classification classify(const ProbabilityTriple& p) noexcept {
    double radius2 = 0.0;
    for (double v : p.values()) {
        radius2 += (v - 0.5) * (v - 0.5);
    }
    StateClass c = StateClass::mixed;
    if (std::abs(radius2 - 0.25) <= kClassificationTolerance) {
        c = StateClass::pure;
    } else if (radius2 > 0.25) {
        c = StateClass::classical;
    }
    return {c, radius2};
}

bool is_quantum(const ProbabilityTriple& p) noexcept { return classify(p).is_quantum(); }

bool is_pure(const ProbabilityTriple& p) noexcept {
    return classify(p).state_class == StateClass::pure;
}

double purity(const ProbabilityTriple& p) {
    require_quantum(p);
    const double norm2 = p.p1() * p.p1() + p.p2() * p.p2() + p.p3() * p.p3();
    return 2.0 * (1.0 + norm2 - p.p1() - p.p2() - p.p3());
}

double fidelity(const ProbabilityTriple& p, const ProbabilityTriple& q) {
    require_quantum(p);
    require_quantum(q);
    const double dot = p.p1() * q.p1() + p.p2() * q.p2() + p.p3() * q.p3();
    const double sums = (p.p1() + p.p2() + p.p3()) + (q.p1() + q.p2() + q.p3());
    return 2.0 + 2.0 * dot - sums;
}

double coin_phase(const ProbabilityTriple& p) noexcept {
    const double dx = p.p1() - 0.5;
    const double dy = p.p2() - 0.5;
    if (std::hypot(dx, dy) <= kPhaseCutoff) {
        return 0.0;
    }
    return wrap_phase(std::atan2(dy, dx));
}

Spinor2 prob_to_spinor(const ProbabilityTriple& p) {
    require_pure(p);
    return Spinor2(std::sqrt(p.p3()), std::sqrt(1.0 - p.p3()), coin_phase(p));
}

ProbabilityTriple spinor_to_prob(const Spinor2& s) {
    const double p3 = s.amplitude0() * s.amplitude0();
    const double offdiag = s.amplitude0() * s.amplitude1();
    return ProbabilityTriple::clamped(0.5 + offdiag * std::cos(s.phase()),
                                      0.5 + offdiag * std::sin(s.phase()), p3);
}

ProbabilityTriple complex_to_coins(Complex z) {
    const double modulus = std::abs(z);
    if (!std::isfinite(modulus) || modulus > 1.0 + kMatrixTolerance) {
        throw Error(ErrorCode::out_of_range, "complex number must satisfy |z| <= 1");
    }
    const double p3 = std::min(modulus * modulus, 1.0);
    const double radius = std::sqrt(p3 * (1.0 - p3));
    const double phase = modulus > 0.0 ? std::arg(z) : 0.0;
    return ProbabilityTriple::clamped(0.5 + radius * std::cos(phase),
                                      0.5 + radius * std::sin(phase), p3);
}

Complex coins_to_complex(const ProbabilityTriple& p) {
    require_pure(p);
    return std::polar(std::sqrt(p.p3()), coin_phase(p));
}

}  // namespace coinqubit
