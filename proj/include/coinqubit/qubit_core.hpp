#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include <Eigen/Core>

namespace coinqubit {

using Complex = std::complex<double>;

/// Tolerance for pure/mixed/classical classification and for the purity and
/// orthogonality preconditions.
inline constexpr double kClassificationTolerance = 1e-9;

/// Tolerance on the Hermiticity and unit-trace checks of raw matrices.
inline constexpr double kMatrixTolerance = 1e-12;

/// Probabilities of the "up" position of the x, y and z coins.
///
/// Every value is checked to lie in [0, 1] at construction. Classical
/// triples (outside the Bloch ball) are valid objects; only the operations
/// that need a quantum state reject them. The same shape also carries the
/// superposition weights and every intermediate triple.
class ProbabilityTriple {
public:
    ProbabilityTriple(double p1, double p2, double p3);

    /// Accepts values up to `slack` outside [0, 1] and clamps them. Used for
    /// results of floating point computations that are exact in theory.
    static ProbabilityTriple clamped(double p1, double p2, double p3,
                                     double slack = kMatrixTolerance);

    double p1() const noexcept { return values_[0]; }
    double p2() const noexcept { return values_[1]; }
    double p3() const noexcept { return values_[2]; }
    double operator[](std::size_t i) const { return values_.at(i); }
    const std::array<double, 3>& values() const noexcept { return values_; }

    /// Off-diagonal density matrix entry (p1 - 1/2) - i (p2 - 1/2).
    Complex coherence() const noexcept {
        return {values_[0] - 0.5, -(values_[1] - 0.5)};
    }

    friend bool operator==(const ProbabilityTriple&, const ProbabilityTriple&) = default;

private:
    std::array<double, 3> values_;
};

enum class StateClass { classical, mixed, pure };

const char* to_string(StateClass c) noexcept;

struct Classification {
    StateClass state_class;
    /// (p1 - 1/2)^2 + (p2 - 1/2)^2 + (p3 - 1/2)^2
    double radius2;

    bool is_quantum() const noexcept { return state_class != StateClass::classical; }
};

/// Hermitian unit-trace 2x2 matrix.
///
/// Stored through the three real coin parameters it is built from, so the
/// coin -> matrix -> coin round trip is exact and Hermiticity holds by
/// construction. Nonnegativity is *not* an invariant of the type: matrices
/// built from classical triples are representable and report it through
/// is_nonnegative().
class DensityMatrix2 {
public:
    /// Validates Hermiticity and unit trace within kMatrixTolerance. The
    /// Hermitian completion uses rho01.
    static DensityMatrix2 from_entries(Complex rho00, Complex rho01, Complex rho10,
                                       Complex rho11);

    /// Same as from_entries for an Eigen matrix.
    static DensityMatrix2 from_matrix(const Eigen::Matrix2cd& m);

    double rho00() const noexcept { return coins_[2]; }
    double rho11() const noexcept { return 1.0 - coins_[2]; }
    Complex rho01() const noexcept { return {coins_[0] - 0.5, -(coins_[1] - 0.5)}; }
    Complex rho10() const noexcept { return std::conj(rho01()); }
    Complex entry(int row, int col) const;

    double trace() const noexcept { return rho00() + rho11(); }
    double determinant() const noexcept;
    /// Closed-form eigenvalues, ascending.
    std::array<double, 2> eigenvalues() const noexcept;
    bool is_nonnegative(double tolerance = kMatrixTolerance) const noexcept;

    Eigen::Matrix2cd matrix() const;

private:
    friend DensityMatrix2 prob_to_density(const ProbabilityTriple&);
    friend ProbabilityTriple density_to_prob(const DensityMatrix2&);

    explicit DensityMatrix2(std::array<double, 3> coins) : coins_(coins) {}

    std::array<double, 3> coins_;
};

/// Normalized qubit spinor (amplitude0, amplitude1 e^{i phase}) with the
/// global phase fixed so the first component is real and nonnegative.
class Spinor2 {
public:
    /// Phase is reduced into [0, 2pi). Throws unless both amplitudes are
    /// nonnegative and amplitude0^2 + amplitude1^2 = 1 within 1e-12.
    Spinor2(double amplitude0, double amplitude1, double phase);

    double amplitude0() const noexcept { return amplitude0_; }
    double amplitude1() const noexcept { return amplitude1_; }
    double phase() const noexcept { return phase_; }

    Eigen::Vector2cd vector() const;

private:
    double amplitude0_;
    double amplitude1_;
    double phase_;
};

DensityMatrix2 prob_to_density(const ProbabilityTriple& p);

/// Inverse of prob_to_density. Rejects matrices whose coin parameters fall
/// outside [0, 1] (these are never positive).
ProbabilityTriple density_to_prob(const DensityMatrix2& rho);

/// Classifies against the Bloch ball of radius 1/2 with kClassificationTolerance.
Classification classify(const ProbabilityTriple& p) noexcept;

bool is_quantum(const ProbabilityTriple& p) noexcept;
bool is_pure(const ProbabilityTriple& p) noexcept;

/// Tr rho^2 = 2(1 + |p|^2 - p1 - p2 - p3). Throws for classical triples.
double purity(const ProbabilityTriple& p);

/// Tr(rho_p rho_q) = 2 + 2 p.q - sum(p) - sum(q). Throws for classical triples.
double fidelity(const ProbabilityTriple& p, const ProbabilityTriple& q);

/// Relative phase of a coin triple: atan2(p2 - 1/2, p1 - 1/2) in [0, 2pi),
/// or 0 when the off-diagonal vanishes (the poles p3 in {0, 1}).
double coin_phase(const ProbabilityTriple& p) noexcept;

/// Pure triple to its gauge-fixed spinor. Throws for non-pure triples.
Spinor2 prob_to_spinor(const ProbabilityTriple& p);

ProbabilityTriple spinor_to_prob(const Spinor2& s);

/// Maps |z| <= 1 to the pure triple with p3 = |z|^2 and coin phase arg z.
ProbabilityTriple complex_to_coins(Complex z);

/// sqrt(p3) e^{i phase}; inverse of complex_to_coins for pure triples.
Complex coins_to_complex(const ProbabilityTriple& p);

}  // namespace coinqubit
