#pragma once

#include <array>

#include <Eigen/Core>

#include "coinqubit/qubit_core.hpp"

namespace coinqubit {

/// Below this squared norm a superposition has cancelled to the zero vector.
inline constexpr double kDegenerateNorm = 1e-12;

/// Below this value Tr(rho1 rho0 rho2 rho0) leaves the projector sum undefined.
inline constexpr double kDegenerateTrace = 1e-14;

/// Closed forms divide by sqrt(p3 P3); at or below this p3 (or P3) the
/// general path defers to the matrix oracle.
inline constexpr double kPoleTolerance = kClassificationTolerance;

/// Pure triple (Pi1, Pi2, Pi3) read as the coefficient spinor
/// (c1, c2) = (sqrt(Pi3), sqrt(1 - Pi3) e^{i alpha}).
class SuperpositionWeights {
public:
    /// Throws ErrorCode::not_pure unless the triple is pure.
    explicit SuperpositionWeights(const ProbabilityTriple& triple);

    const ProbabilityTriple& triple() const noexcept { return triple_; }
    double lambda1() const noexcept { return triple_.p3(); }
    double lambda2() const noexcept { return 1.0 - triple_.p3(); }
    /// Relative phase alpha in [0, 2pi).
    double phase() const noexcept { return phase_; }
    Complex c1() const noexcept;
    Complex c2() const noexcept;

private:
    ProbabilityTriple triple_;
    double phase_;
};

enum class SuperpositionPath { matrix_oracle, general_closed_form, orthogonal_rule, spinor_path };

const char* to_string(SuperpositionPath path) noexcept;

struct SuperpositionResult {
    ProbabilityTriple state;
    /// <chi|chi> of the unnormalized combination c1|psi1> + c2|psi2>.
    double normalization;
    SuperpositionPath path;
    bool fallback_used = false;
};

/// Ground truth: forms c1|psi1> + c2|psi2> from the gauge-fixed spinors,
/// normalizes and reads the coins back off the density matrix.
SuperpositionResult superpose_oracle(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                     const SuperpositionWeights& w);

/// Closed-form coin addition rule for arbitrary (non-orthogonal) pure
/// states. Delegates to the oracle, with fallback_used set, when either
/// state sits at a pole (p3 or P3 <= kPoleTolerance).
SuperpositionResult superpose_general(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                      const SuperpositionWeights& w);

/// Normalization of the closed form,
/// 1 + 2/sqrt(p3 P3) Re[Pi (p3 P3 + conj(p) P)] in coin variables.
/// Throws ErrorCode::invalid_argument at a pole.
double general_normalization(const ProbabilityTriple& p, const ProbabilityTriple& q,
                             const SuperpositionWeights& w);

/// Whether the weight phase makes the normalization exactly 1, in the
/// cross-multiplied form
///   sin(alpha) sin(phi2 - phi1) = cos(alpha) [p3 P3 / s + cos(phi1 - phi2)],
/// s = sqrt(p3(1 - p3) P3(1 - P3)).
bool satisfies_unity_normalization(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                   const SuperpositionWeights& w, double tolerance = 1e-10);

/// A phase alpha in [0, 2pi) that satisfies the unity condition for p, q.
/// Both states must be pure and away from the poles.
double unity_normalization_phase(const ProbabilityTriple& p, const ProbabilityTriple& q);

/// Result of adding two orthogonal projectors with a phase reference:
///   lambda1 rho1 + lambda2 rho2
///     + sqrt(lambda1 lambda2) (rho1 rho0 rho2 + rho2 rho0 rho1) / sqrt(Tr(rho1 rho0 rho2 rho0)).
struct ProjectorSum {
    Eigen::Matrix2cd matrix;
    /// (rho1 rho0 rho2 + rho2 rho0 rho1) / sqrt(Tr(rho1 rho0 rho2 rho0))
    Eigen::Matrix2cd interference;
    /// Tr(rho1 rho0 rho2 rho0)
    double phase_trace;
};

/// Throws ErrorCode::degenerate_phase_state when the trace falls below
/// kDegenerateTrace, ErrorCode::invalid_argument for lambda1 outside [0, 1].
ProjectorSum add_orthogonal_projectors(const Eigen::Matrix2cd& rho1, const Eigen::Matrix2cd& rho2,
                                       const Eigen::Matrix2cd& rho0, double lambda1);

/// Phase reference used by superpose_orthogonal: the weight state carried
/// into the frame {psi1, psi2}, U rho_w U^dagger with U = [psi1 psi2].
Eigen::Matrix2cd phase_reference(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                 const SuperpositionWeights& w);

/// Projector addition rule for orthogonal pure states (fidelity < 1e-9).
SuperpositionResult superpose_orthogonal(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                         const SuperpositionWeights& w);

struct DeltaDecomposition {
    /// lambda1 p + lambda2 q
    std::array<double, 3> linear_part;
    /// Nonlinear interference vector; result = linear + sqrt(lambda1 lambda2) delta.
    std::array<double, 3> delta;
    /// Tr(rho1 rho0 rho2 rho0)^{-1/2}
    double t_factor;
};

/// Throws ErrorCode::degenerate_weights when lambda1 lambda2 < 1e-14.
DeltaDecomposition delta_decomposition(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                       const SuperpositionWeights& w);

/// Superposition column vector built directly from the amplitudes and the
/// phases of p, q and the weights. Orthogonal inputs only.
SuperpositionResult superpose_spinor(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                     const SuperpositionWeights& w);

enum class PhaseSign { plus, minus };

/// The pure state orthogonal to p: P3 = 1 - p3 and phase beta +/- pi.
ProbabilityTriple orthogonal_partner(const ProbabilityTriple& p,
                                     PhaseSign sign = PhaseSign::plus);

}  // namespace coinqubit
