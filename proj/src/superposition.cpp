#include "coinqubit/superposition.hpp"

#include <cmath>
#include <numbers>

#include "coinqubit/error.hpp"

namespace coinqubit {
namespace {

void require_pure(const ProbabilityTriple& p, const char* which) {
    if (!is_pure(p)) {
        throw Error(ErrorCode::not_pure, std::string(which) + " state must be pure");
    }
}

void require_orthogonal(const ProbabilityTriple& p, const ProbabilityTriple& q) {
    if (fidelity(p, q) >= kClassificationTolerance) {
        throw Error(ErrorCode::not_orthogonal,
                    "states must be orthogonal (<psi1|psi2> = 0) for the projector rule");
    }
}

// Reads the coin triple off an unnormalized state vector.
ProbabilityTriple coins_of_vector(const Eigen::Vector2cd& chi, double norm) {
    const Complex top = chi(0);
    const Complex bottom = chi(1);
    const Complex offdiag = top * std::conj(bottom) / norm;
    const DensityMatrix2 rho = DensityMatrix2::from_entries(
        std::norm(top) / norm, offdiag, std::conj(offdiag), std::norm(bottom) / norm);
    return density_to_prob(rho);
}

Eigen::Matrix2cd frame_of(const ProbabilityTriple& p, const ProbabilityTriple& q) {
    Eigen::Matrix2cd frame;
    frame.col(0) = prob_to_spinor(p).vector();
    frame.col(1) = prob_to_spinor(q).vector();
    return frame;
}

}  // namespace

SuperpositionWeights::SuperpositionWeights(const ProbabilityTriple& triple)
    : triple_(triple), phase_(0.0) {
    if (!is_pure(triple)) {
        throw Error(ErrorCode::not_pure,
                    "superposition weights must be a pure triple (they encode |c1|^2 + |c2|^2 = 1)");
    }
    phase_ = coin_phase(triple);
}

Complex SuperpositionWeights::c1() const noexcept { return {std::sqrt(lambda1()), 0.0}; }

Complex SuperpositionWeights::c2() const noexcept { return std::polar(std::sqrt(lambda2()), phase_); }

const char* to_string(SuperpositionPath path) noexcept {
    switch (path) {
        case SuperpositionPath::matrix_oracle: return "matrix_oracle";
        case SuperpositionPath::general_closed_form: return "general_closed_form";
        case SuperpositionPath::orthogonal_rule: return "orthogonal_rule";
        case SuperpositionPath::spinor_path: return "spinor_path";
    }
    return "unknown";
}

SuperpositionResult superpose_oracle(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                     const SuperpositionWeights& w) {
    require_pure(p, "first");
    require_pure(q, "second");
    const Eigen::Vector2cd chi =
        w.c1() * prob_to_spinor(p).vector() + w.c2() * prob_to_spinor(q).vector();
    const double norm = chi.squaredNorm();
    if (norm <= kDegenerateNorm) {
        throw Error(ErrorCode::degenerate_superposition,
                    "superposition cancels exactly (<chi|chi> = 0); no qubit state exists");
    }
    return {coins_of_vector(chi, norm), norm, SuperpositionPath::matrix_oracle};
}

double general_normalization(const ProbabilityTriple& p, const ProbabilityTriple& q,
                             const SuperpositionWeights& w) {
    if (p.p3() <= 0.0 || q.p3() <= 0.0) {
        throw Error(ErrorCode::invalid_argument,
                    "closed-form normalization is singular when p3 or P3 is zero");
    }
    const double u = w.triple().p1() - 0.5;
    const double v = w.triple().p2() - 0.5;
    const double x1 = p.p1() - 0.5, y1 = p.p2() - 0.5;
    const double x2 = q.p1() - 0.5, y2 = q.p2() - 0.5;
    const double overlap_re = x1 * x2 + y1 * y2 + p.p3() * q.p3();
    const double overlap_im = y1 * x2 - x1 * y2;
    return 1.0 + 2.0 / std::sqrt(p.p3() * q.p3()) * (u * overlap_re + v * overlap_im);
}

SuperpositionResult superpose_general(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                      const SuperpositionWeights& w) {
    require_pure(p, "first");
    require_pure(q, "second");
    if (p.p3() <= kPoleTolerance || q.p3() <= kPoleTolerance) {
        SuperpositionResult result = superpose_oracle(p, q, w);
        result.fallback_used = true;
        return result;
    }

    const double norm = general_normalization(p, q, w);
    if (norm <= kDegenerateNorm) {
        throw Error(ErrorCode::degenerate_superposition,
                    "superposition cancels exactly (normalization = 0); no qubit state exists");
    }

    const double l1 = w.lambda1();
    const double l2 = w.lambda2();
    const double u = w.triple().p1() - 0.5;
    const double v = w.triple().p2() - 0.5;
    const double x1 = p.p1() - 0.5, y1 = p.p2() - 0.5, a3 = p.p3();
    const double x2 = q.p1() - 0.5, y2 = q.p2() - 0.5, b3 = q.p3();
    const double r_qp = std::sqrt(b3 / a3);
    const double r_pq = std::sqrt(a3 / b3);

    const double out3 = (l1 * a3 + l2 * b3 + 2.0 * std::sqrt(a3 * b3) * u) / norm;
    const double out1 =
        (l1 * x1 + l2 * x2 + (u * x1 + v * y1) * r_qp + (u * x2 - v * y2) * r_pq) / norm;
    const double out2 =
        (l1 * y1 + l2 * y2 + (u * y1 - v * x1) * r_qp + (v * x2 + u * y2) * r_pq) / norm;

    return {ProbabilityTriple::clamped(0.5 + out1, 0.5 + out2, out3), norm,
            SuperpositionPath::general_closed_form};
}

bool satisfies_unity_normalization(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                   const SuperpositionWeights& w, double tolerance) {
    const double s = std::sqrt(p.p3() * (1.0 - p.p3()) * q.p3() * (1.0 - q.p3()));
    if (s <= 0.0) {
        return false;
    }
    const double phi1 = coin_phase(p);
    const double phi2 = coin_phase(q);
    const double alpha = w.phase();
    const double lhs = std::sin(alpha) * std::sin(phi2 - phi1);
    const double rhs = std::cos(alpha) * (p.p3() * q.p3() / s + std::cos(phi1 - phi2));
    return std::abs(lhs - rhs) <= tolerance;
}

double unity_normalization_phase(const ProbabilityTriple& p, const ProbabilityTriple& q) {
    require_pure(p, "first");
    require_pure(q, "second");
    const double s = std::sqrt(p.p3() * (1.0 - p.p3()) * q.p3() * (1.0 - q.p3()));
    if (s <= 0.0) {
        throw Error(ErrorCode::invalid_argument,
                    "unity-normalization phase is undefined at a pole");
    }
    const double phi1 = coin_phase(p);
    const double phi2 = coin_phase(q);
    const double alpha = std::atan2(p.p3() * q.p3() / s + std::cos(phi1 - phi2),
                                    std::sin(phi2 - phi1));
    return alpha < 0.0 ? alpha + 2.0 * std::numbers::pi : alpha;
}

ProjectorSum add_orthogonal_projectors(const Eigen::Matrix2cd& rho1, const Eigen::Matrix2cd& rho2,
                                       const Eigen::Matrix2cd& rho0, double lambda1) {
    if (!(lambda1 >= 0.0 && lambda1 <= 1.0)) {
        throw Error(ErrorCode::invalid_argument, "lambda1 must lie in [0, 1]");
    }
    const double trace = (rho1 * rho0 * rho2 * rho0).trace().real();
    if (trace < kDegenerateTrace) {
        throw Error(ErrorCode::degenerate_phase_state,
                    "Tr(rho1 rho0 rho2 rho0) vanishes: the phase state is orthogonal to an input");
    }
    const double lambda2 = 1.0 - lambda1;
    const Eigen::Matrix2cd interference =
        (rho1 * rho0 * rho2 + rho2 * rho0 * rho1) / std::sqrt(trace);
    return {lambda1 * rho1 + lambda2 * rho2 + std::sqrt(lambda1 * lambda2) * interference,
            interference, trace};
}

Eigen::Matrix2cd phase_reference(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                 const SuperpositionWeights& w) {
    const Eigen::Matrix2cd frame = frame_of(p, q);
    return frame * prob_to_density(w.triple()).matrix() * frame.adjoint();
}

namespace {

ProjectorSum orthogonal_sum(const ProbabilityTriple& p, const ProbabilityTriple& q,
                            const SuperpositionWeights& w) {
    require_pure(p, "first");
    require_pure(q, "second");
    require_orthogonal(p, q);
    return add_orthogonal_projectors(prob_to_density(p).matrix(), prob_to_density(q).matrix(),
                                     phase_reference(p, q, w), w.lambda1());
}

}  // namespace

SuperpositionResult superpose_orthogonal(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                         const SuperpositionWeights& w) {
    const ProjectorSum sum = orthogonal_sum(p, q, w);
    const ProbabilityTriple state = density_to_prob(DensityMatrix2::from_matrix(sum.matrix));
    return {state, sum.matrix.trace().real(), SuperpositionPath::orthogonal_rule};
}

DeltaDecomposition delta_decomposition(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                       const SuperpositionWeights& w) {
    const double l1 = w.lambda1();
    const double l2 = w.lambda2();
    if (l1 * l2 < 1e-14) {
        throw Error(ErrorCode::degenerate_weights,
                    "interference vector is undefined when one weight vanishes");
    }
    const ProjectorSum sum = orthogonal_sum(p, q, w);
    const Eigen::Matrix2cd& cross = sum.interference;
    DeltaDecomposition d{};
    for (std::size_t i = 0; i < 3; ++i) {
        d.linear_part[i] = l1 * p[i] + l2 * q[i];
    }
    // The interference term is traceless, so it shifts p1, p2 by its
    // off-diagonal and p3 by its top-left entry.
    d.delta = {cross(0, 1).real(), -cross(0, 1).imag(), cross(0, 0).real()};
    d.t_factor = 1.0 / std::sqrt(sum.phase_trace);
    return d;
}

SuperpositionResult superpose_spinor(const ProbabilityTriple& p, const ProbabilityTriple& q,
                                     const SuperpositionWeights& w) {
    require_pure(p, "first");
    require_pure(q, "second");
    require_orthogonal(p, q);
    const double pi3 = w.lambda1();
    const double beta = coin_phase(p);
    const double mu = coin_phase(q);
    const double delta = w.phase();
    const Eigen::Vector2cd psi{
        std::sqrt(pi3 * p.p3()) + std::polar(std::sqrt(q.p3() * (1.0 - pi3)), delta),
        std::polar(std::sqrt(pi3 * (1.0 - p.p3())), beta) +
            std::polar(std::sqrt((1.0 - pi3) * (1.0 - q.p3())), delta + mu)};
    const double norm = psi.squaredNorm();
    return {coins_of_vector(psi, norm), norm, SuperpositionPath::spinor_path};
}

ProbabilityTriple orthogonal_partner(const ProbabilityTriple& p, PhaseSign sign) {
    require_pure(p, "input");
    const double partner3 = 1.0 - p.p3();
    const double mu =
        coin_phase(p) + (sign == PhaseSign::plus ? std::numbers::pi : -std::numbers::pi);
    const double radius = std::sqrt(partner3 * (1.0 - partner3));
    return ProbabilityTriple::clamped(0.5 + radius * std::cos(mu), 0.5 + radius * std::sin(mu),
                                      partner3);
}

}  // namespace coinqubit
