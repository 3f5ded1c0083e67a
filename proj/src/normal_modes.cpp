#include "emosc/normal_modes.hpp"

#include <cmath>
#include <string>

namespace emosc {

namespace {

constexpr cplx kI{0.0, 1.0};

QuadraticHamiltonian build_planar_matrix(double mass, double conf_x, double conf_y,
                                         double cross_xpy, double cross_ypx) {
    // (1/2) X^T Hq X = p^2/2M + (M/2)(conf_x^2 x^2 + conf_y^2 y^2)
    //                  + cross_xpy * x p_y + cross_ypx * y p_x
    QuadraticHamiltonian hq;
    hq.m(0, 0) = mass * conf_x * conf_x;
    hq.m(1, 1) = 1.0 / mass;
    hq.m(2, 2) = mass * conf_y * conf_y;
    hq.m(3, 3) = 1.0 / mass;
    hq.m(0, 3) = hq.m(3, 0) = cross_xpy;
    hq.m(1, 2) = hq.m(2, 1) = cross_ypx;
    return hq;
}

}  // namespace

QuadraticHamiltonian build_hamiltonian_generic(const DerivedFrequencies& df, double mass) {
    return build_planar_matrix(mass, df.omega_1, df.omega_2, -df.omega_B, df.omega_B);
}

QuadraticHamiltonian build_hamiltonian_tilted(const DerivedFrequencies& df, double mass) {
    return build_planar_matrix(mass, df.tilde_omega_1, df.tilde_omega_2, -2.0 * df.omega_B, 0.0);
}

QuadraticHamiltonian build_hamiltonian(const PlanarProblem& p) {
    if (p.coupling == PlanarCoupling::AngularMomentum) {
        const double conf_x = std::hypot(p.omega_x, p.omega_B);
        const double conf_y = std::hypot(p.omega_y, p.omega_B);
        return build_planar_matrix(p.mass, conf_x, conf_y, -p.omega_B, p.omega_B);
    }
    // CrossMomentum: omega_y already holds the full y confinement.
    const double conf_x = std::hypot(p.omega_x, 2.0 * p.omega_B);
    return build_planar_matrix(p.mass, conf_x, p.omega_y, -2.0 * p.omega_B, 0.0);
}

OmegaMatrix omega_from(const QuadraticHamiltonian& hq) {
    OmegaMatrix out;
    out.m = kI * (sigma_y_blocks() * hq.m);
    return out;
}

std::pair<double, double> characteristic_roots(const OmegaMatrix& omega) {
    const Mat4 sq = omega.m * omega.m;
    const double trace = std::real(sq(0, 0) + sq(1, 1) + sq(2, 2) + sq(3, 3));
    const double b = -0.5 * trace;        // sigma1^2 + sigma2^2
    const double c = std::real(det(omega.m));  // sigma1^2 * sigma2^2

    if (!(b > 0.0) || c <= 1e-12 * b * b)
        throw ZeroMode("a planar mode frequency vanishes; no fully discrete spectrum");

    double disc = b * b - 4.0 * c;
    if (disc < 0.0) {
        if (disc < -1e-12 * b * b)
            throw NegativeRadicand("characteristic discriminant negative beyond roundoff");
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    const double sigma1 = std::sqrt(0.5 * (b + root));
    // Cancellation-free form of sqrt((b - root)/2).
    const double sigma2 = std::sqrt(2.0 * c / (b + root));
    return {sigma1, sigma2};
}

namespace {

// Decoupled single-axis mode vector: annihilation direction for a plain
// oscillator along x or y.
Vec4 pure_axis_vector(double mass, double omega, bool along_x) {
    Vec4 u;
    const double scale = 1.0 / std::sqrt(2.0 * mass * omega);
    const std::size_t pos = along_x ? 0 : 2;
    u[pos] = -kI * mass * omega * scale;
    u[pos + 1] = scale;
    return u;
}

Vec4 coupled_left_vector(const PlanarProblem& p, double sigma) {
    const double m = p.mass;
    const double wy2 = p.omega_y * p.omega_y;
    const double wb = p.omega_B;
    const double s2 = sigma * sigma;

    Vec4 u;
    if (p.coupling == PlanarCoupling::AngularMomentum) {
        u[0] = -kI * m * sigma * (s2 - wy2 - 2.0 * wb * wb);
        u[1] = s2 - wy2;
        u[2] = m * wb * (s2 + wy2);
        u[3] = 2.0 * kI * wb * sigma;
    } else {
        u[0] = -kI * m * sigma * (s2 - wy2);
        u[1] = s2 - wy2;
        u[2] = 2.0 * m * wb * wy2;
        u[3] = 2.0 * kI * wb * sigma;
    }
    const double gap = s2 - wy2;
    const double norm2 = 2.0 * m * sigma * (gap * gap + 4.0 * wb * wb * wy2);
    const double scale = 1.0 / std::sqrt(norm2);
    return scale * u;
}

}  // namespace

std::pair<Vec4, Vec4> left_eigenvectors(const PlanarProblem& p,
                                        std::pair<double, double> sigmas) {
    const auto [sigma1, sigma2] = sigmas;
    if (!(sigma1 > 0.0) || !(sigma2 > 0.0))
        throw ZeroMode("mode frequencies must be positive for eigenvector construction");

    if (std::abs(p.omega_B) < kZeroTol) {
        // Decoupled axes: the coupled closed form degenerates (0/0) for the
        // mode whose frequency equals the y confinement, so use the pure
        // single-axis vectors. Mode 1 is the higher frequency; ties are
        // resolved as (x, y).
        const double wx = (p.coupling == PlanarCoupling::AngularMomentum)
                              ? p.omega_x
                              : std::hypot(p.omega_x, 2.0 * p.omega_B);
        const double wy = p.omega_y;
        const bool mode1_is_x = wx >= wy;
        const double w1 = mode1_is_x ? wx : wy;
        const double w2 = mode1_is_x ? wy : wx;
        return {pure_axis_vector(p.mass, w1, mode1_is_x),
                pure_axis_vector(p.mass, w2, !mode1_is_x)};
    }

    return {coupled_left_vector(p, sigma1), coupled_left_vector(p, sigma2)};
}

std::pair<Vec4, Vec4> left_eigenvectors(const DerivedFrequencies& df,
                                        std::pair<double, double> sigmas, double mass) {
    PlanarProblem p;
    p.coupling = PlanarCoupling::AngularMomentum;
    p.mass = mass;
    p.omega_B = df.omega_B;
    // Recover the bare trap frequencies from the shifted confinements.
    p.omega_x = std::sqrt(std::max(0.0, df.omega_1 * df.omega_1 - df.omega_B * df.omega_B));
    p.omega_y = std::sqrt(std::max(0.0, df.omega_2 * df.omega_2 - df.omega_B * df.omega_B));
    return left_eigenvectors(p, sigmas);
}

std::pair<Vec4, Vec4> left_eigenvectors_tilted(const DerivedFrequencies& df,
                                               std::pair<double, double> sigmas, double mass) {
    PlanarProblem p;
    p.coupling = PlanarCoupling::CrossMomentum;
    p.mass = mass;
    p.omega_B = df.omega_B;
    p.omega_x =
        std::sqrt(std::max(0.0, df.tilde_omega_1 * df.tilde_omega_1 -
                                     4.0 * df.omega_B * df.omega_B));
    p.omega_y = df.tilde_omega_2;
    return left_eigenvectors(p, sigmas);
}

NormalModes assemble(const Vec4& u1, const Vec4& u2, std::pair<double, double> sigmas,
                     const QuadraticHamiltonian& hq) {
    const Mat4 sy = sigma_y_blocks();

    NormalModes nm;
    nm.sigma1 = sigmas.first;
    nm.sigma2 = sigmas.second;
    nm.u1 = u1;
    nm.u2 = u2;

    auto metric_sign = [&](const Vec4& u, double sigma) {
        // sign of (u Sigma_y) Hq (u Sigma_y)† / sigma; +1 for a positive mode.
        const Vec4 r = u * sy;
        const cplx val = dot_bilinear(r * hq.m, conj(r));
        return (std::real(val) / sigma >= 0.0) ? 1 : -1;
    };
    nm.epsilon1 = metric_sign(u1, nm.sigma1);
    nm.epsilon2 = metric_sign(u2, nm.sigma2);

    auto right_vector = [&](const Vec4& u, int eps) {
        return cplx(-eps, 0.0) * (sy * conj(u));
    };
    nm.v1 = right_vector(u1, nm.epsilon1);
    nm.v2 = right_vector(u2, nm.epsilon2);

    auto check_norm = [&](const Vec4& u, const Vec4& v, const char* which) {
        const cplx uv = dot_bilinear(u, v);
        if (std::abs(uv - 1.0) > 1e-8)
            throw NormalizationFailure(std::string("mode ") + which +
                                       " normalization drifted: |u.v - 1| = " +
                                       std::to_string(std::abs(uv - 1.0)));
    };
    check_norm(u1, nm.v1, "1");
    check_norm(u2, nm.v2, "2");

    const Vec4 u1c = conj(u1);
    const Vec4 u2c = conj(u2);
    const Vec4 v1c = conj(nm.v1);
    const Vec4 v2c = conj(nm.v2);
    for (std::size_t i = 0; i < 4; ++i) {
        nm.Q(i, 0) = nm.v1[i];
        nm.Q(i, 1) = v1c[i];
        nm.Q(i, 2) = nm.v2[i];
        nm.Q(i, 3) = v2c[i];
        nm.Q_inv(0, i) = u1[i];
        nm.Q_inv(1, i) = u1c[i];
        nm.Q_inv(2, i) = u2[i];
        nm.Q_inv(3, i) = u2c[i];
    }
    return nm;
}

NormalModes solve_normal_modes(const PlanarProblem& problem) {
    const QuadraticHamiltonian hq = build_hamiltonian(problem);
    const OmegaMatrix omega = omega_from(hq);
    const auto sigmas = characteristic_roots(omega);
    const auto [u1, u2] = left_eigenvectors(problem, sigmas);
    return assemble(u1, u2, sigmas, hq);
}

NormalModes solve_normal_modes(const PhysicalSystem& sys) {
    return solve_normal_modes(planar_problem(sys, classify(sys)));
}

}  // namespace emosc
