#ifndef EMOSC_NORMAL_MODES_HPP
#define EMOSC_NORMAL_MODES_HPP

#include <utility>

#include "emosc/linalg.hpp"
#include "emosc/params.hpp"

// Exact diagonalization of the coupled planar problem. The quadratic
// Hamiltonian H = (1/2) X^T Hq X over phase-space coordinates
// X = (x, p_x, y, p_y) is brought to two decoupled ladder modes
// H = hbar sigma_1 (a1† a1 + 1/2) + hbar sigma_2 (a2† a2 + 1/2)
// by the closed-form left/right eigenvectors of the classical evolution
// matrix Omega = i Sigma_y Hq (which generates dX/dt = Omega X).

namespace emosc {

struct QuadraticHamiltonian {
    // Real symmetric 4x4 coefficient matrix (stored complex, zero imag).
    Mat4 m;
};

struct OmegaMatrix {
    // Real 4x4 evolution matrix, eigenvalues {±i sigma_1, ±i sigma_2}.
    Mat4 m;
};

struct NormalModes {
    double sigma1 = 0.0;  // mode frequencies, sigma1 >= sigma2 > 0
    double sigma2 = 0.0;
    Vec4 u1, u2;  // left eigenvectors (rows): u_i Omega = -i sigma_i u_i
    Vec4 v1, v2;  // right eigenvectors (columns): Omega v_i = -i sigma_i v_i
    Mat4 Q;       // columns (v1, v1*, v2, v2*): X = sqrt(hbar) Q (a1,a1†,a2,a2†)^T
    Mat4 Q_inv;   // rows (u1, u1*, u2, u2*)
    int epsilon1 = 1;  // metric signs diagnosed during assembly (+1 expected)
    int epsilon2 = 1;
};

// Coefficient matrix for the rotational coupling -omega_B (x p_y - y p_x)
// with confinement frequencies omega_1, omega_2.
QuadraticHamiltonian build_hamiltonian_generic(const DerivedFrequencies& df, double mass);

// Coefficient matrix for the in-plane-field reduction: confinements
// tilde_omega_1, tilde_omega_2 and the single cross term -2 omega_B x p_y.
QuadraticHamiltonian build_hamiltonian_tilted(const DerivedFrequencies& df, double mass);

// Dispatch on the reduced planar description.
QuadraticHamiltonian build_hamiltonian(const PlanarProblem& problem);

// Omega = i Sigma_y Hq (real matrix).
OmegaMatrix omega_from(const QuadraticHamiltonian& hq);

// Mode frequencies from the quartic characteristic polynomial
// s^4 + b s^2 + c read off the matrix: b = -tr(Omega^2)/2, c = det(Omega).
// Returns (sigma1, sigma2) with sigma1 >= sigma2 > 0; throws ZeroMode when a
// root vanishes (within tolerance) and NegativeRadicand if the discriminant
// is negative beyond roundoff.
std::pair<double, double> characteristic_roots(const OmegaMatrix& omega);

// Closed-form left eigenvectors for both coupling variants, including the
// decoupled branch (|omega_B| < 1e-12) where the coupled formula degenerates
// and the pure-axis mode vectors are used instead.
std::pair<Vec4, Vec4> left_eigenvectors(const PlanarProblem& problem,
                                        std::pair<double, double> sigmas);

// Convenience overloads building the problem description internally.
std::pair<Vec4, Vec4> left_eigenvectors(const DerivedFrequencies& df,
                                        std::pair<double, double> sigmas, double mass);
std::pair<Vec4, Vec4> left_eigenvectors_tilted(const DerivedFrequencies& df,
                                               std::pair<double, double> sigmas, double mass);

// Builds right eigenvectors v_i = -eps_i Sigma_y u_i†, the transformation
// matrices and the metric signs. Throws NormalizationFailure when
// |u_i . v_i - 1| > 1e-8.
NormalModes assemble(const Vec4& u1, const Vec4& u2, std::pair<double, double> sigmas,
                     const QuadraticHamiltonian& hq);

// Full pipeline for a reduced planar problem / a physical system.
NormalModes solve_normal_modes(const PlanarProblem& problem);
NormalModes solve_normal_modes(const PhysicalSystem& sys);

}  // namespace emosc

#endif
