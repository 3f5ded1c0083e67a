#ifndef EMOSC_STATES_HPP
#define EMOSC_STATES_HPP

#include <array>
#include <map>
#include <utility>

#include "emosc/normal_modes.hpp"
#include "emosc/params.hpp"

// Exact stationary wavefunctions. The coupled planar eigenstates are
// polynomial-times-Gaussian objects built by applying the closed-form ladder
// operators to the correlated Gaussian ground state; expectation values are
// evaluated analytically through bivariate Gaussian moments.

namespace emosc {

// Normalized 1D oscillator eigenfunction (mass/frequency scaled), evaluated
// at x_rel = x - center through the stable normalized recurrence.
double oscillator_wavefunction(int n, double mass, double omega, double hbar, double x_rel);

// Correlated Gaussian ground-state form
//   psi(x, y) ~ exp(-1/2 lambda_x2 x^2 - 1/2 lambda_y2 y^2 - i lambda_xy x y)
// in coordinates relative to (center_x, center_y). lambda_xy is real for the
// trap ground state; squeezed-vacuum forms make all three complex.
struct GaussianForm {
    cplx lambda_x2{};
    cplx lambda_y2{};
    cplx lambda_xy{};
    double center_x = 0.0;
    double center_y = 0.0;
    double norm_const = 0.0;  // (det Re A)^(1/4)/sqrt(pi), A = quadratic-form matrix

    // Exponent at relative coordinates.
    cplx exponent(double xr, double yr) const;
};

// The normalized Gaussian annihilated by the two operators with row vectors
// w_i = (xi_i1, eta_i1, xi_i2, eta_i2): quadratic-form matrix
// i eta^{-1} xi / hbar. Throws NonNormalizable when the real part is not
// positive definite.
GaussianForm gaussian_form_from_annihilators(const Vec4& w1, const Vec4& w2, double hbar);

// Ground-state form from the mode vectors (annihilated by a_1, a_2).
GaussianForm ground_form(const NormalModes& modes, double hbar);

// Polynomial x Gaussian state. The polynomial carries the full amplitude
// (normalization included); `form` fixes the Gaussian and the center;
// wave_kx/wave_ky add a plane-wave factor exp(i(kx xr + ky yr)) produced by
// rigid displacements in momentum.
struct PolyGaussian {
    std::map<std::pair<int, int>, cplx> coeffs;  // (i, j) -> coefficient of xr^i yr^j
    GaussianForm form;
    double wave_kx = 0.0;
    double wave_ky = 0.0;
    int n1 = 0;  // ladder quantum numbers when built as an eigenstate
    int n2 = 0;
};

// Normalized ground state (polynomial = norm_const).
PolyGaussian ground_state(const GaussianForm& form);

// Applies the normalized raising step of the given mode (1 or 2):
// |.., n+1, ..> = a_mode† |.., n, ..> / sqrt(n+1). The mode vectors come from
// `modes`; hbar sets the ladder scale.
PolyGaussian apply_raising(const PolyGaussian& state, int mode, const NormalModes& modes,
                           double hbar);

// |n1 n2> built by repeated raising from the ground state.
// Throws InvalidInput when n1 + n2 exceeds the supported polynomial degree.
inline constexpr int kMaxLadderDegree = 32;
PolyGaussian eigenstate(const NormalModes& modes, double hbar, int n1, int n2);

// Amplitude at lab coordinates.
cplx evaluate(const PolyGaussian& state, double x, double y);

// L2 inner product <a|b> evaluated analytically (states must share the same
// Gaussian form and plane-wave factor).
cplx inner_product(const PolyGaussian& a, const PolyGaussian& b);

// Derivative/position/momentum actions used to build observables; each
// returns a state over the same form.
PolyGaussian apply_position_x(const PolyGaussian& state);
PolyGaussian apply_position_y(const PolyGaussian& state);
PolyGaussian apply_momentum_x(const PolyGaussian& state, double hbar);
PolyGaussian apply_momentum_y(const PolyGaussian& state, double hbar);

// First and (symmetrized) second phase-space moments, lab coordinates,
// ordering (x, p_x, y, p_y).
struct Moments {
    std::array<double, 4> mean{};
    std::array<double, 16> covariance{};  // row-major 4x4
    double dx = 0.0, dpx = 0.0, dy = 0.0, dpy = 0.0;
    double norm = 0.0;  // <psi|psi>
};
Moments moments(const PolyGaussian& state, double hbar);

// Landau-type planar wavefunction at conserved wavenumber k (delta-normalized
// in k): a shifted 1D oscillator level times a transverse plane wave,
// evaluated at lab coordinates (the tag's axis relabeling/rotation applied).
cplx landau_wavefunction(const PhysicalSystem& sys, int n1, double k, double x, double y);

// Trapped axial eigenfunction (center-shifted 1D oscillator) at lab z.
double axial_wavefunction(const PhysicalSystem& sys, int n3, double z);

}  // namespace emosc

#endif
