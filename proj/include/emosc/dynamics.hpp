#ifndef EMOSC_DYNAMICS_HPP
#define EMOSC_DYNAMICS_HPP

#include <array>
#include <vector>

#include "emosc/normal_modes.hpp"
#include "emosc/states.hpp"

// Coherent (displaced) and squeezed dynamics of the coupled planar modes.
// Mode amplitudes rotate as alpha_j(t) = e^{-i sigma_j t} alpha_j, squeeze
// parameters as zeta_j(t) = e^{-2 i sigma_j t} zeta_j; everything else is
// closed-form in the mode vectors.

namespace emosc {

struct CoherentSpec {
    cplx alpha1{};
    cplx alpha2{};
};

struct SqueezeSpec {
    cplx zeta1{};  // zeta = rho e^{i phi}
    cplx zeta2{};
};

struct PhaseSpacePoint {
    double x = 0.0;
    double px = 0.0;
    double y = 0.0;
    double py = 0.0;
};

// Rigid phase-space displacement generated by the coherent amplitudes.
PhaseSpacePoint displacement_shift(const CoherentSpec& spec, const NormalModes& modes,
                                   double hbar);

// Displaced copy of a stationary state: centers shifted by the displacement,
// plane-wave momentum factor added, unitary phase folded into the amplitude.
PolyGaussian displaced_state(const PolyGaussian& base, const CoherentSpec& spec,
                             const NormalModes& modes, double hbar);

// Amplitude of the displaced state at lab coordinates.
cplx displaced_wavefunction(const PolyGaussian& base, const CoherentSpec& spec,
                            const NormalModes& modes, double hbar, double x, double y);

CoherentSpec evolve_coherent(const CoherentSpec& spec, const NormalModes& modes, double t);
SqueezeSpec evolve_squeeze(const SqueezeSpec& spec, const NormalModes& modes, double t);

// Classical center trajectory of the displaced packet, ordering (x, px, y, py).
struct Trajectory {
    std::vector<double> times;
    std::vector<std::array<double, 4>> centers;
};
Trajectory center_trajectory(const CoherentSpec& spec, const NormalModes& modes, double hbar,
                             const std::vector<double>& times);

// Time-dependent spreads (dx, dpx, dy, dpy) of a squeezed displaced number
// state |n1 n2>. Throws NegativeRadicand if a variance radicand is negative
// beyond roundoff.
std::array<double, 4> squeezed_uncertainties(const SqueezeSpec& spec, const NormalModes& modes,
                                             double hbar, int n1, int n2, double t);

// Gaussian form of the squeezed vacuum: the state annihilated by the
// Bogoliubov combinations cosh(rho_j) a_j - e^{i phi_j} sinh(rho_j) a_j†.
GaussianForm squeezed_vacuum_form(const SqueezeSpec& spec, const NormalModes& modes,
                                  double hbar);

}  // namespace emosc

#endif
