#ifndef EMOSC_SPECTRUM_HPP
#define EMOSC_SPECTRUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "emosc/normal_modes.hpp"
#include "emosc/params.hpp"

// Closed-form energy levels for every solvable configuration, with an
// itemized decomposition (the reported value is the exact running sum of its
// decomposition terms).

namespace emosc {

struct LevelIndex {
    int n1 = 0;     // first planar mode quantum number
    int n2 = 0;     // second planar mode quantum number
    int n3 = 0;     // axial quantum number (trapped z only)
    double k = 0.0; // conserved wavenumber for the Landau/tilted families
};

struct EnergyTerm {
    std::string label;
    double value = 0.0;
};

struct EnergyResult {
    double value = 0.0;
    std::vector<EnergyTerm> decomposition;
};

// Discrete planar spectrum of the coupled two-mode problem:
// hbar sigma_1 (n1 + 1/2) + hbar sigma_2 (n2 + 1/2).
EnergyResult planar_levels(const NormalModes& modes, int n1, int n2, double hbar);

// Trapped axial level hbar omega_z (n3 + 1/2) plus its field shift.
// Throws ZeroMode when omega_z = 0.
EnergyResult axial_level(const PhysicalSystem& sys, int n3);

// Full 3D level of the Generic configuration (all axes trapped):
// planar modes + axial mode + the three electric-field shifts.
EnergyResult full_levels(const PhysicalSystem& sys, const LevelIndex& idx);

// Landau-type planar level (one free planar axis, no force along it):
// hbar tilde_omega (n1 + 1/2) plus the k-dependent drift shift and the
// free-wavenumber kinetic term. Valid for LandauY and BothPlanarFree (after
// the tag's axis swap / rotation; energies are frame-invariant).
EnergyResult landau_levels(const PhysicalSystem& sys, int n1, double k);

// Tilted-field level at conserved axial wavenumber k.
EnergyResult tilted_levels(const PhysicalSystem& sys, const LevelIndex& idx);

// Continuum descriptor for an untrapped axial axis.
enum class ContinuumTag {
    HalfLineFree,    // free axial motion: E_z >= 0, doubly degenerate (+-k)
    FullLineLinear,  // uniformly accelerated axial motion: all real E_z
};

// Engaged when the axial axis is untrapped (FreeZ/LinearZ and Landau-type
// configurations with omega_z = 0); nullopt when the axial axis is trapped.
std::optional<ContinuumTag> z_continuum(const PhysicalSystem& sys);

}  // namespace emosc

#endif
