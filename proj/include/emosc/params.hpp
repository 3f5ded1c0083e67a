#ifndef EMOSC_PARAMS_HPP
#define EMOSC_PARAMS_HPP

#include <optional>

#include "emosc/errors.hpp"

// Physical input description of a charged particle in a three-axis harmonic
// trap with uniform electric field and a static magnetic field that has a
// main out-of-plane component B_z and optionally an in-plane component B_x.
// All quantities are in Gaussian-style units where the magnetic coupling
// enters as q B / (2 M c).

namespace emosc {

struct PhysicalSystem {
    double mass = 1.0;         // M > 0
    double charge = 1.0;       // q, nonzero sign allowed either way
    double hbar = 1.0;         // must be > 0
    double light_speed = 1.0;  // c > 0
    double omega_x = 0.0;      // trap frequencies, each >= 0
    double omega_y = 0.0;
    double omega_z = 0.0;
    double E_x = 0.0;  // uniform electric field components
    double E_y = 0.0;
    double E_z = 0.0;
    double B_z = 0.0;  // out-of-plane magnetic component
    double B_x = 0.0;  // in-plane magnetic component (tilted-field case)

    // Throws InvalidInput when a positivity/finiteness requirement fails.
    void validate() const;
};

// Frequencies derived from the inputs. Field names are part of the public
// contract (they appear in CLI metadata output).
struct DerivedFrequencies {
    double omega_B = 0.0;        // q B_z / (2 M c): half the cyclotron frequency of B_z
    double omega_Bp = 0.0;       // q B_x / (2 M c)
    double omega_1 = 0.0;        // sqrt(omega_x^2 + omega_B^2)
    double omega_2 = 0.0;        // sqrt(omega_y^2 + omega_B^2)
    double tilde_omega_1 = 0.0;  // sqrt(omega_x^2 + 4 omega_B^2): trap + full cyclotron, x axis
    double tilde_omega_2 = 0.0;  // sqrt(omega_y^2 + 4 omega_Bp^2): same for the in-plane field
};

DerivedFrequencies derive(const PhysicalSystem& sys);

// Which closed-form solution family applies.
enum class Configuration {
    Generic,         // all three trap frequencies positive, B_x = 0
    FreeZ,           // planar generic, omega_z = 0, E_z = 0: free axial motion
    LinearZ,         // planar generic, omega_z = 0, E_z != 0: uniformly accelerated axial motion
    LandauY,         // one planar trap frequency zero with no force along it
    Unsolvable,      // untrapped planar axis pushed by a nonzero field component
    BothPlanarFree,  // omega_x = omega_y = 0
    TiltedB,         // B_x != 0 (field tilted into the plane)
};

struct ConfigurationTag {
    Configuration kind = Configuration::Generic;
    // LandauY may arise with the roles of x and y exchanged; axes_swapped
    // records that the solution is expressed in relabeled coordinates
    // (x <-> y, E_x <-> E_y, B_z -> -B_z; energies are unaffected).
    bool axes_swapped = false;
    // BothPlanarFree: in-plane rotation angle that zeroes the transverse
    // electric component (rotate coordinates by -angle).
    double rotation_angle = 0.0;
};

// Decides the configuration; zero tests use the absolute tolerance below.
ConfigurationTag classify(const PhysicalSystem& sys);

inline constexpr double kZeroTol = 1e-12;

// Equilibrium displacement induced by the electric field and the associated
// constant energy offset. A shift is only defined along axes with a nonzero
// trap frequency; for the Landau-type cases the planar displacement depends
// on the conserved wavenumber and lives in the spectrum/states modules.
struct CenterShift {
    std::optional<double> x0;
    std::optional<double> y0;
    std::optional<double> z0;
    double energy_offset = 0.0;  // additive constant pulled out of the Hamiltonian
};

// Throws DegenerateAxis when a required completion of squares does not exist
// (untrapped axis with nonzero force for the active configuration).
CenterShift center_shift(const PhysicalSystem& sys, const ConfigurationTag& tag);

// Relabel the planar axes (x <-> y). Improper rotation: the out-of-plane
// magnetic component changes sign in the relabeled frame.
PhysicalSystem swap_planar_axes(const PhysicalSystem& sys);

// Rotate the planar electric field components by -angle (used by the
// BothPlanarFree case to zero E_y; isotropic zero trap is unaffected).
PhysicalSystem rotate_planar(const PhysicalSystem& sys, double angle);

// Reduced description of the coupled planar problem after separating the
// axial motion and completing squares: two confinement frequencies plus one
// rotational or cross-momentum coupling.
enum class PlanarCoupling {
    AngularMomentum,  // coupling -omega_B (x p_y - y p_x)
    CrossMomentum,    // coupling -2 omega_B x p_y (tilted-field reduction)
};

struct PlanarProblem {
    PlanarCoupling coupling = PlanarCoupling::AngularMomentum;
    double mass = 1.0;
    double hbar = 1.0;
    double omega_x = 0.0;  // bare trap frequency along x
    double omega_y = 0.0;  // bare omega_y, or tilde_omega_2 for CrossMomentum
    double omega_B = 0.0;  // q B_z / (2 M c)
};

// Builds the reduced planar problem for configurations that have one
// (Generic family and TiltedB). Throws ZeroMode for the Landau-type cases.
PlanarProblem planar_problem(const PhysicalSystem& sys, const ConfigurationTag& tag);

}  // namespace emosc

#endif
