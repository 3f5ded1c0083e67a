#include "emosc/spectrum.hpp"

#include <cmath>

namespace emosc {

namespace {

bool is_zero(double v) { return std::abs(v) < kZeroTol; }

void require_index(int n, const char* name) {
    if (n < 0) throw InvalidInput(std::string(name) + " must be non-negative");
}

// Accumulates labeled terms; the total is the exact running sum.
struct Accumulator {
    EnergyResult result;

    void add(const std::string& label, double value) {
        result.decomposition.push_back({label, value});
        result.value += value;
    }
};

}  // namespace

EnergyResult planar_levels(const NormalModes& modes, int n1, int n2, double hbar) {
    require_index(n1, "n1");
    require_index(n2, "n2");
    Accumulator acc;
    acc.add("mode1", hbar * modes.sigma1 * (n1 + 0.5));
    acc.add("mode2", hbar * modes.sigma2 * (n2 + 0.5));
    return acc.result;
}

EnergyResult axial_level(const PhysicalSystem& sys, int n3) {
    require_index(n3, "n3");
    if (is_zero(sys.omega_z)) throw ZeroMode("axial axis is untrapped: continuum, not levels");
    Accumulator acc;
    acc.add("z_mode", sys.hbar * sys.omega_z * (n3 + 0.5));
    acc.add("shift_z", -sys.charge * sys.charge * sys.E_z * sys.E_z /
                           (2.0 * sys.mass * sys.omega_z * sys.omega_z));
    return acc.result;
}

EnergyResult full_levels(const PhysicalSystem& sys, const LevelIndex& idx) {
    const ConfigurationTag tag = classify(sys);
    if (tag.kind != Configuration::Generic)
        throw InvalidInput("full 3D levels require the fully trapped configuration");
    require_index(idx.n1, "n1");
    require_index(idx.n2, "n2");
    require_index(idx.n3, "n3");

    const NormalModes modes = solve_normal_modes(planar_problem(sys, tag));

    Accumulator acc;
    acc.add("mode1", sys.hbar * modes.sigma1 * (idx.n1 + 0.5));
    acc.add("mode2", sys.hbar * modes.sigma2 * (idx.n2 + 0.5));
    acc.add("z_mode", sys.hbar * sys.omega_z * (idx.n3 + 0.5));
    const double q2_2m = sys.charge * sys.charge / (2.0 * sys.mass);
    acc.add("shift_x", -q2_2m * sys.E_x * sys.E_x / (sys.omega_x * sys.omega_x));
    acc.add("shift_y", -q2_2m * sys.E_y * sys.E_y / (sys.omega_y * sys.omega_y));
    acc.add("shift_z", -q2_2m * sys.E_z * sys.E_z / (sys.omega_z * sys.omega_z));
    return acc.result;
}

EnergyResult landau_levels(const PhysicalSystem& sys, int n1, double k) {
    require_index(n1, "n1");
    const ConfigurationTag tag = classify(sys);
    if (tag.kind != Configuration::LandauY && tag.kind != Configuration::BothPlanarFree)
        throw InvalidInput("Landau-type levels require a free planar axis with no field along it");

    PhysicalSystem eff = sys;
    if (tag.kind == Configuration::BothPlanarFree)
        eff = rotate_planar(sys, tag.rotation_angle);
    else if (tag.axes_swapped)
        eff = swap_planar_axes(sys);

    const DerivedFrequencies df = derive(eff);
    const double conf = df.tilde_omega_1;  // trap + full cyclotron along the trapped axis
    if (is_zero(conf))
        throw ZeroMode("both the trap and the magnetic confinement vanish: free continuum");

    Accumulator acc;
    acc.add("landau_x", eff.hbar * conf * (n1 + 0.5));
    const double drive = eff.charge * eff.E_x + 2.0 * k * eff.hbar * df.omega_B;
    acc.add("drift_shift", -drive * drive / (2.0 * eff.mass * conf * conf));
    acc.add("kinetic_k", eff.hbar * eff.hbar * k * k / (2.0 * eff.mass));
    return acc.result;
}

EnergyResult tilted_levels(const PhysicalSystem& sys, const LevelIndex& idx) {
    require_index(idx.n1, "n1");
    require_index(idx.n2, "n2");
    const ConfigurationTag tag = classify(sys);
    if (tag.kind != Configuration::TiltedB)
        throw InvalidInput("tilted levels require a nonzero in-plane magnetic component");
    if (!is_zero(sys.omega_z) || !is_zero(sys.E_z))
        throw Unsolvable(
            "an axial trap or axial field combined with an in-plane magnetic component "
            "breaks the conserved axial wavenumber; no closed-form spectrum exists");

    const DerivedFrequencies df = derive(sys);
    const NormalModes modes = solve_normal_modes(planar_problem(sys, tag));

    Accumulator acc;
    acc.add("mode1", sys.hbar * modes.sigma1 * (idx.n1 + 0.5));
    acc.add("mode2", sys.hbar * modes.sigma2 * (idx.n2 + 0.5));
    acc.add("shift_x", -sys.charge * sys.charge * sys.E_x * sys.E_x /
                           (2.0 * sys.mass * sys.omega_x * sys.omega_x));
    const double drive = sys.charge * sys.E_y + 2.0 * idx.k * sys.hbar * df.omega_Bp;
    acc.add("drift_shift",
            -drive * drive / (2.0 * sys.mass * df.tilde_omega_2 * df.tilde_omega_2));
    acc.add("kinetic_k", sys.hbar * sys.hbar * idx.k * idx.k / (2.0 * sys.mass));
    return acc.result;
}

std::optional<ContinuumTag> z_continuum(const PhysicalSystem& sys) {
    sys.validate();
    if (!is_zero(sys.omega_z)) return std::nullopt;
    return is_zero(sys.E_z) ? ContinuumTag::HalfLineFree : ContinuumTag::FullLineLinear;
}

}  // namespace emosc
