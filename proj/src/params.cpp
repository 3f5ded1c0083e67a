#include "emosc/params.hpp"

#include <cmath>
#include <string>

namespace emosc {

namespace {

bool is_zero(double v) { return std::abs(v) < kZeroTol; }

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidInput(what);
}

}  // namespace

void PhysicalSystem::validate() const {
    require(std::isfinite(mass) && mass > 0.0, "mass must be positive and finite");
    require(std::isfinite(hbar) && hbar > 0.0, "hbar must be positive and finite");
    require(std::isfinite(light_speed) && light_speed > 0.0,
            "light_speed must be positive and finite");
    require(std::isfinite(charge), "charge must be finite");
    require(std::isfinite(omega_x) && omega_x >= 0.0, "omega_x must be >= 0 and finite");
    require(std::isfinite(omega_y) && omega_y >= 0.0, "omega_y must be >= 0 and finite");
    require(std::isfinite(omega_z) && omega_z >= 0.0, "omega_z must be >= 0 and finite");
    require(std::isfinite(E_x), "E_x must be finite");
    require(std::isfinite(E_y), "E_y must be finite");
    require(std::isfinite(E_z), "E_z must be finite");
    require(std::isfinite(B_z), "B_z must be finite");
    require(std::isfinite(B_x), "B_x must be finite");
}

DerivedFrequencies derive(const PhysicalSystem& sys) {
    sys.validate();
    DerivedFrequencies df;
    df.omega_B = sys.charge * sys.B_z / (2.0 * sys.mass * sys.light_speed);
    df.omega_Bp = sys.charge * sys.B_x / (2.0 * sys.mass * sys.light_speed);
    df.omega_1 = std::hypot(sys.omega_x, df.omega_B);
    df.omega_2 = std::hypot(sys.omega_y, df.omega_B);
    df.tilde_omega_1 = std::hypot(sys.omega_x, 2.0 * df.omega_B);
    df.tilde_omega_2 = std::hypot(sys.omega_y, 2.0 * df.omega_Bp);
    return df;
}

ConfigurationTag classify(const PhysicalSystem& sys) {
    sys.validate();
    ConfigurationTag tag;

    if (!is_zero(sys.B_x)) {
        tag.kind = Configuration::TiltedB;
        return tag;
    }

    const bool x_free = is_zero(sys.omega_x);
    const bool y_free = is_zero(sys.omega_y);

    if (x_free && y_free) {
        tag.kind = Configuration::BothPlanarFree;
        // Rotate so the second planar field component vanishes. With no
        // planar field the frame is already aligned (angle 0).
        tag.rotation_angle =
            (is_zero(sys.E_x) && is_zero(sys.E_y)) ? 0.0 : std::atan2(sys.E_y, sys.E_x);
        return tag;
    }
    if (y_free) {
        tag.kind = is_zero(sys.E_y) ? Configuration::LandauY : Configuration::Unsolvable;
        return tag;
    }
    if (x_free) {
        // Same physics with the planar axes relabeled.
        tag.axes_swapped = true;
        tag.kind = is_zero(sys.E_x) ? Configuration::LandauY : Configuration::Unsolvable;
        return tag;
    }

    if (is_zero(sys.omega_z)) {
        tag.kind = is_zero(sys.E_z) ? Configuration::FreeZ : Configuration::LinearZ;
        return tag;
    }

    tag.kind = Configuration::Generic;
    return tag;
}

CenterShift center_shift(const PhysicalSystem& sys, const ConfigurationTag& tag) {
    sys.validate();
    CenterShift shift;

    auto axis_shift = [&](double omega, double field, const char* axis)
        -> std::optional<double> {
        if (!is_zero(omega)) {
            const double s = sys.charge * field / (sys.mass * omega * omega);
            shift.energy_offset -=
                sys.charge * sys.charge * field * field / (2.0 * sys.mass * omega * omega);
            return s;
        }
        if (!is_zero(field))
            throw DegenerateAxis(std::string("axis ") + axis +
                                 " has zero trap frequency but a nonzero field component; "
                                 "no static displacement exists");
        return std::nullopt;
    };

    switch (tag.kind) {
        case Configuration::Unsolvable:
            throw DegenerateAxis(
                "untrapped planar axis with nonzero transverse field: no displacement exists");
        case Configuration::Generic:
            shift.x0 = axis_shift(sys.omega_x, sys.E_x, "x");
            shift.y0 = axis_shift(sys.omega_y, sys.E_y, "y");
            shift.z0 = axis_shift(sys.omega_z, sys.E_z, "z");
            break;
        case Configuration::FreeZ:
            shift.x0 = axis_shift(sys.omega_x, sys.E_x, "x");
            shift.y0 = axis_shift(sys.omega_y, sys.E_y, "y");
            break;
        case Configuration::LinearZ:
            // The axial motion keeps its linear potential; only planar
            // displacements are static.
            shift.x0 = axis_shift(sys.omega_x, sys.E_x, "x");
            shift.y0 = axis_shift(sys.omega_y, sys.E_y, "y");
            break;
        case Configuration::LandauY: {
            // The displacement along the trapped planar axis depends on the
            // conserved wavenumber; only the axial part is static here.
            const PhysicalSystem s = tag.axes_swapped ? swap_planar_axes(sys) : sys;
            if (!is_zero(s.omega_z)) shift.z0 = axis_shift(s.omega_z, s.E_z, "z");
            else if (!is_zero(s.E_z))
                // Free axial axis with a push: handled as a continuum, no shift.
                shift.z0 = std::nullopt;
            break;
        }
        case Configuration::BothPlanarFree: {
            const PhysicalSystem s = rotate_planar(sys, tag.rotation_angle);
            if (!is_zero(s.omega_z)) shift.z0 = axis_shift(s.omega_z, s.E_z, "z");
            break;
        }
        case Configuration::TiltedB: {
            // Tilted reduction completes the square along x only; the y
            // displacement depends on the conserved axial wavenumber.
            if (!is_zero(sys.omega_x)) {
                shift.x0 = axis_shift(sys.omega_x, sys.E_x, "x");
            } else if (!is_zero(sys.E_x)) {
                throw DegenerateAxis(
                    "tilted-field configuration with zero omega_x and nonzero E_x has no "
                    "static x displacement");
            }
            break;
        }
    }
    return shift;
}

PhysicalSystem swap_planar_axes(const PhysicalSystem& sys) {
    PhysicalSystem out = sys;
    out.omega_x = sys.omega_y;
    out.omega_y = sys.omega_x;
    out.E_x = sys.E_y;
    out.E_y = sys.E_x;
    out.B_z = -sys.B_z;
    return out;
}

PhysicalSystem rotate_planar(const PhysicalSystem& sys, double angle) {
    PhysicalSystem out = sys;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    // Components of E in the frame rotated by +angle.
    out.E_x = c * sys.E_x + s * sys.E_y;
    out.E_y = -s * sys.E_x + c * sys.E_y;
    return out;
}

PlanarProblem planar_problem(const PhysicalSystem& sys, const ConfigurationTag& tag) {
    const DerivedFrequencies df = derive(sys);
    PlanarProblem p;
    p.mass = sys.mass;
    p.hbar = sys.hbar;
    p.omega_B = df.omega_B;

    switch (tag.kind) {
        case Configuration::Generic:
        case Configuration::FreeZ:
        case Configuration::LinearZ:
            p.coupling = PlanarCoupling::AngularMomentum;
            p.omega_x = sys.omega_x;
            p.omega_y = sys.omega_y;
            return p;
        case Configuration::TiltedB:
            p.coupling = PlanarCoupling::CrossMomentum;
            p.omega_x = sys.omega_x;
            p.omega_y = df.tilde_omega_2;
            return p;
        default:
            throw ZeroMode(
                "configuration has an untrapped planar direction; the coupled "
                "two-mode reduction does not apply");
    }
}

}  // namespace emosc
