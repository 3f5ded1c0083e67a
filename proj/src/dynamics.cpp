#include "emosc/dynamics.hpp"

#include <cmath>

namespace emosc {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx mode_sum(const CoherentSpec& spec, const NormalModes& modes, std::size_t component) {
    return spec.alpha1 * std::conj(modes.u1[component]) +
           spec.alpha2 * std::conj(modes.u2[component]);
}

}  // namespace

PhaseSpacePoint displacement_shift(const CoherentSpec& spec, const NormalModes& modes,
                                   double hbar) {
    const double root = std::sqrt(hbar);
    // Positions from the momentum rows, momenta from the position rows:
    // x_D = i sqrt(hbar) (alpha_j eta*_j - c.c.), p_D = -i sqrt(hbar) (alpha_j xi*_j - c.c.)
    auto as_real = [](cplx z) { return std::real(z); };
    const cplx zx = mode_sum(spec, modes, 1);
    const cplx zy = mode_sum(spec, modes, 3);
    const cplx wx = mode_sum(spec, modes, 0);
    const cplx wy = mode_sum(spec, modes, 2);

    PhaseSpacePoint d;
    d.x = as_real(kI * (zx - std::conj(zx))) * root;
    d.y = as_real(kI * (zy - std::conj(zy))) * root;
    d.px = as_real(-kI * (wx - std::conj(wx))) * root;
    d.py = as_real(-kI * (wy - std::conj(wy))) * root;
    return d;
}

PolyGaussian displaced_state(const PolyGaussian& base, const CoherentSpec& spec,
                             const NormalModes& modes, double hbar) {
    const PhaseSpacePoint d = displacement_shift(spec, modes, hbar);

    PolyGaussian out = base;
    out.form.center_x += d.x;
    out.form.center_y += d.y;
    out.wave_kx += d.px / hbar;
    out.wave_ky += d.py / hbar;

    // Unitary displacement phase: exp(-i (x_D p_D)/2hbar) together with the
    // constant left over from writing the plane wave in shifted coordinates.
    const double new_cx = base.form.center_x + d.x;
    const double new_cy = base.form.center_y + d.y;
    const double angle = (d.px * new_cx + d.py * new_cy) / hbar -
                         (d.x * d.px + d.y * d.py) / (2.0 * hbar);
    const cplx phase = std::exp(kI * angle);
    for (auto& [key, coef] : out.coeffs) coef *= phase;
    return out;
}

cplx displaced_wavefunction(const PolyGaussian& base, const CoherentSpec& spec,
                            const NormalModes& modes, double hbar, double x, double y) {
    return evaluate(displaced_state(base, spec, modes, hbar), x, y);
}

CoherentSpec evolve_coherent(const CoherentSpec& spec, const NormalModes& modes, double t) {
    CoherentSpec out;
    out.alpha1 = std::exp(-kI * modes.sigma1 * t) * spec.alpha1;
    out.alpha2 = std::exp(-kI * modes.sigma2 * t) * spec.alpha2;
    return out;
}

SqueezeSpec evolve_squeeze(const SqueezeSpec& spec, const NormalModes& modes, double t) {
    SqueezeSpec out;
    out.zeta1 = std::exp(-2.0 * kI * modes.sigma1 * t) * spec.zeta1;
    out.zeta2 = std::exp(-2.0 * kI * modes.sigma2 * t) * spec.zeta2;
    return out;
}

Trajectory center_trajectory(const CoherentSpec& spec, const NormalModes& modes, double hbar,
                             const std::vector<double>& times) {
    Trajectory traj;
    traj.times = times;
    traj.centers.reserve(times.size());
    const double root = std::sqrt(hbar);
    for (const double t : times) {
        const cplx r1 = std::exp(-kI * modes.sigma1 * t) * spec.alpha1;
        const cplx r2 = std::exp(-kI * modes.sigma2 * t) * spec.alpha2;
        std::array<double, 4> c{};
        for (std::size_t alpha = 0; alpha < 4; ++alpha) {
            const cplx z = r1 * modes.v1[alpha] + r2 * modes.v2[alpha];
            c[alpha] = 2.0 * root * std::real(z);
        }
        traj.centers.push_back(c);
    }
    return traj;
}

std::array<double, 4> squeezed_uncertainties(const SqueezeSpec& spec, const NormalModes& modes,
                                             double hbar, int n1, int n2, double t) {
    if (n1 < 0 || n2 < 0) throw InvalidInput("quantum numbers must be non-negative");

    struct ModeData {
        double weight;   // 2n + 1
        double ch, sh;   // cosh(2 rho), sinh(2 rho)
        double phi;
        double sigma;
        const Vec4* v;
    };
    const ModeData data[2] = {
        {2.0 * n1 + 1.0, std::cosh(2.0 * std::abs(spec.zeta1)),
         std::sinh(2.0 * std::abs(spec.zeta1)),
         spec.zeta1 == cplx{} ? 0.0 : std::arg(spec.zeta1), modes.sigma1, &modes.v1},
        {2.0 * n2 + 1.0, std::cosh(2.0 * std::abs(spec.zeta2)),
         std::sinh(2.0 * std::abs(spec.zeta2)),
         spec.zeta2 == cplx{} ? 0.0 : std::arg(spec.zeta2), modes.sigma2, &modes.v2},
    };

    std::array<double, 4> out{};
    for (std::size_t alpha = 0; alpha < 4; ++alpha) {
        double radicand = 0.0;
        double positive_part = 0.0;
        for (const ModeData& m : data) {
            const cplx v = (*m.v)[alpha];
            const double steady = std::norm(v) * m.ch;
            const cplx osc = v * v * std::exp(kI * (m.phi - 2.0 * m.sigma * t));
            radicand += m.weight * (steady + std::real(osc) * m.sh);
            positive_part += m.weight * steady;
        }
        radicand *= hbar;
        positive_part *= hbar;
        if (radicand < 0.0) {
            if (radicand < -1e-12 * std::max(positive_part, 1e-300))
                throw NegativeRadicand("squeezed variance radicand negative beyond roundoff");
            radicand = 0.0;
        }
        out[alpha] = std::sqrt(radicand);
    }
    return out;
}

GaussianForm squeezed_vacuum_form(const SqueezeSpec& spec, const NormalModes& modes,
                                  double hbar) {
    auto bogoliubov = [](const Vec4& u, cplx zeta) {
        const double rho = std::abs(zeta);
        const cplx phase = (zeta == cplx{}) ? cplx{1.0, 0.0} : zeta / rho;
        const double ch = std::cosh(rho);
        const double sh = std::sinh(rho);
        Vec4 w;
        for (std::size_t i = 0; i < 4; ++i) w[i] = ch * u[i] - phase * sh * std::conj(u[i]);
        return w;
    };
    return gaussian_form_from_annihilators(bogoliubov(modes.u1, spec.zeta1),
                                           bogoliubov(modes.u2, spec.zeta2), hbar);
}

}  // namespace emosc
