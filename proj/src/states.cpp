#include "emosc/states.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace emosc {

namespace {

constexpr cplx kI{0.0, 1.0};

using Poly = std::map<std::pair<int, int>, cplx>;

void poly_add(Poly& into, const Poly& term, cplx scale) {
    for (const auto& [key, coef] : term) {
        const cplx add = scale * coef;
        if (add == cplx{}) continue;
        into[key] += add;
    }
}

// Multiply by xr (axis = 0) or yr (axis = 1).
Poly poly_shift_degree(const Poly& p, int axis) {
    Poly out;
    for (const auto& [key, coef] : p) {
        auto k = key;
        (axis == 0 ? k.first : k.second) += 1;
        out[k] = coef;
    }
    return out;
}

Poly poly_derivative(const Poly& p, int axis) {
    Poly out;
    for (const auto& [key, coef] : p) {
        const int power = (axis == 0) ? key.first : key.second;
        if (power == 0) continue;
        auto k = key;
        (axis == 0 ? k.first : k.second) -= 1;
        out[k] += static_cast<double>(power) * coef;
    }
    return out;
}

int poly_degree(const Poly& p) {
    int deg = 0;
    for (const auto& [key, coef] : p) deg = std::max(deg, key.first + key.second);
    return deg;
}

// Table of centered bivariate Gaussian moments
//   T(m, n) = Integral xr^m yr^n exp(-(sxx xr^2 + 2 sxy xr yr + syy yr^2))
// computed from the total mass and the covariance recursion
//   E[x^m y^n] = (m-1) Cxx E[x^(m-2) y^n] + n Cxy E[x^(m-1) y^(n-1)].
class MomentTable {
  public:
    MomentTable(double sxx, double sxy, double syy, int max_degree) {
        const double det = sxx * syy - sxy * sxy;
        if (!(sxx > 0.0) || !(det > 0.0))
            throw NonNormalizable("Gaussian weight is not positive definite");
        mass_ = M_PI / std::sqrt(det);
        cxx_ = 0.5 * syy / det;
        cyy_ = 0.5 * sxx / det;
        cxy_ = -0.5 * sxy / det;

        size_ = static_cast<std::size_t>(max_degree) + 1;
        table_.assign(size_ * size_, 0.0);
        at(0, 0) = 1.0;
        // Fill in total-degree order; odd totals stay zero by symmetry.
        for (int total = 2; total <= max_degree; total += 2) {
            for (int m = 0; m <= total; ++m) {
                const int n = total - m;
                if (n > max_degree) continue;
                double val = 0.0;
                if (m >= 2) {
                    val = (m - 1) * cxx_ * at(m - 2, n);
                    if (n >= 1) val += n * cxy_ * at(m - 1, n - 1);
                } else if (m == 1) {
                    val = n >= 1 ? n * cxy_ * at(0, n - 1) : 0.0;
                } else {
                    val = (n >= 2) ? (n - 1) * cyy_ * at(0, n - 2) : 0.0;
                }
                at(m, n) = val;
            }
        }
    }

    double integral(int m, int n) const {
        if ((m + n) % 2 == 1) return 0.0;
        return mass_ * table_[static_cast<std::size_t>(m) * size_ + n];
    }

  private:
    double& at(int m, int n) { return table_[static_cast<std::size_t>(m) * size_ + n]; }

    double mass_ = 0.0;
    double cxx_ = 0.0, cyy_ = 0.0, cxy_ = 0.0;
    std::vector<double> table_;
    std::size_t size_ = 0;
};

// Real quadratic weight of |psi|^2 for a form: exp(-(sxx x^2 + 2 sxy xy + syy y^2)).
struct RealWeight {
    double sxx, sxy, syy;
};

RealWeight density_weight(const GaussianForm& form) {
    return {std::real(form.lambda_x2), std::imag(form.lambda_xy) * -1.0,
            std::real(form.lambda_y2)};
}

bool same_form(const GaussianForm& a, const GaussianForm& b) {
    auto close = [](cplx p, cplx q) { return std::abs(p - q) <= 1e-12 * (1.0 + std::abs(p)); };
    return close(a.lambda_x2, b.lambda_x2) && close(a.lambda_y2, b.lambda_y2) &&
           close(a.lambda_xy, b.lambda_xy) && std::abs(a.center_x - b.center_x) < 1e-12 &&
           std::abs(a.center_y - b.center_y) < 1e-12;
}

}  // namespace

double oscillator_wavefunction(int n, double mass, double omega, double hbar, double x_rel) {
    if (n < 0) throw InvalidInput("oscillator level index must be non-negative");
    if (!(omega > 0.0) || !(mass > 0.0) || !(hbar > 0.0))
        throw InvalidInput("oscillator_wavefunction requires positive mass, omega, hbar");
    const double scale = std::sqrt(mass * omega / hbar);
    const double xi = scale * x_rel;
    // Normalized recurrence: h_0 = pi^(-1/4) e^(-xi^2/2),
    // h_n = xi sqrt(2/n) h_(n-1) - sqrt((n-1)/n) h_(n-2).
    double prev = 0.0;
    double cur = std::pow(M_PI, -0.25) * std::exp(-0.5 * xi * xi);
    for (int j = 1; j <= n; ++j) {
        const double next = xi * std::sqrt(2.0 / j) * cur - std::sqrt((j - 1.0) / j) * prev;
        prev = cur;
        cur = next;
    }
    return std::sqrt(scale) * cur;
}

cplx GaussianForm::exponent(double xr, double yr) const {
    return -0.5 * lambda_x2 * xr * xr - 0.5 * lambda_y2 * yr * yr - kI * lambda_xy * xr * yr;
}

GaussianForm gaussian_form_from_annihilators(const Vec4& w1, const Vec4& w2, double hbar) {
    // w_i = (xi_i1, eta_i1, xi_i2, eta_i2); quadratic form = i eta^{-1} xi / hbar.
    const cplx e11 = w1[1], e12 = w1[3];
    const cplx e21 = w2[1], e22 = w2[3];
    const cplx x11 = w1[0], x12 = w1[2];
    const cplx x21 = w2[0], x22 = w2[2];

    const cplx det_eta = e11 * e22 - e12 * e21;
    if (std::abs(det_eta) == 0.0)
        throw NonNormalizable("momentum rows of the mode vectors are singular");

    // i eta^{-1} xi
    const cplx a11 = kI * (e22 * x11 - e12 * x21) / det_eta;
    const cplx a12 = kI * (e22 * x12 - e12 * x22) / det_eta;
    const cplx a21 = kI * (-e21 * x11 + e11 * x21) / det_eta;
    const cplx a22 = kI * (-e21 * x12 + e11 * x22) / det_eta;

    GaussianForm form;
    form.lambda_x2 = a11 / hbar;
    form.lambda_y2 = a22 / hbar;
    // The matrix is symmetric up to roundoff; store the average.
    form.lambda_xy = -kI * 0.5 * (a12 + a21) / hbar;

    const RealWeight w = density_weight(form);
    const double det_re = w.sxx * w.syy - w.sxy * w.sxy;
    if (!(w.sxx > 0.0) || !(det_re > 0.0))
        throw NonNormalizable("ground-state quadratic form is not positive definite");
    form.norm_const = std::pow(det_re, 0.25) / std::sqrt(M_PI);
    return form;
}

GaussianForm ground_form(const NormalModes& modes, double hbar) {
    return gaussian_form_from_annihilators(modes.u1, modes.u2, hbar);
}

PolyGaussian ground_state(const GaussianForm& form) {
    PolyGaussian state;
    state.form = form;
    state.coeffs[{0, 0}] = form.norm_const;
    return state;
}

namespace {

// Polynomial image of d/dxr or d/dyr acting on P * exp(g + i k.r):
// (dP + P * (dg + i k)) with dg read from the form.
Poly apply_gradient(const PolyGaussian& state, int axis) {
    const GaussianForm& f = state.form;
    Poly out = poly_derivative(state.coeffs, axis);

    const cplx diag = (axis == 0) ? f.lambda_x2 : f.lambda_y2;
    const double wavek = (axis == 0) ? state.wave_kx : state.wave_ky;

    poly_add(out, poly_shift_degree(state.coeffs, axis), -diag);
    poly_add(out, poly_shift_degree(state.coeffs, 1 - axis), -kI * f.lambda_xy);
    poly_add(out, state.coeffs, kI * wavek);
    return out;
}

PolyGaussian with_coeffs(const PolyGaussian& proto, Poly coeffs) {
    PolyGaussian out = proto;
    out.coeffs = std::move(coeffs);
    return out;
}

}  // namespace

PolyGaussian apply_position_x(const PolyGaussian& state) {
    return with_coeffs(state, poly_shift_degree(state.coeffs, 0));
}

PolyGaussian apply_position_y(const PolyGaussian& state) {
    return with_coeffs(state, poly_shift_degree(state.coeffs, 1));
}

PolyGaussian apply_momentum_x(const PolyGaussian& state, double hbar) {
    Poly grad = apply_gradient(state, 0);
    Poly out;
    poly_add(out, grad, -kI * hbar);
    return with_coeffs(state, std::move(out));
}

PolyGaussian apply_momentum_y(const PolyGaussian& state, double hbar) {
    Poly grad = apply_gradient(state, 1);
    Poly out;
    poly_add(out, grad, -kI * hbar);
    return with_coeffs(state, std::move(out));
}

PolyGaussian apply_raising(const PolyGaussian& state, int mode, const NormalModes& modes,
                           double hbar) {
    if (mode != 1 && mode != 2) throw InvalidInput("mode must be 1 or 2");
    const Vec4& u = (mode == 1) ? modes.u1 : modes.u2;
    const int n_before = (mode == 1) ? state.n1 : state.n2;
    if (poly_degree(state.coeffs) >= kMaxLadderDegree)
        throw InvalidInput("ladder degree cap exceeded");

    // a† = (conj(xi_1) x + conj(eta_1) p_x + conj(xi_2) y + conj(eta_2) p_y)/sqrt(hbar)
    const PolyGaussian px = apply_momentum_x(state, hbar);
    const PolyGaussian py = apply_momentum_y(state, hbar);

    Poly out;
    poly_add(out, poly_shift_degree(state.coeffs, 0), std::conj(u[0]));
    poly_add(out, px.coeffs, std::conj(u[1]));
    poly_add(out, poly_shift_degree(state.coeffs, 1), std::conj(u[2]));
    poly_add(out, py.coeffs, std::conj(u[3]));

    const double scale = 1.0 / std::sqrt(hbar * (n_before + 1.0));
    Poly scaled;
    poly_add(scaled, out, scale);

    PolyGaussian next = with_coeffs(state, std::move(scaled));
    (mode == 1 ? next.n1 : next.n2) = n_before + 1;
    return next;
}

PolyGaussian eigenstate(const NormalModes& modes, double hbar, int n1, int n2) {
    if (n1 < 0 || n2 < 0) throw InvalidInput("quantum numbers must be non-negative");
    if (n1 + n2 > kMaxLadderDegree)
        throw InvalidInput("requested level exceeds the supported ladder degree (" +
                           std::to_string(kMaxLadderDegree) + ")");
    PolyGaussian state = ground_state(ground_form(modes, hbar));
    for (int i = 0; i < n1; ++i) state = apply_raising(state, 1, modes, hbar);
    for (int i = 0; i < n2; ++i) state = apply_raising(state, 2, modes, hbar);
    return state;
}

cplx evaluate(const PolyGaussian& state, double x, double y) {
    const double xr = x - state.form.center_x;
    const double yr = y - state.form.center_y;
    cplx poly{};
    for (const auto& [key, coef] : state.coeffs)
        poly += coef * std::pow(xr, key.first) * std::pow(yr, key.second);
    const cplx expo = state.form.exponent(xr, yr) +
                      kI * (state.wave_kx * xr + state.wave_ky * yr);
    return poly * std::exp(expo);
}

cplx inner_product(const PolyGaussian& a, const PolyGaussian& b) {
    if (!same_form(a.form, b.form) || std::abs(a.wave_kx - b.wave_kx) > 1e-12 ||
        std::abs(a.wave_ky - b.wave_ky) > 1e-12)
        throw InvalidInput("analytic inner product requires matching Gaussian factors");

    const RealWeight w = density_weight(a.form);
    const int deg = poly_degree(a.coeffs) + poly_degree(b.coeffs);
    const MomentTable table(w.sxx, w.sxy, w.syy, deg);

    cplx total{};
    for (const auto& [ka, ca] : a.coeffs)
        for (const auto& [kb, cb] : b.coeffs)
            total += std::conj(ca) * cb * table.integral(ka.first + kb.first,
                                                         ka.second + kb.second);
    return total;
}

Moments moments(const PolyGaussian& state, double hbar) {
    Moments mom;
    mom.norm = std::real(inner_product(state, state));
    if (!(mom.norm > 0.0)) throw NonNormalizable("state has vanishing norm");

    const std::array<PolyGaussian, 4> ops = {
        apply_position_x(state),
        apply_momentum_x(state, hbar),
        apply_position_y(state),
        apply_momentum_y(state, hbar),
    };

    std::array<double, 4> rel_mean{};
    for (std::size_t i = 0; i < 4; ++i)
        rel_mean[i] = std::real(inner_product(state, ops[i])) / mom.norm;

    mom.mean = rel_mean;
    mom.mean[0] += state.form.center_x;
    mom.mean[2] += state.form.center_y;

    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) {
            // Symmetrized: (1/2)<{O_i, O_j}> - <O_i><O_j> = Re<O_i psi|O_j psi> - mi mj
            const double val =
                std::real(inner_product(ops[i], ops[j])) / mom.norm - rel_mean[i] * rel_mean[j];
            mom.covariance[4 * i + j] = val;
            mom.covariance[4 * j + i] = val;
        }
    }

    auto spread = [&](std::size_t i) {
        double var = mom.covariance[4 * i + i];
        const double scale = std::abs(rel_mean[i]) + std::sqrt(std::abs(var)) + 1.0;
        if (var < 0.0) {
            if (var < -1e-12 * scale * scale)
                throw NegativeRadicand("variance came out negative beyond roundoff");
            var = 0.0;
        }
        return std::sqrt(var);
    };
    mom.dx = spread(0);
    mom.dpx = spread(1);
    mom.dy = spread(2);
    mom.dpy = spread(3);
    return mom;
}

cplx landau_wavefunction(const PhysicalSystem& sys, int n1, double k, double x, double y) {
    if (n1 < 0) throw InvalidInput("level index must be non-negative");
    const ConfigurationTag tag = classify(sys);
    if (tag.kind != Configuration::LandauY && tag.kind != Configuration::BothPlanarFree)
        throw InvalidInput("Landau wavefunctions require a free planar axis");

    PhysicalSystem eff = sys;
    double xe = x;
    double ye = y;
    if (tag.kind == Configuration::BothPlanarFree) {
        eff = rotate_planar(sys, tag.rotation_angle);
        const double c = std::cos(tag.rotation_angle);
        const double s = std::sin(tag.rotation_angle);
        xe = c * x + s * y;
        ye = -s * x + c * y;
    } else if (tag.axes_swapped) {
        eff = swap_planar_axes(sys);
        xe = y;
        ye = x;
    }

    const DerivedFrequencies df = derive(eff);
    const double conf = df.tilde_omega_1;
    if (std::abs(conf) < kZeroTol)
        throw ZeroMode("both the trap and the magnetic confinement vanish: free continuum");

    const double center =
        (eff.charge * eff.E_x + 2.0 * k * eff.hbar * df.omega_B) / (eff.mass * conf * conf);
    const double osc = oscillator_wavefunction(n1, eff.mass, conf, eff.hbar, xe - center);
    return osc / std::sqrt(2.0 * M_PI) * std::exp(kI * k * ye);
}

double axial_wavefunction(const PhysicalSystem& sys, int n3, double z) {
    if (n3 < 0) throw InvalidInput("level index must be non-negative");
    if (std::abs(sys.omega_z) < kZeroTol)
        throw ZeroMode("axial axis is untrapped: continuum, not bound levels");
    const double z0 = sys.charge * sys.E_z / (sys.mass * sys.omega_z * sys.omega_z);
    return oscillator_wavefunction(n3, sys.mass, sys.omega_z, sys.hbar, z - z0);
}

}  // namespace emosc
