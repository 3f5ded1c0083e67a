// emosc: command-line front end for the coupled-oscillator library.
//
// Subcommands: spectrum, modes, groundstate, wavefunction, evolve, oracle,
// compare. All file output is CSV with '#'-prefixed metadata headers (the
// full resolved configuration, no timestamps), numbers printed with 17
// significant digits so repeated runs are byte-identical.
//
// Exit codes: 0 success; 1 compare-tolerance failure; 2 bad flags or config
// file (line-numbered diagnostics); 3 configuration with no closed-form
// solution.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"

#include "emosc/config_file.hpp"
#include "emosc/dynamics.hpp"
#include "emosc/errors.hpp"
#include "emosc/normal_modes.hpp"
#include "emosc/oracle.hpp"
#include "emosc/params.hpp"
#include "emosc/spectrum.hpp"
#include "emosc/states.hpp"

namespace {

using namespace emosc;

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // canonicalize negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(cplx z) { return fmt(z.real()) + "," + fmt(z.imag()); }

// Output sink: file when --out is given, stdout otherwise.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InvalidInput("cannot open output file: " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

const char* config_name(Configuration c) {
    switch (c) {
        case Configuration::Generic: return "generic";
        case Configuration::FreeZ: return "free_z";
        case Configuration::LinearZ: return "linear_z";
        case Configuration::LandauY: return "landau";
        case Configuration::Unsolvable: return "unsolvable";
        case Configuration::BothPlanarFree: return "both_planar_free";
        case Configuration::TiltedB: return "tilted";
    }
    return "unknown";
}

void write_metadata(std::ostream& os, const std::string& sub, const PhysicalSystem& sys,
                    const ConfigurationTag& tag) {
    const DerivedFrequencies df = derive(sys);
    os << "# emosc " << sub << "\n";
    os << "# system: mass=" << fmt(sys.mass) << " charge=" << fmt(sys.charge)
       << " hbar=" << fmt(sys.hbar) << " light_speed=" << fmt(sys.light_speed) << "\n";
    os << "# trap: omega_x=" << fmt(sys.omega_x) << " omega_y=" << fmt(sys.omega_y)
       << " omega_z=" << fmt(sys.omega_z) << "\n";
    os << "# fields: E_x=" << fmt(sys.E_x) << " E_y=" << fmt(sys.E_y) << " E_z=" << fmt(sys.E_z)
       << " B_z=" << fmt(sys.B_z) << " B_x=" << fmt(sys.B_x) << "\n";
    os << "# derived: omega_B=" << fmt(df.omega_B) << " omega_Bp=" << fmt(df.omega_Bp)
       << " omega_1=" << fmt(df.omega_1) << " omega_2=" << fmt(df.omega_2)
       << " tilde_omega_1=" << fmt(df.tilde_omega_1) << " tilde_omega_2=" << fmt(df.tilde_omega_2)
       << "\n";
    os << "# configuration: " << config_name(tag.kind);
    if (tag.axes_swapped) os << " axes_swapped";
    if (tag.rotation_angle != 0.0) os << " rotation_angle=" << fmt(tag.rotation_angle);
    os << "\n";
    if (const auto zc = z_continuum(sys))
        os << "# z_continuum: "
           << (*zc == ContinuumTag::HalfLineFree ? "free" : "uniformly_accelerated") << "\n";
}

// ---- flag parsing helpers ----

std::vector<double> split_doubles(const std::string& text, std::size_t lo, std::size_t hi,
                                  const std::string& flag) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(piece, &used);
            if (used != piece.size() || !std::isfinite(v)) throw std::invalid_argument(piece);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "cannot parse '" + piece + "' as a number");
        }
    }
    if (vals.size() < lo || vals.size() > hi)
        throw CLI::ValidationError(flag, "expected between " + std::to_string(lo) + " and " +
                                             std::to_string(hi) + " comma-separated values");
    return vals;
}

int as_index(double v, const std::string& flag) {
    const int n = static_cast<int>(v);
    if (n < 0 || static_cast<double>(n) != v)
        throw CLI::ValidationError(flag, "quantum numbers must be non-negative integers");
    return n;
}

cplx parse_complex(const std::string& text, const std::string& flag) {
    const auto v = split_doubles(text, 2, 2, flag);
    return {v[0], v[1]};
}

struct LevelsFlag {
    LevelIndex idx;
    bool given = false;
};

LevelsFlag parse_levels(const std::string& text) {
    LevelsFlag lf;
    if (text.empty()) return lf;
    const auto v = split_doubles(text, 2, 4, "--levels");
    lf.idx.n1 = as_index(v[0], "--levels");
    lf.idx.n2 = as_index(v[1], "--levels");
    if (v.size() > 2) lf.idx.n3 = as_index(v[2], "--levels");
    if (v.size() > 3) lf.idx.k = v[3];
    lf.given = true;
    return lf;
}

GridSpec parse_grid(const std::string& text) {
    const auto v = split_doubles(text, 4, 4, "--grid");
    GridSpec g;
    g.nx = static_cast<int>(v[0]);
    g.ny = static_cast<int>(v[1]);
    if (g.nx < 3 || g.ny < 3 || v[0] != g.nx || v[1] != g.ny)
        throw CLI::ValidationError("--grid", "nx and ny must be integers >= 3");
    g.len_x = v[2];
    g.len_y = v[3];
    if (!(g.len_x > 0.0) || !(g.len_y > 0.0))
        throw CLI::ValidationError("--grid", "Lx and Ly must be positive");
    return g;
}

// ---- shared computations ----

// Static equilibrium displacement for labeling lab-frame output; zero along
// axes where none exists.
std::pair<double, double> planar_centers(const PhysicalSystem& sys, const ConfigurationTag& tag) {
    if (tag.kind == Configuration::TiltedB) {
        // x center only; the y center is k-dependent (handled by callers).
        return {sys.charge * sys.E_x / (sys.mass * sys.omega_x * sys.omega_x), 0.0};
    }
    const CenterShift shift = center_shift(sys, tag);
    return {shift.x0.value_or(0.0), shift.y0.value_or(0.0)};
}

struct SpectrumRow {
    LevelIndex idx;
    EnergyResult res;
};

std::vector<SpectrumRow> enumerate_spectrum(const PhysicalSystem& sys,
                                            const ConfigurationTag& tag, const LevelsFlag& lf) {
    std::vector<SpectrumRow> rows;
    const double k = lf.idx.k;

    auto planar_with_shift = [&](int n1, int n2) {
        const NormalModes modes = solve_normal_modes(sys);
        EnergyResult res = planar_levels(modes, n1, n2, sys.hbar);
        const CenterShift shift = center_shift(sys, tag);
        if (shift.energy_offset != 0.0) {
            res.decomposition.push_back({"shift_xy", shift.energy_offset});
            res.value += shift.energy_offset;
        }
        return res;
    };

    switch (tag.kind) {
        case Configuration::Generic:
            if (lf.given) {
                rows.push_back({lf.idx, full_levels(sys, lf.idx)});
            } else {
                for (int n1 = 0; n1 <= 3; ++n1)
                    for (int n2 = 0; n2 <= 3; ++n2)
                        for (int n3 = 0; n3 <= 3; ++n3) {
                            LevelIndex idx{n1, n2, n3, 0.0};
                            rows.push_back({idx, full_levels(sys, idx)});
                        }
            }
            break;
        case Configuration::FreeZ:
        case Configuration::LinearZ:
            if (lf.given) {
                if (lf.idx.n3 != 0)
                    throw InvalidInput("the axial motion is a continuum here; n3 must be 0");
                rows.push_back({lf.idx, planar_with_shift(lf.idx.n1, lf.idx.n2)});
            } else {
                for (int n1 = 0; n1 <= 5; ++n1)
                    for (int n2 = 0; n2 <= 5; ++n2)
                        rows.push_back({LevelIndex{n1, n2, 0, 0.0},
                                        planar_with_shift(n1, n2)});
            }
            break;
        case Configuration::LandauY:
        case Configuration::BothPlanarFree:
            if (lf.given) {
                rows.push_back({lf.idx, landau_levels(sys, lf.idx.n1, k)});
            } else {
                for (int n1 = 0; n1 <= 5; ++n1)
                    rows.push_back({LevelIndex{n1, 0, 0, 0.0}, landau_levels(sys, n1, 0.0)});
            }
            break;
        case Configuration::TiltedB:
            if (lf.given) {
                rows.push_back({lf.idx, tilted_levels(sys, lf.idx)});
            } else {
                for (int n1 = 0; n1 <= 3; ++n1)
                    for (int n2 = 0; n2 <= 3; ++n2) {
                        LevelIndex idx{n1, n2, 0, 0.0};
                        rows.push_back({idx, tilted_levels(sys, idx)});
                    }
            }
            break;
        case Configuration::Unsolvable:
            throw Unsolvable(
                "a uniform force acts along an untrapped planar axis; the Hamiltonian cannot "
                "be reduced to a solvable quadratic form");
    }

    if (!lf.given) {
        std::stable_sort(rows.begin(), rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
            return a.res.value < b.res.value;
        });
    }
    return rows;
}

// Lowest m planar levels (indices and values) of the reduced problem, by
// exhaustive enumeration over a safely large quantum-number box.
std::vector<SpectrumRow> lowest_planar(const NormalModes& modes, double hbar, int m) {
    std::vector<SpectrumRow> rows;
    for (int n1 = 0; n1 <= m + 8; ++n1)
        for (int n2 = 0; n2 <= m + 8; ++n2)
            rows.push_back({LevelIndex{n1, n2, 0, 0.0}, planar_levels(modes, n1, n2, hbar)});
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SpectrumRow& a, const SpectrumRow& b) {
                         return a.res.value < b.res.value;
                     });
    rows.resize(m);
    return rows;
}

// ---- subcommands ----

struct Options {
    std::string system_path;
    std::string out_path;
    std::string grid_text;
    std::string levels_text;
    std::string time_text;
    std::vector<std::string> alpha_text;
    std::vector<std::string> zeta_text;
};

int run_spectrum(const Options& opt) {
    const PhysicalSystem sys = load_system_file(opt.system_path);
    const ConfigurationTag tag = classify(sys);
    const auto rows = enumerate_spectrum(sys, tag, parse_levels(opt.levels_text));

    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    write_metadata(os, "spectrum", sys, tag);
    os << "# columns: n1,n2,n3,k,value";
    for (const auto& term : rows.front().res.decomposition) os << "," << term.label;
    os << "\n";
    for (const auto& row : rows) {
        os << row.idx.n1 << "," << row.idx.n2 << "," << row.idx.n3 << "," << fmt(row.idx.k)
           << "," << fmt(row.res.value);
        for (const auto& term : row.res.decomposition) os << "," << fmt(term.value);
        os << "\n";
    }
    return 0;
}

void write_vec(std::ostream& os, const char* name, const Vec4& v) {
    os << name << ":";
    for (std::size_t i = 0; i < 4; ++i) os << " " << fmt(v[i]);
    os << "\n";
}

void write_mat(std::ostream& os, const char* name, const Mat4& m, bool real_only) {
    os << name << ":\n";
    for (std::size_t i = 0; i < 4; ++i) {
        os << " ";
        for (std::size_t j = 0; j < 4; ++j)
            os << " " << (real_only ? fmt(m(i, j).real()) : fmt(m(i, j)));
        os << "\n";
    }
}

int run_modes(const Options& opt) {
    const PhysicalSystem sys = load_system_file(opt.system_path);
    const ConfigurationTag tag = classify(sys);
    const PlanarProblem problem = planar_problem(sys, tag);
    const QuadraticHamiltonian hq = build_hamiltonian(problem);
    const OmegaMatrix omega = omega_from(hq);
    const NormalModes nm = solve_normal_modes(problem);

    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    write_metadata(os, "modes", sys, tag);
    os << "sigma1: " << fmt(nm.sigma1) << "\n";
    os << "sigma2: " << fmt(nm.sigma2) << "\n";
    os << "epsilon1: " << nm.epsilon1 << "\n";
    os << "epsilon2: " << nm.epsilon2 << "\n";
    write_mat(os, "omega", omega.m, true);
    write_vec(os, "u1", nm.u1);
    write_vec(os, "u2", nm.u2);
    write_vec(os, "v1", nm.v1);
    write_vec(os, "v2", nm.v2);
    write_mat(os, "Q", nm.Q, false);
    write_mat(os, "Q_inv", nm.Q_inv, false);

    // Residual norms of the defining identities.
    const cplx i_sig1(0.0, nm.sigma1), i_sig2(0.0, nm.sigma2);
    os << "residual_u1: " << fmt(max_abs(nm.u1 * omega.m + i_sig1 * nm.u1)) << "\n";
    os << "residual_u2: " << fmt(max_abs(nm.u2 * omega.m + i_sig2 * nm.u2)) << "\n";
    os << "residual_v1: " << fmt(max_abs(omega.m * nm.v1 + i_sig1 * nm.v1)) << "\n";
    os << "residual_v2: " << fmt(max_abs(omega.m * nm.v2 + i_sig2 * nm.v2)) << "\n";

    Mat4 diag = Mat4::zero();
    diag(0, 0) = diag(1, 1) = nm.sigma1;
    diag(2, 2) = diag(3, 3) = nm.sigma2;
    os << "residual_diagonalization: " << fmt(max_abs(adjoint(nm.Q) * hq.m * nm.Q - diag))
       << "\n";
    os << "residual_inverse: " << fmt(max_abs(nm.Q_inv * nm.Q - Mat4::identity())) << "\n";
    return 0;
}

int run_groundstate(const Options& opt) {
    const PhysicalSystem sys = load_system_file(opt.system_path);
    const ConfigurationTag tag = classify(sys);
    const NormalModes nm = solve_normal_modes(sys);
    GaussianForm form = ground_form(nm, sys.hbar);
    const auto centers = planar_centers(sys, tag);
    form.center_x = centers.first;
    form.center_y = centers.second;
    const Moments mom = moments(ground_state(form), sys.hbar);

    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    write_metadata(os, "groundstate", sys, tag);
    os << "lambda_x2: " << fmt(form.lambda_x2) << "\n";
    os << "lambda_y2: " << fmt(form.lambda_y2) << "\n";
    os << "lambda_xy: " << fmt(form.lambda_xy) << "\n";
    os << "center_x: " << fmt(form.center_x) << "\n";
    os << "center_y: " << fmt(form.center_y) << "\n";
    os << "norm_const: " << fmt(form.norm_const) << "\n";
    os << "dx: " << fmt(mom.dx) << "\n";
    os << "dpx: " << fmt(mom.dpx) << "\n";
    os << "dy: " << fmt(mom.dy) << "\n";
    os << "dpy: " << fmt(mom.dpy) << "\n";
    os << "product_x: " << fmt(mom.dx * mom.dpx) << "\n";
    os << "product_y: " << fmt(mom.dy * mom.dpy) << "\n";
    os << "half_hbar: " << fmt(0.5 * sys.hbar) << "\n";
    return 0;
}

int run_wavefunction(const Options& opt) {
    const PhysicalSystem sys = load_system_file(opt.system_path);
    const ConfigurationTag tag = classify(sys);
    if (opt.grid_text.empty()) throw CLI::ValidationError("--grid", "required for wavefunction");
    const GridSpec grid = parse_grid(opt.grid_text);
    const LevelsFlag lf = parse_levels(opt.levels_text);
    const int n1 = lf.idx.n1;
    const int n2 = lf.idx.n2;
    const double k = lf.idx.k;

    std::function<cplx(double, double)> amplitude;
    if (tag.kind == Configuration::LandauY || tag.kind == Configuration::BothPlanarFree) {
        amplitude = [&](double x, double y) { return landau_wavefunction(sys, n1, k, x, y); };
    } else if (tag.kind == Configuration::Unsolvable) {
        throw Unsolvable(
            "a uniform force acts along an untrapped planar axis; the Hamiltonian cannot "
            "be reduced to a solvable quadratic form");
    } else {
        const NormalModes nm = solve_normal_modes(sys);
        PolyGaussian state = eigenstate(nm, sys.hbar, n1, n2);
        auto centers = planar_centers(sys, tag);
        if (tag.kind == Configuration::TiltedB) {
            const DerivedFrequencies df = derive(sys);
            centers.second = (sys.charge * sys.E_y + 2.0 * k * sys.hbar * df.omega_Bp) /
                             (sys.mass * df.tilde_omega_2 * df.tilde_omega_2);
        }
        state.form.center_x = centers.first;
        state.form.center_y = centers.second;
        amplitude = [state](double x, double y) { return evaluate(state, x, y); };
    }

    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    write_metadata(os, "wavefunction", sys, tag);
    os << "# levels: n1=" << n1 << " n2=" << n2 << " k=" << fmt(k) << "\n";
    os << "# grid: nx=" << grid.nx << " ny=" << grid.ny << " Lx=" << fmt(grid.len_x)
       << " Ly=" << fmt(grid.len_y) << "\n";
    os << "# columns: x,y,re,im,abs2\n";
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j) {
            const double x = grid.x(i);
            const double y = grid.y(j);
            const cplx a = amplitude(x, y);
            os << fmt(x) << "," << fmt(y) << "," << fmt(a.real()) << "," << fmt(a.imag()) << ","
               << fmt(std::norm(a)) << "\n";
        }
    return 0;
}

int run_evolve(const Options& opt) {
    const PhysicalSystem sys = load_system_file(opt.system_path);
    const ConfigurationTag tag = classify(sys);
    if (opt.time_text.empty()) throw CLI::ValidationError("--time", "required for evolve");
    const auto tv = split_doubles(opt.time_text, 2, 2, "--time");
    const double horizon = tv[0];
    const int samples = static_cast<int>(tv[1]);
    if (!(horizon > 0.0) || samples < 2 || tv[1] != samples)
        throw CLI::ValidationError("--time", "expected T>0 and an integer sample count >= 2");

    CoherentSpec coherent;
    if (!opt.alpha_text.empty()) {
        coherent.alpha1 = parse_complex(opt.alpha_text[0], "--alpha");
        coherent.alpha2 = parse_complex(opt.alpha_text[1], "--alpha");
    }
    SqueezeSpec squeeze;
    if (!opt.zeta_text.empty()) {
        squeeze.zeta1 = parse_complex(opt.zeta_text[0], "--zeta");
        squeeze.zeta2 = parse_complex(opt.zeta_text[1], "--zeta");
    }
    const LevelsFlag lf = parse_levels(opt.levels_text);

    const NormalModes nm = solve_normal_modes(sys);
    const auto centers = planar_centers(sys, tag);

    std::vector<double> times(samples);
    for (int i = 0; i < samples; ++i) times[i] = horizon * i / (samples - 1);
    const Trajectory traj = center_trajectory(coherent, nm, sys.hbar, times);

    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    write_metadata(os, "evolve", sys, tag);
    os << "# alpha1=" << fmt(coherent.alpha1) << " alpha2=" << fmt(coherent.alpha2)
       << " zeta1=" << fmt(squeeze.zeta1) << " zeta2=" << fmt(squeeze.zeta2) << " n1=" << lf.idx.n1
       << " n2=" << lf.idx.n2 << "\n";
    os << "# time: horizon=" << fmt(horizon) << " samples=" << samples << "\n";
    os << "# columns: t,x_c,y_c,px_c,py_c,dx,dpx,dy,dpy\n";
    for (int i = 0; i < samples; ++i) {
        const auto& c = traj.centers[i];
        const auto s =
            squeezed_uncertainties(squeeze, nm, sys.hbar, lf.idx.n1, lf.idx.n2, times[i]);
        os << fmt(times[i]) << "," << fmt(c[0] + centers.first) << ","
           << fmt(c[2] + centers.second) << "," << fmt(c[1]) << "," << fmt(c[3]) << ","
           << fmt(s[0]) << "," << fmt(s[1]) << "," << fmt(s[2]) << "," << fmt(s[3]) << "\n";
    }
    return 0;
}

int run_oracle(const Options& opt, bool gate) {
    const PhysicalSystem sys = load_system_file(opt.system_path);
    const ConfigurationTag tag = classify(sys);
    if (opt.grid_text.empty())
        throw CLI::ValidationError("--grid", "required for oracle/compare");
    const GridSpec grid = parse_grid(opt.grid_text);

    const PlanarProblem problem = planar_problem(sys, tag);
    const NormalModes nm = solve_normal_modes(problem);
    constexpr int kCount = 6;
    constexpr double kTol = 1e-3;  // relative, matched to the discretization order

    const auto analytic = lowest_planar(nm, sys.hbar, kCount);
    const auto numeric = refined_planar_eigenvalues(problem, grid, kCount);

    double max_rel = 0.0;
    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    write_metadata(os, gate ? "compare" : "oracle", sys, tag);
    os << "# grid: nx=" << grid.nx << " ny=" << grid.ny << " Lx=" << fmt(grid.len_x)
       << " Ly=" << fmt(grid.len_y) << "\n";
    os << "# columns: level,n1,n2,analytic,numeric,abs_err,rel_err\n";
    for (int i = 0; i < kCount; ++i) {
        const double a = analytic[i].res.value;
        const double b = numeric[i];
        const double abs_err = std::abs(a - b);
        const double rel_err = abs_err / std::abs(a);
        max_rel = std::max(max_rel, rel_err);
        os << i << "," << analytic[i].idx.n1 << "," << analytic[i].idx.n2 << "," << fmt(a) << ","
           << fmt(b) << "," << fmt(abs_err) << "," << fmt(rel_err) << "\n";
    }
    const bool pass = max_rel <= kTol;
    os << "# summary: " << (pass ? "PASS" : "FAIL") << " max_rel_err=" << fmt(max_rel)
       << " tolerance=" << fmt(kTol) << "\n";
    if (!opt.out_path.empty())
        std::cout << (pass ? "PASS" : "FAIL") << " max_rel_err=" << fmt(max_rel) << "\n";
    return (gate && !pass) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coupled-oscillator solver for a charged particle in static fields"};
    app.require_subcommand(1);

    Options opt;
    std::string active;

    auto add_common = [&](CLI::App* sub, bool needs_grid, bool needs_dynamics) {
        sub->add_option("--system", opt.system_path, "system configuration file")->required();
        sub->add_option("--out", opt.out_path, "output file (default: stdout)");
        sub->add_option("--levels", opt.levels_text, "level indices n1,n2[,n3[,k]]");
        if (needs_grid)
            sub->add_option("--grid", opt.grid_text, "sampling grid nx,ny,Lx,Ly");
        if (needs_dynamics) {
            sub->add_option("--alpha", opt.alpha_text, "mode amplitudes: two re,im pairs")
                ->expected(2);
            sub->add_option("--zeta", opt.zeta_text, "squeeze parameters: two re,im pairs")
                ->expected(2);
            sub->add_option("--time", opt.time_text, "time window T,N (N samples, t=0..T)");
        }
        sub->callback([&, name = sub->get_name()]() { active = name; });
    };

    add_common(app.add_subcommand("spectrum", "closed-form energy levels as CSV"), false, false);
    add_common(app.add_subcommand("modes", "normal-mode frequencies, vectors and residuals"),
               false, false);
    add_common(app.add_subcommand("groundstate", "correlated Gaussian parameters and spreads"),
               false, false);
    add_common(app.add_subcommand("wavefunction", "sampled eigenfunction as CSV"), true, false);
    add_common(app.add_subcommand("evolve", "coherent/squeezed packet trajectory as CSV"), false,
               true);
    add_common(app.add_subcommand("oracle", "numeric eigenvalue cross-check report"), true,
               false);
    add_common(app.add_subcommand("compare", "like oracle, but exits 1 past tolerance"), true,
               false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "flag error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (active == "spectrum") return run_spectrum(opt);
        if (active == "modes") return run_modes(opt);
        if (active == "groundstate") return run_groundstate(opt);
        if (active == "wavefunction") return run_wavefunction(opt);
        if (active == "evolve") return run_evolve(opt);
        if (active == "oracle") return run_oracle(opt, false);
        if (active == "compare") return run_oracle(opt, true);
        std::cerr << "flag error: no subcommand selected\n";
        return 2;
    } catch (const Unsolvable& e) {
        std::cerr << "unsolvable configuration: " << e.what() << "\n";
        return 3;
    } catch (const ConfigParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "flag error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
