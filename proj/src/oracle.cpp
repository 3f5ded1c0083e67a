#include "emosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "emosc/normal_modes.hpp"

namespace emosc {

namespace {

constexpr cplx kI{0.0, 1.0};

double vec_norm(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(s);
}

cplx vec_dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

void vec_axpy(std::vector<cplx>& y, cplx alpha, const std::vector<cplx>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

void vec_scale(std::vector<cplx>& v, double s) {
    for (cplx& z : v) z *= s;
}

// Conjugate gradients for a Hermitian positive definite map. Returns the
// iteration count; throws ConvergenceFailure when maxit is exhausted.
int cg_solve(const LinearMap& op, const std::vector<cplx>& b, std::vector<cplx>& x,
             double rel_tol, int maxit) {
    const std::size_t n = op.dim();
    x.assign(n, cplx{});
    std::vector<cplx> r = b;
    std::vector<cplx> p = r;
    std::vector<cplx> ap(n);

    const double b_norm = vec_norm(b);
    if (b_norm == 0.0) return 0;
    double rr = b_norm * b_norm;

    for (int it = 1; it <= maxit; ++it) {
        op.apply(p.data(), ap.data());
        const double pap = std::real(vec_dot(p, ap));
        if (!(pap > 0.0))
            throw ConvergenceFailure("conjugate gradients met a non-positive curvature");
        const double alpha = rr / pap;
        vec_axpy(x, alpha, p);
        vec_axpy(r, -alpha, ap);
        const double rr_new = std::real(vec_dot(r, r));
        if (std::sqrt(rr_new) <= rel_tol * b_norm) return it;
        const double beta = rr_new / rr;
        rr = rr_new;
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    }
    throw ConvergenceFailure("inner conjugate-gradient solve did not reach tolerance");
}

struct Ritz {
    double value = 0.0;
    std::vector<cplx> vec;
};

// Lowest eigenpairs of a Hermitian positive definite map through Lanczos with
// full reorthogonalization on the inverse operator, with deflation restarts
// to capture degenerate clusters.
std::vector<Ritz> lanczos_lowest(const LinearMap& op, int m, double res_tol, int step_budget) {
    const std::size_t dim = op.dim();
    const std::size_t want = static_cast<std::size_t>(m);
    if (m <= 0 || want > dim) throw InvalidInput("requested eigenpair count out of range");

    std::mt19937_64 rng(0x6d6f64657331ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<Ritz> found;
    std::vector<cplx> w(dim), hx(dim);
    int steps_used = 0;
    const int max_restarts = 24;

    // Extract converged Ritz pairs from the current Krylov factorization.
    // Returns how many new pairs were accepted into `found`.
    auto harvest = [&](const std::vector<std::vector<cplx>>& basis,
                       const std::vector<double>& alphas,
                       const std::vector<double>& betas) -> std::size_t {
        const std::size_t k = alphas.size();
        if (k == 0) return 0;
        std::vector<double> tmat(k * k, 0.0);
        for (std::size_t i = 0; i < k; ++i) {
            tmat[i * k + i] = alphas[i];
            if (i + 1 < k) {
                tmat[i * k + i + 1] = betas[i];
                tmat[(i + 1) * k + i] = betas[i];
            }
        }
        std::vector<double> zmat;
        const std::vector<double> theta = jacobi_symmetric(tmat, k, &zmat);

        std::size_t accepted = 0;
        // Largest theta of the inverse operator = smallest energy.
        for (std::size_t c = 0; c < k && found.size() < want; ++c) {
            const std::size_t col = k - 1 - c;
            if (!(theta[col] > 0.0)) break;

            std::vector<cplx> x(dim, cplx{});
            for (std::size_t j = 0; j < k; ++j)
                vec_axpy(x, zmat[j * k + col], basis[j]);
            for (const Ritz& f : found) vec_axpy(x, -vec_dot(f.vec, x), f.vec);
            const double nx = vec_norm(x);
            if (nx < 0.1) continue;  // duplicate of an already accepted pair
            vec_scale(x, 1.0 / nx);

            op.apply(x.data(), hx.data());
            const double energy = std::real(vec_dot(x, hx));
            double res = 0.0;
            for (std::size_t i = 0; i < dim; ++i) res += std::norm(hx[i] - energy * x[i]);
            if (std::sqrt(res) > res_tol * std::max(1.0, std::abs(energy))) continue;

            found.push_back({energy, std::move(x)});
            ++accepted;
        }
        return accepted;
    };

    for (int restart = 0; restart < max_restarts && found.size() < want; ++restart) {
        std::vector<cplx> v0(dim);
        for (cplx& z : v0) z = cplx(gauss(rng), gauss(rng));
        for (const Ritz& f : found) vec_axpy(v0, -vec_dot(f.vec, v0), f.vec);
        const double n0 = vec_norm(v0);
        if (n0 < 1e-12) continue;
        vec_scale(v0, 1.0 / n0);

        std::vector<std::vector<cplx>> basis{v0};
        std::vector<double> alphas;
        std::vector<double> betas;

        const std::size_t k_max = std::min<std::size_t>(dim, 240);
        std::size_t k_check =
            std::min(k_max, std::max<std::size_t>(48, 3 * (want - found.size()) + 24));
        const std::size_t found_before = found.size();

        while (alphas.size() < k_max) {
            if (++steps_used > step_budget)
                throw ConvergenceFailure("eigensolver iteration budget exhausted");
            const std::size_t k = alphas.size();

            cg_solve(op, basis[k], w, 1e-12, 100000);
            for (const Ritz& f : found) vec_axpy(w, -vec_dot(f.vec, w), f.vec);
            const double alpha = std::real(vec_dot(basis[k], w));
            vec_axpy(w, cplx(-alpha, 0.0), basis[k]);
            if (k > 0) vec_axpy(w, cplx(-betas[k - 1], 0.0), basis[k - 1]);
            for (int pass = 0; pass < 2; ++pass) {
                for (const Ritz& f : found) vec_axpy(w, -vec_dot(f.vec, w), f.vec);
                for (const auto& vj : basis) vec_axpy(w, -vec_dot(vj, w), vj);
            }
            alphas.push_back(alpha);

            const double beta = vec_norm(w);
            const bool breakdown = beta < 1e-13;
            if (!breakdown) {
                std::vector<cplx> next = w;
                vec_scale(next, 1.0 / beta);
                betas.push_back(beta);
                basis.push_back(std::move(next));
            }

            if (breakdown || alphas.size() >= k_check) {
                harvest(basis, alphas, betas);
                if (found.size() >= want) break;
                if (breakdown) break;  // invariant subspace exhausted; restart
                k_check = std::min(k_max, k_check + 24);
                if (alphas.size() >= k_max) break;
            }
        }
        if (found.size() < want && found.size() == found_before && alphas.size() >= k_max) {
            // A full pass produced nothing new: give the final factorization
            // one more harvest before restarting with fresh randomness.
            harvest(basis, alphas, betas);
        }
    }

    if (found.size() < want)
        throw ConvergenceFailure("eigensolver restarts exhausted before convergence");
    std::sort(found.begin(), found.end(),
              [](const Ritz& a, const Ritz& b) { return a.value < b.value; });
    found.resize(want);
    return found;
}

}  // namespace

PlanarOperator::PlanarOperator(GridSpec grid, double mass, double hbar,
                               std::vector<double> potential, double xpy_coef, double ypx_coef)
    : grid_(grid),
      mass_(mass),
      hbar_(hbar),
      potential_(std::move(potential)),
      xpy_coef_(xpy_coef),
      ypx_coef_(ypx_coef) {
    if (grid_.nx < 3 || grid_.ny < 3 || !(grid_.len_x > 0.0) || !(grid_.len_y > 0.0))
        throw InvalidInput("grid must have at least 3 points per axis and positive extent");
    if (potential_.size() != grid_.size())
        throw InvalidInput("potential sample count does not match the grid");
}

void PlanarOperator::apply(const cplx* in, cplx* out) const {
    const int nx = grid_.nx;
    const int ny = grid_.ny;
    const double hx = grid_.hx();
    const double hy = grid_.hy();
    const double kin = -hbar_ * hbar_ / (2.0 * mass_);
    const double inv_hx2 = 1.0 / (hx * hx);
    const double inv_hy2 = 1.0 / (hy * hy);
    const double inv_2hx = 1.0 / (2.0 * hx);
    const double inv_2hy = 1.0 / (2.0 * hy);

    for (int i = 0; i < nx; ++i) {
        const double xi = grid_.x(i);
        const std::size_t row = static_cast<std::size_t>(i) * ny;
        for (int j = 0; j < ny; ++j) {
            const std::size_t idx = row + j;
            const cplx c = in[idx];
            const cplx xm = (i > 0) ? in[idx - ny] : cplx{};
            const cplx xp = (i + 1 < nx) ? in[idx + ny] : cplx{};
            const cplx ym = (j > 0) ? in[idx - 1] : cplx{};
            const cplx yp = (j + 1 < ny) ? in[idx + 1] : cplx{};

            cplx val = kin * ((xm - 2.0 * c + xp) * inv_hx2 + (ym - 2.0 * c + yp) * inv_hy2);
            val += potential_[idx] * c;
            if (xpy_coef_ != 0.0)
                val += xpy_coef_ * xi * (-kI * hbar_) * (yp - ym) * inv_2hy;
            if (ypx_coef_ != 0.0)
                val += ypx_coef_ * grid_.y(j) * (-kI * hbar_) * (xp - xm) * inv_2hx;
            out[idx] = val;
        }
    }
}

double PlanarOperator::max_diagonal() const {
    const double kin = hbar_ * hbar_ / mass_ *
                       (1.0 / (grid_.hx() * grid_.hx()) + 1.0 / (grid_.hy() * grid_.hy()));
    double vmax = 0.0;
    for (const double v : potential_) vmax = std::max(vmax, std::abs(v));
    return kin + vmax;
}

PlanarOperator discretize(const PlanarProblem& problem, const GridSpec& grid) {
    const NormalModes modes = solve_normal_modes(problem);
    const GaussianForm form = ground_form(modes, problem.hbar);
    const double lam_x = std::sqrt(std::real(form.lambda_x2));
    const double lam_y = std::sqrt(std::real(form.lambda_y2));
    const double lam_min = std::min(lam_x, lam_y);

    const double slack = 1.0 + 1e-9;
    if (grid.hx() > 0.25 / lam_x * slack || grid.hy() > 0.25 / lam_y * slack)
        throw ResolutionError("grid spacing cannot resolve the state length scale");
    if (grid.len_x * slack < 6.0 / lam_min || grid.len_y * slack < 6.0 / lam_min)
        throw ResolutionError("grid domain does not cover the state support");

    return discretize_unchecked(problem, grid);
}

PlanarOperator discretize_unchecked(const PlanarProblem& problem, const GridSpec& grid) {
    double conf_x, conf_y, xpy, ypx;
    if (problem.coupling == PlanarCoupling::AngularMomentum) {
        conf_x = std::hypot(problem.omega_x, problem.omega_B);
        conf_y = std::hypot(problem.omega_y, problem.omega_B);
        xpy = -problem.omega_B;
        ypx = problem.omega_B;
    } else {
        conf_x = std::hypot(problem.omega_x, 2.0 * problem.omega_B);
        conf_y = problem.omega_y;
        xpy = -2.0 * problem.omega_B;
        ypx = 0.0;
    }

    std::vector<double> pot(grid.size());
    for (int i = 0; i < grid.nx; ++i) {
        const double x = grid.x(i);
        for (int j = 0; j < grid.ny; ++j) {
            const double y = grid.y(j);
            pot[grid.index(i, j)] =
                0.5 * problem.mass * (conf_x * conf_x * x * x + conf_y * conf_y * y * y);
        }
    }
    return PlanarOperator(grid, problem.mass, problem.hbar, std::move(pot), xpy, ypx);
}

PlanarOperator discretize_potential(const GridSpec& grid, double mass, double hbar,
                                    std::vector<double> potential, double xpy_coef,
                                    double ypx_coef) {
    return PlanarOperator(grid, mass, hbar, std::move(potential), xpy_coef, ypx_coef);
}

std::vector<EigenPair> lowest_eigenpairs(const PlanarOperator& op, int m) {
    if (m < 1 || m > 8) throw InvalidInput("eigenpair count must be between 1 and 8");
    const auto ritz = lanczos_lowest(op, m, 1e-8, 10000);
    std::vector<EigenPair> out;
    out.reserve(ritz.size());
    for (const Ritz& r : ritz) {
        EigenPair p;
        p.value = r.value;
        p.field.grid = op.grid();
        p.field.values = r.vec;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<double> refined_eigenvalues(
    const std::function<PlanarOperator(const GridSpec&)>& make_operator, const GridSpec& fine,
    int m) {
    GridSpec coarse = fine;
    coarse.nx = fine.nx / 2;
    coarse.ny = fine.ny / 2;

    const PlanarOperator fine_op = make_operator(fine);
    const PlanarOperator coarse_op = make_operator(coarse);

    const auto fine_pairs = lowest_eigenpairs(fine_op, m);
    const auto coarse_pairs = lowest_eigenpairs(coarse_op, m);

    const double ratio = coarse.hx() / fine.hx();
    const double r2 = ratio * ratio;
    std::vector<double> out(m);
    for (int i = 0; i < m; ++i)
        out[i] = (r2 * fine_pairs[i].value - coarse_pairs[i].value) / (r2 - 1.0);
    return out;
}

std::vector<double> refined_planar_eigenvalues(const PlanarProblem& problem,
                                               const GridSpec& fine, int m) {
    discretize(problem, fine);  // resolution validation of the fine grid
    return refined_eigenvalues(
        [&](const GridSpec& g) { return discretize_unchecked(problem, g); }, fine, m);
}

LineOperator::LineOperator(Grid1D grid, double mass, double hbar, std::vector<double> potential)
    : grid_(grid), mass_(mass), hbar_(hbar), potential_(std::move(potential)) {
    if (grid_.n < 3 || !(grid_.len > 0.0))
        throw InvalidInput("1D grid must have at least 3 points and positive extent");
    if (potential_.size() != static_cast<std::size_t>(grid_.n))
        throw InvalidInput("potential sample count does not match the grid");
}

void LineOperator::apply(const cplx* in, cplx* out) const {
    const int n = grid_.n;
    const double inv_h2 = 1.0 / (grid_.h() * grid_.h());
    const double kin = -hbar_ * hbar_ / (2.0 * mass_);
    for (int i = 0; i < n; ++i) {
        const cplx c = in[i];
        const cplx l = (i > 0) ? in[i - 1] : cplx{};
        const cplx r = (i + 1 < n) ? in[i + 1] : cplx{};
        out[i] = kin * (l - 2.0 * c + r) * inv_h2 + potential_[i] * c;
    }
}

std::vector<EigenPair1D> lowest_eigenpairs_1d(const LineOperator& op, int m) {
    if (m < 1 || m > 8) throw InvalidInput("eigenpair count must be between 1 and 8");
    const auto ritz = lanczos_lowest(op, m, 1e-8, 10000);
    std::vector<EigenPair1D> out;
    out.reserve(ritz.size());
    for (const Ritz& r : ritz) out.push_back({r.value, r.vec});
    return out;
}

std::vector<double> refined_eigenvalues_1d(
    const std::function<LineOperator(const Grid1D&)>& make_operator, const Grid1D& fine,
    int m) {
    Grid1D coarse = fine;
    coarse.n = fine.n / 2;

    const auto fine_pairs = lowest_eigenpairs_1d(make_operator(fine), m);
    const auto coarse_pairs = lowest_eigenpairs_1d(make_operator(coarse), m);

    const double ratio = coarse.h() / fine.h();
    const double r2 = ratio * ratio;
    std::vector<double> out(m);
    for (int i = 0; i < m; ++i)
        out[i] = (r2 * fine_pairs[i].value - coarse_pairs[i].value) / (r2 - 1.0);
    return out;
}

namespace {

// Hermitian positive map (I + c^2 H^2) used by the Cayley steps.
class NormalCayleyMap : public LinearMap {
  public:
    NormalCayleyMap(const PlanarOperator& op, double c) : op_(op), c2_(c * c) {}

    std::size_t dim() const override { return op_.dim(); }
    void apply(const cplx* in, cplx* out) const override {
        tmp_.resize(op_.dim());
        op_.apply(in, tmp_.data());
        op_.apply(tmp_.data(), out);
        for (std::size_t i = 0; i < op_.dim(); ++i) out[i] = in[i] + c2_ * out[i];
    }

  private:
    const PlanarOperator& op_;
    double c2_;
    mutable std::vector<cplx> tmp_;
};

}  // namespace

double grid_norm(const GridField& f) { return std::sqrt(std::real(grid_overlap(f, f))); }

cplx grid_overlap(const GridField& a, const GridField& b) {
    if (a.values.size() != b.values.size())
        throw InvalidInput("grid overlap requires matching grids");
    cplx s{};
    for (std::size_t i = 0; i < a.values.size(); ++i) s += std::conj(a.values[i]) * b.values[i];
    return s * a.grid.hx() * a.grid.hy();
}

std::array<double, 4> grid_means(const GridField& f, double hbar) {
    const GridSpec& g = f.grid;
    double norm = 0.0;
    std::array<double, 4> acc{};
    const double inv_2hx = 1.0 / (2.0 * g.hx());
    const double inv_2hy = 1.0 / (2.0 * g.hy());

    for (int i = 0; i < g.nx; ++i) {
        for (int j = 0; j < g.ny; ++j) {
            const std::size_t idx = g.index(i, j);
            const cplx c = f.values[idx];
            const double dens = std::norm(c);
            norm += dens;
            acc[0] += dens * g.x(i);
            acc[2] += dens * g.y(j);

            const cplx dx = ((i + 1 < g.nx ? f.values[idx + g.ny] : cplx{}) -
                             (i > 0 ? f.values[idx - g.ny] : cplx{})) *
                            inv_2hx;
            const cplx dy = ((j + 1 < g.ny ? f.values[idx + 1] : cplx{}) -
                             (j > 0 ? f.values[idx - 1] : cplx{})) *
                            inv_2hy;
            acc[1] += std::real(std::conj(c) * (-kI * hbar) * dx);
            acc[3] += std::real(std::conj(c) * (-kI * hbar) * dy);
        }
    }
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = acc[i] / norm;
    return out;
}

std::array<double, 4> grid_spreads(const GridField& f, double hbar) {
    const GridSpec& g = f.grid;
    const auto mean = grid_means(f, hbar);
    double norm = 0.0;
    double xx = 0.0, yy = 0.0, pxx = 0.0, pyy = 0.0;
    const double inv_hx2 = 1.0 / (g.hx() * g.hx());
    const double inv_hy2 = 1.0 / (g.hy() * g.hy());

    for (int i = 0; i < g.nx; ++i) {
        for (int j = 0; j < g.ny; ++j) {
            const std::size_t idx = g.index(i, j);
            const cplx c = f.values[idx];
            const double dens = std::norm(c);
            norm += dens;
            const double rx = g.x(i) - mean[0];
            const double ry = g.y(j) - mean[2];
            xx += dens * rx * rx;
            yy += dens * ry * ry;

            const cplx lapx = ((i + 1 < g.nx ? f.values[idx + g.ny] : cplx{}) - 2.0 * c +
                               (i > 0 ? f.values[idx - g.ny] : cplx{})) *
                              inv_hx2;
            const cplx lapy = ((j + 1 < g.ny ? f.values[idx + 1] : cplx{}) - 2.0 * c +
                               (j > 0 ? f.values[idx - 1] : cplx{})) *
                              inv_hy2;
            pxx += std::real(std::conj(c) * (-hbar * hbar) * lapx);
            pyy += std::real(std::conj(c) * (-hbar * hbar) * lapy);
        }
    }
    xx /= norm;
    yy /= norm;
    pxx = pxx / norm - mean[1] * mean[1];
    pyy = pyy / norm - mean[3] * mean[3];

    auto root = [](double v) { return std::sqrt(std::max(v, 0.0)); };
    return {root(xx), root(pxx), root(yy), root(pyy)};
}

GridField sample_grid(const GridSpec& grid, const std::function<cplx(double, double)>& f) {
    GridField field;
    field.grid = grid;
    field.values.resize(grid.size());
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j)
            field.values[grid.index(i, j)] = f(grid.x(i), grid.y(j));
    return field;
}

PropagationRecord propagate(const PlanarOperator& op, GridField psi, double dt, int steps,
                            int stride) {
    if (psi.values.size() != op.dim()) throw InvalidInput("state does not match the grid");
    if (stride < 1) throw InvalidInput("stride must be >= 1");
    if (!(dt > 0.0)) throw InvalidInput("time step must be positive");
    if (dt * op.max_diagonal() / op.hbar() >= 0.5)
        throw InvalidInput("time step too large for the grid energy scale");

    const double c = dt / (2.0 * op.hbar());
    const NormalCayleyMap normal_map(op, c);

    PropagationRecord rec;
    auto record = [&](double t) {
        rec.times.push_back(t);
        rec.means.push_back(grid_means(psi, op.hbar()));
        rec.spreads.push_back(grid_spreads(psi, op.hbar()));
        rec.norms.push_back(grid_norm(psi));
    };
    record(0.0);

    const std::size_t n = op.dim();
    std::vector<cplx> hpsi(n), b(n), rhs(n), next(n), check(n);

    for (int step = 1; step <= steps; ++step) {
        op.apply(psi.values.data(), hpsi.data());
        for (std::size_t i = 0; i < n; ++i) b[i] = psi.values[i] - kI * c * hpsi[i];
        op.apply(b.data(), hpsi.data());
        for (std::size_t i = 0; i < n; ++i) rhs[i] = b[i] - kI * c * hpsi[i];

        try {
            cg_solve(normal_map, rhs, next, 1e-13, 4000);
        } catch (const ConvergenceFailure& e) {
            throw SolverStall(std::string("propagation step ") + std::to_string(step) + ": " +
                              e.what());
        }

        // True residual of (I + i c H) next = b.
        op.apply(next.data(), hpsi.data());
        double res = 0.0;
        double ref = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx r = next[i] + kI * c * hpsi[i] - b[i];
            res += std::norm(r);
            ref += std::norm(psi.values[i]);
        }
        if (std::sqrt(res) > 1e-10 * std::sqrt(ref))
            throw SolverStall("propagation step residual exceeded tolerance");

        psi.values.swap(next);
        if (step % stride == 0) record(step * dt);
    }
    return rec;
}

}  // namespace emosc
