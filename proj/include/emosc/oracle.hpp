#ifndef EMOSC_ORACLE_HPP
#define EMOSC_ORACLE_HPP

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "emosc/params.hpp"
#include "emosc/states.hpp"

// Independent numerical route: finite-difference discretization of the
// planar (and 1D) Schrödinger problem on a uniform Dirichlet grid, a
// matrix-free shift-invert Lanczos eigensolver, and a Crank-Nicolson
// propagator. Nothing in here uses the closed-form spectra or eigenstates;
// the analytic results are validated against this module.

namespace emosc {

struct GridSpec {
    int nx = 0;
    int ny = 0;
    double len_x = 0.0;  // half-width: domain [-len_x, +len_x]
    double len_y = 0.0;

    double hx() const { return 2.0 * len_x / (nx - 1); }
    double hy() const { return 2.0 * len_y / (ny - 1); }
    double x(int i) const { return -len_x + i * hx(); }
    double y(int j) const { return -len_y + j * hy(); }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * ny + j; }
};

struct GridField {
    GridSpec grid;
    std::vector<cplx> values;  // row-major, index = i*ny + j
};

// Matrix-free Hermitian operator interface shared by the 2D and 1D problems.
class LinearMap {
  public:
    virtual ~LinearMap() = default;
    virtual std::size_t dim() const = 0;
    virtual void apply(const cplx* in, cplx* out) const = 0;
};

// H = -(hbar^2/2M) Lap + V(x, y) + xpy_coef * x p_y + ypx_coef * y p_x
// with the 5-point Laplacian, central first differences and Dirichlet
// boundaries. Exactly Hermitian under the plain grid inner product.
class PlanarOperator : public LinearMap {
  public:
    PlanarOperator(GridSpec grid, double mass, double hbar, std::vector<double> potential,
                   double xpy_coef, double ypx_coef);

    std::size_t dim() const override { return grid_.size(); }
    void apply(const cplx* in, cplx* out) const override;

    const GridSpec& grid() const { return grid_; }
    double mass() const { return mass_; }
    double hbar() const { return hbar_; }
    // Largest diagonal entry magnitude (time-step heuristic scale).
    double max_diagonal() const;

  private:
    GridSpec grid_;
    double mass_;
    double hbar_;
    std::vector<double> potential_;
    double xpy_coef_;
    double ypx_coef_;
};

// Standard discretization of the reduced planar problem. Throws
// ResolutionError when the grid cannot resolve the ground-state length
// scales (h <= 0.25/lambda per axis, half-width >= 6/lambda_min).
PlanarOperator discretize(const PlanarProblem& problem, const GridSpec& grid);

// Same sampling without the resolution precondition; for interior companion
// grids (Richardson pairs) whose fine partner has already been validated.
PlanarOperator discretize_unchecked(const PlanarProblem& problem, const GridSpec& grid);

// Discretization from explicit potential samples (first-principles fixtures).
PlanarOperator discretize_potential(const GridSpec& grid, double mass, double hbar,
                                    std::vector<double> potential, double xpy_coef,
                                    double ypx_coef);

struct EigenPair {
    double value = 0.0;
    GridField field;
};

// Lowest m eigenpairs (m <= 8) by Lanczos with full reorthogonalization and
// deflation on the inverse operator (inner conjugate-gradient solves).
// Residual target 1e-8; throws ConvergenceFailure past the iteration budget.
std::vector<EigenPair> lowest_eigenpairs(const PlanarOperator& op, int m);

// Lowest m eigenvalues with the leading O(h^2) error removed by a
// half-resolution companion solve and Richardson extrapolation. The callback
// must produce a consistent operator for any grid it is handed (no
// resolution check is applied here).
std::vector<double> refined_eigenvalues(
    const std::function<PlanarOperator(const GridSpec&)>& make_operator, const GridSpec& fine,
    int m);

// Refined eigenvalues of the reduced planar problem; validates `fine`
// against the ground-state length scales, then extrapolates.
std::vector<double> refined_planar_eigenvalues(const PlanarProblem& problem,
                                               const GridSpec& fine, int m);

// --- 1D problems (axial / Landau reductions) ---

struct Grid1D {
    int n = 0;
    double len = 0.0;  // half-width

    double h() const { return 2.0 * len / (n - 1); }
    double x(int i) const { return -len + i * h(); }
};

class LineOperator : public LinearMap {
  public:
    LineOperator(Grid1D grid, double mass, double hbar, std::vector<double> potential);

    std::size_t dim() const override { return static_cast<std::size_t>(grid_.n); }
    void apply(const cplx* in, cplx* out) const override;
    const Grid1D& grid() const { return grid_; }

  private:
    Grid1D grid_;
    double mass_;
    double hbar_;
    std::vector<double> potential_;
};

struct EigenPair1D {
    double value = 0.0;
    std::vector<cplx> vec;
};

std::vector<EigenPair1D> lowest_eigenpairs_1d(const LineOperator& op, int m);

std::vector<double> refined_eigenvalues_1d(
    const std::function<LineOperator(const Grid1D&)>& make_operator, const Grid1D& fine, int m);

// --- Crank-Nicolson propagation ---

struct PropagationRecord {
    std::vector<double> times;
    std::vector<std::array<double, 4>> means;    // <x>, <p_x>, <y>, <p_y>
    std::vector<std::array<double, 4>> spreads;  // dx, dp_x, dy, dp_y
    std::vector<double> norms;
};

// Cayley-form time stepping (I + i dt H/2hbar) psi' = (I - i dt H/2hbar) psi,
// inner solves through the Hermitian positive normal equations. Observables
// recorded every `stride` steps (including t = 0). Enforces the accuracy
// heuristic dt * max_diagonal / hbar < 0.5; throws SolverStall when a step
// cannot reach its residual target.
PropagationRecord propagate(const PlanarOperator& op, GridField psi, double dt, int steps,
                            int stride);

// --- grid quadrature helpers ---

double grid_norm(const GridField& f);
cplx grid_overlap(const GridField& a, const GridField& b);
std::array<double, 4> grid_means(const GridField& f, double hbar);
std::array<double, 4> grid_spreads(const GridField& f, double hbar);
GridField sample_grid(const GridSpec& grid, const std::function<cplx(double, double)>& f);

}  // namespace emosc

#endif
