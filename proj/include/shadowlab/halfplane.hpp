#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "shadowlab/errors.hpp"
#include "shadowlab/lft.hpp"

namespace shadowlab {

/// Uniform midpoint grid on [0, T_max]: nodes t_k = (k+1/2)h, h = T_max/G.
struct HalfLineGrid {
    double t_max = 40.0;
    int size = 4096;

    double step() const { return t_max / size; }
    double node(int k) const { return (k + 0.5) * step(); }
};

/// Sampled function on the half-line grid with the quadrature norm
/// ∥F∥² = h Σ |F_k|².
class GridFunction {
public:
    GridFunction(HalfLineGrid grid, Eigen::VectorXcd values)
        : grid_(grid), values_(std::move(values)) {}
    static GridFunction zero(HalfLineGrid grid) {
        return GridFunction(grid, Eigen::VectorXcd::Zero(grid.size));
    }
    static GridFunction sample(HalfLineGrid grid, const std::function<cplx(double)>& f);

    const HalfLineGrid& grid() const { return grid_; }
    const Eigen::VectorXcd& values() const { return values_; }
    Eigen::VectorXcd& values() { return values_; }

    double l2_norm() const { return std::sqrt(grid_.step()) * values_.norm(); }

    /// Linear interpolation between nodes; clamped on [0, t_0], zero beyond
    /// the last cell.
    cplx interp(double t) const;

private:
    HalfLineGrid grid_;
    Eigen::VectorXcd values_;
};

GridFunction operator+(const GridFunction& f, const GridFunction& g);
GridFunction operator-(const GridFunction& f, const GridFunction& g);
GridFunction operator*(cplx lambda, const GridFunction& f);

/// (W_a F)(t) = e^{−t(1−a)} F(at) for 0 < a < 1.
GridFunction apply_W(double a, const GridFunction& f);

/// (V_a F)(t) = e^{(t/a)(1−a)} F(t/a), defined for F vanishing on [a, ∞)
/// (within 1e−12); the right inverse of W_a on that subspace.
GridFunction apply_V(double a, const GridFunction& f); // throws NotInN

/// Exact cell-mask splitting L² = M ⊕ N with M = {t ≥ a}, N = {t < a}.
std::pair<GridFunction, GridFunction> split(double a, const GridFunction& f);

/// Per-n comparison of measured grid norms against the closed-form bounds
///   ∥W_a^n|_M∥ ≤ e^{−a(1/aⁿ−1)}/a^{n/2}   and   ∥V_a^n∥ ≤ a^{n/2}e^{a(1−aⁿ)},
/// plus the root sequences ∥·ⁿ∥^{1/n}.  The measured values come from the
/// exact change of variables, under which both iterates act as diagonal
/// multipliers on the masked grid (n-fold interpolation would collapse the
/// shrinking supports below grid resolution).
struct SpectralBoundsRow {
    int n = 0;
    double measured_W = 0.0;
    double bound_W = 0.0;
    double measured_V = 0.0;
    double bound_V = 0.0;
    double root_W = 0.0;
    double root_V = 0.0;
};

std::vector<SpectralBoundsRow> spectral_bounds_report(double a, int n_max,
                                                      HalfLineGrid grid = {});

/// Measured full-space norm of W_a on the grid (sup of the change-of-variable
/// multiplier); converges to a^{−1/2} as the grid refines.
double measured_w_norm(double a, HalfLineGrid grid = {});

/// Pseudo-orbit of grid functions under the discrete W_a.
struct GridPseudoOrbit {
    std::vector<GridFunction> states;
    double delta = 0.0;
};

/// Error constant of the hyperbolic-splitting shadow:
/// K(a) = Σ_{k≥0} bound_W(k) + Σ_{k≥1} bound_V(k).
double gh_error_constant(double a);

/// Generalized-hyperbolic shadow of a δ-pseudo-orbit of W_a:
///   x = x_1 − Σ_{j=1}^{L−1} V_a^j (P_N e_j),  e_j = W_a x_j − x_{j+1},
/// which gives W^n x − x_{n+1} = Σ_{j≤n} W^{n−j}(P_M e_j) − Σ_{j>n} V^{j−n}(P_N e_j)
/// and hence sup_error ≤ K(a)·δ.
struct GhShadowReport {
    GridFunction shadow;
    double K = 0.0;
    double sup_error = 0.0;
    double delta = 0.0;
    bool within_bound = false;
    std::vector<double> errors;
};

GhShadowReport gh_shadow(double a, const GridPseudoOrbit& orbit); // throws NotPseudoOrbit

/// Midpoint quadrature of the Paley–Wiener transform (PF)(w) = ∫ F e^{−tw} dt,
/// with the Cauchy–Schwarz bound on what the truncated tail beyond T_max
/// could contribute.
struct LaplaceValue {
    cplx value{};
    double tail_bound = 0.0;
};

LaplaceValue paley_wiener(const GridFunction& f, cplx w); // throws InvalidParameter

/// max over samples of |P(W_a F)(w) − a⁻¹ (PF)(ψ_a(w))| with
/// ψ_a(w) = w/a + (1/a − 1) — the commutative diagram relating W_a to the
/// half-plane composition operator.
double similarity_check(double a, const GridFunction& f, std::span<const cplx> w_samples);

} // namespace shadowlab
