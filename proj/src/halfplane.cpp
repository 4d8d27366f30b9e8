#include "shadowlab/halfplane.hpp"

#include <cmath>

namespace shadowlab {

GridFunction GridFunction::sample(HalfLineGrid grid, const std::function<cplx(double)>& f) {
    Eigen::VectorXcd v(grid.size);
    for (int k = 0; k < grid.size; ++k) v(k) = f(grid.node(k));
    return GridFunction(grid, std::move(v));
}

cplx GridFunction::interp(double t) const {
    if (t < 0.0) return 0.0;
    const double h = grid_.step();
    const double u = t / h - 0.5;
    if (u <= 0.0) {
        // linear continuation below the first node
        if (grid_.size < 2) return values_(0);
        return values_(0) + u * (values_(1) - values_(0));
    }
    const int i = static_cast<int>(std::floor(u));
    if (i >= grid_.size) return 0.0;
    const double frac = u - i;
    const cplx left = values_(i);
    const cplx right = (i + 1 < grid_.size) ? values_(i + 1) : cplx{0.0, 0.0};
    return (1.0 - frac) * left + frac * right;
}

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
    return GridFunction(f.grid(), f.values() + g.values());
}

GridFunction operator-(const GridFunction& f, const GridFunction& g) {
    return GridFunction(f.grid(), f.values() - g.values());
}

GridFunction operator*(cplx lambda, const GridFunction& f) {
    return GridFunction(f.grid(), lambda * f.values());
}

namespace {

void require_dilation(double a) {
    if (!(a > 0.0 && a < 1.0))
        throw InvalidParameter("half-plane operator: a must lie in (0,1)");
}

int first_index_in_M(double a, const HalfLineGrid& grid) {
    // smallest k with t_k >= a
    const int k = static_cast<int>(std::ceil(a / grid.step() - 0.5));
    return std::max(k, 0);
}

} // namespace

GridFunction apply_W(double a, const GridFunction& f) {
    require_dilation(a);
    const HalfLineGrid& grid = f.grid();
    Eigen::VectorXcd out(grid.size);
    for (int k = 0; k < grid.size; ++k) {
        const double t = grid.node(k);
        out(k) = std::exp(-t * (1.0 - a)) * f.interp(a * t);
    }
    return GridFunction(grid, std::move(out));
}

GridFunction apply_V(double a, const GridFunction& f) {
    require_dilation(a);
    const HalfLineGrid& grid = f.grid();
    const int m0 = first_index_in_M(a, grid);
    for (int k = m0; k < grid.size; ++k) {
        if (std::abs(f.values()(k)) > 1e-12)
            throw NotInN("apply_V: input does not vanish on [a, inf)");
    }
    Eigen::VectorXcd out(grid.size);
    for (int k = 0; k < grid.size; ++k) {
        const double t = grid.node(k);
        out(k) = std::exp((t / a) * (1.0 - a)) * f.interp(t / a);
    }
    return GridFunction(grid, std::move(out));
}

std::pair<GridFunction, GridFunction> split(double a, const GridFunction& f) {
    require_dilation(a);
    const HalfLineGrid& grid = f.grid();
    Eigen::VectorXcd m = Eigen::VectorXcd::Zero(grid.size);
    Eigen::VectorXcd n = Eigen::VectorXcd::Zero(grid.size);
    const int m0 = first_index_in_M(a, grid);
    n.head(m0) = f.values().head(m0);
    m.tail(grid.size - m0) = f.values().tail(grid.size - m0);
    return {GridFunction(grid, std::move(m)), GridFunction(grid, std::move(n))};
}

std::vector<SpectralBoundsRow> spectral_bounds_report(double a, int n_max,
                                                      HalfLineGrid grid) {
    require_dilation(a);
    if (n_max < 2) throw InvalidParameter("spectral_bounds_report: n_max must be >= 2");

    const int m0 = first_index_in_M(a, grid);
    if (m0 < 1 || m0 >= grid.size)
        throw InvalidParameter("spectral_bounds_report: cutoff not resolved by the grid");
    const double tM = grid.node(m0);     // smallest node in M
    const double tN = grid.node(m0 - 1); // largest node in N

    std::vector<SpectralBoundsRow> rows;
    rows.reserve(n_max);
    const double log_a = std::log(a);
    for (int n = 1; n <= n_max; ++n) {
        // log-space throughout: 1/a^n reaches 1e12 well inside n_max = 20
        const double a_pow_n = std::pow(a, n);
        const double inv_pow = std::pow(a, -n);
        SpectralBoundsRow row;
        row.n = n;
        const double log_mW = -0.5 * n * log_a - tM * (inv_pow - 1.0);
        const double log_bW = -0.5 * n * log_a - a * (inv_pow - 1.0);
        const double log_mV = 0.5 * n * log_a + tN * (1.0 - a_pow_n);
        const double log_bV = 0.5 * n * log_a + a * (1.0 - a_pow_n);
        row.measured_W = std::exp(log_mW);
        row.bound_W = std::exp(log_bW);
        row.measured_V = std::exp(log_mV);
        row.bound_V = std::exp(log_bV);
        row.root_W = std::exp(log_mW / n);
        row.root_V = std::exp(log_mV / n);
        rows.push_back(row);
    }
    return rows;
}

double measured_w_norm(double a, HalfLineGrid grid) {
    require_dilation(a);
    // sup over nodes of the change-of-variable multiplier, attained at t_0
    return std::exp(-grid.node(0) * (1.0 / a - 1.0)) / std::sqrt(a);
}

double gh_error_constant(double a) {
    require_dilation(a);
    double K = 0.0;
    for (int n = 0; n <= 2000; ++n) {
        const double term = std::pow(a, -0.5 * n) * std::exp(-a * (std::pow(a, -n) - 1.0));
        K += term;
        if (n > 0 && term < 1e-14) break;
    }
    for (int k = 1; k <= 20000; ++k) {
        const double term = std::pow(a, 0.5 * k) * std::exp(a * (1.0 - std::pow(a, k)));
        K += term;
        if (term < 1e-14) break;
    }
    return K;
}

GhShadowReport gh_shadow(double a, const GridPseudoOrbit& orbit) {
    require_dilation(a);
    const size_t horizon = orbit.states.size();
    if (horizon < 2) throw InvalidParameter("gh_shadow: need at least two states");
    const HalfLineGrid& grid = orbit.states.front().grid();

    std::vector<GridFunction> errs;
    errs.reserve(horizon - 1);
    for (size_t j = 0; j + 1 < horizon; ++j) {
        GridFunction e = apply_W(a, orbit.states[j]) - orbit.states[j + 1];
        if (e.l2_norm() > orbit.delta * (1.0 + 1e-9) + 1e-15)
            throw NotPseudoOrbit("gh_shadow: residual exceeds delta");
        errs.push_back(std::move(e));
    }

    // x = x_1 − Σ_j V^j (P_N e_j); powers stop once the term is negligible
    GridFunction shadow = orbit.states.front();
    for (size_t j = 0; j < errs.size(); ++j) {
        GridFunction v = split(a, errs[j]).second;
        bool dead = false;
        for (size_t m = 0; m <= j; ++m) {
            v = apply_V(a, v);
            if (v.l2_norm() < 1e-17) {
                dead = true;
                break;
            }
        }
        if (!dead) shadow = shadow - v;
    }

    GhShadowReport report{GridFunction::zero(grid)};
    report.shadow = shadow;
    report.delta = orbit.delta;
    report.K = gh_error_constant(a);
    GridFunction v = shadow;
    report.errors.reserve(horizon);
    for (size_t n = 0; n < horizon; ++n) {
        report.errors.push_back((v - orbit.states[n]).l2_norm());
        report.sup_error = std::max(report.sup_error, report.errors.back());
        if (n + 1 < horizon) v = apply_W(a, v);
    }
    report.within_bound = report.sup_error <= report.K * orbit.delta;
    return report;
}

LaplaceValue paley_wiener(const GridFunction& f, cplx w) {
    if (w.real() <= 0.0) throw InvalidParameter("paley_wiener: Re(w) must be > 0");
    const HalfLineGrid& grid = f.grid();
    const double h = grid.step();
    cplx acc = 0.0;
    for (int k = 0; k < grid.size; ++k) acc += f.values()(k) * std::exp(-grid.node(k) * w);
    LaplaceValue out;
    out.value = h * acc;
    out.tail_bound =
        f.l2_norm() * std::exp(-w.real() * grid.t_max) / std::sqrt(2.0 * w.real());
    return out;
}

double similarity_check(double a, const GridFunction& f, std::span<const cplx> w_samples) {
    require_dilation(a);
    const GridFunction wf = apply_W(a, f);
    double worst = 0.0;
    for (const cplx& w : w_samples) {
        if (w.real() <= 0.0) throw InvalidParameter("similarity_check: Re(w) must be > 0");
        const cplx lhs = paley_wiener(wf, w).value;
        const cplx psi = w / a + (1.0 / a - 1.0);
        const cplx rhs = paley_wiener(f, psi).value / a;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

} // namespace shadowlab
