#include "shadowlab/comp_op.hpp"

#include <cmath>

namespace shadowlab {

TaylorPoly symbol_series(const MoebiusMap& phi, int truncation) {
    const cplx a = phi.a(), b = phi.b(), c = phi.c(), d = phi.d();
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(truncation + 1);

    if (std::abs(c) <= 1e-13) {
        coeffs(0) = b / d;
        if (truncation >= 1) coeffs(1) = a / d;
        return TaylorPoly(std::move(coeffs));
    }

    const double pole = std::abs(d / c);
    if (pole <= 1.0 + 1e-9)
        throw PoleTooClose("symbol_series: pole within 1e-9 of the closed disk");

    const cplx det = a * d - b * c;
    const cplx ratio = -c / d;
    coeffs(0) = b / d;
    cplx term = det / (d * d);
    for (int n = 1; n <= truncation; ++n) {
        coeffs(n) = term;
        term *= ratio;
    }
    return TaylorPoly(std::move(coeffs));
}

OperatorMatrix comp_matrix(const MoebiusMap& phi, int truncation) {
    const TaylorPoly series = symbol_series(phi, truncation);
    OperatorMatrix op;
    op.truncation = truncation;
    op.symbol = "C_phi";
    op.entries = Eigen::MatrixXcd::Zero(truncation + 1, truncation + 1);

    TaylorPoly power = TaylorPoly::constant(1.0, truncation);
    op.entries.col(0) = power.coeffs();
    for (int k = 1; k <= truncation; ++k) {
        power = truncated_multiply(power, series, truncation);
        op.entries.col(k) = power.coeffs();
    }
    return op;
}

OperatorMatrix weighted_comp_matrix(const MoebiusMap& phi, int truncation) {
    const TaylorPoly series = symbol_series(phi, truncation);

    // multiplier (1−Φ(z))/(1−z): dividing by 1−z is the partial-sum transform
    Eigen::VectorXcd u = -series.coeffs();
    u(0) += 1.0;
    Eigen::VectorXcd mult(truncation + 1);
    cplx acc = 0.0;
    for (int n = 0; n <= truncation; ++n) {
        acc += u(n);
        mult(n) = acc;
    }
    const TaylorPoly multiplier{Eigen::VectorXcd(mult)};

    OperatorMatrix op;
    op.truncation = truncation;
    op.symbol = "W_Phi";
    op.weighted = true;
    op.entries = Eigen::MatrixXcd::Zero(truncation + 1, truncation + 1);

    TaylorPoly power = TaylorPoly::constant(1.0, truncation);
    op.entries.col(0) = multiplier.coeffs();
    for (int k = 1; k <= truncation; ++k) {
        power = truncated_multiply(power, series, truncation);
        op.entries.col(k) = truncated_multiply(multiplier, power, truncation).coeffs();
    }
    return op;
}

namespace {

Eigen::VectorXcd harmonic_seed(Eigen::Index n) {
    Eigen::VectorXcd v(n);
    for (Eigen::Index k = 0; k < n; ++k) v(k) = 1.0 / static_cast<double>(k + 1);
    v.normalize();
    return v;
}

double matrix_2norm(const Eigen::MatrixXcd& m, int iters) {
    Eigen::VectorXcd v = harmonic_seed(m.cols());
    double sigma = 0.0;
    for (int it = 0; it < iters; ++it) {
        Eigen::VectorXcd u = m * v;
        sigma = u.norm();
        if (sigma <= 1e-300) return 0.0;
        v = m.adjoint() * u;
        const double nv = v.norm();
        if (nv <= 1e-300) return sigma;
        v /= nv;
    }
    return sigma;
}

} // namespace

SpectralEstimate norm_and_spectral_radius(const OperatorMatrix& op, int iters) {
    if (iters < 10) throw InvalidParameter("norm_and_spectral_radius: iters must be >= 10");

    SpectralEstimate est;
    est.norm = matrix_2norm(op.entries, iters);

    // ∥T^n∥^{1/n} along n = 1, 2, 4, ..., 256 by repeated squaring
    Eigen::MatrixXcd power = op.entries;
    long n = 1;
    double current = est.norm, previous = est.norm;
    while (n < 256) {
        power = power * power;
        n *= 2;
        previous = current;
        current = std::pow(matrix_2norm(power, iters), 1.0 / static_cast<double>(n));
        if (!std::isfinite(current)) {
            current = previous;
            break;
        }
    }
    est.spectral_radius = current;
    est.previous_estimate = previous;
    est.converged = std::abs(current - previous) <= 1e-3;
    return est;
}

SpectrumAnnulus spectrum_annulus_HA(const MoebiusMap& phi) {
    const SymbolClass cls = classify(phi);
    if (cls.tag != SymbolTag::HA)
        throw WrongClass("spectrum_annulus_HA: symbol is not a hyperbolic automorphism");

    const FixedPointSet fps = fixed_points(phi);
    for (const ExtComplex& p : fps.points) {
        if (p.infinite) continue;
        const cplx der = phi.derivative_at(p.value);
        if (std::abs(der) < 1.0) {
            const double lambda = der.real();
            return SpectrumAnnulus{std::sqrt(lambda), 1.0 / std::sqrt(lambda)};
        }
    }
    throw WrongClass("spectrum_annulus_HA: no attracting fixed point found");
}

} // namespace shadowlab
