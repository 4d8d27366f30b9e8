#include "shadowlab/hardy.hpp"

#include <cmath>
#include <limits>

namespace shadowlab {

TaylorPoly::TaylorPoly(Eigen::VectorXcd coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) coeffs_ = Eigen::VectorXcd::Zero(1);
}

TaylorPoly TaylorPoly::zero(int truncation) {
    return TaylorPoly(Eigen::VectorXcd::Zero(truncation + 1));
}

TaylorPoly TaylorPoly::constant(cplx value, int truncation) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(truncation + 1);
    c(0) = value;
    return TaylorPoly(std::move(c));
}

TaylorPoly TaylorPoly::monomial(int degree, int truncation) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(truncation + 1);
    c(degree) = 1.0;
    return TaylorPoly(std::move(c));
}

cplx TaylorPoly::operator()(cplx z) const {
    cplx acc = 0.0;
    for (Eigen::Index n = coeffs_.size() - 1; n >= 0; --n) acc = coeffs_(n) + z * acc;
    return acc;
}

TaylorPoly TaylorPoly::extended(int truncation) const {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(truncation + 1);
    const Eigen::Index n = std::min<Eigen::Index>(coeffs_.size(), truncation + 1);
    c.head(n) = coeffs_.head(n);
    return TaylorPoly(std::move(c));
}

TaylorPoly operator+(const TaylorPoly& f, const TaylorPoly& g) {
    const int n = std::max(f.truncation(), g.truncation());
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
    c.head(f.coeffs().size()) = f.coeffs();
    c.head(g.coeffs().size()) += g.coeffs();
    return TaylorPoly(std::move(c));
}

TaylorPoly operator-(const TaylorPoly& f, const TaylorPoly& g) {
    return f + (cplx{-1.0, 0.0} * g);
}

TaylorPoly operator*(cplx lambda, const TaylorPoly& f) {
    return TaylorPoly(lambda * f.coeffs());
}

TaylorPoly truncated_multiply(const TaylorPoly& f, const TaylorPoly& g, int truncation) {
    const int n = truncation >= 0 ? truncation : std::max(f.truncation(), g.truncation());
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
    const int fn = f.truncation(), gn = g.truncation();
    for (int i = 0; i <= std::min(fn, n); ++i) {
        const cplx fi = f.coeff(i);
        if (fi == cplx{0.0, 0.0}) continue;
        const int jmax = std::min(gn, n - i);
        for (int j = 0; j <= jmax; ++j) c(i + j) += fi * g.coeff(j);
    }
    return TaylorPoly(std::move(c));
}

cplx h2_inner(const TaylorPoly& f, const TaylorPoly& g) {
    const Eigen::Index n = std::min(f.coeffs().size(), g.coeffs().size());
    // Σ f̂(n) conj(ĝ(n));  Eigen's dot conjugates its first argument
    return g.coeffs().head(n).dot(f.coeffs().head(n));
}

KernelVector kernel(cplx w, int truncation) {
    if (std::abs(w) >= 1.0) throw OutsideDisk("kernel: |w| must be < 1");
    Eigen::VectorXcd c(truncation + 1);
    const cplx wb = std::conj(w);
    cplx p = 1.0;
    for (int n = 0; n <= truncation; ++n) {
        c(n) = p;
        p *= wb;
    }
    return KernelVector{w, TaylorPoly(std::move(c)), 1.0 / (1.0 - std::norm(w))};
}

double hp_norm(const TaylorPoly& f, double p, int quadrature_points) {
    if (p < 1.0) throw InvalidParameter("hp_norm: p must be >= 1");
    if (quadrature_points < 4) throw InvalidParameter("hp_norm: need at least 4 samples");
    const int m = quadrature_points;
    if (std::isinf(p)) {
        double sup = 0.0;
        for (int k = 0; k < m; ++k)
            sup = std::max(sup, std::abs(f(std::polar(1.0, 2.0 * M_PI * k / m))));
        return sup;
    }
    double acc = 0.0;
    for (int k = 0; k < m; ++k)
        acc += std::pow(std::abs(f(std::polar(1.0, 2.0 * M_PI * k / m))), p);
    return std::pow(acc / m, 1.0 / p);
}

double pointwise_bound_margin(const TaylorPoly& f, cplx z, double p,
                              int quadrature_points) {
    if (std::abs(z) >= 1.0) throw OutsideDisk("pointwise_bound_margin: |z| must be < 1");
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    const double growth = std::pow(1.0 - std::norm(z), -inv_p);
    return hp_norm(f, p, quadrature_points) * growth - std::abs(f(z));
}

TaylorPoly binomial_series(double s, int truncation) {
    if (s <= 0.0) throw InvalidParameter("binomial_series: s must be > 0");
    Eigen::VectorXcd c(truncation + 1);
    double coeff = 1.0;
    c(0) = coeff;
    for (int n = 1; n <= truncation; ++n) {
        coeff *= (n - 1 + s) / n;
        c(n) = coeff;
    }
    return TaylorPoly(std::move(c));
}

} // namespace shadowlab
