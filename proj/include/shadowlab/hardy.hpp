#pragma once

#include <Eigen/Dense>
#include <complex>

#include "shadowlab/errors.hpp"
#include "shadowlab/lft.hpp"

namespace shadowlab {

/// Truncated element of H²(𝔻): the Maclaurin coefficients ĥ(0..N).
/// The squared H² norm of the truncation is the finite coefficient sum.
class TaylorPoly {
public:
    TaylorPoly() : coeffs_(Eigen::VectorXcd::Zero(1)) {}
    explicit TaylorPoly(Eigen::VectorXcd coeffs);

    static TaylorPoly zero(int truncation);
    static TaylorPoly constant(cplx value, int truncation);
    static TaylorPoly monomial(int degree, int truncation);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Eigen::VectorXcd& coeffs() const { return coeffs_; }
    cplx coeff(int n) const { return coeffs_(n); }

    cplx operator()(cplx z) const; // Horner
    TaylorPoly extended(int truncation) const;

    double h2_norm() const { return coeffs_.norm(); }

private:
    Eigen::VectorXcd coeffs_;
};

TaylorPoly operator+(const TaylorPoly& f, const TaylorPoly& g);
TaylorPoly operator-(const TaylorPoly& f, const TaylorPoly& g);
TaylorPoly operator*(cplx lambda, const TaylorPoly& f);

/// Convolution cut at the larger truncation (or at `truncation` if given).
TaylorPoly truncated_multiply(const TaylorPoly& f, const TaylorPoly& g,
                              int truncation = -1);

/// ⟨f, g⟩ = Σ f̂(n) conj(ĝ(n)).
cplx h2_inner(const TaylorPoly& f, const TaylorPoly& g);

/// Reproducing kernel k_w(z) = 1/(1−w̄z), truncated: coeffs[n] = conj(w)^n.
/// exact_norm_sq is the untruncated value 1/(1−|w|²).
struct KernelVector {
    cplx w;
    TaylorPoly poly;
    double exact_norm_sq;
};

KernelVector kernel(cplx w, int truncation); // throws OutsideDisk for |w| >= 1

/// Boundary H^p norm of a polynomial: M-point trapezoid approximation of
/// ((1/2π)∫|f(e^{iθ})|^p dθ)^{1/p}; sup of |f| over the samples for p = ∞.
/// Integral means are nondecreasing in the radius, so polynomials attain
/// their norm on the boundary circle.
double hp_norm(const TaylorPoly& f, double p, int quadrature_points = 1024);

/// ∥f∥_p (1−|z|²)^{−1/p} − |f(z)|; nonnegative (within 1e−9) for every
/// polynomial — the H^p pointwise growth estimate.
double pointwise_bound_margin(const TaylorPoly& f, cplx z, double p,
                              int quadrature_points = 1024);

/// Maclaurin series of f_s(z) = (1−z)^{−s} via c_0 = 1,
/// c_n = c_{n−1}(n−1+s)/n.  f_s ∈ H^p(𝔻) iff s < 1/p.
TaylorPoly binomial_series(double s, int truncation);

} // namespace shadowlab
