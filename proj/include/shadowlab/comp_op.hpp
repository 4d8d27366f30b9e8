#pragma once

#include <Eigen/Dense>
#include <string>

#include "shadowlab/hardy.hpp"
#include "shadowlab/lft.hpp"

namespace shadowlab {

/// Dense matrix of a (weighted) composition operator in the monomial basis
/// of truncated H²(𝔻).  Column k holds the first N+1 Maclaurin coefficients
/// of φ^k (plain) or of the weighted image of z^k.  Column 0 of a plain
/// composition matrix is e_0: constants are fixed.
struct OperatorMatrix {
    Eigen::MatrixXcd entries;
    int truncation = 0;
    std::string symbol; // provenance
    bool weighted = false;

    Eigen::VectorXcd apply(const Eigen::VectorXcd& coeffs) const {
        return entries * coeffs;
    }
};

/// Maclaurin coefficients of the symbol itself:
/// φ(z) = b/d + ((ad−bc)/d²) Σ_{n≥1} (−c/d)^{n−1} z^n.
/// Throws PoleTooClose when the pole −d/c is within 1e−9 of the closed disk.
TaylorPoly symbol_series(const MoebiusMap& phi, int truncation);

OperatorMatrix comp_matrix(const MoebiusMap& phi, int truncation);

/// Matrix of f ↦ ((1−Φ(z))/(1−z)) · f(Φ(z)); the multiplier series is the
/// partial-sum (cumulative) transform of the coefficients of 1−Φ.
OperatorMatrix weighted_comp_matrix(const MoebiusMap& phi, int truncation);

/// Operator norm by power iteration on the Gram matrix T*T and spectral
/// radius from ∥T^n∥^{1/n} along a doubling schedule.  The seed vector is
/// the fixed (1, 1/2, 1/3, …) so runs are reproducible.  `converged` is
/// false when the last two radius estimates differ by more than 1e−3
/// (reported, not fatal).
struct SpectralEstimate {
    double norm = 0.0;
    double spectral_radius = 0.0;
    double previous_estimate = 0.0;
    bool converged = true;
};

SpectralEstimate norm_and_spectral_radius(const OperatorMatrix& op, int iters = 100);

/// σ(C_φ) for a hyperbolic automorphism: the closed annulus
/// φ′(α)^{1/2} ≤ |z| ≤ φ′(α)^{−1/2} with α the attracting boundary fixed
/// point (0 < φ′(α) < 1).  The unit circle lies in its interior.
struct SpectrumAnnulus {
    double inner = 0.0;
    double outer = 0.0;
};

SpectrumAnnulus spectrum_annulus_HA(const MoebiusMap& phi); // throws WrongClass

} // namespace shadowlab
