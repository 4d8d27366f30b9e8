#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "shadowlab/comp_op.hpp"
#include "shadowlab/hardy.hpp"
#include "shadowlab/lft.hpp"

namespace shadowlab {

/// Finite δ-pseudo-orbit: states x_1..x_L with ∥T x_n − x_{n+1}∥ ≤ δ.
struct PseudoOrbit {
    std::vector<Eigen::VectorXcd> states;
    double delta = 0.0;
    std::vector<double> residuals; // length L−1
};

/// The natural δ-pseudo-orbit from a non-zero vector x:
/// x_1 = δ x/∥x∥ and x_{n+1} = T x_n + x_1, so every residual equals δ.
PseudoOrbit natural_pseudo_orbit(const OperatorMatrix& op, const Eigen::VectorXcd& x,
                                 double delta, int length);

/// Recomputes the residuals against `op`; returns the maximum and flags a
/// violation of delta + 1e−12 in `ok`.
struct OrbitValidation {
    double max_residual = 0.0;
    bool ok = true;
};
OrbitValidation validate_pseudo_orbit(const OperatorMatrix& op, const PseudoOrbit& orbit);

/// Best finite-horizon shadow by linear least squares: x minimizes
/// Σ_{n=0}^{L−1} ∥T^n x − x_{n+1}∥² (stacked system, column-pivoted QR).
/// sup_error is recomputed exactly from the minimizer, so the report is an
/// upper bound on the optimal sup-error.  Ill-conditioning (estimate above
/// 1e12) is reported with the result, not fatal.
struct ShadowReport {
    Eigen::VectorXcd shadow;
    double sup_error = 0.0;
    double epsilon = 0.0;
    bool shadowed = false;
    double condition_estimate = 0.0;
    bool ill_conditioned = false;
    std::vector<double> errors; // ∥T^n x − x_{n+1}∥ for n = 0..L−1
};

ShadowReport finite_horizon_shadow(const OperatorMatrix& op, const PseudoOrbit& orbit,
                                   double epsilon);

/// The explicit constant from the summation lemma:
/// c = cos(sπ/2)·|a|^s/(s+1), valid for 0 < s < 1, Re(a) ≥ 0, a ≠ 0.
double lemma_constant(double s, cplx a);

/// Brute-force check of |Σ_{j=0}^{n} (2+ja)^s| ≥ c n^{s+1} for 1 ≤ n ≤ n_max
/// with the principal branch power.
struct LemmaSweep {
    bool ok = true;
    long first_violation = 0; // valid when !ok
};
LemmaSweep lemma_check(double s, cplx a, long n_max);

/// Lower bound on ∥C_φ^n g − f_n∥₂ for the natural pseudo-orbit from f when
/// φ fixes α ∈ 𝔻:  (1−|α|²)^{1/2} [ (δ|f(α)|/∥f∥₂) n − |g(α)| ].
double fixed_point_divergence_bound(cplx alpha, const TaylorPoly& f, double delta,
                                    cplx g_at_alpha, long n);

/// Parabolic lower bound (canonical symbol, seed f_s):
/// (δc)/(2^s ∥f_s∥₂ (2+|a|)) · (n−1)^{s+1}/n − ∥g∥₂/2, with the truncated
/// ∥f_s∥₂ (which only enlarges the bound).  `truncation` sets the f_s cutoff.
double parabolic_divergence_bound(cplx a, double s, double delta, double g_norm,
                                  long n, int truncation = 128);
double parabolic_divergence_bound_with_norm(cplx a, double s, double delta,
                                            double g_norm, long n, double fs_norm);

/// Exact pseudo-orbit value f_n(0) = (δ/2^s∥f_s∥₂) Σ_{j=0}^{n−1} (2+ja)^s.
cplx parabolic_orbit_value_at_zero(cplx a, double s, double delta, long n,
                                   int truncation = 128);

/// The main theorem: positive shadowing iff φ is HA or HNA I.
bool shadowing_verdict(const MoebiusMap& phi);

/// Divergence certificate: a sequence of lower bounds that grows without
/// bound for any fixed candidate shadow.
struct DivergenceCertificate {
    std::vector<double> lower_bounds; // index n−1 holds the bound at n
    double growth_exponent = 1.0;
    double delta = 0.0;
    double s = 0.0; // 0 when unused
    cplx a_or_alpha{};
    double f_norm = 1.0;
    double candidate_norm = 0.0; // |g(α)|, ∥g∥₂ or ∥f∥_∞ as appropriate
};

DivergenceCertificate fixed_point_certificate(cplx alpha, const TaylorPoly& f,
                                              double delta, cplx g_at_alpha, long n_max);
DivergenceCertificate parabolic_certificate(cplx a, double s, double delta,
                                            double g_norm, long n_max,
                                            int truncation = 128);

/// The H^∞ counterexample: constant states f_n ≡ nδ/2 form a δ-pseudo-orbit
/// of every composition operator (residual δ/2), and no candidate with
/// ∥f∥_∞ fixed can track them: ∥f_n − C_φ^n f∥_∞ ≥ nδ/2 − ∥f∥_∞.
std::pair<PseudoOrbit, DivergenceCertificate>
hinfty_counterexample(double delta, int length, const MoebiusMap& phi,
                      double candidate_inf_norm = 0.0);

} // namespace shadowlab
