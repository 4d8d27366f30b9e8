#include "shadowlab/shadowing.hpp"

#include <cmath>

namespace shadowlab {

PseudoOrbit natural_pseudo_orbit(const OperatorMatrix& op, const Eigen::VectorXcd& x,
                                 double delta, int length) {
    if (delta <= 0.0) throw InvalidParameter("natural_pseudo_orbit: delta must be > 0");
    if (length < 2) throw InvalidParameter("natural_pseudo_orbit: length must be >= 2");
    if (length > 512) throw InvalidParameter("natural_pseudo_orbit: horizon capped at 512");
    const double nx = x.norm();
    if (nx <= 0.0) throw ZeroVector("natural_pseudo_orbit: zero seed vector");

    PseudoOrbit orbit;
    orbit.delta = delta;
    orbit.states.reserve(length);
    const Eigen::VectorXcd x1 = (delta / nx) * x;
    orbit.states.push_back(x1);
    for (int n = 1; n < length; ++n)
        orbit.states.push_back(op.apply(orbit.states.back()) + x1);

    orbit.residuals.reserve(length - 1);
    for (int n = 0; n + 1 < length; ++n)
        orbit.residuals.push_back((op.apply(orbit.states[n]) - orbit.states[n + 1]).norm());
    return orbit;
}

OrbitValidation validate_pseudo_orbit(const OperatorMatrix& op, const PseudoOrbit& orbit) {
    OrbitValidation v;
    for (size_t n = 0; n + 1 < orbit.states.size(); ++n) {
        const double r = (op.apply(orbit.states[n]) - orbit.states[n + 1]).norm();
        v.max_residual = std::max(v.max_residual, r);
    }
    v.ok = v.max_residual <= orbit.delta + 1e-12;
    return v;
}

ShadowReport finite_horizon_shadow(const OperatorMatrix& op, const PseudoOrbit& orbit,
                                   double epsilon) {
    if (epsilon <= 0.0) throw InvalidParameter("finite_horizon_shadow: epsilon must be > 0");
    const int dim = static_cast<int>(op.entries.rows());
    const int horizon = static_cast<int>(orbit.states.size());

    Eigen::MatrixXcd stacked(static_cast<Eigen::Index>(horizon) * dim, dim);
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(horizon) * dim);
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(dim, dim);
    for (int n = 0; n < horizon; ++n) {
        stacked.middleRows(static_cast<Eigen::Index>(n) * dim, dim) = power;
        rhs.segment(static_cast<Eigen::Index>(n) * dim, dim) = orbit.states[n];
        if (n + 1 < horizon) power = op.entries * power;
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(stacked);
    ShadowReport report;
    report.shadow = qr.solve(rhs);
    report.epsilon = epsilon;

    const auto rdiag = qr.matrixR().diagonal();
    const double r0 = std::abs(rdiag(0));
    const double rn = std::abs(rdiag(rdiag.size() - 1));
    report.condition_estimate = (rn > 0.0) ? r0 / rn : std::numeric_limits<double>::infinity();
    report.ill_conditioned = report.condition_estimate > 1e12;

    Eigen::VectorXcd v = report.shadow;
    report.errors.reserve(horizon);
    for (int n = 0; n < horizon; ++n) {
        report.errors.push_back((v - orbit.states[n]).norm());
        report.sup_error = std::max(report.sup_error, report.errors.back());
        if (n + 1 < horizon) v = op.apply(v);
    }
    report.shadowed = report.sup_error <= epsilon;
    return report;
}

double lemma_constant(double s, cplx a) {
    if (s <= 0.0 || s >= 1.0) throw InvalidParameter("lemma_constant: s must be in (0,1)");
    if (a.real() < -1e-12) throw InvalidParameter("lemma_constant: Re(a) must be >= 0");
    if (std::abs(a) <= 0.0) throw InvalidParameter("lemma_constant: a must be non-zero");
    return std::cos(s * M_PI / 2.0) * std::pow(std::abs(a), s) / (s + 1.0);
}

LemmaSweep lemma_check(double s, cplx a, long n_max) {
    const double c = lemma_constant(s, a);
    if (n_max < 1) throw InvalidParameter("lemma_check: n_max must be >= 1");

    LemmaSweep sweep;
    cplx sum = std::pow(cplx{2.0, 0.0}, s); // j = 0 term
    for (long n = 1; n <= n_max; ++n) {
        sum += std::pow(2.0 + static_cast<double>(n) * a, s);
        const double rhs = c * std::pow(static_cast<double>(n), s + 1.0);
        if (std::abs(sum) < rhs) {
            sweep.ok = false;
            sweep.first_violation = n;
            return sweep;
        }
    }
    return sweep;
}

double fixed_point_divergence_bound(cplx alpha, const TaylorPoly& f, double delta,
                                    cplx g_at_alpha, long n) {
    if (std::abs(alpha) >= 1.0)
        throw InvalidParameter("fixed_point_divergence_bound: alpha must be in the disk");
    if (delta <= 0.0) throw InvalidParameter("fixed_point_divergence_bound: delta > 0");
    const double fnorm = f.h2_norm();
    const double falpha = std::abs(f(alpha));
    if (falpha <= 1e-14 * std::max(fnorm, 1.0))
        throw ZeroAtFixedPoint("fixed_point_divergence_bound: f vanishes at alpha");
    const double shrink = std::sqrt(1.0 - std::norm(alpha));
    return shrink * ((delta * falpha / fnorm) * static_cast<double>(n) - std::abs(g_at_alpha));
}

double parabolic_divergence_bound_with_norm(cplx a, double s, double delta,
                                            double g_norm, long n, double fs_norm) {
    if (s <= 0.0 || s >= 0.5)
        throw InvalidParameter("parabolic_divergence_bound: s must be in (0, 1/2)");
    if (delta <= 0.0) throw InvalidParameter("parabolic_divergence_bound: delta > 0");
    if (n < 1) throw InvalidParameter("parabolic_divergence_bound: n must be >= 1");
    const double c = lemma_constant(s, a);
    const double front = delta * c / (std::pow(2.0, s) * fs_norm * (2.0 + std::abs(a)));
    const double growth =
        std::pow(static_cast<double>(n - 1), s + 1.0) / static_cast<double>(n);
    return front * growth - g_norm / 2.0;
}

double parabolic_divergence_bound(cplx a, double s, double delta, double g_norm,
                                  long n, int truncation) {
    const double fs_norm = binomial_series(s, truncation).h2_norm();
    return parabolic_divergence_bound_with_norm(a, s, delta, g_norm, n, fs_norm);
}

cplx parabolic_orbit_value_at_zero(cplx a, double s, double delta, long n,
                                   int truncation) {
    const double fs_norm = binomial_series(s, truncation).h2_norm();
    cplx sum = 0.0;
    for (long j = 0; j < n; ++j) sum += std::pow(2.0 + static_cast<double>(j) * a, s);
    return delta / (std::pow(2.0, s) * fs_norm) * sum;
}

bool shadowing_verdict(const MoebiusMap& phi) {
    const SymbolClass cls = classify(phi);
    if (cls.tag == SymbolTag::Identity)
        throw IdentityMapError("shadowing_verdict: identity map");
    return cls.tag == SymbolTag::HA || cls.tag == SymbolTag::HNA_I;
}

DivergenceCertificate fixed_point_certificate(cplx alpha, const TaylorPoly& f,
                                              double delta, cplx g_at_alpha, long n_max) {
    DivergenceCertificate cert;
    cert.growth_exponent = 1.0;
    cert.delta = delta;
    cert.a_or_alpha = alpha;
    cert.f_norm = f.h2_norm();
    cert.candidate_norm = std::abs(g_at_alpha);
    cert.lower_bounds.reserve(n_max);
    for (long n = 1; n <= n_max; ++n)
        cert.lower_bounds.push_back(fixed_point_divergence_bound(alpha, f, delta, g_at_alpha, n));
    return cert;
}

DivergenceCertificate parabolic_certificate(cplx a, double s, double delta,
                                            double g_norm, long n_max, int truncation) {
    const double fs_norm = binomial_series(s, truncation).h2_norm();
    DivergenceCertificate cert;
    cert.growth_exponent = s;
    cert.delta = delta;
    cert.s = s;
    cert.a_or_alpha = a;
    cert.f_norm = fs_norm;
    cert.candidate_norm = g_norm;
    cert.lower_bounds.reserve(n_max);
    for (long n = 1; n <= n_max; ++n)
        cert.lower_bounds.push_back(
            parabolic_divergence_bound_with_norm(a, s, delta, g_norm, n, fs_norm));
    return cert;
}

std::pair<PseudoOrbit, DivergenceCertificate>
hinfty_counterexample(double delta, int length, const MoebiusMap& phi,
                      double candidate_inf_norm) {
    if (delta <= 0.0) throw InvalidParameter("hinfty_counterexample: delta must be > 0");
    (void)phi; // states are constants, fixed by every composition operator

    PseudoOrbit orbit;
    orbit.delta = delta;
    orbit.states.reserve(length);
    for (int n = 1; n <= length; ++n) {
        Eigen::VectorXcd state = Eigen::VectorXcd::Zero(1);
        state(0) = n * delta / 2.0;
        orbit.states.push_back(std::move(state));
    }
    for (int n = 0; n + 1 < length; ++n)
        orbit.residuals.push_back(
            std::abs(orbit.states[n](0) - orbit.states[n + 1](0))); // = δ/2

    DivergenceCertificate cert;
    cert.growth_exponent = 1.0;
    cert.delta = delta;
    cert.candidate_norm = candidate_inf_norm;
    cert.lower_bounds.reserve(length);
    for (int n = 1; n <= length; ++n)
        cert.lower_bounds.push_back(n * delta / 2.0 - candidate_inf_norm);
    return {std::move(orbit), std::move(cert)};
}

} // namespace shadowlab
