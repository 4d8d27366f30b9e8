#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shadowlab/comp_op.hpp"

using namespace shadowlab;
using doctest::Approx;

namespace {

TaylorPoly random_poly(int degree, int truncation, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(truncation + 1);
    for (int n = 0; n <= degree; ++n) c(n) = cplx{coeff(rng), coeff(rng)};
    return TaylorPoly(std::move(c));
}

// Oracle for coefficients of f∘φ: evaluate on the circle of radius 0.9 at
// roots of unity and invert the scaled DFT.  4x oversampling keeps the
// aliasing of the slowly-decaying composition tails below 1e-12.
Eigen::VectorXcd compose_by_interpolation(const TaylorPoly& f, const MoebiusMap& phi,
                                          int truncation) {
    const int m = 4 * (truncation + 1);
    const double radius = 0.9;
    std::vector<cplx> samples(m);
    for (int j = 0; j < m; ++j) {
        const cplx z = std::polar(radius, 2.0 * M_PI * j / m);
        samples[j] = f(phi.eval_finite(z));
    }
    Eigen::VectorXcd coeffs(truncation + 1);
    for (int k = 0; k <= truncation; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j < m; ++j)
            acc += samples[j] * std::polar(1.0, -2.0 * M_PI * j * k / m);
        coeffs(k) = acc / (static_cast<double>(m) * std::pow(radius, k));
    }
    return coeffs;
}

} // namespace

TEST_CASE("symbol series") {
    const TaylorPoly affine = symbol_series(canonical_hna1(0.5), 8);
    CHECK(std::abs(affine.coeff(0) - 0.5) < 1e-14);
    CHECK(std::abs(affine.coeff(1) - 0.5) < 1e-14);
    CHECK(std::abs(affine.coeff(2)) < 1e-14);

    // geometric-series oracle: 1/(2-z) = 0.5 Σ (z/2)^n
    const TaylorPoly par = symbol_series(canonical_parabolic(2.0), 8);
    for (int n = 0; n <= 8; ++n)
        CHECK(std::abs(par.coeff(n) - std::pow(0.5, n + 1)) < 1e-14);

    const TaylorPoly rot = symbol_series(canonical_elliptic(cplx{0.0, 1.0}), 4);
    CHECK(std::abs(rot.coeff(0)) < 1e-14);
    CHECK(std::abs(rot.coeff(1) - cplx{0.0, 1.0}) < 1e-14);

    // finite-difference-style oracle: the series must evaluate like the map
    for (const double z : {0.1, 0.35, -0.4}) {
        const TaylorPoly s = symbol_series(canonical_ha(0.5), 96);
        CHECK(std::abs(s(z) - canonical_ha(0.5).eval_finite(z)) < 1e-12);
    }

    // pole of (az+b)/(cz+d) inside the closed disk is rejected
    CHECK_THROWS_AS(symbol_series(MoebiusMap::make(0.0, 1.0, -1.0, 1.0), 8), PoleTooClose);
}

TEST_CASE("composition matrix structure") {
    const OperatorMatrix rot = comp_matrix(canonical_elliptic(cplx{0.0, 1.0}), 8);
    for (int k = 0; k <= 8; ++k) {
        for (int r = 0; r <= 8; ++r) {
            const cplx expect = (r == k) ? std::pow(cplx{0.0, 1.0}, k) : cplx{0.0, 0.0};
            CHECK(std::abs(rot.entries(r, k) - expect) < 1e-14);
        }
    }

    // binomial oracle: (0.5 + 0.5z)^2 = 0.25 + 0.5z + 0.25z^2
    const OperatorMatrix aff = comp_matrix(canonical_hna1(0.5), 8);
    CHECK(std::abs(aff.entries(0, 2) - 0.25) < 1e-14);
    CHECK(std::abs(aff.entries(1, 2) - 0.5) < 1e-14);
    CHECK(std::abs(aff.entries(2, 2) - 0.25) < 1e-14);
    CHECK(std::abs(aff.entries(3, 2)) < 1e-14);

    // constants are fixed: column 0 is e_0
    CHECK(std::abs(aff.entries(0, 0) - 1.0) < 1e-15);
    CHECK(aff.entries.col(0).tail(8).norm() < 1e-15);
}

TEST_CASE("matrix action equals composition") {
    std::mt19937_64 rng(59);
    const int trunc = 96;
    const std::vector<MoebiusMap> symbols = {
        canonical_ha(0.5), canonical_hna1(0.5), canonical_hna2(0.5),
        canonical_parabolic(2.0), canonical_elliptic(cplx{0.0, 1.0})};
    for (const MoebiusMap& phi : symbols) {
        const OperatorMatrix op = comp_matrix(phi, trunc);
        for (int trial = 0; trial < 5; ++trial) {
            const TaylorPoly f = random_poly(trunc / 2, trunc, rng);
            const Eigen::VectorXcd via_matrix = op.apply(f.coeffs());
            const Eigen::VectorXcd via_interp = compose_by_interpolation(f, phi, trunc);
            CHECK((via_matrix - via_interp).norm() < 1e-9);
        }
    }
}

TEST_CASE("iterate identity on the leading block") {
    const int trunc = 64;
    const MoebiusMap phi = canonical_hna1(0.5);
    const OperatorMatrix single = comp_matrix(phi, trunc);

    Eigen::MatrixXcd powered = single.entries;
    std::mt19937_64 rng(61);
    for (int n = 2; n <= 8; ++n) {
        powered = single.entries * powered;
        const OperatorMatrix direct = comp_matrix(phi.pow(n), trunc);
        for (int trial = 0; trial < 3; ++trial) {
            const TaylorPoly f = random_poly(trunc / 2, trunc, rng);
            const Eigen::VectorXcd lhs = powered * f.coeffs();
            const Eigen::VectorXcd rhs = direct.entries * f.coeffs();
            CHECK((lhs - rhs).head(trunc / 2).norm() < 1e-7);
        }
    }
}

TEST_CASE("weighted composition matrices") {
    const int trunc = 16;
    // HNA I canonical: the weight is the constant a, so W = a · C
    const OperatorMatrix weighted = weighted_comp_matrix(canonical_hna1(0.5), trunc);
    const OperatorMatrix plain = comp_matrix(canonical_hna1(0.5), trunc);
    CHECK((weighted.entries - 0.5 * plain.entries).cwiseAbs().maxCoeff() < 1e-13);

    const OperatorMatrix id = weighted_comp_matrix(MoebiusMap::identity(), trunc);
    CHECK((id.entries - Eigen::MatrixXcd::Identity(trunc + 1, trunc + 1))
              .cwiseAbs()
              .maxCoeff() < 1e-13);

    // series-division oracle: (1-rz)/(1-z) = 1 + (1-r)(z + z² + ...)
    const double r = 0.3;
    const OperatorMatrix dil = weighted_comp_matrix(canonical_lox(r, 0.0), trunc);
    CHECK(std::abs(dil.entries(0, 0) - 1.0) < 1e-14);
    for (int n = 1; n <= trunc; ++n)
        CHECK(std::abs(dil.entries(n, 0) - (1.0 - r)) < 1e-14);
}

TEST_CASE("norms and spectral radii of simple matrices") {
    OperatorMatrix rot = comp_matrix(canonical_elliptic(cplx{0.0, 1.0}), 16);
    const SpectralEstimate unitary = norm_and_spectral_radius(rot, 60);
    CHECK(unitary.norm == Approx(1.0).epsilon(1e-9));
    CHECK(unitary.spectral_radius == Approx(1.0).epsilon(1e-6));

    OperatorMatrix half;
    half.truncation = 16;
    half.entries = 0.5 * Eigen::MatrixXcd::Identity(17, 17);
    const SpectralEstimate scaled = norm_and_spectral_radius(half, 60);
    CHECK(scaled.norm == Approx(0.5).epsilon(1e-9));
    CHECK(scaled.spectral_radius == Approx(0.5).epsilon(1e-6));
    CHECK(scaled.converged);

    // constants give the eigenvalue 1, so the radius estimate is at least 1
    OperatorMatrix hna = comp_matrix(canonical_hna1(0.5), 128);
    const SpectralEstimate est = norm_and_spectral_radius(hna, 60);
    CHECK(est.spectral_radius >= 1.0 - 1e-9);

    CHECK_THROWS_AS(norm_and_spectral_radius(hna, 5), InvalidParameter);
}

TEST_CASE("spectrum annulus for hyperbolic automorphisms") {
    const SpectrumAnnulus mid = spectrum_annulus_HA(canonical_ha(0.5));
    CHECK(mid.inner == Approx(0.57735).epsilon(1e-4));
    CHECK(mid.outer == Approx(1.73205).epsilon(1e-4));
    CHECK(mid.inner * mid.outer == Approx(1.0).epsilon(1e-12));
    CHECK(mid.inner < 1.0);
    CHECK(1.0 < mid.outer);

    // closed-form derivative oracle: φ'(1) = (1-r)/(1+r)
    const SpectrumAnnulus steep = spectrum_annulus_HA(canonical_ha(0.9));
    const double lambda = 0.19 / 3.61;
    CHECK(steep.inner == Approx(std::sqrt(lambda)).epsilon(1e-9));
    CHECK(steep.outer == Approx(1.0 / std::sqrt(lambda)).epsilon(1e-9));
    CHECK(steep.inner == Approx(0.2294).epsilon(1e-3));
    CHECK(steep.outer == Approx(4.3589).epsilon(1e-3));

    CHECK_THROWS_AS(spectrum_annulus_HA(canonical_hna1(0.5)), WrongClass);
}
