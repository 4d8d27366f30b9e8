#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shadowlab/hardy.hpp"

using namespace shadowlab;
using doctest::Approx;

namespace {

TaylorPoly from_list(std::initializer_list<cplx> values) {
    Eigen::VectorXcd c(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const cplx& v : values) c(i++) = v;
    return TaylorPoly(std::move(c));
}

TaylorPoly random_poly(int degree, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    Eigen::VectorXcd c(degree + 1);
    for (int n = 0; n <= degree; ++n) c(n) = cplx{coeff(rng), coeff(rng)};
    return TaylorPoly(std::move(c));
}

} // namespace

TEST_CASE("coefficient arithmetic") {
    const TaylorPoly f = from_list({1.0, 0.0});
    const TaylorPoly g = from_list({0.0, 1.0});
    const TaylorPoly sum = f + g;
    CHECK(std::abs(sum.coeff(0) - 1.0) < 1e-15);
    CHECK(std::abs(sum.coeff(1) - 1.0) < 1e-15);

    const TaylorPoly one_plus_z = from_list({1.0, 1.0});
    const TaylorPoly sq = truncated_multiply(one_plus_z, one_plus_z, 2);
    CHECK(std::abs(sq.coeff(0) - 1.0) < 1e-15);
    CHECK(std::abs(sq.coeff(1) - 2.0) < 1e-15);
    CHECK(std::abs(sq.coeff(2) - 1.0) < 1e-15);

    const TaylorPoly scaled = cplx{2.0, 0.0} * from_list({0.5, 0.5});
    CHECK(std::abs(scaled.coeff(0) - 1.0) < 1e-15);
    CHECK(std::abs(scaled.coeff(1) - 1.0) < 1e-15);

    // convolution truncation drops only the tail
    const TaylorPoly cut = truncated_multiply(one_plus_z, one_plus_z, 1);
    CHECK(cut.truncation() == 1);
    CHECK(std::abs(cut.coeff(1) - 2.0) < 1e-15);
}

TEST_CASE("inner product and norms") {
    const TaylorPoly ones = from_list({1.0, 1.0, 1.0});
    CHECK(std::abs(h2_inner(ones, ones) - 3.0) < 1e-15);
    CHECK(ones.h2_norm() == Approx(std::sqrt(3.0)).epsilon(1e-15));

    const TaylorPoly f = from_list({1.0, 2.0, 0.0});
    CHECK(std::abs(h2_inner(f, kernel(0.6, 2).poly) - 2.2) < 1e-12);

    CHECK(std::abs(h2_inner(from_list({1.0, 0.0}), from_list({0.0, 1.0}))) < 1e-15);

    // conjugate-linearity in the second slot
    const TaylorPoly g = from_list({cplx{0.0, 1.0}, 1.0, 0.0});
    CHECK(std::abs(h2_inner(f, g) - (cplx{0.0, -1.0} + 2.0)) < 1e-14);
}

TEST_CASE("reproducing kernel vectors") {
    const KernelVector k0 = kernel(0.0, 8);
    CHECK(std::abs(k0.poly.coeff(0) - 1.0) < 1e-15);
    CHECK(k0.poly.h2_norm() == Approx(1.0).epsilon(1e-15));
    CHECK(k0.exact_norm_sq == Approx(1.0).epsilon(1e-15));

    CHECK(kernel(0.6, 8).exact_norm_sq == Approx(1.5625).epsilon(1e-14));

    const KernelVector ki = kernel(cplx{0.0, 0.5}, 4);
    CHECK(std::abs(ki.poly.coeff(2) - cplx{-0.25, 0.0}) < 1e-15);

    CHECK_THROWS_AS(kernel(cplx{1.0, 0.0}, 4), OutsideDisk);
}

TEST_CASE("truncated reproducing identity") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int deg = 4 + static_cast<int>(unit(rng) * 28);
        const TaylorPoly f = random_poly(deg, rng);
        const cplx w = std::polar(0.9 * unit(rng), 2.0 * M_PI * unit(rng));
        const cplx lhs = h2_inner(f, kernel(w, deg).poly);
        CHECK(std::abs(lhs - f(w)) <= 1e-10);
    }
}

TEST_CASE("kernel norm truncation gap") {
    const cplx w{0.55, 0.2};
    const int trunc = 24;
    const KernelVector k = kernel(w, trunc);
    const double truncated_sq = k.poly.h2_norm() * k.poly.h2_norm();
    const double gap = std::pow(std::abs(w), 2 * (trunc + 1)) / (1.0 - std::norm(w));
    CHECK(truncated_sq < k.exact_norm_sq);
    CHECK(k.exact_norm_sq - truncated_sq == Approx(gap).epsilon(1e-10));
}

TEST_CASE("boundary Hp norms") {
    const TaylorPoly one = TaylorPoly::constant(1.0, 4);
    for (const double p : {1.0, 2.0, 4.0})
        CHECK(hp_norm(one, p, 256) == Approx(1.0).epsilon(1e-13));
    CHECK(hp_norm(one, std::numeric_limits<double>::infinity(), 256) == Approx(1.0));

    const TaylorPoly z = TaylorPoly::monomial(1, 4);
    CHECK(hp_norm(z, 2.0, 256) == Approx(z.h2_norm()).epsilon(1e-13));

    // coefficient-sum oracle: ||1+z||_2 = sqrt(2)
    const TaylorPoly f = from_list({1.0, 1.0});
    CHECK(std::abs(hp_norm(f, 2.0, 256) - std::sqrt(2.0)) < 1e-10);
}

TEST_CASE("hp norm agrees with the coefficient norm at p = 2") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const TaylorPoly f = random_poly(24, rng);
        CHECK(hp_norm(f, 2.0, 512) == Approx(f.h2_norm()).epsilon(1e-12));
    }
}

TEST_CASE("hp norm is monotone in p and stable under quadrature doubling") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const TaylorPoly f = random_poly(32, rng);
        double prev = 0.0;
        for (const double p : {1.0, 2.0, 4.0, 8.0}) {
            const double np = hp_norm(f, p, 1024);
            CHECK(np >= prev - 1e-8);
            prev = np;
        }
        // even p: |f|^p is a trigonometric polynomial and the rule is exact
        for (const double p : {2.0, 4.0}) {
            const double coarse = hp_norm(f, p, 512);
            const double fine = hp_norm(f, p, 1024);
            CHECK(std::abs(coarse - fine) < 1e-8);
        }
        // p = 1: |f| has kinks at zeros of f near the circle; near-exact only
        CHECK(std::abs(hp_norm(f, 1.0, 512) - hp_norm(f, 1.0, 1024)) < 1e-3);
    }
}

TEST_CASE("pointwise growth margins") {
    const TaylorPoly one = TaylorPoly::constant(1.0, 2);
    CHECK(pointwise_bound_margin(one, 0.6, 2.0) == Approx(0.25).epsilon(1e-10));

    const TaylorPoly z = TaylorPoly::monomial(1, 2);
    CHECK(pointwise_bound_margin(z, 0.0, 2.0) == Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(pointwise_bound_margin(one, cplx{1.0, 0.0}, 2.0), OutsideDisk);

    // Cauchy-Schwarz is tight on kernels: the margin shrinks as N grows
    double margins[2];
    int i = 0;
    for (const int trunc : {16, 64}) {
        const TaylorPoly k = kernel(0.6, trunc).poly;
        margins[i] = pointwise_bound_margin(k, 0.6, 2.0, 4096);
        CHECK(margins[i] >= -1e-9);
        ++i;
    }
    CHECK(margins[1] < margins[0]);
    CHECK(margins[1] < 1e-3);
}

TEST_CASE("pointwise estimate holds across a battery") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const TaylorPoly f = random_poly(20, rng);
        const cplx z = std::polar(0.95 * unit(rng), 2.0 * M_PI * unit(rng));
        for (const double p : {1.0, 2.0, 4.0})
            CHECK(pointwise_bound_margin(f, z, p, 2048) >= -1e-9);
    }
}

TEST_CASE("binomial series of (1-z)^{-s}") {
    const TaylorPoly f = binomial_series(0.5, 3);
    CHECK(f.coeff(0).real() == Approx(1.0));
    CHECK(f.coeff(1).real() == Approx(0.5));
    CHECK(f.coeff(2).real() == Approx(0.375));
    CHECK(f.coeff(3).real() == Approx(0.3125));

    const TaylorPoly geo = binomial_series(1.0, 16);
    for (int n = 0; n <= 16; ++n) CHECK(std::abs(geo.coeff(n) - 1.0) < 1e-13);

    CHECK_THROWS_AS(binomial_series(0.0, 4), InvalidParameter);
    CHECK_THROWS_AS(binomial_series(-0.5, 4), InvalidParameter);
}

TEST_CASE("membership threshold at p = 2") {
    // s = 0.25: partial norms stabilize; s = 0.75: they keep growing
    const double small_lo = binomial_series(0.25, 100).h2_norm();
    const double small_hi = binomial_series(0.25, 10000).h2_norm();
    CHECK(small_hi - small_lo < 0.01);

    const double big_lo = binomial_series(0.75, 100).h2_norm();
    const double big_hi = binomial_series(0.75, 10000).h2_norm();
    CHECK(big_hi * big_hi > 10.0 * big_lo * big_lo);
}
