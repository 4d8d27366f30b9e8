#include "shadowlab/lft.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace shadowlab {

namespace {

constexpr double kOnCircleTol = 1e-9;

double scale_of(cplx a, cplx b, cplx c, cplx d) {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d), 1.0});
}

bool on_circle(const ExtComplex& p) {
    return !p.infinite && std::abs(std::abs(p.value) - 1.0) <= kOnCircleTol;
}

bool finite_inside(const ExtComplex& p) {
    return !p.infinite && std::abs(p.value) < 1.0 - kOnCircleTol;
}

bool outside_closed_disk(const ExtComplex& p) {
    return p.infinite || std::abs(p.value) > 1.0 + kOnCircleTol;
}

} // namespace

bool ext_close(const ExtComplex& x, const ExtComplex& y, double tol) {
    if (x.infinite || y.infinite) return x.infinite == y.infinite;
    return std::abs(x.value - y.value) <= tol * (1.0 + std::abs(x.value));
}

MoebiusMap MoebiusMap::make(cplx a, cplx b, cplx c, cplx d) {
    const cplx det = a * d - b * c;
    const double s = scale_of(a, b, c, d);
    if (std::abs(det) <= 1e-14 * s * s)
        throw DegenerateCoefficients("make_moebius: ad - bc vanishes");
    const cplx root = std::sqrt(det);
    return MoebiusMap(a / root, b / root, c / root, d / root);
}

MoebiusMap MoebiusMap::identity() { return MoebiusMap(1.0, 0.0, 0.0, 1.0); }

MoebiusMap MoebiusMap::cayley() { return make(1.0, 1.0, -1.0, 1.0); }

MoebiusMap MoebiusMap::disk_automorphism(cplx w, double theta) {
    if (std::abs(w) >= 1.0)
        throw InvalidParameter("disk_automorphism: |w| must be < 1");
    const cplx rot = std::polar(1.0, theta);
    return make(rot, -rot * w, -std::conj(w), 1.0);
}

ExtComplex MoebiusMap::operator()(ExtComplex z) const {
    if (z.infinite) {
        if (std::abs(c_) <= 1e-14 * (1.0 + std::abs(a_))) return ExtComplex::inf();
        return ExtComplex::at(a_ / c_);
    }
    const cplx num = a_ * z.value + b_;
    const cplx den = c_ * z.value + d_;
    const double den_scale = std::abs(c_) * std::abs(z.value) + std::abs(d_);
    if (std::abs(den) <= 1e-12 * std::max(den_scale, 1e-300)) return ExtComplex::inf();
    return ExtComplex::at(num / den);
}

cplx MoebiusMap::eval_finite(cplx z) const {
    const ExtComplex w = (*this)(z);
    if (w.infinite) throw PoleEvaluation("moebius evaluation hit the pole");
    return w.value;
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& inner) const {
    return make(a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
                c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_);
}

MoebiusMap MoebiusMap::inverse() const { return make(d_, -b_, -c_, a_); }

MoebiusMap MoebiusMap::pow(long n) const {
    if (n < 0) throw InvalidParameter("moebius pow: n must be >= 0");
    if (n == 0) return identity();
    if (n == 1) return *this;

    const cplx tr = a_ + d_;
    const cplx disc = tr * tr - 4.0;
    if (std::abs(disc) > 1e-8) {
        // spectral powers; only the eigenvalue ratio enters projectively
        const cplx sq = std::sqrt(disc);
        cplx l1 = (tr + sq) / 2.0;
        cplx l2 = (tr - sq) / 2.0;
        if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
        const cplx s = std::pow(l1 / l2, static_cast<double>(n));
        const cplx na = s * (a_ - l2) - (a_ - l1);
        const cplx nb = (s - 1.0) * b_;
        const cplx nc = (s - 1.0) * c_;
        const cplx nd = s * (d_ - l2) - (d_ - l1);
        if (std::isfinite(std::abs(na)) && std::isfinite(std::abs(nd)))
            return make(na, nb, nc, nd);
    }

    // repeated squaring with projective rescaling
    std::array<cplx, 4> res{1.0, 0.0, 0.0, 1.0};
    std::array<cplx, 4> base{a_, b_, c_, d_};
    auto mul = [](const std::array<cplx, 4>& x, const std::array<cplx, 4>& y) {
        std::array<cplx, 4> m{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                              x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
        const double s = std::max({std::abs(m[0]), std::abs(m[1]), std::abs(m[2]),
                                   std::abs(m[3]), 1e-300});
        for (auto& e : m) e /= s;
        return m;
    };
    long k = n;
    while (k > 0) {
        if (k & 1) res = mul(res, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return make(res[0], res[1], res[2], res[3]);
}

cplx MoebiusMap::derivative_at(cplx z) const {
    const cplx den = c_ * z + d_;
    const double den_scale = std::abs(c_) * std::abs(z) + std::abs(d_);
    if (std::abs(den) <= 1e-12 * std::max(den_scale, 1e-300))
        throw PoleEvaluation("derivative_at: z is the pole");
    const cplx det = a_ * d_ - b_ * c_;
    return det / (den * den);
}

bool MoebiusMap::is_identity(double tol) const {
    const double dplus = std::max({std::abs(a_ - 1.0), std::abs(b_), std::abs(c_),
                                   std::abs(d_ - 1.0)});
    const double dminus = std::max({std::abs(a_ + 1.0), std::abs(b_), std::abs(c_),
                                    std::abs(d_ + 1.0)});
    return std::min(dplus, dminus) <= tol;
}

bool MoebiusMap::approx_equal(const MoebiusMap& o, double tol) const {
    const double dplus = std::max({std::abs(a_ - o.a_), std::abs(b_ - o.b_),
                                   std::abs(c_ - o.c_), std::abs(d_ - o.d_)});
    const double dminus = std::max({std::abs(a_ + o.a_), std::abs(b_ + o.b_),
                                    std::abs(c_ + o.c_), std::abs(d_ + o.d_)});
    return std::min(dplus, dminus) <= tol;
}

namespace {

// Sends (z1, z2, z3) to (0, 1, ∞); raw (unnormalized) coefficient rows.
std::array<cplx, 4> to_zero_one_inf(ExtComplex z1, ExtComplex z2, ExtComplex z3) {
    if (z1.infinite) return {0.0, z2.value - z3.value, 1.0, -z3.value};
    if (z2.infinite) return {1.0, -z1.value, 1.0, -z3.value};
    if (z3.infinite) return {1.0, -z1.value, 0.0, z2.value - z1.value};
    const cplx p = z2.value - z3.value;
    const cplx q = z2.value - z1.value;
    return {p, -z1.value * p, q, -z3.value * q};
}

} // namespace

MoebiusMap MoebiusMap::from_three_points(ExtComplex z1, ExtComplex z2, ExtComplex z3,
                                         ExtComplex w1, ExtComplex w2, ExtComplex w3) {
    const auto tz = to_zero_one_inf(z1, z2, z3);
    const auto tw = to_zero_one_inf(w1, w2, w3);
    const MoebiusMap mz = make(tz[0], tz[1], tz[2], tz[3]);
    const MoebiusMap mw = make(tw[0], tw[1], tw[2], tw[3]);
    return mw.inverse().compose(mz);
}

MoebiusMap parabolic_iterate_closed_form(cplx a, long n) {
    if (a.real() < -1e-12)
        throw InvalidParameter("parabolic iterate: Re(a) must be >= 0");
    if (n < 1) throw InvalidParameter("parabolic iterate: n must be >= 1");
    const cplx na = static_cast<double>(n) * a;
    return MoebiusMap::make(2.0 - na, na, -na, 2.0 + na);
}

FixedPointSet fixed_points(const MoebiusMap& phi) {
    if (phi.is_identity()) throw IdentityMapError("fixed_points: identity map");
    const cplx a = phi.a(), b = phi.b(), c = phi.c(), d = phi.d();

    if (std::abs(c) <= 1e-13) {
        // affine: ∞ always fixed
        if (std::abs(d - a) <= 1e-13)
            return FixedPointSet{{ExtComplex::inf()}, 2};
        return FixedPointSet{{ExtComplex::at(b / (d - a)), ExtComplex::inf()}, 1};
    }

    // roots of c z^2 + (d-a) z - b = 0
    const cplx B = d - a;
    const cplx disc = B * B + 4.0 * b * c;
    const cplx sq = std::sqrt(disc);
    // avoid cancellation: pick the sign enlarging |(a-d) ± sq|
    const cplx t1 = (a - d) + sq;
    const cplx t2 = (a - d) - sq;
    cplx z1, z2;
    if (std::abs(t1) >= std::abs(t2)) {
        z1 = t1 / (2.0 * c);
        z2 = (std::abs(z1) > 1e-300) ? (-b / c) / z1 : t2 / (2.0 * c);
    } else {
        z1 = t2 / (2.0 * c);
        z2 = (std::abs(z1) > 1e-300) ? (-b / c) / z1 : t1 / (2.0 * c);
    }
    // rounding splits a parabolic double root by ~sqrt(eps); merge it back
    if (std::abs(z1 - z2) <= 1e-6 * (1.0 + std::abs(z1) + std::abs(z2))) {
        return FixedPointSet{{ExtComplex::at((a - d) / (2.0 * c))}, 2};
    }
    return FixedPointSet{{ExtComplex::at(z1), ExtComplex::at(z2)}, 1};
}

std::string to_string(SymbolTag tag) {
    switch (tag) {
        case SymbolTag::EA: return "EA";
        case SymbolTag::HA: return "HA";
        case SymbolTag::HNA_I: return "HNA_I";
        case SymbolTag::HNA_II: return "HNA_II";
        case SymbolTag::LOX: return "LOX";
        case SymbolTag::PA: return "PA";
        case SymbolTag::PNA: return "PNA";
        case SymbolTag::Identity: return "Identity";
    }
    return "?";
}

bool is_automorphism(const MoebiusMap& phi, double tol) {
    const std::array<cplx, 3> pts{cplx{1.0, 0.0}, cplx{-1.0, 0.0}, cplx{0.0, 1.0}};
    for (const cplx& p : pts) {
        const ExtComplex w = phi(p);
        if (w.infinite || std::abs(std::abs(w.value) - 1.0) > tol) return false;
    }
    const ExtComplex w0 = phi(cplx{0.0, 0.0});
    return !w0.infinite && std::abs(w0.value) < 1.0;
}

namespace {

void require_self_map(const MoebiusMap& phi, double tol) {
    constexpr int kSamples = 64;
    for (int k = 0; k < kSamples; ++k) {
        const double theta = 2.0 * M_PI * k / kSamples;
        const ExtComplex w = phi(std::polar(1.0, theta));
        if (w.infinite || std::abs(w.value) > 1.0 + tol)
            throw NotSelfMapError("classify: symbol does not map the disk into itself");
    }
    const ExtComplex w0 = phi(cplx{0.0, 0.0});
    if (w0.infinite || std::abs(w0.value) >= 1.0)
        throw NotSelfMapError("classify: symbol does not map the disk into itself");
}

cplx attracting_multiplier(const MoebiusMap& phi, const FixedPointSet& fps) {
    cplx best{};
    double best_mod = -1.0;
    for (const ExtComplex& p : fps.points) {
        if (p.infinite || std::abs(p.value) > 1.0 + kOnCircleTol) continue;
        const cplx der = phi.derivative_at(p.value);
        if (best_mod < 0.0 || std::abs(der) < best_mod) {
            best = der;
            best_mod = std::abs(der);
        }
    }
    return best;
}

} // namespace

SymbolClass classify(const MoebiusMap& phi, double tol) {
    if (phi.is_identity()) return SymbolClass{SymbolTag::Identity, std::nullopt};
    require_self_map(phi, tol);

    const FixedPointSet fps = fixed_points(phi);
    const double auto_tol = std::max(tol, kOnCircleTol);
    SymbolClass out;
    out.multiplier = attracting_multiplier(phi, fps);

    if (fps.multiplicity == 2) {
        if (!on_circle(fps.points[0]))
            throw NotSelfMapError("classify: parabolic fixed point off the unit circle");
        out.tag = is_automorphism(phi, auto_tol) ? SymbolTag::PA : SymbolTag::PNA;
        return out;
    }

    const ExtComplex& p0 = fps.points[0];
    const ExtComplex& p1 = fps.points[1];
    const int n_circle = (on_circle(p0) ? 1 : 0) + (on_circle(p1) ? 1 : 0);

    if (n_circle == 2) {
        out.tag = SymbolTag::HA;
    } else if (n_circle == 1) {
        const ExtComplex& other = on_circle(p0) ? p1 : p0;
        out.tag = outside_closed_disk(other) ? SymbolTag::HNA_I : SymbolTag::HNA_II;
    } else {
        if (!finite_inside(p0) && !finite_inside(p1))
            throw NotSelfMapError("classify: no fixed point in the closed disk");
        out.tag = is_automorphism(phi, auto_tol) ? SymbolTag::EA : SymbolTag::LOX;
    }
    return out;
}

namespace {

ExtComplex project_to_circle(const ExtComplex& p) {
    return ExtComplex::at(p.value / std::abs(p.value));
}

// A boundary anchor well separated from p and q, for pinning the HA
// conjugator; t = i wins when available so canonical inputs stay fixed.
cplx third_anchor(cplx p, cplx q) {
    const std::array<cplx, 3> candidates{cplx{0.0, 1.0},
                                         std::polar(1.0, 2.0 * M_PI / 3.0),
                                         std::polar(1.0, -2.0 * M_PI / 3.0)};
    for (const cplx& t : candidates) {
        if (std::abs(t - p) > 0.5 && std::abs(t - q) > 0.5) return t;
    }
    return candidates[0];
}

MoebiusMap conjugate(const MoebiusMap& sigma, const MoebiusMap& phi) {
    return sigma.compose(phi).compose(sigma.inverse());
}

// rotation(u) ∘ m with rotation z ↦ u z
MoebiusMap rotate_after(cplx u, const MoebiusMap& m) {
    return MoebiusMap::make(u * m.a(), u * m.b(), m.c(), m.d());
}

} // namespace

CanonicalForm canonical_form(const MoebiusMap& phi) {
    const SymbolClass cls = classify(phi);
    if (cls.tag == SymbolTag::Identity)
        throw IdentityMapError("canonical_form: identity map");

    const FixedPointSet fps = fixed_points(phi);

    switch (cls.tag) {
        case SymbolTag::PA:
        case SymbolTag::PNA: {
            const cplx p = project_to_circle(fps.points[0]).value;
            const MoebiusMap sigma = MoebiusMap::make(std::conj(p), 0.0, 0.0, 1.0);
            const MoebiusMap canon = conjugate(sigma, phi);
            // read a from γ∘canon∘γ⁻¹ = translation by a
            const MoebiusMap gamma = MoebiusMap::cayley();
            const MoebiusMap trans = conjugate(gamma, canon);
            const cplx a_param = trans.b() / trans.a();
            return CanonicalForm{cls.tag, canon, sigma, a_param};
        }
        case SymbolTag::HA: {
            cplx p = project_to_circle(fps.points[0]).value;
            cplx q = project_to_circle(fps.points[1]).value;
            // attracting point (multiplier in (0,1)) goes to +1
            if (std::abs(phi.derivative_at(p)) > 1.0) std::swap(p, q);
            const cplx t = third_anchor(p, q);
            MoebiusMap sigma = MoebiusMap::from_three_points(
                ExtComplex::at(p), ExtComplex::at(q), ExtComplex::at(t),
                ExtComplex::at(1.0), ExtComplex::at(-1.0), ExtComplex::at(cplx{0.0, 1.0}));
            const ExtComplex s0 = sigma(cplx{0.0, 0.0});
            if (s0.infinite || std::abs(s0.value) >= 1.0) {
                // wrong orientation: flip the target anchor
                sigma = MoebiusMap::from_three_points(
                    ExtComplex::at(p), ExtComplex::at(q), ExtComplex::at(t),
                    ExtComplex::at(1.0), ExtComplex::at(-1.0),
                    ExtComplex::at(cplx{0.0, -1.0}));
            }
            const MoebiusMap canon = conjugate(sigma, phi);
            const cplx r = canon.b() / canon.a();
            return CanonicalForm{cls.tag, canon, sigma, r};
        }
        case SymbolTag::HNA_I: {
            const bool first_on = on_circle(fps.points[0]);
            const ExtComplex p = first_on ? fps.points[0] : fps.points[1];
            const ExtComplex q = first_on ? fps.points[1] : fps.points[0];
            const cplx w = q.infinite ? cplx{0.0, 0.0} : 1.0 / std::conj(q.value);
            const MoebiusMap sigma0 = MoebiusMap::disk_automorphism(w, 0.0);
            const cplx u = sigma0(p.value).value; // unimodular
            const MoebiusMap sigma = rotate_after(std::conj(u) / std::abs(u), sigma0);
            const MoebiusMap canon = conjugate(sigma, phi);
            const cplx r = phi.derivative_at(p.value);
            return CanonicalForm{cls.tag, canon, sigma, r};
        }
        case SymbolTag::HNA_II: {
            const bool first_on = on_circle(fps.points[0]);
            const ExtComplex p = first_on ? fps.points[0] : fps.points[1];
            const ExtComplex q = first_on ? fps.points[1] : fps.points[0];
            const MoebiusMap sigma0 = MoebiusMap::disk_automorphism(q.value, 0.0);
            const cplx u = sigma0(p.value).value;
            const MoebiusMap sigma = rotate_after(std::conj(u) / std::abs(u), sigma0);
            const MoebiusMap canon = conjugate(sigma, phi);
            const cplx r = phi.derivative_at(q.value);
            return CanonicalForm{cls.tag, canon, sigma, r};
        }
        case SymbolTag::EA:
        case SymbolTag::LOX: {
            const bool first_in = finite_inside(fps.points[0]);
            const ExtComplex alpha = first_in ? fps.points[0] : fps.points[1];
            const ExtComplex beta = first_in ? fps.points[1] : fps.points[0];
            MoebiusMap sigma = MoebiusMap::identity();
            if (cls.tag == SymbolTag::EA) {
                sigma = MoebiusMap::disk_automorphism(alpha.value, 0.0);
            } else if (!beta.infinite) {
                // send the exterior fixed point to ∞, keeping 𝔻 onto 𝔻
                sigma = MoebiusMap::disk_automorphism(1.0 / std::conj(beta.value), 0.0);
            }
            const MoebiusMap canon = conjugate(sigma, phi);
            const cplx param = canon.a() / canon.d();
            return CanonicalForm{cls.tag, canon, sigma, param};
        }
        default:
            throw IdentityMapError("canonical_form: identity map");
    }
}

cplx cayley_forward(cplx z) {
    if (std::abs(z - 1.0) <= 1e-300) throw PoleEvaluation("cayley: z = 1");
    return (1.0 + z) / (1.0 - z);
}

cplx cayley_inverse(cplx w) {
    if (std::abs(w + 1.0) <= 1e-300) throw PoleEvaluation("cayley inverse: w = -1");
    return (w - 1.0) / (w + 1.0);
}

MoebiusMap canonical_elliptic(cplx omega) {
    return MoebiusMap::make(omega, 0.0, 0.0, 1.0);
}

MoebiusMap canonical_ha(double r) {
    return MoebiusMap::make(1.0, r, r, 1.0);
}

MoebiusMap canonical_hna1(double r) {
    return MoebiusMap::make(r, 1.0 - r, 0.0, 1.0);
}

MoebiusMap canonical_hna2(double r) {
    return MoebiusMap::make(r, 0.0, -(1.0 - r), 1.0);
}

MoebiusMap canonical_lox(cplx a, cplx center) {
    return MoebiusMap::make(a, (1.0 - a) * center, 0.0, 1.0);
}

MoebiusMap canonical_parabolic(cplx a) {
    return MoebiusMap::make(2.0 - a, a, -a, 2.0 + a);
}

} // namespace shadowlab
