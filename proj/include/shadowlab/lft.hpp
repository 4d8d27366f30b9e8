#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "shadowlab/errors.hpp"

namespace shadowlab {

using cplx = std::complex<double>;

/// A point of the Riemann sphere: a finite complex number or the point at
/// infinity.
struct ExtComplex {
    cplx value{0.0, 0.0};
    bool infinite = false;

    static ExtComplex inf() { return ExtComplex{cplx{0.0, 0.0}, true}; }
    static ExtComplex at(cplx v) { return ExtComplex{v, false}; }
};

bool ext_close(const ExtComplex& x, const ExtComplex& y, double tol);

/// Linear fractional transformation z ↦ (az+b)/(cz+d) with ad−bc ≠ 0,
/// stored as a coefficient matrix normalized to determinant one.  Two maps
/// are equal iff their normalized matrices agree up to a global sign; a map
/// is determined by its values at three distinct points.
///
/// Composition corresponds to matrix multiplication, so iterates are matrix
/// powers.  Values are immutable after construction.
class MoebiusMap {
public:
    /// Builds the map from raw coefficients and normalizes to det = 1.
    /// Throws DegenerateCoefficients when ad−bc vanishes (relative test).
    static MoebiusMap make(cplx a, cplx b, cplx c, cplx d);
    static MoebiusMap identity();
    /// The Cayley transform γ(z) = (1+z)/(1−z) as a map of the sphere.
    static MoebiusMap cayley();
    /// Disk automorphism e^{iθ}(z−w)/(1−w̄z); requires |w| < 1.
    static MoebiusMap disk_automorphism(cplx w, double theta);
    /// The unique map sending z1,z2,z3 to w1,w2,w3 (∞ allowed anywhere).
    static MoebiusMap from_three_points(ExtComplex z1, ExtComplex z2, ExtComplex z3,
                                        ExtComplex w1, ExtComplex w2, ExtComplex w3);

    cplx a() const { return a_; }
    cplx b() const { return b_; }
    cplx c() const { return c_; }
    cplx d() const { return d_; }

    /// Total evaluation on the sphere: the pole maps to ∞ and ∞ to a/c.
    ExtComplex operator()(ExtComplex z) const;
    ExtComplex operator()(cplx z) const { return (*this)(ExtComplex::at(z)); }
    /// Evaluation that must land at a finite point; throws PoleEvaluation.
    cplx eval_finite(cplx z) const;

    /// this ∘ inner as matrix product.
    MoebiusMap compose(const MoebiusMap& inner) const;
    MoebiusMap inverse() const;
    /// n-fold composition, n ≥ 0; pow(0) is the identity.  Diagonalizable
    /// matrices use spectral powers, the parabolic case repeated squaring.
    MoebiusMap pow(long n) const;

    /// φ′(z) = (ad−bc)/(cz+d)²; throws PoleEvaluation at z = −d/c.
    cplx derivative_at(cplx z) const;

    bool is_identity(double tol = 1e-12) const;
    /// Equality of normalized matrices up to global sign.
    bool approx_equal(const MoebiusMap& other, double tol = 1e-9) const;

private:
    MoebiusMap(cplx a, cplx b, cplx c, cplx d) : a_(a), b_(b), c_(c), d_(d) {}
    cplx a_, b_, c_, d_;
};

/// Closed-form n-th iterate of the canonical parabolic map
/// z ↦ ((2−a)z+a)/(−az+(2+a)):  coefficients ((2−na), na, −na, (2+na)).
/// Requires Re(a) ≥ 0 (within 1e−12) and n ≥ 1.
MoebiusMap parabolic_iterate_closed_form(cplx a, long n);

/// Fixed points of a non-identity map: the roots of cz² + (d−a)z − b = 0 on
/// the sphere.  A parabolic double root is reported once with multiplicity 2;
/// ∞ is a fixed point iff c = 0.
struct FixedPointSet {
    std::vector<ExtComplex> points;
    int multiplicity = 1; // 2 for the parabolic double root
};

FixedPointSet fixed_points(const MoebiusMap& phi);

enum class SymbolTag { EA, HA, HNA_I, HNA_II, LOX, PA, PNA, Identity };

std::string to_string(SymbolTag tag);

struct SymbolClass {
    SymbolTag tag = SymbolTag::Identity;
    /// φ′ at the fixed point in the closed disk that attracts under
    /// iteration (the one with |φ′| ≤ 1); absent for the identity.
    std::optional<cplx> multiplier;
};

/// Boundary test: an LFT sending three points of the unit circle to the unit
/// circle maps 𝕋 onto 𝕋, so φ is an automorphism of 𝔻 iff |φ(±1)| and |φ(i)|
/// all equal 1 (within tol) and |φ(0)| < 1.
bool is_automorphism(const MoebiusMap& phi, double tol);

/// Seven-way classification by fixed point location.  Self-map validation
/// samples 64 boundary points (|φ| ≤ 1+tol) plus the origin; points count as
/// "on 𝕋" within 1e−9.  Throws NotSelfMapError; the identity gets its own tag.
SymbolClass classify(const MoebiusMap& phi, double tol = 1e-9);

/// σ is a disk automorphism with canonical = σ∘φ∘σ⁻¹ in the Table-1 shape of
/// the class; param is the class parameter (r for the hyperbolic families,
/// a for PA/PNA/LOX, ω for EA).  For PA/PNA the parameter is read off through
/// the Cayley transform: γ∘canonical∘γ⁻¹ is the translation w ↦ w + a.
struct CanonicalForm {
    SymbolTag tag;
    MoebiusMap canonical;
    MoebiusMap conjugator;
    cplx param;
};

CanonicalForm canonical_form(const MoebiusMap& phi);

/// γ(z) = (1+z)/(1−z); throws PoleEvaluation at z = 1.
cplx cayley_forward(cplx z);
/// γ⁻¹(w) = (w−1)/(w+1); throws PoleEvaluation at w = −1.
cplx cayley_inverse(cplx w);

/// Canonical family constructors (Table-1 shapes).
MoebiusMap canonical_elliptic(cplx omega);           // z ↦ ωz, |ω| = 1
MoebiusMap canonical_ha(double r);                   // z ↦ (r+z)/(1+rz)
MoebiusMap canonical_hna1(double r);                 // z ↦ rz + 1 − r
MoebiusMap canonical_hna2(double r);                 // z ↦ rz/(1−(1−r)z)
MoebiusMap canonical_lox(cplx a, cplx center);       // z ↦ a(z−c)+c
MoebiusMap canonical_parabolic(cplx a);              // ((2−a)z+a)/(−az+2+a)

} // namespace shadowlab
