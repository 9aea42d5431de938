#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "plumbcert/rational.hpp"

namespace plumbcert {

/// Exact nonzero scalar of the form  magnitude * e^{2*pi*i*phase}  with a
/// positive rational magnitude and a rational phase in [0,1).
///
/// This multiplicative group (positive rationals x roots of unity) is closed
/// under products, integer powers and the n-th roots needed here, so every
/// identity involving these scalars is checked exactly. Sums are never
/// formed. Negative rational inputs canonicalize to a positive magnitude
/// with phase shifted by 1/2, so equality is plain componentwise equality.
class CyclotomicScalar {
public:
    /// The scalar 1.
    CyclotomicScalar() : magnitude_(1), phase_(0) {}

    /// A nonzero rational as a scalar (phase 0 or 1/2 by sign).
    explicit CyclotomicScalar(const Rational& value) : CyclotomicScalar(value, Rational(0)) {}

    CyclotomicScalar(const Rational& magnitude, const Rational& phase);

    static CyclotomicScalar one() { return CyclotomicScalar(); }
    static CyclotomicScalar minus_one() { return CyclotomicScalar(Rational(-1)); }
    /// (-1)^n as a scalar.
    static CyclotomicScalar minus_one_pow(const Int& n);
    /// e^{2*pi*i*phase}.
    static CyclotomicScalar root_of_unity(const Rational& phase) { return CyclotomicScalar(Rational(1), phase); }

    const Rational& magnitude() const { return magnitude_; }
    const Rational& phase() const { return phase_; }

    bool is_one() const { return magnitude_ == Rational(1) && phase_.is_zero(); }

    CyclotomicScalar inverse() const;
    friend CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b);

    bool operator==(const CyclotomicScalar& other) const = default;

    std::string str() const; // "magnitude@phase", e.g. "1@1/2" for -1

private:
    Rational magnitude_; // > 0
    Rational phase_;     // in [0,1)
};

/// s^n with n any integer; negative n inverts.
CyclotomicScalar pow(const CyclotomicScalar& s, const Int& n);

/// All |n| solutions x of x^n = s, ascending by phase, provided the
/// magnitude has an exact rational |n|-th root (throws
/// IrrationalMagnitudeRoot otherwise; PreconditionViolated for n = 0).
std::vector<CyclotomicScalar> nth_roots_of(const CyclotomicScalar& s, const Int& n);

/// The smallest-phase solution of x^n = s; the deterministic choice used
/// everywhere a root is needed.
CyclotomicScalar canonical_nth_root(const CyclotomicScalar& s, const Int& n);

/// {"magnitude":"p/q","phase":"a/b"} (exact strings, no floats).
nlohmann::json scalar_to_json(const CyclotomicScalar& s);
CyclotomicScalar scalar_from_json(const nlohmann::json& j);

} // namespace plumbcert
