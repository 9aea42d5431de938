#include "plumbcert/cyclo.hpp"

#include <nlohmann/json.hpp>

namespace plumbcert {

namespace {

Rational mod_one(const Rational& t) {
    return t - Rational(t.floor());
}

// Exact k-th root of a positive integer, or failure.
bool exact_root(const Int& value, unsigned long k, Int& out) {
    // mpz_root returns nonzero iff the root is exact.
    return mpz_root(out.get_mpz_t(), value.get_mpz_t(), k) != 0;
}

} // namespace

CyclotomicScalar::CyclotomicScalar(const Rational& magnitude, const Rational& phase)
    : magnitude_(magnitude), phase_(mod_one(phase)) {
    if (magnitude_.is_zero()) throw BadParams("CyclotomicScalar: zero magnitude");
    if (magnitude_.is_negative()) {
        magnitude_ = -magnitude_;
        phase_ = mod_one(phase_ + Rational(1, 2));
    }
}

CyclotomicScalar CyclotomicScalar::minus_one_pow(const Int& n) {
    return mpz_odd_p(n.get_mpz_t()) ? minus_one() : one();
}

CyclotomicScalar CyclotomicScalar::inverse() const {
    return CyclotomicScalar(Rational(1) / magnitude_, -phase_);
}

CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    return CyclotomicScalar(a.magnitude_ * b.magnitude_, a.phase_ + b.phase_);
}

std::string CyclotomicScalar::str() const {
    return magnitude_.str() + "@" + phase_.str();
}

CyclotomicScalar pow(const CyclotomicScalar& s, const Int& n) {
    return CyclotomicScalar(s.magnitude().pow(n), Rational(n) * s.phase());
}

namespace {

// Exact |n|-th root of the magnitude of x^|n| = target, shared by the
// enumerating and the canonical-root entry points.
Rational magnitude_root(const CyclotomicScalar& target, const Int& order) {
    if (!order.fits_ulong_p()) {
        // Orders beyond machine range only occur with unit magnitude
        // (gluing exponents of high-index graphs).
        if (target.magnitude() == Rational(1)) return Rational(1);
        throw IrrationalMagnitudeRoot("nth root: magnitude " + target.magnitude().str() +
                                      " with order beyond machine range");
    }
    const unsigned long k = order.get_ui();
    Int root_num, root_den;
    if (!exact_root(target.magnitude().numerator(), k, root_num) ||
        !exact_root(target.magnitude().denominator(), k, root_den)) {
        throw IrrationalMagnitudeRoot("nth root: magnitude " + target.magnitude().str() +
                                      " has no rational root of order " + order.get_str());
    }
    return Rational(root_num, root_den);
}

} // namespace

std::vector<CyclotomicScalar> nth_roots_of(const CyclotomicScalar& s, const Int& n) {
    if (n == 0) throw PreconditionViolated("nth_roots_of: order must be nonzero");

    // x^n = s with n < 0 is x^|n| = s^{-1}.
    const CyclotomicScalar target = sgn(n) > 0 ? s : s.inverse();
    const Int order = abs(n);
    if (!order.fits_ulong_p()) throw BadParams("nth_roots_of: order too large to enumerate");
    const Rational root_mag = magnitude_root(target, order);

    std::vector<CyclotomicScalar> roots;
    const unsigned long k = order.get_ui();
    roots.reserve(k);
    for (unsigned long j = 0; j < k; ++j) {
        // phase (t + j) / k, ascending in j since t is in [0,1)
        roots.emplace_back(root_mag, (target.phase() + Rational(Int(j))) / Rational(order));
    }
    return roots;
}

CyclotomicScalar canonical_nth_root(const CyclotomicScalar& s, const Int& n) {
    if (n == 0) throw PreconditionViolated("canonical_nth_root: order must be nonzero");
    const CyclotomicScalar target = sgn(n) > 0 ? s : s.inverse();
    const Int order = abs(n);
    // smallest phase is the j = 0 solution; no need to enumerate the rest
    return CyclotomicScalar(magnitude_root(target, order), target.phase() / Rational(order));
}

nlohmann::json scalar_to_json(const CyclotomicScalar& s) {
    return {{"magnitude", s.magnitude().str()}, {"phase", s.phase().str()}};
}

CyclotomicScalar scalar_from_json(const nlohmann::json& j) {
    try {
        return CyclotomicScalar(Rational::parse(j.at("magnitude").get<std::string>()),
                                Rational::parse(j.at("phase").get<std::string>()));
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("scalar json: ") + ex.what());
    } catch (const BadParams& ex) {
        throw ParseError(std::string("scalar json: ") + ex.what());
    }
}

} // namespace plumbcert
