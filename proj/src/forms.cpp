#include "plumbcert/forms.hpp"

#include <nlohmann/json.hpp>

namespace plumbcert {

std::string MonomialTwoForm::str() const {
    return coeff.str() + " * " + var1 + "^" + a.get_str() + " " + var2 + "^" + b.get_str() +
           " (d" + var1 + "^d" + var2 + ")^" + std::to_string(weight);
}

MonomialTwoForm pullback(const MonomialTwoForm& form, const MonomialMap& map) {
    if (form.var1 != map.tgt1 || form.var2 != map.tgt2)
        throw PreconditionViolated("pullback: form lives in (" + form.var1 + "," + form.var2 +
                                   ") but map targets (" + map.tgt1 + "," + map.tgt2 + ")");
    const Int d = map.det();
    if (d == 0) throw DegenerateMap("pullback: map determinant is zero");

    const Int r(form.weight);
    // Substituting the monomials and expanding d tgt1 ^ d tgt2 gives
    //   (c1 c2 d) src1^{e11+e21-1} src2^{e12+e22-1} (d src1 ^ d src2),
    // so the coefficient picks up c1^{a+r} c2^{b+r} d^r.
    CyclotomicScalar coeff = form.coeff * pow(map.c1, form.a + r) * pow(map.c2, form.b + r) *
                             pow(CyclotomicScalar(Rational(d)), r);
    MonomialTwoForm out;
    out.coeff = coeff;
    out.a = form.a * map.e11 + form.b * map.e21 + r * (map.e11 + map.e21 - 1);
    out.b = form.a * map.e12 + form.b * map.e22 + r * (map.e12 + map.e22 - 1);
    out.weight = form.weight;
    out.var1 = map.src1;
    out.var2 = map.src2;
    return out;
}

MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner) {
    if (outer.src1 != inner.tgt1 || outer.src2 != inner.tgt2)
        throw PreconditionViolated("compose: outer source chart (" + outer.src1 + "," + outer.src2 +
                                   ") does not match inner target chart (" + inner.tgt1 + "," +
                                   inner.tgt2 + ")");
    MonomialMap out;
    out.src1 = inner.src1;
    out.src2 = inner.src2;
    out.tgt1 = outer.tgt1;
    out.tgt2 = outer.tgt2;
    out.c1 = outer.c1 * pow(inner.c1, outer.e11) * pow(inner.c2, outer.e12);
    out.c2 = outer.c2 * pow(inner.c1, outer.e21) * pow(inner.c2, outer.e22);
    out.e11 = outer.e11 * inner.e11 + outer.e12 * inner.e21;
    out.e12 = outer.e11 * inner.e12 + outer.e12 * inner.e22;
    out.e21 = outer.e21 * inner.e11 + outer.e22 * inner.e21;
    out.e22 = outer.e21 * inner.e12 + outer.e22 * inner.e22;
    return out;
}

bool verify_p1_transition(long n, long m1, long m2, long r) {
    if (r < 1) throw PreconditionViolated("verify_p1_transition: weight must be >= 1");
    if (m1 + m2 != -2 * r)
        throw PreconditionViolated("verify_p1_transition: need m1 + m2 = -2r");

    MonomialTwoForm chart2;
    chart2.coeff = CyclotomicScalar::one();
    chart2.a = Int(-r);
    chart2.b = Int(m2);
    chart2.weight = r;
    chart2.var1 = "f2";
    chart2.var2 = "q2";

    MonomialMap transition;
    transition.src1 = "f1";
    transition.src2 = "q1";
    transition.tgt1 = "f2";
    transition.tgt2 = "q2";
    transition.c1 = CyclotomicScalar::one();
    transition.c2 = CyclotomicScalar::one();
    transition.e11 = 1;
    transition.e12 = Int(n);
    transition.e21 = 0;
    transition.e22 = -1;

    MonomialTwoForm expected;
    expected.coeff = CyclotomicScalar::minus_one_pow(Int(r));
    expected.a = Int(-r);
    expected.b = Int(m1);
    expected.weight = r;
    expected.var1 = "f1";
    expected.var2 = "q1";

    return pullback(chart2, transition) == expected;
}

bool verify_weight_r_canonical(long r) {
    if (r < 1) throw PreconditionViolated("verify_weight_r_canonical: weight must be >= 1");

    MonomialTwoForm tilde_chart;
    tilde_chart.coeff = CyclotomicScalar::one();
    tilde_chart.a = Int(1 - r);
    tilde_chart.b = 0;
    tilde_chart.weight = r;
    tilde_chart.var1 = "pt";
    tilde_chart.var2 = "qt";

    MonomialMap transition;
    transition.src1 = "p";
    transition.src2 = "q";
    transition.tgt1 = "pt";
    transition.tgt2 = "qt";
    transition.c1 = CyclotomicScalar::minus_one_pow(Int(r));
    transition.c2 = CyclotomicScalar::one();
    transition.e11 = 1;
    transition.e12 = Int(2 * r);
    transition.e21 = 0;
    transition.e22 = -1;

    MonomialTwoForm expected;
    expected.coeff = CyclotomicScalar::one();
    expected.a = Int(1 - r);
    expected.b = 0;
    expected.weight = r;
    expected.var1 = "p";
    expected.var2 = "q";

    return pullback(tilde_chart, transition) == expected;
}

bool verify_odd_weight_sign_fix(long m1, long r) {
    if (r < 1) throw PreconditionViolated("verify_odd_weight_sign_fix: weight must be >= 1");
    if (m1 == -r)
        throw PreconditionViolated("verify_odd_weight_sign_fix: m1 = -r leaves no root to "
                                   "rescale by");

    // the chart-1 expression still carrying the transition sign
    MonomialTwoForm signed_form;
    signed_form.coeff = CyclotomicScalar::minus_one_pow(Int(r));
    signed_form.a = Int(-r);
    signed_form.b = Int(m1);
    signed_form.weight = r;
    signed_form.var1 = "f1";
    signed_form.var2 = "q1";

    // q1 = nu * u1 with nu^{m1+r} = (-1)^r
    MonomialMap rescale;
    rescale.src1 = "f1";
    rescale.src2 = "u1";
    rescale.tgt1 = "f1";
    rescale.tgt2 = "q1";
    rescale.c1 = CyclotomicScalar::one();
    rescale.e11 = 1;
    rescale.e12 = 0;
    rescale.c2 = canonical_nth_root(CyclotomicScalar::minus_one_pow(Int(r)), Int(m1 + r));
    rescale.e21 = 0;
    rescale.e22 = 1;

    MonomialTwoForm expected;
    expected.coeff = CyclotomicScalar::one();
    expected.a = Int(-r);
    expected.b = Int(m1);
    expected.weight = r;
    expected.var1 = "f1";
    expected.var2 = "u1";

    return pullback(signed_form, rescale) == expected;
}

nlohmann::json form_to_json(const MonomialTwoForm& f) {
    nlohmann::json j;
    j["coeff"] = scalar_to_json(f.coeff);
    if (!f.a.fits_slong_p() || !f.b.fits_slong_p())
        throw BadParams("form json: exponent out of 64-bit range");
    j["a"] = f.a.get_si();
    j["b"] = f.b.get_si();
    j["r"] = f.weight;
    j["vars"] = {f.var1, f.var2};
    return j;
}

MonomialTwoForm form_from_json(const nlohmann::json& j) {
    try {
        MonomialTwoForm f;
        f.coeff = scalar_from_json(j.at("coeff"));
        f.a = Int(j.at("a").get<long>());
        f.b = Int(j.at("b").get<long>());
        f.weight = j.at("r").get<long>();
        if (f.weight < 1) throw ParseError("form json: weight must be >= 1");
        const auto& vars = j.at("vars");
        if (!vars.is_array() || vars.size() != 2)
            throw ParseError("form json: \"vars\" must list two variable names");
        f.var1 = vars[0].get<std::string>();
        f.var2 = vars[1].get<std::string>();
        return f;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("form json: ") + ex.what());
    }
}

} // namespace plumbcert
