#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "plumbcert/classify.hpp"
#include "plumbcert/forms.hpp"
#include "plumbcert/graph.hpp"

namespace plumbcert {

/*
 * A plumbing certificate packages, as checkable data, a holomorphic model
 * of the singularity with the given dual graph: one line bundle per vertex
 * carrying a meromorphic 2-form of weight r in a fixed monomial normal
 * form, and one pair of gluing scalars per edge.
 *
 * Conventions (r = topological index, k_i = discrepancies):
 *
 *   - At each intersection point of curves i and j, chart i has coordinates
 *     (f_i, q_i) with f_i = 0 cutting the curve, and the form restricted to
 *     that chart is
 *
 *         alpha_i = f_i^{r k_i} q_i^{r k_j} (df_i ^ dq_i)^r .
 *
 *   - Plumbing identifies the charts by the coordinate swap
 *
 *         q_i = lambda_ij f_j ,   q_j = lambda_ji f_i ,
 *
 *     and the forms glue exactly when
 *
 *         lambda_ij^{r(k_j+1)} = (-1)^r lambda_ji^{r(k_i+1)} .
 *
 *   - A vertex with k_i != -1 carries a bundle of degree -e_i obtained as an
 *     m-th root, m = r(k_i + 1), twisted by the divisor with multiplicity
 *     r k_j at each intersection point with curve j; exactness of
 *     (r(2g_i - 2) - deg D) / m = -e_i is part of the certificate.
 *
 *   - A vertex with k_i = -1 (rational, valency 1 or 2) instead carries the
 *     rational-curve model with pole orders (m_1, m_2), m_1 + m_2 = -2r and
 *     m_l != -r, at two marked points; at valency 1 the second point is
 *     free (recorded with neighbor id -1) and m_2 = 0.
 *
 * verify_certificate replays every identity above symbolically from the
 * serialized data and records one transcript line per check; it never
 * throws. The final contraction of the plumbed divisor to a singular point
 * is Grauert's theorem and enters the transcript as a citation, not a
 * computation.
 */

enum class VertexCase { Generic, MinusOneValencyOne, MinusOneValencyTwo };

std::string vertex_case_str(VertexCase c);
VertexCase vertex_case_from_str(const std::string& s);

/// One entry of the twisting divisor: multiplicity at the point indexed
/// `point` on the intersection with `neighbor` (-1 = free marked point).
struct DivisorEntry {
    int neighbor = 0;
    int point = 0;
    Int multiplicity = 0;

    bool operator==(const DivisorEntry&) const = default;
};

/// Exponents of the normal form at one intersection point.
struct NormalFormEntry {
    int neighbor = 0;
    int point = 0;
    Int f_exp = 0; // exponent of the curve coordinate (= r k_i)
    Int q_exp = 0; // exponent of the base coordinate (= r k_j)

    bool operator==(const NormalFormEntry&) const = default;
};

struct VertexBundleData {
    int id = 0;
    VertexCase kind = VertexCase::Generic;
    Int degree = 0; // bundle degree, must equal -e_i
    Int m = 0;      // r(k_i + 1); nonzero exactly in the Generic case
    std::vector<DivisorEntry> divisor;
    std::vector<NormalFormEntry> normal_forms;

    bool operator==(const VertexBundleData&) const = default;
};

/// Gluing scalars for one (multi-)edge; all parallel intersection points of
/// the pair share the same pair of scalars.
struct EdgeGluing {
    int a = 0;
    int b = 0;
    CyclotomicScalar lambda_ab; // scales: q_a = lambda_ab * f_b
    CyclotomicScalar lambda_ba; // scales: q_b = lambda_ba * f_a

    bool operator==(const EdgeGluing&) const = default;
};

struct TranscriptEntry {
    std::string check;
    bool pass = true;
};

struct PlumbingCertificate {
    WeightedDualGraph graph;
    Int weight = 1; // r
    std::vector<VertexBundleData> vertices;
    std::vector<EdgeGluing> edges;
    std::vector<TranscriptEntry> transcript;
};

enum class BypassReason { Kleinian, Cusp, SimpleElliptic, LogCanonical };

std::string bypass_reason_str(BypassReason r);

/// Terminal failure diagnostics; `kind` is one of NotNegativeDefinite,
/// Disconnected, NotMinimal, AdjacentMinusOnes, MinusOneOutOfScope,
/// VerificationFailed.
struct CertifyFailure {
    std::string kind;
    std::string message;
};

using CertifyOutcome = std::variant<PlumbingCertificate, BypassReason, CertifyFailure>;

/// Solves the per-edge gluing system: each edge is oriented toward an
/// endpoint j with k_j != -1 (toward the smaller id when both qualify),
/// lambda_ji = 1 and lambda_ij is the canonical solution of
/// x^{r(k_j+1)} = (-1)^r. Throws AdjacentMinusOnes when an edge joins two
/// k = -1 vertices.
std::vector<EdgeGluing> solve_gluing(const WeightedDualGraph& g, const CanonicalCycle& z,
                                     const Int& r);

/// Runs the full construction. Returns:
///   - ClassificationBypass for Kleinian / cusp / simple elliptic graphs
///     (Gorenstein as they stand), and for log canonical graphs whose
///     k = -1 vertices fall outside the two rational-curve models (those
///     carry their topological index as genuine index already);
///   - Failure on precondition violations and on the structural
///     obstructions (AdjacentMinusOnes, MinusOneOutOfScope) for
///     non-log-canonical input;
///   - otherwise a PlumbingCertificate whose transcript is all-pass.
CertifyOutcome build_certificate(const WeightedDualGraph& g, const CanonicalCycle& z);

/// Independent re-verification of a certificate (including one parsed back
/// from JSON): recomputes the canonical cycle from the embedded graph and
/// replays the degree, divisor, normal-form, transition and gluing checks.
std::vector<TranscriptEntry> verify_certificate(const PlumbingCertificate& cert);

bool all_pass(const std::vector<TranscriptEntry>& transcript);

nlohmann::json certificate_to_json(const PlumbingCertificate& cert);
PlumbingCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json outcome_to_json(const CertifyOutcome& outcome);

} // namespace plumbcert
