#include "plumbcert/report.hpp"

#include <nlohmann/json.hpp>

#include "plumbcert/certificate.hpp"
#include "plumbcert/classify.hpp"

namespace plumbcert {

nlohmann::json analyze_graph(const WeightedDualGraph& g) {
    nlohmann::json rep;
    rep["graph"] = graph_to_json(g);
    rep["connected"] = g.connected();
    rep["negative_definite"] = is_negative_definite_minors(intersection_matrix(g));
    if (!rep["connected"].get<bool>() || !rep["negative_definite"].get<bool>()) return rep;

    const CanonicalCycle z = canonical_cycle(g);
    nlohmann::json disc = nlohmann::json::object();
    for (const auto& [id, k] : z.discrepancies) disc[std::to_string(id)] = k.str();
    rep["discrepancies"] = std::move(disc);
    if (!z.topological_index.fits_slong_p())
        throw BadParams("report: topological index out of 64-bit range");
    rep["topological_index"] = z.topological_index.get_si();

    rep["classification"] = classification_to_json(classify(g, z));
    rep["veys"] = veys_report_to_json(verify_veys(g, z));
    rep["corollaries"] = veys_report_to_json(verify_corollaries(g, z));

    const CertifyOutcome outcome = build_certificate(g, z);
    nlohmann::json summary;
    if (const auto* cert = std::get_if<PlumbingCertificate>(&outcome)) {
        summary["outcome"] = "certificate";
        summary["r"] = cert->weight.get_si();
        summary["checks"] = cert->transcript.size();
        summary["all_pass"] = all_pass(cert->transcript);
    } else if (const auto* reason = std::get_if<BypassReason>(&outcome)) {
        summary["outcome"] = "bypass";
        summary["reason"] = bypass_reason_str(*reason);
    } else {
        const auto& failure = std::get<CertifyFailure>(outcome);
        summary["outcome"] = "failure";
        summary["kind"] = failure.kind;
        summary["message"] = failure.message;
    }
    rep["certify"] = std::move(summary);
    return rep;
}

} // namespace plumbcert
