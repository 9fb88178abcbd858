#include "extremal/io.hpp"

#include <cstdio>
#include <sstream>

namespace extremal {

json polynomial_to_json(const IntPolynomial& p, const std::string& variable)
{
    json coeffs = json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(c.get_str());
    return {{"variable", variable}, {"coeffs", coeffs}};
}

IntPolynomial polynomial_from_json(const json& j)
{
    std::vector<mpz_class> c;
    for (const auto& v : j.at("coeffs")) {
        mpz_class value;
        if (value.set_str(v.get<std::string>(), 10) != 0)
            throw std::invalid_argument("polynomial_from_json: bad coefficient '" + v.get<std::string>() + "'");
        c.push_back(value);
    }
    return IntPolynomial(std::move(c));
}

json spectrum_to_json(const Spectrum& s)
{
    json j;
    j["m"] = s.params ? json(s.params->m) : json(nullptr);
    j["d"] = s.params ? json(s.params->d) : json(nullptr);
    j["solver"] = s.solver;
    j["tol"] = s.tol;
    j["values"] = s.values;
    return j;
}

Spectrum spectrum_from_json(const json& j)
{
    Spectrum s;
    s.values = j.at("values").get<std::vector<double>>();
    s.tol = j.at("tol").get<double>();
    s.solver = j.at("solver").get<std::string>();
    if (!j.at("m").is_null())
        s.params = FamilyParams{j.at("m").get<int>(), j.at("d").get<int>()};
    return s;
}

json partition_to_json(const Partition& p) { return p.parts; }

json certificate_to_json(const PartitionCertificate& c)
{
    return {{"parts", partition_to_json(c.partition)},
            {"k", c.k},
            {"crossing", c.crossing},
            {"required", c.required},
            {"deficit", c.deficit}};
}

json packing_to_json(const ForestPacking& p)
{
    json trees = json::array();
    for (const auto& tree : p.trees) {
        json edges = json::array();
        for (const Edge& e : tree)
            edges.push_back({e.u, e.v});
        trees.push_back(edges);
    }
    return {{"trees", trees}};
}

ForestPacking packing_from_json(const json& j)
{
    ForestPacking p;
    for (const auto& tree : j.at("trees")) {
        std::vector<Edge> edges;
        for (const auto& e : tree)
            edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        p.trees.push_back(std::move(edges));
    }
    return p;
}

json rigidity_certificate_to_json(const RigidityCertificate& c)
{
    return {{"r", c.r},
            {"ell", c.ell},
            {"parts", partition_to_json(c.partition)},
            {"trivial_parts", c.trivial_count},
            {"crossing", c.crossing},
            {"required", c.required},
            {"deficit", c.deficit}};
}

json rigidity_report_to_json(const Mu2Report& window, const RigidityCertificate& certificate,
                             const RigidityHypothesesReport& hypotheses)
{
    json j;
    j["r"] = window.r;
    j["d"] = window.d;
    j["mu2"] = window.mu2;
    j["window"] = {window.lower, window.upper};
    j["in_window"] = window.in_window;
    j["certificate"] = rigidity_certificate_to_json(certificate);
    json cond;
    cond["condition1_threshold"] = hypotheses.condition1_threshold;
    cond["condition1_holds"] = hypotheses.condition1_holds;
    cond["lower_threshold"] = hypotheses.lower_threshold;
    cond["holds_at_lower_threshold"] = hypotheses.holds_at_lower_threshold;
    if (hypotheses.condition2_holds) {
        cond["condition2_holds"] = *hypotheses.condition2_holds;
        cond["condition2_min_margin"] = *hypotheses.condition2_min_margin;
        cond["condition3_holds"] = *hypotheses.condition3_holds;
        cond["condition3_min_margin"] = *hypotheses.condition3_min_margin;
    }
    j["spectral_conditions"] = cond;
    j["failures"] = window.failures;
    return j;
}

json theorem11_to_json(const Theorem11Report& r)
{
    json factors = json::array();
    for (const FactorCheck& f : r.factors)
        factors.push_back({{"n", f.n},
                           {"z0_bound", f.z0_bound},
                           {"max_root", f.max_root},
                           {"graeffe_ok", f.graeffe_ok},
                           {"upper_ok", f.upper_ok}});
    return {{"m", r.m},
            {"d", r.d},
            {"lambda2", r.lambda2},
            {"window", {r.window_lower, r.window_upper}},
            {"lambda2_ok", r.lambda2_ok},
            {"factor_consistency", r.factor_consistency},
            {"factors", factors},
            {"failures", r.failures}};
}

json identity_report_to_json(const IdentityReport& r)
{
    json by_identity = json::object();
    for (const auto& [name, dev] : r.max_deviation_by_identity)
        by_identity[name] = dev;
    return {{"seed", r.seed},
            {"tol", r.tol},
            {"evaluations", r.evaluations},
            {"resampled", r.resampled},
            {"max_deviation", r.max_deviation},
            {"max_deviation_by_identity", by_identity},
            {"failures", r.failures}};
}

std::string graeffe_csv(const std::vector<GraeffeRow>& rows)
{
    std::ostringstream out;
    out << graeffe_csv_header << '\n';
    auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; };
    char buf[64];
    for (const GraeffeRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%.17g", row.z0_bound);
        out << row.m << ',' << row.d << ',' << row.n << ',' << buf << ',';
        if (row.max_root) {
            std::snprintf(buf, sizeof buf, "%.17g", *row.max_root);
            out << buf;
        }
        out << ',' << flag(row.lemma10_ok) << ',' << flag(row.theorem11_ok) << '\n';
    }
    return out.str();
}

} // namespace extremal
