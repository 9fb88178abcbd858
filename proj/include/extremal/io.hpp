#ifndef EXTREMAL_IO_HPP
#define EXTREMAL_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "extremal/graeffe.hpp"
#include "extremal/identities.hpp"
#include "extremal/packing.hpp"
#include "extremal/polynomial.hpp"
#include "extremal/rigidity.hpp"
#include "extremal/spectral.hpp"

namespace extremal {

using json = nlohmann::ordered_json;

/// {variable, coeffs: [decimal strings, ascending]}
json polynomial_to_json(const IntPolynomial& p, const std::string& variable = "x");
IntPolynomial polynomial_from_json(const json& j);

/// {m, d, solver, tol, values: [...]}; m and d are null for graphs outside the family.
json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const json& j);

json partition_to_json(const Partition& p);
json certificate_to_json(const PartitionCertificate& c);
/// {trees: [[[u, v], ...], ...]}
json packing_to_json(const ForestPacking& p);
ForestPacking packing_from_json(const json& j);

json rigidity_certificate_to_json(const RigidityCertificate& c);
/// {r, d, mu2, window: [lo, hi], certificate: {...}, ...}
json rigidity_report_to_json(const Mu2Report& window, const RigidityCertificate& certificate,
                             const RigidityHypothesesReport& hypotheses);

json theorem11_to_json(const Theorem11Report& r);
json identity_report_to_json(const IdentityReport& r);

/// One row of the Graeffe sweep CSV.
struct GraeffeRow
{
    int m = 0;
    int d = 0;
    int n = 0;
    double z0_bound = 0.0;
    std::optional<double> max_root;
    std::optional<bool> lemma10_ok;
    std::optional<bool> theorem11_ok;
};

inline constexpr const char* graeffe_csv_header = "m,d,n,z0_bound,max_root,lemma10_ok,theorem11_ok";

/// Header plus one line per row; absent optionals are written as empty fields.
std::string graeffe_csv(const std::vector<GraeffeRow>& rows);

} // namespace extremal

#endif
