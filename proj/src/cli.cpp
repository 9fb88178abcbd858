#include "extremal/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "extremal/chebpoly.hpp"
#include "extremal/errors.hpp"

#ifndef EXTREMAL_VERSION
#define EXTREMAL_VERSION "0.0.0"
#endif

namespace extremal {

namespace {

constexpr double spectra_tol = 1e-8;
constexpr double identity_tol = 1e-10;
constexpr int identity_trials = 100;

int parse_int(std::string_view text)
{
    int value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw usage_error("not an integer: '" + std::string(text) + "'");
    return value;
}

json error_result(const std::exception& e)
{
    return {{"ok", false}, {"error", e.what()}};
}

json check_construction(int m, int d)
{
    const Graph g = build_extremal_graph(m, d);
    const FamilyParams p{m, d};
    const auto deg = degrees(g);
    const bool regular = std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
    const bool connected = is_connected(g);
    const long n = static_cast<long>(p.vertex_count());
    const bool vertices_ok = g.vertex_count() == n;
    const bool edges_ok = static_cast<long>(g.edge_count()) == n * d / 2;

    const int cliques = p.clique_count();
    std::vector<int> between(static_cast<std::size_t>(cliques * cliques), 0);
    for (const Edge& e : g.edges()) {
        const int a = vertex_of(p, e.u).clique, b = vertex_of(p, e.v).clique;
        if (a != b) {
            ++between[static_cast<std::size_t>(a * cliques + b)];
            ++between[static_cast<std::size_t>(b * cliques + a)];
        }
    }
    bool single = true;
    for (int a = 0; a < cliques; ++a)
        for (int b = 0; b < cliques; ++b)
            if (a != b && between[static_cast<std::size_t>(a * cliques + b)] != 1)
                single = false;

    return {{"ok", regular && connected && vertices_ok && edges_ok && single},
            {"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"regular", regular},
            {"connected", connected},
            {"one_edge_between_cliques", single}};
}

json check_lambda2(int m, int d)
{
    const Spectrum s = eigenvalues_block_circulant(m, d);
    const EigenvalueWindow w = lambda2_window(m, d);
    const double l2 = s[1];
    const bool ok = l2 >= w.lower - theorem_slack && l2 < w.upper + theorem_slack;
    return {{"ok", ok}, {"lambda2", l2}, {"window", {w.lower, w.upper}}};
}

json check_spectra(int m, int d)
{
    const double diff =
        max_abs_difference(eigenvalues_dense(build_extremal_graph(m, d)), eigenvalues_block_circulant(m, d));
    return {{"ok", diff < spectra_tol}, {"max_abs_difference", diff}};
}

json check_charpoly(int m, int d)
{
    const IntPolynomial exact = char_poly_exact(m, d);
    json j;
    const bool shape = exact.is_monic() && exact.degree() == (2 * m + 1) * (d + 1);
    j["degree"] = exact.degree();
    if ((2 * m + 1) * (d + 1) > verify_oracle_max_vertices) {
        j["ok"] = shape;
        j["oracle"] = "skipped: above size guard";
        return j;
    }
    const bool equal = exact == char_poly_oracle(build_extremal_graph(m, d));
    j["ok"] = shape && equal;
    j["oracle"] = equal ? "equal" : "different";
    return j;
}

json check_graeffe(int m, int d)
{
    json j;
    bool ok = true;

    json coeffs = json::array();
    double previous = -1.0;
    bool monotone = true;
    for (int n : divisors(2 * m + 1)) {
        if (n == 1)
            continue;
        const bool match = fn_leading_coeffs(n, m, d) == leading_coeffs(fn_monic(n, m, d));
        coeffs.push_back({{"n", n}, {"closed_form_matches", match}});
        ok = ok && match;
        const double z0 = z0_bound(n, m, d);
        monotone = monotone && z0 > previous;
        previous = z0;
    }
    j["leading_coefficients"] = coeffs;
    j["z0_monotone_in_n"] = monotone;
    ok = ok && monotone;

    const Theorem11Report t = verify_theorem11(m, d);
    j["theorem11"] = theorem11_to_json(t);
    ok = ok && t.ok();
    j["ok"] = ok;
    return j;
}

json check_lemma10_item(int m, int d)
{
    if (m < 2)
        return {{"ok", true}, {"applicable", false}};
    const bool holds = check_lemma10(m, d);
    // the largest factor index is the binding one
    const double top = 2.0 * z0_bound(2 * m + 1, m, d) - 1.0;
    return {{"ok", holds},
            {"applicable", true},
            {"margin", lemma10_margin(m, d)},
            {"two_z0_minus_one", top},
            {"upper", static_cast<double>(d) - static_cast<double>(2 * m + 1) / (d + 3)}};
}

json check_packing(int m, int d)
{
    const Graph g = build_extremal_graph(m, d);
    const PartitionCertificate cert = clique_certificate(m, d);
    const PackingResult at_m = pack_spanning_trees(g, m);
    const PackingResult above = pack_spanning_trees(g, m + 1);

    const bool packed = at_m.success() && check_forest_packing(g, *at_m.packing).empty() &&
                        at_m.packing->trees.size() == static_cast<std::size_t>(m);
    bool blocked = !above.success() && above.witness && above.witness->certifies_fewer_than_k();
    if (blocked) {
        const PartitionCertificate again = verify_nash_williams(g, above.witness->partition, m + 1);
        blocked = again.deficit == above.witness->deficit;
    }
    const bool cert_ok = cert.deficit == m;
    json j = {{"ok", packed && blocked && cert_ok},
              {"trees_packed", packed ? m : 0},
              {"blocked_at", m + 1},
              {"blocking_partition_verified", blocked},
              {"clique_certificate", certificate_to_json(cert)}};
    if (above.witness)
        j["witness_deficit"] = above.witness->deficit;
    return j;
}

json check_rigidity_item(int m, int d)
{
    if ((m + 1) % 3 != 0)
        return {{"ok", true}, {"applicable", false}};
    const int r = (m + 1) / 3;
    const RigidityCertificate cert = rigidity_certificate(r, d);
    const Mu2Report window = mu2_window(r, d);
    const RigidityHypothesesReport h = check_spectral_rigidity_hypotheses(r, d);
    const bool cert_ok = cert.deficit == 3 * r - 1 && cert.crossing == (3L * r - 1) * (6L * r - 1);
    json j = rigidity_report_to_json(window, cert, h);
    j["ok"] = cert_ok && window.ok() && h.tightness_demonstrated();
    j["applicable"] = true;
    return j;
}

json tolerances_json()
{
    return {{"solver", default_solver_tol},
            {"theorem_slack", theorem_slack},
            {"spectra", spectra_tol},
            {"factor_consistency", factor_consistency_tol},
            {"identities", identity_tol},
            {"real_root", real_root_tol}};
}

std::vector<GraeffeRow> graeffe_rows_for(int m, int d)
{
    std::vector<GraeffeRow> rows;
    for (int n : divisors(2 * m + 1)) {
        if (n == 1)
            continue;
        GraeffeRow row;
        row.m = m;
        row.d = d;
        row.n = n;
        row.z0_bound = z0_bound(n, m, d);
        rows.push_back(row);
    }
    return rows;
}

} // namespace

std::pair<int, int> parse_int_range(std::string_view text)
{
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const int v = parse_int(text);
        return {v, v};
    }
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (lo > hi)
        throw usage_error("empty range '" + std::string(text) + "'");
    return {lo, hi};
}

std::set<std::string> parse_checks(std::string_view text)
{
    if (text == "all")
        return {all_checks.begin(), all_checks.end()};
    std::set<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = std::min(text.find(',', start), text.size());
        const std::string name(text.substr(start, comma - start));
        if (std::find(all_checks.begin(), all_checks.end(), name) == all_checks.end())
            throw usage_error("unknown check '" + name + "'");
        out.insert(name);
        start = comma + 1;
    }
    return out;
}

std::vector<std::pair<int, int>> sweep_items(const SweepSpec& spec)
{
    if (spec.m_range.first < 1)
        throw usage_error("m must be >= 1");
    std::vector<std::pair<int, int>> items;
    for (int m = spec.m_range.first; m <= spec.m_range.second; ++m) {
        const int lo = spec.d_range ? std::max(spec.d_range->first, 2 * m + 2) : 2 * m + 2;
        const int hi = spec.d_range ? spec.d_range->second : 2 * m + 8;
        for (int d = lo; d <= hi; ++d)
            items.emplace_back(m, d);
    }
    if (items.empty())
        throw usage_error("sweep has no (m, d) with d >= 2m+2");
    return items;
}

json verify_item(int m, int d, const std::set<std::string>& checks)
{
    json results = json::object();
    auto run = [&](const std::string& name, auto&& fn) {
        if (!checks.contains(name))
            return;
        try {
            results[name] = fn();
        } catch (const std::exception& e) {
            results[name] = error_result(e);
        }
    };
    run("construction", [&] { return check_construction(m, d); });
    run("lambda2", [&] { return check_lambda2(m, d); });
    run("spectra", [&] { return check_spectra(m, d); });
    run("charpoly", [&] { return check_charpoly(m, d); });
    run("graeffe", [&] { return check_graeffe(m, d); });
    run("lemma10", [&] { return check_lemma10_item(m, d); });
    run("packing", [&] { return check_packing(m, d); });
    run("rigidity", [&] { return check_rigidity_item(m, d); });
    return results;
}

SweepResult run_sweep(const SweepSpec& spec)
{
    const auto items = sweep_items(spec);
    const bool want_rows = spec.checks.contains("graeffe") || spec.checks.contains("lemma10");

    std::vector<json> results(items.size());
    std::vector<std::vector<GraeffeRow>> rows(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            const auto [m, d] = items[i];
            std::set<std::string> per_item = spec.checks;
            per_item.erase("identities");
            if (want_rows)
                rows[i] = graeffe_rows_for(m, d);
            results[i] = verify_item(m, d, per_item);
            if (want_rows) {
                for (GraeffeRow& row : rows[i]) {
                    const json& r = results[i];
                    if (r.contains("lemma10") && r["lemma10"].value("applicable", false))
                        row.lemma10_ok = r["lemma10"]["ok"].get<bool>();
                    if (r.contains("graeffe") && r["graeffe"].contains("theorem11")) {
                        const json& t = r["graeffe"]["theorem11"];
                        for (const json& f : t["factors"])
                            if (f["n"].get<int>() == row.n) {
                                row.max_root = f["max_root"].get<double>();
                                row.theorem11_ok =
                                    f["graeffe_ok"].get<bool>() && f["upper_ok"].get<bool>() && t["lambda2_ok"].get<bool>();
                            }
                    }
                }
            }
        }
    };
    unsigned threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads) : std::thread::hardware_concurrency();
    threads = std::clamp(threads, 1u, static_cast<unsigned>(items.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    SweepResult out;
    std::vector<std::string> failures;
    json item_array = json::array();
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto [m, d] = items[i];
        for (const auto& [name, r] : results[i].items())
            if (!r["ok"].get<bool>())
                failures.push_back("m=" + std::to_string(m) + " d=" + std::to_string(d) + ": " + name +
                                   (r.contains("error") ? " (" + r["error"].get<std::string>() + ")" : ""));
        item_array.push_back({{"m", m}, {"d", d}, {"results", results[i]}});
        for (GraeffeRow& row : rows[i])
            out.graeffe_rows.push_back(row);
    }

    json identities = json::array();
    json linear_algebra = nullptr;
    if (spec.checks.contains("identities")) {
        std::set<int> ms;
        for (const auto& [m, d] : items)
            ms.insert(m);
        for (int m : ms) {
            const IdentityReport r = verify_root_of_unity_identities(m, identity_trials, identity_tol, spec.seed);
            json j = identity_report_to_json(r);
            j["m"] = m;
            identities.push_back(j);
            for (const std::string& f : r.failures)
                failures.push_back("identities m=" + std::to_string(m) + ": " + f);
        }
        const IdentityReport la = verify_linear_algebra_lemmas(identity_trials, identity_tol, spec.seed);
        linear_algebra = identity_report_to_json(la);
        for (const std::string& f : la.failures)
            failures.push_back("linear algebra: " + f);
    }

    json checks = json::array();
    for (const std::string& c : all_checks)
        if (spec.checks.contains(c))
            checks.push_back(c);

    out.ok = failures.empty();
    out.report = {{"tool", "extremal"},
                  {"version", EXTREMAL_VERSION},
                  {"seed", spec.seed},
                  {"tolerances", tolerances_json()},
                  {"checks", checks},
                  {"items", item_array},
                  {"identities", identities},
                  {"linear_algebra", linear_algebra},
                  {"failures", failures},
                  {"ok", out.ok}};
    return out;
}

namespace {

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw usage_error("cannot open '" + path + "' for writing");
    file << text;
}

} // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Extremal graph family: construction, spectra and verification sweeps", "extremal"};
    app.require_subcommand(1);
    app.set_version_flag("--version", EXTREMAL_VERSION);

    int m = 0, d = 0;
    std::string out_path;
    std::string export_format, report_format;

    auto* build = app.add_subcommand("build", "Export the extremal graph");
    build->add_option("m", m)->required();
    build->add_option("d", d)->required();
    build->add_option("--format", export_format, "edgelist or dot")->default_val("edgelist");
    build->add_option("--out", out_path);

    std::string method = "blocks";
    auto* spectrum = app.add_subcommand("spectrum", "Adjacency spectrum as JSON");
    spectrum->add_option("m", m)->required();
    spectrum->add_option("d", d)->required();
    spectrum->add_option("--method", method)->check(CLI::IsMember({"dense", "blocks"}))->default_val("blocks");
    spectrum->add_option("--out", out_path);

    bool exact = false, use_oracle = false;
    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial as JSON");
    charpoly->add_option("m", m)->required();
    charpoly->add_option("d", d)->required();
    auto* exact_flag = charpoly->add_flag("--exact", exact, "closed form (default)");
    charpoly->add_flag("--oracle", use_oracle, "exact-arithmetic expansion of det(xI - A)")->excludes(exact_flag);
    charpoly->add_option("--out", out_path);

    std::string m_text, d_text = "auto", checks_text = "all";
    std::uint64_t seed = 0;
    int threads = 0;
    auto* verify = app.add_subcommand("verify", "Run verification checks over a parameter sweep");
    verify->add_option("--m", m_text, "a..b or a")->required();
    verify->add_option("--d", d_text, "a..b, a or auto (2m+2..2m+8)")->default_val("auto");
    verify->add_option("--checks", checks_text, "all or a comma-separated list")->default_val("all");
    verify->add_option("--seed", seed)->default_val(0);
    verify->add_option("--threads", threads)->default_val(0);
    verify->add_option("--format", report_format)->check(CLI::IsMember({"json", "csv"}))->default_val("json");
    verify->add_option("--out", out_path);

    std::optional<int> k;
    auto* pack = app.add_subcommand("pack", "Edge-disjoint spanning trees or a blocking partition");
    pack->add_option("m", m)->required();
    pack->add_option("d", d)->required();
    pack->add_option("--k", k, "number of trees (default: m and m+1)");
    pack->add_option("--out", out_path);

    int r = 0;
    bool vertex_deleted = false;
    auto* rigidity = app.add_subcommand("rigidity", "Rigidity certificate and mu2 window");
    rigidity->add_option("r", r)->required();
    rigidity->add_option("d", d)->required();
    rigidity->add_flag("--vertex-deleted", vertex_deleted, "also evaluate the vertex-deleted conditions");
    rigidity->add_option("--out", out_path);

    std::vector<const char*> raw;
    for (const std::string& a : argv)
        raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*build) {
            const ExportFormat f = parse_export_format(export_format);
            write_output(out_path, export_graph(build_extremal_graph(m, d), f), out);
            return exit_pass;
        }
        if (*spectrum) {
            const Spectrum s =
                method == "dense" ? eigenvalues_dense(build_extremal_graph(m, d)) : eigenvalues_block_circulant(m, d);
            write_output(out_path, spectrum_to_json(s).dump(2) + "\n", out);
            return exit_pass;
        }
        if (*charpoly) {
            const IntPolynomial p =
                use_oracle ? char_poly_oracle(build_extremal_graph(m, d)) : char_poly_exact(m, d);
            write_output(out_path, polynomial_to_json(p, "x").dump(2) + "\n", out);
            return exit_pass;
        }
        if (*verify) {
            SweepSpec spec;
            spec.m_range = parse_int_range(m_text);
            if (d_text != "auto")
                spec.d_range = parse_int_range(d_text);
            spec.checks = parse_checks(checks_text);
            spec.seed = seed;
            spec.threads = threads;
            const SweepResult result = run_sweep(spec);
            write_output(out_path,
                         report_format == "csv" ? graeffe_csv(result.graeffe_rows) : result.report.dump(2) + "\n", out);
            if (!result.ok)
                for (const json& f : result.report["failures"])
                    err << "FAIL " << f.get<std::string>() << '\n';
            return result.ok ? exit_pass : exit_check_failure;
        }
        if (*pack) {
            const Graph g = build_extremal_graph(m, d);
            json j = {{"m", m}, {"d", d}};
            bool ok = true;
            auto describe = [&](const PackingResult& res, int kk) {
                json e = {{"k", kk}, {"success", res.success()}};
                if (res.packing)
                    e["packing"] = packing_to_json(*res.packing);
                if (res.witness)
                    e["witness"] = certificate_to_json(*res.witness);
                return e;
            };
            if (k) {
                if (*k < 1)
                    throw usage_error("--k must be >= 1");
                j["result"] = describe(pack_spanning_trees(g, *k), *k);
            } else {
                const PackingResult at_m = pack_spanning_trees(g, m);
                const PackingResult above = pack_spanning_trees(g, m + 1);
                ok = at_m.success() && check_forest_packing(g, *at_m.packing).empty() && !above.success() &&
                     above.witness && above.witness->certifies_fewer_than_k();
                j["sigma_equals_m"] = ok;
                j["at_m"] = describe(at_m, m);
                j["at_m_plus_1"] = describe(above, m + 1);
                j["clique_certificate"] = certificate_to_json(clique_certificate(m, d));
            }
            write_output(out_path, j.dump(2) + "\n", out);
            return ok ? exit_pass : exit_check_failure;
        }
        if (*rigidity) {
            const RigidityCertificate cert = rigidity_certificate(r, d);
            const Mu2Report window = mu2_window(r, d);
            const RigidityHypothesesReport h = check_spectral_rigidity_hypotheses(r, d, theorem_slack, vertex_deleted);
            json j = rigidity_report_to_json(window, cert, h);
            const bool ok = cert.deficit == 3 * r - 1 && window.ok() && h.tightness_demonstrated();
            j["ok"] = ok;
            write_output(out_path, j.dump(2) + "\n", out);
            return ok ? exit_pass : exit_check_failure;
        }
    } catch (const parameter_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "check failed: " << e.what() << '\n';
        return exit_check_failure;
    }
    return exit_usage;
}

} // namespace extremal
