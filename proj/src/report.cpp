#include "signtope/report.hpp"

#include <chrono>
#include <ctime>
#include <functional>
#include <iomanip>
#include <sstream>

#include "signtope/error.hpp"
#include "signtope/signcomplex.hpp"
#include "signtope/version.hpp"

namespace signtope {

bool InvariantReport::chain_holds() const {
    for (const auto& c : checks)
        if (!c.holds) return false;
    return true;
}

std::optional<std::size_t> InvariantReport::srank_ub() const {
    if (!srank_witness) return std::nullopt;
    return srank_witness->d;
}

namespace {

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

// Runs one component, turning cap errors into an "unavailable" entry.
void component(InvariantReport& r, const ReportOptions& opts, const std::string& name,
               const std::function<void()>& f) {
    if (opts.skip.count(name)) {
        r.unavailable[name] = "skipped on request";
        return;
    }
    try {
        f();
    } catch (const CapExceeded& e) {
        r.unavailable[name] = e.what();
    }
}

}  // namespace

const std::vector<std::string>& report_component_names() {
    static const std::vector<std::string> names{"vc", "omega_diamond", "coind_lb", "swh", "h", "phi_image_dimension",
                                                "srank_search"};
    return names;
}

InvariantReport invariant_report(const PartialSignMatrix& a, const std::string& instance, const ReportOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    InvariantReport r;
    r.instance = instance;
    r.rows = a.rows();
    r.cols = a.cols();
    r.specified = a.specified_count();
    r.started_at = utc_now();

    const Z2Complex s = sign_complex(a);
    r.complex_dimension = s.dimension();

    component(r, opts, "vc", [&] { r.vc = vc_dimension(a, opts.shatter); });
    component(r, opts, "omega_diamond", [&] { r.omega = omega_diamond(a, opts.shatter); });
    component(r, opts, "coind_lb", [&] { r.coind = coind_lower(s, opts.faces, opts.shatter); });
    if (r.coind && !r.coind->homological_connectivity)
        r.unavailable["homological_connectivity"] = "face cap reached";
    component(r, opts, "swh", [&] { r.swh = stiefel_whitney_height(s, opts.faces); });
    component(r, opts, "h", [&] { r.h = chain_height(a, opts.closure); });
    component(r, opts, "phi_image_dimension", [&] { r.phi_dimension = phi_image_dimension(a, opts.closure); });
    r.facet_bound = facet_intersection_index_bound(s);

    // Sign-rank witness: caller-supplied, then search below it.
    std::optional<Realization> best;
    if (opts.known_realization) {
        if (!verify_realization(a, *opts.known_realization).ok)
            throw InvalidInput("supplied realization does not verify");
        best = opts.known_realization;
        r.srank_source = opts.known_realization_source.empty() ? "supplied" : opts.known_realization_source;
    }
    if (opts.skip.count("srank_search")) {
        r.unavailable["srank_search"] = "skipped on request";
    } else if (opts.search && a.cols() <= opts.search_max_cols) {
        SrankSearchOptions so;
        so.seed = opts.seed;
        so.iters = opts.search_iters;
        so.restarts = opts.search_restarts;
        so.d_min = r.vc ? std::max<std::size_t>(1, *r.vc) : 1;
        so.d_max = best ? best->d - 1 : a.cols();
        if (so.d_max >= so.d_min) {
            if (auto found = srank_upper_search(a, so)) {
                best = std::move(found);
                r.srank_source = best->d == a.cols() ? "standard-basis" : "search";
            }
        }
    } else if (opts.search) {
        r.unavailable["srank_search"] = "matrix wider than the search cap";
    }
    if (!best) {
        best = trivial_realization(a);
        r.srank_source = "standard-basis";
    }
    r.srank_witness = std::move(best);

    if (r.h) r.ind_upper_candidates.push_back({static_cast<long>(2 * *r.h - 1), "2h-1"});
    r.ind_upper_candidates.push_back({static_cast<long>(*r.complex_dimension), "dimension"});
    if (r.facet_bound) r.ind_upper_candidates.push_back({static_cast<long>(*r.facet_bound), "incidence-graph"});
    r.ind_upper_candidates.push_back({static_cast<long>(r.srank_witness->d) - 1, "srank-1"});
    for (const auto& c : r.ind_upper_candidates)
        if (!r.ind_ub || c.value < r.ind_ub->value) r.ind_ub = c;

    auto check = [&](const std::string& ln, long lv, const std::string& rn, long rv) {
        r.checks.push_back({ln, lv, rn, rv, lv <= rv});
    };
    std::vector<std::pair<std::string, long>> lower;
    if (r.vc) lower.emplace_back("vc-1", static_cast<long>(*r.vc) - 1);
    if (r.coind) lower.emplace_back("coind_lb", r.coind->value);
    if (r.swh) lower.emplace_back("swh", static_cast<long>(r.swh->height));
    for (std::size_t i = 0; i + 1 < lower.size(); ++i)
        check(lower[i].first, lower[i].second, lower[i + 1].first, lower[i + 1].second);
    for (const auto& [ln, lv] : lower)
        for (const auto& c : r.ind_upper_candidates) check(ln, lv, "ind_ub[" + c.provenance + "]", c.value);
    if (r.phi_dimension && r.h) check("phi_image_dimension", static_cast<long>(*r.phi_dimension), "2h-1",
                                      static_cast<long>(2 * *r.h - 1));
    if (r.vc && r.omega && r.omega->exact) {
        check("omega_diamond", static_cast<long>(r.omega->value), "2*vc", static_cast<long>(2 * *r.vc));
        check("vc", static_cast<long>(*r.vc), "omega_diamond", static_cast<long>(r.omega->value));
    }

    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

nlohmann::json rational_to_json(const mpq_class& q) { return q.get_str(); }

nlohmann::json realization_to_json(const Realization& r) {
    auto vecs = [](const std::vector<RationalVector>& vs) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& v : vs) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& x : v) row.push_back(rational_to_json(x));
            out.push_back(std::move(row));
        }
        return out;
    };
    return {{"d", r.d}, {"rows", vecs(r.rows)}, {"cols", vecs(r.cols)}};
}

Realization realization_from_json(const nlohmann::json& j) {
    try {
        Realization r;
        r.d = j.at("d").get<std::size_t>();
        auto vecs = [](const nlohmann::json& arr) {
            std::vector<RationalVector> out;
            for (const auto& row : arr) {
                RationalVector v;
                for (const auto& x : row) {
                    mpq_class q;
                    if (q.set_str(x.get<std::string>(), 10) != 0) throw ParseError("bad rational: " + x.dump());
                    q.canonicalize();
                    v.push_back(q);
                }
                out.push_back(std::move(v));
            }
            return out;
        };
        r.rows = vecs(j.at("rows"));
        r.cols = vecs(j.at("cols"));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("realization JSON: ") + e.what());
    }
}

nlohmann::json report_to_json(const InvariantReport& r) {
    using nlohmann::json;
    auto opt = [](const auto& o) -> json {
        if (!o) return nullptr;
        return *o;
    };
    json j;
    j["schema"] = kReportSchema;
    j["tool"] = "signtope";
    j["version"] = kVersion;
    j["instance"] = r.instance;
    j["matrix"] = {{"rows", r.rows}, {"cols", r.cols}, {"specified", r.specified}};
    j["vc"] = opt(r.vc);
    if (r.omega)
        j["omega_diamond"] = {{"value", r.omega->value}, {"exact", r.omega->exact}, {"columns", r.omega->columns}};
    else
        j["omega_diamond"] = nullptr;
    if (r.coind) {
        json c = {{"value", r.coind->value}, {"provenance", to_string(r.coind->provenance)}};
        c["homological_connectivity"] = opt(r.coind->homological_connectivity);
        j["coind_lb"] = c;
    } else {
        j["coind_lb"] = nullptr;
    }
    j["swh"] = r.swh ? json(r.swh->height) : json(nullptr);
    j["h"] = opt(r.h);
    j["phi_image_dimension"] = opt(r.phi_dimension);
    j["complex_dimension"] = opt(r.complex_dimension);
    j["facet_intersection_index_bound"] = opt(r.facet_bound);
    json cands = json::array();
    for (const auto& c : r.ind_upper_candidates) cands.push_back({{"value", c.value}, {"provenance", c.provenance}});
    j["ind_ub_candidates"] = cands;
    j["ind_ub"] = r.ind_ub ? json{{"value", r.ind_ub->value}, {"provenance", r.ind_ub->provenance}} : json(nullptr);
    if (r.srank_witness)
        j["srank_ub"] = {{"value", r.srank_witness->d},
                         {"source", r.srank_source},
                         {"witness", realization_to_json(*r.srank_witness)}};
    else
        j["srank_ub"] = nullptr;
    j["unavailable"] = r.unavailable;
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"lhs", c.lhs_name}, {"lhs_value", c.lhs}, {"rhs", c.rhs_name}, {"rhs_value", c.rhs},
                          {"holds", c.holds}});
    j["checks"] = checks;
    j["chain_holds"] = r.chain_holds();
    j["timing"] = {{"started_at", r.started_at}, {"elapsed_seconds", r.elapsed_seconds}};
    return j;
}

}  // namespace signtope
