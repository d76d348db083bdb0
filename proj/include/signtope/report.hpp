#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "signtope/bounds.hpp"
#include "signtope/gf2top.hpp"

namespace signtope {

struct ReportOptions {
    FaceLimits faces;
    ClosureLimits closure;
    ShatterLimits shatter;
    /// Run srank_upper_search below the best known dimension.
    bool search = true;
    /// Skip the search for wider matrices.
    std::size_t search_max_cols = 24;
    std::uint64_t seed = 1;
    std::size_t search_iters = 30;
    std::size_t search_restarts = 8;
    /// A realization supplied by the caller (e.g. from a generator).
    std::optional<Realization> known_realization;
    std::string known_realization_source;
    /// Components to leave out: vc, omega_diamond, coind_lb, swh, h,
    /// phi_image_dimension, srank_search.
    std::set<std::string> skip;
};

/// Names accepted in ReportOptions::skip.
const std::vector<std::string>& report_component_names();

struct BoundValue {
    long value = 0;
    std::string provenance;
};

/// One inequality of the bound chain between two computed quantities.
struct ChainCheck {
    std::string lhs_name;
    long lhs = 0;
    std::string rhs_name;
    long rhs = 0;
    bool holds = true;
};

struct InvariantReport {
    std::string instance;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t specified = 0;

    std::optional<std::size_t> vc;
    std::optional<OmegaResult> omega;
    std::optional<CoindBound> coind;
    std::optional<SwhResult> swh;
    std::optional<std::size_t> h;
    std::optional<std::size_t> phi_dimension;
    std::optional<int> complex_dimension;
    std::optional<std::size_t> facet_bound;
    std::vector<BoundValue> ind_upper_candidates;
    std::optional<BoundValue> ind_ub;
    std::optional<Realization> srank_witness;
    std::string srank_source;

    /// Component name -> reason it was skipped.
    std::map<std::string, std::string> unavailable;
    std::vector<ChainCheck> checks;
    std::string started_at;
    double elapsed_seconds = 0;

    bool chain_holds() const;
    std::optional<std::size_t> srank_ub() const;
};

/// Assemble every bound that fits in the caps. Cap errors are recorded in
/// `unavailable`; the chain is checked among the quantities present.
InvariantReport invariant_report(const PartialSignMatrix& a, const std::string& instance,
                                 const ReportOptions& opts = {});

/// Rationals as "p/q" strings (integers without the denominator).
nlohmann::json rational_to_json(const mpq_class& q);
nlohmann::json realization_to_json(const Realization& r);
Realization realization_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const InvariantReport& r);

}  // namespace signtope
