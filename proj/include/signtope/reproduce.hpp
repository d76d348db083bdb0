#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "signtope/bounds.hpp"
#include "signtope/signmat.hpp"

namespace signtope {

struct CorpusInstance {
    std::string name;
    PartialSignMatrix matrix;
    /// Smallest two parameter settings of a generator. Other instances are
    /// extras whose components may legitimately hit caps.
    bool core = true;
    std::optional<Realization> known_realization;
    std::string known_source;
};

/// Fixed instance list: ghd, hadamard, random and projective-plane families.
std::vector<CorpusInstance> corpus();

struct CriterionRow {
    std::string label;
    std::string expected;
    std::string computed;
    bool pass = true;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = true;
    std::vector<CriterionRow> rows;
    double seconds = 0;
    /// Time budget for the criterion.
    double budget_seconds = 0;
    std::string error;
};

/// Criteria 1..15 in order.
std::vector<int> all_criteria();
CriterionResult run_criterion(int id);

/// Suites: all, hadamard, ghd, lemma32, nerve, sandwich, vr, pg, swh, height, report.
std::vector<std::string> suite_names();
std::vector<int> suite_criteria(const std::string& suite);

/// Prints one table block per criterion; returns true iff all pass.
bool run_suite(const std::string& suite, std::ostream& os);
void print_criterion(std::ostream& os, const CriterionResult& r);

}  // namespace signtope
