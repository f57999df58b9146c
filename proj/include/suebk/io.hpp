#pragma once

#include <iosfwd>
#include <string>

#include "suebk/construct.hpp"
#include "suebk/verify.hpp"

namespace suebk {

/// Malformed interchange file (bad JSON, inconsistent shapes, missing keys).
struct FileFormatError : std::runtime_error {
    explicit FileFormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// State-set interchange format: a JSON object with d, dprime, k, N, a
// "states" array (each state is d*d' [re,im] pairs, row-major) and a
// "metadata" object echoing the construction. Numbers survive a write/read
// cycle exactly, so rewriting a file we produced is byte-identical.

std::string state_set_to_json(const SuebkSet& set);
SuebkSet state_set_from_json(const std::string& text);

void write_state_set(const std::string& path, const SuebkSet& set);
SuebkSet read_state_set(const std::string& path);

// Plan files describe a layout without its states: ambient dims, k, active
// dims, deletions, and the block list (weighing ids with counts or explicit
// cells). Enough to reproduce any figure-level construction.

std::string plan_spec_to_json(const PlacementPlan& plan);

struct PlanFile {
    int d = 0;
    int dprime = 0;
    int k = 0;
    int active_rows = 0;
    int active_cols = 0;
    std::vector<Coord> deleted;
    std::vector<BlockSpec> blocks;
};

PlanFile plan_file_from_json(const std::string& text);
PlanFile read_plan_file(const std::string& path);

/// Resolves a weighing id: "CH<d>", the builtin "O4"/"O5", or "W(n,k,a)"
/// from the catalog. Throws IngredientMissing for unknown ids.
WeighingMatrix resolve_weighing(const std::string& id, const Catalog& catalog);

// Verification reports.

std::string report_to_json(const VerificationReport& rep);
void print_report(std::ostream& out, const VerificationReport& rep);

}  // namespace suebk
