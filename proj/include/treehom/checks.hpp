#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treehom/graph.hpp"

namespace treehom {

// Bounds for an exhaustive check sweep. All registry checks are
// deterministic functions of this spec.
struct SweepSpec {
    int m_max = 7;        // largest source tree
    int n_max = 8;        // largest target tree
    double budget = 1e8;  // brute-force map budget
    unsigned long seed = 20240901;
    // optional restrictions on the source-tree side of a sweep
    std::optional<int> source_parity;       // keep sources with m % 2 == value
    std::optional<int> source_diameter_max; // keep sources with diam <= value
};

enum class CheckStatus { Pass, Fail, Skipped };

struct Violation {
    std::string source; // serialized instance (tree/graph file or label)
    std::string target;
    std::vector<std::string> values; // decimal strings
};

struct CheckReport {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    long instances = 0;
    std::vector<Violation> violations;
    std::vector<std::string> witnesses; // tree files inline (with # comments)
    double seconds = 0.0;
    bool gating = true;

    nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& check_ids();
const std::vector<std::string>& repro_ids();

// Runs one registry check exhaustively over the sweep. Throws on unknown id
// or a sweep outside the supported budget.
CheckReport run_check(const std::string& id, const SweepSpec& sweep = {});

// Re-discovers one of the fixed counterexamples by bounded search and
// verifies its numeric values. Witness trees are carried in the report.
CheckReport reproduce_counterexample(const std::string& id);

} // namespace treehom
