// Machine verification harness: each check id covers one statement about
// weak metric dimension (bounds, extremal constructions, classifications)
// and reports verified / counterexample / partially-checked over an explicit
// parameter range.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wdim/digraph.hpp"

namespace wdim {

struct Counterexample {
    std::string fingerprint;  // canonical fingerprint, or instance label for large digraphs
    std::vector<std::pair<int, int>> arcs;
    std::string violation;
};

struct VerificationReport {
    std::string theorem;
    std::map<std::string, long long> params;  // effective values after defaults
    std::string verdict;  // "verified" | "counterexample" | "partially-checked"
    std::vector<Counterexample> counterexamples;  // sorted by (fingerprint, violation)
    std::map<std::string, long long> stats;       // always contains "instances"
    long long wall_time_ms = 0;
};

// The check ids in canonical order.
const std::vector<std::string>& theorem_ids();

// The parameter keys one check accepts, mapped to their default values.
std::map<std::string, long long> default_params(const std::string& theorem_id);

// Runs one check.  Unknown ids, unknown parameter keys, and values outside
// the documented caps throw std::invalid_argument.  Checks marked
// partially-checked exhausted only a restricted candidate space for part of
// the requested range.
VerificationReport verify(const std::string& theorem_id,
                          const std::map<std::string, long long>& params = {});

}  // namespace wdim
