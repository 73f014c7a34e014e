#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jacobi/experiments.hpp"

namespace jacobi {

enum class Comparison { less, less_equal, greater_equal };

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    double measured;
    double threshold;
    Comparison comparison;
    double seconds;
    double time_limit;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    /// Multiplies every "<" and "<=" threshold and divides ">=" ones; values
    /// below one tighten the suite.
    double tolerance_scale = 1.0;
};

/// Ids 1 … 13.
std::vector<int> criterion_ids();

CriterionResult run_criterion(int id, const VerifyOptions& opts);

/// Runs the given criteria in order, calling `on_result` after each one.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const VerifyOptions& opts,
                                          const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [ 3] name: measured 0 <= 0 (0.41 s)".
std::string format_result(const CriterionResult& r);

std::string_view to_string(Comparison c);

}  // namespace jacobi
