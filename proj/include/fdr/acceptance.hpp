#pragma once

// Acceptance criteria 1..12 as callable checks.  Ranges and sample sizes are
// pinned here; `n_max` only lowers them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fdr::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kCriteria = 12;

struct Config {
    std::uint64_t seed = kDefaultSeed;
    std::optional<int> n_max;
};

struct Result {
    int id = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> details;
    double seconds = 0;
};

Result run(int id, const Config& config = {});
std::vector<Result> run_all(const Config& config = {});

}  // namespace fdr::acceptance
