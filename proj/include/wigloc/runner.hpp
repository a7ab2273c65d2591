#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wigloc/multi_index.hpp"

namespace wigloc {

// Exit codes shared by run() and the executable.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;  // curve | energy | verify-lemma1 | verify-lemma2 |
                          // verify-theorem1 | nonmonotone | rotation-chain | oracle-check
    int n = 1;
    int lambda_max = 4;
    double r_min = 0.0;
    double r_max = 3.0;
    int r_steps = 121;
    std::string output_path;  // empty: stdout
    std::string state_path;   // energy command input
    std::uint64_t seed = 0x5EED;
    std::string format = "csv";  // csv | text
    int trials = 50;             // randomized commands
    long long mc_samples = 200000;
    int angular_nodes = 64;
    int radial_nodes = 48;
};

// Evenly spaced radii, both endpoints included.
std::vector<double> radius_grid(double r_min, double r_max, int steps);

// One term per line: "mu_1 ... mu_n  re  im"; '#' starts a comment.
// Coefficients are normalized on load; a deviation of more than 1e-6 from
// unit norm earns a warning on `warnings`.
HermiteSuperposition load_state_file(std::istream& in, std::ostream& warnings);
HermiteSuperposition load_state_file(const std::string& path, std::ostream& warnings);

// Dispatches config.command, writing reports/CSV to `out` and diagnostics
// to `err`.  Returns kExitPass, kExitVerifyFail, or kExitUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// 17-significant-digit decimal form used for every CSV number.
std::string format_value(double v);

}  // namespace wigloc
