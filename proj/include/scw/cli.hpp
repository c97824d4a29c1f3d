#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scw::cli {

/// Bad flags or flag values; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct JobConfig {
    std::string command;  ///< betti | chern | verify | clutch | horn-fill | reznikov | generate
    std::string mode = "exact";
    bool mode_given = false;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string out;

    std::string space;       ///< simplex:<n> | boundary-sphere:<n> | two-disk-sphere | path
    std::string bundle;      ///< clutch<n> | trivial | path
    std::string connection;  ///< path; constructed from the bundle when empty
    std::string algebra = "u1";
    std::string poly = "chern:1";
    std::string suite = "all";
    std::string kind;  ///< generate: clutch | trivial | horn-demo
    int n = 1;
    int k = 0;
    int order = 32;
    int probes = 100;
};

struct RunReport {
    int exit_code = 0;
    std::string text;
};

/// Throws UsageError on unknown commands, flags or malformed values.
JobConfig parse_args(const std::vector<std::string>& args);
/// Never throws: parse errors give exit 2, mathematical failures exit 1.
RunReport run(const JobConfig& config);
/// parse_args + run, writing the report to --out or stdout (generate always
/// prints it and uses --out as the file prefix).
int main(int argc, const char* const* argv);

}  // namespace scw::cli
