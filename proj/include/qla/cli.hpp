#pragma once

#include "qla/qliealg.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qla {

enum class Command { Build, Verify, Compare, Table, Limit };
enum class Construction { Generic, ExplicitSln };
enum class Format { Json, Text };

struct RunConfig {
    Command command = Command::Build;
    std::string algebra;
    Construction construction = Construction::Generic;
    std::string s = "1", t = "0";
    bool normalize = false;
    bool fit = true;
    std::vector<std::string> checks;
    Format format = Format::Json;
    std::string out;
    std::size_t budget_dim = default_budget_dim;
};

inline constexpr int exit_pass = 0, exit_failure = 1, exit_usage = 2;

// names accepted by --checks
const std::vector<std::string> &check_names();

// Parses argv-style arguments (without the program name). Throws Error on
// invalid values; CLI11 errors propagate from CLI::App.
RunConfig parse_args(const std::vector<std::string> &args);
// Validation done before any computation; throws Error.
void validate(const RunConfig &cfg);

QuantumLieAlgebra build_algebra(const RunConfig &cfg);
Report run_checks(const QuantumLieAlgebra &A, const std::vector<std::string> &names, std::size_t budget_dim);

// Full command: 0 pass, 1 check or computation failure, 2 usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qla
