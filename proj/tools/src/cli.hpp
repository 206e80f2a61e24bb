#ifndef VSPREAD_TOOLS_CLI_HPP
#define VSPREAD_TOOLS_CLI_HPP

#include "vspread/betti.hpp"
#include "vspread/ideal.hpp"
#include "vspread/monomial.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vspread::cli {

enum class OutputFormat { ascii, json };

struct JobConfig {
    std::string subcommand;
    /// A path, or inline JSON when the text starts with '{'.
    std::string ideal_source;
    /// Second ideal J for the Shift_4 check.
    std::string other_source;
    std::optional<std::vector<int>> t;
    int n = 0;
    int degree = 0;
    std::string ideal_class = "strongly-stable";
    BettiModule module = BettiModule::quotient;
    int homological_degree = 1;
    std::optional<int> max_degree;
    std::uint64_t seed = 1;
    int bound = 100;
    int retries = 3;
    bool oracle = false;
    bool expand = false;
    bool verify = false;
    /// Non-spread generators become a warning instead of an error.
    bool lenient = false;
    OutputFormat format = OutputFormat::ascii;
};

/// Malformed or unreadable input; maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IdealInput {
    MonomialIdeal ideal;
    SpreadVector t;
    bool t_given;
};

/// Reads {"n": int, "t": [ints], "generators": [strings]}. Without "t" the
/// zero vector with d = max(2, largest generator degree) is used. When
/// `require_spread` is set a non-t-spread generator is an error, or a
/// warning on `warnings` if that stream is given.
IdealInput parse_ideal_file(const std::string& source, bool require_spread = true,
                            std::ostream* warnings = nullptr);

/// Inverse of parse_ideal_file for the inline form.
std::string serialize_ideal(const MonomialIdeal& I, const std::optional<SpreadVector>& t);

/// Fills `config` from the arguments (program name excluded) and the
/// VSPREAD_MAX_DEGREE, VSPREAD_GIN_SEED and VSPREAD_GIN_BOUND environment
/// variables. Returns an exit code when the invocation is already complete
/// (help, or a usage error reported on `err`).
std::optional<int> parse_command_line(const std::vector<std::string>& args, JobConfig& config, std::ostream& out,
                                      std::ostream& err);

/// Runs one job. Exit codes: 0 success, 1 property violation, 2 usage or
/// input error.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vspread::cli

#endif
