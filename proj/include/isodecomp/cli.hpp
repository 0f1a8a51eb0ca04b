#ifndef ISODECOMP_CLI_HPP
#define ISODECOMP_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "isodecomp/exactnum.hpp"

namespace isodecomp {

struct RunConfig
{
    std::string subcommand;
    std::string input;
    int precision = 53;
    Rational fd_step = Rational(1, 1000);
    std::uint64_t seed = 0;
    std::size_t budget = 10000;
    unsigned workers = 1;
    int min_vertices = 3;
    int max_vertices = 8;
    int denominator = 100;
    std::string origin = "centroid";
    std::string out;
    std::string generators;
    std::string speed;
    std::optional<Rational> eps;
    std::string direction;
    std::string beta;
    int grid = 8;
    std::string range = "-1/10:1/10";
    bool text = false;
};

/// Exit codes.
constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_precondition = 3;

/// Runs one subcommand, writing the result to config.out (or `out` when
/// empty) and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs; the entry point of the isodecomp binary.
int run_command_line(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace isodecomp

#endif // ISODECOMP_CLI_HPP
