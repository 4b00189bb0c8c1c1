#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ljcell/potentials.hpp"

namespace ljcell::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kConfigError = 2,
    kConvergenceFailure = 3,
    kNoResonance = 4,
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evenly spaced amplitudes lo, ..., hi (count points; count = 1 gives lo).
struct GridSpec {
    double lo = 0.001;
    double hi = 0.99;
    std::size_t count = 200;
};

struct RunConfig {
    PotentialSpec potential;
    int n = 2;                      ///< harmonic pair (n, n - 1)
    std::optional<double> q0;       ///< single-orbit amplitude
    std::optional<double> h;        ///< energy above the well bottom (asymptote)
    std::optional<double> energy;   ///< total energy (asymptote)
    GridSpec grid;
    std::size_t periods = 1000;     ///< drive periods for poincare
    std::size_t dt_divisor = 1000;  ///< integrator steps per drive period
    double drive_phase = 0.0;
    std::string out;                ///< output path; empty writes to stdout
    double tol = 1e-10;             ///< relative quadrature tolerance for Fourier coefficients
    unsigned threads = 0;           ///< sweep workers; 0 uses every core
};

inline constexpr const char* kCommands[] = {"sweep-k", "orbit", "poincare", "asymptote"};

/// "lo:hi:count".
GridSpec parse_grid(std::string_view text);
std::string format_grid(const GridSpec& grid);
std::vector<double> grid_points(const GridSpec& grid);

/// Reads a JSON object over base; unknown keys are rejected.
RunConfig config_from_json(std::string_view json_text, const RunConfig& base = {});
std::string config_to_json(const RunConfig& config);

/// Throws ConfigError when the configuration cannot drive the command.
void validate_config(const RunConfig& config, std::string_view command);

/// Shortest text that parses back to the same double; nan and inf spelled out.
std::string format_number(double value);

struct CommandOutput {
    std::string body;                    ///< CSV or JSON
    std::optional<std::string> sidecar;  ///< metadata JSON accompanying a CSV
    int exit_code = kOk;
};

CommandOutput cmd_sweep_k(const RunConfig& config);
CommandOutput cmd_orbit(const RunConfig& config);
CommandOutput cmd_poincare(const RunConfig& config);
CommandOutput cmd_asymptote(const RunConfig& config);

/// Validates, dispatches, writes body and sidecar (out + ".meta.json"), and
/// maps failures to exit codes with a message on err.
int run(std::string_view command, const RunConfig& config, std::string* err = nullptr);

int exit_code_for(std::exception_ptr failure);

}  // namespace ljcell::cli
