#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ljcell/cli.hpp"

namespace cli = ljcell::cli;

namespace {

struct Flags {
    std::optional<double> alpha, beta, amp, omega1, q0, h, energy, drive_phase, tol;
    std::optional<int> n;
    std::optional<std::string> grid, out;
    std::optional<std::size_t> periods, dt_divisor;
    std::optional<unsigned> threads;
};

void add_flags(CLI::App& sub, Flags& f, std::string& config_path) {
    sub.add_option("--config", config_path, "JSON config file; flags override it");
    sub.add_option("--alpha", f.alpha, "repulsive exponent (default 12)");
    sub.add_option("--beta", f.beta, "attractive exponent (default 6)");
    sub.add_option("--amp", f.amp, "wall drive amplitude");
    sub.add_option("--omega1", f.omega1, "wall drive frequency");
    sub.add_option("--n", f.n, "harmonic index (pair n, n-1)");
    sub.add_option("--q0", f.q0, "orbit amplitude in (0, 1)");
    sub.add_option("--height", f.h, "energy above the well bottom");
    sub.add_option("--energy", f.energy, "total energy");
    sub.add_option("--grid", f.grid, "amplitude grid lo:hi:count");
    sub.add_option("--periods", f.periods, "drive periods to integrate");
    sub.add_option("--dt-divisor", f.dt_divisor, "integrator steps per drive period");
    sub.add_option("--drive-phase", f.drive_phase, "drive phase at t = 0");
    sub.add_option("--out", f.out, "output file (stdout when absent)");
    sub.add_option("--tol", f.tol, "relative quadrature tolerance");
    sub.add_option("--threads", f.threads, "sweep worker threads (0 = all cores)");
}

cli::RunConfig assemble(const Flags& f, const std::string& config_path) {
    cli::RunConfig c;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in)
            throw cli::ConfigError("cannot read config file " + config_path);
        std::stringstream text;
        text << in.rdbuf();
        c = cli::config_from_json(text.str(), c);
    }
    if (f.alpha) c.potential.alpha = *f.alpha;
    if (f.beta) c.potential.beta = *f.beta;
    if (f.amp) c.potential.amp = *f.amp;
    if (f.omega1) c.potential.omega1 = *f.omega1;
    if (f.n) c.n = *f.n;
    if (f.q0) c.q0 = *f.q0;
    if (f.h) c.h = *f.h;
    if (f.energy) c.energy = *f.energy;
    if (f.grid) c.grid = cli::parse_grid(*f.grid);
    if (f.periods) c.periods = *f.periods;
    if (f.dt_divisor) c.dt_divisor = *f.dt_divisor;
    if (f.drive_phase) c.drive_phase = *f.drive_phase;
    if (f.out) c.out = *f.out;
    if (f.tol) c.tol = *f.tol;
    if (f.threads) c.threads = *f.threads;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resonance overlap in a driven Lennard-Jones cell"};
    app.set_version_flag("--version", LJCELL_VERSION);
    app.require_subcommand(1);

    Flags flags;
    std::string config_path;
    for (const char* name : cli::kCommands) {
        const char* help = std::string_view(name) == "sweep-k"    ? "overlap parameter along an amplitude grid (CSV)"
                           : std::string_view(name) == "orbit"    ? "action-angle record and Fourier coefficients (JSON)"
                           : std::string_view(name) == "poincare" ? "stroboscopic section of the driven orbit (CSV)"
                                                                  : "closed-form small and high energy values (JSON)";
        add_flags(*app.add_subcommand(name, help), flags, config_path);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kConfigError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    cli::RunConfig config;
    try {
        config = assemble(flags, config_path);
    } catch (const std::exception& e) {
        std::cerr << "ljcell: " << e.what() << "\n";
        return cli::kConfigError;
    }
    std::string err;
    const int code = cli::run(command, config, &err);
    if (code != cli::kOk)
        std::cerr << "ljcell " << command << ": " << err << "\n";
    return code;
}
