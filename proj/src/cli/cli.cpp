#include "ljcell/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "ljcell/action_angle.hpp"
#include "ljcell/asymptotics.hpp"
#include "ljcell/dynamics.hpp"
#include "ljcell/errors.hpp"
#include "ljcell/fourier.hpp"
#include "ljcell/resonance.hpp"

namespace ljcell::cli {

using nlohmann::json;

namespace {

constexpr const char* kSweepColumns[] = {
    "q0",      "omega1_implied", "E",       "I_n",
    "I_nm1",   "H_n",            "H_nm1",   "delta_omega_n",
    "delta_omega_nm1", "K_exact", "K_small_asympt", "K_high_asympt",
    "overlap_flag", "error"};

constexpr const char* kSectionColumns[] = {"k", "t", "q", "p", "E", "I"};

std::string csv_text(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

template <std::size_t N>
std::string csv_header(const char* const (&columns)[N]) {
    std::string out;
    for (std::size_t i = 0; i < N; ++i) {
        if (i)
            out += ',';
        out += columns[i];
    }
    return out + '\n';
}

class Row {
public:
    Row& num(double v) { return field(format_number(v)); }
    Row& num(std::optional<double> v) { return field(v ? format_number(*v) : std::string{}); }
    Row& integer(long long v) { return field(std::to_string(v)); }
    Row& text(std::string_view s) { return field(csv_text(s)); }
    std::string str() const { return line_ + '\n'; }

private:
    Row& field(const std::string& s) {
        if (!first_)
            line_ += ',';
        first_ = false;
        line_ += s;
        return *this;
    }
    std::string line_;
    bool first_ = true;
};

json config_json(const RunConfig& c) {
    json j;
    j["alpha"] = c.potential.alpha;
    j["beta"] = c.potential.beta;
    j["amp"] = c.potential.amp;
    j["omega1"] = c.potential.omega1;
    j["n"] = c.n;
    j["q0"] = c.q0 ? json(*c.q0) : json(nullptr);
    j["h"] = c.h ? json(*c.h) : json(nullptr);
    j["energy"] = c.energy ? json(*c.energy) : json(nullptr);
    j["grid"] = format_grid(c.grid);
    j["periods"] = c.periods;
    j["dt_divisor"] = c.dt_divisor;
    j["drive_phase"] = c.drive_phase;
    j["out"] = c.out;
    j["tol"] = c.tol;
    j["threads"] = c.threads;
    return j;
}

json metadata(std::string_view command, const RunConfig& c) {
    json j;
    j["tool"] = "ljcell";
    j["command"] = command;
    j["version"] = LJCELL_VERSION;
#ifdef __VERSION__
    j["compiler"] = __VERSION__;
#endif
    j["config"] = config_json(c);
    return j;
}

json orbit_json(const OrbitRecord& r) {
    return {{"q0", r.q0},
            {"e", r.e},
            {"h", r.h},
            {"action", r.action},
            {"omega", r.omega},
            {"domega_de", r.domega_de},
            {"domega_di", r.domega_di},
            {"accuracy_warning", r.accuracy_warning}};
}

double require_number(const json& v, const char* key) {
    if (!v.is_number())
        throw ConfigError(std::string("config key '") + key + "' must be a number");
    return v.get<double>();
}

template <class T>
T require_count(const json& v, const char* key) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ConfigError(std::string("config key '") + key + "' must be a non-negative integer");
    return static_cast<T>(v.get<long long>());
}

std::optional<double> optional_number(const json& v, const char* key) {
    if (v.is_null())
        return std::nullopt;
    return require_number(v, key);
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw ConfigError(std::string(what) + " must be positive and finite");
}

void require_amplitude(double q0, const char* what) {
    if (!(q0 > 0.0 && q0 < 1.0))
        throw ConfigError(std::string(what) + " must lie strictly inside (0, 1)");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ConfigError("cannot open output file " + path);
    f << text;
    if (!f)
        throw ConfigError("failed writing output file " + path);
}

}  // namespace

GridSpec parse_grid(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos)
        throw ConfigError("grid must be lo:hi:count, got '" + std::string(text) + "'");

    auto parse_double = [&](std::string_view s) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw ConfigError("grid bound '" + std::string(s) + "' is not a number");
        return v;
    };
    GridSpec g;
    g.lo = parse_double(text.substr(0, first));
    g.hi = parse_double(text.substr(first + 1, second - first - 1));
    const std::string_view count = text.substr(second + 1);
    unsigned long long n = 0;
    const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
    if (ec != std::errc{} || ptr != count.data() + count.size())
        throw ConfigError("grid count '" + std::string(count) + "' is not an integer");
    g.count = static_cast<std::size_t>(n);
    return g;
}

std::string format_grid(const GridSpec& g) {
    return format_number(g.lo) + ":" + format_number(g.hi) + ":" + std::to_string(g.count);
}

std::vector<double> grid_points(const GridSpec& g) {
    std::vector<double> out(g.count);
    if (g.count == 1) {
        out[0] = g.lo;
        return out;
    }
    const double last = static_cast<double>(g.count - 1);
    for (std::size_t i = 0; i < g.count; ++i) {
        const double f = static_cast<double>(i) / last;
        out[i] = i + 1 == g.count ? g.hi : g.lo + (g.hi - g.lo) * f;
    }
    return out;
}

RunConfig config_from_json(std::string_view json_text, const RunConfig& base) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config must be a JSON object");

    RunConfig c = base;
    for (const auto& [key, v] : j.items()) {
        if (key == "alpha")
            c.potential.alpha = require_number(v, "alpha");
        else if (key == "beta")
            c.potential.beta = require_number(v, "beta");
        else if (key == "amp")
            c.potential.amp = require_number(v, "amp");
        else if (key == "omega1")
            c.potential.omega1 = require_number(v, "omega1");
        else if (key == "n") {
            if (!v.is_number_integer())
                throw ConfigError("config key 'n' must be an integer");
            c.n = v.get<int>();
        } else if (key == "q0")
            c.q0 = optional_number(v, "q0");
        else if (key == "h")
            c.h = optional_number(v, "h");
        else if (key == "energy")
            c.energy = optional_number(v, "energy");
        else if (key == "grid") {
            if (v.is_string())
                c.grid = parse_grid(v.get<std::string>());
            else if (v.is_object() && v.contains("lo") && v.contains("hi") && v.contains("count"))
                c.grid = {require_number(v["lo"], "grid.lo"), require_number(v["hi"], "grid.hi"),
                          require_count<std::size_t>(v["count"], "grid.count")};
            else
                throw ConfigError("config key 'grid' must be \"lo:hi:count\" or {lo, hi, count}");
        } else if (key == "periods")
            c.periods = require_count<std::size_t>(v, "periods");
        else if (key == "dt_divisor")
            c.dt_divisor = require_count<std::size_t>(v, "dt_divisor");
        else if (key == "drive_phase")
            c.drive_phase = require_number(v, "drive_phase");
        else if (key == "out") {
            if (!v.is_string())
                throw ConfigError("config key 'out' must be a string");
            c.out = v.get<std::string>();
        } else if (key == "tol")
            c.tol = require_number(v, "tol");
        else if (key == "threads")
            c.threads = require_count<unsigned>(v, "threads");
        else
            throw ConfigError("unknown config key '" + key + "'");
    }
    return c;
}

std::string config_to_json(const RunConfig& config) {
    return config_json(config).dump(2);
}

void validate_config(const RunConfig& c, std::string_view command) {
    try {
        validate(c.potential);
    } catch (const ArgumentError& e) {
        throw ConfigError(e.what());
    }
    require_positive(c.tol, "tol");
    if (!std::isfinite(c.drive_phase))
        throw ConfigError("drive phase must be finite");

    if (command == "sweep-k") {
        if (c.n < 2)
            throw ConfigError("sweep-k needs n >= 2");
        if (c.grid.count == 0)
            throw ConfigError("grid count must be at least 1");
        require_amplitude(c.grid.lo, "grid lower bound");
        require_amplitude(c.grid.hi, "grid upper bound");
        if (c.grid.lo > c.grid.hi)
            throw ConfigError("grid lower bound exceeds the upper bound");
    } else if (command == "orbit") {
        if (!c.q0)
            throw ConfigError("orbit needs --q0");
        require_amplitude(*c.q0, "q0");
    } else if (command == "poincare") {
        if (!c.q0)
            throw ConfigError("poincare needs --q0");
        require_amplitude(*c.q0, "q0");
        if (c.dt_divisor < kMinStepsPerPeriod)
            throw ConfigError("dt divisor must be at least " + std::to_string(kMinStepsPerPeriod));
    } else if (command == "asymptote") {
        if (c.n < 2)
            throw ConfigError("asymptote needs n >= 2");
        const int given = (c.q0 ? 1 : 0) + (c.h ? 1 : 0) + (c.energy ? 1 : 0);
        if (given > 1)
            throw ConfigError("asymptote takes at most one of --q0, --height, --energy");
        if (c.q0)
            require_amplitude(*c.q0, "q0");
        if (c.h)
            require_positive(*c.h, "h");
        if (c.energy && !(std::isfinite(*c.energy) && *c.energy > 2.0 * lj(c.potential, 1.0)))
            throw ConfigError("energy must exceed the well bottom");
    } else {
        throw ConfigError("unknown command '" + std::string(command) + "'");
    }
}

std::string format_number(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ec == std::errc{} ? ptr : buf);
}

CommandOutput cmd_sweep_k(const RunConfig& c) {
    const PotentialSpec& spec = c.potential;
    const std::vector<double> grid = grid_points(c.grid);
    const std::vector<SweepPoint> points = sweep_k(spec, c.n, grid, c.threads);
    const double plateau = k_high(spec, c.n);
    const double omega_leading = c.n * well_bottom_frequency(spec);

    std::string csv = csv_header(kSweepColumns);
    std::size_t failed = 0;
    std::exception_ptr first_failure;
    for (const SweepPoint& pt : points) {
        Row row;
        row.num(pt.q0);
        if (!pt.result) {
            ++failed;
            if (!first_failure)
                first_failure = pt.failure;
            row.num(pt.omega1 > 0.0 ? std::optional(pt.omega1) : std::nullopt);
            // E through K_small_asympt are unknown for a failed point.
            for (int i = 0; i < 9; ++i)
                row.num(std::nullopt);
            row.num(plateau).text("").text(pt.error);
            csv += row.str();
            continue;
        }
        const OverlapResult& r = *pt.result;
        std::optional<double> small;
        if (c.n == 2)
            small = k21_small(spec, r.upper.orbit.h, omega_leading);
        else if (c.n == 3)
            small = k32_small(spec, r.upper.orbit.h, omega_leading);
        row.num(pt.omega1)
            .num(r.upper.orbit.e)
            .num(r.upper.orbit.action)
            .num(r.lower.orbit.action)
            .num(r.upper.hn)
            .num(r.lower.hn)
            .num(r.upper.delta_omega)
            .num(r.lower.delta_omega)
            .num(r.k_value)
            .num(small)
            .num(plateau)
            .integer(r.overlapping() ? 1 : 0)
            .text("");
        csv += row.str();
    }

    json meta = metadata("sweep-k", c);
    meta["columns"] = kSweepColumns;
    meta["rows"] = points.size();
    meta["failed_rows"] = failed;
    meta["K_small_asympt"] = c.n == 2 || c.n == 3
                                 ? "closed-form small-energy overlap at the grid orbit's height, "
                                   "drive frequency n * sqrt(2b)"
                                 : "not available for this harmonic pair";
    meta["K_high_asympt"] = "energy-independent high-energy plateau";

    CommandOutput out;
    out.body = std::move(csv);
    out.sidecar = meta.dump(2) + "\n";
    if (!points.empty() && failed == points.size())
        out.exit_code = first_failure ? exit_code_for(first_failure) : kFailure;
    return out;
}

CommandOutput cmd_orbit(const RunConfig& c) {
    const PotentialSpec& spec = c.potential;
    const double q0 = *c.q0;
    json j = metadata("orbit", c);
    j["orbit"] = orbit_json(orbit_record(spec, q0));
    const QuadratureOptions opts{c.tol, 0.0, QuadratureOptions{}.max_evaluations};
    json fourier = json::object();
    for (int n = 1; n <= 4; ++n)
        fourier["H_" + std::to_string(n)] = fourier_coeff(spec, q0, n, opts).value;
    j["fourier"] = fourier;
    const auto warnings = validity_warnings(spec);
    j["warnings"] = warnings;
    return {j.dump(2) + "\n", std::nullopt, kOk};
}

CommandOutput cmd_poincare(const RunConfig& c) {
    const PotentialSpec& spec = c.potential;
    const PhaseState initial{*c.q0, 0.0, 0.0};
    const PoincareSection section =
        poincare_section(spec, initial, c.periods, c.dt_divisor, c.drive_phase);

    std::string csv = csv_header(kSectionColumns);
    std::size_t outside = 0;
    for (const SectionPoint& pt : section.points) {
        Row row;
        row.integer(static_cast<long long>(pt.k)).num(pt.t).num(pt.q).num(pt.p);
        if (std::abs(pt.q) < 1.0) {
            row.num(unperturbed_energy(spec, pt.q, pt.p)).num(point_action(spec, pt.q, pt.p));
        } else {
            ++outside;
            row.num(std::nullopt).num(std::nullopt);
        }
        csv += row.str();
    }

    json meta = metadata("poincare", c);
    meta["columns"] = kSectionColumns;
    meta["rows"] = section.points.size();
    meta["dt"] = section.dt;
    meta["steps_per_period"] = section.steps_per_period;
    meta["initial"] = {{"q", initial.q}, {"p", initial.p}, {"t", initial.t}};
    meta["points_outside_unperturbed_cell"] = outside;
    meta["error"] = section.error;
    return {std::move(csv), meta.dump(2) + "\n", section.truncated() ? kFailure : kOk};
}

CommandOutput cmd_asymptote(const RunConfig& c) {
    const PotentialSpec& spec = c.potential;
    const double w0 = 2.0 * lj(spec, 1.0);
    std::optional<double> h = c.h;
    std::optional<double> e = c.energy;
    if (c.q0) {
        h = height(spec, *c.q0);
        e = wall_potential(spec, *c.q0);
    } else if (h) {
        e = w0 + *h;
    } else if (e) {
        h = *e - w0;
    }

    json j = metadata("asymptote", c);
    const QuarticCoefficients qc = quartic_coefficients(spec);
    j["quartic"] = {{"w0", qc.w0}, {"b", qc.b}, {"c", qc.c}};
    j["omega_well_bottom"] = well_bottom_frequency(spec);
    j["domega_de_small"] = {{"rederived", small_e_domega_de(spec)},
                            {"alternative", small_e_domega_de_alternative(spec)}};

    if (h) {
        const SmallEnergyAsymptote a = small_e_asymptote(spec, *h);
        j["small_energy"] = {{"h", a.h},
                             {"t1", a.t1},
                             {"a2", a.a2},
                             {"k", a.k},
                             {"period", a.period},
                             {"omega", a.omega},
                             {"omega_leading", a.omega_leading},
                             {"domega_de", a.domega_de}};
        j["overlap_small"] = {{"K_21", k21_small(spec, *h)},
                              {"K_32", k32_small(spec, *h)},
                              {"K_21_at_omega1", k21_small(spec, *h, spec.omega1)},
                              {"K_32_at_omega1", k32_small(spec, *h, spec.omega1)}};
    }
    if (e && *e > kHighEnergyThreshold) {
        const HighEnergyAsymptote b = high_e_action(spec, *e);
        json hn = json::object();
        for (int n = 1; n <= 4; ++n)
            hn["H_" + std::to_string(n)] = hn_high(spec, *e, n);
        j["high_energy"] = {{"e", b.e},
                            {"q1_big", b.q1_big},
                            {"j_big", b.j_big},
                            {"omega_big", b.omega_big},
                            {"domega_big_de", b.domega_big_de},
                            {"hn_limit_over_e", b.hn_limit(c.n)},
                            {"hn", hn}};
    } else if (e) {
        j["high_energy"] = {{"skipped", "energy at or below the hard-wall regime threshold"},
                            {"threshold", kHighEnergyThreshold}};
    }
    j["overlap_high"] = {{"n", c.n},
                         {"K_n", k_high(spec, c.n)},
                         {"K_21", k_high(spec, 2)},
                         {"K_32", k_high(spec, 3)}};
    j["warnings"] = validity_warnings(spec);
    return {j.dump(2) + "\n", std::nullopt, kOk};
}

int exit_code_for(std::exception_ptr failure) {
    try {
        std::rethrow_exception(failure);
    } catch (const ConfigError&) {
        return kConfigError;
    } catch (const ArgumentError&) {
        return kConfigError;
    } catch (const NoResonanceError&) {
        return kNoResonance;
    } catch (const ConvergenceError&) {
        return kConvergenceFailure;
    } catch (const AccuracyError&) {
        return kConvergenceFailure;
    } catch (...) {
        return kFailure;
    }
}

int run(std::string_view command, const RunConfig& config, std::string* err) {
    try {
        validate_config(config, command);
        CommandOutput out;
        if (command == "sweep-k")
            out = cmd_sweep_k(config);
        else if (command == "orbit")
            out = cmd_orbit(config);
        else if (command == "poincare")
            out = cmd_poincare(config);
        else
            out = cmd_asymptote(config);

        if (config.out.empty()) {
            std::cout << out.body;
            std::cout.flush();
        } else {
            write_file(config.out, out.body);
            if (out.sidecar)
                write_file(config.out + ".meta.json", *out.sidecar);
        }
        if (out.exit_code != kOk && err)
            *err = "every point failed";
        return out.exit_code;
    } catch (const std::exception& e) {
        if (err)
            *err = e.what();
        return exit_code_for(std::current_exception());
    }
}

}  // namespace ljcell::cli
