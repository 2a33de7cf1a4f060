#include "hyperent/cli.hpp"

#include "hyperent/errors.hpp"
#include "hyperent/thermal.hpp"

#include <CLI11.hpp>

#include <fstream>

namespace hyperent::cli {

namespace {

void print_value(std::ostream& os, const char* name, double value) {
    os << name << '=' << format_number(value) << '\n';
}

void run_ground_sweep(const RunConfig& cfg, std::ostream& out) {
    const SweepSeries series = ground_sweep(
        cfg.c_min, cfg.c_max, cfg.steps,
        GroundSweepOptions{.d = cfg.d, .degeneracy_tol = cfg.degeneracy_tol, .jobs = cfg.jobs});
    write_csv(out, series);
}

void run_thermal_sweep(const RunConfig& cfg, std::ostream& out) {
    const auto all = thermal_sweep(cfg.temps, cfg.c_min, cfg.c_max, cfg.steps, cfg.d, cfg.jobs);
    out << "t,c,negativity\n";
    for (const auto& ts : all)
        for (const auto& r : ts.series.records)
            out << format_number(ts.temperature) << ',' << format_number(r.parameter) << ','
                << format_number(r.values.front()) << '\n';
}

void run_measure(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    FieldParams field{.c = cfg.c, .d = cfg.d};
    if (cfg.b1 || cfg.b2) {
        const ReducedFields reduced = physical_to_reduced(cfg.b1.value_or(0.0), cfg.b2.value_or(0.0));
        field.c = reduced.c;
        field.d = reduced.d;
        err << "warning: tesla inputs mapped to reduced units assuming h*228 MHz is the coupling energy\n";
    }

    const GroundStateResult gs = ground_state(field, cfg.degeneracy_tol);
    print_value(out, "c", field.c);
    print_value(out, "d", field.d);
    print_value(out, "ground_energy", gs.energy);
    out << "degeneracy=" << gs.degeneracy << '\n';
    if (gs.vector)
        print_value(out, "concurrence", concurrence_pure(*gs.vector));
    else
        print_value(out, "negativity_mixed", negativity(gs.state));
    if (cfg.t) {
        print_value(out, "t", *cfg.t);
        print_value(out, "thermal_negativity", thermal_negativity(field.c, field.d, *cfg.t));
    }
}

void run_critical_temp(const RunConfig& cfg, std::ostream& out) {
    const CriticalTemperatureResult r = find_critical_temperature(cfg.t_low, cfg.t_high, cfg.tol, cfg.h);
    print_value(out, "t_c", r.t_c);
    print_value(out, "bracket_low", r.bracket.first);
    print_value(out, "bracket_high", r.bracket.second);
    print_value(out, "curvature_low", r.curvature_low);
    print_value(out, "curvature_high", r.curvature_high);
    out << "iterations=" << r.iterations << '\n';
}

void validate(const RunConfig& cfg) {
    const bool sweep = cfg.command == Command::ground_sweep || cfg.command == Command::thermal_sweep;
    if (sweep && cfg.steps < 2)
        throw InvalidRange("--steps must be at least 2");
    if (cfg.command == Command::thermal_sweep && cfg.temps.empty())
        throw InvalidRange("--temps must not be empty");
    if (cfg.t && !(*cfg.t > 0.0))
        throw InvalidInput("--t must be positive");
    if (!(cfg.degeneracy_tol > 0.0))
        throw InvalidInput("--degeneracy-tol must be positive");
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);

        std::ofstream file;
        std::ostream* sink = &out;
        if (!config.out_path.empty()) {
            file.open(config.out_path, std::ios::binary | std::ios::trunc);
            if (!file)
                throw InvalidInput("cannot open output file " + config.out_path);
            sink = &file;
        }

        switch (config.command) {
        case Command::ground_sweep:
            run_ground_sweep(config, *sink);
            break;
        case Command::thermal_sweep:
            run_thermal_sweep(config, *sink);
            break;
        case Command::measure:
            run_measure(config, *sink, err);
            break;
        case Command::critical_temp:
            run_critical_temp(config, *sink);
            break;
        }
        sink->flush();
        if (!*sink)
            throw InvalidInput("failed writing output");
        return kExitOk;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumericalFailure;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Electron-nuclear entanglement of a spin-1 nucleus and spin-1/2 electron", "hyperent"};
    app.require_subcommand(1);

    auto add_sweep_flags = [&cfg](CLI::App* sub) {
        sub->add_option("--c-min", cfg.c_min, "Lower end of the C grid");
        sub->add_option("--c-max", cfg.c_max, "Upper end of the C grid");
        sub->add_option("--steps", cfg.steps, "Number of C grid points");
        sub->add_option("--d", cfg.d, "Nuclear Zeeman term D");
        sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out_path, "Output CSV path (default: stdout)");
    };

    auto* ground = app.add_subcommand("ground-sweep", "Ground-state energy and entanglement versus C");
    add_sweep_flags(ground);
    ground->add_option("--degeneracy-tol", cfg.degeneracy_tol, "Energy window for degenerate ground states");

    auto* thermal = app.add_subcommand("thermal-sweep", "Thermal negativity versus C at several temperatures");
    add_sweep_flags(thermal);
    thermal->add_option("--temps", cfg.temps, "Temperatures (comma separated)")->delimiter(',');

    auto* measure = app.add_subcommand("measure", "Entanglement at a single field point");
    auto* opt_c = measure->add_option("--c", cfg.c, "Electron Zeeman term C");
    auto* opt_d = measure->add_option("--d", cfg.d, "Nuclear Zeeman term D");
    measure->add_option("--t", cfg.t, "Temperature (k_B = 1)");
    auto* opt_b1 = measure->add_option("--b1", cfg.b1, "Field on the electron in tesla (replaces --c)");
    auto* opt_b2 = measure->add_option("--b2", cfg.b2, "Field on the nucleus in tesla (replaces --d)");
    opt_b1->excludes(opt_c)->excludes(opt_d);
    opt_b2->excludes(opt_c)->excludes(opt_d);
    measure->add_option("--degeneracy-tol", cfg.degeneracy_tol, "Energy window for degenerate ground states");
    measure->add_option("--out", cfg.out_path, "Output path (default: stdout)");

    auto* critical = app.add_subcommand("critical-temp", "Temperature where C = 0 turns from minimum to maximum");
    critical->add_option("--lo", cfg.t_low, "Lower temperature of the bracket");
    critical->add_option("--hi", cfg.t_high, "Upper temperature of the bracket");
    critical->add_option("--tol", cfg.tol, "Bracket width to stop at");
    critical->add_option("--curvature-step", cfg.h, "Step of the second difference in C");
    critical->add_option("--out", cfg.out_path, "Output path (default: stdout)");

    std::vector<const char*> argv{"hyperent"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    }

    if (ground->parsed()) {
        cfg.command = Command::ground_sweep;
    } else if (thermal->parsed()) {
        cfg.command = Command::thermal_sweep;
        if (thermal->count("--c-min") == 0)
            cfg.c_min = -2.0;
        if (thermal->count("--c-max") == 0)
            cfg.c_max = 2.0;
        if (thermal->count("--steps") == 0)
            cfg.steps = 401;
    } else if (measure->parsed()) {
        cfg.command = Command::measure;
    } else {
        cfg.command = Command::critical_temp;
    }
    return run(cfg, out, err);
}

} // namespace hyperent::cli
