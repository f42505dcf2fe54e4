#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qracah/driver.hpp"

namespace {

using qracah::Json;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qracah::ConfigError("cannot open config file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw qracah::ConfigError("config file " + path +
                                  " is not valid JSON: " + e.what());
    }
}

void print_summary(const Json& report) {
    if (report.contains("config_errors")) {
        for (const auto& e : report["config_errors"])
            std::cerr << "config error: " << e.get<std::string>() << "\n";
        return;
    }
    if (report.contains("checks")) {
        for (const auto& c : report["checks"])
            std::cerr << "[" << c["status"].get<std::string>() << "] "
                      << c["name"].get<std::string>() << "\n";
    }
    if (report.contains("samples")) {
        for (const auto& s : report["samples"]) {
            std::cerr << "point " << s["index"].get<long>() << ": "
                      << s["status"].get<std::string>();
            if (s.contains("failed_checks")) {
                std::cerr << " (";
                bool first = true;
                for (const auto& n : s["failed_checks"]) {
                    if (!first) std::cerr << ", ";
                    std::cerr << n.get<std::string>();
                    first = false;
                }
                std::cerr << ")";
            }
            std::cerr << "\n";
        }
    }
    if (report.contains("summary")) {
        std::cerr << "summary:";
        for (auto it = report["summary"].begin(); it != report["summary"].end();
             ++it)
            std::cerr << " " << it.key() << "=" << it.value().dump();
        std::cerr << "\n";
    }
}

int emit(const qracah::RunResult& result, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << result.report.dump(2) << "\n";
    } else {
        qracah::write_report(result.report, output_path);
    }
    print_summary(result.report);
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of module relations, L-operator "
                 "identities, tridiagonal pair structure, and the lowering "
                 "operator psi, over arbitrary-precision rationals"};
    app.require_subcommand(1);

    std::string config_path, output_path, suites_csv;
    long sweep_count = 0;
    std::uint64_t sweep_seed = 0;
    bool seed_given = false;

    CLI::App* verify =
        app.add_subcommand("verify", "run the verification suites once");
    verify->add_option("--config", config_path, "JSON config file")
        ->required();
    verify->add_option("--output", output_path,
                       "write the JSON report here instead of stdout");
    verify->add_option("--suites", suites_csv,
                       "comma-separated suite list overriding the config");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "run the suites at pseudo-random parameter points");
    sweep->add_option("--config", config_path, "JSON config file")->required();
    sweep->add_option("--count", sweep_count, "number of parameter points");
    auto* seed_opt =
        sweep->add_option("--seed", sweep_seed, "64-bit generator seed");
    sweep->add_option("--output", output_path,
                      "write the JSON report here instead of stdout");

    CLI::App* schema = app.add_subcommand(
        "show-config-schema", "print the accepted config document layout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (schema->parsed()) {
            std::cout << qracah::config_schema().dump(2) << "\n";
            return qracah::kExitPass;
        }

        qracah::RunConfig cfg = qracah::parse_config(load_json(config_path));

        if (verify->parsed()) {
            if (!suites_csv.empty()) {
                cfg.suites.clear();
                std::vector<bool> wanted(qracah::all_suites().size(), false);
                std::stringstream ss(suites_csv);
                std::string name;
                while (std::getline(ss, name, ',')) {
                    if (name == "all") {
                        wanted.assign(wanted.size(), true);
                        continue;
                    }
                    auto s = qracah::suite_from_string(name);
                    if (!s)
                        throw qracah::ConfigError("unknown suite \"" + name +
                                                  "\"");
                    wanted[static_cast<std::size_t>(*s)] = true;
                }
                for (std::size_t i = 0; i < wanted.size(); ++i)
                    if (wanted[i])
                        cfg.suites.push_back(qracah::all_suites()[i]);
                if (cfg.suites.empty())
                    throw qracah::ConfigError("--suites selected nothing");
            }
            return emit(qracah::run(cfg), output_path);
        }

        // sweep
        seed_given = seed_opt->count() > 0;
        if (sweep_count > 0) {
            if (!cfg.sweep) cfg.sweep = qracah::SweepSpec{};
            cfg.sweep->count = sweep_count;
        }
        if (seed_given) {
            if (!cfg.sweep) cfg.sweep = qracah::SweepSpec{};
            cfg.sweep->seed = sweep_seed;
        }
        if (!cfg.sweep || cfg.sweep->count < 1)
            throw qracah::ConfigError(
                "sweep needs a point count (config sweep.count or --count)");
        return emit(qracah::run_sweep(cfg), output_path);
    } catch (const qracah::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qracah::kExitConfigError;
    } catch (const qracah::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qracah::kExitConfigError;
    } catch (const qracah::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return qracah::kExitCheckFailed;
    }
}
