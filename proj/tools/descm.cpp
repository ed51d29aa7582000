#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>
#include "CLI11.hpp"

#include "descm/convergence.hpp"
#include "descm/io.hpp"
#include "descm/log.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitInput = 2;

descm::MapStrategy parse_strategy(const std::string& s) {
    if (s == "auto") return descm::MapStrategy::automatic;
    if (s == "plain") return descm::MapStrategy::plain;
    if (s == "single") return descm::MapStrategy::single;
    if (s == "multi") return descm::MapStrategy::multi;
    throw CLI::ValidationError("--map", "must be one of auto|plain|single|multi");
}

int run_validate_exact(double g, double tol, int n_max) {
    std::printf("%-5s %-22s %-22s %-22s %-12s %s\n",
                "case", "lambda(g)", "exact E", "computed E", "|error|", "N");
    bool all_ok = true;
    for (int case_id = 1; case_id <= 4; ++case_id) {
        const descm::ExactCase c = descm::exact_reference(case_id, g);
        const descm::ConformalMap map = descm::map_single_singularity(c.potential);
        double best = std::numeric_limits<double>::infinity();
        double computed = 0.0;
        int n_used = n_max;
        for (int N = std::max(2, (c.level + 2) / 2); N <= n_max; ++N) {
            const auto sys = descm::build_system(c.potential, map, N);
            const auto spec = descm::generalized_eigs(sys, c.level + 1);
            computed = spec.eigenvalues[c.level];
            best = std::abs(computed - c.energy);
            if (best <= tol) {
                n_used = N;
                break;
            }
        }
        const bool ok = best <= tol;
        all_ok = all_ok && ok;
        std::printf("%-5d %-22.15g %-22.15g %-22.15g %-12.3e %d%s\n",
                    case_id, c.lambda, c.energy, computed, best, n_used,
                    ok ? "" : "  FAIL");
    }
    return all_ok ? kExitOk : kExitNumerical;
}

descm::RationalPotential load_potential(const std::string& source) {
    std::string text;
    const auto first = source.find_first_not_of(" \t\n");
    if (first != std::string::npos && source[first] == '{') {
        text = source;
    } else {
        std::ifstream in(source);
        if (!in) {
            throw std::invalid_argument("cannot open potential file: " + source);
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return descm::potential_from_json(nlohmann::json::parse(text));
}

int run_solve(const std::string& source, const std::string& map_name,
              double tol, int n_max, int levels, const std::string& format,
              const std::string& out_path) {
    const descm::RationalPotential potential = load_potential(source);
    const descm::ValidationReport report = potential.validate();
    if (!report.ok) {
        for (const std::string& v : report.violations) {
            std::cerr << "invalid potential: " << v << '\n';
        }
        return kExitInput;
    }
    const descm::ConvergeResult result =
        descm::converge(potential, parse_strategy(map_name), tol, n_max, levels);

    std::ostringstream body;
    if (format == "csv") {
        descm::write_records_csv(body, result.records);
    } else {
        nlohmann::json j;
        j["potential"] = descm::potential_to_json(potential);
        j["map"] = descm::map_report(result.map);
        j["converged"] = result.converged;
        j["eigenvalues"] = result.spectrum.eigenvalues;
        j["records"] = descm::records_to_json(result.records);
        body << j.dump(2) << '\n';
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write: " << out_path << '\n';
            return kExitInput;
        }
        out << body.str();
    }
    if (!result.converged) {
        descm::log(descm::LogLevel::error, "tolerance not reached by N_max");
        return kExitNumerical;
    }
    return kExitOk;
}

int run_random_study(int m, int l, int count, std::uint64_t seed, double tol,
                     int n_max, int levels, int jobs, const std::string& out_prefix) {
    const descm::StudyReport report =
        descm::random_study(m, l, count, seed, tol, n_max, levels, jobs);

    const std::string json_path = out_prefix + ".json";
    const std::string csv_path = out_prefix + ".csv";
    const std::string plot_path = out_prefix + ".gnuplot";
    {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write: " << json_path << '\n';
            return kExitInput;
        }
        out << descm::study_to_json(report).dump(2) << '\n';
    }
    {
        std::ofstream out(csv_path);
        if (!out) {
            std::cerr << "cannot write: " << csv_path << '\n';
            return kExitInput;
        }
        descm::write_study_csv(out, report);
    }
    {
        std::ofstream out(plot_path);
        if (!out) {
            std::cerr << "cannot write: " << plot_path << '\n';
            return kExitInput;
        }
        descm::write_study_gnuplot(out, csv_path);
    }

    int converged = 0;
    for (const descm::StudyEntry& e : report.entries) {
        if (e.converged) {
            ++converged;
        } else {
            std::cout << "not converged: potential " << e.potential_id
                      << " (map " << descm::to_string(e.map.kind);
            if (!e.map.fallback_reason.empty()) {
                std::cout << ", " << e.map.fallback_reason;
            }
            std::cout << ")\n";
        }
    }
    std::cout << converged << "/" << count << " potentials converged; report in "
              << json_path << '\n';
    return converged > 0 ? kExitOk : kExitNumerical;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DESCM eigenvalue solver for rational anharmonic potentials"};
    app.require_subcommand(1);

    double g = 1.0;
    double tol = 1e-10;
    int n_max = 200;
    int levels = 4;

    auto* validate = app.add_subcommand(
        "validate-exact", "check the four closed-form spectra of x^2 + lambda x^2/(1+g x^2)");
    validate->add_option("--g", g, "denominator coupling g > 0")->check(CLI::PositiveNumber);
    validate->add_option("--tol", tol, "absolute error target");
    validate->add_option("--nmax", n_max, "largest half-width N");

    std::string potential_source;
    std::string map_name = "auto";
    std::string format = "csv";
    std::string out_path;
    auto* solve = app.add_subcommand("solve", "solve one potential with N-refinement");
    solve->add_option("--potential", potential_source, "potential JSON file or inline JSON")
        ->required();
    solve->add_option("--map", map_name, "auto|plain|single|multi");
    solve->add_option("--tol", tol, "successive-difference tolerance");
    solve->add_option("--nmax", n_max, "largest half-width N");
    solve->add_option("--levels", levels, "number of eigenvalue levels")->check(CLI::PositiveNumber);
    solve->add_option("--format", format, "csv|json");
    solve->add_option("--out", out_path, "output file (default stdout)");

    int m = 1, l = 1, count = 100, jobs = 1, study_levels = 1;
    std::uint64_t seed = 0;
    std::string out_prefix = "study";
    auto* study = app.add_subcommand("random-study", "run randomized potentials to tolerance");
    study->add_option("--m", m, "exponent m of the x^{2m} term")->required()->check(CLI::PositiveNumber);
    study->add_option("--l", l, "number of denominator root pairs")->required()->check(CLI::PositiveNumber);
    study->add_option("--count", count, "number of potentials")->required()->check(CLI::PositiveNumber);
    study->add_option("--seed", seed, "master seed")->required();
    study->add_option("--tol", tol, "successive-difference tolerance");
    study->add_option("--nmax", n_max, "largest half-width N");
    study->add_option("--levels", study_levels, "levels tracked per potential")->check(CLI::PositiveNumber);
    study->add_option("--jobs", jobs, "concurrent potential evaluations")->check(CLI::PositiveNumber);
    study->add_option("--out", out_prefix, "output prefix for .json/.csv/.gnuplot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (validate->parsed()) {
            return run_validate_exact(g, tol, n_max);
        }
        if (solve->parsed()) {
            return run_solve(potential_source, map_name, tol, n_max, levels, format, out_path);
        }
        return run_random_study(m, l, count, seed, tol, n_max, study_levels, jobs, out_prefix);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
