// Copyright 2026 The TGRE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tgre/acceptance.hpp"
#include "tgre/codes.hpp"
#include "tgre/decoder.hpp"
#include "tgre/distance.hpp"
#include "tgre/io.hpp"
#include "tgre/sim.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CodeSpec {
    std::string family = "xz";
    int level = 0;
    int a = 1;
};

tgre::StabilizerCode build_from(const CodeSpec &spec) {
    try {
        const tgre::Family family = tgre::parse_family(spec.family);
        return family == tgre::Family::ztgre ? tgre::build_ztgre(spec.level) : tgre::build_xztgre(spec.level, spec.a);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

// "xz:L:a" or "z:L".
CodeSpec parse_code_spec(const std::string &text) {
    CodeSpec spec;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) {
        parts.push_back(part);
    }
    try {
        if (parts.size() == 3) {
            spec = {parts[0], std::stoi(parts[1]), std::stoi(parts[2])};
        } else if (parts.size() == 2) {
            spec = {parts[0], std::stoi(parts[1]), 0};
        } else {
            throw UsageError("");
        }
    } catch (const std::exception &) {
        throw UsageError("bad code spec '" + text + "'; expected xz:L:a or z:L");
    }
    return spec;
}

// "start:stop:step", inclusive of stop up to rounding.
std::vector<double> parse_range(const std::string &text) {
    std::vector<double> v;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) {
        try {
            v.push_back(std::stod(part));
        } catch (const std::exception &) {
            throw UsageError("bad range '" + text + "'");
        }
    }
    if (v.size() != 3 || v[2] <= 0 || v[1] < v[0]) {
        throw UsageError("range must be start:stop:step with step > 0 and stop >= start");
    }
    std::vector<double> grid;
    const auto steps = static_cast<long>(std::floor((v[1] - v[0]) / v[2] + 1e-9));
    for (long i = 0; i <= steps; ++i) {
        grid.push_back(std::round((v[0] + static_cast<double>(i) * v[2]) * 1e12) / 1e12);
    }
    return grid;
}

std::string stem_of(const std::string &path) {
    const auto dot = path.rfind('.');
    const auto slash = path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return path;
    }
    return path.substr(0, dot);
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Tanner-graph recursive expansion codes: construction, distances, decoding"};
    app.require_subcommand(1);

    // build
    auto *build = app.add_subcommand("build", "Construct a code and write it as JSON or alist");
    CodeSpec build_spec;
    std::string build_out;
    std::string build_format = "json";
    build->add_option("--family", build_spec.family, "z or xz")->required();
    build->add_option("--L", build_spec.level, "Recursion level")->required();
    build->add_option("--a", build_spec.a, "Rate parameter (xz only)");
    build->add_option("--out", build_out, "Output path; JSON goes to stdout when omitted");
    build->add_option("--format", build_format, "json or alist")->check(CLI::IsMember({"json", "alist"}));

    // validate
    auto *validate = app.add_subcommand("validate", "Check stabilizer and logical structure of a code file");
    std::string validate_path;
    validate->add_option("code", validate_path, "Code JSON file")->required();

    // distance
    auto *distance = app.add_subcommand("distance", "Exact or estimated minimum logical weights");
    std::string distance_path;
    std::string distance_mode = "exact";
    size_t max_weight = 4;
    std::uint64_t distance_trials = 10000;
    std::optional<std::uint64_t> distance_seed;
    std::uint64_t budget = tgre::default_enumeration_budget;
    std::string distance_json;
    distance->add_option("code", distance_path, "Code JSON file")->required();
    distance->add_option("--mode", distance_mode, "exact or estimate")->check(CLI::IsMember({"exact", "estimate"}));
    distance->add_option("--max-weight", max_weight, "Largest weight enumerated in exact mode");
    distance->add_option("--trials", distance_trials, "Information-set trials in estimate mode");
    distance->add_option("--seed", distance_seed, "Seed, required in estimate mode");
    distance->add_option("--budget", budget, "Candidate budget for exact mode");
    distance->add_option("--json", distance_json, "Also write the result as JSON here");

    // logicals
    auto *logicals = app.add_subcommand("logicals", "Print stabilizers and logical operators");
    CodeSpec logicals_spec;
    std::string logicals_path;
    logicals->add_option("--family", logicals_spec.family, "z or xz");
    logicals->add_option("--L", logicals_spec.level, "Recursion level");
    logicals->add_option("--a", logicals_spec.a, "Rate parameter (xz only)");
    logicals->add_option("--code", logicals_path, "Read the code from a JSON file instead");

    // simulate
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo logical error rates under depolarizing noise");
    std::vector<std::string> sim_codes;
    std::vector<double> sim_p;
    std::string sim_range;
    std::uint64_t sim_trials = 10000;
    std::optional<std::uint64_t> sim_seed;
    std::string sim_out;
    tgre::DecoderConfig sim_cfg;
    std::string schedule = "serial";
    std::optional<double> prior;
    simulate->add_option("--code", sim_codes, "Code spec xz:L:a or z:L; repeatable")->required();
    simulate->add_option("--p", sim_p, "Physical error rates")->delimiter(',');
    simulate->add_option("--p-range", sim_range, "Grid start:stop:step");
    simulate->add_option("--trials", sim_trials, "Trials per point");
    simulate->add_option("--seed", sim_seed, "Seed (required)");
    simulate->add_option("--out", sim_out, "CSV path; per-qubit rates go to <stem>_slq.csv")->required();
    simulate->add_option("--max-iter", sim_cfg.max_iterations, "BP iteration cap per stage");
    simulate->add_option("--schedule", schedule, "serial or flooding")->check(CLI::IsMember({"serial", "flooding"}));
    simulate->add_option("--damping", sim_cfg.damping, "Check message damping in [0,1)");
    simulate->add_flag("--z-first", sim_cfg.z_first, "Decode the Z component first");
    simulate->add_option("--prior", prior, "Decoder prior; defaults to each grid point's p");

    // rate
    auto *rate = app.add_subcommand("rate", "Coding rate table, optionally against the surface code");
    int max_level = 12;
    std::string compare = "surface";
    std::string layout = "planar";
    rate->add_option("--max-L", max_level, "Largest L listed");
    rate->add_option("--compare", compare, "surface or none")->check(CLI::IsMember({"surface", "none"}));
    rate->add_option("--layout", layout, "Surface code layout: planar or rotated")
        ->check(CLI::IsMember({"planar", "rotated"}));

    // selftest
    auto *selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    tgre::AcceptanceOptions acceptance;
    selftest->add_option("--only", acceptance.only, "Criterion ids to run")->delimiter(',');
    selftest->add_option("--artifacts", acceptance.artifact_dir, "Directory for CSV outputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*build) {
            const tgre::StabilizerCode code = build_from(build_spec);
            if (build_format == "json") {
                if (build_out.empty()) {
                    std::cout << tgre::code_to_json(code).dump(2) << '\n';
                } else {
                    tgre::save_code(code, build_out);
                }
            } else {
                if (build_out.empty()) {
                    throw UsageError("alist output needs --out");
                }
                const std::string stem = stem_of(build_out);
                std::ostringstream z_list;
                std::ostringstream x_list;
                tgre::write_alist(z_list, code.z_check_matrix());
                tgre::write_alist(x_list, code.x_check_matrix());
                write_file(stem + "_z.alist", z_list.str());
                write_file(stem + "_x.alist", x_list.str());
            }
            return exit_ok;
        }

        if (*validate) {
            const tgre::StabilizerCode code = tgre::load_code(validate_path);
            const tgre::ValidationReport report = tgre::validate_code(code);
            for (const auto &c : report.checks) {
                std::cout << (c.passed ? "ok   " : "FAIL ") << c.name;
                if (!c.detail.empty()) {
                    std::cout << ": " << c.detail;
                }
                std::cout << '\n';
            }
            return report.ok() ? exit_ok : exit_failure;
        }

        if (*distance) {
            const tgre::StabilizerCode code = tgre::load_code(distance_path);
            tgre::DistanceResult result;
            if (distance_mode == "exact") {
                result = tgre::exact_distance(code, max_weight, budget);
            } else {
                if (!distance_seed) {
                    throw UsageError("estimate mode needs --seed");
                }
                result = tgre::estimate_distance(code, distance_trials, *distance_seed);
            }
            std::cout << tgre::distance_table(code, result);
            if (!distance_json.empty()) {
                write_file(distance_json, tgre::distance_to_json(result).dump(2) + "\n");
            }
            return exit_ok;
        }

        if (*logicals) {
            if (logicals_path.empty() && logicals_spec.level == 0) {
                throw UsageError("logicals needs --code or --family/--L");
            }
            const tgre::StabilizerCode code =
                logicals_path.empty() ? build_from(logicals_spec) : tgre::load_code(logicals_path);
            std::cout << tgre::code_listing(code);
            return exit_ok;
        }

        if (*simulate) {
            if (!sim_seed) {
                throw UsageError("simulate needs --seed");
            }
            std::vector<double> grid = sim_p;
            if (!sim_range.empty()) {
                const auto more = parse_range(sim_range);
                grid.insert(grid.end(), more.begin(), more.end());
            }
            if (grid.empty()) {
                throw UsageError("simulate needs --p or --p-range");
            }
            for (double p : grid) {
                if (!(p >= 0.0 && p <= 1.0)) {
                    throw UsageError("p values must lie in [0, 1]");
                }
            }
            sim_cfg.schedule = tgre::parse_schedule(schedule);
            std::vector<tgre::StabilizerCode> codes;
            for (const auto &spec : sim_codes) {
                codes.push_back(build_from(parse_code_spec(spec)));
            }
            // The decoder prior must stay inside (0, 0.5); p = 0 points reuse the floor.
            auto prior_for = [&](double p) { return prior ? *prior : std::clamp(p, 1e-4, 0.49); };
            std::vector<std::vector<tgre::SimReport>> curves;
            for (const auto &code : codes) {
                std::vector<tgre::SimReport> curve;
                for (double p : grid) {
                    tgre::DecoderConfig cfg = sim_cfg;
                    cfg.prior_p = prior_for(p);
                    curve.push_back(tgre::run_trials(code, tgre::NoiseModel{p}, cfg, sim_trials, *sim_seed));
                }
                curves.push_back(std::move(curve));
            }
            size_t max_k = 0;
            for (const auto &code : codes) {
                max_k = std::max(max_k, code.k());
            }
            std::ostringstream csv;
            std::ostringstream slq;
            csv << tgre::simulate_csv_header() << '\n';
            slq << tgre::slq_csv_header(max_k) << '\n';
            for (const auto &curve : curves) {
                for (const auto &r : curve) {
                    csv << tgre::simulate_csv_row(r) << '\n';
                    slq << tgre::slq_csv_row(r, max_k) << '\n';
                }
            }
            if (codes.size() >= 2 && grid.size() >= 2) {
                const tgre::ThresholdSweep sweep = tgre::analyze_curves(grid, curves);
                csv << tgre::threshold_summary_line(sweep) << '\n';
            }
            write_file(sim_out, csv.str());
            write_file(stem_of(sim_out) + "_slq.csv", slq.str());
            return exit_ok;
        }

        if (*rate) {
            const auto rows = tgre::rate_table(max_level, compare == "surface", tgre::parse_surface_layout(layout));
            std::cout << tgre::rate_table_text(rows);
            return exit_ok;
        }

        if (*selftest) {
            bool all = true;
            tgre::run_acceptance(acceptance, [&](const tgre::CriterionResult &r) {
                std::cout << tgre::format_result(r) << std::endl;
                all = all && r.pass;
            });
            return all ? exit_ok : exit_failure;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const tgre::BudgetExceeded &e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const tgre::ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}
