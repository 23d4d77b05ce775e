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

#include "tgre/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "tgre/codes.hpp"
#include "tgre/decoder.hpp"
#include "tgre/distance.hpp"
#include "tgre/golden.hpp"
#include "tgre/io.hpp"
#include "tgre/parallel.hpp"
#include "tgre/sim.hpp"

namespace tgre {

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::vector<PauliOperator> parse_all(const std::vector<std::string> &list) {
    std::vector<PauliOperator> out;
    for (const auto &s : list) {
        out.push_back(parse_pauli(s));
    }
    return out;
}

std::vector<Label> labels_of(const std::vector<PauliOperator> &ops) {
    std::vector<Label> labels;
    for (const auto &op : ops) {
        auto s = op.support();
        labels.insert(labels.end(), s.begin(), s.end());
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

// Number of positions where two operator lists disagree; a length mismatch counts as a failure.
size_t count_mismatches(const std::vector<PauliOperator> &built, const std::vector<PauliOperator> &golden) {
    size_t bad = built.size() == golden.size() ? 0 : 1 + std::max(built.size(), golden.size());
    for (size_t i = 0; i < std::min(built.size(), golden.size()); ++i) {
        bad += !(built[i] == golden[i]);
    }
    return bad;
}

Outcome golden_ztgre() {
    Outcome out{true, ""};
    std::ostringstream detail;
    for (const auto &listing : golden::ztgre_listings()) {
        const StabilizerCode code = build_ztgre(listing.level);
        const size_t bad = count_mismatches(code.stabilizers(), parse_all(listing.stabilizers)) +
                           count_mismatches(code.logical_x(), parse_all(listing.logical_x)) +
                           count_mismatches(code.logical_z(), parse_all(listing.logical_z));
        detail << "N=" << code.n() << (bad ? " mismatches=" + std::to_string(bad) : " exact") << "; ";
        out.pass = out.pass && bad == 0;
    }
    out.detail = detail.str();
    return out;
}

Outcome golden_xztgre() {
    const auto &listing = golden::xztgre_3_1_printed();
    const StabilizerCode code = build_xztgre(listing.level, listing.a);
    const auto printed = parse_all(listing.stabilizers);
    std::vector<size_t> differing;
    for (size_t i = 0; i < std::min(printed.size(), code.stabilizers().size()); ++i) {
        if (!(printed[i] == code.stabilizers()[i])) {
            differing.push_back(i);
        }
    }
    const bool sizes_ok = printed.size() == code.stabilizers().size();
    const bool logicals_ok = code.logical_x() == parse_all(listing.logical_x) &&
                             code.logical_z() == parse_all(listing.logical_z);
    bool single_deviation = false;
    if (sizes_ok && differing.size() == 1 && code.stabilizer_name(differing[0]) == "S'_2") {
        const auto &ours = code.stabilizers()[differing[0]].x_support;
        const auto &theirs = printed[differing[0]].x_support;
        std::vector<Label> only_ours;
        std::vector<Label> only_theirs;
        std::set_difference(ours.begin(), ours.end(), theirs.begin(), theirs.end(), std::back_inserter(only_ours));
        std::set_difference(theirs.begin(), theirs.end(), ours.begin(), ours.end(), std::back_inserter(only_theirs));
        single_deviation = only_ours == std::vector<Label>{15} && only_theirs == std::vector<Label>{11} &&
                           code.stabilizers()[differing[0]].z_support.empty() && printed[differing[0]].z_support.empty();
    }
    const bool built_valid = validate_code(code).ok();
    const StabilizerCode as_printed(
        Family::xztgre, listing.level, listing.a, labels_of(printed), printed, parse_all(listing.logical_x),
        parse_all(listing.logical_z));
    const ValidationReport printed_report = validate_code(as_printed);
    const auto *commute = printed_report.find("stabilizers_commute");
    const bool printed_fails = commute && !commute->passed;

    std::ostringstream detail;
    detail << "differing stabilizers=" << differing.size();
    for (size_t i : differing) {
        detail << " " << code.stabilizer_name(i) << " ours=" << code.stabilizers()[i].str()
               << " printed=" << printed[i].str();
    }
    detail << "; logicals " << (logicals_ok ? "exact" : "differ") << "; built code validation "
           << (built_valid ? "passes" : "fails") << "; printed listing validation "
           << (printed_fails ? "fails commutation" : "does not fail commutation");
    if (commute && !commute->detail.empty()) {
        detail << " (" << commute->detail << ")";
    }
    return {sizes_ok && single_deviation && logicals_ok && built_valid && printed_fails, detail.str()};
}

Outcome structural_validation() {
    Outcome out{true, ""};
    std::ostringstream detail;
    for (const auto &row : golden::distance_rows()) {
        const StabilizerCode code = build_xztgre(row.level, row.a);
        const ValidationReport report = validate_code(code);
        detail << "N=" << code.n() << (report.ok() ? " ok" : " FAILED");
        for (const auto &c : report.checks) {
            if (!c.passed) {
                detail << " [" << c.name << "]";
            }
        }
        detail << "; ";
        out.pass = out.pass && report.ok();
    }
    out.detail = detail.str();
    return out;
}

Outcome parameters() {
    Outcome out{true, ""};
    std::ostringstream detail;
    for (const auto &row : golden::distance_rows()) {
        const CodeParams params = code_params(Family::xztgre, row.level, row.a);
        const bool params_ok = params.n == row.n && params.rate == row.rate &&
                               Rational(static_cast<std::int64_t>(params.k), static_cast<std::int64_t>(params.n)) ==
                                   row.rate;
        const int scheduled = a_schedule(row.level);
        detail << "L=" << row.level << " N=" << params.n << " k=" << params.k << " r=" << to_string(params.rate)
               << " a_schedule=" << scheduled << (params_ok && scheduled == row.a ? "" : " MISMATCH") << "; ";
        out.pass = out.pass && params_ok && scheduled == row.a;
    }
    out.detail = detail.str();
    return out;
}

std::string bound_str(const ClassBound &b) { return b.weight ? std::to_string(*b.weight) : "?"; }

Outcome exact_distances() {
    Outcome out{true, ""};
    std::ostringstream detail;
    for (const auto &row : golden::distance_rows()) {
        if (row.n > 80) {
            continue;
        }
        const StabilizerCode code = build_xztgre(row.level, row.a);
        const DistanceResult r = exact_distance(code, std::max({row.x, row.z, row.y}));
        const bool ok = r.x.weight == row.x && r.z.weight == row.z && r.y.weight == row.y && r.d == row.d;
        detail << "N=" << code.n() << " (" << bound_str(r.x) << "," << bound_str(r.z) << "," << bound_str(r.y) << ","
               << (r.d ? std::to_string(*r.d) : "?") << ")" << (ok ? "" : " expected (" + std::to_string(row.x) + "," +
               std::to_string(row.z) + "," + std::to_string(row.y) + "," + std::to_string(row.d) + ")") << "; ";
        out.pass = out.pass && ok;
    }
    out.detail = detail.str();
    return out;
}

// A certificate must commute with every stabilizer, lie outside the stabilizer group, and
// carry the reported weight.
bool certificate_ok(const StabilizerCode &code, const RowSpace &group, const ClassBound &b) {
    if (!b.weight || !b.certificate || b.certificate->weight() != *b.weight) {
        return false;
    }
    const SymplecticVector v = code.to_symplectic(*b.certificate);
    return syndrome(code, v).none() && !group.contains(v.flattened());
}

struct DistanceRun {
    Outcome outcome;
    std::string csv;
};

DistanceRun estimated_distances(const AcceptanceOptions &opt, unsigned workers) {
    DistanceRun run;
    run.outcome.pass = true;
    std::ostringstream detail;
    std::ostringstream csv;
    csv << distance_csv_header() << '\n';
    for (const auto &row : golden::distance_rows()) {
        if (row.n <= 80) {
            continue;
        }
        const StabilizerCode code = build_xztgre(row.level, row.a);
        const DistanceResult r = estimate_distance(code, opt.distance_trials, opt.distance_seed, workers);
        const RowSpace group(code.stabilizer_matrix());
        const bool certs = certificate_ok(code, group, r.x) && certificate_ok(code, group, r.z) &&
                           certificate_ok(code, group, r.y);
        const bool ok = certs && r.d == row.d;
        detail << "N=" << code.n() << " (" << bound_str(r.x) << "," << bound_str(r.z) << "," << bound_str(r.y) << ","
               << (r.d ? std::to_string(*r.d) : "?") << ")";
        if (r.x.weight != row.x || r.z.weight != row.z || r.y.weight != row.y) {
            detail << " class bounds differ from reference (" << row.x << "," << row.z << "," << row.y << ")";
        }
        if (!certs) {
            detail << " BAD CERTIFICATE";
        }
        if (r.d != row.d) {
            detail << " expected d=" << row.d;
        }
        detail << "; ";
        csv << distance_csv_row(code, r, opt.distance_seed) << '\n';
        run.outcome.pass = run.outcome.pass && ok;
    }
    run.outcome.detail = detail.str();
    run.csv = csv.str();
    return run;
}

Outcome theorem1() {
    Outcome out{true, ""};
    std::ostringstream detail;
    for (int level = 2; level <= 5; ++level) {
        const Theorem1Check c = check_theorem1(level);
        detail << "L=" << level << " min=" << c.measured << " expected=" << c.expected << "; ";
        out.pass = out.pass && c.pass;
    }
    out.detail = detail.str();
    return out;
}

Outcome prop2() {
    Outcome out{true, ""};
    std::ostringstream detail;
    for (int level : {2, 3}) {
        const Prop2Check c = check_prop2(build_xztgre(level, 1));
        detail << "(" << level << ",1) min equivalent weight=" << c.min_equivalent_weight
               << " required>=" << c.type2_weight;
        if (!c.pass) {
            detail << " witness " << c.witness.str();
        }
        detail << "; ";
        out.pass = out.pass && c.pass;
    }
    out.detail = detail.str();
    return out;
}

Outcome decoder_soundness() {
    Outcome out{true, ""};
    std::ostringstream detail;
    DecoderConfig cfg;
    cfg.prior_p = 0.01;
    for (int level : {3, 4}) {
        const StabilizerCode code = build_xztgre(level, 1);
        BpDecoder decoder(code, cfg);
        size_t bad = 0;
        std::vector<std::string> examples;
        for (size_t q = 0; q < code.n(); ++q) {
            for (char kind : {'X', 'Y', 'Z'}) {
                SymplecticVector e(code.n());
                if (kind != 'Z') {
                    e.x.set(q);
                }
                if (kind != 'X') {
                    e.z.set(q);
                }
                const auto &r = decoder.decode(syndrome(code, e));
                SymplecticVector residual = e * r.correction;
                const bool ok = r.converged && !classify_residual(code, residual).block_fail;
                if (!ok) {
                    ++bad;
                    if (examples.size() < 4) {
                        examples.push_back(std::string(1, kind) + std::to_string(code.qubit_labels()[q]));
                    }
                }
            }
        }
        detail << "N=" << code.n() << " " << 3 * code.n() - bad << "/" << 3 * code.n() << " residual-trivial";
        for (const auto &e : examples) {
            detail << " " << e;
        }
        detail << "; ";
        out.pass = out.pass && bad == 0;
    }
    out.detail = detail.str();
    return out;
}

struct SweepRun {
    Outcome outcome;
    std::string csv;
};

std::vector<double> threshold_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 14; ++i) {
        grid.push_back((40 + 5 * i) / 1000.0);
    }
    return grid;
}

SweepRun threshold(const AcceptanceOptions &opt, unsigned workers) {
    std::vector<StabilizerCode> codes;
    for (auto [level, a] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{5, 1}, std::pair{6, 2}}) {
        codes.push_back(build_xztgre(level, a));
    }
    std::vector<const StabilizerCode *> ptrs;
    for (const auto &c : codes) {
        ptrs.push_back(&c);
    }
    const ThresholdSweep sweep = sweep_threshold(ptrs, threshold_grid(), DecoderConfig{}, opt.sim_trials, opt.sim_seed,
                                                 workers);
    SweepRun run;
    std::ostringstream csv;
    csv << simulate_csv_header() << '\n';
    for (const auto &curve : sweep.curves) {
        for (const auto &r : curve) {
            csv << simulate_csv_row(r) << '\n';
        }
    }
    csv << threshold_summary_line(sweep) << '\n';
    run.csv = csv.str();
    run.outcome.pass = sweep.median && *sweep.median >= 0.06 && *sweep.median <= 0.095;
    run.outcome.detail = threshold_summary_line(sweep).substr(2);
    return run;
}

Outcome rate_comparison() {
    Outcome out{true, ""};
    std::ostringstream detail;
    const auto rows = rate_table(12, true);
    bool rates_ok = true;
    bool increasing = true;
    std::optional<Rational> prev;
    for (const auto &row : rows) {
        if (row.level <= 9) {
            rates_ok = rates_ok && row.rate == (row.level <= 5 ? Rational(1, 5) : Rational(1, 9));
        }
        if (row.level >= 3) {
            increasing = increasing && row.compared && (!prev || row.ratio > *prev);
            prev = row.ratio;
        }
    }
    detail << "rates " << (rates_ok ? "1/5 for L<=5, 1/9 for 6<=L<=9" : "MISMATCH") << "; t over L=3..12:";
    for (const auto &row : rows) {
        if (row.level >= 3) {
            detail << " " << to_string(row.ratio);
        }
    }
    detail << (increasing ? " (strictly increasing)" : " (NOT strictly increasing)");
    out.pass = rates_ok && increasing;
    out.detail = detail.str();
    return out;
}

void write_artifact(const AcceptanceOptions &opt, const std::string &name, const std::string &content) {
    if (opt.artifact_dir.empty()) {
        return;
    }
    std::ofstream(opt.artifact_dir + "/" + name) << content;
}

}  // namespace

std::string format_result(const CriterionResult &r) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(1);
    out << (r.pass ? "PASS" : "FAIL") << " " << (r.id < 10 ? " " : "") << r.id << " " << r.name << " (" << r.seconds
        << " s / " << r.budget_seconds << " s): " << r.detail;
    return out.str();
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions &options, const std::function<void(const CriterionResult &)> &on_result) {
    const unsigned first_workers = options.workers ? options.workers : default_workers();
    // The repeat runs with a different worker count to exercise scheduling independence.
    const unsigned second_workers = first_workers == 1 ? 3 : 1;
    std::optional<std::string> distance_csv;
    std::optional<std::string> sweep_csv;

    struct Entry {
        int id;
        const char *name;
        double budget;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> entries = {
        {1, "golden construction, Z-TGRE", 1, golden_ztgre},
        {2, "golden construction, XZ-TGRE", 1, golden_xztgre},
        {3, "structural validation", 30, structural_validation},
        {4, "parameters", 1, parameters},
        {5, "exact distances", 600, exact_distances},
        {6, "estimated distances", 1800,
         [&] {
             DistanceRun run = estimated_distances(options, first_workers);
             distance_csv = run.csv;
             write_artifact(options, "distance.csv", run.csv);
             return run.outcome;
         }},
        {7, "minimum logical X weight of Z-TGRE", 120, theorem1},
        {8, "Type-2 logicals are minimal", 300, prop2},
        {9, "decoder soundness", 60, decoder_soundness},
        {10, "threshold", 3600,
         [&] {
             SweepRun run = threshold(options, first_workers);
             sweep_csv = run.csv;
             write_artifact(options, "threshold.csv", run.csv);
             return run.outcome;
         }},
        {11, "rate comparison", 1, rate_comparison},
        {12, "determinism", 5400,
         [&] {
             if (!distance_csv) {
                 distance_csv = estimated_distances(options, first_workers).csv;
             }
             if (!sweep_csv) {
                 sweep_csv = threshold(options, first_workers).csv;
             }
             const std::string distance_again = estimated_distances(options, second_workers).csv;
             const std::string sweep_again = threshold(options, second_workers).csv;
             std::ostringstream detail;
             detail << "workers " << first_workers << " vs " << second_workers << ": distance CSV "
                    << (distance_again == *distance_csv ? "identical" : "DIFFERS") << ", threshold CSV "
                    << (sweep_again == *sweep_csv ? "identical" : "DIFFERS");
             return Outcome{distance_again == *distance_csv && sweep_again == *sweep_csv, detail.str()};
         }},
    };

    std::vector<CriterionResult> results;
    for (const auto &entry : entries) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), entry.id) == options.only.end()) {
            continue;
        }
        CriterionResult r;
        r.id = entry.id;
        r.name = entry.name;
        r.budget_seconds = entry.budget;
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = entry.run();
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception &e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.seconds > r.budget_seconds) {
            r.pass = false;
            r.detail += " [over runtime budget]";
        }
        if (on_result) {
            on_result(r);
        }
        results.push_back(r);
    }
    return results;
}

}  // namespace tgre
