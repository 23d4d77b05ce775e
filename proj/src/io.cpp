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

#include "tgre/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tgre {

using nlohmann::json;

namespace {

json pauli_to_json(const PauliOperator &op) { return json{{"x", op.x_support}, {"z", op.z_support}}; }

std::vector<Label> labels_from(const json &doc, const char *key) {
    if (!doc.contains(key) || !doc.at(key).is_array()) {
        throw ParseError(std::string("missing label list '") + key + "'");
    }
    std::vector<Label> out;
    for (const auto &v : doc.at(key)) {
        if (!v.is_number_unsigned()) {
            throw ParseError(std::string("non-label entry in '") + key + "'");
        }
        out.push_back(v.get<Label>());
    }
    return out;
}

PauliOperator pauli_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw ParseError("Pauli operator must be an object with x and z lists");
    }
    PauliOperator op;
    op.x_support = labels_from(doc, "x");
    op.z_support = labels_from(doc, "z");
    std::sort(op.x_support.begin(), op.x_support.end());
    std::sort(op.z_support.begin(), op.z_support.end());
    return op;
}

std::vector<PauliOperator> paulis_from(const json &doc, const char *key) {
    if (!doc.contains(key) || !doc.at(key).is_array()) {
        throw ParseError(std::string("missing operator list '") + key + "'");
    }
    std::vector<PauliOperator> out;
    for (const auto &v : doc.at(key)) {
        out.push_back(pauli_from_json(v));
    }
    return out;
}

template <typename T>
T required(const json &doc, const char *key) {
    if (!doc.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
    }
}

size_t max_stabilizer_weight(const StabilizerCode &code) {
    size_t w = 0;
    for (const auto &s : code.stabilizers()) {
        w = std::max(w, s.weight());
    }
    return w;
}

}  // namespace

json code_to_json(const StabilizerCode &code) {
    json doc;
    doc["format_version"] = code_file_version;
    doc["family"] = to_string(code.family());
    doc["L"] = code.level();
    doc["a"] = code.rate_param();
    doc["n"] = code.n();
    doc["k"] = code.k();
    doc["qubit_labels"] = code.qubit_labels();
    for (auto [key, list] : {std::pair{"stabilizers", &code.stabilizers()},
                             std::pair{"logical_x", &code.logical_x()},
                             std::pair{"logical_z", &code.logical_z()}}) {
        json arr = json::array();
        for (const auto &op : *list) {
            arr.push_back(pauli_to_json(op));
        }
        doc[key] = std::move(arr);
    }
    doc["metadata"] = {
        {"generator_weight", max_stabilizer_weight(code)},
        {"rate", to_string(Rational(static_cast<std::int64_t>(code.k()), static_cast<std::int64_t>(code.n())))},
    };
    return doc;
}

StabilizerCode code_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw ParseError("code file must hold a JSON object");
    }
    const int version = required<int>(doc, "format_version");
    if (version != code_file_version) {
        throw ParseError("unsupported format_version " + std::to_string(version));
    }
    Family family;
    try {
        family = parse_family(required<std::string>(doc, "family"));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    const int level = required<int>(doc, "L");
    const int a = required<int>(doc, "a");
    const auto n = required<size_t>(doc, "n");
    const auto k = required<size_t>(doc, "k");
    auto labels = labels_from(doc, "qubit_labels");
    auto stabs = paulis_from(doc, "stabilizers");
    auto lx = paulis_from(doc, "logical_x");
    auto lz = paulis_from(doc, "logical_z");
    if (labels.size() != n) {
        throw ParseError("n does not match the number of qubit labels");
    }
    if (lx.size() != k || lz.size() != k) {
        throw ParseError("k does not match the number of logical operators");
    }
    try {
        return StabilizerCode(family, level, a, std::move(labels), std::move(stabs), std::move(lx), std::move(lz));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

void save_code(const StabilizerCode &code, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << code_to_json(code).dump(2) << '\n';
}

StabilizerCode load_code(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error &e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
    return code_from_json(doc);
}

void write_alist(std::ostream &out, const BitMatrix &m) {
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    std::vector<std::vector<size_t>> col_adj(cols);
    std::vector<std::vector<size_t>> row_adj(rows);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c : m.row_vector(r).ones()) {
            row_adj[r].push_back(c);
            col_adj[c].push_back(r);
        }
    }
    size_t max_col = 0;
    size_t max_row = 0;
    for (const auto &a : col_adj) {
        max_col = std::max(max_col, a.size());
    }
    for (const auto &a : row_adj) {
        max_row = std::max(max_row, a.size());
    }
    auto write_degrees = [&](const std::vector<std::vector<size_t>> &adj) {
        for (size_t i = 0; i < adj.size(); ++i) {
            out << (i ? " " : "") << adj[i].size();
        }
        out << '\n';
    };
    auto write_lists = [&](const std::vector<std::vector<size_t>> &adj, size_t width) {
        for (const auto &a : adj) {
            for (size_t j = 0; j < width; ++j) {
                out << (j ? " " : "") << (j < a.size() ? a[j] + 1 : 0);
            }
            out << '\n';
        }
    };
    out << cols << ' ' << rows << '\n' << max_col << ' ' << max_row << '\n';
    write_degrees(col_adj);
    write_degrees(row_adj);
    write_lists(col_adj, max_col);
    write_lists(row_adj, max_row);
}

BitMatrix read_alist(std::istream &in) {
    auto next = [&]() {
        long long v;
        if (!(in >> v) || v < 0) {
            throw ParseError("truncated or malformed alist data");
        }
        return static_cast<size_t>(v);
    };
    const size_t cols = next();
    const size_t rows = next();
    const size_t max_col = next();
    const size_t max_row = next();
    std::vector<size_t> col_deg(cols);
    std::vector<size_t> row_deg(rows);
    for (auto &d : col_deg) {
        d = next();
    }
    for (auto &d : row_deg) {
        d = next();
    }
    BitMatrix m(rows, cols);
    for (size_t c = 0; c < cols; ++c) {
        for (size_t j = 0; j < max_col; ++j) {
            const size_t r = next();
            if (j < col_deg[c]) {
                if (r == 0 || r > rows) {
                    throw ParseError("alist column entry out of range");
                }
                m.set(r - 1, c, true);
            }
        }
    }
    for (size_t r = 0; r < rows; ++r) {
        size_t seen = 0;
        for (size_t j = 0; j < max_row; ++j) {
            const size_t c = next();
            if (j < row_deg[r]) {
                if (c == 0 || c > cols || !m.get(r, c - 1)) {
                    throw ParseError("alist row list disagrees with the column lists");
                }
                ++seen;
            }
        }
        if (seen != m.row_popcount(r)) {
            throw ParseError("alist row degree disagrees with the column lists");
        }
    }
    return m;
}

std::string code_id(const StabilizerCode &code) {
    std::string id = code.family() == Family::xztgre ? "xz" : "z";
    id += "-L" + std::to_string(code.level());
    if (code.family() == Family::xztgre) {
        id += "-a" + std::to_string(code.rate_param());
    }
    return id;
}

std::string code_listing(const StabilizerCode &code) {
    std::ostringstream out;
    out << to_string(code.family()) << " L=" << code.level();
    if (code.family() == Family::xztgre) {
        out << " a=" << code.rate_param();
    }
    out << " N=" << code.n() << " k=" << code.k() << '\n';
    for (size_t i = 0; i < code.stabilizers().size(); ++i) {
        out << code.stabilizer_name(i) << " = " << code.stabilizers()[i].str() << '\n';
    }
    for (size_t q = 0; q < code.k(); ++q) {
        out << "Xbar_" << q + 1 << " = " << code.logical_x()[q].str() << '\n';
    }
    for (size_t q = 0; q < code.k(); ++q) {
        out << "Zbar_" << q + 1 << " = " << code.logical_z()[q].str() << '\n';
    }
    return out.str();
}

namespace {

json bound_json(const ClassBound &b) {
    json out;
    out["weight"] = b.weight ? json(*b.weight) : json("unknown above bound");
    out["certificate"] = b.certificate ? json(b.certificate->str()) : json(nullptr);
    return out;
}

std::string bound_text(const ClassBound &b, const DistanceResult &r) {
    if (!b.weight) {
        return "> " + std::to_string(r.max_weight);
    }
    return std::to_string(*b.weight);
}

}  // namespace

json distance_to_json(const DistanceResult &result) {
    json out;
    out["mode"] = to_string(result.mode);
    out["x"] = bound_json(result.x);
    out["z"] = bound_json(result.z);
    out["y"] = bound_json(result.y);
    out["d"] = result.d ? json(*result.d) : json("unknown above bound");
    out["search_effort"] = result.search_effort;
    if (result.mode == DistanceMode::exact) {
        out["max_weight"] = result.max_weight;
    }
    return out;
}

std::string distance_table(const StabilizerCode &code, const DistanceResult &result) {
    std::ostringstream out;
    const bool est = result.mode == DistanceMode::estimated;
    out << "code " << code_id(code) << " N=" << code.n() << " k=" << code.k() << " mode=" << to_string(result.mode)
        << '\n';
    auto line = [&](const char *name, const ClassBound &b) {
        out << name << (est ? " <= " : " = ") << bound_text(b, result);
        if (b.certificate) {
            out << "  " << b.certificate->str();
        }
        out << '\n';
    };
    line("wt_min(X)", result.x);
    line("wt_min(Z)", result.z);
    line("wt_min(Y)", result.y);
    out << "d" << (est ? " <= " : " = ") << (result.d ? std::to_string(*result.d) : "> " + std::to_string(result.max_weight))
        << '\n';
    out << "search_effort " << result.search_effort << '\n';
    return out.str();
}

std::string to_string(SurfaceLayout layout) { return layout == SurfaceLayout::planar ? "planar" : "rotated"; }

SurfaceLayout parse_surface_layout(std::string_view text) {
    if (text == "planar") {
        return SurfaceLayout::planar;
    }
    if (text == "rotated") {
        return SurfaceLayout::rotated;
    }
    throw std::invalid_argument("unknown surface layout '" + std::string(text) + "'");
}

std::int64_t surface_code_length(std::int64_t d, SurfaceLayout layout) {
    return layout == SurfaceLayout::planar ? d * d + (d - 1) * (d - 1) : d * d;
}

std::int64_t largest_surface_distance(std::int64_t n, SurfaceLayout layout) {
    std::int64_t d = 0;
    while (surface_code_length(d + 1, layout) <= n) {
        ++d;
    }
    return d >= 2 ? d : 0;
}

std::vector<RateRow> rate_table(int max_level, bool compare, SurfaceLayout layout) {
    if (max_level < 2) {
        throw std::invalid_argument("rate table needs max_L >= 2");
    }
    std::vector<RateRow> rows;
    for (int level = 2; level <= max_level; ++level) {
        RateRow row;
        row.level = level;
        row.a = a_schedule(level);
        const CodeParams params = code_params(Family::xztgre, level, row.a);
        row.n = static_cast<std::int64_t>(params.n);
        row.rate = params.rate;
        if (compare) {
            row.surface_d = largest_surface_distance(row.n, layout);
            if (row.surface_d > 0) {
                row.compared = true;
                row.surface_n = surface_code_length(row.surface_d, layout);
                row.surface_rate = Rational(1, row.surface_n);
                row.ratio = row.rate / row.surface_rate;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string rate_table_text(const std::vector<RateRow> &rows) {
    std::ostringstream out;
    const bool compare = std::any_of(rows.begin(), rows.end(), [](const RateRow &r) { return r.compared; });
    out << "L,a,N,r";
    if (compare) {
        out << ",surface_d,surface_N,surface_r,t";
    }
    out << '\n';
    for (const auto &r : rows) {
        out << r.level << ',' << r.a << ',' << r.n << ',' << to_string(r.rate);
        if (compare) {
            if (r.compared) {
                out << ',' << r.surface_d << ',' << r.surface_n << ',' << to_string(r.surface_rate) << ','
                    << to_string(r.ratio);
            } else {
                out << ",,,,";
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string code_columns(const SimReport &r) {
    std::ostringstream out;
    out << to_string(r.family) << ',' << r.level << ',' << r.rate_param << ',' << r.n
        << ',' << r.k;
    return out.str();
}

}  // namespace

std::string distance_csv_header() { return "family,L,a,N,k,mode,effort,seed,wt_x,wt_z,wt_y,d,cert_x,cert_z,cert_y"; }

std::string distance_csv_row(const StabilizerCode &code, const DistanceResult &r, std::uint64_t seed) {
    auto weight = [](const ClassBound &b) { return b.weight ? std::to_string(*b.weight) : std::string(); };
    auto cert = [](const ClassBound &b) { return b.certificate ? b.certificate->str() : std::string(); };
    std::ostringstream out;
    out << to_string(code.family()) << ',' << code.level() << ',' << code.rate_param() << ',' << code.n() << ','
        << code.k() << ',' << to_string(r.mode) << ',' << r.search_effort << ','
        << (r.mode == DistanceMode::estimated ? seed : 0) << ',' << weight(r.x) << ',' << weight(r.z) << ','
        << weight(r.y) << ',' << (r.d ? std::to_string(*r.d) : std::string()) << ',' << cert(r.x) << ','
        << cert(r.z) << ',' << cert(r.y);
    return out.str();
}

std::string simulate_csv_header() {
    return "family,L,a,N,k,p,trials,failures_block,ler_block,ler_slq_avg,ci_low,ci_high,seed";
}

std::string simulate_csv_row(const SimReport &r) {
    const Interval ci = r.block_interval();
    std::ostringstream out;
    out << code_columns(r) << ',' << format_double(r.p) << ',' << r.trials << ',' << r.failures_block << ','
        << format_double(r.ler_block()) << ',' << format_double(r.ler_slq_avg()) << ',' << format_double(ci.low)
        << ',' << format_double(ci.high) << ',' << r.seed;
    return out.str();
}

std::string slq_csv_header(size_t max_k) {
    std::string h = "family,L,a,N,k,p";
    for (size_t q = 1; q <= max_k; ++q) {
        h += ",ler_slq_" + std::to_string(q);
    }
    return h;
}

std::string slq_csv_row(const SimReport &r, size_t max_k) {
    std::string row = code_columns(r) + "," + format_double(r.p);
    for (size_t q = 0; q < max_k; ++q) {
        row += ",";
        if (q < r.failures_per_qubit.size()) {
            row += format_double(r.ler_slq(q));
        }
    }
    return row;
}

std::string threshold_summary_line(const ThresholdSweep &sweep) {
    size_t found = 0;
    for (const auto &c : sweep.crossings) {
        found += c.p.has_value();
    }
    std::ostringstream out;
    out << "# threshold";
    if (sweep.median) {
        out << " median=" << format_double(*sweep.median) << " min=" << format_double(*sweep.min_crossing)
            << " max=" << format_double(*sweep.max_crossing);
    } else {
        out << " median=none";
    }
    out << " crossings=" << found << '/' << sweep.crossings.size();
    return out.str();
}

}  // namespace tgre
