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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tgre/codes.hpp"
#include "tgre/distance.hpp"
#include "tgre/gf2.hpp"
#include "tgre/sim.hpp"

namespace tgre {

inline constexpr int code_file_version = 1;

/// Malformed or inconsistent input file.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

nlohmann::json code_to_json(const StabilizerCode &code);
/// Rebuilds the code exactly as listed; does not run validation.
StabilizerCode code_from_json(const nlohmann::json &doc);
void save_code(const StabilizerCode &code, const std::string &path);
StabilizerCode load_code(const std::string &path);

/// alist format: "cols rows", max degrees, per-column then per-row degrees and 1-indexed
/// neighbour lists padded with zeros.
void write_alist(std::ostream &out, const BitMatrix &m);
BitMatrix read_alist(std::istream &in);

/// "xz-L3-a1" style identifier.
std::string code_id(const StabilizerCode &code);

/// Table-style listing of stabilizers and logical operators, one per line.
std::string code_listing(const StabilizerCode &code);

nlohmann::json distance_to_json(const DistanceResult &result);
std::string distance_table(const StabilizerCode &code, const DistanceResult &result);

enum class SurfaceLayout { planar, rotated };

std::string to_string(SurfaceLayout layout);
SurfaceLayout parse_surface_layout(std::string_view text);

/// Qubit count of the distance-d surface code: d^2 + (d-1)^2 planar, d^2 rotated.
std::int64_t surface_code_length(std::int64_t d, SurfaceLayout layout = SurfaceLayout::planar);
/// Largest d >= 2 whose surface code fits in n qubits; 0 if none does.
std::int64_t largest_surface_distance(std::int64_t n, SurfaceLayout layout = SurfaceLayout::planar);

struct RateRow {
    int level = 0;
    int a = 0;
    std::int64_t n = 0;
    Rational rate;
    bool compared = false;
    std::int64_t surface_d = 0;
    std::int64_t surface_n = 0;
    Rational surface_rate;
    Rational ratio;
};

/// One row per L in [2, max_level] with a = a_schedule(L).
std::vector<RateRow> rate_table(int max_level, bool compare, SurfaceLayout layout = SurfaceLayout::planar);
std::string rate_table_text(const std::vector<RateRow> &rows);

std::string simulate_csv_header();
std::string simulate_csv_row(const SimReport &r);
/// Companion file rows: code columns, p, then ler_slq_1..ler_slq_k padded to max_k columns.
std::string slq_csv_header(size_t max_k);
std::string slq_csv_row(const SimReport &r, size_t max_k);
/// Comment line summarising the pairwise crossings of a sweep.
std::string threshold_summary_line(const ThresholdSweep &sweep);

std::string distance_csv_header();
/// trials and seed are recorded as 0 for exact searches.
std::string distance_csv_row(const StabilizerCode &code, const DistanceResult &r, std::uint64_t seed);

/// Shortest round-trip decimal form used in every CSV field.
std::string format_double(double v);

}  // namespace tgre
