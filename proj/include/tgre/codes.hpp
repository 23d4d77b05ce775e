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

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tgre/gf2.hpp"
#include "tgre/tanner.hpp"

namespace tgre {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational &r);

/// Pauli operator on labelled qubits, phase ignored. Supports are sorted and duplicate-free.
struct PauliOperator {
    std::vector<Label> x_support;
    std::vector<Label> z_support;

    static PauliOperator x_type(std::vector<Label> support);
    static PauliOperator z_type(std::vector<Label> support);

    /// Number of labels acted on non-trivially.
    size_t weight() const;
    bool is_identity() const noexcept { return x_support.empty() && z_support.empty(); }
    /// Labels in the union of both supports, ascending.
    std::vector<Label> support() const;
    /// Compact listing such as "Z1Z3Z5Z9" or "X2Y4Z8".
    std::string str() const;

    PauliOperator &operator*=(const PauliOperator &other);
    friend PauliOperator operator*(PauliOperator a, const PauliOperator &b) { return a *= b; }
    bool operator==(const PauliOperator &) const = default;
};

/// Inverse of PauliOperator::str(); "I" or "" is the identity.
PauliOperator parse_pauli(std::string_view text);

enum class Family { ztgre, xztgre };

std::string to_string(Family family);
/// Accepts "z", "ztgre", "xz", "xztgre".
Family parse_family(std::string_view text);

/// Immutable stabilizer code over a set of (possibly gapped) qubit labels.
/// Column i of every binary representation corresponds to qubit_labels()[i].
class StabilizerCode {
   public:
    StabilizerCode(
        Family family,
        int level,
        int rate_param,
        std::vector<Label> qubit_labels,
        std::vector<PauliOperator> stabilizers,
        std::vector<PauliOperator> logical_x,
        std::vector<PauliOperator> logical_z);

    Family family() const noexcept { return family_; }
    int level() const noexcept { return level_; }
    /// The a parameter; 0 for Z-TGRE codes.
    int rate_param() const noexcept { return rate_param_; }
    size_t n() const noexcept { return labels_.size(); }
    size_t k() const noexcept { return logical_x_.size(); }

    const std::vector<Label> &qubit_labels() const noexcept { return labels_; }
    const std::vector<PauliOperator> &stabilizers() const noexcept { return stabilizers_; }
    const std::vector<PauliOperator> &logical_x() const noexcept { return logical_x_; }
    const std::vector<PauliOperator> &logical_z() const noexcept { return logical_z_; }

    bool has_label(Label label) const noexcept;
    size_t index_of(Label label) const;

    SymplecticVector to_symplectic(const PauliOperator &op) const;
    PauliOperator from_symplectic(const SymplecticVector &v) const;

    const std::vector<SymplecticVector> &stabilizer_vectors() const noexcept { return stab_vecs_; }
    const std::vector<SymplecticVector> &logical_x_vectors() const noexcept { return lx_vecs_; }
    const std::vector<SymplecticVector> &logical_z_vectors() const noexcept { return lz_vecs_; }
    /// Rows are stabilizers as [x | z] over 2n columns.
    BitMatrix stabilizer_matrix() const;

    /// True when every stabilizer is purely X-type or purely Z-type.
    bool is_css() const noexcept { return css_; }
    /// Indices (into stabilizers()) of the pure-X and pure-Z generators.
    const std::vector<size_t> &x_check_rows() const noexcept { return x_rows_; }
    const std::vector<size_t> &z_check_rows() const noexcept { return z_rows_; }
    /// X-parts of the X-type generators (detects Z errors).
    BitMatrix x_check_matrix() const;
    /// Z-parts of the Z-type generators (detects X errors).
    BitMatrix z_check_matrix() const;

    /// Listing name of stabilizer i: S_j for Z-type, S'_j for the X-type half of an XZ-TGRE code.
    std::string stabilizer_name(size_t i) const;

    bool operator==(const StabilizerCode &other) const;

   private:
    Family family_;
    int level_;
    int rate_param_;
    std::vector<Label> labels_;
    std::vector<PauliOperator> stabilizers_;
    std::vector<PauliOperator> logical_x_;
    std::vector<PauliOperator> logical_z_;
    std::vector<std::int32_t> index_;
    std::vector<SymplecticVector> stab_vecs_;
    std::vector<SymplecticVector> lx_vecs_;
    std::vector<SymplecticVector> lz_vecs_;
    std::vector<size_t> x_rows_;
    std::vector<size_t> z_rows_;
    bool css_ = true;
};

/// Z-TGRE code of length 2^level. Requires level >= 2.
StabilizerCode build_ztgre(int level);
/// XZ-TGRE code of length 2^(level-a) + 2^(level+1). Requires 1 <= a < level.
StabilizerCode build_xztgre(int level, int a);

/// Smallest a >= 1 with level < 1 + 2^(a+1) + a.
int a_schedule(int level);

struct CodeParams {
    size_t n = 0;
    size_t k = 0;
    Rational rate;
    size_t stabilizer_weight = 0;

    bool operator==(const CodeParams &) const = default;
};

CodeParams code_params(Family family, int level, int a = 0);

/// Weight every Type-2 logical of an XZ-TGRE code carries: 1 + 2^(a+1).
size_t type2_logical_weight(int a);
/// Whether logical qubit q (0-based) of an XZ-TGRE code has a Type-2 Z-bar (otherwise its X-bar is Type-2).
bool has_type2_logical_z(const StabilizerCode &code, size_t q);

struct ValidationCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool ok() const;
    const ValidationCheck *find(std::string_view name) const;
};

/// Checks stabilizer commutation and independence, logical commutation and pairing,
/// logical non-membership in the stabilizer group, and k = n - rank.
ValidationReport validate_code(const StabilizerCode &code);

}  // namespace tgre
