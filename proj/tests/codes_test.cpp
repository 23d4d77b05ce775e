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

#include "tgre/codes.hpp"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "tgre/golden.hpp"

using namespace tgre;

namespace {

std::vector<PauliOperator> parse_all(const std::vector<std::string> &list) {
    std::vector<PauliOperator> out;
    for (const auto &s : list) {
        out.push_back(parse_pauli(s));
    }
    return out;
}

// Independent commutation oracle on label sets.
bool commute(const PauliOperator &a, const PauliOperator &b) {
    auto overlap = [](const std::vector<Label> &u, const std::vector<Label> &v) {
        size_t n = 0;
        for (Label l : u) {
            n += std::binary_search(v.begin(), v.end(), l);
        }
        return n;
    };
    return (overlap(a.x_support, b.z_support) + overlap(a.z_support, b.x_support)) % 2 == 0;
}

}  // namespace

TEST(pauli, parse_and_print_round_trip) {
    for (const char *s : {"Z1Z3Z9", "X2Y4Z8", "Y1", "X10X200"}) {
        EXPECT_EQ(parse_pauli(s).str(), s);
    }
    auto p = parse_pauli("Z2Z1Z9");
    EXPECT_EQ(p.z_support, (std::vector<Label>{1, 2, 9}));
    EXPECT_TRUE(parse_pauli("I").is_identity());
    EXPECT_THROW(parse_pauli("Q1"), std::invalid_argument);
    EXPECT_THROW(parse_pauli("X"), std::invalid_argument);
    EXPECT_THROW(parse_pauli("X0"), std::invalid_argument);
}

TEST(pauli, product_and_weight) {
    auto a = parse_pauli("X1X2");
    auto b = parse_pauli("Z2Z3");
    auto c = a * b;
    EXPECT_EQ(c.str(), "X1Y2Z3");
    EXPECT_EQ(c.weight(), 3u);
    EXPECT_EQ(c.support(), (std::vector<Label>{1, 2, 3}));
    EXPECT_TRUE((a * a).is_identity());
}

TEST(family, parse_names) {
    EXPECT_EQ(parse_family("z"), Family::ztgre);
    EXPECT_EQ(parse_family("xztgre"), Family::xztgre);
    EXPECT_THROW(parse_family("surface"), std::invalid_argument);
}

TEST(ztgre, matches_reference_listings) {
    for (const auto &listing : golden::ztgre_listings()) {
        const StabilizerCode code = build_ztgre(listing.level);
        EXPECT_EQ(code.stabilizers(), parse_all(listing.stabilizers)) << "L=" << listing.level;
        EXPECT_EQ(code.logical_x(), parse_all(listing.logical_x)) << "L=" << listing.level;
        EXPECT_EQ(code.logical_z(), parse_all(listing.logical_z)) << "L=" << listing.level;
    }
}

TEST(ztgre, spot_values) {
    const auto c5 = build_ztgre(5);
    EXPECT_EQ(c5.stabilizers()[0].str(), "Z1Z2Z3Z5Z9Z17");
    EXPECT_EQ(c5.logical_z()[0].str(), "Z2");
    const auto c4 = build_ztgre(4);
    for (size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(c4.logical_z()[i].z_support, (std::vector<Label>{static_cast<Label>(2 * i + 1)}));
    }
    EXPECT_THROW(build_ztgre(1), std::invalid_argument);
}

TEST(xztgre, matches_printed_listing_except_one_label) {
    const auto &listing = golden::xztgre_3_1_printed();
    const StabilizerCode code = build_xztgre(3, 1);
    const auto printed = parse_all(listing.stabilizers);
    ASSERT_EQ(code.stabilizers().size(), printed.size());
    std::vector<size_t> differing;
    for (size_t i = 0; i < printed.size(); ++i) {
        if (!(code.stabilizers()[i] == printed[i])) {
            differing.push_back(i);
        }
    }
    ASSERT_EQ(differing, (std::vector<size_t>{9}));
    EXPECT_EQ(code.stabilizer_name(9), "S'_2");
    EXPECT_EQ(code.stabilizers()[9].str(), "X3X4X5X6X7X8X15");
    EXPECT_EQ(printed[9].str(), "X3X4X5X6X7X8X11");
    EXPECT_EQ(code.logical_x(), parse_all(listing.logical_x));
    EXPECT_EQ(code.logical_z(), parse_all(listing.logical_z));
}

TEST(xztgre, printed_listing_breaks_commutation) {
    const auto printed = parse_all(golden::xztgre_3_1_printed().stabilizers);
    // The misprinted S'_2 anticommutes with S_3 = Z1Z2Z4Z6Z9Z11Z13 through label 11 alone.
    EXPECT_FALSE(commute(printed[9], printed[2]));
    const StabilizerCode built = build_xztgre(3, 1);
    for (size_t i = 0; i < built.stabilizers().size(); ++i) {
        EXPECT_TRUE(commute(built.stabilizers()[9], built.stabilizers()[i]));
    }
}

TEST(xztgre, example_operators) {
    const StabilizerCode code = build_xztgre(3, 1);
    EXPECT_EQ(code.n(), 20u);
    EXPECT_EQ(code.stabilizers().size(), 16u);
    EXPECT_EQ(code.k(), 4u);
    EXPECT_EQ(code.stabilizers()[0], parse_pauli("Z1Z3Z5Z9Z2Z4Z6"));
    EXPECT_EQ(code.logical_z()[0], parse_pauli("Z2Z1Z9Z17Z25"));
    EXPECT_EQ(code.logical_x()[2], parse_pauli("X4X3X11X19X27"));
    EXPECT_EQ(build_xztgre(9, 2).n(), 1152u);
    EXPECT_THROW(build_xztgre(2, 2), std::invalid_argument);
    EXPECT_THROW(build_xztgre(3, 0), std::invalid_argument);
}

TEST(xztgre, type1_weight_for_smallest_code) {
    const StabilizerCode code = build_xztgre(2, 1);
    EXPECT_EQ(code.n(), 10u);
    EXPECT_EQ(code.k(), 2u);
    for (size_t q = 0; q < code.k(); ++q) {
        const auto &type1 = has_type2_logical_z(code, q) ? code.logical_x()[q] : code.logical_z()[q];
        EXPECT_EQ(type1.weight(), 2u);
        for (Label l : type1.support()) {
            EXPECT_EQ(l % 2, 0u);
        }
    }
}

TEST(xztgre, type2_logicals_have_fixed_weight) {
    for (auto [level, a] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{7, 2}}) {
        const StabilizerCode code = build_xztgre(level, a);
        for (size_t q = 0; q < code.k(); ++q) {
            const auto &type2 = has_type2_logical_z(code, q) ? code.logical_z()[q] : code.logical_x()[q];
            EXPECT_EQ(type2.weight(), type2_logical_weight(a));
            size_t evens = 0;
            for (Label l : type2.support()) {
                evens += l % 2 == 0;
            }
            EXPECT_EQ(evens, 1u);
        }
    }
}

TEST(code_params, reference_rows) {
    for (const auto &row : golden::distance_rows()) {
        const CodeParams p = code_params(Family::xztgre, row.level, row.a);
        EXPECT_EQ(p.n, row.n);
        EXPECT_EQ(p.rate, row.rate);
        EXPECT_EQ(Rational(static_cast<std::int64_t>(p.k), static_cast<std::int64_t>(p.n)), row.rate);
        EXPECT_EQ(a_schedule(row.level), row.a);
        const StabilizerCode code = build_xztgre(row.level, row.a);
        EXPECT_EQ(code.n(), p.n);
        EXPECT_EQ(code.k(), p.k);
    }
    EXPECT_EQ(code_params(Family::xztgre, 3, 1), (CodeParams{20, 4, Rational(1, 5), 7}));
    EXPECT_EQ(code_params(Family::xztgre, 8, 2), (CodeParams{576, 64, Rational(1, 9), 16}));
    EXPECT_EQ(code_params(Family::ztgre, 2), (CodeParams{4, 2, Rational(1, 2), 3}));
}

TEST(a_schedule, bands) {
    EXPECT_EQ(a_schedule(5), 1);
    EXPECT_EQ(a_schedule(6), 2);
    EXPECT_EQ(a_schedule(10), 2);
    EXPECT_EQ(a_schedule(11), 3);
}

TEST(validate, table_codes_pass) {
    for (const auto &row : golden::distance_rows()) {
        const auto report = validate_code(build_xztgre(row.level, row.a));
        EXPECT_TRUE(report.ok()) << "L=" << row.level;
    }
    for (int level = 2; level <= 6; ++level) {
        EXPECT_TRUE(validate_code(build_ztgre(level)).ok()) << "L=" << level;
    }
}

TEST(validate, independent_commutation_oracle_agrees) {
    const StabilizerCode code = build_xztgre(4, 1);
    const auto &s = code.stabilizers();
    for (size_t i = 0; i < s.size(); ++i) {
        for (size_t j = 0; j < s.size(); ++j) {
            ASSERT_TRUE(commute(s[i], s[j]));
        }
        for (size_t q = 0; q < code.k(); ++q) {
            ASSERT_TRUE(commute(s[i], code.logical_x()[q]));
            ASSERT_TRUE(commute(s[i], code.logical_z()[q]));
        }
    }
    for (size_t p = 0; p < code.k(); ++p) {
        for (size_t q = 0; q < code.k(); ++q) {
            ASSERT_EQ(commute(code.logical_x()[p], code.logical_z()[q]), p != q);
        }
    }
}

TEST(validate, duplicated_stabilizer_fails_rank) {
    const StabilizerCode base = build_xztgre(3, 1);
    auto stabs = base.stabilizers();
    stabs[1] = stabs[0];
    const StabilizerCode broken(Family::xztgre, 3, 1, base.qubit_labels(), stabs, base.logical_x(), base.logical_z());
    const auto report = validate_code(broken);
    EXPECT_FALSE(report.ok());
    ASSERT_NE(report.find("stabilizers_independent"), nullptr);
    EXPECT_FALSE(report.find("stabilizers_independent")->passed);
}

TEST(validate, printed_listing_reports_anticommuting_pair) {
    const auto &listing = golden::xztgre_3_1_printed();
    const StabilizerCode base = build_xztgre(3, 1);
    const StabilizerCode printed(Family::xztgre, 3, 1, base.qubit_labels(), parse_all(listing.stabilizers),
                                 parse_all(listing.logical_x), parse_all(listing.logical_z));
    const auto report = validate_code(printed);
    const auto *commute_check = report.find("stabilizers_commute");
    ASSERT_NE(commute_check, nullptr);
    EXPECT_FALSE(commute_check->passed);
    EXPECT_NE(commute_check->detail.find("S_3"), std::string::npos) << commute_check->detail;
    EXPECT_NE(commute_check->detail.find("S'_2"), std::string::npos) << commute_check->detail;
}

TEST(stabilizer_code, symplectic_round_trip) {
    const StabilizerCode code = build_xztgre(3, 1);
    for (const auto &op : code.stabilizers()) {
        EXPECT_EQ(code.from_symplectic(code.to_symplectic(op)), op);
    }
    EXPECT_THROW(code.to_symplectic(parse_pauli("X10")), std::invalid_argument);
    EXPECT_TRUE(code.is_css());
    EXPECT_EQ(code.x_check_rows().size() + code.z_check_rows().size(), code.stabilizers().size());
    EXPECT_EQ(code, build_xztgre(3, 1));
    EXPECT_FALSE(code == build_xztgre(4, 1));
}

TEST(stabilizer_code, rejects_operators_off_the_label_set) {
    EXPECT_THROW(StabilizerCode(Family::xztgre, 1, 1, {1, 2}, {parse_pauli("Z3")}, {}, {}), std::invalid_argument);
}
