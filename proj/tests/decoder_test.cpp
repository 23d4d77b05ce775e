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

#include "tgre/decoder.hpp"

#include <map>
#include <random>

#include "gtest/gtest.h"
#include "tgre/rng.hpp"
#include "tgre/sim.hpp"

using namespace tgre;

namespace {

SymplecticVector single_error(size_t n, size_t q, char kind) {
    SymplecticVector e(n);
    if (kind != 'Z') {
        e.x.set(q);
    }
    if (kind != 'X') {
        e.z.set(q);
    }
    return e;
}

bool in_stabilizer_group(const StabilizerCode &code, const SymplecticVector &v) {
    return RowSpace(code.stabilizer_matrix()).contains(v.flattened());
}

// Lookup-table oracle: a single error is identifiable when every single error sharing its
// syndrome differs from it by a stabilizer.
std::vector<bool> identifiable_single_errors(const StabilizerCode &code) {
    const size_t n = code.n();
    std::vector<SymplecticVector> errors;
    std::map<std::vector<size_t>, std::vector<size_t>> by_syndrome;
    for (size_t q = 0; q < n; ++q) {
        for (char kind : {'X', 'Y', 'Z'}) {
            errors.push_back(single_error(n, q, kind));
            by_syndrome[syndrome(code, errors.back()).ones()].push_back(errors.size() - 1);
        }
    }
    std::vector<bool> ok(errors.size(), true);
    for (const auto &[s, members] : by_syndrome) {
        for (size_t i : members) {
            for (size_t j : members) {
                if (!in_stabilizer_group(code, errors[i] * errors[j])) {
                    ok[i] = false;
                }
            }
        }
    }
    return ok;
}

}  // namespace

TEST(syndrome, identity_and_stabilizers_are_silent) {
    const StabilizerCode code = build_xztgre(3, 1);
    EXPECT_TRUE(syndrome(code, PauliOperator{}).none());
    for (const auto &s : code.stabilizers()) {
        EXPECT_TRUE(syndrome(code, s).none());
    }
}

TEST(syndrome, z_on_label_two) {
    const StabilizerCode code = build_xztgre(3, 1);
    const BitVector s = syndrome(code, parse_pauli("Z2"));
    // Oracle: X-type stabilizers whose support contains label 2.
    std::vector<std::string> expected;
    for (size_t i = 0; i < code.stabilizers().size(); ++i) {
        const auto &x = code.stabilizers()[i].x_support;
        if (std::binary_search(x.begin(), x.end(), Label{2})) {
            expected.push_back(code.stabilizer_name(i));
        }
    }
    std::vector<std::string> fired;
    for (size_t i : s.ones()) {
        fired.push_back(code.stabilizer_name(i));
    }
    EXPECT_EQ(fired, expected);
    EXPECT_EQ(fired, (std::vector<std::string>{"S'_1", "S'_3", "S'_5", "S'_7"}));
}

TEST(syndrome, is_linear) {
    const StabilizerCode code = build_xztgre(4, 1);
    std::mt19937_64 rng(8);
    std::bernoulli_distribution bit(0.2);
    for (int t = 0; t < 50; ++t) {
        SymplecticVector a(code.n()), b(code.n());
        for (size_t i = 0; i < code.n(); ++i) {
            a.x.set(i, bit(rng));
            a.z.set(i, bit(rng));
            b.x.set(i, bit(rng));
            b.z.set(i, bit(rng));
        }
        BitVector sum = syndrome(code, a);
        sum ^= syndrome(code, b);
        EXPECT_EQ(syndrome(code, a * b), sum);
    }
}

TEST(syndrome, rejects_foreign_labels) {
    EXPECT_THROW(syndrome(build_xztgre(3, 1), parse_pauli("X99")), std::invalid_argument);
    EXPECT_THROW(syndrome(build_xztgre(3, 1), SymplecticVector(7)), std::invalid_argument);
}

TEST(decoder, zero_syndrome_gives_identity) {
    const StabilizerCode code = build_xztgre(4, 1);
    const DecodeOutcome out = decode(code, BitVector(code.stabilizers().size()), DecoderConfig{});
    EXPECT_TRUE(out.correction.is_identity());
    EXPECT_TRUE(out.converged);
    EXPECT_LE(out.iterations_used, 1u);
}

TEST(decoder, all_single_errors_on_n40) {
    const StabilizerCode code = build_xztgre(4, 1);
    const auto identifiable = identifiable_single_errors(code);
    DecoderConfig cfg;
    cfg.prior_p = 0.01;
    for (Schedule schedule : {Schedule::serial, Schedule::flooding}) {
        cfg.schedule = schedule;
        BpDecoder decoder(code, cfg);
        size_t idx = 0;
        for (size_t q = 0; q < code.n(); ++q) {
            for (char kind : {'X', 'Y', 'Z'}) {
                ASSERT_TRUE(identifiable[idx++]);
                const SymplecticVector e = single_error(code.n(), q, kind);
                const auto &r = decoder.decode(syndrome(code, e));
                EXPECT_TRUE(r.converged);
                EXPECT_TRUE(in_stabilizer_group(code, e * r.correction))
                    << kind << code.qubit_labels()[q] << " " << to_string(schedule);
            }
        }
    }
}

// The twenty-qubit code has weight-2 logicals, so some single errors share a syndrome with
// an inequivalent one. The decoder handles the X and Z parts separately, so an error is
// only guaranteed to be corrected when each part is identifiable on its own.
TEST(decoder, identifiable_single_errors_on_n20) {
    const StabilizerCode code = build_xztgre(3, 1);
    const auto identifiable = identifiable_single_errors(code);
    DecoderConfig cfg;
    cfg.prior_p = 0.01;
    BpDecoder decoder(code, cfg);
    size_t ambiguous = 0;
    for (size_t q = 0; q < code.n(); ++q) {
        const bool x_ok = identifiable[3 * q];
        const bool z_ok = identifiable[3 * q + 2];
        for (char kind : {'X', 'Y', 'Z'}) {
            const SymplecticVector e = single_error(code.n(), q, kind);
            const auto &r = decoder.decode(syndrome(code, e));
            EXPECT_TRUE(r.converged);
            if ((kind == 'Z' || x_ok) && (kind == 'X' || z_ok)) {
                EXPECT_TRUE(in_stabilizer_group(code, e * r.correction))
                    << kind << code.qubit_labels()[q] << " -> " << code.from_symplectic(r.correction).str();
            } else {
                ++ambiguous;
            }
        }
    }
    EXPECT_GT(ambiguous, 0u);
}

TEST(decoder, converged_outcomes_satisfy_syndrome) {
    const StabilizerCode code = build_xztgre(5, 1);
    for (double p : {0.02, 0.08}) {
        DecoderConfig cfg;
        cfg.prior_p = p;
        BpDecoder decoder(code, cfg);
        size_t converged = 0;
        for (std::uint64_t t = 0; t < 200; ++t) {
            CounterRng rng(4, 0, t);
            const SymplecticVector e = sample_error(code.n(), NoiseModel{p}, rng);
            const BitVector s = syndrome(code, e);
            const auto &r = decoder.decode(s);
            if (r.converged) {
                ++converged;
                EXPECT_EQ(syndrome(code, r.correction), s);
            }
            EXPECT_LE(r.iterations, cfg.max_iterations);
        }
        EXPECT_GT(converged, 0u);
    }
}

TEST(decoder, deterministic) {
    const StabilizerCode code = build_xztgre(4, 1);
    DecoderConfig cfg;
    cfg.prior_p = 0.06;
    BpDecoder a(code, cfg);
    BpDecoder b(code, cfg);
    for (std::uint64_t t = 0; t < 50; ++t) {
        CounterRng rng(1, 0, t);
        const BitVector s = syndrome(code, sample_error(code.n(), NoiseModel{0.06}, rng));
        const auto ra = a.decode(s);
        const auto rb = b.decode(s);
        EXPECT_EQ(ra.correction.x, rb.correction.x);
        EXPECT_EQ(ra.correction.z, rb.correction.z);
        EXPECT_EQ(ra.converged, rb.converged);
        EXPECT_EQ(ra.iterations, rb.iterations);
    }
}

TEST(decoder, z_first_and_damping_variants_decode_single_errors) {
    const StabilizerCode code = build_xztgre(4, 1);
    DecoderConfig cfg;
    cfg.z_first = true;
    cfg.damping = 0.3;
    BpDecoder decoder(code, cfg);
    for (size_t q = 0; q < code.n(); ++q) {
        const SymplecticVector e = single_error(code.n(), q, 'Y');
        const auto &r = decoder.decode(syndrome(code, e));
        EXPECT_TRUE(r.converged);
        EXPECT_TRUE(in_stabilizer_group(code, e * r.correction));
    }
}

TEST(decoder, extreme_priors_stay_finite) {
    const StabilizerCode code = build_xztgre(4, 1);
    for (double p : {1e-9, 0.4999}) {
        DecoderConfig cfg;
        cfg.prior_p = p;
        cfg.max_iterations = 20;
        BpDecoder decoder(code, cfg);
        CounterRng rng(2, 0, 0);
        const SymplecticVector e = sample_error(code.n(), NoiseModel{0.3}, rng);
        const auto &r = decoder.decode(syndrome(code, e));
        if (r.converged) {
            EXPECT_EQ(syndrome(code, r.correction), syndrome(code, e));
        }
    }
}

TEST(decoder, config_validation) {
    DecoderConfig cfg;
    cfg.prior_p = 0.0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.prior_p = 0.5;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.prior_p = 0.1;
    cfg.damping = 1.0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.damping = 0.0;
    cfg.max_iterations = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    EXPECT_EQ(parse_schedule("flooding"), Schedule::flooding);
    EXPECT_THROW(parse_schedule("random"), std::invalid_argument);
}

TEST(decoder, rejects_wrong_syndrome_length) {
    const StabilizerCode code = build_xztgre(3, 1);
    BpDecoder decoder(code, DecoderConfig{});
    EXPECT_THROW(decoder.decode(BitVector(3)), std::invalid_argument);
}
