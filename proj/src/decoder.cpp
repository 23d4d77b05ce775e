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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tgre {

namespace {

constexpr double llr_clamp = 25.0;

double clamp_llr(double v) { return std::clamp(v, -llr_clamp, llr_clamp); }

double llr_of(double prob) { return clamp_llr(std::log((1.0 - prob) / prob)); }

}  // namespace

std::string to_string(Schedule schedule) { return schedule == Schedule::serial ? "serial" : "flooding"; }

Schedule parse_schedule(std::string_view text) {
    if (text == "serial") {
        return Schedule::serial;
    }
    if (text == "flooding") {
        return Schedule::flooding;
    }
    throw std::invalid_argument("unknown schedule '" + std::string(text) + "'");
}

void DecoderConfig::validate() const {
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be at least 1");
    }
    if (!(damping >= 0.0 && damping < 1.0)) {
        throw std::invalid_argument("damping must lie in [0, 1)");
    }
    if (!(prior_p > 0.0 && prior_p < 0.5)) {
        throw std::invalid_argument("prior_p must lie in (0, 0.5)");
    }
}

BitVector syndrome(const StabilizerCode &code, const SymplecticVector &error) {
    if (error.x.size() != code.n() || error.z.size() != code.n()) {
        throw std::invalid_argument("syndrome: error length does not match the code");
    }
    const auto &stabs = code.stabilizer_vectors();
    BitVector s(stabs.size());
    for (size_t i = 0; i < stabs.size(); ++i) {
        if (symplectic_product(stabs[i], error)) {
            s.set(i);
        }
    }
    return s;
}

BitVector syndrome(const StabilizerCode &code, const PauliOperator &error) {
    return syndrome(code, code.to_symplectic(error));
}

BinaryBp::BinaryBp(const BitMatrix &checks) : num_vars_(checks.cols()), var_edges_(checks.cols()) {
    for (size_t r = 0; r < checks.rows(); ++r) {
        for (size_t v : checks.row_vector(r).ones()) {
            var_edges_[v].push_back(static_cast<std::uint32_t>(edge_var_.size()));
            edge_var_.push_back(static_cast<std::uint32_t>(v));
        }
        offsets_.push_back(edge_var_.size());
    }
    check_msg_.resize(edge_var_.size());
    var_msg_.resize(edge_var_.size());
    forward_.resize(edge_var_.size());
    posterior_.resize(num_vars_);
}

bool BinaryBp::satisfied(const std::vector<std::uint8_t> &s, const std::vector<std::uint8_t> &decision) const {
    for (size_t c = 0; c + 1 < offsets_.size(); ++c) {
        std::uint8_t parity = 0;
        for (size_t e = offsets_[c]; e < offsets_[c + 1]; ++e) {
            parity ^= decision[edge_var_[e]];
        }
        if (parity != s[c]) {
            return false;
        }
    }
    return true;
}

// Recomputes the messages leaving check c from var_msg_, excluding each edge's own input
// through prefix and suffix products of tanh(m/2).
void BinaryBp::check_update(size_t c, bool flip, double damping) {
    const size_t begin = offsets_[c];
    const size_t end = offsets_[c + 1];
    double acc = flip ? -1.0 : 1.0;
    for (size_t e = begin; e < end; ++e) {
        forward_[e] = acc;
        acc *= std::tanh(0.5 * var_msg_[e]);
    }
    double suffix = 1.0;
    for (size_t e = end; e-- > begin;) {
        double m = clamp_llr(2.0 * std::atanh(forward_[e] * suffix));
        check_msg_[e] = damping > 0 ? damping * check_msg_[e] + (1.0 - damping) * m : m;
        suffix *= std::tanh(0.5 * var_msg_[e]);
    }
}

BinaryBp::Run BinaryBp::run(
    const std::vector<std::uint8_t> &s,
    const std::vector<double> &prior_llr,
    const DecoderConfig &cfg,
    std::vector<std::uint8_t> &decision) {
    Run out;
    decision.assign(num_vars_, 0);
    for (size_t v = 0; v < num_vars_; ++v) {
        decision[v] = prior_llr[v] < 0;
    }
    if (satisfied(s, decision)) {
        out.converged = true;
        return out;
    }
    std::fill(check_msg_.begin(), check_msg_.end(), 0.0);
    posterior_ = prior_llr;
    const size_t checks = num_checks();
    for (size_t it = 1; it <= cfg.max_iterations; ++it) {
        if (cfg.schedule == Schedule::serial) {
            for (size_t c = 0; c < checks; ++c) {
                for (size_t e = offsets_[c]; e < offsets_[c + 1]; ++e) {
                    var_msg_[e] = clamp_llr(posterior_[edge_var_[e]] - check_msg_[e]);
                }
                check_update(c, s[c] != 0, cfg.damping);
                for (size_t e = offsets_[c]; e < offsets_[c + 1]; ++e) {
                    posterior_[edge_var_[e]] = var_msg_[e] + check_msg_[e];
                }
            }
        } else {
            for (size_t e = 0; e < edge_var_.size(); ++e) {
                var_msg_[e] = clamp_llr(posterior_[edge_var_[e]] - check_msg_[e]);
            }
            for (size_t c = 0; c < checks; ++c) {
                check_update(c, s[c] != 0, cfg.damping);
            }
            for (size_t v = 0; v < num_vars_; ++v) {
                double total = prior_llr[v];
                for (std::uint32_t e : var_edges_[v]) {
                    total += check_msg_[e];
                }
                posterior_[v] = total;
            }
        }
        for (size_t v = 0; v < num_vars_; ++v) {
            decision[v] = posterior_[v] < 0;
        }
        out.iterations = it;
        if (satisfied(s, decision)) {
            out.converged = true;
            return out;
        }
    }
    return out;
}

BpDecoder::BpDecoder(const StabilizerCode &code, DecoderConfig cfg)
    : code_(code),
      cfg_(cfg),
      x_stage_(code.z_check_matrix()),
      z_stage_(code.x_check_matrix()) {
    cfg_.validate();
    if (!code.is_css()) {
        throw std::invalid_argument("BpDecoder requires a CSS-form code");
    }
    result_.correction = SymplecticVector(code.n());
}

const BpDecoder::Result &BpDecoder::decode(const BitVector &s) {
    const size_t n = code_.n();
    if (s.size() != code_.stabilizers().size()) {
        throw std::invalid_argument("decode: syndrome length does not match the stabilizer count");
    }
    const auto &z_rows = code_.z_check_rows();
    const auto &x_rows = code_.x_check_rows();
    x_syndrome_.resize(z_rows.size());
    z_syndrome_.resize(x_rows.size());
    for (size_t i = 0; i < z_rows.size(); ++i) {
        x_syndrome_[i] = s.get(z_rows[i]);
    }
    for (size_t i = 0; i < x_rows.size(); ++i) {
        z_syndrome_[i] = s.get(x_rows[i]);
    }

    // The first stage sees a marginal prior of 2p/3; the second conditions on its decision,
    // since a Y error flips both components.
    const double p = cfg_.prior_p;
    const double marginal = llr_of(2.0 * p / 3.0);
    const double given_flip = 0.0;
    const double given_none = llr_of((p / 3.0) / (1.0 - 2.0 * p / 3.0));
    BinaryBp &first = cfg_.z_first ? z_stage_ : x_stage_;
    BinaryBp &second = cfg_.z_first ? x_stage_ : z_stage_;
    auto &first_s = cfg_.z_first ? z_syndrome_ : x_syndrome_;
    auto &second_s = cfg_.z_first ? x_syndrome_ : z_syndrome_;
    auto &first_hat = cfg_.z_first ? z_hat_ : x_hat_;
    auto &second_hat = cfg_.z_first ? x_hat_ : z_hat_;

    prior_.assign(n, marginal);
    const BinaryBp::Run a = first.run(first_s, prior_, cfg_, first_hat);
    for (size_t v = 0; v < n; ++v) {
        prior_[v] = first_hat[v] ? given_flip : given_none;
    }
    const BinaryBp::Run b = second.run(second_s, prior_, cfg_, second_hat);

    result_.converged = a.converged && b.converged;
    result_.iterations = std::max(a.iterations, b.iterations);
    result_.correction.x.clear();
    result_.correction.z.clear();
    for (size_t v = 0; v < n; ++v) {
        if (x_hat_[v]) {
            result_.correction.x.set(v);
        }
        if (z_hat_[v]) {
            result_.correction.z.set(v);
        }
    }
    return result_;
}

DecodeOutcome BpDecoder::decode_outcome(const BitVector &s) {
    const Result &r = decode(s);
    return DecodeOutcome{code_.from_symplectic(r.correction), r.converged, r.iterations};
}

DecodeOutcome decode(const StabilizerCode &code, const BitVector &s, const DecoderConfig &cfg) {
    BpDecoder decoder(code, cfg);
    return decoder.decode_outcome(s);
}

}  // namespace tgre
