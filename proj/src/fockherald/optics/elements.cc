// Copyright 2026 The fockherald Authors
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

#include "fockherald/optics/elements.h"

#include <cmath>
#include <string>

#include "fockherald/errors.h"

using namespace fockherald;

namespace {

double factorial(uint32_t n) {
    double out = 1;
    for (uint32_t k = 2; k <= n; k++) {
        out *= k;
    }
    return out;
}

double binomial(uint32_t n, uint32_t k) {
    double out = 1;
    for (uint32_t j = 1; j <= k; j++) {
        out = out * (n - k + j) / j;
    }
    return out;
}

void check_probability(double p, const char *what) {
    if (!(p >= 0 && p <= 1)) {
        throw ValidationError(std::string(what) + " must lie in [0,1], got " + std::to_string(p));
    }
}

}  // namespace

void fockherald::validate_element(const Element &element, size_t mode_count) {
    if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
        if (bs->mode_a >= mode_count || bs->mode_b >= mode_count) {
            throw DimensionError(
                "beamsplitter modes (" + std::to_string(bs->mode_a) + "," + std::to_string(bs->mode_b) +
                ") out of range for " + std::to_string(mode_count) + " modes");
        }
        if (bs->mode_a == bs->mode_b) {
            throw ValidationError("beamsplitter needs two distinct modes");
        }
        check_probability(bs->reflectivity, "reflectivity");
    } else {
        const auto &loss = std::get<LossChannel>(element);
        if (loss.mode >= mode_count) {
            throw DimensionError("loss channel mode " + std::to_string(loss.mode) + " out of range");
        }
        check_probability(loss.transmission, "transmission");
    }
}

SparseState fockherald::apply_beamsplitter(const SparseState &s, const BeamSplitter &bs) {
    validate_element(bs, s.mode_count());
    const double r = std::sqrt(bs.reflectivity);
    const double t = std::sqrt(1 - bs.reflectivity);

    SparseState out(s.mode_count());
    std::vector<double> poly;
    for (const auto &[occ, amp] : s.amplitudes()) {
        uint32_t na = occ[bs.mode_a];
        uint32_t nb = occ[bs.mode_b];
        // Coefficient of (a^dag)^p (b^dag)^(na+nb-p) in
        // (r a^dag + t b^dag)^na (t a^dag - r b^dag)^nb.
        poly.assign(na + nb + 1, 0.0);
        for (uint32_t i = 0; i <= na; i++) {
            double ci = binomial(na, i) * std::pow(r, i) * std::pow(t, na - i);
            if (ci == 0) {
                continue;
            }
            for (uint32_t j = 0; j <= nb; j++) {
                double cj = binomial(nb, j) * std::pow(t, j) * std::pow(-r, nb - j);
                poly[i + j] += ci * cj;
            }
        }
        const double in_norm = 1.0 / std::sqrt(factorial(na) * factorial(nb));
        OccupationVector key = occ;
        for (uint32_t p = 0; p <= na + nb; p++) {
            if (poly[p] == 0) {
                continue;
            }
            uint32_t q = na + nb - p;
            key[bs.mode_a] = p;
            key[bs.mode_b] = q;
            out.add(key, amp * (poly[p] * in_norm * std::sqrt(factorial(p) * factorial(q))));
        }
    }
    out.prune();
    return out;
}

Ensemble fockherald::apply_beamsplitter(const Ensemble &e, const BeamSplitter &bs) {
    Ensemble out(e.mode_count());
    for (const auto &branch : e.branches()) {
        out.add(branch.weight, apply_beamsplitter(branch.state, bs));
    }
    return out;
}

Ensemble fockherald::apply_loss(const Ensemble &e, const LossChannel &channel) {
    validate_element(channel, e.mode_count());
    const double keep = channel.transmission;
    const double drop = 1 - channel.transmission;

    Ensemble out(e.mode_count());
    for (const auto &branch : e.branches()) {
        uint32_t max_photons = 0;
        for (const auto &[occ, amp] : branch.state.amplitudes()) {
            max_photons = std::max(max_photons, occ[channel.mode]);
        }
        // Kraus operator E_j removes exactly j photons.
        for (uint32_t lost = 0; lost <= max_photons; lost++) {
            SparseState part(e.mode_count());
            for (const auto &[occ, amp] : branch.state.amplitudes()) {
                uint32_t k = occ[channel.mode];
                if (k < lost) {
                    continue;
                }
                double p = binomial(k, lost) * std::pow(drop, lost) * std::pow(keep, k - lost);
                if (p == 0) {
                    continue;
                }
                OccupationVector key = occ;
                key[channel.mode] = k - lost;
                part.add(key, amp * std::sqrt(p));
            }
            part.prune();
            out.add(branch.weight, part);
        }
    }
    return out;
}

Ensemble fockherald::apply_element(const Ensemble &e, const Element &element) {
    if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
        return apply_beamsplitter(e, *bs);
    }
    return apply_loss(e, std::get<LossChannel>(element));
}

std::vector<double> fockherald::chain_reflectivities(double first, size_t k) {
    if (k == 0) {
        throw DomainError("chain needs at least one beamsplitter");
    }
    if (!(first > 0 && first <= 1)) {
        throw DomainError("first reflectivity must lie in (0,1], got " + std::to_string(first));
    }
    if (first * static_cast<double>(k) > 1 + 1e-12) {
        throw InfeasibleUniformityError(
            "first reflectivity " + std::to_string(first) + " exceeds 1/" + std::to_string(k) +
            "; uniform arrival across " + std::to_string(k) + " reflected ports is impossible");
    }
    std::vector<double> out{first};
    for (size_t i = 1; i < k; i++) {
        double prev = out.back();
        double next = prev / (1 - prev);
        out.push_back(std::min(next, 1.0));
    }
    return out;
}
