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

#include "fockherald/cnot/search.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <mutex>
#include <random>
#include <thread>

#include "fockherald/errors.h"

using namespace fockherald;
using namespace fockherald::cnot;

namespace {

constexpr double kPi = std::numbers::pi;

std::pair<double, double> bounds(size_t coordinate) {
    return coordinate < 3 ? std::pair{0.0, kPi / 2} : std::pair{0.0, 2 * kPi};
}

struct Evaluator {
    const HeraldedChannel &channel;
    size_t evaluations = 0;

    double fidelity(const StateAngles &angles) {
        evaluations++;
        return channel.evaluate(state_from_angles(angles)).fidelity;
    }
};

/// Golden-section minimum of `f` along one coordinate, over its full range.
template <typename F>
std::pair<double, double> golden_section(F &&f, double lo, double hi, double x_tolerance) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > x_tolerance) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

/// Coordinate sweeps until a whole sweep gains less than `tolerance`.
std::pair<StateAngles, double> refine(Evaluator &eval, StateAngles x, const SearchSettings &settings) {
    double best = eval.fidelity(x);
    for (size_t sweep = 0; sweep < settings.max_sweeps; sweep++) {
        double start = best;
        for (size_t c = 0; c < x.size(); c++) {
            auto [lo, hi] = bounds(c);
            StateAngles trial = x;
            auto [arg, value] = golden_section(
                [&](double v) {
                    trial[c] = v;
                    return eval.fidelity(trial);
                },
                lo,
                hi,
                1e-9);
            if (value < best) {
                best = value;
                x[c] = arg;
            }
        }
        if (start - best < settings.tolerance) {
            break;
        }
    }
    return {x, best};
}

}  // namespace

TwoQubitState cnot::state_from_angles(const StateAngles &a) {
    const double s1 = std::sin(a[0]);
    const double s2 = std::sin(a[1]);
    return {
        std::complex<double>(std::cos(a[0]), 0),
        std::polar(s1 * std::cos(a[1]), a[3]),
        std::polar(s1 * s2 * std::cos(a[2]), a[4]),
        std::polar(s1 * s2 * std::sin(a[2]), a[5]),
    };
}

StateAngles cnot::angles_from_state(const TwoQubitState &input) {
    TwoQubitState psi = normalized(input);
    size_t ref = 0;
    while (ref < 3 && std::abs(psi[ref]) < 1e-15) {
        ref++;
    }
    const std::complex<double> phase = std::polar(1.0, -std::arg(psi[ref]));
    for (auto &amp : psi) {
        amp *= phase;
    }
    auto clamp_acos = [](double x) {
        return std::acos(std::clamp(x, -1.0, 1.0));
    };
    auto wrap = [](double phi) {
        return phi < 0 ? phi + 2 * kPi : phi;
    };
    StateAngles a{};
    const double r1 = std::abs(psi[1]);
    const double r2 = std::abs(psi[2]);
    const double r3 = std::abs(psi[3]);
    a[0] = clamp_acos(std::abs(psi[0]));
    double rest = std::sqrt(r1 * r1 + r2 * r2 + r3 * r3);
    a[1] = rest > 0 ? clamp_acos(r1 / rest) : 0;
    double tail = std::sqrt(r2 * r2 + r3 * r3);
    a[2] = tail > 0 ? clamp_acos(r2 / tail) : 0;
    a[3] = wrap(std::arg(psi[1]));
    a[4] = wrap(std::arg(psi[2]));
    a[5] = wrap(std::arg(psi[3]));
    return a;
}

std::vector<std::pair<std::string, TwoQubitState>> cnot::probe_states() {
    const double h = 1 / std::sqrt(2.0);
    return {
        {"|00>", {1, 0, 0, 0}},
        {"|01>", {0, 1, 0, 0}},
        {"|10>", {0, 0, 1, 0}},
        {"|11>", {0, 0, 0, 1}},
        {"|+0>", {h, 0, h, 0}},
        {"|+1>", {0, h, 0, h}},
        {"|-0>", {h, 0, -h, 0}},
        {"|-1>", {0, h, 0, -h}},
        {"|0+>", {h, h, 0, 0}},
        {"|0->", {h, -h, 0, 0}},
        {"|1+>", {0, 0, h, h}},
        {"|1->", {0, 0, h, -h}},
        {"Phi+", {h, 0, 0, h}},
        {"Phi-", {h, 0, 0, -h}},
        {"Psi+", {0, h, h, 0}},
        {"Psi-", {0, h, -h, 0}},
    };
}

GateMetrics cnot::worst_case_search(const HeraldedChannel &channel, const SearchSettings &settings) {
    Evaluator eval{channel};
    GateMetrics best{};
    best.fidelity_min = 2;

    for (const auto &[label, psi] : probe_states()) {
        eval.evaluations++;
        double f = channel.evaluate(psi).fidelity;
        if (f < best.fidelity_min) {
            best.fidelity_min = f;
            best.argmin_state = psi;
            best.argmin_label = label;
        }
    }
    best.argmin_angles = angles_from_state(best.argmin_state);

    if (!settings.probes_only) {
        std::vector<StateAngles> starts{best.argmin_angles};
        std::mt19937_64 rng(settings.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (size_t s = 0; s < settings.random_starts; s++) {
            StateAngles x;
            for (size_t c = 0; c < x.size(); c++) {
                auto [lo, hi] = bounds(c);
                x[c] = lo + (hi - lo) * unit(rng);
            }
            starts.push_back(x);
        }
        for (const auto &start : starts) {
            auto [x, f] = refine(eval, start, settings);
            if (f < best.fidelity_min) {
                best.fidelity_min = f;
                best.argmin_angles = x;
                best.argmin_state = state_from_angles(x);
                best.argmin_label = "search";
            }
        }
    }

    best.probability_at_fmin = channel.probability(normalized(best.argmin_state));
    best.probability_min = channel.min_probability();
    best.evaluations = eval.evaluations;
    return best;
}

GateMetrics cnot::worst_case_search(const CnotConfig &cfg, const SearchSettings &settings) {
    return worst_case_search(HeraldedChannel(cfg), settings);
}

std::vector<SweepCell> cnot::sweep_metrics(
    const CnotConfig &base,
    const std::vector<double> &efficiencies,
    const std::vector<double> &reflectivities,
    const SearchSettings &settings,
    size_t threads,
    bool non_discriminating) {
    if (efficiencies.empty() || (!non_discriminating && reflectivities.empty())) {
        throw ValidationError("sweep ranges must be non-empty");
    }
    std::vector<SweepCell> cells;
    for (double eff : efficiencies) {
        if (non_discriminating) {
            cells.push_back({eff, 1.0, {}});
            continue;
        }
        for (double ref : reflectivities) {
            cells.push_back({eff, ref, {}});
        }
    }

    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (size_t k = next++; k < cells.size(); k = next++) {
            try {
                DetectorModel model = non_discriminating
                                          ? DetectorModel{NonDiscriminating{cells[k].efficiency}}
                                          : DetectorModel{ChainDetector{cells[k].reflectivity, cells[k].efficiency}};
                cells[k].metrics = worst_case_search(base.with_model(model), settings);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    size_t workers = std::max<size_t>(1, std::min(threads, cells.size()));
    std::vector<std::thread> pool;
    for (size_t t = 1; t < workers; t++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return cells;
}

size_t cnot::sweep_threads_from_env() {
    if (const char *env = std::getenv("FOCKHERALD_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<size_t>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}
