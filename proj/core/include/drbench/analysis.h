// Copyright 2026 The drbench Authors
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

#ifndef DRBENCH_ANALYSIS_H
#define DRBENCH_ANALYSIS_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "drbench/device.h"
#include "drbench/error_model.h"
#include "drbench/sampling.h"
#include "drbench/simulator.h"

namespace drbench {

struct CircuitOutcome {
    uint64_t successes = 0;
    uint64_t shots = 0;

    double probability() const { return shots ? static_cast<double>(successes) / shots : 0.0; }
};

struct LengthSummary {
    int m = 0;
    double mean = 0.0;
    std::vector<CircuitOutcome> circuits;

    uint64_t total_shots() const;
    std::vector<double> probabilities() const;
};

/// Mean success probability per length, keeping the per-circuit values.
std::map<int, LengthSummary> average_success(const std::vector<DatasetRow> &rows);

struct DecayPoint {
    int m = 0;
    double p = 0.0;
    double weight = 1.0;
};

/// Points for fit_decay, weighted by inverse binomial variance. The variance
/// uses (s + 1) / (N + 2) so lengths with P_m in {0, 1} keep a finite weight.
std::vector<DecayPoint> weighted_points(const std::map<int, LengthSummary> &summary);

struct FitDiagnostics {
    bool degenerate = false;
    /// A was held at 2^-n instead of fitted.
    bool fixed_asymptote = false;
    bool p_clamped = false;
    bool converged = false;
    int iterations = 0;
    double chi2 = 0.0;
    double A0 = 0.0, B0 = 0.0, p0 = 0.0;
    int min_length = 0, max_length = 0;
    std::vector<double> residuals;
    std::string message;
};

struct Interval {
    double sigma = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

struct DecayFit {
    int n = 0;
    double A = 0.0, B = 0.0, p = 1.0, r = 0.0;
    FitDiagnostics diagnostics;
    bool has_intervals = false;
    Interval A_interval, B_interval, p_interval, r_interval;
    int bootstrap_resamples = 0;
    int bootstrap_failures = 0;

    double predict(double m) const;
};

/// r = (4^n - 1)(1 - p) / 4^n.
double drb_error_rate(double p, int n);

/// Weighted least squares fit of A + B p^m with p in [0, 1]. Throws with
/// fewer than three distinct lengths. With `fix_asymptote`, A is held at
/// 2^-n and only B and p are fitted.
DecayFit fit_decay(const std::vector<DecayPoint> &points, int n, bool fix_asymptote = false);

struct BootstrapOptions {
    int resamples = 1000;
    uint64_t seed = 0;
    int threads = 1;
};

/// Resamples circuits within each length, refits (with the same asymptote
/// handling as `fit`), and fills the 2 sigma intervals of `fit`. Degenerate or failed refits are counted and skipped.
void bootstrap(DecayFit &fit, const std::map<int, LengthSummary> &summary, const BootstrapOptions &options);

/// average_success, fit_decay and bootstrap in one call.
DecayFit analyze_dataset(const std::vector<DatasetRow> &rows, int n, const BootstrapOptions &options,
                         bool fix_asymptote = false);

/// Sampler-averaged layer error rate, sum over layers of Omega(layer) times
/// the layer's error probability. Layer structures are enumerated exactly
/// when there are at most `max_structures`, otherwise `mc_samples` sampled
/// layers are averaged.
double predict_r_from_rates(const SamplerSpec &spec, const DeviceSpec &device, const ErrorModel &model,
                            size_t max_structures = 200000, size_t mc_samples = 200000, uint64_t seed = 0);

struct RateSystem {
    std::vector<std::vector<double>> M;
    std::vector<double> r;
    std::vector<double> r_sigma;
};

struct CategoryRates {
    std::vector<double> epsilon;
    std::vector<double> sigma;
    std::vector<std::vector<double>> covariance;
};

/// epsilon = M^-1 r (least squares when M is tall). Variances of r are
/// propagated linearly. Throws on singular or rank deficient M.
CategoryRates solve_category_rates(const RateSystem &system);

/// Rows for the two-sampler design: p_cnot = a and b against the categories
/// (one CNOT layer, all one-qubit layer).
std::vector<std::vector<double>> mixing_matrix(const std::vector<double> &cnot_probabilities);

struct BuildingBlockRates {
    double local = 0.0;
    double local_sigma = 0.0;
    std::vector<double> cnot_class;
    std::vector<double> cnot_class_sigma;
    double cnot = 0.0;
    double cnot_sigma = 0.0;
    bool flagged = false;
};

/// Splits category rates into a per-qubit local rate (from the all one-qubit
/// category at `local_index`) and one CNOT rate per remaining category, each
/// of which holds one CNOT and n - 2 one-qubit gates.
BuildingBlockRates extract_building_block_rates(const CategoryRates &rates, size_t local_index, int n);

/// 1 - (1 - r)^(1 / alpha).
double crb_rescale(double r, double alpha);

/// 2^-n + (1 - 2^-n)(1 - eps)^m.
double theory_pm(int m, double eps, int n);

struct PlotRow {
    int m = 0;
    double mean = 0.0;
    double q05 = 0.0, q25 = 0.0, q50 = 0.0, q75 = 0.0, q95 = 0.0;
    double fitted = 0.0;
};

std::vector<PlotRow> plot_rows(const std::map<int, LengthSummary> &summary, const DecayFit &fit);

}  // namespace drbench

#endif
