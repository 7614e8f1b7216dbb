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

#include "drbench/analysis.h"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "drbench/random.h"

namespace drbench {

uint64_t LengthSummary::total_shots() const {
    uint64_t total = 0;
    for (const auto &c : circuits) {
        total += c.shots;
    }
    return total;
}

std::vector<double> LengthSummary::probabilities() const {
    std::vector<double> out;
    out.reserve(circuits.size());
    for (const auto &c : circuits) {
        out.push_back(c.probability());
    }
    return out;
}

namespace {

void refresh_mean(LengthSummary &s) {
    double total = 0;
    for (const auto &c : s.circuits) {
        total += c.probability();
    }
    s.mean = s.circuits.empty() ? 0.0 : total / s.circuits.size();
}

}  // namespace

std::map<int, LengthSummary> average_success(const std::vector<DatasetRow> &rows) {
    if (rows.empty()) {
        throw std::invalid_argument("dataset is empty");
    }
    std::map<int, LengthSummary> out;
    for (const auto &row : rows) {
        if (row.shots == 0) {
            throw std::invalid_argument("row " + row.id + " has zero shots");
        }
        if (row.successes > row.shots) {
            throw std::invalid_argument("row " + row.id + " has more successes than shots");
        }
        auto &s = out[row.m];
        s.m = row.m;
        s.circuits.push_back({row.successes, row.shots});
    }
    for (auto &[m, s] : out) {
        refresh_mean(s);
    }
    return out;
}

std::vector<DecayPoint> weighted_points(const std::map<int, LengthSummary> &summary) {
    std::vector<DecayPoint> points;
    for (const auto &[m, s] : summary) {
        uint64_t successes = 0, shots = 0;
        for (const auto &c : s.circuits) {
            successes += c.successes;
            shots += c.shots;
        }
        double smoothed = (successes + 1.0) / (shots + 2.0);
        double variance = smoothed * (1 - smoothed) / std::max<uint64_t>(shots, 1);
        points.push_back({m, s.mean, 1.0 / variance});
    }
    return points;
}

double DecayFit::predict(double m) const { return A + B * std::pow(p, m); }

double drb_error_rate(double p, int n) {
    double d2 = std::pow(4.0, n);
    return (d2 - 1) * (1 - p) / d2;
}

namespace {

double power(double p, int m) { return m == 0 ? 1.0 : std::pow(p, m); }

struct Profile {
    double A = 0, B = 0, chi2 = 0;
};

// Best A, B for fixed p: weighted linear least squares on (1, p^m), or on
// p^m alone when A is pinned.
Profile profile(const std::vector<DecayPoint> &pts, double p, const double *fixed_A = nullptr) {
    double sw = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (const auto &pt : pts) {
        double x = power(p, pt.m);
        sw += pt.weight;
        sx += pt.weight * x;
        sxx += pt.weight * x * x;
        sy += pt.weight * pt.p;
        sxy += pt.weight * x * pt.p;
    }
    Profile out;
    double det = sw * sxx - sx * sx;
    if (fixed_A != nullptr) {
        out.A = *fixed_A;
        out.B = sxx > 0 ? (sxy - out.A * sx) / sxx : 0.0;
    } else if (det <= 1e-14 * sw * std::max(sxx, 1e-300)) {
        out.A = sy / sw;
        out.B = 0;
    } else {
        out.A = (sxx * sy - sx * sxy) / det;
        out.B = (sw * sxy - sx * sy) / det;
    }
    for (const auto &pt : pts) {
        double e = pt.p - out.A - out.B * power(p, pt.m);
        out.chi2 += pt.weight * e * e;
    }
    return out;
}

double chi2_of(const std::vector<DecayPoint> &pts, double A, double B, double p) {
    double total = 0;
    for (const auto &pt : pts) {
        double e = pt.p - A - B * power(p, pt.m);
        total += pt.weight * e * e;
    }
    return total;
}

}  // namespace

DecayFit fit_decay(const std::vector<DecayPoint> &points, int n, bool fix_asymptote) {
    std::set<int> lengths;
    for (const auto &pt : points) {
        if (pt.m < 0) {
            throw std::invalid_argument("negative length");
        }
        if (!(pt.weight > 0) || !std::isfinite(pt.weight) || !std::isfinite(pt.p)) {
            throw std::invalid_argument("fit points need finite values and positive weights");
        }
        lengths.insert(pt.m);
    }
    if (lengths.size() < 3) {
        throw std::invalid_argument("fit needs at least 3 distinct lengths, got " + std::to_string(lengths.size()));
    }
    DecayFit fit;
    fit.n = n;
    auto &diag = fit.diagnostics;
    diag.fixed_asymptote = fix_asymptote;
    diag.min_length = *lengths.begin();
    diag.max_length = *lengths.rbegin();

    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [](const DecayPoint &a, const DecayPoint &b) { return a.p < b.p; });
    if (hi->p - lo->p < 1e-12) {
        diag.degenerate = true;
        diag.message = "all P_m equal; p is unidentifiable and reported as 1";
        fit.A = lo->p;
        fit.B = 0;
        fit.p = 1;
        fit.r = 0;
        diag.residuals.assign(points.size(), 0.0);
        return fit;
    }

    // Starting values: A0 = 2^-n, p0 from a log-linear fit of P_m - A0.
    diag.A0 = std::pow(2.0, -n);
    double sw = 0, sm = 0, smm = 0, sl = 0, sml = 0;
    for (const auto &pt : points) {
        double y = pt.p - diag.A0;
        if (y > 1e-12) {
            double l = std::log(y);
            sw += 1;
            sm += pt.m;
            smm += static_cast<double>(pt.m) * pt.m;
            sl += l;
            sml += pt.m * l;
        }
    }
    double slope = 0;
    if (sw >= 2 && sw * smm - sm * sm > 0) {
        slope = (sw * sml - sm * sl) / (sw * smm - sm * sm);
    }
    diag.p0 = std::clamp(std::exp(slope), 0.0, 1.0);
    int m_min = diag.min_length;
    double p_first = 0;
    int count_first = 0;
    for (const auto &pt : points) {
        if (pt.m == m_min) {
            p_first += pt.p;
            count_first++;
        }
    }
    diag.B0 = p_first / count_first - diag.A0;

    const double *pinned = fix_asymptote ? &diag.A0 : nullptr;
    // Global search over p on the profile, then golden section.
    constexpr int kGrid = 100;
    double best_p = diag.p0;
    double best = profile(points, best_p, pinned).chi2;
    for (int k = 0; k <= kGrid; k++) {
        double p = static_cast<double>(k) / kGrid;
        double c = profile(points, p, pinned).chi2;
        if (c < best) {
            best = c;
            best_p = p;
        }
    }
    double a = std::max(0.0, best_p - 1.0 / kGrid), b = std::min(1.0, best_p + 1.0 / kGrid);
    const double g = (std::sqrt(5.0) - 1) / 2;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = profile(points, x1, pinned).chi2, f2 = profile(points, x2, pinned).chi2;
    for (int it = 0; it < 200 && b - a > 1e-15; it++) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = profile(points, x1, pinned).chi2;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = profile(points, x2, pinned).chi2;
        }
    }
    double p = f1 < f2 ? x1 : x2;
    if (profile(points, p, pinned).chi2 > best) {
        p = best_p;
    }
    Profile prof = profile(points, p, pinned);
    double A = prof.A, B = prof.B;

    // Levenberg-Marquardt polish on (A, B, p) with p kept in [0, 1].
    double chi2 = chi2_of(points, A, B, p);
    double mu = 1e-3;
    int it = 0;
    for (; it < 200; it++) {
        Eigen::Matrix3d JtJ = Eigen::Matrix3d::Zero();
        Eigen::Vector3d Jtr = Eigen::Vector3d::Zero();
        for (const auto &pt : points) {
            Eigen::Vector3d j(1.0, power(p, pt.m), pt.m == 0 ? 0.0 : B * pt.m * power(p, pt.m - 1));
            double e = pt.p - A - B * power(p, pt.m);
            JtJ += pt.weight * j * j.transpose();
            Jtr += pt.weight * e * j;
        }
        if ((fix_asymptote ? Jtr.tail<2>().norm() : Jtr.norm()) < 1e-300) {
            diag.converged = true;
            break;
        }
        bool accepted = false;
        bool tiny = false;
        for (int tries = 0; tries < 30; tries++) {
            Eigen::Matrix3d H = JtJ;
            for (int d = 0; d < 3; d++) {
                H(d, d) += mu * std::max(JtJ(d, d), 1e-300);
            }
            Eigen::Vector3d rhs = Jtr;
            if (fix_asymptote) {
                H.row(0).setZero();
                H.col(0).setZero();
                H(0, 0) = 1;
                rhs(0) = 0;
            }
            Eigen::Vector3d step = H.ldlt().solve(rhs);
            if (!step.allFinite()) {
                mu *= 10;
                continue;
            }
            double nA = A + step(0), nB = B + step(1), np = std::clamp(p + step(2), 0.0, 1.0);
            double c = chi2_of(points, nA, nB, np);
            if (c <= chi2) {
                tiny = std::abs(nA - A) + std::abs(nB - B) + std::abs(np - p) < 1e-15 || chi2 - c <= 1e-16 * chi2;
                A = nA;
                B = nB;
                p = np;
                chi2 = c;
                mu = std::max(mu / 10, 1e-12);
                accepted = true;
                break;
            }
            mu *= 10;
        }
        if (!accepted || tiny) {
            diag.converged = true;
            break;
        }
    }
    diag.iterations = it;
    diag.chi2 = chi2;
    fit.A = A;
    fit.B = B;
    fit.p = p;
    if (p <= 0.0 || p >= 1.0) {
        diag.p_clamped = true;
        diag.message = "p reached the boundary of [0, 1]";
    }
    fit.r = drb_error_rate(fit.p, n);
    for (const auto &pt : points) {
        diag.residuals.push_back(pt.p - fit.predict(pt.m));
    }
    return fit;
}

namespace {

Interval two_sigma(double estimate, double sigma, double floor, double ceiling) {
    Interval out;
    out.sigma = sigma;
    out.lower = std::max(floor, estimate - 2 * sigma);
    out.upper = std::min(ceiling, estimate + 2 * sigma);
    return out;
}

double sample_sd(const std::vector<double> &v) {
    if (v.size() < 2) {
        return 0.0;
    }
    double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double ss = 0;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / (v.size() - 1));
}

}  // namespace

void bootstrap(DecayFit &fit, const std::map<int, LengthSummary> &summary, const BootstrapOptions &options) {
    if (options.resamples < 100) {
        throw std::invalid_argument("bootstrap needs at least 100 resamples");
    }
    const int R = options.resamples;
    struct Sample {
        bool ok = false;
        double A = 0, B = 0, p = 0, r = 0;
    };
    std::vector<Sample> samples(R);
    auto work = [&](int b) {
        Rng rng(derive_seed(options.seed, static_cast<uint64_t>(b)));
        std::map<int, LengthSummary> resampled;
        for (const auto &[m, s] : summary) {
            LengthSummary t;
            t.m = m;
            for (size_t k = 0; k < s.circuits.size(); k++) {
                t.circuits.push_back(s.circuits[rng.uniform(s.circuits.size())]);
            }
            refresh_mean(t);
            resampled[m] = std::move(t);
        }
        try {
            DecayFit f = fit_decay(weighted_points(resampled), fit.n, fit.diagnostics.fixed_asymptote);
            if (!f.diagnostics.degenerate) {
                samples[b] = {true, f.A, f.B, f.p, f.r};
            }
        } catch (const std::exception &) {
        }
    };
    int threads = std::max(1, std::min(options.threads, R));
    std::atomic<int> next{0};
    auto loop = [&] {
        for (int b = next++; b < R; b = next++) {
            work(b);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; t++) {
        pool.emplace_back(loop);
    }
    loop();
    for (auto &t : pool) {
        t.join();
    }
    std::vector<double> As, Bs, ps, rs;
    for (const auto &s : samples) {
        if (s.ok) {
            As.push_back(s.A);
            Bs.push_back(s.B);
            ps.push_back(s.p);
            rs.push_back(s.r);
        }
    }
    // Resampling k circuits with replacement shrinks the variance of a mean
    // by (k - 1) / k; undo that using the smallest k over lengths.
    size_t k_min = std::numeric_limits<size_t>::max();
    for (const auto &[m, s] : summary) {
        k_min = std::min(k_min, s.circuits.size());
    }
    double scale = k_min >= 2 ? std::sqrt(static_cast<double>(k_min) / (k_min - 1)) : 1.0;
    auto sd = [&](const std::vector<double> &v) { return scale * sample_sd(v); };
    const double inf = std::numeric_limits<double>::infinity();
    fit.has_intervals = true;
    fit.bootstrap_resamples = R;
    fit.bootstrap_failures = R - static_cast<int>(ps.size());
    fit.A_interval = two_sigma(fit.A, sd(As), -inf, inf);
    fit.B_interval = two_sigma(fit.B, sd(Bs), -inf, inf);
    fit.p_interval = two_sigma(fit.p, sd(ps), 0.0, 1.0);
    fit.r_interval = two_sigma(fit.r, sd(rs), 0.0, 1.0);
}

DecayFit analyze_dataset(const std::vector<DatasetRow> &rows, int n, const BootstrapOptions &options,
                         bool fix_asymptote) {
    auto summary = average_success(rows);
    DecayFit fit = fit_decay(weighted_points(summary), n, fix_asymptote);
    if (!fit.diagnostics.degenerate) {
        bootstrap(fit, summary, options);
    }
    return fit;
}

namespace {

struct Structure {
    std::vector<Edge> cnots;
    double weight = 0;
};

void for_each_matching(int n, std::vector<bool> &used, int from, std::vector<Edge> &chosen,
                       const std::function<void(const std::vector<Edge> &)> &visit) {
    int q = from;
    while (q < n && used[q]) {
        q++;
    }
    if (q >= n) {
        visit(chosen);
        return;
    }
    used[q] = true;
    for_each_matching(n, used, q + 1, chosen, visit);
    for (int j = q + 1; j < n; j++) {
        if (used[j]) {
            continue;
        }
        used[j] = true;
        for (Edge e : {Edge{q, j}, Edge{j, q}}) {
            chosen.push_back(e);
            for_each_matching(n, used, q + 1, chosen, visit);
            chosen.pop_back();
        }
        used[j] = false;
    }
    used[q] = false;
}

double matching_count(int n) {
    double a = 1, b = 1;  // T(0), T(1)
    if (n == 0) {
        return 1;
    }
    for (int k = 2; k <= n; k++) {
        double c = b + 2.0 * (k - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

double falling_ratio(int n, int k) {
    // floor(n/2)! / (floor(n/2) - k)! * (n - 2k)! / n!
    int h = n / 2;
    double out = 1;
    for (int j = 0; j < k; j++) {
        out *= h - j;
    }
    for (int j = n - 2 * k + 1; j <= n; j++) {
        out /= j;
    }
    return out;
}

}  // namespace

double predict_r_from_rates(const SamplerSpec &spec, const DeviceSpec &device, const ErrorModel &model,
                            size_t max_structures, size_t mc_samples, uint64_t seed) {
    spec.validate(device);
    if (model.num_qubits() != device.n) {
        throw std::invalid_argument("error model size does not match the device");
    }
    std::vector<std::string> pool;
    for (int g : pool_gates(spec.pool)) {
        pool.push_back(pool_gate_name(spec.pool, g));
    }
    std::vector<Structure> structures;
    switch (spec.type) {
        case SamplerType::PCnot:
            if (device.edges.empty()) {
                structures.push_back({{}, 1.0});
            } else {
                structures.push_back({{}, 1 - spec.p_cnot});
                for (const auto &e : device.edges) {
                    structures.push_back({{e}, spec.p_cnot / device.edges.size()});
                }
            }
            break;
        case SamplerType::CategoryV:
            for (size_t k = 0; k < spec.v.size(); k++) {
                const auto &cat = spec.categories[k];
                if (cat.empty()) {
                    structures.push_back({{}, spec.v[k]});
                } else {
                    for (const auto &e : cat) {
                        structures.push_back({{e}, spec.v[k] / cat.size()});
                    }
                }
            }
            break;
        case SamplerType::Pairing: {
            if (matching_count(device.n) > static_cast<double>(max_structures)) {
                Rng rng(seed);
                double total = 0;
                for (size_t s = 0; s < mc_samples; s++) {
                    total += model.layer_error_rate(sample_layer(spec, device, rng), true);
                }
                return total / mc_samples;
            }
            int h = device.n / 2;
            std::vector<bool> used(device.n, false);
            std::vector<Edge> chosen;
            for_each_matching(device.n, used, 0, chosen, [&](const std::vector<Edge> &cnots) {
                int k = static_cast<int>(cnots.size());
                double w = falling_ratio(device.n, k) * std::pow(spec.p_cnot, k) * std::pow(1 - spec.p_cnot, h - k);
                if (w > 0) {
                    structures.push_back({cnots, w});
                }
            });
            break;
        }
    }
    double total = 0;
    for (const auto &s : structures) {
        if (s.weight == 0) {
            continue;
        }
        Layer fixed;
        fixed.stage = Stage::Core;
        std::vector<bool> busy(device.n, false);
        for (const auto &e : s.cnots) {
            fixed.gates.push_back(Gate::cnot(e.first, e.second));
            busy[e.first] = busy[e.second] = true;
        }
        std::vector<int> slots;
        for (int q = 0; q < device.n; q++) {
            if (!busy[q]) {
                slots.push_back(q);
            }
        }
        total += s.weight * model.layer_error_rate_with_pool(fixed, slots, pool, true);
    }
    return total;
}

CategoryRates solve_category_rates(const RateSystem &system) {
    size_t rows = system.M.size();
    if (rows == 0 || system.r.size() != rows) {
        throw std::invalid_argument("rate system needs one r value per row of M");
    }
    size_t cols = system.M[0].size();
    if (cols == 0 || cols > rows) {
        throw std::invalid_argument("rate system needs at least as many rows as categories");
    }
    if (!system.r_sigma.empty() && system.r_sigma.size() != rows) {
        throw std::invalid_argument("r_sigma must match the rows of M");
    }
    Eigen::MatrixXd M(rows, cols);
    Eigen::VectorXd r(rows), var = Eigen::VectorXd::Zero(rows);
    for (size_t i = 0; i < rows; i++) {
        if (system.M[i].size() != cols) {
            throw std::invalid_argument("rows of M have different lengths");
        }
        double sum = 0;
        for (size_t j = 0; j < cols; j++) {
            M(i, j) = system.M[i][j];
            sum += system.M[i][j];
        }
        if (std::abs(sum - 1) > 1e-9) {
            throw std::invalid_argument("row " + std::to_string(i) + " of M does not sum to 1");
        }
        r(i) = system.r[i];
        if (!system.r_sigma.empty()) {
            var(i) = system.r_sigma[i] * system.r_sigma[i];
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M.transpose() * M);
    if (lu.rank() < static_cast<Eigen::Index>(cols)) {
        throw std::invalid_argument("mixing matrix is singular");
    }
    Eigen::MatrixXd pinv = rows == cols ? Eigen::MatrixXd(M.inverse()) : Eigen::MatrixXd(lu.inverse() * M.transpose());
    Eigen::VectorXd eps = pinv * r;
    Eigen::MatrixXd cov = pinv * var.asDiagonal() * pinv.transpose();
    CategoryRates out;
    out.covariance.assign(cols, std::vector<double>(cols));
    for (size_t i = 0; i < cols; i++) {
        out.epsilon.push_back(eps(i));
        out.sigma.push_back(std::sqrt(std::max(0.0, cov(i, i))));
        for (size_t j = 0; j < cols; j++) {
            out.covariance[i][j] = cov(i, j);
        }
    }
    return out;
}

std::vector<std::vector<double>> mixing_matrix(const std::vector<double> &cnot_probabilities) {
    std::vector<std::vector<double>> M;
    for (double p : cnot_probabilities) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("CNOT probabilities must lie in [0, 1]");
        }
        M.push_back({p, 1 - p});
    }
    return M;
}

namespace {

std::vector<double> building_blocks(const std::vector<double> &eps, size_t local_index, int n, bool &flagged) {
    auto survive = [&](double e) {
        if (e < 0 || e > 1) {
            flagged = true;
        }
        return std::clamp(1 - e, 1e-300, 1.0);
    };
    double local = 1 - std::pow(survive(eps[local_index]), 1.0 / n);
    std::vector<double> out{local};
    double spectators = std::pow(1 - local, n - 2);
    double total = 0;
    int classes = 0;
    for (size_t k = 0; k < eps.size(); k++) {
        if (k == local_index) {
            continue;
        }
        double c = 1 - survive(eps[k]) / spectators;
        out.push_back(c);
        total += c;
        classes++;
    }
    out.push_back(classes ? total / classes : 0.0);
    return out;
}

}  // namespace

BuildingBlockRates extract_building_block_rates(const CategoryRates &rates, size_t local_index, int n) {
    const auto &eps = rates.epsilon;
    if (local_index >= eps.size() || n < 2) {
        throw std::invalid_argument("building block extraction needs n >= 2 and a valid local category");
    }
    bool flagged = false;
    std::vector<double> value = building_blocks(eps, local_index, n, flagged);
    size_t outputs = value.size(), inputs = eps.size();
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(outputs, inputs);
    for (size_t j = 0; j < inputs; j++) {
        double h = 1e-7;
        std::vector<double> up = eps, down = eps;
        up[j] += h;
        down[j] -= h;
        bool ignored = false;
        auto a = building_blocks(up, local_index, n, ignored);
        auto b = building_blocks(down, local_index, n, ignored);
        for (size_t i = 0; i < outputs; i++) {
            J(i, j) = (a[i] - b[i]) / (2 * h);
        }
    }
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(inputs, inputs);
    if (rates.covariance.size() == inputs) {
        for (size_t i = 0; i < inputs; i++) {
            for (size_t j = 0; j < inputs; j++) {
                cov(i, j) = rates.covariance[i][j];
            }
        }
    }
    Eigen::MatrixXd out_cov = J * cov * J.transpose();
    auto sd = [&](size_t i) { return std::sqrt(std::max(0.0, out_cov(i, i))); };
    BuildingBlockRates out;
    out.local = value[0];
    out.local_sigma = sd(0);
    for (size_t i = 1; i + 1 < outputs; i++) {
        out.cnot_class.push_back(value[i]);
        out.cnot_class_sigma.push_back(sd(i));
    }
    out.cnot = value.back();
    out.cnot_sigma = sd(outputs - 1);
    for (double v : value) {
        if (v < 0 || v > 1) {
            flagged = true;
        }
    }
    out.flagged = flagged;
    return out;
}

double crb_rescale(double r, double alpha) {
    if (!(alpha > 0)) {
        throw std::invalid_argument("alpha must be positive");
    }
    if (!(r >= 0 && r < 1)) {
        throw std::invalid_argument("r must lie in [0, 1)");
    }
    return 1 - std::pow(1 - r, 1 / alpha);
}

double theory_pm(int m, double eps, int n) {
    double floor = std::pow(2.0, -n);
    return floor + (1 - floor) * power(1 - eps, m);
}

namespace {

double quantile(std::vector<double> sorted, double q) {
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty()) {
        return 0.0;
    }
    double pos = q * (sorted.size() - 1);
    size_t i = static_cast<size_t>(std::floor(pos));
    if (i + 1 >= sorted.size()) {
        return sorted.back();
    }
    double f = pos - i;
    return sorted[i] * (1 - f) + sorted[i + 1] * f;
}

}  // namespace

std::vector<PlotRow> plot_rows(const std::map<int, LengthSummary> &summary, const DecayFit &fit) {
    std::vector<PlotRow> rows;
    for (const auto &[m, s] : summary) {
        auto probs = s.probabilities();
        rows.push_back({m, s.mean, quantile(probs, 0.05), quantile(probs, 0.25), quantile(probs, 0.5),
                        quantile(probs, 0.75), quantile(probs, 0.95), fit.predict(m)});
    }
    return rows;
}

}  // namespace drbench
