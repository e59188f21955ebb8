// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#include "wavecomplex/hmt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wavecomplex/rng.hpp"

namespace wavecomplex {

namespace {

constexpr double k_log_2pi = 1.8378770664093454836;

void check_prob_vector(const std::vector<double>& p, std::size_t expected,
                       const char* what) {
    if (p.size() != expected) {
        throw std::invalid_argument(std::string(what) + ": wrong size");
    }
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument(std::string(what) + ": entry outside [0,1]");
        }
        sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument(std::string(what) + ": does not sum to 1");
    }
}

/// Population variance (mean subtracted).
double population_variance(const std::vector<double>& v) {
    if (v.empty()) {
        return 0.0;
    }
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double acc = 0.0;
    for (double x : v) {
        acc += (x - mean) * (x - mean);
    }
    return acc / v.size();
}

double scale_floor(const WaveletTree& t, int scale, const FitConfig& cfg) {
    return std::max(cfg.variance_floor_rel * population_variance(t.details[scale]),
                    cfg.variance_floor);
}

/// Nearest-rank magnitude quantile of |values|.
double magnitude_quantile(std::vector<double> magnitudes, double q) {
    std::sort(magnitudes.begin(), magnitudes.end());
    const auto idx = static_cast<std::size_t>(q * (magnitudes.size() - 1));
    return magnitudes[std::min(idx, magnitudes.size() - 1)];
}

}  // namespace

void HmtParams::validate() const {
    if (levels < 1 || num_states < 1) {
        throw std::invalid_argument("HmtParams: levels and num_states must be >= 1");
    }
    const auto m = static_cast<std::size_t>(num_states);
    check_prob_vector(root_pmf, m, "root_pmf");
    if (trans.size() != static_cast<std::size_t>(levels - 1)) {
        throw std::invalid_argument("HmtParams: trans must have J-1 matrices");
    }
    for (const auto& matrix : trans) {
        if (matrix.size() != m * m) {
            throw std::invalid_argument("HmtParams: transition matrix has wrong size");
        }
        for (std::size_t row = 0; row < m; ++row) {
            std::vector<double> r(matrix.begin() + row * m, matrix.begin() + (row + 1) * m);
            check_prob_vector(r, m, "transition row");
        }
    }
    if (means.size() != static_cast<std::size_t>(levels) ||
        variances.size() != static_cast<std::size_t>(levels)) {
        throw std::invalid_argument("HmtParams: means/variances must have J scales");
    }
    for (int j = 0; j < levels; ++j) {
        if (means[j].size() != m || variances[j].size() != m) {
            throw std::invalid_argument("HmtParams: per-scale parameter size mismatch");
        }
        for (double v : variances[j]) {
            if (!(v > 0.0)) {
                throw std::invalid_argument("HmtParams: variances must be positive");
            }
        }
    }
}

void FitConfig::validate() const {
    if (num_states < 1) throw std::invalid_argument("FitConfig: num_states must be >= 1");
    if (max_iter < 1) throw std::invalid_argument("FitConfig: max_iter must be >= 1");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("FitConfig: rel_tol must be > 0");
    if (restarts < 1) throw std::invalid_argument("FitConfig: restarts must be >= 1");
    if (!(variance_floor > 0.0) || !(variance_floor_rel >= 0.0)) {
        throw std::invalid_argument("FitConfig: invalid variance floor");
    }
}

HmtParams init_params(const WaveletTree& t, const FitConfig& cfg, int restart) {
    cfg.validate();
    if (!t.well_formed() || t.levels < 2) {
        throw std::invalid_argument("init_params: tree must have at least 2 scales");
    }
    const int levels = t.levels;
    const int m_states = cfg.num_states;

    double q = 0.75;
    if (restart > 0) {
        Rng rng(Rng::mix(cfg.seed, static_cast<std::uint64_t>(restart)));
        q = std::clamp(0.75 + (rng.uniform() - 0.5) * 0.3, 0.55, 0.95);
    }

    // Per-scale labels: bucket by magnitude quantiles; for M = 2 a single
    // threshold at the (perturbed) 75th percentile splits yin from yang.
    std::vector<std::vector<int>> labels(levels);
    for (int j = 0; j < levels; ++j) {
        const auto& d = t.details[j];
        std::vector<double> mags(d.size());
        const bool degenerate =
            std::all_of(d.begin(), d.end(), [&](double v) { return v == d[0]; });
        for (std::size_t k = 0; k < d.size(); ++k) {
            double v = d[k];
            if (degenerate) {
                // split identical coefficients apart by one ulp
                const double jitter = std::max(std::fabs(v), 1.0) *
                                      std::numeric_limits<double>::epsilon();
                v += (k % 2 == 0) ? -jitter : jitter;
            }
            mags[k] = std::fabs(v);
        }
        std::vector<double> bounds;
        for (int m = 1; m < m_states; ++m) {
            const double qm = 1.0 - (1.0 - q) * (m_states - m) / (m_states - 1);
            bounds.push_back(magnitude_quantile(mags, qm));
        }
        labels[j].resize(d.size());
        for (std::size_t k = 0; k < d.size(); ++k) {
            int lab = 0;
            for (double b : bounds) {
                if (mags[k] > b) {
                    ++lab;
                }
            }
            labels[j][k] = lab;
        }
    }

    HmtParams params;
    params.levels = levels;
    params.num_states = m_states;

    // Root pmf from the single scale-0 label, 0.5 pseudo-counts.
    params.root_pmf.assign(m_states, 0.5);
    params.root_pmf[labels[0][0]] += 1.0;
    const double root_total = m_states * 0.5 + 1.0;
    for (double& v : params.root_pmf) {
        v /= root_total;
    }

    // Transitions from parent-child label co-occurrence, 0.5 pseudo-counts.
    params.trans.resize(levels - 1);
    for (int j = 1; j < levels; ++j) {
        std::vector<double> counts(static_cast<std::size_t>(m_states) * m_states, 0.5);
        for (std::size_t k = 0; k < labels[j].size(); ++k) {
            counts[labels[j - 1][k / 2] * m_states + labels[j][k]] += 1.0;
        }
        for (int row = 0; row < m_states; ++row) {
            double sum = 0.0;
            for (int n = 0; n < m_states; ++n) {
                sum += counts[row * m_states + n];
            }
            for (int n = 0; n < m_states; ++n) {
                counts[row * m_states + n] /= sum;
            }
        }
        params.trans[j - 1] = std::move(counts);
    }

    // Emission parameters from the labeled groups.
    params.means.assign(levels, std::vector<double>(m_states, 0.0));
    params.variances.assign(levels, std::vector<double>(m_states, 0.0));
    for (int j = 0; j < levels; ++j) {
        const auto& d = t.details[j];
        const double floor_j = scale_floor(t, j, cfg);
        const double scale_mean = std::accumulate(d.begin(), d.end(), 0.0) / d.size();
        const double scale_var = population_variance(d);
        for (int m = 0; m < m_states; ++m) {
            double sum = 0.0;
            double count = 0.0;
            for (std::size_t k = 0; k < d.size(); ++k) {
                if (labels[j][k] == m) {
                    sum += d[k];
                    count += 1.0;
                }
            }
            double mean;
            double var;
            if (count > 0.0) {
                mean = sum / count;
                double acc = 0.0;
                for (std::size_t k = 0; k < d.size(); ++k) {
                    if (labels[j][k] == m) {
                        acc += (d[k] - mean) * (d[k] - mean);
                    }
                }
                var = acc / count;
            } else {
                // empty group: spread states by index so larger labels start
                // as higher-variance components
                mean = scale_mean;
                var = scale_var * std::pow(4.0, m - (m_states - 1) / 2.0);
            }
            params.means[j][m] = cfg.zero_mean ? 0.0 : mean;
            if (cfg.zero_mean) {
                // variance about zero, not about the group mean
                var += mean * mean;
            }
            params.variances[j][m] = std::max(var, floor_j);
        }
    }
    return params;
}

Posteriors e_step(const WaveletTree& t, const HmtParams& params) {
    params.validate();
    if (!t.well_formed() || t.levels != params.levels) {
        throw std::invalid_argument("e_step: tree/params shape mismatch");
    }
    const int levels = t.levels;
    const int M = params.num_states;

    Posteriors post;
    post.levels = levels;
    post.num_states = M;
    post.marginal.resize(levels);
    post.pairwise.resize(levels);

    // beta_hat[j][k*M + m]: normalized subtree likelihoods.
    // mhat[j][k*M + m] (j >= 1): sum_n eps_j(m,n) beta_hat_child(n), the
    // parent-state predictive weight of child (j,k).
    std::vector<std::vector<double>> beta_hat(levels);
    std::vector<std::vector<double>> mhat(levels);
    double log_likelihood = 0.0;

    std::vector<double> log_emission(M);
    for (int j = levels - 1; j >= 0; --j) {
        const auto& d = t.details[j];
        const std::size_t width = d.size();
        beta_hat[j].assign(width * M, 0.0);
        if (j >= 1) {
            mhat[j].assign(width * M, 0.0);
        }
        for (std::size_t k = 0; k < width; ++k) {
            double max_log = -std::numeric_limits<double>::infinity();
            for (int m = 0; m < M; ++m) {
                const double var = params.variances[j][m];
                const double diff = d[k] - params.means[j][m];
                log_emission[m] = -0.5 * (k_log_2pi + std::log(var) + diff * diff / var);
                max_log = std::max(max_log, log_emission[m]);
            }
            double norm = 0.0;
            for (int m = 0; m < M; ++m) {
                double u = std::exp(log_emission[m] - max_log);
                if (j + 1 < levels) {
                    u *= mhat[j + 1][(2 * k) * M + m];
                    u *= mhat[j + 1][(2 * k + 1) * M + m];
                }
                beta_hat[j][k * M + m] = u;
                norm += u;
            }
            if (!(norm > 0.0)) {
                throw std::runtime_error("e_step: per-node normalizer underflowed to 0");
            }
            for (int m = 0; m < M; ++m) {
                beta_hat[j][k * M + m] /= norm;
            }
            log_likelihood += std::log(norm) + max_log;
            if (j >= 1) {
                const auto& eps = params.trans[j - 1];
                for (int m = 0; m < M; ++m) {
                    double acc = 0.0;
                    for (int n = 0; n < M; ++n) {
                        acc += eps[m * M + n] * beta_hat[j][k * M + n];
                    }
                    mhat[j][k * M + m] = acc;
                }
            }
        }
    }

    // Root marginal.
    post.marginal[0].assign(M, 0.0);
    double root_norm = 0.0;
    for (int m = 0; m < M; ++m) {
        post.marginal[0][m] = params.root_pmf[m] * beta_hat[0][m];
        root_norm += post.marginal[0][m];
    }
    if (!(root_norm > 0.0)) {
        throw std::runtime_error("e_step: root normalizer underflowed to 0");
    }
    for (int m = 0; m < M; ++m) {
        post.marginal[0][m] /= root_norm;
    }
    log_likelihood += std::log(root_norm);
    post.log_likelihood = log_likelihood;

    // Downward conditional pass:
    //   xi_c(m,n) = gamma_parent(m) eps(m,n) beta_hat_c(n) / mhat_c(m)
    for (int j = 1; j < levels; ++j) {
        const std::size_t width = t.details[j].size();
        post.marginal[j].assign(width * M, 0.0);
        post.pairwise[j].assign(width * M * M, 0.0);
        const auto& eps = params.trans[j - 1];
        for (std::size_t k = 0; k < width; ++k) {
            for (int m = 0; m < M; ++m) {
                const double gamma_parent = post.marginal[j - 1][(k / 2) * M + m];
                const double denom = mhat[j][k * M + m];
                if (!(denom > 0.0) || gamma_parent == 0.0) {
                    continue;
                }
                const double w = gamma_parent / denom;
                for (int n = 0; n < M; ++n) {
                    const double v = w * eps[m * M + n] * beta_hat[j][k * M + n];
                    post.pairwise[j][(k * M + m) * M + n] = v;
                    post.marginal[j][k * M + n] += v;
                }
            }
        }
    }
    return post;
}

HmtParams m_step(const WaveletTree& t, const Posteriors& post, const FitConfig& cfg) {
    cfg.validate();
    if (!t.well_formed() || t.levels != post.levels) {
        throw std::invalid_argument("m_step: tree/posteriors shape mismatch");
    }
    const int levels = t.levels;
    const int M = post.num_states;

    HmtParams params;
    params.levels = levels;
    params.num_states = M;
    params.root_pmf.assign(post.marginal[0].begin(), post.marginal[0].begin() + M);

    params.trans.resize(levels - 1);
    for (int j = 1; j < levels; ++j) {
        std::vector<double> eps(static_cast<std::size_t>(M) * M, 0.0);
        const std::size_t width = t.details[j].size();
        for (std::size_t k = 0; k < width; ++k) {
            for (int m = 0; m < M; ++m) {
                for (int n = 0; n < M; ++n) {
                    eps[m * M + n] += post.pairwise[j][(k * M + m) * M + n];
                }
            }
        }
        // row sums equal the summed parent marginals, so normalizing rows
        // realizes eps = sum xi / sum gamma_parent
        for (int m = 0; m < M; ++m) {
            double row = 0.0;
            for (int n = 0; n < M; ++n) {
                row += eps[m * M + n];
            }
            if (row > 0.0) {
                for (int n = 0; n < M; ++n) {
                    eps[m * M + n] /= row;
                }
            } else {
                for (int n = 0; n < M; ++n) {
                    eps[m * M + n] = 1.0 / M;
                }
            }
        }
        params.trans[j - 1] = std::move(eps);
    }

    params.means.assign(levels, std::vector<double>(M, 0.0));
    params.variances.assign(levels, std::vector<double>(M, 0.0));
    for (int j = 0; j < levels; ++j) {
        const auto& d = t.details[j];
        const double floor_j = scale_floor(t, j, cfg);
        for (int m = 0; m < M; ++m) {
            double wsum = 0.0;
            double mean = 0.0;
            for (std::size_t k = 0; k < d.size(); ++k) {
                wsum += post.marginal[j][k * M + m];
            }
            if (!cfg.zero_mean && wsum > 0.0) {
                double acc = 0.0;
                for (std::size_t k = 0; k < d.size(); ++k) {
                    acc += post.marginal[j][k * M + m] * d[k];
                }
                mean = acc / wsum;
            }
            double var = 0.0;
            if (wsum > 0.0) {
                double acc = 0.0;
                for (std::size_t k = 0; k < d.size(); ++k) {
                    const double diff = d[k] - mean;
                    acc += post.marginal[j][k * M + m] * diff * diff;
                }
                var = acc / wsum;
            }
            params.means[j][m] = mean;
            params.variances[j][m] = std::max(var, floor_j);
        }
    }
    return params;
}

namespace {

/// Relabel states so variance at the finest scale increases with the state
/// index ("yang" last). Applied jointly to params and posteriors.
void relabel_by_finest_variance(HmtParams& params, Posteriors& post) {
    const int M = params.num_states;
    const int finest = params.levels - 1;
    std::vector<int> order(M);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return params.variances[finest][a] < params.variances[finest][b];
    });
    bool identity = true;
    for (int m = 0; m < M; ++m) {
        identity = identity && order[m] == m;
    }
    if (identity) {
        return;
    }

    HmtParams src = params;
    Posteriors psrc = post;
    for (int m = 0; m < M; ++m) {
        params.root_pmf[m] = src.root_pmf[order[m]];
        for (int j = 0; j < params.levels; ++j) {
            params.means[j][m] = src.means[j][order[m]];
            params.variances[j][m] = src.variances[j][order[m]];
        }
        for (int j = 1; j < params.levels; ++j) {
            for (int n = 0; n < M; ++n) {
                params.trans[j - 1][m * M + n] = src.trans[j - 1][order[m] * M + order[n]];
            }
        }
    }
    for (int j = 0; j < post.levels; ++j) {
        const std::size_t width = post.marginal[j].size() / M;
        for (std::size_t k = 0; k < width; ++k) {
            for (int m = 0; m < M; ++m) {
                post.marginal[j][k * M + m] = psrc.marginal[j][k * M + order[m]];
                if (j >= 1) {
                    for (int n = 0; n < M; ++n) {
                        post.pairwise[j][(k * M + m) * M + n] =
                            psrc.pairwise[j][(k * M + order[m]) * M + order[n]];
                    }
                }
            }
        }
    }
}

}  // namespace

FitResult fit(const WaveletTree& t, const FitConfig& cfg) {
    cfg.validate();
    FitResult best;
    bool have_best = false;

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        HmtParams params = init_params(t, cfg, restart);
        Posteriors post = e_step(t, params);
        std::vector<double> trace = {post.log_likelihood};
        int iterations = 0;
        for (int iter = 1; iter <= cfg.max_iter; ++iter) {
            params = m_step(t, post, cfg);
            Posteriors next = e_step(t, params);
            trace.push_back(next.log_likelihood);
            const double prev = post.log_likelihood;
            post = std::move(next);
            iterations = iter;
            const double change = std::fabs(post.log_likelihood - prev);
            if (change < cfg.rel_tol * std::max(std::fabs(prev), 1e-12)) {
                break;
            }
        }
        if (!have_best || post.log_likelihood > best.posteriors.log_likelihood) {
            best.params = std::move(params);
            best.posteriors = std::move(post);
            best.log_likelihood_trace = std::move(trace);
            best.best_restart = restart;
            best.iterations = iterations;
            have_best = true;
        }
    }

    relabel_by_finest_variance(best.params, best.posteriors);
    return best;
}

}  // namespace wavecomplex
