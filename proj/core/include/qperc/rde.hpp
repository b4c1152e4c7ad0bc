#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qperc/distributions.hpp"
#include "qperc/trees.hpp"

namespace qperc {

// Pool of resolvent samples at a fixed spectral parameter z with Im z > 0.
// Every sample lies in the closed upper half-plane disk of radius 1/Im z.
struct ResolventEnsemble {
    std::complex<double> z;
    std::vector<std::complex<double>> samples;
    long generation = 0;
    std::uint64_t seed = 0;
    std::vector<std::complex<double>> mean_history;  // pool mean after each sweep

    std::complex<double> mean() const;
    double mean_im() const { return mean().imag(); }
    // Standard error of the pool-mean imaginary part.
    double mean_im_se() const;
};

struct StationarityDiagnostic {
    double drift = 0.0;  // |pool mean now - pool mean `window` sweeps ago|
    double scale = 0.0;  // 3 standard errors of the pool mean
    bool stationary = false;
};
StationarityDiagnostic stationarity(const ResolventEnsemble& e, int window = 20);

// Population dynamics for the distributional fixed point
// G = -(z + sum_{i<=N} G_i)^{-1}, N ~ P. Samples start at the semicircle
// fixed point for q = max(1, round(mean P)) and are updated synchronously;
// destination i at generation g draws from a stream keyed by (seed, g, i),
// so the result does not depend on evaluation order.
ResolventEnsemble evolve_pool(const OffspringDistribution& P, std::complex<double> z, int pool_size,
                              int sweeps, std::uint64_t seed);

// Continue sweeping an existing ensemble (used for warm starts and for
// convergence tests from perturbed initial conditions).
void evolve_pool_in_place(ResolventEnsemble& e, const OffspringDistribution& P, int sweeps);

// Sum of n_e independent extinct-subtree root resolvents at z.
std::complex<double> sample_V(const SkeletonLaws& laws, std::complex<double> z, int n_e,
                              long extinct_cap, RngStream& rng);

// Skeleton-conditioned pool: G^s = -(z + sum_{i<=N'_s} G^s_i + V(z))^{-1}
// with (N'_s, N'_e) the conditioned offspring pair.
ResolventEnsemble evolve_skeleton_pool(const SkeletonLaws& laws, std::complex<double> z,
                                       int pool_size, int sweeps, long extinct_cap,
                                       std::uint64_t seed);

// Root draws -(z + sum_{i<=N} pool picks)^{-1} with N ~ P, where the pool was
// evolved for size_bias_shift(P) at the same z. Throws std::invalid_argument
// when pool.z != z.
std::vector<std::complex<double>> ugw_root_resolvent(const OffspringDistribution& P,
                                                     std::complex<double> z,
                                                     const ResolventEnsemble& pool, int n_draws,
                                                     std::uint64_t seed);

enum class PoolKind { Gw, Skeleton, UgwRoot };

struct PoolSpec {
    PoolKind kind = PoolKind::Gw;
    OffspringDistribution offspring;
    int pool_size = 10000;
    int sweeps = 200;
    int n_draws = 20000;         // UgwRoot
    long extinct_cap = 1000000;  // Skeleton
};

struct DosPoint {
    double dos = 0.0;
    double se = 0.0;
};

// mean(Im)/pi of the equilibrated pool at z = lambda + i eta for each grid
// lambda. Deterministic given the seed.
std::vector<DosPoint> density_of_states(const PoolSpec& spec, std::span<const double> lambda_grid,
                                        double eta, std::uint64_t seed);

struct LyapunovReport {
    double a = 0.0, b = 0.0;  // interval
    double eta = 0.0;
    double gamma_value = 0.0;
    double mc_error = 0.0;
    long n_samples = 0;
};

struct LyapunovParams {
    int n_lambda = 64;
    int pool_size = 2000;
    int sweeps = 200;
    long extinct_cap = 1000000;
};

// gamma_P(eta) = E L_P(E + i eta), E uniform on [a,b], with
// L_P(z) = -E log|G^s(z)| - (1/2) E log N'_s. The log N'_s term is computed
// by exact enumeration of the conditioned pmf. eta is clamped to the 1e-6
// floor.
LyapunovReport lyapunov(const SkeletonLaws& laws, double a, double b, double eta,
                        const LyapunovParams& params, std::uint64_t seed);

struct KappaEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long n_pairs = 0;
};

// U-statistic estimate of kappa(X) = E |X-X'| / (X+X') (0/0 = 0) over the
// floor(m/2) disjoint pairs of one seeded shuffle. A fixed pair seed keeps
// the pairing identical across calls, so scale and reciprocal invariance
// hold pair for pair.
KappaEstimate discrepancy_kappa(std::span<const double> samples,
                                std::uint64_t pair_seed = 0x6b617070);

struct KappaBoundReport {
    double kappa_im = 0.0, kappa_im_se = 0.0;
    double kappa_mod2 = 0.0, kappa_mod2_se = 0.0;
    double lyap = 0.0, lyap_se = 0.0;
    int q = 0;           // nearest Dirac target
    double d_tv = 0.0;   // d_TV(P, delta_q)
    double p_ne_pos = 0.0;
    double expected_pair_sum = 0.0;  // E[N'_s + N'_e], the regime indicator
    bool bound1_ok = false;
    double bound1_margin = 0.0;  // sqrt(2 L) - kappa(Im G^s)
    double bound2_value = 0.0;   // 6 dtv^2 + 6 sqrt(2) (q+1) sqrt(L) + 6 P(N'_e >= 1)
    double bound2_margin = 0.0;  // bound2_value - kappa(|G^s|^2)
};

// Estimates kappa(Im G^s(z)), kappa(|G^s(z)|^2) and L_P(z) from one
// equilibrated skeleton pool and evaluates the discrepancy bounds.
KappaBoundReport kappa_bound_check(const SkeletonLaws& laws, std::complex<double> z, int pool_size,
                                   int sweeps, long extinct_cap, std::uint64_t seed);

// Grid over [lo, hi] that avoids every eigenvalue of trees with k <= K
// vertices by the margin eps 2^{-k} / |Lambda_k|.
std::vector<double> eigenvalue_avoiding_grid(double lo, double hi, int n_points, int K, double eps);

}  // namespace qperc
