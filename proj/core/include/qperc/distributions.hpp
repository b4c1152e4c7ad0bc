#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qperc/rng.hpp"

namespace qperc {

// Probability law on non-negative integers, materialized as a dense pmf table.
// Parametric kinds are truncated so the dropped tail mass is below 1e-14,
// which makes every downstream sum finite and reproducible.
class OffspringDistribution {
public:
    enum class Kind { Dirac, Binomial, Poisson, Explicit };

    static OffspringDistribution dirac(int q);
    static OffspringDistribution binomial(int n, double p);
    static OffspringDistribution poisson(double c);
    static OffspringDistribution from_pmf(std::vector<double> pmf);
    static OffspringDistribution from_pmf(const std::map<int, double>& pmf);

    Kind kind() const { return kind_; }
    int max_support() const { return static_cast<int>(p_.size()) - 1; }
    double pmf(int k) const {
        return (k < 0 || k >= static_cast<int>(p_.size())) ? 0.0 : p_[static_cast<size_t>(k)];
    }
    const std::vector<double>& pmf_table() const { return p_; }
    double mean() const { return mean_; }
    bool is_dirac_at(int q) const { return kind_ == Kind::Dirac && pmf(q) == 1.0; }

    // Generating function phi(x) = sum_k P(k) x^k on [0,1]; throws
    // std::domain_error outside.
    double pgf(double x) const;

    // phi evaluated on the materialized table for any x >= 0 (used for total
    // progeny tail bounds at radius rho > 1).
    double pgf_at_radius(double x) const;

    // W_p(P, delta_q) = sum_k |k-q|^p P(k).
    double wasserstein_to_dirac(int q, double p) const;

    int sample(RngStream& rng) const;

private:
    OffspringDistribution(Kind kind, std::vector<double> pmf);

    Kind kind_;
    std::vector<double> p_;
    std::vector<double> cdf_;
    double mean_ = 0.0;
};

// (1/2) sum_k |P(k) - Q(k)|.
double tv_distance(const OffspringDistribution& P, const OffspringDistribution& Q);

// Size-biased shift: shifted(k) = (k+1) P(k+1) / mean(P). Throws
// std::invalid_argument when mean(P) == 0.
OffspringDistribution size_bias_shift(const OffspringDistribution& P);

// Smallest root of x = phi(x), by monotone fixed-point iteration from 0.
// Returns 0 exactly when P(0) = 0 and 1 exactly when mean <= 1 (and P has
// leaves); throws IterationLimitError past max_iter.
double extinction_probability(const OffspringDistribution& P, double tol, long max_iter = 1000000);

// Skeleton decomposition of a supercritical law: extinction probability,
// the subcritical extinct-subtree offspring law Q(k) = P(k) pi_e^{k-1}, and
// the conditioned offspring pair (N'_s, N'_e) of a surviving root.
struct SkeletonLaws {
    OffspringDistribution base;
    double pi_e = 0.0;
    double survival_prob = 1.0;
    // Empty when pi_e == 0: the extinct component is never sampled.
    std::optional<OffspringDistribution> extinct_offspring;

    // (n_s >= 1, n_e) by Bernoulli(pi_e) thinning of N ~ P, rejecting n_s = 0.
    std::pair<int, int> sample_conditioned_pair(RngStream& rng, long attempt_cap = 1000000) const;

    // E[x^{N'_s} y^{N'_e}] in closed form from the base pgf.
    double pair_pgf(double x, double y) const;

    // Exact moments of the conditioned pair by pmf enumeration.
    double expected_ns() const;
    double expected_ne() const;
    double expected_log_ns() const;
    double prob_ne_positive() const;
    // Joint pmf P(N'_s = s, N'_e = e).
    double conditioned_pair_pmf(int n_s, int n_e) const;
};

// Throws std::invalid_argument when mean(P) <= 1.
SkeletonLaws skeleton_laws(const OffspringDistribution& P);

}  // namespace qperc
