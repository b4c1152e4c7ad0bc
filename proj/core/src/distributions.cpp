#include "qperc/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qperc/errors.hpp"

namespace qperc {

namespace {

constexpr double kTailMass = 1e-14;
constexpr double kNormTol = 1e-12;

bool is_exact_dirac(const std::vector<double>& p) {
    int hits = 0;
    double w = 0.0;
    for (double x : p) {
        if (x != 0.0) {
            ++hits;
            w = x;
        }
    }
    return hits == 1 && w == 1.0;
}

}  // namespace

OffspringDistribution::OffspringDistribution(Kind kind, std::vector<double> pmf)
    : kind_(kind), p_(std::move(pmf)) {
    if (p_.empty()) throw std::invalid_argument("offspring pmf is empty");
    double sum = 0.0;
    for (size_t k = 0; k < p_.size(); ++k) {
        if (p_[k] < 0.0) throw std::invalid_argument("offspring pmf has a negative entry");
        sum += p_[k];
        mean_ += static_cast<double>(k) * p_[k];
    }
    if (std::abs(sum - 1.0) > kNormTol)
        throw std::invalid_argument("offspring pmf does not sum to 1");
    cdf_.resize(p_.size());
    std::partial_sum(p_.begin(), p_.end(), cdf_.begin());
    cdf_.back() = std::max(cdf_.back(), 1.0);
}

OffspringDistribution OffspringDistribution::dirac(int q) {
    if (q < 0) throw std::invalid_argument("dirac: q must be >= 0");
    std::vector<double> p(static_cast<size_t>(q) + 1, 0.0);
    p.back() = 1.0;
    return OffspringDistribution(Kind::Dirac, std::move(p));
}

OffspringDistribution OffspringDistribution::binomial(int n, double p) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("binomial: bad parameters");
    std::vector<double> pmf(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        double lg = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
        double lt = (k > 0 ? k * std::log(p) : 0.0) + (n - k > 0 ? (n - k) * std::log1p(-p) : 0.0);
        pmf[static_cast<size_t>(k)] = std::exp(lg + lt);
    }
    double sum = std::accumulate(pmf.begin(), pmf.end(), 0.0);
    for (double& x : pmf) x /= sum;
    Kind kind = is_exact_dirac(pmf) ? Kind::Dirac : Kind::Binomial;
    return OffspringDistribution(kind, std::move(pmf));
}

OffspringDistribution OffspringDistribution::poisson(double c) {
    if (c < 0.0) throw std::invalid_argument("poisson: c must be >= 0");
    std::vector<double> pmf;
    double term = std::exp(-c);
    double cum = term;
    pmf.push_back(term);
    for (int k = 1; cum < 1.0 - kTailMass; ++k) {
        term *= c / k;
        pmf.push_back(term);
        cum += term;
        if (k > 10000000) throw IterationLimitError("poisson: truncation failed");
    }
    Kind kind = is_exact_dirac(pmf) ? Kind::Dirac : Kind::Poisson;
    return OffspringDistribution(kind, std::move(pmf));
}

OffspringDistribution OffspringDistribution::from_pmf(std::vector<double> pmf) {
    Kind kind = is_exact_dirac(pmf) ? Kind::Dirac : Kind::Explicit;
    return OffspringDistribution(kind, std::move(pmf));
}

OffspringDistribution OffspringDistribution::from_pmf(const std::map<int, double>& pmf) {
    if (pmf.empty()) throw std::invalid_argument("offspring pmf is empty");
    if (pmf.begin()->first < 0) throw std::invalid_argument("offspring pmf has negative support");
    std::vector<double> table(static_cast<size_t>(pmf.rbegin()->first) + 1, 0.0);
    for (auto [k, pk] : pmf) table[static_cast<size_t>(k)] = pk;
    return from_pmf(std::move(table));
}

double OffspringDistribution::pgf(double x) const {
    if (x < 0.0 || x > 1.0) throw std::domain_error("pgf: x outside [0,1]");
    return pgf_at_radius(x);
}

double OffspringDistribution::pgf_at_radius(double x) const {
    if (x < 0.0) throw std::domain_error("pgf_at_radius: x must be >= 0");
    double acc = 0.0;
    for (size_t k = p_.size(); k-- > 0;) acc = acc * x + p_[k];
    return acc;
}

double OffspringDistribution::wasserstein_to_dirac(int q, double p) const {
    if (q < 0) throw std::invalid_argument("wasserstein_to_dirac: q must be >= 0");
    if (p < 1.0) throw std::invalid_argument("wasserstein_to_dirac: p must be >= 1");
    double acc = 0.0;
    for (size_t k = 0; k < p_.size(); ++k) {
        double d = std::abs(static_cast<double>(k) - q);
        if (d != 0.0 && p_[k] != 0.0) acc += std::pow(d, p) * p_[k];
    }
    return acc;
}

int OffspringDistribution::sample(RngStream& rng) const {
    if (kind_ == Kind::Dirac) return max_support();
    double u = rng.next_double();
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return static_cast<int>(it - cdf_.begin());
}

double tv_distance(const OffspringDistribution& P, const OffspringDistribution& Q) {
    int kmax = std::max(P.max_support(), Q.max_support());
    double acc = 0.0;
    for (int k = 0; k <= kmax; ++k) acc += std::abs(P.pmf(k) - Q.pmf(k));
    return 0.5 * acc;
}

OffspringDistribution size_bias_shift(const OffspringDistribution& P) {
    double m = P.mean();
    if (m <= 0.0) throw std::invalid_argument("size_bias_shift: mean(P) must be positive");
    size_t n = P.pmf_table().size();
    std::vector<double> out(std::max<size_t>(n - 1, 1), 0.0);
    for (size_t k = 0; k + 1 < n; ++k)
        out[k] = static_cast<double>(k + 1) * P.pmf(static_cast<int>(k) + 1) / m;
    return OffspringDistribution::from_pmf(std::move(out));
}

double extinction_probability(const OffspringDistribution& P, double tol, long max_iter) {
    if (tol <= 0.0) throw std::invalid_argument("extinction_probability: tol must be > 0");
    if (P.pmf(0) == 0.0) return 0.0;          // 0 is the smallest fixed point
    if (P.mean() <= 1.0) return 1.0;          // subcritical or critical with leaves
    double x = 0.0;
    for (long i = 0; i < max_iter; ++i) {
        double fx = P.pgf(x);
        if (std::abs(fx - x) < tol) return fx;
        x = fx;
    }
    throw IterationLimitError("extinction_probability: fixed-point iteration did not converge");
}

SkeletonLaws skeleton_laws(const OffspringDistribution& P) {
    if (P.mean() <= 1.0)
        throw std::invalid_argument("skeleton_laws: offspring law must be supercritical");
    double pi = extinction_probability(P, 1e-13);
    // Local Newton polish of the already-bracketed smallest root; brings the
    // residual near machine precision so Q below sums to 1.
    for (int i = 0; i < 3 && pi > 0.0; ++i) {
        double f = P.pgf(pi) - pi;
        double df = 0.0;
        for (int k = 1; k <= P.max_support(); ++k)
            df += k * P.pmf(k) * std::pow(pi, k - 1);
        if (std::abs(df - 1.0) < 1e-8) break;
        pi = std::clamp(pi - f / (df - 1.0), 0.0, 1.0);
    }

    SkeletonLaws laws{P, pi, 1.0 - pi, std::nullopt};
    if (pi > 0.0) {
        std::vector<double> q(P.pmf_table().size());
        for (size_t k = 0; k < q.size(); ++k)
            q[k] = P.pmf(static_cast<int>(k)) * std::pow(pi, static_cast<double>(k) - 1.0);
        double sum = std::accumulate(q.begin(), q.end(), 0.0);
        for (double& x : q) x /= sum;  // analytically sum = phi(pi)/pi = 1
        laws.extinct_offspring = OffspringDistribution::from_pmf(std::move(q));
    }
    return laws;
}

std::pair<int, int> SkeletonLaws::sample_conditioned_pair(RngStream& rng, long attempt_cap) const {
    for (long attempt = 0; attempt < attempt_cap; ++attempt) {
        int n = base.sample(rng);
        int n_e = 0;
        for (int i = 0; i < n; ++i)
            if (rng.bernoulli(pi_e)) ++n_e;
        int n_s = n - n_e;
        if (n_s >= 1) return {n_s, n_e};
    }
    throw CapExceededError("sample_conditioned_pair: rejection cap exceeded");
}

double SkeletonLaws::pair_pgf(double x, double y) const {
    // Conditioning normalizer is the constant P(N_s >= 1) = 1 - phi(pi_e) =
    // 1 - pi_e; Bernoulli(pi_e) thinning gives the numerator.
    return (base.pgf((1.0 - pi_e) * x + pi_e * y) - base.pgf(pi_e * y)) / survival_prob;
}

double SkeletonLaws::conditioned_pair_pmf(int n_s, int n_e) const {
    if (n_s < 1 || n_e < 0) return 0.0;
    int k = n_s + n_e;
    double pk = base.pmf(k);
    if (pk == 0.0) return 0.0;
    double lb = std::lgamma(k + 1.0) - std::lgamma(n_s + 1.0) - std::lgamma(n_e + 1.0);
    double thin;
    if (pi_e == 0.0) {
        thin = (n_e == 0) ? 1.0 : 0.0;
    } else {
        thin = std::exp(lb + n_s * std::log1p(-pi_e) + n_e * std::log(pi_e));
    }
    return pk * thin / survival_prob;
}

double SkeletonLaws::expected_ns() const {
    double acc = 0.0;
    for (int k = 1; k <= base.max_support(); ++k)
        for (int s = 1; s <= k; ++s) acc += s * conditioned_pair_pmf(s, k - s);
    return acc;
}

double SkeletonLaws::expected_ne() const {
    double acc = 0.0;
    for (int k = 1; k <= base.max_support(); ++k)
        for (int s = 1; s <= k; ++s) acc += (k - s) * conditioned_pair_pmf(s, k - s);
    return acc;
}

double SkeletonLaws::expected_log_ns() const {
    double acc = 0.0;
    for (int k = 1; k <= base.max_support(); ++k)
        for (int s = 2; s <= k; ++s) acc += std::log(static_cast<double>(s)) * conditioned_pair_pmf(s, k - s);
    return acc;
}

double SkeletonLaws::prob_ne_positive() const {
    double acc = 0.0;
    for (int k = 1; k <= base.max_support(); ++k)
        for (int s = 1; s < k; ++s) acc += conditioned_pair_pmf(s, k - s);
    return acc;
}

}  // namespace qperc
