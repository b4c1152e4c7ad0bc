#include "qperc/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qperc/errors.hpp"

namespace qperc {

EigenSystem eigendecompose(const Graph& g, bool values_only, int size_cap) {
    const int n = g.size();
    if (n > size_cap) throw std::invalid_argument("eigendecompose: graph exceeds size cap");
    if (n == 0) return {};
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a[static_cast<size_t>(v) * n + u] = 1.0;
    std::vector<double> w(static_cast<size_t>(n));
    int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, values_only ? 'N' : 'V', 'L', n, a.data(), n, w.data());
    if (info != 0) throw std::runtime_error("eigendecompose: dsyevd failed");
    EigenSystem es;
    es.n = n;
    es.eigenvalues = std::move(w);
    if (!values_only) {
        for (int k = 0; k < n; ++k) {
            double* col = a.data() + static_cast<size_t>(k) * n;
            for (int v = 0; v < n; ++v) {
                if (std::abs(col[v]) > 1e-12) {
                    if (col[v] < 0)
                        for (int i = 0; i < n; ++i) col[i] = -col[i];
                    break;
                }
            }
        }
        es.eigenvectors = std::move(a);
    }
    return es;
}

double SpectralMeasure::total() const {
    double s = 0.0;
    for (auto [l, w] : atoms) s += w;
    return s;
}

SpectralMeasure vertex_spectral_measure(const EigenSystem& es, int v) {
    if (v < 0 || v >= es.n) throw std::invalid_argument("vertex_spectral_measure: vertex out of range");
    if (!es.has_vectors()) throw std::invalid_argument("vertex_spectral_measure: eigenvectors missing");
    SpectralMeasure m;
    m.atoms.reserve(static_cast<size_t>(es.n));
    for (int k = 0; k < es.n; ++k) {
        double c = es.vector_component(k, v);
        m.atoms.emplace_back(es.eigenvalues[static_cast<size_t>(k)], c * c);
    }
    return m;
}

SpectralMeasure empirical_spectral_measure(const EigenSystem& es) {
    SpectralMeasure m;
    if (es.n == 0) return m;
    m.atoms.reserve(static_cast<size_t>(es.n));
    for (double l : es.eigenvalues) m.atoms.emplace_back(l, 1.0 / es.n);
    return m;
}

Complex stieltjes(const SpectralMeasure& m, Complex z) {
    if (z.imag() <= 0.0) throw std::domain_error("stieltjes: Im z must be > 0");
    Complex acc = 0.0;
    for (auto [l, w] : m.atoms) acc += w / (l - z);
    return acc;
}

double moment(const SpectralMeasure& m, int k) {
    double acc = 0.0;
    for (auto [l, w] : m.atoms) acc += w * std::pow(l, k);
    return acc;
}

double interval_mass(const SpectralMeasure& m, double a, double b, bool closed) {
    if (a > b) throw std::invalid_argument("interval_mass: a > b");
    double acc = 0.0;
    for (auto [l, w] : m.atoms) {
        bool in = closed ? (l >= a && l <= b) : (l > a && l < b);
        if (in) acc += w;
    }
    return acc;
}

double semicircle_density(int q, double lambda) {
    if (q < 1) throw std::invalid_argument("semicircle_density: q must be >= 1");
    double r2 = 4.0 * q - lambda * lambda;
    if (r2 <= 0.0) return 0.0;
    return std::sqrt(r2) / (2.0 * M_PI * q);
}

double kesten_mckay_density(int q, double lambda) {
    if (q < 1) throw std::invalid_argument("kesten_mckay_density: q must be >= 1");
    double r2 = 4.0 * q - lambda * lambda;
    if (r2 <= 0.0) return 0.0;
    double d = (q + 1.0) * (q + 1.0) - lambda * lambda;
    return (q + 1.0) * std::sqrt(r2) / (2.0 * M_PI * d);
}

Complex semicircle_transform(int q, Complex z) {
    if (q < 1) throw std::invalid_argument("semicircle_transform: q must be >= 1");
    if (z.imag() <= 0.0) throw std::domain_error("semicircle_transform: Im z must be > 0");
    Complex disc = std::sqrt(z * z - 4.0 * static_cast<double>(q));
    // Pick the sqrt branch avoiding cancellation, then recover the other root
    // from g1 g2 = 1/q.
    Complex big = (std::norm(-z + disc) >= std::norm(-z - disc)) ? (-z + disc) : (-z - disc);
    Complex g1 = big / (2.0 * q);
    Complex g2 = (1.0 / static_cast<double>(q)) / g1;  // product of roots is 1/q
    return (g1.imag() > 0.0) ? g1 : g2;
}

Complex kesten_mckay_transform(int q, Complex z) {
    Complex g = semicircle_transform(q, z);
    return -1.0 / (z + (q + 1.0) * g);
}

double im_transform_sup_bound(const SpectralMeasure& m, double lambda, double eta) {
    double acc = 0.0;
    for (auto [l, w] : m.atoms) {
        double d = std::abs(l - lambda);
        acc += (d >= eta) ? w / (2.0 * d) : w / eta;
    }
    return acc;
}

WeakdeconvResult weakdeconv_check(const SpectralMeasure& m, double lambda, double eta, double a,
                                  double b, double s, int grid_points) {
    if (eta <= 0.0 || s < 2.0 * eta) throw std::invalid_argument("weakdeconv_check: need s >= 2 eta > 0");
    // Verify the stated transform hypotheses on a geometric y-grid plus the
    // two heights the proof actually uses.
    double im_eta = stieltjes(m, {lambda, eta}).imag();
    if (im_eta < a - 1e-12) throw HypothesisError("weakdeconv_check: Im g(lambda + i eta) < a");
    double y_max = std::max({1.0, 4.0 * s, 2.0 * eta});
    for (int i = 0; i <= grid_points; ++i) {
        double y = eta * std::pow(y_max / eta, i / static_cast<double>(grid_points));
        if (stieltjes(m, {lambda, y}).imag() > b + 1e-12)
            throw HypothesisError("weakdeconv_check: Im g(lambda + i y) > b on the grid");
    }
    if (stieltjes(m, {lambda, s / 2.0}).imag() > b + 1e-12)
        throw HypothesisError("weakdeconv_check: Im g(lambda + i s/2) > b");

    WeakdeconvResult r;
    r.rho = s / eta;
    r.ratio_closed = interval_mass(m, lambda - s / 2.0, lambda + s / 2.0, true) / s;
    r.ratio_open = interval_mass(m, lambda - s / 2.0, lambda + s / 2.0, false) / s;
    r.rhs_ok = r.ratio_closed <= b + 1e-12;
    if (r.rho >= 8.0 * b / a) {
        r.lhs_checked = true;
        r.lhs_ok = r.ratio_open >= a / (2.0 * r.rho) - 1e-12;
    }
    return r;
}

CoaireResult coaire_check(const SpectralMeasure& m,
                          std::span<const std::pair<double, double>> open_intervals, double t) {
    if (t <= 0.0) throw std::invalid_argument("coaire_check: t must be > 0");
    CoaireResult r;
    for (auto [a, b] : open_intervals) {
        if (a > b) throw std::invalid_argument("coaire_check: malformed interval");
        r.mass += interval_mass(m, a, b, false);
        // 2 int_a^b Im g(x + i t) dx = 2 sum_k w_k (atan((b-l)/t) - atan((a-l)/t)).
        for (auto [l, w] : m.atoms)
            r.integral += 2.0 * w * (std::atan((b - l) / t) - std::atan((a - l) / t));
    }
    r.ok = r.mass <= r.integral + 1e-9;
    return r;
}

double delocalization_profile(std::span<const double> psi, double eps) {
    double norm2 = 0.0;
    for (double x : psi) norm2 += x * x;
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw std::invalid_argument("delocalization_profile: vector is not unit");
    double mass = 0.0;
    for (double x : psi)
        if (std::abs(x) <= eps) mass += x * x;
    return mass;
}

int count_delocalized(const EigenSystem& es, double rho, double eps) {
    if (!es.has_vectors()) throw std::invalid_argument("count_delocalized: eigenvectors missing");
    int count = 0;
    for (int k = 0; k < es.n; ++k) {
        std::span<const double> psi(es.eigenvectors.data() + static_cast<size_t>(k) * es.n,
                                    static_cast<size_t>(es.n));
        if (delocalization_profile(psi, eps) >= rho) ++count;
    }
    return count;
}

}  // namespace qperc
