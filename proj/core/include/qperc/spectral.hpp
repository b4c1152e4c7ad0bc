#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "qperc/graph.hpp"

namespace qperc {

using Complex = std::complex<double>;

// Full spectral decomposition of a real symmetric adjacency matrix.
// Eigenvalues ascend; eigenvectors are orthonormal columns with the sign
// convention that the first coordinate of magnitude > 1e-12 is positive.
struct EigenSystem {
    int n = 0;
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors;  // column-major n*n; empty if values-only

    double vector_component(int k, int v) const {
        return eigenvectors[static_cast<size_t>(k) * n + v];
    }
    bool has_vectors() const { return !eigenvectors.empty(); }
};

// Dense symmetric eigensolve (LAPACK dsyevd). Throws std::invalid_argument
// past size_cap and std::runtime_error if the solver fails.
EigenSystem eigendecompose(const Graph& g, bool values_only = false, int size_cap = 4096);

// Finite atomic measure: (lambda, weight) pairs sorted by lambda.
struct SpectralMeasure {
    std::vector<std::pair<double, double>> atoms;

    double total() const;
    static SpectralMeasure dirac(double a) { return {{{a, 1.0}}}; }
};

// Atoms (lambda_k, |psi_k(v)|^2); k-th moment equals the closed-walk count at v.
SpectralMeasure vertex_spectral_measure(const EigenSystem& es, int v);

// Uniform measure on the eigenvalues; equals the vertex average of the
// vertex measures.
SpectralMeasure empirical_spectral_measure(const EigenSystem& es);

// sum_k w_k / (lambda_k - z); requires Im z > 0.
Complex stieltjes(const SpectralMeasure& m, Complex z);

// k-th moment sum_k w lambda^k.
double moment(const SpectralMeasure& m, int k);

// Mass of [a,b] (closed) or (a,b) (open), with exact atom-boundary semantics.
double interval_mass(const SpectralMeasure& m, double a, double b, bool closed);

// Semicircle density of radius 2 sqrt(q) and the Kesten-McKay density of the
// infinite (q+1)-regular tree, both supported on [-2 sqrt(q), 2 sqrt(q)].
double semicircle_density(int q, double lambda);
double kesten_mckay_density(int q, double lambda);

// The root of q g^2 + z g + 1 = 0 with Im g > 0 (Stieltjes transform of the
// semicircle law), and the derived transform -(z + (q+1) g)^{-1} of the
// Kesten-McKay law. Both require Im z > 0.
Complex semicircle_transform(int q, Complex z);
Complex kesten_mckay_transform(int q, Complex z);

// Two-sided interval-mass bound from transform levels: given
// Im g(lambda + i eta) >= a and Im g(lambda + i y) <= b for y >= eta,
// mass(I)/len(I) <= b for the closed interval of length s, and
// mass(I)/len(I) >= a/(2 rho) for the open one when rho = s/eta >= 8 b/a.
// The premises are verified on a geometric y-grid; HypothesisError on failure.
struct WeakdeconvResult {
    bool rhs_ok = false;
    bool lhs_checked = false;
    bool lhs_ok = true;
    double rho = 0.0;
    double ratio_open = 0.0;
    double ratio_closed = 0.0;
};
WeakdeconvResult weakdeconv_check(const SpectralMeasure& m, double lambda, double eta, double a,
                                  double b, double s, int grid_points = 64);

// Safe upper bound for sup_{y >= eta} Im g_m(lambda + i y) (per-atom maxima).
double im_transform_sup_bound(const SpectralMeasure& m, double lambda, double eta);

// mass(U) <= 2 * integral over U of Im g(x + i t) dx, for U a disjoint union
// of open intervals; the integral is evaluated in closed form.
struct CoaireResult {
    double mass = 0.0;
    double integral = 0.0;
    bool ok = false;
};
CoaireResult coaire_check(const SpectralMeasure& m,
                          std::span<const std::pair<double, double>> open_intervals, double t);

// Largest rho such that psi is (rho, eps)-delocalized: the ell^2 mass carried
// by coordinates of magnitude <= eps. psi must be unit within 1e-9.
double delocalization_profile(std::span<const double> psi, double eps);

// Number of eigenvectors with delocalization_profile >= rho.
int count_delocalized(const EigenSystem& es, double rho, double eps);

}  // namespace qperc
