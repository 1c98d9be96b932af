#include "openph/numcore/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "openph/numcore/rng.hpp"

namespace openph::numcore {

void TridiagonalSymmetric::validate() const {
    if (diag.empty()) throw std::invalid_argument("TridiagonalSymmetric: empty diagonal");
    if (offdiag.size() + 1 != diag.size())
        throw std::invalid_argument(
            "TridiagonalSymmetric: offdiag length must be diag length - 1");
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSafeMin = std::numeric_limits<double>::min();

double inf_norm(const TridiagonalSymmetric& T) {
    const std::size_t n = T.size();
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(T.diag[i]);
        if (i > 0) row += std::abs(T.offdiag[i - 1]);
        if (i + 1 < n) row += std::abs(T.offdiag[i]);
        norm = std::max(norm, row);
    }
    return norm;
}

// Sturm count: number of negative pivots of the LDL^T factorization of
// T - x I, which by Sylvester inertia is the number of eigenvalues below x.
// Pivots with magnitude <= pivmin are replaced so the recurrence never
// divides by zero; pivmin is scaled such that e^2/pivmin cannot overflow.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e2, double x,
                double pivmin) {
    int count = 0;
    double q = d[0] - x;
    if (std::abs(q) <= pivmin) q = pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        q = d[i] - x - e2[i - 1] / q;
        if (std::abs(q) <= pivmin) q = pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

// Smallest x with at least j+1 eigenvalues below it, located by bisection.
double bisect_eigenvalue(const std::vector<double>& d, const std::vector<double>& e2,
                         int j, double lo, double hi, double pivmin) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval at the rounding floor
        if (sturm_count(d, e2, mid, pivmin) >= j + 1)
            hi = mid;
        else
            lo = mid;
        const double tol = 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) + 2.0 * pivmin;
        if (hi - lo <= tol) break;
    }
    return 0.5 * (lo + hi);
}

// LU factorization of T - lambda I with partial pivoting. Row swaps introduce
// a second superdiagonal (du2). Pivots with magnitude <= pivmin are bumped so
// the factorization stays invertible for inverse iteration.
struct ShiftedLU {
    std::vector<double> dl, dd, du, du2;
    std::vector<char> swapped;

    ShiftedLU(const std::vector<double>& d, const std::vector<double>& e, double lambda,
              double pivmin) {
        const std::size_t n = d.size();
        dd.resize(n);
        dl.assign(n > 1 ? n - 1 : 0, 0.0);
        du.assign(n > 1 ? n - 1 : 0, 0.0);
        du2.assign(n > 2 ? n - 2 : 0, 0.0);
        swapped.assign(n > 1 ? n - 1 : 0, 0);
        for (std::size_t i = 0; i < n; ++i) dd[i] = d[i] - lambda;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            dl[i] = e[i];
            du[i] = e[i];
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(dd[i]) >= std::abs(dl[i])) {
                if (std::abs(dd[i]) <= pivmin) dd[i] = dd[i] < 0.0 ? -pivmin : pivmin;
                const double m = dl[i] / dd[i];
                dl[i] = m;
                dd[i + 1] -= m * du[i];
            } else {
                swapped[i] = 1;
                const double m = dd[i] / dl[i];
                dd[i] = dl[i];
                dl[i] = m;
                const double tmp = du[i];
                du[i] = dd[i + 1];
                dd[i + 1] = tmp - m * dd[i + 1];
                if (i + 2 < n) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -m * du[i + 1];
                }
            }
        }
        if (std::abs(dd[n - 1]) <= pivmin) dd[n - 1] = dd[n - 1] < 0.0 ? -pivmin : pivmin;
    }

    void solve(std::vector<double>& b) const {
        const std::size_t n = dd.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped[i]) std::swap(b[i], b[i + 1]);
            b[i + 1] -= dl[i] * b[i];
        }
        b[n - 1] /= dd[n - 1];
        if (n >= 2) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / dd[n - 2];
        for (std::size_t ir = n; ir >= 3; --ir) {
            const std::size_t i = ir - 3;
            b[i] = (b[i] - du[i] * b[i + 1] - (i + 2 < n ? du2[i] * b[i + 2] : 0.0)) / dd[i];
        }
    }
};

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void normalize(std::vector<double>& v) {
    const double n = norm2(v);
    if (n > 0.0)
        for (double& x : v) x /= n;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// w := T v - lambda v; returns its 2-norm.
double residual_norm(const std::vector<double>& d, const std::vector<double>& e,
                     double lambda, const std::vector<double>& v) {
    const std::size_t n = d.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = (d[i] - lambda) * v[i];
        if (i > 0) r += e[i - 1] * v[i - 1];
        if (i + 1 < n) r += e[i] * v[i + 1];
        s += r * r;
    }
    return std::sqrt(s);
}

double rayleigh_quotient(const std::vector<double>& d, const std::vector<double>& e,
                         const std::vector<double>& v) {
    const std::size_t n = d.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = d[i] * v[i];
        if (i > 0) r += e[i - 1] * v[i - 1];
        if (i + 1 < n) r += e[i] * v[i + 1];
        s += r * v[i];
    }
    return s;
}

void fix_sign(std::vector<double>& v) {
    for (double x : v) {
        if (std::abs(x) > 1e-12) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            return;
        }
    }
}

// Inverse iteration for the eigenvector of lambda; prev holds already accepted
// vectors, of which those with index >= group_start get reorthogonalized away.
std::vector<double> inverse_iteration(const std::vector<double>& d,
                                      const std::vector<double>& e, double lambda,
                                      double solve_pivmin, double res_target,
                                      const std::vector<EigenPair>& prev,
                                      std::size_t group_start, std::uint64_t seed) {
    const std::size_t n = d.size();
    const ShiftedLU lu(d, e, lambda, solve_pivmin);

    RngStream rng(seed);
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform() - 0.5;
    normalize(v);

    std::vector<double> best = v;
    double best_res = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 10; ++it) {
        lu.solve(v);
        normalize(v);
        for (std::size_t p = group_start; p < prev.size(); ++p) {
            const double c = dot(v, prev[p].vector);
            for (std::size_t i = 0; i < n; ++i) v[i] -= c * prev[p].vector[i];
        }
        normalize(v);
        const double res = residual_norm(d, e, lambda, v);
        if (res < best_res) {
            best_res = res;
            best = v;
        }
        if (res <= res_target) break;
    }
    return best;
}

std::vector<EigenPair> eigs_impl(const TridiagonalSymmetric& T, int k, bool parallel) {
    T.validate();
    const std::size_t n = T.size();
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw std::invalid_argument("eigs_tridiag: k must be between 1 and n");

    const std::vector<double>& d = T.diag;
    const std::vector<double>& e = T.offdiag;
    std::vector<double> e2(e.size());
    double max_e2 = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        e2[i] = e[i] * e[i];
        max_e2 = std::max(max_e2, e2[i]);
    }
    const double count_pivmin = kSafeMin * max_e2;

    double glo = std::numeric_limits<double>::infinity();
    double ghi = -glo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(e[i - 1]);
        if (i + 1 < n) r += std::abs(e[i]);
        glo = std::min(glo, d[i] - r);
        ghi = std::max(ghi, d[i] + r);
    }
    const double pad =
        std::max(kEps * (std::abs(glo) + std::abs(ghi)), 16.0 * count_pivmin) + kSafeMin;
    glo -= pad;
    ghi += pad;

    std::vector<double> values(k);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < k; ++j)
            values[j] = bisect_eigenvalue(d, e2, j, glo, ghi, count_pivmin);
    } else {
        for (int j = 0; j < k; ++j)
            values[j] = bisect_eigenvalue(d, e2, j, glo, ghi, count_pivmin);
    }
    std::stable_sort(values.begin(), values.end());

    const double tnorm = inf_norm(T);
    const double solve_pivmin = std::max(kEps * tnorm, kSafeMin);
    const double res_target = 4.0 * kEps * std::max(tnorm, 1.0);
    const double ortol = 1e-3 * tnorm;  // cluster threshold, as in LAPACK dstein
    const double pertol = 10.0 * kEps * std::max(tnorm, 1.0);

    std::vector<EigenPair> out;
    out.reserve(k);
    std::size_t group_start = 0;
    double prev_lambda = 0.0;
    for (int j = 0; j < k; ++j) {
        double lambda = values[j];
        if (j > 0) {
            if (values[j] - values[j - 1] > ortol) group_start = static_cast<std::size_t>(j);
            // split coincident shifts so iteration can separate directions
            if (lambda < prev_lambda + pertol) lambda = prev_lambda + pertol;
        }
        prev_lambda = lambda;

        EigenPair pair;
        pair.vector = inverse_iteration(d, e, lambda, solve_pivmin, res_target, out,
                                        group_start, 0x7C1F5EEDull + static_cast<std::uint64_t>(j));
        fix_sign(pair.vector);
        pair.value = rayleigh_quotient(d, e, pair.vector);
        out.push_back(std::move(pair));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const EigenPair& a, const EigenPair& b) { return a.value < b.value; });
    return out;
}

}  // namespace

int eigenvalue_count_below(const TridiagonalSymmetric& T, double x) {
    T.validate();
    std::vector<double> e2(T.offdiag.size());
    double max_e2 = 1.0;
    for (std::size_t i = 0; i < e2.size(); ++i) {
        e2[i] = T.offdiag[i] * T.offdiag[i];
        max_e2 = std::max(max_e2, e2[i]);
    }
    return sturm_count(T.diag, e2, x, kSafeMin * max_e2);
}

std::vector<EigenPair> eigs_tridiag(const TridiagonalSymmetric& T, int k) {
    return eigs_impl(T, k, true);
}

std::vector<EigenPair> eigs_tridiag_serial(const TridiagonalSymmetric& T, int k) {
    return eigs_impl(T, k, false);
}

}  // namespace openph::numcore
