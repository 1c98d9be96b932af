#pragma once

#include <cstddef>
#include <vector>

namespace openph::numcore {

/// Real symmetric tridiagonal matrix: diag holds n entries, offdiag n-1.
struct TridiagonalSymmetric {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const { return diag.size(); }
    void validate() const;  // throws std::invalid_argument on inconsistent lengths
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;  // unit Euclidean norm, sign-normalized
};

/// Number of eigenvalues of T below x (Sturm count from the LDL^T pivot signs).
int eigenvalue_count_below(const TridiagonalSymmetric& T, double x);

/// The k algebraically smallest eigenpairs of T, sorted ascending.
///
/// Eigenvalues are located by bisection on the Sturm count inside the
/// Gershgorin interval, then each eigenvector is computed by inverse
/// iteration with reorthogonalization inside clusters of close eigenvalues;
/// the reported value is the Rayleigh quotient of the converged vector.
/// Vectors have unit norm and the first component exceeding 1e-12 in
/// magnitude is made positive. The k bisections are independent and run in
/// parallel when OpenMP is enabled; the result is bit-identical to
/// eigs_tridiag_serial.
std::vector<EigenPair> eigs_tridiag(const TridiagonalSymmetric& T, int k);

/// Single-thread reference implementation, kept for tests and benchmarks.
std::vector<EigenPair> eigs_tridiag_serial(const TridiagonalSymmetric& T, int k);

}  // namespace openph::numcore
