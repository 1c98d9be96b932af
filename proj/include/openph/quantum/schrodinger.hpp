#pragma once

#include <iosfwd>
#include <variant>
#include <vector>

#include "openph/numcore/grid.hpp"
#include "openph/numcore/tridiag.hpp"

namespace openph::quantum {

// Potential families for the 1D time-independent problem. All are solved in
// a hard box: psi = 0 at both grid endpoints.

/// V = 0 inside the box.
struct SquareWell {};

/// Two wells separated by a rectangular barrier centred in the box.
struct DoubleWell {
    double barrier_height;  // >= 0
    double barrier_width;   // length, less than the box width
};

/// V = 0.5 m omega^2 (x - x_c)^2 about the box centre x_c.
struct Parabolic {
    double omega;
};

/// Piecewise-linear interpolation of (x, V) samples covering the box.
struct Tabulated {
    std::vector<double> xs;
    std::vector<double> vs;
};

using PotentialSpec = std::variant<SquareWell, DoubleWell, Parabolic, Tabulated>;

void validate_potential(const PotentialSpec& spec, const numcore::Grid1D& grid);

/// Potential sampled at every grid point (size grid.n).
std::vector<double> sample_potential(const PotentialSpec& spec, const numcore::Grid1D& grid,
                                     double m);

/// Second-order finite-difference Hamiltonian on the interior points
/// (size grid.n - 2): diag_i = hbar^2/(m dx^2) + V_{i+1},
/// offdiag = -hbar^2/(2 m dx^2).
numcore::TridiagonalSymmetric build_hamiltonian(const std::vector<double>& potential,
                                                const numcore::Grid1D& grid, double hbar,
                                                double m);

struct BoundStateSolution {
    numcore::Grid1D grid;
    std::vector<double> energies;                     // ascending
    std::vector<std::vector<double>> wavefunctions;   // size grid.n, unit L2 norm
    std::vector<double> potential;                    // size grid.n
};

/// Lowest k eigenstates of the boxed potential. Wavefunctions include the
/// zero boundary values and are normalized so trapezoid(psi^2, dx) = 1; the
/// sign follows the eigenvector convention (leading component positive).
BoundStateSolution solve_bound_states(const PotentialSpec& spec, const numcore::Grid1D& grid,
                                      int k, double hbar, double m);

/// Strict sign changes between consecutive samples with |psi| > tol;
/// in-between samples inside the noise band are skipped.
int count_nodes(const std::vector<double>& psi, double tol);
int count_nodes(const std::vector<double>& psi);

/// Parse "x,V" lines ('#' starts a comment, blank lines ignored) into a
/// Tabulated potential. x must be strictly increasing.
Tabulated read_tabulated_potential(std::istream& in);

}  // namespace openph::quantum
