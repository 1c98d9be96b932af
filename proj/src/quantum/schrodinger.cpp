#include "openph/quantum/schrodinger.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <stdexcept>
#include <string>

#include "openph/numcore/quadrature.hpp"

namespace openph::quantum {

namespace {

double interpolate_linear(const std::vector<double>& xs, const std::vector<double>& vs, double x) {
    // xs is strictly increasing and brackets x (checked in validate_potential).
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin()) return vs.front();
    if (it == xs.end()) return vs.back();
    const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double s = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return vs[lo] * (1.0 - s) + vs[hi] * s;
}

struct Validator {
    const numcore::Grid1D& grid;

    void operator()(const SquareWell&) const {}

    void operator()(const DoubleWell& w) const {
        if (!(w.barrier_height >= 0.0) || !std::isfinite(w.barrier_height))
            throw std::invalid_argument("schrodinger: barrier height must be non-negative");
        if (!(w.barrier_width > 0.0) || !(w.barrier_width < grid.x_max() - grid.x_min()))
            throw std::invalid_argument(
                "schrodinger: barrier width must be positive and less than the box width");
    }

    void operator()(const Parabolic& p) const {
        if (!(p.omega > 0.0) || !std::isfinite(p.omega))
            throw std::invalid_argument("schrodinger: omega must be positive");
    }

    void operator()(const Tabulated& t) const {
        if (t.xs.size() != t.vs.size())
            throw std::invalid_argument("schrodinger: tabulated x and V lengths differ");
        if (t.xs.size() < 2)
            throw std::invalid_argument("schrodinger: tabulated potential needs at least 2 points");
        for (std::size_t i = 0; i < t.xs.size(); ++i) {
            if (!std::isfinite(t.xs[i]) || !std::isfinite(t.vs[i]))
                throw std::invalid_argument("schrodinger: tabulated potential has non-finite value");
            if (i > 0 && !(t.xs[i] > t.xs[i - 1]))
                throw std::invalid_argument("schrodinger: tabulated x must be strictly increasing");
        }
        if (t.xs.front() > grid.x_min() || t.xs.back() < grid.x_max())
            throw std::invalid_argument("schrodinger: tabulated samples do not cover the box");
    }
};

struct Sampler {
    const numcore::Grid1D& grid;
    double m;

    std::vector<double> operator()(const SquareWell&) const {
        return std::vector<double>(static_cast<std::size_t>(grid.n()), 0.0);
    }

    std::vector<double> operator()(const DoubleWell& w) const {
        std::vector<double> v(static_cast<std::size_t>(grid.n()), 0.0);
        const double centre = 0.5 * (grid.x_min() + grid.x_max());
        const double half = 0.5 * w.barrier_width;
        for (int i = 0; i < grid.n(); ++i) {
            if (std::abs(grid.point(i) - centre) <= half)
                v[static_cast<std::size_t>(i)] = w.barrier_height;
        }
        return v;
    }

    std::vector<double> operator()(const Parabolic& p) const {
        std::vector<double> v(static_cast<std::size_t>(grid.n()));
        const double centre = 0.5 * (grid.x_min() + grid.x_max());
        for (int i = 0; i < grid.n(); ++i) {
            const double d = grid.point(i) - centre;
            v[static_cast<std::size_t>(i)] = 0.5 * m * p.omega * p.omega * d * d;
        }
        return v;
    }

    std::vector<double> operator()(const Tabulated& t) const {
        std::vector<double> v(static_cast<std::size_t>(grid.n()));
        for (int i = 0; i < grid.n(); ++i)
            v[static_cast<std::size_t>(i)] = interpolate_linear(t.xs, t.vs, grid.point(i));
        return v;
    }
};

}  // namespace

void validate_potential(const PotentialSpec& spec, const numcore::Grid1D& grid) {
    std::visit(Validator{grid}, spec);
}

std::vector<double> sample_potential(const PotentialSpec& spec, const numcore::Grid1D& grid,
                                     double m) {
    validate_potential(spec, grid);
    if (!(m > 0.0)) throw std::invalid_argument("schrodinger: mass must be positive");
    return std::visit(Sampler{grid, m}, spec);
}

numcore::TridiagonalSymmetric build_hamiltonian(const std::vector<double>& potential,
                                                const numcore::Grid1D& grid, double hbar,
                                                double m) {
    if (!(hbar > 0.0)) throw std::invalid_argument("schrodinger: hbar must be positive");
    if (!(m > 0.0)) throw std::invalid_argument("schrodinger: mass must be positive");
    if (potential.size() != static_cast<std::size_t>(grid.n()))
        throw std::invalid_argument("schrodinger: potential size does not match grid");

    const double dx = grid.dx();
    const double kinetic = hbar * hbar / (m * dx * dx);
    const int interior = grid.n() - 2;

    numcore::TridiagonalSymmetric h;
    h.diag.resize(static_cast<std::size_t>(interior));
    h.offdiag.resize(static_cast<std::size_t>(interior - 1), -0.5 * kinetic);
    for (int i = 0; i < interior; ++i)
        h.diag[static_cast<std::size_t>(i)] = kinetic + potential[static_cast<std::size_t>(i + 1)];
    return h;
}

BoundStateSolution solve_bound_states(const PotentialSpec& spec, const numcore::Grid1D& grid,
                                      int k, double hbar, double m) {
    auto potential = sample_potential(spec, grid, m);
    if (!(hbar > 0.0)) throw std::invalid_argument("schrodinger: hbar must be positive");
    if (k < 1 || k > grid.n() - 2)
        throw std::invalid_argument("schrodinger: level count must be in [1, n-2]");

    const auto h = build_hamiltonian(potential, grid, hbar, m);
    const auto pairs = numcore::eigs_tridiag(h, k);

    BoundStateSolution out{grid, {}, {}, std::move(potential)};
    out.energies.reserve(pairs.size());
    out.wavefunctions.reserve(pairs.size());
    const double dx = grid.dx();
    for (const auto& pair : pairs) {
        out.energies.push_back(pair.value);
        std::vector<double> psi(static_cast<std::size_t>(grid.n()), 0.0);
        std::copy(pair.vector.begin(), pair.vector.end(), psi.begin() + 1);
        std::vector<double> psi2(psi.size());
        for (std::size_t i = 0; i < psi.size(); ++i) psi2[i] = psi[i] * psi[i];
        const double norm = std::sqrt(numcore::trapezoid(psi2, dx));
        for (double& value : psi) value /= norm;
        out.wavefunctions.push_back(std::move(psi));
    }
    return out;
}

int count_nodes(const std::vector<double>& psi, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("schrodinger: node tolerance must be >= 0");
    int nodes = 0;
    int last_sign = 0;
    for (double value : psi) {
        if (std::abs(value) <= tol) continue;
        const int sign = value > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++nodes;
        last_sign = sign;
    }
    return nodes;
}

int count_nodes(const std::vector<double>& psi) {
    double peak = 0.0;
    for (double value : psi) peak = std::max(peak, std::abs(value));
    return count_nodes(psi, 1e-8 * peak);
}

Tabulated read_tabulated_potential(std::istream& in) {
    Tabulated t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        const std::string_view body(line.data() + begin, end - begin + 1);

        const auto comma = body.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("potential file line " + std::to_string(lineno) +
                                        ": expected 'x,V'");
        const auto parse = [lineno](std::string_view field) {
            while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
                field.remove_prefix(1);
            while (!field.empty() && (field.back() == ' ' || field.back() == '\t'))
                field.remove_suffix(1);
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (ec != std::errc{} || ptr != field.data() + field.size())
                throw std::invalid_argument("potential file line " + std::to_string(lineno) +
                                            ": bad number '" + std::string(field) + "'");
            return value;
        };
        t.xs.push_back(parse(body.substr(0, comma)));
        t.vs.push_back(parse(body.substr(comma + 1)));
    }
    if (t.xs.size() < 2)
        throw std::invalid_argument("potential file: need at least 2 samples");
    for (std::size_t i = 1; i < t.xs.size(); ++i)
        if (!(t.xs[i] > t.xs[i - 1]))
            throw std::invalid_argument("potential file: x must be strictly increasing");
    return t;
}

}  // namespace openph::quantum
