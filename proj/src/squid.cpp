#include "sqgate/squid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <lapacke.h>

namespace sqgate {

void SquidParams::validate() const {
    if (!(capacitance > 0.0)) throw std::invalid_argument("SquidParams: capacitance must be > 0");
    if (!(inductance > 0.0)) throw std::invalid_argument("SquidParams: inductance must be > 0");
    if (critical_current < 0.0)
        throw std::invalid_argument("SquidParams: critical current must be >= 0");
}

void FluxGrid::validate() const {
    if (!(x_min < x_max)) throw std::invalid_argument("FluxGrid: x_min must be < x_max");
    if (n_points < 3) throw std::invalid_argument("FluxGrid: n_points must be >= 3");
    if (n_points % 2 == 0) throw std::invalid_argument("FluxGrid: n_points must be odd");
}

DerivedCharacteristics derive_characteristics(const SquidParams& params) {
    params.validate();
    DerivedCharacteristics d;
    d.beta_l = kTwoPi * params.inductance * params.critical_current / kPhi0;
    d.impedance = std::sqrt(params.inductance / params.capacitance);
    d.omega_lc = 1.0 / std::sqrt(params.inductance * params.capacitance);
    d.josephson_energy = params.critical_current * kPhi0 / kTwoPi;
    return d;
}

std::vector<double> build_potential(const SquidParams& params, const FluxGrid& grid) {
    params.validate();
    grid.validate();
    const double ej = params.critical_current * kPhi0 / kTwoPi;
    std::vector<double> u(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
        const double phi = grid.x(i) * kPhi0;
        const double dphi = phi - params.flux_bias;
        u[i] = dphi * dphi / (2.0 * params.inductance) - ej * std::cos(kTwoPi * grid.x(i));
    }
    // the grid must bracket a well: require an interior local minimum
    bool has_minimum = false;
    for (int i = 1; i + 1 < grid.n_points; ++i) {
        if (u[i] <= u[i - 1] && u[i] <= u[i + 1]) {
            has_minimum = true;
            break;
        }
    }
    if (!has_minimum)
        throw std::invalid_argument(
            "build_potential: grid window contains no potential minimum; widen the window");
    return u;
}

SpectralResult solve_spectrum(const SquidParams& params, const FluxGrid& grid, int n_levels) {
    if (n_levels < 3) throw std::invalid_argument("solve_spectrum: n_levels must be >= 3");
    const auto derived = derive_characteristics(params);
    const std::vector<double> potential = build_potential(params, grid);

    // dimensionless: energies in hbar*omega_LC, x = Phi/Phi0
    const double e_unit = kHbar * derived.omega_lc;
    const double kappa = kHbar * derived.impedance / (kPhi0 * kPhi0);
    const double h = grid.spacing();
    const int n = grid.n_points;

    std::vector<double> diag(n), offdiag(n - 1);
    for (int i = 0; i < n; ++i) diag[i] = kappa / (h * h) + potential[i] / e_unit;
    std::fill(offdiag.begin(), offdiag.end(), -kappa / (2.0 * h * h));

    std::vector<double> eigenvalues(n);
    Eigen::MatrixXd vectors(n, n_levels);
    std::vector<lapack_int> isuppz(2 * n_levels);
    lapack_int found = 0;
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(), offdiag.data(), 0.0, 0.0, 1, n_levels,
        0.0, &found, eigenvalues.data(), vectors.data(), n, isuppz.data());
    if (info != 0 || found < n_levels)
        throw std::runtime_error("solve_spectrum: tridiagonal eigensolver failed (info=" +
                                 std::to_string(info) + ", found=" + std::to_string(found) + ")");

    SpectralResult result;
    result.grid = grid;
    result.params = params;
    result.energies.resize(n_levels);
    result.wavefunctions = vectors / std::sqrt(h);  // grid norm sum psi^2 h = 1
    for (int k = 0; k < n_levels; ++k) result.energies[k] = eigenvalues[k] * e_unit;
    return result;
}

double flux_matrix_element(const SpectralResult& result, int i, int j) {
    if (i < 0 || j < 0 || i >= result.n_levels() || j >= result.n_levels())
        throw std::invalid_argument("flux_matrix_element: level index out of range");
    const double h = result.grid.spacing();
    double acc = 0.0;
    for (int k = 0; k < result.grid.n_points; ++k)
        acc += result.wavefunctions(k, i) * result.grid.x(k) * result.wavefunctions(k, j);
    return std::abs(acc * h);
}

int select_intermediate(const SpectralResult& result, double ratio_threshold) {
    if (result.n_levels() < 3)
        throw std::invalid_argument("select_intermediate: need at least 3 solved levels");
    const double phi_01 = flux_matrix_element(result, 0, 1);
    for (int a = 2; a < result.n_levels(); ++a) {
        const double phi_0a = flux_matrix_element(result, 0, a);
        const double phi_1a = flux_matrix_element(result, 1, a);
        if (std::min(phi_0a, phi_1a) > ratio_threshold * phi_01) return a;
    }
    throw std::runtime_error(
        "select_intermediate: no level qualifies; solve more levels or change the bias");
}

LambdaLevels build_lambda_system(const SpectralResult& result, int idx_a) {
    if (idx_a <= 1 || idx_a >= result.n_levels())
        throw std::invalid_argument("build_lambda_system: idx_a must be in (1, n_levels)");
    LambdaLevels lv;
    lv.idx_a = idx_a;
    lv.omega_01 = (result.energies[1] - result.energies[0]) / kHbar;
    lv.omega_0a = (result.energies[idx_a] - result.energies[0]) / kHbar;
    lv.omega_1a = (result.energies[idx_a] - result.energies[1]) / kHbar;
    lv.phi_01 = flux_matrix_element(result, 0, 1);
    lv.phi_0a = flux_matrix_element(result, 0, idx_a);
    lv.phi_1a = flux_matrix_element(result, 1, idx_a);
    return lv;
}

double compute_rabi(const PulseSpec& pulse, double phi_ij) {
    if (pulse.flux_amplitude < 0.0)
        throw std::invalid_argument("compute_rabi: flux amplitude must be >= 0");
    if (!(pulse.inductance > 0.0))
        throw std::invalid_argument("compute_rabi: inductance must be > 0");
    return pulse.flux_amplitude * std::abs(phi_ij) * kPhi0 /
           (2.0 * kHbar * pulse.inductance);
}

}  // namespace sqgate
