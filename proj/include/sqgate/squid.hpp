#ifndef SQGATE_SQUID_HPP
#define SQGATE_SQUID_HPP

#include <vector>

#include <Eigen/Dense>

#include "sqgate/constants.hpp"

// rf-SQUID spectral problem: 1-D flux Hamiltonian
//   H = -(hbar^2/2C) d^2/dPhi^2 + (Phi - Phi_x)^2/(2L) - E_J cos(2 pi Phi/Phi0)
// solved on a uniform grid in x = Phi/Phi0 with hard-wall boundaries.
// Internally the problem is made dimensionless with energy unit hbar*omega_LC;
// the kinetic prefactor becomes kappa/2 with kappa = hbar*Z0/Phi0^2
// (about 1.23e-3 for a 50-ohm device), which also sets the wavefunction
// localization scale sqrt(kappa) in x.

namespace sqgate {

struct SquidParams {
    double capacitance = 0.0;       // F
    double inductance = 0.0;        // H
    double critical_current = 0.0;  // A
    double flux_bias = 0.0;         // Wb

    void validate() const;  // throws std::invalid_argument
};

struct DerivedCharacteristics {
    double beta_l = 0.0;            // 2 pi L I_c / Phi0
    double impedance = 0.0;         // sqrt(L/C), ohm
    double omega_lc = 0.0;          // 1/sqrt(LC), rad/s
    double josephson_energy = 0.0;  // I_c Phi0 / 2 pi, J
};

DerivedCharacteristics derive_characteristics(const SquidParams& params);

// Uniform grid in x = Phi/Phi0. Defaults bracket the double well of a
// device biased near half flux.
struct FluxGrid {
    double x_min = -1.05;
    double x_max = 0.05;
    int n_points = 4001;

    double spacing() const { return (x_max - x_min) / (n_points - 1); }
    double x(int i) const { return x_min + i * spacing(); }
    void validate() const;
};

// U(Phi) sampled at every grid point, in joules. Throws if the window does
// not bracket a local minimum in its interior.
std::vector<double> build_potential(const SquidParams& params, const FluxGrid& grid);

struct SpectralResult {
    std::vector<double> energies;   // J, strictly ascending
    Eigen::MatrixXd wavefunctions;  // n_points x n_levels, sum psi^2 * h = 1
    FluxGrid grid;
    SquidParams params;

    int n_levels() const { return static_cast<int>(energies.size()); }
};

// Lowest n_levels eigenpairs (n_levels >= 3) with hard-wall boundaries.
SpectralResult solve_spectrum(const SquidParams& params, const FluxGrid& grid, int n_levels);

// |<i|Phi|j>| / Phi0 by discrete quadrature. Magnitude only: eigenvector
// global signs are arbitrary.
double flux_matrix_element(const SpectralResult& result, int i, int j);

// Smallest index a > 1 with min(|phi_0a|, |phi_1a|) > ratio_threshold*|phi_01|.
int select_intermediate(const SpectralResult& result, double ratio_threshold = 10.0);

struct LambdaLevels {
    int idx_a = 0;
    double omega_01 = 0.0, omega_0a = 0.0, omega_1a = 0.0;  // rad/s
    double phi_01 = 0.0, phi_0a = 0.0, phi_1a = 0.0;        // dimensionless
};

LambdaLevels build_lambda_system(const SpectralResult& result, int idx_a);

// One microwave tone, inductively coupled with lambda_k = -1/L.
struct PulseSpec {
    double flux_amplitude = 0.0;  // Wb, integral of B0 over the loop
    double omega = 0.0;           // rad/s carrier
    double phase = 0.0;           // rad
    double inductance = 0.0;      // H, loop inductance entering lambda_k
};

// On-resonance Rabi frequency Omega_ij = flux_amplitude * |phi_ij| * Phi0 / (2 hbar L).
double compute_rabi(const PulseSpec& pulse, double phi_ij);

}  // namespace sqgate

#endif
