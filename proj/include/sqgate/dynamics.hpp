#ifndef SQGATE_DYNAMICS_HPP
#define SQGATE_DYNAMICS_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sqgate/squid.hpp"

// Driven Lambda-system dynamics in the frame where the two-tone Raman
// Hamiltonian is time independent:
//   H3/hbar = -Delta (|0><0| + |1><1|)
//             + Omega_I (e^{i phi_I} |0><a| + h.c.)
//             + Omega_II (e^{i phi_II} |1><a| + h.c.)
// and its large-detuning two-level reduction
//   Heff/hbar = omega0 sigma_z - g e^{i dphi} sigma^- - g e^{-i dphi} sigma^+
// with g = Omega_I Omega_II / Delta, omega0 = (Omega_I^2 - Omega_II^2)/(2 Delta),
// dphi = phi_I - phi_II. H3 differs from the bare interaction picture by the
// diagonal e^{-i Delta t} phase on the qubit pair, which is invisible to
// populations and to the global-phase-invariant gate fidelity.

namespace sqgate {

using Matrix2cd = Eigen::Matrix2cd;
using Matrix3cd = Eigen::Matrix3cd;
using Vector2cd = Eigen::Vector2cd;
using Vector3cd = Eigen::Vector3cd;

// Pauli operators in the fixed basis order (|0>,|1>), with |1> the
// sigma_z = +1 state: sigma_z = |1><1| - |0><0|, sigma^- = |0><1|,
// sigma^+ = |1><0|, sigma_x = sigma^+ + sigma^-, sigma_y = -i(sigma^+ - sigma^-).
// All sign conventions elsewhere assume exactly this table.
namespace ops {
Matrix2cd identity();
Matrix2cd sigma_x();
Matrix2cd sigma_y();
Matrix2cd sigma_z();
Matrix2cd sigma_plus();
Matrix2cd sigma_minus();
}  // namespace ops

// One piecewise-constant two-tone drive interval.
struct DriveSegment {
    double omega_I = 0.0;   // on-resonance Rabi of tone I on 0<->a, rad/s
    double omega_II = 0.0;  // on-resonance Rabi of tone II on 1<->a, rad/s
    double delta = 0.0;     // common detuning, rad/s
    double phi_I = 0.0;     // rad
    double phi_II = 0.0;    // rad
    double duration = 0.0;  // s

    double phase_difference() const { return phi_I - phi_II; }
    void validate() const;
};

struct EffectiveParams {
    double g = 0.0;            // Omega_I Omega_II / Delta, rad/s
    double omega_0 = 0.0;      // (Omega_I^2 - Omega_II^2)/(2 Delta), rad/s
    double delta_omega = 0.0;  // Omega_I - Omega_II
    double omega_bar = 0.0;    // (Omega_I + Omega_II)/2
};

EffectiveParams effective_params(const DriveSegment& seg);  // throws if delta == 0

// Hamiltonians divided by hbar (entries in rad/s), basis order (|0>,|1>,|a>).
Matrix3cd h3_rotating(const DriveSegment& seg);
Matrix2cd h_eff(const DriveSegment& seg);

// Exact propagators via Hermitian eigendecomposition (segments are constant).
Matrix3cd propagator_3(const DriveSegment& seg);
Matrix2cd propagator_eff(const DriveSegment& seg);

Vector3cd propagate_3(const DriveSegment& seg, const Vector3cd& psi);
Vector2cd propagate_eff(const DriveSegment& seg, const Vector2cd& psi);

// The closed-form two-level evolution, read directly off the analytic
// solution; kept independent of propagator_eff so the two can cross-check.
Matrix2cd closed_form_unitary(const DriveSegment& seg);

// max over n_samples uniformly spaced times in [0, duration] of |<a|psi(t)>|^2.
// The |a> population oscillates at ~sqrt(Delta^2 + 4(Omega_I^2+Omega_II^2));
// n_samples must resolve it (n_samples > 4 Delta t / pi as a rule of thumb).
double max_intermediate_population(const DriveSegment& seg, const Vector3cd& psi0,
                                   int n_samples = 1000);

struct ConditionCheck {
    std::string name;
    bool passed = false;
    double lhs = 0.0;   // quantity tested
    double rhs = 0.0;   // threshold it is compared against
};

struct ConditionReport {
    std::vector<ConditionCheck> checks;
    bool all_passed() const;
};

// Off-resonance and validity conditions for the Raman scheme, with carriers
// omega_I = omega_0a - Delta and omega_II = omega_1a - Delta:
//  (a) tone I far from 0<->1 and 1<->a, (b) tone II far from 0<->1 and 0<->a,
//  (c) Delta >= margin * max(Omega), (d) omega_I +- omega_II away from
//  omega_0a and omega_1a, (e) |omega0| <= g/margin.
ConditionReport validate_conditions(const LambdaLevels& levels, const DriveSegment& seg,
                                    double margin = 10.0);

}  // namespace sqgate

#endif
