#include "sqgate/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace sqgate {

using std::complex;
using namespace std::complex_literals;

namespace ops {
Matrix2cd identity() { return Matrix2cd::Identity(); }
Matrix2cd sigma_minus() { return (Matrix2cd() << 0, 1, 0, 0).finished(); }
Matrix2cd sigma_plus() { return (Matrix2cd() << 0, 0, 1, 0).finished(); }
Matrix2cd sigma_x() { return (Matrix2cd() << 0, 1, 1, 0).finished(); }
Matrix2cd sigma_y() { return (Matrix2cd() << 0, 1i, -1i, 0).finished(); }
Matrix2cd sigma_z() { return (Matrix2cd() << -1, 0, 0, 1).finished(); }
}  // namespace ops

void DriveSegment::validate() const {
    if (omega_I < 0.0 || omega_II < 0.0)
        throw std::invalid_argument("DriveSegment: Rabi frequencies must be >= 0");
    if (duration < 0.0) throw std::invalid_argument("DriveSegment: duration must be >= 0");
}

EffectiveParams effective_params(const DriveSegment& seg) {
    seg.validate();
    if (seg.delta == 0.0)
        throw std::invalid_argument("effective_params: delta must be nonzero");
    EffectiveParams p;
    p.g = seg.omega_I * seg.omega_II / seg.delta;
    p.omega_0 = (seg.omega_I * seg.omega_I - seg.omega_II * seg.omega_II) / (2.0 * seg.delta);
    p.delta_omega = seg.omega_I - seg.omega_II;
    p.omega_bar = 0.5 * (seg.omega_I + seg.omega_II);
    return p;
}

Matrix3cd h3_rotating(const DriveSegment& seg) {
    Matrix3cd h = Matrix3cd::Zero();
    h(0, 0) = -seg.delta;
    h(1, 1) = -seg.delta;
    h(0, 2) = seg.omega_I * std::exp(1i * seg.phi_I);
    h(2, 0) = std::conj(h(0, 2));
    h(1, 2) = seg.omega_II * std::exp(1i * seg.phi_II);
    h(2, 1) = std::conj(h(1, 2));
    return h;
}

Matrix2cd h_eff(const DriveSegment& seg) {
    const EffectiveParams p = effective_params(seg);
    const double dphi = seg.phase_difference();
    return p.omega_0 * ops::sigma_z() -
           p.g * std::exp(1i * dphi) * ops::sigma_minus() -
           p.g * std::exp(-1i * dphi) * ops::sigma_plus();
}

namespace {

template <typename Matrix>
Matrix hermitian_exp(const Matrix& h_over_hbar, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h_over_hbar);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("propagator: eigendecomposition failed");
    const auto& w = es.eigenvalues();
    const auto& v = es.eigenvectors();
    Eigen::Vector<complex<double>, Matrix::RowsAtCompileTime> phases(w.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::exp(-1i * w(k) * t);
    return v * phases.asDiagonal() * v.adjoint();
}

void check_normalized(double norm) {
    if (std::abs(norm - 1.0) > 1e-9)
        throw std::invalid_argument("propagate: state must be normalized");
}

}  // namespace

Matrix3cd propagator_3(const DriveSegment& seg) {
    seg.validate();
    return hermitian_exp<Matrix3cd>(h3_rotating(seg), seg.duration);
}

Matrix2cd propagator_eff(const DriveSegment& seg) {
    return hermitian_exp<Matrix2cd>(h_eff(seg), seg.duration);
}

Vector3cd propagate_3(const DriveSegment& seg, const Vector3cd& psi) {
    check_normalized(psi.norm());
    return propagator_3(seg) * psi;
}

Vector2cd propagate_eff(const DriveSegment& seg, const Vector2cd& psi) {
    check_normalized(psi.norm());
    return propagator_eff(seg) * psi;
}

Matrix2cd closed_form_unitary(const DriveSegment& seg) {
    const EffectiveParams p = effective_params(seg);
    const double lambda = std::hypot(p.g, p.omega_0);
    const double dphi = seg.phase_difference();
    Matrix2cd u;
    if (lambda == 0.0) return Matrix2cd::Identity();
    const double c = std::cos(lambda * seg.duration);
    const double s = std::sin(lambda * seg.duration);
    u(0, 0) = c + 1i * (p.omega_0 / lambda) * s;
    u(0, 1) = 1i * (p.g / lambda) * std::exp(1i * dphi) * s;
    u(1, 0) = 1i * (p.g / lambda) * std::exp(-1i * dphi) * s;
    u(1, 1) = c - 1i * (p.omega_0 / lambda) * s;
    return u;
}

double max_intermediate_population(const DriveSegment& seg, const Vector3cd& psi0,
                                   int n_samples) {
    if (n_samples < 100)
        throw std::invalid_argument("max_intermediate_population: n_samples must be >= 100");
    check_normalized(psi0.norm());
    Eigen::SelfAdjointEigenSolver<Matrix3cd> es(h3_rotating(seg));
    if (es.info() != Eigen::Success)
        throw std::runtime_error("max_intermediate_population: eigendecomposition failed");
    const Vector3cd coeffs = es.eigenvectors().adjoint() * psi0;
    double max_pop = 0.0;
    for (int k = 0; k < n_samples; ++k) {
        const double t = seg.duration * k / (n_samples - 1);
        complex<double> amp_a = 0.0;
        for (int m = 0; m < 3; ++m)
            amp_a += es.eigenvectors()(2, m) * std::exp(-1i * es.eigenvalues()(m) * t) * coeffs(m);
        max_pop = std::max(max_pop, std::norm(amp_a));
    }
    return max_pop;
}

bool ConditionReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

ConditionReport validate_conditions(const LambdaLevels& levels, const DriveSegment& seg,
                                    double margin) {
    if (!(margin > 1.0))
        throw std::invalid_argument("validate_conditions: margin must be > 1");
    const double omega_carrier_I = levels.omega_0a - seg.delta;
    const double omega_carrier_II = levels.omega_1a - seg.delta;
    const double omega_max = std::max(seg.omega_I, seg.omega_II);
    ConditionReport report;
    auto add = [&report](const std::string& name, double lhs, double rhs, bool inclusive = false) {
        report.checks.push_back({name, inclusive ? lhs >= rhs : lhs > rhs, lhs, rhs});
    };

    // cross-transition Rabi scales of each tone, from the flux-element ratios
    const double rabi_01_I = levels.phi_0a > 0.0 ? seg.omega_I * levels.phi_01 / levels.phi_0a : 0.0;
    const double rabi_01_II = levels.phi_1a > 0.0 ? seg.omega_II * levels.phi_01 / levels.phi_1a : 0.0;

    add("tone I off-resonant with 0<->1", std::abs(levels.omega_01 - omega_carrier_I),
        margin * rabi_01_I);
    add("tone I off-resonant with 1<->a", std::abs(levels.omega_1a - omega_carrier_I),
        margin * seg.omega_I);
    add("tone II off-resonant with 0<->1", std::abs(levels.omega_01 - omega_carrier_II),
        margin * rabi_01_II);
    add("tone II off-resonant with 0<->a", std::abs(levels.omega_0a - omega_carrier_II),
        margin * seg.omega_II);
    add("large detuning Delta >= margin*Omega", seg.delta, margin * omega_max, true);
    add("omega_I+omega_II away from omega_0a",
        std::abs(omega_carrier_I + omega_carrier_II - levels.omega_0a), margin * omega_max);
    add("omega_I+omega_II away from omega_1a",
        std::abs(omega_carrier_I + omega_carrier_II - levels.omega_1a), margin * omega_max);
    add("omega_I-omega_II away from omega_0a",
        std::abs(omega_carrier_I - omega_carrier_II - levels.omega_0a), margin * omega_max);
    add("omega_I-omega_II away from omega_1a",
        std::abs(omega_carrier_I - omega_carrier_II - levels.omega_1a), margin * omega_max);

    if (seg.delta != 0.0) {
        const EffectiveParams p = effective_params(seg);
        add("rotation regime |omega0| <= g/margin", std::abs(p.g) / margin, std::abs(p.omega_0),
            true);
    } else {
        report.checks.push_back({"rotation regime |omega0| <= g/margin", false, 0.0, 0.0});
    }
    return report;
}

}  // namespace sqgate
