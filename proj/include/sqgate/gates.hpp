#ifndef SQGATE_GATES_HPP
#define SQGATE_GATES_HPP

#include "sqgate/sequence.hpp"

// Dynamical gate recipes for the effective two-level qubit:
//   NOT:      one segment, t = pi/(2g)
//   Hadamard: one segment, t = pi/(4g), phi_I - phi_II = pi/2
//   phase:    two segments of t = pi/(2g), difference phases (dphi, pi),
//             composing to diag(e^{-i dphi}, e^{+i dphi})
// Arbitrary SU(2) targets decompose as Z(chi) * R(theta, dphi) with Z the
// two-step phase gate and R the basic rotation; global phase is unobservable
// and all scoring goes through gate_fidelity.

namespace sqgate {

struct GateTarget {
    Matrix2cd matrix;

    void validate(double tol = 1e-10) const;  // throws if not unitary
};

// A drive template with Omega_I = Omega_II = 10 g and Delta = 100 g, i.e. the
// Delta = 10 Omega operating point; phases zero, duration unset.
DriveSegment canonical_segment(double g);

PulseSequence compile_not(double g);
PulseSequence compile_not(double g, const DriveSegment& base);
PulseSequence compile_hadamard(double g);
PulseSequence compile_phase(double delta_phi, double g);

// <= 4 primitive blocks (phase / rotation / phase); diagonal targets emit a
// single phase block, antidiagonal ones a single rotation block.
PulseSequence compile_arbitrary(const GateTarget& target, double g);

}  // namespace sqgate

#endif
