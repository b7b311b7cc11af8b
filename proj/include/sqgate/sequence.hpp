#ifndef SQGATE_SEQUENCE_HPP
#define SQGATE_SEQUENCE_HPP

#include <string>
#include <variant>
#include <vector>

#include "sqgate/dynamics.hpp"

namespace sqgate {

// Field-off interval. Its two-level propagator is diag(1, e^{-i e_gap dt/hbar})
// (relative-phase convention: |0> unchanged). Within a sequence a gap also
// advances the effective drive phase difference of every later segment by
// (e_gap/hbar)*dt, because the two carriers' difference phase keeps running
// at omega_I - omega_II = omega_01 while the drive is off.
struct FreeSegment {
    double delta_t = 0.0;  // s
    double e_gap = 0.0;    // E_1 - E_0, J
};

using Segment = std::variant<DriveSegment, FreeSegment>;

struct PulseSequence {
    std::vector<Segment> segments;
    std::string label;

    double total_duration() const;
    void validate() const;  // nonempty, segment invariants
};

enum class Model { closed_form, effective, three_level };

Model model_from_name(const std::string& name);
std::string model_name(Model model);

struct SequenceOptions {
    double leakage_bound = 0.05;     // three_level: max tolerated final |a| population
    double initial_gap_phase = 0.0;  // accumulated carrier phase entering this sequence, rad
};

// Ordered product of segment propagators, reduced to the logical (|0>,|1>)
// block. For three_level the |a> row/column is truncated after checking that
// final leakage from both basis states stays under options.leakage_bound
// (throws std::runtime_error naming the offending leakage otherwise).
Matrix2cd sequence_unitary(const PulseSequence& seq, Model model,
                           const SequenceOptions& options = {});

// Total carrier phase (e_gap/hbar)*dt accumulated over the gaps of seq.
double accumulated_gap_phase(const PulseSequence& seq);

// |trace(U^dag V)| / 2: global-phase-invariant fidelity of 2x2 unitaries.
double gate_fidelity(const Matrix2cd& u, const Matrix2cd& v);

}  // namespace sqgate

#endif
