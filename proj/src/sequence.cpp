#include "sqgate/sequence.hpp"

#include <cmath>
#include <stdexcept>

#include "sqgate/constants.hpp"

namespace sqgate {

using namespace std::complex_literals;

double PulseSequence::total_duration() const {
    double t = 0.0;
    for (const auto& seg : segments) {
        if (const auto* d = std::get_if<DriveSegment>(&seg))
            t += d->duration;
        else
            t += std::get<FreeSegment>(seg).delta_t;
    }
    return t;
}

void PulseSequence::validate() const {
    if (segments.empty()) throw std::invalid_argument("PulseSequence: must be nonempty");
    for (const auto& seg : segments) {
        if (const auto* d = std::get_if<DriveSegment>(&seg)) {
            d->validate();
        } else {
            const auto& f = std::get<FreeSegment>(seg);
            if (f.delta_t < 0.0)
                throw std::invalid_argument("FreeSegment: delta_t must be >= 0");
        }
    }
}

Model model_from_name(const std::string& name) {
    if (name == "closed_form") return Model::closed_form;
    if (name == "effective") return Model::effective;
    if (name == "three_level") return Model::three_level;
    throw std::invalid_argument("unknown model: " + name);
}

std::string model_name(Model model) {
    switch (model) {
        case Model::closed_form: return "closed_form";
        case Model::effective: return "effective";
        case Model::three_level: return "three_level";
    }
    return "?";
}

double accumulated_gap_phase(const PulseSequence& seq) {
    double chi = 0.0;
    for (const auto& seg : seq.segments)
        if (const auto* f = std::get_if<FreeSegment>(&seg))
            chi += f->e_gap * f->delta_t / kHbar;
    return chi;
}

namespace {

DriveSegment shifted(const DriveSegment& d, double chi) {
    DriveSegment out = d;
    out.phi_I += chi;  // only the difference phase is physical for the qubit block
    return out;
}

Matrix2cd qubit_gap_unitary(const FreeSegment& f) {
    Matrix2cd u = Matrix2cd::Identity();
    u(1, 1) = std::exp(-1i * (f.e_gap / kHbar) * f.delta_t);
    return u;
}

Matrix2cd compose_2level(const PulseSequence& seq, Model model, double chi0) {
    Matrix2cd u = Matrix2cd::Identity();
    double chi = chi0;
    for (const auto& seg : seq.segments) {
        if (const auto* d = std::get_if<DriveSegment>(&seg)) {
            const DriveSegment eff = shifted(*d, chi);
            u = (model == Model::closed_form ? closed_form_unitary(eff) : propagator_eff(eff)) * u;
        } else {
            const auto& f = std::get<FreeSegment>(seg);
            u = qubit_gap_unitary(f) * u;
            chi += f.e_gap * f.delta_t / kHbar;
        }
    }
    return u;
}

Matrix2cd compose_3level(const PulseSequence& seq, const SequenceOptions& options) {
    Matrix3cd u = Matrix3cd::Identity();
    double chi = options.initial_gap_phase;
    for (const auto& seg : seq.segments) {
        if (const auto* d = std::get_if<DriveSegment>(&seg)) {
            u = propagator_3(shifted(*d, chi)) * u;
        } else {
            const auto& f = std::get<FreeSegment>(seg);
            Matrix3cd gap = Matrix3cd::Identity();
            gap(1, 1) = std::exp(-1i * (f.e_gap / kHbar) * f.delta_t);
            u = gap * u;
            chi += f.e_gap * f.delta_t / kHbar;
        }
    }
    for (int col = 0; col < 2; ++col) {
        const double leakage = std::norm(u(2, col));
        if (leakage > options.leakage_bound)
            throw std::runtime_error("sequence_unitary: final |a> leakage " +
                                     std::to_string(leakage) + " from basis state " +
                                     std::to_string(col) + " exceeds bound " +
                                     std::to_string(options.leakage_bound));
    }
    return u.topLeftCorner<2, 2>();
}

}  // namespace

Matrix2cd sequence_unitary(const PulseSequence& seq, Model model,
                           const SequenceOptions& options) {
    seq.validate();
    if (model == Model::three_level) return compose_3level(seq, options);
    return compose_2level(seq, model, options.initial_gap_phase);
}

double gate_fidelity(const Matrix2cd& u, const Matrix2cd& v) {
    return std::abs((u.adjoint() * v).trace()) / 2.0;
}

}  // namespace sqgate
