#include "pqga/vm.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace pqga {

namespace {

constexpr double kStateEps = 1e-10;

void check_state_shape(const StateVector& state, int word_dim, int data_dim) {
    if (state.word_dim != word_dim || state.data_dim != data_dim) {
        throw DimensionMismatch("state shape does not match machine");
    }
    if (state.amps.size() != state.program_dim() * static_cast<std::size_t>(data_dim)) {
        throw DimensionMismatch("state amplitude count does not match its dims");
    }
}

} // namespace

MachineConfig::MachineConfig(int k, int m, int n) : slots(k), word_dim(m), data_dim(n) {
    if (k < 1) {
        throw Error("MachineConfig: slots must be >= 1");
    }
    if (m < 2) {
        throw Error("MachineConfig: word_dim must be >= 2 (idle plus one gate)");
    }
    if (n < 2) {
        throw Error("MachineConfig: data_dim must be >= 2");
    }
}

StepOperator::StepOperator(std::vector<ComplexMatrix> gates) : gates_(std::move(gates)) {
    if (gates_.empty()) {
        throw Error("StepOperator: need at least one gate");
    }
    data_dim_ = gates_[0].dim();
    for (const ComplexMatrix& g : gates_) {
        if (g.dim() != data_dim_) {
            throw DimensionMismatch("StepOperator: gates must share one dimension");
        }
        if (!is_unitary(g, Tolerance(kStateEps))) {
            throw NotUnitary("StepOperator: every gate must be unitary");
        }
    }
}

void StepOperator::apply_in_place(StateVector& state) const {
    check_state_shape(state, word_dim(), data_dim_);
    const std::size_t prog_dim = state.program_dim();
    const std::size_t n = static_cast<std::size_t>(data_dim_);
    std::vector<cxd> slice(n);
    for (std::size_t p = 0; p < prog_dim; ++p) {
        const int word = static_cast<int>(p % static_cast<std::size_t>(word_dim()));
        const ComplexMatrix& g = gates_[static_cast<std::size_t>(word)];
        const std::size_t base = p * n;
        for (std::size_t d = 0; d < n; ++d) {
            slice[d] = state.amps[base + d];
        }
        for (std::size_t r = 0; r < n; ++r) {
            cxd acc{0.0, 0.0};
            for (std::size_t c = 0; c < n; ++c) {
                acc += g.at(static_cast<int>(r), static_cast<int>(c)) * slice[c];
            }
            state.amps[base + r] = acc;
        }
    }
}

ComplexMatrix StepOperator::to_matrix() const {
    const int m = word_dim();
    const int n = data_dim_;
    ComplexMatrix out(m * n);
    for (int b = 0; b < m; ++b) {
        const ComplexMatrix& g = gates_[static_cast<std::size_t>(b)];
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                out.at(b * n + r, b * n + c) = g.at(r, c);
            }
        }
    }
    return out;
}

ProgramController::ProgramController(std::vector<std::size_t> image)
    : image_(std::move(image)) {}

ProgramController ProgramController::from_permutation(std::vector<std::size_t> image) {
    std::vector<bool> hit(image.size(), false);
    for (std::size_t target : image) {
        if (target >= image.size() || hit[target]) {
            throw NotBijective("ProgramController: image is not a bijection");
        }
        hit[target] = true;
    }
    return ProgramController(std::move(image));
}

void ProgramController::apply_in_place(StateVector& state) const {
    if (state.program_dim() != image_.size()) {
        throw DimensionMismatch("ProgramController: program dimension mismatch");
    }
    const std::size_t n = static_cast<std::size_t>(state.data_dim);
    std::vector<cxd> out(state.amps.size());
    for (std::size_t p = 0; p < image_.size(); ++p) {
        const std::size_t target = image_[p] * n;
        const std::size_t source = p * n;
        for (std::size_t d = 0; d < n; ++d) {
            out[target + d] = state.amps[source + d];
        }
    }
    state.amps = std::move(out);
}

ComplexMatrix ProgramController::to_matrix() const {
    ComplexMatrix out(static_cast<int>(image_.size()));
    for (std::size_t p = 0; p < image_.size(); ++p) {
        out.at(static_cast<int>(image_[p]), static_cast<int>(p)) = cxd{1.0, 0.0};
    }
    return out;
}

StepOperator build_step_operator(const GateSet& gs) {
    return StepOperator(gs.gates);
}

ProgramController build_shift_operator(const MachineConfig& cfg) {
    const std::size_t prog_dim = checked_pow(cfg.word_dim, cfg.slots);
    const std::size_t m = static_cast<std::size_t>(cfg.word_dim);
    const std::size_t high = prog_dim / m; // M^(k-1)
    std::vector<std::size_t> image(prog_dim);
    for (std::size_t p = 0; p < prog_dim; ++p) {
        // Digits rotate down one slot; the least significant digit wraps to
        // the most significant position.
        image[p] = p / m + (p % m) * high;
    }
    return ProgramController::from_permutation(std::move(image));
}

ProgramController build_permutation_controller(std::vector<std::size_t> image) {
    return ProgramController::from_permutation(std::move(image));
}

ComplexMatrix build_controlled_gate(const ComplexMatrix& u) {
    if (!is_unitary(u, Tolerance(kStateEps))) {
        throw NotUnitary("build_controlled_gate: u must be unitary");
    }
    const int n = u.dim();
    ComplexMatrix out = ComplexMatrix::identity(2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            out.at(n + r, n + c) = u.at(r, c);
        }
    }
    return out;
}

ComplexMatrix build_onehot_array(const GateSet& gs) {
    const int controls = onehot_register_width(gs.size());
    const std::size_t control_dim = checked_pow(2, controls);
    const int n = gs.dim;
    const int full = static_cast<int>(control_dim) * n;

    // Controlled gate i embedded over the whole control register: block
    // diagonal over control words, block w holds gates[i+1] when qubit i of
    // w is set and the identity otherwise.
    const auto embedded_controlled = [&](int control_qubit) {
        const ComplexMatrix& g = gs.gate(control_qubit + 1);
        ComplexMatrix out(full);
        for (std::size_t w = 0; w < control_dim; ++w) {
            const bool active = (w >> (controls - 1 - control_qubit)) & 1u;
            const ComplexMatrix& block = active ? g : ComplexMatrix::identity(n);
            const int base = static_cast<int>(w) * n;
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    out.at(base + r, base + c) = block.at(r, c);
                }
            }
        }
        return out;
    };

    ComplexMatrix array = embedded_controlled(0);
    for (int q = 1; q < controls; ++q) {
        array = mat_mul(embedded_controlled(q), array);
    }
    return array;
}

StateVector apply_step(const StepOperator& s, const ProgramController& r,
                       const StateVector& state) {
    if (r.size() != state.program_dim()) {
        throw DimensionMismatch("apply_step: controller size must equal M^k");
    }
    StateVector out = state;
    s.apply_in_place(out);
    r.apply_in_place(out);
    return out;
}

ComplexMatrix step_unitary_matrix(const StepOperator& s, const ProgramController& r) {
    const std::size_t prog_dim = r.size();
    const std::size_t m = static_cast<std::size_t>(s.word_dim());
    if (prog_dim % m != 0) {
        throw DimensionMismatch("step_unitary_matrix: program dim not divisible by M");
    }
    const ComplexMatrix blocks =
        kron(ComplexMatrix::identity(static_cast<int>(prog_dim / m)), s.to_matrix());
    const ComplexMatrix shift =
        kron(r.to_matrix(), ComplexMatrix::identity(s.data_dim()));
    return mat_mul(shift, blocks);
}

std::vector<int> padded_schedule(const Program& p, int slots) {
    if (p.length() > slots) {
        throw ProgramTooLong("padded_schedule: program length " +
                             std::to_string(p.length()) + " exceeds " +
                             std::to_string(slots) + " slots");
    }
    std::vector<int> schedule = p.words;
    schedule.resize(static_cast<std::size_t>(slots), 0);
    return schedule;
}

std::optional<int> detect_halt(const std::vector<int>& schedule) {
    if (!schedule.empty() && schedule.back() != 0) {
        return std::nullopt;
    }
    int halt = static_cast<int>(schedule.size());
    while (halt > 0 && schedule[static_cast<std::size_t>(halt - 1)] == 0) {
        --halt;
    }
    return halt;
}

RunResult run_with_controller(const MachineConfig& cfg, const GateSet& gs,
                              const ProgramController& controller, const Program& p,
                              const std::vector<cxd>& data, int repetitions) {
    if (repetitions < 1) {
        throw Error("run: repetitions must be >= 1");
    }
    if (gs.size() != cfg.word_dim || gs.dim != cfg.data_dim) {
        throw DimensionMismatch("run: gate set does not match machine config");
    }
    const std::size_t program_index = encode_program(p, cfg.slots, cfg.word_dim);
    StateVector state = make_product_state(program_index, data, cfg.slots, cfg.word_dim);
    const StepOperator s = build_step_operator(gs);
    if (controller.size() != state.program_dim()) {
        throw DimensionMismatch("run: controller size must equal M^k");
    }

    // Word schedule induced by the controller orbit of the program index;
    // readable classically because the program stays a basis state.
    std::vector<int> schedule(static_cast<std::size_t>(cfg.slots));
    std::size_t orbit = program_index;
    for (int t = 0; t < cfg.slots; ++t) {
        schedule[static_cast<std::size_t>(t)] =
            static_cast<int>(orbit % static_cast<std::size_t>(cfg.word_dim));
        orbit = controller.image(orbit);
    }

    for (int rep = 0; rep < repetitions; ++rep) {
        for (int t = 0; t < cfg.slots; ++t) {
            state = apply_step(s, controller, state);
        }
    }

    const SchmidtResult split = schmidt_check(state, Tolerance(kStateEps));
    if (!split.product) {
        throw ContractViolation("run: final state is entangled across the "
                                "program/data cut (second singular value " +
                                std::to_string(split.second_singular) + ")");
    }
    // Locate the program basis slot carrying the factor.
    std::size_t final_index = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < split.program_part.size(); ++i) {
        const double mag = std::abs(split.program_part[i]);
        if (mag > best) {
            best = mag;
            final_index = i;
        }
    }
    if (best < 1.0 - kStateEps) {
        throw ContractViolation("run: program register left the computational basis");
    }

    RunResult result;
    result.data_state = split.data_part;
    result.final_state = std::move(state);
    result.program_restored = final_index == program_index;
    result.halt_step = detect_halt(schedule);
    result.final_program_index = final_index;
    return result;
}

RunResult run(const MachineConfig& cfg, const GateSet& gs, const Program& p,
              const std::vector<cxd>& data) {
    return run_loop(cfg, gs, p, data, 1);
}

RunResult run_loop(const MachineConfig& cfg, const GateSet& gs, const Program& p,
                   const std::vector<cxd>& data, int repetitions) {
    RunResult result =
        run_with_controller(cfg, gs, build_shift_operator(cfg), p, data, repetitions);
    if (!result.program_restored) {
        throw ContractViolation("run: program register was not restored after k steps");
    }
    return result;
}

} // namespace pqga
