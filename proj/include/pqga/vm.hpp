#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pqga/gateset.hpp"
#include "pqga/matrix.hpp"
#include "pqga/registers.hpp"

namespace pqga {

// Machine geometry: k word slots of width M over an N-dimensional data
// register.
struct MachineConfig {
    int slots;    // k >= 1
    int word_dim; // M >= 2
    int data_dim; // N >= 2

    MachineConfig(int k, int m, int n);
};

// The step operator S: block-diagonal over the active word, block b applies
// gate b to the data register. S(|P> (x) |d>) = |P> (x) (U_P |d>).
class StepOperator {
public:
    // Gates must be unitary and share one dimension. A single-gate list is
    // accepted (degenerate machines show up in cross-checks).
    explicit StepOperator(std::vector<ComplexMatrix> gates);

    int word_dim() const { return static_cast<int>(gates_.size()); }
    int data_dim() const { return data_dim_; }
    const ComplexMatrix& gate(int word) const { return gates_[static_cast<std::size_t>(word)]; }

    // Dispatches on the least significant program digit of each basis slice.
    void apply_in_place(StateVector& state) const;

    // The (M*N) x (M*N) block-diagonal matrix form.
    ComplexMatrix to_matrix() const;

private:
    std::vector<ComplexMatrix> gates_;
    int data_dim_;
};

// A classical-reversible scheduler: a permutation of program basis indices,
// applied between step-operator invocations. The cyclic shift is the special
// case; any bijection is accepted.
class ProgramController {
public:
    // Throws NotBijective if image has duplicates or gaps.
    static ProgramController from_permutation(std::vector<std::size_t> image);

    std::size_t size() const { return image_.size(); }
    std::size_t image(std::size_t index) const { return image_[index]; }

    // Permutes the program factor; data untouched.
    void apply_in_place(StateVector& state) const;

    // 0/1 permutation matrix mapping |p> to |image(p)>.
    ComplexMatrix to_matrix() const;

private:
    explicit ProgramController(std::vector<std::size_t> image);

    std::vector<std::size_t> image_;
};

StepOperator build_step_operator(const GateSet& gs);

// Right cyclic shift of the k word slots: content (P_k,...,P_2,P_1) maps to
// (P_1,P_k,...,P_2), so each step consumes the next word and the spent word
// wraps to the far slot. R^k = identity.
ProgramController build_shift_operator(const MachineConfig& cfg);

// Generalized scheduler from an arbitrary bijection on [0, M^k).
ProgramController build_permutation_controller(std::vector<std::size_t> image);

// The 2N x 2N block matrix [[I, 0], [0, u]]; control qubit is the high-order
// factor. Throws NotUnitary.
ComplexMatrix build_controlled_gate(const ComplexMatrix& u);

// One-hot controller: one control qubit per non-idle gate, qubit i (qubit 0
// high-order) controlling gate i+1. Realized as the matrix product of the
// single controlled gates with the lowest-index gate applied first, which
// also fixes the behavior on multi-hot control words: the selected gates
// compose in ascending index order. All-zero controls act as the identity.
ComplexMatrix build_onehot_array(const GateSet& gs);

// One computational step: the step operator, then the scheduler.
StateVector apply_step(const StepOperator& s, const ProgramController& r,
                       const StateVector& state);

// Materialized matrix of one step, (R (x) I_N) * (I (x) S), for cross-checks
// and operator-level analysis at small dimensions.
ComplexMatrix step_unitary_matrix(const StepOperator& s, const ProgramController& r);

struct RunResult {
    StateVector final_state;
    std::vector<cxd> data_state;          // data factor of the final state
    bool program_restored;                // program factor equals the input word
    std::optional<int> halt_step;         // from the executed word schedule
    std::size_t final_program_index;      // program content after the run
};

// Word executed at each of the k steps: the program padded with trailing
// idles. Throws ProgramTooLong.
std::vector<int> padded_schedule(const Program& p, int slots);

// First step index from which the rest of the schedule is idle; empty if the
// final scheduled word is non-idle.
std::optional<int> detect_halt(const std::vector<int>& schedule);

// Executes the k-step cycle `repetitions` times under an arbitrary
// scheduler. The final state must be product with a basis-state program
// factor (ContractViolation otherwise); restoration is reported, not
// required, since a general permutation need not return the program.
RunResult run_with_controller(const MachineConfig& cfg, const GateSet& gs,
                              const ProgramController& controller, const Program& p,
                              const std::vector<cxd>& data, int repetitions);

// Executes a program once under the cyclic shift: data becomes
// gates[P_l] * ... * gates[P_1] applied to the input, the program register
// is restored. Throws ProgramTooLong, ContractViolation.
RunResult run(const MachineConfig& cfg, const GateSet& gs, const Program& p,
              const std::vector<cxd>& data);

// As run, applied j times: data becomes (gates[P_l] ... gates[P_1])^j input.
RunResult run_loop(const MachineConfig& cfg, const GateSet& gs, const Program& p,
                   const std::vector<cxd>& data, int repetitions);

} // namespace pqga
