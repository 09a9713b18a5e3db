#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pqga/gateset.hpp"
#include "pqga/matrix.hpp"
#include "pqga/registers.hpp"
#include "pqga/vm.hpp"

namespace pqga {

// Reference semantics: apply the scheduled gates to the data as plain
// matrix-vector products, one after another. No program register exists.
// The machine is correct exactly when it reproduces this.
std::vector<cxd> classical_dispatch_oracle(const Program& p, const GateSet& gs,
                                           const std::vector<cxd>& data);

struct ExtractionResult {
    bool implemented;                           // a single data operator exists
    std::optional<ComplexMatrix> data_operator; // the induced map when implemented
    std::optional<std::vector<cxd>> program_out; // shared outgoing program factor
    double residual;                            // worst deviation observed
};

// Tests whether big_u implements *some* fixed data operator for the given
// program state: feeds every data basis vector through, demands each output
// be product across the program/data cut, that all outgoing program factors
// agree, and that the induced data map (columns phase-aligned through the
// shared program factor) is unitary. Program-factor agreement is judged by
// pairwise inner products, never by subtraction, so a global phase cannot
// fake a mismatch. State checks run at tol.eps; the accumulated data map is
// allowed the looser 1e-8 for unitarity.
ExtractionResult extract_effective_operator(const ComplexMatrix& big_u,
                                            const std::vector<cxd>& program_state,
                                            Tolerance tol);

struct NoGoVerdict {
    bool consistent_with_theorem;
    bool constrained;      // both implemented with phase-inequivalent operators
    bool both_implemented;
    double overlap;        // |<p|q>|
    std::optional<double> gate_distance; // distance of induced operators, when both implemented
};

// Mechanized orthogonality test: when two program states are implemented by
// the same array and their induced operators are not phase-equivalent
// (distance > 10*tol.eps), the states must be orthogonal (overlap <=
// tol.eps). Failed extraction or equivalent operators leave the theorem
// silent, which the verdict records as unconstrained-but-consistent.
NoGoVerdict check_orthogonality_no_go(const ComplexMatrix& big_u,
                                      const std::vector<cxd>& p,
                                      const std::vector<cxd>& q, Tolerance tol);

struct ClassicalityReport {
    int trials = 0;
    double max_data_deviation = 0.0;    // machine output vs dispatch oracle
    double max_program_deviation = 0.0; // distance of program factor from basis
    double max_schmidt_residual = 0.0;  // second singular value, any step
};

// Random programs and data states through the machine: output must match the
// dispatch oracle and the program factor must stay a computational basis
// state after every intermediate step.
ClassicalityReport classicality_witness(const MachineConfig& cfg, const GateSet& gs,
                                        int trials, std::uint64_t seed = 0x5eed);

struct FalsificationReport {
    int trials = 0;
    int constrained_cases = 0;  // both implemented, inequivalent operators
    int counterexamples = 0;    // constrained with overlap > threshold
    double max_constrained_overlap = 0.0;
};

// Randomized falsification of the orthogonality claim over step-operator
// shaped arrays (shift * step over random gate sets) and non-orthogonal
// program-state pairs. Sampling arbitrary unitaries would almost never meet
// the programmability premise, so the campaign stays in the shaped family.
// One derived RNG per trial keeps the campaign reproducible and
// order-independent.
FalsificationReport no_go_falsification_campaign(int trials, std::uint64_t seed);

struct EntanglementReport {
    int cases = 0;
    int entangled = 0;          // outputs with second singular value > eps
    double min_second_singular = 0.0;
};

// Constructive converse: superposing two program words whose gates are
// inequivalent (and act differently on the chosen data) entangles program
// and data after a single step, in every constructed case.
EntanglementReport superposition_entanglement_campaign(int cases, std::uint64_t seed);

} // namespace pqga
