#pragma once

#include <string>
#include <vector>

#include "pqga/matrix.hpp"

namespace pqga {

// Ordered finite gate list over n data qubits. Index 0 is always the idle
// (identity) gate; programs shorter than the register are padded with it.
struct GateSet {
    int n_qubits = 0;                // data qubits
    int dim = 0;                     // N = 2^n
    std::vector<ComplexMatrix> gates;
    std::vector<std::string> names;  // parallel to gates, unique

    int size() const { return static_cast<int>(gates.size()); } // M

    const ComplexMatrix& gate(int word) const;

    // Index of the named gate. Throws IndexOutOfRange if absent.
    int index_of(const std::string& name) const;
};

// Validates and assembles a gate set: gates[0] exactly the identity, all
// members unitary at 1e-10 and of dimension 2^n, names unique, M >= 2.
GateSet make_gate_set(int n_qubits, std::vector<ComplexMatrix> gates,
                      std::vector<std::string> names);

// Default approximately-universal family over n qubits:
//   idle, H on each qubit, T on each qubit, CNOT on each neighboring pair.
// M = 3 for n = 1 and M = 3n for n >= 2.
GateSet standard_universal_set(int n_qubits);

// ceil(log2 M): qubits needed for a width-M program word. M >= 1.
int program_register_width(int gate_count);

// Control qubits for the one-hot controller layout: one line per non-idle
// gate, so M - 1. The uniform count that charges the idle gate a line as
// well is M; both are worth reporting. M >= 2.
int onehot_register_width(int gate_count);

// I (x) ... (x) u (x) ... (x) I with u at `target`; qubit 0 is the
// high-order factor. Throws IndexOutOfRange, NotUnitary.
ComplexMatrix embed_single_qubit(const ComplexMatrix& u, int target, int n_qubits);

// Common fixed gates.
ComplexMatrix hadamard();
ComplexMatrix t_gate();
ComplexMatrix s_gate();
ComplexMatrix pauli_x();
ComplexMatrix pauli_z();
ComplexMatrix cnot();

} // namespace pqga
