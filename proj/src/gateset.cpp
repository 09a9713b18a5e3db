#include "pqga/gateset.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>
#include <utility>

#include "pqga/registers.hpp"

namespace pqga {

namespace {

constexpr double kGateUnitaryEps = 1e-10;

} // namespace

const ComplexMatrix& GateSet::gate(int word) const {
    if (word < 0 || word >= size()) {
        throw IndexOutOfRange("GateSet::gate: word " + std::to_string(word) +
                              " outside [0, " + std::to_string(size()) + ")");
    }
    return gates[static_cast<std::size_t>(word)];
}

int GateSet::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i) {
        if (names[static_cast<std::size_t>(i)] == name) {
            return i;
        }
    }
    throw IndexOutOfRange("GateSet::index_of: no gate named '" + name + "'");
}

GateSet make_gate_set(int n_qubits, std::vector<ComplexMatrix> gates,
                      std::vector<std::string> names) {
    if (n_qubits < 1) {
        throw Error("make_gate_set: n_qubits must be >= 1");
    }
    if (gates.size() < 2) {
        throw Error("make_gate_set: need the idle gate plus at least one more");
    }
    if (names.size() != gates.size()) {
        throw Error("make_gate_set: names must parallel gates");
    }
    const int dim = static_cast<int>(checked_pow(2, n_qubits));
    if (max_abs_diff(gates[0], ComplexMatrix::identity(dim)) != 0.0) {
        throw Error("make_gate_set: gate 0 must be exactly the identity");
    }
    for (const ComplexMatrix& g : gates) {
        if (g.dim() != dim) {
            throw DimensionMismatch("make_gate_set: every gate must be 2^n x 2^n");
        }
        if (!is_unitary(g, Tolerance(kGateUnitaryEps))) {
            throw NotUnitary("make_gate_set: gate is not unitary at 1e-10");
        }
    }
    std::unordered_set<std::string> seen;
    for (const std::string& name : names) {
        if (name.empty() || !seen.insert(name).second) {
            throw Error("make_gate_set: gate names must be nonempty and unique");
        }
    }
    GateSet gs;
    gs.n_qubits = n_qubits;
    gs.dim = dim;
    gs.gates = std::move(gates);
    gs.names = std::move(names);
    return gs;
}

GateSet standard_universal_set(int n_qubits) {
    if (n_qubits < 1) {
        throw Error("standard_universal_set: n_qubits must be >= 1");
    }
    const int dim = static_cast<int>(checked_pow(2, n_qubits));
    std::vector<ComplexMatrix> gates;
    std::vector<std::string> names;
    gates.push_back(ComplexMatrix::identity(dim));
    names.push_back("I");
    for (int q = 0; q < n_qubits; ++q) {
        gates.push_back(embed_single_qubit(hadamard(), q, n_qubits));
        names.push_back(n_qubits == 1 ? "H" : "H" + std::to_string(q));
    }
    for (int q = 0; q < n_qubits; ++q) {
        gates.push_back(embed_single_qubit(t_gate(), q, n_qubits));
        names.push_back(n_qubits == 1 ? "T" : "T" + std::to_string(q));
    }
    for (int q = 0; q + 1 < n_qubits; ++q) {
        const int left = static_cast<int>(checked_pow(2, q));
        const int right = static_cast<int>(checked_pow(2, n_qubits - q - 2));
        gates.push_back(kron(kron(ComplexMatrix::identity(left), cnot()),
                             ComplexMatrix::identity(right)));
        names.push_back("CNOT" + std::to_string(q) + std::to_string(q + 1));
    }
    return make_gate_set(n_qubits, std::move(gates), std::move(names));
}

int program_register_width(int gate_count) {
    if (gate_count < 1) {
        throw Error("program_register_width: gate count must be >= 1");
    }
    int width = 0;
    std::size_t capacity = 1;
    while (capacity < static_cast<std::size_t>(gate_count)) {
        capacity *= 2;
        ++width;
    }
    return width;
}

int onehot_register_width(int gate_count) {
    if (gate_count < 2) {
        throw Error("onehot_register_width: gate count must be >= 2");
    }
    return gate_count - 1;
}

ComplexMatrix embed_single_qubit(const ComplexMatrix& u, int target, int n_qubits) {
    if (u.dim() != 2) {
        throw DimensionMismatch("embed_single_qubit: u must be 2x2");
    }
    if (target < 0 || target >= n_qubits) {
        throw IndexOutOfRange("embed_single_qubit: target qubit out of range");
    }
    if (!is_unitary(u, Tolerance(kGateUnitaryEps))) {
        throw NotUnitary("embed_single_qubit: u must be unitary");
    }
    const int left = static_cast<int>(checked_pow(2, target));
    const int right = static_cast<int>(checked_pow(2, n_qubits - target - 1));
    return kron(kron(ComplexMatrix::identity(left), u), ComplexMatrix::identity(right));
}

ComplexMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::from_rows({{s, s}, {s, -s}});
}

ComplexMatrix t_gate() {
    return ComplexMatrix::from_rows(
        {{1.0, 0.0}, {0.0, std::polar(1.0, std::numbers::pi / 4.0)}});
}

ComplexMatrix s_gate() {
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, cxd{0.0, 1.0}}});
}

ComplexMatrix pauli_x() {
    return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix pauli_z() {
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

ComplexMatrix cnot() {
    return ComplexMatrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                     {0.0, 1.0, 0.0, 0.0},
                                     {0.0, 0.0, 0.0, 1.0},
                                     {0.0, 0.0, 1.0, 0.0}});
}

} // namespace pqga
