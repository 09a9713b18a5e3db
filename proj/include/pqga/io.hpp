#pragma once

#include <string>
#include <vector>

#include "pqga/gateset.hpp"
#include "pqga/matrix.hpp"
#include "pqga/registers.hpp"

namespace pqga {

// Every human-facing number goes through one 12-significant-digit formatter
// so command output diffs deterministically. Files keep full double
// precision and round-trip losslessly.
std::string format_real(double x);
std::string format_amplitude(cxd z); // "re im", both through format_real

// Matrix file: {"dim": n, "rows": n lists of n [re, im] pairs}.
ComplexMatrix parse_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

// State file: {"dim": n, "amps": n [re, im] pairs}.
std::vector<cxd> parse_state_file(const std::string& path);
void write_state_file(const std::string& path, const std::vector<cxd>& amps);

// Gate-set manifest: {"n_qubits": n, "gates": [{"name", "matrix"}...]}.
GateSet parse_gateset_manifest(const std::string& path);
void write_gateset_manifest(const std::string& path, const GateSet& gs);

// Builtin name (std-1q, std-2q) or a manifest path.
GateSet resolve_gateset(const std::string& name_or_path);

// Program file: {"gateset": name, "capacity": k, "words": [index-or-name]}.
struct LoadedProgram {
    std::string gateset_name;
    int capacity = 0; // k
    GateSet gs;
    Program program;  // words resolved to indices
};

LoadedProgram load_program_file(const std::string& path);

// Words are written back as gate names for readability.
void write_program_file(const std::string& path, const std::string& gateset_name,
                        int capacity, const Program& p, const GateSet& gs);

} // namespace pqga
