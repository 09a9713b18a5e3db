#pragma once

#include <cstdint>

#include "pqga/gateset.hpp"
#include "pqga/registers.hpp"

namespace pqga {

struct SynthesisRequest {
    ComplexMatrix target;  // unitary, N x N
    double epsilon;        // > 0, phase-invariant distance budget
    int max_length;        // >= 0, longest word considered

    SynthesisRequest(ComplexMatrix t, double eps, int max_len);
};

struct SynthesisResult {
    Program program;
    double distance;               // phase-invariant distance of the product
    std::uint64_t nodes_expanded;  // candidate words scored
    bool achieved;                 // distance <= epsilon
};

// Ordered product gates[words[l-1]] * ... * gates[words[0]]; the empty
// program is the identity. Throws IndexOutOfRange.
ComplexMatrix program_product(const Program& p, const GateSet& gs);

// Breadth-first search over words of non-idle gates by increasing length;
// within a length, words are visited in lexicographic order by gate index,
// and the first word within epsilon wins, making the result the shortest
// and then lexicographically smallest solution. If nothing reaches epsilon
// by max_length, the best word seen is returned with achieved = false.
//
// The pruned mode collapses phase-equivalent duplicate products (rounded to
// a 1e-6 grid after phase normalization) before expanding them; it must
// return the same word as the exhaustive mode and exists only to shrink the
// frontier. Deterministic in both modes.
SynthesisResult compile(const SynthesisRequest& req, const GateSet& gs,
                        bool prune = true);

struct VerifyResult {
    bool ok;
    double distance;
};

// Recomputes the product and distance from scratch; trusts nothing from the
// search.
VerifyResult verify_program(const Program& p, const GateSet& gs,
                            const ComplexMatrix& target, double epsilon);

struct RootSynthesis {
    SynthesisResult root; // program approximating unitary_root(req.target, j)
    int repetitions;      // j
};

// Compiles the j-th root of req.target under req's budget; replaying the
// root program j times approximates the target within j * epsilon (the
// distance is unitarily invariant, so per-repetition errors add at worst
// linearly).
RootSynthesis compile_via_root(const SynthesisRequest& req, const GateSet& gs, int j);

} // namespace pqga
