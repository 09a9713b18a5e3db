#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pqga/random.hpp"
#include "pqga/theorem.hpp"

using namespace pqga;

namespace {

const Tolerance kTol(1e-10);

// One-step array for the standard 1-qubit set (k=1, so R is the identity
// permutation and the array is just S).
ComplexMatrix std1q_array() {
    const GateSet gs = standard_universal_set(1);
    return step_unitary_matrix(build_step_operator(gs),
                               build_shift_operator(MachineConfig(1, 3, 2)));
}

std::vector<cxd> basis_program(std::size_t index, std::size_t dim) {
    std::vector<cxd> p(dim, cxd{0.0, 0.0});
    p[index] = cxd{1.0, 0.0};
    return p;
}

} // namespace

TEST_CASE("dispatch oracle applies words in order") {
    const GateSet xset =
        make_gate_set(1, {ComplexMatrix::identity(2), pauli_x()}, {"I", "X"});
    const std::vector<cxd> e0{cxd{1, 0}, cxd{0, 0}};

    const std::vector<cxd> same = classical_dispatch_oracle(Program{{}}, xset, e0);
    CHECK(std::abs(same[0] - cxd{1, 0}) < 1e-15);

    const std::vector<cxd> flipped = classical_dispatch_oracle(Program{{1}}, xset, e0);
    CHECK(std::abs(flipped[1] - cxd{1, 0}) < 1e-15);
    CHECK(std::abs(flipped[0]) < 1e-15);

    CHECK_THROWS_AS(classical_dispatch_oracle(Program{{2}}, xset, e0), IndexOutOfRange);
    CHECK_THROWS_AS(
        classical_dispatch_oracle(Program{{1}}, xset, std::vector<cxd>(3)),
        DimensionMismatch);
}

TEST_CASE("dispatch equivalence: the VM reproduces the oracle exhaustively") {
    const GateSet sets[] = {
        make_gate_set(1, {ComplexMatrix::identity(2), hadamard()}, {"I", "H"}),
        standard_universal_set(1)};
    for (const GateSet& gs : sets) {
        for (int k = 1; k <= 3; ++k) {
            const std::size_t pdim = checked_pow(gs.size(), k);
            const MachineConfig cfg(k, gs.size(), 2);
            for (std::size_t index = 0; index < pdim; ++index) {
                const Program p = decode_program(index, k, gs.size());
                for (int basis = 0; basis < 2; ++basis) {
                    std::vector<cxd> data(2, cxd{0, 0});
                    data[static_cast<std::size_t>(basis)] = cxd{1, 0};
                    const RunResult res = run(cfg, gs, p, data);
                    const std::vector<cxd> expected =
                        classical_dispatch_oracle(p, gs, data);
                    CHECK(max_abs_diff(res.data_state, expected) <= 1e-10);
                    CHECK(res.program_restored);
                }
            }
        }
    }
}

TEST_CASE("extraction recovers each basis word's gate up to phase") {
    const GateSet gs = standard_universal_set(1);
    const ComplexMatrix big_u = std1q_array();
    for (std::size_t word = 0; word < 3; ++word) {
        const ExtractionResult res =
            extract_effective_operator(big_u, basis_program(word, 3), kTol);
        REQUIRE(res.implemented);
        CHECK(res.residual <= 1e-8);
        CHECK(phase_minimized_frobenius(*res.data_operator,
                                        gs.gate(static_cast<int>(word))) <= 1e-8);
        // k=1 shift is the identity: the program factor comes back as fed.
        CHECK(std::abs(std::abs((*res.program_out)[word]) - 1.0) < 1e-10);
    }
}

TEST_CASE("extraction rejects a superposition of inequivalent words") {
    const ComplexMatrix big_u = std1q_array();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<cxd> sup(3, cxd{0, 0});
    sup[1] = cxd{inv_sqrt2, 0}; // H
    sup[2] = cxd{inv_sqrt2, 0}; // T
    const ExtractionResult res = extract_effective_operator(big_u, sup, kTol);
    CHECK_FALSE(res.implemented);
    CHECK_FALSE(res.data_operator.has_value());
    // Worst entanglement over the data basis: e0 gives |<He0, Te0>| = 1/sqrt2,
    // so the second singular value is sqrt((1 - 1/sqrt2)/2) = sin(pi/8).
    CHECK(res.residual ==
          doctest::Approx(std::sin(std::acos(-1.0) / 8.0)).epsilon(1e-9));
}

TEST_CASE("extraction accepts a superposition of phase-equivalent words") {
    const GateSet twin = make_gate_set(
        1,
        {ComplexMatrix::identity(2), hadamard(), scaled(hadamard(), std::polar(1.0, 0.9))},
        {"I", "H", "H'"});
    const ComplexMatrix big_u = step_unitary_matrix(
        build_step_operator(twin), build_shift_operator(MachineConfig(1, 3, 2)));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<cxd> sup(3, cxd{0, 0});
    sup[1] = cxd{inv_sqrt2, 0};
    sup[2] = cxd{inv_sqrt2, 0};
    const ExtractionResult res = extract_effective_operator(big_u, sup, kTol);
    REQUIRE(res.implemented);
    CHECK(phase_minimized_frobenius(*res.data_operator, hadamard()) <= 1e-8);
}

TEST_CASE("extraction guards") {
    const ComplexMatrix big_u = std1q_array();
    CHECK_THROWS_AS(
        extract_effective_operator(scaled(big_u, cxd{1.5, 0}), basis_program(0, 3), kTol),
        NotUnitary);
    std::vector<cxd> unnormalized(3, cxd{0.8, 0});
    CHECK_THROWS_AS(extract_effective_operator(big_u, unnormalized, kTol),
                    NotNormalized);
    CHECK_THROWS_AS(extract_effective_operator(big_u, basis_program(0, 4), kTol),
                    DimensionMismatch);
}

TEST_CASE("no-go verdict: distinct basis words are constrained and consistent") {
    const ComplexMatrix big_u = std1q_array();
    const NoGoVerdict v = check_orthogonality_no_go(big_u, basis_program(1, 3),
                                                    basis_program(2, 3), kTol);
    CHECK(v.both_implemented);
    CHECK(v.constrained);
    CHECK(v.consistent_with_theorem);
    CHECK(v.overlap <= 1e-15);
    // d(H, T) = sqrt(4 - 2|tr(H^dagger T)|) with |tr| = sqrt(2) sin(pi/8).
    const double pi = std::acos(-1.0);
    const double expected = std::sqrt(4.0 - 2.0 * std::sqrt(2.0) * std::sin(pi / 8.0));
    CHECK(v.gate_distance.value() == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("no-go verdict: p = q is unconstrained (phase-equivalent branch)") {
    const ComplexMatrix big_u = std1q_array();
    const NoGoVerdict v = check_orthogonality_no_go(big_u, basis_program(1, 3),
                                                    basis_program(1, 3), kTol);
    CHECK(v.both_implemented);
    CHECK_FALSE(v.constrained);
    CHECK(v.consistent_with_theorem);
    CHECK(v.gate_distance.value() <= 1e-10);
    CHECK(v.overlap == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("no-go verdict: a superposed overlapping pair fails extraction") {
    const ComplexMatrix big_u = std1q_array();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<cxd> sup(3, cxd{0, 0});
    sup[1] = cxd{inv_sqrt2, 0};
    sup[2] = cxd{inv_sqrt2, 0};
    const NoGoVerdict v =
        check_orthogonality_no_go(big_u, basis_program(1, 3), sup, kTol);
    CHECK_FALSE(v.both_implemented);
    CHECK_FALSE(v.constrained);
    CHECK(v.consistent_with_theorem);
    CHECK(v.overlap == doctest::Approx(inv_sqrt2).epsilon(1e-12));
}

TEST_CASE("classicality witness: empty and standard sweeps") {
    const GateSet gs1 = standard_universal_set(1);
    const ClassicalityReport empty = classicality_witness(MachineConfig(3, 3, 2), gs1, 0);
    CHECK(empty.trials == 0);
    CHECK(empty.max_data_deviation == 0.0);

    const ClassicalityReport sweep =
        classicality_witness(MachineConfig(3, 3, 2), gs1, 100);
    CHECK(sweep.trials == 100);
    CHECK(sweep.max_data_deviation <= 1e-10);
    CHECK(sweep.max_program_deviation <= 1e-10);
    CHECK(sweep.max_schmidt_residual <= 1e-10);

    const GateSet gs2 = standard_universal_set(2);
    const ClassicalityReport sweep2 =
        classicality_witness(MachineConfig(2, 6, 4), gs2, 50);
    CHECK(sweep2.max_data_deviation <= 1e-10);
    CHECK(sweep2.max_program_deviation <= 1e-10);
    CHECK(sweep2.max_schmidt_residual <= 1e-10);

    CHECK_THROWS_AS(classicality_witness(MachineConfig(2, 4, 2), gs1, 1),
                    DimensionMismatch);
}

TEST_CASE("falsification campaign finds no counterexample") {
    const FalsificationReport report = no_go_falsification_campaign(2000, 0x5eed);
    CHECK(report.trials == 2000);
    CHECK(report.counterexamples == 0);

    // Determinism of the seed-per-trial scheme.
    const FalsificationReport again = no_go_falsification_campaign(2000, 0x5eed);
    CHECK(again.constrained_cases == report.constrained_cases);
    CHECK(again.max_constrained_overlap == report.max_constrained_overlap);
}

TEST_CASE("superposed inequivalent words always entangle after one step") {
    const EntanglementReport report = superposition_entanglement_campaign(100, 0x5eed);
    CHECK(report.cases == 100);
    CHECK(report.entangled == 100);
    CHECK(report.min_second_singular > 1e-4);
}
