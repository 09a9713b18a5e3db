#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pqga/gateset.hpp"

using namespace pqga;

TEST_CASE("standard 1-qubit set: idle, H, T") {
    const GateSet gs = standard_universal_set(1);
    CHECK(gs.size() == 3);
    CHECK(gs.n_qubits == 1);
    CHECK(gs.dim == 2);
    CHECK(gs.names == std::vector<std::string>{"I", "H", "T"});
    CHECK(max_abs_diff(gs.gate(0), ComplexMatrix::identity(2)) == 0.0);
    CHECK(max_abs_diff(gs.gate(1), hadamard()) == 0.0);
    CHECK(max_abs_diff(gs.gate(2), t_gate()) == 0.0);
    CHECK(gs.index_of("T") == 2);
    CHECK_THROWS_AS(gs.index_of("X"), IndexOutOfRange);
    CHECK_THROWS_AS(gs.gate(3), IndexOutOfRange);
}

TEST_CASE("standard 2-qubit set: M = 6 with per-qubit H, T and CNOT") {
    const GateSet gs = standard_universal_set(2);
    CHECK(gs.size() == 6);
    CHECK(gs.dim == 4);
    CHECK(gs.names ==
          std::vector<std::string>{"I", "H0", "H1", "T0", "T1", "CNOT01"});

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // H on qubit 0 (high-order): mixes |0b> with |1b>.
    const ComplexMatrix& h0 = gs.gate(gs.index_of("H0"));
    CHECK(std::abs(h0.at(0, 0) - cxd{inv_sqrt2, 0}) < 1e-15);
    CHECK(std::abs(h0.at(0, 2) - cxd{inv_sqrt2, 0}) < 1e-15);
    CHECK(h0.at(0, 1) == cxd{0, 0});
    // H on qubit 1 (low-order): mixes |b0> with |b1>.
    const ComplexMatrix& h1 = gs.gate(gs.index_of("H1"));
    CHECK(std::abs(h1.at(0, 1) - cxd{inv_sqrt2, 0}) < 1e-15);
    CHECK(h1.at(0, 2) == cxd{0, 0});

    // CNOT control qubit 0: flips the target only in the |1x> block.
    const ComplexMatrix& cx = gs.gate(gs.index_of("CNOT01"));
    CHECK(cx.at(0, 0) == cxd{1, 0});
    CHECK(cx.at(1, 1) == cxd{1, 0});
    CHECK(cx.at(3, 2) == cxd{1, 0});
    CHECK(cx.at(2, 3) == cxd{1, 0});
    CHECK(cx.at(2, 2) == cxd{0, 0});

    for (int w = 0; w < gs.size(); ++w) {
        CHECK(is_unitary(gs.gate(w), Tolerance(1e-10)));
    }
}

TEST_CASE("make_gate_set validation") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK_THROWS_AS(make_gate_set(1, {hadamard(), t_gate()}, {"I", "T"}), Error);
    CHECK_THROWS_AS(
        make_gate_set(1, {i2, scaled(hadamard(), cxd{1.01, 0})}, {"I", "H"}),
        NotUnitary);
    CHECK_THROWS_AS(make_gate_set(1, {i2, hadamard()}, {"I", "I"}), Error);
    CHECK_THROWS_AS(make_gate_set(1, {i2}, {"I"}), Error);
    CHECK_THROWS_AS(make_gate_set(2, {i2, hadamard()}, {"I", "H"}),
                    DimensionMismatch);

    const GateSet ok = make_gate_set(1, {i2, pauli_x()}, {"I", "X"});
    CHECK(ok.size() == 2);
    CHECK(ok.index_of("X") == 1);
}

TEST_CASE("program_register_width is ceil(log2 M)") {
    CHECK(program_register_width(1) == 0);
    CHECK(program_register_width(2) == 1);
    CHECK(program_register_width(3) == 2);
    CHECK(program_register_width(6) == 3);

    for (int m = 1; m <= 64; ++m) {
        int expected = 0;
        while ((1 << expected) < m) {
            ++expected;
        }
        CHECK(program_register_width(m) == expected);
    }
    CHECK_THROWS_AS(program_register_width(0), Error);
}

TEST_CASE("one-hot width charges one line per non-idle gate") {
    CHECK(onehot_register_width(3) == 2);
    CHECK(onehot_register_width(6) == 5);
    CHECK_THROWS_AS(onehot_register_width(1), Error);
}

TEST_CASE("embed_single_qubit positions the factor") {
    // T on the low-order qubit of two: diag(1, t, 1, t).
    const ComplexMatrix t1 = embed_single_qubit(t_gate(), 1, 2);
    const cxd t = std::polar(1.0, std::acos(-1.0) / 4.0);
    CHECK(std::abs(t1.at(1, 1) - t) < 1e-15);
    CHECK(std::abs(t1.at(3, 3) - t) < 1e-15);
    CHECK(t1.at(0, 0) == cxd{1, 0});
    CHECK(t1.at(2, 2) == cxd{1, 0});

    CHECK_THROWS_AS(embed_single_qubit(t_gate(), 2, 2), IndexOutOfRange);
    CHECK_THROWS_AS(embed_single_qubit(ComplexMatrix::identity(4), 0, 2), DimensionMismatch);
}

TEST_CASE("fixed gates: T and S phases") {
    const double pi = std::acos(-1.0);
    CHECK(std::abs(t_gate().at(1, 1) - std::polar(1.0, pi / 4.0)) < 1e-15);
    CHECK(std::abs(s_gate().at(1, 1) - cxd{0.0, 1.0}) < 1e-15);
    CHECK(max_abs_diff(mat_mul(t_gate(), t_gate()), s_gate()) < 1e-15);
    CHECK(max_abs_diff(mat_mul(s_gate(), s_gate()), pauli_z()) < 1e-15);
}
