#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "pqga/io.hpp"
#include "pqga/random.hpp"

using namespace pqga;

namespace {

std::filesystem::path scratch_dir() {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "pqga_io_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string scratch(const std::string& name) {
    return (scratch_dir() / name).string();
}

void put_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

} // namespace

TEST_CASE("matrix file round trip is lossless") {
    Rng rng(123);
    const ComplexMatrix u = random_unitary(4, rng);
    const std::string path = scratch("matrix.json");
    write_matrix_file(path, u);
    const ComplexMatrix back = parse_matrix_file(path);
    CHECK(max_abs_diff(u, back) <= 1e-15);
}

TEST_CASE("state file round trip is lossless") {
    Rng rng(321);
    const std::vector<cxd> v = random_unit_vector(6, rng);
    const std::string path = scratch("state.json");
    write_state_file(path, v);
    const std::vector<cxd> back = parse_state_file(path);
    REQUIRE(back.size() == v.size());
    CHECK(max_abs_diff(v, back) <= 1e-15);
}

TEST_CASE("program file: named words resolve through the gate set") {
    const GateSet gs = standard_universal_set(1);
    const std::string path = scratch("prog.json");
    write_program_file(path, "std-1q", 6, Program{{1, 2, 2, 1}}, gs);
    const LoadedProgram lp = load_program_file(path);
    CHECK(lp.gateset_name == "std-1q");
    CHECK(lp.capacity == 6);
    CHECK(lp.gs.size() == 3);
    CHECK(lp.program.words == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("program file: integer words are accepted") {
    const std::string path = scratch("prog_ints.json");
    put_text(path, R"({"gateset": "std-1q", "capacity": 3, "words": [2, 2]})");
    const LoadedProgram lp = load_program_file(path);
    CHECK(lp.program.words == std::vector<int>{2, 2});
}

TEST_CASE("program file guards") {
    const std::string unknown = scratch("prog_unknown.json");
    put_text(unknown, R"({"gateset": "std-1q", "capacity": 3, "words": ["X"]})");
    CHECK_THROWS_AS(load_program_file(unknown), ParseError);

    const std::string overfull = scratch("prog_overfull.json");
    put_text(overfull, R"({"gateset": "std-1q", "capacity": 1, "words": [1, 2]})");
    CHECK_THROWS_AS(load_program_file(overfull), ParseError);

    const std::string out_of_range = scratch("prog_range.json");
    put_text(out_of_range, R"({"gateset": "std-1q", "capacity": 2, "words": [7]})");
    CHECK_THROWS_AS(load_program_file(out_of_range), ParseError);
}

TEST_CASE("gate set manifest round trip") {
    const GateSet gs = standard_universal_set(2);
    const std::string path = scratch("gateset.json");
    write_gateset_manifest(path, gs);
    const GateSet back = parse_gateset_manifest(path);
    CHECK(back.n_qubits == 2);
    CHECK(back.names == gs.names);
    for (int w = 0; w < gs.size(); ++w) {
        CHECK(max_abs_diff(back.gate(w), gs.gate(w)) <= 1e-15);
    }

    // A custom manifest resolves like a builtin.
    const GateSet resolved = resolve_gateset(path);
    CHECK(resolved.size() == 6);
}

TEST_CASE("resolve_gateset: builtins and failures") {
    CHECK(resolve_gateset("std-1q").size() == 3);
    CHECK(resolve_gateset("std-2q").size() == 6);
    CHECK_THROWS_AS(resolve_gateset(scratch("does_not_exist.json")), ParseError);
}

TEST_CASE("malformed inputs raise ParseError") {
    const std::string truncated = scratch("bad.json");
    put_text(truncated, "{\"dim\": 2, \"rows\": [[[1,");
    CHECK_THROWS_AS(parse_matrix_file(truncated), ParseError);

    const std::string ragged = scratch("ragged.json");
    put_text(ragged, R"({"dim": 2, "rows": [[[1,0],[0,0]]]})");
    CHECK_THROWS_AS(parse_matrix_file(ragged), ParseError);

    const std::string wrong_pair = scratch("pair.json");
    put_text(wrong_pair, R"({"dim": 1, "rows": [[[1]]]})");
    CHECK_THROWS_AS(parse_matrix_file(wrong_pair), ParseError);

    CHECK_THROWS_AS(parse_matrix_file(scratch("missing.json")), ParseError);
}

TEST_CASE("report formatting: 12 significant digits") {
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
    CHECK(format_real(1e-9) == "1e-09");
    CHECK(format_amplitude(cxd{1.0, -0.25}) == "1 -0.25");
}
