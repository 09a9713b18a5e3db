// pqga: compile gate-index programs for the programmable gate array VM, run
// them, verify results against a target, and inspect gate sets.
//
// Exit codes: 0 ok, 1 not achieved / verification failed, 2 parse error,
// 3 invalid input.
#include <algorithm>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pqga/errors.hpp"
#include "pqga/io.hpp"
#include "pqga/synthesis.hpp"
#include "pqga/vm.hpp"

namespace {

int cmd_compile(const std::string& target_path, const std::string& gateset_spec,
                double epsilon, int max_length, const std::string& output) {
    const pqga::GateSet gs = pqga::resolve_gateset(gateset_spec);
    const pqga::ComplexMatrix target = pqga::parse_matrix_file(target_path);
    const pqga::SynthesisRequest req(target, epsilon, max_length);
    const pqga::SynthesisResult res = pqga::compile(req, gs);

    std::printf("gateset: %s (n=%d, M=%d)\n", gateset_spec.c_str(), gs.n_qubits,
                gs.size());
    std::printf("epsilon: %s\n", pqga::format_real(epsilon).c_str());
    std::printf("achieved: %s\n", res.achieved ? "yes" : "no");
    std::printf("distance: %s\n", pqga::format_real(res.distance).c_str());
    std::printf("length: %d\n", res.program.length());
    std::printf("words:");
    for (int w : res.program.words) {
        std::printf(" %s", gs.names[static_cast<std::size_t>(w)].c_str());
    }
    std::printf("\n");
    std::printf("nodes: %llu\n", static_cast<unsigned long long>(res.nodes_expanded));
    if (!output.empty()) {
        const int capacity = std::max(1, res.program.length());
        pqga::write_program_file(output, gateset_spec, capacity, res.program, gs);
        std::printf("wrote: %s\n", output.c_str());
    }
    return res.achieved ? 0 : 1;
}

int cmd_run(const std::string& program_path, const std::string& data_path, int basis,
            int k_override, int loop, bool trace) {
    const pqga::LoadedProgram lp = pqga::load_program_file(program_path);
    const int k = k_override > 0 ? k_override : lp.capacity;
    const pqga::MachineConfig cfg(k, lp.gs.size(), lp.gs.dim);

    std::vector<pqga::cxd> data;
    if (!data_path.empty()) {
        data = pqga::parse_state_file(data_path);
    } else {
        if (basis < 0 || basis >= lp.gs.dim) {
            throw pqga::IndexOutOfRange("run: basis index outside the data register");
        }
        data.assign(static_cast<std::size_t>(lp.gs.dim), pqga::cxd{0.0, 0.0});
        data[static_cast<std::size_t>(basis)] = pqga::cxd{1.0, 0.0};
    }

    const pqga::RunResult res = pqga::run_loop(cfg, lp.gs, lp.program, data, loop);
    const std::vector<int> schedule = pqga::padded_schedule(lp.program, k);

    std::printf("k: %d  M: %d  N: %d  loop: %d\n", k, lp.gs.size(), lp.gs.dim, loop);
    std::printf("schedule:");
    for (int w : schedule) {
        std::printf(" %s", lp.gs.names[static_cast<std::size_t>(w)].c_str());
    }
    std::printf("\n");
    if (trace) {
        for (int rep = 0; rep < loop; ++rep) {
            for (int i = 0; i < k; ++i) {
                std::printf("step %d: %s\n", rep * k + i + 1,
                            lp.gs.names[static_cast<std::size_t>(schedule[static_cast<std::size_t>(i)])].c_str());
            }
        }
    }
    if (res.halt_step.has_value()) {
        std::printf("halt: step %d\n", *res.halt_step);
    } else {
        std::printf("halt: none\n");
    }
    std::printf("final data state:\n");
    for (std::size_t i = 0; i < res.data_state.size(); ++i) {
        std::printf("%zu: %s\n", i, pqga::format_amplitude(res.data_state[i]).c_str());
    }
    std::printf("program_restored: %s\n", res.program_restored ? "yes" : "no");
    return 0;
}

int cmd_verify(const std::string& program_path, const std::string& target_path,
               double epsilon) {
    const pqga::LoadedProgram lp = pqga::load_program_file(program_path);
    const pqga::ComplexMatrix target = pqga::parse_matrix_file(target_path);
    const pqga::VerifyResult vr =
        pqga::verify_program(lp.program, lp.gs, target, epsilon);
    std::printf("distance: %s\n", pqga::format_real(vr.distance).c_str());
    std::printf("%s\n", vr.ok ? "ok" : "fail");
    return vr.ok ? 0 : 1;
}

int cmd_info(const std::string& gateset_spec) {
    const pqga::GateSet gs = pqga::resolve_gateset(gateset_spec);
    const int m = pqga::program_register_width(gs.size());
    std::printf("gateset: %s\n", gateset_spec.c_str());
    std::printf("n: %d\n", gs.n_qubits);
    std::printf("M: %d\n", gs.size());
    std::printf("m: %d\n", m);
    std::printf("onehot_width: %d\n", pqga::onehot_register_width(gs.size()));
    std::printf("gates:");
    for (const std::string& name : gs.names) {
        std::printf(" %s", name.c_str());
    }
    std::printf("\n");
    if (gs.size() == 2 * gs.n_qubits + 2) {
        std::printf("note: M = 2n+2 at this size, so m = ceil(log2(2n+2)) = %d\n", m);
    }
    return 0;
}

template <typename F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const pqga::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"programmable quantum gate array toolkit"};
    app.require_subcommand(1);

    std::string target_path;
    std::string gateset_spec = "std-1q";
    double epsilon = 1e-9;
    int max_length = 12;
    std::string output;
    CLI::App* compile = app.add_subcommand("compile", "synthesize a program for a target unitary");
    compile->add_option("target", target_path, "target matrix file")->required();
    compile->add_option("--gateset", gateset_spec, "builtin name or manifest path");
    compile->add_option("--epsilon", epsilon, "phase-invariant distance budget");
    compile->add_option("--max-length", max_length, "longest word considered");
    compile->add_option("--output", output, "program file to write");

    std::string program_path;
    std::string data_path;
    int basis = 0;
    int k_override = 0;
    int loop = 1;
    bool trace = false;
    CLI::App* run = app.add_subcommand("run", "execute a program file on the VM");
    run->add_option("program", program_path, "program file")->required();
    run->add_option("--data", data_path, "data state file");
    run->add_option("--basis", basis, "data basis index (when no --data)");
    run->add_option("--k", k_override, "override the register capacity");
    run->add_option("--loop", loop, "repetitions of the k-step cycle")
        ->check(CLI::PositiveNumber);
    run->add_flag("--trace", trace, "print the word executed at each step");

    std::string verify_program_path;
    std::string verify_target_path;
    double verify_epsilon = 1e-9;
    CLI::App* verify = app.add_subcommand("verify", "recheck a program against a target");
    verify->add_option("program", verify_program_path, "program file")->required();
    verify->add_option("target", verify_target_path, "target matrix file")->required();
    verify->add_option("--epsilon", verify_epsilon, "acceptance distance");

    std::string info_spec;
    CLI::App* info = app.add_subcommand("info", "describe a gate set");
    info->add_option("gateset", info_spec, "builtin name or manifest path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand(compile)) {
        return guarded([&] {
            return cmd_compile(target_path, gateset_spec, epsilon, max_length, output);
        });
    }
    if (app.got_subcommand(run)) {
        return guarded([&] {
            return cmd_run(program_path, data_path, basis, k_override, loop, trace);
        });
    }
    if (app.got_subcommand(verify)) {
        return guarded([&] {
            return cmd_verify(verify_program_path, verify_target_path, verify_epsilon);
        });
    }
    return guarded([&] { return cmd_info(info_spec); });
}
