#include "pqga/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "pqga/random.hpp"

namespace pqga {

namespace {

constexpr double kStateEps = 1e-10;

// Per-trial stream derived from the campaign seed; trials stay reproducible
// regardless of execution order.
Rng trial_rng(std::uint64_t seed, int trial) {
    const std::uint64_t mix =
        seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1));
    return Rng(mix);
}

std::vector<cxd> tensor_with_data_basis(const std::vector<cxd>& program_state,
                                        int data_dim, int data_index) {
    std::vector<cxd> out(program_state.size() * static_cast<std::size_t>(data_dim),
                         cxd{0.0, 0.0});
    for (std::size_t p = 0; p < program_state.size(); ++p) {
        out[p * static_cast<std::size_t>(data_dim) + static_cast<std::size_t>(data_index)] =
            program_state[p];
    }
    return out;
}

} // namespace

std::vector<cxd> classical_dispatch_oracle(const Program& p, const GateSet& gs,
                                           const std::vector<cxd>& data) {
    if (static_cast<int>(data.size()) != gs.dim) {
        throw DimensionMismatch(
            "classical_dispatch_oracle: data length does not match gate dimension");
    }
    std::vector<cxd> out = data;
    for (int w : p.words) {
        out = mat_vec(gs.gate(w), out);
    }
    return out;
}

ExtractionResult extract_effective_operator(const ComplexMatrix& big_u,
                                            const std::vector<cxd>& program_state,
                                            Tolerance tol) {
    const std::size_t total = static_cast<std::size_t>(big_u.dim());
    const std::size_t pdim = program_state.size();
    if (pdim == 0 || total % pdim != 0) {
        throw DimensionMismatch(
            "extract_effective_operator: program dimension does not divide array dimension");
    }
    if (!is_unitary(big_u, Tolerance(kStateEps))) {
        throw NotUnitary("extract_effective_operator: array must be unitary");
    }
    if (std::abs(vector_norm(program_state) - 1.0) > kStateEps) {
        throw NotNormalized("extract_effective_operator: program state must be unit norm");
    }
    const int ndata = static_cast<int>(total / pdim);

    ExtractionResult res;
    res.implemented = true;
    res.residual = 0.0;

    // One pass per data basis vector: every output must factor across the
    // program/data cut.
    std::vector<SchmidtResult> splits;
    splits.reserve(static_cast<std::size_t>(ndata));
    for (int d = 0; d < ndata; ++d) {
        const std::vector<cxd> out =
            mat_vec(big_u, tensor_with_data_basis(program_state, ndata, d));
        SchmidtResult split = schmidt_split(out, pdim, ndata, tol);
        res.residual = std::max(res.residual, split.second_singular);
        if (!split.product) {
            res.implemented = false;
        }
        splits.push_back(std::move(split));
    }
    if (!res.implemented) {
        return res;
    }

    // All outgoing program factors must coincide up to phase; inner products
    // rather than subtraction, so a global phase cannot fake a mismatch.
    for (int i = 0; i < ndata; ++i) {
        for (int j = i + 1; j < ndata; ++j) {
            const double agreement =
                std::abs(inner_product(splits[static_cast<std::size_t>(i)].program_part,
                                       splits[static_cast<std::size_t>(j)].program_part));
            res.residual = std::max(res.residual, 1.0 - agreement);
            if (1.0 - agreement > tol.eps) {
                res.implemented = false;
            }
        }
    }
    if (!res.implemented) {
        return res;
    }

    // Induced data map: column d is the data factor of output d, rephased
    // into the gauge of the first program factor.
    const std::vector<cxd>& ref = splits[0].program_part;
    ComplexMatrix op(ndata);
    for (int d = 0; d < ndata; ++d) {
        const SchmidtResult& split = splits[static_cast<std::size_t>(d)];
        const cxd coef = inner_product(ref, split.program_part) * split.leading_singular;
        for (int r = 0; r < ndata; ++r) {
            op.at(r, d) = coef * split.data_part[static_cast<std::size_t>(r)];
        }
    }
    // The map accumulates more floating point than a single state check, so
    // unitarity gets the looser of tol and 1e-8.
    const double gram_dev =
        max_abs_diff(mat_mul(dagger(op), op), ComplexMatrix::identity(ndata));
    res.residual = std::max(res.residual, gram_dev);
    if (gram_dev > std::max(tol.eps, 1e-8)) {
        res.implemented = false;
        return res;
    }
    res.data_operator = std::move(op);
    res.program_out = ref;
    return res;
}

NoGoVerdict check_orthogonality_no_go(const ComplexMatrix& big_u,
                                      const std::vector<cxd>& p,
                                      const std::vector<cxd>& q, Tolerance tol) {
    if (p.size() != q.size()) {
        throw DimensionMismatch("check_orthogonality_no_go: program states differ in size");
    }
    NoGoVerdict verdict;
    verdict.overlap = std::abs(inner_product(p, q));
    const ExtractionResult ep = extract_effective_operator(big_u, p, tol);
    const ExtractionResult eq = extract_effective_operator(big_u, q, tol);
    verdict.both_implemented = ep.implemented && eq.implemented;
    verdict.constrained = false;
    if (verdict.both_implemented) {
        // The extracted maps are unitary only within 1e-8, so use the raw
        // phase-minimized distance instead of the unitary-validated one.
        const double dist =
            phase_minimized_frobenius(*ep.data_operator, *eq.data_operator);
        verdict.gate_distance = dist;
        verdict.constrained = dist > 10.0 * tol.eps;
    }
    verdict.consistent_with_theorem = !verdict.constrained || verdict.overlap <= tol.eps;
    return verdict;
}

ClassicalityReport classicality_witness(const MachineConfig& cfg, const GateSet& gs,
                                        int trials, std::uint64_t seed) {
    if (trials < 0) {
        throw Error("classicality_witness: trials must be >= 0");
    }
    if (gs.size() != cfg.word_dim || gs.dim != cfg.data_dim) {
        throw DimensionMismatch(
            "classicality_witness: gate set does not match machine geometry");
    }
    ClassicalityReport report;
    report.trials = trials;
    if (trials == 0) {
        return report;
    }
    const StepOperator s = build_step_operator(gs);
    const ProgramController r = build_shift_operator(cfg);
    for (int t = 0; t < trials; ++t) {
        Rng rng = trial_rng(seed, t);
        std::uniform_int_distribution<int> len_dist(0, cfg.slots);
        std::uniform_int_distribution<int> word_dist(0, cfg.word_dim - 1);
        Program prog;
        const int len = len_dist(rng);
        for (int i = 0; i < len; ++i) {
            prog.words.push_back(word_dist(rng));
        }
        const std::vector<cxd> data = random_unit_vector(cfg.data_dim, rng);

        StateVector state =
            make_product_state(encode_program(prog, cfg.slots, cfg.word_dim), data,
                               cfg.slots, cfg.word_dim);
        SchmidtResult split = schmidt_check(state, Tolerance(kStateEps));
        for (int step = 0; step < cfg.slots; ++step) {
            state = apply_step(s, r, state);
            split = schmidt_check(state, Tolerance(kStateEps));
            report.max_schmidt_residual =
                std::max(report.max_schmidt_residual, split.second_singular);
            double peak = 0.0;
            for (const cxd& a : split.program_part) {
                peak = std::max(peak, std::abs(a));
            }
            report.max_program_deviation =
                std::max(report.max_program_deviation, 1.0 - peak);
        }
        // The restored program factor is a +1 basis amplitude under the
        // schmidt phase convention, so the data factor carries the full
        // phase and compares entrywise against the oracle.
        const std::vector<cxd> expected = classical_dispatch_oracle(prog, gs, data);
        report.max_data_deviation =
            std::max(report.max_data_deviation, max_abs_diff(split.data_part, expected));
    }
    return report;
}

FalsificationReport no_go_falsification_campaign(int trials, std::uint64_t seed) {
    if (trials < 0) {
        throw Error("no_go_falsification_campaign: trials must be >= 0");
    }
    FalsificationReport report;
    report.trials = trials;
    const Tolerance tol(kStateEps);
    for (int t = 0; t < trials; ++t) {
        Rng rng = trial_rng(seed, t);
        const int m = 2 + (t % 2);       // word width 2 or 3
        const int k = 1 + ((t / 2) % 2); // one or two slots
        const int n = 2;
        const MachineConfig cfg(k, m, n);

        std::vector<ComplexMatrix> gates;
        gates.push_back(ComplexMatrix::identity(n));
        for (int g = 1; g < m; ++g) {
            gates.push_back(random_unitary(n, rng));
        }
        const StepOperator s(std::move(gates));
        const ComplexMatrix big_u = step_unitary_matrix(s, build_shift_operator(cfg));

        const std::size_t pdim = checked_pow(m, k);
        std::uniform_int_distribution<std::size_t> word(0, pdim - 1);
        std::uniform_real_distribution<double> angle(0.3, 1.2);
        std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);

        std::vector<cxd> p;
        std::vector<cxd> q;
        if (t % 2 == 0) {
            // Generic random pair, resampled until clearly non-orthogonal.
            p = random_unit_vector(static_cast<int>(pdim), rng);
            for (int attempt = 0; attempt < 64; ++attempt) {
                q = random_unit_vector(static_cast<int>(pdim), rng);
                if (std::abs(inner_product(p, q)) > 1e-3) {
                    break;
                }
            }
        } else {
            // Basis word against a superposition leaning on the same word;
            // overlap = cos(theta) >= cos(1.2) by construction.
            const std::size_t w1 = word(rng);
            std::size_t w2 = word(rng);
            while (w2 == w1) {
                w2 = word(rng);
            }
            const double theta = angle(rng);
            p.assign(pdim, cxd{0.0, 0.0});
            q.assign(pdim, cxd{0.0, 0.0});
            p[w1] = cxd{1.0, 0.0};
            q[w1] = cxd{std::cos(theta), 0.0};
            q[w2] = std::polar(std::sin(theta), phase(rng));
        }

        const NoGoVerdict verdict = check_orthogonality_no_go(big_u, p, q, tol);
        if (verdict.constrained) {
            ++report.constrained_cases;
            report.max_constrained_overlap =
                std::max(report.max_constrained_overlap, verdict.overlap);
            if (verdict.overlap > 1e-6) {
                ++report.counterexamples;
            }
        }
    }
    return report;
}

EntanglementReport superposition_entanglement_campaign(int cases, std::uint64_t seed) {
    if (cases < 0) {
        throw Error("superposition_entanglement_campaign: cases must be >= 0");
    }
    EntanglementReport report;
    report.cases = cases;
    report.min_second_singular = cases > 0 ? 1.0 : 0.0;
    for (int c = 0; c < cases; ++c) {
        Rng rng = trial_rng(seed, c);
        const int m = 2 + (c % 2);
        const int k = 1 + ((c / 2) % 2);
        const int n = 2;
        const MachineConfig cfg(k, m, n);

        std::vector<ComplexMatrix> gates;
        gates.push_back(ComplexMatrix::identity(n));
        for (int g = 1; g < m; ++g) {
            gates.push_back(random_unitary(n, rng));
        }

        // Two words firing phase-inequivalent gates on this step; Haar draws
        // are never equivalent in practice, but the premise is checked, not
        // assumed.
        const std::size_t pdim = checked_pow(m, k);
        std::uniform_int_distribution<std::size_t> word(0, pdim - 1);
        std::size_t w1 = 0;
        std::size_t w2 = 0;
        do {
            w1 = word(rng);
            w2 = word(rng);
        } while (w1 % static_cast<std::size_t>(m) == w2 % static_cast<std::size_t>(m) ||
                 phase_minimized_frobenius(
                     gates[w1 % static_cast<std::size_t>(m)],
                     gates[w2 % static_cast<std::size_t>(m)]) <= 1e-6);

        // Data on which the two branches visibly differ (a common
        // quasi-eigenvector would mask the inequivalence).
        const ComplexMatrix& g1 = gates[w1 % static_cast<std::size_t>(m)];
        const ComplexMatrix& g2 = gates[w2 % static_cast<std::size_t>(m)];
        std::vector<cxd> data;
        double branch_overlap = 1.0;
        do {
            data = random_unit_vector(n, rng);
            branch_overlap = std::abs(inner_product(mat_vec(g1, data), mat_vec(g2, data)));
        } while (1.0 - branch_overlap <= 1e-6);

        StateVector state{k, m, n,
                          std::vector<cxd>(pdim * static_cast<std::size_t>(n),
                                           cxd{0.0, 0.0})};
        const cxd coef1 = cxd{1.0 / std::sqrt(2.0), 0.0};
        const cxd coef2 = std::polar(1.0 / std::sqrt(2.0),
                                     std::uniform_real_distribution<double>(
                                         0.0, 6.283185307179586)(rng));
        for (int d = 0; d < n; ++d) {
            state.amps[w1 * static_cast<std::size_t>(n) + static_cast<std::size_t>(d)] =
                coef1 * data[static_cast<std::size_t>(d)];
            state.amps[w2 * static_cast<std::size_t>(n) + static_cast<std::size_t>(d)] =
                coef2 * data[static_cast<std::size_t>(d)];
        }

        const StepOperator s(gates);
        const StateVector out = apply_step(s, build_shift_operator(cfg), state);
        const SchmidtResult split = schmidt_check(out, Tolerance(kStateEps));
        if (!split.product) {
            ++report.entangled;
        }
        report.min_second_singular =
            std::min(report.min_second_singular, split.second_singular);
    }
    return report;
}

} // namespace pqga
