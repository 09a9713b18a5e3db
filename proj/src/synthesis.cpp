#include "pqga/synthesis.hpp"

#include <cmath>
#include <cstring>
#include <string>
#include <unordered_set>
#include <utility>

namespace pqga {

namespace {

constexpr double kUnitaryEps = 1e-10;
constexpr double kPruneGrid = 1e-6;

// Phase-normalized, grid-rounded fingerprint for duplicate detection. The
// phase is fixed by the first entry of maximal magnitude so that the key is
// shared by all unit-phase multiples of a matrix.
std::string product_key(const ComplexMatrix& m) {
    const std::vector<cxd>& e = m.entries();
    double peak = 0.0;
    for (const cxd& z : e) {
        peak = std::max(peak, std::abs(z));
    }
    cxd phase{1.0, 0.0};
    for (const cxd& z : e) {
        const double mag = std::abs(z);
        if (mag >= peak * (1.0 - 1e-9)) {
            phase = z / mag;
            break;
        }
    }
    std::string key;
    key.reserve(e.size() * 2 * sizeof(std::int64_t));
    for (const cxd& z : e) {
        const cxd c = z * std::conj(phase);
        const std::int64_t words[2] = {
            static_cast<std::int64_t>(std::llround(c.real() / kPruneGrid)),
            static_cast<std::int64_t>(std::llround(c.imag() / kPruneGrid))};
        key.append(reinterpret_cast<const char*>(words), sizeof(words));
    }
    return key;
}

struct Node {
    std::vector<int> word;
    ComplexMatrix product;
};

} // namespace

SynthesisRequest::SynthesisRequest(ComplexMatrix t, double eps, int max_len)
    : target(std::move(t)), epsilon(eps), max_length(max_len) {
    if (!(eps > 0.0)) {
        throw Error("SynthesisRequest: epsilon must be > 0");
    }
    if (max_len < 0) {
        throw Error("SynthesisRequest: max_length must be >= 0");
    }
    if (!is_unitary(target, Tolerance(kUnitaryEps))) {
        throw NotUnitary("SynthesisRequest: target must be unitary");
    }
}

ComplexMatrix program_product(const Program& p, const GateSet& gs) {
    ComplexMatrix product = ComplexMatrix::identity(gs.dim);
    for (int w : p.words) {
        product = mat_mul(gs.gate(w), product);
    }
    return product;
}

SynthesisResult compile(const SynthesisRequest& req, const GateSet& gs, bool prune) {
    if (req.target.dim() != gs.dim) {
        throw DimensionMismatch("compile: target dimension does not match gate set");
    }

    SynthesisResult result{Program{}, 0.0, 0, false};
    std::unordered_set<std::string> visited;

    std::vector<Node> frontier;
    frontier.push_back(Node{{}, ComplexMatrix::identity(gs.dim)});

    Program best_word;
    double best_distance = -1.0;

    for (int length = 0; length <= req.max_length; ++length) {
        std::vector<Node> next;
        for (Node& node : frontier) {
            ++result.nodes_expanded;
            const double d = phase_invariant_distance(node.product, req.target);
            if (best_distance < 0.0 || d < best_distance) {
                best_distance = d;
                best_word.words = node.word;
            }
            if (d <= req.epsilon) {
                result.program.words = std::move(node.word);
                result.distance = d;
                result.achieved = true;
                return result;
            }
            if (length == req.max_length) {
                continue;
            }
            if (prune && !visited.insert(product_key(node.product)).second) {
                continue; // a phase-equivalent product was expanded earlier
            }
            for (int g = 1; g < gs.size(); ++g) {
                Node child{node.word, mat_mul(gs.gate(g), node.product)};
                child.word.push_back(g);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

    result.program = std::move(best_word);
    result.distance = best_distance;
    result.achieved = false;
    return result;
}

VerifyResult verify_program(const Program& p, const GateSet& gs,
                            const ComplexMatrix& target, double epsilon) {
    const double d = phase_invariant_distance(program_product(p, gs), target);
    return VerifyResult{d <= epsilon, d};
}

RootSynthesis compile_via_root(const SynthesisRequest& req, const GateSet& gs, int j) {
    const ComplexMatrix root = unitary_root(req.target, j);
    const SynthesisRequest root_req(root, req.epsilon, req.max_length);
    return RootSynthesis{compile(root_req, gs), j};
}

} // namespace pqga
