#include "pqga/registers.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Core>
#include <Eigen/SVD>

namespace pqga {

namespace {

constexpr double kNormEps = 1e-10;
constexpr double kZeroAmplitude = 1e-12;

} // namespace

std::size_t StateVector::program_dim() const {
    return checked_pow(word_dim, slots);
}

double StateVector::norm() const {
    return vector_norm(amps);
}

std::size_t checked_pow(int base, int exp) {
    if (base < 1 || exp < 0) {
        throw Error("checked_pow: base must be >= 1 and exp >= 0");
    }
    std::size_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(base)) {
            throw Error("checked_pow: overflow");
        }
        out *= static_cast<std::size_t>(base);
    }
    return out;
}

std::size_t encode_program(const Program& p, int slots, int word_dim) {
    if (slots < 1) {
        throw Error("encode_program: slots must be >= 1");
    }
    if (p.length() > slots) {
        throw ProgramTooLong("encode_program: program length " +
                             std::to_string(p.length()) + " exceeds " +
                             std::to_string(slots) + " slots");
    }
    std::size_t index = 0;
    std::size_t radix = 1;
    for (int w : p.words) {
        if (w < 0 || w >= word_dim) {
            throw IndexOutOfRange("encode_program: word " + std::to_string(w) +
                                  " outside [0, " + std::to_string(word_dim) + ")");
        }
        index += static_cast<std::size_t>(w) * radix;
        radix *= static_cast<std::size_t>(word_dim);
    }
    return index;
}

Program decode_program(std::size_t index, int slots, int word_dim) {
    if (slots < 1) {
        throw Error("decode_program: slots must be >= 1");
    }
    if (index >= checked_pow(word_dim, slots)) {
        throw IndexOutOfRange("decode_program: index " + std::to_string(index) +
                              " outside [0, M^k)");
    }
    Program p;
    p.words.reserve(slots);
    std::size_t rest = index;
    for (int i = 0; i < slots; ++i) {
        p.words.push_back(static_cast<int>(rest % static_cast<std::size_t>(word_dim)));
        rest /= static_cast<std::size_t>(word_dim);
    }
    while (!p.words.empty() && p.words.back() == 0) {
        p.words.pop_back();
    }
    return p;
}

StateVector make_product_state(std::size_t program_index, const std::vector<cxd>& data,
                               int slots, int word_dim) {
    if (data.empty()) {
        throw Error("make_product_state: data register must be nonempty");
    }
    const std::size_t prog_dim = checked_pow(word_dim, slots);
    if (program_index >= prog_dim) {
        throw IndexOutOfRange("make_product_state: program index out of range");
    }
    const double n = vector_norm(data);
    if (std::abs(n - 1.0) > kNormEps) {
        throw NotNormalized("make_product_state: data norm deviates from 1 by " +
                            std::to_string(std::abs(n - 1.0)));
    }
    StateVector state;
    state.slots = slots;
    state.word_dim = word_dim;
    state.data_dim = static_cast<int>(data.size());
    state.amps.assign(prog_dim * data.size(), cxd{0.0, 0.0});
    const std::size_t base = program_index * data.size();
    for (std::size_t d = 0; d < data.size(); ++d) {
        state.amps[base + d] = data[d];
    }
    return state;
}

SchmidtResult schmidt_split(const std::vector<cxd>& amps, std::size_t left_dim,
                            int right_dim, Tolerance tol) {
    if (right_dim < 1 || left_dim < 1 ||
        amps.size() != left_dim * static_cast<std::size_t>(right_dim)) {
        throw DimensionMismatch("schmidt_split: amplitude count does not match cut");
    }
    Eigen::MatrixXcd a(static_cast<Eigen::Index>(left_dim), right_dim);
    for (std::size_t p = 0; p < left_dim; ++p) {
        for (int d = 0; d < right_dim; ++d) {
            a(static_cast<Eigen::Index>(p), d) = amps[p * right_dim + d];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();

    SchmidtResult out;
    out.leading_singular = sv.size() > 0 ? sv(0) : 0.0;
    out.second_singular = sv.size() > 1 ? sv(1) : 0.0;
    out.product = out.second_singular <= tol.eps;

    Eigen::VectorXcd u = svd.matrixU().col(0);
    Eigen::VectorXcd v = svd.matrixV().col(0);
    // a ~ sigma_1 * u * v^H, so the data factor is conj(v).
    cxd phase{1.0, 0.0};
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        const double mag = std::abs(u(i));
        if (mag > kZeroAmplitude) {
            phase = u(i) / mag;
            break;
        }
    }
    out.program_part.resize(left_dim);
    out.data_part.resize(right_dim);
    for (std::size_t i = 0; i < left_dim; ++i) {
        out.program_part[i] = u(static_cast<Eigen::Index>(i)) * std::conj(phase);
    }
    for (int i = 0; i < right_dim; ++i) {
        out.data_part[i] = std::conj(v(i)) * phase;
    }
    return out;
}

SchmidtResult schmidt_check(const StateVector& state, Tolerance tol) {
    return schmidt_split(state.amps, state.program_dim(), state.data_dim, tol);
}

double vector_norm(const std::vector<cxd>& v) {
    double sq = 0.0;
    for (const cxd& z : v) {
        sq += std::norm(z);
    }
    return std::sqrt(sq);
}

cxd inner_product(const std::vector<cxd>& a, const std::vector<cxd>& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("inner_product: lengths differ");
    }
    cxd acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double max_abs_diff(const std::vector<cxd>& a, const std::vector<cxd>& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("max_abs_diff: lengths differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

} // namespace pqga
