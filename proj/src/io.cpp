#include "pqga/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "pqga/errors.hpp"

namespace pqga {

namespace {

using nlohmann::json;

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw Error("write failed for " + path);
    }
}

json parse_json(const std::string& path) {
    try {
        return json::parse(read_text(path));
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

cxd entry_from_json(const json& pair, const std::string& path) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
        throw ParseError(path + ": entries must be [re, im] pairs");
    }
    return cxd{pair[0].get<double>(), pair[1].get<double>()};
}

json entry_to_json(cxd z) {
    return json::array({z.real(), z.imag()});
}

ComplexMatrix matrix_from_json(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("rows") ||
        !j["dim"].is_number_integer() || !j["rows"].is_array()) {
        throw ParseError(path + ": expected {\"dim\", \"rows\"}");
    }
    const int dim = j["dim"].get<int>();
    if (dim < 1 || j["rows"].size() != static_cast<std::size_t>(dim)) {
        throw ParseError(path + ": row count does not match dim");
    }
    std::vector<cxd> flat;
    flat.reserve(static_cast<std::size_t>(dim) * dim);
    for (const json& row : j["rows"]) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
            throw ParseError(path + ": matrix must be square");
        }
        for (const json& pair : row) {
            flat.push_back(entry_from_json(pair, path));
        }
    }
    try {
        return ComplexMatrix(dim, std::move(flat));
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.dim(); ++c) {
            row.push_back(entry_to_json(m.at(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.dim()}, {"rows", std::move(rows)}};
}

} // namespace

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string format_amplitude(cxd z) {
    return format_real(z.real()) + " " + format_real(z.imag());
}

ComplexMatrix parse_matrix_file(const std::string& path) {
    return matrix_from_json(parse_json(path), path);
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    write_text(path, matrix_to_json(m).dump(2) + "\n");
}

std::vector<cxd> parse_state_file(const std::string& path) {
    const json j = parse_json(path);
    if (!j.is_object() || !j.contains("dim") || !j.contains("amps") ||
        !j["dim"].is_number_integer() || !j["amps"].is_array()) {
        throw ParseError(path + ": expected {\"dim\", \"amps\"}");
    }
    const int dim = j["dim"].get<int>();
    if (dim < 1 || j["amps"].size() != static_cast<std::size_t>(dim)) {
        throw ParseError(path + ": amplitude count does not match dim");
    }
    std::vector<cxd> amps;
    amps.reserve(static_cast<std::size_t>(dim));
    for (const json& pair : j["amps"]) {
        amps.push_back(entry_from_json(pair, path));
    }
    return amps;
}

void write_state_file(const std::string& path, const std::vector<cxd>& amps) {
    json list = json::array();
    for (cxd a : amps) {
        list.push_back(entry_to_json(a));
    }
    const json j{{"dim", amps.size()}, {"amps", std::move(list)}};
    write_text(path, j.dump(2) + "\n");
}

GateSet parse_gateset_manifest(const std::string& path) {
    const json j = parse_json(path);
    if (!j.is_object() || !j.contains("n_qubits") || !j.contains("gates") ||
        !j["n_qubits"].is_number_integer() || !j["gates"].is_array()) {
        throw ParseError(path + ": expected {\"n_qubits\", \"gates\"}");
    }
    const int n_qubits = j["n_qubits"].get<int>();
    std::vector<ComplexMatrix> gates;
    std::vector<std::string> names;
    for (const json& g : j["gates"]) {
        if (!g.is_object() || !g.contains("name") || !g.contains("matrix") ||
            !g["name"].is_string()) {
            throw ParseError(path + ": each gate needs {\"name\", \"matrix\"}");
        }
        names.push_back(g["name"].get<std::string>());
        gates.push_back(matrix_from_json(g["matrix"], path));
    }
    return make_gate_set(n_qubits, std::move(gates), std::move(names));
}

void write_gateset_manifest(const std::string& path, const GateSet& gs) {
    json list = json::array();
    for (int w = 0; w < gs.size(); ++w) {
        list.push_back(json{{"name", gs.names[static_cast<std::size_t>(w)]},
                            {"matrix", matrix_to_json(gs.gate(w))}});
    }
    const json j{{"n_qubits", gs.n_qubits}, {"gates", std::move(list)}};
    write_text(path, j.dump(2) + "\n");
}

GateSet resolve_gateset(const std::string& name_or_path) {
    if (name_or_path == "std-1q") {
        return standard_universal_set(1);
    }
    if (name_or_path == "std-2q") {
        return standard_universal_set(2);
    }
    return parse_gateset_manifest(name_or_path);
}

LoadedProgram load_program_file(const std::string& path) {
    const json j = parse_json(path);
    if (!j.is_object() || !j.contains("gateset") || !j.contains("capacity") ||
        !j.contains("words") || !j["gateset"].is_string() ||
        !j["capacity"].is_number_integer() || !j["words"].is_array()) {
        throw ParseError(path + ": expected {\"gateset\", \"capacity\", \"words\"}");
    }
    LoadedProgram loaded;
    loaded.gateset_name = j["gateset"].get<std::string>();
    loaded.capacity = j["capacity"].get<int>();
    loaded.gs = resolve_gateset(loaded.gateset_name);
    for (const json& w : j["words"]) {
        int index = -1;
        if (w.is_number_integer()) {
            index = w.get<int>();
        } else if (w.is_string()) {
            try {
                index = loaded.gs.index_of(w.get<std::string>());
            } catch (const IndexOutOfRange&) {
                throw ParseError(path + ": unknown gate name " + w.get<std::string>());
            }
        } else {
            throw ParseError(path + ": words must be gate indices or names");
        }
        if (index < 0 || index >= loaded.gs.size()) {
            throw ParseError(path + ": word index out of range");
        }
        loaded.program.words.push_back(index);
    }
    if (loaded.capacity < 1 || loaded.program.length() > loaded.capacity) {
        throw ParseError(path + ": program does not fit the stated capacity");
    }
    return loaded;
}

void write_program_file(const std::string& path, const std::string& gateset_name,
                        int capacity, const Program& p, const GateSet& gs) {
    json words = json::array();
    for (int w : p.words) {
        if (w < 0 || w >= gs.size()) {
            throw IndexOutOfRange("write_program_file: word index out of range");
        }
        words.push_back(gs.names[static_cast<std::size_t>(w)]);
    }
    const json j{{"gateset", gateset_name}, {"capacity", capacity}, {"words", std::move(words)}};
    write_text(path, j.dump(2) + "\n");
}

} // namespace pqga
