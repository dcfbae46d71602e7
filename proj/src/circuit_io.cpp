#include "qlstm/circuit_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qlstm {

namespace {

std::string format_angle(double angle) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", angle);
    return buf;
}

GateOp parse_gate_token(const std::string &token, std::size_t line_no) {
    const std::size_t open = token.find('(');
    if (open == std::string::npos || token.back() != ')') {
        throw ParseError("malformed gate token '" + token + "'", line_no);
    }
    GateKind kind;
    try {
        kind = gate_kind_from_name(token.substr(0, open));
    } catch (const UsageError &e) {
        throw ParseError(e.what(), line_no);
    }
    const std::string body = token.substr(open + 1, token.size() - open - 2);

    std::string targets_part = body;
    std::string angle_part;
    if (const std::size_t semi = body.find(';'); semi != std::string::npos) {
        targets_part = body.substr(0, semi);
        angle_part = body.substr(semi + 1);
    }

    GateOp gate;
    gate.kind = kind;
    gate.n_targets = 0;
    std::stringstream ts(targets_part);
    std::string item;
    while (std::getline(ts, item, ',')) {
        std::size_t consumed = 0;
        int q = -1;
        try {
            q = std::stoi(item, &consumed);
        } catch (const std::exception &) {
            throw ParseError("bad target '" + item + "' in '" + token + "'", line_no);
        }
        if (consumed != item.size() || q < 0) {
            throw ParseError("bad target '" + item + "' in '" + token + "'", line_no);
        }
        if (gate.n_targets >= 2) {
            throw ParseError("too many targets in '" + token + "'", line_no);
        }
        gate.targets[static_cast<std::size_t>(gate.n_targets++)] = q;
    }
    if (gate.n_targets == 0) {
        throw ParseError("no targets in '" + token + "'", line_no);
    }

    const bool wants_angle = gate_is_rotation(kind);
    if (wants_angle != !angle_part.empty()) {
        throw ParseError(std::string(gate_name(kind)) +
                             (wants_angle ? " requires an angle" : " takes no angle") + " in '" +
                             token + "'",
                         line_no);
    }
    if (wants_angle) {
        std::size_t consumed = 0;
        try {
            gate.angle = std::stod(angle_part, &consumed);
        } catch (const std::exception &) {
            throw ParseError("bad angle '" + angle_part + "' in '" + token + "'", line_no);
        }
        if (consumed != angle_part.size()) {
            throw ParseError("bad angle '" + angle_part + "' in '" + token + "'", line_no);
        }
    }
    return gate;
}

} // namespace

std::string circuit_to_text(const Circuit &circuit) {
    std::string out;
    for (const auto &layer : circuit.layers) {
        bool first = true;
        for (const GateOp &gate : layer) {
            if (!first) {
                out += ' ';
            }
            first = false;
            out += gate_name(gate.kind);
            out += '(';
            out += std::to_string(gate.targets[0]);
            if (gate.n_targets == 2) {
                out += ',';
                out += std::to_string(gate.targets[1]);
            }
            if (gate_is_rotation(gate.kind)) {
                out += ';';
                out += format_angle(gate.angle);
            }
            out += ')';
        }
        out += '\n';
    }
    return out;
}

Circuit parse_circuit_text(const std::string &text) {
    std::vector<std::vector<GateOp>> layers;
    int max_target = -1;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const std::size_t first_char = line.find_first_not_of(" \t");
        if (first_char == std::string::npos || line[first_char] == '#') {
            continue;
        }
        std::vector<GateOp> layer;
        std::stringstream ls(line);
        std::string token;
        while (ls >> token) {
            GateOp gate = parse_gate_token(token, line_no);
            for (int i = 0; i < gate.n_targets; ++i) {
                max_target = std::max(max_target, gate.targets[static_cast<std::size_t>(i)]);
            }
            layer.push_back(gate);
        }
        layers.push_back(std::move(layer));
    }
    if (layers.empty()) {
        throw ParseError("circuit text contains no layers", line_no);
    }

    Circuit circuit(std::max(max_target + 1, kMinQubits));
    for (auto &layer : layers) {
        try {
            circuit.add_layer(std::move(layer));
        } catch (const UsageError &e) {
            throw ParseError(e.what(), 0);
        }
    }
    return circuit;
}

Circuit read_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open circuit file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_circuit_text(buffer.str());
}

void write_circuit_file(const Circuit &circuit, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write circuit file: " + path);
    }
    out << circuit_to_text(circuit);
}

} // namespace qlstm
