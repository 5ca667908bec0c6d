// tct: theorem-carrying-transaction toolkit
// Copyright 2026 The tct Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tct/assembler.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "tct/opcodes.hpp"

namespace tct {

namespace {

struct Line {
    uint8_t opcode = 0;
    Bytes immediate;        // for PUSHn without label ref
    std::string label_ref;  // for PUSHn @label
    size_t offset = 0;      // code offset, filled in pass 1
    int lineno = 0;
};

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Bytes assemble(std::string_view source) {
    std::vector<Line> lines;
    std::map<std::string, size_t> labels;

    // Pass 1: parse, compute offsets, collect label definitions.
    size_t offset = 0;
    int lineno = 0;
    std::istringstream in{std::string(source)};
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        if (auto sc = raw.find(';'); sc != std::string::npos) raw.resize(sc);
        std::string text = trim(raw);
        while (!text.empty()) {
            if (auto colon = text.find(':');
                colon != std::string::npos && text.find_first_of(" \t") > colon) {
                std::string name = trim(text.substr(0, colon));
                if (labels.count(name))
                    throw AsmError("duplicate label '" + name + "' at line " + std::to_string(lineno));
                labels[name] = offset;
                text = trim(text.substr(colon + 1));
                continue;
            }
            break;
        }
        if (text.empty()) continue;

        std::istringstream ls(text);
        std::string mnemonic, arg;
        ls >> mnemonic >> arg;

        auto op = opcode_from_name(mnemonic);
        if (!op) throw UnknownMnemonic(mnemonic + " at line " + std::to_string(lineno));

        Line line;
        line.opcode = *op;
        line.offset = offset;
        line.lineno = lineno;
        if (is_push(*op)) {
            unsigned width = push_size(*op);
            if (arg.empty())
                throw AsmError(mnemonic + " needs an immediate at line " + std::to_string(lineno));
            if (arg[0] == '@') {
                line.label_ref = arg.substr(1);
            } else {
                Bytes raw_imm = hex_decode(arg);
                if (raw_imm.size() != width)
                    throw ImmediateSizeMismatch(mnemonic + " expects " + std::to_string(width) +
                                                " bytes, got " + std::to_string(raw_imm.size()) +
                                                " at line " + std::to_string(lineno));
                line.immediate = std::move(raw_imm);
            }
            offset += 1 + width;
        } else {
            if (!arg.empty())
                throw AsmError(mnemonic + " takes no immediate at line " + std::to_string(lineno));
            offset += 1;
        }
        lines.push_back(std::move(line));
    }

    // Pass 2: patch label references, emit bytes.
    Bytes code;
    code.reserve(offset);
    for (const Line& line : lines) {
        code.push_back(line.opcode);
        if (!is_push(line.opcode)) continue;
        unsigned width = push_size(line.opcode);
        if (!line.label_ref.empty()) {
            auto it = labels.find(line.label_ref);
            if (it == labels.end())
                throw UnresolvedLabel(line.label_ref + " at line " + std::to_string(line.lineno));
            size_t target = it->second;
            if (width < 8 && target >= (size_t{1} << (8 * width)))
                throw ImmediateSizeMismatch("label '" + line.label_ref + "' offset " +
                                            std::to_string(target) + " does not fit PUSH" +
                                            std::to_string(width));
            for (unsigned i = 0; i < width; ++i)
                code.push_back(uint8_t(target >> (8 * (width - 1 - i))));
        } else {
            append_bytes(code, line.immediate);
        }
    }

    // Every JUMP/JUMPI label reference must land on a JUMPDEST. Direct
    // PUSH-before-JUMP patterns are the only form the assembler emits, so
    // check label targets.
    for (const auto& [name, target] : labels) {
        bool referenced = false;
        for (const Line& line : lines)
            if (line.label_ref == name) referenced = true;
        if (referenced && (target >= code.size() || code[target] != OP_JUMPDEST))
            throw AsmError("label '" + name + "' does not point at a JUMPDEST");
    }
    return code;
}

std::string disassemble(std::span<const uint8_t> code) {
    std::ostringstream out;
    size_t pc = 0;
    while (pc < code.size()) {
        uint8_t op = code[pc];
        auto name = opcode_name(op);
        if (!name) throw AsmError("unsupported opcode byte 0x" + hex_encode({&op, 1}) +
                                  " at offset " + std::to_string(pc));
        out << *name;
        ++pc;
        if (is_push(op)) {
            unsigned width = push_size(op);
            if (pc + width > code.size()) throw AsmError("truncated PUSH immediate");
            out << " 0x" << hex_encode(code.subspan(pc, width));
            pc += width;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace tct
