// tct: theorem-carrying-transaction toolkit
// Copyright 2026 The tct Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tct/opcodes.hpp"

#include <map>

namespace tct {

namespace {

const std::map<uint8_t, std::string>& byte_to_name() {
    static const std::map<uint8_t, std::string> table = [] {
        std::map<uint8_t, std::string> t{
            {OP_STOP, "STOP"},
            {OP_ADD, "ADD"},
            {OP_MUL, "MUL"},
            {OP_SUB, "SUB"},
            {OP_DIV, "DIV"},
            {OP_MOD, "MOD"},
            {OP_LT, "LT"},
            {OP_GT, "GT"},
            {OP_EQ, "EQ"},
            {OP_ISZERO, "ISZERO"},
            {OP_AND, "AND"},
            {OP_OR, "OR"},
            {OP_NOT, "NOT"},
            {OP_SHA3, "SHA3"},
            {OP_ORIGIN, "ORIGIN"},
            {OP_CALLER, "CALLER"},
            {OP_CALLDATALOAD, "CALLDATALOAD"},
            {OP_CALLDATASIZE, "CALLDATASIZE"},
            {OP_POP, "POP"},
            {OP_MLOAD, "MLOAD"},
            {OP_MSTORE, "MSTORE"},
            {OP_SLOAD, "SLOAD"},
            {OP_SSTORE, "SSTORE"},
            {OP_JUMP, "JUMP"},
            {OP_JUMPI, "JUMPI"},
            {OP_PC, "PC"},
            {OP_JUMPDEST, "JUMPDEST"},
            {OP_CALL, "CALL"},
            {OP_CALLCODE, "CALLCODE"},
            {OP_RETURN, "RETURN"},
            {OP_DELEGATECALL, "DELEGATECALL"},
            {OP_STATICCALL, "STATICCALL"},
            {OP_REVERT, "REVERT"},
        };
        for (unsigned i = 0; i < 32; ++i) t[uint8_t(OP_PUSH1 + i)] = "PUSH" + std::to_string(i + 1);
        for (unsigned i = 0; i < 16; ++i) t[uint8_t(OP_DUP1 + i)] = "DUP" + std::to_string(i + 1);
        for (unsigned i = 0; i < 16; ++i) t[uint8_t(OP_SWAP1 + i)] = "SWAP" + std::to_string(i + 1);
        return t;
    }();
    return table;
}

const std::map<std::string, uint8_t, std::less<>>& name_to_byte() {
    static const std::map<std::string, uint8_t, std::less<>> table = [] {
        std::map<std::string, uint8_t, std::less<>> t;
        for (const auto& [op, name] : byte_to_name()) t[name] = op;
        return t;
    }();
    return table;
}

}  // namespace

std::optional<std::string> opcode_name(uint8_t op) {
    auto it = byte_to_name().find(op);
    if (it == byte_to_name().end()) return std::nullopt;
    return it->second;
}

std::optional<uint8_t> opcode_from_name(std::string_view name) {
    auto it = name_to_byte().find(name);
    if (it == name_to_byte().end()) return std::nullopt;
    return it->second;
}

}  // namespace tct
