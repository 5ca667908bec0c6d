// tct: theorem-carrying-transaction toolkit
// Copyright 2026 The tct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tct {

// Supported EVM opcode subset, yellow-paper byte values.
enum Opcode : uint8_t {
    OP_STOP = 0x00,
    OP_ADD = 0x01,
    OP_MUL = 0x02,
    OP_SUB = 0x03,
    OP_DIV = 0x04,
    OP_MOD = 0x06,
    OP_LT = 0x10,
    OP_GT = 0x11,
    OP_EQ = 0x14,
    OP_ISZERO = 0x15,
    OP_AND = 0x16,
    OP_OR = 0x17,
    OP_NOT = 0x19,
    OP_SHA3 = 0x20,
    OP_ORIGIN = 0x32,
    OP_CALLER = 0x33,
    OP_CALLDATALOAD = 0x35,
    OP_CALLDATASIZE = 0x36,
    OP_POP = 0x50,
    OP_MLOAD = 0x51,
    OP_MSTORE = 0x52,
    OP_SLOAD = 0x54,
    OP_SSTORE = 0x55,
    OP_JUMP = 0x56,
    OP_JUMPI = 0x57,
    OP_PC = 0x58,
    OP_JUMPDEST = 0x5b,
    OP_PUSH1 = 0x60,   // PUSH1..PUSH32 = 0x60..0x7f
    OP_PUSH32 = 0x7f,
    OP_DUP1 = 0x80,    // DUP1..DUP16 = 0x80..0x8f
    OP_DUP16 = 0x8f,
    OP_SWAP1 = 0x90,   // SWAP1..SWAP16 = 0x90..0x9f
    OP_SWAP16 = 0x9f,
    OP_CALL = 0xf1,
    OP_CALLCODE = 0xf2,
    OP_RETURN = 0xf3,
    OP_DELEGATECALL = 0xf4,
    OP_STATICCALL = 0xfa,
    OP_REVERT = 0xfd,
};

inline bool is_push(uint8_t op) { return op >= OP_PUSH1 && op <= OP_PUSH32; }
inline bool is_dup(uint8_t op) { return op >= OP_DUP1 && op <= OP_DUP16; }
inline bool is_swap(uint8_t op) { return op >= OP_SWAP1 && op <= OP_SWAP16; }
inline unsigned push_size(uint8_t op) { return op - OP_PUSH1 + 1; }

/// Mnemonic for a supported opcode byte, or nullopt for bytes outside the subset.
std::optional<std::string> opcode_name(uint8_t op);

/// Opcode byte for a mnemonic ("PUSH3", "SLOAD", ...), or nullopt if unknown.
std::optional<uint8_t> opcode_from_name(std::string_view name);

}  // namespace tct
