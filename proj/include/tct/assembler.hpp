// tct: theorem-carrying-transaction toolkit
// Copyright 2026 The tct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tct/words.hpp"

namespace tct {

// Line-oriented assembly: `;` starts a comment, `name:` defines a label,
// a line is `MNEMONIC [immediate]` where the immediate is `0x...` hex or
// `@label` for a PUSH whose width must fit the patched code offset.

struct AsmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownMnemonic : AsmError {
    explicit UnknownMnemonic(const std::string& what) : AsmError("unknown mnemonic: " + what) {}
};
struct UnresolvedLabel : AsmError {
    explicit UnresolvedLabel(const std::string& what) : AsmError("unresolved label: " + what) {}
};
struct ImmediateSizeMismatch : AsmError {
    explicit ImmediateSizeMismatch(const std::string& what)
        : AsmError("immediate size mismatch: " + what) {}
};

/// Assembles mnemonic text into bytecode. Labels are resolved in a second
/// pass, so forward references are fine.
Bytes assemble(std::string_view source);

/// Debugging helper; one instruction per line, `0x`-hex immediates.
std::string disassemble(std::span<const uint8_t> code);

}  // namespace tct
