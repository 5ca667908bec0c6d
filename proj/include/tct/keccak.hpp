// tct: theorem-carrying-transaction toolkit
// Copyright 2026 The tct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string_view>

#include "tct/words.hpp"

namespace tct {

/// Keccak-256 with the original Keccak padding (0x01), the variant used by
/// Ethereum. This is not SHA3-256, which pads with 0x06.
Hash32 keccak256(std::span<const uint8_t> data);
Hash32 keccak256(std::string_view text);

}  // namespace tct
