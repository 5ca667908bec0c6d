// tct: theorem-carrying-transaction toolkit
// Copyright 2026 The tct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tct {

using Bytes = std::vector<uint8_t>;

/// 256-bit unsigned machine word with EVM wraparound semantics.
/// All arithmetic is reduced modulo 2^256. Limbs are little-endian
/// (limb[0] holds the least significant 64 bits).
struct Word256 {
    std::array<uint64_t, 4> limb{};

    constexpr Word256() = default;
    constexpr Word256(uint64_t v) : limb{v, 0, 0, 0} {}

    static Word256 from_limbs(uint64_t l0, uint64_t l1, uint64_t l2, uint64_t l3) {
        Word256 w;
        w.limb = {l0, l1, l2, l3};
        return w;
    }

    /// 2^k for 0 <= k <= 255.
    static Word256 pow2(unsigned k);

    static Word256 from_be_bytes(std::span<const uint8_t> bytes);  // up to 32 bytes
    static Word256 from_hex(std::string_view s);                   // optional 0x prefix
    static Word256 from_dec(std::string_view s);

    void to_be_bytes(std::span<uint8_t, 32> out) const;
    std::array<uint8_t, 32> be_bytes() const;

    std::string to_hex() const;  // 0x-prefixed, minimal digits
    std::string to_dec() const;

    bool is_zero() const { return (limb[0] | limb[1] | limb[2] | limb[3]) == 0; }
    uint64_t low64() const { return limb[0]; }
    bool fits_u64() const { return (limb[1] | limb[2] | limb[3]) == 0; }

    /// Big-endian byte index: byte(0) is the most significant byte.
    uint8_t byte(size_t i) const;

    friend bool operator==(const Word256&, const Word256&) = default;
};

bool operator<(const Word256& a, const Word256& b);
inline bool operator>(const Word256& a, const Word256& b) { return b < a; }
inline bool operator<=(const Word256& a, const Word256& b) { return !(b < a); }
inline bool operator>=(const Word256& a, const Word256& b) { return !(a < b); }

Word256 operator+(const Word256& a, const Word256& b);
Word256 operator-(const Word256& a, const Word256& b);
Word256 operator*(const Word256& a, const Word256& b);
Word256 operator&(const Word256& a, const Word256& b);
Word256 operator|(const Word256& a, const Word256& b);
Word256 operator~(const Word256& a);
Word256 operator<<(const Word256& a, unsigned n);
Word256 operator>>(const Word256& a, unsigned n);

/// EVM DIV/MOD; division by zero yields zero.
Word256 evm_div(const Word256& a, const Word256& b);
Word256 evm_mod(const Word256& a, const Word256& b);

inline Word256 evm_add(const Word256& a, const Word256& b) { return a + b; }
inline Word256 evm_sub(const Word256& a, const Word256& b) { return a - b; }
inline Word256 evm_mul(const Word256& a, const Word256& b) { return a * b; }

/// VM-layer comparison results (0/1 words, EVM convention).
inline Word256 word_of_bool(bool b) { return Word256(b ? 1u : 0u); }

/// 20-byte account identifier. Embeds into Word256 as the low 20 bytes.
struct Address {
    std::array<uint8_t, 20> bytes{};

    static Address from_word(const Word256& w);  // keeps the low 20 bytes
    static Address from_hex(std::string_view s);

    Word256 to_word() const;
    std::string to_hex() const;  // 0x + 40 hex digits

    bool is_zero() const;

    friend bool operator==(const Address&, const Address&) = default;
    friend auto operator<=>(const Address&, const Address&) = default;
};

/// 32-byte digest, produced by keccak256.
struct Hash32 {
    std::array<uint8_t, 32> bytes{};

    static Hash32 from_hex(std::string_view s);
    std::string to_hex() const;  // 0x + 64 hex digits
    Word256 to_word() const { return Word256::from_be_bytes(bytes); }

    friend bool operator==(const Hash32&, const Hash32&) = default;
    friend auto operator<=>(const Hash32&, const Hash32&) = default;
};

/// Big-endian, left-zero-padded 32-byte layouts.
std::array<uint8_t, 32> pad32(const Word256& w);
std::array<uint8_t, 32> pad32(const Address& a);

void append_bytes(Bytes& out, std::span<const uint8_t> data);

std::string hex_encode(std::span<const uint8_t> data);  // no prefix
Bytes hex_decode(std::string_view s);                   // optional 0x prefix

}  // namespace tct
