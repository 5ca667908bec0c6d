// tct: theorem-carrying-transaction toolkit
// Copyright 2026 The tct Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tct/keccak.hpp"

#include <cstring>

namespace tct {

namespace {

constexpr uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

constexpr unsigned kRotation[25] = {
    0,  1,  62, 28, 27,   // x = 0..4, y = 0
    36, 44, 6,  55, 20,   // y = 1
    3,  10, 43, 25, 39,   // y = 2
    41, 45, 15, 21, 8,    // y = 3
    18, 2,  61, 56, 14,   // y = 4
};

inline uint64_t rotl(uint64_t x, unsigned n) {
    return n == 0 ? x : (x << n) | (x >> (64 - n));
}

void keccak_f1600(uint64_t s[25]) {
    for (int round = 0; round < 24; ++round) {
        // theta
        uint64_t c[5], d[5];
        for (int x = 0; x < 5; ++x)
            c[x] = s[x] ^ s[x + 5] ^ s[x + 10] ^ s[x + 15] ^ s[x + 20];
        for (int x = 0; x < 5; ++x) d[x] = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y) s[x + 5 * y] ^= d[x];

        // rho + pi
        uint64_t b[25];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[y + 5 * ((2 * x + 3 * y) % 5)] = rotl(s[x + 5 * y], kRotation[x + 5 * y]);

        // chi
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                s[x + 5 * y] = b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);

        // iota
        s[0] ^= kRoundConstants[round];
    }
}

}  // namespace

Hash32 keccak256(std::span<const uint8_t> data) {
    constexpr size_t rate = 136;  // 1088-bit rate for 256-bit output
    uint64_t state[25] = {};

    size_t offset = 0;
    uint8_t block[rate];
    while (data.size() - offset >= rate) {
        std::memcpy(block, data.data() + offset, rate);
        for (size_t i = 0; i < rate / 8; ++i) {
            uint64_t lane;
            std::memcpy(&lane, block + 8 * i, 8);  // little-endian host assumed
            state[i] ^= lane;
        }
        keccak_f1600(state);
        offset += rate;
    }

    // Final block: original Keccak domain byte 0x01, then pad10*1.
    std::memset(block, 0, rate);
    size_t tail = data.size() - offset;
    if (tail != 0) std::memcpy(block, data.data() + offset, tail);
    block[tail] = 0x01;
    block[rate - 1] |= 0x80;
    for (size_t i = 0; i < rate / 8; ++i) {
        uint64_t lane;
        std::memcpy(&lane, block + 8 * i, 8);
        state[i] ^= lane;
    }
    keccak_f1600(state);

    Hash32 out;
    for (size_t i = 0; i < 4; ++i)
        std::memcpy(out.bytes.data() + 8 * i, &state[i], 8);
    return out;
}

Hash32 keccak256(std::string_view text) {
    return keccak256(std::span(reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

}  // namespace tct
