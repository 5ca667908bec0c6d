// tct: theorem-carrying-transaction toolkit
// Copyright 2026 The tct Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tct/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace tct {

namespace {

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string_view strip_0x(std::string_view s) {
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) return s.substr(2);
    return s;
}

}  // namespace

Word256 Word256::pow2(unsigned k) {
    Word256 w;
    w.limb[k / 64] = uint64_t{1} << (k % 64);
    return w;
}

Word256 Word256::from_be_bytes(std::span<const uint8_t> bytes) {
    if (bytes.size() > 32) throw std::invalid_argument("Word256: more than 32 bytes");
    Word256 w;
    size_t n = bytes.size();
    for (size_t i = 0; i < n; ++i) {
        size_t bit = 8 * (n - 1 - i);
        w.limb[bit / 64] |= uint64_t{bytes[i]} << (bit % 64);
    }
    return w;
}

Word256 Word256::from_hex(std::string_view s) {
    s = strip_0x(s);
    if (s.empty() || s.size() > 64) throw std::invalid_argument("Word256: bad hex literal");
    Word256 w;
    size_t n = s.size();
    for (size_t i = 0; i < n; ++i) {
        int v = hex_nibble(s[i]);
        if (v < 0) throw std::invalid_argument("Word256: bad hex digit");
        size_t bit = 4 * (n - 1 - i);
        w.limb[bit / 64] |= uint64_t(v) << (bit % 64);
    }
    return w;
}

Word256 Word256::from_dec(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Word256: empty decimal literal");
    Word256 w;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("Word256: bad decimal digit");
        w = w * Word256(10) + Word256(uint64_t(c - '0'));
    }
    return w;
}

void Word256::to_be_bytes(std::span<uint8_t, 32> out) const {
    for (size_t i = 0; i < 32; ++i) {
        size_t bit = 8 * (31 - i);
        out[i] = uint8_t(limb[bit / 64] >> (bit % 64));
    }
}

std::array<uint8_t, 32> Word256::be_bytes() const {
    std::array<uint8_t, 32> out{};
    to_be_bytes(out);
    return out;
}

uint8_t Word256::byte(size_t i) const {
    size_t bit = 8 * (31 - i);
    return uint8_t(limb[bit / 64] >> (bit % 64));
}

std::string Word256::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    bool started = false;
    for (int i = 3; i >= 0; --i) {
        for (int shift = 60; shift >= 0; shift -= 4) {
            int v = int(limb[i] >> shift) & 0xf;
            if (v != 0) started = true;
            if (started) s.push_back(digits[v]);
        }
    }
    if (!started) s = "0";
    return "0x" + s;
}

std::string Word256::to_dec() const {
    if (is_zero()) return "0";
    Word256 v = *this;
    std::string s;
    while (!v.is_zero()) {
        Word256 q = evm_div(v, Word256(10));
        Word256 r = v - q * Word256(10);
        s.push_back(char('0' + r.low64()));
        v = q;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

bool operator<(const Word256& a, const Word256& b) {
    for (int i = 3; i >= 0; --i) {
        if (a.limb[i] != b.limb[i]) return a.limb[i] < b.limb[i];
    }
    return false;
}

Word256 operator+(const Word256& a, const Word256& b) {
    Word256 r;
    unsigned __int128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 s = (unsigned __int128)a.limb[i] + b.limb[i] + carry;
        r.limb[i] = uint64_t(s);
        carry = s >> 64;
    }
    return r;
}

Word256 operator-(const Word256& a, const Word256& b) {
    Word256 r;
    uint64_t borrow = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 sub = (unsigned __int128)b.limb[i] + borrow;
        unsigned __int128 ai = a.limb[i];
        r.limb[i] = uint64_t(ai - sub);
        borrow = ai < sub ? 1 : 0;
    }
    return r;
}

Word256 operator*(const Word256& a, const Word256& b) {
    uint64_t r[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 carry = 0;
        for (int j = 0; i + j < 4; ++j) {
            unsigned __int128 cur =
                (unsigned __int128)a.limb[i] * b.limb[j] + r[i + j] + carry;
            r[i + j] = uint64_t(cur);
            carry = cur >> 64;
        }
    }
    return Word256::from_limbs(r[0], r[1], r[2], r[3]);
}

Word256 operator&(const Word256& a, const Word256& b) {
    Word256 r;
    for (int i = 0; i < 4; ++i) r.limb[i] = a.limb[i] & b.limb[i];
    return r;
}

Word256 operator|(const Word256& a, const Word256& b) {
    Word256 r;
    for (int i = 0; i < 4; ++i) r.limb[i] = a.limb[i] | b.limb[i];
    return r;
}

Word256 operator~(const Word256& a) {
    Word256 r;
    for (int i = 0; i < 4; ++i) r.limb[i] = ~a.limb[i];
    return r;
}

Word256 operator<<(const Word256& a, unsigned n) {
    if (n >= 256) return Word256();
    Word256 r;
    unsigned limbs = n / 64, bits = n % 64;
    for (int i = 3; i >= 0; --i) {
        uint64_t v = 0;
        int src = i - int(limbs);
        if (src >= 0) {
            v = a.limb[src] << bits;
            if (bits != 0 && src - 1 >= 0) v |= a.limb[src - 1] >> (64 - bits);
        }
        r.limb[i] = v;
    }
    return r;
}

Word256 operator>>(const Word256& a, unsigned n) {
    if (n >= 256) return Word256();
    Word256 r;
    unsigned limbs = n / 64, bits = n % 64;
    for (int i = 0; i < 4; ++i) {
        uint64_t v = 0;
        size_t src = i + limbs;
        if (src < 4) {
            v = a.limb[src] >> bits;
            if (bits != 0 && src + 1 < 4) v |= a.limb[src + 1] << (64 - bits);
        }
        r.limb[i] = v;
    }
    return r;
}

// Shift-subtract long division. Fine at this project's scale: division shows
// up in selector dispatch and decimal printing, never in hot loops.
Word256 evm_div(const Word256& a, const Word256& b) {
    if (b.is_zero()) return Word256();
    if (a < b) return Word256();
    if (b.fits_u64() && a.fits_u64()) return Word256(a.low64() / b.low64());
    Word256 quotient, remainder;
    for (int i = 255; i >= 0; --i) {
        remainder = remainder << 1;
        remainder.limb[0] |= (a.limb[i / 64] >> (i % 64)) & 1;
        if (!(remainder < b)) {
            remainder = remainder - b;
            quotient.limb[i / 64] |= uint64_t{1} << (i % 64);
        }
    }
    return quotient;
}

Word256 evm_mod(const Word256& a, const Word256& b) {
    if (b.is_zero()) return Word256();
    return a - evm_div(a, b) * b;
}

Address Address::from_word(const Word256& w) {
    Address a;
    for (size_t i = 0; i < 20; ++i) a.bytes[i] = w.byte(12 + i);
    return a;
}

Address Address::from_hex(std::string_view s) {
    Bytes raw = hex_decode(s);
    if (raw.size() > 20) throw std::invalid_argument("Address: more than 20 bytes");
    Address a;
    std::copy(raw.begin(), raw.end(), a.bytes.end() - raw.size());
    return a;
}

Word256 Address::to_word() const { return Word256::from_be_bytes(bytes); }

std::string Address::to_hex() const { return "0x" + hex_encode(bytes); }

bool Address::is_zero() const {
    return std::all_of(bytes.begin(), bytes.end(), [](uint8_t b) { return b == 0; });
}

Hash32 Hash32::from_hex(std::string_view s) {
    Bytes raw = hex_decode(s);
    if (raw.size() != 32) throw std::invalid_argument("Hash32: expected 32 bytes");
    Hash32 h;
    std::copy(raw.begin(), raw.end(), h.bytes.begin());
    return h;
}

std::string Hash32::to_hex() const { return "0x" + hex_encode(bytes); }

std::array<uint8_t, 32> pad32(const Word256& w) { return w.be_bytes(); }

std::array<uint8_t, 32> pad32(const Address& a) {
    std::array<uint8_t, 32> out{};
    std::copy(a.bytes.begin(), a.bytes.end(), out.begin() + 12);
    return out;
}

void append_bytes(Bytes& out, std::span<const uint8_t> data) {
    out.insert(out.end(), data.begin(), data.end());
}

std::string hex_encode(std::span<const uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(data.size() * 2);
    for (uint8_t b : data) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

Bytes hex_decode(std::string_view s) {
    s = strip_0x(s);
    if (s.size() % 2 != 0) throw std::invalid_argument("hex_decode: odd digit count");
    Bytes out;
    out.reserve(s.size() / 2);
    for (size_t i = 0; i < s.size(); i += 2) {
        int hi = hex_nibble(s[i]), lo = hex_nibble(s[i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("hex_decode: bad hex digit");
        out.push_back(uint8_t(hi << 4 | lo));
    }
    return out;
}

}  // namespace tct
