// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/chain/hashing.hpp>

#include <memory>
#include <stdexcept>

#include <openssl/evp.h>

#include <rollchain/chain/serialization.hpp>

namespace rollchain::chain {

namespace {

    const EVP_MD* evp_for(HashAlgorithm algorithm) {
        switch (algorithm) {
            case HashAlgorithm::kSha256:
                return EVP_sha256();
            case HashAlgorithm::kSha3_256:
                return EVP_sha3_256();
            case HashAlgorithm::kBlake2s256:
                return EVP_blake2s256();
        }
        throw std::invalid_argument{"unknown hash algorithm"};
    }

    struct MdCtxDeleter {
        void operator()(EVP_MD_CTX* ctx) const noexcept { EVP_MD_CTX_free(ctx); }
    };

}  // namespace

std::string_view to_string(HashAlgorithm algorithm) noexcept {
    switch (algorithm) {
        case HashAlgorithm::kSha256:
            return "sha256";
        case HashAlgorithm::kSha3_256:
            return "sha3-256";
        case HashAlgorithm::kBlake2s256:
            return "blake2s-256";
    }
    return "unknown";
}

std::optional<HashAlgorithm> parse_hash_algorithm(std::string_view name) noexcept {
    for (auto algorithm : {HashAlgorithm::kSha256, HashAlgorithm::kSha3_256, HashAlgorithm::kBlake2s256}) {
        if (name == to_string(algorithm)) return algorithm;
    }
    return std::nullopt;
}

Digest digest(HashAlgorithm algorithm, std::span<const std::uint8_t> data) {
    std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx{EVP_MD_CTX_new()};
    if (!ctx) throw std::bad_alloc{};

    Digest out{};
    unsigned int len = 0;
    if (EVP_DigestInit_ex(ctx.get(), evp_for(algorithm), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != out.size()) {
        throw std::runtime_error{"digest computation failed"};
    }
    return out;
}

Digest hash_block(const BlockHeader& header, std::span<const Transaction> transactions,
                  HashAlgorithm algorithm) {
    return digest(algorithm, hash_preimage(header, transactions));
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0f]);
    }
    return out;
}

std::optional<Digest> digest_from_hex(std::string_view hex) {
    if (hex.size() != 64) return std::nullopt;
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    Digest out{};
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = nibble(hex[2 * i]);
        int lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

}  // namespace rollchain::chain
