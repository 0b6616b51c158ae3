// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/chain/serialization.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <limits>

#include <rollchain/chain/errors.hpp>

namespace rollchain::chain {

namespace {

    class Writer {
      public:
        explicit Writer(Bytes& out) : out_{out} {}

        void u8(std::uint8_t v) { out_.push_back(v); }
        void u32(std::uint32_t v) {
            for (int shift = 24; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
        }
        void u64(std::uint64_t v) {
            for (int shift = 56; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
        }
        void raw(std::span<const std::uint8_t> bytes) { out_.insert(out_.end(), bytes.begin(), bytes.end()); }

        void count(std::size_t n) {
            if (n > std::numeric_limits<std::uint32_t>::max()) {
                throw ChainError{ChainErrc::kDecode, "count does not fit in u32"};
            }
            u32(static_cast<std::uint32_t>(n));
        }

      private:
        Bytes& out_;
    };

    class Reader {
      public:
        explicit Reader(std::span<const std::uint8_t>& in) : in_{in} {}

        std::span<const std::uint8_t> take(std::size_t n) {
            if (in_.size() < n) throw ChainError{ChainErrc::kDecode, "truncated block"};
            auto head = in_.first(n);
            in_ = in_.subspan(n);
            return head;
        }
        std::uint8_t u8() { return take(1)[0]; }
        std::uint32_t u32() {
            std::uint32_t v = 0;
            for (auto b : take(4)) v = v << 8 | b;
            return v;
        }
        std::uint64_t u64() {
            std::uint64_t v = 0;
            for (auto b : take(8)) v = v << 8 | b;
            return v;
        }
        Digest digest() {
            Digest d{};
            std::ranges::copy(take(d.size()), d.begin());
            return d;
        }

      private:
        std::span<const std::uint8_t>& in_;
    };

    void write_transactions(Writer& w, std::span<const Transaction> transactions) {
        w.count(transactions.size());
        for (const auto& tx : transactions) {
            w.u64(tx.sensor_id);
            w.u64(tx.t0);
            w.u64(tx.step);
            w.count(tx.readings.size());
            for (const auto& reading : tx.readings) {
                w.count(reading.size());
                w.raw(reading);
            }
            w.u8(tx.payload_encrypted ? 1 : 0);
        }
    }

    std::size_t transactions_size(std::span<const Transaction> transactions) noexcept {
        std::size_t size = 4;
        for (const auto& tx : transactions) {
            size += 8 + 8 + 8 + 4 + 1;
            for (const auto& reading : tx.readings) size += 4 + reading.size();
        }
        return size;
    }

    constexpr std::size_t kStoredHeaderSize = 4 + 5 * 8 + 2 * 32;

}  // namespace

Bytes hash_preimage(const BlockHeader& header, std::span<const Transaction> transactions) {
    Bytes out;
    out.reserve(4 + 3 * 8 + 32 + transactions_size(transactions));
    Writer w{out};
    w.raw(kBlockMagic);
    w.u64(header.global_index);
    w.u64(header.creator_id);
    w.u64(header.created_at);
    w.raw(header.prev_hash);
    write_transactions(w, transactions);
    return out;
}

Bytes encode_block(const Block& block) {
    Bytes out;
    out.reserve(encoded_size(block));
    Writer w{out};
    const auto& h = block.header;
    w.raw(kBlockMagic);
    w.u64(h.global_index);
    w.u64(h.cycle_index);
    w.u64(h.index_in_cycle);
    w.u64(h.creator_id);
    w.u64(h.created_at);
    w.raw(h.prev_hash);
    w.raw(h.hash);
    write_transactions(w, block.transactions);
    return out;
}

std::size_t encoded_size(const Block& block) noexcept {
    return kStoredHeaderSize + transactions_size(block.transactions);
}

std::size_t encoded_size(std::span<const Block> blocks) noexcept {
    std::size_t total = 0;
    for (const auto& b : blocks) total += encoded_size(b);
    return total;
}

Block decode_block(std::span<const std::uint8_t>& input) {
    // Work on a copy so a failed decode leaves the caller's cursor in place.
    auto cursor = input;
    Reader r{cursor};
    if (!std::ranges::equal(r.take(kBlockMagic.size()), kBlockMagic)) {
        throw ChainError{ChainErrc::kDecode, "bad block magic"};
    }
    Block block;
    auto& h = block.header;
    h.global_index = r.u64();
    h.cycle_index = r.u64();
    h.index_in_cycle = r.u64();
    h.creator_id = r.u64();
    h.created_at = r.u64();
    h.prev_hash = r.digest();
    h.hash = r.digest();

    const auto tx_count = r.u32();
    block.transactions.reserve(std::min<std::size_t>(tx_count, cursor.size() / 29));
    for (std::uint32_t i = 0; i < tx_count; ++i) {
        Transaction tx;
        tx.sensor_id = r.u64();
        tx.t0 = r.u64();
        tx.step = r.u64();
        const auto reading_count = r.u32();
        for (std::uint32_t k = 0; k < reading_count; ++k) {
            auto bytes = r.take(r.u32());
            tx.readings.emplace_back(bytes.begin(), bytes.end());
        }
        const auto flag = r.u8();
        if (flag > 1) throw ChainError{ChainErrc::kDecode, "bad payload_encrypted flag"};
        tx.payload_encrypted = flag == 1;
        block.transactions.push_back(std::move(tx));
    }
    input = cursor;
    return block;
}

Bytes encode_chain(std::span<const Block> blocks) {
    Bytes out;
    out.reserve(encoded_size(blocks));
    for (const auto& b : blocks) {
        auto one = encode_block(b);
        out.insert(out.end(), one.begin(), one.end());
    }
    return out;
}

std::vector<Block> decode_chain(std::span<const std::uint8_t> input) {
    std::vector<Block> blocks;
    while (!input.empty()) blocks.push_back(decode_block(input));
    return blocks;
}

void write_chain_file(const std::filesystem::path& path, std::span<const Block> blocks) {
    const auto bytes = encode_chain(blocks);
    std::ofstream out{path, std::ios::binary | std::ios::trunc};
    if (!out) throw ChainError{ChainErrc::kIo, "cannot open " + path.string()};
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ChainError{ChainErrc::kIo, "write failed: " + path.string()};
}

std::vector<Block> read_chain_file(const std::filesystem::path& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) throw ChainError{ChainErrc::kIo, "cannot open " + path.string()};
    Bytes bytes{std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
    return decode_chain(bytes);
}

}  // namespace rollchain::chain
