#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace gwheaps {

/// Alive vertices keyed by label, with predecessor query.
///
/// Backed by std::map; works for keys that arrive online. Entries are removed
/// as soon as their remaining lives reach zero.
class AliveSet {
public:
    struct Entry {
        std::int64_t lives;
        std::size_t vertex;
    };
    using Map = std::map<double, Entry>;

    /// Entry with the largest label strictly below `label`, or end().
    Map::iterator predecessor(double label) {
        auto it = entries_.lower_bound(label);
        return it == entries_.begin() ? entries_.end() : std::prev(it);
    }

    bool contains(double label) const { return entries_.contains(label); }

    void insert(double label, std::int64_t lives, std::size_t vertex) { entries_.emplace(label, Entry{lives, vertex}); }

    /// Consumes one life; returns true when the entry died and was removed.
    bool consume_life(Map::iterator it) {
        if (--it->second.lives == 0) {
            entries_.erase(it);
            return true;
        }
        return false;
    }

    Map::iterator end() { return entries_.end(); }
    const Map& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    Map entries_;
};

/// Alive set over keys known in advance, addressed by their rank 0..n-1.
///
/// Presence is a 64-ary bitset tree, so insertion, removal and predecessor
/// cost O(log_64 n) word operations. Lives are stored per rank.
class RankedAliveSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit RankedAliveSet(std::size_t capacity) : lives_(capacity, 0) {
        std::size_t bits = capacity;
        do {
            const std::size_t words = (bits + 63) / 64;
            levels_.emplace_back(words == 0 ? 1 : words, 0);
            bits = words;
        } while (bits > 1);
    }

    std::size_t capacity() const { return lives_.size(); }
    std::size_t size() const { return size_; }
    bool contains(std::size_t rank) const { return lives_[rank] > 0; }
    std::int64_t lives(std::size_t rank) const { return lives_[rank]; }

    void insert(std::size_t rank, std::int64_t lives) {
        lives_[rank] = lives;
        ++size_;
        for (auto& level : levels_) {
            std::uint64_t& word = level[rank >> 6];
            const bool was_empty = word == 0;
            word |= std::uint64_t{1} << (rank & 63);
            if (!was_empty) break;
            rank >>= 6;
        }
    }

    /// Consumes one life; returns true when the key died and was removed.
    bool consume_life(std::size_t rank) {
        if (--lives_[rank] > 0) return false;
        --size_;
        for (auto& level : levels_) {
            std::uint64_t& word = level[rank >> 6];
            word &= ~(std::uint64_t{1} << (rank & 63));
            if (word != 0) break;
            rank >>= 6;
        }
        return true;
    }

    /// Largest present rank strictly below `rank`, or npos.
    std::size_t predecessor(std::size_t rank) const {
        std::size_t level = 0;
        std::size_t idx = rank;
        for (;;) {
            const std::size_t w = idx >> 6;
            const unsigned bit = idx & 63;
            const std::uint64_t masked = levels_[level][w] & ((std::uint64_t{1} << bit) - 1);
            if (masked != 0) {
                idx = (w << 6) | static_cast<std::size_t>(63 - std::countl_zero(masked));
                break;
            }
            if (w == 0 || level + 1 == levels_.size()) return npos;
            idx = w;
            ++level;
        }
        while (level > 0) {
            --level;
            idx = (idx << 6) | static_cast<std::size_t>(63 - std::countl_zero(levels_[level][idx]));
        }
        return idx;
    }

private:
    std::vector<std::vector<std::uint64_t>> levels_;
    std::vector<std::int64_t> lives_;
    std::size_t size_ = 0;
};

}  // namespace gwheaps
