#pragma once

#include <cstdint>
#include <string_view>

namespace archval {

// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x00000100000001B3ull;
    }
    return h;
}

/**
 * Counter-based hierarchical random stream.
 *
 * A stream is identified by (master seed, path), where the path is the
 * ordered list of elements passed to child(). Two streams with the same
 * identity produce the same sample sequence; streams whose paths differ
 * anywhere produce statistically independent sequences. Draws are pure
 * functions of (key, counter), so results do not depend on execution
 * order or thread count.
 */
class RngStream {
public:
    explicit constexpr RngStream(std::uint64_t master_seed) noexcept
        : key_(mix64(master_seed + kGolden)) {}

    // Forks a substream; the counter of the child starts at zero.
    [[nodiscard]] constexpr RngStream child(std::uint64_t element) const noexcept {
        return RngStream(key_ ^ mix64(element + kGolden), 0);
    }

    [[nodiscard]] constexpr RngStream child(std::string_view label) const noexcept {
        return child(fnv1a64(label));
    }

    constexpr std::uint64_t next_u64() noexcept {
        ++counter_;
        return mix64(key_ + counter_ * kGolden);
    }

    // Uniform draw strictly inside (0, 1); safe for inverse transforms.
    constexpr double next_u01() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    // Stream identity; usable as a derived master seed.
    [[nodiscard]] constexpr std::uint64_t key() const noexcept { return key_; }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    constexpr RngStream(std::uint64_t raw_key, std::uint64_t counter) noexcept
        : key_(mix64(raw_key)), counter_(counter) {}

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace archval
