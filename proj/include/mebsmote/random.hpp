#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace mebsmote {

// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Derives an independent stream seed from a master seed and an ordinal:
// mix(seed, ordinal) = splitmix64(seed ^ splitmix64(ordinal)).
// Used so that every synthetic sample and every CV fold owns its own
// generator, which keeps results independent of evaluation order.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t ordinal) noexcept
{
    return splitmix64(seed ^ splitmix64(ordinal));
}

// Deterministic random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the distributions below are written
// out by hand because the std:: distributions are implementation-defined.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on the closed interval [0, 1], 53-bit resolution.
    double uniform_closed01()
    {
        constexpr double scale = 1.0 / static_cast<double>((1ULL << 53) - 1);
        return static_cast<double>(engine_() >> 11) * scale;
    }

    // Uniform integer in [0, bound). Lemire's nearly-divisionless method
    // with rejection, so the result is unbiased. bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound);

    // Fisher-Yates shuffle driven by uniform_below.
    template <typename T>
    void shuffle(std::span<T> items)
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_below(i));
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

    // Child generator seeded with mix_seed(seed(), ordinal).
    SeededRng derive(std::uint64_t ordinal) const { return SeededRng(mix_seed(seed_, ordinal)); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace mebsmote
