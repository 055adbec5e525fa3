#include "mebsmote/random.hpp"

#include "mebsmote/errors.hpp"

namespace mebsmote {

std::uint64_t SeededRng::uniform_below(std::uint64_t bound)
{
    if (bound == 0) {
        throw InvalidArgument("uniform_below: bound must be positive");
    }
    unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(engine_()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

} // namespace mebsmote
