#include "rbc/random.hpp"

namespace rbc
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed) {}

RandomStream RandomStream::for_run(std::uint64_t master_seed, std::uint64_t run_index)
{
    return RandomStream(splitmix64(master_seed + 0x9E3779B97F4A7C15ULL * (run_index + 1)));
}

double RandomStream::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

} // namespace rbc
