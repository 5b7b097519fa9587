#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace rbc
{

/// Anything that yields uniform variates in [0, 1] through `uniform()`.
/// Sampling routines are written against this so tests can feed fixed draws.
template <typename G>
concept UniformSource = requires(G& g) {
    { g.uniform() } -> std::convertible_to<double>;
};

/// SplitMix64 finalizer, used for seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

/// A seeded 64-bit Mersenne Twister producing doubles in [0, 1).
///
/// The double conversion uses the top 53 bits explicitly so that streams are
/// bit-identical across standard library implementations.
class RandomStream
{
  public:
    explicit RandomStream(std::uint64_t seed);

    /// Stream for Monte Carlo run `run_index` under `master_seed`:
    /// seeded with splitmix64(master_seed + 0x9E3779B97F4A7C15 * (run_index + 1)).
    static RandomStream for_run(std::uint64_t master_seed, std::uint64_t run_index);

    double uniform();
    std::uint64_t next_u64() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace rbc
