#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cobweb {

// Deterministic 64-bit generator (splitmix64). The standard library's
// distributions and std::shuffle are implementation-defined, which would
// break byte-identical reproducibility across toolchains, so the few
// primitives we need are spelled out here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Uniform in [0, n). n must be > 0.
    std::uint64_t bounded(std::uint64_t n);

    // Uniform in [0, 1).
    double unit();

    bool coin() { return bounded(2) == 1; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            using std::swap;
            swap(v[i - 1], v[bounded(i)]);
        }
    }

    // Derives a stream seed from run-key components so that every
    // (experiment, seed, task, block, ...) tuple owns an independent,
    // order-free stream.
    static std::uint64_t mix(std::initializer_list<std::uint64_t> parts);

private:
    std::uint64_t state_;
};

}  // namespace cobweb
