#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace moead {

// mt19937_64 with hand-rolled draws. The standard distributions are
// implementation-defined, so uniform() and uniform_index() are spelled out
// here to keep run outputs reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // (0, 1)
    double uniform_open() {
        double u = uniform();
        while (u == 0.0) u = uniform();
        return u;
    }

    // [0, n), unbiased (Lemire rejection)
    std::uint64_t uniform_index(std::uint64_t n) {
        unsigned __int128 prod = static_cast<unsigned __int128>(engine_()) * n;
        auto low = static_cast<std::uint64_t>(prod);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                prod = static_cast<unsigned __int128>(engine_()) * n;
                low = static_cast<std::uint64_t>(prod);
            }
        }
        return static_cast<std::uint64_t>(prod >> 64);
    }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = uniform_index(i);
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace moead
