#pragma once

#include <cstdint>
#include <random>

namespace gwheaps {

/// Random stream used by every sampler in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Uniforms are built from raw engine words (not
/// std::uniform_real_distribution) so streams are bit-identical across
/// standard library implementations.
class Rng {
public:
    using Engine = std::mt19937_64;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_word() { return engine_(); }

    /// Uniform on the open interval (0,1); one engine word per call.
    double uniform_open() {
        return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
    }

    Engine& engine() { return engine_; }

private:
    Engine engine_;
};

}  // namespace gwheaps
