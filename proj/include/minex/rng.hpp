#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace minex {

// Deterministic random stream: identical (seed, label) pairs yield identical
// draw sequences regardless of call site. Derived streams are forked by label
// so independent pipeline stages never share state.
class RngStream {
public:
    RngStream() : RngStream(0, "") {}
    RngStream(std::uint64_t seed, std::string label)
        : seed_(seed), label_(std::move(label)), engine_(mix(seed_, label_)) {}

    std::uint64_t seed() const { return seed_; }
    const std::string& label() const { return label_; }

    RngStream fork(std::string_view sublabel) const {
        return RngStream(seed_, label_.empty() ? std::string(sublabel)
                                                : label_ + "/" + std::string(sublabel));
    }

    RngStream fork(std::string_view sublabel, std::uint64_t index) const {
        return fork(std::string(sublabel) + "#" + std::to_string(index));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) {
        std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
        return dist(engine_);
    }

    int next_int(int lo, int hi) { // inclusive range
        std::uniform_int_distribution<int> dist(lo, hi);
        return dist(engine_);
    }

    double next_double() { // [0, 1)
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        return dist(engine_);
    }

    bool next_bernoulli(double p) {
        std::bernoulli_distribution dist(p);
        return dist(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static std::uint64_t mix(std::uint64_t seed, const std::string& label) {
        std::uint64_t h = splitmix(seed);
        for (unsigned char c : label) h = splitmix(h ^ c);
        return h;
    }

    std::uint64_t seed_;
    std::string label_;
    std::mt19937_64 engine_;
};

} // namespace minex
