#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace t2tbin {

// Error taxonomy. Every throwing path in the library uses one of these so the
// CLI can map failures to messages and exit codes.
class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible tensor/image dimensions.
class ShapeError : public Error {
    using Error::Error;
};

// Input sizes the tokenization schedule cannot handle.
class SizeError : public Error {
    using Error::Error;
};

// Invalid configuration values (window sizes, head counts, ...).
class ConfigError : public Error {
    using Error::Error;
};

// Filesystem-level failures (missing or unreadable files).
class IoError : public Error {
    using Error::Error;
};

// Structurally broken files (bad magic, truncation, unsupported encodings).
class FormatError : public Error {
    using Error::Error;
};

// API misuse (backward on a non-scalar, reading an absent gradient, ...).
class UsageError : public Error {
    using Error::Error;
};

// Single deterministic randomness source. Parameter init, augmentation and
// batch ordering all draw from one seeded Rng so a run is reproducible from
// its seed alone. The engine state round-trips through a string for
// checkpointing.
class Rng {
   public:
    explicit Rng(uint64_t seed = 42) : eng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng_);
    }

    double normal(double mean, double stddev) {
        return std::normal_distribution<double>(mean, stddev)(eng_);
    }

    // Uniform integer in [0, n).
    int64_t index(int64_t n) {
        return std::uniform_int_distribution<int64_t>(0, n - 1)(eng_);
    }

    std::mt19937_64& engine() { return eng_; }

    std::string state() const {
        std::ostringstream ss;
        ss << eng_;
        return ss.str();
    }

    void set_state(const std::string& s) {
        std::istringstream ss(s);
        ss >> eng_;
        if (!ss) throw FormatError("Rng::set_state: malformed engine state");
    }

   private:
    std::mt19937_64 eng_;
};

}  // namespace t2tbin
