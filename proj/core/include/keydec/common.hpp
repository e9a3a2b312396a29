#pragma once

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace keydec {

// Error taxonomy; the CLI maps these onto exit codes.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingArtifactError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void log_warn(const std::string& msg);

// Deterministic RNG (xoshiro256** seeded via splitmix64). We avoid the
// standard <random> distributions because their output is
// implementation-defined; every stream here is reproducible bit-for-bit.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    // uniform in [0, 1)
    double uniform();
    double uniform(double lo, double hi);
    // standard normal, Box-Muller
    double normal();
    double normal(double mean, double sd);
    // exp(N(mu_log, sigma_log))
    double lognormal(double mu_log, double sigma_log);
    // uniform integer in [0, n)
    uint64_t randint(uint64_t n);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(randint(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Independent child stream, e.g. per (stage, subject, epoch).
    Rng child(uint64_t salt) const;
    Rng child(std::string_view label) const;

private:
    uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
    uint64_t seed_;
};

// FNV-1a 64-bit. Non-cryptographic; used for config/artifact fingerprints.
uint64_t fnv1a64(const void* data, size_t len);
uint64_t fnv1a64(std::string_view s);
std::string hash_hex(uint64_t h);
uint64_t hash_file(const std::string& path);  // throws MissingArtifactError

uint64_t mix_seed(uint64_t seed, std::string_view label);

}  // namespace keydec
