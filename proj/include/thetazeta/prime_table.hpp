#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thetazeta/errors.hpp"

namespace thetazeta {

struct SieveOptions {
    std::uint64_t stride = std::uint64_t{1} << 16;
    std::uint64_t segment = std::uint64_t{1} << 20;  // numbers per segment
    std::uint64_t max_memory_bytes = 2'000'000'000;
};

struct PrimeTable {
    std::uint64_t limit = 0;
    std::uint64_t stride = 0;
    std::vector<std::uint64_t> primes;
    // (t, pi(t)) at every multiple of stride <= limit, plus (limit, pi(limit)).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> checkpoints;
};

PrimeTable generate_primes(std::uint64_t limit, const SieveOptions& opt = {});

// Exact pi(floor(t)); t < 2 gives 0, t > table.limit is a domain error.
std::uint64_t prime_count(const PrimeTable& table, double t);

void save_table(const PrimeTable& table, const std::string& path);
PrimeTable load_table(const std::string& path);

// Parse + checksum-verify the cache without re-sieving.  The primes vector is
// left empty: the result answers pi only at the stored checkpoints.
PrimeTable load_checkpoints(const std::string& path);

}  // namespace thetazeta
