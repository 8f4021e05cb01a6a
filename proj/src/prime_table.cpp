#include "thetazeta/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace thetazeta {

namespace {

constexpr std::uint64_t kChecksumMod = (std::uint64_t{1} << 61) - 1;

// Simple odd-only sieve for the base primes up to n (n is small: sqrt(limit)).
std::vector<std::uint64_t> small_primes(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    out.push_back(2);
    const std::uint64_t half = (n - 1) / 2;  // index i <-> odd number 2i+1, i >= 1
    std::vector<bool> composite(half + 1, false);
    for (std::uint64_t i = 1; 2 * i + 1 <= n; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        out.push_back(p);
        for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
    }
    return out;
}

double estimated_prime_count(double limit) {
    if (limit < 20) return 10;
    return limit / (std::log(limit) - 1.1);
}

}  // namespace

PrimeTable generate_primes(std::uint64_t limit, const SieveOptions& opt) {
    if (limit < 2) throw DomainError("generate_primes: limit must be >= 2");
    if (opt.stride == 0 || opt.segment < 64)
        throw ConfigError("generate_primes: stride must be > 0 and segment >= 64");

    const double est_bytes =
        estimated_prime_count(static_cast<double>(limit)) * 1.15 * sizeof(std::uint64_t) +
        static_cast<double>(opt.segment) / 16.0;
    if (est_bytes > static_cast<double>(opt.max_memory_bytes)) {
        std::ostringstream msg;
        msg << "generate_primes: estimated memory " << static_cast<std::uint64_t>(est_bytes)
            << " bytes exceeds budget " << opt.max_memory_bytes
            << " (segment bitmap alone needs " << opt.segment / 16 << " bytes)";
        throw ResourceError(msg.str());
    }

    PrimeTable table;
    table.limit = limit;
    table.stride = opt.stride;
    table.primes.reserve(static_cast<std::size_t>(estimated_prime_count(static_cast<double>(limit)) * 1.05) + 16);
    table.primes.push_back(2);

    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    const auto base = small_primes(root);

    // Odd-only segmented sieve over [lo, hi).
    std::vector<bool> composite;
    for (std::uint64_t lo = 3; lo <= limit; lo += opt.segment) {
        const std::uint64_t hi = std::min(limit + 1, lo + opt.segment);
        const std::uint64_t n_odd = (hi - lo + 1) / 2;  // odds in [lo, hi), lo is odd
        composite.assign(n_odd, false);
        for (const auto p : base) {
            if (p == 2) continue;
            if (p * p >= hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            if (start % 2 == 0) start += p;
            for (std::uint64_t m = start; m < hi; m += 2 * p) composite[(m - lo) / 2] = true;
        }
        for (std::uint64_t i = 0; i < n_odd; ++i)
            if (!composite[i]) table.primes.push_back(lo + 2 * i);

        // Checkpoints covered by this segment (primes vector is ascending).
        const std::uint64_t first_cp = ((lo + opt.stride - 1) / opt.stride) * opt.stride;
        for (std::uint64_t t = first_cp; t < hi && t <= limit; t += opt.stride) {
            const auto it = std::upper_bound(table.primes.begin(), table.primes.end(), t);
            table.checkpoints.emplace_back(t, static_cast<std::uint64_t>(it - table.primes.begin()));
        }
    }
    if (table.checkpoints.empty() || table.checkpoints.back().first != limit)
        table.checkpoints.emplace_back(limit, table.primes.size());
    return table;
}

std::uint64_t prime_count(const PrimeTable& table, double t) {
    if (!(t >= 0.0)) throw DomainError("prime_count: t must be nonnegative");
    if (t > static_cast<double>(table.limit))
        throw DomainError("prime_count: t exceeds table limit " + std::to_string(table.limit) +
                          "; extend the table");
    if (t < 2.0) return 0;
    const auto floor_t = static_cast<std::uint64_t>(std::floor(t));
    const auto it = std::upper_bound(table.primes.begin(), table.primes.end(), floor_t);
    return static_cast<std::uint64_t>(it - table.primes.begin());
}

void save_table(const PrimeTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ResourceError("save_table: cannot open '" + path + "' for writing");
    out << "THETAZETA-PRIMECACHE v1 limit=" << table.limit << " stride=" << table.stride << "\n";
    std::uint64_t checksum = 0;
    for (const auto& [t, c] : table.checkpoints) {
        out << t << "," << c << "\n";
        checksum = (checksum + c % kChecksumMod) % kChecksumMod;
    }
    out << "checksum=" << checksum << "\n";
    if (!out) throw ResourceError("save_table: write to '" + path + "' failed");
}

PrimeTable load_checkpoints(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ResourceError("load_table: cannot open '" + path + "'");

    std::string header;
    if (!std::getline(in, header)) throw FormatError("load_table: empty file");
    unsigned version = 0;
    unsigned long long limit = 0, stride = 0;
    if (std::sscanf(header.c_str(), "THETAZETA-PRIMECACHE v%u limit=%llu stride=%llu", &version,
                    &limit, &stride) != 3)
        throw FormatError("load_table: malformed header '" + header + "'");
    if (version != 1)
        throw VersionError("load_table: unsupported cache version v" + std::to_string(version));
    if (limit < 2 || stride == 0) throw FormatError("load_table: invalid limit/stride in header");

    PrimeTable shell;
    shell.limit = limit;
    shell.stride = stride;
    std::uint64_t checksum = 0;
    bool saw_checksum = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("checksum=", 0) == 0) {
            unsigned long long claimed = 0;
            if (std::sscanf(line.c_str(), "checksum=%llu", &claimed) != 1)
                throw FormatError("load_table: malformed checksum line");
            if (claimed != checksum)
                throw FormatError("load_table: checksum mismatch (file " + std::to_string(claimed) +
                                  ", computed " + std::to_string(checksum) + ")");
            saw_checksum = true;
            break;
        }
        unsigned long long t = 0, c = 0;
        if (std::sscanf(line.c_str(), "%llu,%llu", &t, &c) != 2)
            throw FormatError("load_table: malformed checkpoint line '" + line + "'");
        if (!shell.checkpoints.empty() && t <= shell.checkpoints.back().first)
            throw FormatError("load_table: checkpoints not strictly ascending");
        shell.checkpoints.emplace_back(t, c);
        checksum = (checksum + c % kChecksumMod) % kChecksumMod;
    }
    if (!saw_checksum) throw FormatError("load_table: truncated file (missing checksum line)");
    return shell;
}

PrimeTable load_table(const std::string& path) {
    const PrimeTable shell = load_checkpoints(path);
    SieveOptions opt;
    opt.stride = shell.stride;
    PrimeTable table = generate_primes(shell.limit, opt);
    if (shell.checkpoints != table.checkpoints)
        throw FormatError("load_table: checkpoints inconsistent with re-sieved primes");
    return table;
}

}  // namespace thetazeta
