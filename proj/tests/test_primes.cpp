#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "thetazeta/prime_table.hpp"

using namespace thetazeta;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
std::string temp_path(const char* name) {
    return std::string("tz_test_") + name + ".cache";
}
}  // namespace

TEST_CASE("generate_primes matches trial division on small limits") {
    auto t10 = generate_primes(10);
    CHECK(t10.primes == std::vector<std::uint64_t>{2, 3, 5, 7});

    auto t2 = generate_primes(2);
    CHECK(t2.primes == std::vector<std::uint64_t>{2});

    auto t100 = generate_primes(100);
    CHECK(t100.primes.size() == 25);
    CHECK(t100.primes.back() == 97);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 2; n <= 100; ++n)
        if (oracles::trial_is_prime(n)) expected.push_back(n);
    CHECK(t100.primes == expected);
}

TEST_CASE("generate_primes is deterministic and exact at 10^5") {
    auto a = generate_primes(100000);
    auto b = generate_primes(100000);
    CHECK(a.primes == b.primes);
    CHECK(a.checkpoints == b.checkpoints);
    for (auto p : a.primes) CHECK(oracles::trial_is_prime(p));
    CHECK(a.primes.size() == oracles::trial_pi(1e5));
}

TEST_CASE("generate_primes rejects bad inputs") {
    CHECK_THROWS_AS(generate_primes(1), DomainError);
    CHECK_THROWS_AS(generate_primes(0), DomainError);
    SieveOptions tiny;
    tiny.max_memory_bytes = 10;
    try {
        generate_primes(1000000, tiny);
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("segment") != std::string::npos);
    }
}

TEST_CASE("prime_count semantics") {
    auto table = generate_primes(1000000);
    CHECK(prime_count(table, 2) == 1);
    CHECK(prime_count(table, 10) == 4);
    CHECK(prime_count(table, 10) == oracles::trial_pi(10));
    CHECK(prime_count(table, 1e6) == 78498);  // independent sieve, frozen
    CHECK(prime_count(table, 0) == 0);
    CHECK(prime_count(table, 1.9999) == 0);
    CHECK(prime_count(table, 10.5) == 4);
    CHECK(prime_count(table, 2.999) == 1);
    CHECK(prime_count(table, 97 * 101) == oracles::trial_pi(97 * 101));
    CHECK_THROWS_AS(prime_count(table, 1e6 + 1), DomainError);
    CHECK_THROWS_AS(prime_count(table, -1), DomainError);
}

TEST_CASE("prime_count is a monotone 0/1-increment step function") {
    auto table = generate_primes(100000);
    std::uint64_t prev = 0;
    for (std::uint64_t t = 3; t <= 2000; ++t) {
        auto d = prime_count(table, double(t)) - prime_count(table, double(t - 1));
        CHECK((d == 0 || d == 1));
    }
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(0.0, 100000.0);
    for (int i = 0; i < 200; ++i) {
        double t1 = dist(rng), t2 = dist(rng);
        if (t1 > t2) std::swap(t1, t2);
        CHECK(prime_count(table, t1) <= prime_count(table, t2));
    }
    for (int i = 0; i < 200; ++i) {
        double t = dist(rng);
        CHECK(prime_count(table, t) == oracles::trial_pi(t));
    }
    (void)prev;
}

TEST_CASE("checkpoints are consistent with primes") {
    SieveOptions opt;
    opt.stride = 1000;
    auto table = generate_primes(10000, opt);
    REQUIRE(!table.checkpoints.empty());
    CHECK(table.checkpoints.back().first == 10000);
    CHECK(table.checkpoints.back().second == table.primes.size());
    for (auto& [t, c] : table.checkpoints) CHECK(c == prime_count(table, double(t)));
    for (std::size_t i = 1; i < table.checkpoints.size(); ++i)
        CHECK(table.checkpoints[i - 1].first < table.checkpoints[i].first);
}

TEST_CASE("save/load round trip") {
    const auto path = temp_path("roundtrip");
    auto table = generate_primes(1000);
    save_table(table, path);
    auto loaded = load_table(path);
    CHECK(loaded.limit == table.limit);
    CHECK(loaded.stride == table.stride);
    CHECK(loaded.primes == table.primes);
    CHECK(loaded.checkpoints == table.checkpoints);
    CHECK(prime_count(loaded, 97.0 * 101.0 > 1000 ? 1000 : 97.0 * 101.0) ==
          prime_count(table, 1000));

    auto big = generate_primes(20000);
    save_table(big, path);
    auto big2 = load_table(path);
    CHECK(prime_count(big2, 97 * 101) == oracles::trial_pi(97 * 101));
    std::remove(path.c_str());
}

TEST_CASE("cache file format is exactly as documented") {
    const auto path = temp_path("format");
    SieveOptions opt;
    opt.stride = 500;
    auto table = generate_primes(1000, opt);
    save_table(table, path);
    auto text = slurp(path);
    CHECK(text.rfind("THETAZETA-PRIMECACHE v1 limit=1000 stride=500\n", 0) == 0);
    CHECK(text.find("500,95\n") != std::string::npos);   // pi(500)=95 by trial division
    CHECK(text.find("1000,168\n") != std::string::npos);  // pi(1000)=168
    CHECK(text.find("checksum=") != std::string::npos);
    CHECK(oracles::trial_pi(500) == 95);
    CHECK(oracles::trial_pi(1000) == 168);
    std::remove(path.c_str());
}

TEST_CASE("load_table failure modes") {
    const auto path = temp_path("failures");

    {  // truncated: strip the checksum line
        auto table = generate_primes(1000);
        save_table(table, path);
        auto text = slurp(path);
        auto pos = text.find("checksum=");
        std::ofstream(path, std::ios::trunc) << text.substr(0, pos);
        CHECK_THROWS_AS(load_table(path), FormatError);
    }
    {  // version bump
        std::ofstream(path, std::ios::trunc)
            << "THETAZETA-PRIMECACHE v2 limit=1000 stride=65536\n1000,168\nchecksum=168\n";
        CHECK_THROWS_AS(load_table(path), VersionError);
    }
    {  // checksum mismatch
        std::ofstream(path, std::ios::trunc)
            << "THETAZETA-PRIMECACHE v1 limit=1000 stride=65536\n1000,168\nchecksum=169\n";
        CHECK_THROWS_AS(load_table(path), FormatError);
    }
    {  // checkpoint value inconsistent with a fresh sieve (checksum fixed up)
        std::ofstream(path, std::ios::trunc)
            << "THETAZETA-PRIMECACHE v1 limit=1000 stride=65536\n1000,167\nchecksum=167\n";
        CHECK_THROWS_AS(load_table(path), FormatError);
    }
    {  // garbage header
        std::ofstream(path, std::ios::trunc) << "not a cache\n";
        CHECK_THROWS_AS(load_table(path), FormatError);
    }
    CHECK_THROWS_AS(load_table("definitely_missing_file.cache"), ResourceError);
    std::remove(path.c_str());
}
