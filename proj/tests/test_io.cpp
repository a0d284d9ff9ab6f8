#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "inca/cache.hpp"
#include "inca/canonical.hpp"
#include "inca/errors.hpp"
#include "inca/io.hpp"
#include "oracles.hpp"

using namespace inca;

TEST_CASE("serialize/parse preserves canonical codes on random diagrams") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GaussDiagram m = oracle::random_diagram(seed);
        auto text = serialize(m);
        auto back = parse_diagram(text);
        CAPTURE(seed);
        CHECK(canonical_code(back) == canonical_code(m));
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("parser survives random byte soup") {
    std::mt19937_64 rng(123);
    const std::string alphabet =
        "inca v1 component interact agent cycle path by + - [ ] . 0123456789 \n\t#_qQ\xff\x00";
    for (int trial = 0; trial < 20000; ++trial) {
        std::string text;
        int len = static_cast<int>(rng() % 80);
        for (int i = 0; i < len; ++i) text.push_back(alphabet[rng() % alphabet.size()]);
        try {
            parse_diagram(text);
        } catch (const parse_error&) {
            // rejected inputs are fine; crashes are not
        }
    }
    CHECK(true);
}

TEST_CASE("ten thousand generated diagrams all validate") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 10000; ++i) {
        GaussDiagram m = oracle::random_diagram(rng());
        CHECK(validate(m).empty());
    }
}

TEST_CASE("infeasible generator specs are refused") {
    RandomSpec spec;
    spec.components = {{ComponentKind::Path, 2}};
    spec.interactions = 5;
    CHECK_THROWS_AS(random_diagram(spec), resource_limit);
}

TEST_CASE("cache stores, reloads, and skips corrupt records") {
    std::string path = "test_cache_tmp.inca-cache";
    std::remove(path.c_str());
    {
        ResultCache cache(path);
        CHECK(!cache.lookup("k1"));
        cache.store("k1", "value one");
        cache.store("k2", "value\ntwo");
        CHECK(*cache.lookup("k1") == "value one");
    }
    {
        ResultCache reloaded(path);
        CHECK(*reloaded.lookup("k1") == "value one");
        CHECK(*reloaded.lookup("k2") == "value\ntwo");
    }
    {
        std::ofstream out(path, std::ios::app);
        out << "r1 deadbeef nothexpayload!!\n";  // corrupt record
        out << "garbage line\n";
    }
    {
        ResultCache survived(path);
        CHECK(survived.size() == 2);
        CHECK(*survived.lookup("k2") == "value\ntwo");
    }
    std::remove(path.c_str());
}
