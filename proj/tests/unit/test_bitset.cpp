#include <doctest.h>

#include <random>
#include <set>

#include "biamalg/bitset.hpp"

using namespace biamalg;

TEST_CASE("bitset basic operations") {
    Bitset b(130);
    CHECK(b.none());
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.test(64));
    CHECK(!b.test(63));
    b.reset(64);
    CHECK(b.count() == 2);

    Bitset c(130);
    c.set(0);
    CHECK(c.is_subset_of(b));
    CHECK(!b.is_subset_of(c));
    CHECK((b & c).count() == 1);
    CHECK((b | c).count() == 2);
}

TEST_CASE("bitset agrees with a std::set model under random operations") {
    std::mt19937 rng(12345);
    Bitset b(200);
    std::set<std::size_t> model;
    for (int step = 0; step < 2000; ++step) {
        std::size_t i = rng() % 200;
        if (rng() % 2) {
            b.set(i);
            model.insert(i);
        } else {
            b.reset(i);
            model.erase(i);
        }
        CHECK(b.count() == model.size());
        CHECK(b.test(i) == (model.count(i) > 0));
    }
    std::vector<std::uint32_t> codes = b.to_codes();
    std::vector<std::uint32_t> expect(model.begin(), model.end());
    CHECK(codes == expect);
}
