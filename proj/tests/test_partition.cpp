#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/errors.hpp"
#include "kron/partition.hpp"
#include "kron/permutation.hpp"

using namespace kron;

TEST_CASE("parse pads with zeros") {
    Partition p = Partition::parse("12,7,4,1", 6);
    CHECK(p.to_string() == "12,7,4,1,0,0");
    CHECK(p.size() == 24);
    CHECK(p.nonzero_length() == 4);
}

TEST_CASE("parse empty partition") {
    Partition p = Partition::parse("", 3);
    CHECK(p.to_string() == "0,0,0");
    CHECK(p.size() == 0);
}

TEST_CASE("parse rejects increasing parts") {
    CHECK_THROWS_AS(Partition::parse("3,5", 2), NonDecreasingError);
}

TEST_CASE("parse rejects negatives and overlong input") {
    CHECK_THROWS_AS(Partition::parse("3,-1", 2), NegativePartError);
    CHECK_THROWS_AS(Partition::parse("3,2,1", 2), LengthExceededError);
    CHECK_THROWS_AS(Partition::parse("2,x", 2), ParseError);
}

TEST_CASE("parse then serialize is identity on canonical input") {
    for (const char* text : {"5,5,3,0", "9,1,0,0", "0,0,0,0"}) {
        Partition p = Partition::parse(text, 4);
        CHECK(p.to_string() == text);
    }
}

TEST_CASE("staircase") {
    CHECK(Partition::staircase(4).to_string() == "3,2,1,0");
    CHECK(Partition::staircase(1).to_string() == "0");
    CHECK(Partition::staircase(6).to_string() == "5,4,3,2,1,0");
    for (std::size_t k = 1; k <= 9; ++k)
        CHECK(Partition::staircase(k).size() == to_big(static_cast<long long>(k * (k - 1) / 2)));
}

TEST_CASE("hook products") {
    CHECK(hook_product(Partition::parse("2,1", 2)) == 3);
    CHECK(hook_product(Partition::parse("1", 1)) == 1);
    // brute-force oracle: hooks of (3,2,1) enumerated cell by cell are 5,3,1,3,1,1
    CHECK(hook_product(Partition::parse("3,2,1", 3)) == 45);
    CHECK(hook_dimension(Partition::parse("2,1", 3)) == 2);
}

TEST_CASE("triple construction validates lengths and padding") {
    PartitionTriple t(Partition::parse("6,4,4,1", 8), Partition::parse("12,3", 2),
                      Partition::parse("5,4,3,3", 4), 2, 4);
    CHECK(t.lambda.length() == 8);
    CHECK(t.equal_sizes());
    CHECK_THROWS_AS(PartitionTriple(Partition::parse("1,1,1,1,1", 5), Partition::parse("5", 1),
                                    Partition::parse("5", 1), 2, 2),
                    LengthBoundError);
}

TEST_CASE("add_scaled") {
    Partition base = Partition::parse("34,27,20,12,4,3", 6);
    Partition dir = Partition::parse("10,8,5,3,2,2", 6);
    CHECK(add_scaled(base, dir, 0) == base);
    CHECK(add_scaled(base, dir, 2).to_string() == "54,43,30,18,8,7");
}

TEST_CASE("permutation basics") {
    Permutation id = Permutation::identity(4);
    CHECK(id.is_identity());
    CHECK(id.sign() == 1);
    Permutation p({2, 1, 3, 4});
    CHECK(p.sign() == -1);
    CHECK(p.inverse() == p);
    CHECK(p.to_string() == "2134");

    // unranking agrees with lexicographic enumeration
    Permutation q = Permutation::identity(4);
    std::uint64_t rank = 0;
    do {
        CHECK(Permutation::nth(4, rank) == q);
        ++rank;
    } while (q.next());
    CHECK(rank == factorial_u64(4));
}
