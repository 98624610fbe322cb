#include <catch_amalgamated.hpp>

#include <random>

#include "kzero/group.hpp"
#include "kzero/subring.hpp"
#include "support.hpp"

using namespace kzero;

TEST_CASE("generated closures") {
    auto ising = testsup::ring("ising");
    CHECK(close_generated(*ising, {1}).members == std::vector<int>{0, 1});
    CHECK(close_generated(*ising, {}).members == std::vector<int>{0});
    auto s3 = testsup::ring("rep-s3");
    CHECK(close_generated(*s3, {2}).members == std::vector<int>{0, 1, 2});
}

TEST_CASE("closure is idempotent and monotone") {
    std::mt19937_64 rng(11);
    for (const auto& [name, doc] : testsup::corpus().rings) {
        const FusionRing& r = *doc.ring;
        INFO(name);
        std::uniform_int_distribution<int> pick(0, r.rank() - 1);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<int> gens{pick(rng)};
            if (trial % 2) gens.push_back(pick(rng));
            auto s = close_generated(r, gens);
            CHECK(close_generated(r, s.members).mask == s.mask);
            auto bigger = gens;
            bigger.push_back(pick(rng));
            CHECK((close_generated(r, bigger).mask & s.mask) == s.mask);
            CHECK(subring_defects(r, s.mask).empty());
        }
    }
}

TEST_CASE("adjoint subrings") {
    CHECK(adjoint_subring(*testsup::ring("ising")).members == std::vector<int>{0, 1});
    CHECK(adjoint_subring(*testsup::ring("rep-s3")).members == std::vector<int>{0, 1, 2});
    for (const char* name : {"s3", "d4", "q8", "a4"}) {
        auto ring = group_ring(testsup::group(name));
        INFO(name);
        CHECK(adjoint_subring(*ring).members == std::vector<int>{0});
    }
}

TEST_CASE("intersection and join") {
    auto ising = testsup::ring("ising");
    auto d = close_generated(*ising, {1});
    auto sigma_closure = close_generated(*ising, {2});
    CHECK(sigma_closure.members == std::vector<int>{0, 1, 2});
    CHECK(intersect(d, sigma_closure).members == d.members);
    CHECK(intersect(d, full_subring(*ising)).members == d.members);
    CHECK(join(trivial_subring(*ising), d).members == d.members);
}

TEST_CASE("radical") {
    auto ising = testsup::ring("ising");
    auto d = close_generated(*ising, {1});
    auto rad = radical(*ising, d);
    CHECK(rad.members == std::vector<int>{0, 1, 2});  // sigma^2 = 1 + psi
    CHECK(rad.is_subring);

    auto s3 = testsup::ring("rep-s3");
    auto rad2 = radical(*s3, subring_from_members(*s3, {0, 1}));
    CHECK(rad2.members == std::vector<int>{0, 1});  // rho never lands in {1, s}

    for (const auto& [name, doc] : testsup::corpus().rings) {
        INFO(name);
        for (const auto& sub : all_subrings(*doc.ring))
            CHECK((radical(*doc.ring, sub).mask & sub.mask) == sub.mask);
    }
}

TEST_CASE("commutator") {
    auto s3 = testsup::ring("rep-s3");
    CHECK(commutator(*s3, subring_from_members(*s3, {0, 1})).members ==
          std::vector<int>{0, 1});
    CHECK(commutator(*s3, full_subring(*s3)).members == std::vector<int>{0, 1, 2});
    auto ising = testsup::ring("ising");
    CHECK(commutator(*ising, close_generated(*ising, {1})).members ==
          std::vector<int>{0, 1, 2});
}

TEST_CASE("explicit member sets are validated") {
    auto ising = testsup::ring("ising");
    CHECK_THROWS_AS(subring_from_members(*ising, {0, 2}), RingError);  // not closed
    CHECK_THROWS_AS(subring_from_members(*ising, {1}), RingError);     // no unit
    CHECK(subring_from_members(*ising, {0, 1}).mask == (bit(0) | bit(1)));
}

TEST_CASE("subring enumeration finds the expected lattices") {
    CHECK(all_subrings(*testsup::ring("fib")).size() == 2);
    CHECK(all_subrings(*testsup::ring("ising")).size() == 3);
    CHECK(all_subrings(*group_ring(testsup::group("s3"))).size() == 6);   // subgroups
    CHECK(all_subrings(*group_ring(testsup::group("d4"))).size() == 10);
    CHECK(all_subrings(*group_ring(testsup::group("q8"))).size() == 6);
    for (const auto& s : all_subrings(*testsup::ring("rep-s4")))
        CHECK(subring_defects(*testsup::ring("rep-s4"), s.mask).empty());
}
