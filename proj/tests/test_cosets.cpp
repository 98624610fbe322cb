#include <catch_amalgamated.hpp>

#include <cmath>

#include "kzero/cosets.hpp"
#include "kzero/group.hpp"
#include "support.hpp"

using namespace kzero;

TEST_CASE("group ring double cosets match the group oracle") {
    auto g = testsup::group("s3");
    auto ring = group_ring(g);
    auto fp = compute_fp_dims(*ring);
    auto k = subring_from_members(*ring, {0, 1});
    auto dec = double_cosets(*ring, k, k, fp);
    CHECK(dec.blocks == group_double_cosets_oracle(g, {0, 1}, {0, 1}));
    REQUIRE(dec.blocks.size() == 2);
    CHECK(dec.blocks[0].size() == 2);
    CHECK(dec.blocks[1].size() == 4);
}

TEST_CASE("trivial subrings give singleton blocks and T = identity") {
    auto ising = testsup::ring("ising");
    auto fp = compute_fp_dims(*ising);
    auto dec = double_cosets(*ising, trivial_subring(*ising), trivial_subring(*ising), fp);
    CHECK(dec.blocks.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(dec.t_matrix[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("left cosets of {1,s} in Rep(S3)") {
    auto s3 = testsup::ring("rep-s3");
    auto fp = compute_fp_dims(*s3);
    auto dec = double_cosets(*s3, subring_from_members(*s3, {0, 1}),
                             trivial_subring(*s3), fp);
    REQUIRE(dec.blocks.size() == 2);
    CHECK(dec.blocks[0] == std::vector<int>{0, 1});
    CHECK(dec.blocks[1] == std::vector<int>{2});
}

TEST_CASE("principal eigendata") {
    SECTION("Ising with D = E = {1, psi}") {
        auto ising = testsup::ring("ising");
        auto fp = compute_fp_dims(*ising);
        auto d = subring_from_members(*ising, {0, 1});
        auto dec = double_cosets(*ising, d, d, fp);
        REQUIRE(dec.blocks.size() == 2);
        CHECK(dec.blocks[0] == std::vector<int>{0, 1});
        CHECK(dec.blocks[1] == std::vector<int>{2});
        auto eig = verify_principal_eigendata(dec, fp, 1e-9);
        CHECK(eig.pass);
        CHECK(std::fabs(eig.eigenvalue - 4.0) <= 1e-9);
    }
    SECTION("trivial pair has eigenvalue 1") {
        auto fib = testsup::ring("fib");
        auto fp = compute_fp_dims(*fib);
        auto dec = double_cosets(*fib, trivial_subring(*fib), trivial_subring(*fib), fp);
        auto eig = verify_principal_eigendata(dec, fp, 1e-9);
        CHECK(eig.pass);
        CHECK(std::fabs(eig.eigenvalue - 1.0) <= 1e-9);
    }
    SECTION("ZS3 with K = <transposition>") {
        auto ring = group_ring(testsup::group("s3"));
        auto fp = compute_fp_dims(*ring);
        auto k = subring_from_members(*ring, {0, 1});
        auto eig = verify_principal_eigendata(double_cosets(*ring, k, k, fp), fp, 1e-9);
        CHECK(eig.pass);
        CHECK(std::fabs(eig.eigenvalue - 4.0) <= 1e-9);  // FPdim(K)^2
    }
}

TEST_CASE("T matrix is exactly symmetric over all subring pairs") {
    for (const auto& [name, doc] : testsup::corpus().rings) {
        const FusionRing& r = *doc.ring;
        if (r.rank() > 8) continue;
        INFO(name);
        auto fp = compute_fp_dims(r);
        auto subs = all_subrings(r);
        for (const auto& d : subs)
            for (const auto& e : subs) {
                auto dec = double_cosets(r, d, e, fp);
                for (int i = 0; i < r.rank(); ++i)
                    for (int j = 0; j < r.rank(); ++j)
                        REQUIRE(dec.t_matrix[i][j] == dec.t_matrix[j][i]);
            }
    }
}

TEST_CASE("coset product formula") {
    SECTION("Rep(S3), D = {1,s}, E = trivial, x = rho gives scalar 1") {
        auto s3 = testsup::ring("rep-s3");
        auto fp = compute_fp_dims(*s3);
        auto dec = double_cosets(*s3, subring_from_members(*s3, {0, 1}),
                                 trivial_subring(*s3), fp);
        auto res = coset_product_formula(dec, fp, 2);
        CHECK(res.pass);
        CHECK(res.block == 1);
        CHECK(std::fabs(res.scalar - 1.0) < 1e-9);  // 2*2/4
    }
    SECTION("trivial pair gives scalar 1/FPdim(x)") {
        auto fib = testsup::ring("fib");
        auto fp = compute_fp_dims(*fib);
        auto dec = double_cosets(*fib, trivial_subring(*fib), trivial_subring(*fib), fp);
        auto res = coset_product_formula(dec, fp, 1);
        CHECK(res.pass);
        CHECK(std::fabs(res.scalar - 1.0 / fp.dims[1]) < 1e-9);
    }
    SECTION("group ring: scalar 1 against the coset sum") {
        auto ring = group_ring(testsup::group("s3"));
        auto fp = compute_fp_dims(*ring);
        auto k = subring_from_members(*ring, {0, 1});
        auto dec = double_cosets(*ring, k, k, fp);
        auto res = coset_product_formula(dec, fp, 2);
        CHECK(res.pass);
        CHECK(res.block == 1);
        CHECK(std::fabs(res.scalar - 1.0) < 1e-9);  // 2*1*2/4
    }
    SECTION("holds for every basis element across fixture subring pairs") {
        auto ty = testsup::ring("ty-z2z2");
        auto fp = compute_fp_dims(*ty);
        auto subs = all_subrings(*ty);
        for (const auto& d : subs)
            for (const auto& e : subs) {
                auto dec = double_cosets(*ty, d, e, fp);
                for (int x = 0; x < ty->rank(); ++x)
                    REQUIRE(coset_product_formula(dec, fp, x).pass);
            }
    }
}

TEST_CASE("object generated relations") {
    auto ising = testsup::ring("ising");
    auto fp = compute_fp_dims(*ising);
    auto singles = object_generated_relation(*ising, 0, 0, fp);
    CHECK(singles.blocks.size() == 3);
    auto by_psi = object_generated_relation(*ising, 0, 1, fp);
    REQUIRE(by_psi.blocks.size() == 2);
    CHECK(by_psi.blocks[0] == std::vector<int>{0, 1});
    CHECK(by_psi.blocks[1] == std::vector<int>{2});

    auto fib = testsup::ring("fib");
    auto fpf = compute_fp_dims(*fib);
    CHECK(object_generated_relation(*fib, 0, 1, fpf).blocks.size() == 1);
}

TEST_CASE("tensor products: axioms, dimensions and partitions factor") {
    struct Combo {
        const char* a;
        const char* b;
        std::vector<int> d_a, d_b;  // subring members on each side
    };
    const Combo combos[] = {
        {"fib", "ising", {0, 1}, {0, 1}},
        {"ising", "ising", {0, 1}, {0}},
        {"rep-a4", "fib", {0, 1, 2}, {0, 1}},
        {"rep-s3", "rep-z2", {0, 1}, {0, 1}},
    };
    for (const auto& c : combos) {
        auto ra = testsup::ring(c.a);
        auto rb = testsup::ring(c.b);
        auto prod = testsup::product_ring(*ra, *rb);
        INFO(prod->name());
        REQUIRE(validate_ring(*prod).empty());

        auto fpa = compute_fp_dims(*ra);
        auto fpb = compute_fp_dims(*rb);
        auto fp = compute_fp_dims(*prod);
        const int nb = rb->rank();
        for (int i = 0; i < ra->rank(); ++i)
            for (int j = 0; j < nb; ++j)
                CHECK(std::fabs(fp.dims[i * nb + j] - fpa.dims[i] * fpb.dims[j]) < 1e-9);

        // D = D_a x D_b: blocks are products of the one-sided blocks
        std::vector<int> d_members;
        for (int i : c.d_a)
            for (int j : c.d_b) d_members.push_back(i * nb + j);
        auto d = subring_from_members(*prod, d_members);
        auto dec = double_cosets(*prod, d, trivial_subring(*prod), fp);
        auto dec_a = double_cosets(*ra, subring_from_members(*ra, c.d_a),
                                   trivial_subring(*ra), fpa);
        auto dec_b = double_cosets(*rb, subring_from_members(*rb, c.d_b),
                                   trivial_subring(*rb), fpb);
        CHECK(dec.blocks.size() == dec_a.blocks.size() * dec_b.blocks.size());
        for (int i = 0; i < ra->rank(); ++i)
            for (int j = 0; j < nb; ++j)
                for (int k = 0; k < ra->rank(); ++k)
                    for (int l = 0; l < nb; ++l) {
                        bool together = dec.block_of[i * nb + j] == dec.block_of[k * nb + l];
                        bool expected = dec_a.block_of[i] == dec_a.block_of[k] &&
                                        dec_b.block_of[j] == dec_b.block_of[l];
                        REQUIRE(together == expected);
                    }
        auto eig = verify_principal_eigendata(dec, fp, 1e-9);
        CHECK(eig.pass);
        CHECK(std::fabs(eig.expected - fp_dim(d, fp)) < 1e-9);
    }
}

TEST_CASE("block stability and the unit block") {
    auto ising = testsup::ring("ising");
    auto fp = compute_fp_dims(*ising);
    auto d = subring_from_members(*ising, {0, 1});
    auto dec = double_cosets(*ising, d, d, fp);
    // support(R_D A_i R_E) stays inside each block
    for (const auto& blk : dec.blocks) {
        Mask bm = members_mask(blk);
        CHECK((ising->support_of_product(d.mask, ising->support_of_product(bm, d.mask)) &
               ~bm) == 0);
    }
    // with d = e, the unit block is exactly d
    CHECK(members_mask(dec.blocks[dec.block_of[0]]) == d.mask);
}
