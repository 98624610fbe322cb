#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "kzero/fp.hpp"
#include "kzero/group.hpp"
#include "kzero/subring.hpp"
#include "support.hpp"

using namespace kzero;

namespace {
constexpr double kGolden = 1.6180339887498949;  // positive root of x^2 = x + 1
}

TEST_CASE("Fibonacci dimension is the golden ratio") {
    auto fp = compute_fp_dims(*testsup::ring("fib"));
    REQUIRE(fp.dims.size() == 2);
    CHECK(fp.dims[0] == 1.0);
    CHECK(std::fabs(fp.dims[1] - kGolden) < 1e-9);
    CHECK(std::fabs(fp.dims[1] * fp.dims[1] - fp.dims[1] - 1.0) < 1e-9);
}

TEST_CASE("Ising dimensions are (1, 1, sqrt 2)") {
    auto fp = compute_fp_dims(*testsup::ring("ising"));
    CHECK(std::fabs(fp.dims[1] - 1.0) < 1e-9);
    CHECK(std::fabs(fp.dims[2] - std::sqrt(2.0)) < 1e-9);
    CHECK(std::fabs(fp.ring_dim - 4.0) < 1e-9);
}

TEST_CASE("group rings have all-ones dimensions") {
    for (const char* name : {"s3", "d4", "q8", "a4", "z5"}) {
        auto ring = group_ring(testsup::group(name));
        auto fp = compute_fp_dims(*ring);
        INFO(name);
        for (double d : fp.dims) CHECK(std::fabs(d - 1.0) < 1e-9);
        CHECK(std::fabs(fp.ring_dim - ring->rank()) < 1e-9);
    }
}

TEST_CASE("dimensions match the closed forms on every named fixture") {
    auto check = [](const char* name, std::vector<double> want) {
        auto fp = compute_fp_dims(*testsup::ring(name));
        INFO(name);
        REQUIRE(fp.dims.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i)
            CHECK(std::fabs(fp.dims[i] - want[i]) < 1e-9);
    };
    check("rep-s3", {1, 1, 2});
    check("rep-s4", {1, 1, 2, 3, 3});  // character degrees
    check("rep-a4", {1, 1, 1, 3});
    check("rep-d4", {1, 1, 1, 1, 2});
    check("rep-q8", {1, 1, 1, 1, 2});
    check("ty-z2z2", {1, 1, 1, 1, 2});  // the TY object has dim sqrt(4)
    check("rep-z6", {1, 1, 1, 1, 1, 1});
}

TEST_CASE("every fixture: residual gate, dims >= 1, dual symmetry") {
    for (const auto& [name, doc] : testsup::corpus().rings) {
        INFO(name);
        auto fp = compute_fp_dims(*doc.ring);
        CHECK(fp.residual <= 1e-8);
        for (int i = 0; i < doc.ring->rank(); ++i) {
            CHECK(fp.dims[i] >= 1.0 - 1e-9);
            CHECK(std::fabs(fp.dims[i] - fp.dims[doc.ring->dual(i)]) < 1e-9);
        }
    }
}

TEST_CASE("power iteration is start-vector independent") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.1, 5.0);
    for (const auto& [name, doc] : testsup::corpus().rings) {
        INFO(name);
        FPOptions opt;
        auto base = compute_fp_dims(*doc.ring, opt);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<double> start(doc.ring->rank());
            for (double& x : start) x = u(rng);
            opt.start = start;
            auto fp = compute_fp_dims(*doc.ring, opt);
            for (int i = 0; i < doc.ring->rank(); ++i)
                CHECK(std::fabs(fp.dims[i] - base.dims[i]) <= 10 * opt.tol);
        }
    }
}

TEST_CASE("regular elements") {
    auto ising = testsup::ring("ising");
    auto fp = compute_fp_dims(*ising);
    SECTION("full Ising: 1 + psi + sqrt(2) sigma") {
        auto reg = regular_element_of_mask(*ising, ising->full_mask(), fp);
        CHECK(reg.coeffs[0] == 1.0);
        CHECK(std::fabs(reg.coeffs[1] - 1.0) < 1e-9);
        CHECK(std::fabs(reg.coeffs[2] - std::sqrt(2.0)) < 1e-9);
        CHECK(std::fabs(reg.fpdim - 4.0) < 1e-9);
    }
    SECTION("trivial subring gives the unit") {
        auto reg = regular_element_of_mask(*ising, bit(0), fp);
        CHECK(reg.coeffs == std::vector<double>{1, 0, 0});
        CHECK(reg.fpdim == 1.0);
    }
    SECTION("Rep(S3) restricted to {1, s}") {
        auto s3 = testsup::ring("rep-s3");
        auto fps = compute_fp_dims(*s3);
        auto reg = regular_element(*s3, subring_from_members(*s3, {0, 1}), fps);
        CHECK(std::fabs(reg.coeffs[0] - 1.0) < 1e-9);
        CHECK(std::fabs(reg.coeffs[1] - 1.0) < 1e-9);
        CHECK(reg.coeffs[2] == 0.0);
        CHECK(reg.support == (bit(0) | bit(1)));
    }
    SECTION("regular elements are dual-invariant") {
        for (const auto& [name, doc] : testsup::corpus().rings) {
            const FusionRing& r = *doc.ring;
            auto fpr = compute_fp_dims(r);
            auto reg = regular_element(r, full_subring(r), fpr);
            CHECK(r.dual_mask(reg.support) == reg.support);
            for (int i = 0; i < r.rank(); ++i)
                CHECK(std::fabs(reg.coeffs[i] - reg.coeffs[r.dual(i)]) < 1e-9);
        }
    }
}

TEST_CASE("regular element absorption holds on every fixture") {
    for (const auto& [name, doc] : testsup::corpus().rings) {
        INFO(name);
        auto fp = compute_fp_dims(*doc.ring);
        CHECK(check_regular_absorption(*doc.ring, fp).empty());
    }
}

TEST_CASE("degenerate numerics are reported as errors") {
    auto fib = testsup::ring("fib");
    FPOptions opt;
    opt.max_iter = 0;
    CHECK_THROWS_AS(compute_fp_dims(*fib, opt), FPError);
    FPOptions bad_start;
    bad_start.start = std::vector<double>{1.0, -1.0};
    CHECK_THROWS_AS(compute_fp_dims(*fib, bad_start), FPError);
}
