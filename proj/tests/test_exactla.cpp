#include <catch2/catch_amalgamated.hpp>

#include "taftlie/construct.hpp"
#include "taftlie/matrix.hpp"

using namespace taftlie;

TEST_CASE("rank") {
    REQUIRE(rank(Mat(2, 3, 3)) == 0);
    REQUIRE(rank(Mat::identity(3, 5)) == 5);

    SECTION("m=3 dependent and independent 2x2 pairs, by hand elimination") {
        CycNum z = CycNum::zeta(3);
        // (z^2)*(1, z) = (z^2, z^3) = (z^2, 1): dependent rows.
        Mat dep(3, 2, 2);
        dep.at(0, 0) = CycNum::one(3);
        dep.at(0, 1) = z;
        dep.at(1, 0) = z * z;
        dep.at(1, 1) = CycNum::one(3);
        REQUIRE(rank(dep) == 1);
        // flipping the sign of the last entry breaks the dependency
        Mat ind = dep;
        ind.at(1, 1) = -CycNum::one(3);
        REQUIRE(rank(ind) == 2);
    }
}

TEST_CASE("kernel") {
    REQUIRE(kernel(Mat::identity(2, 4)).is_zero());
    REQUIRE(kernel(Mat(2, 4, 4)).is_full());

    SECTION("V of L(sl2, 0) at m=2 has a 3-dimensional kernel") {
        HModuleLie M = build_L_gamma(make_sl(2, 2), 2, CycNum::zero(2));
        REQUIRE(kernel(M.V).dim() == 3);
    }
    SECTION("rank-nullity on random matrices") {
        SmallRng rng(kDefaultSeed);
        for (long m : {2L, 3L}) {
            for (int t = 0; t < 10; ++t) {
                Mat a(m, 4, 6);
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 6; ++j) a.at(i, j) = CycNum::from_int(m, rng.next(-2, 2));
                REQUIRE(rank(a) + kernel(a).dim() == a.cols());
            }
        }
    }
}

TEST_CASE("eigenspace") {
    REQUIRE(eigenspace(Mat::identity(3, 4), CycNum::one(3)).is_full());

    SECTION("C of L_1(sl2) at m=2: diagonal and antidiagonal, both dim 3") {
        LieAlgebra sl2 = make_sl(2, 2);
        HModuleLie M = build_L_alpha(sl2, 2, CycNum::one(2));
        SubspaceBasis diag = eigenspace(M.C, CycNum::one(2));
        SubspaceBasis anti = eigenspace(M.C, -CycNum::one(2));
        REQUIRE(diag.dim() == 3);
        REQUIRE(anti.dim() == 3);
        // (e, e) is fixed by C, (e, -e) is negated
        Vec v = zero_vec(2, 6);
        v[0] = CycNum::one(2);
        v[3] = CycNum::one(2);
        REQUIRE(diag.contains(v));
        v[3] = -CycNum::one(2);
        REQUIRE(anti.contains(v));
    }
    SECTION("eigenspaces of C decompose the space when C^m = I") {
        LieAlgebra sl2 = make_sl(2, 3);
        HModuleLie M = build_L_alpha(sl2, 3, CycNum::zeta(3));
        RrefBuilder all(3, 9);
        int total = 0;
        for (long i = 0; i < 3; ++i) {
            SubspaceBasis comp = eigenspace(M.C, CycNum::zeta_power(3, i));
            total += comp.dim();
            for (const auto& r : comp.rows) REQUIRE(all.add(r).has_value());
        }
        REQUIRE(total == 9);
        REQUIRE(all.dim() == 9);
    }
}

TEST_CASE("closure") {
    LieAlgebra sl2 = make_sl(2, 2);
    HModuleLie M = build_L_alpha(sl2, 2, CycNum::one(2));
    std::vector<Mat> ops = M.invariance_generators();

    REQUIRE(closure(SubspaceBasis::zero(2, 6), ops).is_zero());
    REQUIRE(closure(SubspaceBasis::full(2, 6), ops).is_full());

    SECTION("one vector generates everything in L_1(sl2)") {
        SubspaceBasis seed = SubspaceBasis::span(2, 6, {unit_vec(2, 6, 0)});
        SubspaceBasis c = closure(seed, ops);
        REQUIRE(c.is_full());
    }
    SECTION("the result is literally invariant under every operator") {
        SubspaceBasis seed = SubspaceBasis::span(2, 6, {unit_vec(2, 6, 2)});
        SubspaceBasis c = closure(seed, {M.C, M.V});
        for (const auto& op : std::vector<Mat>{M.C, M.V})
            for (const auto& w : c.rows) REQUIRE(c.contains(op.apply(w)));
        REQUIRE(c.contains_subspace(seed));
    }
}

TEST_CASE("operator algebra dimension") {
    SECTION("no generators: scalars only") {
        REQUIRE(operator_algebra_dim({}, 2, 3) == 1);
    }
    SECTION("all matrix units generate the full 2x2 algebra") {
        std::vector<Mat> units;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Mat e(3, 2, 2);
                e.at(i, j) = CycNum::one(3);
                units.push_back(e);
            }
        REQUIRE(operator_algebra_dim(units, 3, 2) == 4);
    }
    SECTION("L_1(sl2) at m=2 generates all of End(L)") {
        HModuleLie M = build_L_alpha(make_sl(2, 2), 2, CycNum::one(2));
        REQUIRE(M.full_operator_algebra_dim() == 36);
    }
}

TEST_CASE("matrix inverse") {
    SmallRng rng(kDefaultSeed + 2);
    Mat a(3, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a.at(i, j) = CycNum::from_int(3, rng.next(-3, 3));
    if (is_invertible(a)) {
        REQUIRE(a * inverse(a) == Mat::identity(3, 4));
        REQUIRE(inverse(a) * a == Mat::identity(3, 4));
    }
    Mat sing(3, 2, 2);
    sing.at(0, 0) = CycNum::one(3);
    sing.at(1, 0) = CycNum::one(3);
    REQUIRE_THROWS_AS(inverse(sing), Error);
}
