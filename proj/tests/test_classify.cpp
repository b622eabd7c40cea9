#include <catch2/catch_amalgamated.hpp>

#include "taftlie/classify.hpp"

using namespace taftlie;

TEST_CASE("extract_gamma") {
    LieAlgebra sl2 = make_sl(2, 2);

    SECTION("round trip through build_L_gamma") {
        REQUIRE(extract_gamma(build_L_gamma(sl2, 2, CycNum::one(2))) == CycNum::one(2));
        REQUIRE(extract_gamma(build_L_gamma(make_sl(2, 3), 3, CycNum::zero(3))) == CycNum::zero(3));
    }
    SECTION("L_1(sl2) at m=2 has gamma = 1/4") {
        REQUIRE(extract_gamma(build_L_alpha(sl2, 2, CycNum::one(2))) ==
                CycNum::from_rat(2, Rat(1, 4)));
    }
    SECTION("zero v-action has no gamma") {
        REQUIRE_THROWS_AS(extract_gamma(build_L_alpha(sl2, 2, CycNum::zero(2))), Error);
    }
}

TEST_CASE("classification cases") {
    LieAlgebra sl2 = make_sl(2, 2);

    SECTION("alpha = 0: zero v-action") {
        ClassificationResult r = classify(build_L_alpha(sl2, 2, CycNum::zero(2)));
        REQUIRE(r.kind == ClassCase::v_zero);
        REQUIRE_FALSE(r.gamma.has_value());
    }
    SECTION("alpha = 1: semisimple non-simple with gamma = 1/4") {
        ClassificationResult r = classify(build_L_alpha(sl2, 2, CycNum::one(2)));
        REQUIRE(r.kind == ClassCase::semisimple_nonsimple);
        REQUIRE(r.gamma.has_value());
        REQUIRE(*r.gamma == CycNum::from_rat(2, Rat(1, 4)));
        REQUIRE(r.base_profile.has_value());
        REQUIRE(r.base_profile->dim == 3);
        REQUIRE(r.base_profile->radical_dim == 0);
        REQUIRE(r.base_profile->simplicity == Simplicity::simple);
        REQUIRE(r.certificates.all_pass());
    }
    SECTION("gamma = 0: non-semisimple ladder with t + 1 = m") {
        for (long m : {2L, 3L}) {
            ClassificationResult r = classify(build_L_gamma(make_sl(2, m), m, CycNum::zero(m)));
            REQUIRE(r.kind == ClassCase::non_semisimple);
            REQUIRE(r.t.has_value());
            REQUIRE(*r.t + 1 == m);
            REQUIRE(r.gamma.has_value());
            REQUIRE(r.gamma->is_zero());
            REQUIRE(r.certificates.all_pass());
            // the named ladder certificates are present and pass
            for (const char* name :
                 {"radical_is_positive_part", "radical_is_ladder_prefix", "ladder_layer_dimensions",
                  "kernel_is_degree_zero", "degree_zero_simple", "minimal_graded_ideal"}) {
                bool found = false;
                for (const auto& c : r.certificates.checks)
                    if (c.check == name) {
                        found = true;
                        REQUIRE(c.status == CheckStatus::pass);
                    }
                INFO(name);
                REQUIRE(found);
            }
        }
    }
    SECTION("round trip recovers gamma across the corpus") {
        for (long m : {2L, 3L}) {
            for (int n : {2, 3}) {
                LieAlgebra b = make_sl(n, m);
                for (const CycNum& g :
                     {CycNum::zero(m), CycNum::one(m), CycNum::zeta(m), CycNum::from_int(m, 2)}) {
                    ClassificationResult r = classify(build_L_gamma(b, m, g));
                    REQUIRE(r.gamma.has_value());
                    REQUIRE(*r.gamma == g);
                    REQUIRE(r.kind == (g.is_zero() ? ClassCase::non_semisimple
                                                   : ClassCase::semisimple_nonsimple));
                    if (r.base_profile) REQUIRE(r.base_profile->dim == b.dim);
                }
            }
        }
    }
    SECTION("alpha != 0 classifies with gamma = 1/(alpha^m (1-zeta)^m)") {
        for (long m : {2L, 3L}) {
            LieAlgebra b = make_sl(2, m);
            for (const CycNum& a : {CycNum::one(m), CycNum::from_int(m, 2)}) {
                ClassificationResult r = classify(build_L_alpha(b, m, a));
                REQUIRE(r.kind == ClassCase::semisimple_nonsimple);
                CycNum expect = (a.pow(m) * (CycNum::one(m) - CycNum::zeta(m)).pow(m)).inverse();
                REQUIRE(*r.gamma == expect);
            }
        }
    }
    SECTION("a module with proper invariant ideals is a precondition violation") {
        LieAlgebra two = direct_sum(sl2, sl2);
        HModuleLie M = make_hmodule(two, make_taft(2), Mat::identity(2, 6), Mat(2, 6, 6));
        REQUIRE_THROWS_AS(classify(M), VerificationError);
    }
}

TEST_CASE("family isomorphism orbit law") {
    LieAlgebra sl2 = make_sl(2, 2);
    auto params = [&](const CycNum& a) { return FamilyParams{Family::L_alpha, sl2, 2, a}; };

    SECTION("alpha and -alpha are isomorphic at m=2 via k=1") {
        FamilyIsoResult r = are_isomorphic_family(params(CycNum::one(2)), params(CycNum::from_int(2, -1)));
        REQUIRE(r.isomorphic);
        REQUIRE(r.shift == 1);
        REQUIRE(r.certificate.has_value());
        REQUIRE(verify_iso(*r.certificate).all_pass());
    }
    SECTION("1 and 2 are not isomorphic; gamma invariants 1/4 vs 1/16 reported") {
        FamilyIsoResult r = are_isomorphic_family(params(CycNum::one(2)), params(CycNum::from_int(2, 2)));
        REQUIRE_FALSE(r.isomorphic);
        REQUIRE(r.detail.find("1/4") != std::string::npos);
        REQUIRE(r.detail.find("1/16") != std::string::npos);
    }
    SECTION("alpha = 0 matches itself with k=0") {
        LieAlgebra b3 = make_sl(2, 3);
        FamilyParams p{Family::L_alpha, b3, 3, CycNum::zero(3)};
        FamilyIsoResult r = are_isomorphic_family(p, p);
        REQUIRE(r.isomorphic);
        REQUIRE(r.shift == 0);
    }
    SECTION("gamma invariant separates whenever extract_gamma differs") {
        // orbit of 1 at m=2 is {1, -1}; 1/2 is off-orbit with gamma 4 != 1/4
        FamilyIsoResult r = are_isomorphic_family(params(CycNum::one(2)),
                                                  params(CycNum::from_rat(2, Rat(1, 2))));
        REQUIRE_FALSE(r.isomorphic);
        CycNum g1 = extract_gamma(build_L_alpha(sl2, 2, CycNum::one(2)));
        CycNum g2 = extract_gamma(build_L_alpha(sl2, 2, CycNum::from_rat(2, Rat(1, 2))));
        REQUIRE_FALSE(g1 == g2);
    }
    SECTION("different conductors are a usage error") {
        FamilyParams p2{Family::L_alpha, sl2, 2, CycNum::one(2)};
        FamilyParams p3{Family::L_alpha, make_sl(2, 3), 3, CycNum::one(3)};
        REQUIRE_THROWS_AS(are_isomorphic_family(p2, p3), Error);
    }
}
