#include <catch2/catch_amalgamated.hpp>

#include "taftlie/json_io.hpp"

using namespace taftlie;

TEST_CASE("CycNum JSON form") {
    CycNum x = CycNum::from_rat(4, Rat(1, 4)) + CycNum::zeta(4);
    Json j = to_json(x);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);  // phi(4) = 2
    REQUIRE(j[0].get<std::string>() == "1/4");
    REQUIRE(j[1].get<std::string>() == "1");
    REQUIRE(cyc_from_json(4, j) == x);
}

TEST_CASE("Mat round trip") {
    Mat a(3, 2, 3);
    a.at(0, 1) = CycNum::zeta(3);
    a.at(1, 2) = CycNum::from_rat(3, Rat(-2, 5));
    REQUIRE(mat_from_json(3, to_json(a)) == a);
}

TEST_CASE("LieAlgebra sparse triple round trip") {
    LieAlgebra sl2 = make_sl(2, 2);
    Json j = to_json(sl2);
    REQUIRE(j.at("dim").get<int>() == 3);
    LieAlgebra back = lie_from_json(j);
    REQUIRE(back.dim == sl2.dim);
    REQUIRE(back.m == sl2.m);
    REQUIRE(back.sc == sl2.sc);
    REQUIRE(back.labels == sl2.labels);
}

TEST_CASE("Taft module round trip re-verifies") {
    HModuleLie M = build_L_alpha(make_sl(2, 2), 2, CycNum::one(2));
    Json j = to_json(M);
    REQUIRE(j.at("H").get<std::string>() == "taft");
    HModuleLie back = hmodule_from_json(j);
    REQUIRE(back.C == M.C);
    REQUIRE(back.V == M.V);
    REQUIRE(back.L.sc == M.L.sc);
}

TEST_CASE("custom module round trip") {
    auto [H, M] = make_dual_idempotent_example();
    Json j = to_json(M);
    REQUIRE(j.at("H").get<std::string>() == "custom");
    HModuleLie back = hmodule_from_json(j);
    REQUIRE(back.action.size() == 2);
    REQUIRE(back.action[0] == M.action[0]);
    REQUIRE(verify_hopf_axioms(back.H).all_pass());
}

TEST_CASE("corrupted modules fail on load") {
    HModuleLie M = build_L_alpha(make_sl(2, 2), 2, CycNum::one(2));
    Json j = to_json(M);
    j["V"][0][0][0] = "7";  // destroy the skew relation
    REQUIRE_THROWS_AS(hmodule_from_json(j), VerificationError);
}

TEST_CASE("report JSON carries statuses and witnesses") {
    Report rep;
    rep.pass("first");
    rep.fail("second", "the witness");
    rep.skip("third", "why not");
    Json j = to_json(rep);
    REQUIRE(j.size() == 3);
    REQUIRE(j[0].at("status").get<std::string>() == "pass");
    REQUIRE(j[1].at("status").get<std::string>() == "fail");
    REQUIRE(j[1].at("witness").get<std::string>() == "the witness");
    REQUIRE(j[2].at("status").get<std::string>() == "n/a");
}

TEST_CASE("classification result JSON") {
    ClassificationResult r = classify(build_L_alpha(make_sl(2, 2), 2, CycNum::one(2)));
    Json j = to_json(r);
    REQUIRE(j.at("case").get<std::string>() == "semisimple_nonsimple");
    REQUIRE(j.at("gamma")[0].get<std::string>() == "1/4");
    REQUIRE(j.at("B_profile").at("dim").get<int>() == 3);
}
