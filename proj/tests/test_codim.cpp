#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "taftlie/codim.hpp"
#include "taftlie/construct.hpp"

using namespace taftlie;

namespace {

// Test-local elimination, independent of RrefBuilder: plain Gaussian
// elimination with partial pivoting over rows stored densely.
int oracle_rank(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (std::size_t i = static_cast<std::size_t>(r); i < rows.size(); ++i)
            if (!rows[i][c].is_zero()) { piv = static_cast<int>(i); break; }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
        for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            CycNum f = rows[i][c] / rows[static_cast<std::size_t>(r)][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!rows[static_cast<std::size_t>(r)][j].is_zero())
                    rows[i][j] -= f * rows[static_cast<std::size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

// All full binary bracketings of n leaves, as nested index pairs.
struct Tree {
    int leaf = -1;  // >= 0 for a leaf slot
    int left = -1, right = -1;
};
void all_trees(int lo, int hi, std::vector<Tree>& arena, std::vector<int>& out) {
    if (lo == hi) {
        arena.push_back({lo, -1, -1});
        out.push_back(static_cast<int>(arena.size()) - 1);
        return;
    }
    for (int mid = lo; mid < hi; ++mid) {
        std::vector<int> lefts, rights;
        all_trees(lo, mid, arena, lefts);
        all_trees(mid + 1, hi, arena, rights);
        for (int l : lefts)
            for (int rr : rights) {
                arena.push_back({-1, l, rr});
                out.push_back(static_cast<int>(arena.size()) - 1);
            }
    }
}

Vec eval_tree(const HModuleLie& M, const std::vector<Tree>& arena, int node,
              const std::vector<int>& perm, const std::vector<int>& hs,
              const std::vector<int>& tuple) {
    const Tree& t = arena[static_cast<std::size_t>(node)];
    if (t.leaf >= 0) {
        int pos = t.leaf;
        return M.action[static_cast<std::size_t>(hs[static_cast<std::size_t>(pos)])]
            .column(tuple[static_cast<std::size_t>(perm[static_cast<std::size_t>(pos)])]);
    }
    return M.L.bracket(eval_tree(M, arena, t.left, perm, hs, tuple),
                       eval_tree(M, arena, t.right, perm, hs, tuple));
}

// Brute-force reference: rank over ALL bracketing shapes, not just
// left-normed words.  Jacobi rewriting says this cannot exceed the
// left-normed rank.
int oracle_codimension_all_bracketings(const HModuleLie& M, int n) {
    std::vector<Tree> arena;
    std::vector<int> roots;
    all_trees(0, n - 1, arena, roots);
    const int dl = M.L.dim;
    std::size_t tuple_count = 1;
    for (int i = 0; i < n; ++i) tuple_count *= static_cast<std::size_t>(dl);

    std::vector<Vec> rows;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> hs(static_cast<std::size_t>(n), 0);
        while (true) {
            for (int root : roots) {
                Vec row = zero_vec(M.L.m, static_cast<int>(tuple_count) * dl);
                std::vector<int> tuple(static_cast<std::size_t>(n), 0);
                for (std::size_t tix = 0; tix < tuple_count; ++tix) {
                    Vec val = eval_tree(M, arena, root, perm, hs, tuple);
                    for (int r = 0; r < dl; ++r)
                        row[tix * static_cast<std::size_t>(dl) + static_cast<std::size_t>(r)] =
                            val[static_cast<std::size_t>(r)];
                    int pos = n - 1;
                    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == dl - 1) {
                        tuple[static_cast<std::size_t>(pos)] = 0;
                        --pos;
                    }
                    if (pos >= 0) ++tuple[static_cast<std::size_t>(pos)];
                }
                rows.push_back(std::move(row));
            }
            int pos = n - 1;
            while (pos >= 0 && hs[static_cast<std::size_t>(pos)] == M.H.dim - 1) {
                hs[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++hs[static_cast<std::size_t>(pos)];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return oracle_rank(std::move(rows));
}

}  // namespace

TEST_CASE("spanning word enumeration") {
    REQUIRE(enumerate_spanning(1, make_taft(2)).size() == 4);
    REQUIRE(enumerate_spanning(2, make_taft(2)).size() == 32);
    REQUIRE(enumerate_spanning(2, make_dual_idempotent_hopf()).size() == 8);
}

TEST_CASE("word evaluation") {
    SECTION("degree 1 with the unit decoration is the identity") {
        HModuleLie M = build_L_gamma(make_sl(2, 2), 2, CycNum::zero(2));
        HWord w{1, {0}, {M.H.index_one}};
        for (int i = 0; i < 6; ++i) REQUIRE(evaluate_word(M, w, {i}) == unit_vec(2, 6, i));
    }
    SECTION("[x1, x2] on a repeated argument vanishes") {
        HModuleLie M = make_hmodule(make_sl(2, 2), make_taft(2), Mat::identity(2, 3), Mat(2, 3, 3));
        HWord w{2, {0, 1}, {M.H.index_one, M.H.index_one}};
        REQUIRE(vec_is_zero(evaluate_word(M, w, {0, 0})));
    }
    SECTION("x^{cv} and x^{v} agree on L(sl2,0) at m=2") {
        HModuleLie M = build_L_gamma(make_sl(2, 2), 2, CycNum::zero(2));
        int idx_cv = 3;  // basis order 1, c, v, cv
        HWord wv{1, {0}, {M.H.index_v}}, wcv{1, {0}, {idx_cv}};
        for (int i = 0; i < 6; ++i) REQUIRE(evaluate_word(M, wv, {i}) == evaluate_word(M, wcv, {i}));
    }
}

TEST_CASE("codimension of L(sl2,0) at m=2, degree 1") {
    HModuleLie M = build_L_gamma(make_sl(2, 2), 2, CycNum::zero(2));
    REQUIRE(codimension(M, 1) == 3);

    SECTION("independent oracle: 4 x 36 matrix from direct matrix products") {
        std::vector<Mat> ops{Mat::identity(2, 6), M.C, M.V, M.C * M.V};
        std::vector<Vec> rows;
        for (const auto& op : ops) {
            // row = evaluations of x^h on each basis vector = flattened op
            Vec row;
            for (int col = 0; col < 6; ++col) {
                Vec v = op.column(col);
                row.insert(row.end(), v.begin(), v.end());
            }
            rows.push_back(std::move(row));
        }
        REQUIRE(rows[0].size() == 36);
        REQUIRE(oracle_rank(rows) == 3);
    }
}

TEST_CASE("degenerate and reference codimensions") {
    SECTION("one-dimensional abelian algebra, trivial action: c_2 = 0") {
        HModuleLie M = make_hmodule_custom(LieAlgebra(1, 1), make_trivial_hopf(1),
                                           {Mat::identity(1, 1)});
        REQUIRE(codimension(M, 2) == 0);
    }
    SECTION("ordinary codimensions of sl2 via the trivial Hopf algebra") {
        HModuleLie M = make_hmodule_custom(make_sl(2, 1), make_trivial_hopf(1),
                                           {Mat::identity(1, 3)});
        REQUIRE(codimension(M, 1) == 1);
        REQUIRE(codimension(M, 2) == 1);
        REQUIRE(oracle_codimension_all_bracketings(M, 2) == 1);
        // left-normed words span everything Jacobi allows
        REQUIRE(codimension(M, 3) == oracle_codimension_all_bracketings(M, 3));
    }
    SECTION("the all-bracketings oracle agrees on a Taft module") {
        HModuleLie M = build_L_gamma(make_sl(2, 2), 2, CycNum::zero(2));
        REQUIRE(codimension(M, 2) == oracle_codimension_all_bracketings(M, 2));
    }
}

TEST_CASE("rank does not depend on the enumeration order") {
    HModuleLie M = build_L_gamma(make_sl(2, 2), 2, CycNum::zero(2));
    for (int n : {1, 2}) {
        std::vector<HWord> words = enumerate_spanning(n, M.H);
        std::vector<HWord> reversed(words.rbegin(), words.rend());
        REQUIRE(codimension(M, n) == codimension(M, n, kDefaultCodimBudget, &reversed));
    }
}

TEST_CASE("upper bound report") {
    HModuleLie M = build_L_gamma(make_sl(2, 2), 2, CycNum::zero(2));
    SECTION("n=1: 3 <= 36") {
        BoundReport b = check_bound(M, 1);
        REQUIRE(b.c_n == 3);
        REQUIRE(b.bound == 36);
        REQUIRE(b.within_bound);
    }
    SECTION("n=2: c_2 <= 216") {
        BoundReport b = check_bound(M, 2);
        REQUIRE(b.bound == 216);
        REQUIRE(b.within_bound);
        REQUIRE(b.c_n >= 1);
    }
    SECTION("trivial-action sl2, n=2: c_2 <= 27") {
        HModuleLie T = make_hmodule(make_sl(2, 2), make_taft(2), Mat::identity(2, 3), Mat(2, 3, 3));
        BoundReport b = check_bound(T, 2);
        REQUIRE(b.bound == 27);
        REQUIRE(b.within_bound);
    }
    SECTION("c_1 >= 1 on H-simple corpus modules") {
        for (long m : {2L, 3L}) {
            REQUIRE(check_bound(build_L_gamma(make_sl(2, m), m, CycNum::zero(m)), 1).c_n >= 1);
            REQUIRE(check_bound(build_L_alpha(make_sl(2, m), m, CycNum::one(m)), 1).c_n >= 1);
        }
    }
}

TEST_CASE("budget guard") {
    HModuleLie M = build_L_gamma(make_sl(2, 2), 2, CycNum::zero(2));
    // degree 2 needs 2! * 16 * 6^3 = 6912 entries
    REQUIRE(codim_matrix_entries(M, 2) == 6912);
    REQUIRE_THROWS_AS(codimension(M, 2, 100), BudgetExceeded);
    try {
        codimension(M, 2, 100);
    } catch (const BudgetExceeded& e) {
        REQUIRE(e.required == "6912");
        REQUIRE(e.budget == 100);
    }
}

TEST_CASE("H-identities") {
    SECTION("the zero combination is an identity") {
        HModuleLie M = build_L_gamma(make_sl(2, 2), 2, CycNum::zero(2));
        REQUIRE(is_h_identity(M, {}));
    }
    SECTION("[x1^{e0}, x2^{e0}] is an identity of the gl2 example") {
        auto [H, M] = make_dual_idempotent_example();
        HWord w{2, {0, 1}, {0, 0}};
        // every one of the 16 basis-pair evaluations vanishes
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) REQUIRE(vec_is_zero(evaluate_word(M, w, {i, j})));
        REQUIRE(is_h_identity(M, {{CycNum::one(1), w}}));
    }
    SECTION("[x1, x2] is not an identity of sl2") {
        HModuleLie M = make_hmodule_custom(make_sl(2, 1), make_trivial_hopf(1),
                                           {Mat::identity(1, 3)});
        HWord w{2, {0, 1}, {0, 0}};
        REQUIRE_FALSE(is_h_identity(M, {{CycNum::one(1), w}}));
        REQUIRE(evaluate_word(M, w, {0, 2}) == unit_vec(1, 3, 1));  // [e,f] = h
    }
    SECTION("mixed degrees are rejected") {
        HModuleLie M = build_L_gamma(make_sl(2, 2), 2, CycNum::zero(2));
        HWord w1{1, {0}, {0}}, w2{2, {0, 1}, {0, 0}};
        REQUIRE_THROWS_AS(is_h_identity(M, {{CycNum::one(2), w1}, {CycNum::one(2), w2}}), Error);
    }
}
