#pragma once

// H-codimensions by exact rank: the span of multilinear Lie H-monomials
// [x_{s(1)}^{h_1}, ..., x_{s(n)}^{h_n}] is evaluated on all basis tuples and
// c_n^H(L) is the rank of the resulting evaluation matrix -- the dimension
// of the space of n-linear maps L^(x)n -> L representable by H-polynomials.
// Rows are generated lazily and reduced incrementally, so memory scales with
// the rank rather than the number of spanning words.

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "taftlie/hmod.hpp"

namespace taftlie {

/// A multilinear left-normed Lie H-monomial: position j of the commutator
/// holds variable perm[j] decorated by H basis element h_indices[j].
struct HWord {
    int n = 0;
    std::vector<int> perm;       // a permutation of 0..n-1
    std::vector<int> h_indices;  // indices into the H basis, size n
};

/// All n! * (dim H)^n left-normed words, ordered lexicographically by
/// (permutation, h-index tuple).
inline std::vector<HWord> enumerate_spanning(int n, const HopfAlgebraTable& H) {
    if (n < 1) throw Error("enumerate_spanning: n must be >= 1");
    std::vector<HWord> words;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> hs(static_cast<std::size_t>(n), 0);
        while (true) {
            words.push_back({n, perm, hs});
            int pos = n - 1;
            while (pos >= 0 && hs[static_cast<std::size_t>(pos)] == H.dim - 1) {
                hs[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++hs[static_cast<std::size_t>(pos)];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return words;
}

/// Value of a decorated left-normed commutator with basis element
/// tuple[i] substituted for x_i.
inline Vec evaluate_word(const HModuleLie& M, const HWord& w, const std::vector<int>& tuple) {
    if (static_cast<int>(tuple.size()) != w.n) throw Error("evaluate_word: tuple length mismatch");
    Vec acc = M.action[static_cast<std::size_t>(w.h_indices[0])].column(tuple[static_cast<std::size_t>(w.perm[0])]);
    for (int pos = 1; pos < w.n; ++pos) {
        Vec arg = M.action[static_cast<std::size_t>(w.h_indices[static_cast<std::size_t>(pos)])]
                      .column(tuple[static_cast<std::size_t>(w.perm[static_cast<std::size_t>(pos)])]);
        acc = M.L.bracket(acc, arg);
    }
    return acc;
}

inline mpz_class codim_matrix_entries(const HModuleLie& M, int n) {
    mpz_class rows = 1;
    for (int i = 2; i <= n; ++i) rows *= i;  // n!
    mpz_class hn;
    mpz_ui_pow_ui(hn.get_mpz_t(), static_cast<unsigned long>(M.H.dim), static_cast<unsigned long>(n));
    mpz_class cols;
    mpz_ui_pow_ui(cols.get_mpz_t(), static_cast<unsigned long>(M.L.dim), static_cast<unsigned long>(n + 1));
    return rows * hn * cols;
}

inline constexpr unsigned long long kDefaultCodimBudget = 100'000'000ULL;

/// c_n^H(L): rank of the evaluation matrix over all spanning words.  A word
/// list can be supplied to pin the enumeration order (the rank does not
/// depend on it).  Throws BudgetExceeded when the full matrix would exceed
/// `budget` entries.
inline int codimension(const HModuleLie& M, int n,
                       unsigned long long budget = kDefaultCodimBudget,
                       const std::vector<HWord>* word_order = nullptr) {
    mpz_class need = codim_matrix_entries(M, n);
    if (need > mpz_class(static_cast<unsigned long>(budget)))
        throw BudgetExceeded(need.get_str(), budget);

    std::vector<HWord> own;
    if (!word_order) {
        own = enumerate_spanning(n, M.H);
        word_order = &own;
    }
    const int dl = M.L.dim;
    std::size_t tuple_count = 1;
    for (int i = 0; i < n; ++i) tuple_count *= static_cast<std::size_t>(dl);

    RrefBuilder rb(M.L.m, static_cast<int>(tuple_count) * dl);
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    for (const HWord& w : *word_order) {
        Vec row = zero_vec(M.L.m, static_cast<int>(tuple_count) * dl);
        std::fill(tuple.begin(), tuple.end(), 0);
        for (std::size_t tix = 0; tix < tuple_count; ++tix) {
            Vec val = evaluate_word(M, w, tuple);
            for (int r = 0; r < dl; ++r) row[tix * static_cast<std::size_t>(dl) + static_cast<std::size_t>(r)] = val[static_cast<std::size_t>(r)];
            int pos = n - 1;
            while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == dl - 1) {
                tuple[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos >= 0) ++tuple[static_cast<std::size_t>(pos)];
        }
        rb.add(std::move(row));
        if (rb.dim() == static_cast<int>(tuple_count) * dl) break;  // already full
    }
    return rb.dim();
}

struct BoundReport {
    int n = 0;
    int c_n = 0;
    mpz_class bound;  // (dim L)^{n+1}
    Rat ratio;        // c_n / bound
    bool within_bound = false;
};

/// c_n against the (dim L)^{n+1} upper bound.
inline BoundReport check_bound(const HModuleLie& M, int n,
                               unsigned long long budget = kDefaultCodimBudget) {
    BoundReport r;
    r.n = n;
    r.c_n = codimension(M, n, budget);
    mpz_ui_pow_ui(r.bound.get_mpz_t(), static_cast<unsigned long>(M.L.dim), static_cast<unsigned long>(n + 1));
    r.ratio = Rat(r.c_n) / Rat(r.bound);
    r.within_bound = mpz_class(r.c_n) <= r.bound;
    return r;
}

/// True iff the linear combination of same-degree words vanishes on every
/// basis tuple (multilinearity makes basis substitution sufficient).
inline bool is_h_identity(const HModuleLie& M, const std::vector<std::pair<CycNum, HWord>>& combo) {
    if (combo.empty()) return true;
    const int n = combo.front().second.n;
    for (const auto& [c, w] : combo)
        if (w.n != n) throw Error("is_h_identity: mixed degrees");
    const int dl = M.L.dim;
    std::size_t tuple_count = 1;
    for (int i = 0; i < n; ++i) tuple_count *= static_cast<std::size_t>(dl);
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    for (std::size_t tix = 0; tix < tuple_count; ++tix) {
        Vec acc = zero_vec(M.L.m, dl);
        for (const auto& [c, w] : combo)
            if (!c.is_zero()) vec_axpy(acc, c, evaluate_word(M, w, tuple));
        if (!vec_is_zero(acc)) return false;
        int pos = n - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == dl - 1) {
            tuple[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos >= 0) ++tuple[static_cast<std::size_t>(pos)];
    }
    return true;
}

}  // namespace taftlie
