#pragma once

// H-module Lie algebras: a Lie algebra together with action matrices for a
// Hopf algebra table, verified against the module-algebra law
// h[a,b] = [h_(1) a, h_(2) b].  For Taft actions this also provides the
// Z_m-grading by c-eigenspaces, the graded skew-derivation identities,
// invariant-ideal closures and the H-simplicity certificates.

#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "taftlie/hopf.hpp"
#include "taftlie/liealg.hpp"

namespace taftlie {

struct HModuleLie {
    LieAlgebra L;
    HopfAlgebraTable H;
    std::vector<Mat> action;  // one matrix per H basis element
    bool taft = false;
    Mat C, V;  // generator matrices when taft

    /// Generators of the acting operator set (enough to generate all of
    /// action[] multiplicatively).
    std::vector<Mat> action_generators() const {
        if (taft) return {C, V};
        return action;
    }

    /// ad matrices of all basis elements plus the action generators: a
    /// subspace invariant under these is exactly an H-invariant ideal.
    std::vector<Mat> invariance_generators() const {
        std::vector<Mat> ops = L.ad_basis();
        for (auto& g : action_generators()) ops.push_back(g);
        return ops;
    }

    // Closure dimensions are expensive; copies share the cache.
    int full_operator_algebra_dim() const {
        std::lock_guard<std::mutex> lk(cache_->mx);
        if (!cache_->full_dim)
            cache_->full_dim = operator_algebra_dim(invariance_generators(), L.m, L.dim);
        return *cache_->full_dim;
    }
    int graded_operator_algebra_dim() const {
        std::lock_guard<std::mutex> lk(cache_->mx);
        if (!cache_->graded_dim) {
            std::vector<Mat> ops = L.ad_basis();
            ops.push_back(C);
            cache_->graded_dim = operator_algebra_dim(ops, L.m, L.dim);
        }
        return *cache_->graded_dim;
    }

  private:
    struct Cache {
        std::mutex mx;
        std::optional<int> full_dim;
        std::optional<int> graded_dim;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// The Z_m-grading induced by the c-action: L^(i) = {a : ca = zeta^i a}.
struct Grading {
    long m = 0;
    std::vector<SubspaceBasis> components;

    int total_dim() const {
        int d = 0;
        for (const auto& c : components) d += c.dim();
        return d;
    }
};

// ---------------------------------------------------------------------------
// Construction and verification.

namespace detail {

inline Vec action_of_combination(const HModuleLie& M, const Vec& h, int col) {
    // (sum_i h_i * action_i) applied to basis vector `col`.
    Vec r = zero_vec(M.L.m, M.L.dim);
    for (int i = 0; i < M.H.dim; ++i) {
        if (h[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int rrow = 0; rrow < M.L.dim; ++rrow) {
            const CycNum& e = M.action[static_cast<std::size_t>(i)].at(rrow, col);
            if (!e.is_zero()) r[static_cast<std::size_t>(rrow)].add_mul(h[static_cast<std::size_t>(i)], e);
        }
    }
    return r;
}

}  // namespace detail

/// All HModuleLie invariants as a report: representation law, unit action,
/// module-algebra law, and the Taft relations when applicable.
inline Report verify_module_algebra(const HModuleLie& M) {
    Report rep;
    const LieAlgebra& L = M.L;
    const HopfAlgebraTable& H = M.H;

    if (M.taft) {
        bool ok = true;
        std::string w;
        if (!(M.C.pow(static_cast<unsigned long>(H.m)) == Mat::identity(L.m, L.dim))) {
            ok = false;
            w = "C^m != I";
        } else if (!M.V.pow(static_cast<unsigned long>(H.m)).is_zero()) {
            ok = false;
            w = "V^m != 0";
        } else if (!(M.V * M.C == CycNum::zeta(L.m) * (M.C * M.V))) {
            ok = false;
            w = "V C != zeta C V";
        }
        rep.add("taft_relations", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }

    {
        bool ok = true;
        std::string w;
        Mat unit_action(L.m, L.dim, L.dim);
        for (int i = 0; i < H.dim; ++i)
            if (!H.unit[static_cast<std::size_t>(i)].is_zero())
                unit_action = unit_action + H.unit[static_cast<std::size_t>(i)] * M.action[static_cast<std::size_t>(i)];
        if (!(unit_action == Mat::identity(L.m, L.dim))) {
            ok = false;
            w = "1_H does not act as the identity";
        }
        rep.add("unit_acts_trivially", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < H.dim && ok; ++i)
            for (int j = 0; j < H.dim; ++j) {
                Mat lhs = M.action[static_cast<std::size_t>(i)] * M.action[static_cast<std::size_t>(j)];
                Mat rhs(L.m, L.dim, L.dim);
                const Vec& prod = H.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (int k = 0; k < H.dim; ++k)
                    if (!prod[static_cast<std::size_t>(k)].is_zero())
                        rhs = rhs + prod[static_cast<std::size_t>(k)] * M.action[static_cast<std::size_t>(k)];
                if (!(lhs == rhs)) {
                    ok = false;
                    w = "action(" + H.label(i) + ") action(" + H.label(j) + ") != action(" +
                        H.label(i) + " " + H.label(j) + ")";
                    break;
                }
            }
        rep.add("action_is_representation", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }

    {
        bool ok = true;
        std::string w;
        for (int h = 0; h < H.dim && ok; ++h) {
            const Mat& ah = M.action[static_cast<std::size_t>(h)];
            const auto& terms = H.coproduct[static_cast<std::size_t>(h)];
            for (int i = 0; i < L.dim && ok; ++i)
                for (int j = 0; j < L.dim; ++j) {
                    Vec lhs = ah.apply(L.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    Vec rhs = zero_vec(L.m, L.dim);
                    for (const auto& t : terms) {
                        Vec left = M.action[static_cast<std::size_t>(t.left)].column(i);
                        Vec right = M.action[static_cast<std::size_t>(t.right)].column(j);
                        vec_axpy(rhs, t.coeff, L.bracket(left, right));
                    }
                    if (lhs != rhs) {
                        ok = false;
                        w = H.label(h) + "[" + L.label(i) + "," + L.label(j) + "] != [h_(1) " +
                            L.label(i) + ", h_(2) " + L.label(j) + "]";
                        break;
                    }
                }
        }
        rep.add("module_algebra_law", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }
    return rep;
}

/// Taft-module constructor: derives the action of every basis element
/// c^i v^k from the generator matrices and verifies all invariants exactly.
/// Throws VerificationError (with the witness) if anything fails.
inline HModuleLie make_hmodule(LieAlgebra L, HopfAlgebraTable H, Mat C, Mat V) {
    if (!H.is_taft) throw Error("make_hmodule: Hopf table is not a Taft algebra");
    if (L.m != H.m) throw Error("make_hmodule: conductor mismatch between L and H");
    if (C.rows() != L.dim || C.cols() != L.dim || V.rows() != L.dim || V.cols() != L.dim)
        throw Error("make_hmodule: C and V must be square of size dim L");
    HModuleLie M;
    M.L = std::move(L);
    M.H = std::move(H);
    M.taft = true;
    M.C = std::move(C);
    M.V = std::move(V);
    const long m = M.H.m;
    std::vector<Mat> cpow{Mat::identity(M.L.m, M.L.dim)}, vpow{Mat::identity(M.L.m, M.L.dim)};
    for (long i = 1; i < m; ++i) cpow.push_back(cpow.back() * M.C);
    for (long k = 1; k < m; ++k) vpow.push_back(vpow.back() * M.V);
    M.action.resize(static_cast<std::size_t>(M.H.dim));
    for (long k = 0; k < m; ++k)
        for (long i = 0; i < m; ++i)
            M.action[static_cast<std::size_t>(k * m + i)] =
                cpow[static_cast<std::size_t>(i)] * vpow[static_cast<std::size_t>(k)];
    Report rep = verify_module_algebra(M);
    if (!rep.all_pass()) {
        const CheckResult* f = rep.first_failure();
        throw VerificationError("H-module verification failed: " + f->check + " (" + f->witness + ")");
    }
    return M;
}

/// Non-Taft constructor: the action of each basis element is given directly.
inline HModuleLie make_hmodule_custom(LieAlgebra L, HopfAlgebraTable H, std::vector<Mat> action) {
    if (static_cast<int>(action.size()) != H.dim)
        throw Error("make_hmodule_custom: need one action matrix per H basis element");
    HModuleLie M;
    M.L = std::move(L);
    M.H = std::move(H);
    M.action = std::move(action);
    M.taft = false;
    Report rep = verify_module_algebra(M);
    if (!rep.all_pass()) {
        const CheckResult* f = rep.first_failure();
        throw VerificationError("H-module verification failed: " + f->check + " (" + f->witness + ")");
    }
    return M;
}

/// gl_2 with the dual-idempotent Hopf algebra acting by the diagonal and
/// off-diagonal projections.
inline std::pair<HopfAlgebraTable, HModuleLie> make_dual_idempotent_example() {
    HopfAlgebraTable H = make_dual_idempotent_hopf();
    LieAlgebra gl2 = make_gl(2, 1);
    // Basis order E11, E12, E21, E22: e_0 keeps the diagonal, e_1 the rest.
    Mat e0(1, 4, 4), e1(1, 4, 4);
    e0.at(0, 0) = CycNum::one(1);
    e0.at(3, 3) = CycNum::one(1);
    e1.at(1, 1) = CycNum::one(1);
    e1.at(2, 2) = CycNum::one(1);
    HModuleLie M = make_hmodule_custom(std::move(gl2), H, {e0, e1});
    return {std::move(H), std::move(M)};
}

// ---------------------------------------------------------------------------
// Grading.

/// Eigenspace decomposition for the c-action.  Verifies the sum is direct
/// and exhaustive and that the bracket respects degrees.
inline Grading grading(const HModuleLie& M) {
    if (!M.taft) throw Error("grading: only defined for Taft actions");
    const long m = M.H.m;
    Grading g;
    g.m = m;
    RrefBuilder all(M.L.m, M.L.dim);
    for (long i = 0; i < m; ++i) {
        SubspaceBasis comp = eigenspace(M.C, CycNum::zeta_power(M.L.m, i));
        for (const auto& r : comp.rows) all.add(r);
        g.components.push_back(std::move(comp));
    }
    if (g.total_dim() != M.L.dim || all.dim() != M.L.dim)
        throw VerificationError("grading: eigenspaces of C do not decompose L");
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < m; ++k) {
            const auto& a = g.components[static_cast<std::size_t>(i)];
            const auto& b = g.components[static_cast<std::size_t>(k)];
            const auto& target = g.components[static_cast<std::size_t>((i + k) % m)];
            RrefBuilder tb = target.to_builder();
            for (const auto& x : a.rows)
                for (const auto& y : b.rows)
                    if (!tb.contains(M.L.bracket(x, y)))
                        throw VerificationError("grading: [L^(" + std::to_string(i) + "), L^(" +
                                                std::to_string(k) + ")] leaves L^(" +
                                                std::to_string((i + k) % m) + ")");
        }
    return g;
}

// ---------------------------------------------------------------------------
// Ideals and simplicity.

/// Smallest H-invariant ideal containing `seed`: closure under all ad b_i
/// and the H action generators.
inline SubspaceBasis h_invariant_ideal(const HModuleLie& M, const SubspaceBasis& seed) {
    return closure(seed, M.invariance_generators());
}

struct HSimplicityResult {
    Simplicity status = Simplicity::undetermined;
    std::optional<SubspaceBasis> witness;
    std::string detail;
    int op_algebra_dim = -1;
};

inline const char* h_simplicity_name(Simplicity s) {
    switch (s) {
        case Simplicity::simple: return "absolutely_simple";
        case Simplicity::not_simple: return "not_simple";
        default: return "undetermined";
    }
}

/// H-simplicity: [L,L] != 0 and no nontrivial H-invariant ideal.
/// `simple` means absolutely H-simple, certified by the combined ad- and
/// H-action generating the full matrix algebra.
inline HSimplicityResult is_h_simple(const HModuleLie& M, std::uint64_t seed = kDefaultSeed) {
    HSimplicityResult res;
    const LieAlgebra& L = M.L;
    if (derived_subalgebra(L).is_zero()) {
        res.status = Simplicity::not_simple;
        res.detail = "[L,L] = 0";
        return res;
    }
    auto try_seed = [&](const Vec& v) -> bool {
        if (vec_is_zero(v)) return false;
        SubspaceBasis ideal = h_invariant_ideal(M, SubspaceBasis::span(L.m, L.dim, {v}));
        if (!ideal.is_full() && !ideal.is_zero()) {
            res.status = Simplicity::not_simple;
            res.witness = ideal;
            res.detail = "proper H-invariant ideal of dim " + std::to_string(ideal.dim());
            return true;
        }
        return false;
    };
    for (int i = 0; i < L.dim; ++i)
        if (try_seed(unit_vec(L.m, L.dim, i))) return res;
    SmallRng rng(seed);
    for (int t = 0; t < 2 * L.dim; ++t) {
        Vec v = zero_vec(L.m, L.dim);
        for (int i = 0; i < L.dim; ++i)
            v[static_cast<std::size_t>(i)] = CycNum::from_int(L.m, rng.next(-3, 3));
        if (try_seed(v)) return res;
    }
    res.op_algebra_dim = M.full_operator_algebra_dim();
    if (res.op_algebra_dim == L.dim * L.dim) {
        res.status = Simplicity::simple;
        res.detail = "ad- and H-action generate the full matrix algebra";
    } else {
        res.status = Simplicity::undetermined;
        res.detail = "no ideal found; operator algebra dim " +
                     std::to_string(res.op_algebra_dim) + " < (dim L)^2";
    }
    return res;
}

/// Graded (= Z_m-) simplicity: no nontrivial ideal invariant under c.
/// Same certificate scheme with generators ad(L) and C only.
inline HSimplicityResult graded_simplicity(const HModuleLie& M, std::uint64_t seed = kDefaultSeed) {
    if (!M.taft) throw Error("graded_simplicity: only defined for Taft actions");
    HSimplicityResult res;
    const LieAlgebra& L = M.L;
    if (derived_subalgebra(L).is_zero()) {
        res.status = Simplicity::not_simple;
        res.detail = "[L,L] = 0";
        return res;
    }
    std::vector<Mat> ops = L.ad_basis();
    ops.push_back(M.C);
    auto try_seed = [&](const Vec& v) -> bool {
        if (vec_is_zero(v)) return false;
        SubspaceBasis ideal = closure(SubspaceBasis::span(L.m, L.dim, {v}), ops);
        if (!ideal.is_full() && !ideal.is_zero()) {
            res.status = Simplicity::not_simple;
            res.witness = ideal;
            res.detail = "proper graded ideal of dim " + std::to_string(ideal.dim());
            return true;
        }
        return false;
    };
    // Homogeneous seeds: component bases, then random homogeneous vectors.
    Grading g = grading(M);
    for (const auto& comp : g.components)
        for (const auto& r : comp.rows)
            if (try_seed(r)) return res;
    SmallRng rng(seed);
    for (int t = 0; t < 2 * L.dim; ++t) {
        const auto& comp = g.components[static_cast<std::size_t>(rng.next(0, static_cast<long>(g.components.size()) - 1))];
        if (comp.is_zero()) continue;
        Vec v = zero_vec(L.m, L.dim);
        for (const auto& r : comp.rows)
            vec_axpy(v, CycNum::from_int(L.m, rng.next(-3, 3)), r);
        if (try_seed(v)) return res;
    }
    res.op_algebra_dim = M.graded_operator_algebra_dim();
    if (res.op_algebra_dim == L.dim * L.dim) {
        res.status = Simplicity::simple;
        res.detail = "ad-action and C generate the full matrix algebra";
    } else {
        res.status = Simplicity::undetermined;
        res.detail = "no graded ideal found; operator algebra dim " +
                     std::to_string(res.op_algebra_dim) + " < (dim L)^2";
    }
    return res;
}

// ---------------------------------------------------------------------------
// Graded identities for the skew-derivation.

namespace detail {

/// Right-nested commutator [a_1, [a_2, [... [a_{s-1}, a_s] ...]]].
inline Vec right_nested(const LieAlgebra& L, const std::vector<Vec>& xs) {
    Vec acc = xs.back();
    for (std::size_t i = xs.size() - 1; i-- > 0;) acc = L.bracket(xs[i], acc);
    return acc;
}

}  // namespace detail

/// Exact checks of the graded skew-derivation identities on component bases:
/// degree transfer across the bracket, the skew Leibniz consequence, the
/// wrap-around triple identity, sampled long-commutator transfers, and (for
/// graded-simple modules with nonzero v-action) ker V = L^(0) and
/// V L^(k) = L^(k-1).
inline Report verify_graded_lemmas(const HModuleLie& M, std::uint64_t seed = kDefaultSeed) {
    if (!M.taft) throw Error("verify_graded_lemmas: only defined for Taft actions");
    Report rep;
    const LieAlgebra& L = M.L;
    const long m = M.H.m;
    Grading g = grading(M);
    rep.pass("grading_decomposition");

    const bool v_zero = M.V.is_zero();

    {
        // V lowers degree by one: V L^(k) inside L^(k-1 mod m).
        bool ok = true;
        std::string w;
        for (long k = 0; k < m && ok; ++k) {
            RrefBuilder tgt = g.components[static_cast<std::size_t>(((k - 1) % m + m) % m)].to_builder();
            for (const auto& r : g.components[static_cast<std::size_t>(k)].rows)
                if (!tgt.contains(M.V.apply(r))) {
                    ok = false;
                    w = "V L^(" + std::to_string(k) + ") not inside L^(" + std::to_string(((k - 1) % m + m) % m) + ")";
                    break;
                }
        }
        rep.add("v_lowers_degree", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }

    {
        // (zeta^k - 1)[a, Vb] = (zeta^l - 1)[Va, b]  and
        // (zeta^l - 1) V[a,b] = (zeta^{k+l} - 1)[a, Vb] on all graded pairs.
        bool ok_cross = true, ok_prod = true;
        std::string w_cross, w_prod;
        for (long k = 0; k < m; ++k)
            for (long l = 0; l < m; ++l) {
                CycNum zk = CycNum::zeta_power(L.m, k) - CycNum::one(L.m);
                CycNum zl = CycNum::zeta_power(L.m, l) - CycNum::one(L.m);
                CycNum zkl = CycNum::zeta_power(L.m, k + l) - CycNum::one(L.m);
                for (const auto& a : g.components[static_cast<std::size_t>(k)].rows)
                    for (const auto& b : g.components[static_cast<std::size_t>(l)].rows) {
                        Vec a_vb = L.bracket(a, M.V.apply(b));
                        Vec va_b = L.bracket(M.V.apply(a), b);
                        if (ok_cross && vec_scale(zk, a_vb) != vec_scale(zl, va_b)) {
                            ok_cross = false;
                            w_cross = "degrees (" + std::to_string(k) + "," + std::to_string(l) + ")";
                        }
                        Vec v_ab = M.V.apply(L.bracket(a, b));
                        if (ok_prod && vec_scale(zl, v_ab) != vec_scale(zkl, a_vb)) {
                            ok_prod = false;
                            w_prod = "degrees (" + std::to_string(k) + "," + std::to_string(l) + ")";
                        }
                    }
            }
        rep.add("graded_bracket_transfer", ok_cross ? CheckStatus::pass : CheckStatus::fail, w_cross);
        rep.add("graded_skew_leibniz", ok_prod ? CheckStatus::pass : CheckStatus::fail, w_prod);
    }

    {
        // v[a,[b,u]] = (zeta^l - 1)/(zeta^{m-k} - 1) [a,[b,Vu]] for
        // a in L^(l), b in L^(k), u in L^(m-k), 1 <= k,l <= m-1.
        bool ok = true;
        std::string w;
        for (long k = 1; k < m && ok; ++k)
            for (long l = 1; l < m && ok; ++l) {
                CycNum ratio = (CycNum::zeta_power(L.m, l) - CycNum::one(L.m)) /
                               (CycNum::zeta_power(L.m, m - k) - CycNum::one(L.m));
                for (const auto& a : g.components[static_cast<std::size_t>(l)].rows)
                    for (const auto& b : g.components[static_cast<std::size_t>(k)].rows)
                        for (const auto& u : g.components[static_cast<std::size_t>((m - k) % m)].rows) {
                            Vec lhs = M.V.apply(L.bracket(a, L.bracket(b, u)));
                            Vec rhs = vec_scale(ratio, L.bracket(a, L.bracket(b, M.V.apply(u))));
                            if (lhs != rhs) {
                                ok = false;
                                w = "degrees (l=" + std::to_string(l) + ", k=" + std::to_string(k) + ")";
                                break;
                            }
                        }
            }
        rep.add("wraparound_triple_transfer", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }

    {
        // Sampled long commutators: V[a_1,[...,a_s]] against the transferred
        // right-hand side, lengths 3 and 4, homogeneous random entries with
        // the innermost degree nonzero.  Needs no simplicity: it follows from
        // the two-factor identities and the wrap-around triple identity.
        bool ok = true;
        std::string w = "seed=" + std::to_string(seed);
        SmallRng rng(seed);
        for (int s : {3, 4}) {
            for (int trial = 0; trial < 8 && ok; ++trial) {
                std::vector<long> degs(static_cast<std::size_t>(s));
                std::vector<Vec> xs;
                bool usable = true;
                for (int i = 0; i < s; ++i) {
                    long lo = (i == s - 1) ? 1 : 0;
                    degs[static_cast<std::size_t>(i)] = rng.next(lo, m - 1);
                    const auto& comp = g.components[static_cast<std::size_t>(degs[static_cast<std::size_t>(i)])];
                    Vec v = zero_vec(L.m, L.dim);
                    for (const auto& r : comp.rows)
                        vec_axpy(v, CycNum::from_int(L.m, rng.next(-3, 3)), r);
                    if (comp.is_zero()) usable = false;
                    xs.push_back(std::move(v));
                }
                if (!usable) continue;
                long total = 0;
                for (long d : degs) total += d;
                CycNum num = CycNum::zeta_power(L.m, total) - CycNum::one(L.m);
                CycNum den = CycNum::zeta_power(L.m, degs.back()) - CycNum::one(L.m);
                Vec lhs = M.V.apply(detail::right_nested(L, xs));
                std::vector<Vec> ys = xs;
                ys.back() = M.V.apply(ys.back());
                Vec rhs = vec_scale(num / den, detail::right_nested(L, ys));
                if (lhs != rhs) {
                    ok = false;
                    w = "length " + std::to_string(s) + ", degrees trial " + std::to_string(trial) +
                        ", seed=" + std::to_string(seed);
                }
            }
        }
        rep.add("long_commutator_transfer", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }

    // ker v = L^(0) and v L^(k) = L^(k-1) hold for graded-simple modules with
    // nonzero v-action, and equally for H-simple ones (the non-graded-simple
    // case has the same kernel and ladder structure); gate on a certificate
    // for either.
    HSimplicityResult gs = graded_simplicity(M, seed);
    bool simple_enough = gs.status == Simplicity::simple;
    std::string gate_detail = gs.detail;
    if (!simple_enough) {
        HSimplicityResult hs = is_h_simple(M, seed);
        simple_enough = hs.status == Simplicity::simple;
        gate_detail = hs.detail;
    }

    if (simple_enough) {
        bool ok = true;
        std::string w;
        for (const auto& r : g.components[0].rows)
            if (!vec_is_zero(M.V.apply(r))) {
                ok = false;
                w = "V does not kill L^(0)";
                break;
            }
        rep.add("v_kills_degree_zero", ok ? CheckStatus::pass : CheckStatus::fail, w);
    } else {
        rep.skip("v_kills_degree_zero", "no graded- or H-simplicity certificate (" + gate_detail + ")");
    }

    if (simple_enough && !v_zero) {
        {
            SubspaceBasis ker = kernel(M.V);
            bool ok = (ker == g.components[0]);
            rep.add("kernel_is_degree_zero", ok ? CheckStatus::pass : CheckStatus::fail,
                    ok ? "" : "ker V != L^(0)");
        }
        {
            bool ok = true;
            std::string w;
            for (long k = 1; k < m; ++k) {
                std::vector<Vec> images;
                for (const auto& r : g.components[static_cast<std::size_t>(k)].rows)
                    images.push_back(M.V.apply(r));
                SubspaceBasis img = SubspaceBasis::span(L.m, L.dim, images);
                if (!(img == g.components[static_cast<std::size_t>(k - 1)])) {
                    ok = false;
                    w = "V L^(" + std::to_string(k) + ") != L^(" + std::to_string(k - 1) + ")";
                    break;
                }
            }
            rep.add("v_component_image", ok ? CheckStatus::pass : CheckStatus::fail, w);
        }
    } else {
        std::string why = v_zero ? "v acts by zero"
                                 : "no graded- or H-simplicity certificate (" + gate_detail + ")";
        rep.skip("kernel_is_degree_zero", why);
        rep.skip("v_component_image", why);
    }
    return rep;
}

}  // namespace taftlie
