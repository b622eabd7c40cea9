#pragma once

// Decision tree for verified Taft-module Lie algebras: zero v-action,
// semisimple non-simple (recovered as L(B,gamma) through the canonical phi),
// or non-semisimple (radical ladder, recovered as L(B,0)).  Every branch is
// certified by explicit exact computations; nothing is concluded from theory
// alone.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "taftlie/construct.hpp"

namespace taftlie {

enum class ClassCase { v_zero, semisimple_nonsimple, non_semisimple, unrecognized };

inline const char* to_string(ClassCase c) {
    switch (c) {
        case ClassCase::v_zero: return "v_zero";
        case ClassCase::semisimple_nonsimple: return "semisimple_nonsimple";
        case ClassCase::non_semisimple: return "non_semisimple";
        default: return "unrecognized";
    }
}

/// Profile of the identified simple core: enough to pin the base algebra
/// without abstract isomorphism testing.
struct BaseProfile {
    int dim = 0;
    int radical_dim = 0;
    int killing_rank = 0;
    Simplicity simplicity = Simplicity::undetermined;
};

struct ClassificationResult {
    ClassCase kind = ClassCase::unrecognized;
    std::optional<CycNum> gamma;
    std::optional<long> t;  // nilpotency ladder length
    std::optional<BaseProfile> base_profile;
    Report certificates;
};

namespace detail {

/// Coordinates of v (known to lie in the span) w.r.t. an RREF basis: read
/// off the pivot columns.
inline Vec coords_in_basis(const SubspaceBasis& s, const Vec& v) {
    RrefBuilder rb = s.to_builder();
    Vec res = v;
    rb.reduce(res);
    if (!vec_is_zero(res)) throw Error("coords_in_basis: vector outside the subspace");
    Vec out = zero_vec(s.m, s.dim());
    RrefBuilder tmp = s.to_builder();
    for (int r = 0; r < s.dim(); ++r)
        out[static_cast<std::size_t>(r)] = v[static_cast<std::size_t>(tmp.pivots()[static_cast<std::size_t>(r)])];
    return out;
}

/// The bracket of L restricted to a subalgebra, in the basis of `s`.
inline LieAlgebra restrict_to_subalgebra(const LieAlgebra& L, const SubspaceBasis& s) {
    LieAlgebra B(L.m, s.dim());
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j)
            B.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                coords_in_basis(s, L.bracket(s.rows[static_cast<std::size_t>(i)], s.rows[static_cast<std::size_t>(j)]));
    return B;
}

inline BaseProfile profile_of(const LieAlgebra& B) {
    BaseProfile p;
    p.dim = B.dim;
    p.radical_dim = solvable_radical(B).dim();
    p.killing_rank = rank(killing_form(B));
    p.simplicity = is_simple(B).status;
    return p;
}

/// Candidate isomorphism build_L_gamma(B0, m, gamma) -> M sending level-k
/// basis vector (k, p) to phi^k(a_p).
inline HModuleIso phi_basis_iso(const HModuleLie& M, const LieAlgebra& B0,
                                const SubspaceBasis& degree_zero, const Mat& phi,
                                const CycNum& gamma) {
    const long m = M.H.m;
    HModuleIso iso{build_L_gamma(B0, m, gamma), M, Mat()};
    std::vector<Vec> cols;
    Mat phi_pow = Mat::identity(M.L.m, M.L.dim);
    std::vector<Mat> powers{phi_pow};
    for (long k = 1; k < m; ++k) powers.push_back(powers.back() * phi);
    for (long k = 0; k < m; ++k)
        for (const auto& a : degree_zero.rows)
            cols.push_back(powers[static_cast<std::size_t>(k)].apply(a));
    iso.matrix = Mat::from_columns(M.L.m, cols);
    return iso;
}

}  // namespace detail

/// The unique scalar gamma with (m-1)!_z [phi(a), phi^{m-1}(b)] = gamma [a,b]
/// on L^(0).  Exact solve with a consistency check across all basis pairs.
inline CycNum extract_gamma(const HModuleLie& M) {
    if (M.V.is_zero()) throw Error("extract_gamma: v acts by zero");
    Mat phi = build_phi(M);
    Grading g = grading(M);
    const SubspaceBasis& zero_comp = g.components[0];
    const LieAlgebra& L = M.L;
    const long m = M.H.m;
    Mat phi_m1 = phi.pow(static_cast<unsigned long>(m - 1));
    CycNum factor = q_factorial(m, m - 1);

    std::optional<CycNum> gamma;
    for (int i = 0; i < zero_comp.dim(); ++i)
        for (int j = 0; j < zero_comp.dim(); ++j) {
            const Vec& a = zero_comp.rows[static_cast<std::size_t>(i)];
            const Vec& b = zero_comp.rows[static_cast<std::size_t>(j)];
            Vec plain = L.bracket(a, b);
            Vec curly = vec_scale(factor, L.bracket(phi.apply(a), phi_m1.apply(b)));
            if (vec_is_zero(plain)) {
                if (!vec_is_zero(curly))
                    throw Error("extract_gamma: no consistent scalar ([a,b] = 0 but {a,b} != 0)");
                continue;
            }
            int t = 0;
            while (plain[static_cast<std::size_t>(t)].is_zero()) ++t;
            CycNum cand = curly[static_cast<std::size_t>(t)] / plain[static_cast<std::size_t>(t)];
            if (vec_scale(cand, plain) != curly)
                throw Error("extract_gamma: no consistent scalar on a single pair");
            if (gamma && !(*gamma == cand))
                throw Error("extract_gamma: inconsistent scalars across basis pairs");
            gamma = cand;
        }
    if (!gamma) throw Error("extract_gamma: [L^(0), L^(0)] = 0");
    return *gamma;
}

/// Classify a verified H-module Lie algebra.  Preconditions: the module
/// passed make_hmodule verification and is not H-simple-refuted.
inline ClassificationResult classify(const HModuleLie& M, std::uint64_t seed = kDefaultSeed) {
    if (!M.taft) throw Error("classify: only defined for Taft actions");
    ClassificationResult res;
    Report& cert = res.certificates;
    const LieAlgebra& L = M.L;
    const long m = M.H.m;

    HSimplicityResult hs = is_h_simple(M, seed);
    if (hs.status == Simplicity::not_simple)
        throw VerificationError("classify: module is not H-simple (" + hs.detail + ")");
    cert.add("h_simplicity", hs.status == Simplicity::simple ? CheckStatus::pass : CheckStatus::not_applicable,
             hs.detail);

    Grading g = grading(M);
    {
        std::ostringstream dims;
        for (std::size_t i = 0; i < g.components.size(); ++i) {
            if (i) dims << ",";
            dims << g.components[i].dim();
        }
        cert.add("grading_dimensions", CheckStatus::pass, dims.str());
    }

    if (M.V.is_zero()) {
        res.kind = ClassCase::v_zero;
        cert.pass("v_action_zero");
        return res;
    }

    SubspaceBasis radical = solvable_radical(L);

    if (radical.is_zero()) {
        cert.add("radical_zero", CheckStatus::pass, "");
        SubspaceBasis ker = kernel(M.V);
        bool ker_ok = (ker == g.components[0]);
        cert.add("kernel_is_degree_zero", ker_ok ? CheckStatus::pass : CheckStatus::fail,
                 ker_ok ? "" : "ker V != L^(0)");
        if (!ker_ok) { res.kind = ClassCase::unrecognized; return res; }

        CycNum gamma = CycNum::zero(m);
        try {
            gamma = extract_gamma(M);
        } catch (const Error& e) {
            cert.fail("gamma_extracted", e.what());
            res.kind = ClassCase::unrecognized;
            return res;
        }
        cert.add("gamma_extracted", CheckStatus::pass, gamma.to_display());
        if (gamma.is_zero()) {
            cert.fail("gamma_nonzero", "semisimple case requires gamma != 0");
            res.kind = ClassCase::unrecognized;
            return res;
        }
        cert.pass("gamma_nonzero");

        LieAlgebra B0 = detail::restrict_to_subalgebra(L, g.components[0]);
        res.base_profile = detail::profile_of(B0);
        if (res.base_profile->simplicity == Simplicity::not_simple) {
            cert.fail("degree_zero_simple", "L^(0) is not simple");
            res.kind = ClassCase::unrecognized;
            return res;
        }
        cert.add("degree_zero_simple",
                 res.base_profile->simplicity == Simplicity::simple ? CheckStatus::pass
                                                                    : CheckStatus::not_applicable,
                 to_string(res.base_profile->simplicity));

        Mat phi = build_phi(M);
        HModuleIso iso = detail::phi_basis_iso(M, B0, g.components[0], phi, gamma);
        Report iso_rep = verify_iso(iso);
        cert.merge(iso_rep);
        if (!iso_rep.all_pass()) { res.kind = ClassCase::unrecognized; return res; }

        res.kind = ClassCase::semisimple_nonsimple;
        res.gamma = gamma;
        return res;
    }

    // Nonzero radical: certify the ladder structure of L(B, 0).
    cert.add("radical_nonzero", CheckStatus::pass, "dim R = " + std::to_string(radical.dim()));
    {
        auto lcs = lower_central_series(L, radical);
        bool nilpotent = lcs.back().is_zero();
        cert.add("radical_nilpotent", nilpotent ? CheckStatus::pass : CheckStatus::fail,
                 nilpotent ? "" : "lower central series of R does not vanish");
        if (!nilpotent) { res.kind = ClassCase::unrecognized; return res; }
    }
    {
        RrefBuilder pos(L.m, L.dim);
        for (long i = 1; i < m; ++i)
            for (const auto& r : g.components[static_cast<std::size_t>(i)].rows) pos.add(r);
        bool eq = (SubspaceBasis::from_builder(pos) == radical);
        cert.add("radical_is_positive_part", eq ? CheckStatus::pass : CheckStatus::fail,
                 eq ? "" : "R != (+)_{i>=1} L^(i)");
        if (!eq) { res.kind = ClassCase::unrecognized; return res; }
    }
    {
        SubspaceBasis ker = kernel(M.V);
        bool ker_ok = (ker == g.components[0]);
        cert.add("kernel_is_degree_zero", ker_ok ? CheckStatus::pass : CheckStatus::fail,
                 ker_ok ? "" : "ker V != L^(0)");
        if (!ker_ok) { res.kind = ClassCase::unrecognized; return res; }
    }
    LieAlgebra B0 = detail::restrict_to_subalgebra(L, g.components[0]);
    res.base_profile = detail::profile_of(B0);
    if (res.base_profile->simplicity != Simplicity::simple) {
        cert.add("degree_zero_simple",
                 res.base_profile->simplicity == Simplicity::not_simple ? CheckStatus::fail
                                                                        : CheckStatus::not_applicable,
                 to_string(res.base_profile->simplicity));
        res.kind = ClassCase::unrecognized;
        return res;
    }
    cert.pass("degree_zero_simple");

    // Minimal graded ideal inside the last nonzero lower-central term of R.
    SubspaceBasis seed_space = radical;
    {
        auto lcs = lower_central_series(L, radical);
        for (auto it = lcs.rbegin(); it != lcs.rend(); ++it)
            if (!it->is_zero()) { seed_space = *it; break; }
    }
    std::vector<Mat> graded_ops = L.ad_basis();
    graded_ops.push_back(M.C);
    SubspaceBasis tilde_n = closure(SubspaceBasis::span(L.m, L.dim, {seed_space.rows[0]}), graded_ops);
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (const auto& w : tilde_n.rows) {
            SubspaceBasis cand = closure(SubspaceBasis::span(L.m, L.dim, {w}), graded_ops);
            if (cand.dim() < tilde_n.dim() && !cand.is_zero()) {
                tilde_n = cand;
                shrunk = true;
                break;
            }
        }
    }
    {
        bool minimal = true;
        for (const auto& w : tilde_n.rows)
            if (!(closure(SubspaceBasis::span(L.m, L.dim, {w}), graded_ops) == tilde_n)) {
                minimal = false;
                break;
            }
        cert.add("minimal_graded_ideal", minimal ? CheckStatus::pass : CheckStatus::fail,
                 "dim " + std::to_string(tilde_n.dim()));
        if (!minimal) { res.kind = ClassCase::unrecognized; return res; }
    }

    // Ladder N_k = sum of V^i tilde_n, i <= k; find t with N_t = L.
    long t = -1;
    std::vector<int> layer_dims;
    {
        RrefBuilder ladder(L.m, L.dim);
        std::vector<Vec> layer = tilde_n.rows;
        int prev = 0;
        for (long k = 0; k < m; ++k) {
            std::vector<Vec> next_layer;
            for (auto& v : layer) {
                ladder.add(v);
                next_layer.push_back(M.V.apply(v));
            }
            layer_dims.push_back(ladder.dim() - prev);
            prev = ladder.dim();
            if (ladder.dim() == L.dim) { t = k; break; }
            layer = std::move(next_layer);
        }
        bool reached = (t >= 0);
        cert.add("ladder_reaches_whole_algebra", reached ? CheckStatus::pass : CheckStatus::fail,
                 reached ? "t = " + std::to_string(t) : "sum of V^i(minimal ideal) is proper");
        if (!reached) { res.kind = ClassCase::unrecognized; return res; }
    }
    {
        bool ok = (t + 1 == m);
        cert.add("ladder_length_matches_conductor", ok ? CheckStatus::pass : CheckStatus::fail,
                 "t + 1 = " + std::to_string(t + 1) + ", m = " + std::to_string(m));
        if (!ok) { res.kind = ClassCase::unrecognized; return res; }
    }
    {
        // R = N_{t-1}.
        RrefBuilder nk(L.m, L.dim);
        std::vector<Vec> layer = tilde_n.rows;
        for (long k = 0; k <= t - 1; ++k) {
            std::vector<Vec> next_layer;
            for (auto& v : layer) {
                nk.add(v);
                next_layer.push_back(M.V.apply(v));
            }
            layer = std::move(next_layer);
        }
        bool eq = (SubspaceBasis::from_builder(nk) == radical);
        cert.add("radical_is_ladder_prefix", eq ? CheckStatus::pass : CheckStatus::fail,
                 eq ? "" : "R != N_{t-1}");
        if (!eq) { res.kind = ClassCase::unrecognized; return res; }
    }
    {
        bool ok = true;
        for (int d : layer_dims)
            if (d != g.components[0].dim()) ok = false;
        std::ostringstream w;
        for (std::size_t i = 0; i < layer_dims.size(); ++i) {
            if (i) w << ",";
            w << layer_dims[static_cast<std::size_t>(i)];
        }
        cert.add("ladder_layer_dimensions", ok ? CheckStatus::pass : CheckStatus::fail, w.str());
        if (!ok) { res.kind = ClassCase::unrecognized; return res; }
    }

    // Re-derive the quantum-binomial bracket table through phi (gamma = 0:
    // the wrap-around branch must be absent).
    Mat phi = build_phi(M);
    HModuleIso iso = detail::phi_basis_iso(M, B0, g.components[0], phi, CycNum::zero(m));
    Report iso_rep = verify_iso(iso);
    cert.merge(iso_rep);
    if (!iso_rep.all_pass()) { res.kind = ClassCase::unrecognized; return res; }

    res.kind = ClassCase::non_semisimple;
    res.gamma = CycNum::zero(m);
    res.t = t;
    return res;
}

// ---------------------------------------------------------------------------
// Family isomorphism (orbit law for the alpha-parameter).

struct FamilyIsoResult {
    bool isomorphic = false;
    long shift = -1;  // the k with alpha_2 = zeta^k alpha_1
    std::optional<HModuleIso> certificate;
    std::string detail;
};

/// L_{alpha_1}(B) ~ L_{alpha_2}(B) iff alpha_2 lies on the zeta-orbit of
/// alpha_1.  On success returns the verified shift isomorphism.
inline FamilyIsoResult are_isomorphic_family(const FamilyParams& p1, const FamilyParams& p2) {
    if (p1.family != Family::L_alpha || p2.family != Family::L_alpha)
        throw Error("are_isomorphic_family: only L_alpha parameters are supported");
    if (p1.m != p2.m) throw Error("are_isomorphic_family: conductors differ");
    if (!(p1.B.dim == p2.B.dim && p1.B.sc == p2.B.sc))
        throw Error("are_isomorphic_family: base algebras differ (same-B inputs only)");
    FamilyIsoResult res;
    for (long k = 0; k < p1.m; ++k) {
        if (p2.scalar == CycNum::zeta_power(p1.m, k) * p1.scalar) {
            res.isomorphic = true;
            res.shift = k;
            res.certificate = iso_shift(p1.B, p1.m, p1.scalar, k, Mat::identity(p1.m, p1.B.dim));
            res.detail = "alpha_2 = zeta^" + std::to_string(k) + " alpha_1";
            return res;
        }
    }
    res.detail = "alpha_2 is not on the zeta-orbit of alpha_1";
    if (!p1.scalar.is_zero() && !p2.scalar.is_zero()) {
        CycNum om = CycNum::one(p1.m) - CycNum::zeta(p1.m);
        CycNum g1 = (p1.scalar.pow(p1.m) * om.pow(p1.m)).inverse();
        CycNum g2 = (p2.scalar.pow(p1.m) * om.pow(p1.m)).inverse();
        if (!(g1 == g2))
            res.detail += "; gamma invariants differ: " + g1.to_display() + " vs " + g2.to_display();
    }
    return res;
}

}  // namespace taftlie
