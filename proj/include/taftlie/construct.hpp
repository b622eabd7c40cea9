#pragma once

// The two canonical families of Taft-simple Lie algebras and the explicit
// isomorphisms between them.
//
//   L_alpha(B):  m copies of a simple algebra B; c cycles the copies and v
//                takes alpha-scaled, zeta-twisted consecutive differences.
//   L(B,gamma):  levels phi^0(B), ..., phi^{m-1}(B); c acts by zeta^k on
//                level k, v shifts levels down, and brackets carry quantum
//                binomial coefficients with a gamma-weighted wrap-around.

#include <string>
#include <utility>
#include <vector>

#include "taftlie/hmod.hpp"

namespace taftlie {

enum class Family { L_alpha, L_gamma };

inline const char* to_string(Family f) { return f == Family::L_alpha ? "L_alpha" : "L_gamma"; }

struct FamilyParams {
    Family family;
    LieAlgebra B;
    long m = 0;
    CycNum scalar;  // alpha or gamma, conductor m
};

namespace detail {

inline void require_simple_base(const LieAlgebra& B) {
    SimplicityResult s = is_simple(B);
    if (s.status == Simplicity::not_simple)
        throw Error("family constructor: base algebra is not simple (" + s.detail + ")");
}

inline void require_lie(const LieAlgebra& L, const std::string& who) {
    Report rep = check_lie_axioms(L);
    if (!rep.all_pass()) {
        const CheckResult* f = rep.first_failure();
        throw VerificationError(who + ": Lie axioms fail: " + f->check + " (" + f->witness + ")");
    }
}

}  // namespace detail

/// Direct sum of m copies of B, with c(a_1,...,a_m) = (a_m, a_1, ..., a_{m-1})
/// and v(a_1,...,a_m) = alpha (a_1 - a_m, zeta (a_2 - a_1), ...,
/// zeta^{m-1}(a_m - a_{m-1})).  Copy t (0-based) holds basis index t*dim(B)+p.
inline HModuleLie build_L_alpha(const LieAlgebra& B, long m, const CycNum& alpha) {
    if (B.m != m || alpha.conductor() != m)
        throw Error("build_L_alpha: B and alpha must live over Q(zeta_m)");
    detail::require_simple_base(B);
    const int d = B.dim;
    const int dim = static_cast<int>(m) * d;
    LieAlgebra L(m, dim);
    for (long t = 0; t < m; ++t)
        for (int p = 0; p < d; ++p) L.labels.push_back(B.label(p) + "@" + std::to_string(t));
    for (long t = 0; t < m; ++t)
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                const Vec& cs = B.sc[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                Vec& out = L.sc[static_cast<std::size_t>(t * d + p)][static_cast<std::size_t>(t * d + q)];
                for (int r = 0; r < d; ++r) out[static_cast<std::size_t>(t * d + r)] = cs[static_cast<std::size_t>(r)];
            }
    detail::require_lie(L, "build_L_alpha");

    Mat C(m, dim, dim), V(m, dim, dim);
    for (long t = 0; t < m; ++t)
        for (int p = 0; p < d; ++p) {
            int col = static_cast<int>(t) * d + p;
            C.at(static_cast<int>(((t + 1) % m)) * d + p, col) = CycNum::one(m);
            V.at(col, col) += alpha * CycNum::zeta_power(m, t);
            V.at(static_cast<int>(((t + 1) % m)) * d + p, col) -= alpha * CycNum::zeta_power(m, t + 1);
        }
    return make_hmodule(std::move(L), make_taft(m), std::move(C), std::move(V));
}

/// Closed form of v^ell on a tuple of m blocks (flattened, block size dim B):
///   b_k = alpha^ell zeta^{ell k} sum_j (-1)^j zeta^{-j(j-1)/2}
///         binom(ell, j)_{zeta^{-1}} a_{k-j}   (indices mod m, 0-based),
/// with v^m = 0 handled directly.
inline Vec v_power_closed_form(const LieAlgebra& B, long m, const CycNum& alpha, long ell,
                               const Vec& tuple) {
    if (ell < 0 || ell > m) throw Error("v_power_closed_form: need 0 <= ell <= m");
    const int d = B.dim;
    if (static_cast<int>(tuple.size()) != static_cast<int>(m) * d)
        throw Error("v_power_closed_form: tuple has wrong length");
    if (ell == m) return zero_vec(m, static_cast<int>(m) * d);
    if (ell == 0) return tuple;
    CycNum zinv = CycNum::zeta_power(m, -1);
    Vec out = zero_vec(m, static_cast<int>(m) * d);
    CycNum alpha_ell = alpha.pow(ell);
    for (long k = 0; k < m; ++k) {
        CycNum front = alpha_ell * CycNum::zeta_power(m, ell * k);
        for (long j = 0; j <= ell; ++j) {
            CycNum coef = front * CycNum::zeta_power(m, -(j * (j - 1)) / 2) * q_binom_base(zinv, ell, j);
            if (j % 2 == 1) coef = -coef;
            long src = ((k - j) % m + m) % m;
            for (int p = 0; p < d; ++p) {
                const CycNum& a = tuple[static_cast<std::size_t>(src * d + p)];
                if (!a.is_zero()) out[static_cast<std::size_t>(k * d + p)].add_mul(coef, a);
            }
        }
    }
    return out;
}

/// Levels phi^k(B) for k = 0..m-1 (basis index k*dim(B)+p), with
///   [phi^k(a), phi^l(b)] = binom(k+l, k)_zeta phi^{k+l}[a,b]          (k+l < m)
///   [phi^k(a), phi^l(b)] = gamma (k+l-m)!_z / (k!_z l!_z) phi^{k+l-m}[a,b]
///                                                                     (k+l >= m)
/// c = zeta^k on level k, v(level k) = level k-1, v(level 0) = 0.
inline HModuleLie build_L_gamma(const LieAlgebra& B, long m, const CycNum& gamma) {
    if (B.m != m || gamma.conductor() != m)
        throw Error("build_L_gamma: B and gamma must live over Q(zeta_m)");
    detail::require_simple_base(B);
    const int d = B.dim;
    const int dim = static_cast<int>(m) * d;
    LieAlgebra L(m, dim);
    for (long k = 0; k < m; ++k)
        for (int p = 0; p < d; ++p) L.labels.push_back(B.label(p) + "|" + std::to_string(k));
    for (long k = 0; k < m; ++k)
        for (long l = 0; l < m; ++l) {
            CycNum coef = CycNum::zero(m);
            long target = 0;
            if (k + l < m) {
                coef = q_binom(m, k + l, k);
                target = k + l;
            } else {
                CycNum den = q_factorial(m, k) * q_factorial(m, l);
                if (den.is_zero()) throw Error("build_L_gamma: vanishing factorial denominator");
                coef = gamma * q_factorial(m, k + l - m) / den;
                target = k + l - m;
            }
            if (coef.is_zero()) continue;
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) {
                    const Vec& cs = B.sc[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                    Vec& out = L.sc[static_cast<std::size_t>(k * d + p)][static_cast<std::size_t>(l * d + q)];
                    for (int r = 0; r < d; ++r)
                        if (!cs[static_cast<std::size_t>(r)].is_zero())
                            out[static_cast<std::size_t>(target * d + r)].add_mul(coef, cs[static_cast<std::size_t>(r)]);
                }
        }
    detail::require_lie(L, "build_L_gamma");

    Mat C(m, dim, dim), V(m, dim, dim);
    for (long k = 0; k < m; ++k)
        for (int p = 0; p < d; ++p) {
            int col = static_cast<int>(k) * d + p;
            C.at(col, col) = CycNum::zeta_power(m, k);
            if (k >= 1) V.at(static_cast<int>(k - 1) * d + p, col) = CycNum::one(m);
        }
    return make_hmodule(std::move(L), make_taft(m), std::move(C), std::move(V));
}

/// The degree-raising right inverse of V: V phi = id on L^(0..m-2) and
/// phi(L^(m-1)) = 0.  Requires V to restrict bijectively L^(k+1) -> L^(k).
inline Mat build_phi(const HModuleLie& M) {
    Grading g = grading(M);
    const long m = g.m;
    const LieAlgebra& L = M.L;
    std::vector<Vec> sources, targets;
    for (long k = 0; k + 1 < m; ++k) {
        const auto& upper = g.components[static_cast<std::size_t>(k + 1)];
        const auto& lower = g.components[static_cast<std::size_t>(k)];
        RrefBuilder image(L.m, L.dim);
        for (const auto& b : upper.rows) {
            Vec vb = M.V.apply(b);
            image.add(vb);
            sources.push_back(std::move(vb));
            targets.push_back(b);
        }
        if (image.dim() != upper.dim() || image.dim() != lower.dim())
            throw Error("build_phi: V is not bijective from L^(" + std::to_string(k + 1) +
                        ") onto L^(" + std::to_string(k) + ")");
    }
    for (const auto& b : g.components[static_cast<std::size_t>(m - 1)].rows) {
        sources.push_back(b);
        targets.push_back(zero_vec(L.m, L.dim));
    }
    Mat S = Mat::from_columns(L.m, sources);
    Mat T = Mat::from_columns(L.m, targets);
    return T * inverse(S);
}

// ---------------------------------------------------------------------------
// Isomorphisms.

/// Invertible linear map intertwining brackets and the whole H-action.
struct HModuleIso {
    HModuleLie source;
    HModuleLie target;
    Mat matrix;  // column i = image of source basis vector i
};

/// Checks invertibility, bracket intertwining on all basis pairs, and
/// commutation with the C- and V-actions.
inline Report verify_iso(const HModuleIso& iso) {
    Report rep;
    const LieAlgebra& src = iso.source.L;
    const LieAlgebra& tgt = iso.target.L;
    const Mat& T = iso.matrix;
    {
        bool ok = src.dim == tgt.dim && is_invertible(T);
        rep.add("invertible", ok ? CheckStatus::pass : CheckStatus::fail,
                ok ? "" : "matrix is singular or dimensions differ");
        if (!ok) return rep;
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < src.dim && ok; ++i)
            for (int j = 0; j < src.dim; ++j) {
                Vec lhs = T.apply(src.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                Vec rhs = tgt.bracket(T.column(i), T.column(j));
                if (lhs != rhs) {
                    ok = false;
                    w = "bracket not intertwined on (" + src.label(i) + "," + src.label(j) + ")";
                    break;
                }
            }
        rep.add("bracket_intertwined", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }
    {
        bool ok = T * iso.source.C == iso.target.C * T;
        rep.add("c_action_intertwined", ok ? CheckStatus::pass : CheckStatus::fail,
                ok ? "" : "theta C != C theta");
    }
    {
        bool ok = T * iso.source.V == iso.target.V * T;
        rep.add("v_action_intertwined", ok ? CheckStatus::pass : CheckStatus::fail,
                ok ? "" : "theta V != V theta");
    }
    return rep;
}

/// The explicit isomorphism L(B, 1/(alpha^m (1-zeta)^m)) -> L_alpha(B) for
/// alpha != 0: level k maps to the scaled twisted diagonal
///   phi^k(b) |-> 1/(alpha^k (1-zeta)^k k!_z) (b, zeta^{-k} b, ..., zeta^{-(m-1)k} b).
inline HModuleIso iso_equivdef(const LieAlgebra& B, long m, const CycNum& alpha) {
    if (alpha.is_zero()) throw Error("iso_equivdef: alpha must be nonzero");
    CycNum one_minus_zeta = CycNum::one(m) - CycNum::zeta(m);
    CycNum gamma = (alpha.pow(m) * one_minus_zeta.pow(m)).inverse();
    HModuleIso iso{build_L_gamma(B, m, gamma), build_L_alpha(B, m, alpha), Mat()};
    const int d = B.dim;
    const int dim = static_cast<int>(m) * d;
    Mat T(m, dim, dim);
    for (long k = 0; k < m; ++k) {
        CycNum scale = (alpha.pow(k) * one_minus_zeta.pow(k) * q_factorial(m, k)).inverse();
        for (int p = 0; p < d; ++p)
            for (long t = 0; t < m; ++t)
                T.at(static_cast<int>(t) * d + p, static_cast<int>(k) * d + p) =
                    scale * CycNum::zeta_power(m, -t * k);
    }
    iso.matrix = std::move(T);
    Report rep = verify_iso(iso);
    if (!rep.all_pass())
        throw VerificationError("iso_equivdef: " + rep.first_failure()->check + " failed");
    return iso;
}

/// The cyclic-shift isomorphism L_alpha(B) -> L_{zeta^k alpha}(B):
/// theta(b_1,...,b_m) = (psi(b_{k+1}),...,psi(b_m),psi(b_1),...,psi(b_k))
/// for a Lie algebra automorphism psi of B.
inline HModuleIso iso_shift(const LieAlgebra& B, long m, const CycNum& alpha, long k, const Mat& psi) {
    if (psi.rows() != B.dim || psi.cols() != B.dim)
        throw Error("iso_shift: psi must be square of size dim B");
    if (!is_invertible(psi)) throw Error("iso_shift: psi is singular");
    for (int i = 0; i < B.dim; ++i)
        for (int j = 0; j < B.dim; ++j)
            if (psi.apply(B.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) !=
                B.bracket(psi.column(i), psi.column(j)))
                throw Error("iso_shift: psi is not a Lie algebra isomorphism");
    CycNum alpha2 = CycNum::zeta_power(m, k) * alpha;
    HModuleIso iso{build_L_alpha(B, m, alpha), build_L_alpha(B, m, alpha2), Mat()};
    const int d = B.dim;
    const int dim = static_cast<int>(m) * d;
    Mat T(m, dim, dim);
    for (long s = 0; s < m; ++s) {
        long out_copy = ((s - k) % m + m) % m;
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q)
                T.at(static_cast<int>(out_copy) * d + q, static_cast<int>(s) * d + p) = psi.at(q, p);
    }
    iso.matrix = std::move(T);
    Report rep = verify_iso(iso);
    if (!rep.all_pass())
        throw VerificationError("iso_shift: " + rep.first_failure()->check + " failed");
    return iso;
}

}  // namespace taftlie
