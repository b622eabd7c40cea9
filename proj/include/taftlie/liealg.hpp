#pragma once

// Finite dimensional Lie algebras given by structure constants over
// Q(zeta_m): constructors for sl_n and gl_n, axiom checks, Killing form,
// solvable radical via Killing-orthogonality of the derived subalgebra,
// and a certified simplicity test.

#include <optional>
#include <string>
#include <vector>

#include "taftlie/matrix.hpp"
#include "taftlie/report.hpp"
#include "taftlie/util.hpp"

namespace taftlie {

struct LieAlgebra {
    long m = 0;  // conductor of the scalar field
    int dim = 0;
    std::vector<std::string> labels;      // empty or size dim
    std::vector<std::vector<Vec>> sc;     // sc[i][j] = coordinates of [b_i, b_j]

    LieAlgebra() = default;
    LieAlgebra(long m_, int dim_) : m(m_), dim(dim_) {
        sc.assign(static_cast<std::size_t>(dim),
                  std::vector<Vec>(static_cast<std::size_t>(dim), zero_vec(m, dim)));
    }

    std::string label(int i) const {
        if (i >= 0 && i < static_cast<int>(labels.size())) return labels[static_cast<std::size_t>(i)];
        return "b" + std::to_string(i);
    }

    /// Bilinear extension of the structure constants.
    Vec bracket(const Vec& x, const Vec& y) const {
        if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
            throw Error("bracket: vector length must equal dim");
        Vec r = zero_vec(m, dim);
        for (int p = 0; p < dim; ++p) {
            if (x[static_cast<std::size_t>(p)].is_zero()) continue;
            for (int q = 0; q < dim; ++q) {
                if (y[static_cast<std::size_t>(q)].is_zero()) continue;
                const Vec& cs = sc[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                CycNum w = x[static_cast<std::size_t>(p)] * y[static_cast<std::size_t>(q)];
                for (int k = 0; k < dim; ++k)
                    if (!cs[static_cast<std::size_t>(k)].is_zero())
                        r[static_cast<std::size_t>(k)].add_mul(w, cs[static_cast<std::size_t>(k)]);
            }
        }
        return r;
    }

    /// Matrix of ad b_i.
    Mat ad(int i) const {
        Mat a(m, dim, dim);
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                a.at(k, j) = sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        return a;
    }

    Mat ad_of(const Vec& x) const {
        Mat a(m, dim, dim);
        for (int p = 0; p < dim; ++p) {
            if (x[static_cast<std::size_t>(p)].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                const Vec& cs = sc[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
                for (int k = 0; k < dim; ++k)
                    if (!cs[static_cast<std::size_t>(k)].is_zero())
                        a.at(k, j).add_mul(x[static_cast<std::size_t>(p)], cs[static_cast<std::size_t>(k)]);
            }
        }
        return a;
    }

    std::vector<Mat> ad_basis() const {
        std::vector<Mat> out;
        out.reserve(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) out.push_back(ad(i));
        return out;
    }
};

// ---------------------------------------------------------------------------
// Constructors.

/// Traceless n x n matrices with the commutator bracket.  Basis: E_ij for
/// i < j (lexicographic), then H_k = E_kk - E_{k+1,k+1}, then E_ij for i > j.
/// For n = 2 this is the classical (e, h, f).
inline LieAlgebra make_sl(int n, long m) {
    if (n < 2) throw Error("make_sl: n must be >= 2");
    struct BasisElt { int r, c; };           // r == c marks H_r
    std::vector<BasisElt> basis;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            basis.push_back({i, j});
            labels.push_back(n == 2 ? "e" : "E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    for (int k = 0; k + 1 < n; ++k) {
        basis.push_back({k, k});
        labels.push_back(n == 2 ? "h" : "H" + std::to_string(k + 1));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            basis.push_back({i, j});
            labels.push_back(n == 2 ? "f" : "E" + std::to_string(i + 1) + std::to_string(j + 1));
        }

    const int dim = n * n - 1;
    auto as_matrix = [&](const BasisElt& b) {
        Mat x(m, n, n);
        if (b.r == b.c) {
            x.at(b.r, b.r) = CycNum::one(m);
            x.at(b.r + 1, b.r + 1) = -CycNum::one(m);
        } else {
            x.at(b.r, b.c) = CycNum::one(m);
        }
        return x;
    };
    // Coordinates of a traceless matrix in this basis: off-diagonal entries
    // directly; diagonal coefficients are the partial sums of the diagonal.
    auto coords = [&](const Mat& x) {
        Vec v = zero_vec(m, dim);
        int idx = 0;
        for (const auto& b : basis) {
            if (b.r == b.c) {
                CycNum s = CycNum::zero(m);
                for (int j = 0; j <= b.r; ++j) s += x.at(j, j);
                v[static_cast<std::size_t>(idx)] = s;
            } else {
                v[static_cast<std::size_t>(idx)] = x.at(b.r, b.c);
            }
            ++idx;
        }
        return v;
    };

    LieAlgebra L(m, dim);
    L.labels = labels;
    for (int i = 0; i < dim; ++i) {
        Mat a = as_matrix(basis[static_cast<std::size_t>(i)]);
        for (int j = 0; j < dim; ++j) {
            Mat b = as_matrix(basis[static_cast<std::size_t>(j)]);
            L.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coords(a * b - b * a);
        }
    }
    return L;
}

/// All n x n matrices with the commutator bracket; basis E_ij row-major.
inline LieAlgebra make_gl(int n, long m) {
    const int dim = n * n;
    LieAlgebra L(m, dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            L.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    auto idx = [n](int r, int c) { return r * n + c; };
    // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Vec& v = L.sc[static_cast<std::size_t>(idx(a, b))][static_cast<std::size_t>(idx(c, d))];
                    if (b == c) v[static_cast<std::size_t>(idx(a, d))] += CycNum::one(m);
                    if (d == a) v[static_cast<std::size_t>(idx(c, b))] -= CycNum::one(m);
                }
    return L;
}

/// Direct sum with all cross brackets zero; labels get a copy suffix.
inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.m != b.m) throw Error("direct_sum: conductor mismatch");
    LieAlgebra L(a.m, a.dim + b.dim);
    for (int i = 0; i < a.dim; ++i) L.labels.push_back(a.label(i) + "#1");
    for (int i = 0; i < b.dim; ++i) L.labels.push_back(b.label(i) + "#2");
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                L.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                    a.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            for (int k = 0; k < b.dim; ++k)
                L.sc[static_cast<std::size_t>(a.dim + i)][static_cast<std::size_t>(a.dim + j)][static_cast<std::size_t>(a.dim + k)] =
                    b.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    return L;
}

// ---------------------------------------------------------------------------
// Structural checks.

/// Antisymmetry on all pairs and the Jacobi identity on all basis triples,
/// exactly.  Failing triples are named in the witness.
inline Report check_lie_axioms(const LieAlgebra& L) {
    Report rep;
    bool anti_ok = true;
    std::string anti_witness;
    for (int i = 0; i < L.dim && anti_ok; ++i)
        for (int j = 0; j < L.dim && anti_ok; ++j) {
            Vec s = L.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 0; k < L.dim; ++k)
                s[static_cast<std::size_t>(k)] += L.sc[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (!vec_is_zero(s)) {
                anti_ok = false;
                anti_witness = "[" + L.label(i) + "," + L.label(j) + "] + [" + L.label(j) + "," + L.label(i) + "] != 0";
            }
        }
    rep.add("antisymmetry", anti_ok ? CheckStatus::pass : CheckStatus::fail, anti_witness);

    bool jac_ok = true;
    std::string jac_witness;
    for (int i = 0; i < L.dim && jac_ok; ++i) {
        Vec ei = unit_vec(L.m, L.dim, i);
        for (int j = i + 1; j < L.dim && jac_ok; ++j) {
            Vec ej = unit_vec(L.m, L.dim, j);
            for (int k = j + 1; k < L.dim; ++k) {
                Vec ek = unit_vec(L.m, L.dim, k);
                Vec s = L.bracket(ei, L.bracket(ej, ek));
                Vec t = L.bracket(ej, L.bracket(ek, ei));
                Vec u = L.bracket(ek, L.bracket(ei, ej));
                for (int p = 0; p < L.dim; ++p) {
                    s[static_cast<std::size_t>(p)] += t[static_cast<std::size_t>(p)];
                    s[static_cast<std::size_t>(p)] += u[static_cast<std::size_t>(p)];
                }
                if (!vec_is_zero(s)) {
                    jac_ok = false;
                    jac_witness = "jacobi fails on (" + L.label(i) + "," + L.label(j) + "," + L.label(k) + ")";
                    break;
                }
            }
        }
    }
    rep.add("jacobi", jac_ok ? CheckStatus::pass : CheckStatus::fail, jac_witness);
    return rep;
}

/// kappa(b_i, b_j) = trace(ad b_i . ad b_j).
inline Mat killing_form(const LieAlgebra& L) {
    std::vector<Mat> ads = L.ad_basis();
    Mat k(L.m, L.dim, L.dim);
    for (int i = 0; i < L.dim; ++i)
        for (int j = i; j < L.dim; ++j) {
            CycNum t = CycNum::zero(L.m);
            for (int r = 0; r < L.dim; ++r)
                for (int s = 0; s < L.dim; ++s) {
                    const CycNum& x = ads[static_cast<std::size_t>(i)].at(r, s);
                    if (x.is_zero()) continue;
                    const CycNum& y = ads[static_cast<std::size_t>(j)].at(s, r);
                    if (y.is_zero()) continue;
                    t.add_mul(x, y);
                }
            k.at(i, j) = t;
            k.at(j, i) = t;
        }
    return k;
}

/// Span of all brackets [u, w], u in U, w in W.
inline SubspaceBasis bracket_span(const LieAlgebra& L, const SubspaceBasis& u, const SubspaceBasis& w) {
    RrefBuilder rb(L.m, L.dim);
    for (const auto& x : u.rows)
        for (const auto& y : w.rows) rb.add(L.bracket(x, y));
    return SubspaceBasis::from_builder(rb);
}

inline SubspaceBasis derived_subalgebra(const LieAlgebra& L) {
    RrefBuilder rb(L.m, L.dim);
    for (int i = 0; i < L.dim; ++i)
        for (int j = i + 1; j < L.dim; ++j)
            rb.add(L.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return SubspaceBasis::from_builder(rb);
}

/// Derived series of a subalgebra (U, [U,U], [[U,U],[U,U]], ...) until stable.
inline std::vector<SubspaceBasis> derived_series(const LieAlgebra& L, SubspaceBasis u) {
    std::vector<SubspaceBasis> out{u};
    while (true) {
        SubspaceBasis next = bracket_span(L, out.back(), out.back());
        if (next == out.back()) break;
        out.push_back(next);
        if (out.back().is_zero()) break;
    }
    return out;
}

/// Lower central series U, [U,U], [U,[U,U]], ... until stable.
inline std::vector<SubspaceBasis> lower_central_series(const LieAlgebra& L, SubspaceBasis u) {
    std::vector<SubspaceBasis> out{u};
    while (true) {
        SubspaceBasis next = bracket_span(L, out.front(), out.back());
        if (next == out.back()) break;
        out.push_back(next);
        if (out.back().is_zero()) break;
    }
    return out;
}

/// Cartan criterion (char 0): the solvable radical is the Killing-orthogonal
/// complement of the derived subalgebra.
inline SubspaceBasis solvable_radical(const LieAlgebra& L) {
    Mat k = killing_form(L);
    SubspaceBasis der = derived_subalgebra(L);
    Mat constraints(L.m, der.dim(), L.dim);
    for (int r = 0; r < der.dim(); ++r) {
        Vec ky = k.apply(der.rows[static_cast<std::size_t>(r)]);
        for (int c = 0; c < L.dim; ++c) constraints.at(r, c) = ky[static_cast<std::size_t>(c)];
    }
    return kernel(constraints);
}

// ---------------------------------------------------------------------------
// Simplicity.

enum class Simplicity { simple, not_simple, undetermined };

inline const char* to_string(Simplicity s) {
    switch (s) {
        case Simplicity::simple: return "simple";
        case Simplicity::not_simple: return "not_simple";
        default: return "undetermined";
    }
}

struct SimplicityResult {
    Simplicity status = Simplicity::undetermined;
    std::optional<SubspaceBasis> witness;  // proper nonzero ideal, when found
    std::string detail;
    int op_algebra_dim = -1;
};

/// Tri-state simplicity over Q(zeta_m).  `not_simple` comes with an explicit
/// ideal; `simple` is certified by the adjoint representation generating the
/// full matrix algebra (absolute irreducibility), which is sound but not
/// complete over a non-closed field.
inline SimplicityResult is_simple(const LieAlgebra& L, std::uint64_t seed = kDefaultSeed) {
    SimplicityResult res;
    SubspaceBasis der = derived_subalgebra(L);
    if (!der.is_full()) {
        res.status = Simplicity::not_simple;
        res.witness = der;
        res.detail = "[L,L] is a proper subspace (dim " + std::to_string(der.dim()) + ")";
        return res;
    }
    std::vector<Mat> ads = L.ad_basis();
    auto try_seed = [&](const Vec& v) -> bool {
        if (vec_is_zero(v)) return false;
        SubspaceBasis ideal = closure(SubspaceBasis::span(L.m, L.dim, {v}), ads);
        if (!ideal.is_full() && !ideal.is_zero()) {
            res.status = Simplicity::not_simple;
            res.witness = ideal;
            res.detail = "proper ideal of dim " + std::to_string(ideal.dim());
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
    res.op_algebra_dim = operator_algebra_dim(ads, L.m, L.dim);
    if (res.op_algebra_dim == L.dim * L.dim) {
        res.status = Simplicity::simple;
        res.detail = "adjoint representation generates the full matrix algebra";
    } else {
        res.status = Simplicity::undetermined;
        res.detail = "no ideal found; operator algebra dim " +
                     std::to_string(res.op_algebra_dim) + " < dim^2";
    }
    return res;
}

}  // namespace taftlie
