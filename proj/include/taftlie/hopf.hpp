#pragma once

// Finite dimensional Hopf algebras as explicit tables: multiplication,
// coproduct, counit and antipode are all stored on a fixed basis and every
// axiom is checkable by exact evaluation.  The main constructor builds the
// m^2-dimensional Taft algebra: generators c (group-like) and v
// (skew-primitive) with c^m = 1, v^m = 0, vc = zeta c v, basis c^i v^k.

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "taftlie/matrix.hpp"
#include "taftlie/report.hpp"

namespace taftlie {

/// One summand of a coproduct: coeff * (h_left tensor h_right).
struct CoproductTerm {
    CycNum coeff;
    int left;
    int right;
};

using CoproductTerms = std::vector<CoproductTerm>;

struct HopfAlgebraTable {
    long m = 0;  // conductor of the scalar field
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<Vec>> mult;  // mult[i][j] = coordinates of h_i h_j
    Vec unit;                            // coordinates of 1_H
    std::vector<CoproductTerms> coproduct;
    Vec counit;                          // counit[i] = eps(h_i)
    Mat antipode;                        // column j = coordinates of S(h_j)

    // Set by make_taft: positions of the two generators in the basis.
    bool is_taft = false;
    int index_one = 0;
    int index_c = -1;
    int index_v = -1;

    std::string label(int i) const {
        if (i >= 0 && i < static_cast<int>(labels.size())) return labels[static_cast<std::size_t>(i)];
        return "h" + std::to_string(i);
    }

    Vec product(const Vec& a, const Vec& b) const {
        Vec r = zero_vec(m, dim);
        for (int i = 0; i < dim; ++i) {
            if (a[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (b[static_cast<std::size_t>(j)].is_zero()) continue;
                CycNum w = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
                const Vec& pij = mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (int k = 0; k < dim; ++k)
                    if (!pij[static_cast<std::size_t>(k)].is_zero())
                        r[static_cast<std::size_t>(k)].add_mul(w, pij[static_cast<std::size_t>(k)]);
            }
        }
        return r;
    }

    CycNum eps(const Vec& a) const {
        CycNum r = CycNum::zero(m);
        for (int i = 0; i < dim; ++i)
            if (!a[static_cast<std::size_t>(i)].is_zero())
                r.add_mul(a[static_cast<std::size_t>(i)], counit[static_cast<std::size_t>(i)]);
        return r;
    }

    /// Coproduct of a general element as a sorted sparse term list.
    CoproductTerms coproduct_of(const Vec& a) const {
        std::map<std::pair<int, int>, CycNum> acc;
        for (int i = 0; i < dim; ++i) {
            if (a[static_cast<std::size_t>(i)].is_zero()) continue;
            for (const auto& t : coproduct[static_cast<std::size_t>(i)]) {
                auto key = std::make_pair(t.left, t.right);
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(key, a[static_cast<std::size_t>(i)] * t.coeff);
                else
                    it->second.add_mul(a[static_cast<std::size_t>(i)], t.coeff);
            }
        }
        CoproductTerms out;
        for (auto& [k, c] : acc)
            if (!c.is_zero()) out.push_back({c, k.first, k.second});
        return out;
    }
};

namespace detail {

/// Product of two coproduct term lists inside H tensor H.
inline CoproductTerms tensor_mul(const HopfAlgebraTable& H, const CoproductTerms& a,
                                 const CoproductTerms& b) {
    std::map<std::pair<int, int>, CycNum> acc;
    for (const auto& x : a)
        for (const auto& y : b) {
            CycNum c = x.coeff * y.coeff;
            const Vec& pl = H.mult[static_cast<std::size_t>(x.left)][static_cast<std::size_t>(y.left)];
            const Vec& pr = H.mult[static_cast<std::size_t>(x.right)][static_cast<std::size_t>(y.right)];
            for (int p = 0; p < H.dim; ++p) {
                if (pl[static_cast<std::size_t>(p)].is_zero()) continue;
                CycNum cp = c * pl[static_cast<std::size_t>(p)];
                for (int q = 0; q < H.dim; ++q) {
                    if (pr[static_cast<std::size_t>(q)].is_zero()) continue;
                    auto key = std::make_pair(p, q);
                    auto it = acc.find(key);
                    if (it == acc.end())
                        acc.emplace(key, cp * pr[static_cast<std::size_t>(q)]);
                    else
                        it->second.add_mul(cp, pr[static_cast<std::size_t>(q)]);
                }
            }
        }
    CoproductTerms out;
    for (auto& [k, c] : acc)
        if (!c.is_zero()) out.push_back({c, k.first, k.second});
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Constructors.

/// The Taft algebra of dimension m^2.  Basis c^i v^k indexed by k*m + i
/// (sorted by (k, i)); products are normalized once through v c = zeta c v,
/// c^m = 1, v^m = 0.
inline HopfAlgebraTable make_taft(long m) {
    if (m < 2) throw Error("make_taft: m must be >= 2");
    HopfAlgebraTable H;
    H.m = m;
    H.dim = static_cast<int>(m * m);
    H.is_taft = true;
    auto idx = [m](long i, long k) { return static_cast<int>(k * m + i); };
    H.index_one = idx(0, 0);
    H.index_c = idx(1, 0);
    H.index_v = idx(0, 1);

    for (long k = 0; k < m; ++k)
        for (long i = 0; i < m; ++i) {
            std::string s;
            if (i == 1) s += "c";
            else if (i > 1) s += "c^" + std::to_string(i);
            if (k == 1) s += (s.empty() ? "v" : " v");
            else if (k > 1) s += (s.empty() ? "" : " ") + std::string("v^") + std::to_string(k);
            H.labels.push_back(s.empty() ? "1" : s);
        }

    // (c^i v^k)(c^j v^l) = zeta^{kj} c^{i+j} v^{k+l}, truncated at v^m = 0.
    H.mult.assign(static_cast<std::size_t>(H.dim),
                  std::vector<Vec>(static_cast<std::size_t>(H.dim), zero_vec(m, H.dim)));
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < m; ++k)
            for (long j = 0; j < m; ++j)
                for (long l = 0; l < m; ++l) {
                    if (k + l >= m) continue;
                    Vec& out = H.mult[static_cast<std::size_t>(idx(i, k))][static_cast<std::size_t>(idx(j, l))];
                    out[static_cast<std::size_t>(idx((i + j) % m, k + l))] = CycNum::zeta_power(m, k * j);
                }

    H.unit = unit_vec(m, H.dim, H.index_one);

    // Coproduct: Delta(c) = c (x) c, Delta(v) = c (x) v + v (x) 1; extend as an
    // algebra map by multiplying term lists in H (x) H.
    CoproductTerms dc = {{CycNum::one(m), H.index_c, H.index_c}};
    CoproductTerms dv = {{CycNum::one(m), H.index_c, H.index_v},
                         {CycNum::one(m), H.index_v, H.index_one}};
    CoproductTerms one_term = {{CycNum::one(m), H.index_one, H.index_one}};
    std::vector<CoproductTerms> dc_pow{one_term}, dv_pow{one_term};
    for (long i = 1; i < m; ++i) dc_pow.push_back(detail::tensor_mul(H, dc_pow.back(), dc));
    for (long k = 1; k < m; ++k) dv_pow.push_back(detail::tensor_mul(H, dv_pow.back(), dv));
    H.coproduct.resize(static_cast<std::size_t>(H.dim));
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < m; ++k)
            H.coproduct[static_cast<std::size_t>(idx(i, k))] =
                detail::tensor_mul(H, dc_pow[static_cast<std::size_t>(i)], dv_pow[static_cast<std::size_t>(k)]);

    H.counit = zero_vec(m, H.dim);
    for (long i = 0; i < m; ++i) H.counit[static_cast<std::size_t>(idx(i, 0))] = CycNum::one(m);

    // S(c) = c^{m-1}, S(v) = -c^{m-1} v; S is an algebra anti-map, so
    // S(c^i v^k) = S(v)^k S(c)^i, computed in H.
    Vec s_c = unit_vec(m, H.dim, idx(m - 1, 0));
    Vec s_v = zero_vec(m, H.dim);
    s_v[static_cast<std::size_t>(idx(m - 1, 1))] = -CycNum::one(m);
    H.antipode = Mat(m, H.dim, H.dim);
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < m; ++k) {
            Vec img = H.unit;
            for (long t = 0; t < k; ++t) img = H.product(img, s_v);
            for (long t = 0; t < i; ++t) img = H.product(img, s_c);
            for (int r = 0; r < H.dim; ++r) H.antipode.at(r, idx(i, k)) = img[static_cast<std::size_t>(r)];
        }
    return H;
}

/// One-dimensional Hopf algebra F*1 (trivial actions, ordinary identities).
inline HopfAlgebraTable make_trivial_hopf(long m) {
    HopfAlgebraTable H;
    H.m = m;
    H.dim = 1;
    H.labels = {"1"};
    H.mult = {{Vec{CycNum::one(m)}}};
    H.unit = {CycNum::one(m)};
    H.coproduct = {{{CycNum::one(m), 0, 0}}};
    H.counit = {CycNum::one(m)};
    H.antipode = Mat::identity(m, 1);
    return H;
}

/// The two-dimensional Hopf algebra F e_0 + F e_1 (direct sum of ideals)
/// with Delta(e_0) = e_0 (x) e_0 + e_1 (x) e_1, Delta(e_1) = e_0 (x) e_1 +
/// e_1 (x) e_0, eps(e_0) = 1, eps(e_1) = 0, S = id.  Scalars are plain
/// rationals (conductor 1).
inline HopfAlgebraTable make_dual_idempotent_hopf() {
    const long m = 1;
    HopfAlgebraTable H;
    H.m = m;
    H.dim = 2;
    H.labels = {"e0", "e1"};
    H.mult.assign(2, std::vector<Vec>(2, zero_vec(m, 2)));
    H.mult[0][0][0] = CycNum::one(m);
    H.mult[1][1][1] = CycNum::one(m);
    H.unit = Vec{CycNum::one(m), CycNum::one(m)};
    H.coproduct = {
        {{CycNum::one(m), 0, 0}, {CycNum::one(m), 1, 1}},
        {{CycNum::one(m), 0, 1}, {CycNum::one(m), 1, 0}},
    };
    H.counit = Vec{CycNum::one(m), CycNum::zero(m)};
    H.antipode = Mat::identity(m, 2);
    return H;
}

// ---------------------------------------------------------------------------
// Axioms.

/// Checks associativity, unit, coassociativity, counit, antipode and the
/// bialgebra compatibilities, all exactly.  Failures name a witness basis
/// element.
inline Report verify_hopf_axioms(const HopfAlgebraTable& H) {
    Report rep;
    const long m = H.m;

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < H.dim && ok; ++i)
            for (int j = 0; j < H.dim && ok; ++j)
                for (int k = 0; k < H.dim; ++k) {
                    Vec left = H.product(H.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                         unit_vec(m, H.dim, k));
                    Vec right = H.product(unit_vec(m, H.dim, i),
                                          H.mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
                    if (left != right) {
                        ok = false;
                        w = "(" + H.label(i) + " " + H.label(j) + ") " + H.label(k) + " != " +
                            H.label(i) + " (" + H.label(j) + " " + H.label(k) + ")";
                        break;
                    }
                }
        rep.add("associativity", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < H.dim; ++i) {
            Vec e = unit_vec(m, H.dim, i);
            if (H.product(H.unit, e) != e || H.product(e, H.unit) != e) {
                ok = false;
                w = "unit law fails on " + H.label(i);
                break;
            }
        }
        rep.add("unit_law", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }
    {
        // (Delta (x) id)Delta = (id (x) Delta)Delta on every basis element.
        bool ok = true;
        std::string w;
        for (int i = 0; i < H.dim && ok; ++i) {
            std::map<std::tuple<int, int, int>, CycNum> lhs, rhs;
            for (const auto& t : H.coproduct[static_cast<std::size_t>(i)]) {
                for (const auto& s : H.coproduct[static_cast<std::size_t>(t.left)]) {
                    auto key = std::make_tuple(s.left, s.right, t.right);
                    auto it = lhs.find(key);
                    if (it == lhs.end()) lhs.emplace(key, t.coeff * s.coeff);
                    else it->second.add_mul(t.coeff, s.coeff);
                }
                for (const auto& s : H.coproduct[static_cast<std::size_t>(t.right)]) {
                    auto key = std::make_tuple(t.left, s.left, s.right);
                    auto it = rhs.find(key);
                    if (it == rhs.end()) rhs.emplace(key, t.coeff * s.coeff);
                    else it->second.add_mul(t.coeff, s.coeff);
                }
            }
            for (auto& [k, c] : rhs) {
                auto it = lhs.find(k);
                if (it == lhs.end()) lhs.emplace(k, -c);
                else it->second -= c;
            }
            for (auto& [k, c] : lhs)
                if (!c.is_zero()) {
                    ok = false;
                    w = "coassociativity fails on " + H.label(i);
                    break;
                }
        }
        rep.add("coassociativity", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < H.dim; ++i) {
            Vec left = zero_vec(m, H.dim), right = zero_vec(m, H.dim);
            for (const auto& t : H.coproduct[static_cast<std::size_t>(i)]) {
                CycNum el = t.coeff * H.counit[static_cast<std::size_t>(t.left)];
                if (!el.is_zero()) left[static_cast<std::size_t>(t.right)] += el;
                CycNum er = t.coeff * H.counit[static_cast<std::size_t>(t.right)];
                if (!er.is_zero()) right[static_cast<std::size_t>(t.left)] += er;
            }
            Vec e = unit_vec(m, H.dim, i);
            if (left != e || right != e) {
                ok = false;
                w = "counit law fails on " + H.label(i);
                break;
            }
        }
        rep.add("counit_law", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }
    {
        // mu(S (x) id)Delta = eta.eps = mu(id (x) S)Delta.
        bool ok = true;
        std::string w;
        for (int i = 0; i < H.dim; ++i) {
            Vec left = zero_vec(m, H.dim), right = zero_vec(m, H.dim);
            for (const auto& t : H.coproduct[static_cast<std::size_t>(i)]) {
                Vec sl = H.product(H.antipode.column(t.left), unit_vec(m, H.dim, t.right));
                Vec sr = H.product(unit_vec(m, H.dim, t.left), H.antipode.column(t.right));
                vec_axpy(left, t.coeff, sl);
                vec_axpy(right, t.coeff, sr);
            }
            Vec expect = vec_scale(H.counit[static_cast<std::size_t>(i)], H.unit);
            if (left != expect || right != expect) {
                ok = false;
                w = "antipode law fails on " + H.label(i);
                break;
            }
        }
        rep.add("antipode_law", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }
    {
        // Delta and eps are algebra maps; Delta(1) = 1 (x) 1, eps(1) = 1.
        bool ok = true;
        std::string w;
        CoproductTerms unit_cop = H.coproduct_of(H.unit);
        CoproductTerms expected_unit;
        for (int p = 0; p < H.dim && ok; ++p)
            for (int q = 0; q < H.dim; ++q) {
                CycNum c = H.unit[static_cast<std::size_t>(p)] * H.unit[static_cast<std::size_t>(q)];
                if (!c.is_zero()) expected_unit.push_back({c, p, q});
            }
        auto terms_equal = [&](const CoproductTerms& a, const CoproductTerms& b) {
            std::map<std::pair<int, int>, CycNum> diff;
            for (const auto& t : a) {
                auto it = diff.find({t.left, t.right});
                if (it == diff.end()) diff.emplace(std::make_pair(t.left, t.right), t.coeff);
                else it->second += t.coeff;
            }
            for (const auto& t : b) {
                auto it = diff.find({t.left, t.right});
                if (it == diff.end()) diff.emplace(std::make_pair(t.left, t.right), -t.coeff);
                else it->second -= t.coeff;
            }
            for (auto& [k, c] : diff)
                if (!c.is_zero()) return false;
            return true;
        };
        if (!terms_equal(unit_cop, expected_unit)) {
            ok = false;
            w = "Delta(1) != 1 (x) 1";
        }
        if (ok && H.eps(H.unit) != CycNum::one(m)) {
            ok = false;
            w = "eps(1) != 1";
        }
        for (int i = 0; i < H.dim && ok; ++i)
            for (int j = 0; j < H.dim && ok; ++j) {
                CoproductTerms lhs = H.coproduct_of(H.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                CoproductTerms rhs = detail::tensor_mul(H, H.coproduct[static_cast<std::size_t>(i)],
                                                        H.coproduct[static_cast<std::size_t>(j)]);
                if (!terms_equal(lhs, rhs)) {
                    ok = false;
                    w = "Delta not multiplicative on (" + H.label(i) + ", " + H.label(j) + ")";
                    break;
                }
                CycNum el = H.eps(H.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                if (el != H.counit[static_cast<std::size_t>(i)] * H.counit[static_cast<std::size_t>(j)]) {
                    ok = false;
                    w = "eps not multiplicative on (" + H.label(i) + ", " + H.label(j) + ")";
                    break;
                }
            }
        rep.add("bialgebra_compatibility", ok ? CheckStatus::pass : CheckStatus::fail, w);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Iterated coproducts.

/// One summand of Delta^{(n-1)}(h): coeff * (h_{f_1} (x) ... (x) h_{f_n}).
struct IteratedTerm {
    CycNum coeff;
    std::vector<int> factors;
};

/// Full expansion of the (n-1)-fold coproduct of a general element.  By
/// coassociativity the result does not depend on which slot Delta expands;
/// `leftmost` selects the slot, which the tests exercise both ways.
inline std::vector<IteratedTerm> iterated_coproduct(const HopfAlgebraTable& H, const Vec& h,
                                                    int n, bool leftmost = true) {
    if (n < 1) throw Error("iterated_coproduct: n must be >= 1");
    std::map<std::vector<int>, CycNum> acc;
    for (int i = 0; i < H.dim; ++i)
        if (!h[static_cast<std::size_t>(i)].is_zero()) acc.emplace(std::vector<int>{i}, h[static_cast<std::size_t>(i)]);
    for (int step = 1; step < n; ++step) {
        std::map<std::vector<int>, CycNum> next;
        for (const auto& [tuple, coeff] : acc) {
            int slot = leftmost ? 0 : static_cast<int>(tuple.size()) - 1;
            for (const auto& t : H.coproduct[static_cast<std::size_t>(tuple[static_cast<std::size_t>(slot)])]) {
                std::vector<int> nt;
                nt.reserve(tuple.size() + 1);
                for (int p = 0; p < slot; ++p) nt.push_back(tuple[static_cast<std::size_t>(p)]);
                nt.push_back(t.left);
                nt.push_back(t.right);
                for (std::size_t p = static_cast<std::size_t>(slot) + 1; p < tuple.size(); ++p)
                    nt.push_back(tuple[p]);
                auto it = next.find(nt);
                if (it == next.end()) next.emplace(std::move(nt), coeff * t.coeff);
                else it->second.add_mul(coeff, t.coeff);
            }
        }
        acc = std::move(next);
    }
    std::vector<IteratedTerm> out;
    for (auto& [tuple, coeff] : acc)
        if (!coeff.is_zero()) out.push_back({coeff, tuple});
    return out;
}

}  // namespace taftlie
