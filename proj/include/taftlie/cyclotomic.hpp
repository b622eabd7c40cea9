#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m) and the quantum
// integer / factorial / binomial combinatorics built on a primitive m-th
// root of unity.
//
// An element is stored in the power basis 1, zeta, ..., zeta^{phi(m)-1}
// modulo the m-th cyclotomic polynomial, so equality is coefficient
// equality and the zero test is exact.  Coefficients are GMP rationals;
// no floating point appears anywhere.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "taftlie/util.hpp"

namespace taftlie {

using Rat = mpq_class;

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("cannot parse rational '" + s + "'");
    r.canonicalize();
    return r;
}

namespace detail {

using Poly = std::vector<Rat>;  // dense, lowest power first

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    poly_trim(c);
    return c;
}

// Exact quotient/remainder in Q[x].
inline void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw Error("polynomial division by zero");
    poly_trim(a);
    if (a.size() < b.size()) {
        q = {};
        r = std::move(a);
        return;
    }
    q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat coef = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
        a.pop_back();  // leading term cancelled exactly
        poly_trim(a);
    }
    poly_trim(q);
    r = std::move(a);
}

// m-th cyclotomic polynomial, integer coefficients, memoized.
inline const Poly& cyclotomic_poly(long m) {
    static std::map<long, Poly> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::function<Poly(long)> build = [&](long n) -> Poly {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        Poly f(n + 1, Rat(0));  // x^n - 1
        f[0] = -1;
        f[n] = 1;
        for (long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            Poly q, r;
            poly_divmod(f, build(d), q, r);
            if (!r.empty()) throw Error("cyclotomic polynomial division not exact");
            f = std::move(q);
        }
        cache[n] = f;
        return f;
    };
    build(m);
    return cache.at(m);
}

}  // namespace detail

class CycNum;

/// Per-conductor data: the modulus, power-basis reduction rows for
/// x^{phi}..x^{2phi-2}, and the m distinct powers of zeta.
class CycContext {
  public:
    long m;
    long phi;                                // = deg Phi_m
    detail::Poly modulus;                    // Phi_m, monic
    std::vector<std::vector<Rat>> xpow_red;  // x^{phi+k} mod Phi_m, k = 0..phi-2
    std::vector<std::vector<Rat>> zeta_pow;  // coefficients of zeta^0..zeta^{m-1}

    explicit CycContext(long conductor);

    CycContext(const CycContext&) = delete;
    CycContext& operator=(const CycContext&) = delete;
};

/// Registry of immutable contexts; pointers remain valid for the process
/// lifetime, so CycNum can hold a raw pointer.
inline const CycContext& cyc_context(long m) {
    if (m < 1) throw Error("conductor must be >= 1");
    static std::map<long, std::unique_ptr<CycContext>> registry;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = registry.find(m);
    if (it == registry.end())
        it = registry.emplace(m, std::make_unique<CycContext>(m)).first;
    return *it->second;
}

/// Exact element of Q(zeta_m).  Immutable in spirit: all operations return
/// fresh values; compound assignments replace the whole value.
class CycNum {
  public:
    CycNum() : ctx_(nullptr) {}  // invalid placeholder; any arithmetic throws

    static CycNum zero(long m) { return CycNum(&cyc_context(m)); }

    static CycNum one(long m) { return from_rat(m, Rat(1)); }

    static CycNum from_rat(long m, const Rat& r) {
        CycNum x(&cyc_context(m));
        x.c_[0] = r;
        x.c_[0].canonicalize();  // mpq_class(p, q) does not reduce by itself
        return x;
    }

    static CycNum from_int(long m, long v) { return from_rat(m, Rat(v)); }

    /// The canonical primitive m-th root (the class of x mod Phi_m).
    static CycNum zeta(long m) { return zeta_power(m, 1); }

    /// zeta^k with k taken mod m (negative k allowed).
    static CycNum zeta_power(long m, long k) {
        const CycContext& ctx = cyc_context(m);
        long r = ((k % m) + m) % m;
        CycNum x(&ctx);
        x.c_ = ctx.zeta_pow[static_cast<std::size_t>(r)];
        return x;
    }

    static CycNum from_coeffs(long m, std::vector<Rat> coeffs) {
        const CycContext& ctx = cyc_context(m);
        if (static_cast<long>(coeffs.size()) != ctx.phi)
            throw Error("coefficient vector length must be phi(m)");
        CycNum x(&ctx);
        x.c_ = std::move(coeffs);
        for (Rat& r : x.c_) r.canonicalize();
        return x;
    }

    long conductor() const { return require()->m; }
    long degree() const { return require()->phi; }
    const std::vector<Rat>& coeffs() const { require(); return c_; }
    bool valid() const { return ctx_ != nullptr; }

    bool is_zero() const {
        require();
        for (const Rat& r : c_)
            if (r != 0) return false;
        return true;
    }

    /// True when the element lies in Q (all higher coefficients vanish).
    bool is_rational() const {
        require();
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rat rational_part() const { require(); return c_[0]; }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        a.require(); b.require();
        if (a.ctx_ != b.ctx_) return false;
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        const CycContext* ctx = same_ctx(a, b);
        CycNum r(ctx);
        for (long i = 0; i < ctx->phi; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend CycNum operator-(const CycNum& a, const CycNum& b) {
        const CycContext* ctx = same_ctx(a, b);
        CycNum r(ctx);
        for (long i = 0; i < ctx->phi; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    CycNum operator-() const {
        require();
        CycNum r(ctx_);
        for (long i = 0; i < ctx_->phi; ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        const CycContext* ctx = same_ctx(a, b);
        CycNum r(ctx);
        mul_into(r.c_, a.c_, b.c_, *ctx);
        return r;
    }
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    CycNum& operator+=(const CycNum& b) {
        const CycContext* ctx = same_ctx(*this, b);
        for (long i = 0; i < ctx->phi; ++i) c_[i] += b.c_[i];
        return *this;
    }
    CycNum& operator-=(const CycNum& b) {
        const CycContext* ctx = same_ctx(*this, b);
        for (long i = 0; i < ctx->phi; ++i) c_[i] -= b.c_[i];
        return *this;
    }
    CycNum& operator*=(const CycNum& b) { *this = *this * b; return *this; }
    CycNum& operator/=(const CycNum& b) { *this = *this / b; return *this; }

    /// this += s * x, the hot path of every elimination loop.
    void add_mul(const CycNum& s, const CycNum& x) {
        const CycContext* ctx = same_ctx(*this, s);
        same_ctx(*this, x);
        std::vector<Rat> prod(static_cast<std::size_t>(ctx->phi), Rat(0));
        mul_into(prod, s.c_, x.c_, *ctx);
        for (long i = 0; i < ctx->phi; ++i) c_[i] += prod[i];
    }
    void sub_mul(const CycNum& s, const CycNum& x) {
        const CycContext* ctx = same_ctx(*this, s);
        same_ctx(*this, x);
        std::vector<Rat> prod(static_cast<std::size_t>(ctx->phi), Rat(0));
        mul_into(prod, s.c_, x.c_, *ctx);
        for (long i = 0; i < ctx->phi; ++i) c_[i] -= prod[i];
    }

    CycNum inverse() const {
        require();
        if (is_zero()) throw Error("division by zero in Q(zeta_" + std::to_string(ctx_->m) + ")");
        if (is_rational()) {
            CycNum r(ctx_);
            r.c_[0] = Rat(1) / c_[0];
            return r;
        }
        // Extended Euclid against the (irreducible) modulus.
        detail::Poly a = ctx_->modulus;
        detail::Poly b(c_.begin(), c_.end());
        detail::poly_trim(b);
        detail::Poly s0 = {}, s1 = {Rat(1)};  // coefficients of b in the Bezout identity
        while (true) {
            detail::Poly q, r;
            detail::poly_divmod(a, b, q, r);
            if (r.empty()) break;  // b is the gcd (a nonzero constant times a unit)
            detail::Poly qs = detail::poly_mul(q, s1);
            detail::Poly s2 = s0;
            if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
            for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            detail::poly_trim(s2);
            a = std::move(b);
            b = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (b.size() != 1) throw Error("modulus not irreducible?");  // cannot happen for Phi_m
        CycNum out(ctx_);
        for (std::size_t i = 0; i < s1.size() && i < out.c_.size(); ++i)
            out.c_[i] = s1[i] / b[0];
        return out;
    }

    CycNum pow(long e) const {
        require();
        if (e < 0) return inverse().pow(-e);
        CycNum acc = one(ctx_->m);
        CycNum base = *this;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k) {
            if (k & 1ULL) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /// Power-basis coefficients as canonical strings, lowest power first.
    std::vector<std::string> to_strings() const {
        require();
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const Rat& r : c_) out.push_back(rat_to_string(r));
        return out;
    }

    static CycNum from_strings(long m, const std::vector<std::string>& ss) {
        std::vector<Rat> cs;
        cs.reserve(ss.size());
        for (const auto& s : ss) cs.push_back(rat_from_string(s));
        return from_coeffs(m, std::move(cs));
    }

    /// Human-readable form, e.g. "1 - 2*z + z^2" (z = zeta_m).
    std::string to_display() const {
        require();
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rat r = c_[i];
            if (first) {
                if (r < 0) { os << "-"; r = -r; }
            } else {
                os << (r < 0 ? " - " : " + ");
                if (r < 0) r = -r;
            }
            first = false;
            if (i == 0) os << rat_to_string(r);
            else {
                if (r != 1) os << rat_to_string(r) << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    }

  private:
    explicit CycNum(const CycContext* ctx)
        : ctx_(ctx), c_(static_cast<std::size_t>(ctx->phi), Rat(0)) {}

    const CycContext* require() const {
        if (!ctx_) throw Error("use of default-constructed CycNum");
        return ctx_;
    }

    static const CycContext* same_ctx(const CycNum& a, const CycNum& b) {
        a.require(); b.require();
        if (a.ctx_ != b.ctx_)
            throw Error("conductor mismatch: m=" + std::to_string(a.ctx_->m) +
                        " vs m=" + std::to_string(b.ctx_->m));
        return a.ctx_;
    }

    // out = a * b reduced mod Phi_m.  out must be distinct storage.
    static void mul_into(std::vector<Rat>& out, const std::vector<Rat>& a,
                         const std::vector<Rat>& b, const CycContext& ctx) {
        const long phi = ctx.phi;
        std::vector<Rat> full(static_cast<std::size_t>(2 * phi - 1), Rat(0));
        for (long i = 0; i < phi; ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; j < phi; ++j) {
                if (b[j] == 0) continue;
                full[i + j] += a[i] * b[j];
            }
        }
        for (long i = 0; i < phi; ++i) out[i] = full[i];
        for (long k = 0; k <= 2 * phi - 2 - phi; ++k) {
            const Rat& hi = full[phi + k];
            if (hi == 0) continue;
            const auto& row = ctx.xpow_red[static_cast<std::size_t>(k)];
            for (long i = 0; i < phi; ++i)
                if (row[i] != 0) out[i] += hi * row[i];
        }
    }

    const CycContext* ctx_;
    std::vector<Rat> c_;
};

inline CycContext::CycContext(long conductor) : m(conductor) {
    modulus = detail::cyclotomic_poly(m);
    phi = static_cast<long>(modulus.size()) - 1;

    // x^{phi+k} mod Phi_m by repeated shift-and-reduce.
    std::vector<Rat> cur(static_cast<std::size_t>(phi), Rat(0));
    for (long i = 0; i < phi; ++i) cur[i] = -modulus[i];  // x^phi = -(lower part), monic
    if (phi >= 1) {
        xpow_red.push_back(cur);
        for (long k = 1; k <= phi - 2; ++k) {
            std::vector<Rat> nxt(static_cast<std::size_t>(phi), Rat(0));
            for (long i = 0; i + 1 < phi; ++i) nxt[i + 1] = cur[i];
            if (cur[phi - 1] != 0)
                for (long i = 0; i < phi; ++i) nxt[i] += cur[phi - 1] * xpow_red[0][i];
            xpow_red.push_back(nxt);
            cur = std::move(nxt);
        }
    }

    // zeta^0..zeta^{m-1}: shift-and-reduce starting from 1.
    std::vector<Rat> z(static_cast<std::size_t>(phi), Rat(0));
    z[0] = 1;
    zeta_pow.push_back(z);
    for (long k = 1; k < m; ++k) {
        std::vector<Rat> nxt(static_cast<std::size_t>(phi), Rat(0));
        for (long i = 0; i + 1 < phi; ++i) nxt[i + 1] = z[i];
        if (z[static_cast<std::size_t>(phi - 1)] != 0)
            for (long i = 0; i < phi; ++i)
                nxt[i] += z[static_cast<std::size_t>(phi - 1)] * xpow_red[0][i];
        zeta_pow.push_back(nxt);
        z = std::move(nxt);
    }
}

// ---------------------------------------------------------------------------
// Quantum integers, factorials, binomials.

/// n_q = 1 + q + ... + q^{n-1} for an arbitrary base; empty sum for n = 0.
inline CycNum q_int_base(const CycNum& q, long n) {
    CycNum acc = CycNum::zero(q.conductor());
    CycNum p = CycNum::one(q.conductor());
    for (long j = 0; j < n; ++j) {
        acc += p;
        p *= q;
    }
    return acc;
}

/// n_zeta at the canonical primitive m-th root.
inline CycNum q_int(long m, long n) {
    CycNum acc = CycNum::zero(m);
    for (long j = 0; j < n; ++j) acc += CycNum::zeta_power(m, j);
    return acc;
}

inline CycNum q_factorial_base(const CycNum& q, long n) {
    CycNum acc = CycNum::one(q.conductor());
    for (long j = 1; j <= n; ++j) acc *= q_int_base(q, j);
    return acc;
}

/// n!_zeta, with 0!_zeta = 1 (empty product).
inline CycNum q_factorial(long m, long n) {
    CycNum acc = CycNum::one(m);
    for (long j = 1; j <= n; ++j) acc *= q_int(m, j);
    return acc;
}

/// Binomial at an arbitrary base; the caller guarantees nonvanishing
/// denominators.  Throws on a vanishing one.
inline CycNum q_binom_base(const CycNum& q, long n, long k) {
    if (k < 0 || k > n) throw Error("q_binom: need 0 <= k <= n");
    CycNum den = q_factorial_base(q, n - k) * q_factorial_base(q, k);
    if (den.is_zero()) throw Error("q_binom: vanishing denominator");
    return q_factorial_base(q, n) / den;
}

/// Quantum binomial at the canonical root.  Requires n <= m-1 so the
/// denominator factors j_zeta, 1 <= j < m, are all nonzero.
inline CycNum q_binom(long m, long n, long k) {
    if (k < 0 || k > n) throw Error("q_binom: need 0 <= k <= n");
    if (n >= m)
        throw std::out_of_range("q_binom: n = " + std::to_string(n) +
                                " >= m = " + std::to_string(m));
    return q_factorial(m, n) / (q_factorial(m, n - k) * q_factorial(m, k));
}

/// Quantum integer with its defining data kept together.
struct QInt {
    long n;
    CycNum value;
    QInt(long m, long n_) : n(n_), value(q_int(m, n_)) {}
};

}  // namespace taftlie
