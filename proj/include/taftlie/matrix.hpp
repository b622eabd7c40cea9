#pragma once

// Exact dense linear algebra over Q(zeta_m): rank, kernel, eigenspaces,
// canonical subspace bases, operator closures and the generated-matrix-
// algebra dimension.  Everything is plain Gaussian elimination over the
// field; entries are exact, so a zero pivot is a real zero.

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "taftlie/cyclotomic.hpp"

namespace taftlie {

using Vec = std::vector<CycNum>;

inline Vec zero_vec(long m, int n) { return Vec(static_cast<std::size_t>(n), CycNum::zero(m)); }

inline Vec unit_vec(long m, int n, int i) {
    Vec v = zero_vec(m, n);
    v[static_cast<std::size_t>(i)] = CycNum::one(m);
    return v;
}

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec vec_scale(const CycNum& s, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= s;
    return r;
}

/// r += s * a
inline void vec_axpy(Vec& r, const CycNum& s, const Vec& a) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!a[i].is_zero()) r[i].add_mul(s, a[i]);
}

class Mat {
  public:
    Mat() : m_(0), rows_(0), cols_(0) {}
    Mat(long m, int rows, int cols)
        : m_(m), rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * cols, CycNum::zero(m)) {}

    static Mat identity(long m, int n) {
        Mat a(m, n, n);
        for (int i = 0; i < n; ++i) a.at(i, i) = CycNum::one(m);
        return a;
    }

    static Mat from_columns(long m, const std::vector<Vec>& cols) {
        int n = cols.empty() ? 0 : static_cast<int>(cols[0].size());
        Mat a(m, n, static_cast<int>(cols.size()));
        for (int j = 0; j < a.cols_; ++j)
            for (int i = 0; i < n; ++i) a.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        return a;
    }

    long conductor() const { return m_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CycNum& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const CycNum& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec row(int r) const {
        Vec v;
        v.reserve(static_cast<std::size_t>(cols_));
        for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
        return v;
    }
    Vec column(int c) const {
        Vec v;
        v.reserve(static_cast<std::size_t>(rows_));
        for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
        return v;
    }

    bool is_zero() const { return vec_is_zero(e_); }
    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.m_ == b.m_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat r(a.m_, a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const CycNum& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (!b.at(k, j).is_zero()) r.at(i, j).add_mul(aik, b.at(k, j));
            }
        return r;
    }
    friend Mat operator*(const CycNum& s, const Mat& a) {
        Mat r = a;
        for (auto& x : r.e_) x *= s;
        return r;
    }

    Vec apply(const Vec& v) const {
        Vec r = zero_vec(m_, rows_);
        for (int j = 0; j < cols_; ++j) {
            if (v[static_cast<std::size_t>(j)].is_zero()) continue;
            for (int i = 0; i < rows_; ++i)
                if (!at(i, j).is_zero()) r[static_cast<std::size_t>(i)].add_mul(v[static_cast<std::size_t>(j)], at(i, j));
        }
        return r;
    }

    Mat pow(unsigned long e) const {
        Mat acc = identity(m_, rows_);
        Mat base = *this;
        while (e) {
            if (e & 1UL) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Mat transpose() const {
        Mat r(m_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    CycNum trace() const {
        CycNum t = CycNum::zero(m_);
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    /// Flatten row-major into one long vector.
    Vec flatten() const { return e_; }

    static Mat unflatten(long m, int rows, int cols, const Vec& v) {
        Mat a(m, rows, cols);
        a.e_ = v;
        return a;
    }

  private:
    long m_;
    int rows_, cols_;
    Vec e_;
};

// ---------------------------------------------------------------------------
// Reduced echelon machinery.

/// Incremental reduced-row-echelon basis.  Rows keep unit pivots with zeros
/// above and below, and pivot columns increase, so a subspace has exactly one
/// representation and subspace equality is row-list equality.
class RrefBuilder {
  public:
    RrefBuilder(long m, int width) : m_(m), width_(width) {}

    long conductor() const { return m_; }
    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Reduce v against the basis in place; afterwards v is the canonical
    /// residual (zero iff v was already in the span).
    void reduce(Vec& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const CycNum& c = v[static_cast<std::size_t>(pivots_[r])];
            if (c.is_zero()) continue;
            CycNum s = c;  // copy: v is mutated below
            const Vec& row = rows_[r];
            for (std::size_t i = static_cast<std::size_t>(pivots_[r]); i < v.size(); ++i)
                if (!row[i].is_zero()) v[i].sub_mul(s, row[i]);
        }
    }

    /// Insert v's residual if independent.  Returns the stored normalized row
    /// (for closure worklists), or nullopt if v was dependent.
    std::optional<Vec> add(Vec v) {
        reduce(v);
        int lead = -1;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) { lead = static_cast<int>(i); break; }
        if (lead < 0) return std::nullopt;
        CycNum inv = v[static_cast<std::size_t>(lead)].inverse();
        for (std::size_t i = static_cast<std::size_t>(lead); i < v.size(); ++i)
            if (!v[i].is_zero()) v[i] *= inv;
        // Eliminate the new pivot column from the existing rows.
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            CycNum c = rows_[r][static_cast<std::size_t>(lead)];
            if (c.is_zero()) continue;
            for (std::size_t i = static_cast<std::size_t>(lead); i < v.size(); ++i)
                if (!v[i].is_zero()) rows_[r][i].sub_mul(c, v[i]);
        }
        // Keep pivot columns sorted.
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), v);
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        return rows_[pos];
    }

    bool contains(Vec v) const {
        reduce(v);
        return vec_is_zero(v);
    }

  private:
    long m_;
    int width_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

/// Canonical (reduced-echelon) basis of a subspace of Q(zeta_m)^ambient.
struct SubspaceBasis {
    long m = 0;
    int ambient = 0;
    std::vector<Vec> rows;  // RREF rows, pivot columns increasing

    int dim() const { return static_cast<int>(rows.size()); }
    bool is_zero() const { return rows.empty(); }
    bool is_full() const { return dim() == ambient; }

    static SubspaceBasis zero(long m, int ambient) { return {m, ambient, {}}; }

    static SubspaceBasis full(long m, int ambient) {
        SubspaceBasis b{m, ambient, {}};
        for (int i = 0; i < ambient; ++i) b.rows.push_back(unit_vec(m, ambient, i));
        return b;
    }

    static SubspaceBasis span(long m, int ambient, const std::vector<Vec>& gens) {
        RrefBuilder rb(m, ambient);
        for (const auto& g : gens) rb.add(g);
        return from_builder(rb);
    }

    static SubspaceBasis from_builder(const RrefBuilder& rb) {
        return {rb.conductor(), rb.width(), rb.rows()};
    }

    RrefBuilder to_builder() const {
        RrefBuilder rb(m, ambient);
        for (const auto& r : rows) rb.add(r);
        return rb;
    }

    bool contains(const Vec& v) const { return to_builder().contains(v); }

    bool contains_subspace(const SubspaceBasis& other) const {
        RrefBuilder rb = to_builder();
        for (const auto& r : other.rows)
            if (!rb.contains(r)) return false;
        return true;
    }

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.m == b.m && a.ambient == b.ambient && a.rows == b.rows;
    }
};

// ---------------------------------------------------------------------------
// Rank / kernel / eigenspace / solving.

inline int rank(const Mat& a) {
    RrefBuilder rb(a.conductor(), a.cols());
    for (int i = 0; i < a.rows(); ++i) rb.add(a.row(i));
    return rb.dim();
}

/// Basis of the right null space; dim kernel + rank = cols.
inline SubspaceBasis kernel(const Mat& a) {
    RrefBuilder rb(a.conductor(), a.cols());
    for (int i = 0; i < a.rows(); ++i) rb.add(a.row(i));
    const auto& pivots = rb.pivots();
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    RrefBuilder out(a.conductor(), a.cols());
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v = zero_vec(a.conductor(), a.cols());
        v[static_cast<std::size_t>(f)] = CycNum::one(a.conductor());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -rb.rows()[r][static_cast<std::size_t>(f)];
        out.add(std::move(v));
    }
    return SubspaceBasis::from_builder(out);
}

/// Kernel of (a - lambda I).
inline SubspaceBasis eigenspace(const Mat& a, const CycNum& lambda) {
    if (!a.is_square()) throw Error("eigenspace: matrix must be square");
    Mat shifted = a;
    for (int i = 0; i < a.rows(); ++i) shifted.at(i, i) -= lambda;
    return kernel(shifted);
}

/// Inverse by Gauss-Jordan; throws on a singular matrix.
inline Mat inverse(const Mat& a) {
    if (!a.is_square()) throw Error("inverse: matrix must be square");
    const int n = a.rows();
    const long m = a.conductor();
    // Augmented rows [a | I], fully reduced.
    std::vector<Vec> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)] = a.row(i);
        Vec id = unit_vec(m, n, i);
        rows[static_cast<std::size_t>(i)].insert(rows[static_cast<std::size_t>(i)].end(), id.begin(), id.end());
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) { piv = r; break; }
        if (piv < 0) throw Error("inverse: singular matrix");
        std::swap(rows[static_cast<std::size_t>(col)], rows[static_cast<std::size_t>(piv)]);
        CycNum inv = rows[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)].inverse();
        for (auto& x : rows[static_cast<std::size_t>(col)]) if (!x.is_zero()) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            CycNum c = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (c.is_zero()) continue;
            for (int j = col; j < 2 * n; ++j)
                if (!rows[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)].is_zero())
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)].sub_mul(c, rows[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]);
        }
    }
    Mat out(m, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    return out;
}

inline bool is_invertible(const Mat& a) { return a.is_square() && rank(a) == a.rows(); }

// ---------------------------------------------------------------------------
// Operator closures.

/// Smallest subspace containing `seed` and invariant under every operator in
/// `ops`.  Breadth-first over (inserted basis row, op) pairs in a fixed order,
/// so the resulting canonical basis is reproducible.
inline SubspaceBasis closure(const SubspaceBasis& seed, const std::vector<Mat>& ops) {
    RrefBuilder rb(seed.m, seed.ambient);
    std::deque<Vec> work;
    for (const auto& r : seed.rows)
        if (auto ins = rb.add(r)) work.push_back(*ins);
    while (!work.empty()) {
        Vec w = std::move(work.front());
        work.pop_front();
        for (const auto& op : ops)
            if (auto ins = rb.add(op.apply(w))) work.push_back(*ins);
    }
    return SubspaceBasis::from_builder(rb);
}

/// Dimension over Q(zeta_m) of the unital associative matrix algebra
/// generated by `gens` inside End(F^n).  Closure of {I} under left
/// multiplication by the generators, run in the flattened n^2 space.
inline int operator_algebra_dim(const std::vector<Mat>& gens, long m, int n) {
    RrefBuilder rb(m, n * n);
    std::deque<Mat> work;
    Mat id = Mat::identity(m, n);
    if (auto ins = rb.add(id.flatten())) work.push_back(Mat::unflatten(m, n, n, *ins));
    while (!work.empty()) {
        Mat w = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            Mat prod = g * w;
            if (auto ins = rb.add(prod.flatten())) work.push_back(Mat::unflatten(m, n, n, *ins));
        }
    }
    return rb.dim();
}

}  // namespace taftlie
