#include "gkit/linalg.hpp"

#include <algorithm>
#include <utility>

#include "gkit/error.hpp"

namespace gkit {

ZMod::ZMod(int p, int m) : p_(p), m_(m) {
    require(p >= 2 && m >= 1, ErrorCode::InvalidArgument, "bad modulus");
    pow_.assign(1, 1);
    for (int k = 0; k < m; ++k) pow_.push_back(pow_.back() * p);
    n_ = pow_.back();
    require(n_ < (int64_t{1} << 30), ErrorCode::InvalidArgument, "modulus too large");
}

int ZMod::valuation(int64_t x) const {
    if (x == 0) return m_;
    int v = 0;
    while (x % p_ == 0) {
        x /= p_;
        ++v;
    }
    return v;
}

int64_t ZMod::unit_inverse(int64_t x) const {
    int64_t a = reduce(x), b = n_, s = 1, t = 0;
    while (b != 0) {
        int64_t q = a / b;
        std::swap(a, b);
        b -= q * a;
        std::swap(s, t);
        t -= q * s;
    }
    require(a == 1, ErrorCode::InvalidArgument, "not a unit");
    return reduce(s);
}

ZMatrix::ZMatrix(const ZMod& mod, size_t rows, size_t cols)
    : mod_(mod), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

ZMatrix::ZMatrix(const ZMod& mod, size_t rows, size_t cols, std::vector<int64_t> entries)
    : mod_(mod), rows_(rows), cols_(cols), a_(std::move(entries)) {
    require(a_.size() == rows * cols, ErrorCode::ShapeMismatch, "entry count does not match shape");
    for (auto& x : a_) x = mod_.reduce(x);
}

ZMatrix ZMatrix::identity(const ZMod& mod, size_t n) {
    ZMatrix r(mod, n, n);
    for (size_t i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
}

void ZMatrix::append_row(std::span<const int64_t> r) {
    require(r.size() == cols_, ErrorCode::ShapeMismatch, "row length");
    for (auto x : r) a_.push_back(mod_.reduce(x));
    ++rows_;
}

bool ZMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int64_t x) { return x == 0; });
}

ZMatrix ZMatrix::operator*(const ZMatrix& b) const {
    require(cols_ == b.rows_, ErrorCode::ShapeMismatch, "matrix product shape");
    ZMatrix r(mod_, rows_, b.cols_);
    const int64_t n = mod_.modulus();
    for (size_t i = 0; i < rows_; ++i) {
        int64_t* out = r.a_.data() + i * b.cols_;
        for (size_t k = 0; k < cols_; ++k) {
            int64_t x = a_[i * cols_ + k];
            if (x == 0) continue;
            const int64_t* br = b.a_.data() + k * b.cols_;
            for (size_t j = 0; j < b.cols_; ++j) out[j] = (out[j] + x * br[j]) % n;
        }
    }
    return r;
}

std::vector<int64_t> ZMatrix::left_multiply(std::span<const int64_t> x) const {
    require(x.size() == rows_, ErrorCode::ShapeMismatch, "vector length");
    std::vector<int64_t> out(cols_, 0);
    const int64_t n = mod_.modulus();
    for (size_t k = 0; k < rows_; ++k) {
        int64_t c = mod_.reduce(x[k]);
        if (c == 0) continue;
        const int64_t* br = a_.data() + k * cols_;
        for (size_t j = 0; j < cols_; ++j) out[j] = (out[j] + c * br[j]) % n;
    }
    return out;
}

ZMatrix ZMatrix::transpose() const {
    ZMatrix r(mod_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = (*this)(i, j);
    return r;
}

ZMatrix ZMatrix::hstack(const ZMatrix& b) const {
    require(rows_ == b.rows_, ErrorCode::ShapeMismatch, "hstack rows");
    ZMatrix r(mod_, rows_, cols_ + b.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        std::copy(row(i).begin(), row(i).end(), r.row_mut(i).begin());
        std::copy(b.row(i).begin(), b.row(i).end(), r.row_mut(i).begin() + static_cast<long>(cols_));
    }
    return r;
}

ZMatrix ZMatrix::vstack(const ZMatrix& b) const {
    if (rows_ == 0 && cols_ == 0) return b;
    require(cols_ == b.cols_, ErrorCode::ShapeMismatch, "vstack cols");
    ZMatrix r = *this;
    r.a_.insert(r.a_.end(), b.a_.begin(), b.a_.end());
    r.rows_ += b.rows_;
    return r;
}

namespace {

using Row = std::vector<int64_t>;

bool row_is_zero(const Row& r, size_t from) {
    for (size_t j = from; j < r.size(); ++j)
        if (r[j] != 0) return false;
    return true;
}

// r -= q * s over columns [from, n).
void row_axpy(Row& r, int64_t q, const Row& s, size_t from, int64_t n) {
    if (q == 0) return;
    const int64_t nq = (n - q % n) % n;
    for (size_t j = from; j < r.size(); ++j)
        if (s[j] != 0) r[j] = (r[j] + nq * s[j]) % n;
}

}  // namespace

HowellBasis::HowellBasis(const ZMatrix& a) {
    const ZMod& md = a.mod();
    const int64_t n = md.modulus();
    const size_t w = a.cols();
    std::vector<Row> pool;
    pool.reserve(a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
        auto r = a.row(i);
        if (std::any_of(r.begin(), r.end(), [](int64_t x) { return x != 0; })) pool.emplace_back(r.begin(), r.end());
    }
    std::vector<Row> out;
    for (size_t c = 0; c < w && !pool.empty(); ++c) {
        size_t best = pool.size();
        int bestv = md.m();
        for (size_t i = 0; i < pool.size(); ++i) {
            int64_t x = pool[i][c];
            if (x == 0) continue;
            int v = md.valuation(x);
            if (v < bestv) {
                bestv = v;
                best = i;
                if (v == 0) break;
            }
        }
        if (best == pool.size()) continue;
        Row r = std::move(pool[best]);
        pool[best] = std::move(pool.back());
        pool.pop_back();
        const int64_t pv = md.power(bestv);
        const int64_t inv = md.unit_inverse(r[c] / pv);
        if (inv != 1)
            for (size_t j = c; j < w; ++j) r[j] = (r[j] * inv) % n;
        std::vector<Row> next;
        next.reserve(pool.size() + 1);
        for (auto& s : pool) {
            if (s[c] != 0) {
                row_axpy(s, s[c] / pv, r, c, n);
                if (row_is_zero(s, c + 1)) continue;
            }
            next.push_back(std::move(s));
        }
        if (bestv > 0) {
            Row t(w, 0);
            const int64_t f = md.power(md.m() - bestv);
            for (size_t j = c + 1; j < w; ++j) t[j] = (r[j] * f) % n;
            if (!row_is_zero(t, c + 1)) next.push_back(std::move(t));
        }
        pool = std::move(next);
        piv_.push_back(c);
        val_.push_back(bestv);
        out.push_back(std::move(r));
    }
    for (size_t i = 0; i < out.size(); ++i) {
        const size_t c = piv_[i];
        const int64_t pv = md.power(val_[i]);
        for (size_t j = 0; j < i; ++j) {
            int64_t q = out[j][c] / pv;
            if (q != 0) row_axpy(out[j], q, out[i], c, n);
        }
    }
    std::vector<int64_t> flat;
    flat.reserve(out.size() * w);
    for (auto& r : out) flat.insert(flat.end(), r.begin(), r.end());
    h_ = ZMatrix(md, out.size(), w, std::move(flat));
}

std::vector<int64_t> HowellBasis::reduce(std::span<const int64_t> x) const {
    require(x.size() == h_.cols(), ErrorCode::ShapeMismatch, "vector length");
    const ZMod& md = h_.mod();
    const int64_t n = md.modulus();
    std::vector<int64_t> v(x.size());
    for (size_t j = 0; j < x.size(); ++j) v[j] = md.reduce(x[j]);
    for (size_t i = 0; i < h_.rows(); ++i) {
        const size_t c = piv_[i];
        int64_t q = v[c] / md.power(val_[i]);
        if (q == 0) continue;
        const int64_t nq = n - q;
        auto r = h_.row(i);
        for (size_t j = c; j < v.size(); ++j)
            if (r[j] != 0) v[j] = (v[j] + nq * r[j]) % n;
    }
    return v;
}

bool HowellBasis::contains(std::span<const int64_t> x) const {
    auto v = reduce(x);
    return std::all_of(v.begin(), v.end(), [](int64_t y) { return y == 0; });
}

bool HowellBasis::contains(const HowellBasis& other) const {
    for (size_t i = 0; i < other.size(); ++i)
        if (!contains(other.matrix().row(i))) return false;
    return true;
}

int64_t HowellBasis::log_size() const {
    int64_t s = 0;
    for (int v : val_) s += h_.mod().m() - v;
    return s;
}

ZMatrix howell_form(const ZMatrix& a) { return HowellBasis(a).matrix(); }

ZMatrix kernel(const ZMatrix& a) {
    const size_t c = a.cols();
    HowellBasis h(a.hstack(ZMatrix::identity(a.mod(), a.rows())));
    ZMatrix k(a.mod(), 0, a.rows());
    for (size_t i = 0; i < h.size(); ++i) {
        if (h.pivot_columns()[i] < c) continue;
        auto r = h.matrix().row(i);
        k.append_row(r.subspan(c));
    }
    return k;
}

std::optional<std::vector<int64_t>> try_solve(const ZMatrix& a, std::span<const int64_t> b) {
    require(b.size() == a.cols(), ErrorCode::ShapeMismatch, "right-hand side length");
    const ZMod& md = a.mod();
    const int64_t n = md.modulus();
    const size_t c = a.cols();
    HowellBasis h(a.hstack(ZMatrix::identity(md, a.rows())));
    std::vector<int64_t> w(c + a.rows(), 0);
    for (size_t j = 0; j < c; ++j) w[j] = md.reduce(b[j]);
    size_t i = 0;
    for (size_t j = 0; j < c; ++j) {
        if (i < h.size() && h.pivot_columns()[i] == j) {
            const int64_t pv = md.power(h.pivot_valuations()[i]);
            if (w[j] % pv != 0) return std::nullopt;
            int64_t q = w[j] / pv;
            if (q != 0) {
                auto r = h.matrix().row(i);
                for (size_t t = j; t < w.size(); ++t) w[t] = (w[t] + (n - q) * r[t]) % n;
            }
            ++i;
        } else if (w[j] != 0) {
            return std::nullopt;
        }
    }
    std::vector<int64_t> x(a.rows());
    for (size_t k = 0; k < a.rows(); ++k) x[k] = md.neg(w[c + k]);
    return x;
}

std::vector<int64_t> solve(const ZMatrix& a, std::span<const int64_t> b) {
    auto x = try_solve(a, b);
    if (!x) fail(ErrorCode::NoSolution, "right-hand side is outside the row span");
    return *x;
}

}  // namespace gkit
