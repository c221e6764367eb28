#include "gkit/rmatrix.hpp"

#include <algorithm>

#include "gkit/error.hpp"
#include "gkit/exterior.hpp"

namespace gkit {

RVec::RVec(Ring ring, size_t n) : ring_(std::move(ring)), n_(n), a_(n * ring_.group_order(), 0) {}

RVec::RVec(Ring ring, size_t n, std::vector<int64_t> flat) : ring_(std::move(ring)), n_(n), a_(std::move(flat)) {
    require(a_.size() == n_ * ring_.group_order(), ErrorCode::ShapeMismatch, "flat vector length");
    for (auto& x : a_) x = ring_.zmod().reduce(x);
}

RVec RVec::from_elements(const Ring& ring, const std::vector<RingElement>& xs) {
    RVec v(ring, xs.size());
    for (size_t i = 0; i < xs.size(); ++i) v.set(i, xs[i]);
    return v;
}

RVec RVec::unit(const Ring& ring, size_t n, size_t i) {
    RVec v(ring, n);
    v.ptr_mut(i)[0] = 1;
    return v;
}

RingElement RVec::at(size_t i) const {
    const size_t g = ring_.group_order();
    return RingElement(ring_, std::vector<int64_t>(a_.begin() + static_cast<long>(i * g),
                                                   a_.begin() + static_cast<long>((i + 1) * g)));
}

void RVec::set(size_t i, const RingElement& x) {
    check_same_ring(ring_, x.ring());
    std::copy(x.coeffs().begin(), x.coeffs().end(), ptr_mut(i));
}

std::vector<RingElement> RVec::elements() const {
    std::vector<RingElement> out;
    for (size_t i = 0; i < n_; ++i) out.push_back(at(i));
    return out;
}

bool RVec::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int64_t x) { return x == 0; });
}

RVec& RVec::operator+=(const RVec& o) {
    check_same_ring(ring_, o.ring_);
    require(n_ == o.n_, ErrorCode::ShapeMismatch, "vector lengths differ");
    const int64_t n = ring_.modulus();
    for (size_t i = 0; i < a_.size(); ++i) a_[i] = (a_[i] + o.a_[i]) % n;
    return *this;
}

RVec RVec::operator+(const RVec& o) const {
    RVec r = *this;
    r += o;
    return r;
}

RVec RVec::operator-() const {
    RVec r = *this;
    for (auto& x : r.a_) x = ring_.zmod().neg(x);
    return r;
}

RVec RVec::operator-(const RVec& o) const { return *this + (-o); }

RVec RVec::scaled(const RingElement& r) const {
    check_same_ring(ring_, r.ring());
    RVec out(ring_, n_);
    for (size_t i = 0; i < n_; ++i) ring_mul_acc(ring_, r.coeffs().data(), ptr(i), out.ptr_mut(i));
    return out;
}

RVec RVec::select(const std::vector<size_t>& idx) const {
    RVec out(ring_, idx.size());
    const size_t g = ring_.group_order();
    for (size_t k = 0; k < idx.size(); ++k) std::copy(ptr(idx[k]), ptr(idx[k]) + g, out.ptr_mut(k));
    return out;
}

RVec RVec::concat(const RVec& o) const {
    check_same_ring(ring_, o.ring_);
    std::vector<int64_t> f = a_;
    f.insert(f.end(), o.a_.begin(), o.a_.end());
    return RVec(ring_, n_ + o.n_, std::move(f));
}

RMatrix::RMatrix(Ring ring, size_t rows, size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols * ring_.group_order(), 0) {}

RMatrix RMatrix::identity(const Ring& ring, size_t n) {
    RMatrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.ptr_mut(i, i)[0] = 1;
    return m;
}

RMatrix RMatrix::from_rows(const Ring& ring, size_t cols, const std::vector<RVec>& rows) {
    RMatrix m(ring, rows.size(), cols);
    const size_t g = ring.group_order();
    for (size_t i = 0; i < rows.size(); ++i) {
        check_same_ring(ring, rows[i].ring());
        require(rows[i].size() == cols, ErrorCode::ShapeMismatch, "row length");
        std::copy(rows[i].flat().begin(), rows[i].flat().end(), m.a_.begin() + static_cast<long>(i * cols * g));
    }
    return m;
}

RMatrix RMatrix::from_elements(const Ring& ring, size_t rows, size_t cols, const std::vector<RingElement>& xs) {
    require(xs.size() == rows * cols, ErrorCode::ShapeMismatch, "element count");
    RMatrix m(ring, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set(i, j, xs[i * cols + j]);
    return m;
}

RingElement RMatrix::at(size_t i, size_t j) const {
    const size_t g = ring_.group_order();
    const int64_t* p = ptr(i, j);
    return RingElement(ring_, std::vector<int64_t>(p, p + g));
}

void RMatrix::set(size_t i, size_t j, const RingElement& x) {
    check_same_ring(ring_, x.ring());
    std::copy(x.coeffs().begin(), x.coeffs().end(), ptr_mut(i, j));
}

RVec RMatrix::row(size_t i) const {
    const size_t g = ring_.group_order();
    auto b = a_.begin() + static_cast<long>(i * cols_ * g);
    return RVec(ring_, cols_, std::vector<int64_t>(b, b + static_cast<long>(cols_ * g)));
}

RVec RMatrix::col(size_t j) const {
    RVec v(ring_, rows_);
    const size_t g = ring_.group_order();
    for (size_t i = 0; i < rows_; ++i) std::copy(ptr(i, j), ptr(i, j) + g, v.ptr_mut(i));
    return v;
}

std::vector<RVec> RMatrix::row_list() const {
    std::vector<RVec> out;
    for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

RMatrix RMatrix::operator*(const RMatrix& b) const {
    check_same_ring(ring_, b.ring_);
    require(cols_ == b.rows_, ErrorCode::ShapeMismatch, "matrix product shape");
    RMatrix out(ring_, rows_, b.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const int64_t* x = ptr(i, k);
            bool zero = std::all_of(x, x + ring_.group_order(), [](int64_t v) { return v == 0; });
            if (zero) continue;
            for (size_t j = 0; j < b.cols_; ++j) ring_mul_acc(ring_, x, b.ptr(k, j), out.ptr_mut(i, j));
        }
    return out;
}

RMatrix RMatrix::operator+(const RMatrix& b) const {
    check_same_ring(ring_, b.ring_);
    require(rows_ == b.rows_ && cols_ == b.cols_, ErrorCode::ShapeMismatch, "matrix sum shape");
    RMatrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + b.a_[i]) % ring_.modulus();
    return out;
}

RMatrix RMatrix::operator-(const RMatrix& b) const { return *this + b.scaled(-ring_.one()); }

RMatrix RMatrix::scaled(const RingElement& r) const {
    RMatrix out(ring_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) ring_mul_acc(ring_, r.coeffs().data(), ptr(i, j), out.ptr_mut(i, j));
    return out;
}

RMatrix RMatrix::transpose() const {
    RMatrix out(ring_, cols_, rows_);
    const size_t g = ring_.group_order();
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) std::copy(ptr(i, j), ptr(i, j) + g, out.ptr_mut(j, i));
    return out;
}

RMatrix RMatrix::hstack(const RMatrix& b) const {
    check_same_ring(ring_, b.ring_);
    require(rows_ == b.rows_, ErrorCode::ShapeMismatch, "hstack rows");
    RMatrix out(ring_, rows_, cols_ + b.cols_);
    const size_t g = ring_.group_order();
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) std::copy(ptr(i, j), ptr(i, j) + g, out.ptr_mut(i, j));
        for (size_t j = 0; j < b.cols_; ++j) std::copy(b.ptr(i, j), b.ptr(i, j) + g, out.ptr_mut(i, cols_ + j));
    }
    return out;
}

RMatrix RMatrix::vstack(const RMatrix& b) const {
    check_same_ring(ring_, b.ring_);
    require(cols_ == b.cols_, ErrorCode::ShapeMismatch, "vstack cols");
    RMatrix out = *this;
    out.a_.insert(out.a_.end(), b.a_.begin(), b.a_.end());
    out.rows_ += b.rows_;
    return out;
}

RMatrix RMatrix::submatrix(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
    RMatrix out(ring_, rs.size(), cs.size());
    const size_t g = ring_.group_order();
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j) std::copy(ptr(rs[i], cs[j]), ptr(rs[i], cs[j]) + g, out.ptr_mut(i, j));
    return out;
}

RMatrix RMatrix::reduced_to(const Ring& target) const {
    require(target.p() == ring_.p() && target.group() == ring_.group(), ErrorCode::RingMismatch,
            "reduction between incompatible rings");
    RMatrix out(target, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = target.zmod().reduce(a_[i]);
    return out;
}

RVec RMatrix::left_multiply(const RVec& x) const {
    check_same_ring(ring_, x.ring());
    require(x.size() == rows_, ErrorCode::ShapeMismatch, "vector length");
    RVec out(ring_, cols_);
    const size_t g = ring_.group_order();
    for (size_t k = 0; k < rows_; ++k) {
        const int64_t* xk = x.ptr(k);
        if (std::all_of(xk, xk + g, [](int64_t v) { return v == 0; })) continue;
        for (size_t j = 0; j < cols_; ++j) ring_mul_acc(ring_, xk, ptr(k, j), out.ptr_mut(j));
    }
    return out;
}

bool RMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int64_t x) { return x == 0; });
}

ZMatrix RMatrix::expand() const {
    const size_t g = ring_.group_order();
    ZMatrix z(ring_.zmod(), rows_ * g, cols_ * g);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const int64_t* x = ptr(i, j);
            for (size_t s = 0; s < g; ++s)
                for (size_t h = 0; h < g; ++h) z.at(i * g + s, j * g + ring_.add_index(s, h)) = x[h];
        }
    return z;
}

ZMatrix expand_span(const Ring& ring, size_t n, const std::vector<RVec>& gens) {
    const size_t g = ring.group_order();
    ZMatrix z(ring.zmod(), 0, n * g);
    std::vector<int64_t> row(n * g);
    for (const auto& v : gens) {
        require(v.size() == n, ErrorCode::ShapeMismatch, "generator length");
        if (v.is_zero()) continue;
        for (size_t s = 0; s < g; ++s) {
            for (size_t i = 0; i < n; ++i) {
                const int64_t* x = v.ptr(i);
                for (size_t h = 0; h < g; ++h) row[i * g + ring.add_index(s, h)] = x[h];
            }
            z.append_row(row);
        }
    }
    return z;
}

namespace {

RingElement cofactor_rec(const RMatrix& a, std::vector<size_t>& rows, std::vector<size_t>& cols) {
    const Ring& r = a.ring();
    const size_t k = rows.size();
    if (k == 0) return r.one();
    if (k == 1) return a.at(rows[0], cols[0]);
    RingElement acc = r.zero();
    const size_t r0 = rows.front();
    std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        RingElement x = a.at(r0, cols[j]);
        if (x.is_zero()) continue;
        std::vector<size_t> sub_cols;
        for (size_t t = 0; t < k; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        RingElement term = x * cofactor_rec(a, sub_rows, sub_cols);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

}  // namespace

RingElement determinant_cofactor(const RMatrix& a) {
    require(a.rows() == a.cols(), ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
    std::vector<size_t> rows(a.rows()), cols(a.cols());
    for (size_t i = 0; i < rows.size(); ++i) rows[i] = cols[i] = i;
    return cofactor_rec(a, rows, cols);
}

RingElement determinant_subsets(const RMatrix& a) {
    require(a.rows() == a.cols(), ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
    const size_t n = a.rows();
    require(n <= 20, ErrorCode::InvalidArgument, "determinant size too large");
    const Ring& r = a.ring();
    const size_t g = r.group_order();
    const int64_t mod = r.modulus();
    const size_t full = size_t{1} << n;
    std::vector<int64_t> f(full * g, 0);
    std::vector<bool> live(full, false);
    f[0] = 1;
    live[0] = true;
    std::vector<int64_t> tmp(g);
    for (size_t mask = 0; mask < full; ++mask) {
        if (!live[mask]) continue;
        const size_t k = static_cast<size_t>(__builtin_popcountll(mask));
        if (k == n) continue;
        const int64_t* fm = f.data() + mask * g;
        for (size_t j = 0; j < n; ++j) {
            if (mask & (size_t{1} << j)) continue;
            const int64_t* x = a.ptr(k, j);
            if (std::all_of(x, x + g, [](int64_t v) { return v == 0; })) continue;
            const size_t above = static_cast<size_t>(__builtin_popcountll(mask >> (j + 1)));
            std::fill(tmp.begin(), tmp.end(), 0);
            ring_mul_acc(r, fm, x, tmp.data());
            int64_t* out = f.data() + (mask | (size_t{1} << j)) * g;
            for (size_t t = 0; t < g; ++t) out[t] = (out[t] + (above % 2 ? mod - tmp[t] : tmp[t])) % mod;
            live[mask | (size_t{1} << j)] = true;
        }
    }
    return RingElement(r, std::vector<int64_t>(f.begin() + static_cast<long>((full - 1) * g), f.end()));
}

RingElement determinant(const RMatrix& a) {
    if (a.rows() <= 4) return determinant_cofactor(a);
    return determinant_subsets(a);
}

RMatrix adjugate(const RMatrix& a) {
    require(a.rows() == a.cols(), ErrorCode::ShapeMismatch, "adjugate of a non-square matrix");
    const size_t n = a.rows();
    const Ring& r = a.ring();
    RMatrix out(r, n, n);
    if (n == 0) return out;
    if (n == 1) {
        out.set(0, 0, r.one());
        return out;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<size_t> rs, cs;
            for (size_t t = 0; t < n; ++t) {
                if (t != j) rs.push_back(t);
                if (t != i) cs.push_back(t);
            }
            RingElement m = determinant(a.submatrix(rs, cs));
            out.set(i, j, (i + j) % 2 ? -m : m);
        }
    return out;
}

RMatrix compound(const RMatrix& a, size_t k) {
    const auto& rs = subsets(a.rows(), k);
    const auto& cs = subsets(a.cols(), k);
    RMatrix out(a.ring(), rs.size(), cs.size());
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j) out.set(i, j, determinant(a.submatrix(rs[i], cs[j])));
    return out;
}

}  // namespace gkit
