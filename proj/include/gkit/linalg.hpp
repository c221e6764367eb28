#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gkit {

// Arithmetic in Z/p^m.
class ZMod {
public:
    ZMod() = default;
    ZMod(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    int64_t modulus() const { return n_; }

    int64_t reduce(int64_t x) const {
        x %= n_;
        return x < 0 ? x + n_ : x;
    }
    int64_t add(int64_t a, int64_t b) const { return reduce(a + b); }
    int64_t sub(int64_t a, int64_t b) const { return reduce(a - b); }
    int64_t mul(int64_t a, int64_t b) const { return reduce(a * b); }
    int64_t neg(int64_t a) const { return a == 0 ? 0 : n_ - a; }

    // p-adic valuation of a reduced value; valuation(0) == m.
    int valuation(int64_t x) const;
    // p^k for 0 <= k <= m.
    int64_t power(int k) const { return pow_[static_cast<size_t>(k)]; }
    // Inverse of a unit (p does not divide x).
    int64_t unit_inverse(int64_t x) const;
    bool is_unit(int64_t x) const { return x % p_ != 0; }

    bool operator==(const ZMod& o) const { return p_ == o.p_ && m_ == o.m_; }

private:
    int p_ = 2;
    int m_ = 1;
    int64_t n_ = 2;
    std::vector<int64_t> pow_{1, 2};
};

// Dense matrix over Z/p^m; maps act on row vectors (x -> xA).
class ZMatrix {
public:
    ZMatrix() = default;
    ZMatrix(const ZMod& mod, size_t rows, size_t cols);
    ZMatrix(const ZMod& mod, size_t rows, size_t cols, std::vector<int64_t> entries);

    static ZMatrix identity(const ZMod& mod, size_t n);

    const ZMod& mod() const { return mod_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const std::vector<int64_t>& entries() const { return a_; }

    int64_t operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    int64_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    std::span<const int64_t> row(size_t i) const { return {a_.data() + i * cols_, cols_}; }
    std::span<int64_t> row_mut(size_t i) { return {a_.data() + i * cols_, cols_}; }

    void append_row(std::span<const int64_t> r);
    bool is_zero() const;

    ZMatrix operator*(const ZMatrix& b) const;
    ZMatrix transpose() const;
    ZMatrix hstack(const ZMatrix& b) const;
    ZMatrix vstack(const ZMatrix& b) const;
    // Row-vector times matrix.
    std::vector<int64_t> left_multiply(std::span<const int64_t> x) const;

    bool operator==(const ZMatrix& b) const {
        return mod_ == b.mod_ && rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
    }

private:
    ZMod mod_;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<int64_t> a_;
};

// Howell normal form of a row span. Rows are sorted by pivot column, each
// pivot equals p^v, entries above a pivot lie in [0, p^v), and the rows are
// closed in the sense that any vector of the span vanishing on the first k
// columns is a combination of the rows whose pivot lies at or after k.
class HowellBasis {
public:
    HowellBasis() = default;
    explicit HowellBasis(const ZMatrix& a);

    const ZMatrix& matrix() const { return h_; }
    size_t size() const { return h_.rows(); }
    size_t width() const { return h_.cols(); }
    const std::vector<size_t>& pivot_columns() const { return piv_; }
    const std::vector<int>& pivot_valuations() const { return val_; }

    // Canonical representative of x modulo the span.
    std::vector<int64_t> reduce(std::span<const int64_t> x) const;
    bool contains(std::span<const int64_t> x) const;
    bool contains(const HowellBasis& other) const;
    // log_p of the number of vectors in the span.
    int64_t log_size() const;

    bool operator==(const HowellBasis& o) const { return h_ == o.h_; }

private:
    ZMatrix h_;
    std::vector<size_t> piv_;
    std::vector<int> val_;
};

ZMatrix howell_form(const ZMatrix& a);

// Rows generating {x : xA = 0}.
ZMatrix kernel(const ZMatrix& a);

// Some x with xA = b, or nothing if b is outside the row span.
std::optional<std::vector<int64_t>> try_solve(const ZMatrix& a, std::span<const int64_t> b);
// As try_solve, throwing NoSolution.
std::vector<int64_t> solve(const ZMatrix& a, std::span<const int64_t> b);

}  // namespace gkit
