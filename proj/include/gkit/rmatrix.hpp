#pragma once

#include <cstddef>
#include <vector>

#include "gkit/ring.hpp"

namespace gkit {

// Vector in R^n stored as n consecutive coefficient blocks of length |G|.
// The flat layout doubles as the expanded Z/p^m coordinates of the vector.
class RVec {
public:
    RVec() = default;
    RVec(Ring ring, size_t n);
    RVec(Ring ring, size_t n, std::vector<int64_t> flat);
    static RVec from_elements(const Ring& ring, const std::vector<RingElement>& xs);
    static RVec unit(const Ring& ring, size_t n, size_t i);

    const Ring& ring() const { return ring_; }
    size_t size() const { return n_; }
    const std::vector<int64_t>& flat() const { return a_; }
    const int64_t* ptr(size_t i) const { return a_.data() + i * ring_.group_order(); }
    int64_t* ptr_mut(size_t i) { return a_.data() + i * ring_.group_order(); }

    RingElement at(size_t i) const;
    void set(size_t i, const RingElement& x);
    std::vector<RingElement> elements() const;

    bool is_zero() const;
    RVec operator+(const RVec& o) const;
    RVec operator-(const RVec& o) const;
    RVec operator-() const;
    RVec& operator+=(const RVec& o);
    // r·v.
    RVec scaled(const RingElement& r) const;
    // Coordinates i for i in idx.
    RVec select(const std::vector<size_t>& idx) const;
    RVec concat(const RVec& o) const;

    bool operator==(const RVec& o) const { return ring_ == o.ring_ && n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const RVec& o) const { return !(*this == o); }

private:
    Ring ring_;
    size_t n_ = 0;
    std::vector<int64_t> a_;
};

// Matrix over R acting on row vectors.
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(Ring ring, size_t rows, size_t cols);
    static RMatrix identity(const Ring& ring, size_t n);
    static RMatrix from_rows(const Ring& ring, size_t cols, const std::vector<RVec>& rows);
    static RMatrix from_elements(const Ring& ring, size_t rows, size_t cols, const std::vector<RingElement>& xs);

    const Ring& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    RingElement at(size_t i, size_t j) const;
    void set(size_t i, size_t j, const RingElement& x);
    const int64_t* ptr(size_t i, size_t j) const { return a_.data() + (i * cols_ + j) * ring_.group_order(); }
    int64_t* ptr_mut(size_t i, size_t j) { return a_.data() + (i * cols_ + j) * ring_.group_order(); }

    RVec row(size_t i) const;
    RVec col(size_t j) const;
    std::vector<RVec> row_list() const;

    RMatrix operator*(const RMatrix& b) const;
    RMatrix operator+(const RMatrix& b) const;
    RMatrix operator-(const RMatrix& b) const;
    RMatrix scaled(const RingElement& r) const;
    RMatrix transpose() const;
    RMatrix hstack(const RMatrix& b) const;
    RMatrix vstack(const RMatrix& b) const;
    RMatrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;
    RMatrix reduced_to(const Ring& target) const;
    // xA for a row vector x.
    RVec left_multiply(const RVec& x) const;
    bool is_zero() const;

    // Z/p^m matrix of the same map on expanded coordinates.
    ZMatrix expand() const;

    bool operator==(const RMatrix& o) const {
        return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    Ring ring_;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<int64_t> a_;
};

// Z/p^m rows spanning the R-span of the given vectors ({g·v}).
ZMatrix expand_span(const Ring& ring, size_t n, const std::vector<RVec>& gens);

RingElement determinant(const RMatrix& a);
// Cofactor expansion along the first row (any size; used up to 4).
RingElement determinant_cofactor(const RMatrix& a);
// Permutation expansion memoised over column subsets (division free).
RingElement determinant_subsets(const RMatrix& a);

// Classical adjugate: a·adj(a) = adj(a)·a = det(a)·I.
RMatrix adjugate(const RMatrix& a);

// k-th compound matrix: entry (I, J) is the minor on rows I and columns J,
// with k-subsets in lexicographic order.
RMatrix compound(const RMatrix& a, size_t k);

}  // namespace gkit
