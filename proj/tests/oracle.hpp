#pragma once

// Brute-force reference computations used by the unit tests. Everything here
// works on explicit element sets and never touches Howell forms.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "gkit/module.hpp"

namespace oracle {

using Vec = std::vector<int64_t>;

inline int64_t ipow(int64_t b, size_t e) {
    int64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Group ring product computed directly from exponent tuples.
inline Vec mul(const gkit::Ring& ring, const Vec& a, const Vec& b) {
    size_t n = ring.group_order();
    int64_t N = ring.modulus();
    const auto& orders = ring.group().cyclic_orders;
    Vec out(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        auto ei = ring.exponents(i);
        for (size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            auto ej = ring.exponents(j);
            std::vector<int> s(ei.size());
            for (size_t k = 0; k < s.size(); ++k) s[k] = (ei[k] + ej[k]) % orders[k];
            size_t t = ring.index_of(s);
            out[t] = (out[t] + a[i] * b[j]) % N;
        }
    }
    return out;
}

inline Vec coeffs_at(const Vec& flat, size_t i, size_t g) {
    return Vec(flat.begin() + static_cast<long>(i * g), flat.begin() + static_cast<long>((i + 1) * g));
}

// x · A for x ∈ R^rows, A a rows × cols matrix.
inline Vec apply(const gkit::RMatrix& a, const Vec& x) {
    const gkit::Ring& ring = a.ring();
    size_t g = ring.group_order();
    Vec out(a.cols() * g, 0);
    for (size_t i = 0; i < a.rows(); ++i) {
        Vec xi = coeffs_at(x, i, g);
        for (size_t j = 0; j < a.cols(); ++j) {
            Vec prod = mul(ring, xi, a.at(i, j).coeffs());
            for (size_t k = 0; k < g; ++k) out[j * g + k] = (out[j * g + k] + prod[k]) % ring.modulus();
        }
    }
    return out;
}

inline std::vector<Vec> all_vectors(int64_t modulus, size_t width) {
    std::vector<Vec> out;
    Vec cur(width, 0);
    while (true) {
        out.push_back(cur);
        size_t k = 0;
        while (k < width && ++cur[k] == modulus) cur[k++] = 0;
        if (k == width) break;
    }
    return out;
}

// Additive closure of the generators in (Z/N)^width.
inline std::set<Vec> zspan(const std::vector<Vec>& gens, int64_t modulus, size_t width) {
    std::set<Vec> seen{Vec(width, 0)};
    std::vector<Vec> frontier{Vec(width, 0)};
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& v : frontier)
            for (const auto& g : gens) {
                Vec w(width);
                for (size_t k = 0; k < width; ++k) w[k] = (v[k] + g[k]) % modulus;
                if (seen.insert(w).second) next.push_back(w);
            }
        frontier.swap(next);
    }
    return seen;
}

// R-span of vectors in R^n: additive closure of all group translates.
inline std::set<Vec> rspan(const gkit::Ring& ring, size_t n, const std::vector<Vec>& gens) {
    size_t g = ring.group_order();
    std::vector<Vec> translates;
    for (const auto& v : gens)
        for (size_t h = 0; h < g; ++h) {
            Vec hv(g, 0);
            hv[h] = 1;
            Vec w;
            for (size_t i = 0; i < n; ++i) {
                Vec c = mul(ring, hv, coeffs_at(v, i, g));
                w.insert(w.end(), c.begin(), c.end());
            }
            translates.push_back(w);
        }
    return zspan(translates, ring.modulus(), n * g);
}

inline std::set<Vec> rspan(const std::vector<gkit::RVec>& gens, const gkit::Ring& ring, size_t n) {
    std::vector<Vec> raw;
    for (const auto& v : gens) raw.push_back(v.flat());
    return rspan(ring, n, raw);
}

inline uint64_t module_cardinality(const gkit::PresentedModule& m) {
    const gkit::Ring& ring = m.ring();
    size_t width = m.gens() * ring.group_order();
    auto rel = rspan(m.relations().row_list(), ring, m.gens());
    return static_cast<uint64_t>(ipow(ring.modulus(), width)) / rel.size();
}

// {x ∈ R^rows : x·A = 0} by enumeration.
inline std::set<Vec> kernel(const gkit::RMatrix& a) {
    std::set<Vec> out;
    size_t width = a.rows() * a.ring().group_order();
    Vec zero(a.cols() * a.ring().group_order(), 0);
    for (const auto& x : all_vectors(a.ring().modulus(), width))
        if (apply(a, x) == zero) out.insert(x);
    return out;
}

inline std::vector<gkit::RingElement> ring_elements(const gkit::Ring& ring) {
    std::vector<gkit::RingElement> out;
    for (auto& c : all_vectors(ring.modulus(), ring.group_order())) out.emplace_back(ring, c);
    return out;
}

// Ideal as a set of coefficient vectors.
inline std::set<Vec> ideal_set(const gkit::Ring& ring, const std::vector<gkit::RingElement>& gens) {
    std::vector<Vec> raw;
    for (const auto& x : gens) raw.push_back(x.coeffs());
    return rspan(ring, 1, raw);
}

inline std::set<Vec> ideal_set(const gkit::Ideal& i) { return ideal_set(i.ring(), i.zgenerators()); }

// Ann of a set of elements by enumeration.
inline std::set<Vec> annihilator(const gkit::Ring& ring, const std::set<Vec>& xs) {
    std::set<Vec> out;
    Vec zero(ring.group_order(), 0);
    for (const auto& r : all_vectors(ring.modulus(), ring.group_order())) {
        bool ok = true;
        for (const auto& x : xs)
            if (mul(ring, r, x) != zero) { ok = false; break; }
        if (ok) out.insert(r);
    }
    return out;
}

}  // namespace oracle

namespace oracle {

// Leibniz expansion over all permutations.
inline gkit::RingElement leibniz(const gkit::RMatrix& a) {
    const gkit::Ring& ring = a.ring();
    size_t n = a.rows();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    Vec total(ring.group_order(), 0);
    do {
        Vec prod(ring.group_order(), 0);
        prod[0] = 1;
        for (size_t i = 0; i < n; ++i) prod = mul(ring, prod, a.at(i, perm[i]).coeffs());
        int inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
        for (size_t k = 0; k < total.size(); ++k)
            total[k] = ((total[k] + (inv % 2 ? -prod[k] : prod[k])) % ring.modulus() + ring.modulus()) % ring.modulus();
    } while (std::next_permutation(perm.begin(), perm.end()));
    return gkit::RingElement(ring, total);
}

inline void choose(size_t n, size_t k, size_t start, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (size_t i = start; i < n; ++i) {
        cur.push_back(i);
        choose(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Fitt^i by listing every (b-i)-minor with the Leibniz formula.
inline std::set<Vec> fitting(const gkit::PresentedModule& m, size_t i) {
    const gkit::Ring& ring = m.ring();
    size_t b = m.gens();
    if (i >= b) return ideal_set(ring, {ring.one()});
    size_t k = b - i;
    const gkit::RMatrix& rel = m.relations();
    std::vector<std::vector<size_t>> rows, cols;
    std::vector<size_t> cur;
    choose(rel.rows(), k, 0, cur, rows);
    choose(b, k, 0, cur, cols);
    std::vector<gkit::RingElement> minors;
    for (const auto& rs : rows)
        for (const auto& cs : cols) minors.push_back(leibniz(rel.submatrix(rs, cs)));
    if (minors.empty()) minors.push_back(ring.zero());
    return ideal_set(ring, minors);
}

}  // namespace oracle
