#include "gkit/complex.hpp"

#include <functional>

#include "gkit/error.hpp"
#include "gkit/exterior.hpp"

namespace gkit {

QuadraticComplex::QuadraticComplex(Ring ring, size_t d, size_t e, RMatrix phi) : d_(d), e_(e), phi_(std::move(phi)) {
    require(phi_.ring() == ring, ErrorCode::RingMismatch, "complex matrix over a different ring");
    require(phi_.rows() == d && phi_.cols() == e, ErrorCode::ShapeMismatch, "complex matrix must be d x e");
}

Subquotient QuadraticComplex::h0_module() const {
    Submodule k = h0();
    return present_subquotient(k, Submodule::zero(ring(), d_));
}

QuadraticComplex QuadraticComplex::reduced_to(const Ring& target) const {
    return QuadraticComplex(target, d_, e_, phi_.reduced_to(target));
}

RVec theta_unchecked(const QuadraticComplex& c, const RingElement& a) {
    const Ring& ring = c.ring();
    check_same_ring(ring, a.ring());
    require(c.rank() >= 0, ErrorCode::NonpositiveRank, "theta needs d >= e");
    size_t d = c.d(), e = c.e(), r = d - e;
    const auto& ks = subsets(d, r);
    RVec out(ring, ks.size());
    std::vector<size_t> all(e);
    for (size_t i = 0; i < e; ++i) all[i] = i;
    bool odd = (r * e) % 2 == 1;
    for (size_t idx = 0; idx < ks.size(); ++idx) {
        Subset j = complement(d, ks[idx]);
        RingElement det = e == 0 ? ring.one() : determinant(c.phi().submatrix(j, all));
        int sign = merge_sign(j, ks[idx]) * (odd ? -1 : 1);
        RingElement val = det * a;
        out.set(idx, sign > 0 ? val : -val);
    }
    return out;
}

RVec theta(const QuadraticComplex& c, const RingElement& a) {
    require(c.rank() > 0, ErrorCode::NonpositiveRank, "theta needs r = d - e > 0");
    return theta_unchecked(c, a);
}

Submodule h0_bidual(const QuadraticComplex& c, size_t r) { return embedded_bidual(c.h0(), r); }

Ideal evaluation_ideal(const QuadraticComplex& c) {
    return Ideal::of_entries(theta(c, c.ring().one()));
}

namespace {

bool is_zero_width(const RMatrix& q) { return q.cols() == 0; }

}  // namespace

RVec theta_with_quotient(const QuadraticComplex& c, const RMatrix& quotient, const RingElement& a) {
    const Ring& ring = c.ring();
    size_t e = c.e();
    require(quotient.rows() == e, ErrorCode::ShapeMismatch, "quotient map must have e rows");
    size_t ry = quotient.cols();
    require(static_cast<long>(ry) + c.rank() > 0, ErrorCode::NonpositiveRank, "r_Y + chi must be positive");
    if (is_zero_width(quotient)) return theta(c, a);
    require((c.phi() * quotient).is_zero(), ErrorCode::QuotientNotFree, "quotient does not vanish on im(phi)");
    require(image(quotient) == Submodule::full(ring, ry), ErrorCode::QuotientNotFree, "quotient map is not surjective");

    std::vector<RVec> brows = quotient.row_list();
    std::vector<RVec> lifts;
    for (size_t j = 0; j < ry; ++j) {
        auto coeffs = solve_combination(ring, ry, brows, RVec::unit(ring, ry, j));
        require(coeffs.has_value(), ErrorCode::QuotientNotFree, "no lift of a basis vector of Y");
        lifts.push_back(*coeffs);
    }
    std::vector<RVec> ks = kernel(quotient).minimal_generators();
    require(ks.size() + ry == e, ErrorCode::QuotientNotFree, "kernel of F1 -> Y is not free of the expected rank");

    std::vector<RVec> wrows = ks;
    wrows.insert(wrows.end(), lifts.begin(), lifts.end());
    RingElement det_w = determinant(RMatrix::from_rows(ring, e, wrows));
    require(det_w.is_unit(), ErrorCode::QuotientNotFree, "kernel basis and lifts do not form a basis of F1");

    size_t ep = ks.size();
    RMatrix phi2(ring, c.d(), ep);
    for (size_t i = 0; i < c.d(); ++i) {
        auto coeffs = solve_combination(ring, e, ks, c.phi().row(i));
        require(coeffs.has_value(), ErrorCode::QuotientNotFree, "image of phi outside the kernel of the quotient");
        for (size_t l = 0; l < ep; ++l) phi2.set(i, l, coeffs->at(l));
    }
    return theta_unchecked(QuadraticComplex(ring, c.d(), ep, phi2), a * det_w);
}

bool fitting_shift_check(const QuadraticComplex& c, const RMatrix& quotient, size_t i) {
    const Ring& ring = c.ring();
    long r = static_cast<long>(quotient.cols()) + c.rank();
    require(static_cast<long>(i) + r >= 0, ErrorCode::InvalidArgument, "i + r must be non-negative");
    size_t shifted = static_cast<size_t>(static_cast<long>(i) + r);

    PresentedModule h1 = c.h1();
    PresentedModule x;
    if (is_zero_width(quotient)) {
        x = h1;
    } else {
        ModuleMap to_y(h1, PresentedModule::free(ring, quotient.cols()), quotient);
        x = kernel_module(to_y).presentation;
    }
    Ideal rhs = fitting_ideal(x, i);
    Ideal lhs = fitting_ideal(c.h0_dual_by_transpose(), shifted);
    Ideal lhs_dual = fitting_ideal(dual(c.h0_module().module).module, shifted);
    return lhs == rhs && lhs == lhs_dual;
}

Extension extend_by_free(const QuadraticComplex& c, const std::vector<RVec>& columns) {
    const Ring& ring = c.ring();
    size_t n = columns.size(), d = c.d(), e = c.e();
    require(c.rank() >= 0, ErrorCode::NonpositiveRank, "extension needs d >= e");
    for (const auto& col : columns)
        require(col.size() == e, ErrorCode::ShapeMismatch, "column length must be e");
    std::vector<RVec> rows = columns;
    for (size_t i = 0; i < d; ++i) rows.push_back(c.phi().row(i));
    Extension out;
    out.complex = QuadraticComplex(ring, n + d, e, RMatrix::from_rows(ring, e, rows));

    size_t r = d - e;
    // Graded identification Det(D) ≅ Det(C) ⊗ Λ^n R^n: the n new basis vectors
    // move past the whole of Λ^d F0 ⊗ Λ^e F1^*.
    int iso_sign = (n * (d + e)) % 2 == 1 ? -1 : 1;
    RingElement one = ring.one();
    out.lower = theta_unchecked(c, iso_sign > 0 ? one : -one);

    RVec big = theta_unchecked(out.complex, one);
    Subset first(n);
    for (size_t i = 0; i < n; ++i) first[i] = i;
    RVec f = RVec::unit(ring, binomial(n + d, n), subset_rank(n + d, first));
    RVec reduced = rank_reduce(big, n + d, r + n, f, n);

    const auto& small = subsets(d, r);
    RVec upper(ring, small.size());
    out.extraneous_zero = true;
    const auto& bigsets = subsets(n + d, r);
    std::vector<bool> used(bigsets.size(), false);
    for (size_t k = 0; k < small.size(); ++k) {
        Subset shifted = small[k];
        for (auto& x : shifted) x += n;
        size_t pos = subset_rank(n + d, shifted);
        used[pos] = true;
        upper.set(k, reduced.at(pos));
    }
    for (size_t k = 0; k < bigsets.size(); ++k)
        if (!used[k] && !reduced.at(k).is_zero()) out.extraneous_zero = false;
    if ((r * n) % 2 == 1) upper = -upper;
    out.upper = upper;
    out.commutes = out.extraneous_zero && out.upper == out.lower;
    return out;
}

QuadraticComplex pad_with_free(const QuadraticComplex& c, size_t n) {
    std::vector<RVec> rows(n, RVec(c.ring(), c.e()));
    for (size_t i = 0; i < c.d(); ++i) rows.push_back(c.phi().row(i));
    return QuadraticComplex(c.ring(), n + c.d(), c.e(), RMatrix::from_rows(c.ring(), c.e(), rows));
}

std::vector<std::vector<size_t>> sym_monomials(size_t e, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (e == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    std::vector<size_t> cur(e, 0);
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t left) {
        if (pos + 1 == e) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (size_t x = left + 1; x-- > 0;) {
            cur[pos] = x;
            rec(pos + 1, left - x);
        }
    };
    rec(0, k);
    return out;
}

EagonNorthcott eagon_northcott(const QuadraticComplex& c) {
    require(c.rank() >= 0, ErrorCode::NonpositiveRank, "Eagon-Northcott needs d >= e");
    const Ring& ring = c.ring();
    size_t d = c.d(), e = c.e(), r = d - e;
    EagonNorthcott en;
    en.source = c;
    en.r = r;

    // Term i (0 <= i <= r) is (Sym_{r-i} F1)^* ⊗ Λ^{d-i} F0; basis index α-major.
    std::vector<std::vector<std::vector<size_t>>> monos(r + 1);
    for (size_t i = 0; i <= r; ++i) {
        monos[i] = sym_monomials(e, r - i);
        en.ranks.push_back(monos[i].size() * binomial(d, d - i));
    }
    for (size_t i = 0; i < r; ++i) {
        const auto& src_sets = subsets(d, d - i);
        const auto& tgt_sets = subsets(d, d - i - 1);
        size_t tgt_w = tgt_sets.size();
        RMatrix m(ring, en.ranks[i], en.ranks[i + 1]);
        for (size_t a = 0; a < monos[i].size(); ++a) {
            for (size_t s = 0; s < src_sets.size(); ++s) {
                size_t row = a * src_sets.size() + s;
                const Subset& iset = src_sets[s];
                for (size_t j = 0; j < e; ++j) {
                    if (monos[i][a][j] == 0) continue;
                    std::vector<size_t> beta = monos[i][a];
                    --beta[j];
                    size_t bidx = 0;
                    while (monos[i + 1][bidx] != beta) ++bidx;
                    for (size_t t = 0; t < iset.size(); ++t) {
                        Subset rest = iset;
                        rest.erase(rest.begin() + static_cast<long>(t));
                        size_t col = bidx * tgt_w + subset_rank(d, rest);
                        RingElement x = c.phi().at(iset[t], j);
                        RingElement cur = m.at(row, col);
                        m.set(row, col, t % 2 == 0 ? cur + x : cur - x);
                    }
                }
            }
        }
        en.differentials.push_back(m);
    }
    en.differentials.push_back(compound(c.phi(), e));
    en.ranks.push_back(1);

    size_t terms = en.ranks.size();
    for (size_t j = 0; j < terms; ++j) en.degrees.push_back(static_cast<int>(j) - static_cast<int>(terms - 1));
    en.is_complex = true;
    for (size_t j = 0; j + 1 < en.differentials.size(); ++j)
        if (!(en.differentials[j] * en.differentials[j + 1]).is_zero()) en.is_complex = false;
    return en;
}

std::vector<CohomologyGroup> en_cohomology(const EagonNorthcott& en) {
    const Ring& ring = en.source.ring();
    std::vector<CohomologyGroup> out;
    size_t terms = en.ranks.size();
    for (size_t j = 0; j < terms; ++j) {
        CohomologyGroup h;
        h.degree = en.degrees[j];
        h.cycles = j + 1 < terms ? kernel(en.differentials[j]) : Submodule::full(ring, en.ranks[j]);
        h.boundaries = j > 0 ? image(en.differentials[j - 1]) : Submodule::zero(ring, en.ranks[j]);
        h.module = present_subquotient(h.cycles, h.boundaries).module;
        out.push_back(std::move(h));
    }
    return out;
}

bool en_annihilation_check(const EagonNorthcott& en) {
    Ideal fitt = fitting_ideal(en.source.h1(), 0);
    auto gens = fitt.generators();
    for (const auto& h : en_cohomology(en))
        for (const auto& z : gens)
            if (!h.boundaries.contains(h.cycles.scaled(z))) return false;
    return true;
}

ThetaTilde theta_tilde(const QuadraticComplex& c) {
    ThetaTilde out;
    const Ring& ring = c.ring();
    out.fitting = fitting_ideal(c.h1(), 0);
    out.theta_basis = theta(c, ring.one());
    size_t width = out.theta_basis.size();
    Ideal ann_theta = annihilator_of_element(out.theta_basis);
    out.injective = ann_theta == out.fitting.annihilator();
    Submodule line = Submodule::span(ring, width, {out.theta_basis});
    Submodule bid = h0_bidual(c, static_cast<size_t>(c.rank()));
    out.cokernel_killed = true;
    for (const auto& z : out.fitting.generators())
        if (!line.contains(bid.scaled(z))) out.cokernel_killed = false;
    return out;
}

RVec reduce_vector(const RVec& v, const Ring& target) {
    return RMatrix::from_rows(v.ring(), v.size(), {v}).reduced_to(target).row(0);
}

bool theta_base_change_check(const QuadraticComplex& c, int j) {
    Ring target = c.ring().quotient(j);
    RVec lhs = reduce_vector(theta_unchecked(c, c.ring().one()), target);
    RVec rhs = theta_unchecked(c.reduced_to(target), target.one());
    return lhs == rhs;
}

RVec theta_with_identity_block(const QuadraticComplex& c, size_t k, const RingElement& a) {
    const Ring& ring = c.ring();
    size_t d = c.d(), e = c.e();
    RMatrix big(ring, d + k, e + k);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < e; ++j) big.set(i, j, c.phi().at(i, j));
    for (size_t i = 0; i < k; ++i) big.set(d + i, e + i, ring.one());
    RVec t = theta_unchecked(QuadraticComplex(ring, d + k, e + k, big), a);
    size_t r = d - e;
    const auto& small = subsets(d, r);
    RVec out(ring, small.size());
    for (size_t s = 0; s < small.size(); ++s) out.set(s, t.at(subset_rank(d + k, small[s])));
    return out;
}

}  // namespace gkit
