// Properties of the biduals, complexes and stark suites.
#include "gkit/error.hpp"
#include "gkit/exterior.hpp"
#include "gkit/fitting.hpp"
#include "gkit/stark.hpp"
#include "gkit/verify.hpp"

namespace gkit::verify {

namespace {

Outcome expect(bool cond, const std::string& what) { return cond ? Outcome{} : Outcome{false, false, what}; }

bool small_ring(const Ring& r, uint64_t bound) {
    uint64_t total = 1;
    for (size_t i = 0; i < r.group_order(); ++i) {
        total *= static_cast<uint64_t>(r.modulus());
        if (total > bound) return false;
    }
    return true;
}

// ---- biduals ----

json bidual_instance(const Ring& r, Rng& rng) {
    size_t b = r.group_order() > 1 ? 2 : rng.range(2, 3);
    PresentedModule m(r, b, random_matrix(r, rng.range(0, 2), b, rng));
    auto dm = dual(m);
    std::vector<RVec> fs;
    size_t s = rng.range(1, 2);
    for (size_t i = 0; i < s; ++i) {
        RVec f(r, b);
        for (const auto& g : dm.functionals) f += g.scaled(random_element(r, rng));
        fs.push_back(f);
    }
    return {{"gens", b}, {"relations", encode(m.relations())}, {"functionals", encode_vecs(fs)}, {"r", rng.range(1, 2)}};
}

KernelBidual decode_kernel_bidual(const Ring& r, const json& j) {
    PresentedModule m(r, j.at("gens").get<size_t>(), decode_matrix(r, j.at("relations")));
    return kernel_bidual_map(m, decode_vecs(r, j.at("functionals")), j.at("r").get<size_t>());
}

void bidual_props(std::vector<Property>& out) {
    out.push_back({"biduals.ann_im", "im(a) = Ann(Ann(a)) for a in ∩^r M",
                   [](const Ring& r, Rng& rng) {
                       size_t b = r.group_order() > 1 ? 2 : rng.range(2, 3);
                       PresentedModule m(r, b, random_matrix(r, rng.range(0, 2), b, rng));
                       size_t rank = rng.range(1, 2);
                       auto bid = ExteriorBidual::of(m, rank);
                       RVec a(r, bid.width());
                       for (const auto& g : bid.generators()) a += g.scaled(random_element(r, rng));
                       return json{{"gens", b}, {"relations", encode(m.relations())}, {"r", rank}, {"a", encode(a)}};
                   },
                   [](const Ring& r, const json& j, uint64_t bound) {
                       PresentedModule m(r, j.at("gens").get<size_t>(), decode_matrix(r, j.at("relations")));
                       auto bid = ExteriorBidual::of(m, j.at("r").get<size_t>());
                       RVec a = decode_vec(r, j.at("a"));
                       if (!bid.contains(a)) return expect(false, "instance element is not in the bidual");
                       Ideal im = image_of_element(a);
                       Ideal ann = annihilator_of_element(a);
                       if (im != ann.annihilator()) return expect(false, "im(a) != Ann(Ann(a))");
                       if (!small_ring(r, std::min<uint64_t>(bound, 729))) return Outcome{};
                       auto elems = enumerate_ring(r, bound);
                       std::vector<RingElement> killers;
                       for (const auto& s : elems)
                           if (a.scaled(s).is_zero()) killers.push_back(s);
                       for (const auto& t : elems) {
                           bool kills = true;
                           for (const auto& s : killers) kills = kills && (t * s).is_zero();
                           if (kills != im.contains(t)) return expect(false, "Ann(Ann(a)) disagrees with enumeration");
                       }
                       return Outcome{};
                   }});
    out.push_back({"biduals.kernel_exact", "0 → ∩^r N → ∩^r M → ⊕ ∩^{r-1} M is exact", bidual_instance,
                   [](const Ring& r, const json& j, uint64_t) {
                       auto kb = decode_kernel_bidual(r, j);
                       if (!kb.injective) return expect(false, "∩^r N → ∩^r M not injective");
                       return expect(kb.exact, "not exact at ∩^r M");
                   }});
    out.push_back({"biduals.criterion", "membership criterion for ∩^r N matches direct computation", bidual_instance,
                   [](const Ring& r, const json& j, uint64_t) {
                       auto kb = decode_kernel_bidual(r, j);
                       if (!kb.criterion_matches) return expect(false, "criterion differs from the image of ∩^r N");
                       return expect(kb.reduced_lands_in_n, "rank reduction by ∧f leaves ∩^{r-s} N");
                   }});
    out.push_back({"biduals.self_contraction", "f_i ∘ (∧_j f_j) = 0", bidual_instance,
                   [](const Ring& r, const json& j, uint64_t) {
                       return expect(decode_kernel_bidual(r, j).self_contraction_vanishes, "f_i does not kill ∧f");
                   }});
}

// ---- complexes ----

json complex_instance(const Ring& r, Rng& rng, size_t max_d) {
    size_t rank = rng.range(1, std::min<size_t>(3, max_d));
    size_t e = rng.range(0, std::min<size_t>(4, max_d - rank));
    size_t d = e + rank;
    return {{"d", d}, {"e", e}, {"phi", encode(random_matrix(r, d, e, rng))}};
}

QuadraticComplex decode_complex(const Ring& r, const json& j) {
    return QuadraticComplex(r, j.at("d").get<size_t>(), j.at("e").get<size_t>(), decode_matrix(r, j.at("phi")));
}

size_t max_width(const Ring& r) { return r.log_cardinality() > 4 ? 4 : 5; }

void complex_props(std::vector<Property>& out) {
    auto gen = [](const Ring& r, Rng& rng) { return complex_instance(r, rng, max_width(r)); };
    out.push_back({"complexes.theta_in_bidual", "im(ϑ) ⊆ ∩^r H^0(C)", gen,
                   [](const Ring& r, const json& j, uint64_t) {
                       auto c = decode_complex(r, j);
                       RVec t = theta(c, r.one());
                       size_t rank = static_cast<size_t>(c.rank());
                       if (!h0_bidual(c, rank).contains(t)) return expect(false, "ϑ(1) outside ∩^r H^0");
                       return expect(contraction_criterion(c.h0(), rank).contains(t), "ϑ(1) fails the contraction criterion");
                   }});
    out.push_back({"complexes.evaluation_ideal", "evaluation ideal = Fitt^0(H^1(C))", gen,
                   [](const Ring& r, const json& j, uint64_t) {
                       auto c = decode_complex(r, j);
                       return expect(evaluation_ideal(c) == fitting_ideal(c.h1(), 0), "evaluation ideal differs from Fitt^0(H^1)");
                   }});
    out.push_back({"complexes.theta_tilde", "Fitt^0(H^1)^* ⊗ Det(C) → ∩^r H^0 is injective with cokernel killed by Fitt^0(H^1)", gen,
                   [](const Ring& r, const json& j, uint64_t) {
                       auto tt = theta_tilde(decode_complex(r, j));
                       if (!tt.injective) return expect(false, "not injective");
                       return expect(tt.cokernel_killed, "cokernel not killed by Fitt^0(H^1)");
                   }});
    out.push_back({"complexes.extension_sign", "extension by a free module commutes with the sign (-1)^{rn}",
                   [](const Ring& r, Rng& rng) {
                       json inst = complex_instance(r, rng, max_width(r) - 1);
                       size_t e = inst["e"].get<size_t>(), n = rng.range(0, 2);
                       std::vector<RVec> cols;
                       for (size_t k = 0; k < n; ++k) cols.push_back(random_vec(r, e, rng));
                       inst["columns"] = encode_vecs(cols);
                       return inst;
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       auto ext = extend_by_free(decode_complex(r, j), decode_vecs(r, j.at("columns")));
                       if (!ext.extraneous_zero) return expect(false, "components off F0 do not vanish");
                       return expect(ext.commutes, "diagram does not commute");
                   }});
    out.push_back({"complexes.base_change", "ϑ commutes with reduction to R/(p^j)", gen,
                   [](const Ring& r, const json& j, uint64_t) {
                       auto c = decode_complex(r, j);
                       for (int k = 1; k < r.m(); ++k)
                           if (!theta_base_change_check(c, k)) return expect(false, "base change fails for j = " + std::to_string(k));
                       return Outcome{};
                   }});
    out.push_back({"complexes.identity_block", "ϑ is unchanged by adjoining an identity block",
                   [](const Ring& r, Rng& rng) {
                       json inst = complex_instance(r, rng, max_width(r) - 1);
                       inst["k"] = rng.range(1, 2);
                       inst["a"] = encode(random_element(r, rng));
                       return inst;
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       auto c = decode_complex(r, j);
                       RingElement a = decode_element(r, j.at("a"));
                       return expect(theta_with_identity_block(c, j.at("k").get<size_t>(), a) == theta(c, a), "ϑ changed");
                   }});
    out.push_back({"complexes.eagon_northcott", "∂∂ = 0, H^0 = R/Fitt^0(coker φ), Fitt^0 kills every H^i",
                   [](const Ring& r, Rng& rng) { return complex_instance(r, rng, 4); },
                   [](const Ring& r, const json& j, uint64_t) {
                       auto c = decode_complex(r, j);
                       auto en = eagon_northcott(c);
                       if (!en.is_complex) return expect(false, "∂∘∂ != 0");
                       auto h = en_cohomology(en);
                       if (h.empty() || h.back().degree != 0) return expect(false, "missing degree-0 term");
                       Ideal fitt = fitting_ideal(c.h1(), 0);
                       if (h.back().cycles != Submodule::full(r, 1) || h.back().boundaries != fitt.submodule())
                           return expect(false, "H^0 is not R/Fitt^0(coker φ)");
                       return expect(en_annihilation_check(en), "Fitt^0 does not kill the cohomology");
                   }});
    out.push_back({"complexes.fitting_shift", "Fitt^{i+r}(H^0(C)^*) = Fitt^i(ker(H^1 → Y))",
                   [](const Ring& r, Rng& rng) {
                       json inst = complex_instance(r, rng, max_width(r));
                       size_t e = inst["e"].get<size_t>();
                       inst["free_quotient"] = rng.range(0, std::min<size_t>(e, 2));
                       inst["i"] = rng.range(0, 2);
                       return inst;
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       auto c = decode_complex(r, j);
                       size_t k = j.at("free_quotient").get<size_t>();
                       // The last k coordinates of F1 are made free by zeroing them in φ.
                       RMatrix phi = c.phi();
                       for (size_t i = 0; i < c.d(); ++i)
                           for (size_t col = c.e() - k; col < c.e(); ++col) phi.set(i, col, r.zero());
                       QuadraticComplex cz(r, c.d(), c.e(), phi);
                       RMatrix quotient(r, c.e(), k);
                       for (size_t t = 0; t < k; ++t) quotient.set(c.e() - k + t, t, r.one());
                       return expect(fitting_shift_check(cz, quotient, j.at("i").get<size_t>()), "Fitting shift identity fails");
                   }});
}

// ---- stark ----

json family_instance(const Ring& r, Rng& rng, size_t max_q) {
    size_t e = rng.range(0, 2), d0 = e + rng.range(1, 2), q = rng.range(1, max_q);
    std::vector<RVec> cols;
    for (size_t v = 0; v < q; ++v) cols.push_back(random_vec(r, e, rng));
    return {{"d", d0}, {"e", e}, {"phi", encode(random_matrix(r, d0, e, rng))}, {"columns", encode_vecs(cols)}};
}

StarkFamily decode_family(const Ring& r, const json& j) {
    StarkFamily f;
    f.base = QuadraticComplex(r, j.at("d").get<size_t>(), j.at("e").get<size_t>(), decode_matrix(r, j.at("phi")));
    f.columns = decode_vecs(r, j.at("columns"));
    validate_family(f);
    return f;
}

void stark_props(std::vector<Property>& out) {
    out.push_back({"stark.core", "core Stark system bounds: stabilisation, Fitting kills the kernel, char and Fitting containments",
                   [](const Ring& r, Rng& rng) {
                       json inst = family_instance(r, rng, 3);
                       inst["systems"] = 20;
                       inst["seed"] = rng.next();
                       return inst;
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       StarkCore core(decode_family(r, j));
                       const auto& f = core.family();
                       std::vector<RVec> tops;
                       for (const auto& g : core.space().generators) tops.push_back(g.back());
                       size_t w = binomial(f.width(f.top()), static_cast<size_t>(f.rank()) + f.vertices());
                       Rng rng(j.at("seed").get<uint64_t>());
                       size_t n = j.at("systems").get<size_t>();
                       for (size_t k = 0; k < n; ++k) {
                           RVec top(r, w);
                           for (const auto& t : tops) top += t.scaled(random_element(r, rng));
                           StarkSystem eps = stark_from_top(f, top);
                           if (!is_stark_system(f, eps)) return expect(false, "drawn element is not a Stark system");
                           auto rep = core.verify(eps);
                           if (!rep.stabilizer_found) return expect(false, "no stabilising vertex set");
                           if (!rep.fitting_kills_kernel) return expect(false, "Fitting ideal does not kill the kernel");
                           if (!rep.image_in_char) return expect(false, "im(c_∅) outside char(Ω)");
                           if (!rep.theta_bound) return expect(false, "Fitt^0(H^1(C_Q))·c_∅ outside R·ϑ(1)");
                           if (!rep.fitting_bound) return expect(false, "Fitt^0(H^1(C_Q))·im outside Ann(Ann(Fitt^0))");
                       }
                       return Outcome{};
                   }});
    out.push_back({"stark.exactness", "0 → M_S → M_S' → R → Z_S → Z_S' → 0 is exact for covering pairs",
                   [](const Ring& r, Rng& rng) { return family_instance(r, rng, 3); },
                   [](const Ring& r, const json& j, uint64_t) {
                       return expect(family_exactness_check(decode_family(r, j)), "covering-pair sequence not exact");
                   }});
    out.push_back({"stark.det_to_stark", "compatible determinant families map to Stark systems",
                   [](const Ring& r, Rng& rng) {
                       json inst = family_instance(r, rng, 3);
                       inst["a"] = encode(random_element(r, rng));
                       return inst;
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       StarkFamily f = decode_family(r, j);
                       RingElement a = decode_element(r, j.at("a"));
                       std::vector<RingElement> as;
                       for (VertexSet s = 0; s <= f.top(); ++s) as.push_back(det_transition_sign(f, f.top(), s) > 0 ? a : -a);
                       return expect(is_stark_system(f, det_to_stark(f, as)), "image is not a Stark system");
                   }});
    out.push_back({"stark.lattice_agrees", "the lattice solve equals the top-component parametrisation",
                   [](const Ring& r, Rng& rng) { return family_instance(r, rng, 2); },
                   [](const Ring& r, const json& j, uint64_t) {
                       StarkFamily f = decode_family(r, j);
                       return expect(stark_space_lattice(f).space == stark_space(f).space, "Stark spaces differ");
                   }});
    out.push_back({"stark.sign_cocycle", "sgn(S'',S)·sgn_merge(S''∖S', S'∖S) = sgn(S'',S')·sgn(S',S)",
                   [](const Ring&, Rng& rng) {
                       VertexSet c = static_cast<VertexSet>(rng.below(32));
                       VertexSet b = c & static_cast<VertexSet>(rng.below(32));
                       VertexSet a = b & static_cast<VertexSet>(rng.below(32));
                       return json{{"s", a}, {"s1", b}, {"s2", c}};
                   },
                   [](const Ring&, const json& j, uint64_t) {
                       VertexSet a = j.at("s").get<VertexSet>(), b = j.at("s1").get<VertexSet>(), c = j.at("s2").get<VertexSet>();
                       int lhs = stark_sign(c, a) * merge_sign(vertex_list(c & ~b), vertex_list(b & ~a));
                       return expect(lhs == stark_sign(c, b) * stark_sign(b, a), "cocycle identity fails");
                   }});
}

}  // namespace

void register_homological(std::vector<Property>& out) {
    bidual_props(out);
    complex_props(out);
    stark_props(out);
}

}  // namespace gkit::verify
