// Properties of the kolyvagin and limits suites.
#include "gkit/error.hpp"
#include "gkit/fitting.hpp"
#include "gkit/kolyvagin.hpp"
#include "gkit/tower.hpp"
#include "gkit/verify.hpp"

namespace gkit::verify {

namespace {

Outcome expect(bool cond, const std::string& what) { return cond ? Outcome{} : Outcome{false, false, what}; }

// ---- kolyvagin ----

json encode_table(const TransitionTable& t) {
    json rows = json::array();
    for (size_t l = 0; l < t.primes(); ++l) {
        json row = json::array();
        for (size_t q = 0; q < t.primes(); ++q) row.push_back(encode(t.at(l, q)));
        rows.push_back(row);
    }
    return rows;
}

TransitionTable decode_table(const Ring& r, const json& j) {
    TransitionTable t(r, j.size());
    for (size_t l = 0; l < j.size(); ++l)
        for (size_t q = 0; q < j.size(); ++q) t.set(l, q, decode_element(r, j[l][q]));
    return t;
}

TransitionTable random_table(const Ring& r, size_t k, Rng& rng) {
    TransitionTable t(r, k);
    for (size_t l = 0; l < k; ++l)
        for (size_t q = 0; q < k; ++q)
            if (l != q) t.set(l, q, random_element(r, rng));
    return t;
}

json encode_kappa(const KappaPrime& k) {
    json out = json::object();
    for (const auto& [d, v] : k) out[std::to_string(d)] = encode(v);
    return out;
}

KappaPrime decode_kappa(const Ring& r, const json& j) {
    KappaPrime k;
    for (const auto& [key, v] : j.items()) k[static_cast<Modulus>(std::stoul(key))] = decode_vec(r, v);
    return k;
}

KappaPrime random_kappa(const Ring& r, Modulus n, size_t w, Rng& rng) {
    KappaPrime k;
    for (Modulus d = 0; d <= n; ++d)
        if ((d & n) == d) k[d] = random_vec(r, w, rng);
    return k;
}

// n: ν distinct primes out of 5 symbols.
Modulus random_modulus(Rng& rng, size_t nu) {
    Modulus n = 0;
    while (static_cast<size_t>(__builtin_popcount(n)) < nu) n |= 1u << rng.below(5);
    return n;
}

json kolyvagin_instance(const Ring& r, Rng& rng) {
    Modulus n = random_modulus(rng, rng.range(1, 4));
    size_t w = rng.range(1, 2);
    return {{"n", n}, {"x", encode_table(random_table(r, 5, rng))}, {"kappa", encode_kappa(random_kappa(r, n, w, rng))}};
}

RMatrix random_unipotent(const Ring& r, size_t n, bool upper, Rng& rng) {
    RMatrix u = RMatrix::identity(r, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (upper) u.set(i, j, random_element(r, rng));
            else u.set(j, i, random_element(r, rng));
        }
    return u;
}

void kolyvagin_props(std::vector<Property>& out) {
    out.push_back({"kolyvagin.telescoping", "(σ - 1)·D = |G| - N_G in Z[G] for cyclic G",
                   [](const Ring&, Rng& rng) { return json{{"order", rng.range(1, 16)}}; },
                   [](const Ring&, const json& j, uint64_t) {
                       return expect(telescoping_check(j.at("order").get<int>()), "telescoping identity fails");
                   }});
    out.push_back({"kolyvagin.derivative_product", "D_n = Π D_q has coefficient Π_q i_q at Π σ_q^{i_q}",
                   [](const Ring&, Rng& rng) {
                       std::vector<int> orders(rng.range(1, 3));
                       for (auto& o : orders) o = static_cast<int>(rng.range(2, 5));
                       return json{{"orders", orders}};
                   },
                   [](const Ring&, const json& j, uint64_t) {
                       auto orders = j.at("orders").get<std::vector<int>>();
                       auto d = derivative_product(orders);
                       for (size_t idx = 0; idx < d.coeffs.size(); ++idx) {
                           size_t t = idx;
                           int64_t expected = 1;
                           for (size_t i = orders.size(); i-- > 0;) {
                               expected *= static_cast<int64_t>(t % static_cast<size_t>(orders[i]));
                               t /= static_cast<size_t>(orders[i]);
                           }
                           if (d.coeffs[idx] != expected) return expect(false, "coefficient mismatch");
                       }
                       return Outcome{};
                   }});
    out.push_back({"kolyvagin.rearrangement", "the permutation sum equals its rearrangement through U_q(n) for every q | n",
                   kolyvagin_instance, [](const Ring& r, const json& j, uint64_t) {
                       Modulus n = j.at("n").get<Modulus>();
                       auto x = decode_table(r, j.at("x"));
                       auto kappa = decode_kappa(r, j.at("kappa"));
                       for (size_t q = 0; q < 5; ++q)
                           if ((n & (1u << q)) && !stabilizer_rearrangement_check(kappa, x, n, q))
                               return expect(false, "rearrangement fails at q = " + std::to_string(q));
                       return Outcome{};
                   }});
    out.push_back({"kolyvagin.linearity", "κ_n is linear in κ' and affine in each row x^{(q)}",
                   [](const Ring& r, Rng& rng) {
                       json inst = kolyvagin_instance(r, rng);
                       Modulus n = inst["n"].get<Modulus>();
                       size_t w = inst["kappa"].begin()->size();
                       inst["kappa2"] = encode_kappa(random_kappa(r, n, w, rng));
                       inst["x2"] = encode_table(random_table(r, 5, rng));
                       return inst;
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       Modulus n = j.at("n").get<Modulus>();
                       auto x = decode_table(r, j.at("x")), x2 = decode_table(r, j.at("x2"));
                       auto a = decode_kappa(r, j.at("kappa")), b = decode_kappa(r, j.at("kappa2"));
                       KappaPrime s;
                       for (const auto& [d, v] : a) s[d] = v + b.at(d).scaled(r.constant(2));
                       RVec lhs = kolyvagin_combination(s, x, n);
                       RVec rhs = kolyvagin_combination(a, x, n) + kolyvagin_combination(b, x, n).scaled(r.constant(2));
                       if (lhs != rhs) return expect(false, "not linear in κ'");
                       for (size_t q = 0; q < 5; ++q) {
                           if (!(n & (1u << q))) continue;
                           // Row q of the table: the entries x_l^{(q)}.
                           TransitionTable sum = x, zero = x, other = x;
                           for (size_t l = 0; l < 5; ++l) {
                               if (l == q) continue;
                               sum.set(l, q, x.at(l, q) + x2.at(l, q));
                               zero.set(l, q, r.zero());
                               other.set(l, q, x2.at(l, q));
                           }
                           RVec left = kolyvagin_combination(a, sum, n) + kolyvagin_combination(a, zero, n);
                           RVec right = kolyvagin_combination(a, x, n) + kolyvagin_combination(a, other, n);
                           if (left != right) return expect(false, "not affine in x^{(" + std::to_string(q) + ")}");
                       }
                       return Outcome{};
                   }});
    out.push_back({"kolyvagin.cofactor_identity", "f·c_f = c_f·f = det(f)·I",
                   [](const Ring& r, Rng& rng) {
                       size_t n = rng.range(1, 4);
                       return json{{"f", encode(random_matrix(r, n, n, rng))}};
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       RMatrix f = decode_matrix(r, j.at("f"));
                       RMatrix c = cofactor(f);
                       RMatrix d = RMatrix::identity(r, f.rows()).scaled(determinant(f));
                       return expect(f * c == d && c * f == d, "adjugate identity fails");
                   }});
    out.push_back({"kolyvagin.cofactor_iso", "c_{1-τ} induces A/(τ-1)A ≅ A^{τ=1} when the residual corank is one",
                   [](const Ring& r, Rng& rng) {
                       size_t n = rng.range(1, 3);
                       RMatrix d = RMatrix::identity(r, n);
                       d.set(0, 0, r.zero());
                       RMatrix f = random_unipotent(r, n, true, rng) * random_unipotent(r, n, false, rng) * d *
                                   random_unipotent(r, n, false, rng) * random_unipotent(r, n, true, rng);
                       return json{{"tau", encode(RMatrix::identity(r, n) - f)}};
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       auto iso = cofactor_iso(decode_matrix(r, j.at("tau")));
                       if (!iso.lands_in_fixed) return expect(false, "image not fixed by τ");
                       return expect(iso.bijective, "induced map not bijective");
                   }});
}

// ---- limits ----

Ring tower_top(const Ring& r) { return Ring::make(r.p(), 3, r.group()); }

json tower_instance(const Ring& r, Rng& rng) {
    Ring top = tower_top(r);
    size_t b = top.log_cardinality() > 6 ? 1 : rng.range(1, 2);
    size_t a = rng.range(0, b + 1);
    return {{"top", encode_ring(top)},
            {"gens", b},
            {"relations", encode(random_matrix(top, a, b, rng))},
            {"j", encode(random_element(top, rng))},
            {"level", rng.range(2, 3)}};
}

PresentedModule decode_top_module(const Ring& top, const json& j) {
    return PresentedModule(top, j.at("gens").get<size_t>(), decode_matrix(top, j.at("relations")));
}

void limits_props(std::vector<Property>& out) {
    out.push_back({"limits.fitting_tower", "Fitting ideals descend the tower: containment chain and exact base change",
                   tower_instance, [](const Ring&, const json& j, uint64_t) {
                       Ring top = decode_ring(j.at("top"));
                       ModuleTower mt(RingTower(top), decode_top_module(top, j));
                       if (!mt.consistent()) return expect(false, "M_{i+1} ⊗ R_i differs from M_i");
                       for (size_t rr = 0; rr <= mt.level(3).gens(); ++rr) {
                           auto rep = fitting_tower_check(mt, rr);
                           if (!rep.containment) return expect(false, "containment chain fails for r = " + std::to_string(rr));
                           if (!rep.base_change) return expect(false, "base change equality fails for r = " + std::to_string(rr));
                       }
                       return Outcome{};
                   }});
    out.push_back({"limits.torsion_dual", "(M[p^n])^* ≅ M^*/p^n M^* via the embedding 1 ↦ p",
                   tower_instance, [](const Ring&, const json& j, uint64_t) {
                       Ring top = decode_ring(j.at("top"));
                       int level = j.at("level").get<int>();
                       Ring upper = top.quotient(level), lower = top.quotient(level - 1);
                       PresentedModule m = decode_top_module(top, j).base_change(upper);
                       return expect(torsion_dual_check(m, lower, default_embedding(upper)), "torsion dual map not bijective");
                   }});
    out.push_back({"limits.tor_transition", "Tor_1 transition maps: well defined, square commutes, cokernels agree, Fitt^0 kills Tor_1",
                   tower_instance, [](const Ring&, const json& j, uint64_t) {
                       Ring top = decode_ring(j.at("top"));
                       ModuleTower mt(RingTower(top), decode_top_module(top, j));
                       auto rep = tor_transition_check(mt, {decode_element(top, j.at("j"))});
                       if (!rep.well_defined) return expect(false, "transition map not well defined");
                       if (!rep.cardinality_match) return expect(false, "Tor sizes disagree between presentations");
                       if (!rep.square_commutes) return expect(false, "square does not commute");
                       if (!rep.cokernel_match) return expect(false, "cokernel sizes differ");
                       return expect(rep.fitting_kills, "Fitt^0 does not kill Tor_1");
                   }});
}

}  // namespace

void register_arithmetic(std::vector<Property>& out) {
    kolyvagin_props(out);
    limits_props(out);
}

}  // namespace gkit::verify
