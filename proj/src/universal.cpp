#include "lax/universal.hpp"

namespace lax {

namespace {

bool inverse_pair(const TwoCatModel& m, const TwoMorphism& t, const TwoMorphism& inv, int bound) {
    if (inv.src != t.tgt || inv.tgt != t.src) return false;
    return compare_two_cells(m, "inverse", vcompose(m, inv, t, bound), identity_two_cell(m, t.src), bound).passed &&
           compare_two_cells(m, "inverse", vcompose(m, t, inv, bound), identity_two_cell(m, t.tgt), bound).passed;
}

}  // namespace

bool triangle_identities_hold(const TwoCatModel& m, const Adjunction& a) {
    const Cell2 left = m.vcomp2(m.rwhisker(a.eps, a.f), m.lwhisker(a.f, a.eta));
    const Cell2 right = m.vcomp2(m.lwhisker(a.g, a.eps), m.rwhisker(a.eta, a.g));
    return m.eq2(left, m.id2(a.f)) && m.eq2(right, m.id2(a.g));
}

std::optional<Adjunction> find_right_adjoint(const TwoCatModel& m, const Cell1& f, bool lari_only) {
    const Cell1 ida = m.id1(f.dom);
    const Cell1 idb = m.id1(f.cod);
    for (const Cell1& g : m.one_cells(f.cod, f.dom)) {
        const Cell1 gf = m.comp1(g, f);
        const Cell1 fg = m.comp1(f, g);
        for (const Cell2& eta : m.two_cells(ida, gf)) {
            if (lari_only && !m.is_invertible(eta)) continue;
            for (const Cell2& eps : m.two_cells(fg, idb)) {
                const Adjunction a{f, g, eta, eps};
                if (triangle_identities_hold(m, a)) return a;
            }
        }
    }
    return std::nullopt;
}

bool is_lari(const TwoCatModel& m, const Cell1& f) { return find_right_adjoint(m, f, true).has_value(); }

MateData mate_of_square(const TwoCatModel& m, const Square& sq, const Adjunction& adj_r, const Adjunction& adj_s) {
    if (adj_r.f != sq.top || adj_s.f != sq.bottom)
        throw PreconditionError("mate: adjunctions do not belong to the square's horizontals");
    if (!m.is_invertible(adj_r.eta) || !m.is_invertible(adj_s.eta))
        throw PreconditionError("mate: horizontal edges must be laris");
    if (!triangle_identities_hold(m, adj_r) || !triangle_identities_hold(m, adj_s))
        throw PreconditionError("mate: triangle identities fail");
    if (!m.is_invertible(sq.delta)) throw PreconditionError("mate: delta is not invertible");
    const Cell1& rs = adj_r.g;
    const Cell1& ss = adj_s.g;
    const Cell2 unit = m.rwhisker(adj_s.eta, m.comp1(sq.left, rs));
    const Cell2 middle = m.lwhisker(ss, m.rwhisker(sq.delta, rs));
    const Cell2 counit = m.lwhisker(m.comp1(ss, sq.right), adj_r.eps);
    return {sq, adj_r, adj_s, m.vcomp2(counit, m.vcomp2(middle, unit))};
}

MateData mate_of_square(const TwoCatModel& m, const Square& sq) {
    const auto r = find_right_adjoint(m, sq.top, true);
    const auto s = find_right_adjoint(m, sq.bottom, true);
    if (!r || !s) throw PreconditionError("mate: horizontal edges must be laris");
    return mate_of_square(m, sq, *r, *s);
}

Cell2 recompute_mate(const TwoCatModel& m, const MateData& d) {
    const Cell1& rs = d.adj_r.g;
    const Cell1& ss = d.adj_s.g;
    const Cell2 unit = m.rwhisker(m.rwhisker(d.adj_s.eta, d.square.left), rs);
    const Cell2 middle = m.rwhisker(m.lwhisker(ss, d.square.delta), rs);
    const Cell2 counit = m.lwhisker(ss, m.lwhisker(d.square.right, d.adj_r.eps));
    return m.vcomp2(m.vcomp2(counit, middle), unit);
}

bool is_beck_chevalley(const TwoCatModel& m, const Square& sq) {
    return m.is_invertible(mate_of_square(m, sq).mate);
}

SigmaCospan apply_P(const TwoCatModel& m, const Cell1& f) { return SigmaCospan{f, m.id1(f.cod)}; }

TwoMorphism apply_P(const TwoCatModel& m, const Cell2& alpha) {
    const Cell1 one = m.id1(alpha.src.cod);
    return TwoMorphism{apply_P(m, alpha.src), apply_P(m, alpha.tgt), alpha, one, one, one, m.id2(one), m.id2(one)};
}

std::optional<TwoMorphism> find_inverse(const TwoCatModel& m, const TwoMorphism& t, int ext_bound, int bound) {
    for (const TwoMorphism& c : enumerate_two_morphisms(m, t.tgt, t.src, ext_bound))
        if (inverse_pair(m, t, c, bound)) return c;
    return std::nullopt;
}

LocalizationLari lari_in_localization(const TwoCatModel& m, const Cell1& s, int ext_bound, int bound) {
    if (!m.sigma_object(s)) throw PreconditionError("lari_in_localization: 1-cell is not in Sigma");
    LocalizationLari out;
    const Cell1 idb = m.id1(s.cod);
    out.left = apply_P(m, s);
    out.right = SigmaCospan{idb, s};

    out.eta = TwoMorphism{identity_cospan(m, s.dom), compose_cospans(m, out.right, out.left), m.id2(s), s, idb, s,
                          m.id2(s), m.id2(s)};
    require_two_morphism(m, out.eta, "unit");

    out.composite_square = m.canonical_square(s, s);
    const Square& q = out.composite_square;
    out.insertion = m.equi_insertion_witness(q, q.bottom, m.inv(q.delta), bound);
    const Cell1& d = out.insertion.d;
    const Cell1 ds2 = m.comp1(d, q.bottom);
    out.eps = TwoMorphism{compose_cospans(m, out.left, out.right), identity_cospan(m, s.cod),
                          out.insertion.alpha_prime, d, ds2, ds2, m.id2(ds2), m.id2(ds2)};
    require_two_morphism(m, out.eps, "counit");

    const TwoMorphism id_left = identity_two_cell(m, out.left);
    const TwoMorphism id_right = identity_two_cell(m, out.right);
    try {
        const TwoMorphism rhs_side =
            vcompose(m, hcompose(m, id_right, out.eps, bound),
                     vcompose(m, associator(m, out.right, out.left, out.right, bound),
                              hcompose(m, out.eta, id_right, bound), bound),
                     bound);
        out.triangle_right = compare_two_cells(m, "triangle identity for the right adjoint", rhs_side, id_right, bound);
        const TwoMorphism lhs_side =
            vcompose(m, hcompose(m, out.eps, id_left, bound),
                     vcompose(m, associator_inverse(m, out.left, out.right, out.left, bound),
                              hcompose(m, id_left, out.eta, bound), bound),
                     bound);
        out.triangle_left = compare_two_cells(m, "triangle identity for the left adjoint", lhs_side, id_left, bound);
    } catch (const BoundExhausted& e) {
        for (LawCheck* c : {&out.triangle_right, &out.triangle_left}) {
            c->undetermined = true;
            c->detail = std::string("bound exhausted: ") + e.what();
        }
    }

    out.unit_invertible.law = "unit invertible";
    // [id_s, 1_B, s, s, id, id]: (s, s) => 1_A.
    const TwoMorphism inv{out.eta.tgt, out.eta.src, m.id2(s), idb, s, s, m.id2(s), m.id2(s)};
    if (validate_two_morphism(m, inv) && inverse_pair(m, out.eta, inv, bound)) {
        out.unit_invertible.passed = true;
        out.unit_invertible.detail = "constructed inverse";
    } else if (find_inverse(m, out.eta, ext_bound, bound)) {
        out.unit_invertible.passed = true;
        out.unit_invertible.detail = "inverse found by enumeration";
    } else {
        out.unit_invertible.undetermined = true;
        out.unit_invertible.detail = "no inverse within the extension bound";
    }
    return out;
}

BcImageReport verify_bc_image(const TwoCatModel& m, const Square& sq, int ext_bound, int bound) {
    require_square(m, sq, "verify_bc_image");
    BcImageReport out;
    out.square = sq;
    try {
        const LocalizationLari ls = lari_in_localization(m, sq.top, ext_bound, bound);
        const LocalizationLari lt = lari_in_localization(m, sq.bottom, ext_bound, bound);
        const SigmaCospan& r = ls.left;
        const SigmaCospan& rs = ls.right;
        const SigmaCospan& ss = lt.right;
        const SigmaCospan f = apply_P(m, sq.left);
        const SigmaCospan g = apply_P(m, sq.right);
        const TwoMorphism pd = apply_P(m, sq.delta);
        if (pd.src != compose_cospans(m, lt.left, f) || pd.tgt != compose_cospans(m, g, r))
            throw LaxError("verify_bc_image: P is not strict on the square's composites");

        const SigmaCospan frs = compose_cospans(m, f, rs);
        const TwoMorphism id_ss = identity_two_cell(m, ss);
        std::vector<TwoMorphism> chain{
            hcompose(m, lt.eta, identity_two_cell(m, frs), bound),
            associator(m, ss, lt.left, frs, bound),
            hcompose(m, id_ss, associator_inverse(m, lt.left, f, rs, bound), bound),
            hcompose(m, id_ss, hcompose(m, pd, identity_two_cell(m, rs), bound), bound),
            hcompose(m, id_ss, associator(m, g, r, rs, bound), bound),
            hcompose(m, id_ss, hcompose(m, identity_two_cell(m, g), ls.eps, bound), bound),
        };
        out.mate = chain.front();
        for (std::size_t i = 1; i < chain.size(); ++i) out.mate = vcompose(m, chain[i], out.mate, bound);
        require_two_morphism(m, out.mate, "mate");
        if (out.mate.src != frs || out.mate.tgt != compose_cospans(m, ss, g))
            throw LaxError("verify_bc_image: mate has the wrong boundary");

        out.inverse = find_inverse(m, out.mate, ext_bound, bound);
        out.passed = out.inverse.has_value();
        out.undetermined = !out.passed;
        out.detail = out.passed ? "mate inverted" : "no inverse within the extension bound";
    } catch (const BoundExhausted& e) {
        out.undetermined = true;
        out.detail = std::string("bound exhausted: ") + e.what();
    }
    return out;
}

}  // namespace lax
