#include "lax/bicategory.hpp"

namespace lax {

namespace {

TwoMorphism whiskered_path_omega(const TwoCatModel& m, const SigmaPath& p, const Cell1& l0, const Cell1& m0,
                                 int bound) {
    return whisker_two_morphism(m, omega_of_path(m, p, bound).cell, l0, m0);
}

SigmaPath hcompose_path(const TwoCatModel& m, const TwoMorphism& beta, const TwoMorphism& alpha, int i,
                        const Rule6Bundle& rb) {
    const SigmaCospan& fi = i == 1 ? alpha.src : alpha.tgt;
    const SigmaCospan& gi = i == 1 ? beta.src : beta.tgt;
    const Obj c = gi.target();
    const SigmaScheme start = canonical_scheme(m, {fi.r, gi.f, gi.r, m.id1(c)});
    SigmaPath p{start, {}};

    const Square beta_sq = i == 1 ? beta.square1(m) : beta.square2(m);
    const Square corner = m.canonical_square(start.tiles.front().sq.bottom, beta_sq.right);
    p.steps.push_back(make_step(m, start, StepType::d, {{{1, 2, 0, 1}, beta_sq}, {{1, 2, 1, 2}, corner}}));

    const Square alpha_sq = i == 1 ? alpha.square1(m) : alpha.square2(m);
    const Square column = vcompose_squares(m, i == 1 ? rb.sq_f : rb.sq_g, alpha_sq);
    p.steps.push_back(make_step(m, p.finish(), StepType::u, {{{0, 2, 1, 2}, column}}));
    return p;
}

template <class F>
LawCheck guarded(const std::string& law, F&& f) {
    try {
        return f();
    } catch (const BoundExhausted& e) {
        LawCheck out;
        out.law = law;
        out.undetermined = true;
        out.detail = std::string("bound exhausted: ") + e.what();
        return out;
    }
}

}  // namespace

LawCheck compare_two_cells(const TwoCatModel& m, const std::string& law, const TwoMorphism& lhs,
                           const TwoMorphism& rhs, int bound) {
    LawCheck out;
    out.law = law;
    if (lhs.src != rhs.src || lhs.tgt != rhs.tgt) {
        out.detail = "sides have different boundaries";
        return out;
    }
    for (const TwoMorphism* t : {&lhs, &rhs}) {
        const Diagnosis d = validate_two_morphism(m, *t);
        if (!d) {
            out.detail = "invalid 2-morphism: " + d.failure;
            return out;
        }
    }
    EquivalenceResult r;
    try {
        r = are_equivalent(m, lhs, rhs, bound);
    } catch (const BoundExhausted& e) {
        out.undetermined = true;
        out.detail = std::string("bound exhausted: ") + e.what();
        return out;
    }
    out.passed = r.verdict == Verdict::equivalent;
    out.undetermined = r.verdict == Verdict::undetermined;
    out.detail = r.route + (r.note.empty() ? "" : ": " + r.note);
    return out;
}

HcomposeData hcompose_data(const TwoCatModel& m, const TwoMorphism& beta, const TwoMorphism& alpha, int bound) {
    if (alpha.src.target() != beta.src.source()) throw BoundaryError("hcompose: 2-morphisms do not chain");
    HcomposeData d;
    d.rule6 = rule6_insert(m, alpha.x3, beta.alpha, bound);
    const Rule6Bundle& rb = d.rule6;

    const Cell1 wy3 = m.comp1(rb.w, beta.x3);
    const Cell1 vid = m.id1(rb.w.cod);
    d.middle.src = SigmaCospan{m.comp1(rb.sq_f.right, m.comp1(alpha.x1, alpha.src.f)), wy3};
    d.middle.tgt = SigmaCospan{m.comp1(rb.sq_g.right, m.comp1(alpha.x2, alpha.tgt.f)), wy3};
    d.middle.alpha = m.hcomp2(rb.beta_prime, alpha.alpha);
    d.middle.x1 = vid;
    d.middle.x2 = vid;
    d.middle.x3 = wy3;
    d.middle.delta1 = m.id2(wy3);
    d.middle.delta2 = m.id2(wy3);
    require_two_morphism(m, d.middle, "hcompose middle");

    d.path1 = hcompose_path(m, beta, alpha, 1, rb);
    d.path2 = hcompose_path(m, beta, alpha, 2, rb);
    const Cell1 idc = m.id1(beta.src.target());
    d.omega1 = {whiskered_path_omega(m, d.path1, alpha.src.f, idc, bound), d.path1.steps};
    d.omega2 = {whiskered_path_omega(m, reverse_path(d.path2), alpha.tgt.f, idc, bound),
                reverse_path(d.path2).steps};
    return d;
}

TwoMorphism hcompose(const TwoCatModel& m, const TwoMorphism& beta, const TwoMorphism& alpha, int bound) {
    const HcomposeData d = hcompose_data(m, beta, alpha, bound);
    const TwoMorphism out = vcompose(m, d.omega2.cell, vcompose(m, d.middle, d.omega1.cell, bound), bound);
    if (out.src != compose_cospans(m, beta.src, alpha.src) || out.tgt != compose_cospans(m, beta.tgt, alpha.tgt))
        throw LaxError("hcompose: result does not connect the composite cospans");
    return out;
}

SigmaPath associator_path(const TwoCatModel& m, const SigmaCospan& h, const SigmaCospan& g, const SigmaCospan& f) {
    if (f.target() != g.source() || g.target() != h.source()) throw BoundaryError("associator: cospans do not chain");
    const std::vector<Cell1> border{f.r, g.f, g.r, h.f};
    const auto canonical = [&m](const Cell1& t, const Cell1& l) { return m.canonical_square(t, l); };
    const SigmaScheme start = fill_regions(m, border, {1, 2}, {}, {{1, 2, 0, 1}, {0, 2, 1, 2}}, canonical);
    SigmaPath p{start, {canonical_step(m, start, StepType::u)}};
    const SigmaScheme& can = p.finish();
    const Square row = m.canonical_square(m.comp1(can.tiles.front().sq.bottom, g.r), h.f);
    p.steps.push_back(make_step(m, can, StepType::d, {{{1, 2, 0, 2}, row}}));
    return p;
}

TwoMorphism associator(const TwoCatModel& m, const SigmaCospan& h, const SigmaCospan& g, const SigmaCospan& f,
                       int bound) {
    const TwoMorphism out = whiskered_path_omega(m, associator_path(m, h, g, f), f.f, h.r, bound);
    if (out.src != compose_cospans(m, compose_cospans(m, h, g), f) ||
        out.tgt != compose_cospans(m, h, compose_cospans(m, g, f)))
        throw LaxError("associator: result does not connect the composites");
    return out;
}

TwoMorphism associator_inverse(const TwoCatModel& m, const SigmaCospan& h, const SigmaCospan& g,
                               const SigmaCospan& f, int bound) {
    return whiskered_path_omega(m, reverse_path(associator_path(m, h, g, f)), f.f, h.r, bound);
}

Unitors unitors(const TwoCatModel& m, const SigmaCospan& c) {
    const SigmaCospan l = compose_cospans(m, identity_cospan(m, c.target()), c);
    const SigmaCospan r = compose_cospans(m, c, identity_cospan(m, c.source()));
    if (l != c || r != c) throw LaxError("unitors: identity composites differ from the cospan");
    return {identity_two_cell(m, c), identity_two_cell(m, c)};
}

LawCheck check_pentagon(const TwoCatModel& m, const SigmaCospan& k, const SigmaCospan& h, const SigmaCospan& g,
                        const SigmaCospan& f, int bound) {
    return guarded("pentagon", [&] {
        const SigmaCospan kh = compose_cospans(m, k, h);
        const SigmaCospan hg = compose_cospans(m, h, g);
        const SigmaCospan gf = compose_cospans(m, g, f);
        const TwoMorphism top =
            vcompose(m, associator(m, k, h, gf, bound), associator(m, kh, g, f, bound), bound);
        const TwoMorphism b1 = hcompose(m, associator(m, k, h, g, bound), identity_two_cell(m, f), bound);
        const TwoMorphism b2 = associator(m, k, hg, f, bound);
        const TwoMorphism b3 = hcompose(m, identity_two_cell(m, k), associator(m, h, g, f, bound), bound);
        const TwoMorphism bottom = vcompose(m, b3, vcompose(m, b2, b1, bound), bound);
        return compare_two_cells(m, "pentagon", top, bottom, bound);
    });
}

LawCheck check_triangle(const TwoCatModel& m, const SigmaCospan& g, const SigmaCospan& f, int bound) {
    return guarded("triangle", [&] {
        const SigmaCospan one = identity_cospan(m, g.source());
        const TwoMorphism a = associator(m, g, one, f, bound);
        const TwoMorphism lhs =
            vcompose(m, hcompose(m, identity_two_cell(m, g), unitors(m, f).left, bound), a, bound);
        const TwoMorphism rhs = hcompose(m, unitors(m, g).right, identity_two_cell(m, f), bound);
        return compare_two_cells(m, "triangle", lhs, rhs, bound);
    });
}

LawCheck check_associator_naturality(const TwoCatModel& m, const TwoMorphism& c, const TwoMorphism& b,
                                     const TwoMorphism& a, int bound) {
    return guarded("associator naturality", [&] {
        const TwoMorphism lhs = vcompose(m, associator(m, c.tgt, b.tgt, a.tgt, bound),
                                         hcompose(m, hcompose(m, c, b, bound), a, bound), bound);
        const TwoMorphism rhs = vcompose(m, hcompose(m, c, hcompose(m, b, a, bound), bound),
                                         associator(m, c.src, b.src, a.src, bound), bound);
        return compare_two_cells(m, "associator naturality", lhs, rhs, bound);
    });
}

LawCheck check_associator_invertible(const TwoCatModel& m, const SigmaCospan& h, const SigmaCospan& g,
                                     const SigmaCospan& f, int bound) {
    return guarded("associator invertible", [&] {
        const TwoMorphism a = associator(m, h, g, f, bound);
        const TwoMorphism inv = associator_inverse(m, h, g, f, bound);
        LawCheck one = compare_two_cells(m, "associator invertible", vcompose(m, inv, a, bound), identity_two_cell(m, a.src),
                               bound);
        if (!one.passed) return one;
        return compare_two_cells(m, "associator invertible", vcompose(m, a, inv, bound), identity_two_cell(m, a.tgt), bound);
    });
}

LawCheck check_interchange(const TwoCatModel& m, const TwoMorphism& b2, const TwoMorphism& b1,
                           const TwoMorphism& a2, const TwoMorphism& a1, int bound) {
    return guarded("interchange", [&] {
        const TwoMorphism lhs = hcompose(m, vcompose(m, b2, b1, bound), vcompose(m, a2, a1, bound), bound);
        const TwoMorphism rhs = vcompose(m, hcompose(m, b2, a2, bound), hcompose(m, b1, a1, bound), bound);
        return compare_two_cells(m, "interchange", lhs, rhs, bound);
    });
}

LawCheck check_whiskering(const TwoCatModel& m, const TwoMorphism& b, const TwoMorphism& a, int bound) {
    return guarded("whiskering", [&] {
        const TwoMorphism lhs = vcompose(m, hcompose(m, b, identity_two_cell(m, a.tgt), bound),
                                         hcompose(m, identity_two_cell(m, b.src), a, bound), bound);
        return compare_two_cells(m, "whiskering", lhs, hcompose(m, b, a, bound), bound);
    });
}

LawCheck check_identity_preservation(const TwoCatModel& m, const SigmaCospan& g, const SigmaCospan& f, int bound) {
    return guarded("identity preservation", [&] {
        const TwoMorphism lhs = hcompose(m, identity_two_cell(m, g), identity_two_cell(m, f), bound);
        return compare_two_cells(m, "identity preservation", lhs, identity_two_cell(m, compose_cospans(m, g, f)), bound);
    });
}

TwoMorphism Localization::vcompose(const TwoMorphism& beta, const TwoMorphism& alpha) {
    const auto key = std::make_pair(beta, alpha);
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = vmemo_.find(key); it != vmemo_.end()) return it->second;
    }
    TwoMorphism out = lax::vcompose(m_, beta, alpha, bound_);
    std::lock_guard<std::mutex> lock(mu_);
    return vmemo_.emplace(key, std::move(out)).first->second;
}

TwoMorphism Localization::hcompose(const TwoMorphism& beta, const TwoMorphism& alpha) {
    const auto key = std::make_pair(beta, alpha);
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = hmemo_.find(key); it != hmemo_.end()) return it->second;
    }
    TwoMorphism out = lax::hcompose(m_, beta, alpha, bound_);
    std::lock_guard<std::mutex> lock(mu_);
    return hmemo_.emplace(key, std::move(out)).first->second;
}

TwoMorphism Localization::associator(const SigmaCospan& h, const SigmaCospan& g, const SigmaCospan& f) {
    const auto key = std::make_tuple(h, g, f);
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = amemo_.find(key); it != amemo_.end()) return it->second;
    }
    TwoMorphism out = lax::associator(m_, h, g, f, bound_);
    std::lock_guard<std::mutex> lock(mu_);
    return amemo_.emplace(key, std::move(out)).first->second;
}

EquivalenceResult Localization::equivalent(const TwoMorphism& a, const TwoMorphism& b) const {
    return are_equivalent(m_, a, b, bound_);
}

std::size_t Localization::cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return vmemo_.size() + hmemo_.size() + amemo_.size();
}

}  // namespace lax
