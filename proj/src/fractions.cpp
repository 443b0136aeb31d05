#include "lax/fractions.hpp"

#include <numeric>

#include "lax/pos.hpp"

namespace lax {

namespace {

bool is_two_cell(const TwoCatModel& m, const Cell2& a) {
    for (const Cell2& c : m.two_cells(a.src, a.tgt))
        if (m.eq2(c, a)) return true;
    return false;
}

void require_invertible(const TwoCatModel& m, const Cell2& a, const std::string& what) {
    if (!m.is_invertible(a)) throw PreconditionError(what + " is not invertible");
}

}  // namespace

Diagnosis validate_cospan(const TwoCatModel& m, const SigmaCospan& c) {
    if (c.f.cod != c.r.cod) return Diagnosis::fail("legs do not share an apex");
    if (!m.sigma_object(c.r)) return Diagnosis::fail("right leg not in Sigma");
    return Diagnosis::pass();
}

SigmaCospan make_cospan(const TwoCatModel& m, const Cell1& f, const Cell1& r) {
    if (f.cod != r.cod) throw BoundaryError("cospan: legs do not share an apex");
    SigmaCospan c{f, r};
    const Diagnosis d = validate_cospan(m, c);
    if (!d) throw PreconditionError("cospan: " + d.failure);
    return c;
}

SigmaCospan identity_cospan(const TwoCatModel& m, const Obj& a) { return {m.id1(a), m.id1(a)}; }

SigmaCospan compose_cospans(const TwoCatModel& m, const SigmaCospan& g_bar, const SigmaCospan& f_bar) {
    if (f_bar.target() != g_bar.source()) throw BoundaryError("compose_cospans: cospans do not chain");
    const Square q = m.canonical_square(f_bar.r, g_bar.f);
    return {m.comp1(q.right, f_bar.f), m.comp1(q.bottom, g_bar.r)};
}

std::string describe(const TwoCatModel& m, const SigmaCospan& c) {
    return "(" + m.describe(c.f) + ", " + m.describe(c.r) + ")";
}

Square TwoMorphism::square1(const TwoCatModel& m) const {
    return Square{src.r, m.id1(src.target()), x1, x3, delta1};
}

Square TwoMorphism::square2(const TwoCatModel& m) const {
    return Square{tgt.r, m.id1(tgt.target()), x2, x3, delta2};
}

Diagnosis validate_two_morphism(const TwoCatModel& m, const TwoMorphism& t) {
    if (Diagnosis d = validate_cospan(m, t.src); !d) return Diagnosis::fail("source cospan: " + d.failure);
    if (Diagnosis d = validate_cospan(m, t.tgt); !d) return Diagnosis::fail("target cospan: " + d.failure);
    if (t.src.source() != t.tgt.source() || t.src.target() != t.tgt.target())
        return Diagnosis::fail("cospans not parallel");
    if (t.x1.dom != t.src.apex() || t.x2.dom != t.tgt.apex() || t.x3.dom != t.src.target() ||
        t.x1.cod != t.x3.cod || t.x2.cod != t.x3.cod)
        return Diagnosis::fail("legs x1, x2, x3 have the wrong boundary");
    if (Diagnosis d = validate_square(m, t.square1(m)); !d) return Diagnosis::fail("square1: " + d.failure);
    if (Diagnosis d = validate_square(m, t.square2(m)); !d) return Diagnosis::fail("square2: " + d.failure);
    if (t.alpha.src != m.comp1(t.x1, t.src.f) || t.alpha.tgt != m.comp1(t.x2, t.tgt.f))
        return Diagnosis::fail("alpha has the wrong boundary");
    if (!is_two_cell(m, t.alpha)) return Diagnosis::fail("alpha is not a 2-cell of the model");
    return Diagnosis::pass();
}

void require_two_morphism(const TwoCatModel& m, const TwoMorphism& t, const std::string& context) {
    const Diagnosis d = validate_two_morphism(m, t);
    if (!d) throw PreconditionError(context + ": " + d.failure);
}

TwoMorphism identity_two_cell(const TwoCatModel& m, const SigmaCospan& c) {
    const Cell1 one = m.id1(c.apex());
    return TwoMorphism{c, c, m.id2(c.f), one, one, c.r, m.id2(c.r), m.id2(c.r)};
}

SigmaExtension plain_extension(const TwoCatModel& m, const TwoMorphism& t, const Square& chi) {
    return {chi, m.id2(m.comp1(chi.right, t.x1)), m.id2(m.comp1(chi.right, t.x2))};
}

TwoMorphism sigma_extend(const TwoCatModel& m, const TwoMorphism& t, const SigmaExtension& e) {
    const Square& chi = e.chi;
    if (chi.top != t.x3 || !m.is_identity(chi.left))
        throw PreconditionError("sigma_extend: chi must have top x3 and an identity left edge");
    require_square(m, chi, "sigma_extend");
    const Cell1& dx = chi.right;
    if (e.theta1.src != m.comp1(dx, t.x1) || e.theta2.src != m.comp1(dx, t.x2))
        throw BoundaryError("sigma_extend: theta has the wrong source");
    require_invertible(m, e.theta1, "sigma_extend: theta1");
    require_invertible(m, e.theta2, "sigma_extend: theta2");
    TwoMorphism out;
    out.src = t.src;
    out.tgt = t.tgt;
    out.x1 = e.theta1.tgt;
    out.x2 = e.theta2.tgt;
    out.x3 = chi.bottom;
    out.alpha = m.vcomp2(m.rwhisker(e.theta2, t.tgt.f),
                         m.vcomp2(m.lwhisker(dx, t.alpha), m.rwhisker(m.inv(e.theta1), t.src.f)));
    out.delta1 = m.vcomp2(m.rwhisker(e.theta1, t.src.r), m.vcomp2(m.lwhisker(dx, t.delta1), chi.delta));
    out.delta2 = m.vcomp2(m.rwhisker(e.theta2, t.tgt.r), m.vcomp2(m.lwhisker(dx, t.delta2), chi.delta));
    return out;
}

TwoMorphism whisker_two_morphism(const TwoCatModel& m, const TwoMorphism& t, const Cell1& l0,
                                 const Cell1& m0) {
    TwoMorphism out;
    out.src = {m.comp1(t.src.f, l0), m.comp1(t.src.r, m0)};
    out.tgt = {m.comp1(t.tgt.f, l0), m.comp1(t.tgt.r, m0)};
    out.alpha = m.rwhisker(t.alpha, l0);
    out.x1 = t.x1;
    out.x2 = t.x2;
    out.x3 = m.comp1(t.x3, m0);
    out.delta1 = m.rwhisker(t.delta1, m0);
    out.delta2 = m.rwhisker(t.delta2, m0);
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::equivalent:
            return "equivalent";
        case Verdict::not_equivalent:
            return "not_equivalent";
        case Verdict::undetermined:
            return "undetermined";
    }
    return "undetermined";
}

namespace {

void require_parallel(const TwoMorphism& a, const TwoMorphism& b) {
    if (a.src != b.src || a.tgt != b.tgt) throw BoundaryError("are_equivalent: cospans differ");
}

// (gamma2 g)(dx alpha)(gamma1^-1 f) against dy beta, plus the square equations.
bool common_extension_holds(const TwoCatModel& m, const TwoMorphism& a, const TwoMorphism& b,
                            const Square& chi, const Square& psi, const Cell2& g1, const Cell2& g2) {
    const TwoMorphism ea = sigma_extend(m, a, SigmaExtension{chi, g1, g2});
    const TwoMorphism eb = sigma_extend(m, b, plain_extension(m, b, psi));
    return ea.x1 == eb.x1 && ea.x2 == eb.x2 && ea.x3 == eb.x3 && m.eq2(ea.alpha, eb.alpha) &&
           m.eq2(ea.delta1, eb.delta1) && m.eq2(ea.delta2, eb.delta2);
}

}  // namespace

EquivalenceResult equivalent_by_rule4(const TwoCatModel& m, const TwoMorphism& a, const TwoMorphism& b,
                                      int bound) {
    require_parallel(a, b);
    EquivalenceResult out;
    out.route = "rule4";
    out.bound = bound;
    if (a == b) {
        out.verdict = Verdict::equivalent;
        out.common = a;
        return out;
    }
    try {
        const Rule4Bundle r4 = rule4(m, a.square1(m), b.square1(m), a.square2(m), b.square2(m), bound);
        if (Diagnosis d = verify_rule4(m, {{a.square1(m), b.square1(m)}, {a.square2(m), b.square2(m)}}, r4);
            !d) {
            out.note = "rule 4 bundle failed its re-pasting check: " + d.failure;
            return out;
        }
        if (common_extension_holds(m, a, b, r4.phi, r4.chi, r4.gammas.at(0), r4.gammas.at(1))) {
            out.verdict = Verdict::equivalent;
            out.common = sigma_extend(m, a, SigmaExtension{r4.phi, r4.gammas.at(0), r4.gammas.at(1)});
        } else {
            out.note = "2-cell equation fails on the constructed extension";
        }
    } catch (const BoundExhausted& e) {
        out.note = std::string("bound exhausted: ") + e.what();
    }
    return out;
}

std::optional<EquivalenceResult> equivalent_fast_path(const TwoCatModel& m, const TwoMorphism& a,
                                                      const TwoMorphism& b) {
    if (!dynamic_cast<const PosModel*>(&m)) return std::nullopt;
    require_parallel(a, b);
    const FinitePoset X = FinitePoset::from(a.x3.cod);
    const FinitePoset Y = FinitePoset::from(b.x3.cod);
    const int nx = X.n;
    const int total = X.n + Y.n;
    if (total > 64) return std::nullopt;
    std::vector<std::uint64_t> rel(total, 0);
    for (int i = 0; i < X.n; ++i) rel[i] = X.up[i];
    for (int i = 0; i < Y.n; ++i) rel[nx + i] = Y.up[i] << nx;
    const auto glue = [&](const Cell1& x, const Cell1& y) {
        const MonotoneMap mx = MonotoneMap::from(x);
        const MonotoneMap my = MonotoneMap::from(y);
        for (int i = 0; i < mx.dom.n; ++i) {
            const int p = mx.assignment[i];
            const int q = nx + my.assignment[i];
            rel[p] |= 1ull << q;
            rel[q] |= 1ull << p;
        }
    };
    glue(a.x1, b.x1);
    glue(a.x2, b.x2);
    glue(a.x3, b.x3);
    const Quotient qt = quotient_preorder(total, rel);
    const Cell1 dx = MonotoneMap{X, qt.poset, std::vector<int>(qt.cls.begin(), qt.cls.begin() + nx)}.cell();
    const Cell1 dy = MonotoneMap{Y, qt.poset, std::vector<int>(qt.cls.begin() + nx, qt.cls.end())}.cell();
    const Cell1 d = m.comp1(dx, a.x3);
    EquivalenceResult out;
    out.route = "order-enriched fast path";
    // The four composite equalities.
    if (m.comp1(dx, a.x1) != m.comp1(dy, b.x1) || m.comp1(dx, a.x2) != m.comp1(dy, b.x2) ||
        d != m.comp1(dy, b.x3))
        return std::nullopt;
    if (!m.sigma_object(d)) return std::nullopt;
    const Cell1 idb = m.id1(a.src.target());
    const Square chi{a.x3, idb, dx, d, m.id2(d)};
    const Square psi{b.x3, idb, dy, d, m.id2(d)};
    if (!validate_square(m, chi) || !validate_square(m, psi)) return std::nullopt;
    if (!common_extension_holds(m, a, b, chi, psi, m.id2(m.comp1(dx, a.x1)), m.id2(m.comp1(dx, a.x2))))
        return std::nullopt;
    out.verdict = Verdict::equivalent;
    out.common = sigma_extend(m, a, plain_extension(m, a, chi));
    return out;
}

EquivalenceResult equivalent_by_search(const TwoCatModel& m, const TwoMorphism& a, const TwoMorphism& b,
                                       int bound) {
    require_parallel(a, b);
    EquivalenceResult out;
    out.route = "search";
    const int complete = m.object_size(a.x3.cod) + m.object_size(b.x3.cod);
    if (bound < 0) bound = complete;
    out.bound = bound;
    const Obj& B = a.src.target();
    const Cell1 idb = m.id1(B);
    for (const Obj& D : m.objects()) {
        if (m.object_size(D) > bound) continue;
        for (const Cell1& d : m.sigma_objects(B, D))
            for (const Cell1& dx : m.one_cells(a.x3.cod, D))
                for (const Cell2& cd : m.two_cells(d, m.comp1(dx, a.x3))) {
                    const Square chi{a.x3, idb, dx, d, cd};
                    if (!validate_square(m, chi)) continue;
                    for (const Cell1& dy : m.one_cells(b.x3.cod, D))
                        for (const Cell2& ce : m.two_cells(d, m.comp1(dy, b.x3))) {
                            const Square psi{b.x3, idb, dy, d, ce};
                            if (!validate_square(m, psi)) continue;
                            for (const Cell2& g1 : m.two_cells(m.comp1(dx, a.x1), m.comp1(dy, b.x1))) {
                                if (!m.is_invertible(g1)) continue;
                                for (const Cell2& g2 : m.two_cells(m.comp1(dx, a.x2), m.comp1(dy, b.x2))) {
                                    if (!m.is_invertible(g2)) continue;
                                    if (!common_extension_holds(m, a, b, chi, psi, g1, g2)) continue;
                                    out.verdict = Verdict::equivalent;
                                    out.common = sigma_extend(m, a, SigmaExtension{chi, g1, g2});
                                    return out;
                                }
                            }
                        }
                }
    }
    if (bound >= complete && m.universe_complete(bound)) {
        out.verdict = Verdict::not_equivalent;
        out.note = "no common extension up to the completeness bound";
    } else {
        out.note = "no common extension within the bound";
    }
    return out;
}

EquivalenceResult are_equivalent(const TwoCatModel& m, const TwoMorphism& a, const TwoMorphism& b,
                                 int bound) {
    EquivalenceResult generic = equivalent_by_rule4(m, a, b, bound);
    const std::optional<EquivalenceResult> fast = equivalent_fast_path(m, a, b);
    if (fast && generic.verdict != Verdict::undetermined && fast->verdict != generic.verdict) {
        EquivalenceResult out;
        out.route = "cross-check";
        out.note = "fast path and rule 4 route disagree";
        out.bound = bound;
        return out;
    }
    if (generic.verdict == Verdict::undetermined && fast) return *fast;
    return generic;
}

TwoMorphism vcompose(const TwoCatModel& m, const TwoMorphism& beta, const TwoMorphism& alpha, int bound) {
    if (alpha.tgt != beta.src) throw BoundaryError("vcompose: 2-morphisms do not chain");
    const Rule4Bundle b = rule4_prime(m, alpha.square2(m), beta.square1(m), bound);
    const Cell2& gamma = b.gammas.at(0);
    TwoMorphism out;
    out.src = alpha.src;
    out.tgt = beta.tgt;
    out.x1 = m.comp1(b.dx, alpha.x1);
    out.x2 = m.comp1(b.dy, beta.x2);
    out.x3 = b.u;
    out.alpha = m.vcomp2(m.lwhisker(b.dy, beta.alpha),
                         m.vcomp2(m.rwhisker(gamma, alpha.tgt.f), m.lwhisker(b.dx, alpha.alpha)));
    out.delta1 = m.vcomp2(m.lwhisker(b.dx, alpha.delta1), b.phi.delta);
    out.delta2 = m.vcomp2(m.lwhisker(b.dy, beta.delta2), b.chi.delta);
    return out;
}

std::vector<SigmaCospan> enumerate_cospans(const TwoCatModel& m, const Obj& a, const Obj& b,
                                           int apex_bound) {
    std::vector<SigmaCospan> out;
    for (const Obj& i : m.objects()) {
        if (m.object_size(i) > apex_bound) continue;
        for (const Cell1& r : m.sigma_objects(b, i))
            for (const Cell1& f : m.one_cells(a, i)) out.push_back({f, r});
    }
    return out;
}

std::vector<TwoMorphism> enumerate_two_morphisms(const TwoCatModel& m, const SigmaCospan& c1,
                                                 const SigmaCospan& c2, int ext_bound) {
    if (c1.source() != c2.source() || c1.target() != c2.target())
        throw BoundaryError("enumerate_two_morphisms: cospans not parallel");
    std::vector<TwoMorphism> out;
    const Obj& B = c1.target();
    const Cell1 idb = m.id1(B);
    for (const Obj& X : m.objects()) {
        if (m.object_size(X) > ext_bound) continue;
        for (const Cell1& x3 : m.sigma_objects(B, X)) {
            std::vector<std::pair<Cell1, Cell2>> firsts;
            for (const Cell1& x1 : m.one_cells(c1.apex(), X))
                for (const Cell2& d1 : m.two_cells(x3, m.comp1(x1, c1.r)))
                    if (validate_square(m, Square{c1.r, idb, x1, x3, d1})) firsts.emplace_back(x1, d1);
            if (firsts.empty()) continue;
            std::vector<std::pair<Cell1, Cell2>> seconds;
            for (const Cell1& x2 : m.one_cells(c2.apex(), X))
                for (const Cell2& d2 : m.two_cells(x3, m.comp1(x2, c2.r)))
                    if (validate_square(m, Square{c2.r, idb, x2, x3, d2})) seconds.emplace_back(x2, d2);
            for (const auto& [x1, d1] : firsts)
                for (const auto& [x2, d2] : seconds)
                    for (const Cell2& al : m.two_cells(m.comp1(x1, c1.f), m.comp1(x2, c2.f)))
                        out.push_back(TwoMorphism{c1, c2, al, x1, x2, x3, d1, d2});
        }
    }
    return out;
}

HomCategory hom_category(const TwoCatModel& m, const Obj& a, const Obj& b, int apex_bound, int ext_bound,
                         int bound) {
    HomCategory h;
    h.a = a;
    h.b = b;
    h.apex_bound = apex_bound;
    h.ext_bound = ext_bound;
    h.objects = enumerate_cospans(m, a, b, apex_bound);
    const int n = static_cast<int>(h.objects.size());
    const auto classify = [&](const std::vector<TwoMorphism>& reps, const TwoMorphism& t) {
        for (std::size_t c = 0; c < reps.size(); ++c) {
            const EquivalenceResult r = are_equivalent(m, reps[c], t, bound);
            if (r.verdict == Verdict::equivalent) return static_cast<int>(c);
            if (r.verdict == Verdict::undetermined) ++h.undetermined;
        }
        return -1;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            HomCategory::Hom hom;
            hom.src = i;
            hom.tgt = j;
            hom.morphisms = enumerate_two_morphisms(m, h.objects[i], h.objects[j], ext_bound);
            for (const TwoMorphism& t : hom.morphisms) {
                int c = classify(hom.classes, t);
                if (c < 0) {
                    c = static_cast<int>(hom.classes.size());
                    hom.classes.push_back(t);
                }
                hom.cls.push_back(c);
            }
            h.homs.push_back(std::move(hom));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const auto& first = h.hom(i, j).classes;
                const auto& second = h.hom(j, k).classes;
                for (std::size_t p = 0; p < first.size(); ++p)
                    for (std::size_t q = 0; q < second.size(); ++q) {
                        HomCategory::Composite c;
                        c.i = i;
                        c.j = j;
                        c.k = k;
                        c.first = static_cast<int>(p);
                        c.second = static_cast<int>(q);
                        c.result = classify(h.hom(i, k).classes, vcompose(m, second[q], first[p], bound));
                        h.composition.push_back(c);
                    }
            }
    return h;
}

}  // namespace lax
