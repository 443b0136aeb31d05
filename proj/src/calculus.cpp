#include "lax/calculus.hpp"

#include <map>

namespace lax {

namespace {

bool is_two_cell(const TwoCatModel& m, const Cell2& a) {
    for (const Cell2& c : m.two_cells(a.src, a.tgt))
        if (m.eq2(c, a)) return true;
    return false;
}

// Identity conventions first, then the model's witness provider.
Square complete_square(const TwoCatModel& m, const Cell1& r, const Cell1& g, int bound) {
    if (m.is_identity(r) || m.is_identity(g)) return m.canonical_square(r, g);
    return m.square_witness(r, g, bound);
}

}  // namespace

Diagnosis validate_square(const TwoCatModel& m, const Square& q) {
    if (q.top.dom != q.left.dom || q.left.cod != q.bottom.dom || q.top.cod != q.right.dom ||
        q.right.cod != q.bottom.cod)
        return Diagnosis::fail("boundary mismatch");
    if (q.delta.src != m.comp1(q.bottom, q.left) || q.delta.tgt != m.comp1(q.right, q.top))
        return Diagnosis::fail("delta has the wrong boundary");
    if (!is_two_cell(m, q.delta)) return Diagnosis::fail("delta is not a 2-cell of the model");
    if (!m.is_invertible(q.delta)) return Diagnosis::fail("delta not invertible");
    if (!m.sigma_object(q.top)) return Diagnosis::fail("top edge not in Sigma");
    if (!m.sigma_object(q.bottom)) return Diagnosis::fail("bottom edge not in Sigma");
    if (!m.sigma_morphism(q)) return Diagnosis::fail("Sigma-membership");
    return Diagnosis::pass();
}

void require_square(const TwoCatModel& m, const Square& q, const std::string& context) {
    const Diagnosis d = validate_square(m, q);
    if (!d) throw PreconditionError(context + ": " + d.failure);
}

Square vcompose_squares(const TwoCatModel& m, const Square& q2, const Square& q1) {
    if (q1.bottom != q2.top) throw BoundaryError("vcompose_squares: shared edge differs");
    Square out;
    out.top = q1.top;
    out.bottom = q2.bottom;
    out.left = m.comp1(q2.left, q1.left);
    out.right = m.comp1(q2.right, q1.right);
    out.delta = m.vcomp2(m.lwhisker(q2.right, q1.delta), m.rwhisker(q2.delta, q1.left));
    return out;
}

Square hcompose_squares(const TwoCatModel& m, const Square& q1, const Square& q3) {
    if (q1.right != q3.left) throw BoundaryError("hcompose_squares: shared edge differs");
    Square out;
    out.top = m.comp1(q3.top, q1.top);
    out.bottom = m.comp1(q3.bottom, q1.bottom);
    out.left = q1.left;
    out.right = q3.right;
    out.delta = m.vcomp2(m.rwhisker(q3.delta, q1.top), m.lwhisker(q3.bottom, q1.delta));
    return out;
}

Square identity_axiom_square(const TwoCatModel& m, const Cell1& s) {
    const Cell1 one = m.id1(s.dom);
    return Square{one, one, s, s, m.id2(s)};
}

Square identity_square(const TwoCatModel& m, const Cell1& r) {
    return Square{r, m.id1(r.dom), m.id1(r.cod), r, m.id2(r)};
}

Square extension_square(const TwoCatModel& m, const Cell1& s, const Cell1& d) {
    const Cell1 ds = m.comp1(d, s);
    return Square{s, m.id1(s.dom), d, ds, m.id2(ds)};
}

Square vertical_repletion_square(const TwoCatModel& m, const Cell2& delta) {
    const Cell1& r = delta.src;
    const Cell1& s = delta.tgt;
    return Square{s, m.id1(s.dom), m.id1(s.cod), r, delta};
}

Square horizontal_repletion_square(const TwoCatModel& m, const Cell2& gamma) {
    const Cell1& f = gamma.src;
    return Square{m.id1(f.dom), f, gamma.tgt, m.id1(f.cod), gamma};
}

Square rule2_square(const TwoCatModel& m, const Cell1& r, const Cell1& s) {
    if (!m.sigma_object(r) || !m.sigma_object(s)) throw PreconditionError("rule 2: legs not in Sigma");
    return hcompose_squares(m, identity_square(m, r), identity_axiom_square(m, s));
}

Rule3Squares rule2_3_derive(const TwoCatModel& m, const Square& q, const Cell1& s) {
    if (q.left != s) throw PreconditionError("rule 3: left edge differs from s");
    if (!m.sigma_object(s)) throw PreconditionError("rule 3: s is not in Sigma");
    require_square(m, q, "rule 3 hypothesis");
    return Rule3Squares{hcompose_squares(m, identity_axiom_square(m, s), q),
                        rule2_square(m, s, q.bottom)};
}

Rule4aBundle rule4a(const TwoCatModel& m, const Square& qa, const Square& qb, const Cell2& alpha,
                    const Cell2& beta, int bound) {
    if (qa.top != qb.top || qa.left != qb.left || qa.bottom != qb.bottom)
        throw PreconditionError("rule 4a: squares do not share top, left and bottom");
    if (alpha.src != qa.right || alpha.tgt != qb.right || beta.src != qb.right || beta.tgt != qa.right)
        throw BoundaryError("rule 4a: 2-cells do not match the right edges");
    const Cell1& s = qa.bottom;
    const Cell1 d1 = m.equification_witness(qa, m.vcomp2(beta, alpha), m.id2(qa.right), bound);
    const Square qb1 = vcompose_squares(m, extension_square(m, s, d1), qb);
    const Cell1 d1b = m.comp1(d1, qb.right);
    const Cell1 d2 =
        m.equification_witness(qb1, m.lwhisker(d1, m.vcomp2(alpha, beta)), m.id2(d1b), bound);
    const Cell1 d = m.comp1(d2, d1);
    Rule4aBundle out{d, extension_square(m, s, d)};
    require_square(m, out.ext, "rule 4a output");
    return out;
}

Rule4aBundle rule4a(const TwoCatModel& m, const Square& qa, const Cell2& alpha, const Cell2& beta,
                    int bound) {
    Square qb{qa.top, qa.left, alpha.tgt, qa.bottom,
              m.vcomp2(m.rwhisker(alpha, qa.top), qa.delta)};
    require_square(m, qb, "rule 4a transported square");
    return rule4a(m, qa, qb, alpha, beta, bound);
}

Rule4bBundle rule4b(const TwoCatModel& m, const Square& qd, const Square& qe, int bound) {
    if (qd.top != qe.top || qd.left != qe.left || qd.bottom != qe.bottom)
        throw PreconditionError("rule 4b: squares do not share top, left and bottom");
    const Cell1& s = qd.bottom;
    const Cell1& a = qd.right;
    const Cell1& b = qe.right;
    if (qd == qe) {
        Rule4bBundle same{m.id1(a.cod), m.id2(a), extension_square(m, s, m.id1(a.cod))};
        return same;
    }
    const Cell2 mu1 = m.vcomp2(qe.delta, m.inv(qd.delta));
    const EquiInsertion e1 = m.equi_insertion_witness(qd, b, mu1, bound);
    const Cell1& d1 = e1.d;
    const Square qe1 = vcompose_squares(m, extension_square(m, s, d1), qe);
    const Cell2 mu2 = m.vcomp2(m.lwhisker(d1, qd.delta), m.lwhisker(d1, m.inv(qe.delta)));
    const EquiInsertion e2 = m.equi_insertion_witness(qe1, m.comp1(d1, a), mu2, bound);
    const Cell1& d2 = e2.d;
    const Cell1 d21 = m.comp1(d2, d1);
    const Square qa2 = vcompose_squares(m, extension_square(m, s, d21), qd);
    const Square qb2 = vcompose_squares(m, extension_square(m, s, d21), qe);
    const Rule4aBundle r = rule4a(m, qa2, qb2, m.lwhisker(d2, e1.alpha_prime), e2.alpha_prime, bound);
    const Cell1 d = m.comp1(r.d, d21);
    Rule4bBundle out{d, m.lwhisker(m.comp1(r.d, d2), e1.alpha_prime), extension_square(m, s, d)};
    require_square(m, out.ext, "rule 4b output");
    return out;
}

Rule4Bundle rule4_prime(const TwoCatModel& m, const Square& qd, const Square& qe, int bound) {
    if (qd.top != qe.top || qd.left != qe.left)
        throw PreconditionError("rule 4': squares do not share top and left edges");
    const Cell1& ax = qd.bottom;
    const Cell1& ay = qe.bottom;
    if (qd == qe) {
        const Cell1 one = m.id1(ax.cod);
        return Rule4Bundle{one, one, ax, {m.id2(qd.right)}, extension_square(m, ax, one),
                           extension_square(m, ay, one)};
    }
    const Square sq = complete_square(m, ax, ay, bound);
    const Rule3Squares r3 = rule2_3_derive(m, sq, ay);
    const Square p = vcompose_squares(m, r3.left_identity, qd);
    const Square q = vcompose_squares(m, r3.sigma_id, qe);
    const Rule4bBundle b = rule4b(m, p, q, bound);
    const Square ext = extension_square(m, p.bottom, b.d);
    Rule4Bundle out;
    out.dx = m.comp1(b.d, sq.right);
    out.dy = m.comp1(b.d, sq.bottom);
    out.u = m.comp1(b.d, p.bottom);
    out.gammas = {b.gamma};
    out.phi = vcompose_squares(m, ext, r3.left_identity);
    out.chi = vcompose_squares(m, ext, r3.sigma_id);
    return out;
}

Rule4Bundle rule4(const TwoCatModel& m, const Square& qd1, const Square& qe1, const Square& qd2,
                  const Square& qe2, int bound) {
    if (qd1.bottom != qd2.bottom || qe1.bottom != qe2.bottom)
        throw PreconditionError("rule 4: pairs do not share their bottom edges");
    if (qd2.top != qe2.top || qd2.left != qe2.left)
        throw PreconditionError("rule 4: second pair does not share top and left edges");
    Rule4Bundle first = rule4_prime(m, qd1, qe1, bound);
    const Square p2 = vcompose_squares(m, first.phi, qd2);
    const Square q2 = vcompose_squares(m, first.chi, qe2);
    const Rule4bBundle b = rule4b(m, p2, q2, bound);
    const Square ext = extension_square(m, first.u, b.d);
    Rule4Bundle out;
    out.dx = m.comp1(b.d, first.dx);
    out.dy = m.comp1(b.d, first.dy);
    out.u = m.comp1(b.d, first.u);
    out.gammas = {m.lwhisker(b.d, first.gammas[0]), b.gamma};
    out.phi = vcompose_squares(m, ext, first.phi);
    out.chi = vcompose_squares(m, ext, first.chi);
    return out;
}

Diagnosis verify_rule4(const TwoCatModel& m, const std::vector<std::pair<Square, Square>>& pairs,
                       const Rule4Bundle& b) {
    if (b.gammas.size() != pairs.size()) return Diagnosis::fail("one gamma per pair expected");
    for (const Square* q : {&b.phi, &b.chi}) {
        const Diagnosis d = validate_square(m, *q);
        if (!d) return Diagnosis::fail("extension square: " + d.failure);
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Square x = vcompose_squares(m, b.phi, pairs[i].first);
        const Square y = vcompose_squares(m, b.chi, pairs[i].second);
        const Cell2& g = b.gammas[i];
        if (g.src != x.right || g.tgt != y.right) return Diagnosis::fail("gamma has the wrong boundary");
        if (!m.is_invertible(g)) return Diagnosis::fail("gamma not invertible");
        if (!m.eq2(m.vcomp2(m.rwhisker(g, x.top), x.delta), y.delta))
            return Diagnosis::fail("pasting equality fails for pair " + std::to_string(i + 1));
    }
    return Diagnosis::pass();
}

Rule5Bundle rule5_double_square(const TwoCatModel& m, const Cell1& v, const Cell1& f, const Cell1& g,
                                int bound) {
    if (f.dom != v.dom || g.dom != v.dom || f.cod != g.cod)
        throw BoundaryError("rule 5: spans do not share their legs");
    if (!m.sigma_object(v)) throw PreconditionError("rule 5: v is not in Sigma");
    const Square s1 = complete_square(m, v, f, bound);
    if (f == g) return Rule5Bundle{s1.bottom, s1, s1};
    const Square s2 = complete_square(m, v, g, bound);
    const Square z = complete_square(m, s1.bottom, s2.bottom, bound);
    const Rule3Squares r3 = rule2_3_derive(m, z, s2.bottom);
    Rule5Bundle out;
    out.sq_f = vcompose_squares(m, r3.left_identity, s1);
    out.sq_g = vcompose_squares(m, r3.sigma_id, s2);
    out.w = out.sq_f.bottom;
    return out;
}

Rule6Bundle rule6_insert(const TwoCatModel& m, const Cell1& v, const Cell2& beta, int bound) {
    const Rule5Bundle r5 = rule5_double_square(m, v, beta.src, beta.tgt, bound);
    if (beta.src == beta.tgt && m.eq2(beta, m.id2(beta.src)))
        return Rule6Bundle{r5.w, r5.sq_f, r5.sq_g, m.id2(r5.sq_f.right)};
    const Cell2 mu = m.vcomp2(r5.sq_g.delta,
                              m.vcomp2(m.lwhisker(r5.w, beta), m.inv(r5.sq_f.delta)));
    const EquiInsertion e = m.equi_insertion_witness(r5.sq_f, r5.sq_g.right, mu, bound);
    const Square ext = extension_square(m, r5.w, e.d);
    Rule6Bundle out;
    out.sq_f = vcompose_squares(m, ext, r5.sq_f);
    out.sq_g = vcompose_squares(m, ext, r5.sq_g);
    out.w = out.sq_f.bottom;
    out.beta_prime = e.alpha_prime;
    return out;
}

Diagnosis verify_rule6(const TwoCatModel& m, const Cell1& v, const Cell2& beta, const Rule6Bundle& b) {
    for (const Square* q : {&b.sq_f, &b.sq_g}) {
        const Diagnosis d = validate_square(m, *q);
        if (!d) return Diagnosis::fail("rule 6 square: " + d.failure);
        if (q->top != v) return Diagnosis::fail("rule 6 square has the wrong top edge");
    }
    if (b.sq_f.left != beta.src || b.sq_g.left != beta.tgt || b.sq_f.bottom != b.w ||
        b.sq_g.bottom != b.w)
        return Diagnosis::fail("rule 6 squares have the wrong edges");
    if (b.beta_prime.src != b.sq_f.right || b.beta_prime.tgt != b.sq_g.right)
        return Diagnosis::fail("beta' has the wrong boundary");
    const Cell2 lhs = m.vcomp2(m.rwhisker(b.beta_prime, v), b.sq_f.delta);
    const Cell2 rhs = m.vcomp2(b.sq_g.delta, m.lwhisker(b.w, beta));
    if (!m.eq2(lhs, rhs)) return Diagnosis::fail("rule 6 pasting equality fails");
    return Diagnosis::pass();
}

std::vector<Square> enumerate_sigma_squares(const TwoCatModel& m) {
    const std::vector<Obj> objs = m.objects();
    std::vector<Square> out;
    for (const Obj& x : objs)
        for (const Obj& y : objs) {
            const auto tops = m.sigma_objects(x, y);
            if (tops.empty()) continue;
            for (const Obj& z : objs) {
                const auto lefts = m.one_cells(x, z);
                if (lefts.empty()) continue;
                for (const Obj& w : objs) {
                    const auto bottoms = m.sigma_objects(z, w);
                    if (bottoms.empty()) continue;
                    const auto rights = m.one_cells(y, w);
                    for (const Cell1& r : tops)
                        for (const Cell1& s : bottoms)
                            for (const Cell1& u : lefts) {
                                const Cell1 su = m.comp1(s, u);
                                for (const Cell1& v : rights)
                                    for (const Cell2& d : m.two_cells(su, m.comp1(v, r))) {
                                        Square q{r, u, v, s, d};
                                        if (m.is_invertible(d) && m.sigma_morphism(q))
                                            out.push_back(std::move(q));
                                    }
                            }
                }
            }
        }
    return out;
}

bool AxiomReport::passed() const {
    for (const auto& a : axioms)
        if (!a.passed()) return false;
    return true;
}

const AxiomResult& AxiomReport::get(const std::string& name) const {
    for (const auto& a : axioms)
        if (a.axiom == name) return a;
    throw std::out_of_range("no axiom named " + name);
}

namespace {

void record_failure(AxiomResult& r, const std::string& what) {
    ++r.failures;
    if (r.samples.size() < 5) r.samples.push_back(what);
}

void check_instance(AxiomResult& r, const TwoCatModel& m, const Square& q, const std::string& what) {
    ++r.instances;
    const Diagnosis d = validate_square(m, q);
    if (!d) record_failure(r, what + ": " + d.failure);
}

}  // namespace

AxiomReport check_axioms(const TwoCatModel& m, int bound) {
    const std::vector<Obj> objs = m.objects();
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Cell1>> hom;
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j) hom[{i, j}] = m.one_cells(objs[i], objs[j]);
    std::vector<Cell1> sigma;
    for (const auto& [key, cells] : hom)
        for (const Cell1& c : cells)
            if (m.sigma_object(c)) sigma.push_back(c);

    AxiomReport report;
    AxiomResult identity, vrep, hrep, comp, square, insertion, equification;
    identity.axiom = "identity";
    vrep.axiom = "vertical repletion";
    hrep.axiom = "horizontal repletion";
    comp.axiom = "composition";
    square.axiom = "square";
    insertion.axiom = "equi-insertion";
    equification.axiom = "equification";

    for (const Obj& a : objs) {
        ++identity.instances;
        if (!m.sigma_object(m.id1(a))) record_failure(identity, "identity on " + m.describe(a));
    }
    for (const Cell1& s : sigma) check_instance(identity, m, identity_axiom_square(m, s), m.describe(s));

    for (const Cell1& r : sigma)
        for (const Cell1& s : m.one_cells(r.dom, r.cod))
            for (const Cell2& d : m.two_cells(r, s)) {
                if (!m.is_invertible(d)) continue;
                check_instance(vrep, m, vertical_repletion_square(m, d), m.describe(s));
            }
    for (const auto& [key, cells] : hom)
        for (const Cell1& f : cells)
            for (const Cell1& g : cells)
                for (const Cell2& c : m.two_cells(f, g)) {
                    if (!m.is_invertible(c)) continue;
                    check_instance(hrep, m, horizontal_repletion_square(m, c), m.describe(f));
                }

    const std::vector<Square> squares = enumerate_sigma_squares(m);
    report.sigma_squares = squares.size();
    std::map<Cell1, std::vector<std::size_t>> by_left;
    for (std::size_t i = 0; i < squares.size(); ++i) by_left[squares[i].left].push_back(i);
    for (const Square& q1 : squares) {
        auto it = by_left.find(q1.right);
        if (it == by_left.end()) continue;
        for (std::size_t j : it->second)
            check_instance(comp, m, hcompose_squares(m, q1, squares[j]), "pasting");
    }

    for (const Cell1& s : sigma)
        for (const Obj& z : objs)
            for (const Cell1& f : m.one_cells(s.dom, z)) {
                ++square.instances;
                try {
                    const Square q = m.square_witness(s, f, bound);
                    const Diagnosis d = validate_square(m, q);
                    if (!d) record_failure(square, m.describe(s) + ", " + m.describe(f) + ": " + d.failure);
                    else if (q.top != s || q.left != f)
                        record_failure(square, "witness does not complete the span");
                } catch (const BoundExhausted& e) {
                    ++square.exhausted;
                    if (square.samples.size() < 5) square.samples.push_back(e.what());
                }
            }

    for (const Square& q : squares) {
        const Cell1& r = q.top;
        const Cell1& fp = q.right;
        for (const Cell1& g : m.one_cells(fp.dom, fp.cod)) {
            const Cell1 gr = m.comp1(g, r);
            const Cell1 fpr = m.comp1(fp, r);
            for (const Cell2& alpha : m.two_cells(fpr, gr)) {
                ++insertion.instances;
                try {
                    const EquiInsertion e = m.equi_insertion_witness(q, g, alpha, bound);
                    const Diagnosis d = validate_square(m, extension_square(m, q.bottom, e.d));
                    if (!d) {
                        record_failure(insertion, "extension square: " + d.failure);
                    } else if (e.alpha_prime.src != m.comp1(e.d, fp) ||
                               e.alpha_prime.tgt != m.comp1(e.d, g) ||
                               !m.eq2(m.lwhisker(e.d, alpha), m.rwhisker(e.alpha_prime, r))) {
                        record_failure(insertion, "d alpha differs from alpha' r");
                    }
                } catch (const BoundExhausted& ex) {
                    ++insertion.exhausted;
                    if (insertion.samples.size() < 5) insertion.samples.push_back(ex.what());
                }
            }
            const auto cells = m.two_cells(fp, g);
            for (const Cell2& a : cells)
                for (const Cell2& b : cells) {
                    if (!m.eq2(m.rwhisker(a, r), m.rwhisker(b, r))) continue;
                    ++equification.instances;
                    try {
                        const Cell1 d = m.equification_witness(q, a, b, bound);
                        const Diagnosis diag = validate_square(m, extension_square(m, q.bottom, d));
                        if (!diag) record_failure(equification, "extension square: " + diag.failure);
                        else if (!m.eq2(m.lwhisker(d, a), m.lwhisker(d, b)))
                            record_failure(equification, "d a differs from d b");
                    } catch (const BoundExhausted& ex) {
                        ++equification.exhausted;
                        if (equification.samples.size() < 5) equification.samples.push_back(ex.what());
                    }
                }
        }
    }

    report.axioms = {identity, vrep, hrep, comp, square, insertion, equification};
    return report;
}

}  // namespace lax
