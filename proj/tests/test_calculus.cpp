#include <catch_amalgamated.hpp>

#include <random>

#include "lax/calculus.hpp"
#include "lax/category.hpp"
#include "lax/pos.hpp"

using namespace lax;

namespace {

Cell1 pmap(const FinitePoset& a, const FinitePoset& b, std::vector<int> m) {
    return MonotoneMap{a, b, std::move(m)}.cell();
}

Square thin_square(const TwoCatModel& m, const Cell1& top, const Cell1& left, const Cell1& right,
                   const Cell1& bottom) {
    return Square{top, left, right, bottom, Cell2{m.comp1(bottom, left), m.comp1(right, top), {}}};
}

TrivialModel arrow_model() {
    return TrivialModel(CategoryBuilder()
                            .object("A")
                            .object("B")
                            .morphism("s", "A", "B")
                            .sigma_identities()
                            .sigma("s")
                            .build());
}

}  // namespace

TEST_CASE("validate_square examples", "[calculus]") {
    PosModel m;
    const FinitePoset one = chain(1);
    const FinitePoset c2 = chain(2);
    const Cell1 s = pmap(one, c2, {0});
    CHECK(validate_square(m, identity_axiom_square(m, s)).ok);

    const Cell1 m1 = pmap(one, c2, {1});
    const Cell1 idc = m.id1(c2.obj());
    const Diagnosis bad = validate_square(m, thin_square(m, m1, m1, idc, idc));
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure == "Sigma-membership");

    const Cell1 up = pmap(one, c2, {1});
    const Cell1 idone = m.id1(one.obj());
    // bottom . left = s < up = right . top: delta exists but is not invertible.
    const Square strict{idone, idone, up, s, Cell2{s, up, {}}};
    const Diagnosis d = validate_square(m, strict);
    CHECK_FALSE(d.ok);
    CHECK(d.failure == "delta not invertible");
}

TEST_CASE("square pasting examples", "[calculus]") {
    PosModel m;
    const FinitePoset one = chain(1);
    const FinitePoset c2 = chain(2);
    const FinitePoset c3 = chain(3);
    const Cell1 r = pmap(one, c2, {0});
    const Cell1 s = pmap(c2, c3, {0, 1});
    CHECK(vcompose_squares(m, identity_square(m, r), identity_square(m, r)) == identity_square(m, r));
    CHECK(hcompose_squares(m, identity_square(m, r), identity_square(m, s)) ==
          identity_square(m, m.comp1(s, r)));

    const Square q = rule2_square(m, r, s);
    CHECK(q.top == r);
    CHECK(q.left == m.id1(one.obj()));
    CHECK(q.right == s);
    CHECK(q.bottom == m.comp1(s, r));
    CHECK(validate_square(m, q).ok);

    CHECK_THROWS_AS(vcompose_squares(m, identity_square(m, s), identity_square(m, r)), BoundaryError);
}

TEST_CASE("composition witness is recomputed exactly", "[calculus][property]") {
    const TrivialModel t(CategoryBuilder()
                             .object("A")
                             .object("B")
                             .object("C")
                             .morphism("u", "A", "B")
                             .morphism("v", "B", "C")
                             .morphism("vu", "A", "C")
                             .composite("v", "u", "vu")
                             .sigma_identities()
                             .build());
    const Square q1 = identity_square(t, t.arrow("u"));
    const Square q2 = identity_square(t, t.arrow("u"));
    const Square q = vcompose_squares(t, q2, q1);
    CHECK(q.delta == t.vcomp2(t.lwhisker(q2.right, q1.delta), t.rwhisker(q2.delta, q1.left)));
}

TEST_CASE("rule2_3_derive examples", "[calculus]") {
    PosModel m;
    const FinitePoset one = chain(1);
    const FinitePoset c2 = chain(2);
    const FinitePoset c3 = chain(3);
    const Cell1 s = pmap(one, c2, {1});
    const Cell1 t = pmap(c2, c3, {0, 2});
    const Cell1 r = m.id1(one.obj());
    const Square q = m.square_witness(r, s, -1);
    const Rule3Squares out = rule2_3_derive(m, q, s);
    CHECK(validate_square(m, out.left_identity).ok);
    CHECK(validate_square(m, out.sigma_id).ok);

    // A Rule 3 hypothesis with t = id collapses to the Rule 2 square.
    const Square hyp = horizontal_repletion_square(m, m.id2(s));
    REQUIRE(validate_square(m, hyp).ok);
    const Rule3Squares r3 = rule2_3_derive(m, hyp, s);
    CHECK(r3.sigma_id == rule2_square(m, s, m.id1(c2.obj())));

    const Square chains = m.square_witness(t, t, -1);
    const Rule3Squares both = rule2_3_derive(m, chains, t);
    CHECK(validate_square(m, both.left_identity).ok);
    CHECK(validate_square(m, both.sigma_id).ok);
    CHECK(both.left_identity.bottom == m.comp1(chains.bottom, t));

    const Cell1 collapse = pmap(c2, one, {0, 0});
    const Square nonsigma = thin_square(m, m.id1(c2.obj()), collapse, collapse, m.id1(one.obj()));
    CHECK_THROWS_AS(rule2_3_derive(m, nonsigma, collapse), PreconditionError);
}

TEST_CASE("check_axioms passes on posets with at most three elements", "[calculus][axioms]") {
    PosModel m(3);
    const AxiomReport report = check_axioms(m, -1);
    CHECK(report.sigma_squares > 1000);
    for (const auto& a : report.axioms) {
        INFO(a.axiom << " instances=" << a.instances << " failures=" << a.failures
                     << " exhausted=" << a.exhausted);
        for (const auto& s : a.samples) INFO(s);
        CHECK(a.passed());
        CHECK(a.instances > 0);
    }
}

TEST_CASE("check_axioms on trivial-2-cell models", "[calculus][axioms]") {
    const TrivialModel m = arrow_model();
    CHECK(check_axioms(m, -1).passed());

    FiniteCategorySpec spec = CategoryBuilder().object("A").object("B").morphism("s", "A", "B").build();
    spec.sigma[spec.morphism_index("s")] = true;
    spec.sigma[spec.morphism_index("id_A")] = true;
    const TrivialModel missing(spec);
    const AxiomReport r = check_axioms(missing, -1);
    CHECK_FALSE(r.get("identity").passed());
}

namespace {

struct Span {
    Cell1 r;
    Cell1 b;
};

// Spans (r, b) with r an embedding, over posets with at most max_n elements.
std::vector<Span> embedding_spans(int max_n) {
    std::vector<Span> out;
    const auto posets = unlabeled_posets(max_n);
    for (const auto& x : posets)
        for (const auto& y : posets)
            for (const auto& t : monotone_maps(x, y)) {
                if (!pos_is_embedding(MonotoneMap{x, y, t})) continue;
                for (const auto& z : posets)
                    for (const auto& f : monotone_maps(x, z)) out.push_back({pmap(x, y, t), pmap(x, z, f)});
            }
    return out;
}

}  // namespace

TEST_CASE("rule4b on identical squares returns the identity extension", "[calculus][rule4]") {
    PosModel m;
    const FinitePoset one = chain(1);
    const FinitePoset c2 = chain(2);
    const Square q = m.square_witness(pmap(one, c2, {0}), pmap(one, one, {0}), -1);
    const Rule4bBundle b = rule4b(m, q, q, -1);
    CHECK(m.is_identity(b.d));
    CHECK(m.eq2(b.gamma, m.id2(q.right)));
}

TEST_CASE("rule4_prime reconciles distinct completions of a span", "[calculus][rule4][property]") {
    PosModel m;
    std::size_t distinct = 0;
    for (const Span& s : embedding_spans(2)) {
        const Square qd = pos_witness_square(s.r, s.b, -1);
        const Square qe = pos_search_square(s.r, s.b, 4);
        distinct += !(qd == qe);
        const Rule4Bundle bundle = rule4_prime(m, qd, qe, -1);
        INFO(m.describe(s.r) << " / " << m.describe(s.b));
        CHECK(validate_square(m, bundle.phi).ok);
        CHECK(validate_square(m, bundle.chi).ok);
        const Diagnosis d = verify_rule4(m, {{qd, qe}}, bundle);
        CHECK(d.failure == "");
    }
    CHECK(distinct > 0);
}

TEST_CASE("rule4 handles two pairs with shared bottoms", "[calculus][rule4]") {
    PosModel m;
    const FinitePoset one = chain(1);
    const FinitePoset c2 = chain(2);
    const Cell1 r = pmap(one, c2, {0});
    const Cell1 s = pmap(one, c2, {1});
    const Cell1 id1 = m.id1(one.obj());
    // Pair 1 completes (r, 1), pair 2 completes (s, 1); both share bottom 1 -> W.
    const Square qd1 = pos_witness_square(r, id1, -1);
    const Square qe1 = pos_search_square(r, id1, 4);
    REQUIRE(validate_square(m, qd1).ok);
    REQUIRE(validate_square(m, qe1).ok);
    const Rule4Bundle b1 = rule4(m, qd1, qe1, qd1, qe1, -1);
    CHECK(verify_rule4(m, {{qd1, qe1}, {qd1, qe1}}, b1).ok);
    CHECK(b1.gammas.size() == 2);
    const Square qd2 = pos_witness_square(s, id1, -1);
    CHECK(validate_square(m, qd2).ok);
}

TEST_CASE("rule5 double squares share their bottom", "[calculus][rule5]") {
    PosModel m;
    const FinitePoset one = chain(1);
    const FinitePoset c2 = chain(2);
    const FinitePoset c3 = chain(3);
    const Cell1 v = pmap(one, c2, {1});
    const Cell1 f = pmap(one, c3, {0});
    const Rule5Bundle same = rule5_double_square(m, v, f, f, -1);
    CHECK(same.sq_f == same.sq_g);

    std::size_t n = 0;
    for (const Span& s : embedding_spans(2))
        for (const Cell1& g : m.one_cells(s.b.dom, s.b.cod)) {
            const Rule5Bundle b = rule5_double_square(m, s.r, s.b, g, -1);
            CHECK(validate_square(m, b.sq_f).ok);
            CHECK(validate_square(m, b.sq_g).ok);
            CHECK(b.sq_f.bottom == b.w);
            CHECK(b.sq_g.bottom == b.w);
            CHECK(b.sq_f.top == s.r);
            CHECK(b.sq_g.left == g);
            ++n;
        }
    CHECK(n > 20);
}

TEST_CASE("rule6 transports 2-cells along a Sigma-leg", "[calculus][rule6]") {
    PosModel m;
    const FinitePoset one = chain(1);
    const FinitePoset c2 = chain(2);
    const FinitePoset c3 = chain(3);
    const Cell1 v = pmap(one, c2, {0});
    const Cell1 f = pmap(one, c3, {1});
    const Rule6Bundle id = rule6_insert(m, v, m.id2(f), -1);
    CHECK(id.beta_prime.src == id.beta_prime.tgt);
    CHECK(m.eq2(id.beta_prime, m.id2(id.beta_prime.src)));

    std::size_t n = 0;
    for (const Span& s : embedding_spans(3)) {
        if (pos_size(s.r.cod) > 2) continue;
        for (const Cell1& g : m.one_cells(s.b.dom, s.b.cod)) {
            if (!m.leq(s.b, g)) continue;
            const Cell2 beta = m.cell(s.b, g);
            const Rule6Bundle b = rule6_insert(m, s.r, beta, -1);
            INFO(m.describe(s.r) << " ; " << m.describe(s.b) << " <= " << m.describe(g));
            CHECK(verify_rule6(m, s.r, beta, b).ok);
            ++n;
        }
    }
    CHECK(n > 50);
}

TEST_CASE("pasted grids of Sigma-squares stay in Sigma", "[calculus][property]") {
    PosModel m;
    std::mt19937 rng(7);
    const auto spans = embedding_spans(2);
    std::uniform_int_distribution<std::size_t> pick(0, spans.size() - 1);
    std::size_t grids = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Span s = spans[pick(rng)];
        // Two columns: q11 | q12 over the top row, q21 | q22 below.
        const Square q11 = m.square_witness(s.r, s.b, -1);
        const Cell1 r2 = m.id1(s.r.cod);
        const Square q12 = m.square_witness(r2, q11.right, -1);
        const Square q21 = m.square_witness(q11.bottom, m.id1(q11.bottom.dom), -1);
        const Square q22 = m.square_witness(q12.bottom, q21.right, -1);
        const Square top = hcompose_squares(m, q11, q12);
        const Square bottom = hcompose_squares(m, q21, q22);
        const Square both = vcompose_squares(m, bottom, top);
        CHECK(validate_square(m, top).ok);
        CHECK(validate_square(m, bottom).ok);
        CHECK(validate_square(m, both).ok);
        CHECK(validate_square(m, vcompose_squares(m, q21, q11)).ok);
        // Interchange of pasting orders.
        const Square cols = hcompose_squares(m, vcompose_squares(m, q21, q11), vcompose_squares(m, q22, q12));
        CHECK(cols == both);
        ++grids;
    }
    CHECK(grids == 200);
}
