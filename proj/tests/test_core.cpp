#include <catch_amalgamated.hpp>

#include "lax/category.hpp"
#include "lax/pos.hpp"

using namespace lax;

namespace {

Cell1 pmap(const FinitePoset& a, const FinitePoset& b, std::vector<int> m) {
    return MonotoneMap{a, b, std::move(m)}.cell();
}

TrivialModel span_category() {
    return TrivialModel(CategoryBuilder()
                            .object("A")
                            .object("B")
                            .object("C")
                            .morphism("f", "A", "B")
                            .morphism("g", "B", "C")
                            .morphism("h", "A", "C")
                            .composite("g", "f", "h")
                            .sigma_identities()
                            .build());
}

}  // namespace

TEST_CASE("compose_one_cells examples", "[core]") {
    PosModel m;
    const FinitePoset c2 = chain(2);
    const FinitePoset one = chain(1);
    const Cell1 f = pmap(one, c2, {0});
    CHECK(m.comp1(m.id1(c2.obj()), f) == f);

    const Cell1 up = pmap(c2, c2, {1, 1});
    const Cell1 const0 = pmap(c2, c2, {0, 0});
    CHECK(m.comp1(up, const0) == pmap(c2, c2, {1, 1}));

    CHECK_THROWS_AS(m.comp1(f, f), BoundaryError);
}

TEST_CASE("vcomp_two_cells examples", "[core]") {
    PosModel m;
    const FinitePoset c3 = chain(3);
    const FinitePoset one = chain(1);
    const Cell1 f = pmap(one, c3, {0});
    const Cell1 g = pmap(one, c3, {1});
    const Cell1 h = pmap(one, c3, {2});
    CHECK(m.vcomp2(m.id2(f), m.id2(f)) == m.id2(f));
    const Cell2 fg = m.cell(f, g);
    const Cell2 gh = m.cell(g, h);
    const Cell2 fh = m.vcomp2(gh, fg);
    CHECK(fh.src == f);
    CHECK(fh.tgt == h);
    CHECK(m.eq2(fh, m.cell(f, h)));
    CHECK_THROWS_AS(m.vcomp2(fg, gh), BoundaryError);
}

TEST_CASE("whisker examples", "[core]") {
    PosModel m;
    const FinitePoset c2 = chain(2);
    const FinitePoset one = chain(1);
    const Cell1 f = pmap(one, c2, {0});
    const Cell1 g = pmap(one, c2, {1});
    const Cell2 a = m.cell(f, g);
    CHECK(m.whisker(m.id1(one.obj()), a, Side::right) == a);
    const Cell1 h = pmap(c2, c2, {0, 1});
    const Cell2 ha = m.whisker(h, a, Side::left);
    CHECK(ha.src == m.comp1(h, f));
    CHECK(ha.tgt == m.comp1(h, g));
    CHECK(m.leq(ha.src, ha.tgt));
    CHECK_THROWS_AS(m.whisker(f, a, Side::left), BoundaryError);
}

TEST_CASE("is_invertible examples", "[core]") {
    PosModel m;
    const FinitePoset c2 = chain(2);
    const FinitePoset one = chain(1);
    const Cell1 f = pmap(one, c2, {0});
    const Cell1 g = pmap(one, c2, {1});
    CHECK(m.is_invertible(m.id2(f)));
    CHECK_FALSE(m.is_invertible(m.cell(f, g)));
    CHECK(m.is_invertible(m.cell(f, f)));
    CHECK_THROWS_AS(m.cell(g, f), PreconditionError);
}

TEST_CASE("2-category laws hold exhaustively on posets with at most 2 elements", "[core][property]") {
    PosModel m(2);
    const auto objs = m.objects();
    std::size_t triples = 0;
    for (const Obj& a : objs)
        for (const Obj& b : objs)
            for (const Obj& c : objs)
                for (const Obj& d : objs)
                    for (const Cell1& f : m.one_cells(a, b)) {
                        CHECK(m.comp1(f, m.id1(a)) == f);
                        CHECK(m.comp1(m.id1(b), f) == f);
                        for (const Cell1& g : m.one_cells(b, c))
                            for (const Cell1& h : m.one_cells(c, d)) {
                                ++triples;
                                CHECK(m.comp1(h, m.comp1(g, f)) == m.comp1(m.comp1(h, g), f));
                            }
                    }
    CHECK(triples > 0);

    // Interchange: (a' . a) * (b' . b) = (a' * b') . (a * b).
    std::size_t interchanges = 0;
    for (const Obj& a : objs)
        for (const Obj& b : objs)
            for (const Obj& c : objs) {
                const auto fs = m.one_cells(a, b);
                const auto gs = m.one_cells(b, c);
                for (const Cell1& f1 : fs)
                    for (const Cell1& f2 : fs)
                        for (const Cell1& f3 : fs)
                            for (const Cell1& g1 : gs)
                                for (const Cell1& g2 : gs)
                                    for (const Cell1& g3 : gs) {
                                        if (!m.leq(f1, f2) || !m.leq(f2, f3) || !m.leq(g1, g2) ||
                                            !m.leq(g2, g3))
                                            continue;
                                        const Cell2 al = m.cell(g1, g2), al2 = m.cell(g2, g3);
                                        const Cell2 be = m.cell(f1, f2), be2 = m.cell(f2, f3);
                                        const Cell2 lhs = m.hcomp2(m.vcomp2(al2, al), m.vcomp2(be2, be));
                                        const Cell2 rhs =
                                            m.vcomp2(m.hcomp2(al2, be2), m.hcomp2(al, be));
                                        CHECK(m.eq2(lhs, rhs));
                                        ++interchanges;
                                    }
            }
    CHECK(interchanges > 0);
}

TEST_CASE("eq2 is an equivalence relation on enumerated 2-cells", "[core][property]") {
    PosModel m(2);
    const auto objs = m.objects();
    for (const Obj& a : objs)
        for (const Obj& b : objs) {
            const auto fs = m.one_cells(a, b);
            std::vector<Cell2> cells;
            for (const Cell1& f : fs)
                for (const Cell1& g : fs)
                    for (const Cell2& c : m.two_cells(f, g)) cells.push_back(c);
            for (const Cell2& x : cells) {
                CHECK(m.eq2(x, x));
                for (const Cell2& y : cells) {
                    CHECK(m.eq2(x, y) == m.eq2(y, x));
                    for (const Cell2& z : cells)
                        if (m.eq2(x, y) && m.eq2(y, z)) CHECK(m.eq2(x, z));
                }
            }
        }
}

TEST_CASE("trivial model composition follows the table", "[core]") {
    const TrivialModel m = span_category();
    const Cell1 f = m.arrow("f");
    const Cell1 g = m.arrow("g");
    CHECK(m.comp1(g, f) == m.arrow("h"));
    CHECK(m.comp1(m.id1(f.cod), f) == f);
    CHECK_THROWS_AS(m.comp1(f, g), BoundaryError);
    CHECK(m.two_cells(f, f).size() == 1);
    CHECK(m.is_invertible(m.id2(f)));
}
