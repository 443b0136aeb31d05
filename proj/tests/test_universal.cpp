#include <catch_amalgamated.hpp>

#include "lax/category.hpp"
#include "lax/pos.hpp"
#include "lax/universal.hpp"

using namespace lax;

namespace {

Cell1 pmap(const FinitePoset& a, const FinitePoset& b, std::vector<int> m) {
    return MonotoneMap{a, b, std::move(m)}.cell();
}

std::vector<int> compose_maps(const std::vector<int>& g, const std::vector<int>& f) {
    std::vector<int> out;
    for (int x : f) out.push_back(g[x]);
    return out;
}

// g is right adjoint to f iff f(a) <= b exactly when a <= g(b).
bool galois(const FinitePoset& a, const FinitePoset& b, const std::vector<int>& f, const std::vector<int>& g) {
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < b.n; ++y)
            if (b.leq(f[x], y) != a.leq(x, g[y])) return false;
    return true;
}

std::vector<std::vector<int>> oracle_right_adjoints(const FinitePoset& a, const FinitePoset& b,
                                                    const std::vector<int>& f) {
    std::vector<std::vector<int>> out;
    for (const auto& g : monotone_maps(b, a))
        if (galois(a, b, f, g)) out.push_back(g);
    return out;
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

void require_lari(const LocalizationLari& l) {
    for (const LawCheck* c : {&l.triangle_right, &l.triangle_left, &l.unit_invertible}) {
        INFO(c->law << ": " << c->detail);
        REQUIRE(c->passed);
        REQUIRE_FALSE(c->undetermined);
    }
    REQUIRE(l.passed());
}

}  // namespace

TEST_CASE("identity 1-cells are self-adjoint laris", "[universal]") {
    PosModel m;
    for (const Obj& a : m.objects()) {
        const Cell1 id = m.id1(a);
        const auto adj = find_right_adjoint(m, id, true);
        REQUIRE(adj);
        CHECK(adj->g == id);
        CHECK(adj->eta == m.id2(id));
        CHECK(adj->eps == m.id2(id));
        CHECK(is_lari(m, id));
    }
}

TEST_CASE("poset adjoint examples", "[universal]") {
    PosModel m;
    const FinitePoset one = chain(1);
    const FinitePoset c2 = chain(2);
    const Cell1 bottom = pmap(one, c2, {0});
    const auto adj = find_right_adjoint(m, bottom, true);
    REQUIRE(adj);
    CHECK(adj->g == pmap(c2, one, {0, 0}));
    CHECK(m.is_invertible(adj->eta));
    CHECK(is_lari(m, bottom));
    CHECK_FALSE(is_lari(m, pmap(one, c2, {1})));

    const Cell1 bang = pmap(c2, one, {0, 0});
    CHECK_FALSE(find_right_adjoint(m, bang, true));
    CHECK_FALSE(is_lari(m, bang));
    const auto plain = find_right_adjoint(m, bang, false);
    REQUIRE(plain);
    CHECK(plain->g == pmap(one, c2, {1}));
}

TEST_CASE("poset right adjoints are unique and match the Galois condition", "[universal][property]") {
    PosModel m;
    const auto posets = unlabeled_posets(3);
    std::size_t maps = 0;
    std::size_t with_adjoint = 0;
    std::size_t laris = 0;
    for (const auto& a : posets)
        for (const auto& b : posets)
            for (const auto& f : monotone_maps(a, b)) {
                ++maps;
                const auto oracle = oracle_right_adjoints(a, b, f);
                REQUIRE(oracle.size() <= 1);
                const Cell1 fc = pmap(a, b, f);
                const auto adj = find_right_adjoint(m, fc);
                REQUIRE(adj.has_value() == !oracle.empty());
                if (!adj) continue;
                ++with_adjoint;
                CHECK(adj->g == pmap(b, a, oracle.front()));
                const bool retract = compose_maps(oracle.front(), f) == MonotoneMap::from(m.id1(a.obj())).assignment;
                CHECK(is_lari(m, fc) == retract);
                laris += retract;
            }
    CHECK(maps > 200);
    CHECK(with_adjoint > 50);
    CHECK(laris > 20);
}

TEST_CASE("mate of an identity square on a lari", "[universal]") {
    PosModel m;
    const Cell1 r = pmap(chain(1), chain(2), {0});
    const Square sq = identity_square(m, r);
    const MateData d = mate_of_square(m, sq);
    CHECK(d.mate.src == d.mate.tgt);
    CHECK(m.eq2(d.mate, m.id2(d.mate.src)));
    CHECK(m.eq2(recompute_mate(m, d), d.mate));
    CHECK(is_beck_chevalley(m, sq));
}

TEST_CASE("mates reject non-lari horizontals", "[universal]") {
    PosModel m;
    const FinitePoset c2 = chain(2);
    const Cell1 top = pmap(chain(1), c2, {1});
    const Cell1 idc = m.id1(c2.obj());
    const Square sq{top, m.id1(chain(1).obj()), idc, top, m.id2(top)};
    CHECK_THROWS_AS(mate_of_square(m, sq), PreconditionError);
}

TEST_CASE("poset Beck-Chevalley matches f r_* = s_* g", "[universal][property]") {
    PosModel m;
    const auto posets = unlabeled_posets(3);
    struct Lari {
        FinitePoset a;
        FinitePoset b;
        std::vector<int> map;
        std::vector<int> adjoint;
    };
    std::vector<Lari> laris;
    for (const auto& a : posets)
        for (const auto& b : posets)
            for (const auto& f : monotone_maps(a, b)) {
                const auto g = oracle_right_adjoints(a, b, f);
                if (g.empty()) continue;
                std::vector<int> ida(a.n);
                for (int i = 0; i < a.n; ++i) ida[i] = i;
                if (compose_maps(g.front(), f) == ida) laris.push_back({a, b, f, g.front()});
            }
    std::size_t squares = 0;
    std::size_t bc = 0;
    std::size_t not_bc = 0;
    for (const Lari& r : laris)
        for (const Lari& s : laris) {
            if (r.a.n + r.b.n + s.a.n + s.b.n > 8) continue;
            for (const auto& f : monotone_maps(r.a, s.a))
                for (const auto& g : monotone_maps(r.b, s.b)) {
                    if (compose_maps(s.map, f) != compose_maps(g, r.map)) continue;
                    const Cell1 sf = pmap(r.a, s.b, compose_maps(s.map, f));
                    const Square sq{pmap(r.a, r.b, r.map), pmap(r.a, s.a, f), pmap(r.b, s.b, g),
                                    pmap(s.a, s.b, s.map), m.id2(sf)};
                    const MateData d = mate_of_square(m, sq);
                    CHECK(m.eq2(recompute_mate(m, d), d.mate));
                    const bool oracle = compose_maps(f, r.adjoint) == compose_maps(s.adjoint, g);
                    REQUIRE(is_beck_chevalley(m, sq) == oracle);
                    ++squares;
                    (oracle ? bc : not_bc) += 1;
                }
        }
    CHECK(squares > 100);
    CHECK(bc > 0);
    CHECK(not_bc > 0);
}

TEST_CASE("apply_P is strict on identities and composites", "[universal]") {
    PosModel m;
    const FinitePoset one = chain(1);
    const FinitePoset c2 = chain(2);
    const FinitePoset c3 = chain(3);
    CHECK(apply_P(m, m.id1(c2.obj())) == identity_cospan(m, c2.obj()));
    const Cell1 f = pmap(one, c2, {1});
    const Cell1 g = pmap(c2, c3, {0, 2});
    CHECK(compose_cospans(m, apply_P(m, g), apply_P(m, f)) == apply_P(m, m.comp1(g, f)));

    const Cell1 h0 = pmap(c2, c3, {0, 0});
    const Cell1 h1 = pmap(c2, c3, {0, 1});
    const Cell1 h2 = pmap(c2, c3, {1, 2});
    const auto& pm = static_cast<const ThinModel&>(m);
    const Cell2 a = pm.cell(h0, h1);
    const Cell2 b = pm.cell(h1, h2);
    const TwoMorphism pa = apply_P(m, a);
    CHECK(validate_two_morphism(m, pa).ok);
    const TwoMorphism lhs = apply_P(m, m.vcomp2(b, a));
    const TwoMorphism rhs = vcompose(m, apply_P(m, b), pa, -1);
    const LawCheck c = compare_two_cells(m, "P preserves vertical composition", lhs, rhs, -1);
    CHECK(c.passed);
}

TEST_CASE("identity in Sigma gives the identity adjunction", "[universal]") {
    PosModel m;
    const Obj c2 = chain(2).obj();
    const LocalizationLari l = lari_in_localization(m, m.id1(c2), 3, -1);
    require_lari(l);
    CHECK(l.right == identity_cospan(m, c2));
    const TwoMorphism id = identity_two_cell(m, identity_cospan(m, c2));
    CHECK(compare_two_cells(m, "unit", l.eta, id, -1).passed);
    CHECK(compare_two_cells(m, "counit", l.eps, id, -1).passed);
}

TEST_CASE("localization laris in the finite category model", "[universal]") {
    const TrivialModel m = arrow_model();
    const Obj a = m.objects().at(0);
    const Obj b = m.objects().at(1);
    const Cell1 s = m.one_cells(a, b).at(0);
    const LocalizationLari l = lari_in_localization(m, s, 1, -1);
    require_lari(l);
    CHECK(l.right == SigmaCospan{m.id1(b), s});
    const HomCategory hom = hom_category(m, b, a, 1, 1);
    REQUIRE(hom.objects.size() == 1);
    CHECK(hom.objects.front() == l.right);
    CHECK(hom_category(m, a, b, 1, 1).objects.size() == 1);
}

TEST_CASE("poset embeddings become laris in the localization", "[universal][property]") {
    PosModel m;
    const LocalizationLari l = lari_in_localization(m, pmap(chain(1), chain(2), {0}), 3, -1);
    require_lari(l);
    std::size_t n = 0;
    for (const Obj& x : m.objects())
        for (const Obj& y : m.objects()) {
            if (m.object_size(x) + m.object_size(y) > 4) continue;
            for (const Cell1& s : m.sigma_objects(x, y)) {
                require_lari(lari_in_localization(m, s, 3, -1));
                ++n;
            }
        }
    CHECK(n > 20);
}

TEST_CASE("Beck-Chevalley images of Sigma-squares", "[universal]") {
    PosModel m;
    const FinitePoset one = chain(1);
    const FinitePoset c2 = chain(2);
    const Cell1 m0 = pmap(one, c2, {0});
    const Cell1 id1 = m.id1(one.obj());
    const Cell1 idc = m.id1(c2.obj());

    const BcImageReport idr = verify_bc_image(m, identity_square(m, m0), 3, -1);
    INFO(idr.detail);
    CHECK(idr.passed);

    const Square pos_example{m0, id1, idc, m0, m.id2(m0)};
    CHECK(verify_bc_image(m, pos_example, 3, -1).passed);

    const Cell1 g = pmap(one, c2, {1});
    const BcImageReport can = verify_bc_image(m, m.canonical_square(m0, g), 3, -1);
    INFO(can.detail);
    CHECK(can.passed);
    REQUIRE(can.inverse);
    CHECK(can.inverse->src == can.mate.tgt);
}

TEST_CASE("every enumerated Sigma-square has a Beck-Chevalley image", "[universal][property]") {
    PosModel m(2);
    const auto squares = enumerate_sigma_squares(m);
    REQUIRE(squares.size() > 20);
    for (const Square& sq : squares) {
        const BcImageReport r = verify_bc_image(m, sq, 2, -1);
        INFO(r.detail);
        REQUIRE(r.passed);
    }
}
