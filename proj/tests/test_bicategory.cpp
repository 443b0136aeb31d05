#include <catch_amalgamated.hpp>

#include "lax/bicategory.hpp"
#include "lax/category.hpp"
#include "lax/pos.hpp"
#include "sampling.hpp"

using namespace lax;
using lax::testing::Sampler;

namespace {

constexpr int kApex = 3;
constexpr int kExt = 3;

bool exact(const TwoMorphism& t, const SigmaCospan& src, const SigmaCospan& tgt) {
    return t.src == src && t.tgt == tgt;
}

void require_law(const LawCheck& c) {
    INFO(c.law << ": " << c.detail);
    REQUIRE(c.passed);
    REQUIRE_FALSE(c.undetermined);
}

// A 2-morphism out of c; the identity when the sampler finds nothing else.
TwoMorphism cell_from(Sampler& s, const TwoCatModel& m, const SigmaCospan& c) {
    return s.two_cell_from(c, kApex, kExt).value_or(identity_two_cell(m, c));
}

TrivialModel arrow_model() {
    return TrivialModel(CategoryBuilder()
                            .object("A")
                            .object("B")
                            .object("C")
                            .morphism("s", "A", "B")
                            .morphism("t", "B", "C")
                            .morphism("ts", "A", "C")
                            .composite("t", "s", "ts")
                            .sigma_identities()
                            .sigma("s")
                            .sigma("t")
                            .sigma("ts")
                            .build());
}

}  // namespace

TEST_CASE("hcompose has exact boundaries and valid parts", "[bicategory][property]") {
    PosModel m;
    Sampler s(m, 11, 2);
    for (int i = 0; i < 60; ++i) {
        const auto ch = s.chain(2);
        const TwoMorphism a = cell_from(s, m, ch[0]);
        const TwoMorphism b = cell_from(s, m, ch[1]);
        const HcomposeData d = hcompose_data(m, b, a, -1);
        CHECK(verify_rule6(m, a.x3, b.alpha, d.rule6).ok);
        CHECK(validate_two_morphism(m, d.middle).ok);
        for (const SigmaPath* p : {&d.path1, &d.path2}) {
            REQUIRE_NOTHROW(require_path(*p));
            CHECK(p->start.level == 2);
            CHECK(p->steps.size() == 2);
            CHECK(p->start == canonical_scheme(m, left_border(m, p->start)));
        }
        const TwoMorphism h = hcompose(m, b, a, -1);
        CHECK(validate_two_morphism(m, h).ok);
        CHECK(exact(h, compose_cospans(m, b.src, a.src), compose_cospans(m, b.tgt, a.tgt)));
    }
}

TEST_CASE("hcompose preserves identities", "[bicategory][property]") {
    PosModel m;
    Sampler s(m, 12, 2);
    for (int i = 0; i < 60; ++i) {
        const auto ch = s.chain(2);
        require_law(check_identity_preservation(m, ch[1], ch[0], -1));
    }
}

TEST_CASE("associator has exact boundaries and an inverse", "[bicategory][property]") {
    PosModel m;
    Sampler s(m, 13, 2);
    for (int i = 0; i < 60; ++i) {
        const auto ch = s.chain(3);
        const SigmaPath p = associator_path(m, ch[2], ch[1], ch[0]);
        REQUIRE_NOTHROW(require_path(p));
        CHECK(p.steps.size() == 2);
        CHECK(p.steps[0].after == canonical_scheme(m, left_border(m, p.start)));
        const TwoMorphism a = associator(m, ch[2], ch[1], ch[0], -1);
        CHECK(validate_two_morphism(m, a).ok);
        CHECK(exact(a, compose_cospans(m, compose_cospans(m, ch[2], ch[1]), ch[0]),
                    compose_cospans(m, ch[2], compose_cospans(m, ch[1], ch[0]))));
        const TwoMorphism inv = associator_inverse(m, ch[2], ch[1], ch[0], -1);
        CHECK(exact(inv, a.tgt, a.src));
        require_law(check_associator_invertible(m, ch[2], ch[1], ch[0], -1));
    }
}

TEST_CASE("unitors are identities", "[bicategory]") {
    PosModel m;
    Sampler s(m, 14, 2);
    for (int i = 0; i < 20; ++i) {
        const SigmaCospan c = s.cospan_from(s.object());
        const Unitors u = unitors(m, c);
        CHECK(u.left == identity_two_cell(m, c));
        CHECK(u.right == identity_two_cell(m, c));
    }
}

TEST_CASE("pentagon and triangle hold on sampled chains", "[bicategory][property]") {
    PosModel m;
    Sampler s(m, 15, 2);
    for (int i = 0; i < 40; ++i) {
        const auto ch = s.chain(4);
        require_law(check_pentagon(m, ch[3], ch[2], ch[1], ch[0], -1));
        require_law(check_triangle(m, ch[1], ch[0], -1));
    }
}

TEST_CASE("associator naturality, interchange and whiskering", "[bicategory][property]") {
    PosModel m;
    Sampler s(m, 16, 2);
    int moving = 0;
    for (int i = 0; i < 25; ++i) {
        const auto ch = s.chain(3);
        const TwoMorphism a1 = cell_from(s, m, ch[0]);
        const TwoMorphism b1 = cell_from(s, m, ch[1]);
        const TwoMorphism c1 = cell_from(s, m, ch[2]);
        require_law(check_associator_naturality(m, c1, b1, a1, -1));
        require_law(check_whiskering(m, b1, a1, -1));
        const TwoMorphism a2 = cell_from(s, m, a1.tgt);
        const TwoMorphism b2 = cell_from(s, m, b1.tgt);
        require_law(check_interchange(m, b2, b1, a2, a1, -1));
        moving += a1.src != a1.tgt;
    }
    CHECK(moving > 5);
}

TEST_CASE("composites reject cospans that do not chain", "[bicategory]") {
    PosModel m;
    const Obj one = chain(1).obj();
    const Obj two = chain(2).obj();
    const SigmaCospan f = identity_cospan(m, one);
    const SigmaCospan g = identity_cospan(m, two);
    CHECK_THROWS_AS(hcompose(m, identity_two_cell(m, g), identity_two_cell(m, f), -1), BoundaryError);
    CHECK_THROWS_AS(associator(m, f, g, f, -1), BoundaryError);
}

TEST_CASE("Localization memoizes without changing results", "[bicategory]") {
    PosModel m;
    Localization loc(m, -1);
    Sampler s(m, 18, 2);
    const auto ch = s.chain(3);
    const TwoMorphism a = cell_from(s, m, ch[0]);
    const TwoMorphism b = cell_from(s, m, ch[1]);
    CHECK(loc.cache_size() == 0);
    const TwoMorphism h1 = loc.hcompose(b, a);
    const TwoMorphism as1 = loc.associator(ch[2], ch[1], ch[0]);
    const std::size_t size = loc.cache_size();
    CHECK(size == 2);
    CHECK(loc.hcompose(b, a) == h1);
    CHECK(loc.associator(ch[2], ch[1], ch[0]) == as1);
    CHECK(loc.cache_size() == size);
    CHECK(h1 == hcompose(m, b, a, -1));
    CHECK(as1 == associator(m, ch[2], ch[1], ch[0], -1));
    const TwoMorphism v = loc.vcompose(identity_two_cell(m, a.tgt), a);
    CHECK(loc.equivalent(v, a).verdict == Verdict::equivalent);
    CHECK(loc.compose(ch[1], ch[0]) == compose_cospans(m, ch[1], ch[0]));
}

TEST_CASE("coherence on a finite category with identity 2-cells", "[bicategory]") {
    const TrivialModel m = arrow_model();
    const auto cells = [&m](const Obj& a, const Obj& b) { return m.one_cells(a, b); };
    std::vector<SigmaCospan> all;
    for (const Obj& a : m.objects())
        for (const Obj& i : m.objects())
            for (const Obj& b : m.objects())
                for (const Cell1& f : cells(a, i))
                    for (const Cell1& r : cells(b, i))
                        if (m.sigma_object(r)) all.push_back({f, r});
    REQUIRE(all.size() > 6);
    std::size_t pentagons = 0;
    for (const auto& f : all)
        for (const auto& g : all) {
            if (f.target() != g.source()) continue;
            require_law(check_triangle(m, g, f, -1));
            require_law(check_identity_preservation(m, g, f, -1));
            for (const auto& h : all) {
                if (g.target() != h.source()) continue;
                require_law(check_associator_invertible(m, h, g, f, -1));
                for (const auto& k : all) {
                    if (h.target() != k.source()) continue;
                    require_law(check_pentagon(m, k, h, g, f, -1));
                    ++pentagons;
                }
            }
        }
    CHECK(pentagons > 10);
}
