#include <catch_amalgamated.hpp>

#include "lax/gz.hpp"

using namespace lax;

namespace {

FiniteCategorySpec arrow_spec() {
    return CategoryBuilder().object("A").object("B").morphism("s", "A", "B").sigma_identities().sigma("s").build();
}

FiniteCategorySpec identities_only() {
    return CategoryBuilder()
        .object("A")
        .object("B")
        .morphism("f", "A", "B")
        .morphism("g", "A", "B")
        .sigma_identities()
        .build();
}

// A -f-> B <-s- C with s in Sigma.
FiniteCategorySpec zig_zag() {
    return CategoryBuilder()
        .object("A")
        .object("B")
        .object("C")
        .morphism("f", "A", "B")
        .morphism("s", "C", "B")
        .sigma_identities()
        .sigma("s")
        .build();
}

// s: A -> B and f: A -> C with no completing square.
FiniteCategorySpec not_ore() {
    return CategoryBuilder()
        .object("A")
        .object("B")
        .object("C")
        .morphism("s", "A", "B")
        .morphism("f", "A", "C")
        .sigma_identities()
        .sigma("s")
        .build();
}

// Two parallel arrows equalized by s but by nothing in Sigma afterwards.
FiniteCategorySpec not_cancellative() {
    return CategoryBuilder()
        .object("A")
        .object("B")
        .object("C")
        .morphism("s", "A", "B")
        .morphism("f", "B", "C")
        .morphism("g", "B", "C")
        .morphism("h", "A", "C")
        .composite("f", "s", "h")
        .composite("g", "s", "h")
        .sigma_identities()
        .sigma("s")
        .build();
}

void require_bijections(const FiniteCategorySpec& spec) {
    for (const HomComparison& c : compare_all_homs(spec, 4, 4)) {
        INFO(spec.objects.at(c.a) << " -> " << spec.objects.at(c.b));
        for (const auto& mm : c.mismatches) INFO(mm);
        CHECK(c.bijective);
        CHECK(c.endo_classes_trivial);
        CHECK(c.engine_iso_classes == static_cast<std::size_t>(c.oracle_classes));
    }
}

}  // namespace

TEST_CASE("identities-only Sigma leaves hom-sets unchanged", "[gz]") {
    const FiniteCategorySpec spec = identities_only();
    const ClassicalLocalization loc = localize_classical(spec);
    for (std::size_t a = 0; a < spec.objects.size(); ++a)
        for (std::size_t b = 0; b < spec.objects.size(); ++b) {
            int arrows = 0;
            for (const auto& mor : spec.morphisms) arrows += mor.dom == static_cast<int>(a) && mor.cod == static_cast<int>(b);
            CHECK(loc.hom(a, b).classes == arrows);
        }
}

TEST_CASE("inverting a single arrow", "[gz]") {
    const FiniteCategorySpec spec = arrow_spec();
    const ClassicalLocalization loc = localize_classical(spec);
    const int a = spec.object_index("A");
    const int b = spec.object_index("B");
    CHECK(loc.hom(b, a).classes == 1);
    CHECK(loc.hom(a, b).classes == 1);
    CHECK(loc.hom(a, a).classes == 1);
    const int s = spec.morphism_index("s");
    const int s_cls = loc.class_of(a, b, {s, spec.identity[b]});
    const int inv_cls = loc.class_of(b, a, {spec.identity[b], s});
    CHECK(loc.compose(a, b, a, inv_cls, s_cls) == loc.identity(a));
    CHECK(loc.compose(b, a, b, s_cls, inv_cls) == loc.identity(b));
}

TEST_CASE("axiom violations are reported with a witness", "[gz]") {
    try {
        localize_classical(not_ore());
        FAIL("expected NotLocalizable");
    } catch (const NotLocalizable& e) {
        CHECK(e.axiom == "ore");
        CHECK(e.witness.find("(s, f)") != std::string::npos);
    }
    try {
        localize_classical(not_cancellative());
        FAIL("expected NotLocalizable");
    } catch (const NotLocalizable& e) {
        CHECK(e.axiom == "cancellation");
    }
    const FiniteCategorySpec no_ids = CategoryBuilder().object("A").build();
    CHECK_THROWS_AS(localize_classical(no_ids), NotLocalizable);
}

TEST_CASE("Sigma becomes invertible and composition is well defined", "[gz][property]") {
    for (const FiniteCategorySpec& spec : {arrow_spec(), identities_only(), zig_zag()}) {
        const ClassicalLocalization loc = localize_classical(spec);
        const int n = static_cast<int>(spec.objects.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int f = 0; f < loc.hom(a, b).classes; ++f)
                        for (int g = 0; g < loc.hom(b, c).classes; ++g) REQUIRE_NOTHROW(loc.compose(a, b, c, g, f));
        for (std::size_t i = 0; i < spec.morphisms.size(); ++i) {
            if (!spec.sigma[i]) continue;
            const int a = spec.morphisms[i].dom;
            const int b = spec.morphisms[i].cod;
            const int s = static_cast<int>(i);
            const int fwd = loc.class_of(a, b, {s, spec.identity[b]});
            const int back = loc.class_of(b, a, {spec.identity[b], s});
            CHECK(loc.compose(a, b, a, back, fwd) == loc.identity(a));
            CHECK(loc.compose(b, a, b, fwd, back) == loc.identity(b));
        }
    }
}

TEST_CASE("engine hom-categories match the classical localization", "[gz]") {
    require_bijections(identities_only());
    require_bijections(arrow_spec());
    require_bijections(zig_zag());
    const FiniteCategorySpec z = zig_zag();
    const ClassicalLocalization loc = localize_classical(z);
    CHECK(loc.hom(z.object_index("A"), z.object_index("C")).classes == 1);
}
