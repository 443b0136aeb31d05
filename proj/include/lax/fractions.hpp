#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lax/calculus.hpp"
#include "lax/core.hpp"

namespace lax {

// A -f-> I <-r- B with r in Sigma.
struct SigmaCospan {
    Cell1 f;
    Cell1 r;

    const Obj& source() const { return f.dom; }
    const Obj& target() const { return r.dom; }
    const Obj& apex() const { return f.cod; }
    friend auto operator<=>(const SigmaCospan&, const SigmaCospan&) = default;
};

Diagnosis validate_cospan(const TwoCatModel& m, const SigmaCospan& c);
// Validated constructor; PreconditionError or BoundaryError on bad input.
SigmaCospan make_cospan(const TwoCatModel& m, const Cell1& f, const Cell1& r);
SigmaCospan identity_cospan(const TwoCatModel& m, const Obj& a);
// g_bar after f_bar through the canonical square of (f_bar.r, g_bar.f).
SigmaCospan compose_cospans(const TwoCatModel& m, const SigmaCospan& g_bar, const SigmaCospan& f_bar);
std::string describe(const TwoCatModel& m, const SigmaCospan& c);

// (alpha, x1, x2, x3, delta1, delta2): (f, r) => (g, s) with
// delta1: x3 => x1 r, delta2: x3 => x2 s and alpha: x1 f => x2 g.
struct TwoMorphism {
    SigmaCospan src;
    SigmaCospan tgt;
    Cell2 alpha;
    Cell1 x1;
    Cell1 x2;
    Cell1 x3;
    Cell2 delta1;
    Cell2 delta2;

    // (top r, left 1, right x1, bottom x3)
    Square square1(const TwoCatModel& m) const;
    // (top s, left 1, right x2, bottom x3)
    Square square2(const TwoCatModel& m) const;
    friend auto operator<=>(const TwoMorphism&, const TwoMorphism&) = default;
};

Diagnosis validate_two_morphism(const TwoCatModel& m, const TwoMorphism& t);
void require_two_morphism(const TwoCatModel& m, const TwoMorphism& t, const std::string& context);
// [id_f, 1_I, 1_I, r, id, id]
TwoMorphism identity_two_cell(const TwoCatModel& m, const SigmaCospan& c);

// Data extending a 2-morphism along chi = (top x3, left 1, right dx, bottom d)
// with invertible theta_i: dx x_i => z_i.
struct SigmaExtension {
    Square chi;
    Cell2 theta1;
    Cell2 theta2;
};
// theta_i taken to be identities.
SigmaExtension plain_extension(const TwoCatModel& m, const TwoMorphism& t, const Square& chi);
// ((theta2 g)(dx alpha)(theta1^-1 f), z1, z2, d, (theta1 r)(dx delta1)chi, (theta2 s)(dx delta2)chi)
TwoMorphism sigma_extend(const TwoCatModel& m, const TwoMorphism& t, const SigmaExtension& e);

// Whiskers a 2-morphism between cospans P -> . <- Q by l0: P0 -> P on the
// left legs and m0: Q0 -> Q (in Sigma) on the right legs.
TwoMorphism whisker_two_morphism(const TwoCatModel& m, const TwoMorphism& t, const Cell1& l0,
                                 const Cell1& m0);

enum class Verdict { equivalent, not_equivalent, undetermined };
std::string to_string(Verdict v);

struct EquivalenceResult {
    Verdict verdict = Verdict::undetermined;
    std::string route;
    std::string note;
    int bound = -1;
    // A common Sigma-extension when the verdict is equivalent.
    std::optional<TwoMorphism> common;
};

// Rule 4 on the two pairs of certifying squares, then the 2-cell equation.
EquivalenceResult equivalent_by_rule4(const TwoCatModel& m, const TwoMorphism& a, const TwoMorphism& b,
                                      int bound);
// Order-enriched fast path: glue X and Y along the three leg pairs and check
// dx x1 = dy y1, dx x2 = dy y2, dx x3 = d = dy y3 together with Sigma-membership.
// Returns nothing when the model has no fast path or the glued object fails.
std::optional<EquivalenceResult> equivalent_fast_path(const TwoCatModel& m, const TwoMorphism& a,
                                                      const TwoMorphism& b);
// Bounded search for a common extension over extension objects of size
// <= bound; not_equivalent only when bound reaches the completeness bound
// |X| + |Y| and nothing is found.
EquivalenceResult equivalent_by_search(const TwoCatModel& m, const TwoMorphism& a, const TwoMorphism& b,
                                       int bound);
// Fast path and Rule 4 route, cross-checked; undetermined when they disagree.
EquivalenceResult are_equivalent(const TwoCatModel& m, const TwoMorphism& a, const TwoMorphism& b,
                                 int bound);

// beta after alpha through Rule 4' on (square2 of alpha, square1 of beta).
TwoMorphism vcompose(const TwoCatModel& m, const TwoMorphism& beta, const TwoMorphism& alpha, int bound);

// 2-morphisms between two cospans with middle object of size <= ext_bound.
std::vector<TwoMorphism> enumerate_two_morphisms(const TwoCatModel& m, const SigmaCospan& c1,
                                                 const SigmaCospan& c2, int ext_bound);
std::vector<SigmaCospan> enumerate_cospans(const TwoCatModel& m, const Obj& a, const Obj& b,
                                           int apex_bound);

struct HomCategory {
    Obj a;
    Obj b;
    int apex_bound = 0;
    int ext_bound = 0;
    std::vector<SigmaCospan> objects;

    struct Hom {
        int src = 0;
        int tgt = 0;
        std::vector<TwoMorphism> morphisms;
        // Class index of each enumerated 2-morphism.
        std::vector<int> cls;
        // One representative per class.
        std::vector<TwoMorphism> classes;
    };
    // Row-major over (src, tgt).
    std::vector<Hom> homs;

    struct Composite {
        int i = 0;
        int j = 0;
        int k = 0;
        int first = 0;
        int second = 0;
        // Class in hom(i, k), or -1 when no enumerated class matched.
        int result = -1;
    };
    std::vector<Composite> composition;
    std::size_t undetermined = 0;

    const Hom& hom(int i, int j) const { return homs.at(i * objects.size() + j); }
};

HomCategory hom_category(const TwoCatModel& m, const Obj& a, const Obj& b, int apex_bound, int ext_bound,
                         int bound = -1);

}  // namespace lax
