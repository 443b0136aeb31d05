#pragma once

#include <optional>
#include <string>

#include "lax/bicategory.hpp"
#include "lax/core.hpp"
#include "lax/fractions.hpp"

namespace lax {

// f -| g with eta: 1_A => g f and eps: f g => 1_B.
struct Adjunction {
    Cell1 f;
    Cell1 g;
    Cell2 eta;
    Cell2 eps;
};

// (eps f)(f eta) = id_f and (g eps)(eta g) = id_g.
bool triangle_identities_hold(const TwoCatModel& m, const Adjunction& a);

// First candidate (g, eta, eps) in enumeration order satisfying the triangle
// identities, with eta invertible when lari_only is set. Nothing means the
// finite enumeration was exhausted.
std::optional<Adjunction> find_right_adjoint(const TwoCatModel& m, const Cell1& f, bool lari_only = false);
bool is_lari(const TwoCatModel& m, const Cell1& f);

// Mate of a square whose top r and bottom s are laris:
// (s_* g eps^r) . (s_* delta r_*) . (eta^s f r_*): f r_* => s_* g.
struct MateData {
    Square square;
    Adjunction adj_r;
    Adjunction adj_s;
    Cell2 mate;
};

// PreconditionError when the adjunctions do not belong to the square's
// horizontals, are not laris, or delta is not invertible.
MateData mate_of_square(const TwoCatModel& m, const Square& sq, const Adjunction& adj_r, const Adjunction& adj_s);
// Adjunctions found by find_right_adjoint; PreconditionError when a
// horizontal edge is not a lari.
MateData mate_of_square(const TwoCatModel& m, const Square& sq);
// The mate composite rebuilt from the packaged parts.
Cell2 recompute_mate(const TwoCatModel& m, const MateData& d);
bool is_beck_chevalley(const TwoCatModel& m, const Square& sq);

// P(A) = A, P(f) = (f, 1), P(alpha) = [alpha, 1, 1, 1, id, id].
SigmaCospan apply_P(const TwoCatModel& m, const Cell1& f);
TwoMorphism apply_P(const TwoCatModel& m, const Cell2& alpha);

// A 2-morphism t^-1 with t^-1 . t and t . t^-1 equivalent to identities,
// among the 2-morphisms from t.tgt to t.src with middle object of size
// <= ext_bound.
std::optional<TwoMorphism> find_inverse(const TwoCatModel& m, const TwoMorphism& t, int ext_bound, int bound);

// P(s) -| (1_B, s) in the localization.
struct LocalizationLari {
    SigmaCospan left;
    SigmaCospan right;
    // [id_s, s, 1_B, s, id, id]: 1_A => (s, s).
    TwoMorphism eta;
    // Equi-insertion on the canonical square of (s, s) and its inverted
    // 2-cell gives q and eps: q s1 => q s2; eps_bar = [eps, q, q s2, q s2, id, id].
    Square composite_square;
    EquiInsertion insertion;
    TwoMorphism eps;
    // 1 => eta o s_*, then s_* o eps: against id_{s_*}.
    LawCheck triangle_right;
    // s_bar o eta, then eps o s_bar: against id_{s_bar}.
    LawCheck triangle_left;
    // eta is invertible.
    LawCheck unit_invertible;

    bool passed() const { return triangle_right.passed && triangle_left.passed && unit_invertible.passed; }
};

// PreconditionError when s is not in Sigma. The unit inverse is searched
// among 2-morphisms with middle objects of size <= ext_bound.
LocalizationLari lari_in_localization(const TwoCatModel& m, const Cell1& s, int ext_bound, int bound);

// Mate of P(delta): P(f) o (1, s) => (1, t) o P(g) for a Sigma-square
// (top s, left f, right g, bottom t), built from the unit of t, P(delta) and
// the counit of s with associators in between; passed when an inverse exists
// within ext_bound.
struct BcImageReport {
    Square square;
    TwoMorphism mate;
    std::optional<TwoMorphism> inverse;
    bool passed = false;
    bool undetermined = false;
    std::string detail;
};
BcImageReport verify_bc_image(const TwoCatModel& m, const Square& sq, int ext_bound, int bound);

}  // namespace lax
