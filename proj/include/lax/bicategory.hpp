#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "lax/fractions.hpp"
#include "lax/omega.hpp"

namespace lax {

// The level-2 Sigma-paths defining horizontal composition, for one index i:
// canonical scheme of (r_i, g_i, s_i, 1) -d-> beta's square in the bottom row
// -u-> alpha's square pasted over the Rule 6 square in the right column.
struct HcomposeData {
    Rule6Bundle rule6;
    TwoMorphism middle;
    SigmaPath path1;
    SigmaPath path2;
    OmegaCell omega1;
    OmegaCell omega2;
};

// beta o alpha = Omega_2^-1 . [beta' * alpha, 1, 1, w y3, id, id] . Omega_1.
HcomposeData hcompose_data(const TwoCatModel& m, const TwoMorphism& beta, const TwoMorphism& alpha, int bound);
TwoMorphism hcompose(const TwoCatModel& m, const TwoMorphism& beta, const TwoMorphism& alpha, int bound);

// (h o g) o f => h o (g o f): the Omega cell of the level-2 path
// {canonical(s, h); column canonical(r, h'g)} -u-> Can -d-> {canonical(r, g);
// row canonical(r's, h)} over the border (r, g, s, h), whiskered by f and t.
SigmaPath associator_path(const TwoCatModel& m, const SigmaCospan& h, const SigmaCospan& g, const SigmaCospan& f);
TwoMorphism associator(const TwoCatModel& m, const SigmaCospan& h, const SigmaCospan& g, const SigmaCospan& f,
                       int bound);
TwoMorphism associator_inverse(const TwoCatModel& m, const SigmaCospan& h, const SigmaCospan& g,
                               const SigmaCospan& f, int bound);

// Identity 2-cells, since 1 o c and c o 1 equal c on the nose.
struct Unitors {
    TwoMorphism left;
    TwoMorphism right;
};
Unitors unitors(const TwoCatModel& m, const SigmaCospan& c);

struct LawCheck {
    std::string law;
    bool passed = false;
    bool undetermined = false;
    std::string detail;
};

// Exact boundaries and validity of both sides, then are_equivalent. Bound
// exhaustion is reported as undetermined.
LawCheck compare_two_cells(const TwoCatModel& m, const std::string& law, const TwoMorphism& lhs,
                           const TwoMorphism& rhs, int bound);

// a_{k,h,gf} . a_{kh,g,f} against (1_k o a_{h,g,f}) . a_{k,hg,f} . (a_{k,h,g} o 1_f).
LawCheck check_pentagon(const TwoCatModel& m, const SigmaCospan& k, const SigmaCospan& h, const SigmaCospan& g,
                        const SigmaCospan& f, int bound);
// (1_g o lambda_f) . a_{g,1,f} against rho_g o 1_f.
LawCheck check_triangle(const TwoCatModel& m, const SigmaCospan& g, const SigmaCospan& f, int bound);
// a_{h2,g2,f2} . ((c o b) o a) against (c o (b o a)) . a_{h1,g1,f1}.
LawCheck check_associator_naturality(const TwoCatModel& m, const TwoMorphism& c, const TwoMorphism& b,
                                     const TwoMorphism& a, int bound);
// a^-1 . a and a . a^-1 against identities.
LawCheck check_associator_invertible(const TwoCatModel& m, const SigmaCospan& h, const SigmaCospan& g,
                                     const SigmaCospan& f, int bound);
// (b2 . b1) o (a2 . a1) against (b2 o a2) . (b1 o a1).
LawCheck check_interchange(const TwoCatModel& m, const TwoMorphism& b2, const TwoMorphism& b1,
                           const TwoMorphism& a2, const TwoMorphism& a1, int bound);
// (b o 1_{f2}) . (1_{g1} o a) against b o a.
LawCheck check_whiskering(const TwoCatModel& m, const TwoMorphism& b, const TwoMorphism& a, int bound);
// 1_g o 1_f against 1_{g o f}.
LawCheck check_identity_preservation(const TwoCatModel& m, const SigmaCospan& g, const SigmaCospan& f, int bound);

// Memoizing front end over one model and bound. Tables are guarded by a mutex
// and never change results.
class Localization {
public:
    Localization(const TwoCatModel& m, int bound) : m_(m), bound_(bound) {}

    const TwoCatModel& model() const { return m_; }
    int bound() const { return bound_; }

    SigmaCospan compose(const SigmaCospan& g, const SigmaCospan& f) const { return compose_cospans(m_, g, f); }
    TwoMorphism identity(const SigmaCospan& c) const { return identity_two_cell(m_, c); }
    TwoMorphism vcompose(const TwoMorphism& beta, const TwoMorphism& alpha);
    TwoMorphism hcompose(const TwoMorphism& beta, const TwoMorphism& alpha);
    TwoMorphism associator(const SigmaCospan& h, const SigmaCospan& g, const SigmaCospan& f);
    EquivalenceResult equivalent(const TwoMorphism& a, const TwoMorphism& b) const;

    std::size_t cache_size() const;

private:
    const TwoCatModel& m_;
    int bound_;
    mutable std::mutex mu_;
    std::map<std::pair<TwoMorphism, TwoMorphism>, TwoMorphism> vmemo_;
    std::map<std::pair<TwoMorphism, TwoMorphism>, TwoMorphism> hmemo_;
    std::map<std::tuple<SigmaCospan, SigmaCospan, SigmaCospan>, TwoMorphism> amemo_;
};

}  // namespace lax
