#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lax/core.hpp"

namespace lax {

struct Diagnosis {
    bool ok = true;
    std::string failure;
    explicit operator bool() const { return ok; }
    static Diagnosis pass() { return {}; }
    static Diagnosis fail(std::string why) { return Diagnosis{false, std::move(why)}; }
};

// Boundaries, invertibility of delta, Sigma-membership of both horizontal
// edges and of the square itself, in that order.
Diagnosis validate_square(const TwoCatModel& m, const Square& q);
// PreconditionError carrying the diagnosis when validation fails.
void require_square(const TwoCatModel& m, const Square& q, const std::string& context);

// q1 on top of q2 (q1.bottom == q2.top).
Square vcompose_squares(const TwoCatModel& m, const Square& q2, const Square& q1);
// q1 to the left of q3 (q1.right == q3.left).
Square hcompose_squares(const TwoCatModel& m, const Square& q1, const Square& q3);

// (top 1_X, left 1_X, right s, bottom s).
Square identity_axiom_square(const TwoCatModel& m, const Cell1& s);
// (top r, left 1, right 1, bottom r): the identity morphism on r.
Square identity_square(const TwoCatModel& m, const Cell1& r);
// (top s, left 1, right d, bottom d s).
Square extension_square(const TwoCatModel& m, const Cell1& s, const Cell1& d);
// delta: r => s invertible gives (top s, left 1, right 1, bottom r).
Square vertical_repletion_square(const TwoCatModel& m, const Cell2& delta);
// gamma: f => g invertible gives (top 1, left f, right g, bottom 1).
Square horizontal_repletion_square(const TwoCatModel& m, const Cell2& gamma);

// r: A -> B and s: B -> C in Sigma give (top r, left 1, right s, bottom s r).
Square rule2_square(const TwoCatModel& m, const Cell1& r, const Cell1& s);

struct Rule3Squares {
    // (top r, left 1, right u, bottom t s)
    Square left_identity;
    // (top s, left 1, right t, bottom t s)
    Square sigma_id;
};
// q = (top r, left s, right u, bottom t) with s in Sigma.
Rule3Squares rule2_3_derive(const TwoCatModel& m, const Square& q, const Cell1& s);

struct Rule4aBundle {
    Cell1 d;
    Square ext;
};
// qa, qb share top r, left f and bottom s, with right edges a and b.
// alpha: a => b and beta: b => a with alpha r = (beta r)^-1.
Rule4aBundle rule4a(const TwoCatModel& m, const Square& qa, const Square& qb, const Cell2& alpha,
                    const Cell2& beta, int bound);
// Single-square form: qb is obtained by transporting qa along alpha r.
Rule4aBundle rule4a(const TwoCatModel& m, const Square& qa, const Cell2& alpha, const Cell2& beta,
                    int bound);

struct Rule4bBundle {
    Cell1 d;
    Cell2 gamma;
    Square ext;
};
// Sigma-squares with common top r, left f, bottom s and right edges a, b.
// Returns d and invertible gamma: d a => d b with (gamma r)(d delta) = d eps.
Rule4bBundle rule4b(const TwoCatModel& m, const Square& qd, const Square& qe, int bound);

struct Rule4Bundle {
    Cell1 dx;
    Cell1 dy;
    Cell1 u;
    std::vector<Cell2> gammas;
    // (top bottom(qd_i), left 1, right dx, bottom u)
    Square phi;
    // (top bottom(qe_i), left 1, right dy, bottom u)
    Square chi;
};
// qd = (top r, left b, right x, bottom ax), qe = (top r, left b, right y,
// bottom ay). gammas[0]: dx x => dy y invertible.
Rule4Bundle rule4_prime(const TwoCatModel& m, const Square& qd, const Square& qe, int bound);
// Two pairs with common bottoms ax (for qd1, qd2) and ay (for qe1, qe2).
Rule4Bundle rule4(const TwoCatModel& m, const Square& qd1, const Square& qe1, const Square& qd2,
                  const Square& qe2, int bound);
// Re-pasting check: (gamma_i r_i) . (phi + qd_i) = chi + qe_i for each pair.
Diagnosis verify_rule4(const TwoCatModel& m, const std::vector<std::pair<Square, Square>>& pairs,
                       const Rule4Bundle& b);

struct Rule5Bundle {
    Cell1 w;
    // (top v, left f, right f', bottom w)
    Square sq_f;
    // (top v, left g, right g', bottom w)
    Square sq_g;
};
Rule5Bundle rule5_double_square(const TwoCatModel& m, const Cell1& v, const Cell1& f, const Cell1& g,
                                int bound);

struct Rule6Bundle {
    Cell1 w;
    Square sq_f;
    Square sq_g;
    // beta': f' => g' with (beta' v)(delta_f) = (delta_g)(w beta)
    Cell2 beta_prime;
};
Rule6Bundle rule6_insert(const TwoCatModel& m, const Cell1& v, const Cell2& beta, int bound);
Diagnosis verify_rule6(const TwoCatModel& m, const Cell1& v, const Cell2& beta, const Rule6Bundle& b);

// Sigma-squares of the model's enumerated universe, in canonical order.
std::vector<Square> enumerate_sigma_squares(const TwoCatModel& m);

struct AxiomResult {
    std::string axiom;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::size_t exhausted = 0;
    std::vector<std::string> samples;
    bool passed() const { return failures == 0 && exhausted == 0; }
};

struct AxiomReport {
    std::vector<AxiomResult> axioms;
    std::size_t sigma_squares = 0;
    bool passed() const;
    const AxiomResult& get(const std::string& name) const;
};

// Identity, vertical and horizontal repletion, composition, square,
// equi-insertion and equification over every enumerable instance.
AxiomReport check_axioms(const TwoCatModel& m, int bound);

}  // namespace lax
