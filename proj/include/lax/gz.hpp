#pragma once

#include <string>
#include <vector>

#include "lax/category.hpp"

namespace lax {

// Sigma fails the classical left fraction axioms; witness names the first
// violating data.
struct NotLocalizable : LaxError {
    NotLocalizable(const std::string& axiom, const std::string& witness)
        : LaxError(axiom + ": " + witness), axiom(axiom), witness(witness) {}
    std::string axiom;
    std::string witness;
};

// A -f-> I <-s- B as morphism indices of the spec.
struct Fraction {
    int f = 0;
    int s = 0;
    friend auto operator<=>(const Fraction&, const Fraction&) = default;
};

// Classical category of left fractions computed from the spec alone.
struct ClassicalLocalization {
    FiniteCategorySpec base;

    struct Hom {
        int a = 0;
        int b = 0;
        // Every cospan A -> I <- B with s in Sigma, in index order.
        std::vector<Fraction> fractions;
        // Class index of each fraction; classes numbered by first occurrence.
        std::vector<int> cls;
        int classes = 0;
    };
    // Row-major over (a, b).
    std::vector<Hom> homs;

    const Hom& hom(int a, int b) const { return homs.at(a * base.objects.size() + b); }
    int class_of(int a, int b, const Fraction& x) const;
    // Class of g o f through every Ore completion; LaxError if the
    // completions disagree.
    int compose(int a, int b, int c, int g_cls, int f_cls) const;
    // Class of the identity fraction (1, 1).
    int identity(int a) const;
};

// Identities and composites in Sigma, Ore squares, cancellation.
void check_classical_axioms(const FiniteCategorySpec& spec);
bool fractions_equivalent(const FiniteCategorySpec& spec, const Fraction& x, const Fraction& y);

// NotLocalizable when the axioms fail.
ClassicalLocalization localize_classical(const FiniteCategorySpec& spec);

struct HomComparison {
    int a = 0;
    int b = 0;
    std::size_t engine_cospans = 0;
    std::size_t engine_iso_classes = 0;
    int oracle_classes = 0;
    // Engine 2-cell classes between equal cospans, all identities.
    bool endo_classes_trivial = false;
    bool bijective = false;
    std::vector<std::string> mismatches;
};

// Sends each cospan of the engine's hom-category to its fraction class and
// checks that isomorphism in the engine matches equality of classes and that
// every class is hit.
HomComparison compare_hom(const FiniteCategorySpec& spec, int a, int b, int apex_bound, int ext_bound);
std::vector<HomComparison> compare_all_homs(const FiniteCategorySpec& spec, int apex_bound, int ext_bound);

}  // namespace lax
