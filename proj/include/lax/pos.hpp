#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lax/core.hpp"

namespace lax {

inline constexpr int max_poset_size = 64;

// Elements are 0..n-1; bit j of up[i] is set iff i <= j.
struct FinitePoset {
    int n = 0;
    std::vector<std::uint64_t> up;

    bool leq(int i, int j) const { return (up[i] >> j) & 1u; }
    int size() const { return n; }
    std::uint64_t all() const { return n == 64 ? ~0ull : ((1ull << n) - 1); }
    // Bitmask of elements below i.
    std::uint64_t down(int i) const;

    Obj obj() const;
    static FinitePoset from(const Obj& a);
    // Builds a poset from explicit pairs (a <= b); reflexive pairs are added,
    // everything else must already be transitive and antisymmetric.
    static FinitePoset from_relation(int n, const std::vector<std::pair<int, int>>& pairs);

    friend auto operator<=>(const FinitePoset&, const FinitePoset&) = default;
};

FinitePoset chain(int n);
FinitePoset discrete(int n);
std::string describe_poset(const FinitePoset& p);

struct MonotoneMap {
    FinitePoset dom;
    FinitePoset cod;
    std::vector<int> assignment;

    Cell1 cell() const;
    static MonotoneMap from(const Cell1& f);
};

bool is_monotone(const FinitePoset& a, const FinitePoset& b, const std::vector<int>& m);
bool pos_is_embedding(const MonotoneMap& m);
bool pos_is_embedding(const Cell1& m);

// All monotone maps a -> b, lexicographic in the assignment vector.
std::vector<std::vector<int>> monotone_maps(const FinitePoset& a, const FinitePoset& b);
// Posets on 0..n-1 whose order extends the natural order of labels, listed by
// the bitmask of strict relations i < j (pairs in lexicographic order).
std::vector<FinitePoset> naturally_labeled_posets(int n);
// One representative per isomorphism class with at most max_n elements, the
// first one met in the naturally-labeled enumeration.
std::vector<FinitePoset> unlabeled_posets(int max_n);
bool isomorphic(const FinitePoset& a, const FinitePoset& b);

// Down-closed subsets, ordered by inclusion.
struct LowerSetLattice {
    FinitePoset base;
    std::vector<std::uint64_t> sets;

    explicit LowerSetLattice(FinitePoset p);
    bool is_lower(std::uint64_t s) const;
};

std::uint64_t down_closure(const FinitePoset& p, std::uint64_t s);
std::uint64_t preimage(const MonotoneMap& f, std::uint64_t s);
// Left adjoint of preimage: down-closure of the direct image.
std::uint64_t exists_image(const MonotoneMap& f, std::uint64_t s);

// Square (top m: X->Y, left u: X->Z, right v: Y->W, bottom n: Z->W).
// NotASquare unless n u = v m; false when m or n is not an embedding.
bool pos_square_in_sigma(const Square& q);
// Elementwise: n(z) <= v(y) implies some x with z <= u(x) and m(x) <= y.
bool pos_square_condition_elementwise(const Square& q);
// Lower sets: exists_u . preimage_m = preimage_n . exists_v.
bool pos_square_condition_lower_sets(const Square& q);

struct Quotient {
    FinitePoset poset;
    std::vector<int> cls;
};
// Poset reflection of the preorder generated by rel (bit j of rel[i]: i <= j).
Quotient quotient_preorder(int n, std::vector<std::uint64_t> rel);

class PosModel : public ThinModel {
public:
    explicit PosModel(int universe_max = 3);

    std::string name() const override { return "pos"; }
    std::string describe(const Obj& a) const override;
    std::string describe(const Cell1& f) const override;

    std::vector<Obj> objects() const override;
    int object_size(const Obj& a) const override;
    bool universe_complete(int size) const override { return size <= universe_max_; }
    std::vector<Cell1> one_cells(const Obj& a, const Obj& b) const override;
    Cell1 id1(const Obj& a) const override;
    bool leq(const Cell1& f, const Cell1& g) const override;

    bool sigma_object(const Cell1& r) const override;
    bool sigma_morphism(const Square& q) const override;

    Square square_witness(const Cell1& s, const Cell1& f, int bound) const override;
    EquiInsertion equi_insertion_witness(const Square& q, const Cell1& g, const Cell2& alpha,
                                         int bound) const override;
    Cell1 equification_witness(const Square& q, const Cell2& a, const Cell2& b,
                               int bound) const override;

    int universe_max() const { return universe_max_; }

protected:
    Cell1 do_comp1(const Cell1& g, const Cell1& f) const override;

private:
    int universe_max_;
    std::vector<Obj> universe_;
};

// Constructive completions.
Square pos_pushout_square(const Cell1& s, const Cell1& f);
EquiInsertion pos_insertion_quotient(const Square& q, const Cell1& g);

// Lexicographically first Sigma-square over codomains |W| <= bound.
Square pos_search_square(const Cell1& s, const Cell1& f, int bound);
// Pushout first, bounded search as fallback.
Square pos_witness_square(const Cell1& s, const Cell1& f, int bound);
// Quotient first, bounded search (|E| <= bound, then lexicographic d) as fallback.
EquiInsertion pos_equi_insertion(const Square& q, const Cell1& g, int bound);
EquiInsertion pos_search_equi_insertion(const Square& q, const Cell1& g, int bound);

int pos_size(const Obj& a);

}  // namespace lax
