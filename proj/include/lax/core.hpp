#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lax {

// Canonical total encoding shared by objects, 1-cells and 2-cells.
using Code = std::vector<std::uint64_t>;

struct Obj {
    Code code;
    friend auto operator<=>(const Obj&, const Obj&) = default;
};

struct Cell1 {
    Obj dom;
    Obj cod;
    Code code;
    friend auto operator<=>(const Cell1&, const Cell1&) = default;
};

struct Cell2 {
    Cell1 src;
    Cell1 tgt;
    Code code;
    friend auto operator<=>(const Cell2&, const Cell2&) = default;
};

// A morphism (left, right, delta): top -> bottom of the arrow category, drawn
// as a square with delta: bottom . left => right . top.
struct Square {
    Cell1 top;
    Cell1 left;
    Cell1 right;
    Cell1 bottom;
    Cell2 delta;
    friend auto operator<=>(const Square&, const Square&) = default;
};
using ArrowCatMorphism = Square;

struct LaxError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BoundaryError : LaxError {
    using LaxError::LaxError;
};
// A bounded search ran out of room; retrying with a larger bound may succeed.
struct BoundExhausted : LaxError {
    using LaxError::LaxError;
};
// A hypothesis of a rule or construction does not hold.
struct PreconditionError : LaxError {
    using LaxError::LaxError;
};
struct NotASquare : LaxError {
    using LaxError::LaxError;
};
struct SpecError : LaxError {
    using LaxError::LaxError;
};

enum class Side { left, right };

struct EquiInsertion {
    Cell1 d;
    Cell2 alpha_prime;
};

class TwoCatModel {
public:
    virtual ~TwoCatModel() = default;

    virtual std::string name() const = 0;
    virtual std::string describe(const Obj& a) const;
    virtual std::string describe(const Cell1& f) const;

    // Enumerated universe, in canonical order.
    virtual std::vector<Obj> objects() const = 0;
    // Size used by enumeration bounds; 1 unless the model says otherwise.
    virtual int object_size(const Obj&) const { return 1; }
    // Whether objects() lists every object of the given size.
    virtual bool universe_complete(int) const { return true; }
    virtual std::vector<Cell1> one_cells(const Obj& a, const Obj& b) const = 0;
    virtual std::vector<Cell2> two_cells(const Cell1& f, const Cell1& g) const = 0;

    virtual Cell1 id1(const Obj& a) const = 0;
    virtual Cell2 id2(const Cell1& f) const = 0;
    bool is_identity(const Cell1& f) const;

    Cell1 comp1(const Cell1& g, const Cell1& f) const;
    Cell2 vcomp2(const Cell2& b, const Cell2& a) const;
    Cell2 whisker(const Cell1& w, const Cell2& a, Side side) const;
    // w . a
    Cell2 lwhisker(const Cell1& w, const Cell2& a) const;
    // a . w
    Cell2 rwhisker(const Cell2& a, const Cell1& w) const;
    // Godement product b * a: g1 f1 => g2 f2.
    Cell2 hcomp2(const Cell2& b, const Cell2& a) const;

    virtual bool eq2(const Cell2& a, const Cell2& b) const;
    virtual std::optional<Cell2> inverse(const Cell2& a) const;
    bool is_invertible(const Cell2& a) const;
    // Inverse of an invertible 2-cell; PreconditionError otherwise.
    Cell2 inv(const Cell2& a) const;

    virtual bool sigma_object(const Cell1& r) const = 0;
    // Membership of (left, right, delta): top -> bottom in the chosen
    // subcategory; boundaries and invertibility are checked by callers.
    virtual bool sigma_morphism(const Square& q) const = 0;
    std::vector<Cell1> sigma_objects(const Obj& a, const Obj& b) const;

    // Fixed completion of the span (r, g) with r in Sigma. Identity legs use
    // the identity squares; everything else goes through choose_square.
    Square canonical_square(const Cell1& r, const Cell1& g) const;

    // Witness providers. bound < 0 selects the model default. All of them
    // throw BoundExhausted when nothing is found within the bound.
    // Square: given s in Sigma and f with a common domain, a Sigma-square with
    // top s and left f.
    virtual Square square_witness(const Cell1& s, const Cell1& f, int bound) const = 0;
    // Equi-insertion: q = (top r, left f, right f', bottom s), g parallel to f',
    // alpha: f' r => g r. Returns d with (id, d): s -> d s in Sigma and
    // alpha': d f' => d g such that d alpha = alpha' r.
    virtual EquiInsertion equi_insertion_witness(const Square& q, const Cell1& g,
                                                 const Cell2& alpha, int bound) const = 0;
    // Equification: a, b: f' => g with a r = b r. Returns d with (id, d) in
    // Sigma and d a = d b.
    virtual Cell1 equification_witness(const Square& q, const Cell2& a, const Cell2& b,
                                       int bound) const = 0;

protected:
    virtual Cell1 do_comp1(const Cell1& g, const Cell1& f) const = 0;
    virtual Cell2 do_vcomp2(const Cell2& b, const Cell2& a) const = 0;
    virtual Cell2 do_lwhisker(const Cell1& w, const Cell2& a) const = 0;
    virtual Cell2 do_rwhisker(const Cell2& a, const Cell1& w) const = 0;
    virtual Square choose_square(const Cell1& r, const Cell1& g) const;
};

// Models with at most one 2-cell per parallel pair; the 2-cell f => g exists
// iff leq(f, g).
class ThinModel : public TwoCatModel {
public:
    virtual bool leq(const Cell1& f, const Cell1& g) const = 0;

    std::vector<Cell2> two_cells(const Cell1& f, const Cell1& g) const override;
    Cell2 id2(const Cell1& f) const override;
    bool eq2(const Cell2& a, const Cell2& b) const override;
    std::optional<Cell2> inverse(const Cell2& a) const override;
    // The unique 2-cell f => g; PreconditionError if absent.
    Cell2 cell(const Cell1& f, const Cell1& g) const;

protected:
    Cell2 do_vcomp2(const Cell2& b, const Cell2& a) const override;
    Cell2 do_lwhisker(const Cell1& w, const Cell2& a) const override;
    Cell2 do_rwhisker(const Cell2& a, const Cell1& w) const override;
};

std::string to_string(const Code& c);

}  // namespace lax
