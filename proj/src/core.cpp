#include "lax/core.hpp"

namespace lax {

std::string to_string(const Code& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c[i]);
    }
    return out + "]";
}

std::string TwoCatModel::describe(const Obj& a) const { return to_string(a.code); }

std::string TwoCatModel::describe(const Cell1& f) const {
    return describe(f.dom) + "-" + to_string(f.code) + "->" + describe(f.cod);
}

bool TwoCatModel::is_identity(const Cell1& f) const {
    return f.dom == f.cod && f == id1(f.dom);
}

Cell1 TwoCatModel::comp1(const Cell1& g, const Cell1& f) const {
    if (f.cod != g.dom)
        throw BoundaryError("comp1: codomain " + describe(f.cod) + " does not match domain " +
                            describe(g.dom));
    return do_comp1(g, f);
}

Cell2 TwoCatModel::vcomp2(const Cell2& b, const Cell2& a) const {
    if (a.tgt != b.src) throw BoundaryError("vcomp2: 2-cells do not chain");
    return do_vcomp2(b, a);
}

Cell2 TwoCatModel::lwhisker(const Cell1& w, const Cell2& a) const {
    if (a.src.cod != w.dom) throw BoundaryError("whisker: w does not follow the 2-cell");
    return do_lwhisker(w, a);
}

Cell2 TwoCatModel::rwhisker(const Cell2& a, const Cell1& w) const {
    if (a.src.dom != w.cod) throw BoundaryError("whisker: w does not precede the 2-cell");
    return do_rwhisker(a, w);
}

Cell2 TwoCatModel::whisker(const Cell1& w, const Cell2& a, Side side) const {
    return side == Side::left ? lwhisker(w, a) : rwhisker(a, w);
}

Cell2 TwoCatModel::hcomp2(const Cell2& b, const Cell2& a) const {
    return vcomp2(lwhisker(b.tgt, a), rwhisker(b, a.src));
}

bool TwoCatModel::eq2(const Cell2& a, const Cell2& b) const { return a == b; }

std::optional<Cell2> TwoCatModel::inverse(const Cell2& a) const {
    const Cell2 ida = id2(a.src);
    const Cell2 idb = id2(a.tgt);
    for (const Cell2& b : two_cells(a.tgt, a.src)) {
        if (eq2(vcomp2(b, a), ida) && eq2(vcomp2(a, b), idb)) return b;
    }
    return std::nullopt;
}

bool TwoCatModel::is_invertible(const Cell2& a) const { return inverse(a).has_value(); }

Cell2 TwoCatModel::inv(const Cell2& a) const {
    auto b = inverse(a);
    if (!b) throw PreconditionError("2-cell is not invertible");
    return *b;
}

std::vector<Cell1> TwoCatModel::sigma_objects(const Obj& a, const Obj& b) const {
    std::vector<Cell1> out;
    for (Cell1& f : one_cells(a, b))
        if (sigma_object(f)) out.push_back(std::move(f));
    return out;
}

Square TwoCatModel::canonical_square(const Cell1& r, const Cell1& g) const {
    if (r.dom != g.dom) throw BoundaryError("canonical_square: legs do not share a domain");
    if (is_identity(r)) return Square{r, g, g, id1(g.cod), id2(g)};
    if (is_identity(g)) return Square{r, g, id1(r.cod), r, id2(r)};
    return choose_square(r, g);
}

Square TwoCatModel::choose_square(const Cell1& r, const Cell1& g) const {
    return square_witness(r, g, -1);
}

std::vector<Cell2> ThinModel::two_cells(const Cell1& f, const Cell1& g) const {
    if (f.dom != g.dom || f.cod != g.cod) throw BoundaryError("two_cells: 1-cells not parallel");
    if (leq(f, g)) return {Cell2{f, g, {}}};
    return {};
}

Cell2 ThinModel::id2(const Cell1& f) const { return Cell2{f, f, {}}; }

bool ThinModel::eq2(const Cell2& a, const Cell2& b) const {
    return a.src == b.src && a.tgt == b.tgt;
}

std::optional<Cell2> ThinModel::inverse(const Cell2& a) const {
    if (leq(a.tgt, a.src)) return Cell2{a.tgt, a.src, {}};
    return std::nullopt;
}

Cell2 ThinModel::cell(const Cell1& f, const Cell1& g) const {
    if (f.dom != g.dom || f.cod != g.cod) throw BoundaryError("cell: 1-cells not parallel");
    if (!leq(f, g)) throw PreconditionError("no 2-cell " + describe(f) + " => " + describe(g));
    return Cell2{f, g, {}};
}

Cell2 ThinModel::do_vcomp2(const Cell2& b, const Cell2& a) const { return Cell2{a.src, b.tgt, {}}; }

Cell2 ThinModel::do_lwhisker(const Cell1& w, const Cell2& a) const {
    return Cell2{comp1(w, a.src), comp1(w, a.tgt), {}};
}

Cell2 ThinModel::do_rwhisker(const Cell2& a, const Cell1& w) const {
    return Cell2{comp1(a.src, w), comp1(a.tgt, w), {}};
}

}  // namespace lax
