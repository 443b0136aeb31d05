#include "lax/pos.hpp"

#include <algorithm>
#include <numeric>

namespace lax {

namespace {

std::vector<int> assignment_of(const Cell1& f) {
    return std::vector<int>(f.code.begin(), f.code.end());
}

Cell1 make_cell(const FinitePoset& a, const FinitePoset& b, const std::vector<int>& m) {
    return Cell1{a.obj(), b.obj(), Code(m.begin(), m.end())};
}

bool bit(std::uint64_t s, int i) { return (s >> i) & 1u; }

int default_bound_for(int a, int b) { return a + b + 1; }

}  // namespace

std::uint64_t FinitePoset::down(int i) const {
    std::uint64_t s = 0;
    for (int j = 0; j < n; ++j)
        if (leq(j, i)) s |= 1ull << j;
    return s;
}

Obj FinitePoset::obj() const {
    Obj o;
    o.code.reserve(n + 1);
    o.code.push_back(static_cast<std::uint64_t>(n));
    o.code.insert(o.code.end(), up.begin(), up.end());
    return o;
}

FinitePoset FinitePoset::from(const Obj& a) {
    if (a.code.empty()) throw BoundaryError("not a poset object");
    FinitePoset p;
    p.n = static_cast<int>(a.code[0]);
    p.up.assign(a.code.begin() + 1, a.code.end());
    return p;
}

FinitePoset FinitePoset::from_relation(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0 || n > max_poset_size) throw SpecError("poset size out of range");
    FinitePoset p;
    p.n = n;
    p.up.assign(n, 0);
    for (int i = 0; i < n; ++i) p.up[i] |= 1ull << i;
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw SpecError("relation element out of range");
        p.up[a] |= 1ull << b;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && p.leq(i, j) && p.leq(j, i))
                throw SpecError("leq is not antisymmetric on elements " + std::to_string(i) +
                                " and " + std::to_string(j));
            if (!p.leq(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (p.leq(j, k) && !p.leq(i, k))
                    throw SpecError("leq is not transitive: " + std::to_string(i) + "<=" +
                                    std::to_string(j) + "<=" + std::to_string(k));
        }
    return p;
}

FinitePoset chain(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return FinitePoset::from_relation(n, pairs);
}

FinitePoset discrete(int n) { return FinitePoset::from_relation(n, {}); }

std::string describe_poset(const FinitePoset& p) {
    std::string out = "P" + std::to_string(p.n) + "{";
    bool first = true;
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (i != j && p.leq(i, j)) {
                if (!first) out += ",";
                first = false;
                out += std::to_string(i) + "<" + std::to_string(j);
            }
    return out + "}";
}

Cell1 MonotoneMap::cell() const { return make_cell(dom, cod, assignment); }

MonotoneMap MonotoneMap::from(const Cell1& f) {
    return MonotoneMap{FinitePoset::from(f.dom), FinitePoset::from(f.cod), assignment_of(f)};
}

bool is_monotone(const FinitePoset& a, const FinitePoset& b, const std::vector<int>& m) {
    if (static_cast<int>(m.size()) != a.n) return false;
    for (int x : m)
        if (x < 0 || x >= b.n) return false;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (a.leq(i, j) && !b.leq(m[i], m[j])) return false;
    return true;
}

bool pos_is_embedding(const MonotoneMap& m) {
    const auto& a = m.dom;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (a.leq(i, j) != m.cod.leq(m.assignment[i], m.assignment[j])) return false;
    for (int i = 0; i < a.n; ++i)
        for (int j = i + 1; j < a.n; ++j)
            if (m.assignment[i] == m.assignment[j]) return false;
    return true;
}

bool pos_is_embedding(const Cell1& m) { return pos_is_embedding(MonotoneMap::from(m)); }

std::vector<std::vector<int>> monotone_maps(const FinitePoset& a, const FinitePoset& b) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(a.n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == a.n) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v < b.n; ++v) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (a.leq(j, i) && !b.leq(cur[j], v)) ok = false;
                if (a.leq(i, j) && !b.leq(v, cur[j])) ok = false;
            }
            if (!ok) continue;
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<FinitePoset> naturally_labeled_posets(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<FinitePoset> out;
    const std::uint64_t total = 1ull << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        FinitePoset p;
        p.n = n;
        p.up.assign(n, 0);
        for (int i = 0; i < n; ++i) p.up[i] = 1ull << i;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (bit(mask, static_cast<int>(k))) p.up[slots[k].first] |= 1ull << slots[k].second;
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = 0; j < n && transitive; ++j)
                if (p.leq(i, j) && (p.up[j] & ~p.up[i])) transitive = false;
        if (transitive) out.push_back(std::move(p));
    }
    return out;
}

bool isomorphic(const FinitePoset& a, const FinitePoset& b) {
    if (a.n != b.n) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < a.n && ok; ++i)
            for (int j = 0; j < a.n && ok; ++j)
                if (a.leq(i, j) != b.leq(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<FinitePoset> unlabeled_posets(int max_n) {
    std::vector<FinitePoset> out;
    for (int n = 0; n <= max_n; ++n) {
        const std::size_t start = out.size();
        for (auto& p : naturally_labeled_posets(n)) {
            bool fresh = true;
            for (std::size_t k = start; k < out.size() && fresh; ++k)
                if (isomorphic(out[k], p)) fresh = false;
            if (fresh) out.push_back(std::move(p));
        }
    }
    return out;
}

std::uint64_t down_closure(const FinitePoset& p, std::uint64_t s) {
    std::uint64_t out = 0;
    for (int i = 0; i < p.n; ++i)
        if (bit(s, i)) out |= p.down(i);
    return out;
}

LowerSetLattice::LowerSetLattice(FinitePoset p) : base(std::move(p)) {
    if (base.n > 20) throw PreconditionError("lower-set lattice too large to enumerate");
    for (std::uint64_t s = 0; s < (1ull << base.n); ++s)
        if (is_lower(s)) sets.push_back(s);
}

bool LowerSetLattice::is_lower(std::uint64_t s) const { return down_closure(base, s) == s; }

std::uint64_t preimage(const MonotoneMap& f, std::uint64_t s) {
    std::uint64_t out = 0;
    for (int i = 0; i < f.dom.n; ++i)
        if (bit(s, f.assignment[i])) out |= 1ull << i;
    return out;
}

std::uint64_t exists_image(const MonotoneMap& f, std::uint64_t s) {
    std::uint64_t img = 0;
    for (int i = 0; i < f.dom.n; ++i)
        if (bit(s, i)) img |= 1ull << f.assignment[i];
    return down_closure(f.cod, img);
}

namespace {

struct PosSquare {
    MonotoneMap m, n, u, v;
};

PosSquare unpack(const Square& q) {
    PosSquare p{MonotoneMap::from(q.top), MonotoneMap::from(q.bottom), MonotoneMap::from(q.left),
                MonotoneMap::from(q.right)};
    if (q.top.dom != q.left.dom || q.left.cod != q.bottom.dom || q.top.cod != q.right.dom ||
        q.right.cod != q.bottom.cod)
        throw BoundaryError("square edges do not match");
    for (int x = 0; x < p.m.dom.n; ++x)
        if (p.n.assignment[p.u.assignment[x]] != p.v.assignment[p.m.assignment[x]])
            throw NotASquare("square does not commute at element " + std::to_string(x));
    return p;
}

}  // namespace

bool pos_square_condition_elementwise(const Square& q) {
    const PosSquare p = unpack(q);
    const FinitePoset& X = p.m.dom;
    const FinitePoset& Y = p.m.cod;
    const FinitePoset& Z = p.n.dom;
    const FinitePoset& W = p.n.cod;
    for (int y = 0; y < Y.n; ++y)
        for (int z = 0; z < Z.n; ++z) {
            if (!W.leq(p.n.assignment[z], p.v.assignment[y])) continue;
            bool found = false;
            for (int x = 0; x < X.n && !found; ++x)
                found = Z.leq(z, p.u.assignment[x]) && Y.leq(p.m.assignment[x], y);
            if (!found) return false;
        }
    return true;
}

bool pos_square_condition_lower_sets(const Square& q) {
    const PosSquare p = unpack(q);
    const LowerSetLattice dy(p.m.cod);
    for (std::uint64_t l : dy.sets)
        if (exists_image(p.u, preimage(p.m, l)) != preimage(p.n, exists_image(p.v, l))) return false;
    return true;
}

bool pos_square_in_sigma(const Square& q) {
    const PosSquare p = unpack(q);
    if (!pos_is_embedding(p.m) || !pos_is_embedding(p.n)) return false;
    return pos_square_condition_elementwise(q);
}

Quotient quotient_preorder(int n, std::vector<std::uint64_t> rel) {
    for (int i = 0; i < n; ++i) rel[i] |= 1ull << i;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (bit(rel[i], k)) rel[i] |= rel[k];
    Quotient q;
    q.cls.assign(n, -1);
    std::vector<int> rep;
    for (int i = 0; i < n; ++i) {
        if (q.cls[i] >= 0) continue;
        const int c = static_cast<int>(rep.size());
        rep.push_back(i);
        for (int j = i; j < n; ++j)
            if (bit(rel[i], j) && bit(rel[j], i)) q.cls[j] = c;
    }
    const int m = static_cast<int>(rep.size());
    if (m > max_poset_size) throw PreconditionError("quotient exceeds the poset size limit");
    q.poset.n = m;
    q.poset.up.assign(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (bit(rel[rep[a]], rep[b])) q.poset.up[a] |= 1ull << b;
    return q;
}

int pos_size(const Obj& a) { return a.code.empty() ? 0 : static_cast<int>(a.code[0]); }

int PosModel::object_size(const Obj& a) const { return pos_size(a); }

Square pos_pushout_square(const Cell1& s, const Cell1& f) {
    if (s.dom != f.dom) throw BoundaryError("square: legs do not share a domain");
    const MonotoneMap ms = MonotoneMap::from(s);
    const MonotoneMap mf = MonotoneMap::from(f);
    if (!pos_is_embedding(ms)) throw PreconditionError("square: top leg is not an embedding");
    const FinitePoset& Y = ms.cod;
    const FinitePoset& Z = mf.cod;
    const int nz = Z.n;
    const int total = Z.n + Y.n;
    if (total > max_poset_size) throw PreconditionError("pushout exceeds the poset size limit");
    std::vector<std::uint64_t> rel(total, 0);
    for (int i = 0; i < Z.n; ++i) rel[i] = Z.up[i];
    for (int i = 0; i < Y.n; ++i) rel[nz + i] = Y.up[i] << nz;
    for (int x = 0; x < ms.dom.n; ++x) {
        const int a = mf.assignment[x];
        const int b = nz + ms.assignment[x];
        rel[a] |= 1ull << b;
        rel[b] |= 1ull << a;
    }
    const Quotient qt = quotient_preorder(total, rel);
    std::vector<int> sp(qt.cls.begin(), qt.cls.begin() + nz);
    std::vector<int> fp(qt.cls.begin() + nz, qt.cls.end());
    const Cell1 s2 = make_cell(Z, qt.poset, sp);
    const Cell1 f2 = make_cell(Y, qt.poset, fp);
    Cell1 bottom_left{f.dom, qt.poset.obj(), {}};
    for (int x = 0; x < ms.dom.n; ++x) bottom_left.code.push_back(sp[mf.assignment[x]]);
    return Square{s, f, f2, s2, Cell2{bottom_left, bottom_left, {}}};
}

Square pos_search_square(const Cell1& s, const Cell1& f, int bound) {
    if (s.dom != f.dom) throw BoundaryError("square: legs do not share a domain");
    const MonotoneMap ms = MonotoneMap::from(s);
    const MonotoneMap mf = MonotoneMap::from(f);
    const FinitePoset& Y = ms.cod;
    const FinitePoset& Z = mf.cod;
    for (int n = 0; n <= bound; ++n) {
        for (const FinitePoset& W : naturally_labeled_posets(n)) {
            const auto zmaps = monotone_maps(Z, W);
            const auto ymaps = monotone_maps(Y, W);
            for (const auto& sp : zmaps) {
                const MonotoneMap msp{Z, W, sp};
                if (!pos_is_embedding(msp)) continue;
                for (const auto& fp : ymaps) {
                    bool commutes = true;
                    for (int x = 0; x < ms.dom.n && commutes; ++x)
                        commutes = sp[mf.assignment[x]] == fp[ms.assignment[x]];
                    if (!commutes) continue;
                    const Cell1 s2 = msp.cell();
                    const Cell1 f2 = make_cell(Y, W, fp);
                    Cell1 diag{f.dom, W.obj(), {}};
                    for (int x = 0; x < ms.dom.n; ++x) diag.code.push_back(sp[mf.assignment[x]]);
                    Square q{s, f, f2, s2, Cell2{diag, diag, {}}};
                    if (pos_square_condition_elementwise(q)) return q;
                }
            }
        }
    }
    throw BoundExhausted("square: no witness with at most " + std::to_string(bound) + " elements");
}

Square pos_witness_square(const Cell1& s, const Cell1& f, int bound) {
    if (bound < 0) bound = default_bound_for(pos_size(s.cod), pos_size(f.cod));
    Square q = pos_pushout_square(s, f);
    if (pos_size(q.bottom.cod) <= bound && pos_square_in_sigma(q)) return q;
    return pos_search_square(s, f, bound);
}

namespace {

void check_insertion_input(const Square& q, const Cell1& g) {
    if (g.dom != q.right.dom || g.cod != q.right.cod)
        throw BoundaryError("equi-insertion: g is not parallel to the right edge");
    const MonotoneMap r = MonotoneMap::from(q.top);
    const MonotoneMap fp = MonotoneMap::from(q.right);
    const MonotoneMap mg = MonotoneMap::from(g);
    for (int a = 0; a < r.dom.n; ++a)
        if (!fp.cod.leq(fp.assignment[r.assignment[a]], mg.assignment[r.assignment[a]]))
            throw PreconditionError("equi-insertion: no 2-cell f' r => g r");
}

bool insertion_ok(const MonotoneMap& s, const MonotoneMap& fp, const MonotoneMap& g,
                  const FinitePoset& E, const std::vector<int>& d) {
    for (std::size_t b = 0; b < fp.assignment.size(); ++b)
        if (!E.leq(d[fp.assignment[b]], d[g.assignment[b]])) return false;
    const MonotoneMap ds{s.dom, E, {}};
    MonotoneMap comp = ds;
    for (int c : s.assignment) comp.assignment.push_back(d[c]);
    if (!pos_is_embedding(comp)) return false;
    // (id, d): s -> d s reduces to: d s(z) <= d(y) implies s(z) <= y.
    for (int z = 0; z < s.dom.n; ++z)
        for (int y = 0; y < s.cod.n; ++y)
            if (E.leq(d[s.assignment[z]], d[y]) && !s.cod.leq(s.assignment[z], y)) return false;
    return true;
}

EquiInsertion make_insertion(const Square& q, const Cell1& g, const FinitePoset& E,
                             const std::vector<int>& d) {
    const MonotoneMap D = MonotoneMap::from(q.right);
    const Cell1 dc = make_cell(D.cod, E, d);
    Cell1 dfp{q.right.dom, E.obj(), {}};
    Cell1 dg{g.dom, E.obj(), {}};
    for (auto x : q.right.code) dfp.code.push_back(d[x]);
    for (auto x : g.code) dg.code.push_back(d[x]);
    return EquiInsertion{dc, Cell2{dfp, dg, {}}};
}

}  // namespace

EquiInsertion pos_insertion_quotient(const Square& q, const Cell1& g) {
    check_insertion_input(q, g);
    const MonotoneMap fp = MonotoneMap::from(q.right);
    const MonotoneMap mg = MonotoneMap::from(g);
    const FinitePoset& D = fp.cod;
    std::vector<std::uint64_t> rel(D.up);
    for (int b = 0; b < fp.dom.n; ++b) rel[fp.assignment[b]] |= 1ull << mg.assignment[b];
    const Quotient qt = quotient_preorder(D.n, rel);
    return make_insertion(q, g, qt.poset, qt.cls);
}

EquiInsertion pos_search_equi_insertion(const Square& q, const Cell1& g, int bound) {
    check_insertion_input(q, g);
    const MonotoneMap s = MonotoneMap::from(q.bottom);
    const MonotoneMap fp = MonotoneMap::from(q.right);
    const MonotoneMap mg = MonotoneMap::from(g);
    for (int n = 0; n <= bound; ++n)
        for (const FinitePoset& E : naturally_labeled_posets(n))
            for (const auto& d : monotone_maps(fp.cod, E))
                if (insertion_ok(s, fp, mg, E, d)) return make_insertion(q, g, E, d);
    throw BoundExhausted("equi-insertion: no witness with at most " + std::to_string(bound) +
                         " elements");
}

EquiInsertion pos_equi_insertion(const Square& q, const Cell1& g, int bound) {
    if (bound < 0) bound = default_bound_for(pos_size(q.right.cod), 0);
    EquiInsertion e = pos_insertion_quotient(q, g);
    const MonotoneMap d = MonotoneMap::from(e.d);
    if (d.cod.n <= bound &&
        insertion_ok(MonotoneMap::from(q.bottom), MonotoneMap::from(q.right), MonotoneMap::from(g),
                     d.cod, d.assignment))
        return e;
    return pos_search_equi_insertion(q, g, bound);
}

PosModel::PosModel(int universe_max) : universe_max_(universe_max) {
    for (const auto& p : unlabeled_posets(universe_max_)) universe_.push_back(p.obj());
}

std::string PosModel::describe(const Obj& a) const { return describe_poset(FinitePoset::from(a)); }

std::string PosModel::describe(const Cell1& f) const {
    std::string out = "[";
    for (std::size_t i = 0; i < f.code.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f.code[i]);
    }
    return describe(f.dom) + "-" + out + "]->" + describe(f.cod);
}

std::vector<Obj> PosModel::objects() const { return universe_; }

std::vector<Cell1> PosModel::one_cells(const Obj& a, const Obj& b) const {
    const FinitePoset pa = FinitePoset::from(a);
    const FinitePoset pb = FinitePoset::from(b);
    std::vector<Cell1> out;
    for (const auto& m : monotone_maps(pa, pb)) out.push_back(make_cell(pa, pb, m));
    return out;
}

Cell1 PosModel::id1(const Obj& a) const {
    Cell1 f{a, a, {}};
    for (int i = 0; i < pos_size(a); ++i) f.code.push_back(i);
    return f;
}

bool PosModel::leq(const Cell1& f, const Cell1& g) const {
    if (f.dom != g.dom || f.cod != g.cod) return false;
    const FinitePoset cod = FinitePoset::from(f.cod);
    for (std::size_t i = 0; i < f.code.size(); ++i)
        if (!cod.leq(static_cast<int>(f.code[i]), static_cast<int>(g.code[i]))) return false;
    return true;
}

bool PosModel::sigma_object(const Cell1& r) const { return pos_is_embedding(r); }

bool PosModel::sigma_morphism(const Square& q) const {
    try {
        return pos_square_in_sigma(q);
    } catch (const NotASquare&) {
        return false;
    }
}

Square PosModel::square_witness(const Cell1& s, const Cell1& f, int bound) const {
    return pos_witness_square(s, f, bound);
}

EquiInsertion PosModel::equi_insertion_witness(const Square& q, const Cell1& g, const Cell2& alpha,
                                               int bound) const {
    if (alpha.src != comp1(q.right, q.top) || alpha.tgt != comp1(g, q.top))
        throw BoundaryError("equi-insertion: alpha has the wrong boundary");
    return pos_equi_insertion(q, g, bound);
}

Cell1 PosModel::equification_witness(const Square& q, const Cell2& a, const Cell2& b, int) const {
    if (a.src != b.src || a.tgt != b.tgt || a.src != q.right)
        throw BoundaryError("equification: 2-cells not parallel to the right edge");
    return id1(q.right.cod);
}

Cell1 PosModel::do_comp1(const Cell1& g, const Cell1& f) const {
    Cell1 out{f.dom, g.cod, {}};
    out.code.reserve(f.code.size());
    for (auto x : f.code) out.code.push_back(g.code[x]);
    return out;
}

}  // namespace lax
