#include "lax/category.hpp"

namespace lax {

int FiniteCategorySpec::object_index(const std::string& name) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == name) return static_cast<int>(i);
    throw SpecError("unknown object '" + name + "'");
}

int FiniteCategorySpec::morphism_index(const std::string& name) const {
    for (std::size_t i = 0; i < morphisms.size(); ++i)
        if (morphisms[i].name == name) return static_cast<int>(i);
    throw SpecError("unknown morphism '" + name + "'");
}

void FiniteCategorySpec::validate() const {
    const int n = static_cast<int>(morphisms.size());
    if (identity.size() != objects.size()) throw SpecError("one identity per object required");
    if (compose.size() != morphisms.size() || sigma.size() != morphisms.size())
        throw SpecError("composition table or sigma flags have the wrong size");
    for (std::size_t a = 0; a < objects.size(); ++a) {
        const auto& m = morphisms.at(identity[a]);
        if (m.dom != static_cast<int>(a) || m.cod != static_cast<int>(a))
            throw SpecError("identity of '" + objects[a] + "' has the wrong boundary");
    }
    for (int g = 0; g < n; ++g) {
        if (compose[g].size() != morphisms.size()) throw SpecError("composition table row size");
        for (int f = 0; f < n; ++f) {
            const int gf = compose[g][f];
            const bool composable = morphisms[f].cod == morphisms[g].dom;
            if (!composable) {
                if (gf != -1)
                    throw SpecError("composite given for non-composable pair (" + morphisms[g].name +
                                    ", " + morphisms[f].name + ")");
                continue;
            }
            if (gf < 0 || gf >= n)
                throw SpecError("missing composite " + morphisms[g].name + " . " + morphisms[f].name);
            if (morphisms[gf].dom != morphisms[f].dom || morphisms[gf].cod != morphisms[g].cod)
                throw SpecError("composite " + morphisms[g].name + " . " + morphisms[f].name +
                                " has the wrong boundary");
        }
    }
    for (int f = 0; f < n; ++f) {
        if (compose[identity[morphisms[f].cod]][f] != f || compose[f][identity[morphisms[f].dom]] != f)
            throw SpecError("identity law fails for " + morphisms[f].name);
    }
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            if (morphisms[g].cod != morphisms[h].dom) continue;
            for (int f = 0; f < n; ++f) {
                if (morphisms[f].cod != morphisms[g].dom) continue;
                if (compose[compose[h][g]][f] != compose[h][compose[g][f]])
                    throw SpecError("composition is not associative on (" + morphisms[h].name + ", " +
                                    morphisms[g].name + ", " + morphisms[f].name + ")");
            }
        }
}

CategoryBuilder& CategoryBuilder::object(const std::string& name) {
    objects_.push_back(name);
    return *this;
}

CategoryBuilder& CategoryBuilder::morphism(const std::string& name, const std::string& dom,
                                           const std::string& cod) {
    arrow_names_.push_back(name);
    FiniteCategorySpec::Morphism m;
    m.name = name;
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        if (objects_[i] == dom) m.dom = static_cast<int>(i);
        if (objects_[i] == cod) m.cod = static_cast<int>(i);
    }
    FiniteCategorySpec probe;
    probe.objects = objects_;
    probe.object_index(dom);
    probe.object_index(cod);
    arrows_.push_back(m);
    return *this;
}

CategoryBuilder& CategoryBuilder::composite(const std::string& g, const std::string& f,
                                            const std::string& gf) {
    composites_.push_back({g, f, gf});
    return *this;
}

CategoryBuilder& CategoryBuilder::sigma(const std::string& name) {
    sigma_.push_back(name);
    return *this;
}

CategoryBuilder& CategoryBuilder::sigma_identities() {
    sigma_identities_ = true;
    return *this;
}

FiniteCategorySpec CategoryBuilder::build() const {
    FiniteCategorySpec s;
    s.objects = objects_;
    for (std::size_t a = 0; a < objects_.size(); ++a) {
        s.identity.push_back(static_cast<int>(s.morphisms.size()));
        s.morphisms.push_back({"id_" + objects_[a], static_cast<int>(a), static_cast<int>(a)});
    }
    for (const auto& m : arrows_) {
        for (const auto& existing : s.morphisms)
            if (existing.name == m.name) throw SpecError("duplicate morphism '" + m.name + "'");
        s.morphisms.push_back(m);
    }
    const int n = static_cast<int>(s.morphisms.size());
    s.compose.assign(n, std::vector<int>(n, -1));
    s.sigma.assign(n, false);
    for (int f = 0; f < n; ++f) {
        s.compose[s.identity[s.morphisms[f].cod]][f] = f;
        s.compose[f][s.identity[s.morphisms[f].dom]] = f;
    }
    for (const auto& c : composites_) {
        const int g = s.morphism_index(c[0]);
        const int f = s.morphism_index(c[1]);
        const int gf = s.morphism_index(c[2]);
        if (s.compose[g][f] != -1 && s.compose[g][f] != gf)
            throw SpecError("conflicting composite for (" + c[0] + ", " + c[1] + ")");
        s.compose[g][f] = gf;
    }
    if (sigma_identities_)
        for (int i : s.identity) s.sigma[i] = true;
    for (const auto& name : sigma_) s.sigma[s.morphism_index(name)] = true;
    s.validate();
    return s;
}

TrivialModel::TrivialModel(FiniteCategorySpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    const std::size_t k = spec_.objects.size();
    hom_.assign(k, std::vector<std::vector<int>>(k));
    for (std::size_t i = 0; i < spec_.morphisms.size(); ++i)
        hom_[spec_.morphisms[i].dom][spec_.morphisms[i].cod].push_back(static_cast<int>(i));
}

TrivialModel load_trivial_model(FiniteCategorySpec spec) { return TrivialModel(std::move(spec)); }

std::string TrivialModel::describe(const Obj& a) const { return spec_.objects.at(a.code.at(0)); }

std::string TrivialModel::describe(const Cell1& f) const {
    return spec_.morphisms.at(index(f)).name;
}

std::vector<Obj> TrivialModel::objects() const {
    std::vector<Obj> out;
    for (std::size_t i = 0; i < spec_.objects.size(); ++i) out.push_back(obj(static_cast<int>(i)));
    return out;
}

Cell1 TrivialModel::arrow(int i) const {
    const auto& m = spec_.morphisms.at(i);
    return Cell1{obj(m.dom), obj(m.cod), {static_cast<std::uint64_t>(i)}};
}

std::vector<Cell1> TrivialModel::one_cells(const Obj& a, const Obj& b) const {
    std::vector<Cell1> out;
    for (int i : hom_.at(a.code.at(0)).at(b.code.at(0))) out.push_back(arrow(i));
    return out;
}

Cell1 TrivialModel::id1(const Obj& a) const { return arrow(spec_.identity.at(a.code.at(0))); }

bool TrivialModel::sigma_object(const Cell1& r) const { return spec_.sigma.at(index(r)); }

bool TrivialModel::sigma_morphism(const Square& q) const {
    return sigma_object(q.top) && sigma_object(q.bottom) &&
           comp1(q.bottom, q.left) == comp1(q.right, q.top);
}

Cell1 TrivialModel::do_comp1(const Cell1& g, const Cell1& f) const {
    return arrow(spec_.compose.at(index(g)).at(index(f)));
}

Square TrivialModel::square_witness(const Cell1& s, const Cell1& f, int) const {
    if (s.dom != f.dom) throw BoundaryError("square: legs do not share a domain");
    if (!sigma_object(s)) throw PreconditionError("square: top leg is not in sigma");
    for (const Obj& w : objects())
        for (const Cell1& s2 : one_cells(f.cod, w)) {
            if (!sigma_object(s2)) continue;
            const Cell1 lhs = comp1(s2, f);
            for (const Cell1& f2 : one_cells(s.cod, w))
                if (comp1(f2, s) == lhs) return Square{s, f, f2, s2, id2(lhs)};
        }
    throw BoundExhausted("square: no completion of (" + describe(s) + ", " + describe(f) + ")");
}

EquiInsertion TrivialModel::equi_insertion_witness(const Square& q, const Cell1& g,
                                                   const Cell2& alpha, int) const {
    if (alpha.src != comp1(q.right, q.top) || alpha.tgt != comp1(g, q.top))
        throw BoundaryError("equi-insertion: alpha has the wrong boundary");
    if (alpha.src != alpha.tgt) throw PreconditionError("equi-insertion: alpha is not a 2-cell");
    if (q.right == g && sigma_object(q.bottom)) return EquiInsertion{id1(g.cod), id2(g)};
    for (const Obj& e : objects())
        for (const Cell1& d : one_cells(q.right.cod, e)) {
            if (comp1(d, q.right) != comp1(d, g) || !sigma_object(comp1(d, q.bottom))) continue;
            return EquiInsertion{d, id2(comp1(d, q.right))};
        }
    throw BoundExhausted("equi-insertion: no witness");
}

Cell1 TrivialModel::equification_witness(const Square& q, const Cell2& a, const Cell2& b, int) const {
    if (a.src != b.src || a.tgt != b.tgt || a.src != q.right)
        throw BoundaryError("equification: 2-cells not parallel to the right edge");
    const Cell1 d = id1(q.right.cod);
    if (sigma_object(q.bottom)) return d;
    throw BoundExhausted("equification: no witness");
}

}  // namespace lax
