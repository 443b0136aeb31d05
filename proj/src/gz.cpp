#include "lax/gz.hpp"

#include <numeric>
#include <set>

#include "lax/fractions.hpp"

namespace lax {

namespace {

struct Arrows {
    const FiniteCategorySpec& spec;

    int comp(int g, int f) const { return spec.compose.at(g).at(f); }
    bool sigma(int i) const { return spec.sigma.at(i); }
    int dom(int i) const { return spec.morphisms.at(i).dom; }
    int cod(int i) const { return spec.morphisms.at(i).cod; }
    const std::string& name(int i) const { return spec.morphisms.at(i).name; }
    int count() const { return static_cast<int>(spec.morphisms.size()); }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

std::vector<int> number_classes(UnionFind& uf, std::size_t n, int& classes) {
    std::vector<int> root_class(n, -1);
    std::vector<int> out(n);
    classes = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int r = uf.find(static_cast<int>(i));
        if (root_class[r] < 0) root_class[r] = classes++;
        out[i] = root_class[r];
    }
    return out;
}

std::string fraction_name(const Arrows& ar, const Fraction& x) {
    return "(" + ar.name(x.f) + ", " + ar.name(x.s) + ")";
}

}  // namespace

void check_classical_axioms(const FiniteCategorySpec& spec) {
    const Arrows ar{spec};
    for (std::size_t a = 0; a < spec.objects.size(); ++a)
        if (!ar.sigma(spec.identity.at(a))) throw NotLocalizable("identity", "1_" + spec.objects[a] + " not in Sigma");
    for (int s = 0; s < ar.count(); ++s) {
        if (!ar.sigma(s)) continue;
        for (int t = 0; t < ar.count(); ++t)
            if (ar.sigma(t) && ar.dom(t) == ar.cod(s) && !ar.sigma(ar.comp(t, s)))
                throw NotLocalizable("composition", ar.name(t) + " . " + ar.name(s) + " not in Sigma");
    }
    for (int s = 0; s < ar.count(); ++s) {
        if (!ar.sigma(s)) continue;
        for (int f = 0; f < ar.count(); ++f) {
            if (ar.dom(f) != ar.dom(s)) continue;
            bool found = false;
            for (int s2 = 0; s2 < ar.count() && !found; ++s2) {
                if (!ar.sigma(s2) || ar.dom(s2) != ar.cod(f)) continue;
                for (int f2 = 0; f2 < ar.count() && !found; ++f2)
                    found = ar.dom(f2) == ar.cod(s) && ar.cod(f2) == ar.cod(s2) &&
                            ar.comp(f2, s) == ar.comp(s2, f);
            }
            if (!found) throw NotLocalizable("ore", "span (" + ar.name(s) + ", " + ar.name(f) + ") has no completion");
        }
    }
    for (int s = 0; s < ar.count(); ++s) {
        if (!ar.sigma(s)) continue;
        for (int f = 0; f < ar.count(); ++f)
            for (int g = f + 1; g < ar.count(); ++g) {
                if (ar.dom(f) != ar.cod(s) || ar.dom(g) != ar.cod(s) || ar.cod(f) != ar.cod(g)) continue;
                if (ar.comp(f, s) != ar.comp(g, s)) continue;
                bool found = false;
                for (int t = 0; t < ar.count() && !found; ++t)
                    found = ar.sigma(t) && ar.dom(t) == ar.cod(f) && ar.comp(t, f) == ar.comp(t, g);
                if (!found)
                    throw NotLocalizable("cancellation", ar.name(f) + " and " + ar.name(g) + " agree after " +
                                                             ar.name(s) + " but nothing in Sigma equalizes them");
            }
    }
}

bool fractions_equivalent(const FiniteCategorySpec& spec, const Fraction& x, const Fraction& y) {
    const Arrows ar{spec};
    for (int u = 0; u < ar.count(); ++u) {
        if (ar.dom(u) != ar.cod(x.f)) continue;
        for (int v = 0; v < ar.count(); ++v) {
            if (ar.dom(v) != ar.cod(y.f) || ar.cod(v) != ar.cod(u)) continue;
            const int us = ar.comp(u, x.s);
            if (ar.comp(u, x.f) == ar.comp(v, y.f) && us == ar.comp(v, y.s) && ar.sigma(us)) return true;
        }
    }
    return false;
}

ClassicalLocalization localize_classical(const FiniteCategorySpec& spec) {
    spec.validate();
    check_classical_axioms(spec);
    const Arrows ar{spec};
    ClassicalLocalization out;
    out.base = spec;
    const int n = static_cast<int>(spec.objects.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            ClassicalLocalization::Hom h;
            h.a = a;
            h.b = b;
            for (int f = 0; f < ar.count(); ++f) {
                if (ar.dom(f) != a) continue;
                for (int s = 0; s < ar.count(); ++s)
                    if (ar.sigma(s) && ar.dom(s) == b && ar.cod(s) == ar.cod(f)) h.fractions.push_back({f, s});
            }
            UnionFind uf(h.fractions.size());
            for (std::size_t i = 0; i < h.fractions.size(); ++i)
                for (std::size_t j = i + 1; j < h.fractions.size(); ++j)
                    if (fractions_equivalent(spec, h.fractions[i], h.fractions[j]))
                        uf.unite(static_cast<int>(i), static_cast<int>(j));
            h.cls = number_classes(uf, h.fractions.size(), h.classes);
            out.homs.push_back(std::move(h));
        }
    return out;
}

int ClassicalLocalization::class_of(int a, int b, const Fraction& x) const {
    const Hom& h = hom(a, b);
    for (std::size_t i = 0; i < h.fractions.size(); ++i)
        if (h.fractions[i] == x) return h.cls[i];
    throw LaxError("class_of: not a fraction from " + base.objects.at(a) + " to " + base.objects.at(b));
}

int ClassicalLocalization::compose(int a, int b, int c, int g_cls, int f_cls) const {
    const Arrows ar{base};
    const Hom& hf = hom(a, b);
    const Hom& hg = hom(b, c);
    int result = -1;
    for (std::size_t i = 0; i < hf.fractions.size(); ++i) {
        if (hf.cls[i] != f_cls) continue;
        const Fraction& x = hf.fractions[i];
        for (std::size_t j = 0; j < hg.fractions.size(); ++j) {
            if (hg.cls[j] != g_cls) continue;
            const Fraction& y = hg.fractions[j];
            for (int s2 = 0; s2 < ar.count(); ++s2) {
                if (!ar.sigma(s2) || ar.dom(s2) != ar.cod(y.f)) continue;
                for (int g2 = 0; g2 < ar.count(); ++g2) {
                    if (ar.dom(g2) != ar.cod(x.f) || ar.cod(g2) != ar.cod(s2)) continue;
                    if (ar.comp(g2, x.s) != ar.comp(s2, y.f)) continue;
                    const int k = class_of(a, c, {ar.comp(g2, x.f), ar.comp(s2, y.s)});
                    if (result >= 0 && k != result)
                        throw LaxError("compose: completions of " + fraction_name(ar, x) + " and " +
                                       fraction_name(ar, y) + " disagree");
                    result = k;
                }
            }
        }
    }
    if (result < 0) throw LaxError("compose: no Ore completion");
    return result;
}

int ClassicalLocalization::identity(int a) const {
    const int id = base.identity.at(a);
    return class_of(a, a, {id, id});
}

HomComparison compare_hom(const FiniteCategorySpec& spec, int a, int b, int apex_bound, int ext_bound) {
    const ClassicalLocalization oracle = localize_classical(spec);
    const TrivialModel m(spec);
    const HomCategory hc = hom_category(m, m.obj(a), m.obj(b), apex_bound, ext_bound);
    const ClassicalLocalization::Hom& oh = oracle.hom(a, b);

    HomComparison out;
    out.a = a;
    out.b = b;
    out.engine_cospans = hc.objects.size();
    out.oracle_classes = oh.classes;
    if (hc.undetermined > 0) out.mismatches.push_back(std::to_string(hc.undetermined) + " undetermined composites");

    const std::size_t n = hc.objects.size();
    std::vector<int> cls(n);
    std::set<int> hit;
    for (std::size_t i = 0; i < n; ++i) {
        cls[i] = oracle.class_of(a, b, {m.index(hc.objects[i].f), m.index(hc.objects[i].r)});
        hit.insert(cls[i]);
    }
    if (static_cast<int>(hit.size()) != oh.classes)
        out.mismatches.push_back("engine reaches " + std::to_string(hit.size()) + " of " +
                                 std::to_string(oh.classes) + " fraction classes");

    const auto isomorphic = [&](std::size_t i, std::size_t j) {
        for (const TwoMorphism& t : hc.hom(i, j).morphisms)
            for (const TwoMorphism& u : hc.hom(j, i).morphisms) {
                const auto there = are_equivalent(m, vcompose(m, u, t, -1), identity_two_cell(m, t.src), -1);
                const auto back = are_equivalent(m, vcompose(m, t, u, -1), identity_two_cell(m, t.tgt), -1);
                if (there.verdict == Verdict::equivalent && back.verdict == Verdict::equivalent) return true;
            }
        return false;
    };
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const bool iso = isomorphic(i, j);
            if (iso) uf.unite(static_cast<int>(i), static_cast<int>(j));
            if (iso != (cls[i] == cls[j]))
                out.mismatches.push_back(describe(m, hc.objects[i]) + " and " + describe(m, hc.objects[j]) +
                                         (iso ? " are isomorphic but differ as fractions"
                                              : " are equal fractions but not isomorphic"));
        }
    int iso_classes = 0;
    number_classes(uf, n, iso_classes);
    out.engine_iso_classes = static_cast<std::size_t>(iso_classes);

    out.bijective = out.mismatches.empty();
    out.endo_classes_trivial = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& h = hc.hom(i, i);
        if (h.classes.size() != 1 ||
            are_equivalent(m, h.classes.front(), identity_two_cell(m, hc.objects[i]), -1).verdict !=
                Verdict::equivalent) {
            out.endo_classes_trivial = false;
            out.mismatches.push_back("non-identity 2-cell class on " + describe(m, hc.objects[i]));
        }
    }
    return out;
}

std::vector<HomComparison> compare_all_homs(const FiniteCategorySpec& spec, int apex_bound, int ext_bound) {
    std::vector<HomComparison> out;
    const int n = static_cast<int>(spec.objects.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.push_back(compare_hom(spec, a, b, apex_bound, ext_bound));
    return out;
}

}  // namespace lax
