#include "lax/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <random>

#include "lax/calculus.hpp"
#include "lax/gz.hpp"
#include "lax/sampling.hpp"
#include "lax/universal.hpp"

namespace lax {

namespace {

const char* const kAxiomAnchor = "Def: 2-category with a class Sigma satisfying the axioms";
const char* const kEquivalenceAnchor = "Lemma: equivalence of 2-morphisms is reflexive, symmetric and transitive";
const char* const kVerticalAnchor = "Prop: vertical composition is independent of representatives";
const char* const kUnitAnchor = "Prop: identity 2-morphisms are units for vertical composition";
const char* const kHorizontalAnchor = "Eq: horizontal composition preserves identities";
const char* const kWhiskerAnchor = "Eq: whiskering laws";
const char* const kInterchangeAnchor = "Eq: interchange law";
const char* const kBicategoryAnchor = "Thm: the localization carries a bicategory structure";
const char* const kOmegaAnchor = "Lemma: Omega cells compose and invert along paths";
const char* const kShortPathAnchor = "Cor: Sigma-paths of length at most two with common ends give equal Omega cells";
const char* const kTaggedAnchor = "Lemma: canonical paths of a multi-tagged scheme give equal Omega cells";
const char* const kCospanAnchor = "Def: composition of Sigma-cospans";
const char* const kHomAnchor = "Prop: vertical composition is independent of representatives";
const char* const kLariAnchor = "Prop: P(s) has a right adjoint with invertible unit";
const char* const kBcAnchor = "Thm: images of Sigma-squares satisfy the Beck-Chevalley condition";
const char* const kGzAnchor = "Classical: category of left fractions";

std::string sampling_subject(const SamplingOptions& o) {
    return "samples=" + std::to_string(o.samples) + " seed=" + std::to_string(o.seed);
}

// A 2-morphism out of c, or the identity when the sampler finds none.
TwoMorphism cell_from(Sampler& s, const TwoCatModel& m, const SigmaCospan& c, const SamplingOptions& o) {
    return s.two_cell_from(c, o.apex_bound, o.ext_bound).value_or(identity_two_cell(m, c));
}

TwoMorphism parallel_to(Sampler& s, const TwoCatModel& m, const TwoMorphism& a, const SamplingOptions& o) {
    const auto ps = enumerate_two_morphisms(m, a.src, a.tgt, o.ext_bound);
    return ps.empty() ? a : s.pick(ps);
}

bool equivalent(const TwoCatModel& m, const TwoMorphism& a, const TwoMorphism& b, int wb) {
    return are_equivalent(m, a, b, wb).verdict == Verdict::equivalent;
}

void add_symmetry(Tally& t, const EquivalenceResult& ab, const EquivalenceResult& ba) {
    if (ab.verdict == Verdict::undetermined || ba.verdict == Verdict::undetermined)
        t.undetermined("symmetry: " + ab.note + " / " + ba.note);
    else if (ab.verdict != ba.verdict)
        t.fail("symmetry: verdicts " + to_string(ab.verdict) + " and " + to_string(ba.verdict));
    else
        t.pass();
}

}  // namespace

std::string to_string(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::pass:
            return "pass";
        case CheckVerdict::fail:
            return "fail";
        case CheckVerdict::undetermined:
            return "undetermined";
    }
    return "undetermined";
}

void Tally::fail(const std::string& why) {
    ++instances_;
    if (failures_++ == 0) first_failure_ = why;
}

void Tally::undetermined(const std::string& why) {
    ++instances_;
    if (undetermined_++ == 0) first_undetermined_ = why;
}

void Tally::add(const LawCheck& c) {
    if (c.undetermined)
        undetermined(c.law + ": " + c.detail);
    else if (!c.passed)
        fail(c.law + ": " + c.detail);
    else
        pass();
}

void Tally::add(const EquivalenceResult& r, const std::string& what) {
    switch (r.verdict) {
        case Verdict::equivalent:
            pass();
            break;
        case Verdict::not_equivalent:
            fail(what + ": not equivalent (" + r.route + ")");
            break;
        case Verdict::undetermined:
            undetermined(what + ": " + r.note);
            break;
    }
}

CheckRecord Tally::record() const {
    CheckRecord r{check_, anchor_, subject_, CheckVerdict::pass, instances_, ""};
    r.detail = std::to_string(instances_) + " instances, " + std::to_string(failures_) + " failed, " +
               std::to_string(undetermined_) + " undetermined";
    if (failures_ > 0) {
        r.verdict = CheckVerdict::fail;
        r.detail += "; first failure: " + first_failure_;
    } else if (undetermined_ > 0) {
        r.verdict = CheckVerdict::undetermined;
        r.detail += "; first undetermined: " + first_undetermined_;
    } else if (instances_ == 0) {
        r.detail += "; vacuous: the sampled data has no instance";
    }
    return r;
}

std::vector<CheckRecord> axiom_records(const TwoCatModel& m, int witness_bound) {
    const AxiomReport rep = check_axioms(m, witness_bound);
    std::vector<CheckRecord> out;
    for (const AxiomResult& a : rep.axioms) {
        CheckRecord r{"axiom", kAxiomAnchor, a.axiom, a.passed() ? CheckVerdict::pass : CheckVerdict::fail, a.instances,
                      ""};
        if (a.failures == 0 && a.exhausted > 0) r.verdict = CheckVerdict::undetermined;
        r.detail = std::to_string(a.instances) + " instances, " + std::to_string(a.failures) + " failed, " +
                   std::to_string(a.exhausted) + " bound exhausted";
        if (!a.samples.empty()) r.detail += "; first: " + a.samples.front();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<TwoMorphism> two_cell_pool(const TwoCatModel& m, const Obj& a, const Obj& b, int apex_bound,
                                       int ext_bound) {
    std::vector<TwoMorphism> out;
    const auto cospans = enumerate_cospans(m, a, b, apex_bound);
    for (const auto& c1 : cospans)
        for (const auto& c2 : cospans)
            for (auto& t : enumerate_two_morphisms(m, c1, c2, ext_bound)) out.push_back(std::move(t));
    return out;
}

CheckRecord equivalence_exhaustive(const TwoCatModel& m, const std::vector<TwoMorphism>& pool, int witness_bound) {
    Tally t("equivalence-reflexive-symmetric", kEquivalenceAnchor, std::to_string(pool.size()) + " cells");
    for (std::size_t i = 0; i < pool.size(); ++i) {
        t.guard("reflexivity", [&] { t.add(are_equivalent(m, pool[i], pool[i], witness_bound), "reflexivity"); });
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (pool[i].src != pool[j].src || pool[i].tgt != pool[j].tgt) continue;
            t.guard("symmetry", [&] {
                add_symmetry(t, are_equivalent(m, pool[i], pool[j], witness_bound),
                             are_equivalent(m, pool[j], pool[i], witness_bound));
            });
        }
    }
    return t.record();
}

CheckRecord transitivity_sampled(const TwoCatModel& m, const std::vector<TwoMorphism>& pool, std::size_t triples,
                                 unsigned seed, int witness_bound) {
    Tally t("equivalence-transitive", kEquivalenceAnchor,
            std::to_string(triples) + " triples seed=" + std::to_string(seed));
    std::map<std::pair<SigmaCospan, SigmaCospan>, std::vector<std::size_t>> parallel;
    for (std::size_t i = 0; i < pool.size(); ++i) parallel[{pool[i].src, pool[i].tgt}].push_back(i);
    if (pool.empty()) return t.record();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    // Premises failing are skipped, so cap the attempts.
    for (std::size_t attempts = 0; t.instances() < triples && attempts < 20 * triples; ++attempts) {
        const TwoMorphism& a = pool[pick(rng)];
        const auto& same = parallel.at({a.src, a.tgt});
        std::uniform_int_distribution<std::size_t> p2(0, same.size() - 1);
        const TwoMorphism& b = pool[same[p2(rng)]];
        const TwoMorphism& c = pool[same[p2(rng)]];
        t.guard("transitivity", [&] {
            if (equivalent(m, a, b, witness_bound) && equivalent(m, b, c, witness_bound))
                t.add(are_equivalent(m, a, c, witness_bound), "transitivity");
        });
    }
    return t.record();
}

std::vector<CheckRecord> vertical_exhaustive(const TwoCatModel& m, const std::vector<TwoMorphism>& pool,
                                             int witness_bound) {
    const std::string subject = std::to_string(pool.size()) + " cells";
    Tally units("vertical-units", kUnitAnchor, subject);
    Tally assoc("vertical-associativity", kVerticalAnchor, subject);
    Tally indep("vertical-representatives", kVerticalAnchor, subject);
    for (const TwoMorphism& a : pool) {
        units.guard("units", [&] {
            units.add(compare_two_cells(m, "left unit", vcompose(m, identity_two_cell(m, a.tgt), a, witness_bound), a,
                                        witness_bound));
            units.add(compare_two_cells(m, "right unit", vcompose(m, a, identity_two_cell(m, a.src), witness_bound),
                                        a, witness_bound));
        });
        for (const TwoMorphism& b : pool) {
            if (b.src != a.tgt) continue;
            for (const TwoMorphism& c : pool) {
                if (c.src != b.tgt) continue;
                assoc.guard("associativity", [&] {
                    assoc.add(compare_two_cells(m, "associativity",
                                                vcompose(m, c, vcompose(m, b, a, witness_bound), witness_bound),
                                                vcompose(m, vcompose(m, c, b, witness_bound), a, witness_bound),
                                                witness_bound));
                });
            }
            const TwoMorphism ba = vcompose(m, b, a, witness_bound);
            for (const TwoMorphism& a2 : pool) {
                if (a2.src != a.src || a2.tgt != a.tgt || !equivalent(m, a, a2, witness_bound)) continue;
                for (const TwoMorphism& b2 : pool) {
                    if (b2.src != b.src || b2.tgt != b.tgt || !equivalent(m, b, b2, witness_bound)) continue;
                    indep.guard("representatives", [&] {
                        indep.add(compare_two_cells(m, "representatives", ba, vcompose(m, b2, a2, witness_bound),
                                                    witness_bound));
                    });
                }
            }
        }
    }
    return {units.record(), assoc.record(), indep.record()};
}

std::vector<CheckRecord> equivalence_sampled(const TwoCatModel& m, const SamplingOptions& o) {
    Sampler smp(m, o.seed, o.max_object_size);
    const std::string subject = sampling_subject(o);
    Tally refl("equivalence-reflexive", kEquivalenceAnchor, subject);
    Tally sym("equivalence-symmetric", kEquivalenceAnchor, subject);
    Tally trans("equivalence-transitive", kEquivalenceAnchor, subject);
    const int wb = o.witness_bound;
    for (int i = 0; i < o.samples; ++i) {
        const TwoMorphism a = cell_from(smp, m, smp.chain(1).front(), o);
        const TwoMorphism b = parallel_to(smp, m, a, o);
        const TwoMorphism c = parallel_to(smp, m, a, o);
        refl.guard("reflexivity", [&] { refl.add(are_equivalent(m, a, a, wb), "reflexivity"); });
        sym.guard("symmetry", [&] { add_symmetry(sym, are_equivalent(m, a, b, wb), are_equivalent(m, b, a, wb)); });
        trans.guard("transitivity", [&] {
            if (equivalent(m, a, b, wb) && equivalent(m, b, c, wb))
                trans.add(are_equivalent(m, a, c, wb), "transitivity");
        });
    }
    return {refl.record(), sym.record(), trans.record()};
}

std::vector<CheckRecord> vertical_sampled(const TwoCatModel& m, const SamplingOptions& o) {
    Sampler smp(m, o.seed + 1, o.max_object_size);
    const std::string subject = sampling_subject(o);
    Tally units("vertical-units", kUnitAnchor, subject);
    Tally assoc("vertical-associativity", kVerticalAnchor, subject);
    Tally indep("vertical-representatives", kVerticalAnchor, subject);
    const int wb = o.witness_bound;
    for (int i = 0; i < o.samples; ++i) {
        const TwoMorphism a = cell_from(smp, m, smp.chain(1).front(), o);
        const TwoMorphism b = cell_from(smp, m, a.tgt, o);
        const TwoMorphism c = cell_from(smp, m, b.tgt, o);
        const TwoMorphism a2 = parallel_to(smp, m, a, o);
        const TwoMorphism b2 = parallel_to(smp, m, b, o);
        units.guard("units", [&] {
            units.add(compare_two_cells(m, "left unit", vcompose(m, identity_two_cell(m, a.tgt), a, wb), a, wb));
            units.add(compare_two_cells(m, "right unit", vcompose(m, a, identity_two_cell(m, a.src), wb), a, wb));
        });
        assoc.guard("associativity", [&] {
            assoc.add(compare_two_cells(m, "associativity", vcompose(m, c, vcompose(m, b, a, wb), wb),
                                        vcompose(m, vcompose(m, c, b, wb), a, wb), wb));
        });
        indep.guard("representatives", [&] {
            if (equivalent(m, a, a2, wb) && equivalent(m, b, b2, wb))
                indep.add(compare_two_cells(m, "representatives", vcompose(m, b, a, wb), vcompose(m, b2, a2, wb), wb));
        });
    }
    return {units.record(), assoc.record(), indep.record()};
}

std::vector<CheckRecord> horizontal_sampled(const TwoCatModel& m, const SamplingOptions& o) {
    Sampler smp(m, o.seed + 2, o.max_object_size);
    const std::string subject = sampling_subject(o);
    Tally ident("horizontal-identities", kHorizontalAnchor, subject);
    Tally whisk("whiskering", kWhiskerAnchor, subject);
    Tally inter("interchange", kInterchangeAnchor, subject);
    const int wb = o.witness_bound;
    for (int i = 0; i < o.samples; ++i) {
        const auto ch = smp.chain(2);
        const TwoMorphism a1 = cell_from(smp, m, ch[0], o);
        const TwoMorphism b1 = cell_from(smp, m, ch[1], o);
        const TwoMorphism a2 = cell_from(smp, m, a1.tgt, o);
        const TwoMorphism b2 = cell_from(smp, m, b1.tgt, o);
        ident.guard("identities", [&] { ident.add(check_identity_preservation(m, ch[1], ch[0], wb)); });
        whisk.guard("whiskering", [&] { whisk.add(check_whiskering(m, b1, a1, wb)); });
        inter.guard("interchange", [&] { inter.add(check_interchange(m, b2, b1, a2, a1, wb)); });
    }
    return {ident.record(), whisk.record(), inter.record()};
}

std::vector<CheckRecord> bicategory_sampled(const TwoCatModel& m, const SamplingOptions& o) {
    Sampler smp(m, o.seed + 3, o.max_object_size);
    const std::string subject = sampling_subject(o);
    Tally pent("pentagon", kBicategoryAnchor, subject);
    Tally tri("triangle", kBicategoryAnchor, subject);
    Tally inv("associator-invertible", kBicategoryAnchor, subject);
    Tally nat("associator-naturality", kBicategoryAnchor, subject);
    const int wb = o.witness_bound;
    for (int i = 0; i < o.samples; ++i) {
        const auto ch = smp.chain(4);
        pent.guard("pentagon", [&] { pent.add(check_pentagon(m, ch[3], ch[2], ch[1], ch[0], wb)); });
        tri.guard("triangle", [&] { tri.add(check_triangle(m, ch[1], ch[0], wb)); });
        inv.guard("invertible", [&] { inv.add(check_associator_invertible(m, ch[2], ch[1], ch[0], wb)); });
        const TwoMorphism a = cell_from(smp, m, ch[0], o);
        const TwoMorphism b = cell_from(smp, m, ch[1], o);
        const TwoMorphism c = cell_from(smp, m, ch[2], o);
        nat.guard("naturality", [&] { nat.add(check_associator_naturality(m, c, b, a, wb)); });
    }
    return {pent.record(), tri.record(), inv.record(), nat.record()};
}

std::vector<CheckRecord> omega_laws_sampled(const TwoCatModel& m, const SamplingOptions& o) {
    Sampler smp(m, o.seed + 4, o.max_object_size);
    const std::string subject = sampling_subject(o);
    Tally self("omega-self", kOmegaAnchor, subject);
    Tally inverse("omega-inverse", kOmegaAnchor, subject);
    Tally comp("omega-composition", kOmegaAnchor, subject);
    const int wb = o.witness_bound;
    for (int i = 0; i < o.samples; ++i) {
        const Cell1 s = smp.sigma_from(smp.object());
        const Cell1 f = smp.cell_from(s.dom);
        std::vector<Square> qs;
        self.guard("completions", [&] { qs = sigma_completions(m, s, f, o.apex_bound, 4); });
        for (const Square& a : qs) {
            self.guard("self", [&] {
                const OmegaCell w = basic_omega(m, a, a, wb);
                self.add(compare_two_cells(m, "self", w.cell, identity_two_cell(m, w.cell.src), wb));
            });
            for (const Square& b : qs) {
                if (a == b) continue;
                inverse.guard("inverse", [&] {
                    const OmegaCell ab = basic_omega(m, a, b, wb);
                    const OmegaCell loop = omega_compose(m, basic_omega(m, b, a, wb), ab, wb);
                    inverse.add(compare_two_cells(m, "inverse", loop.cell, identity_two_cell(m, ab.cell.src), wb));
                });
                for (const Square& c : qs) {
                    if (c == a || c == b) continue;
                    comp.guard("composition", [&] {
                        const OmegaCell abc = omega_compose(m, basic_omega(m, b, c, wb), basic_omega(m, a, b, wb), wb);
                        comp.add(compare_two_cells(m, "composition", abc.cell, basic_omega(m, a, c, wb).cell, wb));
                    });
                }
            }
        }
    }
    return {self.record(), inverse.record(), comp.record()};
}

std::vector<CheckRecord> omega_paths_sampled(const TwoCatModel& m, const SamplingOptions& o, int borders) {
    Sampler smp(m, o.seed + 5, o.max_object_size);
    const std::string subject = std::to_string(borders) + " borders seed=" + std::to_string(o.seed);
    Tally short_paths("omega-short-paths", kShortPathAnchor, subject);
    Tally tagged("omega-tagged-paths", kTaggedAnchor, subject);
    Tally self_steps("omega-self-step", kOmegaAnchor, subject);
    const int wb = o.witness_bound;
    for (int k = 0; k < borders; ++k) {
        const std::vector<Cell1> border = smp.border(3);
        std::vector<SigmaScheme> schemes;
        short_paths.guard("schemes", [&] { schemes = enumerate_level3_schemes(m, border); });
        for (const SigmaScheme& s : schemes) {
            short_paths.guard("short paths", [&] {
                const auto paths = paths_up_to_two(m, s);
                std::map<SigmaScheme, std::vector<const SigmaPath*>> by_end;
                for (const auto& p : paths) by_end[p.finish()].push_back(&p);
                for (const auto& [end, ps] : by_end)
                    for (std::size_t i = 0; i < ps.size(); ++i)
                        for (std::size_t j = i + 1; j < ps.size(); ++j)
                            short_paths.add(paths_equivalent(m, *ps[i], *ps[j], wb), "short paths");
            });
            for (StepType type : applicable_steps(m, s)) {
                self_steps.guard("self step", [&] {
                    const Region r = *step_region(m, s, type);
                    std::vector<Tile> same;
                    for (const Tile& t : s.tiles)
                        if (r.contains(t.at)) same.push_back(t);
                    const OmegaCell w = omega_of_path(m, SigmaPath{s, {make_step(m, s, type, same)}}, wb);
                    self_steps.add(compare_two_cells(m, "self step " + to_string(type), w.cell,
                                                     identity_two_cell(m, w.cell.src), wb));
                });
            }
            tagged.guard("tagged paths", [&] {
                const auto tags = classify_configuration(m, s);
                for (std::size_t i = 0; i < tags.size(); ++i)
                    for (std::size_t j = i + 1; j < tags.size(); ++j) {
                        const SigmaPath p = canonical_path(m, s, tags[i]);
                        const SigmaPath q = canonical_path(m, s, tags[j]);
                        const std::string what = "tags " + to_string(tags[i]) + " and " + to_string(tags[j]);
                        if (p.finish() == q.finish()) {
                            tagged.add(paths_equivalent(m, p, q, wb), what);
                        } else if (normalize(m, p.finish()) != normalize(m, q.finish())) {
                            tagged.fail(what + ": canonical paths end in different normal forms");
                        } else {
                            tagged.add(compare_two_cells(m, what, omega_of_path(m, p, wb).cell,
                                                         omega_of_path(m, q, wb).cell, wb));
                        }
                    }
            });
        }
    }
    return {short_paths.record(), tagged.record(), self_steps.record()};
}

std::vector<Cell1> all_sigma_objects(const TwoCatModel& m) {
    std::vector<Cell1> out;
    const auto objs = m.objects();
    for (const Obj& a : objs)
        for (const Obj& b : objs)
            for (Cell1& s : m.sigma_objects(a, b)) out.push_back(std::move(s));
    return out;
}

CheckRecord lari_record(const TwoCatModel& m, const Cell1& s, int ext_bound, int witness_bound) {
    CheckRecord r{"lari", kLariAnchor, m.describe(s), CheckVerdict::fail, 1, ""};
    try {
        const LocalizationLari l = lari_in_localization(m, s, ext_bound, witness_bound);
        std::string problems;
        bool undetermined = false;
        for (const LawCheck* c : {&l.triangle_right, &l.triangle_left, &l.unit_invertible}) {
            undetermined = undetermined || c->undetermined;
            if (!c->passed) problems += (problems.empty() ? "" : "; ") + c->law + ": " + c->detail;
        }
        if (l.passed()) {
            r.verdict = CheckVerdict::pass;
            r.detail = "both triangle identities hold; unit invertible";
        } else {
            r.verdict = undetermined ? CheckVerdict::undetermined : CheckVerdict::fail;
            r.detail = problems;
        }
    } catch (const BoundExhausted& e) {
        r.verdict = CheckVerdict::undetermined;
        r.detail = e.what();
    } catch (const LaxError& e) {
        r.detail = e.what();
    }
    return r;
}

CheckRecord bc_record(const TwoCatModel& m, const Square& sq, int ext_bound, int witness_bound) {
    CheckRecord r{"bc-image", kBcAnchor,
                  "top " + m.describe(sq.top) + ", left " + m.describe(sq.left) + ", right " + m.describe(sq.right) +
                      ", bottom " + m.describe(sq.bottom),
                  CheckVerdict::fail, 1, ""};
    try {
        const BcImageReport rep = verify_bc_image(m, sq, ext_bound, witness_bound);
        r.verdict = rep.passed ? CheckVerdict::pass
                               : (rep.undetermined ? CheckVerdict::undetermined : CheckVerdict::fail);
        r.detail = rep.passed ? "mate invertible" : rep.detail;
    } catch (const BoundExhausted& e) {
        r.verdict = CheckVerdict::undetermined;
        r.detail = e.what();
    } catch (const LaxError& e) {
        r.detail = e.what();
    }
    return r;
}

std::vector<CheckRecord> gz_records(const FiniteCategorySpec& spec, int apex_bound, int ext_bound) {
    std::vector<HomComparison> cmp;
    try {
        cmp = compare_all_homs(spec, apex_bound, ext_bound);
    } catch (const NotLocalizable& e) {
        return {CheckRecord{"classical-axioms", kGzAnchor, e.axiom, CheckVerdict::fail, 1, e.witness}};
    }
    std::vector<CheckRecord> out;
    for (const HomComparison& c : cmp) {
        const bool ok = c.bijective && c.endo_classes_trivial &&
                        c.engine_iso_classes == static_cast<std::size_t>(c.oracle_classes);
        CheckRecord r{"hom-bijection", kGzAnchor, spec.objects.at(c.a) + " -> " + spec.objects.at(c.b),
                      ok ? CheckVerdict::pass : CheckVerdict::fail, 1, ""};
        r.detail = std::to_string(c.engine_cospans) + " cospans, " + std::to_string(c.engine_iso_classes) +
                   " isomorphism classes, " + std::to_string(c.oracle_classes) + " fraction classes";
        for (const auto& mm : c.mismatches) r.detail += "; " + mm;
        out.push_back(std::move(r));
    }
    return out;
}

std::size_t Report::count(CheckVerdict v) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [v](const CheckRecord& c) { return c.verdict == v; }));
}

bool Report::passed() const { return count(CheckVerdict::pass) == checks.size(); }

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"check-axioms", "hom",       "compose", "two-cell-equal",
                                                "verify-coherence", "check-lari", "check-bc", "compare-gz"};
    return names;
}

void validate_config(const RunConfig& c) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), c.command) == names.end())
        throw UsageError("unknown command '" + c.command + "'");
    if (c.apex_bound < 1) throw UsageError("--apex-bound must be positive");
    if (c.ext_bound < 1) throw UsageError("--ext-bound must be positive");
    if (c.witness_bound && *c.witness_bound < 1) throw UsageError("--witness-bound must be positive");
}

namespace {

class Names {
public:
    explicit Names(const ModelFile& mf) : m_(*mf.model) {
        for (const auto& [n, a] : mf.objects) objects_.emplace(a, n);
        for (const auto& [n, f] : mf.cells) cells_.emplace(f, n);
    }
    std::string operator()(const Obj& a) const {
        auto it = objects_.find(a);
        return it != objects_.end() ? it->second : m_.describe(a);
    }
    std::string operator()(const Cell1& f) const {
        auto it = cells_.find(f);
        return it != cells_.end() ? it->second : m_.describe(f);
    }
    std::string operator()(const SigmaCospan& c) const { return "(" + (*this)(c.f) + ", " + (*this)(c.r) + ")"; }

private:
    const TwoCatModel& m_;
    std::map<Obj, std::string> objects_;
    std::map<Cell1, std::string> cells_;
};

std::vector<CheckRecord> hom_records(const ModelFile& mf, const RunConfig& c, int wb) {
    const TwoCatModel& m = *mf.model;
    const Names name(mf);
    std::vector<std::pair<Obj, Obj>> pairs = mf.queries.hom;
    if (pairs.empty())
        for (const auto& [na, a] : mf.objects)
            for (const auto& [nb, b] : mf.objects) pairs.emplace_back(a, b);
    std::vector<CheckRecord> out;
    for (const auto& [a, b] : pairs) {
        CheckRecord r{"hom-category", kHomAnchor, name(a) + " -> " + name(b), CheckVerdict::fail, 1, ""};
        try {
            const HomCategory hc = hom_category(m, a, b, c.apex_bound, c.ext_bound, wb);
            std::size_t morphisms = 0;
            std::size_t classes = 0;
            for (const auto& h : hc.homs) {
                morphisms += h.morphisms.size();
                classes += h.classes.size();
            }
            std::size_t missing = 0;
            for (const auto& k : hc.composition) missing += k.result < 0;
            r.detail = std::to_string(hc.objects.size()) + " cospans, " + std::to_string(morphisms) +
                       " 2-morphisms, " + std::to_string(classes) + " classes, " +
                       std::to_string(hc.composition.size()) + " composites, " + std::to_string(missing) +
                       " unmatched, " + std::to_string(hc.undetermined) + " undetermined";
            r.verdict = missing > 0 ? CheckVerdict::fail
                                    : (hc.undetermined > 0 ? CheckVerdict::undetermined : CheckVerdict::pass);
        } catch (const BoundExhausted& e) {
            r.verdict = CheckVerdict::undetermined;
            r.detail = e.what();
        } catch (const LaxError& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckRecord> compose_records(const ModelFile& mf) {
    const TwoCatModel& m = *mf.model;
    const Names name(mf);
    std::vector<CheckRecord> out;
    for (const auto& [g, f] : mf.queries.compose) {
        CheckRecord r{"compose", kCospanAnchor, name(g) + " after " + name(f), CheckVerdict::fail, 1, ""};
        try {
            const SigmaCospan gf = compose_cospans(m, g, f);
            const Diagnosis d = validate_cospan(m, gf);
            r.verdict = d ? CheckVerdict::pass : CheckVerdict::fail;
            r.detail = d ? "composite " + name(gf) : d.failure;
        } catch (const LaxError& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckRecord> two_cell_records(const ModelFile& mf, int wb) {
    const TwoCatModel& m = *mf.model;
    const Names name(mf);
    std::vector<CheckRecord> out;
    for (const auto& [a, b] : mf.queries.two_cell_equal) {
        CheckRecord r{"two-cell-equal", kEquivalenceAnchor,
                      name(a.src) + " => " + name(a.tgt) + " via " + name(a.x3) + " and " + name(b.x3),
                      CheckVerdict::fail, 1, ""};
        try {
            const EquivalenceResult e = are_equivalent(m, a, b, wb);
            r.verdict = e.verdict == Verdict::equivalent
                            ? CheckVerdict::pass
                            : (e.verdict == Verdict::undetermined ? CheckVerdict::undetermined : CheckVerdict::fail);
            r.detail = to_string(e.verdict) + " (" + e.route + ")";
            if (!e.note.empty()) r.detail += ": " + e.note;
        } catch (const BoundExhausted& e) {
            r.verdict = CheckVerdict::undetermined;
            r.detail = e.what();
        } catch (const LaxError& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

void append(std::vector<CheckRecord>& out, std::vector<CheckRecord> more) {
    for (auto& r : more) out.push_back(std::move(r));
}

}  // namespace

Report run_command(const ModelFile& mf, const RunConfig& c) {
    validate_config(c);
    const TwoCatModel& m = *mf.model;
    const int wb = c.witness_bound.value_or(-1);
    Report rep;
    rep.command = c.command;
    rep.model = std::filesystem::path(c.model_path).filename().string();
    rep.config = c;
    if (c.command == "check-axioms") {
        rep.checks = axiom_records(m, wb);
    } else if (c.command == "hom") {
        rep.checks = hom_records(mf, c, wb);
    } else if (c.command == "compose") {
        if (mf.queries.compose.empty()) throw UsageError("compose needs queries.compose in the model file");
        rep.checks = compose_records(mf);
    } else if (c.command == "two-cell-equal") {
        if (mf.queries.two_cell_equal.empty())
            throw UsageError("two-cell-equal needs queries.two_cell_equal in the model file");
        rep.checks = two_cell_records(mf, wb);
    } else if (c.command == "verify-coherence") {
        SamplingOptions o;
        o.apex_bound = c.apex_bound;
        o.ext_bound = c.ext_bound;
        o.witness_bound = wb;
        o.seed = c.seed;
        o.samples = mf.queries.samples.value_or(100);
        rep.samples = o.samples;
        append(rep.checks, equivalence_sampled(m, o));
        append(rep.checks, vertical_sampled(m, o));
        append(rep.checks, horizontal_sampled(m, o));
        append(rep.checks, bicategory_sampled(m, o));
        append(rep.checks, omega_laws_sampled(m, o));
        append(rep.checks, omega_paths_sampled(m, o, std::max(1, o.samples / 50)));
    } else if (c.command == "check-lari") {
        const Names name(mf);
        const std::vector<Cell1> ss = mf.queries.lari.empty() ? all_sigma_objects(m) : mf.queries.lari;
        for (const Cell1& s : ss) {
            CheckRecord r = lari_record(m, s, c.ext_bound, wb);
            r.subject = name(s);
            rep.checks.push_back(std::move(r));
        }
    } else if (c.command == "check-bc") {
        const Names name(mf);
        const std::vector<Square> qs = mf.queries.bc.empty() ? enumerate_sigma_squares(m) : mf.queries.bc;
        for (const Square& q : qs) {
            CheckRecord r = bc_record(m, q, c.ext_bound, wb);
            r.subject = "top " + name(q.top) + ", left " + name(q.left) + ", right " + name(q.right) + ", bottom " +
                        name(q.bottom);
            rep.checks.push_back(std::move(r));
        }
    } else if (c.command == "compare-gz") {
        if (!mf.spec) throw UsageError("compare-gz needs a category model");
        rep.checks = gz_records(*mf.spec, c.apex_bound, c.ext_bound);
    }
    return rep;
}

Report run(const RunConfig& c) {
    validate_config(c);
    return run_command(load_model_file(c.model_path), c);
}

std::string report_json(const Report& r) {
    using nlohmann::ordered_json;
    ordered_json config;
    config["apex_bound"] = r.config.apex_bound;
    config["ext_bound"] = r.config.ext_bound;
    config["witness_bound"] = r.config.witness_bound ? ordered_json(*r.config.witness_bound) : ordered_json(nullptr);
    config["seed"] = r.config.seed;
    config["samples"] = r.samples ? ordered_json(*r.samples) : ordered_json(nullptr);
    ordered_json checks = ordered_json::array();
    for (const CheckRecord& c : r.checks)
        checks.push_back(ordered_json{{"check", c.check},
                                      {"anchor", c.anchor},
                                      {"subject", c.subject},
                                      {"verdict", to_string(c.verdict)},
                                      {"instances", c.instances},
                                      {"detail", c.detail}});
    ordered_json doc;
    doc["tool"] = "lax";
    doc["command"] = r.command;
    doc["model"] = r.model;
    doc["config"] = std::move(config);
    doc["checks"] = std::move(checks);
    doc["summary"] = ordered_json{{"pass", r.count(CheckVerdict::pass)},
                                  {"fail", r.count(CheckVerdict::fail)},
                                  {"undetermined", r.count(CheckVerdict::undetermined)}};
    doc["passed"] = r.passed();
    return doc.dump(2) + "\n";
}

}  // namespace lax
