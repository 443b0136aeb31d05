// One line per acceptance criterion; exit status 0 iff every criterion passes.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lax/calculus.hpp"
#include "lax/gz.hpp"
#include "lax/model_io.hpp"
#include "lax/pos.hpp"
#include "lax/verify.hpp"

using namespace lax;

namespace {

const std::string corpus = LAX_MODELS;

// Accumulates the records behind one criterion.
struct Criterion {
    Criterion(int number, std::string name) : number(number), name(std::move(name)) {}

    int number;
    std::string name;
    std::size_t records = 0;
    std::size_t instances = 0;
    std::vector<std::string> problems;
    std::vector<std::string> notes;

    void add(const CheckRecord& r, std::size_t min_instances = 0) {
        ++records;
        instances += r.instances;
        if (r.verdict != CheckVerdict::pass)
            problems.push_back(r.check + " [" + r.subject + "] " + to_string(r.verdict) + ": " + r.detail);
        else if (r.instances < min_instances)
            problems.push_back(r.check + " [" + r.subject + "] only " + std::to_string(r.instances) +
                               " instances, need " + std::to_string(min_instances));
    }
    void add(const std::vector<CheckRecord>& rs, std::size_t min_instances = 0) {
        for (const auto& r : rs) add(r, min_instances);
    }
    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    bool passed() const { return problems.empty(); }
};

struct CorpusSpec {
    std::string file;
    FiniteCategorySpec spec;
    bool localizable = false;
};

std::vector<CorpusSpec> category_corpus() {
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(corpus + "/category"))
        files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    std::vector<CorpusSpec> out;
    for (const auto& f : files) {
        ModelFile mf = load_model_file(f);
        CorpusSpec c{std::filesystem::path(f).filename().string(), *mf.spec, true};
        try {
            check_classical_axioms(c.spec);
        } catch (const NotLocalizable&) {
            c.localizable = false;
        }
        out.push_back(std::move(c));
    }
    return out;
}

SamplingOptions sampling(int samples, unsigned seed) {
    SamplingOptions o;
    o.samples = samples;
    o.seed = seed;
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_1(Criterion& c, const PosModel& pos, const std::vector<CorpusSpec>& specs) {
    const AxiomReport rep = check_axioms(pos, -1);
    c.add(axiom_records(pos, -1));
    for (const auto& a : rep.axioms) c.require(a.exhausted == 0, "bound exhausted in " + a.axiom);
    std::size_t used = 0;
    for (const auto& s : specs) {
        if (!s.localizable) continue;
        c.add(axiom_records(TrivialModel(s.spec), -1));
        ++used;
    }
    c.notes.push_back(std::to_string(rep.sigma_squares) + " Pos Sigma-squares, " + std::to_string(used) +
                      " localizable specs");
}

void criterion_2(Criterion& c, const std::vector<CorpusSpec>& specs) {
    std::size_t used = 0;
    for (const auto& s : specs) {
        if (!s.localizable) continue;
        c.add(gz_records(s.spec, 4, 4));
        ++used;
    }
    c.require(used >= 5, "fewer than five localizable specs");
    c.notes.push_back(std::to_string(used) + " specs, " + std::to_string(c.records) + " hom-sets");
}

void criterion_3(Criterion& c, const PosModel& pos) {
    const Obj one = chain(1).obj();
    const auto pool = two_cell_pool(pos, one, one, 2, 3);
    c.add(equivalence_exhaustive(pos, pool, -1));
    const CheckRecord tr = transitivity_sampled(pos, pool, 10000, 31, -1);
    c.add(tr, 10000);
    c.notes.push_back(std::to_string(pool.size()) + " cells, " + std::to_string(tr.instances) + " triples");
}

void criterion_4(Criterion& c, const PosModel& pos) {
    const Obj one = chain(1).obj();
    const auto pool = two_cell_pool(pos, one, one, 2, 2);
    c.add(vertical_exhaustive(pos, pool, -1), 1);
    c.add(vertical_sampled(pos, sampling(200, 41)), 200);
    c.notes.push_back(std::to_string(pool.size()) + " enumerated cells, 200 sampled chains");
}

void criterion_5(Criterion& c, const PosModel& pos) {
    c.add(horizontal_sampled(pos, sampling(1000, 51)), 1000);
    c.notes.push_back("1000 samples per law");
}

void criterion_6(Criterion& c, const PosModel& pos) {
    c.add(omega_laws_sampled(pos, sampling(100, 61)), 1);
    c.add(omega_paths_sampled(pos, sampling(1, 62), 6), 1);
}

void criterion_7(Criterion& c, const PosModel& pos) {
    c.add(bicategory_sampled(pos, sampling(500, 71)), 500);
    c.notes.push_back("500 samples per law");
}

void criterion_8(Criterion& c, const PosModel& pos, const std::vector<CorpusSpec>& specs) {
    std::size_t laris = 0;
    std::size_t squares = 0;
    const auto check_model = [&](const TwoCatModel& m) {
        for (const Cell1& s : all_sigma_objects(m)) {
            c.add(lari_record(m, s, 3, -1));
            ++laris;
        }
        for (const Square& q : enumerate_sigma_squares(m)) {
            c.add(bc_record(m, q, 3, -1));
            ++squares;
        }
    };
    check_model(pos);
    for (const auto& s : specs)
        if (s.localizable) check_model(TrivialModel(s.spec));
    c.notes.push_back(std::to_string(laris) + " Sigma-objects, " + std::to_string(squares) + " Sigma-squares");
}

void criterion_9(Criterion& c) {
    struct Run {
        std::string model;
        std::string command;
        std::string extra;
    };
    const std::vector<Run> runs{{"pos/small.json", "verify-coherence", "--seed 9"},
                                {"pos/small.json", "check-bc", ""},
                                {"category/zig_zag.json", "compare-gz", ""},
                                {"category/square.json", "verify-coherence", "--seed 3"}};
    for (const Run& r : runs) {
        std::string first;
        for (int i = 0; i < 2; ++i) {
            const std::string out = "acceptance_run_" + std::to_string(i) + ".json";
            const std::string cmd = std::string(LAX_CLI) + " --model " + corpus + "/" + r.model + " --command " +
                                    r.command + " " + r.extra + " --out " + out;
            const int status = std::system(cmd.c_str());
            c.require(status == 0, r.model + " " + r.command + " exited with " + std::to_string(status));
            const std::string text = slurp(out);
            c.require(!text.empty(), r.model + " " + r.command + " wrote no report");
            if (i == 0)
                first = text;
            else
                c.require(text == first, r.model + " " + r.command + " reports differ between runs");
            std::remove(out.c_str());
        }
        ++c.records;
    }
    RunConfig cfg;
    cfg.model_path = corpus + "/pos/small.json";
    cfg.command = "verify-coherence";
    cfg.seed = 12;
    c.require(report_json(run(cfg)) == report_json(run(cfg)), "in-process reports differ");
    c.notes.push_back(std::to_string(runs.size()) + " CLI commands run twice");
}

}  // namespace

int main() {
    const PosModel pos(3);
    const std::vector<CorpusSpec> specs = category_corpus();
    std::vector<std::pair<Criterion, std::function<void(Criterion&)>>> criteria{
        {{1, "axiom suite"}, [&](Criterion& c) { criterion_1(c, pos, specs); }},
        {{2, "classical localization oracle"}, [&](Criterion& c) { criterion_2(c, specs); }},
        {{3, "equivalence relation"}, [&](Criterion& c) { criterion_3(c, pos); }},
        {{4, "vertical composition"}, [&](Criterion& c) { criterion_4(c, pos); }},
        {{5, "horizontal composition"}, [&](Criterion& c) { criterion_5(c, pos); }},
        {{6, "Omega coherence"}, [&](Criterion& c) { criterion_6(c, pos); }},
        {{7, "bicategory laws"}, [&](Criterion& c) { criterion_7(c, pos); }},
        {{8, "laris and Beck-Chevalley images"}, [&](Criterion& c) { criterion_8(c, pos, specs); }},
        {{9, "determinism"}, [](Criterion& c) { criterion_9(c); }},
    };
    bool all = true;
    for (auto& [c, body] : criteria) {
        try {
            body(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        all = all && c.passed();
        std::string notes;
        for (const auto& n : c.notes) notes += (notes.empty() ? "" : ", ") + n;
        std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name
                  << "): " << c.records << " records, " << c.instances << " instances"
                  << (notes.empty() ? "" : "; " + notes) << std::endl;
        for (std::size_t i = 0; i < c.problems.size() && i < 5; ++i) std::cout << "    " << c.problems[i] << "\n";
    }
    return all ? 0 : 1;
}
