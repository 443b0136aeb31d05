#include "lax/model_io.hpp"

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

namespace lax {

using nlohmann::json;

namespace {

// Counts characters handed to the JSON lexer.
struct CountingIterator {
    using iterator_category = std::input_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    const char* p = nullptr;
    std::size_t* consumed = nullptr;

    reference operator*() const { return *p; }
    CountingIterator& operator++() {
        ++p;
        ++*consumed;
        return *this;
    }
    CountingIterator operator++(int) {
        CountingIterator old = *this;
        ++*this;
        return old;
    }
    friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p == b.p; }
    friend bool operator!=(const CountingIterator& a, const CountingIterator& b) { return a.p != b.p; }
};

std::string escape_token(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

// Builds the DOM and records where each value starts: the first character
// after the previous event that is not whitespace or a separator.
class PositionRecorder {
public:
    using number_integer_t = json::number_integer_t;
    using number_unsigned_t = json::number_unsigned_t;
    using number_float_t = json::number_float_t;
    using string_t = json::string_t;
    using binary_t = json::binary_t;

    PositionRecorder(PositionedJson& doc, const std::size_t& consumed)
        : doc_(doc), consumed_(consumed), dom_(doc.root_, true) {}

    bool null() { return scalar(dom_.null()); }
    bool boolean(bool v) { return scalar(dom_.boolean(v)); }
    bool number_integer(number_integer_t v) { return scalar(dom_.number_integer(v)); }
    bool number_unsigned(number_unsigned_t v) { return scalar(dom_.number_unsigned(v)); }
    bool number_float(number_float_t v, const string_t& s) { return scalar(dom_.number_float(v, s)); }
    bool string(string_t& v) { return scalar(dom_.string(v)); }
    bool binary(binary_t& v) { return scalar(dom_.binary(v)); }

    bool start_object(std::size_t n) {
        frames_.push_back({false, 0, "", mark()});
        last_end_ = consumed_;
        return dom_.start_object(n);
    }
    bool key(string_t& k) {
        frames_.back().key = k;
        last_end_ = consumed_;
        return dom_.key(k);
    }
    bool end_object() { return close(dom_.end_object()); }
    bool start_array(std::size_t n) {
        frames_.push_back({true, 0, "", mark()});
        last_end_ = consumed_;
        return dom_.start_array(n);
    }
    bool end_array() { return close(dom_.end_array()); }
    template <class Exception>
    bool parse_error(std::size_t pos, const std::string& tok, const Exception& ex) {
        return dom_.parse_error(pos, tok, ex);
    }

private:
    struct Frame {
        bool array;
        std::size_t index;
        std::string key;
        std::string pointer;
    };

    std::string child_pointer() const {
        if (frames_.empty()) return "";
        const Frame& f = frames_.back();
        return f.pointer + "/" + (f.array ? std::to_string(f.index) : escape_token(f.key));
    }

    std::string mark() {
        std::size_t start = last_end_;
        const std::string& t = doc_.text_;
        while (start < t.size() && (std::isspace(static_cast<unsigned char>(t[start])) || t[start] == ',' ||
                                    t[start] == ':'))
            ++start;
        const std::string ptr = child_pointer();
        doc_.offsets_.emplace(ptr, start);
        return ptr;
    }

    void advance() {
        if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
    }

    bool scalar(bool ok) {
        mark();
        last_end_ = consumed_;
        advance();
        return ok;
    }

    bool close(bool ok) {
        frames_.pop_back();
        last_end_ = consumed_;
        advance();
        return ok;
    }

    PositionedJson& doc_;
    const std::size_t& consumed_;
    nlohmann::detail::json_sax_dom_parser<json> dom_;
    std::vector<Frame> frames_;
    std::size_t last_end_ = 0;
};

PositionedJson PositionedJson::parse(const std::string& text, const std::string& source) {
    PositionedJson doc;
    doc.source_ = source;
    doc.text_ = text;
    std::size_t consumed = 0;
    PositionRecorder rec(doc, consumed);
    const char* b = doc.text_.data();
    try {
        json::sax_parse(CountingIterator{b, &consumed}, CountingIterator{b + doc.text_.size(), &consumed}, &rec);
    } catch (const json::parse_error& e) {
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        const auto [line, column] = line_column(doc.text_, at);
        std::string what = e.what();
        if (const auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
        throw ModelError(source, line, column, what);
    }
    return doc;
}

std::pair<int, int> PositionedJson::position(const std::string& pointer) const {
    std::string p = pointer;
    for (;;) {
        if (auto it = offsets_.find(p); it != offsets_.end()) return line_column(text_, it->second);
        if (p.empty()) return {1, 1};
        p = p.substr(0, p.rfind('/'));
    }
}

void PositionedJson::fail(const std::string& pointer, const std::string& what) const {
    const auto [line, column] = position(pointer);
    throw ModelError(source_, line, column, what);
}

namespace {

class Reader {
public:
    explicit Reader(const PositionedJson& doc) : doc_(doc) {}

    const json& at(const std::string& ptr) const { return doc_.root().at(json::json_pointer(ptr)); }
    bool has(const std::string& ptr) const { return doc_.root().contains(json::json_pointer(ptr)); }

    const json& require(const std::string& ptr, json::value_t type, const char* what) const {
        if (!has(ptr)) doc_.fail(ptr, std::string("missing ") + what + " at " + ptr);
        const json& v = at(ptr);
        if (v.type() != type && !(type == json::value_t::number_integer && v.is_number_unsigned()))
            doc_.fail(ptr, std::string("expected ") + what + " at " + ptr);
        return v;
    }
    const std::string& string(const std::string& ptr) const {
        return require(ptr, json::value_t::string, "a string").get_ref<const std::string&>();
    }
    const json& array(const std::string& ptr) const { return require(ptr, json::value_t::array, "an array"); }
    const json& object(const std::string& ptr) const { return require(ptr, json::value_t::object, "an object"); }
    int integer(const std::string& ptr, int lo, int hi) const {
        const json& v = require(ptr, json::value_t::number_integer, "an integer");
        const auto x = v.get<long long>();
        if (x < lo || x > hi)
            doc_.fail(ptr, "value " + std::to_string(x) + " out of range [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
        return static_cast<int>(x);
    }
    // Rejects keys outside the allowed set.
    void only_keys(const std::string& ptr, std::initializer_list<const char*> keys) const {
        for (const auto& [k, v] : object(ptr).items()) {
            bool ok = false;
            for (const char* a : keys) ok = ok || k == a;
            if (!ok) doc_.fail(ptr + "/" + escape_token(k), "unknown key '" + k + "'");
        }
    }
    [[noreturn]] void fail(const std::string& ptr, const std::string& what) const { doc_.fail(ptr, what); }

private:
    const PositionedJson& doc_;
};

std::string idx(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

std::vector<std::string> unique_names(const Reader& rd, const std::string& ptr) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    const json& a = rd.array(ptr);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string& n = rd.string(idx(ptr, i));
        if (!seen.insert(n).second) rd.fail(idx(ptr, i), "duplicate name '" + n + "'");
        out.push_back(n);
    }
    return out;
}

int name_index(const Reader& rd, const std::vector<std::string>& names, const std::string& ptr, const char* what) {
    const std::string& n = rd.string(ptr);
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return static_cast<int>(i);
    rd.fail(ptr, std::string("unknown ") + what + " '" + n + "'");
}

struct Context {
    const Reader& rd;
    ModelFile& mf;

    Obj object(const std::string& ptr) const {
        const std::string& n = rd.string(ptr);
        auto it = mf.objects.find(n);
        if (it == mf.objects.end()) rd.fail(ptr, "unknown object '" + n + "'");
        return it->second;
    }
    Cell1 cell(const std::string& ptr) const {
        const std::string& n = rd.string(ptr);
        auto it = mf.cells.find(n);
        if (it == mf.cells.end()) rd.fail(ptr, "unknown 1-cell '" + n + "'");
        return it->second;
    }
    Cell2 unique_cell(const std::string& ptr, const Cell1& f, const Cell1& g, const std::string& what) const {
        if (f.dom != g.dom || f.cod != g.cod) rd.fail(ptr, what + ": 1-cells are not parallel");
        if (!mf.model->leq(f, g)) rd.fail(ptr, what + ": no 2-cell between the given 1-cells");
        return mf.model->cell(f, g);
    }
    SigmaCospan cospan(const std::string& ptr) const {
        rd.only_keys(ptr, {"f", "r"});
        SigmaCospan c{cell(ptr + "/f"), cell(ptr + "/r")};
        if (const Diagnosis d = validate_cospan(*mf.model, c); !d) rd.fail(ptr, "invalid cospan: " + d.failure);
        return c;
    }
    TwoMorphism two_morphism(const std::string& ptr) const {
        rd.only_keys(ptr, {"src", "tgt", "x1", "x2", "x3"});
        const ThinModel& m = *mf.model;
        TwoMorphism t;
        t.src = cospan(ptr + "/src");
        t.tgt = cospan(ptr + "/tgt");
        t.x1 = cell(ptr + "/x1");
        t.x2 = cell(ptr + "/x2");
        t.x3 = cell(ptr + "/x3");
        const auto composite = [&](const Cell1& g, const Cell1& f, const std::string& p) {
            if (g.dom != f.cod) rd.fail(p, "1-cells do not compose");
            return m.comp1(g, f);
        };
        t.alpha = unique_cell(ptr, composite(t.x1, t.src.f, ptr + "/x1"), composite(t.x2, t.tgt.f, ptr + "/x2"),
                              "alpha");
        t.delta1 = unique_cell(ptr, t.x3, composite(t.x1, t.src.r, ptr + "/x1"), "delta1");
        t.delta2 = unique_cell(ptr, t.x3, composite(t.x2, t.tgt.r, ptr + "/x2"), "delta2");
        if (const Diagnosis d = validate_two_morphism(m, t); !d) rd.fail(ptr, "invalid 2-morphism: " + d.failure);
        return t;
    }
    Square square(const std::string& ptr) const {
        rd.only_keys(ptr, {"top", "left", "right", "bottom"});
        const ThinModel& m = *mf.model;
        const Cell1 top = cell(ptr + "/top");
        const Cell1 left = cell(ptr + "/left");
        const Cell1 right = cell(ptr + "/right");
        const Cell1 bottom = cell(ptr + "/bottom");
        if (top.dom != left.dom || right.dom != top.cod || bottom.dom != left.cod || bottom.cod != right.cod)
            rd.fail(ptr, "edges do not form a square");
        Square q{top, left, right, bottom,
                 unique_cell(ptr, m.comp1(bottom, left), m.comp1(right, top), "square 2-cell")};
        if (const Diagnosis d = validate_square(m, q); !d) rd.fail(ptr, "not a Sigma-square: " + d.failure);
        return q;
    }
};

void parse_queries(const Context& cx) {
    const Reader& rd = cx.rd;
    if (!rd.has("/queries")) return;
    rd.only_keys("/queries", {"hom", "compose", "two_cell_equal", "lari", "bc", "samples"});
    ModelQueries& q = cx.mf.queries;
    const auto pairs = [&](const std::string& ptr, auto&& item) {
        if (!rd.has(ptr)) return;
        const json& a = rd.array(ptr);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::string p = idx(ptr, i);
            if (!rd.array(p).is_array() || rd.at(p).size() != 2) rd.fail(p, "expected a pair");
            item(idx(p, 0), idx(p, 1));
        }
    };
    pairs("/queries/hom", [&](const std::string& a, const std::string& b) {
        q.hom.emplace_back(cx.object(a), cx.object(b));
    });
    pairs("/queries/compose", [&](const std::string& g, const std::string& f) {
        const SigmaCospan cg = cx.cospan(g);
        const SigmaCospan cf = cx.cospan(f);
        if (cf.target() != cg.source()) rd.fail(g, "cospans do not compose");
        q.compose.emplace_back(cg, cf);
    });
    pairs("/queries/two_cell_equal", [&](const std::string& a, const std::string& b) {
        q.two_cell_equal.emplace_back(cx.two_morphism(a), cx.two_morphism(b));
    });
    if (rd.has("/queries/lari")) {
        const json& a = rd.array("/queries/lari");
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Cell1 s = cx.cell(idx("/queries/lari", i));
            if (!cx.mf.model->sigma_object(s)) rd.fail(idx("/queries/lari", i), "1-cell is not in Sigma");
            q.lari.push_back(s);
        }
    }
    if (rd.has("/queries/bc")) {
        const json& a = rd.array("/queries/bc");
        for (std::size_t i = 0; i < a.size(); ++i) q.bc.push_back(cx.square(idx("/queries/bc", i)));
    }
    if (rd.has("/queries/samples")) q.samples = rd.integer("/queries/samples", 1, 1000000);
}

void load_pos(const PositionedJson& doc, ModelFile& mf) {
    const Reader rd(doc);
    rd.only_keys("", {"kind", "universe_max", "posets", "maps", "queries"});
    const int universe = rd.has("/universe_max") ? rd.integer("/universe_max", 0, 4) : 3;
    mf.model = std::make_unique<PosModel>(universe);
    std::map<std::string, std::pair<FinitePoset, std::vector<std::string>>> posets;
    if (rd.has("/posets")) {
        for (const auto& [name, v] : rd.object("/posets").items()) {
            const std::string ptr = "/posets/" + escape_token(name);
            std::vector<std::string> elems;
            FinitePoset p = parse_poset(doc, ptr, &elems);
            mf.objects[name] = p.obj();
            mf.cells["id_" + name] = mf.model->id1(p.obj());
            posets.emplace(name, std::make_pair(std::move(p), std::move(elems)));
        }
    }
    if (rd.has("/maps")) {
        for (const auto& [name, v] : rd.object("/maps").items()) {
            const std::string ptr = "/maps/" + escape_token(name);
            rd.only_keys(ptr, {"dom", "cod", "assignment"});
            if (mf.cells.count(name)) rd.fail(ptr, "duplicate 1-cell name '" + name + "'");
            const auto find = [&](const std::string& p) -> const std::pair<FinitePoset, std::vector<std::string>>& {
                const std::string& n = rd.string(p);
                auto it = posets.find(n);
                if (it == posets.end()) rd.fail(p, "unknown poset '" + n + "'");
                return it->second;
            };
            const auto& [dom, dom_names] = find(ptr + "/dom");
            const auto& [cod, cod_names] = find(ptr + "/cod");
            const json& a = rd.array(ptr + "/assignment");
            if (static_cast<int>(a.size()) != dom.n)
                rd.fail(ptr + "/assignment", "assignment needs one entry per element of the domain");
            std::vector<int> assignment;
            for (std::size_t i = 0; i < a.size(); ++i)
                assignment.push_back(name_index(rd, cod_names, idx(ptr + "/assignment", i), "element"));
            for (int x = 0; x < dom.n; ++x)
                for (int y = 0; y < dom.n; ++y)
                    if (dom.leq(x, y) && !cod.leq(assignment[x], assignment[y]))
                        rd.fail(ptr + "/assignment", "map is not monotone: " + dom_names[x] + " <= " +
                                                          dom_names[y] + " but their images are not ordered");
            mf.cells[name] = MonotoneMap{dom, cod, assignment}.cell();
        }
    }
}

void load_category(const PositionedJson& doc, ModelFile& mf) {
    FiniteCategorySpec spec = parse_category_spec(doc);
    auto model = std::make_unique<TrivialModel>(spec);
    for (std::size_t i = 0; i < spec.objects.size(); ++i) mf.objects[spec.objects[i]] = model->obj(static_cast<int>(i));
    for (std::size_t i = 0; i < spec.morphisms.size(); ++i)
        mf.cells[spec.morphisms[i].name] = model->arrow(static_cast<int>(i));
    mf.spec = std::move(spec);
    mf.model = std::move(model);
}

}  // namespace

FinitePoset parse_poset(const PositionedJson& doc, const std::string& ptr, std::vector<std::string>* names) {
    const Reader rd(doc);
    rd.only_keys(ptr, {"elements", "leq"});
    const std::vector<std::string> elems = unique_names(rd, ptr + "/elements");
    const int n = static_cast<int>(elems.size());
    if (n > max_poset_size) rd.fail(ptr + "/elements", "too many elements");
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    std::vector<std::vector<std::string>> where(n, std::vector<std::string>(n));
    for (int i = 0; i < n; ++i) le[i][i] = true;
    const std::string lp = ptr + "/leq";
    const json& pairs = rd.has(lp) ? rd.array(lp) : json::array();
    std::vector<std::pair<int, int>> rel;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const std::string p = idx(lp, k);
        if (!rd.array(p).is_array() || rd.at(p).size() != 2) rd.fail(p, "expected a pair [a, b]");
        const int a = name_index(rd, elems, idx(p, 0), "element");
        const int b = name_index(rd, elems, idx(p, 1), "element");
        le[a][b] = true;
        if (where[a][b].empty()) where[a][b] = p;
        rel.emplace_back(a, b);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !le[a][b]) continue;
            if (le[b][a]) rd.fail(where[a][b], "leq is not antisymmetric: " + elems[a] + " and " + elems[b]);
            for (int c = 0; c < n; ++c)
                if (le[b][c] && !le[a][c])
                    rd.fail(where[a][b], "leq is not transitive: " + elems[a] + " <= " + elems[b] + " and " +
                                             elems[b] + " <= " + elems[c] + " but not " + elems[a] + " <= " +
                                             elems[c]);
        }
    if (names) *names = elems;
    return FinitePoset::from_relation(n, rel);
}

FiniteCategorySpec parse_category_spec(const PositionedJson& doc) {
    const Reader rd(doc);
    rd.only_keys("", {"kind", "objects", "morphisms", "compose", "sigma", "sigma_identities", "queries"});
    CategoryBuilder b;
    const std::vector<std::string> objects = unique_names(rd, "/objects");
    for (const auto& o : objects) b.object(o);
    std::set<std::string> arrows;
    for (const auto& o : objects) arrows.insert("id_" + o);
    if (rd.has("/morphisms")) {
        const json& ms = rd.array("/morphisms");
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const std::string p = idx("/morphisms", i);
            rd.only_keys(p, {"name", "dom", "cod"});
            const std::string& name = rd.string(p + "/name");
            if (!arrows.insert(name).second) rd.fail(p + "/name", "duplicate morphism '" + name + "'");
            name_index(rd, objects, p + "/dom", "object");
            name_index(rd, objects, p + "/cod", "object");
            b.morphism(name, rd.string(p + "/dom"), rd.string(p + "/cod"));
        }
    }
    const auto arrow = [&](const std::string& p) {
        const std::string& n = rd.string(p);
        if (!arrows.count(n)) rd.fail(p, "unknown morphism '" + n + "'");
        return n;
    };
    if (rd.has("/compose")) {
        const json& cs = rd.array("/compose");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string p = idx("/compose", i);
            if (!rd.array(p).is_array() || rd.at(p).size() != 3) rd.fail(p, "expected a triple [g, f, g.f]");
            b.composite(arrow(idx(p, 0)), arrow(idx(p, 1)), arrow(idx(p, 2)));
        }
    }
    if (rd.has("/sigma")) {
        const json& ss = rd.array("/sigma");
        for (std::size_t i = 0; i < ss.size(); ++i) b.sigma(arrow(idx("/sigma", i)));
    }
    const bool ids = !rd.has("/sigma_identities") ||
                     rd.require("/sigma_identities", json::value_t::boolean, "a boolean").get<bool>();
    if (ids) b.sigma_identities();
    try {
        return b.build();
    } catch (const SpecError& e) {
        rd.fail(rd.has("/compose") ? "/compose" : "/morphisms", std::string("not a category: ") + e.what());
    }
}

ModelFile parse_model(const std::string& text, const std::string& source) {
    const PositionedJson doc = PositionedJson::parse(text, source);
    const Reader rd(doc);
    if (!doc.root().is_object()) doc.fail("", "model file must be a JSON object");
    ModelFile mf;
    mf.kind = rd.string("/kind");
    if (mf.kind == "pos")
        load_pos(doc, mf);
    else if (mf.kind == "category")
        load_category(doc, mf);
    else
        doc.fail("/kind", "unknown model kind '" + mf.kind + "'");
    const Context cx{rd, mf};
    parse_queries(cx);
    return mf;
}

ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelError(path, 0, 0, "cannot read file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str(), path);
}

}  // namespace lax
