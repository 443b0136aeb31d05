#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lax/category.hpp"
#include "lax/fractions.hpp"
#include "lax/pos.hpp"

namespace lax {

// A malformed or invalid model file; line and column are 1-based.
struct ModelError : LaxError {
    ModelError(const std::string& source, int line, int column, const std::string& what)
        : LaxError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          source(source),
          line(line),
          column(column) {}
    std::string source;
    int line;
    int column;
};

// A JSON document with the source position of every value, keyed by JSON
// pointer.
class PositionedJson {
public:
    // ModelError on syntax errors.
    static PositionedJson parse(const std::string& text, const std::string& source);

    const nlohmann::json& root() const { return root_; }
    const std::string& source() const { return source_; }
    // Position of the value at the pointer, or of its closest present
    // ancestor.
    std::pair<int, int> position(const std::string& pointer) const;
    [[noreturn]] void fail(const std::string& pointer, const std::string& what) const;

private:
    std::string source_;
    std::string text_;
    nlohmann::json root_;
    std::map<std::string, std::size_t> offsets_;
    friend class PositionRecorder;
};

struct ModelQueries {
    std::vector<std::pair<Obj, Obj>> hom;
    std::vector<std::pair<SigmaCospan, SigmaCospan>> compose;
    std::vector<std::pair<TwoMorphism, TwoMorphism>> two_cell_equal;
    std::vector<Cell1> lari;
    std::vector<Square> bc;
    std::optional<int> samples;
};

struct ModelFile {
    std::string kind;
    std::unique_ptr<ThinModel> model;
    // Set for category models.
    std::optional<FiniteCategorySpec> spec;
    // Named objects and 1-cells usable in queries.
    std::map<std::string, Obj> objects;
    std::map<std::string, Cell1> cells;
    ModelQueries queries;
};

ModelFile parse_model(const std::string& text, const std::string& source);
// ModelError with line 0 when the file cannot be read.
ModelFile load_model_file(const std::string& path);

FinitePoset parse_poset(const PositionedJson& doc, const std::string& pointer, std::vector<std::string>* names);
FiniteCategorySpec parse_category_spec(const PositionedJson& doc);

}  // namespace lax
