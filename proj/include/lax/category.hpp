#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lax/core.hpp"

namespace lax {

struct FiniteCategorySpec {
    struct Morphism {
        std::string name;
        int dom = 0;
        int cod = 0;
    };

    std::vector<std::string> objects;
    // Identities come first, one per object, in object order.
    std::vector<Morphism> morphisms;
    std::vector<int> identity;
    // compose[g][f] is the index of g . f, or -1 when not composable.
    std::vector<std::vector<int>> compose;
    std::vector<bool> sigma;

    int object_index(const std::string& name) const;
    int morphism_index(const std::string& name) const;
    // Throws SpecError naming the first violated category law.
    void validate() const;
};

// Incremental construction with implicit identities named id_<object>.
class CategoryBuilder {
public:
    CategoryBuilder& object(const std::string& name);
    CategoryBuilder& morphism(const std::string& name, const std::string& dom, const std::string& cod);
    CategoryBuilder& composite(const std::string& g, const std::string& f, const std::string& gf);
    CategoryBuilder& sigma(const std::string& name);
    CategoryBuilder& sigma_identities();
    // Fills identity compositions, then validates.
    FiniteCategorySpec build() const;

private:
    std::vector<std::string> objects_;
    std::vector<FiniteCategorySpec::Morphism> arrows_;
    std::vector<std::string> arrow_names_;
    std::vector<std::array<std::string, 3>> composites_;
    std::vector<std::string> sigma_;
    bool sigma_identities_ = false;
};

// 2-category with only identity 2-cells; Sigma is the full subcategory of the
// arrow category on the morphisms flagged in the spec.
class TrivialModel : public ThinModel {
public:
    explicit TrivialModel(FiniteCategorySpec spec);

    std::string name() const override { return "category"; }
    std::string describe(const Obj& a) const override;
    std::string describe(const Cell1& f) const override;

    std::vector<Obj> objects() const override;
    std::vector<Cell1> one_cells(const Obj& a, const Obj& b) const override;
    Cell1 id1(const Obj& a) const override;
    bool leq(const Cell1& f, const Cell1& g) const override { return f == g; }

    bool sigma_object(const Cell1& r) const override;
    bool sigma_morphism(const Square& q) const override;

    Square square_witness(const Cell1& s, const Cell1& f, int bound) const override;
    EquiInsertion equi_insertion_witness(const Square& q, const Cell1& g, const Cell2& alpha,
                                         int bound) const override;
    Cell1 equification_witness(const Square& q, const Cell2& a, const Cell2& b,
                               int bound) const override;

    const FiniteCategorySpec& spec() const { return spec_; }
    Obj obj(int i) const { return Obj{{static_cast<std::uint64_t>(i)}}; }
    Cell1 arrow(int i) const;
    Cell1 arrow(const std::string& name) const { return arrow(spec_.morphism_index(name)); }
    int index(const Cell1& f) const { return static_cast<int>(f.code.at(0)); }

protected:
    Cell1 do_comp1(const Cell1& g, const Cell1& f) const override;

private:
    FiniteCategorySpec spec_;
    std::vector<std::vector<std::vector<int>>> hom_;
};

TrivialModel load_trivial_model(FiniteCategorySpec spec);

}  // namespace lax
