#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lax/core.hpp"
#include "lax/fractions.hpp"

namespace lax {

// Seeded random choices over objects of size <= max_size; identical seeds give
// identical sequences.
class Sampler {
public:
    Sampler(const TwoCatModel& m, unsigned seed, int max_size) : m_(m), rng_(seed) {
        for (const Obj& a : m.objects())
            if (m.object_size(a) <= max_size) objects_.push_back(a);
    }

    std::mt19937& rng() { return rng_; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        if (v.empty()) throw std::logic_error("Sampler: empty choice");
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng_)];
    }

    const Obj& object() { return pick(objects_); }

    // A Sigma-object out of a, into a random small object.
    Cell1 sigma_from(const Obj& a) {
        for (int tries = 0; tries < 200; ++tries) {
            const auto rs = m_.sigma_objects(a, object());
            if (!rs.empty()) return pick(rs);
        }
        return m_.id1(a);
    }

    // A Sigma-object into b, out of a random small object.
    Cell1 sigma_into(const Obj& b) {
        for (int tries = 0; tries < 200; ++tries) {
            const auto rs = m_.sigma_objects(object(), b);
            if (!rs.empty()) return pick(rs);
        }
        return m_.id1(b);
    }

    Cell1 cell_from(const Obj& a) {
        for (int tries = 0; tries < 200; ++tries) {
            const auto fs = m_.one_cells(a, object());
            if (!fs.empty()) return pick(fs);
        }
        return m_.id1(a);
    }

    Cell1 cell_between(const Obj& a, const Obj& b) {
        const auto fs = m_.one_cells(a, b);
        if (fs.empty()) throw std::logic_error("Sampler: empty hom");
        return pick(fs);
    }

    // (r_1, g_1, ..., r_n, g_n)
    std::vector<Cell1> border(int level) {
        std::vector<Cell1> out;
        Cell1 r = sigma_from(object());
        for (int k = 0; k < level; ++k) {
            const Cell1 g = cell_from(r.dom);
            out.push_back(r);
            out.push_back(g);
            if (k + 1 < level) r = sigma_into(g.cod);
        }
        return out;
    }

    // A cospan out of a.
    SigmaCospan cospan_from(const Obj& a) {
        const Cell1 f = cell_from(a);
        return SigmaCospan{f, sigma_into(f.cod)};
    }

    // A chain of n composable cospans starting at a random object.
    std::vector<SigmaCospan> chain(int n) {
        std::vector<SigmaCospan> out;
        Obj at = object();
        for (int i = 0; i < n; ++i) {
            out.push_back(cospan_from(at));
            at = out.back().target();
        }
        return out;
    }

    // A 2-morphism out of c into a random cospan with the same ends.
    std::optional<TwoMorphism> two_cell_from(const SigmaCospan& c, int apex_bound, int ext_bound) {
        auto targets = enumerate_cospans(m_, c.source(), c.target(), apex_bound);
        std::shuffle(targets.begin(), targets.end(), rng_);
        for (const SigmaCospan& d : targets) {
            const auto ts = enumerate_two_morphisms(m_, c, d, ext_bound);
            if (!ts.empty()) return pick(ts);
        }
        return std::nullopt;
    }

private:
    const TwoCatModel& m_;
    std::mt19937 rng_;
    std::vector<Obj> objects_;
};

}  // namespace lax
