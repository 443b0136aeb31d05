#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lax/calculus.hpp"
#include "lax/core.hpp"
#include "lax/fractions.hpp"

namespace lax {

struct NotReplaceable : LaxError {
    using LaxError::LaxError;
};

// Half-open rectangle of row bands and columns.
struct Region {
    int row0 = 0;
    int row1 = 0;
    int col0 = 0;
    int col1 = 0;

    bool contains(int row, int col) const { return row0 <= row && row < row1 && col0 <= col && col < col1; }
    bool contains(const Region& o) const {
        return row0 <= o.row0 && o.row1 <= row1 && col0 <= o.col0 && o.col1 <= col1;
    }
    bool disjoint(const Region& o) const {
        return o.row1 <= row0 || row1 <= o.row0 || o.col1 <= col0 || col1 <= o.col0;
    }
    friend auto operator<=>(const Region&, const Region&) = default;
};

struct Tile {
    Region at;
    Square sq;
    friend auto operator<=>(const Tile&, const Tile&) = default;
};

// A staircase grid of Sigma-squares. Columns run left to right, column j
// belonging to group K_{level - j}; band i of group k starts at column
// level - k. The left border is (r_1, g_1, ..., r_n, g_n) where r_k = tops[k-1]
// sits on top of the first band of group k and g_k is the composite of the
// left edges of the bands of group k.
struct SigmaScheme {
    int level = 0;
    std::vector<Cell1> tops;
    std::vector<int> group;
    std::vector<Cell1> left;
    // Sorted by position.
    std::vector<Tile> tiles;

    int bands() const { return static_cast<int>(group.size()); }
    int start(int band) const { return level - group.at(band); }
    int first_band(int k) const;
    int last_band(int k) const;
    friend auto operator<=>(const SigmaScheme&, const SigmaScheme&) = default;
};

// (r_1, g_1, ..., r_n, g_n)
std::vector<Cell1> left_border(const TwoCatModel& m, const SigmaScheme& s);
// (l, m): composite of the right column's right edges, composite of the
// bottom row's bottom edges.
std::pair<Cell1, Cell1> right_border(const TwoCatModel& m, const SigmaScheme& s);
// The cospan (l, m) from the apex of r_1 to the source of m.
SigmaCospan scheme_cospan(const TwoCatModel& m, const SigmaScheme& s);

// Band structure, tile coverage, each tile a Sigma-square, and matching
// composites along every seam and along the left border.
Diagnosis validate_scheme(const TwoCatModel& m, const SigmaScheme& s);
void require_scheme(const TwoCatModel& m, const SigmaScheme& s, const std::string& context);

// Tiles sorted, then validated.
SigmaScheme make_scheme(const TwoCatModel& m, std::vector<Cell1> tops, std::vector<int> group,
                        std::vector<Cell1> left, std::vector<Tile> tiles);

// Canonical unit cells, band by band and left to right.
SigmaScheme canonical_scheme(const TwoCatModel& m, const std::vector<Cell1>& tops, const std::vector<int>& group,
                             const std::vector<Cell1>& left);
// One band per group: border given as (r_1, g_1, ..., r_n, g_n).
SigmaScheme canonical_scheme(const TwoCatModel& m, const std::vector<Cell1>& border);

bool is_tile_union(const SigmaScheme& s, const Region& r);
// Composite of a rectangular union of tiles by guillotine cuts.
Square paste_region(const TwoCatModel& m, const SigmaScheme& s, const Region& r);

// Top and left segmentation of a region: pieces of the seam above and the
// seam to its left, with their extents.
struct Segment {
    int from = 0;
    int to = 0;
    Cell1 cell;
};
std::vector<Segment> top_segments(const TwoCatModel& m, const SigmaScheme& s, const Region& r);
std::vector<Segment> left_segments(const TwoCatModel& m, const SigmaScheme& s, const Region& r);

// Grid of canonical squares over the region's top and left segmentation.
std::vector<Tile> canonical_filling(const TwoCatModel& m, const SigmaScheme& s, const Region& r);

// Substitutes the tiles of r by the given tiles. NotReplaceable when r does
// not contain the lower right corner, is not a union of tiles, or the new
// tiles change the region's top or left composite.
SigmaScheme replace_region(const TwoCatModel& m, const SigmaScheme& s, const Region& r, std::vector<Tile> tiles);

// Removes identity-left bands made of identity squares and merges bands of
// one group whose separating line is crossed by every tile.
SigmaScheme normalize(const TwoCatModel& m, const SigmaScheme& s);

// Level 2 seen as level 3: a bottom band of identities.
SigmaScheme lift_to_level3(const TwoCatModel& m, const SigmaScheme& s);

std::string dump_scheme(const TwoCatModel& m, const SigmaScheme& s);

enum class StepType { d, u, s, d1, s1 };
std::string to_string(StepType t);
std::vector<StepType> step_types(int level);
// The region a step of the given type replaces, or nothing when the scheme
// has no such region.
std::optional<Region> step_region(const TwoCatModel& m, const SigmaScheme& s, StepType t);
// Types whose region exists and is a union of tiles.
std::vector<StepType> applicable_steps(const TwoCatModel& m, const SigmaScheme& s);

struct SigmaStep {
    StepType type = StepType::d;
    Region region;
    SigmaScheme before;
    SigmaScheme after;
};

// A step replacing the type's region by the given tiles.
SigmaStep make_step(const TwoCatModel& m, const SigmaScheme& before, StepType t, std::vector<Tile> tiles);
// A step replacing the type's region by its canonical filling.
SigmaStep canonical_step(const TwoCatModel& m, const SigmaScheme& before, StepType t);
SigmaStep reverse_step(const SigmaStep& st);

struct SigmaPath {
    SigmaScheme start;
    std::vector<SigmaStep> steps;

    const SigmaScheme& finish() const { return steps.empty() ? start : steps.back().after; }
};
// BoundaryError when consecutive schemes do not chain.
void require_path(const SigmaPath& p);
SigmaPath reverse_path(const SigmaPath& p);
SigmaPath concat_paths(const SigmaPath& p, const SigmaPath& q);

struct OmegaCell {
    TwoMorphism cell;
    std::vector<SigmaStep> path;
};

// [theta, d1, d2, d, delta1, delta2] from Rule 4' on two squares with common
// top and left, between (q1.right, q1.bottom) and (q2.right, q2.bottom).
OmegaCell basic_omega(const TwoCatModel& m, const Square& q1, const Square& q2, int bound);
OmegaCell omega_compose(const TwoCatModel& m, const OmegaCell& o2, const OmegaCell& o1, int bound);
// The step's schemes and the basic Omega of the replaced region whiskered by
// the untouched border parts l0 and m0.
std::pair<SigmaScheme, OmegaCell> apply_step(const TwoCatModel& m, const SigmaScheme& s, const SigmaStep& step,
                                             int bound);
OmegaCell omega_of_path(const TwoCatModel& m, const SigmaPath& p, int bound);

enum class Configuration { da, db, dc, ua, ub, s, s1 };
std::string to_string(Configuration c);
const std::vector<Configuration>& all_configurations();

struct ConfigurationTemplate {
    Configuration tag;
    std::vector<int> group;
    // Bands whose left edge is an identity.
    std::vector<int> identity_left;
    std::vector<Region> regions;
    std::vector<StepType> canonical_steps;
};
const ConfigurationTemplate& configuration_template(Configuration c);

// Tags whose regions are unions of tiles of a level-3 scheme with the same
// band structure.
std::vector<Configuration> classify_configuration(const TwoCatModel& m, const SigmaScheme& s);
bool is_path_of_interest(const TwoCatModel& m, const SigmaPath& p);

// The table path for the tag; its last scheme normalizes to the canonical
// scheme of the left border. PreconditionError when the tag does not apply.
SigmaPath canonical_path(const TwoCatModel& m, const SigmaScheme& s, Configuration c);

// Both Omega cells compared with are_equivalent. The verdict is undetermined,
// whatever the search says, unless both paths have length <= 2 or both are
// paths of interest; the note records the search outcome.
EquivalenceResult paths_equivalent(const TwoCatModel& m, const SigmaPath& p1, const SigmaPath& p2, int bound);

// Distinct Sigma-squares with the given top and left over codomains of size
// <= size_bound, the canonical square first.
std::vector<Square> sigma_completions(const TwoCatModel& m, const Cell1& top, const Cell1& left, int size_bound,
                                      std::size_t limit);

// All partitions of the staircase of a band structure into rectangles.
std::vector<std::vector<Region>> staircase_partitions(int level, const std::vector<int>& group);

// An order in which regions can be filled so that each region's top and left
// seams consist of border pieces and earlier regions lying within its extent;
// nothing when no such order exists.
std::optional<std::vector<std::size_t>> fill_order(int level, const std::vector<int>& group,
                                                   const std::vector<Region>& regions);

// Fills regions over a border (r_1, g_1, ..., r_n, g_n) and a band structure
// in which the bands listed in identity_left carry identities and each group
// has exactly one other band. choose picks a square for each region from its
// top and left composites.
using SquareChooser = std::function<Square(const Cell1& top, const Cell1& left)>;
SigmaScheme fill_regions(const TwoCatModel& m, const std::vector<Cell1>& border, const std::vector<int>& group,
                         const std::vector<int>& identity_left, const std::vector<Region>& regions,
                         const SquareChooser& choose);
// fill_regions with the template's band structure and regions.
SigmaScheme fill_template(const TwoCatModel& m, const std::vector<Cell1>& border, Configuration c,
                          const SquareChooser& choose);

// Level-3 schemes over a border (r_1, g_1, r_2, g_2, r_3, g_3): band
// structures (1, 2, 3) and (1, 2, 2, 3) with an identity band, every fillable
// staircase partition, filled once with canonical squares and once with the
// last Sigma-completion over codomains of size <= 2.
std::vector<SigmaScheme> enumerate_level3_schemes(const TwoCatModel& m, const std::vector<Cell1>& border);
// The empty path and every path of one or two canonical steps out of s.
std::vector<SigmaPath> paths_up_to_two(const TwoCatModel& m, const SigmaScheme& s);

}  // namespace lax
