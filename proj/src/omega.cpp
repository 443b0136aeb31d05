#include "lax/omega.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace lax {

namespace {

// Pieces listed in order of application.
Cell1 compose_chain(const TwoCatModel& m, const std::vector<Cell1>& cells) {
    Cell1 acc = cells.at(0);
    for (std::size_t i = 1; i < cells.size(); ++i) acc = m.comp1(cells[i], acc);
    return acc;
}

Cell1 compose_segments(const TwoCatModel& m, const std::vector<Segment>& segs) {
    std::vector<Cell1> cells;
    for (const auto& s : segs) cells.push_back(s.cell);
    return compose_chain(m, cells);
}

bool by_position(const Tile& a, const Tile& b) { return a.at < b.at; }

bool is_identity_square(const TwoCatModel& m, const Square& q) {
    return m.is_identity(q.left) && m.is_identity(q.right) && q.top == q.bottom && m.eq2(q.delta, m.id2(q.top));
}

// Pieces along the horizontal line y restricted to [c0, c1): tile bottoms
// above the line and border tops.
std::vector<Segment> pieces_above(const SigmaScheme& s, int y, int c0, int c1) {
    std::vector<Segment> out;
    for (const Tile& t : s.tiles)
        if (t.at.row1 == y && t.at.col1 > c0 && t.at.col0 < c1) out.push_back({t.at.col0, t.at.col1, t.sq.bottom});
    if (y < s.bands() && (y == 0 || s.group[y] != s.group[y - 1])) {
        const int k = s.group[y];
        const int col = s.level - k;
        if (col >= c0 && col < c1) out.push_back({col, col + 1, s.tops.at(k - 1)});
    }
    std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) { return a.from < b.from; });
    return out;
}

// Pieces along the vertical line x restricted to rows [r0, r1): tile right
// edges and border left edges.
std::vector<Segment> pieces_left(const SigmaScheme& s, int x, int r0, int r1) {
    std::vector<Segment> out;
    for (const Tile& t : s.tiles)
        if (t.at.col1 == x && t.at.row1 > r0 && t.at.row0 < r1) out.push_back({t.at.row0, t.at.row1, t.sq.right});
    for (int i = std::max(r0, 0); i < std::min(r1, s.bands()); ++i)
        if (s.start(i) == x) out.push_back({i, i + 1, s.left.at(i)});
    std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) { return a.from < b.from; });
    return out;
}

std::vector<Segment> pieces_below(const SigmaScheme& s, int y) {
    std::vector<Segment> out;
    for (const Tile& t : s.tiles)
        if (t.at.row0 == y) out.push_back({t.at.col0, t.at.col1, t.sq.top});
    std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) { return a.from < b.from; });
    return out;
}

std::vector<Segment> pieces_right(const SigmaScheme& s, int x) {
    std::vector<Segment> out;
    for (const Tile& t : s.tiles)
        if (t.at.col0 == x) out.push_back({t.at.row0, t.at.row1, t.sq.left});
    std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) { return a.from < b.from; });
    return out;
}

// Contiguous cover of exactly [from, to).
bool covers(const std::vector<Segment>& segs, int from, int to) {
    int at = from;
    for (const auto& s : segs) {
        if (s.from != at) return false;
        at = s.to;
    }
    return at == to;
}

// Maximal contiguous runs of sorted pieces; tiles crossing a line leave gaps.
std::vector<std::vector<Segment>> runs_of(const std::vector<Segment>& segs) {
    std::vector<std::vector<Segment>> out;
    for (const Segment& s : segs) {
        if (out.empty() || out.back().back().to != s.from) out.emplace_back();
        out.back().push_back(s);
    }
    return out;
}

// Both sides cover the same runs; within each run the composites agree
// between common breakpoints.
Diagnosis seam_agrees(const TwoCatModel& m, const std::vector<Segment>& upper, const std::vector<Segment>& lower,
                      const std::string& where) {
    const auto ra = runs_of(upper);
    const auto rb = runs_of(lower);
    if (ra.size() != rb.size()) return Diagnosis::fail(where + ": sides cover different extents");
    for (std::size_t r = 0; r < ra.size(); ++r) {
        const auto& a = ra[r];
        const auto& b = rb[r];
        if (a.front().from != b.front().from || a.back().to != b.back().to)
            return Diagnosis::fail(where + ": sides cover different extents");
        std::size_t i = 0;
        std::size_t j = 0;
        try {
            while (i < a.size() && j < b.size()) {
                std::vector<Cell1> ca{a[i].cell};
                std::vector<Cell1> cb{b[j].cell};
                while (a[i].to != b[j].to) {
                    if (a[i].to < b[j].to) {
                        if (++i == a.size()) return Diagnosis::fail(where + ": breakpoints do not close");
                        ca.push_back(a[i].cell);
                    } else {
                        if (++j == b.size()) return Diagnosis::fail(where + ": breakpoints do not close");
                        cb.push_back(b[j].cell);
                    }
                }
                if (compose_chain(m, ca) != compose_chain(m, cb))
                    return Diagnosis::fail(where + ": composites differ before position " + std::to_string(a[i].to));
                ++i;
                ++j;
            }
        } catch (const LaxError& e) {
            return Diagnosis::fail(where + ": " + e.what());
        }
    }
    return Diagnosis::pass();
}

Square paste_tiles(const TwoCatModel& m, const std::vector<Tile>& tiles, const Region& r) {
    if (tiles.size() == 1 && tiles[0].at == r) return tiles[0].sq;
    for (int y = r.row0 + 1; y < r.row1; ++y) {
        bool clean = true;
        for (const Tile& t : tiles) clean = clean && (t.at.row1 <= y || t.at.row0 >= y);
        if (!clean) continue;
        std::vector<Tile> up;
        std::vector<Tile> down;
        for (const Tile& t : tiles) (t.at.row1 <= y ? up : down).push_back(t);
        return vcompose_squares(m, paste_tiles(m, down, {y, r.row1, r.col0, r.col1}),
                                paste_tiles(m, up, {r.row0, y, r.col0, r.col1}));
    }
    for (int x = r.col0 + 1; x < r.col1; ++x) {
        bool clean = true;
        for (const Tile& t : tiles) clean = clean && (t.at.col1 <= x || t.at.col0 >= x);
        if (!clean) continue;
        std::vector<Tile> lhs;
        std::vector<Tile> rhs;
        for (const Tile& t : tiles) (t.at.col1 <= x ? lhs : rhs).push_back(t);
        return hcompose_squares(m, paste_tiles(m, lhs, {r.row0, r.row1, r.col0, x}),
                                paste_tiles(m, rhs, {r.row0, r.row1, x, r.col1}));
    }
    throw PreconditionError("paste_region: tiles admit no guillotine cut");
}

bool tiles_cover(const std::vector<Tile>& tiles, const Region& r) {
    long area = 0;
    for (const Tile& t : tiles) {
        if (!r.contains(t.at) || t.at.row0 >= t.at.row1 || t.at.col0 >= t.at.col1) return false;
        area += static_cast<long>(t.at.row1 - t.at.row0) * (t.at.col1 - t.at.col0);
    }
    for (std::size_t i = 0; i < tiles.size(); ++i)
        for (std::size_t j = i + 1; j < tiles.size(); ++j)
            if (!tiles[i].at.disjoint(tiles[j].at)) return false;
    return area == static_cast<long>(r.row1 - r.row0) * (r.col1 - r.col0);
}

}  // namespace

bool is_tile_union(const SigmaScheme& s, const Region& r) {
    std::vector<Tile> inside;
    for (const Tile& t : s.tiles) {
        if (r.contains(t.at))
            inside.push_back(t);
        else if (!r.disjoint(t.at))
            return false;
    }
    return !inside.empty() && tiles_cover(inside, r);
}

namespace {

void shift_rows_after_removal(std::vector<Tile>& tiles, int band) {
    for (Tile& t : tiles) {
        if (t.at.row0 > band) --t.at.row0;
        if (t.at.row1 > band) --t.at.row1;
    }
}

}  // namespace

int SigmaScheme::first_band(int k) const {
    for (int i = 0; i < bands(); ++i)
        if (group[i] == k) return i;
    return -1;
}

int SigmaScheme::last_band(int k) const {
    for (int i = bands() - 1; i >= 0; --i)
        if (group[i] == k) return i;
    return -1;
}

std::vector<Cell1> left_border(const TwoCatModel& m, const SigmaScheme& s) {
    std::vector<Cell1> out;
    for (int k = 1; k <= s.level; ++k) {
        out.push_back(s.tops.at(k - 1));
        std::vector<Cell1> g;
        for (int i = s.first_band(k); i >= 0 && i <= s.last_band(k); ++i) g.push_back(s.left[i]);
        out.push_back(compose_chain(m, g));
    }
    return out;
}

std::pair<Cell1, Cell1> right_border(const TwoCatModel& m, const SigmaScheme& s) {
    std::vector<Segment> right;
    std::vector<Segment> bottom;
    for (const Tile& t : s.tiles) {
        if (t.at.col1 == s.level) right.push_back({t.at.row0, t.at.row1, t.sq.right});
        if (t.at.row1 == s.bands()) bottom.push_back({t.at.col0, t.at.col1, t.sq.bottom});
    }
    if (right.empty() || bottom.empty()) throw PreconditionError("right_border: scheme has no tiles");
    auto by_from = [](const Segment& a, const Segment& b) { return a.from < b.from; };
    std::sort(right.begin(), right.end(), by_from);
    std::sort(bottom.begin(), bottom.end(), by_from);
    return {compose_segments(m, right), compose_segments(m, bottom)};
}

SigmaCospan scheme_cospan(const TwoCatModel& m, const SigmaScheme& s) {
    const auto [l, b] = right_border(m, s);
    return SigmaCospan{l, b};
}

Diagnosis validate_scheme(const TwoCatModel& m, const SigmaScheme& s) {
    const int n = s.level;
    const int R = s.bands();
    if (n < 1) return Diagnosis::fail("level must be positive");
    if (static_cast<int>(s.tops.size()) != n) return Diagnosis::fail("one top per group required");
    if (s.left.size() != s.group.size() || R < n) return Diagnosis::fail("band data inconsistent");
    if (s.group.front() != 1 || s.group.back() != n) return Diagnosis::fail("groups must run from 1 to level");
    for (int i = 1; i < R; ++i)
        if (s.group[i] != s.group[i - 1] && s.group[i] != s.group[i - 1] + 1)
            return Diagnosis::fail("groups must increase by steps of one");
    for (int k = 1; k <= n; ++k) {
        const Cell1& r = s.tops[k - 1];
        if (!m.sigma_object(r)) return Diagnosis::fail("top " + std::to_string(k) + " is not in Sigma");
        if (s.left[s.first_band(k)].dom != r.dom)
            return Diagnosis::fail("top " + std::to_string(k) + " and its left edge do not share a domain");
        if (k < n && s.left[s.last_band(k)].cod != s.tops[k].cod)
            return Diagnosis::fail("group " + std::to_string(k) + " does not end at the next top");
    }
    for (int i = 1; i < R; ++i)
        if (s.group[i] == s.group[i - 1] && s.left[i].dom != s.left[i - 1].cod)
            return Diagnosis::fail("left edges of band " + std::to_string(i) + " do not chain");

    std::vector<std::vector<int>> hits(R, std::vector<int>(n, 0));
    for (const Tile& t : s.tiles) {
        const Region& a = t.at;
        if (a.row0 < 0 || a.row1 > R || a.col0 < 0 || a.col1 > n || a.row0 >= a.row1 || a.col0 >= a.col1)
            return Diagnosis::fail("tile outside the grid");
        for (int i = a.row0; i < a.row1; ++i)
            for (int j = a.col0; j < a.col1; ++j) ++hits[i][j];
    }
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < n; ++j)
            if (hits[i][j] != (j >= s.start(i) ? 1 : 0))
                return Diagnosis::fail("cell (" + std::to_string(i) + ", " + std::to_string(j) +
                                       ") covered " + std::to_string(hits[i][j]) + " times");

    for (const Tile& t : s.tiles) {
        const Diagnosis d = validate_square(m, t.sq);
        if (!d) return Diagnosis::fail("tile: " + d.failure);
    }
    for (int y = 0; y < R; ++y) {
        const Diagnosis d = seam_agrees(m, pieces_above(s, y, 0, n), pieces_below(s, y),
                                        "horizontal seam " + std::to_string(y));
        if (!d) return d;
    }
    for (int x = 0; x < n; ++x) {
        const Diagnosis d =
            seam_agrees(m, pieces_left(s, x, 0, R), pieces_right(s, x), "vertical seam " + std::to_string(x));
        if (!d) return d;
    }
    return Diagnosis::pass();
}

void require_scheme(const TwoCatModel& m, const SigmaScheme& s, const std::string& context) {
    const Diagnosis d = validate_scheme(m, s);
    if (!d) throw PreconditionError(context + ": " + d.failure);
}

SigmaScheme make_scheme(const TwoCatModel& m, std::vector<Cell1> tops, std::vector<int> group,
                        std::vector<Cell1> left, std::vector<Tile> tiles) {
    SigmaScheme s;
    s.level = static_cast<int>(tops.size());
    s.tops = std::move(tops);
    s.group = std::move(group);
    s.left = std::move(left);
    s.tiles = std::move(tiles);
    std::sort(s.tiles.begin(), s.tiles.end(), by_position);
    require_scheme(m, s, "make_scheme");
    return s;
}

SigmaScheme canonical_scheme(const TwoCatModel& m, const std::vector<Cell1>& tops, const std::vector<int>& group,
                             const std::vector<Cell1>& left) {
    SigmaScheme s;
    s.level = static_cast<int>(tops.size());
    s.tops = tops;
    s.group = group;
    s.left = left;
    const int n = s.level;
    std::map<std::pair<int, int>, Square> cell;
    for (int i = 0; i < s.bands(); ++i)
        for (int j = s.start(i); j < n; ++j) {
            const bool border_top = j == s.start(i) && (i == 0 || group[i] != group[i - 1]);
            const Cell1& top = border_top ? tops.at(group[i] - 1) : cell.at({i - 1, j}).bottom;
            const Cell1& l = j == s.start(i) ? left.at(i) : cell.at({i, j - 1}).right;
            cell.emplace(std::make_pair(i, j), m.canonical_square(top, l));
        }
    for (const auto& [pos, sq] : cell) s.tiles.push_back({{pos.first, pos.first + 1, pos.second, pos.second + 1}, sq});
    std::sort(s.tiles.begin(), s.tiles.end(), by_position);
    require_scheme(m, s, "canonical_scheme");
    return s;
}

SigmaScheme canonical_scheme(const TwoCatModel& m, const std::vector<Cell1>& border) {
    if (border.empty() || border.size() % 2 != 0) throw PreconditionError("canonical_scheme: border needs (r, g) pairs");
    std::vector<Cell1> tops;
    std::vector<Cell1> left;
    std::vector<int> group;
    for (std::size_t k = 0; k < border.size() / 2; ++k) {
        tops.push_back(border[2 * k]);
        left.push_back(border[2 * k + 1]);
        group.push_back(static_cast<int>(k) + 1);
    }
    return canonical_scheme(m, tops, group, left);
}

Square paste_region(const TwoCatModel& m, const SigmaScheme& s, const Region& r) {
    if (!is_tile_union(s, r)) throw PreconditionError("paste_region: region is not a union of tiles");
    std::vector<Tile> inside;
    for (const Tile& t : s.tiles)
        if (r.contains(t.at)) inside.push_back(t);
    return paste_tiles(m, inside, r);
}

std::vector<Segment> top_segments(const TwoCatModel&, const SigmaScheme& s, const Region& r) {
    auto segs = pieces_above(s, r.row0, r.col0, r.col1);
    if (!covers(segs, r.col0, r.col1)) throw NotReplaceable("top seam of the region is not aligned with it");
    return segs;
}

std::vector<Segment> left_segments(const TwoCatModel&, const SigmaScheme& s, const Region& r) {
    auto segs = pieces_left(s, r.col0, r.row0, r.row1);
    if (!covers(segs, r.row0, r.row1)) throw NotReplaceable("left seam of the region is not aligned with it");
    return segs;
}

std::vector<Tile> canonical_filling(const TwoCatModel& m, const SigmaScheme& s, const Region& r) {
    const auto top = top_segments(m, s, r);
    const auto left = left_segments(m, s, r);
    std::vector<std::vector<Square>> grid(top.size());
    std::vector<Tile> out;
    for (std::size_t b = 0; b < left.size(); ++b)
        for (std::size_t a = 0; a < top.size(); ++a) {
            const Cell1& t = b == 0 ? top[a].cell : grid[a][b - 1].bottom;
            const Cell1& l = a == 0 ? left[b].cell : grid[a - 1][b].right;
            grid[a].push_back(m.canonical_square(t, l));
            out.push_back({{left[b].from, left[b].to, top[a].from, top[a].to}, grid[a].back()});
        }
    return out;
}

SigmaScheme replace_region(const TwoCatModel& m, const SigmaScheme& s, const Region& r, std::vector<Tile> tiles) {
    if (r.row1 != s.bands() || r.col1 != s.level)
        throw NotReplaceable("region does not contain the lower right corner");
    if (r.row0 < 0 || r.row0 >= r.row1 || r.col0 < 0 || r.col0 >= r.col1 || s.start(r.row0) > r.col0)
        throw NotReplaceable("region leaves the scheme");
    if (!is_tile_union(s, r)) throw NotReplaceable("region is not a union of tiles");
    if (!tiles_cover(tiles, r)) throw NotReplaceable("replacement does not tile the region");
    SigmaScheme out = s;
    out.tiles.clear();
    for (const Tile& t : s.tiles)
        if (!r.contains(t.at)) out.tiles.push_back(t);
    for (Tile& t : tiles) out.tiles.push_back(std::move(t));
    std::sort(out.tiles.begin(), out.tiles.end(), by_position);
    const Diagnosis d = validate_scheme(m, out);
    if (!d) throw NotReplaceable("replacement breaks the scheme: " + d.failure);
    const Square before = paste_region(m, s, r);
    const Square after = paste_region(m, out, r);
    if (before.top != after.top || before.left != after.left)
        throw NotReplaceable("replacement changes the region's left border");
    return out;
}

SigmaScheme normalize(const TwoCatModel& m, const SigmaScheme& s) {
    SigmaScheme out = s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < out.bands() && !changed; ++i) {
            const int k = out.group[i];
            if (out.first_band(k) == out.last_band(k) || !m.is_identity(out.left[i])) continue;
            bool removable = true;
            for (const Tile& t : out.tiles)
                if (t.at.row0 <= i && i < t.at.row1)
                    removable = removable && t.at.row0 == i && t.at.row1 == i + 1 && is_identity_square(m, t.sq);
            if (!removable) continue;
            std::vector<Tile> kept;
            for (const Tile& t : out.tiles)
                if (t.at.row0 != i) kept.push_back(t);
            shift_rows_after_removal(kept, i);
            out.tiles = std::move(kept);
            out.group.erase(out.group.begin() + i);
            out.left.erase(out.left.begin() + i);
            changed = true;
        }
        for (int y = 1; y < out.bands() && !changed; ++y) {
            if (out.group[y] != out.group[y - 1]) continue;
            bool used = false;
            for (const Tile& t : out.tiles) used = used || t.at.row0 == y || t.at.row1 == y;
            if (used) continue;
            out.left[y - 1] = m.comp1(out.left[y], out.left[y - 1]);
            out.left.erase(out.left.begin() + y);
            out.group.erase(out.group.begin() + y);
            shift_rows_after_removal(out.tiles, y - 1);
            changed = true;
        }
    }
    std::sort(out.tiles.begin(), out.tiles.end(), by_position);
    return out;
}

SigmaScheme lift_to_level3(const TwoCatModel& m, const SigmaScheme& s) {
    if (s.level != 2) throw PreconditionError("lift_to_level3: scheme is not of level 2");
    SigmaScheme out = s;
    const Obj k = s.left.back().cod;
    const int R = s.bands();
    out.level = 3;
    out.tops.push_back(m.id1(k));
    out.group.push_back(3);
    out.left.push_back(m.id1(k));
    for (Tile& t : out.tiles) {
        ++t.at.col0;
        ++t.at.col1;
    }
    out.tiles.push_back({{R, R + 1, 0, 1}, identity_square(m, m.id1(k))});
    for (const Tile& t : s.tiles)
        if (t.at.row1 == R) out.tiles.push_back({{R, R + 1, t.at.col0 + 1, t.at.col1 + 1}, identity_square(m, t.sq.bottom)});
    std::sort(out.tiles.begin(), out.tiles.end(), by_position);
    require_scheme(m, out, "lift_to_level3");
    return out;
}

std::string dump_scheme(const TwoCatModel& m, const SigmaScheme& s) {
    std::ostringstream os;
    os << "scheme level " << s.level << " bands " << s.bands() << "\n";
    for (int k = 1; k <= s.level; ++k) os << "top " << k << " " << m.describe(s.tops[k - 1]) << "\n";
    for (int i = 0; i < s.bands(); ++i)
        os << "band " << i << " group " << s.group[i] << " left " << m.describe(s.left[i]) << "\n";
    for (const Tile& t : s.tiles)
        os << "tile rows " << t.at.row0 << ".." << t.at.row1 << " cols " << t.at.col0 << ".." << t.at.col1
           << " top " << m.describe(t.sq.top) << " left " << m.describe(t.sq.left) << " right "
           << m.describe(t.sq.right) << " bottom " << m.describe(t.sq.bottom) << "\n";
    const auto [l, b] = right_border(m, s);
    os << "right l " << m.describe(l) << " m " << m.describe(b) << "\n";
    return os.str();
}

std::string to_string(StepType t) {
    switch (t) {
        case StepType::d:
            return "d";
        case StepType::u:
            return "u";
        case StepType::s:
            return "s";
        case StepType::d1:
            return "d1";
        case StepType::s1:
            return "s1";
    }
    return "?";
}

std::vector<StepType> step_types(int level) {
    if (level == 3) return {StepType::d, StepType::u, StepType::s, StepType::d1, StepType::s1};
    return {StepType::d, StepType::u, StepType::d1};
}

namespace {

// Leading bands of group k with identity left edges, when they form a
// proper nonempty prefix of the group.
std::optional<int> identity_prefix(const TwoCatModel& m, const SigmaScheme& s, int k) {
    const int first = s.first_band(k);
    const int last = s.last_band(k);
    if (first < 0) return std::nullopt;
    int p = 0;
    while (first + p < last && m.is_identity(s.left[first + p])) ++p;
    if (p == 0) return std::nullopt;
    return p;
}

}  // namespace

std::optional<Region> step_region(const TwoCatModel& m, const SigmaScheme& s, StepType t) {
    const int n = s.level;
    const int R = s.bands();
    switch (t) {
        case StepType::d:
            return Region{s.first_band(n), R, 0, n};
        case StepType::u:
            return Region{0, R, n - 1, n};
        case StepType::s:
            if (n != 3) return std::nullopt;
            return Region{s.first_band(2), R, 1, 3};
        case StepType::d1: {
            const auto p = identity_prefix(m, s, n);
            if (!p) return std::nullopt;
            return Region{s.first_band(n) + *p, R, 0, n};
        }
        case StepType::s1: {
            if (n != 3) return std::nullopt;
            const auto p = identity_prefix(m, s, 2);
            if (!p) return std::nullopt;
            return Region{s.first_band(2) + *p, R, 1, 3};
        }
    }
    return std::nullopt;
}

std::vector<StepType> applicable_steps(const TwoCatModel& m, const SigmaScheme& s) {
    std::vector<StepType> out;
    for (StepType t : step_types(s.level)) {
        const auto r = step_region(m, s, t);
        if (r && is_tile_union(s, *r)) out.push_back(t);
    }
    return out;
}

namespace {

Region require_region(const TwoCatModel& m, const SigmaScheme& s, StepType t) {
    const auto r = step_region(m, s, t);
    if (!r) throw NotReplaceable("scheme has no region of type " + to_string(t));
    return *r;
}

}  // namespace

SigmaStep make_step(const TwoCatModel& m, const SigmaScheme& before, StepType t, std::vector<Tile> tiles) {
    const Region r = require_region(m, before, t);
    SigmaStep st;
    st.type = t;
    st.region = r;
    st.before = before;
    st.after = replace_region(m, before, r, std::move(tiles));
    return st;
}

SigmaStep canonical_step(const TwoCatModel& m, const SigmaScheme& before, StepType t) {
    const Region r = require_region(m, before, t);
    if (!is_tile_union(before, r)) throw NotReplaceable("region of type " + to_string(t) + " is not a union of tiles");
    return make_step(m, before, t, canonical_filling(m, before, r));
}

SigmaStep reverse_step(const SigmaStep& st) {
    SigmaStep out = st;
    std::swap(out.before, out.after);
    return out;
}

void require_path(const SigmaPath& p) {
    const SigmaScheme* at = &p.start;
    for (const SigmaStep& st : p.steps) {
        if (st.before != *at) throw BoundaryError("path: consecutive steps do not chain");
        at = &st.after;
    }
}

SigmaPath reverse_path(const SigmaPath& p) {
    SigmaPath out;
    out.start = p.finish();
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) out.steps.push_back(reverse_step(*it));
    return out;
}

SigmaPath concat_paths(const SigmaPath& p, const SigmaPath& q) {
    if (p.finish() != q.start) throw BoundaryError("concat_paths: paths do not chain");
    SigmaPath out = p;
    out.steps.insert(out.steps.end(), q.steps.begin(), q.steps.end());
    return out;
}

OmegaCell basic_omega(const TwoCatModel& m, const Square& q1, const Square& q2, int bound) {
    if (q1.top != q2.top || q1.left != q2.left) throw BoundaryError("basic_omega: squares do not share a left border");
    const Rule4Bundle b = rule4_prime(m, q1, q2, bound);
    TwoMorphism t;
    t.src = SigmaCospan{q1.right, q1.bottom};
    t.tgt = SigmaCospan{q2.right, q2.bottom};
    t.alpha = b.gammas.at(0);
    t.x1 = b.dx;
    t.x2 = b.dy;
    t.x3 = b.u;
    t.delta1 = b.phi.delta;
    t.delta2 = b.chi.delta;
    require_two_morphism(m, t, "basic_omega");
    return OmegaCell{std::move(t), {}};
}

OmegaCell omega_compose(const TwoCatModel& m, const OmegaCell& o2, const OmegaCell& o1, int bound) {
    OmegaCell out{vcompose(m, o2.cell, o1.cell, bound), o1.path};
    out.path.insert(out.path.end(), o2.path.begin(), o2.path.end());
    return out;
}

std::pair<SigmaScheme, OmegaCell> apply_step(const TwoCatModel& m, const SigmaScheme& s, const SigmaStep& step,
                                             int bound) {
    if (step.before != s) throw BoundaryError("apply_step: step does not start at the scheme");
    const Region& r = step.region;
    const Square old_sq = paste_region(m, step.before, r);
    const Square new_sq = paste_region(m, step.after, r);
    const OmegaCell basic = basic_omega(m, old_sq, new_sq, bound);

    std::vector<Segment> above;
    std::vector<Segment> before_left;
    for (const Tile& t : s.tiles) {
        if (t.at.col1 == s.level && t.at.row1 <= r.row0) above.push_back({t.at.row0, t.at.row1, t.sq.right});
        if (t.at.row1 == s.bands() && t.at.col1 <= r.col0) before_left.push_back({t.at.col0, t.at.col1, t.sq.bottom});
    }
    auto by_from = [](const Segment& a, const Segment& b) { return a.from < b.from; };
    std::sort(above.begin(), above.end(), by_from);
    std::sort(before_left.begin(), before_left.end(), by_from);
    const Cell1 l0 = above.empty() ? m.id1(s.tops.front().cod) : compose_segments(m, above);
    const Cell1 m0 = before_left.empty() ? m.id1(s.left.back().cod) : compose_segments(m, before_left);

    OmegaCell out{whisker_two_morphism(m, basic.cell, l0, m0), {step}};
    if (out.cell.src != scheme_cospan(m, step.before) || out.cell.tgt != scheme_cospan(m, step.after))
        throw LaxError("apply_step: whiskered Omega does not connect the right borders");
    require_two_morphism(m, out.cell, "apply_step");
    return {step.after, std::move(out)};
}

OmegaCell omega_of_path(const TwoCatModel& m, const SigmaPath& p, int bound) {
    require_path(p);
    if (p.steps.empty()) return OmegaCell{identity_two_cell(m, scheme_cospan(m, p.start)), {}};
    OmegaCell acc = apply_step(m, p.start, p.steps.front(), bound).second;
    for (std::size_t i = 1; i < p.steps.size(); ++i)
        acc = omega_compose(m, apply_step(m, p.steps[i].before, p.steps[i], bound).second, acc, bound);
    return acc;
}

std::string to_string(Configuration c) {
    switch (c) {
        case Configuration::da:
            return "da";
        case Configuration::db:
            return "db";
        case Configuration::dc:
            return "dc";
        case Configuration::ua:
            return "ua";
        case Configuration::ub:
            return "ub";
        case Configuration::s:
            return "s";
        case Configuration::s1:
            return "s1";
    }
    return "?";
}

const std::vector<Configuration>& all_configurations() {
    static const std::vector<Configuration> all{Configuration::da, Configuration::db, Configuration::dc,
                                                Configuration::ua, Configuration::ub, Configuration::s,
                                                Configuration::s1};
    return all;
}

const ConfigurationTemplate& configuration_template(Configuration c) {
    using S = StepType;
    // Columns: 0 = K3, 1 = K2, 2 = K1.
    static const std::map<Configuration, ConfigurationTemplate> table{
        {Configuration::da,
         {Configuration::da, {1, 2, 3}, {}, {{0, 2, 2, 3}, {1, 2, 1, 2}, {2, 3, 0, 3}}, {S::d, S::u, S::s}}},
        {Configuration::db,
         {Configuration::db, {1, 2, 3}, {}, {{0, 1, 2, 3}, {1, 2, 1, 3}, {2, 3, 0, 3}}, {S::d, S::s, S::u}}},
        {Configuration::dc,
         {Configuration::dc,
          {1, 2, 2, 3},
          {1},
          {{0, 1, 2, 3}, {1, 2, 1, 2}, {1, 2, 2, 3}, {2, 3, 1, 3}, {3, 4, 0, 3}},
          {S::d, S::s1, S::u, S::s}}},
        {Configuration::ua,
         {Configuration::ua, {1, 2, 3}, {}, {{0, 3, 2, 3}, {1, 3, 1, 2}, {2, 3, 0, 1}}, {S::u, S::s, S::d}}},
        {Configuration::ub,
         {Configuration::ub, {1, 2, 3}, {}, {{0, 3, 2, 3}, {1, 2, 1, 2}, {2, 3, 0, 2}}, {S::u, S::d, S::s}}},
        {Configuration::s,
         {Configuration::s, {1, 2, 3}, {}, {{0, 1, 2, 3}, {1, 3, 1, 3}, {2, 3, 0, 1}}, {S::s, S::d, S::u}}},
        {Configuration::s1,
         {Configuration::s1,
          {1, 2, 2, 3},
          {1},
          {{0, 2, 2, 3}, {1, 2, 1, 2}, {2, 4, 1, 3}, {3, 4, 0, 1}},
          {S::s1, S::u, S::s, S::d}}},
    };
    return table.at(c);
}

std::vector<Configuration> classify_configuration(const TwoCatModel& m, const SigmaScheme& s) {
    std::vector<Configuration> out;
    if (s.level != 3) return out;
    for (Configuration c : all_configurations()) {
        const ConfigurationTemplate& t = configuration_template(c);
        if (s.group != t.group) continue;
        bool ok = true;
        for (int b : t.identity_left) ok = ok && m.is_identity(s.left[b]);
        for (const Region& r : t.regions) ok = ok && is_tile_union(s, r);
        if (ok) out.push_back(c);
    }
    return out;
}

bool is_path_of_interest(const TwoCatModel& m, const SigmaPath& p) {
    if (p.start.level != 3 || classify_configuration(m, p.start).empty()) return false;
    for (const SigmaStep& st : p.steps)
        if (classify_configuration(m, st.after).empty()) return false;
    return true;
}

SigmaPath canonical_path(const TwoCatModel& m, const SigmaScheme& s, Configuration c) {
    const auto tags = classify_configuration(m, s);
    if (std::find(tags.begin(), tags.end(), c) == tags.end())
        throw PreconditionError("canonical_path: scheme does not have configuration " + to_string(c));
    SigmaPath p;
    p.start = s;
    for (StepType t : configuration_template(c).canonical_steps) p.steps.push_back(canonical_step(m, p.finish(), t));
    if (normalize(m, p.finish()) != canonical_scheme(m, left_border(m, s)))
        throw LaxError("canonical_path: path for " + to_string(c) + " does not reach the canonical scheme");
    return p;
}

EquivalenceResult paths_equivalent(const TwoCatModel& m, const SigmaPath& p1, const SigmaPath& p2, int bound) {
    require_path(p1);
    require_path(p2);
    if (p1.start != p2.start || p1.finish() != p2.finish())
        throw BoundaryError("paths_equivalent: paths have different endpoints");
    const OmegaCell o1 = omega_of_path(m, p1, bound);
    const OmegaCell o2 = omega_of_path(m, p2, bound);
    EquivalenceResult res = are_equivalent(m, o1.cell, o2.cell, bound);
    const bool short_paths = p1.steps.size() <= 2 && p2.steps.size() <= 2;
    const bool of_interest = is_path_of_interest(m, p1) && is_path_of_interest(m, p2);
    if (!short_paths && !of_interest) {
        res.note = "search verdict " + to_string(res.verdict) + "; no proven case covers these paths";
        res.verdict = Verdict::undetermined;
        res.route = "theory";
    }
    return res;
}

std::vector<Square> sigma_completions(const TwoCatModel& m, const Cell1& top, const Cell1& left, int size_bound,
                                      std::size_t limit) {
    std::vector<Square> out{m.canonical_square(top, left)};
    std::set<Square> seen(out.begin(), out.end());
    for (const Obj& w : m.objects()) {
        if (m.object_size(w) > size_bound) continue;
        for (const Cell1& bottom : m.sigma_objects(left.cod, w))
            for (const Cell1& right : m.one_cells(top.cod, w))
                for (const Cell2& d : m.two_cells(m.comp1(bottom, left), m.comp1(right, top))) {
                    if (out.size() >= limit) return out;
                    const Square q{top, left, right, bottom, d};
                    if (seen.count(q) || !validate_square(m, q)) continue;
                    seen.insert(q);
                    out.push_back(q);
                }
    }
    return out;
}

std::vector<std::vector<Region>> staircase_partitions(int level, const std::vector<int>& group) {
    const int R = static_cast<int>(group.size());
    std::vector<std::vector<bool>> used(R, std::vector<bool>(level, false));
    auto inside = [&](int i, int j) { return j >= level - group[i]; };
    std::vector<std::vector<Region>> out;
    std::vector<Region> current;
    std::function<void()> go = [&]() {
        int i0 = -1;
        int j0 = -1;
        for (int i = 0; i < R && i0 < 0; ++i)
            for (int j = 0; j < level; ++j)
                if (inside(i, j) && !used[i][j]) {
                    i0 = i;
                    j0 = j;
                    break;
                }
        if (i0 < 0) {
            out.push_back(current);
            return;
        }
        for (int i1 = i0 + 1; i1 <= R; ++i1) {
            if (!inside(i1 - 1, j0) || used[i1 - 1][j0]) break;
            for (int j1 = j0 + 1; j1 <= level; ++j1) {
                bool free = true;
                for (int i = i0; i < i1 && free; ++i) free = inside(i, j1 - 1) && !used[i][j1 - 1];
                if (!free) break;
                for (int i = i0; i < i1; ++i)
                    for (int j = j0; j < j1; ++j) used[i][j] = true;
                current.push_back({i0, i1, j0, j1});
                go();
                current.pop_back();
                for (int i = i0; i < i1; ++i)
                    for (int j = j0; j < j1; ++j) used[i][j] = false;
            }
        }
    };
    go();
    return out;
}

std::optional<std::vector<std::size_t>> fill_order(int level, const std::vector<int>& group,
                                                   const std::vector<Region>& regions) {
    SigmaScheme shape;
    shape.level = level;
    shape.group = group;
    shape.tops.resize(level);
    shape.left.resize(group.size());
    std::vector<std::size_t> order;
    std::vector<bool> done(regions.size(), false);
    while (order.size() < regions.size()) {
        bool progress = false;
        for (std::size_t i = 0; i < regions.size(); ++i) {
            if (done[i]) continue;
            const Region& r = regions[i];
            if (!covers(pieces_above(shape, r.row0, r.col0, r.col1), r.col0, r.col1) ||
                !covers(pieces_left(shape, r.col0, r.row0, r.row1), r.row0, r.row1))
                continue;
            shape.tiles.push_back({r, {}});
            done[i] = true;
            order.push_back(i);
            progress = true;
        }
        if (!progress) return std::nullopt;
    }
    return order;
}

SigmaScheme fill_regions(const TwoCatModel& m, const std::vector<Cell1>& border, const std::vector<int>& group,
                         const std::vector<int>& identity_left, const std::vector<Region>& regions,
                         const SquareChooser& choose) {
    if (border.empty() || border.size() % 2 != 0) throw PreconditionError("fill_regions: border needs (r, g) pairs");
    SigmaScheme s;
    s.level = static_cast<int>(border.size() / 2);
    s.group = group;
    for (int k = 0; k < s.level; ++k) s.tops.push_back(border[2 * k]);
    for (int i = 0; i < s.bands(); ++i) {
        const bool id = std::find(identity_left.begin(), identity_left.end(), i) != identity_left.end();
        const int k = s.group[i];
        s.left.push_back(id ? m.id1(border[2 * (k - 1)].dom) : border[2 * (k - 1) + 1]);
    }
    const auto order = fill_order(s.level, group, regions);
    if (!order) throw PreconditionError("fill_regions: regions cannot be ordered");
    for (std::size_t i : *order) {
        const Region& r = regions[i];
        const auto top = pieces_above(s, r.row0, r.col0, r.col1);
        const auto left = pieces_left(s, r.col0, r.row0, r.row1);
        s.tiles.push_back({r, choose(compose_segments(m, top), compose_segments(m, left))});
        std::sort(s.tiles.begin(), s.tiles.end(), by_position);
    }
    require_scheme(m, s, "fill_regions");
    return s;
}

SigmaScheme fill_template(const TwoCatModel& m, const std::vector<Cell1>& border, Configuration c,
                          const SquareChooser& choose) {
    const ConfigurationTemplate& t = configuration_template(c);
    if (border.size() != 6) throw PreconditionError("fill_template: border of level 3 required");
    return fill_regions(m, border, t.group, t.identity_left, t.regions, choose);
}

std::vector<SigmaScheme> enumerate_level3_schemes(const TwoCatModel& m, const std::vector<Cell1>& border) {
    const SquareChooser canonical = [&m](const Cell1& t, const Cell1& l) { return m.canonical_square(t, l); };
    const SquareChooser alternative = [&m](const Cell1& t, const Cell1& l) {
        return sigma_completions(m, t, l, 2, 3).back();
    };
    std::vector<SigmaScheme> out;
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes{{{1, 2, 3}, {}}, {{1, 2, 2, 3}, {1}}};
    for (const auto& [group, ids] : shapes)
        for (const auto& regions : staircase_partitions(3, group)) {
            if (!fill_order(3, group, regions)) continue;
            for (const SquareChooser* choose : {&canonical, &alternative})
                out.push_back(fill_regions(m, border, group, ids, regions, *choose));
        }
    return out;
}

std::vector<SigmaPath> paths_up_to_two(const TwoCatModel& m, const SigmaScheme& s) {
    std::vector<SigmaPath> out{SigmaPath{s, {}}};
    for (StepType a : applicable_steps(m, s)) {
        SigmaPath p1{s, {canonical_step(m, s, a)}};
        out.push_back(p1);
        for (StepType b : applicable_steps(m, p1.finish())) {
            SigmaPath p2 = p1;
            p2.steps.push_back(canonical_step(m, p1.finish(), b));
            out.push_back(p2);
        }
    }
    return out;
}

}  // namespace lax
