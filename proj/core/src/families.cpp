#include "tsc/families.hpp"

#include <map>

namespace tsc {

Family family_from_name(const std::string& name) {
    if (name == "honeycomb") return Family::honeycomb_torus;
    if (name == "square") return Family::square_torus;
    if (name == "square-octagon" || name == "sqoct") return Family::square_octagon_torus;
    if (name == "triangular") return Family::triangular_torus;
    if (name == "rotated-surface" || name == "dsq") return Family::rotated_surface_dsq;
    throw ConstructionError("unknown family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::honeycomb_torus: return "honeycomb";
        case Family::square_torus: return "square";
        case Family::square_octagon_torus: return "square-octagon";
        case Family::triangular_torus: return "triangular";
        case Family::rotated_surface_dsq: return "rotated-surface";
    }
    return "?";
}

namespace {

Color color_of_index(std::size_t i) { return Color(i % 3); }

SurfaceComplex build_honeycomb(std::size_t s1, std::size_t s2) {
    if (s1 == 0 || s2 == 0) throw ConstructionError("honeycomb size must be positive");
    // Brick wall: 2*L1 columns, L2 rows, vertical edges where (x+y) is even.
    std::size_t L1 = 3 * s1, L2 = 2 * s2;
    std::size_t W = 2 * L1;
    auto vid = [&](std::size_t x, std::size_t y) { return (y % L2) * W + (x % W); };

    std::vector<std::array<std::size_t, 2>> edges;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> hid, vidx;
    for (std::size_t y = 0; y < L2; ++y)
        for (std::size_t x = 0; x < W; ++x) {
            hid[{x, y}] = edges.size();
            edges.push_back({vid(x, y), vid(x + 1, y)});
        }
    for (std::size_t y = 0; y < L2; ++y)
        for (std::size_t x = 0; x < W; ++x)
            if ((x + y) % 2 == 0) {
                vidx[{x, y}] = edges.size();
                edges.push_back({vid(x, y), vid(x, y + 1)});
            }

    std::vector<std::vector<std::size_t>> faces;
    std::vector<Color> fcolor;
    for (std::size_t y = 0; y < L2; ++y)
        for (std::size_t x0 = 0; x0 < W; ++x0) {
            if ((x0 + y) % 2 != 0) continue;
            std::size_t yy = (y + 1) % L2;
            faces.push_back({hid.at({x0, y}), hid.at({(x0 + 1) % W, y}),
                             vidx.at({(x0 + 2) % W, y}), hid.at({(x0 + 1) % W, yy}),
                             hid.at({x0, yy}), vidx.at({x0, y})});
            // (x0 - 3y)/2 mod 3 is a proper face 3-coloring for this wrap.
            long c = (long(x0) - 3 * long(y)) / 2;
            fcolor.push_back(color_of_index(std::size_t(((c % 3) + 3) % 3)));
        }
    SurfaceComplex out(W * L2, std::move(edges), std::move(faces));
    out.face_coloring = std::move(fcolor);
    // Induced edge coloring.
    std::vector<Color> ecolor(out.num_edges());
    for (std::size_t e = 0; e < out.num_edges(); ++e) {
        auto [f1, f2] = out.edge_faces(e);
        ecolor[e] = other_color((*out.face_coloring)[f1], (*out.face_coloring)[f2]);
    }
    out.edge_coloring = std::move(ecolor);
    out.validate_two_colex();
    return out;
}

SurfaceComplex build_square(std::size_t L) {
    if (L < 2) throw ConstructionError("square torus needs L >= 2");
    auto vid = [&](std::size_t i, std::size_t j) { return (j % L) * L + (i % L); };
    std::vector<std::array<std::size_t, 2>> edges;
    auto eid = [&](std::size_t i, std::size_t j, int dir) {  // 0=E, 1=N
        return (vid(i, j)) * 2 + std::size_t(dir);
    };
    edges.resize(2 * L * L);
    for (std::size_t j = 0; j < L; ++j)
        for (std::size_t i = 0; i < L; ++i) {
            edges[eid(i, j, 0)] = {vid(i, j), vid(i + 1, j)};
            edges[eid(i, j, 1)] = {vid(i, j), vid(i, j + 1)};
        }
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t j = 0; j < L; ++j)
        for (std::size_t i = 0; i < L; ++i)
            faces.push_back({eid(i, j, 0), eid(i + 1, j, 1), eid(i, j + 1, 0), eid(i, j, 1)});
    SurfaceComplex out(L * L, std::move(edges), std::move(faces));
    out.validate();
    return out;
}

SurfaceComplex build_square_octagon(std::size_t s) {
    if (s == 0) throw ConstructionError("square-octagon size must be positive");
    std::size_t L = 2 * s;
    auto site = [&](std::size_t i, std::size_t j) { return (j % L) * L + (i % L); };
    // Corners 0..3 = E,N,W,S of the small square at each site.
    auto vid = [&](std::size_t i, std::size_t j, std::size_t k) { return site(i, j) * 4 + k; };

    std::vector<std::array<std::size_t, 2>> edges;
    auto sq = [&](std::size_t i, std::size_t j, std::size_t k) {  // square edge c_k - c_{k+1}
        return site(i, j) * 6 + k;
    };
    auto bridge = [&](std::size_t i, std::size_t j, int dir) {  // 0=right, 1=up
        return site(i, j) * 6 + 4 + std::size_t(dir);
    };
    edges.resize(6 * L * L);
    for (std::size_t j = 0; j < L; ++j)
        for (std::size_t i = 0; i < L; ++i) {
            for (std::size_t k = 0; k < 4; ++k)
                edges[sq(i, j, k)] = {vid(i, j, k), vid(i, j, (k + 1) % 4)};
            edges[bridge(i, j, 0)] = {vid(i, j, 0), vid(i + 1, j, 2)};
            edges[bridge(i, j, 1)] = {vid(i, j, 1), vid(i, j + 1, 3)};
        }
    std::vector<std::vector<std::size_t>> faces;
    std::vector<Color> fcolor;
    for (std::size_t j = 0; j < L; ++j)
        for (std::size_t i = 0; i < L; ++i) {
            faces.push_back({sq(i, j, 0), sq(i, j, 1), sq(i, j, 2), sq(i, j, 3)});
            fcolor.push_back(Color::red);
        }
    for (std::size_t j = 0; j < L; ++j)
        for (std::size_t i = 0; i < L; ++i) {
            faces.push_back({sq(i, j, 0), bridge(i, j, 1), sq(i, (j + 1) % L, 3),
                             bridge(i, (j + 1) % L, 0), sq((i + 1) % L, (j + 1) % L, 2),
                             bridge((i + 1) % L, j, 1), sq((i + 1) % L, j, 1), bridge(i, j, 0)});
            fcolor.push_back((i + j) % 2 == 0 ? Color::green : Color::blue);
        }
    SurfaceComplex out(4 * L * L, std::move(edges), std::move(faces));
    out.face_coloring = std::move(fcolor);
    std::vector<Color> ecolor(out.num_edges());
    for (std::size_t e = 0; e < out.num_edges(); ++e) {
        auto [f1, f2] = out.edge_faces(e);
        ecolor[e] = other_color((*out.face_coloring)[f1], (*out.face_coloring)[f2]);
    }
    out.edge_coloring = std::move(ecolor);
    out.validate_two_colex();
    return out;
}

SurfaceComplex build_triangular(std::size_t L) {
    if (L < 2) throw ConstructionError("triangular torus needs L >= 2");
    auto vid = [&](std::size_t i, std::size_t j) { return (j % L) * L + (i % L); };
    auto eid = [&](std::size_t i, std::size_t j, int dir) {  // 0=E 1=N 2=diag NE
        return vid(i, j) * 3 + std::size_t(dir);
    };
    std::vector<std::array<std::size_t, 2>> edges(3 * L * L);
    for (std::size_t j = 0; j < L; ++j)
        for (std::size_t i = 0; i < L; ++i) {
            edges[eid(i, j, 0)] = {vid(i, j), vid(i + 1, j)};
            edges[eid(i, j, 1)] = {vid(i, j), vid(i, j + 1)};
            edges[eid(i, j, 2)] = {vid(i, j), vid(i + 1, j + 1)};
        }
    std::vector<std::vector<std::size_t>> faces;
    std::vector<Color> fcolor;
    for (std::size_t j = 0; j < L; ++j)
        for (std::size_t i = 0; i < L; ++i) {
            faces.push_back({eid(i, j, 0), eid(i + 1, j, 1), eid(i, j, 2)});  // up
            fcolor.push_back(Color::red);
            faces.push_back({eid(i, j, 2), eid(i, j + 1, 0), eid(i, j, 1)});  // down
            fcolor.push_back(Color::green);
        }
    SurfaceComplex out(L * L, std::move(edges), std::move(faces));
    out.face_coloring = std::move(fcolor);
    out.validate();
    return out;
}

/* Square lattice modulo the index-(d^2+1)/2 sublattice spanned by
 * u = ((d+1)/2, (d-1)/2) and v = (-(d-1)/2, (d+1)/2); the shortest vector has
 * L1 norm d, which is what makes the quotient surface code distance d. */
SurfaceComplex build_rotated_dsq(std::size_t d) {
    if (d < 3 || d % 2 == 0) throw ConstructionError("rotated surface family needs odd d >= 3");
    long a = long(d + 1) / 2, b = long(d - 1) / 2;
    long N = (long(d) * long(d) + 1) / 2;
    auto in_lattice = [&](long dx, long dy) {
        long p = dx * a + dy * b, q = -dx * b + dy * a;
        return p % N == 0 && q % N == 0;
    };
    std::vector<std::pair<long, long>> reps;
    auto rep_of = [&](long x, long y) -> long {
        for (std::size_t k = 0; k < reps.size(); ++k)
            if (in_lattice(x - reps[k].first, y - reps[k].second)) return long(k);
        return -1;
    };
    // BFS from the origin to enumerate the quotient's vertices.
    reps.push_back({0, 0});
    for (std::size_t head = 0; head < reps.size(); ++head) {
        auto [x, y] = reps[head];
        const long dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k)
            if (rep_of(x + dx[k], y + dy[k]) < 0) reps.push_back({x + dx[k], y + dy[k]});
    }
    if (long(reps.size()) != N) throw Error("rotated lattice enumeration failed");
    auto vid = [&](long x, long y) { return std::size_t(rep_of(x, y)); };
    std::vector<std::array<std::size_t, 2>> edges(2 * std::size_t(N));
    auto eid = [&](long x, long y, int dir) { return vid(x, y) * 2 + std::size_t(dir); };
    for (auto [x, y] : reps) {
        edges[eid(x, y, 0)] = {vid(x, y), vid(x + 1, y)};
        edges[eid(x, y, 1)] = {vid(x, y), vid(x, y + 1)};
    }
    std::vector<std::vector<std::size_t>> faces;
    for (auto [x, y] : reps)
        faces.push_back({eid(x, y, 0), eid(x + 1, y, 1), eid(x, y + 1, 0), eid(x, y, 1)});
    SurfaceComplex out(std::size_t(N), std::move(edges), std::move(faces));
    out.validate();
    return out;
}

}  // namespace

SurfaceComplex build_family(Family f, std::size_t size, std::size_t size2) {
    switch (f) {
        case Family::honeycomb_torus: return build_honeycomb(size, size2 ? size2 : size);
        case Family::square_torus: return build_square(size);
        case Family::square_octagon_torus: return build_square_octagon(size);
        case Family::triangular_torus: return build_triangular(size);
        case Family::rotated_surface_dsq: return build_rotated_dsq(size);
    }
    throw ConstructionError("bad family");
}

namespace {

/* One-based vertex cycles; edges resolved against a fixed one-based list. */
struct FixtureSpec {
    std::vector<std::array<std::size_t, 2>> edges;
    std::vector<Color> edge_colors;
    std::vector<std::vector<std::size_t>> face_vertices;
    std::vector<Color> face_colors;
};

SurfaceComplex from_fixture(const FixtureSpec& fs, std::size_t nv) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> lookup;
    std::vector<std::array<std::size_t, 2>> edges;
    for (std::size_t e = 0; e < fs.edges.size(); ++e) {
        auto [u, v] = fs.edges[e];
        lookup[{std::min(u, v), std::max(u, v)}] = e;
        edges.push_back({u - 1, v - 1});
    }
    std::vector<std::vector<std::size_t>> faces;
    for (const auto& fv : fs.face_vertices) {
        std::vector<std::size_t> cyc;
        for (std::size_t i = 0; i < fv.size(); ++i) {
            std::size_t u = fv[i], v = fv[(i + 1) % fv.size()];
            cyc.push_back(lookup.at({std::min(u, v), std::max(u, v)}));
        }
        // Rotate so cyc[i] is the edge *entering* walk vertex i+1; the walk
        // convention wants face[i] to leave walk vertex i, which this matches.
        faces.push_back(std::move(cyc));
    }
    SurfaceComplex out(nv, std::move(edges), std::move(faces));
    out.edge_coloring = fs.edge_colors;
    out.face_coloring = fs.face_colors;
    out.validate_two_colex();
    return out;
}

}  // namespace

SurfaceComplex honeycomb12() {
    FixtureSpec fs;
    fs.edges = {
        {1, 5}, {8, 10}, {4, 7}, {3, 6}, {9, 12}, {2, 11},   // red (XX)
        {5, 8}, {7, 10}, {1, 4}, {2, 6}, {9, 11}, {3, 12},   // green (YY)
        {6, 9}, {8, 11}, {2, 5}, {3, 4}, {7, 12}, {1, 10},   // blue (ZZ)
    };
    fs.edge_colors.assign(6, Color::red);
    fs.edge_colors.insert(fs.edge_colors.end(), 6, Color::green);
    fs.edge_colors.insert(fs.edge_colors.end(), 6, Color::blue);
    fs.face_vertices = {
        {1, 5, 8, 10, 7, 4},   // S1, blue face
        {2, 6, 3, 12, 9, 11},  // S2, blue face
        {2, 6, 9, 11, 8, 5},   // S3, red face
        {1, 4, 3, 12, 7, 10},  // S4, red face
        {3, 4, 7, 12, 9, 6},   // S5, green face
        {1, 5, 2, 11, 8, 10},  // dependent green face
    };
    fs.face_colors = {Color::blue, Color::blue, Color::red,
                      Color::red,  Color::green, Color::green};
    return from_fixture(fs, 12);
}

std::vector<CycleSet> honeycomb12_homology_cycles() {
    // Edge ids in the honeycomb12 edge order above.
    auto c = honeycomb12();
    auto find = [&](std::size_t u, std::size_t v) -> std::size_t {
        for (std::size_t e = 0; e < c.num_edges(); ++e) {
            auto [a, b] = c.edge(e);
            if ((a == u - 1 && b == v - 1) || (a == v - 1 && b == u - 1)) return e;
        }
        throw Error("fixture edge not found");
    };
    CycleSet s6{{find(2, 5), find(5, 8), find(8, 11), find(11, 2)}, true};
    CycleSet s7{{find(7, 10), find(10, 8), find(8, 11), find(11, 9), find(9, 12), find(12, 7)},
                true};
    std::sort(s6.edges.begin(), s6.edges.end());
    std::sort(s7.edges.begin(), s7.edges.end());
    return {s6, s7};
}

}  // namespace tsc
