#include "tsc/matching.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <queue>
#include <tuple>

namespace tsc {

/* Blossom algorithm for maximum-weight matching on general graphs, after the
 * classic primal-dual formulation (Galil 1986) in the arrangement popularized
 * by Van Rantwijk's reference implementation: vertices 0..n-1, pseudo-nodes
 * n..2n-1 for blossoms, edge endpoints addressed as p = 2k|bit, and four
 * dual-adjustment types per substage. Weights are doubled on entry so every
 * dual variable and delta stays integral. check_optimum() asserts the
 * complementary-slackness certificate after every solve. */
namespace blossom {

struct Solver {
    int nvertex, nedge;
    std::vector<MaxWeightMatching::Edge> edges;  // weights already doubled
    bool maxcardinality;
    std::int64_t maxweight = 0;

    std::vector<int> endpoint;             // 2*nedge
    std::vector<std::vector<int>> neighbend;
    std::vector<int> mate;                 // nvertex, remote endpoint or -1
    std::vector<int> label, labelend;      // 2*nvertex
    std::vector<int> inblossom;            // nvertex
    std::vector<int> blossomparent;        // 2*nvertex
    std::vector<std::vector<int>> blossomchilds;
    std::vector<int> blossombase;
    std::vector<std::vector<int>> blossomendps;
    std::vector<int> bestedge;
    std::vector<std::vector<int>> blossombestedges;
    std::vector<bool> hasbestedges;
    std::vector<int> unusedblossoms;
    std::vector<std::int64_t> dualvar;
    std::vector<bool> allowedge;
    std::vector<int> queue;

    explicit Solver(int n, const std::vector<MaxWeightMatching::Edge>& in, bool maxcard)
        : nvertex(n), nedge(int(in.size())), edges(in), maxcardinality(maxcard) {
        for (auto& e : edges) {
            e.w *= 2;
            maxweight = std::max(maxweight, e.w);
        }
        endpoint.resize(2 * nedge);
        for (int p = 0; p < 2 * nedge; ++p)
            endpoint[p] = (p % 2) ? edges[p / 2].v : edges[p / 2].u;
        neighbend.assign(nvertex, {});
        for (int k = 0; k < nedge; ++k) {
            neighbend[edges[k].u].push_back(2 * k + 1);
            neighbend[edges[k].v].push_back(2 * k);
        }
        mate.assign(nvertex, -1);
        label.assign(2 * nvertex, 0);
        labelend.assign(2 * nvertex, -1);
        inblossom.resize(nvertex);
        for (int v = 0; v < nvertex; ++v) inblossom[v] = v;
        blossomparent.assign(2 * nvertex, -1);
        blossomchilds.assign(2 * nvertex, {});
        blossombase.resize(2 * nvertex);
        for (int v = 0; v < nvertex; ++v) blossombase[v] = v;
        for (int b = nvertex; b < 2 * nvertex; ++b) blossombase[b] = -1;
        blossomendps.assign(2 * nvertex, {});
        bestedge.assign(2 * nvertex, -1);
        blossombestedges.assign(2 * nvertex, {});
        hasbestedges.assign(2 * nvertex, false);
        for (int b = nvertex; b < 2 * nvertex; ++b) unusedblossoms.push_back(b);
        dualvar.assign(2 * nvertex, 0);
        for (int v = 0; v < nvertex; ++v) dualvar[v] = maxweight;
        allowedge.assign(nedge, false);
    }

    std::int64_t slack(int k) const {
        return dualvar[edges[k].u] + dualvar[edges[k].v] - 2 * edges[k].w;
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nvertex) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds[b]) blossom_leaves(t, out);
    }

    static int wrap(const std::vector<int>& v, long j) {
        long m = long(v.size());
        return v[std::size_t(((j % m) + m) % m)];
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom[w];
        check(label[w] == 0 && label[b] == 0, "assign_label on labeled node");
        label[w] = label[b] = t;
        labelend[w] = labelend[b] = p;
        bestedge[w] = bestedge[b] = -1;
        if (t == 1) {
            std::vector<int> leaves;
            blossom_leaves(b, leaves);
            for (int x : leaves) queue.push_back(x);
        } else {
            int base = blossombase[b];
            check(mate[base] >= 0, "T-blossom base is unmatched");
            assign_label(endpoint[mate[base]], 1, mate[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom[v];
            if (label[b] & 4) {
                base = blossombase[b];
                break;
            }
            path.push_back(b);
            label[b] = 5;
            if (labelend[b] == -1) {
                v = -1;
            } else {
                v = endpoint[labelend[b]];
                b = inblossom[v];
                v = endpoint[labelend[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges[k].u, w = edges[k].v;
        int bb = inblossom[base], bv = inblossom[v], bw = inblossom[w];
        int b = unusedblossoms.back();
        unusedblossoms.pop_back();
        blossombase[b] = base;
        blossomparent[b] = -1;
        blossomparent[bb] = b;
        auto& path = blossomchilds[b];
        auto& endps = blossomendps[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend[bv]);
            v = endpoint[labelend[bv]];
            bv = inblossom[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend[bw] ^ 1);
            w = endpoint[labelend[bw]];
            bw = inblossom[w];
        }
        check(label[bb] == 1, "blossom base not an S-node");
        label[b] = 1;
        labelend[b] = labelend[bb];
        dualvar[b] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int x : leaves) {
            if (label[inblossom[x]] == 2) queue.push_back(x);
            inblossom[x] = b;
        }
        // Merge best-edge lists of the children.
        std::vector<int> bestedgeto(2 * nvertex, -1);
        for (int bvv : path) {
            std::vector<std::vector<int>> nblists;
            if (!hasbestedges[bvv]) {
                std::vector<int> lv;
                blossom_leaves(bvv, lv);
                for (int x : lv) {
                    std::vector<int> lst;
                    for (int p : neighbend[x]) lst.push_back(p / 2);
                    nblists.push_back(std::move(lst));
                }
            } else {
                nblists.push_back(blossombestedges[bvv]);
            }
            for (auto& lst : nblists)
                for (int kk : lst) {
                    int i = edges[kk].u, j = edges[kk].v;
                    if (inblossom[j] == b) std::swap(i, j);
                    int bj = inblossom[j];
                    if (bj != b && label[bj] == 1 &&
                        (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = kk;
                }
            blossombestedges[bvv].clear();
            hasbestedges[bvv] = false;
            bestedge[bvv] = -1;
        }
        blossombestedges[b].clear();
        for (int kk : bestedgeto)
            if (kk != -1) blossombestedges[b].push_back(kk);
        hasbestedges[b] = true;
        bestedge[b] = -1;
        for (int kk : blossombestedges[b])
            if (bestedge[b] == -1 || slack(kk) < slack(bestedge[b])) bestedge[b] = kk;
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds[b]) {
            blossomparent[s] = -1;
            if (s < nvertex) {
                inblossom[s] = s;
            } else if (endstage && dualvar[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> lv;
                blossom_leaves(s, lv);
                for (int x : lv) inblossom[x] = s;
            }
        }
        if (!endstage && label[b] == 2) {
            int entrychild = inblossom[endpoint[labelend[b] ^ 1]];
            long j = 0;
            for (std::size_t i = 0; i < blossomchilds[b].size(); ++i)
                if (blossomchilds[b][i] == entrychild) j = long(i);
            long jstep;
            int endptrick;
            if (j & 1) {
                j -= long(blossomchilds[b].size());
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend[b];
            while (j != 0) {
                label[endpoint[p ^ 1]] = 0;
                label[endpoint[wrap(blossomendps[b], j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint[p ^ 1], 2, p);
                allowedge[std::size_t(wrap(blossomendps[b], j - endptrick)) / 2] = true;
                j += jstep;
                p = wrap(blossomendps[b], j - endptrick) ^ endptrick;
                allowedge[std::size_t(p) / 2] = true;
                j += jstep;
            }
            int bv = wrap(blossomchilds[b], j);
            label[endpoint[p ^ 1]] = label[bv] = 2;
            labelend[endpoint[p ^ 1]] = labelend[bv] = p;
            bestedge[bv] = -1;
            j += jstep;
            while (wrap(blossomchilds[b], j) != entrychild) {
                bv = wrap(blossomchilds[b], j);
                if (label[bv] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> lv;
                blossom_leaves(bv, lv);
                int vv = -1;
                for (int x : lv) {
                    if (label[x] != 0) {
                        vv = x;
                        break;
                    }
                }
                if (vv >= 0) {
                    check(label[vv] == 2, "expected T label inside expanded blossom");
                    label[vv] = 0;
                    label[endpoint[mate[blossombase[bv]]]] = 0;
                    assign_label(vv, 2, labelend[vv]);
                }
                j += jstep;
            }
        }
        label[b] = -1;
        labelend[b] = -1;
        blossomchilds[b].clear();
        blossomendps[b].clear();
        blossombase[b] = -1;
        blossombestedges[b].clear();
        hasbestedges[b] = false;
        unusedblossoms.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent[t] != b) t = blossomparent[t];
        if (t >= nvertex) augment_blossom(t, v);
        long i = 0;
        for (std::size_t x = 0; x < blossomchilds[b].size(); ++x)
            if (blossomchilds[b][x] == t) i = long(x);
        long j = i, jstep;
        int endptrick;
        if (i & 1) {
            j -= long(blossomchilds[b].size());
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = wrap(blossomchilds[b], j);
            int p = wrap(blossomendps[b], j - endptrick) ^ endptrick;
            if (t >= nvertex) augment_blossom(t, endpoint[p]);
            j += jstep;
            t = wrap(blossomchilds[b], j);
            if (t >= nvertex) augment_blossom(t, endpoint[p ^ 1]);
            mate[endpoint[p]] = p ^ 1;
            mate[endpoint[p ^ 1]] = p;
        }
        std::rotate(blossomchilds[b].begin(), blossomchilds[b].begin() + i,
                    blossomchilds[b].end());
        std::rotate(blossomendps[b].begin(), blossomendps[b].begin() + i,
                    blossomendps[b].end());
        blossombase[b] = blossombase[blossomchilds[b][0]];
        check(blossombase[b] == v, "blossom base mismatch after augment");
    }

    void augment_matching(int k) {
        const std::array<std::array<int, 2>, 2> starts = {
            {{edges[k].u, 2 * k + 1}, {edges[k].v, 2 * k}}};
        for (auto [s, p] : starts) {
            while (true) {
                int bs = inblossom[s];
                check(label[bs] == 1, "augment along non-S node");
                if (bs >= nvertex) augment_blossom(bs, s);
                mate[s] = p;
                if (labelend[bs] == -1) break;
                int t = endpoint[labelend[bs]];
                int bt = inblossom[t];
                check(label[bt] == 2, "augment along non-T node");
                s = endpoint[labelend[bt]];
                int j = endpoint[labelend[bt] ^ 1];
                if (bt >= nvertex) augment_blossom(bt, j);
                mate[j] = labelend[bt];
                p = labelend[bt] ^ 1;
            }
        }
    }

    static void check(bool cond, const char* what) {
        if (!cond) throw Error(std::string("blossom internal invariant violated: ") + what);
    }

    void check_optimum() const {
        std::int64_t vdualoffset = 0;
        if (maxcardinality) {
            std::int64_t mn = std::numeric_limits<std::int64_t>::max();
            for (int v = 0; v < nvertex; ++v) mn = std::min(mn, dualvar[v]);
            vdualoffset = std::max<std::int64_t>(0, -mn);
        }
        for (int v = 0; v < nvertex; ++v)
            check(dualvar[v] + vdualoffset >= 0, "negative vertex dual");
        for (int b = nvertex; b < 2 * nvertex; ++b)
            check(blossombase[b] < 0 || dualvar[b] >= 0, "negative blossom dual");
        for (int k = 0; k < nedge; ++k) {
            std::int64_t s = slack(k);
            int i = edges[k].u, j = edges[k].v;
            std::vector<int> ib{i}, jb{j};
            while (blossomparent[ib.back()] != -1) ib.push_back(blossomparent[ib.back()]);
            while (blossomparent[jb.back()] != -1) jb.push_back(blossomparent[jb.back()]);
            std::reverse(ib.begin(), ib.end());
            std::reverse(jb.begin(), jb.end());
            for (std::size_t t = 0; t < std::min(ib.size(), jb.size()); ++t) {
                if (ib[t] != jb[t]) break;
                s += 2 * dualvar[ib[t]];
            }
            check(s >= 0, "negative edge slack at optimum");
            if ((mate[i] >= 0 && mate[i] / 2 == k) || (mate[j] >= 0 && mate[j] / 2 == k)) {
                check(mate[i] / 2 == k && mate[j] / 2 == k, "half-matched edge");
                check(s == 0, "matched edge with positive slack");
            }
        }
        for (int v = 0; v < nvertex; ++v)
            check(mate[v] >= 0 || dualvar[v] + vdualoffset == 0,
                  "exposed vertex with positive dual");
        for (int b = nvertex; b < 2 * nvertex; ++b) {
            if (blossombase[b] >= 0 && dualvar[b] > 0) {
                check(blossomendps[b].size() % 2 == 1, "even blossom");
                for (std::size_t idx = 1; idx < blossomendps[b].size(); idx += 2) {
                    int p = blossomendps[b][idx];
                    check(mate[endpoint[p]] == (p ^ 1), "blossom pair not matched");
                    check(mate[endpoint[p ^ 1]] == p, "blossom pair not matched");
                }
            }
        }
    }

    std::vector<int> run() {
        if (nedge == 0) return std::vector<int>(std::size_t(std::max(nvertex, 0)), -1);
        for (int stage = 0; stage < nvertex; ++stage) {
            std::fill(label.begin(), label.end(), 0);
            std::fill(bestedge.begin(), bestedge.end(), -1);
            for (int b = nvertex; b < 2 * nvertex; ++b) {
                blossombestedges[b].clear();
                hasbestedges[b] = false;
            }
            std::fill(allowedge.begin(), allowedge.end(), false);
            queue.clear();
            for (int v = 0; v < nvertex; ++v)
                if (mate[v] == -1 && label[inblossom[v]] == 0) assign_label(v, 1, -1);
            bool augmented = false;
            while (true) {
                while (!queue.empty() && !augmented) {
                    int v = queue.back();
                    queue.pop_back();
                    check(label[inblossom[v]] == 1, "queue holds non-S vertex");
                    for (int p : neighbend[v]) {
                        int k = p / 2;
                        int w = endpoint[p];
                        if (inblossom[v] == inblossom[w]) continue;
                        if (!allowedge[k]) {
                            std::int64_t kslack = slack(k);
                            if (kslack <= 0) {
                                allowedge[k] = true;
                            } else if (label[inblossom[w]] == 1) {
                                int b = inblossom[v];
                                if (bestedge[b] == -1 || kslack < slack(bestedge[b]))
                                    bestedge[b] = k;
                            } else if (label[w] == 0) {
                                if (bestedge[w] == -1 || kslack < slack(bestedge[w]))
                                    bestedge[w] = k;
                            }
                        }
                        if (allowedge[k]) {
                            if (label[inblossom[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label[inblossom[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label[w] == 0) {
                                label[w] = 2;
                                labelend[w] = p ^ 1;
                            }
                        }
                    }
                }
                if (augmented) break;

                int deltatype = -1;
                std::int64_t delta = 0;
                int deltaedge = -1, deltablossom = -1;
                if (!maxcardinality) {
                    deltatype = 1;
                    delta = std::numeric_limits<std::int64_t>::max();
                    for (int v = 0; v < nvertex; ++v) delta = std::min(delta, dualvar[v]);
                }
                for (int v = 0; v < nvertex; ++v) {
                    if (label[inblossom[v]] == 0 && bestedge[v] != -1) {
                        std::int64_t d = slack(bestedge[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nvertex; ++b) {
                    if (blossomparent[b] == -1 && label[b] == 1 && bestedge[b] != -1) {
                        std::int64_t d = slack(bestedge[b]) / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge[b];
                        }
                    }
                }
                for (int b = nvertex; b < 2 * nvertex; ++b) {
                    if (blossombase[b] >= 0 && blossomparent[b] == -1 && label[b] == 2 &&
                        (deltatype == -1 || dualvar[b] < delta)) {
                        delta = dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    deltatype = 1;
                    std::int64_t mn = std::numeric_limits<std::int64_t>::max();
                    for (int v = 0; v < nvertex; ++v) mn = std::min(mn, dualvar[v]);
                    delta = std::max<std::int64_t>(0, mn);
                }

                for (int v = 0; v < nvertex; ++v) {
                    int l = label[inblossom[v]];
                    if (l == 1)
                        dualvar[v] -= delta;
                    else if (l == 2)
                        dualvar[v] += delta;
                }
                for (int b = nvertex; b < 2 * nvertex; ++b) {
                    if (blossombase[b] >= 0 && blossomparent[b] == -1) {
                        if (label[b] == 1)
                            dualvar[b] += delta;
                        else if (label[b] == 2)
                            dualvar[b] -= delta;
                    }
                }

                if (deltatype == 1) break;
                if (deltatype == 2) {
                    allowedge[deltaedge] = true;
                    int i = edges[deltaedge].u, j = edges[deltaedge].v;
                    if (label[inblossom[i]] == 0) std::swap(i, j);
                    check(label[inblossom[i]] == 1, "delta2 edge without S side");
                    queue.push_back(i);
                } else if (deltatype == 3) {
                    allowedge[deltaedge] = true;
                    int i = edges[deltaedge].u;
                    check(label[inblossom[i]] == 1, "delta3 edge without S side");
                    queue.push_back(i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;
            for (int b = nvertex; b < 2 * nvertex; ++b)
                if (blossomparent[b] == -1 && blossombase[b] >= 0 && label[b] == 1 &&
                    dualvar[b] == 0)
                    expand_blossom(b, true);
        }
        check_optimum();
        std::vector<int> out(std::size_t(nvertex), -1);
        for (int v = 0; v < nvertex; ++v)
            if (mate[v] >= 0) out[std::size_t(v)] = endpoint[mate[v]];
        for (int v = 0; v < nvertex; ++v)
            check(out[std::size_t(v)] == -1 || out[std::size_t(out[std::size_t(v)])] == v,
                  "mate array is not symmetric");
        return out;
    }
};

}  // namespace blossom

std::vector<int> MaxWeightMatching::solve(int num_vertices, const std::vector<Edge>& edges,
                                          bool max_cardinality) {
    blossom::Solver s(num_vertices, edges, max_cardinality);
    return s.run();
}

void DecodingGraph::add_edge(std::size_t u, std::size_t v, std::size_t carrier) {
    adj_[u].push_back({v, carrier});
    adj_[v].push_back({u, carrier});
    sorted_ = false;
    built_.store(false);
}

void DecodingGraph::sort_adj() {
    if (sorted_) return;
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    sorted_ = true;
}

void DecodingGraph::bfs_from(std::size_t src) const {
    auto& dist = dist_[src];
    auto& par = parent_[src];
    dist.assign(adj_.size(), -1);
    par.assign(adj_.size(), -1);
    std::queue<std::size_t> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (std::size_t ai = 0; ai < adj_[v].size(); ++ai) {
            const auto& arc = adj_[v][ai];
            if (dist[arc.to] < 0) {
                dist[arc.to] = dist[v] + 1;
                par[arc.to] = long(v);  // parent node; carrier recovered on walk-back
                q.push(arc.to);
            }
        }
    }
}

std::int64_t DecodingGraph::distance(std::size_t u, std::size_t v) const {
    ensure_all_paths();
    auto d = dist_[u][v];
    if (d < 0) throw Error("decoding graph is disconnected");
    return d;
}

void DecodingGraph::ensure_all_paths() const {
    if (built_.load(std::memory_order_acquire)) return;
    std::lock_guard<std::mutex> lock(*mu_);
    if (built_.load(std::memory_order_relaxed)) return;
    const_cast<DecodingGraph*>(this)->sort_adj();
    dist_.assign(adj_.size(), {});
    parent_.assign(adj_.size(), {});
    for (std::size_t s = 0; s < adj_.size(); ++s) bfs_from(s);
    built_.store(true, std::memory_order_release);
}

std::optional<std::size_t> DecodingGraph::direct_carrier(std::size_t u, std::size_t v) const {
    std::optional<std::size_t> best;
    for (const auto& arc : adj_[u])
        if (arc.to == v && (!best || arc.carrier < *best)) best = arc.carrier;
    return best;
}

std::vector<std::size_t> DecodingGraph::path_carriers(std::size_t u, std::size_t v) const {
    ensure_all_paths();
    // Walk v back to u along the BFS tree rooted at u, picking at each hop the
    // smallest carrier among the arcs that realize the distance step.
    if (dist_[u][v] < 0) throw Error("decoding graph is disconnected");
    std::vector<std::size_t> out;
    std::size_t cur = v;
    while (cur != u) {
        std::size_t prev = std::size_t(parent_[u][cur]);
        std::optional<std::size_t> carrier;
        for (const auto& arc : adj_[cur])
            if (arc.to == prev && (!carrier || arc.carrier < *carrier)) carrier = arc.carrier;
        out.push_back(*carrier);
        cur = prev;
    }
    return out;
}

std::vector<std::size_t> DecodingGraph::path_nodes(std::size_t u, std::size_t v) const {
    ensure_all_paths();
    if (dist_[u][v] < 0) throw Error("decoding graph is disconnected");
    std::vector<std::size_t> out{v};
    std::size_t cur = v;
    while (cur != u) {
        cur = std::size_t(parent_[u][cur]);
        out.push_back(cur);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> DecodingGraph::parallel_carriers(std::size_t u, std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& arc : adj_[u])
        if (arc.to == v) out.push_back(arc.carrier);
    std::sort(out.begin(), out.end());
    return out;
}

DefectGraph build_defect_graph(const DecodingGraph& g, const std::vector<std::size_t>& defects) {
    if (defects.size() % 2 != 0)
        throw ParityError("odd number of defects (" + std::to_string(defects.size()) + ")");
    DefectGraph out;
    out.nodes = defects;
    std::sort(out.nodes.begin(), out.nodes.end());
    out.dist.assign(out.nodes.size(), std::vector<std::int64_t>(out.nodes.size(), 0));
    for (std::size_t a = 0; a < out.nodes.size(); ++a)
        for (std::size_t b = a + 1; b < out.nodes.size(); ++b)
            out.dist[a][b] = out.dist[b][a] = g.distance(out.nodes[a], out.nodes[b]);
    return out;
}

Matching min_weight_perfect_matching(const DefectGraph& g) {
    std::size_t n = g.nodes.size();
    if (n % 2 != 0) throw ParityError("perfect matching needs an even node count");
    Matching m;
    if (n == 0) return m;
    std::int64_t maxw = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) maxw = std::max(maxw, g.dist[a][b]);
    std::vector<MaxWeightMatching::Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            edges.push_back({int(a), int(b), maxw + 1 - g.dist[a][b]});
    auto mate = MaxWeightMatching::solve(int(n), edges, true);
    for (std::size_t a = 0; a < n; ++a) {
        if (mate[a] < 0) throw Error("perfect matching left an exposed node");
        auto b = std::size_t(mate[a]);
        if (a < b) {
            m.pairs.push_back({g.nodes[a], g.nodes[b]});
            m.total_weight += g.dist[a][b];
        }
    }
    // Deterministic report order.
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

Matching greedy_perfect_matching(const DefectGraph& g) {
    std::size_t n = g.nodes.size();
    if (n % 2 != 0) throw ParityError("perfect matching needs an even node count");
    std::vector<bool> used(n, false);
    std::vector<std::tuple<std::int64_t, std::size_t, std::size_t>> cand;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) cand.push_back({g.dist[a][b], a, b});
    std::sort(cand.begin(), cand.end());
    Matching m;
    for (auto [d, a, b] : cand) {
        if (used[a] || used[b]) continue;
        used[a] = used[b] = true;
        m.pairs.push_back({g.nodes[a], g.nodes[b]});
        m.total_weight += d;
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

std::vector<std::size_t> matching_to_error(const DecodingGraph& g, const Matching& m) {
    std::vector<std::size_t> acc;
    for (const auto& [a, b] : m.pairs) {
        auto path = g.path_carriers(a, b);
        acc.insert(acc.end(), path.begin(), path.end());
    }
    std::sort(acc.begin(), acc.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < acc.size();) {
        std::size_t j = i;
        while (j < acc.size() && acc[j] == acc[i]) ++j;
        if ((j - i) % 2) out.push_back(acc[i]);
        i = j;
    }
    return out;
}

}  // namespace tsc
