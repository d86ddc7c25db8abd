#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

#include "coloring.hpp"
#include "enumeration.hpp"
#include "verify.hpp"

namespace starcolor {

using Hyperedges = std::vector<std::vector<Vertex>>;

// Vertex sets of all maximal stars (or bicliques): a coloring is valid iff none is monochromatic.
inline Hyperedges constraint_sets(const Graph& g, Mode mode) {
    Hyperedges out;
    if (mode == Mode::star) {
        for_each_maximal_star(g, [&](const Star& s) {
            out.push_back(s.vertices());
            return true;
        });
    } else {
        for_each_maximal_biclique(g, [&](const Biclique& b) {
            out.push_back(b.vertices());
            return true;
        });
    }
    return out;
}

struct SearchLimits {
    double timeout_s = 0;  // 0 = none
};

namespace detail {
class Deadline {
public:
    explicit Deadline(double seconds)
        : active_(seconds > 0),
          end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                      std::chrono::duration<double>(seconds > 0 ? seconds : 0))) {}
    void check() {
        if (active_ && (++ticks_ & 1023) == 0 && std::chrono::steady_clock::now() > end_) throw Timeout();
    }

private:
    bool active_;
    std::chrono::steady_clock::time_point end_;
    std::uint64_t ticks_ = 0;
};
}  // namespace detail

// Backtracking over vertex colors with forward checking on hyperedges: once all but one
// vertex of an edge carry color c, c leaves the last vertex's domain.
// Colors are indices 0..63; domains are bitmasks.
class HypergraphColoring {
public:
    HypergraphColoring(int n, Hyperedges edges, std::vector<std::uint64_t> domains, bool interchangeable)
        : n_(n), edges_(std::move(edges)), domain_(std::move(domains)), interchangeable_(interchangeable),
          color_(n, -1), incident_(n) {
        for (std::size_t e = 0; e < edges_.size(); ++e)
            for (Vertex v : edges_[e]) incident_[v].push_back(static_cast<int>(e));
    }

    // Restrict vertex v to color c before searching. Returns false on immediate conflict.
    bool fix(Vertex v, int c) {
        if (!(domain_[v] >> c & 1U)) return false;
        interchangeable_ = false;
        return assign(v, c) && propagate();
    }

    std::optional<std::vector<int>> solve(detail::Deadline& deadline, const std::atomic<bool>* stop = nullptr) {
        for (Vertex v = 0; v < n_; ++v)
            if (domain_[v] == 0) return std::nullopt;
        if (!search(deadline, stop, nullptr)) return std::nullopt;
        return color_;
    }

    // Calls f(colors) for every solution; f returns false to stop.
    template <class F>
    void for_each_solution(detail::Deadline& deadline, F&& f) {
        for (Vertex v = 0; v < n_; ++v)
            if (domain_[v] == 0) return;
        interchangeable_ = false;
        std::function<bool(const std::vector<int>&)> cb = f;
        search(deadline, nullptr, &cb);
    }

    // Split the search tree into independent subproblems (for parallel search).
    std::vector<HypergraphColoring> split(std::size_t target) const {
        std::vector<HypergraphColoring> frontier{*this};
        while (frontier.size() < target) {
            std::vector<HypergraphColoring> next;
            bool grew = false;
            for (auto& s : frontier) {
                Vertex v = s.choose();
                if (v < 0) {
                    next.push_back(s);
                    continue;
                }
                for (int c : s.values(v)) {
                    HypergraphColoring child = s;
                    if (child.assign(v, c) && child.propagate()) next.push_back(std::move(child));
                }
                grew = true;
            }
            frontier = std::move(next);
            if (!grew || frontier.empty()) break;
        }
        return frontier;
    }

private:
    int n_;
    Hyperedges edges_;
    std::vector<std::uint64_t> domain_;
    bool interchangeable_;
    std::vector<int> color_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::pair<Vertex, std::uint64_t>> trail_;  // (vertex, previous domain)
    std::vector<Vertex> assigned_;
    std::vector<Vertex> queue_;

    bool assign(Vertex v, int c) {
        trail_.emplace_back(v, domain_[v]);
        domain_[v] = std::uint64_t{1} << c;
        color_[v] = c;
        assigned_.push_back(v);
        queue_.push_back(v);
        return true;
    }

    bool propagate() {
        while (!queue_.empty()) {
            Vertex v = queue_.back();
            queue_.pop_back();
            const int c = color_[v];
            for (int e : incident_[v]) {
                int open = 0;
                Vertex last = -1;
                bool split = false;
                for (Vertex u : edges_[e]) {
                    if (color_[u] < 0) {
                        ++open;
                        last = u;
                    } else if (color_[u] != c) {
                        split = true;
                        break;
                    }
                }
                if (split || open > 1) continue;
                if (open == 0) {
                    queue_.clear();
                    return false;
                }
                std::uint64_t d = domain_[last];
                if (!(d >> c & 1U)) continue;
                trail_.emplace_back(last, d);
                d &= ~(std::uint64_t{1} << c);
                domain_[last] = d;
                if (d == 0) {
                    queue_.clear();
                    return false;
                }
                if (std::has_single_bit(d)) assign(last, std::countr_zero(d));
            }
        }
        return true;
    }

    void undo(std::size_t trail_mark, std::size_t assigned_mark) {
        while (trail_.size() > trail_mark) {
            auto [v, d] = trail_.back();
            trail_.pop_back();
            domain_[v] = d;
        }
        while (assigned_.size() > assigned_mark) {
            color_[assigned_.back()] = -1;
            assigned_.pop_back();
        }
    }

    // Smallest domain first, then most constraints, then lowest id.
    Vertex choose() const {
        Vertex best = -1;
        int best_size = 65;
        std::size_t best_deg = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            int size = std::popcount(domain_[v]);
            if (size < best_size || (size == best_size && incident_[v].size() > best_deg)) {
                best = v;
                best_size = size;
                best_deg = incident_[v].size();
            }
        }
        return best;
    }

    std::vector<int> values(Vertex v) const {
        std::vector<int> out;
        int limit = 64;
        if (interchangeable_) {
            int used = -1;
            for (Vertex u : assigned_) used = std::max(used, color_[u]);
            limit = used + 2;
        }
        for (std::uint64_t d = domain_[v]; d; d &= d - 1) {
            int c = std::countr_zero(d);
            if (c < limit) out.push_back(c);
        }
        return out;
    }

    bool search(detail::Deadline& deadline, const std::atomic<bool>* stop,
                std::function<bool(const std::vector<int>&)>* each) {
        if (stop && stop->load(std::memory_order_relaxed)) return false;
        deadline.check();
        Vertex v = choose();
        if (v < 0) {
            if (each) return !(*each)(color_);  // true = stop
            return true;
        }
        for (int c : values(v)) {
            std::size_t tm = trail_.size(), am = assigned_.size();
            if (assign(v, c) && propagate()) {
                if (search(deadline, stop, each)) return true;
            }
            undo(tm, am);
        }
        return false;
    }
};

struct SolveOptions {
    int max_n = 64;
    double timeout_s = 0;
    int jobs = 1;
};

struct SolveOutcome {
    enum class Status { colorable, not_colorable };
    Status status = Status::not_colorable;
    std::optional<Coloring> coloring;
    std::optional<ListAssignment> refuting_assignment;

    bool colorable() const { return status == Status::colorable; }
};

namespace detail {

struct Palette {
    std::vector<int> colors;  // index -> color value
    std::vector<std::uint64_t> domains;
};

inline Palette make_palette(int n, int k, const std::optional<ListAssignment>& lists) {
    Palette p;
    if (lists) {
        std::set<int> all;
        for (const auto& l : lists->lists) all.insert(l.begin(), l.end());
        if (all.size() > 64) throw CapExceeded("more than 64 distinct colors in lists");
        p.colors.assign(all.begin(), all.end());
        p.domains.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int c : lists->lists[v]) {
                auto it = std::lower_bound(p.colors.begin(), p.colors.end(), c);
                p.domains[v] |= std::uint64_t{1} << (it - p.colors.begin());
            }
    } else {
        if (k < 1) throw InputError("palette size must be at least 1");
        if (k > 64) throw CapExceeded("palette size above 64");
        for (int c = 1; c <= k; ++c) p.colors.push_back(c);
        std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        p.domains.assign(n, full);
    }
    return p;
}

inline std::optional<std::vector<int>> run_search(HypergraphColoring& root, const SolveOptions& opt) {
    if (opt.jobs <= 1) {
        Deadline deadline(opt.timeout_s);
        return root.solve(deadline);
    }
    auto parts = root.split(static_cast<std::size_t>(opt.jobs) * 4);
    std::atomic<bool> found{false};
    std::atomic<bool> timed_out{false};
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::optional<std::pair<std::size_t, std::vector<int>>> best;
    auto worker = [&] {
        Deadline deadline(opt.timeout_s);
        while (!found.load()) {
            std::size_t i = next.fetch_add(1);
            if (i >= parts.size()) return;
            try {
                if (auto sol = parts[i].solve(deadline, &found)) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!best || i < best->first) best.emplace(i, *sol);
                    found.store(true);
                }
            } catch (const Timeout&) {
                timed_out.store(true);
                found.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < opt.jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (best) return best->second;
    if (timed_out) throw Timeout();
    return std::nullopt;
}

}  // namespace detail

// Exact star/biclique coloring search. With lists, colors come from the lists; otherwise 1..k.
inline SolveOutcome solve_coloring(const Graph& g, Mode mode, int k, const std::optional<ListAssignment>& lists,
                                   const SolveOptions& opt = {}) {
    const int n = g.order();
    if (n > opt.max_n)
        throw CapExceeded("n=" + std::to_string(n) + " exceeds solver cap " + std::to_string(opt.max_n));
    if (lists) validate(g, *lists);
    auto pal = detail::make_palette(n, k, lists);
    HypergraphColoring csp(n, constraint_sets(g, mode), pal.domains, !lists.has_value());
    SolveOutcome out;
    auto sol = detail::run_search(csp, opt);
    if (!sol) return out;
    Coloring rho;
    rho.colors.resize(n);
    for (int v = 0; v < n; ++v) rho.colors[v] = pal.colors[(*sol)[v]];
    rho.k = lists ? pal.colors.empty() ? 0 : pal.colors.back() : k;
    if (verify(g, rho, mode)) throw std::logic_error("solver produced an invalid coloring");
    out.status = SolveOutcome::Status::colorable;
    out.coloring = std::move(rho);
    return out;
}

// Search over an explicit family of vertex sets on vertices 0..n-1, with some vertices fixed
// to given colors. Returns color values (not indices) or nullopt.
inline std::optional<std::vector<int>> solve_constraints(int n, const Hyperedges& sets, int k,
                                                         const std::optional<ListAssignment>& lists,
                                                         const std::vector<std::pair<Vertex, int>>& fixed,
                                                         const SolveOptions& opt = {}) {
    if (lists && static_cast<int>(lists->lists.size()) != n) throw InputError("list assignment size mismatch");
    auto pal = detail::make_palette(n, k, lists);
    HypergraphColoring csp(n, sets, pal.domains, !lists.has_value() && fixed.empty());
    for (auto [v, c] : fixed) {
        auto it = std::lower_bound(pal.colors.begin(), pal.colors.end(), c);
        if (it == pal.colors.end() || *it != c) return std::nullopt;
        if (!csp.fix(v, static_cast<int>(it - pal.colors.begin()))) return std::nullopt;
    }
    auto sol = detail::run_search(csp, opt);
    if (!sol) return std::nullopt;
    for (int& c : *sol) c = pal.colors[c];
    return sol;
}

inline SolveOutcome solve_star_coloring(const Graph& g, int k, const std::optional<ListAssignment>& lists = std::nullopt,
                                        const SolveOptions& opt = {}) {
    return solve_coloring(g, Mode::star, k, lists, opt);
}
inline SolveOutcome solve_biclique_coloring(const Graph& g, int k,
                                            const std::optional<ListAssignment>& lists = std::nullopt,
                                            const SolveOptions& opt = {}) {
    return solve_coloring(g, Mode::biclique, k, lists, opt);
}

struct ChromaticResult {
    int k = 0;
    Coloring coloring;
};

// Smallest k admitting a valid coloring; starts from the largest twin block.
inline ChromaticResult chromatic(const Graph& g, Mode mode, const SolveOptions& opt = {}) {
    const int n = g.order();
    if (n == 0) return {0, Coloring{0, {}}};
    if (g.size() == 0) return {1, Coloring{1, std::vector<int>(n, 1)}};
    int lb = 2;
    for (const auto& b : twin_partition(g).blocks) lb = std::max<int>(lb, static_cast<int>(b.size()));
    for (int k = lb; k <= n; ++k) {
        auto r = solve_coloring(g, mode, k, std::nullopt, opt);
        if (r.colorable()) return {k, *r.coloring};
    }
    throw std::logic_error("rainbow coloring rejected");
}

struct ChooseOptions {
    int max_n = 16;
    int max_k = 4;
    double timeout_s = 0;
};

namespace detail {

// Greedy certificate: peel vertices lying in fewer than k live sets. If everything peels,
// coloring in reverse peel order works for any k-lists, since each set closing at a vertex
// rules out at most one color there.
inline bool greedy_choosable(int n, const std::vector<std::vector<Vertex>>& sets, int k) {
    std::vector<std::vector<int>> at(n);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (Vertex v : sets[i]) at[v].push_back(static_cast<int>(i));
    std::vector<int> live(n);
    for (int v = 0; v < n; ++v) live[v] = static_cast<int>(at[v].size());
    std::vector<char> gone(n, 0), dead(sets.size(), 0);
    std::vector<Vertex> queue;
    for (int v = 0; v < n; ++v)
        if (live[v] < k) queue.push_back(v);
    int peeled = 0;
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        if (gone[v]) continue;
        gone[v] = 1;
        ++peeled;
        for (int i : at[v]) {
            if (dead[i]) continue;
            dead[i] = 1;
            for (Vertex u : sets[i])
                if (!gone[u] && --live[u] < k) queue.push_back(u);
        }
    }
    return peeled == n;
}

// Decides whether some k-list assignment admits no coloring avoiding monochromatic
// hyperedges. Vertices are placed in a fixed order; the state after a prefix is the set of
// reachable signatures, where a signature records for each edge straddling the prefix
// boundary whether it is already split or still monochromatic in some color. The future
// depends on the prefix only through this set, so states are memoized up to color renaming.
class ListRefuter {
public:
    using Lists = std::vector<std::vector<int>>;

    ListRefuter(int n, const Hyperedges& edges, int k, double timeout_s) : n_(n), k_(k), deadline_(timeout_s) {
        order_vertices(edges);
        prepare_steps(edges);
    }

    // Refuting lists indexed by vertex (colors 1..), or nullopt if every assignment is colorable.
    std::optional<Lists> run() {
        State start{std::vector<Sig>{Sig{}}};
        auto w = refute(0, start);
        if (!w) return std::nullopt;
        Lists out(n_);
        for (int t = 0; t < n_; ++t) {
            auto& l = (*w)[t];
            for (int& c : l) ++c;
            std::sort(l.begin(), l.end());
            out[order_[t]] = l;
        }
        return out;
    }

    std::uint64_t states_visited() const { return visited_; }

private:
    using Sig = std::vector<std::int8_t>;  // 0 = split, c+1 = monochromatic in color c
    struct State {
        std::vector<Sig> sigs;  // sorted, deduplicated antichain
    };
    struct Step {
        Vertex vertex;
        std::vector<int> source;  // per next-active edge: index in current active list, or -1 if new
        std::vector<bool> touches;  // per next-active edge: does the placed vertex lie on it
        std::vector<int> closing;   // current-active edges that the placed vertex completes
    };

    int n_, k_;
    Deadline deadline_;
    std::vector<Vertex> order_;
    std::vector<Step> steps_;
    std::unordered_map<std::string, std::optional<Lists>> memo_;
    std::uint64_t visited_ = 0;

    // Greedy order keeping few edges open.
    void order_vertices(const Hyperedges& edges) {
        std::vector<std::vector<int>> inc(n_);
        for (std::size_t e = 0; e < edges.size(); ++e)
            for (Vertex v : edges[e]) inc[v].push_back(static_cast<int>(e));
        std::vector<int> placed_count(edges.size(), 0);
        std::vector<bool> placed(n_, false);
        for (int t = 0; t < n_; ++t) {
            Vertex best = -1;
            long best_score = 0;
            for (Vertex v = 0; v < n_; ++v) {
                if (placed[v]) continue;
                long opened = 0, closed = 0, touched = 0;
                for (int e : inc[v]) {
                    int sz = static_cast<int>(edges[e].size());
                    if (placed_count[e] == 0) ++opened;
                    if (placed_count[e] + 1 == sz) ++closed;
                    if (placed_count[e] > 0) ++touched;
                }
                long score = (opened - closed) * 4 - touched;
                if (best < 0 || score < best_score) {
                    best = v;
                    best_score = score;
                }
            }
            placed[best] = true;
            order_.push_back(best);
            for (int e : inc[best]) ++placed_count[e];
        }
    }

    void prepare_steps(const Hyperedges& edges) {
        std::vector<int> pos(n_);
        for (int t = 0; t < n_; ++t) pos[order_[t]] = t;
        std::vector<int> first(edges.size()), last(edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            first[e] = n_;
            last[e] = -1;
            for (Vertex v : edges[e]) {
                first[e] = std::min(first[e], pos[v]);
                last[e] = std::max(last[e], pos[v]);
            }
        }
        // active(t) = edges with first < t <= last, i.e. open after placing t vertices
        auto active = [&](int t) {
            std::vector<int> a;
            for (std::size_t e = 0; e < edges.size(); ++e)
                if (first[e] < t && t <= last[e]) a.push_back(static_cast<int>(e));
            return a;
        };
        std::vector<int> cur = active(0);
        for (int t = 0; t < n_; ++t) {
            std::vector<int> nxt = active(t + 1);
            Step st;
            st.vertex = order_[t];
            for (int e : nxt) {
                auto it = std::lower_bound(cur.begin(), cur.end(), e);
                st.source.push_back(it != cur.end() && *it == e ? static_cast<int>(it - cur.begin()) : -1);
                st.touches.push_back(pos[st.vertex] >= first[e] &&
                                     std::find(edges[e].begin(), edges[e].end(), st.vertex) != edges[e].end());
            }
            for (std::size_t i = 0; i < cur.size(); ++i)
                if (last[cur[i]] == t) st.closing.push_back(static_cast<int>(i));
            steps_.push_back(std::move(st));
            cur = std::move(nxt);
        }
    }

    static bool dominated_by(const Sig& better, const Sig& worse) {
        for (std::size_t i = 0; i < better.size(); ++i)
            if (better[i] != 0 && better[i] != worse[i]) return false;
        return true;
    }

    // Reduce to an antichain and relabel colors canonically. `relabel` maps old label -> new.
    static void canonicalize(std::vector<Sig>& sigs, std::vector<int>& relabel, int palette) {
        std::sort(sigs.begin(), sigs.end());
        sigs.erase(std::unique(sigs.begin(), sigs.end()), sigs.end());
        if (sigs.size() <= 4096) {
            std::vector<Sig> keep;
            for (std::size_t i = 0; i < sigs.size(); ++i) {
                bool dom = false;
                for (std::size_t j = 0; j < sigs.size() && !dom; ++j)
                    if (i != j && dominated_by(sigs[j], sigs[i]) && (sigs[j] != sigs[i])) dom = true;
                if (!dom) keep.push_back(sigs[i]);
            }
            sigs = std::move(keep);
        }
        relabel.assign(palette, -1);
        for (int round = 0; round < 4; ++round) {
            std::vector<int> step(palette, -1);
            int next = 0;
            for (const auto& s : sigs)
                for (auto x : s)
                    if (x > 0 && step[x - 1] < 0) step[x - 1] = next++;
            bool identity = true;
            for (int c = 0; c < palette; ++c)
                if (step[c] >= 0 && step[c] != c) identity = false;
            for (auto& s : sigs)
                for (auto& x : s)
                    if (x > 0) x = static_cast<std::int8_t>(step[x - 1] + 1);
            // compose
            for (int c = 0; c < palette; ++c) {
                if (round == 0)
                    relabel[c] = step[c];
                else if (relabel[c] >= 0)
                    relabel[c] = step[relabel[c]];
            }
            std::sort(sigs.begin(), sigs.end());
            if (identity) break;
            palette = next;
        }
    }

    static int palette_of(const std::vector<Sig>& sigs) {
        int m = 0;
        for (const auto& s : sigs)
            for (auto x : s) m = std::max<int>(m, x);
        return m;
    }

    static std::string key(int t, const std::vector<Sig>& sigs) {
        std::string k;
        k.push_back(static_cast<char>(t));
        for (const auto& s : sigs) {
            k.push_back('|');
            for (auto x : s) k.push_back(static_cast<char>(x + 1));
        }
        return k;
    }

    // Returns refuting lists for positions t..n-1 in this state's labels, or nullopt.
    std::optional<Lists> refute(int t, const State& st) {
        if (t == n_) return std::nullopt;  // some coloring survives
        std::string mk = key(t, st.sigs);
        if (auto it = memo_.find(mk); it != memo_.end()) return it->second;
        ++visited_;
        deadline_.check();

        const Step& step = steps_[t];
        const int m = palette_of(st.sigs);
        std::optional<Lists> result;

        // Candidate lists: j fresh colors m..m+j-1 plus k-j old colors.
        for (int j = 0; j <= k_ && !result; ++j) {
            int old = k_ - j;
            if (old > m) continue;
            std::vector<int> pick(old);
            for (int i = 0; i < old; ++i) pick[i] = i;
            while (true) {
                std::vector<int> list = pick;
                for (int f = 0; f < j; ++f) list.push_back(m + f);
                result = try_list(t, st, step, list, m + j);
                if (result) break;
                // next combination of `old` out of m
                int i = old - 1;
                while (i >= 0 && pick[i] == m - old + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int q = i + 1; q < old; ++q) pick[q] = pick[q - 1] + 1;
            }
        }
        memo_.emplace(std::move(mk), result);
        return result;
    }

    std::optional<Lists> try_list(int t, const State& st, const Step& step, const std::vector<int>& list, int palette) {
        std::vector<Sig> next;
        for (const auto& sig : st.sigs) {
            for (int c : list) {
                const std::int8_t mono = static_cast<std::int8_t>(c + 1);
                bool bad = false;
                for (int i : step.closing)
                    if (sig[i] == mono) {
                        bad = true;
                        break;
                    }
                if (bad) continue;
                Sig ns(step.source.size());
                for (std::size_t e = 0; e < ns.size(); ++e) {
                    int src = step.source[e];
                    if (src < 0)
                        ns[e] = mono;
                    else if (!step.touches[e])
                        ns[e] = sig[src];
                    else
                        ns[e] = sig[src] == mono ? mono : 0;
                }
                next.push_back(std::move(ns));
            }
        }
        Lists here;
        if (next.empty()) {
            // Every coloring dies here; remaining vertices get arbitrary lists.
            here.push_back(list);
            for (int u = t + 1; u < n_; ++u) {
                std::vector<int> any(k_);
                for (int i = 0; i < k_; ++i) any[i] = palette + i;
                here.push_back(any);
            }
            return here;
        }
        std::vector<int> relabel;
        canonicalize(next, relabel, palette);
        State child{std::move(next)};
        auto sub = refute(t + 1, child);
        if (!sub) return std::nullopt;
        // Map child labels back: images of relabel are inverted, others become fresh labels.
        int child_palette = palette_of(child.sigs);
        std::vector<int> inverse(child_palette, -1);
        for (int c = 0; c < palette; ++c)
            if (relabel[c] >= 0 && relabel[c] < child_palette) inverse[relabel[c]] = c;
        here.push_back(list);
        for (auto l : *sub) {
            for (int& c : l) c = c < child_palette && inverse[c] >= 0 ? inverse[c] : c - child_palette + palette;
            here.push_back(std::move(l));
        }
        return here;
    }
};

}  // namespace detail

// Exact k-choosability. A refuting assignment, when found, is re-checked with the solver.
inline SolveOutcome is_k_choosable(const Graph& g, int k, Mode mode, const ChooseOptions& opt = {}) {
    const int n = g.order();
    if (n > opt.max_n)
        throw CapExceeded("n=" + std::to_string(n) + " exceeds choosability cap " + std::to_string(opt.max_n));
    if (k > opt.max_k)
        throw CapExceeded("k=" + std::to_string(k) + " exceeds choosability cap " + std::to_string(opt.max_k));
    if (k < 1) throw InputError("list size must be at least 1");
    SolveOptions sopt;
    sopt.max_n = opt.max_n;
    sopt.timeout_s = opt.timeout_s;

    SolveOutcome out;
    ListAssignment same = uniform_lists(n, k);
    auto plain = solve_coloring(g, mode, k, same, sopt);
    if (!plain.colorable()) {
        out.refuting_assignment = same;
        return out;
    }
    auto sets = constraint_sets(g, mode);
    if (detail::greedy_choosable(n, sets, k)) {
        out.status = SolveOutcome::Status::colorable;
        out.coloring = plain.coloring;
        return out;
    }
    detail::ListRefuter refuter(n, std::move(sets), k, opt.timeout_s);
    auto lists = refuter.run();
    if (!lists) {
        out.status = SolveOutcome::Status::colorable;
        out.coloring = plain.coloring;
        return out;
    }
    ListAssignment bad{k, *lists};
    if (solve_coloring(g, mode, 0, bad, sopt).colorable())
        throw std::logic_error("refuting assignment admits a coloring");
    out.refuting_assignment = std::move(bad);
    return out;
}

}  // namespace starcolor
