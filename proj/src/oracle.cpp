#include "outerturan/oracle.hpp"

#include "outerturan/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace outerturan {

namespace {

void triangulate(std::vector<std::pair<int, int>> &pending, ChordSet &chords,
                 const std::function<void(const ChordSet &)> &visit)
{
    if (pending.empty()) {
        ChordSet sorted = chords;
        std::sort(sorted.begin(), sorted.end());
        visit(sorted);
        return;
    }
    auto [i, j] = pending.back();
    pending.pop_back();
    if (j - i < 2) {
        triangulate(pending, chords, visit);
    } else {
        // Edge (i, j) lies in exactly one triangle (i, m, j).
        for (int m = i + 1; m < j; ++m) {
            const std::size_t mark = chords.size();
            if (m - i >= 2)
                chords.push_back(Edge{i, m});
            if (j - m >= 2)
                chords.push_back(Edge{m, j});
            pending.emplace_back(i, m);
            pending.emplace_back(m, j);
            triangulate(pending, chords, visit);
            pending.pop_back();
            pending.pop_back();
            chords.resize(mark);
        }
    }
    pending.emplace_back(i, j);
}

std::vector<Vertex> polygon_order(int n)
{
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

struct BranchAndBound {
    const Graph &host;
    const std::vector<Vertex> &order;
    int k;
    int best;
    std::uint64_t best_mask = 0;
    bool found = false;

    Graph subgraph(std::uint64_t alive) const
    {
        std::vector<bool> keep(host.edge_count());
        for (int i = 0; i < host.edge_count(); ++i)
            keep[i] = (alive >> i) & 1U;
        return host.edge_subgraph(keep);
    }

    void search(std::uint64_t alive, std::uint64_t kept)
    {
        const int count = std::popcount(alive);
        if (count <= best)
            return;
        auto cycle = find_cycle_via_faces(embed_in_convex_position(subgraph(alive), order), k);
        if (!cycle) {
            best = count;
            best_mask = alive;
            found = true;
            return;
        }
        if (count - 1 <= best)
            return;
        std::vector<int> idx;
        for (std::size_t i = 0; i < cycle->size(); ++i)
            idx.push_back(host.edge_index((*cycle)[i], (*cycle)[(i + 1) % cycle->size()]));
        std::sort(idx.begin(), idx.end());
        for (int i : idx) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (kept & bit)
                continue;
            search(alive & ~bit, kept);
            kept |= bit;
            if (count - 1 <= best)
                break;
        }
    }
};

} // namespace

void for_each_triangulation(int n, const std::function<void(const ChordSet &)> &visit)
{
    if (n < 3)
        throw InvalidArgument("a polygon needs at least three vertices");
    std::vector<std::pair<int, int>> pending{{0, n - 1}};
    ChordSet chords;
    triangulate(pending, chords, visit);
}

std::vector<ChordSet> triangulations(int n)
{
    std::vector<ChordSet> out;
    for_each_triangulation(n, [&](const ChordSet &c) { out.push_back(c); });
    return out;
}

OuterplaneEmbedding triangulation_embedding(int n, const ChordSet &chords)
{
    std::vector<Edge> edges(chords.begin(), chords.end());
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back(Edge{i, i + 1});
    if (n >= 3)
        edges.push_back(Edge{0, n - 1});
    return embed_in_convex_position(make_graph_from_edges(n, std::move(edges)), polygon_order(n));
}

ChordSet canonical_triangulation(int n, const ChordSet &chords)
{
    ChordSet best = chords;
    for (int r = 0; r < n; ++r)
        for (int flip = 0; flip < 2; ++flip) {
            ChordSet image;
            for (auto e : chords) {
                auto map = [&](int x) { return flip ? ((r - x) % n + n) % n : (x + r) % n; };
                image.push_back(Edge::of(map(e.u), map(e.v)));
            }
            std::sort(image.begin(), image.end());
            best = std::min(best, image);
        }
    return best;
}

std::uint64_t catalan(int m)
{
    if (m < 0)
        return 0;
    std::uint64_t c = 1;
    for (int i = 0; i < m; ++i) {
        // C(i+1) = C(i) * 2(2i+1) / (i+2)
        if (c > UINT64_MAX / (2 * (2 * static_cast<std::uint64_t>(i) + 1)))
            throw OverflowError("Catalan number overflows 64 bits");
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    return c;
}

std::optional<CkFreeResult> max_ckfree_edges(const OuterplaneEmbedding &triangulation, int k, int at_least)
{
    if (k < 3)
        throw InvalidArgument("cycle length k must be at least 3");
    const Graph &host = triangulation.graph;
    if (host.edge_count() > 64)
        throw InvalidArgument("branch and bound supports at most 64 edges");
    const auto order = convex_order(triangulation);
    BranchAndBound bb{host, order, k, at_least - 1};
    const std::uint64_t all =
        host.edge_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << host.edge_count()) - 1;
    bb.search(all, 0);
    if (!bb.found)
        return std::nullopt;
    CkFreeResult out;
    out.count = bb.best;
    for (int i = 0; i < host.edge_count(); ++i)
        if ((bb.best_mask >> i) & 1U)
            out.witness.push_back(host.edges()[i]);
    return out;
}

OracleResult exact_ex(int n, int k, const OracleOptions &options)
{
    if (k < 3)
        throw InvalidArgument("cycle length k must be at least 3");
    if (n < 2)
        throw InvalidArgument("vertex count n must be at least 2");
    if (options.jobs < 1)
        throw InvalidArgument("worker count must be at least 1");
    if (n > options.cap) {
        std::ostringstream msg;
        msg << "n=" << n << " is above the oracle cap of " << options.cap << ": the sweep would scan Catalan("
            << n - 2 << ")=" << catalan(n - 2) << " triangulations, each with up to 2^" << 2 * n - 3
            << " edge subsets";
        throw ResourceRefusal(msg.str());
    }

    const auto start = std::chrono::steady_clock::now();
    OracleResult result;
    result.n = n;
    result.k = k;
    if (n == 2) {
        result.value = 1;
        result.witness = make_graph(2, {{0, 1}});
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }

    const bool reduce =
        options.symmetry == SymmetryMode::On || (options.symmetry == SymmetryMode::Auto && n >= 10);
    std::vector<ChordSet> work;
    for_each_triangulation(n, [&](const ChordSet &c) {
        if (!reduce || canonical_triangulation(n, c) == c)
            work.push_back(c);
    });

    std::atomic<int> best_value{0};
    std::atomic<std::size_t> next{0};
    std::mutex merge;
    std::vector<Edge> best_witness;
    std::uint64_t done = 0;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= work.size())
                return;
            auto tri = triangulation_embedding(n, work[i]);
            // Ties are still reported so the merged witness does not depend on timing.
            auto found = max_ckfree_edges(tri, k, best_value.load());
            std::lock_guard lock(merge);
            if (found && (found->count > best_value.load() ||
                          (found->count == best_value.load() && found->witness < best_witness))) {
                best_value.store(found->count);
                best_witness = found->witness;
            }
            ++done;
            if (options.progress)
                options.progress(done, work.size());
        }
    };

    const int threads = std::min<int>(options.jobs, static_cast<int>(work.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }

    result.value = best_value.load();
    result.witness = make_graph_from_edges(n, best_witness);
    result.triangulations_scanned = work.size();
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

} // namespace outerturan
