#include "face_adjacency.hpp"

#include "outerturan/errors.hpp"

#include <algorithm>

namespace outerturan::detail {

FaceAdjacency face_adjacency(const Graph &g, const std::vector<Face> &faces)
{
    FaceAdjacency out;
    out.neighbors.assign(faces.size(), {});
    out.faces_of_edge.assign(g.edge_count(), {});
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (auto e : faces[f].edges()) {
            int idx = g.edge_index(e.u, e.v);
            if (idx < 0)
                throw ConsistencyError("face edge missing from graph");
            out.faces_of_edge[idx].push_back(static_cast<int>(f));
        }
    for (const auto &list : out.faces_of_edge) {
        if (list.size() > 2)
            throw ConsistencyError("edge shared by more than two inner faces");
        if (list.size() == 2) {
            out.neighbors[list[0]].push_back(list[1]);
            out.neighbors[list[1]].push_back(list[0]);
            out.dual_edges.emplace_back(std::min(list[0], list[1]), std::max(list[0], list[1]));
        }
    }
    for (auto &n : out.neighbors)
        std::sort(n.begin(), n.end());
    std::sort(out.dual_edges.begin(), out.dual_edges.end());
    return out;
}

SubtreeSums subtree_sums(const std::vector<std::vector<int>> &adjacency, const std::vector<int> &weight, int cap)
{
    const int count = static_cast<int>(adjacency.size());
    SubtreeSums out;
    out.parent.assign(count, -2);
    out.children.assign(count, {});
    out.prefix.assign(count, {});

    std::vector<int> post;
    for (int root = 0; root < count; ++root) {
        if (out.parent[root] != -2)
            continue;
        out.parent[root] = -1;
        std::vector<int> stack{root};
        std::vector<int> order;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int w : adjacency[v]) {
                if (w == out.parent[v])
                    continue;
                if (out.parent[w] != -2)
                    throw ConsistencyError("weak dual contains a cycle");
                out.parent[w] = v;
                out.children[v].push_back(w);
                stack.push_back(w);
            }
        }
        post.insert(post.end(), order.rbegin(), order.rend());
    }

    for (int v : post) {
        auto &pre = out.prefix[v];
        std::vector<char> base(cap + 1, 0);
        if (weight[v] <= cap)
            base[weight[v]] = 1;
        pre.push_back(std::move(base));
        for (int c : out.children[v]) {
            const auto &prev = pre.back();
            const auto &child = out.sums(c);
            std::vector<char> next = prev;
            for (int a = 0; a <= cap; ++a) {
                if (!prev[a])
                    continue;
                for (int b = 0; a + b <= cap; ++b)
                    if (child[b])
                        next[a + b] = 1;
            }
            pre.push_back(std::move(next));
        }
    }
    return out;
}

std::vector<int> SubtreeSums::reconstruct(int v, int total) const
{
    std::vector<int> nodes{v};
    int remaining = total;
    const auto &pre = prefix[v];
    for (int j = static_cast<int>(children[v].size()); j >= 1; --j) {
        if (pre[j - 1][remaining])
            continue;
        int c = children[v][j - 1];
        const auto &child = sums(c);
        bool taken = false;
        for (int y = 0; y <= remaining && !taken; ++y) {
            if (child[y] && pre[j - 1][remaining - y]) {
                auto sub = reconstruct(c, y);
                nodes.insert(nodes.end(), sub.begin(), sub.end());
                remaining -= y;
                taken = true;
            }
        }
        if (!taken)
            throw ConsistencyError("subtree sum traceback failed");
    }
    return nodes;
}

} // namespace outerturan::detail
