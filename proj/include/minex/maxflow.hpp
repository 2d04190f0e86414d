#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace minex {

// Small Dinic max-flow over integer capacities. Used for disjoint-path
// extraction (with vertex splitting) and s-t min cuts; instances here are
// small enough that no scaling tricks are needed.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(static_cast<size_t>(n), -1) {}

    int add_node() {
        head_.push_back(-1);
        return static_cast<int>(head_.size()) - 1;
    }

    int node_count() const { return static_cast<int>(head_.size()); }

    // Returns the id of the forward arc; the reverse arc is id^1.
    int add_edge(int u, int v, int cap) {
        int id = static_cast<int>(to_.size());
        to_.push_back(v); cap_.push_back(cap); next_.push_back(head_[u]); head_[u] = id;
        to_.push_back(u); cap_.push_back(0);   next_.push_back(head_[v]); head_[v] = id + 1;
        return id;
    }

    int flow_on(int edge_id) const { return cap_[edge_id ^ 1]; }

    long long max_flow(int s, int t) {
        long long total = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) total += f;
        }
        s_ = s;
        return total;
    }

    // Vertices reachable from s in the residual graph after max_flow.
    std::vector<char> min_cut_side() const {
        std::vector<char> side(head_.size(), 0);
        std::queue<int> q;
        q.push(s_);
        side[s_] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e >= 0; e = next_[e]) {
                if (cap_[e] > 0 && !side[to_[e]]) {
                    side[to_[e]] = 1;
                    q.push(to_[e]);
                }
            }
        }
        return side;
    }

    // Iterates outgoing arcs of u, calling fn(edge_id, v, cap).
    template <class Fn>
    void for_arcs(int u, Fn fn) const {
        for (int e = head_[u]; e >= 0; e = next_[e]) fn(e, to_[e], cap_[e]);
    }

private:
    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e >= 0; e = next_[e]) {
                if (cap_[e] > 0 && level_[to_[e]] < 0) {
                    level_[to_[e]] = level_[u] + 1;
                    q.push(to_[e]);
                }
            }
        }
        return level_[t] >= 0;
    }

    long long dfs(int u, int t, long long limit) {
        if (u == t) return limit;
        for (int& e = iter_[u]; e >= 0; e = next_[e]) {
            int v = to_[e];
            if (cap_[e] > 0 && level_[v] == level_[u] + 1) {
                long long f = dfs(v, t, std::min<long long>(limit, cap_[e]));
                if (f > 0) {
                    cap_[e] -= static_cast<int>(f);
                    cap_[e ^ 1] += static_cast<int>(f);
                    return f;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_, to_, cap_, next_, level_, iter_;
    int s_ = 0;
};

} // namespace minex
