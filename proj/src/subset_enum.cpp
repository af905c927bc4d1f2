#include "gstar/subset_enum.hpp"

#include <algorithm>
#include <set>

namespace gstar {

namespace {

// Shared frontier state for the encode/decode loop.
struct GrowState {
    const Graph& g;
    std::vector<char> in_S, in_B, in_T;
    std::set<int> frontier;  // T = N(S) \ B, ordered by label

    explicit GrowState(const Graph& g_, int v) : g(g_) {
        in_S.assign(g.n, 0);
        in_B.assign(g.n, 0);
        in_T.assign(g.n, 0);
        in_S[v] = 1;
        for (int u : g.adj[v]) {
            in_T[u] = 1;
            frontier.insert(u);
        }
    }

    int smallest() const { return *frontier.begin(); }

    void take_into_S(int w) {
        frontier.erase(w);
        in_T[w] = 0;
        in_S[w] = 1;
        for (int u : g.adj[w]) {
            if (!in_S[u] && !in_B[u] && !in_T[u]) {
                in_T[u] = 1;
                frontier.insert(u);
            }
        }
    }

    void take_into_B(int w) {
        frontier.erase(w);
        in_T[w] = 0;
        in_B[w] = 1;
    }
};

}  // namespace

ConnectedSetCode encode_connected_set(const Graph& g, const std::vector<int>& A, int v) {
    if (A.empty()) throw domain_error("encode: set must be nonempty");
    std::vector<char> in_A(g.n, 0);
    for (int u : A) {
        if (u < 0 || u >= g.n) throw domain_error("encode: vertex out of range");
        if (in_A[u]) throw domain_error("encode: duplicate vertex in set");
        in_A[u] = 1;
    }
    if (v < 0 || v >= g.n || !in_A[v]) throw domain_error("encode: root must belong to the set");

    // Connectivity of g[A] by BFS from v.
    {
        std::vector<int> stack{v};
        std::vector<char> seen(g.n, 0);
        seen[v] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u])
                if (in_A[w] && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != A.size()) throw domain_error("encode: set is not connected");
    }

    const int a = static_cast<int>(A.size());
    int b = 0;
    {
        std::vector<char> counted(g.n, 0);
        for (int u : A)
            for (int w : g.adj[u])
                if (!in_A[w] && !counted[w]) {
                    counted[w] = 1;
                    ++b;
                }
    }

    ConnectedSetCode code;
    code.root = v;
    code.a = a;
    code.b = b;
    code.bits.reserve(a - 1 + b);

    GrowState st(g, v);
    int ones = 0, zeros = 0;
    while (ones < a - 1 || zeros < b) {
        // A connected guarantees the frontier never empties before S = A.
        int w = st.smallest();
        if (in_A[w]) {
            st.take_into_S(w);
            code.bits.push_back('1');
            ++ones;
        } else {
            st.take_into_B(w);
            code.bits.push_back('0');
            ++zeros;
        }
    }
    return code;
}

std::vector<int> decode_connected_set(const Graph& g, int v, const std::string& bits) {
    if (v < 0 || v >= g.n) throw domain_error("decode: root out of range");
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] != '0' && bits[i] != '1')
            throw domain_error("decode: non-binary character at position " + std::to_string(i));

    GrowState st(g, v);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (st.frontier.empty())
            throw domain_error("decode: frontier empty at position " + std::to_string(i));
        int w = st.smallest();
        if (bits[i] == '1')
            st.take_into_S(w);
        else
            st.take_into_B(w);
    }
    if (!st.frontier.empty())
        throw domain_error("decode: bits exhausted at position " + std::to_string(bits.size()) +
                           " with frontier nonempty");

    std::vector<int> A;
    for (int u = 0; u < g.n; ++u)
        if (st.in_S[u]) A.push_back(u);
    return A;
}

namespace {

struct EnumCtx {
    const Graph& g;
    int a, b;
    std::vector<std::vector<int>>& out;
    GrowState st;
    std::vector<int> members;
    int ones = 0, zeros = 0;

    EnumCtx(const Graph& g_, int v, int a_, int b_, std::vector<std::vector<int>>& out_)
        : g(g_), a(a_), b(b_), out(out_), st(g_, v), members{v} {}

    void run() {
        if (ones == a - 1 && zeros == b) {
            if (st.frontier.empty()) {
                auto s = members;
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
            return;
        }
        if (st.frontier.empty()) return;
        const int w = st.smallest();
        if (ones < a - 1) {  // '1' branch first: canonical output order
            st.take_into_S(w);
            members.push_back(w);
            ++ones;
            run();
            --ones;
            members.pop_back();
            undo_S(w);
        }
        if (zeros < b) {
            st.take_into_B(w);
            ++zeros;
            run();
            --zeros;
            st.in_B[w] = 0;
            st.in_T[w] = 1;
            st.frontier.insert(w);
        }
    }

    void undo_S(int w) {
        st.in_S[w] = 0;
        for (int u : st.g.adj[w]) {
            // Remove frontier vertices whose only S-neighbor was w.
            if (st.in_T[u]) {
                bool still = false;
                for (int x : st.g.adj[u])
                    if (st.in_S[x]) {
                        still = true;
                        break;
                    }
                if (!still) {
                    st.in_T[u] = 0;
                    st.frontier.erase(u);
                }
            }
        }
        st.in_T[w] = 1;
        st.frontier.insert(w);
    }
};

}  // namespace

std::vector<std::vector<int>> enumerate_connected_sets(const Graph& g, int v, int a, int b) {
    if (v < 0 || v >= g.n) throw domain_error("enumerate: root out of range");
    if (a < 1) throw domain_error("enumerate: a must be positive");
    if (b < 0) throw domain_error("enumerate: b must be nonnegative");
    std::vector<std::vector<int>> out;
    EnumCtx ctx(g, v, a, b, out);
    ctx.run();
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > static_cast<unsigned __int128>(UINT64_MAX))
            throw domain_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace gstar
