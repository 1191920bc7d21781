#include "qhx/families.hpp"

namespace qhx {

namespace {

std::string v(int i) { return "v" + std::to_string(i); }
std::string e(int i) { return "e" + std::to_string(i); }

void require(bool cond, const std::string& msg) {
    if (!cond) throw BadParams(msg);
}

}  // namespace

Quiver family_I(int n) {
    require(n >= 1, "I_n needs n >= 1");
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    for (int i = 0; i <= n; ++i) vertices.push_back(v(i));
    for (int i = 0; i < n; ++i) edges.push_back({e(i), v(i), v(i + 1)});
    return Quiver(QuiverKind::digraph, "I" + std::to_string(n), std::move(vertices),
                  std::move(edges));
}

Quiver family_P(int n) {
    require(n >= 1, "P_n needs n >= 1");
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) vertices.push_back(v(i));
    for (int i = 0; i < n; ++i) edges.push_back({e(i), v(i), v((i + 1) % n)});
    return Quiver(QuiverKind::digraph, "P" + std::to_string(n), std::move(vertices),
                  std::move(edges));
}

Quiver family_A(int n) {
    require(n >= 1, "A_n needs n >= 1");
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    for (int i = 0; i <= n; ++i) vertices.push_back(v(i));
    for (int i = 0; i < n; ++i) {
        if (i % 2 == 0)
            edges.push_back({e(i), v(i), v(i + 1)});
        else
            edges.push_back({e(i), v(i + 1), v(i)});
    }
    return Quiver(QuiverKind::digraph, "A" + std::to_string(n), std::move(vertices),
                  std::move(edges));
}

Quiver family_D(int n, int m) {
    require(n >= 0 && m >= 0 && n + m >= 1, "D_{n,m} needs n, m >= 0 and n + m >= 1");
    std::vector<std::string> vertices = {"v0"};
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) vertices.push_back("w" + std::to_string(i));
    for (int j = 1; j <= m; ++j) vertices.push_back("x" + std::to_string(j));
    int k = 0;
    for (int i = 1; i <= n; ++i) edges.push_back({e(k++), "w" + std::to_string(i), "v0"});
    for (int j = 1; j <= m; ++j) edges.push_back({e(k++), "v0", "x" + std::to_string(j)});
    return Quiver(QuiverKind::digraph, "D" + std::to_string(n) + "_" + std::to_string(m),
                  std::move(vertices), std::move(edges));
}

Quiver family_T(int n) {
    require(n >= 1, "T_n needs n >= 1");
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    for (int i = 0; i <= n; ++i) vertices.push_back(v(i));
    int k = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({e(k++), v(i), v(j)});
    return Quiver(QuiverKind::digraph, "T" + std::to_string(n), std::move(vertices),
                  std::move(edges));
}

Quiver family_B(int n) {
    require(n >= 1, "B_n needs n >= 1");
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::map<std::string, std::string> reflection;
    for (int i = 1; i <= n; ++i) vertices.push_back("p" + std::to_string(i));
    for (int j = 1; j <= n; ++j) vertices.push_back("q" + std::to_string(j));
    int k = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            std::string fwd = e(k), bwd = e(k) + "~";
            ++k;
            edges.push_back({fwd, "p" + std::to_string(i), "q" + std::to_string(j)});
            edges.push_back({bwd, "q" + std::to_string(j), "p" + std::to_string(i)});
            reflection[fwd] = bwd;
            reflection[bwd] = fwd;
        }
    return Quiver(QuiverKind::undirected, "B" + std::to_string(n), std::move(vertices),
                  std::move(edges), std::move(reflection));
}

Quiver family_K(int n, int m) {
    require(n >= 1 && m >= 1, "K_{n,m} needs n, m >= 1");
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) vertices.push_back("p" + std::to_string(i));
    for (int j = 1; j <= m; ++j) vertices.push_back("q" + std::to_string(j));
    int k = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            edges.push_back({e(k++), "p" + std::to_string(i), "q" + std::to_string(j)});
    return Quiver(QuiverKind::digraph, "K" + std::to_string(n) + "_" + std::to_string(m),
                  std::move(vertices), std::move(edges));
}

Quiver family(const std::string& name, const std::vector<int>& params) {
    auto arity = [&](std::size_t k) {
        require(params.size() == k,
                "family " + name + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "I") { arity(1); return family_I(params[0]); }
    if (name == "P") { arity(1); return family_P(params[0]); }
    if (name == "A") { arity(1); return family_A(params[0]); }
    if (name == "D") { arity(2); return family_D(params[0], params[1]); }
    if (name == "T") { arity(1); return family_T(params[0]); }
    if (name == "B") { arity(1); return family_B(params[0]); }
    if (name == "K") { arity(2); return family_K(params[0], params[1]); }
    throw BadParams("unknown family '" + name + "'");
}

}  // namespace qhx
