#include "dspectra/family.hpp"

#include <numeric>

namespace dspectra {

FamilySpec FamilySpec::kh(int n, int h) {
    FamilySpec s;
    s.kind = FamilyKind::kh;
    s.n = n;
    s.h = h;
    return s;
}

FamilySpec FamilySpec::bridge(int s, int t) {
    FamilySpec f;
    f.kind = FamilyKind::kst_bridge;
    f.s = s;
    f.t = t;
    f.n = s + t;
    return f;
}

FamilySpec FamilySpec::glued(int s, int t) {
    FamilySpec f;
    f.kind = FamilyKind::kst_glued;
    f.s = s;
    f.t = t;
    f.n = s + t - 1;
    return f;
}

FamilySpec FamilySpec::friendship(int k) {
    FamilySpec f;
    f.kind = FamilyKind::friendship;
    f.k = k;
    f.n = 2 * k + 1;
    return f;
}

namespace {

FamilySpec order_only(FamilyKind kind, int n) {
    FamilySpec f;
    f.kind = kind;
    f.n = n;
    return f;
}

}  // namespace

FamilySpec FamilySpec::complete(int n) { return order_only(FamilyKind::complete, n); }
FamilySpec FamilySpec::path(int n) { return order_only(FamilyKind::path, n); }
FamilySpec FamilySpec::cycle(int n) { return order_only(FamilyKind::cycle, n); }
FamilySpec FamilySpec::star(int n) { return order_only(FamilyKind::star, n); }

FamilySpec FamilySpec::multipartite(std::vector<int> parts) {
    FamilySpec f;
    f.kind = FamilyKind::complete_multipartite;
    f.parts = std::move(parts);
    f.n = std::accumulate(f.parts.begin(), f.parts.end(), 0);
    return f;
}

FamilySpec FamilySpec::cone(std::vector<int> parts) {
    FamilySpec f;
    f.kind = FamilyKind::clique_cone;
    f.parts = std::move(parts);
    f.n = 1 + std::accumulate(f.parts.begin(), f.parts.end(), 0);
    return f;
}

FamilySpec FamilySpec::join_of(FamilySpec a, FamilySpec b) {
    FamilySpec f;
    f.kind = FamilyKind::join;
    f.sub.push_back(std::move(a));
    f.sub.push_back(std::move(b));
    f.n = family_order(f.sub[0]) + family_order(f.sub[1]);
    return f;
}

FamilySpec FamilySpec::relaxed() const {
    FamilySpec copy = *this;
    copy.relax = true;
    for (auto& child : copy.sub) child = child.relaxed();
    return copy;
}

int family_order(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::kst_bridge: return spec.s + spec.t;
        case FamilyKind::kst_glued: return spec.s + spec.t - 1;
        case FamilyKind::friendship: return 2 * spec.k + 1;
        case FamilyKind::complete_multipartite:
            return std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
        case FamilyKind::clique_cone:
            return 1 + std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
        case FamilyKind::join:
            return family_order(spec.sub.at(0)) + family_order(spec.sub.at(1));
        default: return spec.n;
    }
}

namespace {

[[noreturn]] void reject(const std::string& what) { throw validation_error(what); }

void validate_parts(const std::vector<int>& parts, const char* label) {
    if (parts.empty()) reject(std::string(label) + " requires at least one part");
    for (int p : parts)
        if (p < 1) reject(std::string(label) + " part sizes must be >= 1");
}

}  // namespace

void validate_spec(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::kh:
            if (spec.relax) {
                if (spec.h < 1) reject("kh requires h >= 1");
                if (spec.n < spec.h) reject("kh requires n >= h");
            } else {
                if (spec.h < 3) reject("kh requires h >= 3");
                if (spec.n < spec.h + 1) reject("kh requires n >= h+1 (at least one pendant)");
            }
            break;
        case FamilyKind::kst_bridge:
            if (spec.relax) {
                if (spec.s < 1 || spec.t < 1) reject("kst_bridge requires s,t >= 1");
            } else if (spec.s < 2 || spec.t < 2) {
                reject("kst_bridge requires s >= 2 and t >= 2");
            }
            break;
        case FamilyKind::kst_glued:
            if (spec.relax) {
                if (spec.s < 1 || spec.t < 1) reject("kst_glued requires s,t >= 1");
            } else if (spec.s < 2 || spec.t < 2) {
                reject("kst_glued requires s >= 2 and t >= 2");
            }
            break;
        case FamilyKind::friendship:
            if (spec.relax) {
                if (spec.k < 1) reject("friendship requires k >= 1");
            } else if (spec.k < 2) {
                reject("friendship requires k >= 2");
            }
            break;
        case FamilyKind::complete:
        case FamilyKind::path:
            if (spec.n < 1) reject("order must be >= 1");
            break;
        case FamilyKind::cycle:
            if (spec.n < 3) reject("cycle requires n >= 3");
            break;
        case FamilyKind::star:
            if (spec.relax) {
                if (spec.n < 1) reject("star requires n >= 1");
            } else if (spec.n < 2) {
                reject("star requires n >= 2");
            }
            break;
        case FamilyKind::complete_multipartite:
            validate_parts(spec.parts, "complete_multipartite");
            if (!spec.relax && spec.parts.size() < 2)
                reject("complete_multipartite requires at least two parts (one part is edgeless)");
            break;
        case FamilyKind::clique_cone:
            validate_parts(spec.parts, "clique_cone");
            break;
        case FamilyKind::join:
            if (spec.sub.size() != 2) reject("join requires exactly two operand specs");
            validate_spec(spec.sub[0]);
            validate_spec(spec.sub[1]);
            break;
    }
    int order = family_order(spec);
    if (order < 1) reject("family order must be >= 1");
    if (order > max_vertices)
        throw capacity_error("family order " + std::to_string(order) + " exceeds the built-in limit of " +
                             std::to_string(max_vertices));
}

std::string family_name(const FamilySpec& spec) {
    auto parts_str = [&] {
        std::string s;
        for (std::size_t i = 0; i < spec.parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(spec.parts[i]);
        }
        return s;
    };
    switch (spec.kind) {
        case FamilyKind::kh:
            return "kh(n=" + std::to_string(spec.n) + ",h=" + std::to_string(spec.h) + ")";
        case FamilyKind::kst_bridge:
            return "kst-bridge(s=" + std::to_string(spec.s) + ",t=" + std::to_string(spec.t) + ")";
        case FamilyKind::kst_glued:
            return "kst-glued(s=" + std::to_string(spec.s) + ",t=" + std::to_string(spec.t) + ")";
        case FamilyKind::friendship: return "friendship(k=" + std::to_string(spec.k) + ")";
        case FamilyKind::complete: return "complete(n=" + std::to_string(spec.n) + ")";
        case FamilyKind::path: return "path(n=" + std::to_string(spec.n) + ")";
        case FamilyKind::cycle: return "cycle(n=" + std::to_string(spec.n) + ")";
        case FamilyKind::star: return "star(n=" + std::to_string(spec.n) + ")";
        case FamilyKind::complete_multipartite: return "multipartite(" + parts_str() + ")";
        case FamilyKind::clique_cone: return "cone(" + parts_str() + ")";
        case FamilyKind::join:
            return "join(" + family_name(spec.sub.at(0)) + "," + family_name(spec.sub.at(1)) + ")";
    }
    return "unknown";
}

namespace {

void add_clique(Graph& g, int first, int count) {
    for (int i = first; i < first + count; ++i)
        for (int j = i + 1; j < first + count; ++j) g.add_edge(i, j);
}

}  // namespace

Graph make_family(const FamilySpec& spec) {
    validate_spec(spec);
    const int n = family_order(spec);
    switch (spec.kind) {
        case FamilyKind::kh: {
            Graph g(n);
            add_clique(g, 0, spec.h);
            for (int p = spec.h; p < n; ++p) g.add_edge(spec.h - 1, p);
            return g;
        }
        case FamilyKind::kst_bridge: {
            Graph g(n);
            add_clique(g, 0, spec.s);
            add_clique(g, spec.s, spec.t);
            g.add_edge(spec.s - 1, spec.s);
            return g;
        }
        case FamilyKind::kst_glued: {
            Graph g(n);
            add_clique(g, 0, spec.s);
            // second clique reuses the cut vertex s-1
            for (int i = spec.s - 1; i < n; ++i)
                for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
            return g;
        }
        case FamilyKind::friendship: {
            Graph g(n);
            for (int i = 0; i < spec.k; ++i) {
                int a = 2 * i + 1, b = 2 * i + 2;
                g.add_edge(0, a);
                g.add_edge(0, b);
                g.add_edge(a, b);
            }
            return g;
        }
        case FamilyKind::complete: {
            Graph g(n);
            add_clique(g, 0, n);
            return g;
        }
        case FamilyKind::path: {
            Graph g(n);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case FamilyKind::cycle: {
            Graph g(n);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            g.add_edge(n - 1, 0);
            return g;
        }
        case FamilyKind::star: {
            Graph g(n);
            for (int i = 1; i < n; ++i) g.add_edge(0, i);
            return g;
        }
        case FamilyKind::complete_multipartite: {
            Graph g(n);
            std::vector<int> start;
            int acc = 0;
            for (int p : spec.parts) {
                start.push_back(acc);
                acc += p;
            }
            for (std::size_t a = 0; a < spec.parts.size(); ++a)
                for (std::size_t b = a + 1; b < spec.parts.size(); ++b)
                    for (int u = start[a]; u < start[a] + spec.parts[a]; ++u)
                        for (int v = start[b]; v < start[b] + spec.parts[b]; ++v) g.add_edge(u, v);
            return g;
        }
        case FamilyKind::clique_cone: {
            Graph g(n);
            int next = 1;
            for (int p : spec.parts) {
                add_clique(g, next, p);
                for (int v = next; v < next + p; ++v) g.add_edge(0, v);
                next += p;
            }
            return g;
        }
        case FamilyKind::join:
            return join(make_family(spec.sub[0]), make_family(spec.sub[1]));
    }
    throw unsupported_error("unhandled family kind");
}

Graph join(const Graph& g1, const Graph& g2) {
    if (g1.n < 1 || g2.n < 1) throw validation_error("join requires nonempty operands");
    if (g1.n + g2.n > max_vertices)
        throw capacity_error("join order " + std::to_string(g1.n + g2.n) + " exceeds the built-in limit of " +
                             std::to_string(max_vertices));
    Graph g(g1.n + g2.n);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(g1.n + u, g1.n + v);
    for (int u = 0; u < g1.n; ++u)
        for (int v = 0; v < g2.n; ++v) g.add_edge(u, g1.n + v);
    return g;
}

}  // namespace dspectra
