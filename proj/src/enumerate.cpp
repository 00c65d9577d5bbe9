#include "dspectra/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <utility>

#include "dspectra/charpoly.hpp"
#include "dspectra/isomorphism.hpp"

namespace dspectra {

namespace {

constexpr int max_edge_bits = max_enumeration_order * (max_enumeration_order - 1) / 2;

constexpr std::uint64_t hash_seed = 0xcbf29ce484222325ull;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) { return splitmix64(h ^ v); }

// Monic characteristic polynomial of an n x n symmetric int64 matrix by the
// trace recurrence; coefficients land in c[0..n], constant term first. The
// caller certifies that every intermediate fits in int64 (see the bound
// check in build_scan_index).
void charpoly_int64(const std::int64_t* a, int n, std::int64_t* c) {
    std::array<std::int64_t, 49> m{}, am{};
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
    c[n] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::int64_t s = 0;
                for (int l = 0; l < n; ++l)
                    s += a[static_cast<std::size_t>(i) * n + l] *
                         m[static_cast<std::size_t>(l) * n + j];
                am[static_cast<std::size_t>(i) * n + j] = s;
            }
        std::int64_t tr = 0;
        for (int i = 0; i < n; ++i) tr += am[static_cast<std::size_t>(i) * n + i];
        if (tr % k != 0) throw contract_error("trace recurrence produced a non-integral step");
        c[n - k] = -(tr / k);
        if (k < n) {
            std::copy(am.begin(), am.begin() + n * n, m.begin());
            for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] += c[n - k];
        }
    }
}

// Per-mask kernel: build adjacency, reject disconnected graphs, run the
// all-pairs BFS, and compute the exact characteristic polynomial into
// c[0..n]. Pure int64; no allocation.
bool mask_connected(int n, std::uint32_t mask,
                    const std::array<std::pair<int, int>, max_edge_bits>& bits,
                    std::array<std::uint64_t, 7>& adj) {
    adj = {};
    for (std::uint32_t m = mask; m; m &= m - 1) {
        auto [u, v] = bits[static_cast<std::size_t>(std::countr_zero(m))];
        adj[static_cast<std::size_t>(u)] |= 1ull << v;
        adj[static_cast<std::size_t>(v)] |= 1ull << u;
    }
    const std::uint64_t all = (1ull << n) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[static_cast<std::size_t>(v)];
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == all;
}

bool connected_charpoly_int64(int n, std::uint32_t mask,
                              const std::array<std::pair<int, int>, max_edge_bits>& bits,
                              std::int64_t* c) {
    std::array<std::uint64_t, 7> adj;
    if (!mask_connected(n, mask, bits, adj)) return false;

    std::int64_t d[49] = {};
    for (int s = 0; s < n; ++s) {
        std::uint64_t vis = 1ull << s, fr = 1ull << s;
        std::int64_t dist = 0;
        while (fr) {
            ++dist;
            std::uint64_t nx = 0;
            while (fr) {
                int v = std::countr_zero(fr);
                fr &= fr - 1;
                nx |= adj[static_cast<std::size_t>(v)];
            }
            nx &= ~vis;
            for (std::uint64_t t = nx; t; t &= t - 1)
                d[static_cast<std::size_t>(s) * n + std::countr_zero(t)] = dist;
            vis |= nx;
            fr = nx;
        }
    }

    charpoly_int64(d, n, c);
    return true;
}

std::uint64_t coeff_hash(const std::int64_t* c, int n) {
    std::uint64_t h = hash_seed;
    for (int k = 0; k <= n; ++k) h = mix(h, static_cast<std::uint64_t>(c[k]));
    return mix(h, static_cast<std::uint64_t>(n) + 1);
}

bool scan_mask(int n, std::uint32_t mask, const std::array<std::pair<int, int>, max_edge_bits>& bits,
               std::uint64_t& hash_out) {
    std::int64_t c[8];
    if (!connected_charpoly_int64(n, mask, bits, c)) return false;
    hash_out = coeff_hash(c, n);
    return true;
}

void check_order_capacity(int n) {
    if (n < 1) throw validation_error("scan order must be at least 1");
    if (n > max_enumeration_order)
        throw capacity_error(
            "exhaustive enumeration is capped at order 7; supply an explicit graph list instead");
    // int64 safety for the trace recurrence: every intermediate is bounded
    // by n * 2^n * R^n with R <= (n-1)^2 the largest possible distance row
    // sum, and that stays far below 2^62 for all orders up to the cap.
    long double worst = static_cast<long double>(n) * (1ull << n);
    for (int k = 0; k < n; ++k) worst *= static_cast<long double>((n - 1) * (n - 1));
    if (worst >= 4.6e18L) throw contract_error("int64 bound violated for this order");
}

std::array<std::pair<int, int>, max_edge_bits> pair_table(int n) {
    std::array<std::pair<int, int>, max_edge_bits> bits{};
    int b = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) bits[static_cast<std::size_t>(b++)] = {u, v};
    return bits;
}

// For each of the n! vertex permutations, where every edge slot lands.
std::vector<std::array<std::uint8_t, max_edge_bits>> perm_bit_maps(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::array<std::uint8_t, max_edge_bits>> maps;
    do {
        std::array<std::uint8_t, max_edge_bits> mp{};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int pu = p[static_cast<std::size_t>(u)], pv = p[static_cast<std::size_t>(v)];
                mp[static_cast<std::size_t>(edge_bit(n, u, v))] =
                    static_cast<std::uint8_t>(edge_bit(n, std::min(pu, pv), std::max(pu, pv)));
            }
        maps.push_back(mp);
    } while (std::next_permutation(p.begin(), p.end()));
    return maps;
}

std::uint32_t apply_bit_map(std::uint32_t mask, const std::array<std::uint8_t, max_edge_bits>& mp) {
    std::uint32_t out = 0;
    for (std::uint32_t m = mask; m; m &= m - 1)
        out |= 1u << mp[static_cast<std::size_t>(std::countr_zero(m))];
    return out;
}

// Partition a relabeling-closed set of edge masks (ascending) into
// isomorphism classes by generating orbits. Fills class_of with the class
// index of each input position.
std::vector<IsoClass> orbit_partition(const std::vector<std::uint32_t>& masks,
                                      const std::vector<std::array<std::uint8_t, max_edge_bits>>& maps,
                                      std::vector<int>& class_of) {
    std::vector<IsoClass> classes;
    class_of.assign(masks.size(), -1);
    std::vector<std::uint32_t> images;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        if (class_of[i] >= 0) continue;
        const int id = static_cast<int>(classes.size());
        images.clear();
        for (const auto& mp : maps) images.push_back(apply_bit_map(masks[i], mp));
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        for (std::uint32_t img : images) {
            auto it = std::lower_bound(masks.begin(), masks.end(), img);
            if (it == masks.end() || *it != img)
                throw contract_error("scan bucket is not closed under relabeling");
            class_of[static_cast<std::size_t>(it - masks.begin())] = id;
        }
        classes.push_back({masks[i], images.size()});
    }
    return classes;
}

}  // namespace

int edge_bit(int n, int u, int v) {
    if (u < 0 || v <= u || v >= n) throw validation_error("edge_bit requires 0 <= u < v < n");
    return u * (n - 1) - u * (u - 1) / 2 + (v - u - 1);
}

Graph graph_from_edge_mask(int n, std::uint32_t mask) {
    if (n < 1 || n > max_enumeration_order)
        throw validation_error("edge masks cover orders 1 through 7");
    const int m = n * (n - 1) / 2;
    if (m < 32 && (mask >> m) != 0) throw validation_error("edge mask has bits beyond C(n,2)");
    Graph g(n);
    const auto bits = pair_table(n);
    for (std::uint32_t t = mask; t; t &= t - 1) {
        auto [u, v] = bits[static_cast<std::size_t>(std::countr_zero(t))];
        g.add_edge(u, v);
    }
    return g;
}

std::uint32_t edge_mask_of(const Graph& g) {
    if (g.n > max_enumeration_order)
        throw capacity_error("edge masks cover orders 1 through 7");
    std::uint32_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= 1u << edge_bit(g.n, u, v);
    return mask;
}

std::uint64_t poly_hash(const IntPolynomial& p) {
    std::uint64_t h = hash_seed;
    for (int k = 0; k <= p.degree(); ++k) {
        const BigInt& c = p.coeff(k);
        if (c.fits_slong_p()) {
            h = mix(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(c.get_si())));
        } else {
            for (char ch : c.get_str()) h = mix(h, static_cast<std::uint8_t>(ch));
        }
    }
    return mix(h, static_cast<std::uint64_t>(p.degree()) + 1);
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& visit) {
    check_order_capacity(n);
    const int mbits = n * (n - 1) / 2;
    const std::uint64_t total = 1ull << mbits;
    const auto bits = pair_table(n);
    std::array<std::uint64_t, 7> adj;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (mask_connected(n, static_cast<std::uint32_t>(mask), bits, adj))
            visit(graph_from_edge_mask(n, static_cast<std::uint32_t>(mask)));
}

void for_each_connected(int n,
                        const std::function<void(std::uint32_t, const std::int64_t*)>& visit) {
    check_order_capacity(n);
    const int mbits = n * (n - 1) / 2;
    const std::uint64_t total = 1ull << mbits;
    const auto bits = pair_table(n);
    std::int64_t c[8];
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (connected_charpoly_int64(n, static_cast<std::uint32_t>(mask), bits, c))
            visit(static_cast<std::uint32_t>(mask), c);
}

ScanIndex build_scan_index(int n, Threading mode) {
    check_order_capacity(n);
    const int mbits = n * (n - 1) / 2;
    const std::uint64_t total = 1ull << mbits;
    const auto bits = pair_table(n);

    ScanIndex idx;
    idx.n = n;
    idx.total_masks = total;

    std::vector<ScanEntry> entries;
    bool ran_parallel = false;
#ifdef _OPENMP
    if (mode == Threading::openmp) {
        ran_parallel = true;
#pragma omp parallel
        {
            std::vector<ScanEntry> local;
#pragma omp for schedule(dynamic, 4096) nowait
            for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
                std::uint64_t h;
                if (scan_mask(n, static_cast<std::uint32_t>(mask), bits, h))
                    local.push_back({h, static_cast<std::uint32_t>(mask)});
            }
#pragma omp critical
            entries.insert(entries.end(), local.begin(), local.end());
        }
    }
#else
    (void)mode;
#endif
    if (!ran_parallel) {
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::uint64_t h;
            if (scan_mask(n, static_cast<std::uint32_t>(mask), bits, h))
                entries.push_back({h, static_cast<std::uint32_t>(mask)});
        }
    }

    std::sort(entries.begin(), entries.end());
    idx.connected_count = entries.size();
    idx.entries = std::move(entries);
    return idx;
}

CensusReport cospectral_census(const ScanIndex& index) {
    CensusReport report;
    report.n = index.n;
    report.connected_labeled = index.connected_count;
    const auto maps = perm_bit_maps(index.n);

    std::uint64_t labeled_seen = 0;
    std::vector<std::uint32_t> masks;
    std::vector<int> class_of;
    const auto& e = index.entries;
    for (std::size_t lo = 0; lo < e.size();) {
        std::size_t hi = lo;
        while (hi < e.size() && e[hi].hash == e[lo].hash) ++hi;
        masks.clear();
        for (std::size_t i = lo; i < hi; ++i) masks.push_back(e[i].mask);
        std::vector<IsoClass> classes = orbit_partition(masks, maps, class_of);
        report.connected_classes += classes.size();
        for (const IsoClass& c : classes) labeled_seen += c.labeled_count;

        if (classes.size() == 1) {
            // a lone isomorphism class cannot hide a digest collision
            ++report.distinct_polynomials;
        } else {
            // confirm against exact coefficients; a collision of different
            // polynomials is split apart here
            std::vector<IntPolynomial> polys;
            polys.reserve(classes.size());
            for (const IsoClass& c : classes)
                polys.push_back(dist_charpoly(graph_from_edge_mask(index.n, c.min_mask)));
            std::vector<std::vector<std::size_t>> groups;
            for (std::size_t i = 0; i < classes.size(); ++i) {
                bool placed = false;
                for (auto& grp : groups)
                    if (polys[grp.front()] == polys[i]) {
                        grp.push_back(i);
                        placed = true;
                        break;
                    }
                if (!placed) groups.push_back({i});
            }
            report.distinct_polynomials += groups.size();
            for (const auto& grp : groups) {
                if (grp.size() < 2) continue;
                CospectralClass cls;
                cls.poly = polys[grp.front()];
                for (std::size_t i : grp) cls.members.push_back(classes[i]);
                std::sort(cls.members.begin(), cls.members.end(),
                          [](const IsoClass& a, const IsoClass& b) { return a.min_mask < b.min_mask; });
                report.nontrivial.push_back(std::move(cls));
            }
        }
        lo = hi;
    }
    if (labeled_seen != index.connected_count)
        throw contract_error("orbit partition lost or duplicated labeled graphs");
    std::sort(report.nontrivial.begin(), report.nontrivial.end(),
              [](const CospectralClass& a, const CospectralClass& b) {
                  return a.members.front().min_mask < b.members.front().min_mask;
              });
    return report;
}

CensusReport cospectral_census(int n, Threading mode) {
    return cospectral_census(build_scan_index(n, mode));
}

DsReport ds_check(const Graph& g, std::string label, const ScanIndex& index) {
    if (!is_connected(g)) throw validation_error("distance spectra require a connected graph");
    if (g.n != index.n) throw contract_error("scan index order does not match the target graph");

    DsReport report;
    report.target = std::move(label);
    report.search_space = "built-in exhaustive enumeration, order " + std::to_string(index.n) +
                          " (" + std::to_string(index.connected_count) + " connected graphs)";
    report.n = g.n;
    report.candidates = index.connected_count;
    report.poly = dist_charpoly(g);

    const std::uint64_t h = poly_hash(report.poly);
    const auto& e = index.entries;
    auto lo = std::lower_bound(e.begin(), e.end(), h,
                               [](const ScanEntry& s, std::uint64_t x) { return s.hash < x; });
    auto hi = std::upper_bound(e.begin(), e.end(), h,
                               [](std::uint64_t x, const ScanEntry& s) { return x < s.hash; });
    std::vector<std::uint32_t> masks;
    for (auto it = lo; it != hi; ++it) masks.push_back(it->mask);

    const std::uint32_t target_mask = edge_mask_of(g);
    auto pos = std::lower_bound(masks.begin(), masks.end(), target_mask);
    if (pos == masks.end() || *pos != target_mask)
        throw contract_error("exhaustive scan failed to find the target graph");

    const auto maps = perm_bit_maps(g.n);
    std::vector<int> class_of;
    std::vector<IsoClass> classes = orbit_partition(masks, maps, class_of);
    const int target_class = class_of[static_cast<std::size_t>(pos - masks.begin())];

    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (static_cast<int>(i) == target_class) {
            report.target_orbit = classes[i].labeled_count;
            report.labeled_matches += classes[i].labeled_count;
            continue;
        }
        // drop digest collisions: only exact coefficient matches count
        Graph rep = graph_from_edge_mask(g.n, classes[i].min_mask);
        if (dist_charpoly(rep) == report.poly) {
            report.labeled_matches += classes[i].labeled_count;
            report.mates.push_back(rep);
        }
    }
    report.verdict = report.mates.empty() ? DsVerdict::ds_at_this_scale : DsVerdict::refuted;
    return report;
}

DsReport ds_check(const FamilySpec& spec, const ScanIndex& index) {
    validate_spec(spec);
    const int n = family_order(spec);
    if (n > max_enumeration_order)
        throw capacity_error("exhaustive verification is capped at order 7");
    return ds_check(make_family(spec), family_name(spec), index);
}

DsReport ds_check(const FamilySpec& spec, Threading mode) {
    validate_spec(spec);
    const int n = family_order(spec);
    if (n > max_enumeration_order)
        throw capacity_error("exhaustive verification is capped at order 7");
    return ds_check(spec, build_scan_index(n, mode));
}

ListCensusReport census_of_graphs(const std::vector<Graph>& graphs) {
    ListCensusReport report;
    report.graphs = graphs.size();
    if (graphs.empty()) return report;
    report.n = graphs.front().n;
    for (const Graph& g : graphs)
        if (g.n != report.n) throw contract_error("a census requires graphs of one common order");

    std::vector<IntPolynomial> polys;
    polys.reserve(graphs.size());
    for (const Graph& g : graphs) polys.push_back(dist_charpoly(g));

    // group input indices by exact polynomial, preserving first-seen order
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
        bool placed = false;
        for (auto& grp : groups)
            if (polys[static_cast<std::size_t>(grp.front())] == polys[static_cast<std::size_t>(i)]) {
                grp.push_back(i);
                placed = true;
                break;
            }
        if (!placed) groups.push_back({i});
    }
    report.distinct_polynomials = groups.size();

    for (const auto& grp : groups) {
        // split the group into isomorphism classes
        std::vector<std::vector<int>> classes;
        for (int idx : grp) {
            bool placed = false;
            for (auto& cls : classes)
                if (are_isomorphic(graphs[static_cast<std::size_t>(cls.front())],
                                   graphs[static_cast<std::size_t>(idx)])) {
                    cls.push_back(idx);
                    placed = true;
                    break;
                }
            if (!placed) classes.push_back({idx});
        }
        if (classes.size() < 2) continue;
        ListCensusClass cls;
        cls.poly = polys[static_cast<std::size_t>(grp.front())];
        cls.members = std::move(classes);
        report.nontrivial.push_back(std::move(cls));
    }
    return report;
}

}  // namespace dspectra
