#include "dspectra/subgraph.hpp"

namespace dspectra {

namespace {

struct Search {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> map;        // pattern index -> host vertex
    std::uint64_t used = 0;      // host vertices already assigned

    bool extend(int i) {
        if (i == pattern.n) return true;
        for (int cand = 0; cand < host.n; ++cand) {
            std::uint64_t bit = std::uint64_t{1} << cand;
            if (used & bit) continue;
            if (host.degree(cand) < pattern.degree(i)) continue;
            bool ok = true;
            for (int j = 0; j < i; ++j) {
                if (pattern.has_edge(j, i) != host.has_edge(map[j], cand)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[i] = cand;
            used |= bit;
            if (extend(i + 1)) return true;
            used &= ~bit;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern) {
    if (pattern.n > host.n)
        throw contract_error("pattern order exceeds host order");
    Search s{host, pattern, std::vector<int>(static_cast<std::size_t>(pattern.n), -1)};
    if (s.extend(0)) return s.map;
    return std::nullopt;
}

}  // namespace dspectra
