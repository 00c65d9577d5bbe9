#include "dspectra/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "dspectra/graph6.hpp"

namespace dspectra {

double json_round(double v) {
    double r = std::round(v * 1e6) / 1e6;
    if (r == 0.0) r = 0.0;  // fold -0.0 into +0.0
    return r;
}

std::string float_token(double v) {
    if (v == 0.0) return "0.0";
    char buf[48];
    if (std::abs(v) < 1e-5) {
        std::snprintf(buf, sizeof buf, "%.6e", v);
        std::string s(buf);
        const std::size_t e = s.find('e');
        std::string mant = s.substr(0, e);
        while (mant.back() == '0') mant.pop_back();
        if (mant.back() == '.') mant.pop_back();
        return mant + s.substr(e);
    }
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s += '0';
    return s;
}

namespace {

void write_json(const json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += inner + json(key).dump() + ": ";
                write_json(value, out, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const json& value : j) {
                if (!first) out += ",\n";
                first = false;
                out += inner;
                write_json(value, out, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case json::value_t::number_float:
            out += float_token(j.get<double>());
            return;
        default:
            out += j.dump();  // strings (escaped), integers, booleans, null
            return;
    }
}

}  // namespace

std::string json_text(const json& doc) {
    std::string out;
    write_json(doc, out, 0);
    return out;
}

std::string verdict_name(DsVerdict v) {
    switch (v) {
        case DsVerdict::ds_at_this_scale: return "DS-at-this-scale";
        case DsVerdict::refuted: return "refuted";
        case DsVerdict::inconclusive: return "inconclusive";
    }
    throw contract_error("unknown verdict");
}

std::string context_name(ForbiddenContext c) {
    switch (c) {
        case ForbiddenContext::clique_families: return "clique-families";
        case ForbiddenContext::friendship_family: return "friendship-family";
    }
    throw contract_error("unknown forbidden-subgraph context");
}

json json_of(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const BigInt& c : p.coeffs()) coeffs.push_back(to_string(c));
    return json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

json json_of(const Spectrum& s) {
    json values = json::array();
    for (double v : s.values) values.push_back(json_round(v));
    return json{{"values", std::move(values)}, {"tol", s.tol}};
}

json json_of(const Interval& iv) {
    return json{{"lo", iv.lo.to_string()}, {"hi", iv.hi.to_string()}};
}

json json_of(const RootBracketReport& r) {
    json intervals = json::array();
    for (const IntervalCount& c : r.intervals) {
        json e{{"interval", json_of(c.iv)},
               {"distinct", c.distinct},
               {"with_multiplicity", c.with_multiplicity}};
        if (c.expect_distinct) e["expect_distinct"] = *c.expect_distinct;
        if (c.expect_with_multiplicity)
            e["expect_with_multiplicity"] = *c.expect_with_multiplicity;
        e["ok"] = c.ok;
        intervals.push_back(std::move(e));
    }
    return json{{"poly", json_of(r.poly)}, {"intervals", std::move(intervals)}, {"pass", r.pass}};
}

json json_of(const SignReport& r) {
    json checkpoints = json::array();
    for (const SignCheckpoint& c : r.checkpoints)
        checkpoints.push_back(json{{"point", to_string(c.point)},
                                   {"value", to_string(c.value)},
                                   {"expected_sign", c.expected_sign},
                                   {"computed_sign", c.computed_sign},
                                   {"ok", c.ok}});
    return json{{"family", r.family},
                {"factor", json_of(r.factor)},
                {"checkpoints", std::move(checkpoints)},
                {"pass", r.pass}};
}

json json_of(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.n}, {"edges", std::move(edges)}, {"graph6", graph6_encode(g)}};
}

json json_of(const DsReport& r) {
    json mates = json::array();
    for (const Graph& m : r.mates) mates.push_back(graph6_encode(m));
    return json{{"target", r.target},
                {"search_space", r.search_space},
                {"n", r.n},
                {"candidates", r.candidates},
                {"labeled_matches", r.labeled_matches},
                {"target_orbit", r.target_orbit},
                {"poly", json_of(r.poly)},
                {"mates", std::move(mates)},
                {"verdict", verdict_name(r.verdict)},
                {"determined", r.determined()}};
}

json json_of(const CensusReport& r) {
    json nontrivial = json::array();
    for (const CospectralClass& cls : r.nontrivial) {
        json members = json::array();
        for (const IsoClass& m : cls.members)
            members.push_back(json{{"graph6", graph6_encode(graph_from_edge_mask(r.n, m.min_mask))},
                                   {"labeled_count", m.labeled_count}});
        nontrivial.push_back(json{{"poly", json_of(cls.poly)}, {"members", std::move(members)}});
    }
    return json{{"n", r.n},
                {"connected_labeled", r.connected_labeled},
                {"connected_classes", r.connected_classes},
                {"distinct_polynomials", r.distinct_polynomials},
                {"nontrivial_count", r.nontrivial.size()},
                {"nontrivial", std::move(nontrivial)}};
}

json json_of(const ListCensusReport& r) {
    json nontrivial = json::array();
    for (const ListCensusClass& cls : r.nontrivial)
        nontrivial.push_back(json{{"poly", json_of(cls.poly)}, {"members", cls.members}});
    return json{{"n", r.n},
                {"graphs", r.graphs},
                {"distinct_polynomials", r.distinct_polynomials},
                {"nontrivial_count", r.nontrivial.size()},
                {"nontrivial", std::move(nontrivial)}};
}

json json_of(const IngestResult& r) {
    return json{{"graphs", r.graphs.size()},
                {"lines_read", r.lines_read},
                {"parse_warnings", r.parse_warnings},
                {"disconnected_warnings", r.disconnected_warnings},
                {"notes", r.notes}};
}

json json_of(const ForbiddenReport& r) {
    json hits = json::array();
    for (const ForbiddenHit& h : r.hits)
        hits.push_back(json{{"fixture", h.fixture}, {"witness", h.witness}});
    json bounds = json::array();
    for (const BoundCheck& b : r.bounds)
        bounds.push_back(json{{"fixture", b.fixture}, {"bound", b.bound}, {"holds", b.holds}});
    return json{{"context", context_name(r.context)},
                {"clean", r.clean},
                {"hits", std::move(hits)},
                {"bounds", std::move(bounds)},
                {"bounds_ok", r.bounds_ok}};
}

json json_of(const TableReport& r) {
    json entries = json::array();
    for (const TableEntry& e : r.entries) {
        json row{{"fixture", e.fixture},
                 {"index", e.index},
                 {"printed", json_round(e.printed)},
                 {"computed", json_round(e.computed)},
                 {"ok", e.ok}};
        if (!e.note.empty()) row["note"] = e.note;
        entries.push_back(std::move(row));
    }
    return json{{"tol", r.tol}, {"entries", std::move(entries)}, {"all_ok", r.all_ok}};
}

json json_of(const EdgeDichotomyReport& r) {
    json entries = json::array();
    for (const EdgeDichotomyEntry& e : r.entries) {
        json row{{"pair", e.pair_index},
                 {"applicable", e.applicable},
                 {"diam_first", e.diam_first},
                 {"diam_second", e.diam_second},
                 {"edges_first", e.edges_first},
                 {"edges_second", e.edges_second}};
        if (e.applicable) row["ok"] = e.ok;
        if (!e.note.empty()) row["note"] = e.note;
        entries.push_back(std::move(row));
    }
    return json{{"checked", r.checked},
                {"skipped", r.skipped},
                {"entries", std::move(entries)},
                {"all_ok", r.all_ok}};
}

json json_of(const MultipartiteReport& r) {
    return json{{"complement_is_clique_union", r.complement_is_clique_union},
                {"k", r.k},
                {"parts", r.parts},
                {"structural", r.structural},
                {"spectral", r.spectral},
                {"minus_two_multiplicity", r.minus_two_multiplicity},
                {"lambda_min", json_round(r.lambda_min)},
                {"agree", r.agree}};
}

}  // namespace dspectra
