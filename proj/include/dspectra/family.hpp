#pragma once

#include <string>
#include <vector>

#include "dspectra/graph.hpp"

namespace dspectra {

// The constructible graph families. Beyond the four headline families this
// covers the standard graphs used as building blocks and comparison targets,
// the complete multipartite graphs, the clique cone K_1 joined to a disjoint
// union of cliques (friendship graphs are the all-parts-2 case), and the
// complete product (join) of two nested specs.
enum class FamilyKind {
    kh,                     // clique K_h with n-h pendant edges at one clique vertex
    kst_bridge,             // K_s and K_t connected by a bridge edge, n = s+t
    kst_glued,              // K_s and K_t sharing one vertex, n = s+t-1
    friendship,             // k triangles sharing a hub, n = 2k+1
    complete,               // K_n
    path,                   // P_n
    cycle,                  // C_n
    star,                   // S_n = K_{1,n-1}
    complete_multipartite,  // parts n_1..n_k, all cross-part edges
    clique_cone,            // K_1 joined to K_{n_1} + ... + K_{n_k}, n = 1 + sum
    join,                   // complete product of two nested specs
};

// Tagged family identifier. Parameter validation follows the source
// definitions by default (kh: h >= 3, n >= h+1; bridge/glued: s,t >= 2;
// friendship: k >= 2; cycle: n >= 3; star: n >= 2; multipartite: >= 2 parts);
// `relax` loosens those bounds to whatever still yields a graph, for
// exploratory use only. DS verification always validates strictly.
struct FamilySpec {
    FamilyKind kind = FamilyKind::complete;
    int n = 0, h = 0, s = 0, t = 0, k = 0;
    std::vector<int> parts;        // complete_multipartite / clique_cone
    std::vector<FamilySpec> sub;   // join: exactly two
    bool relax = false;

    static FamilySpec kh(int n, int h);
    static FamilySpec bridge(int s, int t);
    static FamilySpec glued(int s, int t);
    static FamilySpec friendship(int k);
    static FamilySpec complete(int n);
    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec star(int n);
    static FamilySpec multipartite(std::vector<int> parts);
    static FamilySpec cone(std::vector<int> parts);
    static FamilySpec join_of(FamilySpec a, FamilySpec b);

    FamilySpec relaxed() const;
};

// Order of the graph the spec describes (computing it never requires
// building the graph).
int family_order(const FamilySpec& spec);

// Throws validation_error naming the violated constraint, or capacity_error
// when the order exceeds the representation bound.
void validate_spec(const FamilySpec& spec);

std::string family_name(const FamilySpec& spec);

// Deterministic labeling, fixed so fixtures and reports are reproducible:
//   kh            clique on 0..h-1, pendants h..n-1 all attached at vertex h-1
//   kst_bridge    K_s on 0..s-1, K_t on s..n-1, bridge edge {s-1, s}
//   kst_glued     K_s on 0..s-1, K_t on {s-1} u {s..n-1}; cut vertex s-1
//   friendship    hub 0, triangle i on {2i+1, 2i+2}
//   complete/path/cycle  natural order, cycle closes n-1 ~ 0
//   star          center 0
//   multipartite  parts occupy consecutive blocks in the given order
//   clique_cone   hub 0, clique i occupies the next consecutive block
//   join          left operand keeps its labels, right operand shifts by n1
Graph make_family(const FamilySpec& spec);

// Complete product: disjoint union plus all edges between the two sides.
Graph join(const Graph& g1, const Graph& g2);

}  // namespace dspectra
