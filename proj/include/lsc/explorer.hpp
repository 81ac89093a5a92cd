#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsc/crystal.hpp"
#include "lsc/path.hpp"

namespace lsc {

// f_i-arrow between node indices.
struct GraphEdge {
  std::size_t src;
  int i;
  std::size_t dst;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

// The explored portion of a path crystal: all elements within `depth`
// operator applications of the seed. Nodes are sorted by canonical string,
// so two explorations with equal flags produce identical values and
// byte-identical exports.
struct CrystalGraph {
  CartanMatrix cm;
  Weight shape;
  LSPath seed;
  std::int64_t depth = 0;
  std::vector<LSPath> nodes;                       // sorted by canonical string
  std::vector<GraphEdge> edges;                    // sorted
  std::map<Weight, std::int64_t> weight_tally;

  // BFS parentage: for each node, the node it was first reached from and the
  // move label ("e1","e2","f1","f2"); the seed has parent -1. Exploration
  // artifacts, not part of the serialized schema.
  std::vector<std::ptrdiff_t> parent;
  std::vector<std::string> parent_move;

  std::optional<std::size_t> find(const LSPath& pi) const;

  // Every node walks back to the seed through the parent pointers.
  bool parentage_connected() const;
};

// Breadth-first closure of the seed under all four operators, deduplicated
// by canonical form. The seed is validated up front and the first
// `revalidate_sample` nodes (in sorted order) are re-validated as a
// soundness audit. Finite crystals reach a fixed point before any cap.
CrystalGraph explore(const CartanMatrix& cm, const LSPath& seed, std::int64_t depth,
                     const OrderConfig& cfg, std::size_t revalidate_sample = 16);

std::map<Weight, std::int64_t> weight_multiplicities(const CrystalGraph& g);

// Nodes passing the bounded extremality check.
std::vector<LSPath> extremal_scan(const CrystalGraph& g, std::int64_t word_bound);

// For all canonical word pairs up to the bound:
// S_x pi_lambda = S_y pi_lambda iff x lambda = y lambda.
bool orbit_injectivity_check(const CartanMatrix& cm, std::int64_t word_bound);

// Deterministic serializations. JSON schema:
// {cartan:{a1,a2}, shape, depth, nodes:[{id,path,wt}], edges:[{src,i,dst}], tallies}.
// Weight coordinates are decimal strings (they are arbitrary-precision).
std::string export_json(const CrystalGraph& g);
std::string export_dot(const CrystalGraph& g);

// Inverse of export_json on the serialized fields. The seed and parentage
// are not part of the schema; the parsed graph carries the first node as its
// seed and empty parentage.
CrystalGraph parse_graph_json(std::string_view text);

// Equality on the serialized schema (cartan, shape, depth, nodes, edges,
// tallies).
bool same_serialized_graph(const CrystalGraph& a, const CrystalGraph& b);

// Pass/fail report shared by the verification suites and the CLI.
struct CheckReport {
  struct Line {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Line> lines;

  void add(std::string name, bool pass, std::string detail = "");
  bool all_pass() const;
};

// Operator axioms over the explored node set: raise/lower inversion, weight
// bookkeeping, phi - eps = <wt, alpha_i^vee>, eps/phi equal to max operator
// powers, integral local minima.
CheckReport verify_operators(const CartanMatrix& cm, std::int64_t depth,
                             const OrderConfig& cfg);

// Orbit-order sanity on W.lambda up to the word bound: antisymmetry,
// transitivity, monotonicity under bound enlargement, and independent
// re-verification of every sigma-chain certificate. Also logs (never
// asserts) how comparability relates to word length.
CheckReport verify_order(const CartanMatrix& cm, std::int64_t word_bound,
                         const OrderConfig& cfg);

// Extremal structure: the scan returns exactly the straight orbit paths in
// the graph, each is a Weyl translate of the seed, Weyl translates stay
// extremal, and the orbit injectivity biconditional holds.
CheckReport verify_extremal(const CartanMatrix& cm, std::int64_t depth,
                            std::int64_t word_bound, const OrderConfig& cfg);

// Similarity identities for every explored node, m in {2,3}, plus the
// composition diagram for (m,n) = (2,2).
CheckReport verify_similarity(const CartanMatrix& cm, std::int64_t depth,
                              const OrderConfig& cfg);

}  // namespace lsc
