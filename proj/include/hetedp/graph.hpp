#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hetedp/kernels.hpp"
#include "hetedp/matrix.hpp"
#include "hetedp/rng.hpp"

namespace hetedp::graph {

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  bool operator==(const Edge& o) const { return src == o.src && dst == o.dst; }
};

struct RelationSchema {
  std::string name;
  std::string src_type;
  std::string dst_type;
};

// Alternating node-type / relation-type sequence a1 -r1- a2 ... aN.
struct MetaPath {
  std::string name;
  std::vector<std::string> node_types;  // length N >= 1
  std::vector<std::string> relations;   // length N-1
};

// Typed multigraph with an entity map (node -> type, implicit in the per-type
// storage) and relation map (edge -> relation, implicit in the per-relation
// storage). Feature matrices are per node type; a 0-column matrix means the
// type carries no raw attributes and is treated as one-hot downstream.
struct HeteroGraph {
  std::vector<std::string> types;
  std::vector<RelationSchema> relations;
  std::vector<MetaPath> metapaths;

  std::vector<std::vector<std::string>> ids;  // per type, dense local index
  std::vector<Matrix> features;               // per type, rows match ids
  std::vector<std::vector<int>> labels;       // per type; empty if unlabeled
  std::vector<std::vector<Edge>> edges;       // per relation, local indices

  // derived lookups, rebuilt by finalize()
  std::vector<std::unordered_map<std::string, std::size_t>> id_index;
  std::unordered_map<std::string, std::size_t> type_index;
  std::unordered_map<std::string, std::size_t> relation_index;

  void finalize();

  std::size_t type_of(const std::string& name) const;
  std::size_t relation_of(const std::string& name) const;
  std::size_t num_nodes(std::size_t t) const { return ids[t].size(); }
  std::size_t total_nodes() const;
  std::size_t global_offset(std::size_t t) const;

  // Raw features, or the one-hot identity for attribute-free types.
  Matrix effective_features(std::size_t t) const;

  // Per-relation adjacency, forward (src side indexes) or reverse.
  Csr relation_csr(std::size_t r, bool forward) const;

  // Simple undirected graph over all nodes (global ids), all relations
  // collapsed. Used by the structural-signature machinery.
  Csr union_csr() const;
};

struct Violation {
  std::string kind;  // dangling_endpoint, signature_mismatch, duplicate_node_id, feature_rows
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const HeteroGraph& g);

// Homogeneous graph over the meta-path's endpoint type: one edge per node
// pair joined by at least one complete walk. Walks are enumerated
// exhaustively; self-pairs are dropped and duplicates collapsed. Nodes left
// isolated get a self-loop so downstream attention is defined.
struct SemanticSubgraph {
  std::string metapath_name;
  std::size_t node_type = 0;                          // index into g.types
  std::vector<std::pair<std::size_t, std::size_t>> edge_pairs;  // u < w
  std::vector<std::size_t> self_loops;                // isolated nodes
  Csr adj;                                            // includes self-loops
};

bool metapath_schema_valid(const HeteroGraph& g, const MetaPath& m,
                           std::string* why = nullptr);

SemanticSubgraph extract_semantic_subgraph(const HeteroGraph& g,
                                           const MetaPath& m);

struct EdgeSplit {
  std::string relation;
  std::uint64_t seed = 0;
  std::vector<Edge> train, val, test;
  std::vector<Edge> neg_val, neg_test;
};

// Deterministic split of one relation's edges into train/val/test plus
// sampled type-correct negative pairs (one negative per held-out positive).
EdgeSplit split_edges(const HeteroGraph& g, const std::string& relation,
                      double train_ratio, double val_ratio, double test_ratio,
                      std::uint64_t seed);

// --- dataset directory layout -------------------------------------------
// schema.cfg       node_type NAME | relation NAME SRC DST |
//                  metapath NAME T1 R1 T2 [R2 T3 ...]
// nodes_<type>.tsv     id [\t feature ...]
// edges_<rel>.tsv      src_id \t dst_id
// labels_<type>.tsv    id \t label          (optional)
// split_<rel>_<seed>.tsv  src_id \t dst_id \t tag
// Tab-delimited UTF-8; '#' starts a comment line.

HeteroGraph load_dataset(const std::string& dir);
void write_dataset(const HeteroGraph& g, const std::string& dir);

void write_split(const HeteroGraph& g, const EdgeSplit& s,
                 const std::string& path);
EdgeSplit load_split(const HeteroGraph& g, const std::string& path);

// Errors: ingestion/validation problems surface as these.
struct DatasetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SplitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- bundled synthetic benchmark graph -----------------------------------
// Three node types (user, item, tag), two relations (user-item, item-tag),
// planted communities shared across types, Gaussian community features,
// community labels attached to every type.
struct SyntheticConfig {
  std::size_t users = 120;
  std::size_t items = 120;
  std::size_t tags = 60;
  std::size_t communities = 4;
  std::size_t feature_dim = 8;
  double p_intra_ui = 0.40;  // user-item edge prob within a community
  double p_inter_ui = 0.02;
  double p_intra_it = 0.30;  // item-tag
  double p_inter_it = 0.01;
  std::uint64_t seed = 7;
};

HeteroGraph make_synthetic(const SyntheticConfig& cfg);

}  // namespace hetedp::graph
