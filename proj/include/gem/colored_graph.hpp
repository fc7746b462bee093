#ifndef GEM_COLORED_GRAPH_HPP
#define GEM_COLORED_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace gem {

enum class Errc {
  LoopEdge,
  ColorClash,
  ColorOutOfRange,
  NotRegular,
  Disconnected,
  NotContracted,
  NotBoundaryRegular,
  AmbiguousMissingColor,
  IsomorphismMismatch,
  PreconditionViolated,
  ConstructionInvalid,
  BadParameter,
  BadColors,
  ParseError,
  ValidationError,
  UnsupportedParams,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct Edge {
  int u, v, color;  // u < v in vertex-list order
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v, a.color) <=> std::tie(b.u, b.v, b.color);
  }
};

// A properly edge-colored multigraph on colors 0..n-1. Per color the edge
// set is a partial matching; loops are forbidden, parallel edges of distinct
// colors are allowed. Immutable after construction.
class ColoredGraph {
 public:
  ColoredGraph(int color_count, std::vector<std::string> vertex_names,
               const std::vector<std::tuple<int, int, int>>& edges);

  static ColoredGraph build(int color_count, const std::vector<std::string>& vertex_names,
                            const std::vector<std::tuple<std::string, std::string, int>>& edges);

  int color_count() const { return color_count_; }
  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  int index_of(const std::string& name) const;  // -1 when absent

  // Partner of v along color c, or -1.
  int neighbor(int v, int c) const { return adj_[c][v]; }
  int degree(int v) const;

  std::vector<Edge> edges() const;  // sorted by (u, v, color)
  int edge_count() const;

  bool is_regular() const;
  bool is_connected() const;

 private:
  int color_count_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> adj_;  // adj_[color][vertex] = partner or -1
};

struct ResidueDecomposition {
  std::vector<int> color_subset;
  std::vector<std::vector<int>> components;  // each sorted; ordered by least vertex
  int count() const { return static_cast<int>(components.size()); }
};

// Components of the subgraph keeping only B-colored edges.
ResidueDecomposition residues(const ColoredGraph& g, const std::vector<int>& color_subset);

// g_B shorthand for a color pair.
int pair_residue_count(const ColoredGraph& g, int i, int j);

struct Bipartition {
  bool bipartite = false;
  std::vector<int> vertex_class;  // 0/1 per vertex; class of first vertex per component is 0
};

Bipartition is_bipartite(const ColoredGraph& g);

// True iff dropping any single color leaves the graph connected. Requires regular.
bool is_contracted(const ColoredGraph& g);

struct BoundaryGraph {
  ColoredGraph graph;  // same color set as source; boundary vertices only
  std::vector<std::vector<int>> components;      // vertex sets, indices into graph
  std::vector<int> missing_color;                // per component
};

// Boundary graph of a graph whose vertices all have degree n or n-1.
// u, v joined by color i iff the maximal {i, missing}-alternating path from
// u ends at v. Requires a uniform missing color along every such walk.
BoundaryGraph boundary_graph(const ColoredGraph& g);

}  // namespace gem

#endif
