#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

enum class Family {
  random_gnp,
  complete_proper,
  complete_bipartite_proper,
  cycle,
  exhaustive_enum,
};

// Palette size for randomly colored families: a fixed count, half the edge
// count (rounded up), or one color per edge.
struct PaletteSpec {
  enum class Kind { fixed, half, full };
  Kind kind = Kind::full;
  int size = 0;  // kind == fixed

  int resolve(int edge_count) const;
  std::string str() const;
  static PaletteSpec parse(const std::string& token);
};

// Fully describes a deterministic graph stream.  Parses from comma-separated
// key=value text (same keys as the canonical serialization):
//   family=random-gnp,n=8,p=0.5,palette=half,count=10,seed=42
//   family=exhaustive-enum,n=6,samples=2,seed=7
//   family=complete-bipartite-proper,n=4,n2=4
// plus optional certified filters on any family:
//   filter-triangle-free=1, filter-rainbow-c4-free=1, filter-min-delta-c=7/2
struct GenSpec {
  Family family = Family::random_gnp;
  int n = 0;
  int n2 = 0;                 // second side for bipartite
  Rational edge_prob;         // random-gnp
  PaletteSpec palette;        // random-gnp
  int count = 1;              // random-gnp: number of graphs
  int samples = 2;            // exhaustive-enum: sampled colorings per graph
  std::uint64_t seed = 0;

  bool filter_triangle_free = false;
  bool filter_rainbow_c4_free = false;
  std::optional<Rational> filter_min_delta_c;

  static GenSpec parse(const std::string& text);
  // Canonical round-trippable form; equal specs serialize identically.
  std::string str() const;
};

// Certificates established for a stream element by the certified filters (or
// by construction for deterministic families).
struct StreamCerts {
  bool triangle_free = false;
  bool rainbow_c4_free = false;
  bool min_delta_c = false;
  Rational min_delta_c_threshold;
};

struct StreamItem {
  EdgeColoredGraph graph;
  std::uint64_t index = 0;  // position in this (post-filter) stream
  std::string provenance;   // deterministic origin tag
  StreamCerts certs;
};

// Single-consumer deterministic iterator.
class GraphStream {
 public:
  virtual ~GraphStream() = default;
  virtual std::optional<StreamItem> next() = 0;
};

// Builds the stream for a spec, filters included.  Throws
// std::invalid_argument for specs outside the documented ranges.
std::unique_ptr<GraphStream> generate(const GenSpec& spec);

struct FilterPredicate {
  enum class Kind { triangle_free, rainbow_c4_free, min_delta_c };
  Kind kind = Kind::triangle_free;
  Rational threshold;  // min_delta_c only
};

// Passes exactly the items satisfying the predicate, decided by exact
// recomputation on each item; stamps the matching certificate.  Item indices
// are renumbered to be consecutive in the filtered stream.
std::unique_ptr<GraphStream> filter_certified(std::unique_ptr<GraphStream> in,
                                              const FilterPredicate& pred);

}  // namespace rainbow
