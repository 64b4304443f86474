#include "rainbow/generators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rainbow/rng.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

int PaletteSpec::resolve(int edge_count) const {
  switch (kind) {
    case Kind::fixed: return size;
    case Kind::half: return std::max(1, (edge_count + 1) / 2);
    default: return std::max(1, edge_count);
  }
}

std::string PaletteSpec::str() const {
  switch (kind) {
    case Kind::fixed: return std::to_string(size);
    case Kind::half: return "half";
    default: return "full";
  }
}

PaletteSpec PaletteSpec::parse(const std::string& token) {
  PaletteSpec p;
  if (token == "half") {
    p.kind = Kind::half;
  } else if (token == "full") {
    p.kind = Kind::full;
  } else {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad palette '" + token + "'");
    }
    if (pos != token.size() || v < 1)
      throw std::invalid_argument("bad palette '" + token + "'");
    p.kind = Kind::fixed;
    p.size = v;
  }
  return p;
}

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::random_gnp: return "random-gnp";
    case Family::complete_proper: return "complete-proper";
    case Family::complete_bipartite_proper: return "complete-bipartite-proper";
    case Family::cycle: return "cycle";
    default: return "exhaustive-enum";
  }
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::random_gnp, Family::complete_proper,
                   Family::complete_bipartite_proper, Family::cycle,
                   Family::exhaustive_enum})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

int parse_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  }
  if (pos != value.size() || v < -(1L << 30) || v > (1L << 30))
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  return static_cast<int>(v);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  }
  if (pos != value.size())
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  return v;
}

bool parse_flag(const std::string& key, const std::string& value) {
  if (value == "1") return true;
  if (value == "0") return false;
  throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
}

}  // namespace

GenSpec GenSpec::parse(const std::string& text) {
  GenSpec spec;
  bool have_family = false;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key=value, got '" + part + "'");
    std::string key = part.substr(0, eq);
    std::string value = part.substr(eq + 1);
    if (key == "family") {
      auto f = parse_family(value);
      if (!f) throw std::invalid_argument("unknown family '" + value + "'");
      spec.family = *f;
      have_family = true;
    } else if (key == "n") {
      spec.n = parse_int(key, value);
    } else if (key == "n2") {
      spec.n2 = parse_int(key, value);
    } else if (key == "p") {
      spec.edge_prob = Rational::parse(value);
    } else if (key == "palette") {
      spec.palette = PaletteSpec::parse(value);
    } else if (key == "count") {
      spec.count = parse_int(key, value);
    } else if (key == "samples") {
      spec.samples = parse_int(key, value);
    } else if (key == "seed") {
      spec.seed = parse_u64(key, value);
    } else if (key == "filter-triangle-free") {
      spec.filter_triangle_free = parse_flag(key, value);
    } else if (key == "filter-rainbow-c4-free") {
      spec.filter_rainbow_c4_free = parse_flag(key, value);
    } else if (key == "filter-min-delta-c") {
      spec.filter_min_delta_c = Rational::parse(value);
    } else {
      throw std::invalid_argument("unknown key '" + key + "'");
    }
  }
  if (!have_family) throw std::invalid_argument("spec needs family=");
  return spec;
}

std::string GenSpec::str() const {
  std::string out = std::string("family=") + family_name(family);
  out += ",n=" + std::to_string(n);
  switch (family) {
    case Family::random_gnp:
      out += ",p=" + edge_prob.str();
      out += ",palette=" + palette.str();
      out += ",count=" + std::to_string(count);
      out += ",seed=" + std::to_string(seed);
      break;
    case Family::complete_bipartite_proper:
      out += ",n2=" + std::to_string(n2);
      break;
    case Family::exhaustive_enum:
      out += ",samples=" + std::to_string(samples);
      out += ",seed=" + std::to_string(seed);
      break;
    default:
      break;
  }
  if (filter_triangle_free) out += ",filter-triangle-free=1";
  if (filter_rainbow_c4_free) out += ",filter-rainbow-c4-free=1";
  if (filter_min_delta_c)
    out += ",filter-min-delta-c=" + filter_min_delta_c->str();
  return out;
}

namespace {

struct PairIndex {
  // Lexicographic (u,v) order over u < v.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  explicit PairIndex(int n) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
};

class GnpStream : public GraphStream {
 public:
  explicit GnpStream(const GenSpec& spec) : spec_(spec), pairs_(spec.n) {}

  std::optional<StreamItem> next() override {
    if (i_ >= spec_.count) return std::nullopt;
    const int i = i_++;
    SplitMix64 rng(derive_seed(spec_.seed, {static_cast<std::uint64_t>(i)}));
    std::vector<ColoredEdge> edges;
    for (const auto& [u, v] : pairs_.pairs)
      if (rng.next_below(spec_.edge_prob.den()) <
          static_cast<std::uint64_t>(spec_.edge_prob.num()))
        edges.push_back({u, v, 0});
    const int q = spec_.palette.resolve(static_cast<int>(edges.size()));
    for (ColoredEdge& e : edges)
      e.label = static_cast<int>(rng.next_below(q));
    StreamItem item{EdgeColoredGraph(spec_.n, edges),
                    static_cast<std::uint64_t>(i),
                    "gnp:n=" + std::to_string(spec_.n) + ":p=" +
                        spec_.edge_prob.str() + ":seed=" +
                        std::to_string(spec_.seed) + ":i=" + std::to_string(i),
                    {}};
    return item;
  }

 private:
  GenSpec spec_;
  PairIndex pairs_;
  int i_ = 0;
};

// Proper edge coloring of K_n: for odd n color (i+j) mod n; for even n the
// hub construction on n-1 spokes.  Every vertex sees n-1 distinct colors, so
// the minimum color degree is exactly n-1.
class CompleteProperStream : public GraphStream {
 public:
  explicit CompleteProperStream(int n) : n_(n) {}

  std::optional<StreamItem> next() override {
    if (done_) return std::nullopt;
    done_ = true;
    std::vector<ColoredEdge> edges;
    const int n = n_;
    if (n % 2 == 1) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          edges.push_back({u, v, (u + v) % n});
    } else {
      const int m = n - 1;
      for (Vertex u = 0; u < m; ++u)
        for (Vertex v = u + 1; v < m; ++v)
          edges.push_back({u, v, (u + v) % m});
      for (Vertex u = 0; u < m; ++u)
        edges.push_back({u, static_cast<Vertex>(n - 1), (2 * u) % m});
    }
    StreamItem item{EdgeColoredGraph(n, edges), 0,
                    "complete-proper:n=" + std::to_string(n), {}};
    return item;
  }

 private:
  int n_;
  bool done_ = false;
};

class BipartiteProperStream : public GraphStream {
 public:
  BipartiteProperStream(int a, int b) : a_(a), b_(b) {}

  std::optional<StreamItem> next() override {
    if (done_) return std::nullopt;
    done_ = true;
    const int mod = std::max(a_, b_);
    std::vector<ColoredEdge> edges;
    for (Vertex i = 0; i < a_; ++i)
      for (Vertex j = 0; j < b_; ++j)
        edges.push_back({i, static_cast<Vertex>(a_ + j), (i + j) % mod});
    StreamItem item{EdgeColoredGraph(a_ + b_, edges), 0,
                    "complete-bipartite-proper:a=" + std::to_string(a_) +
                        ":b=" + std::to_string(b_),
                    {}};
    item.certs.triangle_free = true;  // bipartite, by construction
    return item;
  }

 private:
  int a_, b_;
  bool done_ = false;
};

class CycleStream : public GraphStream {
 public:
  explicit CycleStream(int n) : n_(n) {}

  std::optional<StreamItem> next() override {
    if (done_) return std::nullopt;
    done_ = true;
    std::vector<ColoredEdge> edges;
    for (Vertex i = 0; i < n_; ++i) {
      Vertex j = (i + 1) % n_;
      edges.push_back({std::min(i, j), std::max(i, j), i});
    }
    StreamItem item{EdgeColoredGraph(n_, edges), 0,
                    "cycle:n=" + std::to_string(n_), {}};
    if (n_ >= 4) item.certs.triangle_free = true;
    return item;
  }

 private:
  int n_;
  bool done_ = false;
};

// All labeled graphs on n vertices (edge subsets in ascending mask order),
// each with a fixed roster of colorings: all-one-color, all-distinct (only
// when it differs), and `samples` seeded random colorings drawn from a
// palette of size 2 + (r mod (m-2)) when m >= 3.  A min-color-degree filter
// hint prunes masks by plain degree first, which is sound because the color
// degree never exceeds the degree.
class EnumStream : public GraphStream {
 public:
  EnumStream(const GenSpec& spec, std::optional<Rational> mindeg_hint)
      : spec_(spec), pairs_(spec.n), hint_(std::move(mindeg_hint)) {
    mask_limit_ = 1ull << pairs_.pairs.size();
  }

  std::optional<StreamItem> next() override {
    for (;;) {
      if (queue_pos_ < queued_.size()) {
        StreamItem item = std::move(queued_[queue_pos_++]);
        item.index = emitted_++;
        return item;
      }
      if (mask_ >= mask_limit_) return std::nullopt;
      const std::uint64_t mask = mask_++;
      if (!degree_ok(mask)) continue;
      fill_queue(mask);
    }
  }

 private:
  bool degree_ok(std::uint64_t mask) const {
    if (!hint_) return true;
    const int n = spec_.n;
    int deg[8] = {0};
    for (std::size_t b = 0; b < pairs_.pairs.size(); ++b)
      if (mask >> b & 1) {
        ++deg[pairs_.pairs[b].first];
        ++deg[pairs_.pairs[b].second];
      }
    for (int v = 0; v < n; ++v)
      if (Rational(deg[v]) < *hint_) return false;
    return true;
  }

  void fill_queue(std::uint64_t mask) {
    queued_.clear();
    queue_pos_ = 0;
    std::vector<ColoredEdge> edges;
    for (std::size_t b = 0; b < pairs_.pairs.size(); ++b)
      if (mask >> b & 1)
        edges.push_back({pairs_.pairs[b].first, pairs_.pairs[b].second, 0});
    const int m = static_cast<int>(edges.size());
    const std::string stem =
        "enum:n=" + std::to_string(spec_.n) + ":mask=" + std::to_string(mask);
    push(edges, stem + ":col=mono");
    if (m >= 2) {
      for (int e = 0; e < m; ++e) edges[e].label = e;
      push(edges, stem + ":col=distinct");
    }
    if (m >= 3) {
      for (int j = 0; j < spec_.samples; ++j) {
        SplitMix64 rng(derive_seed(
            spec_.seed, {static_cast<std::uint64_t>(spec_.n), mask,
                         static_cast<std::uint64_t>(j)}));
        const int q = 2 + static_cast<int>(rng.next() % (m - 2));
        for (int e = 0; e < m; ++e)
          edges[e].label = static_cast<int>(rng.next_below(q));
        push(edges, stem + ":col=s" + std::to_string(j));
      }
    }
  }

  void push(const std::vector<ColoredEdge>& edges, std::string provenance) {
    queued_.push_back(
        {EdgeColoredGraph(spec_.n, edges), 0, std::move(provenance), {}});
  }

  GenSpec spec_;
  PairIndex pairs_;
  std::optional<Rational> hint_;
  std::uint64_t mask_ = 0;
  std::uint64_t mask_limit_ = 0;
  std::vector<StreamItem> queued_;
  std::size_t queue_pos_ = 0;
  std::uint64_t emitted_ = 0;
};

class FilterStream : public GraphStream {
 public:
  FilterStream(std::unique_ptr<GraphStream> in, FilterPredicate pred)
      : in_(std::move(in)), pred_(pred) {}

  std::optional<StreamItem> next() override {
    while (auto item = in_->next()) {
      if (!passes(item->graph)) continue;
      switch (pred_.kind) {
        case FilterPredicate::Kind::triangle_free:
          item->certs.triangle_free = true;
          break;
        case FilterPredicate::Kind::rainbow_c4_free:
          item->certs.rainbow_c4_free = true;
          break;
        case FilterPredicate::Kind::min_delta_c:
          item->certs.min_delta_c = true;
          item->certs.min_delta_c_threshold = pred_.threshold;
          break;
      }
      item->index = emitted_++;
      return item;
    }
    return std::nullopt;
  }

 private:
  bool passes(const EdgeColoredGraph& g) const {
    switch (pred_.kind) {
      case FilterPredicate::Kind::triangle_free:
        return is_triangle_free(g);
      case FilterPredicate::Kind::rainbow_c4_free:
        return !find_rainbow_c4(g);
      default:
        return g.vertex_count() >= 1 &&
               Rational(g.min_color_degree()) >= pred_.threshold;
    }
  }

  std::unique_ptr<GraphStream> in_;
  FilterPredicate pred_;
  std::uint64_t emitted_ = 0;
};

}  // namespace

std::unique_ptr<GraphStream> filter_certified(std::unique_ptr<GraphStream> in,
                                              const FilterPredicate& pred) {
  return std::make_unique<FilterStream>(std::move(in), pred);
}

std::unique_ptr<GraphStream> generate(const GenSpec& spec) {
  std::unique_ptr<GraphStream> s;
  switch (spec.family) {
    case Family::random_gnp: {
      if (spec.n < 1) throw std::invalid_argument("random-gnp needs n >= 1");
      if (spec.count < 1)
        throw std::invalid_argument("random-gnp needs count >= 1");
      if (spec.edge_prob < Rational(0) || spec.edge_prob > Rational(1))
        throw std::invalid_argument("edge probability outside [0,1]");
      s = std::make_unique<GnpStream>(spec);
      break;
    }
    case Family::complete_proper:
      if (spec.n < 2)
        throw std::invalid_argument("complete-proper needs n >= 2");
      s = std::make_unique<CompleteProperStream>(spec.n);
      break;
    case Family::complete_bipartite_proper:
      if (spec.n < 1 || spec.n2 < 1)
        throw std::invalid_argument(
            "complete-bipartite-proper needs n, n2 >= 1");
      s = std::make_unique<BipartiteProperStream>(spec.n, spec.n2);
      break;
    case Family::cycle:
      if (spec.n < 3) throw std::invalid_argument("cycle needs n >= 3");
      s = std::make_unique<CycleStream>(spec.n);
      break;
    case Family::exhaustive_enum:
      if (spec.n < 1 || spec.n > 8)
        throw std::invalid_argument("exhaustive-enum needs 1 <= n <= 8");
      if (spec.samples < 0)
        throw std::invalid_argument("samples must be >= 0");
      s = std::make_unique<EnumStream>(spec, spec.filter_min_delta_c);
      break;
  }
  if (spec.filter_triangle_free)
    s = filter_certified(std::move(s),
                         {FilterPredicate::Kind::triangle_free, {}});
  if (spec.filter_rainbow_c4_free)
    s = filter_certified(std::move(s),
                         {FilterPredicate::Kind::rainbow_c4_free, {}});
  if (spec.filter_min_delta_c)
    s = filter_certified(std::move(s), {FilterPredicate::Kind::min_delta_c,
                                        *spec.filter_min_delta_c});
  return s;
}

}  // namespace rainbow
