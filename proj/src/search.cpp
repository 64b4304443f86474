#include "rainbow/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

namespace rainbow {

const char* to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    default: return "unknown";
  }
}

namespace {

using Clock = std::chrono::steady_clock;

// Vertex / color membership bitsets.  The DFS keeps element counts implicitly
// (a rainbow path on v vertices uses exactly v-1 colors), so only
// test/set/clear are needed.
struct Set64 {
  std::uint64_t w = 0;
  void init(int) { w = 0; }
  bool test(int i) const { return (w >> i) & 1; }
  void set(int i) { w |= std::uint64_t{1} << i; }
  void clear(int i) { w &= ~(std::uint64_t{1} << i); }
};

struct SetDyn {
  std::vector<std::uint64_t> w;
  void init(int cap) { w.assign((cap + 63) / 64, 0); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void clear(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
};

// Per-root-task outcome.  best_len is -1 while no candidate was recorded.
struct TaskOut {
  int best_len = -1;
  std::vector<Vertex> seq;
  std::uint64_t nodes = 0;
  bool aborted = false;
  bool found = false;
};

void orient_path(std::vector<Vertex>& seq) {
  if (seq.size() >= 2 && seq.back() < seq.front())
    std::reverse(seq.begin(), seq.end());
}

// Depth-first enumeration of rainbow paths starting at a root vertex.  Every
// undirected path is visited from both of its endpoints, once per direction;
// candidates are canonicalized before comparison so the duplication never
// shows in results.  target < 0 optimizes length; target >= 0 stops at the
// first path with >= target edges.  Pruning bound: a path of len edges can
// grow by at most min(free vertices, free colors) more.
template <class VS, class CS>
class PathRun {
 public:
  PathRun(const EdgeColoredGraph& g, int root, int target,
          std::uint64_t allowance,
          const std::optional<Clock::time_point>& deadline)
      : g_(g),
        n_(g.vertex_count()),
        colors_(g.distinct_color_count()),
        target_(target),
        allowance_(allowance),
        deadline_(deadline) {
    used_.init(n_);
    ucol_.init(colors_);
    cur_.reserve(n_);
    cur_.push_back(root);
    used_.set(root);
  }

  TaskOut run() {
    dfs();
    out_.nodes = nodes_;
    return std::move(out_);
  }

 private:
  // Returns true to unwind the whole task (abort or decision witness).
  bool dfs() {
    if (nodes_ == allowance_) {
      out_.aborted = true;
      return true;
    }
    ++nodes_;
    if ((nodes_ & 16383u) == 0 && deadline_ && Clock::now() > *deadline_) {
      out_.aborted = true;
      return true;
    }
    const int len = static_cast<int>(cur_.size()) - 1;
    if (target_ >= 0) {
      if (len >= target_) {
        out_.found = true;
        out_.best_len = len;
        out_.seq = cur_;
        orient_path(out_.seq);
        return true;
      }
    } else if (len > out_.best_len) {
      out_.best_len = len;
      out_.seq = cur_;
      orient_path(out_.seq);
    } else if (len == out_.best_len) {
      std::vector<Vertex> cand = cur_;
      orient_path(cand);
      if (cand < out_.seq) out_.seq = std::move(cand);
    }
    const int ub =
        len + std::min(n_ - (len + 1), colors_ - len);
    if (ub < (target_ >= 0 ? target_ : out_.best_len)) return false;
    for (const auto& [w, c] : g_.neighbors(cur_.back())) {
      if (used_.test(w) || ucol_.test(c)) continue;
      cur_.push_back(w);
      used_.set(w);
      ucol_.set(c);
      const bool stop = dfs();
      ucol_.clear(c);
      used_.clear(w);
      cur_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const EdgeColoredGraph& g_;
  const int n_;
  const int colors_;
  const int target_;
  const std::uint64_t allowance_;
  const std::optional<Clock::time_point>& deadline_;
  std::vector<Vertex> cur_;
  VS used_;
  CS ucol_;
  std::uint64_t nodes_ = 0;
  TaskOut out_;
};

// Rainbow cycle enumeration rooted at the minimum vertex of each cycle: the
// task for root r grows paths from r through vertices > r only and closes
// them back to r.  The orientation filter cur[1] < cur.back() admits each
// cycle exactly once.  A task can reach cycles of at most
// min(n - r, distinct colors) edges, which also serves as the pruning bound.
template <class VS, class CS>
class CycleRun {
 public:
  CycleRun(const EdgeColoredGraph& g, int root, int target,
           std::uint64_t allowance,
           const std::optional<Clock::time_point>& deadline)
      : g_(g),
        n_(g.vertex_count()),
        colors_(g.distinct_color_count()),
        root_(root),
        target_(target),
        allowance_(allowance),
        deadline_(deadline) {
    used_.init(n_);
    ucol_.init(colors_);
    cur_.reserve(n_);
    cur_.push_back(root);
    used_.set(root);
  }

  TaskOut run() {
    if (std::min(n_ - root_, colors_) >= (target_ >= 0 ? target_ : 3)) dfs();
    out_.nodes = nodes_;
    return std::move(out_);
  }

 private:
  bool dfs() {
    if (nodes_ == allowance_) {
      out_.aborted = true;
      return true;
    }
    ++nodes_;
    if ((nodes_ & 16383u) == 0 && deadline_ && Clock::now() > *deadline_) {
      out_.aborted = true;
      return true;
    }
    const int cv = static_cast<int>(cur_.size());
    if (cv >= 3 && cur_[1] < cur_.back()) {
      if (auto c = g_.edge_color_opt(cur_.back(), root_);
          c && !ucol_.test(*c)) {
        if (target_ >= 0) {
          if (cv >= target_) {
            out_.found = true;
            out_.best_len = cv;
            out_.seq = canonical_cycle({cur_}).vertices;
            return true;
          }
        } else if (cv > out_.best_len) {
          out_.best_len = cv;
          out_.seq = canonical_cycle({cur_}).vertices;
        } else if (cv == out_.best_len) {
          std::vector<Vertex> cand = canonical_cycle({cur_}).vertices;
          if (cand < out_.seq) out_.seq = std::move(cand);
        }
      }
    }
    const int ub = std::min(cv + (n_ - root_ - cv), colors_);
    if (ub < (target_ >= 0 ? target_ : std::max(out_.best_len, 3)))
      return false;
    for (const auto& [w, c] : g_.neighbors(cur_.back())) {
      if (w <= root_ || used_.test(w) || ucol_.test(c)) continue;
      cur_.push_back(w);
      used_.set(w);
      ucol_.set(c);
      const bool stop = dfs();
      ucol_.clear(c);
      used_.clear(w);
      cur_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const EdgeColoredGraph& g_;
  const int n_;
  const int colors_;
  const int root_;
  const int target_;
  const std::uint64_t allowance_;
  const std::optional<Clock::time_point>& deadline_;
  std::vector<Vertex> cur_;
  VS used_;
  CS ucol_;
  std::uint64_t nodes_ = 0;
  TaskOut out_;
};

template <template <class, class> class Run>
TaskOut run_task(const EdgeColoredGraph& g, int root, int target,
                 std::uint64_t allowance,
                 const std::optional<Clock::time_point>& deadline) {
  const bool v64 = g.vertex_count() <= 64;
  const bool c64 = g.distinct_color_count() <= 64;
  if (v64 && c64) return Run<Set64, Set64>(g, root, target, allowance, deadline).run();
  if (v64) return Run<Set64, SetDyn>(g, root, target, allowance, deadline).run();
  if (c64) return Run<SetDyn, Set64>(g, root, target, allowance, deadline).run();
  return Run<SetDyn, SetDyn>(g, root, target, allowance, deadline).run();
}

// One root task per vertex.  A node budget is split into fixed per-task
// slices up front (remainder to the lowest task indices); unused slices do
// not roll over.  This keeps the expanded node set, and therefore every
// report field, independent of the number of worker threads.
std::vector<TaskOut> run_root_tasks(
    int n_tasks, int threads, const SearchBudget& budget,
    const std::function<TaskOut(int, std::uint64_t,
                                const std::optional<Clock::time_point>&)>& fn) {
  std::optional<Clock::time_point> deadline;
  if (budget.max_millis)
    deadline = Clock::now() + std::chrono::milliseconds(*budget.max_millis);
  std::vector<std::uint64_t> slice(n_tasks, ~std::uint64_t{0});
  if (budget.max_nodes) {
    const std::uint64_t base = *budget.max_nodes / n_tasks;
    const std::uint64_t rem = *budget.max_nodes % n_tasks;
    for (int i = 0; i < n_tasks; ++i)
      slice[i] = base + (static_cast<std::uint64_t>(i) < rem ? 1 : 0);
  }
  std::vector<TaskOut> outs(n_tasks);
  threads = std::max(1, std::min(threads, n_tasks));
  if (threads == 1) {
    for (int i = 0; i < n_tasks; ++i) outs[i] = fn(i, slice[i], deadline);
    return outs;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < n_tasks;)
      outs[i] = fn(i, slice[i], deadline);
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return outs;
}

SearchResult merge_optimize(const std::vector<TaskOut>& outs, bool cycle_mode) {
  SearchResult r;
  r.complete = true;
  const TaskOut* winner = nullptr;
  for (const TaskOut& t : outs) {
    r.nodes_expanded += t.nodes;
    if (t.aborted) r.complete = false;
    if (t.best_len < 0) continue;
    if (!winner || t.best_len > winner->best_len ||
        (t.best_len == winner->best_len && t.seq < winner->seq))
      winner = &t;
  }
  if (winner) {
    r.best_length = winner->best_len;
    if (cycle_mode)
      r.best_cycle = VertexCycle{winner->seq};
    else
      r.best_path = VertexPath{winner->seq};
  }
  return r;
}

DecisionResult merge_decision(const std::vector<TaskOut>& outs,
                              bool cycle_mode) {
  DecisionResult r;
  bool all_complete = true;
  for (const TaskOut& t : outs) {
    r.nodes_expanded += t.nodes;
    if (t.aborted) all_complete = false;
    if (t.found && r.verdict != TriState::yes) {
      r.verdict = TriState::yes;
      if (cycle_mode)
        r.cycle_witness = VertexCycle{t.seq};
      else
        r.path_witness = VertexPath{t.seq};
    }
  }
  if (r.verdict != TriState::yes)
    r.verdict = all_complete ? TriState::no : TriState::unknown;
  return r;
}

}  // namespace

SearchResult longest_rainbow_path(const EdgeColoredGraph& g,
                                  const SearchBudget& budget, int threads) {
  if (g.vertex_count() < 1)
    throw std::invalid_argument("longest_rainbow_path: empty graph");
  auto outs = run_root_tasks(
      g.vertex_count(), threads, budget,
      [&](int root, std::uint64_t allow,
          const std::optional<Clock::time_point>& dl) {
        return run_task<PathRun>(g, root, -1, allow, dl);
      });
  return merge_optimize(outs, false);
}

SearchResult longest_rainbow_cycle(const EdgeColoredGraph& g,
                                   const SearchBudget& budget, int threads) {
  if (g.vertex_count() < 3)
    throw std::invalid_argument("longest_rainbow_cycle: need n >= 3");
  auto outs = run_root_tasks(
      g.vertex_count(), threads, budget,
      [&](int root, std::uint64_t allow,
          const std::optional<Clock::time_point>& dl) {
        return run_task<CycleRun>(g, root, -1, allow, dl);
      });
  return merge_optimize(outs, true);
}

DecisionResult has_rainbow_cycle_at_least(const EdgeColoredGraph& g, int k,
                                          const SearchBudget& budget,
                                          int threads) {
  if (k < 3)
    throw std::invalid_argument("has_rainbow_cycle_at_least: need k >= 3");
  if (g.vertex_count() == 0) {
    DecisionResult r;
    r.verdict = TriState::no;
    return r;
  }
  auto outs = run_root_tasks(
      g.vertex_count(), threads, budget,
      [&](int root, std::uint64_t allow,
          const std::optional<Clock::time_point>& dl) {
        return run_task<CycleRun>(g, root, k, allow, dl);
      });
  return merge_decision(outs, true);
}

DecisionResult has_rainbow_path_at_least(const EdgeColoredGraph& g, int len,
                                         const SearchBudget& budget,
                                         int threads) {
  if (len < 0)
    throw std::invalid_argument("has_rainbow_path_at_least: need len >= 0");
  if (g.vertex_count() == 0) {
    DecisionResult r;
    r.verdict = TriState::no;
    return r;
  }
  auto outs = run_root_tasks(
      g.vertex_count(), threads, budget,
      [&](int root, std::uint64_t allow,
          const std::optional<Clock::time_point>& dl) {
        return run_task<PathRun>(g, root, len, allow, dl);
      });
  return merge_decision(outs, false);
}

std::optional<VertexCycle> find_rainbow_c4(const EdgeColoredGraph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> commons;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      commons.clear();
      // Common neighbors of the diagonal pair (u, v).
      for (const auto& [w, c] : g.neighbors(u)) {
        (void)c;
        if (w != v && g.has_edge(w, v)) commons.push_back(w);
      }
      for (std::size_t i = 0; i < commons.size(); ++i) {
        for (std::size_t j = i + 1; j < commons.size(); ++j) {
          const Vertex a = commons[i], b = commons[j];
          const ColorId c1 = g.edge_color(u, a), c2 = g.edge_color(a, v),
                        c3 = g.edge_color(v, b), c4 = g.edge_color(b, u);
          if (c1 != c2 && c1 != c3 && c1 != c4 && c2 != c3 && c2 != c4 &&
              c3 != c4)
            return canonical_cycle({{u, a, v, b}});
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<CertifiedLongestPath> certify_longest_rainbow_path(
    const EdgeColoredGraph& g, const SearchBudget& budget, int threads) {
  SearchResult r = longest_rainbow_path(g, budget, threads);
  if (!r.complete || !r.best_path) return std::nullopt;
  return CertifiedLongestPath(&g, std::move(*r.best_path), r.nodes_expanded);
}

NoCycleOutcome certify_no_rainbow_cycle_at_least(const EdgeColoredGraph& g,
                                                 int k,
                                                 const SearchBudget& budget,
                                                 int threads) {
  NoCycleOutcome out;
  if (g.vertex_count() < 3) {
    out.kind = NoCycleOutcome::Kind::certified;
    out.certificate = CertifiedNoCycleAtLeast(&g, k, 0);
    return out;
  }
  DecisionResult r = has_rainbow_cycle_at_least(g, k, budget, threads);
  out.nodes_expanded = r.nodes_expanded;
  switch (r.verdict) {
    case TriState::yes:
      out.kind = NoCycleOutcome::Kind::cycle_found;
      out.witness = std::move(r.cycle_witness);
      break;
    case TriState::no:
      out.kind = NoCycleOutcome::Kind::certified;
      out.certificate = CertifiedNoCycleAtLeast(&g, k, r.nodes_expanded);
      break;
    default:
      out.kind = NoCycleOutcome::Kind::unknown;
      break;
  }
  return out;
}

std::optional<CertifiedNoCycleAtLeast> certificate_from_complete_cycle_search(
    const EdgeColoredGraph& g, const SearchResult& completed_cycle_search,
    int k) {
  if (k < 3) return std::nullopt;
  if (!completed_cycle_search.complete) return std::nullopt;
  if (completed_cycle_search.best_cycle &&
      completed_cycle_search.best_cycle->length() >= k)
    return std::nullopt;
  return CertifiedNoCycleAtLeast(&g, k,
                                 completed_cycle_search.nodes_expanded);
}

std::optional<CertifiedRainbowC4Free> certify_rainbow_c4_free(
    const EdgeColoredGraph& g) {
  if (find_rainbow_c4(g)) return std::nullopt;
  return CertifiedRainbowC4Free(&g);
}

}  // namespace rainbow
