#include "rainbow/trace.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rainbow {

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::fails: return "fails";
    default: return "inapplicable";
  }
}

namespace {

void require_same_graph(const EdgeColoredGraph& a, const EdgeColoredGraph& b) {
  if (&a != &b)
    throw std::invalid_argument("certificates refer to different graphs");
}

// Positions are 1-based throughout this file, matching the segment
// arithmetic; seq(i) converts.
Vertex at(const VertexPath& p, int pos_1based) {
  return p.vertices[pos_1based - 1];
}

ColorSet segment_colors(const EdgeColoredGraph& g, const VertexPath& p,
                        Vertex from, int lo, int hi) {
  ColorSet s;
  for (int i = lo; i <= hi; ++i) {
    Vertex w = at(p, i);
    if (w == from) continue;
    if (auto c = g.edge_color_opt(from, w)) s.insert(*c);
  }
  return s;
}

// Single-direction chord-color check: every edge from the first path vertex
// to a position >= k must have its color on the path prefix up to that
// position.
bool lemma1_direction(const EdgeColoredGraph& g,
                      const std::vector<Vertex>& seq, int k,
                      std::string& violation, int& chords) {
  const int p = static_cast<int>(seq.size());
  for (int i = k; i <= p; ++i) {
    auto a = g.edge_color_opt(seq[0], seq[i - 1]);
    if (!a) continue;
    ++chords;
    bool on_prefix = false;
    for (int j = 2; j <= i && !on_prefix; ++j)
      if (g.edge_color(seq[j - 2], seq[j - 1]) == *a) on_prefix = true;
    if (!on_prefix) {
      violation = "color " + std::to_string(*a) + " of edge " +
                  std::to_string(seq[0]) + "-" + std::to_string(seq[i - 1]) +
                  " (position " + std::to_string(i) +
                  ") missing from the path prefix";
      return false;
    }
  }
  return true;
}

}  // namespace

LemmaCheck check_lemma1(const CertifiedLongestPath& path_cert,
                        const CertifiedNoCycleAtLeast& nocycle_cert) {
  require_same_graph(path_cert.graph(), nocycle_cert.graph());
  const EdgeColoredGraph& g = path_cert.graph();
  const VertexPath& path = path_cert.path();
  const int p = static_cast<int>(path.vertices.size());
  const int k = nocycle_cert.k();
  LemmaCheck out;
  if (k > p) {
    out.status = ClaimStatus::inapplicable;
    out.detail = "k=" + std::to_string(k) + " exceeds path order " +
                 std::to_string(p);
    return out;
  }
  // The reversal of a longest rainbow path is also one, so the claim is
  // checked from both endpoints.
  int chords = 0;
  std::string violation;
  std::vector<Vertex> fwd = path.vertices;
  if (!lemma1_direction(g, fwd, k, violation, chords)) {
    out.status = ClaimStatus::fails;
    out.detail = violation;
    return out;
  }
  std::vector<Vertex> rev(fwd.rbegin(), fwd.rend());
  if (!lemma1_direction(g, rev, k, violation, chords)) {
    out.status = ClaimStatus::fails;
    out.detail = "reversed: " + violation;
    return out;
  }
  out.status = ClaimStatus::holds;
  out.detail = chords == 0 ? "vacuous: no qualifying chords"
                           : "chords=" + std::to_string(chords);
  return out;
}

LemmaCheck check_lemma2(const CertifiedLongestPath& path_cert,
                        const CertifiedNoCycleAtLeast& nocycle_cert, int s,
                        int t) {
  require_same_graph(path_cert.graph(), nocycle_cert.graph());
  const EdgeColoredGraph& g = path_cert.graph();
  const VertexPath& path = path_cert.path();
  const int p = static_cast<int>(path.vertices.size());
  const int k = nocycle_cert.k();
  if (s < 1 || t < 1 || s + t != k)
    throw std::invalid_argument("check_lemma2: need s,t >= 1 with s+t=k");
  LemmaCheck out;
  if (k > p) {
    out.status = ClaimStatus::inapplicable;
    out.detail = "k=" + std::to_string(k) + " exceeds path order " +
                 std::to_string(p);
    return out;
  }
  if (p - (t - 1) < k || p - (k - 1) < s) {
    out.status = ClaimStatus::inapplicable;
    out.detail = "segment indices out of range for p=" + std::to_string(p) +
                 " k=" + std::to_string(k) + " s=" + std::to_string(s) +
                 " t=" + std::to_string(t);
    return out;
  }
  ColorSet A = segment_colors(g, path, at(path, 1), k, p - (t - 1));
  ColorSet B = segment_colors(g, path, at(path, p), s, p - (k - 1));
  ColorSet both = A & B;
  const int overlap = both.size();
  if (overlap <= 1) {
    out.status = ClaimStatus::holds;
    out.detail = "overlap=" + std::to_string(overlap);
  } else {
    out.status = ClaimStatus::fails;
    out.detail = "overlap=" + std::to_string(overlap) + " colors=";
    bool first = true;
    for (ColorId c : both.to_vector()) {
      if (!first) out.detail += ",";
      out.detail += std::to_string(c);
      first = false;
    }
  }
  return out;
}

ProofTrace compute_proof_trace(const CertifiedLongestPath& path_cert,
                               const CertifiedNoCycleAtLeast& nocycle_cert) {
  require_same_graph(path_cert.graph(), nocycle_cert.graph());
  const EdgeColoredGraph& g = path_cert.graph();
  ProofTrace tr;
  tr.path = path_cert.path();
  tr.n = g.vertex_count();
  tr.p = static_cast<int>(tr.path.vertices.size());
  tr.k = nocycle_cert.k();
  if (tr.p < 2 * tr.k)
    throw std::domain_error("proof trace undefined: requires p >= 2k (p=" +
                            std::to_string(tr.p) + ", k=" +
                            std::to_string(tr.k) + ")");
  tr.s = tr.k / 2;
  tr.t = tr.k - tr.s;
  tr.delta_c = g.min_color_degree();

  const Vertex u1 = at(tr.path, 1);
  const Vertex up = at(tr.path, tr.p);
  tr.A = segment_colors(g, tr.path, u1, tr.k, tr.p - (tr.t - 1));
  tr.B = segment_colors(g, tr.path, up, tr.s, tr.p - (tr.k - 1));

  std::vector<bool> on_path(g.vertex_count(), false);
  for (Vertex v : tr.path.vertices) on_path[v] = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!on_path[v]) tr.offpath.push_back(v);

  tr.start_path_colors = colors_between(g, u1, tr.path.vertices);
  tr.end_path_colors = colors_between(g, up, tr.path.vertices);
  tr.start_off_colors = colors_between(g, u1, tr.offpath);
  tr.end_off_colors = colors_between(g, up, tr.offpath);
  tr.path_colors = path_edge_colors(g, tr.path);

  tr.C0 = (tr.start_off_colors - tr.start_path_colors) &
          (tr.end_off_colors - tr.end_path_colors);
  tr.C1 = tr.start_off_colors - (tr.C0 | tr.start_path_colors);
  tr.C2 = tr.end_off_colors - (tr.C0 | tr.end_path_colors);

  const ColorId c_first = g.edge_color(at(tr.path, 1), at(tr.path, 2));
  const ColorId c_last = g.edge_color(at(tr.path, tr.p - 1), at(tr.path, tr.p));
  tr.eps1 = tr.A.contains(c_first) ? 0 : 1;
  tr.eps2 = tr.B.contains(c_last) ? 0 : 1;
  if (auto cc = g.edge_color_opt(u1, up)) {
    tr.ends_adjacent = true;
    tr.closing_color = *cc;
    tr.eps1p = (tr.A.contains(*cc) || *cc == c_first) ? 0 : 1;
    tr.eps2p = (tr.B.contains(*cc) || *cc == c_last) ? 0 : 1;
  }
  tr.l = tr.A.size() + (tr.A.contains(c_first) ? 0 : 1);
  tr.lp = (tr.p - tr.t - tr.k + 3) - tr.l;

  // Representatives: smallest off-path vertex realizing each fresh color.
  std::map<ColorId, Vertex> xs, ys;
  for (Vertex w : tr.offpath) {
    if (auto c = g.edge_color_opt(u1, w))
      if (tr.C1.contains(*c) && !xs.count(*c)) xs.emplace(*c, w);
    if (auto c = g.edge_color_opt(up, w))
      if (tr.C2.contains(*c) && !ys.count(*c)) ys.emplace(*c, w);
  }
  tr.start_reps.assign(xs.begin(), xs.end());
  tr.end_reps.assign(ys.begin(), ys.end());
  return tr;
}

namespace {

bool traces_equal(const ProofTrace& a, const ProofTrace& b) {
  return a.n == b.n && a.p == b.p && a.k == b.k && a.s == b.s && a.t == b.t &&
         a.delta_c == b.delta_c && a.path.vertices == b.path.vertices &&
         a.offpath == b.offpath && a.A == b.A && a.B == b.B && a.C0 == b.C0 &&
         a.C1 == b.C1 && a.C2 == b.C2 && a.eps1 == b.eps1 &&
         a.eps2 == b.eps2 && a.eps1p == b.eps1p && a.eps2p == b.eps2p &&
         a.ends_adjacent == b.ends_adjacent &&
         a.closing_color == b.closing_color && a.l == b.l && a.lp == b.lp &&
         a.start_reps == b.start_reps && a.end_reps == b.end_reps;
}

InequalityCheck make_check(const std::string& name, long long lhs,
                           const char* rel, long long rhs) {
  InequalityCheck c;
  c.name = name;
  c.relation = rel;
  c.lhs = lhs;
  c.rhs = rhs;
  c.holds = rel[0] == '<' ? lhs <= rhs : lhs >= rhs;
  return c;
}

}  // namespace

TraceVerification verify_trace_inequalities(
    const ProofTrace& trace, const CertifiedLongestPath& path_cert,
    const CertifiedNoCycleAtLeast& nocycle_cert,
    const CertifiedRainbowC4Free& c4_cert) {
  require_same_graph(path_cert.graph(), nocycle_cert.graph());
  require_same_graph(path_cert.graph(), c4_cert.graph());
  if (nocycle_cert.k() != trace.k)
    throw std::invalid_argument("trace k does not match certificate");
  // Everything is rederived from the certified instance; the passed trace
  // must agree or it does not belong here.
  ProofTrace tr = compute_proof_trace(path_cert, nocycle_cert);
  if (!traces_equal(tr, trace))
    throw std::invalid_argument("trace does not match its instance");

  const EdgeColoredGraph& g = path_cert.graph();
  const ColorId c_first = g.edge_color(at(tr.path, 1), at(tr.path, 2));
  const ColorId c_last = g.edge_color(at(tr.path, tr.p - 1), at(tr.path, tr.p));
  ColorSet a_first = tr.A;
  a_first.insert(c_first);
  ColorSet b_last = tr.B;
  b_last.insert(c_last);

  TraceVerification v;
  v.checks.push_back(make_check(
      "path_vertex_bound", tr.p, ">=",
      static_cast<long long>(tr.A.size()) + tr.B.size() + tr.C0.size() +
          tr.eps1 + tr.eps2 + tr.eps1p * tr.eps2p));
  v.checks.push_back(make_check(
      "offpath_vertex_bound", tr.n - tr.p, ">=",
      static_cast<long long>(tr.C0.size()) + tr.C1.size() + tr.C2.size() - 1));
  v.checks.push_back(make_check("start_residual_bound",
                                (tr.start_path_colors - a_first).size(), "<=",
                                tr.t + tr.k - 4));
  v.checks.push_back(make_check("end_residual_bound",
                                (tr.end_path_colors - b_last).size(), "<=",
                                tr.s + tr.k - 3));
  v.checks.push_back(make_check(
      "start_degree_bound",
      static_cast<long long>(tr.A.size()) + tr.C0.size() + tr.C1.size() +
          tr.eps1,
      ">=", static_cast<long long>(tr.delta_c) - tr.k - tr.t + 3));
  v.checks.push_back(make_check(
      "end_degree_bound",
      static_cast<long long>(tr.B.size()) + tr.C0.size() + tr.C2.size() +
          tr.eps2,
      ">=", static_cast<long long>(tr.delta_c) - tr.k - tr.s + 2));
  int rep_overlap = 0;
  for (const auto& [cx, x] : tr.start_reps)
    for (const auto& [cy, y] : tr.end_reps)
      if (x == y) ++rep_overlap;
  v.checks.push_back(make_check("representative_overlap", rep_overlap, "<=", 1));
  v.checks.push_back(make_check("start_palette_reconstruction",
                                tr.start_path_colors.size(), "<=",
                                (tr.p - 1) - tr.lp));
  v.checks.push_back(make_check("start_edge_not_in_end_segment",
                                tr.B.contains(c_first) ? 1 : 0, "<=", 0));
  v.checks.push_back(make_check("end_edge_not_in_start_segment",
                                tr.A.contains(c_last) ? 1 : 0, "<=", 0));
  ColorSet endpoint_colors = tr.A | tr.B | tr.C0 | tr.C1 | tr.C2;
  v.checks.push_back(make_check("endpoint_colors_on_path",
                                (endpoint_colors - tr.path_colors).size(),
                                "<=", 0));
  v.checks.push_back(make_check(
      "closing_edge_color_on_path",
      (tr.ends_adjacent && !tr.path_colors.contains(tr.closing_color)) ? 1 : 0,
      "<=", 0));
  v.checks.push_back(make_check(
      "segment_disjointness",
      (tr.C0 & (tr.A | tr.B)).size() + (tr.C1 & tr.C2).size(), "<=", 0));

  v.all_hold = true;
  for (const InequalityCheck& c : v.checks)
    if (!c.holds) v.all_hold = false;
  return v;
}

}  // namespace rainbow
