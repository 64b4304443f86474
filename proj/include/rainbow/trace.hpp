#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rainbow/color_set.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

// Outcome of checking a structural claim on one certified instance.  A claim
// can be inapplicable when the instance is too short for the quantities it
// speaks about (index ranges empty).
enum class ClaimStatus { holds, fails, inapplicable };
const char* to_string(ClaimStatus s);

struct LemmaCheck {
  ClaimStatus status = ClaimStatus::inapplicable;
  std::string detail;
};

// On a certified longest rainbow path u1..up of a graph with no rainbow
// cycle of length >= k: every edge u1-ui with position i >= k has its color
// somewhere on the path segment u1..ui.  Otherwise that edge would close a
// rainbow cycle of length >= k.  Positions are 1-based here to match the
// segment arithmetic below; the API surface stays 0-based.
LemmaCheck check_lemma1(const CertifiedLongestPath& path_cert,
                        const CertifiedNoCycleAtLeast& nocycle_cert);

// For any split k = s + t with s, t >= 1: the color segments
//   A = colors from u1 into path positions [k, p-(t-1)]
//   B = colors from up into path positions [s, p-(k-1)]
// share at most one color.  Requires the same certificates as above.
// Splits with s < 1 or t < 1 are rejected.
LemmaCheck check_lemma2(const CertifiedLongestPath& path_cert,
                        const CertifiedNoCycleAtLeast& nocycle_cert, int s,
                        int t);

// All quantities appearing in the endpoint-counting argument for a certified
// longest rainbow path P = u1..up in a graph with no rainbow cycle of length
// >= k.  Requires p >= 2k (throws std::domain_error below that).
//
// With s = floor(k/2), t = ceil(k/2):
//   A  = colors from u1 into path positions [k, p-(t-1)]
//   B  = colors from up into path positions [s, p-(k-1)]
//   C0 = colors seen from both endpoints off the path but from neither
//        endpoint on the path
//   C1 = remaining fresh off-path colors at u1,  C2 = same at up
//   eps1  = 1 iff c(u1u2) not in A;  eps2 = 1 iff c(u_{p-1}u_p) not in B
//   eps1' = 1 iff u1up is an edge and c(u1up) not in A + {c(u1u2)}
//   eps2' = symmetric; both 0 when u1up is not an edge
//   l  = |A + {c(u1u2)}|,  l' = (p - t - k + 3) - l
// Representatives: for each color in C1 the smallest off-path vertex seeing
// u1 in that color; end_reps symmetric for C2 at up.
struct ProofTrace {
  int n = 0, p = 0, k = 0, s = 0, t = 0;
  int delta_c = 0;
  VertexPath path;
  std::vector<Vertex> offpath;
  ColorSet A, B, C0, C1, C2;
  ColorSet start_path_colors;  // c(u1, P)
  ColorSet end_path_colors;    // c(up, P)
  ColorSet start_off_colors;   // c(u1, off-path vertices)
  ColorSet end_off_colors;     // c(up, off-path vertices)
  ColorSet path_colors;        // colors on the edges of P
  int eps1 = 0, eps2 = 0, eps1p = 0, eps2p = 0;
  bool ends_adjacent = false;
  ColorId closing_color = -1;  // c(u1up) when ends_adjacent
  int l = 0, lp = 0;
  std::vector<std::pair<ColorId, Vertex>> start_reps;
  std::vector<std::pair<ColorId, Vertex>> end_reps;
};

ProofTrace compute_proof_trace(const CertifiedLongestPath& path_cert,
                               const CertifiedNoCycleAtLeast& nocycle_cert);

// One counting inequality with both sides evaluated.
struct InequalityCheck {
  std::string name;
  std::string relation;  // "<=" or ">="
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
  std::string detail;
};

struct TraceVerification {
  std::vector<InequalityCheck> checks;
  bool all_hold = false;
};

// Re-derives every trace quantity from the certified instance and evaluates
// the counting inequalities.  The given trace must match the recomputation
// (else std::invalid_argument: it does not belong to this instance).  The
// rainbow-4-cycle-freeness certificate is required because two of the
// inequalities are claimed only under it.
TraceVerification verify_trace_inequalities(
    const ProofTrace& trace, const CertifiedLongestPath& path_cert,
    const CertifiedNoCycleAtLeast& nocycle_cert,
    const CertifiedRainbowC4Free& c4_cert);

}  // namespace rainbow
