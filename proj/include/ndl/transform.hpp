#ifndef NDL_TRANSFORM_HPP
#define NDL_TRANSFORM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ndl/graph.hpp"
#include "ndl/switches.hpp"

namespace ndl {

inline constexpr int kDefaultFallbackBound = 8;

// Recorded when an existence claim of the constructive argument fails
// to produce a witness on a concrete input.
struct ProofGapEvent {
    enum class Stage {
        canonicalize_no_y,      // no y adjacent to x, non-adjacent to z, deg(y)=deg(w)
        recursion_ndl_mismatch, // NDL(G*-w) != NDL(H*-w_H)
    };

    Stage stage = Stage::canonicalize_no_y;
    int w = -1, z = -1, x = -1; // vertices involved; -1 when not applicable
    int snapshot = 0;           // switches applied to the graph when recorded

    friend bool operator==(const ProofGapEvent&, const ProofGapEvent&) = default;
};

struct CanonicalizeResult {
    Graph graph;
    SwitchSequence seq;
    std::vector<ProofGapEvent> gaps;
};

// Repeatedly swap neighbors of w for equal-degree non-neighbors with
// strictly greater NDL, via degree-restricted switches, until no
// improving switch exists. Absence of the switch partner y is recorded
// as a gap event and that neighbor is skipped.
CanonicalizeResult canonicalize_around(const Graph& g, int w);

struct TransformTelemetry {
    int recursion_depth = 0;
    int canonicalization_switches = 0;
    int fallback_invocations = 0;
    int lift_replay_failures = 0; // lifted subsequence not degree-restricted in the full graph
    int glue_repairs = 0;         // spliced bijection replaced by a fresh isomorphism
    std::vector<ProofGapEvent> gap_events;
};

struct TransformResult {
    SwitchSequence seq_g;     // applied to G
    SwitchSequence seq_h;     // applied to H
    VertexBijection bijection; // replay(G,seq_g) relabeled by this equals replay(H,seq_h)
    TransformTelemetry telemetry;
};

enum class TransformStatus {
    ok,
    not_equivalent,
    diameter_violation,
};

struct TransformOutcome {
    TransformStatus status = TransformStatus::ok;
    std::optional<TransformResult> result;
};

struct TransformOptions {
    int fallback_bound = kDefaultFallbackBound;
};

// Constructive certificate between graphs with equal NDL. Existence
// claims of the construction are checked at runtime; failures recorded
// in telemetry and bridged by fallback_search. Soundness (replay +
// bijection) is asserted before returning.
TransformOutcome transform_by_ndl(const Graph& g, const Graph& h,
                                  const TransformOptions& opts = {});

// Diameter-2 pipeline: derives degree sequences and NDL from the
// 2-neighborhood profiles, cross-checks them against the directly
// computed ones, then delegates to transform_by_ndl.
TransformOutcome transform_by_n2dl(const Graph& g, const Graph& h,
                                   const TransformOptions& opts = {});

// Applies steps in order; throws invalid_step(index) if any step is not
// degree-restricted at its moment of application.
Graph replay(const Graph& g, const SwitchSequence& seq);

struct FallbackResult {
    bool reachable = false;
    SwitchSequence seq;        // applied to g
    VertexBijection bijection; // replay(g,seq) relabeled by this equals h
};

// Breadth-first search over canonical forms with degree-restricted
// moves; returns a shortest certificate or reachable=false.
FallbackResult fallback_search(const Graph& g, const Graph& h,
                               int bound = kDefaultFallbackBound);

// Collapses a two-sided result into one G-side sequence: seq_g followed
// by the reversed, inverted, relabeled H-side steps. The returned
// bijection beta satisfies relabel(replay(g, seq), beta) == h.
std::pair<SwitchSequence, VertexBijection> single_path(const TransformResult& r);

} // namespace ndl

#endif
