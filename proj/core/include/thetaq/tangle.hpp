#pragma once

#include <random>
#include <string>
#include <vector>

#include "thetaq/cyclo.hpp"
#include "thetaq/intmat.hpp"
#include "thetaq/matrix.hpp"
#include "thetaq/skein.hpp"

namespace thetaq {

/// One horizontal slice of a link diagram, read bottom to top.
///
/// Cup inserts two strands at positions i, i+1: the left one carries the
/// irrep color downward, the right one is its dual running upward.
/// CupRev is the arrow-reversed birth.  Cap consumes a (down, up) pair of
/// equal color, CapRev an (up, down) pair.  Crossings swap strands i and
/// i+1; twists kink a single strand.
enum class EventKind {
    Cup,
    CupRev,
    Cap,
    CapRev,
    CrossPos,
    CrossNeg,
    TwistPos,
    TwistNeg
};

struct SliceEvent {
    EventKind kind = EventKind::Cup;
    size_t position = 0;
    long color = 0;  // meaningful for cups only
};

struct SliceDiagram {
    long N = 0;
    std::vector<SliceEvent> events;
};

/// Parses the .slc text format:
///   N <even>
///   cup <k> at <i> | cup* <k> at <i> | cap at <i> | cap* at <i>
///   x+ at <i> | x- at <i> | tw+ at <i> | tw- at <i>
/// with '#' comments.  The diagram is validated before being returned.
SliceDiagram parse_diagram(const std::string& text);

/// Structural validation: positions in range, caps matching, diagram
/// closed.  Throws BadPosition, ColorMismatch, OpenStrands, BadN.
void validate_diagram(const SliceDiagram& d);

/// The colored link invariant: the product over events of the slice
/// scalars t^{w w'}, t^{-w w'}, 1, 1, t^{w^2}, t^{-w^2} on strand
/// weights (down strand of color k weighs k, up strand -k).
CycloScalar evaluate(const SliceDiagram& d);

/// Abstract framed-link data recovered from a diagram.
struct LinkComponent {
    long color = 0;
    long framing = 0;  // signed self-crossings plus twist signs
};

struct LinkData {
    long N = 0;
    std::vector<LinkComponent> components;
    IntMat lk;  // symmetric, zero diagonal
};

/// Union-find over the cup/cap incidences; crossings and twists are
/// aggregated into framings and pairwise linking numbers.
LinkData trace_strands(const SliceDiagram& d);

/// Closed form t^{sum_i f_i k_i^2 + 2 sum_{i<j} lk_ij k_i k_j}.
CycloScalar linking_oracle(const LinkData& ld, long N);

/// Colors reduced mod N; the invariant is unchanged.
LinkData color_reduce(const LinkData& ld, long N);

/// The handlebody vector of the core curves a_1..a_g colored by the
/// given irrep labels: the basis element a_1^{k_1} ... a_g^{k_g}.
HandlebodyVector cable_to_skein(const std::vector<long>& core_colors, long N);

struct ColoredGram {
    CycloMatrix gram;
    size_t rank = 0;
};

/// Gram matrix of the Heegaard pairing on colored core links, entries
/// computed through the linking oracle, with its exact rank.
ColoredGram colored_gram(long N, size_t g,
                         const std::vector<std::vector<long>>& color_family);

/// Seeded generator of valid closed diagrams (constructive, no rejection).
SliceDiagram random_diagram(long N, std::mt19937_64& rng,
                            size_t event_budget = 18);

/// Reverses the orientation of every component (cup <-> cup*, cap <-> cap*).
SliceDiagram arrow_reversed(const SliceDiagram& d);

/// Shifts every cup color by the given amount mod 2N.
SliceDiagram color_shifted(const SliceDiagram& d, long shift);

}  // namespace thetaq
