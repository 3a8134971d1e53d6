/* Gluing a cyclic word into its one-face embedded graph: validation of the
 * Wicks conditions, genus, maximality and canonical forms. */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wicks/words.hpp"

namespace wicks {

// Positions 0..n-1 are the sides of the gluing polygon, read around the
// boundary; position i doubles as the dart (edge end) that emanates from
// the vertex its corner belongs to and reads letter w[i].
struct GluingStructure {
    std::size_t n = 0;
    std::vector<int32_t> pairing;                    // position of the inverse occurrence
    std::vector<std::vector<int32_t>> corner_orbits; // cycles of i -> pairing(i)+1 mod n
    std::vector<int32_t> orbit_of;                   // position -> orbit index
};

struct EdgeRecord {
    int32_t base = 0;
    int32_t dart_pos = -1; // position of the positive occurrence
    int32_t dart_neg = -1; // position of the negative occurrence
};

struct EmbeddedGraph {
    // Per vertex: darts in rotation order (each list starts at its least
    // position). Following the list is following sigma = pairing + 1.
    std::vector<std::vector<int32_t>> rotations;
    std::vector<int32_t> vertex_of; // dart position -> vertex index
    std::vector<EdgeRecord> edges;  // sorted by base
    std::vector<Letter> dart_letter;

    std::size_t vertex_count() const { return rotations.size(); }
    std::size_t edge_count() const { return edges.size(); }
    std::vector<int> degrees() const;
    bool loop_free() const;
    bool cubic() const;
    std::string describe() const; // "v=.. e=.. degrees=.." + rotation lines
};

enum class WicksCondition : int {
    LetterPairs = 1,      // (i) each base occurs once with each sign
    CyclicallyReduced = 2, // (ii)
    MirrorFactor = 3,      // (iii) no length-2 factor with its inverse also a factor
};

struct ValidationReport {
    bool pass = true;
    WicksCondition condition = WicksCondition::LetterPairs;
    std::size_t position = 0;
    std::string detail;

    std::string to_line() const; // "PASS" or "FAIL <i|ii|iii> <position>"
};

ValidationReport validate_wicks(const CyclicWord& w);

/// True iff each occurring base occurs exactly once with each sign
/// (condition (i) alone; the gluing is defined exactly for such words).
bool letter_pairs_ok(const CyclicWord& w);

/// Corner orbits of the polygon gluing. Requires condition (i) and a
/// nonempty word; throws std::invalid_argument otherwise.
GluingStructure glue_structure(const CyclicWord& w);
EmbeddedGraph glue(const CyclicWord& w);

/// g = (1 + e - v) / 2 from the gluing. Throws std::logic_error if
/// 1 + e - v comes out odd (impossible for an orientable gluing).
int topological_genus(const CyclicWord& w);

/// Reads the single face of the rotation system back off the graph;
/// equals [w] for any graph produced by glue(w).
CyclicWord face_trace(const EmbeddedGraph& g);

/// Relabel-then-minimize canonical form: bases renamed in first-occurrence
/// order (first occurrence positive) for every rotation, least result kept.
/// Two length-(i)-valid words are isomorphic iff canonical forms are equal.
CyclicWord canonical_form(const CyclicWord& w);

struct WicksForm {
    CyclicWord word;
    EmbeddedGraph graph;
    int genus = 0;
    bool maximal = false;

    /// Validates and glues; throws std::invalid_argument with the rendered
    /// report when validation fails.
    static WicksForm build(const CyclicWord& w);
};

} // namespace wicks
