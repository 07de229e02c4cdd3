#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "equivol/polyhedron.hpp"

namespace equivol {

// A plane graph as a rotation system: rotations[v] lists the neighbors of v
// in cyclic order around v, 0-based.  offset is where the record started in
// the byte stream it was parsed from (0 for graphs built in memory).
struct PlanarEmbeddedGraph {
  int n = 0;
  std::vector<std::vector<int>> rotations;
  std::size_t offset = 0;
};

struct ParsedPlanarCode {
  std::vector<PlanarEmbeddedGraph> graphs;
  bool had_header = false;
};

// planar_code: optional ">>planar_code<<" header, then per graph one byte n
// followed by n zero-terminated neighbor lists (1-based bytes).  Only the
// single-byte variant is supported, so n is 1..255.  Errors: BadHeader,
// Unsupported (n == 0 escape byte), TruncatedRecord (with the offending
// record's byte offset in the message), InconsistentRotation (neighbor out
// of range, repeated, self, or missing the reverse entry).
ParsedPlanarCode parse_planar_code(const std::string& bytes);

// Inverse of parse_planar_code; serialize(parse(x)) == x byte for byte.
// Unsupported if any graph has more than 255 vertices.
std::string serialize_planar_code(const ParsedPlanarCode& parsed);

// Faces traced from the rotation system: after the dart u -> v the walk
// continues to the neighbor after u in the rotation at v.  NotSpherical
// unless n - e + f == 2; the face list is then validated the usual way.
AbstractPolyhedron to_polyhedron(const PlanarEmbeddedGraph& graph,
                                 std::optional<AngleKind> label = {});

// Rotation system whose face tracing reproduces p's faces.  Orients the
// faces consistently first, then reads each vertex's cyclic neighbor order
// off the incident corners.
PlanarEmbeddedGraph from_polyhedron(const AbstractPolyhedron& p);

// One census row per input graph, in input order.  Realizable rows carry
// volume bounds; failed rows keep the failed condition names and a short
// witness summary in notes; graphs that do not even build a polyhedron
// keep the error text in notes so the output stays 1:1 with the input.
struct CensusRecord {
  int id = 0;
  std::string source;
  std::string kind;
  int n = 0;
  int n_ideal = 0;
  int n_finite = 0;
  int f = 0;
  bool realizable = false;
  std::vector<std::string> failed_conditions;
  std::optional<double> lower;
  std::optional<bool> lower_strict;
  std::optional<double> upper;
  std::optional<bool> upper_strict;
  std::optional<std::string> notes;
};

// Runs the realizability check and, where it passes, the volume bounds for
// every graph.  kind is "pi2" or "pi3".  jobs > 1 fans the graphs out over
// a thread pool; output order and content are independent of jobs.  source
// names each row as "<source_name>:<record offset>".
std::vector<CensusRecord> annotate(const std::vector<PlanarEmbeddedGraph>& graphs,
                                   const std::string& kind, int jobs,
                                   const std::string& source_name);

// Keeps realizable records whose volume lower bound admits the cap: strict
// lower bounds use <, attained ones <=.  Non-realizable records drop.
std::vector<CensusRecord> filter_by_volume_cap(
    const std::vector<CensusRecord>& records, double cap);

std::string records_to_jsonl(const std::vector<CensusRecord>& records);
std::string records_to_csv(const std::vector<CensusRecord>& records);

}  // namespace equivol
