#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csg/chords.hpp"
#include "csg/intmat.hpp"
#include "csg/marking.hpp"

namespace csg {

// Fatgraph JSON: {"half_edges": n, "pairing": [...], "heads": [...],
// "vertex_cycles": [[...]], "tail": d} plus an optional "marking" array of
// one word per dart. Diagram JSON: {"slots": ["a", "~b", ...]} plus an
// optional "marking" array of one word per chord.

std::string fatgraph_to_json(const Fatgraph& g, const Pi1Marking* m = nullptr);
Fatgraph fatgraph_from_json(const std::string& text, std::optional<Pi1Marking>* m = nullptr);

std::string diagram_to_json(const ChordDiagram& c, const DiagramMarking* m = nullptr);
ChordDiagram diagram_from_json(const std::string& text, std::optional<DiagramMarking>* m = nullptr);

// Slide files: one "mover along" pair of slot numbers per line; blank lines
// and lines starting with # are skipped.
std::vector<ChordSlide> parse_slides(const std::string& text);
std::string format_slides(const std::vector<ChordSlide>& slides);

// Whitespace-separated integer rows, one matrix row per line.
MatZ parse_matrix(const std::string& text);
std::string format_matrix(const MatZ& m);

// Whole-file helpers; throw ParseError on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace csg
