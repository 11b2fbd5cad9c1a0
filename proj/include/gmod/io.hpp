#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmod/graph.hpp"
#include "gmod/tournament.hpp"

namespace gmod {

enum class InstanceFormat { edge_list, dimacs, tournament, listcoloring };

InstanceFormat parse_format(const std::string& name); // throws on unknown names
const char* to_string(InstanceFormat f);
// Guess from the file extension (.tour, .lc, .col/.dimacs), else edge_list.
InstanceFormat guess_format(const std::string& path);

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(column_)),
          line(line_), column(column_) {}
};

// Graph over dense internal ids together with the original 1-based labels
// (sorted, so identical label sets always map identically).
struct LabeledGraph {
    Graph graph;
    std::vector<long long> labels;         // dense id -> external label
    std::vector<std::string> warnings;     // duplicate-edge notes

    bool operator==(const LabeledGraph& o) const {
        return graph == o.graph && labels == o.labels;
    }
};

struct ListColoringFile {
    Graph graph;
    std::vector<std::vector<int>> lists;

    bool operator==(const ListColoringFile&) const = default;
};

// Whitespace-separated 1-based vertex pairs, one edge per line, '#' comments.
LabeledGraph parse_edge_list(std::istream& in);
// DIMACS: 'c' comments, 'p edge <n> <m>' header, 'e <u> <v>' edge lines.
LabeledGraph parse_dimacs(std::istream& in);
// First line n, then one line "u v" per ordered arc, 1-based; every pair
// must be oriented exactly once.
Tournament parse_tournament(std::istream& in);
// First line n; then n list lines "count c1 .. ck"; then edge lines as in
// the edge-list format.
ListColoringFile parse_listcoloring(std::istream& in);

std::string serialize_edge_list(const LabeledGraph& g);
std::string serialize_dimacs(const LabeledGraph& g);
std::string serialize_tournament(const Tournament& t);
std::string serialize_listcoloring(const ListColoringFile& f);

LabeledGraph load_graph(const std::string& path, InstanceFormat fmt);
Tournament load_tournament(const std::string& path);
ListColoringFile load_listcoloring(const std::string& path);

// "p/q" in lowest terms (q omitted when 1); used for exact LP values.
std::string rational_string(long long twice_value);

} // namespace gmod
