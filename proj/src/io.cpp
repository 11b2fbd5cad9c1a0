#include "gmod/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace gmod {

InstanceFormat parse_format(const std::string& name) {
    if (name == "edge_list" || name == "edgelist")
        return InstanceFormat::edge_list;
    if (name == "dimacs" || name == "col")
        return InstanceFormat::dimacs;
    if (name == "tournament" || name == "tour")
        return InstanceFormat::tournament;
    if (name == "listcoloring" || name == "lc")
        return InstanceFormat::listcoloring;
    throw std::invalid_argument("unknown instance format: " + name);
}

const char* to_string(InstanceFormat f) {
    switch (f) {
    case InstanceFormat::edge_list: return "edge_list";
    case InstanceFormat::dimacs: return "dimacs";
    case InstanceFormat::tournament: return "tournament";
    default: return "listcoloring";
    }
}

InstanceFormat guess_format(const std::string& path) {
    auto ends_with = [&](const std::string& suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".tour"))
        return InstanceFormat::tournament;
    if (ends_with(".lc"))
        return InstanceFormat::listcoloring;
    if (ends_with(".col") || ends_with(".dimacs"))
        return InstanceFormat::dimacs;
    return InstanceFormat::edge_list;
}

namespace {

// Strips '#' comments and splits into tokens, remembering column positions.
struct Line {
    int number = 0;
    std::vector<std::string> tokens;
    std::vector<int> columns;
};

std::vector<Line> tokenize(std::istream& in, bool hash_comments = true) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string text = raw;
        if (hash_comments) {
            auto pos = text.find('#');
            if (pos != std::string::npos)
                text.resize(pos);
        }
        Line line;
        line.number = number;
        std::size_t i = 0;
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
                ++i;
            line.tokens.push_back(text.substr(start, i - start));
            line.columns.push_back(static_cast<int>(start) + 1);
        }
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

long long to_int(const Line& line, std::size_t idx, const char* what) {
    const std::string& tok = line.tokens[idx];
    try {
        std::size_t used = 0;
        long long value = std::stoll(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string("malformed ") + what + " '" + tok + "'", line.number,
                         line.columns[idx]);
    }
}

LabeledGraph graph_from_label_pairs(const std::vector<std::pair<long long, long long>>& pairs,
                                    const std::vector<Line>& origin,
                                    const std::vector<long long>& declared) {
    LabeledGraph out;
    std::vector<long long> labels(declared);
    for (auto& [a, b] : pairs) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    out.labels = labels;
    out.graph = Graph(static_cast<int>(labels.size()));
    std::map<long long, int> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        index[labels[i]] = i;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        int u = index[pairs[i].first], v = index[pairs[i].second];
        if (!out.graph.add_edge(u, v))
            out.warnings.push_back("duplicate edge " + std::to_string(pairs[i].first) + " " +
                                   std::to_string(pairs[i].second) + " at line " +
                                   std::to_string(origin[i].number) + " (ignored)");
    }
    return out;
}

} // namespace

LabeledGraph parse_edge_list(std::istream& in) {
    std::vector<std::pair<long long, long long>> pairs;
    std::vector<Line> origin;
    for (const Line& line : tokenize(in)) {
        if (line.tokens.size() != 2)
            throw ParseError("expected two vertex ids", line.number,
                             line.columns[std::min<std::size_t>(2, line.columns.size() - 1)]);
        long long a = to_int(line, 0, "vertex id");
        long long b = to_int(line, 1, "vertex id");
        if (a < 1 || b < 1)
            throw ParseError("vertex ids are 1-based", line.number, line.columns[a < 1 ? 0 : 1]);
        if (a == b)
            throw ParseError("self-loop " + std::to_string(a) + " " + std::to_string(b),
                             line.number, line.columns[0]);
        pairs.emplace_back(a, b);
        origin.push_back(line);
    }
    return graph_from_label_pairs(pairs, origin, {});
}

LabeledGraph parse_dimacs(std::istream& in) {
    std::vector<std::pair<long long, long long>> pairs;
    std::vector<Line> origin;
    long long n = -1, m = -1;
    for (const Line& line : tokenize(in, /*hash_comments=*/false)) {
        const std::string& kind = line.tokens[0];
        if (kind == "c")
            continue;
        if (kind == "p") {
            if (n != -1)
                throw ParseError("duplicate problem line", line.number, line.columns[0]);
            if (line.tokens.size() != 4 || (line.tokens[1] != "edge" && line.tokens[1] != "edges"))
                throw ParseError("expected 'p edge <n> <m>'", line.number, line.columns[0]);
            n = to_int(line, 2, "vertex count");
            m = to_int(line, 3, "edge count");
            if (n < 0 || m < 0)
                throw ParseError("negative size in problem line", line.number, line.columns[2]);
            continue;
        }
        if (kind == "e") {
            if (n == -1)
                throw ParseError("edge before problem line", line.number, line.columns[0]);
            if (line.tokens.size() != 3)
                throw ParseError("expected 'e <u> <v>'", line.number, line.columns[0]);
            long long a = to_int(line, 1, "vertex id");
            long long b = to_int(line, 2, "vertex id");
            if (a < 1 || a > n || b < 1 || b > n)
                throw ParseError("vertex id out of declared range", line.number, line.columns[1]);
            if (a == b)
                throw ParseError("self-loop " + std::to_string(a), line.number, line.columns[1]);
            pairs.emplace_back(a, b);
            origin.push_back(line);
            continue;
        }
        throw ParseError("unknown line type '" + kind + "'", line.number, line.columns[0]);
    }
    if (n == -1)
        throw ParseError("missing problem line", 1, 1);
    std::vector<long long> declared(n);
    std::iota(declared.begin(), declared.end(), 1);
    return graph_from_label_pairs(pairs, origin, declared);
}

Tournament parse_tournament(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty())
        throw ParseError("missing vertex count", 1, 1);
    if (lines[0].tokens.size() != 1)
        throw ParseError("expected a single vertex count", lines[0].number, lines[0].columns[0]);
    long long n = to_int(lines[0], 0, "vertex count");
    if (n < 0)
        throw ParseError("negative vertex count", lines[0].number, lines[0].columns[0]);
    std::vector<Arc> arcs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2)
            throw ParseError("expected 'u v' arc line", line.number, line.columns[0]);
        long long a = to_int(line, 0, "vertex id");
        long long b = to_int(line, 1, "vertex id");
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError("vertex id out of range", line.number, line.columns[a < 1 || a > n ? 0 : 1]);
        if (a == b)
            throw ParseError("self-loop arc", line.number, line.columns[0]);
        arcs.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    try {
        return Tournament::from_arcs(static_cast<int>(n), arcs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lines.empty() ? 1 : lines.back().number, 1);
    }
}

ListColoringFile parse_listcoloring(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty())
        throw ParseError("missing vertex count", 1, 1);
    if (lines[0].tokens.size() != 1)
        throw ParseError("expected a single vertex count", lines[0].number, lines[0].columns[0]);
    long long n = to_int(lines[0], 0, "vertex count");
    if (n < 0)
        throw ParseError("negative vertex count", lines[0].number, lines[0].columns[0]);
    if (static_cast<long long>(lines.size()) < 1 + n)
        throw ParseError("fewer list lines than vertices", lines.back().number, 1);
    ListColoringFile out;
    out.graph = Graph(static_cast<int>(n));
    out.lists.resize(n);
    for (long long v = 0; v < n; ++v) {
        const Line& line = lines[1 + v];
        long long count = to_int(line, 0, "list size");
        if (count < 0 || static_cast<long long>(line.tokens.size()) != count + 1)
            throw ParseError("list size does not match the number of colors", line.number,
                             line.columns[0]);
        for (long long i = 1; i <= count; ++i) {
            long long c = to_int(line, i, "color");
            if (c < 1)
                throw ParseError("colors are 1-based", line.number, line.columns[i]);
            out.lists[v].push_back(static_cast<int>(c));
        }
        std::sort(out.lists[v].begin(), out.lists[v].end());
        out.lists[v].erase(std::unique(out.lists[v].begin(), out.lists[v].end()),
                           out.lists[v].end());
    }
    for (std::size_t i = 1 + n; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2)
            throw ParseError("expected two vertex ids", line.number, line.columns[0]);
        long long a = to_int(line, 0, "vertex id");
        long long b = to_int(line, 1, "vertex id");
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError("vertex id out of range", line.number, line.columns[0]);
        if (a == b)
            throw ParseError("self-loop", line.number, line.columns[0]);
        out.graph.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    return out;
}

std::string serialize_edge_list(const LabeledGraph& g) {
    std::ostringstream os;
    for (const Edge& e : g.graph.edges())
        os << g.labels[e.u] << ' ' << g.labels[e.v] << '\n';
    return os.str();
}

std::string serialize_dimacs(const LabeledGraph& g) {
    std::ostringstream os;
    os << "p edge " << g.graph.num_vertices() << ' ' << g.graph.num_edges() << '\n';
    for (const Edge& e : g.graph.edges())
        os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return os.str();
}

std::string serialize_tournament(const Tournament& t) {
    std::ostringstream os;
    os << t.num_vertices() << '\n';
    for (const Arc& a : t.arcs())
        os << a.from + 1 << ' ' << a.to + 1 << '\n';
    return os.str();
}

std::string serialize_listcoloring(const ListColoringFile& f) {
    std::ostringstream os;
    os << f.graph.num_vertices() << '\n';
    for (const auto& list : f.lists) {
        os << list.size();
        for (int c : list)
            os << ' ' << c;
        os << '\n';
    }
    for (const Edge& e : f.graph.edges())
        os << e.u + 1 << ' ' << e.v + 1 << '\n';
    return os.str();
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return in;
}

} // namespace

LabeledGraph load_graph(const std::string& path, InstanceFormat fmt) {
    auto in = open_or_throw(path);
    switch (fmt) {
    case InstanceFormat::edge_list: return parse_edge_list(in);
    case InstanceFormat::dimacs: return parse_dimacs(in);
    default: throw std::invalid_argument("format does not describe a plain graph");
    }
}

Tournament load_tournament(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_tournament(in);
}

ListColoringFile load_listcoloring(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_listcoloring(in);
}

std::string rational_string(long long twice_value) {
    if (twice_value % 2 == 0)
        return std::to_string(twice_value / 2);
    return std::to_string(twice_value) + "/2";
}

} // namespace gmod
