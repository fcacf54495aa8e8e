#include "cat/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cat/error.hpp"

namespace cat {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        out.push_back(trim(std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

double parse_number(const std::string& field, std::size_t line_no) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    if (!field.empty() && *begin == '+') ++begin;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        throw FormatError("line " + std::to_string(line_no) + ": cannot parse '" + field + "' as a number");
    }
    if (!std::isfinite(value)) throw NonFiniteInput("line " + std::to_string(line_no) + ": non-finite value");
    return value;
}

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.from + 1, e.to + 1});
    return out;
}

json number_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

struct ParsedGraph {
    std::size_t p;
    std::vector<Edge> edges;
};

ParsedGraph parse_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid graph JSON: ") + e.what());
    }
    try {
        const auto p = doc.at("p").get<long long>();
        if (p < 1) throw FormatError("graph JSON needs p >= 1");
        ParsedGraph g{static_cast<std::size_t>(p), {}};
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a [from, to] pair");
            const auto from = e[0].get<long long>(), to = e[1].get<long long>();
            if (from < 1 || to < 1 || from > p || to > p) throw FormatError("edge endpoint out of range 1..p");
            g.edges.push_back({static_cast<Node>(from - 1), static_cast<Node>(to - 1)});
        }
        return g;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed graph JSON: ") + e.what());
    }
}

json substructure_json(const Substructure& r) {
    json out;
    out["required"] = edges_json(r.required);
    out["forbidden"] = edges_json(r.forbidden);
    out["root"] = r.root ? json(*r.root + 1) : json(nullptr);
    return out;
}

}  // namespace

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Dataset read_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> names;
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) break;
    }
    if (trim(line).empty()) throw FormatError("missing header row");
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    for (const auto& f : split_fields(line)) names.push_back(unquote(f));
    // a header made only of numbers is a missing header
    bool numeric = true;
    for (const auto& name : names) {
        double v;
        const auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
        if (ec != std::errc() || ptr != name.data() + name.size() || name.empty()) numeric = false;
    }
    if (numeric) throw FormatError("the first row must be a header of column names");
    const std::size_t p = names.size();
    std::vector<double> values;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != p) {
            throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(p) + " fields, got " +
                              std::to_string(fields.size()));
        }
        for (const auto& f : fields) values.push_back(parse_number(f, line_no));
        ++n;
    }
    if (n == 0) throw FormatError("no data rows");
    return Dataset(n, p, values, names);
}

Dataset read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_csv(in);
}

void write_csv(std::ostream& out, const Dataset& d) {
    for (std::size_t c = 0; c < d.p(); ++c) out << (c ? "," : "") << d.names()[c];
    out << '\n';
    for (std::size_t r = 0; r < d.n(); ++r) {
        for (std::size_t c = 0; c < d.p(); ++c) out << (c ? "," : "") << format_number(d(r, c));
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const Dataset& d) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    write_csv(out, d);
}

std::string tree_json(const DirectedTree& t) {
    json doc;
    doc["p"] = t.size();
    doc["root"] = t.root() + 1;
    doc["edges"] = edges_json(t.edges());
    return doc.dump() + "\n";
}

std::string dag_json(const Dag& g) {
    json doc;
    doc["p"] = g.size();
    std::vector<Node> roots;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.parents(static_cast<Node>(v)).empty()) roots.push_back(static_cast<Node>(v));
    }
    if (roots.size() == 1) doc["root"] = roots.front() + 1;
    doc["edges"] = edges_json(g.edges());
    return doc.dump() + "\n";
}

DirectedTree read_tree_json(const std::string& text) {
    const ParsedGraph g = parse_graph(text);
    return validate_tree(g.p, g.edges);
}

Dag read_dag_json(const std::string& text) {
    ParsedGraph g = parse_graph(text);
    return Dag(g.p, std::move(g.edges));
}

std::string weights_csv(const WeightMatrix& w) {
    std::ostringstream out;
    out << "from,to,weight\n";
    for (std::size_t j = 0; j < w.size(); ++j) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i == j || w.forbidden(static_cast<Node>(j), static_cast<Node>(i))) continue;
            out << j + 1 << ',' << i + 1 << ',' << format_number(w(static_cast<Node>(j), static_cast<Node>(i))) << '\n';
        }
    }
    return out.str();
}

WeightMatrix read_weights_csv(std::istream& in, std::size_t p) {
    WeightMatrix w(p);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < p; ++i) {
            if (i != j) w.forbid(static_cast<Node>(j), static_cast<Node>(i));
        }
    }
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || trim(line) != "from,to,weight") throw FormatError("expected header from,to,weight");
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 3) throw FormatError("line " + std::to_string(line_no) + ": expected 3 fields");
        const double from = parse_number(f[0], line_no), to = parse_number(f[1], line_no);
        if (from != std::floor(from) || to != std::floor(to) || from < 1 || to < 1 || from > static_cast<double>(p) ||
            to > static_cast<double>(p) || from == to) {
            throw FormatError("line " + std::to_string(line_no) + ": invalid edge");
        }
        w.set(static_cast<Node>(from) - 1, static_cast<Node>(to) - 1, parse_number(f[2], line_no));
    }
    return w;
}

std::string learn_json(const LearnResult& r) {
    json doc;
    doc["p"] = r.tree.size();
    doc["root"] = r.tree.root() + 1;
    doc["edges"] = edges_json(r.tree.edges());
    doc["score"] = r.score;
    json weights = json::array();
    for (const WeightedEdge& e : r.edges) weights.push_back({e.edge.from + 1, e.edge.to + 1, e.weight});
    doc["edge_weights"] = weights;
    return doc.dump(2) + "\n";
}

std::string gap_json(const GapReport& g) {
    json doc;
    doc["best_score"] = g.best_score;
    doc["second_score"] = g.second_score;
    doc["gap"] = g.gap;
    doc["best_tree"] = json::parse(tree_json(g.best_tree));
    doc["second_tree"] = json::parse(tree_json(g.second_tree));
    if (g.min_reversal) {
        doc["min_edge_reversal"] = g.min_reversal->value;
        doc["min_edge_reversal_edge"] = {g.min_reversal->edge.from + 1, g.min_reversal->edge.to + 1};
    }
    if (g.piw) {
        doc["piw_min_cmi"] = g.piw->value;
        doc["piw_triple"] = {g.piw->triple.w + 1, g.piw->triple.l + 1, g.piw->triple.o + 1};
    }
    return doc.dump(2) + "\n";
}

std::string test_json(const TestReport& r) {
    json doc;
    doc["alpha"] = r.alpha;
    doc["n_eval"] = r.n_eval;
    doc["s_restricted"] = number_or_null(r.result.s_restricted);
    doc["s_upper"] = r.result.s_upper;
    doc["psi"] = r.result.reject ? 1 : 0;
    doc["constraints"] = substructure_json(r.constraints);
    return doc.dump(2) + "\n";
}

std::string metrics_json(const MetricReport& m) {
    json doc;
    doc["shd"] = m.shd;
    doc["sid"] = m.sid;
    doc["ancestor_tpr"] = m.ancestor_tpr;
    doc["ancestor_recall"] = m.ancestor_recall;
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << text;
}

}  // namespace cat
