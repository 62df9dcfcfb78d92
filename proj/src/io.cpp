#include "stabilkit/io.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>
#include <vector>

namespace stabilkit {

namespace {

struct Line {
    int number;  // 1-based
    std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        size_t first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#')
            out.push_back({number, line});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

std::vector<long long> parse_ints(const Line& line, size_t expected) {
    std::vector<long long> vals;
    const char* p = line.text.data();
    const char* end = p + line.text.size();
    while (p != end) {
        while (p != end && (*p == ' ' || *p == '\t')) ++p;
        if (p == end) break;
        long long v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc() || next == p)
            throw ParseError(line.number, "expected integer");
        vals.push_back(v);
        p = next;
    }
    if (vals.size() != expected)
        throw ParseError(line.number, "expected " + std::to_string(expected) +
                                          " integers, got " + std::to_string(vals.size()));
    return vals;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError(0, "empty instance");
    auto header = parse_ints(lines[0], 2);
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw ParseError(lines[0].number, "negative vertex or edge count");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto uv = parse_ints(lines[i], 2);
        long long u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lines[i].number, "vertex index out of range");
        if (u == v) throw ParseError(lines[i].number, "self-loop");
        Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
        for (const Edge& prev : edges)
            if (prev == e) throw ParseError(lines[i].number, "duplicate edge");
        edges.push_back(e);
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string serialize_solution(const StabilizerSolution& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    auto& matching = j["matching"] = nlohmann::ordered_json::array();
    for (const Edge& e : s.matching.edges()) matching.push_back({e.u, e.v});
    auto& y2 = j["y2"] = nlohmann::ordered_json::array();
    for (const HalfInt& y : s.y) y2.push_back(y.doubled());
    auto& c2 = j["c2"] = nlohmann::ordered_json::array();
    for (const auto& [e, val] : s.c)
        if (val != HalfInt::zero()) c2.push_back({e.u, e.v, val.doubled()});
    j["cost2"] = s.cost.doubled();
    return j.dump() + "\n";
}

StabilizerSolution parse_solution(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        StabilizerSolution s;
        s.n = j.at("n").get<int>();
        if (s.n < 0) throw ParseError(0, "negative vertex count in certificate");
        std::vector<Edge> medges;
        for (const auto& pair : j.at("matching")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError(0, "matching entry is not a pair");
            int u = pair[0].get<int>(), v = pair[1].get<int>();
            if (u == v || u < 0 || v < 0 || u >= s.n || v >= s.n)
                throw ParseError(0, "bad matching endpoint");
            medges.push_back(make_edge(u, v));
        }
        try {
            s.matching = Matching(std::move(medges));
        } catch (const InternalError& e) {
            throw ParseError(0, std::string("bad matching: ") + e.what());
        }
        const auto& y2 = j.at("y2");
        if (static_cast<int>(y2.size()) != s.n)
            throw ParseError(0, "y2 length does not match n");
        for (const auto& val : y2) s.y.push_back(HalfInt::from_doubled(val.get<long long>()));
        for (const auto& entry : j.at("c2")) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError(0, "c2 entry is not a triple");
            int u = entry[0].get<int>(), v = entry[1].get<int>();
            if (u == v || u < 0 || v < 0 || u >= s.n || v >= s.n)
                throw ParseError(0, "bad c2 endpoint");
            HalfInt val = HalfInt::from_doubled(entry[2].get<long long>());
            if (val != HalfInt::zero()) s.c.push_back({make_edge(u, v), val});
        }
        std::sort(s.c.begin(), s.c.end());
        for (size_t i = 1; i < s.c.size(); ++i)
            if (s.c[i - 1].first == s.c[i].first)
                throw ParseError(0, "duplicate c2 entry");
        s.cost = HalfInt::from_doubled(j.at("cost2").get<long long>());
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace stabilkit
