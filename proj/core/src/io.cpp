#include "mcds/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

namespace mcds {

std::string_view to_string(ParseErrorCode code) {
    switch (code) {
        case ParseErrorCode::BadHeader: return "bad-header";
        case ParseErrorCode::BadCounts: return "bad-counts";
        case ParseErrorCode::NotAnInteger: return "not-an-integer";
        case ParseErrorCode::WrongFieldCount: return "wrong-field-count";
        case ParseErrorCode::ReversedInterval: return "reversed-interval";
        case ParseErrorCode::IntervalOutOfRange: return "interval-out-of-range";
        case ParseErrorCode::MissingInterval: return "missing-interval";
        case ParseErrorCode::TrailingContent: return "trailing-content";
        case ParseErrorCode::BadLabel: return "bad-label";
        case ParseErrorCode::CountMismatch: return "count-mismatch";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorCode code, int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + std::string(to_string(code)) + ": " + message),
      code_(code),
      line_(line) {}

namespace {

struct Line {
    int number;
    std::string_view text;
};

// Non-comment, non-blank lines with their 1-based line numbers.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        pos = line.find_first_not_of(" \t", pos);
        if (pos == std::string_view::npos) break;
        std::size_t end = line.find_first_of(" \t", pos);
        if (end == std::string_view::npos) end = line.size();
        out.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

int to_int(std::string_view s, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(ParseErrorCode::NotAnInteger, line, "'" + std::string(s) + "' is not an integer");
    return value;
}

std::pair<int, int> int_pair(const Line& l) {
    auto f = fields(l.text);
    if (f.size() != 2) throw ParseError(ParseErrorCode::WrongFieldCount, l.number, "expected two integers");
    return {to_int(f[0], l.number), to_int(f[1], l.number)};
}

}  // namespace

RawGraphFile parse_graph_raw(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty() || fields(lines[0].text) != std::vector<std::string_view>{"cbg", "1"})
        throw ParseError(ParseErrorCode::BadHeader, lines.empty() ? 1 : lines[0].number, "expected 'cbg 1'");
    if (lines.size() < 2) throw ParseError(ParseErrorCode::BadCounts, lines[0].number + 1, "missing '<nU> <nW>' line");

    RawGraphFile raw;
    std::tie(raw.n_u, raw.n_w) = int_pair(lines[1]);
    if (raw.n_u < 1 || raw.n_w < 1 || raw.n_u > kMaxSide || raw.n_w > kMaxSide)
        throw ParseError(ParseErrorCode::BadCounts, lines[1].number,
                         "side sizes must be within 1.." + std::to_string(kMaxSide));

    for (int i = 1; i <= raw.n_u; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i) + 1;
        if (idx >= lines.size())
            throw ParseError(ParseErrorCode::MissingInterval, lines.back().number + 1,
                             "expected " + std::to_string(raw.n_u) + " interval lines, found " + std::to_string(i - 1));
        const auto [left, right] = int_pair(lines[idx]);
        raw.intervals.push_back({left, right});
        raw.interval_lines.push_back(lines[idx].number);
    }
    if (lines.size() > static_cast<std::size_t>(raw.n_u) + 2)
        throw ParseError(ParseErrorCode::TrailingContent, lines[static_cast<std::size_t>(raw.n_u) + 2].number,
                         "unexpected content after the last interval");
    return raw;
}

ConvexBipartiteGraph parse_graph(std::string_view text) {
    RawGraphFile raw = parse_graph_raw(text);
    for (std::size_t k = 0; k < raw.intervals.size(); ++k) {
        const auto [left, right] = raw.intervals[k];
        const std::string who = "u" + std::to_string(k + 1);
        if (left > right)
            throw ParseError(ParseErrorCode::ReversedInterval, raw.interval_lines[k],
                             who + ": l=" + std::to_string(left) + " > r=" + std::to_string(right));
        if (left < 1 || right > raw.n_w)
            throw ParseError(ParseErrorCode::IntervalOutOfRange, raw.interval_lines[k],
                             who + ": [" + std::to_string(left) + "," + std::to_string(right) + "] outside 1.." +
                                 std::to_string(raw.n_w));
    }
    return ConvexBipartiteGraph(raw.n_u, raw.n_w, std::move(raw.intervals));
}

std::string serialize_graph(const ConvexBipartiteGraph& g) {
    std::string s = "cbg 1\n" + std::to_string(g.n_u()) + ' ' + std::to_string(g.n_w()) + '\n';
    for (const auto& iv : g.intervals()) s += std::to_string(iv.left) + ' ' + std::to_string(iv.right) + '\n';
    return s;
}

std::string format_solutions(const SolutionSet& sols) {
    std::string s;
    for (const auto& d : sols) s += d.to_string() + '\n';
    s += "count " + std::to_string(sols.size()) + '\n';
    return s;
}

SolutionSet parse_solutions(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(ParseErrorCode::CountMismatch, 1, "missing 'count' line");
    std::vector<VertexSet> sets;
    for (std::size_t k = 0; k + 1 < lines.size(); ++k) {
        VertexSet d;
        for (auto tok : fields(lines[k].text)) {
            if (tok.size() < 2 || (tok[0] != 'u' && tok[0] != 'w'))
                throw ParseError(ParseErrorCode::BadLabel, lines[k].number, "bad vertex label '" + std::string(tok) + "'");
            const int idx = to_int(tok.substr(1), lines[k].number);
            if (idx < 1 || idx > kMaxSide)
                throw ParseError(ParseErrorCode::BadLabel, lines[k].number, "index out of range in '" + std::string(tok) + "'");
            d.insert(tok[0] == 'u' ? u_vertex(idx) : w_vertex(idx));
        }
        sets.push_back(d);
    }
    const Line& last = lines.back();
    auto f = fields(last.text);
    if (f.size() != 2 || f[0] != "count") throw ParseError(ParseErrorCode::CountMismatch, last.number, "expected 'count <N>'");
    const int count = to_int(f[1], last.number);
    SolutionSet out(std::move(sets));
    if (count < 0 || static_cast<std::size_t>(count) != lines.size() - 1 || out.size() != lines.size() - 1)
        throw ParseError(ParseErrorCode::CountMismatch, last.number, "count does not match the solution lines");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

}  // namespace mcds
