#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcds/graph.hpp"
#include "mcds/oracle.hpp"

namespace mcds {

// Graph file:
//   cbg 1
//   <nU> <nW>
//   <l> <r>        one line per U vertex, 1-based W indices
// Lines starting with '#' are comments; blank lines are ignored.
//
// Solution file: one solution per line, labels in canonical order separated by
// single spaces, lines in canonical lexicographic order, then "count <N>".

enum class ParseErrorCode {
    BadHeader,
    BadCounts,
    NotAnInteger,
    WrongFieldCount,
    ReversedInterval,
    IntervalOutOfRange,
    MissingInterval,
    TrailingContent,
    BadLabel,
    CountMismatch,
};

std::string_view to_string(ParseErrorCode code);

class ParseError : public std::runtime_error {
   public:
    ParseError(ParseErrorCode code, int line, const std::string& message);
    ParseErrorCode code() const { return code_; }
    int line() const { return line_; }

   private:
    ParseErrorCode code_;
    int line_;
};

/// Header, counts and interval lines as written, before range checks.
struct RawGraphFile {
    int n_u = 0;
    int n_w = 0;
    std::vector<Interval> intervals;
    std::vector<int> interval_lines;  ///< source line of each interval
};

RawGraphFile parse_graph_raw(std::string_view text);
ConvexBipartiteGraph parse_graph(std::string_view text);
std::string serialize_graph(const ConvexBipartiteGraph& g);

std::string format_solutions(const SolutionSet& sols);
SolutionSet parse_solutions(std::string_view text);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace mcds
