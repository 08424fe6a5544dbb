#pragma once

#include "hfs/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hfs {

enum class Status { Polynomial, NPHard, Open };

enum class Rule {
    None,
    Obs1,
    ThmEasy1,
    ThmEasy2,
    RoofTriangle,
    AdjacentHangingTriangles,
    UniqueTriangle,
    Girth4A,
    Girth4B1,
    Girth4B2core,
    TreeEven,
    TreeOdd,
};

struct PatternVerdict {
    Status status = Status::Open;
    Rule rule = Rule::None;
    /// Rule-specific payload as key/value pairs (values contain no spaces).
    std::vector<std::pair<std::string, std::string>> witness;
    /// Every rule that applies, in dispatch order (filled in diagnostic mode).
    std::vector<Rule> applicable;
    std::vector<std::string> notes;
};

/// Throws EmptyPattern for the graph with no vertices.
PatternVerdict classify(const Graph& h, bool diagnostics = false);

const char* to_string(Status s);
const char* to_string(Rule r);
/// "status=... rule=..." followed by the witness tokens.
std::string verdict_record(const PatternVerdict& v);

} // namespace hfs
