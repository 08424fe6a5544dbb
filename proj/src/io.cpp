#include "hfs/io.hpp"

#include "hfs/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hfs {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;
    std::vector<std::string>* comments = nullptr;

    // Next non-blank, non-comment line split into tokens; false at end of input.
    bool next(std::vector<std::string>& tokens)
    {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos)
                continue;
            if (line[first] == '#') {
                if (comments) {
                    auto text = line.find_first_not_of(" \t", first + 1);
                    auto last = line.find_last_not_of(" \t\r");
                    comments->push_back(text == std::string::npos ? "" : line.substr(text, last - text + 1));
                }
                continue;
            }
            std::istringstream ss(line);
            tokens.clear();
            for (std::string t; ss >> t;)
                tokens.push_back(t);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + why);
    }

    long long number(const std::string& token) const
    {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            fail("expected integer, got '" + token + "'");
        }
        if (used != token.size() || value < 0)
            fail("expected non-negative integer, got '" + token + "'");
        return value;
    }

    // Header "<tag> <count>" (graph header handled separately).
    long long header(char tag)
    {
        std::vector<std::string> t;
        if (!next(t))
            fail(std::string("missing '") + tag + "' header");
        if (t.size() != 2 || t[0] != std::string(1, tag))
            fail(std::string("expected '") + tag + " <count>'");
        return number(t[1]);
    }

    std::pair<long long, long long> pair_line(char tag)
    {
        std::vector<std::string> t;
        if (!next(t))
            fail("unexpected end of input");
        if (t.size() != 3 || t[0] != std::string(1, tag))
            fail(std::string("expected '") + tag + " <u> <v>'");
        return {number(t[1]), number(t[2])};
    }

    void expect_end()
    {
        std::vector<std::string> t;
        if (next(t))
            fail("trailing content");
    }
};

} // namespace

Graph parse_graph(std::istream& in, std::vector<std::string>* comments)
{
    LineReader r{in, 0, comments};
    std::vector<std::string> t;
    if (!r.next(t))
        r.fail("missing 'p sub' header");
    if (t.size() != 4 || t[0] != "p" || t[1] != "sub")
        r.fail("expected 'p sub <n> <m>'");
    long long n = r.number(t[2]);
    long long m = r.number(t[3]);
    if (n > 50'000'000)
        r.fail("vertex count too large");
    GraphBuilder b(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        auto [u, v] = r.pair_line('e');
        if (u >= n || v >= n)
            r.fail("endpoint out of range");
        if (u == v)
            r.fail("self-loop");
        if (b.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            r.fail("parallel edge");
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    r.expect_end();
    return b.build();
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << "p sub " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
}

SubdivisionSolution parse_solution(std::istream& in)
{
    LineReader r{in};
    long long t = r.header('s');
    SubdivisionSolution sol;
    for (long long i = 0; i < t; ++i) {
        auto [u, v] = r.pair_line('d');
        sol.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    r.expect_end();
    return sol;
}

void write_solution(std::ostream& out, const SubdivisionSolution& sol)
{
    out << "s " << sol.size() << '\n';
    for (const auto& s : sol)
        out << "d " << s.u << ' ' << s.v << '\n';
}

std::vector<Edge> parse_edge_set(std::istream& in)
{
    LineReader r{in};
    long long t = r.header('f');
    std::vector<Edge> out;
    for (long long i = 0; i < t; ++i) {
        auto [u, v] = r.pair_line('e');
        if (u == v)
            r.fail("self-loop");
        out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    r.expect_end();
    std::sort(out.begin(), out.end());
    return out;
}

void write_edge_set(std::ostream& out, std::vector<Edge> edges)
{
    std::sort(edges.begin(), edges.end());
    out << "f " << edges.size() << '\n';
    for (const Edge& e : edges)
        out << "e " << e.u << ' ' << e.v << '\n';
}

std::vector<Vertex> parse_vertex_set(std::istream& in)
{
    LineReader r{in};
    long long t = r.header('y');
    std::vector<Vertex> out;
    for (long long i = 0; i < t; ++i) {
        std::vector<std::string> tok;
        if (!r.next(tok))
            r.fail("unexpected end of input");
        if (tok.size() != 2 || tok[0] != "v")
            r.fail("expected 'v <x>'");
        out.push_back(static_cast<Vertex>(r.number(tok[1])));
    }
    r.expect_end();
    std::sort(out.begin(), out.end());
    return out;
}

void write_vertex_set(std::ostream& out, std::vector<Vertex> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    out << "y " << vertices.size() << '\n';
    for (Vertex v : vertices)
        out << "v " << v << '\n';
}

Graph read_graph_file(const std::string& path, std::vector<std::string>* comments)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open " + path);
    return parse_graph(in, comments);
}

void write_graph_file(const std::string& path, const Graph& g)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::Parse, "cannot write " + path);
    write_graph(out, g);
}

Graph graph_from_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_graph(in);
}

std::string graph_to_text(const Graph& g)
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

} // namespace hfs
