#include <ctc/error.hpp>
#include <ctc/hegraph.hpp>

#include <fstream>
#include <sstream>

namespace ctc {

std::string serialize(const HalfEdgeGraph & g)
{
    std::ostringstream os;
    os << "heg 1\n";
    for (const auto & v : g.vertices())
        os << "vertex " << v << '\n';
    for (const auto & e : g.edges())
        os << "edge " << e.label << ' ' << g.vertices()[static_cast<std::size_t>(e.u)] << ' '
           << g.vertices()[static_cast<std::size_t>(e.v)] << '\n';
    for (const auto & h : g.half_edges())
        os << "half " << h.label << ' ' << g.vertices()[static_cast<std::size_t>(h.v)] << '\n';
    return os.str();
}

HalfEdgeGraph parse_heg(std::string_view text)
{
    HalfEdgeGraph g;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;

        if (!header) {
            if (tok.size() != 2 || tok[0] != "heg" || tok[1] != "1")
                throw ParseError(lineno, "expected header 'heg 1'");
            header = true;
            continue;
        }

        try {
            if (tok[0] == "vertex" && tok.size() == 2)
                g.add_vertex(tok[1]);
            else if (tok[0] == "edge" && tok.size() == 4)
                g.add_edge(tok[1], tok[2], tok[3]);
            else if (tok[0] == "half" && tok.size() == 3)
                g.add_half_edge(tok[1], tok[2]);
            else
                throw ParseError(lineno, "syntax error: '" + line + "'");
        }
        catch (const ParseError &) {
            throw;
        }
        catch (const Error & e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!header)
        throw ParseError(lineno, "missing header 'heg 1'");
    return g;
}

HalfEdgeGraph read_heg_file(const std::string & path)
{
    std::ifstream f(path);
    if (!f)
        throw Error(path + ": cannot open");
    std::ostringstream ss;
    ss << f.rdbuf();
    try {
        return parse_heg(ss.str());
    }
    catch (const ParseError & e) {
        throw ParseError(e.line(), e.detail(), path);
    }
}

void write_heg_file(const std::string & path, const HalfEdgeGraph & g)
{
    std::ofstream f(path);
    if (!f)
        throw Error(path + ": cannot write");
    f << serialize(g);
}

} // namespace ctc
