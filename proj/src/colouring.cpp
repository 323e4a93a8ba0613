#include <ctc/colouring.hpp>
#include <ctc/error.hpp>

#include <fstream>
#include <sstream>

namespace ctc {

namespace {
    int residue(long long colour, int p)
    {
        const long long r = colour % p;
        return static_cast<int>(r < 0 ? r + p : r);
    }
} // namespace

CircularColouring::CircularColouring(int p, int q) : p_(p), q_(q)
{
    if (p < 1 || q < 1)
        throw Error("colouring: p and q must be positive");
}

CircularColouring::CircularColouring(int p, int q, std::map<std::string, int> assignment)
    : CircularColouring(p, q)
{
    for (const auto & [label, colour] : assignment)
        if (colour < 0 || colour >= p)
            throw Error("colour " + std::to_string(colour) + " of '" + label + "' outside 0.." + std::to_string(p - 1));
    colours_ = std::move(assignment);
}

int CircularColouring::colour(std::string_view label) const
{
    auto it = colours_.find(std::string(label));
    if (it == colours_.end())
        throw Error("no colour for '" + std::string(label) + "'");
    return it->second;
}

void CircularColouring::set(const std::string & label, long long colour) { colours_[label] = residue(colour, p_); }

std::string Violation::describe(int p, int q) const
{
    std::ostringstream os;
    const int d = colour_a > colour_b ? colour_a - colour_b : colour_b - colour_a;
    os << a << "=" << colour_a << " " << b << "=" << colour_b << ": |" << colour_a << "-" << colour_b << "| = " << d;
    if (bound == Bound::too_close)
        os << " < q = " << q;
    else
        os << " > p-q = " << p - q;
    return os.str();
}

std::vector<Violation> check(const TotalConflictGraph & t, const CircularColouring & c)
{
    if (c.size() != t.size()) {
        for (const auto & [label, colour] : c.assignment())
            if (!t.index_of(label))
                throw Error("colouring has unknown element '" + label + "'");
    }
    std::vector<int> col(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const int v = c.colour(t.elements()[i].label);
        if (v < 0 || v >= c.p())
            throw Error("colour of '" + t.elements()[i].label + "' out of range");
        col[i] = v;
    }

    std::vector<Violation> out;
    for (int a = 0; a < static_cast<int>(t.size()); ++a)
        for (int b : t.neighbours(a)) {
            if (b < a)
                continue;
            const int ca = col[static_cast<std::size_t>(a)], cb = col[static_cast<std::size_t>(b)];
            const int d = ca > cb ? ca - cb : cb - ca;
            if (d >= c.q() && d <= c.p() - c.q())
                continue;
            out.push_back({t.element(a).label, t.element(b).label, ca, cb,
                           d < c.q() ? Violation::Bound::too_close : Violation::Bound::too_far});
        }
    return out;
}

CircularColouring shift(const CircularColouring & c, long long s)
{
    CircularColouring out(c.p(), c.q());
    for (const auto & [label, colour] : c.assignment())
        out.set(label, colour + s);
    return out;
}

CircularColouring scale(const CircularColouring & c, int n)
{
    if (n < 1)
        throw Error("scale: factor must be at least 1");
    CircularColouring out(n * c.p() + 1, n * c.q());
    for (const auto & [label, colour] : c.assignment())
        out.set(label, static_cast<long long>(colour) * n);
    return out;
}

CircularColouring prefixed(const CircularColouring & c, const std::string & prefix)
{
    CircularColouring out(c.p(), c.q());
    for (const auto & [label, colour] : c.assignment())
        out.set(prefix + label, colour);
    return out;
}

CircularColouring relabel(const CircularColouring & c, const std::map<std::string, std::string> & renames)
{
    CircularColouring out(c.p(), c.q());
    for (const auto & [label, colour] : c.assignment()) {
        auto it = renames.find(label);
        const auto & name = it == renames.end() ? label : it->second;
        if (out.contains(name))
            throw Error("relabel: two elements renamed to '" + name + "'");
        out.set(name, colour);
    }
    return out;
}

CircularColouring without(const CircularColouring & c, const std::set<std::string> & labels)
{
    CircularColouring out(c.p(), c.q());
    for (const auto & [label, colour] : c.assignment())
        if (!labels.contains(label))
            out.set(label, colour);
    return out;
}

CircularColouring merge(std::span<const CircularColouring> parts, std::span<const Join> joins)
{
    if (parts.empty())
        throw Error("merge: nothing to merge");
    CircularColouring out(parts.front().p(), parts.front().q());
    for (const auto & part : parts) {
        if (part.p() != out.p() || part.q() != out.q())
            throw Error("merge: (p,q) mismatch");
        for (const auto & [label, colour] : part.assignment()) {
            if (out.contains(label))
                throw Error("merge: element '" + label + "' appears in two blocks");
            out.set(label, colour);
        }
    }
    std::set<std::string> fused;
    for (const auto & j : joins) {
        const int a = out.colour(j.h1), b = out.colour(j.h2);
        if (a != b)
            throw Error("merge: joined half-edges '" + j.h1 + "' (" + std::to_string(a) + ") and '" + j.h2 + "' (" +
                        std::to_string(b) + ") differ in colour");
        if (out.contains(j.edge))
            throw Error("merge: joined edge label '" + j.edge + "' already used");
        fused.insert(j.h1);
        fused.insert(j.h2);
        out.set(j.edge, a);
    }
    return without(out, fused);
}

std::string serialize_pqc(const CircularColouring & c, const std::vector<std::string> & comments)
{
    std::ostringstream os;
    os << "pqc 1\n";
    for (const auto & line : comments)
        os << "# " << line << '\n';
    os << "p " << c.p() << "\nq " << c.q() << '\n';
    for (const auto & [label, colour] : c.assignment())
        os << label << ' ' << colour << '\n';
    return os.str();
}

CircularColouring parse_pqc(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0, stage = 0, p = 0, q = 0;
    std::map<std::string, int> colours;

    auto integer = [&](const std::string & s) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used == s.size())
                return v;
        }
        catch (const std::logic_error &) {
        }
        throw ParseError(lineno, "expected an integer, got '" + s + "'");
    };

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
        if (tok.size() != 2)
            throw ParseError(lineno, "syntax error: '" + line + "'");

        switch (stage) {
        case 0:
            if (tok[0] != "pqc" || tok[1] != "1")
                throw ParseError(lineno, "expected header 'pqc 1'");
            break;
        case 1:
            if (tok[0] != "p")
                throw ParseError(lineno, "expected 'p <int>'");
            p = integer(tok[1]);
            break;
        case 2:
            if (tok[0] != "q")
                throw ParseError(lineno, "expected 'q <int>'");
            q = integer(tok[1]);
            if (p < 1 || q < 1)
                throw ParseError(lineno, "p and q must be positive");
            break;
        default: {
            const int colour = integer(tok[1]);
            if (colour < 0 || colour >= p)
                throw ParseError(lineno, "colour " + tok[1] + " outside 0.." + std::to_string(p - 1));
            if (!colours.emplace(tok[0], colour).second)
                throw ParseError(lineno, "duplicate label '" + tok[0] + "'");
        }
        }
        ++stage;
    }
    if (stage < 3)
        throw ParseError(lineno, "truncated certificate: need 'pqc 1', 'p', 'q' lines");
    return CircularColouring(p, q, std::move(colours));
}

CircularColouring read_pqc_file(const std::string & path)
{
    std::ifstream f(path);
    if (!f)
        throw Error(path + ": cannot open");
    std::ostringstream ss;
    ss << f.rdbuf();
    try {
        return parse_pqc(ss.str());
    }
    catch (const ParseError & e) {
        throw ParseError(e.line(), e.detail(), path);
    }
}

void write_pqc_file(const std::string & path, const CircularColouring & c, const std::vector<std::string> & comments)
{
    std::ofstream f(path);
    if (!f)
        throw Error(path + ": cannot write");
    f << serialize_pqc(c, comments);
}

} // namespace ctc
