#pragma once

#include <ctc/fraction.hpp>
#include <ctc/hegraph.hpp>

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ctc {

/// Circular distance between colours a and b on Z_p.
inline int circular_distance(int a, int b, int p)
{
    const int d = a > b ? a - b : b - a;
    return d < p - d ? d : p - d;
}

/// A (p,q) pair and a colour in {0,...,p-1} for each element label.
///
/// Validity is not part of the type; it is established against a conflict
/// graph by `check`. Colours the literature writes as negative (e.g. -1) are
/// stored as their residue (p-1).
class CircularColouring {
public:
    CircularColouring(int p, int q);
    CircularColouring(int p, int q, std::map<std::string, int> assignment);

    int p() const { return p_; }
    int q() const { return q_; }
    Fraction ratio() const { return Fraction(p_, q_); }

    const std::map<std::string, int> & assignment() const { return colours_; }
    std::size_t size() const { return colours_.size(); }
    bool contains(std::string_view label) const { return colours_.find(std::string(label)) != colours_.end(); }
    int colour(std::string_view label) const;

    /// Sets `label` to `colour` reduced mod p (so -1 means p-1).
    void set(const std::string & label, long long colour);

    friend bool operator==(const CircularColouring &, const CircularColouring &) = default;

private:
    int p_;
    int q_;
    std::map<std::string, int> colours_;
};

struct Violation {
    enum class Bound { too_close, too_far };
    std::string a, b;
    int colour_a = 0, colour_b = 0;
    Bound bound = Bound::too_close;

    std::string describe(int p, int q) const;
};

/// Every adjacent pair (a,b) of `t` whose colours break q <= |c(a)-c(b)| <= p-q,
/// in element order. Throws if the label sets of `t` and `c` differ.
std::vector<Violation> check(const TotalConflictGraph & t, const CircularColouring & c);

inline bool is_valid(const TotalConflictGraph & t, const CircularColouring & c) { return check(t, c).empty(); }

/// Adds s to every colour, mod p.
CircularColouring shift(const CircularColouring & c, long long s);

/// Multiplies every colour by n; the result is declared as (np+1, nq).
CircularColouring scale(const CircularColouring & c, int n);

CircularColouring prefixed(const CircularColouring & c, const std::string & prefix);
CircularColouring relabel(const CircularColouring & c, const std::map<std::string, std::string> & renames);
CircularColouring without(const CircularColouring & c, const std::set<std::string> & labels);

/// Two half-edges fused into an edge: both must carry the same colour.
struct Join {
    std::string h1, h2, edge;
};

/// Union of block colourings with half-edge pairs replaced by joined edges.
/// The result is not checked.
CircularColouring merge(std::span<const CircularColouring> parts, std::span<const Join> joins);

/// "pqc 1" certificate text. Comment lines (`# ...`) are emitted first.
std::string serialize_pqc(const CircularColouring & c, const std::vector<std::string> & comments = {});
CircularColouring parse_pqc(std::string_view text);
CircularColouring read_pqc_file(const std::string & path);
void write_pqc_file(const std::string & path, const CircularColouring & c,
                    const std::vector<std::string> & comments = {});

} // namespace ctc
