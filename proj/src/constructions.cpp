#include <ctc/constructions.hpp>
#include <ctc/error.hpp>
#include <ctc/generators.hpp>

#include <algorithm>
#include <optional>

namespace ctc {

namespace {

    std::string x(int i) { return "x" + std::to_string(i); }
    std::string y(int j) { return "y" + std::to_string(j); }
    std::string e(int i) { return "e" + std::to_string(i); }
    std::string xy(int i, int j) { return x(i) + y(j); }

    // A colouring of H'_k (half-edges e1 at x1 and ek at xk) ready to be
    // chained: e1 becomes the incoming f'_i, ek the outgoing f_i.
    struct Block {
        CircularColouring colouring;
        std::string name;
    };

    // Moves the lemma's e to x1 (incoming) and e' to xk (outgoing), or the
    // reverse, and drops the other half-edges.
    Block orient(const CircularColouring & c, int k, BoundaryRoles roles, bool e_incoming, const std::string & name)
    {
        std::vector<int> perm(static_cast<std::size_t>(k), 0);
        perm[static_cast<std::size_t>(roles.e - 1)] = e_incoming ? 1 : k;
        perm[static_cast<std::size_t>(roles.e_prime - 1)] = e_incoming ? k : 1;
        int next = 2;
        for (auto & target : perm)
            if (target == 0)
                target = next++;
        auto moved = permute_x(c, k, perm);
        std::set<std::string> drop;
        for (int i = 2; i < k; ++i)
            drop.insert(e(i));
        return {without(moved, drop), name + (e_incoming ? "(e in)" : "(e' in)")};
    }

    struct ChainResult {
        CircularColouring colouring;
        int u_colour;
    };

    // Chains blocks B1..Bn with e_0 coloured 0, each block shifted so its
    // incoming half-edge matches the previous outgoing colour, then looks for a
    // colour of u that makes the whole certificate valid (preferred first).
    std::optional<ChainResult> chain(int k, const std::vector<const Block *> & blocks, int preferred_u,
                                     const TotalConflictGraph & target)
    {
        const int n = static_cast<int>(blocks.size());
        const int p = blocks.front()->colouring.p(), q = blocks.front()->colouring.q();

        std::vector<CircularColouring> parts;
        std::vector<Join> joins;
        int incoming = 0;
        for (int i = 1; i <= n; ++i) {
            const auto & b = blocks[static_cast<std::size_t>(i - 1)]->colouring;
            auto shifted = shift(b, incoming - b.colour(e(1)));
            incoming = shifted.colour(e(k));
            const auto pre = "B" + std::to_string(i) + ".";
            std::map<std::string, std::string> names;
            for (const auto & [label, colour] : shifted.assignment())
                names[label] = pre + label;
            names[e(1)] = chain_in_label(i);
            names[e(k)] = chain_out_label(i);
            parts.push_back(relabel(shifted, names));
        }
        CircularColouring hub(p, q);
        hub.set(chain_out_label(0), 0);
        hub.set(chain_in_label(n + 1), incoming);
        hub.set("u", 0);
        parts.push_back(hub);
        for (int i = 0; i <= n; ++i)
            joins.push_back({chain_out_label(i), chain_in_label(i + 1), e(i)});
        auto merged = merge(parts, joins);

        std::vector<int> order{preferred_u};
        for (int c = 0; c < p; ++c)
            if (c != preferred_u)
                order.push_back(c);
        for (int c : order) {
            merged.set("u", c);
            if (is_valid(target, merged))
                return ChainResult{merged, c};
        }
        return std::nullopt;
    }

    void certify(const TotalConflictGraph & t, const CircularColouring & c, const std::string & what)
    {
        auto violations = check(t, c);
        if (!violations.empty())
            throw ConstructionFault(what + ": " + std::to_string(violations.size()) +
                                    " violations, first: " + violations.front().describe(c.p(), c.q()));
    }

    // (3n+1, n)-total colouring of the cycle G_{2,n}: walk u, e0, x, ... and
    // give the t-th element colour t*n.
    CircularColouring cyclic_gkn2(int n)
    {
        const auto g = gen_Gkn(2, n);
        const int p = 3 * n + 1;
        CircularColouring c(p, n);
        std::vector<std::vector<int>> at(g.vertices().size());
        for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
            at[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(i)].u)].push_back(i);
            at[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(i)].v)].push_back(i);
        }
        int v = *g.vertex_index("u");
        int edge = g.find("e0")->second;
        long long t = 0;
        for (std::size_t step = 0; step < g.vertices().size(); ++step) {
            const auto & ed = g.edges()[static_cast<std::size_t>(edge)];
            c.set(g.vertices()[static_cast<std::size_t>(v)], t++ * n);
            c.set(ed.label, t++ * n);
            v = ed.u == v ? ed.v : ed.u;
            const auto & both = at[static_cast<std::size_t>(v)];
            edge = both[0] == edge ? both[1] : both[0];
        }
        return c;
    }

} // namespace

BoundaryProfile boundary_profile(const CircularColouring & c, BoundaryRoles roles)
{
    return {c.colour(e(roles.e)), c.colour(e(roles.e_prime)), c.colour(x(roles.e)), c.colour(x(roles.e_prime))};
}

CircularColouring colour_all0(int k, const LatinSquare & square)
{
    if (k < 2)
        throw Error("colour_all0: k must be at least 2");
    if (square.order() != k)
        throw Error("colour_all0: Latin square order " + std::to_string(square.order()) + " != k = " +
                    std::to_string(k));
    CircularColouring c(k + 1, 1);
    for (int i = 1; i <= k; ++i) {
        c.set(x(i), square.at(i, 1));
        c.set(e(i), 0);
        for (int j = 2; j <= k; ++j)
            c.set(xy(i, j), square.at(i, j));
    }
    for (int j = 2; j <= k; ++j)
        c.set(y(j), 0);
    return c;
}

CircularColouring colour_tweak(int k, int n, int level)
{
    if (k < 2 || n < 1)
        throw Error("colour_tweak: need k >= 2 and n >= 1");
    auto c = scale(colour_all0(k, constrained_latin(k, level)), n);
    // Every colour-0 element can take -1 instead: the slack below 0 is free.
    c.set(e(1), -1);
    return shift(c, 1);
}

CircularColouring colour_refine(int k, int q)
{
    if (k < 2 || q < 1)
        throw Error("colour_refine: need k >= 2 and q >= 1");
    auto c = scale(colour_all0(k, back_circulant(k)), q);
    // At x_i (i < k) lift every colour >= c(x_i) by one; with the
    // back-circulant square these are exactly x_i and the x_i y_j, i+j <= k+1.
    for (int i = 1; i <= k - 1; ++i) {
        c.set(x(i), c.colour(x(i)) + 1);
        for (int j = 2; j <= k; ++j)
            if (i + j <= k + 1)
                c.set(xy(i, j), c.colour(xy(i, j)) + 1);
    }
    c.set(e(1), 1);
    c.set(e(k), -1);
    return shift(c, 1);
}

CircularColouring permute_x(const CircularColouring & c, int k, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != k)
        throw Error("permute_x: permutation must have k entries");
    auto sorted = std::vector<int>(perm.begin(), perm.end());
    std::sort(sorted.begin(), sorted.end());
    for (int i = 1; i <= k; ++i)
        if (sorted[static_cast<std::size_t>(i - 1)] != i)
            throw Error("permute_x: not a permutation of 1..k");

    std::map<std::string, std::string> names;
    for (int i = 1; i <= k; ++i) {
        const int to = perm[static_cast<std::size_t>(i - 1)];
        names[x(i)] = x(to);
        names[e(i)] = e(to);
        for (int j = 2; j <= k; ++j)
            names[xy(i, j)] = xy(to, j);
    }
    return relabel(c, names);
}

Assembly assemble_thm_lim(int k, int n)
{
    if (k < 2 || n < 1)
        throw Error("assemble_thm_lim: need k >= 2 and n >= 1");
    const auto target = total_conflict_graph(gen_Gkn(k, n));
    const auto base = colour_tweak(k, n);
    const int preferred_u = 2 * n + 1;

    for (bool e_in : {true, false}) {
        const auto block = orient(base, k, {1, 2}, e_in, "tweak");
        auto r = chain(k, std::vector<const Block *>(static_cast<std::size_t>(n), &block), preferred_u, target);
        if (r) {
            certify(target, r->colouring, "assemble_thm_lim");
            return {r->colouring,
                    {"blocks: tweak " + block.name, "u coloured " + std::to_string(r->u_colour) +
                                                        (r->u_colour == preferred_u ? " (2n+1)" : " (searched)")}};
        }
    }
    if (k == 2) {
        // x_n (= -1) and u (= 2n+1) are only n-1 apart when k = 2, so no
        // tweak-block chain closes at u. G_{2,n} is C_{3n+1}; colour it directly.
        auto c = cyclic_gkn2(n);
        certify(target, c, "assemble_thm_lim (k=2 cyclic)");
        return {c, {"k=2: tweak-block chain has no valid colour for u", "cyclic colouring t*n along u,e0,B1.x1,..."}};
    }
    throw ConstructionFault("assemble_thm_lim: no orientation yields a valid colouring for k=" + std::to_string(k) +
                            ", n=" + std::to_string(n));
}

Assembly assemble_thm_improve(int k, int n)
{
    if (k < 4 || n < 1)
        throw Error("assemble_thm_improve: need k >= 4 and n >= 1");
    const auto target = total_conflict_graph(gen_Gkn(k, n));
    const auto base = colour_refine(k, 2 * n);
    const int preferred_u = 6 * n;

    for (bool e_in : {true, false}) {
        const auto block = orient(base, k, {k, 1}, e_in, "refine");
        auto r = chain(k, std::vector<const Block *>(static_cast<std::size_t>(n), &block), preferred_u, target);
        if (r) {
            certify(target, r->colouring, "assemble_thm_improve");
            return {r->colouring,
                    {"blocks: refine " + block.name,
                     "u coloured " + std::to_string(r->u_colour) + (r->u_colour == preferred_u ? " (6n)" : " (searched)")}};
        }
    }
    throw ConstructionFault("assemble_thm_improve: no orientation yields a valid colouring for k=" + std::to_string(k) +
                            ", n=" + std::to_string(n));
}

Assembly assemble_k3(int n)
{
    if (n < 1)
        throw Error("assemble_k3: n must be at least 1");
    if (n > 16)
        throw Error("assemble_k3: orientation search limited to n <= 16");
    constexpr int k = 3;
    const int q = 2 * n - 1;
    const auto target = total_conflict_graph(gen_Gkn(k, n));

    const auto tweak = colour_tweak(k, q, 2);
    const auto refine = colour_refine(k, q);
    const Block tweak_blocks[2] = {orient(tweak, k, {1, 2}, true, "tweak"), orient(tweak, k, {1, 2}, false, "tweak")};
    const Block refine_blocks[2] = {orient(refine, k, {k, 1}, true, "refine"),
                                    orient(refine, k, {k, 1}, false, "refine")};

    // Orientation masks are tried with uniform refine orientations first.
    std::vector<unsigned> masks;
    const unsigned all = (1u << (n - 1)) - 1;
    masks.push_back(0);
    if (all != 0)
        masks.push_back(all);
    for (unsigned m = 1; m < all; ++m)
        masks.push_back(m);

    for (int position = n; position >= 1; --position)
        for (int t = 0; t < 2; ++t)
            for (unsigned mask : masks) {
                std::vector<const Block *> blocks;
                int r = 0;
                for (int i = 1; i <= n; ++i)
                    blocks.push_back(i == position ? &tweak_blocks[t] : &refine_blocks[(mask >> r++) & 1u]);
                auto result = chain(k, blocks, 0, target);
                if (!result)
                    continue;
                certify(target, result->colouring, "assemble_k3");
                std::string layout;
                for (const auto * b : blocks)
                    layout += (layout.empty() ? "" : " ") + b->name;
                return {result->colouring, {"blocks: " + layout, "u coloured " + std::to_string(result->u_colour)}};
            }
    throw ConstructionIncomplete("assemble_k3: no block placement/orientation/u colour validates for n=" +
                                 std::to_string(n));
}

} // namespace ctc
