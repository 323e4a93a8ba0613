#include <ctc/error.hpp>
#include <ctc/latin.hpp>

#include <string>
#include <utility>

namespace ctc {

LatinSquare::LatinSquare(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
{
    const auto k = rows_.size();
    if (k == 0)
        throw Error("Latin square of order 0");
    for (const auto & row : rows_)
        if (row.size() != k)
            throw Error("Latin square must be k x k");

    auto is_permutation = [k](auto entry) {
        std::vector<bool> seen(k + 1);
        for (std::size_t t = 0; t < k; ++t) {
            const int a = entry(t);
            if (a < 1 || a > static_cast<int>(k) || seen[static_cast<std::size_t>(a)])
                return false;
            seen[static_cast<std::size_t>(a)] = true;
        }
        return true;
    };
    for (std::size_t r = 0; r < k; ++r)
        if (!is_permutation([&](std::size_t c) { return rows_[r][c]; }))
            throw Error("Latin square row " + std::to_string(r + 1) + " is not a permutation of 1..k");
    for (std::size_t c = 0; c < k; ++c)
        if (!is_permutation([&](std::size_t r) { return rows_[r][c]; }))
            throw Error("Latin square column " + std::to_string(c + 1) + " is not a permutation of 1..k");
}

LatinSquare back_circulant(int k)
{
    if (k < 1)
        throw Error("back_circulant: k must be at least 1");
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = (i + j - 2) % k + 1;
    return LatinSquare(std::move(rows));
}

LatinSquare constrained_latin(int k, int second)
{
    if (k < 2)
        throw Error("constrained_latin: k must be at least 2");
    if (second < 2 || second > k)
        throw Error("constrained_latin: l_21 must lie in 2..k");
    // Column 1 of the back-circulant square is 1,2,...,k, so l_11 = 1 already
    // and swapping rows 2 and `second` puts `second` at l_21.
    auto rows = back_circulant(k).rows();
    std::swap(rows[1], rows[static_cast<std::size_t>(second - 1)]);
    return LatinSquare(std::move(rows));
}

} // namespace ctc
