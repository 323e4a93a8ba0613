#pragma once

#include <vector>

namespace ctc {

/// Latin square of order k over the symbols 1..k; construction validates it.
class LatinSquare {
public:
    explicit LatinSquare(std::vector<std::vector<int>> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    /// 1-based entry l_ij.
    int at(int i, int j) const { return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
    const std::vector<std::vector<int>> & rows() const { return rows_; }

    friend bool operator==(const LatinSquare &, const LatinSquare &) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// l_ij = ((i+j-2) mod k) + 1.
LatinSquare back_circulant(int k);

/// A Latin square with l_11 = 1 and l_21 = second (default k), obtained from
/// the back-circulant square by a row swap.
LatinSquare constrained_latin(int k, int second);
inline LatinSquare constrained_latin(int k) { return constrained_latin(k, k); }

} // namespace ctc
