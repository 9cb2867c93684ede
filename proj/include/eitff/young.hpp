#pragma once

#include <compare>
#include <string>
#include <vector>

#include "eitff/exact.hpp"

namespace eitff {

/// 1-based (row, column) position in a Young diagram.
struct BoxIndex {
    int row = 0;
    int col = 0;

    int superdiagonal() const { return col - row; }
    auto operator<=>(const BoxIndex&) const = default;
};

/// Signed axial distance (j - i) - (l - k) between boxes (i, j) and (k, l).
inline int axial_distance(BoxIndex a, BoxIndex b) {
    return a.superdiagonal() - b.superdiagonal();
}

/// Nonincreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    /// 1-based part; zero past the last row.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    bool contains(BoxIndex b) const { return b.row >= 1 && b.col >= 1 && b.col <= part(b.row); }
    bool is_symmetric() const;
    int distinct_parts() const;
    /// Number of boxes on the main diagonal.
    int diagonal_length() const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition parse_partition(const std::string& text);

Partition transpose(const Partition& lambda);

/// Hook lengths in row-major order.
std::vector<int> hooks(const Partition& lambda);
int hook_length(const Partition& lambda, BoxIndex b);

/// Number of standard tableaux, n! / prod(hooks).
BigInt dimension(const Partition& lambda);

/// Removable corners in ascending row order (descending superdiagonal).
std::vector<BoxIndex> removable_boxes(const Partition& lambda);
/// Addable cells in ascending row order (descending superdiagonal).
std::vector<BoxIndex> addable_boxes(const Partition& lambda);

Partition remove_box(const Partition& lambda, BoxIndex b);
Partition add_box(const Partition& lambda, BoxIndex b);

std::vector<Partition> down_set(const Partition& lambda);
std::vector<Partition> up_set(const Partition& mu);

/// The single box of lambda outside mu. Throws NotInUpSet otherwise.
BoxIndex added_box(const Partition& lambda, const Partition& mu);

/// d_lambda / (n d_mu) for lambda in the up-set of mu, from hook ratios.
Rational dimension_ratio(const Partition& lambda, const Partition& mu);

/// All partitions of n, reverse lexicographic: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

class StandardTableau {
public:
    StandardTableau() = default;
    /// Validates shape and standardness.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(BoxIndex b) const { return rows_[b.row - 1][b.col - 1]; }
    /// Box holding entry k.
    BoxIndex box_of(int k) const { return boxes_[k]; }
    /// Superdiagonal of the box holding k.
    int content(int k) const { return boxes_[k].superdiagonal(); }
    /// Rows of n, n-1, ..., 1: the sort key of the canonical order.
    std::vector<int> row_word() const;

    std::string to_string() const;

    bool operator==(const StandardTableau& other) const { return rows_ == other.rows_; }

    static StandardTableau from_rows_unchecked(std::vector<std::vector<int>> rows);

private:
    void index_boxes();

    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<BoxIndex> boxes_;
};

/// Contents a_1..a_n (index 0 unused).
std::vector<int> content_vector(const StandardTableau& T);

/// D_T(i, j) = a_i - a_j.
int axial_distance(const StandardTableau& T, int i, int j);

/// Standard tableaux of lambda in canonical order.
std::vector<StandardTableau> enumerate_tableaux(const Partition& lambda);

/// s_k T with its standardness flag (standard iff |D_T(k+1, k)| >= 2).
struct TransposedTableau {
    StandardTableau tableau;
    bool standard = false;
};
TransposedTableau apply_adjacent_transposition(const StandardTableau& T, int k);

/// R^lambda: R with n placed in the box lambda - mu.
StandardTableau embed(const StandardTableau& R, const Partition& lambda);

StandardTableau transpose_tableau(const StandardTableau& T);

/// Rows filled with 1, 2, 3, ... left to right, top to bottom.
StandardTableau row_superstandard(const Partition& lambda);

} // namespace eitff
