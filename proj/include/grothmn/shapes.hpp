#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace grothmn {

/// Weakly decreasing sequence of non-negative integers, stored without
/// trailing zeros. Rows and columns of Young diagrams are 1-indexed
/// (English notation).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses the comma-separated text form, e.g. "3,3,2,1". The empty
    /// string and "0" denote the empty partition.
    static Partition parse(std::string_view text);

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    /// 1-indexed part access; parts beyond length() read as 0.
    int part(int i) const;
    int first() const { return parts_.empty() ? 0 : parts_.front(); }
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;
    /// Lexicographic order on part sequences; a proper prefix sorts first.
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

private:
    std::vector<int> parts_;
};

/// True iff lambda_i <= mu_i for all i (missing parts read as 0).
bool contains(const Partition& lambda, const Partition& mu);

/// lambda + (1^n): every one of the first n rows gains one box.
Partition add_vertical_strip(const Partition& lambda, int n);

struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

/// The boxes of mu not in lambda, for lambda <= mu. Cell (i,j) is present
/// iff lambda_i < j <= mu_i.
class SkewShape {
public:
    SkewShape(Partition inner, Partition outer);

    const Partition& inner() const { return inner_; }
    const Partition& outer() const { return outer_; }

    int size() const;
    bool empty() const { return size() == 0; }
    bool has_cell(int row, int col) const;
    /// All cells in row-major order.
    std::vector<Cell> cells() const;

    /// Number of rows containing at least one cell.
    int rows() const;
    /// Number of columns containing at least one cell.
    int cols() const;

    bool operator==(const SkewShape&) const = default;

private:
    Partition inner_;
    Partition outer_;
};

/// Number of edge-adjacency components of the cell set (0 for the empty shape).
int connected_components(const SkewShape& shape);

/// Nonempty and edge-adjacency connected. The empty shape is not connected.
bool is_connected(const SkewShape& shape);

/// Connected with no 2x2 square of cells.
bool is_ribbon(const SkewShape& shape);

/// Size of the maximal ribbon along the northwest border: rows + cols - 1.
/// Requires a connected shape.
int max_nw_ribbon_size(const SkewShape& shape);

/// The sub-shape of cells (i,j) whose diagonal northwest neighbour
/// (i-1,j-1) is not in the shape. Requires a connected shape; the result
/// is always a ribbon.
SkewShape nw_border_trace(const SkewShape& shape);

/// All partitions mu with length <= n, mu >= lambda, c(mu/lambda) <= k,
/// mu/lambda connected and max_nw_ribbon_size(mu/lambda) >= k, sorted
/// lexicographically. Requires k >= 1 and length(lambda) <= n.
std::vector<Partition> enumerate_mu(const Partition& lambda, int k, int n);

/// All partitions with first part <= max_part and length <= max_len,
/// including the empty one, sorted lexicographically.
std::vector<Partition> partitions_in_box(int max_part, int max_len);

/// All partitions mu >= lambda with mu_1 <= max_first and length <= max_len
/// (lambda itself included), sorted lexicographically.
std::vector<Partition> partitions_over(const Partition& lambda, int max_first, int max_len);

} // namespace grothmn
