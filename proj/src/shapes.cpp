#include "grothmn/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace grothmn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty())
        return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token =
            trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                  : comma - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
            throw std::invalid_argument("Partition::parse: bad part '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1)
        throw std::invalid_argument("Partition::part: index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

bool contains(const Partition& lambda, const Partition& mu) {
    for (int i = 1; i <= std::max(lambda.length(), mu.length()); ++i)
        if (lambda.part(i) > mu.part(i))
            return false;
    return true;
}

Partition add_vertical_strip(const Partition& lambda, int n) {
    if (n < lambda.length())
        throw std::invalid_argument("add_vertical_strip: n < length(lambda)");
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        parts[i - 1] = lambda.part(i) + 1;
    return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition inner, Partition outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
    if (!contains(inner_, outer_))
        throw std::invalid_argument("SkewShape: inner partition not contained in outer");
}

int SkewShape::size() const {
    return outer_.size() - inner_.size();
}

bool SkewShape::has_cell(int row, int col) const {
    return row >= 1 && col >= 1 && row <= outer_.length() && col > inner_.part(row) &&
           col <= outer_.part(row);
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> result;
    for (int i = 1; i <= outer_.length(); ++i)
        for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
            result.push_back({i, j});
    return result;
}

int SkewShape::rows() const {
    int count = 0;
    for (int i = 1; i <= outer_.length(); ++i)
        if (outer_.part(i) > inner_.part(i))
            ++count;
    return count;
}

int SkewShape::cols() const {
    int count = 0;
    for (int j = 1; j <= outer_.first(); ++j) {
        for (int i = 1; i <= outer_.length(); ++i) {
            if (inner_.part(i) < j && j <= outer_.part(i)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

int connected_components(const SkewShape& shape) {
    std::vector<Cell> cells = shape.cells();
    if (cells.empty())
        return 0;
    std::vector<bool> seen(cells.size(), false);
    auto index_of = [&](int row, int col) -> int {
        for (std::size_t t = 0; t < cells.size(); ++t)
            if (cells[t].row == row && cells[t].col == col)
                return static_cast<int>(t);
        return -1;
    };
    int components = 0;
    for (std::size_t start = 0; start < cells.size(); ++start) {
        if (seen[start])
            continue;
        ++components;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            Cell c = cells[stack.back()];
            stack.pop_back();
            const int drow[] = {-1, 1, 0, 0};
            const int dcol[] = {0, 0, -1, 1};
            for (int d = 0; d < 4; ++d) {
                int t = index_of(c.row + drow[d], c.col + dcol[d]);
                if (t >= 0 && !seen[t]) {
                    seen[t] = true;
                    stack.push_back(static_cast<std::size_t>(t));
                }
            }
        }
    }
    return components;
}

bool is_connected(const SkewShape& shape) {
    return connected_components(shape) == 1;
}

bool is_ribbon(const SkewShape& shape) {
    if (!is_connected(shape))
        return false;
    for (const Cell& c : shape.cells())
        if (shape.has_cell(c.row, c.col + 1) && shape.has_cell(c.row + 1, c.col) &&
            shape.has_cell(c.row + 1, c.col + 1))
            return false;
    return true;
}

int max_nw_ribbon_size(const SkewShape& shape) {
    if (!is_connected(shape))
        throw std::invalid_argument("max_nw_ribbon_size: shape must be connected");
    return shape.rows() + shape.cols() - 1;
}

SkewShape nw_border_trace(const SkewShape& shape) {
    if (!is_connected(shape))
        throw std::invalid_argument("nw_border_trace: shape must be connected");
    const Partition& inner = shape.inner();
    const Partition& outer = shape.outer();
    // Row i of the trace spans (inner_i, min(outer_i, inner_{i-1} + 1)]:
    // column inner_{i-1} + 1 is the last one whose NW diagonal neighbour
    // falls outside the shape in row i - 1.
    std::vector<int> trace(static_cast<std::size_t>(outer.length()));
    for (int i = 1; i <= outer.length(); ++i) {
        if (outer.part(i) == inner.part(i)) {
            trace[i - 1] = inner.part(i);
        } else if (i == 1) {
            trace[i - 1] = outer.part(i);
        } else {
            trace[i - 1] = std::min(outer.part(i), inner.part(i - 1) + 1);
        }
    }
    return SkewShape(inner, Partition(std::move(trace)));
}

namespace {

// Recursively extends mu row by row inside the bounding box, weakly
// decreasing and covering lambda.
void extend_partition(const Partition& lambda, int max_first, int max_len, int row, int prev,
                      std::vector<int>& current, std::vector<Partition>& out) {
    if (row > max_len) {
        out.emplace_back(current);
        return;
    }
    int high = std::min(prev, max_first);
    for (int value = lambda.part(row); value <= high; ++value) {
        current.push_back(value);
        extend_partition(lambda, max_first, max_len, row + 1, value, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_over(const Partition& lambda, int max_first, int max_len) {
    if (lambda.length() > max_len || lambda.first() > max_first)
        return {};
    std::vector<Partition> out;
    std::vector<int> current;
    extend_partition(lambda, max_first, max_len, 1, max_first, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_in_box(int max_part, int max_len) {
    return partitions_over(Partition{}, max_part, max_len);
}

std::vector<Partition> enumerate_mu(const Partition& lambda, int k, int n) {
    if (k < 1)
        throw std::invalid_argument("enumerate_mu: k must be positive");
    if (lambda.length() > n)
        throw std::invalid_argument("enumerate_mu: length(lambda) > n");
    // Columns lambda_1+1..mu_1 of mu/lambda are all occupied, so
    // mu_1 - lambda_1 <= c(mu/lambda) <= k bounds the search box.
    std::vector<Partition> out;
    for (const Partition& mu : partitions_over(lambda, lambda.first() + k, n)) {
        SkewShape shape(lambda, mu);
        if (shape.cols() > k || !is_connected(shape))
            continue;
        if (max_nw_ribbon_size(shape) < k)
            continue;
        out.push_back(mu);
    }
    return out;
}

} // namespace grothmn
