#include "eitff/young.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "eitff/error.hpp"

namespace eitff {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) fail(ErrorKind::EmptyPartition, "partition must be nonempty");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) fail(ErrorKind::NonPositivePart, "parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail(ErrorKind::NotNonincreasing, "parts must be nonincreasing");
        size_ += parts_[i];
    }
}

bool Partition::is_symmetric() const { return transpose(*this) == *this; }

int Partition::distinct_parts() const {
    return static_cast<int>(std::set<int>(parts_.begin(), parts_.end()).size());
}

int Partition::diagonal_length() const {
    int p = 0;
    while (part(p + 1) >= p + 1) ++p;
    return p;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t()[]");
        auto e = item.find_last_not_of(" \t()[]");
        if (b == std::string::npos) fail(ErrorKind::ParseError, "empty part in '" + text + "'");
        item = item.substr(b, e - b + 1);
        char* end = nullptr;
        long v = std::strtol(item.c_str(), &end, 10);
        if (*end != '\0' || v > 1000000)
            fail(ErrorKind::ParseError, "bad part '" + item + "'");
        parts.push_back(static_cast<int>(v));
    }
    return Partition(std::move(parts));
}

Partition transpose(const Partition& lambda) {
    std::vector<int> t(lambda.part(1));
    for (int i = 1; i <= lambda.part(1); ++i) {
        int j = 0;
        while (lambda.part(j + 1) >= i) ++j;
        t[i - 1] = j;
    }
    return Partition(std::move(t));
}

int hook_length(const Partition& lambda, BoxIndex b) {
    if (!lambda.contains(b)) fail(ErrorKind::BoxOutsideDiagram, "box outside " + lambda.to_string());
    int arm = lambda.part(b.row) - b.col;
    int leg = 0;
    while (lambda.part(b.row + leg + 1) >= b.col) ++leg;
    return arm + leg + 1;
}

std::vector<int> hooks(const Partition& lambda) {
    std::vector<int> h;
    h.reserve(lambda.size());
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) h.push_back(hook_length(lambda, {i, j}));
    return h;
}

BigInt dimension(const Partition& lambda) {
    BigInt num = 1;
    for (int k = 2; k <= lambda.size(); ++k) num *= k;
    BigInt den = 1;
    for (int h : hooks(lambda)) den *= h;
    return num / den;
}

std::vector<BoxIndex> removable_boxes(const Partition& lambda) {
    std::vector<BoxIndex> out;
    for (int k = 1; k <= lambda.length(); ++k)
        if (k == lambda.length() || lambda.part(k) > lambda.part(k + 1)) out.push_back({k, lambda.part(k)});
    return out;
}

std::vector<BoxIndex> addable_boxes(const Partition& lambda) {
    std::vector<BoxIndex> out;
    for (int k = 1; k <= lambda.length() + 1; ++k)
        if (k == 1 || lambda.part(k) < lambda.part(k - 1)) out.push_back({k, lambda.part(k) + 1});
    return out;
}

Partition remove_box(const Partition& lambda, BoxIndex b) {
    auto r = removable_boxes(lambda);
    if (std::find(r.begin(), r.end(), b) == r.end())
        fail(ErrorKind::BoxOutsideDiagram, "box is not removable");
    std::vector<int> parts = lambda.parts();
    if (--parts[b.row - 1] == 0) parts.pop_back();
    if (parts.empty()) fail(ErrorKind::EmptyPartition, "cannot remove the only box");
    return Partition(std::move(parts));
}

Partition add_box(const Partition& lambda, BoxIndex b) {
    auto a = addable_boxes(lambda);
    if (std::find(a.begin(), a.end(), b) == a.end())
        fail(ErrorKind::NotInUpSet, "box is not addable");
    std::vector<int> parts = lambda.parts();
    if (b.row > lambda.length()) parts.push_back(1);
    else ++parts[b.row - 1];
    return Partition(std::move(parts));
}

std::vector<Partition> down_set(const Partition& lambda) {
    std::vector<Partition> out;
    if (lambda.size() < 2) return out;
    for (auto b : removable_boxes(lambda)) out.push_back(remove_box(lambda, b));
    return out;
}

std::vector<Partition> up_set(const Partition& mu) {
    std::vector<Partition> out;
    for (auto b : addable_boxes(mu)) out.push_back(add_box(mu, b));
    return out;
}

BoxIndex added_box(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size() + 1)
        fail(ErrorKind::NotInUpSet, lambda.to_string() + " does not cover " + mu.to_string());
    for (auto b : removable_boxes(lambda))
        if (lambda.size() > 1 && remove_box(lambda, b) == mu) return b;
    fail(ErrorKind::NotInUpSet, lambda.to_string() + " does not cover " + mu.to_string());
}

Rational dimension_ratio(const Partition& lambda, const Partition& mu) {
    BoxIndex b = added_box(lambda, mu);
    Rational q = 1;
    for (int j = 1; j < b.col; ++j) {
        int h = hook_length(mu, {b.row, j});
        q *= Rational(h, h + 1);
    }
    for (int i = 1; i < b.row; ++i) {
        int h = hook_length(mu, {i, b.col});
        q *= Rational(h, h + 1);
    }
    return q;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

// Row of each entry 1..n, indexed by entry - 1.
void row_words(const Partition& lambda, std::vector<std::vector<int>>& out) {
    if (lambda.size() == 1) {
        out.push_back({1});
        return;
    }
    for (auto b : removable_boxes(lambda)) {
        std::vector<std::vector<int>> sub;
        row_words(remove_box(lambda, b), sub);
        for (auto& w : sub) {
            w.push_back(b.row);
            out.push_back(std::move(w));
        }
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 1) fail(ErrorKind::IndexOutOfRange, "n must be positive");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    try {
        shape_ = Partition(parts);
    } catch (const Error&) {
        fail(ErrorKind::InvalidTableau, "rows do not form a Young diagram");
    }
    int n = shape_.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            int v = rows_[i][j];
            if (v < 1 || v > n || seen[v]) fail(ErrorKind::InvalidTableau, "entries must be 1..n once each");
            seen[v] = true;
            if (j > 0 && rows_[i][j - 1] >= v) fail(ErrorKind::InvalidTableau, "rows must increase");
            if (i > 0 && rows_[i - 1][j] >= v) fail(ErrorKind::InvalidTableau, "columns must increase");
        }
    }
    index_boxes();
}

StandardTableau StandardTableau::from_rows_unchecked(std::vector<std::vector<int>> rows) {
    StandardTableau T;
    std::vector<int> parts;
    for (auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    T.shape_ = Partition(parts);
    T.rows_ = std::move(rows);
    T.index_boxes();
    return T;
}

void StandardTableau::index_boxes() {
    boxes_.assign(shape_.size() + 1, BoxIndex{});
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            boxes_[rows_[i][j]] = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
}

std::vector<int> StandardTableau::row_word() const {
    std::vector<int> w;
    for (int k = size(); k >= 1; --k) w.push_back(boxes_[k].row);
    return w;
}

std::string StandardTableau::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += "|";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) s += ' ';
            s += std::to_string(rows_[i][j]);
        }
    }
    return s + "]";
}

std::vector<int> content_vector(const StandardTableau& T) {
    std::vector<int> a(T.size() + 1, 0);
    for (int k = 1; k <= T.size(); ++k) a[k] = T.content(k);
    return a;
}

int axial_distance(const StandardTableau& T, int i, int j) {
    if (i < 1 || j < 1 || i > T.size() || j > T.size()) fail(ErrorKind::EntryOutOfRange, "entry out of range");
    return T.content(i) - T.content(j);
}

std::vector<StandardTableau> enumerate_tableaux(const Partition& lambda) {
    std::vector<std::vector<int>> words;
    row_words(lambda, words);
    std::vector<StandardTableau> out;
    out.reserve(words.size());
    for (auto& w : words) {
        std::vector<std::vector<int>> rows(lambda.length());
        for (std::size_t k = 0; k < w.size(); ++k) rows[w[k] - 1].push_back(static_cast<int>(k) + 1);
        out.push_back(StandardTableau::from_rows_unchecked(std::move(rows)));
    }
    return out;
}

TransposedTableau apply_adjacent_transposition(const StandardTableau& T, int k) {
    if (k < 1 || k >= T.size()) fail(ErrorKind::IndexOutOfRange, "adjacent transposition index out of range");
    auto rows = T.rows();
    BoxIndex a = T.box_of(k), b = T.box_of(k + 1);
    rows[a.row - 1][a.col - 1] = k + 1;
    rows[b.row - 1][b.col - 1] = k;
    bool standard = std::abs(axial_distance(T, k + 1, k)) >= 2;
    return {StandardTableau::from_rows_unchecked(std::move(rows)), standard};
}

StandardTableau embed(const StandardTableau& R, const Partition& lambda) {
    BoxIndex b = added_box(lambda, R.shape());
    auto rows = R.rows();
    if (b.row > static_cast<int>(rows.size())) rows.emplace_back();
    rows[b.row - 1].push_back(lambda.size());
    return StandardTableau::from_rows_unchecked(std::move(rows));
}

StandardTableau transpose_tableau(const StandardTableau& T) {
    Partition t = transpose(T.shape());
    std::vector<std::vector<int>> rows(t.length());
    for (int i = 1; i <= t.length(); ++i)
        for (int j = 1; j <= t.part(i); ++j) rows[i - 1].push_back(T.at({j, i}));
    return StandardTableau::from_rows_unchecked(std::move(rows));
}

StandardTableau row_superstandard(const Partition& lambda) {
    std::vector<std::vector<int>> rows(lambda.length());
    int v = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) rows[i - 1].push_back(v++);
    return StandardTableau::from_rows_unchecked(std::move(rows));
}

} // namespace eitff
