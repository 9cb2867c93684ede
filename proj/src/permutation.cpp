#include "eitff/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "eitff/error.hpp"

namespace eitff {

Permutation::Permutation(int n) {
    if (n < 1) fail(ErrorKind::InvalidPermutation, "degree must be positive");
    images_.resize(n);
    for (int i = 0; i < n; ++i) images_[i] = i + 1;
}

Permutation Permutation::from_images(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    if (n < 1) fail(ErrorKind::InvalidPermutation, "empty permutation");
    std::vector<bool> seen(n + 1, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[v]) fail(ErrorKind::InvalidPermutation, "images must be a rearrangement of 1..n");
        seen[v] = true;
    }
    Permutation g(n);
    g.images_ = std::move(images);
    return g;
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        fail(ErrorKind::InvalidPermutation, "transposition entries out of range");
    Permutation g(n);
    std::swap(g.images_[a - 1], g.images_[b - 1]);
    return g;
}

Permutation Permutation::adjacent(int n, int k) { return transposition(n, k, k + 1); }

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation g(n);
    for (const auto& c : cycles) {
        std::vector<int> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorKind::InvalidPermutation, "repeated entry in a cycle");
        for (int v : c)
            if (v < 1 || v > n) fail(ErrorKind::InvalidPermutation, "cycle entry out of range");
        Permutation cyc(n);
        for (std::size_t i = 0; i < c.size(); ++i) cyc.images_[c[i] - 1] = c[(i + 1) % c.size()];
        g = g * cyc;
    }
    return g;
}

Permutation Permutation::operator*(const Permutation& g) const {
    if (g.degree() != degree()) fail(ErrorKind::InvalidPermutation, "degree mismatch in product");
    Permutation h(degree());
    for (int x = 1; x <= degree(); ++x) h.images_[x - 1] = (*this)(g(x));
    return h;
}

Permutation Permutation::inverse() const {
    Permutation h(degree());
    for (int x = 1; x <= degree(); ++x) h.images_[(*this)(x) - 1] = x;
    return h;
}

int Permutation::sign() const {
    std::vector<bool> seen(degree() + 1, false);
    int s = 1;
    for (int x = 1; x <= degree(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (int y = x; !seen[y]; y = (*this)(y)) {
            seen[y] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

bool Permutation::is_identity() const { return *this == Permutation(degree()); }

std::vector<int> Permutation::adjacent_word() const {
    // Right-multiplying by s_k swaps positions k, k+1 of the image list;
    // sorting the list to the identity spells the word backwards.
    std::vector<int> w = images_;
    std::vector<int> swaps;
    int n = degree();
    for (int pass = 0; pass < n; ++pass) {
        bool moved = false;
        for (int k = 1; k < n; ++k) {
            if (w[k - 1] > w[k]) {
                std::swap(w[k - 1], w[k]);
                swaps.push_back(k);
                moved = true;
            }
        }
        if (!moved) break;
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

std::string Permutation::to_cycle_string() const {
    std::string s;
    std::vector<bool> seen(degree() + 1, false);
    for (int x = 1; x <= degree(); ++x) {
        if (seen[x] || (*this)(x) == x) continue;
        s += '(';
        for (int y = x; !seen[y]; y = (*this)(y)) {
            if (y != x) s += ' ';
            s += std::to_string(y);
            seen[y] = true;
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

namespace {

std::vector<int> read_ints(const std::string& text) {
    std::vector<int> out;
    std::string cleaned;
    for (char ch : text) cleaned += (ch == ',' || ch == '[' || ch == ']') ? ' ' : ch;
    std::stringstream ss(cleaned);
    std::string tok;
    while (ss >> tok) {
        for (char ch : tok)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                fail(ErrorKind::InvalidPermutation, "unexpected token '" + tok + "'");
        if (tok.size() > 6) fail(ErrorKind::InvalidPermutation, "entry too large");
        out.push_back(std::stoi(tok));
    }
    return out;
}

} // namespace

Permutation parse_permutation(const std::string& text, int n) {
    auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '(') {
        std::vector<std::vector<int>> cycles;
        int largest = 1;
        std::size_t pos = first;
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                continue;
            }
            if (text[pos] != '(') fail(ErrorKind::InvalidPermutation, "expected '(' in '" + text + "'");
            auto close = text.find(')', pos);
            if (close == std::string::npos) fail(ErrorKind::InvalidPermutation, "unbalanced cycle in '" + text + "'");
            auto c = read_ints(text.substr(pos + 1, close - pos - 1));
            for (int v : c) largest = std::max(largest, v);
            if (!c.empty()) cycles.push_back(std::move(c));
            pos = close + 1;
        }
        if (n == 0) n = largest;
        if (largest > n) fail(ErrorKind::InvalidPermutation, "cycle entry exceeds degree");
        return Permutation::from_cycles(n, cycles);
    }
    auto images = read_ints(text);
    auto g = Permutation::from_images(images);
    if (n != 0 && g.degree() != n) fail(ErrorKind::InvalidPermutation, "one-line notation has the wrong degree");
    return g;
}

StandardTableau act(const Permutation& g, const StandardTableau& T) {
    if (g.degree() != T.size()) fail(ErrorKind::SizeMismatch, "degree mismatch with tableau");
    auto rows = T.rows();
    for (auto& r : rows)
        for (int& v : r) v = g(v);
    return StandardTableau::from_rows_unchecked(std::move(rows));
}

Permutation relabelling(const StandardTableau& T, const StandardTableau& reference) {
    if (!(T.shape() == reference.shape())) fail(ErrorKind::ShapeMismatch, "tableaux of different shapes");
    std::vector<int> images(T.size());
    for (int k = 1; k <= T.size(); ++k) images[k - 1] = T.at(reference.box_of(k));
    return Permutation::from_images(std::move(images));
}

} // namespace eitff
