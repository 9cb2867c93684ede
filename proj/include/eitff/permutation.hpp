#pragma once

#include <string>
#include <vector>

#include "eitff/young.hpp"

namespace eitff {

/// Permutation of {1..n}. Products act right to left: (f g)(x) = f(g(x)).
class Permutation {
public:
    explicit Permutation(int n = 1);

    /// One-line notation: images[i-1] = g(i).
    static Permutation from_images(std::vector<int> images);
    static Permutation transposition(int n, int a, int b);
    /// s_k = (k k+1).
    static Permutation adjacent(int n, int k);
    /// Product of cycles, e.g. {{1,2},{3,4,5}}.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation operator*(const Permutation& g) const;
    Permutation inverse() const;
    int sign() const;
    bool is_identity() const;

    /// k_1..k_m with g = s_{k_1} ... s_{k_m}.
    std::vector<int> adjacent_word() const;

    /// Cycle notation without fixed points; "()" for the identity.
    std::string to_cycle_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Accepts "(1 2)(3 4 5)", "()", or one-line "2 1 3" / "2,1,3" / "[2,1,3]".
/// With n = 0 the degree is inferred from the largest entry.
Permutation parse_permutation(const std::string& text, int n = 0);

/// (g T)_{ij} = g(T_{ij}); the result need not be standard.
StandardTableau act(const Permutation& g, const StandardTableau& T);

/// g with g(reference_b) = T_b for every box b.
Permutation relabelling(const StandardTableau& T, const StandardTableau& reference);

} // namespace eitff
