#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drn {

inline constexpr int kMaxEnumDegree = 12;

std::uint64_t factorial(int k);

// Element of S_k in one-line form. Storage is 0-based; every text form and
// every *_one_based accessor is 1-based.
class Permutation {
public:
    static Permutation identity(int k);
    static Permutation from_one_based(std::span<const int> images);
    static Permutation from_zero_based(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    // 0-based image of 0-based point i.
    int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& zero_based() const { return images_; }
    std::vector<int> one_based() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
    std::vector<int> images_;
};

struct PermRank {
    std::uint64_t rank = 0;
    int degree = 1;
    friend bool operator==(const PermRank&, const PermRank&) = default;
};

// (a o b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
bool is_derangement(const Permutation& a);
bool disagree_everywhere(const Permutation& a, const Permutation& b);

// All of S_k, lexicographic order. k <= kMaxEnumDegree.
std::vector<Permutation> enumerate_permutations(int k);
// D_k, lexicographic order. k <= kMaxEnumDegree.
std::vector<Permutation> enumerate_derangements(int k);

// Lexicographic rank via the factorial number system. k <= kMaxEnumDegree.
PermRank rank(const Permutation& a);
Permutation unrank(PermRank r);

std::string to_string(const Permutation& a);
// Accepts "(3,4,1,2)"; whitespace around entries is ignored.
Permutation parse_permutation(std::string_view text);

}  // namespace drn
