#include "drn/perm.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

#include "drn/error.hpp"

namespace drn {

namespace {

void require_enum_degree(int k) {
    if (k < 1 || k > kMaxEnumDegree) {
        throw InputError("degree " + std::to_string(k) + " outside [1.." +
                         std::to_string(kMaxEnumDegree) + "]");
    }
}

void require_same_degree(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw InputError("degree mismatch");
}

}  // namespace

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation Permutation::identity(int k) {
    if (k < 1) throw InputError("degree must be at least 1");
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::from_zero_based(std::vector<int> images) {
    const int k = static_cast<int>(images.size());
    if (k < 1) throw InputError("degree must be at least 1");
    std::vector<char> seen(images.size(), 0);
    for (int x : images) {
        if (x < 0 || x >= k || seen[static_cast<std::size_t>(x)]) {
            throw InputError("not a permutation");
        }
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
    std::vector<int> v(images.begin(), images.end());
    for (int& x : v) --x;
    return from_zero_based(std::move(v));
}

std::vector<int> Permutation::one_based() const {
    std::vector<int> v = images_;
    for (int& x : v) ++x;
    return v;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    require_same_degree(a, b);
    std::vector<int> v(static_cast<std::size_t>(a.degree()));
    for (int i = 0; i < a.degree(); ++i) v[static_cast<std::size_t>(i)] = a[b[i]];
    return Permutation::from_zero_based(std::move(v));
}

Permutation inverse(const Permutation& a) {
    std::vector<int> v(static_cast<std::size_t>(a.degree()));
    for (int i = 0; i < a.degree(); ++i) v[static_cast<std::size_t>(a[i])] = i;
    return Permutation::from_zero_based(std::move(v));
}

bool is_derangement(const Permutation& a) {
    for (int i = 0; i < a.degree(); ++i) {
        if (a[i] == i) return false;
    }
    return true;
}

bool disagree_everywhere(const Permutation& a, const Permutation& b) {
    require_same_degree(a, b);
    for (int i = 0; i < a.degree(); ++i) {
        if (a[i] == b[i]) return false;
    }
    return true;
}

std::vector<Permutation> enumerate_permutations(int k) {
    require_enum_degree(k);
    std::vector<Permutation> out;
    out.reserve(factorial(k));
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 0);
    do {
        out.push_back(Permutation::from_zero_based(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Permutation> enumerate_derangements(int k) {
    require_enum_degree(k);
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 0);
    do {
        bool fixed = false;
        for (int i = 0; i < k && !fixed; ++i) fixed = v[static_cast<std::size_t>(i)] == i;
        if (!fixed) out.push_back(Permutation::from_zero_based(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

PermRank rank(const Permutation& a) {
    const int k = a.degree();
    require_enum_degree(k);
    std::uint64_t r = 0;
    unsigned used = 0;
    for (int i = 0; i < k; ++i) {
        const unsigned below = (1u << a[i]) - 1u;
        const int smaller_unused = a[i] - std::popcount(used & below);
        r = r * static_cast<std::uint64_t>(k - i) + static_cast<std::uint64_t>(smaller_unused);
        used |= 1u << a[i];
    }
    return {r, k};
}

Permutation unrank(PermRank r) {
    require_enum_degree(r.degree);
    const int k = r.degree;
    if (r.rank >= factorial(k)) throw InputError("rank out of range");
    std::vector<int> digits(static_cast<std::size_t>(k));
    std::uint64_t x = r.rank;
    for (int i = k - 1; i >= 0; --i) {
        const auto base = static_cast<std::uint64_t>(k - i);
        digits[static_cast<std::size_t>(i)] = static_cast<int>(x % base);
        x /= base;
    }
    std::vector<int> pool(static_cast<std::size_t>(k));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
        v.push_back(*it);
        pool.erase(it);
    }
    return Permutation::from_zero_based(std::move(v));
}

std::string to_string(const Permutation& a) {
    std::string s = "(";
    for (int i = 0; i < a.degree(); ++i) {
        if (i) s += ',';
        s += std::to_string(a[i] + 1);
    }
    s += ')';
    return s;
}

Permutation parse_permutation(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw InputError("permutation must be written as (a,b,...)");
    }
    text = text.substr(1, text.size() - 2);
    std::vector<int> v;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view item = trim(text.substr(0, comma));
        int x = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
        if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
            throw InputError("bad permutation entry '" + std::string(item) + "'");
        }
        v.push_back(x);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Permutation::from_one_based(v);
}

}  // namespace drn
