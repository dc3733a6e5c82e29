#include <vector>

#include "drn/error.hpp"
#include "drn/perm.hpp"
#include "drn/solver.hpp"

namespace drn {

bool brute_force_oracle(const Graph& g, int k) {
    const int n = g.order();
    if (n > 4 || k < 1 || k > 4) throw InputError("oracle size over cap (n <= 4, k <= 4)");
    const auto perms = enumerate_permutations(k);
    const int m = static_cast<int>(perms.size());
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                const auto& a = perms[static_cast<std::size_t>(pick[static_cast<std::size_t>(u)])];
                const auto& b = perms[static_cast<std::size_t>(pick[static_cast<std::size_t>(v)])];
                if (a == b || disagree_everywhere(a, b) != g.adjacent(u, v)) ok = false;
            }
        }
        if (ok) return true;
        int i = 0;
        while (i < n && ++pick[static_cast<std::size_t>(i)] == m) pick[static_cast<std::size_t>(i++)] = 0;
        if (i == n) return false;
    }
}

}  // namespace drn
