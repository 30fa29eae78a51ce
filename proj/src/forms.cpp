#include "atiyah/forms.hpp"

#include <numeric>

namespace atiyah::detail {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

void fill(const std::vector<int>& sizes, std::size_t block, std::vector<int>& order, std::vector<bool>& used,
          std::vector<Shuffle>& out) {
    if (block == sizes.size()) {
        out.push_back({order, permutation_sign(order)});
        return;
    }
    const int need = sizes[block];
    const int n = static_cast<int>(used.size());
    // increasing choice of `need` unused indices
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(pick.size()) == need) {
            for (int k : pick) {
                used[k] = true;
                order.push_back(k);
            }
            fill(sizes, block + 1, order, used, out);
            for (int k : pick) {
                used[k] = false;
                order.pop_back();
            }
            return;
        }
        for (int k = from; k < n; ++k) {
            if (used[k]) continue;
            pick.push_back(k);
            choose(k + 1);
            pick.pop_back();
        }
    };
    choose(0);
}

}  // namespace

std::vector<Shuffle> shuffles(const std::vector<int>& sizes) {
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<Shuffle> out;
    std::vector<int> order;
    std::vector<bool> used(total, false);
    fill(sizes, 0, order, used, out);
    return out;
}

}  // namespace atiyah::detail
