#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <vector>

#include "errors.hpp"

namespace awcsp {

/// Orbits of the group generated by `actions` on a finite, action-closed set.
/// Each orbit lists indices into `elements` in ascending order; orbits are
/// ordered by their smallest index. Throws structural_error if an action
/// leaves the set.
template <class T, class... Actions>
std::vector<std::vector<std::size_t>> orbit_indices(const std::vector<T>& elements, Actions&&... actions) {
    std::map<T, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        index.emplace(elements[i], i);
    std::vector<bool> seen(elements.size(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t start = 0; start < elements.size(); ++start) {
        if (seen[start])
            continue;
        std::vector<std::size_t> orbit;
        std::deque<std::size_t> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            const std::size_t i = queue.front();
            queue.pop_front();
            orbit.push_back(i);
            auto visit = [&](const T& image) {
                auto it = index.find(image);
                if (it == index.end())
                    throw structural_error("group action leaves the enumerated set");
                if (!seen[it->second]) {
                    seen[it->second] = true;
                    queue.push_back(it->second);
                }
            };
            (visit(actions(elements[i])), ...);
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

/// Number of elements x with action(x) == x.
template <class T, class Action>
std::size_t count_fixed(const std::vector<T>& elements, Action&& action) {
    return static_cast<std::size_t>(
        std::count_if(elements.begin(), elements.end(), [&](const T& x) { return action(x) == x; }));
}

}  // namespace awcsp
