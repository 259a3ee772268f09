#ifndef GRL_SRC_UNION_FIND_HPP
#define GRL_SRC_UNION_FIND_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace grl::detail {

// Union-find whose class representative is always the smallest member.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
};

} // namespace grl::detail

#endif // GRL_SRC_UNION_FIND_HPP
