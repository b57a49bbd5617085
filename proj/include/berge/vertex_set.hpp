#ifndef BERGE_VERTEX_SET_HPP
#define BERGE_VERTEX_SET_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "berge/errors.hpp"

namespace berge {

// Fixed-width bitset over vertex ids.  Hyperedges keep a sorted id array for
// iteration and one of these mirrors for O(1) intersection work in the
// search and cluster cores.  The width is an implementation budget: every
// supported input has n <= kMaxVertices.
class VertexSet {
public:
    static constexpr int kMaxVertices = 1024;
    static constexpr int kWords = kMaxVertices / 64;

    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64) {
        if (universe < 0 || universe > kMaxVertices)
            throw PreconditionError("vertex universe exceeds supported width " +
                                    std::to_string(kMaxVertices));
    }

    int universe() const { return n_; }

    void add(int v) { w_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
    void remove(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }

    int count() const {
        int c = 0;
        for (int i = 0; i < words_; ++i) c += __builtin_popcountll(w_[i]);
        return c;
    }

    bool empty() const {
        for (int i = 0; i < words_; ++i)
            if (w_[i]) return false;
        return true;
    }

    int intersect_count(const VertexSet& o) const {
        int c = 0;
        for (int i = 0; i < words_; ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }

    VertexSet intersect(const VertexSet& o) const {
        VertexSet r(n_);
        for (int i = 0; i < words_; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    VertexSet unite(const VertexSet& o) const {
        VertexSet r(n_);
        for (int i = 0; i < words_; ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }

    bool subset_of(const VertexSet& o) const {
        for (int i = 0; i < words_; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < words_; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = 0; i < words_; ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                out.push_back(i * 64 + b);
                w &= w - 1;
            }
        }
        return out;
    }

    static VertexSet of(int universe, const std::vector<int>& ids) {
        VertexSet s(universe);
        for (int v : ids) s.add(v);
        return s;
    }

private:
    std::array<std::uint64_t, kWords> w_{};
    int n_ = 0;
    int words_ = 0;
};

} // namespace berge

#endif
