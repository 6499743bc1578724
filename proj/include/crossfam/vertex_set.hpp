#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace crossfam {

/// Set of vertex indices backed by a growable array of 64-bit words.
/// All membership, intersection, union, difference and subset tests are
/// exact word-level operations. The word array never keeps trailing zero
/// words, so equality is plain vector comparison.
class VertexSet {
public:
    VertexSet() = default;

    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) add(v);
    }

    static VertexSet from(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.add(v);
        return s;
    }

    /// {0, 1, ..., n-1}
    static VertexSet full(int n) {
        VertexSet s;
        for (int v = 0; v < n; ++v) s.add(v);
        return s;
    }

    void add(int v) {
        check_index(v);
        std::size_t w = static_cast<std::size_t>(v) >> 6;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= bit(v);
    }

    void remove(int v) {
        check_index(v);
        std::size_t w = static_cast<std::size_t>(v) >> 6;
        if (w < words_.size()) {
            words_[w] &= ~bit(v);
            trim();
        }
    }

    bool contains(int v) const {
        if (v < 0) return false;
        std::size_t w = static_cast<std::size_t>(v) >> 6;
        return w < words_.size() && (words_[w] & bit(v)) != 0;
    }

    int size() const {
        int n = 0;
        for (std::uint64_t w : words_) n += std::popcount(w);
        return n;
    }

    bool empty() const { return words_.empty(); }

    int min_element() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    int max_element() const {
        if (words_.empty()) return -1;
        std::size_t i = words_.size() - 1;
        return static_cast<int>(i * 64 + 63 - std::countl_zero(words_[i]));
    }

    bool intersects(const VertexSet& o) const {
        std::size_t n = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int intersection_size(const VertexSet& o) const {
        std::size_t n = std::min(words_.size(), o.words_.size());
        int c = 0;
        for (std::size_t i = 0; i < n; ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t ow = i < o.words_.size() ? o.words_[i] : 0;
            if (words_[i] & ~ow) return false;
        }
        return true;
    }

    bool is_strict_subset_of(const VertexSet& o) const {
        return is_subset_of(o) && *this != o;
    }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        std::size_t n = std::min(words_.size(), o.words_.size());
        r.words_.resize(n);
        for (std::size_t i = 0; i < n; ++i) r.words_[i] = words_[i] & o.words_[i];
        r.trim();
        return r;
    }

    VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        std::size_t n = std::max(words_.size(), o.words_.size());
        r.words_.resize(n, 0);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= words_[i];
        for (std::size_t i = 0; i < o.words_.size(); ++i) r.words_[i] |= o.words_[i];
        return r;
    }

    /// Set difference: elements of *this not in o.
    VertexSet operator-(const VertexSet& o) const {
        VertexSet r;
        r.words_.resize(words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t ow = i < o.words_.size() ? o.words_[i] : 0;
            r.words_[i] = words_[i] & ~ow;
        }
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const = default;

    /// Three-way comparison in the canonical edge order: compare the
    /// ascending member sequences lexicographically ({0,1} < {0,1,2} < {0,2}).
    static int compare(const VertexSet& a, const VertexSet& b) {
        std::size_t n = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
            std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
            if (wa == wb) continue;
            int p = std::countr_zero(wa ^ wb);
            bool a_holds = (wa >> p) & 1;
            const VertexSet& other = a_holds ? b : a;
            if (other.has_member_above(i, p)) {
                // The holder contributes the smaller element at the first
                // difference, so its sequence is lexicographically smaller.
                return a_holds ? -1 : 1;
            }
            // Otherwise the other set is a strict prefix of the holder.
            return a_holds ? 1 : -1;
        }
        return 0;
    }

    bool operator<(const VertexSet& o) const { return compare(*this, o) < 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int p = std::countr_zero(w);
                out.push_back(static_cast<int>(i * 64 + p));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int p = std::countr_zero(w);
                f(static_cast<int>(i * 64 + p));
                w &= w - 1;
            }
        }
    }

private:
    static std::uint64_t bit(int v) {
        return std::uint64_t{1} << (v & 63);
    }

    static void check_index(int v) {
        if (v < 0) throw std::invalid_argument("vertex index is negative");
    }

    // Any member strictly above bit p of word i?
    bool has_member_above(std::size_t i, int p) const {
        if (i < words_.size()) {
            std::uint64_t mask = p == 63 ? 0 : ~std::uint64_t{0} << (p + 1);
            if (words_[i] & mask) return true;
        }
        for (std::size_t j = i + 1; j < words_.size(); ++j)
            if (words_[j]) return true;
        return false;
    }

    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    std::vector<std::uint64_t> words_;
};

} // namespace crossfam
