#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace sclab {

// Fixed-width bitmap keyed by element index. Value-semantic, cheap to hash
// and compare; the canonical representative of a conjugacy class is the
// lexicographically smallest bitmap (as a sorted index list).
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size_bits() const { return nbits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    DynBitset& operator&=(const DynBitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }

    bool operator==(const DynBitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const DynBitset& o) const { return !(*this == o); }

    bool is_subset_of(const DynBitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Order as sorted index lists: {0,1,4} < {0,2,3}. The set holding the
    // lowest differing index is the smaller one.
    bool lex_less(const DynBitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t d = w_[i] ^ o.w_[i];
            if (d) {
                uint64_t low = d & (~d + 1);
                return (w_[i] & low) != 0;
            }
        }
        return false;
    }

    int lowest() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    std::vector<int> bits() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                out.push_back(int(i * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                f(int(i * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }

    size_t hash() const {
        size_t h = std::hash<int>()(nbits_);
        for (uint64_t x : w_) h = h * 1000003u ^ std::hash<uint64_t>()(x);
        return h;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

struct DynBitsetHash {
    size_t operator()(const DynBitset& b) const { return b.hash(); }
};

}  // namespace sclab
