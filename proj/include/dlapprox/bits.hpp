#ifndef DLAPPROX_BITS_HPP
#define DLAPPROX_BITS_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace dla {

// Fixed-width dynamic bitset. All operands of a binary op must share a width.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t nbits, bool value = false)
        : nbits_(nbits), w_((nbits + 63) / 64, value ? ~0ull : 0ull) {
        trim();
    }

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { w_[i >> 6] |= (1ull << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ull; }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : w_) n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& andNot(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }
    friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    // allocation-free (a & b & c).any() / (a & b & ~c).any()
    static bool anyAnd3(const Bits& a, const Bits& b, const Bits& c) {
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            if (a.w_[i] & b.w_[i] & c.w_[i]) return true;
        return false;
    }
    static bool anyAndAndNot(const Bits& a, const Bits& b, const Bits& c) {
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            if (a.w_[i] & b.w_[i] & ~c.w_[i]) return true;
        return false;
    }
    // this subset-of o
    bool subsetOf(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator<(const Bits& o) const { return w_ < o.w_; }

    int firstSet() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    template <class F>
    void forEach(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(i * 64 + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : w_) { h ^= w; h *= 1099511628211ull; }
        return h;
    }

private:
    void trim() {
        if (nbits_ % 64 && !w_.empty())
            w_.back() &= (~0ull >> (64 - nbits_ % 64));
    }
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace dla

#endif
