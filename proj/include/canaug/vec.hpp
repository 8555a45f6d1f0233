// Packed coordinate vectors over GF(2), GF(3), GF(4).
//
// Symbols live in two bit planes (code = lo + 2*hi), one bit per symbol and
// plane, so Hamming weights come from population counts and GF(2)/GF(4)
// addition is plane-wise XOR. GF(3) addition uses a bitsliced mod-3 adder.

#ifndef CANAUG_VEC_HPP
#define CANAUG_VEC_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "gf.hpp"

namespace canaug {

class Vec {
  public:
    Vec() = default;
    Vec(const Field& f, int n) : f_(&f), n_(n), lo_(words(n), 0), hi_(words(n), 0) {}

    Vec(const Field& f, std::span<const Elem> symbols) : Vec(f, static_cast<int>(symbols.size())) {
        for (int i = 0; i < n_; ++i) set(i, symbols[i]);
    }

    int length() const { return n_; }
    const Field& field() const { return *f_; }

    Elem get(int i) const {
        return static_cast<Elem>(((lo_[i >> 6] >> (i & 63)) & 1) |
                                 (((hi_[i >> 6] >> (i & 63)) & 1) << 1));
    }

    void set(int i, Elem v) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        lo_[i >> 6] = (lo_[i >> 6] & ~m) | ((v & 1) ? m : 0);
        hi_[i >> 6] = (hi_[i >> 6] & ~m) | ((v & 2) ? m : 0);
    }

    int weight() const {
        int w = 0;
        for (std::size_t k = 0; k < lo_.size(); ++k) w += std::popcount(lo_[k] | hi_[k]);
        return w;
    }

    bool is_zero() const {
        for (std::size_t k = 0; k < lo_.size(); ++k)
            if (lo_[k] | hi_[k]) return false;
        return true;
    }

    void add_assign(const Vec& o) {
        switch (f_->q) {
            case 2:
                for (std::size_t k = 0; k < lo_.size(); ++k) lo_[k] ^= o.lo_[k];
                break;
            case 4:
                for (std::size_t k = 0; k < lo_.size(); ++k) {
                    lo_[k] ^= o.lo_[k];
                    hi_[k] ^= o.hi_[k];
                }
                break;
            default:  // bitsliced addition mod 3
                for (std::size_t k = 0; k < lo_.size(); ++k) {
                    const std::uint64_t al = lo_[k], ah = hi_[k];
                    const std::uint64_t bl = o.lo_[k], bh = o.hi_[k];
                    lo_[k] = (al & ~bl & ~bh) | (~al & ~ah & bl) | (ah & bh);
                    hi_[k] = (ah & ~bl & ~bh) | (~al & ~ah & bh) | (al & bl);
                }
        }
    }

    void scale_assign(Elem c) {
        if (c == 1) return;
        if (c == 0) {
            std::fill(lo_.begin(), lo_.end(), 0);
            std::fill(hi_.begin(), hi_.end(), 0);
            return;
        }
        if (f_->q == 3) {  // c == 2: swap nonzero codes
            lo_.swap(hi_);
            return;
        }
        // q == 4
        for (std::size_t k = 0; k < lo_.size(); ++k) {
            const std::uint64_t l = lo_[k], h = hi_[k];
            if (c == 2) {  // multiply by w
                lo_[k] = h;
                hi_[k] = l ^ h;
            } else {  // multiply by w+1
                lo_[k] = l ^ h;
                hi_[k] = l;
            }
        }
    }

    void frobenius_assign() {
        if (f_->q != 4) return;
        for (std::size_t k = 0; k < lo_.size(); ++k) lo_[k] ^= hi_[k];
    }

    void apply_automorphism_assign(int j) {
        if (j != 0) frobenius_assign();
    }

    // Lexicographic comparison by element code, position 0 first.
    int cmp(const Vec& o) const {
        for (std::size_t k = 0; k < lo_.size(); ++k) {
            const std::uint64_t d = (lo_[k] ^ o.lo_[k]) | (hi_[k] ^ o.hi_[k]);
            if (d) {
                const int i = (static_cast<int>(k) << 6) + std::countr_zero(d);
                return get(i) < o.get(i) ? -1 : 1;
            }
        }
        return 0;
    }

    bool operator==(const Vec& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
    bool operator<(const Vec& o) const { return cmp(o) < 0; }

    std::vector<Elem> to_bytes() const {
        std::vector<Elem> out(n_);
        for (int i = 0; i < n_; ++i) out[i] = get(i);
        return out;
    }

  private:
    static std::size_t words(int n) { return static_cast<std::size_t>((n + 63) / 64); }

    const Field* f_ = nullptr;
    int n_ = 0;
    std::vector<std::uint64_t> lo_, hi_;
};

}  // namespace canaug

#endif
