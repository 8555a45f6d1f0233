// Exact arithmetic in GF(2), GF(3) and GF(4) via lookup tables.
//
// Element codes are 0..q-1. For GF(4) the codes 2 and 3 stand for w and w+1
// where w^2 = w + 1, so 2*2=3, 2*3=1, 3*3=2. The only nontrivial field
// automorphism handled is the Frobenius map x -> x^2 of GF(4).

#ifndef CANAUG_GF_HPP
#define CANAUG_GF_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace canaug {

using Elem = std::uint8_t;

enum class InnerForm { euclidean, hermitian };

struct Field {
    int q = 0;
    int p = 0;                 // characteristic
    int automorphism_count = 1;
    Elem add_tab[4][4] = {};
    Elem mul_tab[4][4] = {};
    Elem neg_tab[4] = {};
    Elem inv_tab[4] = {};      // inv_tab[0] unused
    Elem frob_tab[4] = {};     // x -> x^p

    Elem add(Elem a, Elem b) const { return add_tab[a][b]; }
    Elem sub(Elem a, Elem b) const { return add_tab[a][neg_tab[b]]; }
    Elem mul(Elem a, Elem b) const { return mul_tab[a][b]; }
    Elem neg(Elem a) const { return neg_tab[a]; }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("gf: inverse of zero");
        return inv_tab[a];
    }

    // j = 0 is the identity, j = 1 the Frobenius map (q = 4 only).
    Elem apply_automorphism(Elem a, int j) const {
        if (j < 0 || j >= automorphism_count)
            throw std::invalid_argument("gf: automorphism index " + std::to_string(j) +
                                        " out of range for q=" + std::to_string(q));
        return j == 0 ? a : frob_tab[a];
    }

    bool valid_elem(Elem a) const { return a < q; }
};

namespace detail {

inline Field make_field(int q) {
    Field f;
    f.q = q;
    if (q == 2 || q == 3) {
        f.p = q;
        f.automorphism_count = 1;
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                f.add_tab[a][b] = static_cast<Elem>((a + b) % q);
                f.mul_tab[a][b] = static_cast<Elem>((a * b) % q);
            }
            f.neg_tab[a] = static_cast<Elem>((q - a) % q);
            f.frob_tab[a] = static_cast<Elem>(a);
            if (a != 0)
                for (int b = 1; b < q; ++b)
                    if ((a * b) % q == 1) f.inv_tab[a] = static_cast<Elem>(b);
        }
    } else {  // q == 4, F_2[x]/(x^2+x+1), code = lo bit + 2*hi bit
        f.p = 2;
        f.automorphism_count = 2;
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                f.add_tab[a][b] = static_cast<Elem>(a ^ b);
                // multiply polynomials a(x)*b(x) mod x^2+x+1
                int prod = 0;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        if (((a >> i) & 1) && ((b >> j) & 1)) prod ^= 1 << (i + j);
                if (prod & 4) prod ^= 4 | 2 | 1;  // x^2 = x + 1
                f.mul_tab[a][b] = static_cast<Elem>(prod);
            }
            f.neg_tab[a] = static_cast<Elem>(a);
        }
        for (int a = 1; a < 4; ++a) {
            f.frob_tab[a] = f.mul_tab[a][a];
            for (int b = 1; b < 4; ++b)
                if (f.mul_tab[a][b] == 1) f.inv_tab[a] = static_cast<Elem>(b);
        }
    }
    return f;
}

}  // namespace detail

// Shared immutable instances; safe to use concurrently.
inline const Field& field_make(int q) {
    static const Field f2 = detail::make_field(2);
    static const Field f3 = detail::make_field(3);
    static const Field f4 = detail::make_field(4);
    switch (q) {
        case 2: return f2;
        case 3: return f3;
        case 4: return f4;
        default:
            throw std::invalid_argument("gf: unsupported field order " + std::to_string(q) +
                                        " (supported orders: 2, 3, 4)");
    }
}

inline Elem inner_product(const Field& f, std::span<const Elem> x, std::span<const Elem> y,
                          InnerForm form = InnerForm::euclidean) {
    if (x.size() != y.size()) throw std::invalid_argument("inner_product: length mismatch");
    if (form == InnerForm::hermitian && f.q != 4)
        throw std::invalid_argument("inner_product: hermitian form requires q=4");
    Elem acc = 0;
    if (form == InnerForm::euclidean) {
        for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
    } else {
        for (std::size_t i = 0; i < x.size(); ++i)
            acc = f.add(acc, f.mul(x[i], f.frob_tab[y[i]]));
    }
    return acc;
}

}  // namespace canaug

#endif
