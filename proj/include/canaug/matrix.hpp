// Dense byte matrices over a small field: row reduction, rank, solving.
// Sizes here are tiny (k <= 16, n <= 64), clarity wins over packing.

#ifndef CANAUG_MATRIX_HPP
#define CANAUG_MATRIX_HPP

#include <vector>

#include "gf.hpp"

namespace canaug {

struct Mat {
    const Field* f = nullptr;
    int rows = 0, cols = 0;
    std::vector<Elem> a;  // row-major

    Mat() = default;
    Mat(const Field& field, int r, int c) : f(&field), rows(r), cols(c), a(r * c, 0) {}

    Elem& at(int r, int c) { return a[r * cols + c]; }
    Elem at(int r, int c) const { return a[r * cols + c]; }

    std::span<const Elem> row(int r) const { return {a.data() + r * cols, static_cast<std::size_t>(cols)}; }
    std::span<Elem> row(int r) { return {a.data() + r * cols, static_cast<std::size_t>(cols)}; }

    static Mat identity(const Field& field, int n) {
        Mat m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Mat transposed() const {
        Mat t(*f, cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Mat operator*(const Mat& o) const {
        Mat out(*f, rows, o.cols);
        for (int r = 0; r < rows; ++r)
            for (int k = 0; k < cols; ++k) {
                const Elem v = at(r, k);
                if (!v) continue;
                for (int c = 0; c < o.cols; ++c)
                    out.at(r, c) = f->add(out.at(r, c), f->mul(v, o.at(k, c)));
            }
        return out;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    void scale_row(int r, Elem c) {
        for (int j = 0; j < cols; ++j) at(r, j) = f->mul(at(r, j), c);
    }

    // row r += c * row s
    void add_row(int r, int s, Elem c) {
        for (int j = 0; j < cols; ++j) at(r, j) = f->add(at(r, j), f->mul(c, at(s, j)));
    }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int pr = -1;
            for (int i = r; i < rows; ++i)
                if (at(i, c)) { pr = i; break; }
            if (pr < 0) continue;
            if (pr != r)
                for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(r, j));
            scale_row(r, f->inv(at(r, c)));
            for (int i = 0; i < rows; ++i)
                if (i != r && at(i, c)) add_row(i, r, f->neg(at(i, c)));
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Mat tmp = *this;
        return static_cast<int>(tmp.rref().size());
    }
};

// Solve x * G = target for a row vector x, where G is in RREF with the given
// pivot columns. Returns false when target is outside the row space.
inline bool solve_in_rowspace(const Mat& G, const std::vector<int>& pivots,
                              std::span<const Elem> target, std::vector<Elem>& x) {
    const Field& f = *G.f;
    x.assign(G.rows, 0);
    std::vector<Elem> residue(target.begin(), target.end());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Elem c = residue[pivots[i]];
        if (!c) continue;
        x[i] = c;
        for (int j = 0; j < G.cols; ++j)
            residue[j] = f.sub(residue[j], f.mul(c, G.at(static_cast<int>(i), j)));
    }
    for (Elem v : residue)
        if (v) return false;
    return true;
}

}  // namespace canaug

#endif
