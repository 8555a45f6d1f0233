// Code files: a one-line header `q=<q> n=<n> k=<k>`, then per code a line
// `code <index>`, k rows of n digits from {0,1,2,3}, and a blank line.
// Writing then reading gives back identical generator matrices, and files
// regenerate byte-identically.

#ifndef CANAUG_IO_HPP
#define CANAUG_IO_HPP

#include <fstream>
#include <sstream>

#include "code.hpp"

namespace canaug {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void write_codes(std::ostream& out, std::span<const LinearCode> codes, int q, int n,
                        int k) {
    out << "q=" << q << " n=" << n << " k=" << k << "\n";
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const LinearCode& c = codes[i];
        if (c.field().q != q || c.n() != n || c.k() != k)
            throw std::invalid_argument("write_codes: code " + std::to_string(i) +
                                        " does not match the header parameters");
        out << "code " << i << "\n";
        for (int r = 0; r < k; ++r) {
            for (int j = 0; j < n; ++j) out << static_cast<char>('0' + c.gen().at(r, j));
            out << "\n";
        }
        out << "\n";
    }
}

inline void write_codes(const std::string& path, std::span<const LinearCode> codes, int q, int n,
                        int k) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_codes(out, codes, q, n, k);
    if (!out) throw IoError("failed while writing '" + path + "'");
}

inline std::vector<LinearCode> read_codes(std::istream& in, const std::string& name) {
    auto fail = [&](int line, const std::string& what) {
        throw IoError(name + ":" + std::to_string(line) + ": " + what);
    };
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) fail(1, "missing header");
    ++lineno;
    int q = 0, n = 0, k = 0;
    if (std::sscanf(line.c_str(), "q=%d n=%d k=%d", &q, &n, &k) != 3)
        fail(lineno, "malformed header, expected 'q=<q> n=<n> k=<k>'");
    if (q < 2 || q > 4) fail(lineno, "unsupported field order " + std::to_string(q));
    if (k < 1 || n < 1 || k > n) fail(lineno, "invalid dimensions");
    const Field& f = field_make(q);

    std::vector<LinearCode> out;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line.rfind("code", 0) != 0) fail(lineno, "expected 'code <index>' line");
        Mat g(f, k, n);
        for (int r = 0; r < k; ++r) {
            if (!std::getline(in, line)) fail(lineno + 1, "unexpected end of file inside a code");
            ++lineno;
            if (static_cast<int>(line.size()) != n)
                fail(lineno, "row has length " + std::to_string(line.size()) + ", expected " +
                                 std::to_string(n));
            for (int j = 0; j < n; ++j) {
                const char c = line[j];
                if (c < '0' || c >= '0' + q)
                    fail(lineno, std::string("invalid symbol '") + c + "' for q=" +
                                     std::to_string(q));
                g.at(r, j) = static_cast<Elem>(c - '0');
            }
        }
        try {
            out.push_back(LinearCode::from_matrix(std::move(g)));
        } catch (const std::invalid_argument& e) {
            fail(lineno, e.what());
        }
    }
    return out;
}

inline std::vector<LinearCode> read_codes(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_codes(in, path);
}

}  // namespace canaug

#endif
