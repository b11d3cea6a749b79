#pragma once

#include <gmpxx.h>

#include <vector>

namespace glarb {

using Int = mpz_class;

// Dense integer matrix with exact entries. Row-major.
struct ZMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    ZMatrix() = default;
    ZMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static ZMatrix identity(int n);
};

// Row-style echelon form over Z via unimodular row operations: every pivot is
// positive and strictly to the right of the pivot in the previous row. The row
// lattice is preserved, so this supports exact lattice membership tests.
ZMatrix row_echelon_lattice(ZMatrix m);

// Whether x lies in the lattice spanned by the rows of `ech` (as produced by
// row_echelon_lattice).
bool in_row_lattice(const ZMatrix& ech, std::vector<Int> x);

struct SmithResult {
    ZMatrix d;  // d = u * m * v for unimodular u, v; diagonal, d_1 | d_2 | ...
    ZMatrix v;  // the column transform, cols x cols
    int rank = 0;
};

// Smith normal form. Only the column transform is tracked; it is what a
// quotient projection needs.
SmithResult smith_normal_form(ZMatrix m);

}  // namespace glarb
