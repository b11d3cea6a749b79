#include "glarb/lattice.hpp"

#include <algorithm>
#include <utility>

namespace glarb {

ZMatrix ZMatrix::identity(int n) {
    ZMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

void swap_rows(ZMatrix& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(ZMatrix& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void negate_row(ZMatrix& m, int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

ZMatrix row_echelon_lattice(ZMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i) {
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        swap_rows(m, r, pivot);
        for (int i = r + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       m.at(r, c).get_mpz_t(), m.at(i, c).get_mpz_t());
            Int ar = m.at(r, c) / g;
            Int ai = m.at(i, c) / g;
            for (int j = c; j < m.cols; ++j) {
                Int nr = s * m.at(r, j) + t * m.at(i, j);
                Int ni = ar * m.at(i, j) - ai * m.at(r, j);
                m.at(r, j) = nr;
                m.at(i, j) = ni;
            }
        }
        if (m.at(r, c) < 0) negate_row(m, r);
        ++r;
    }
    m.a.resize(static_cast<size_t>(r) * m.cols);
    m.rows = r;
    return m;
}

bool in_row_lattice(const ZMatrix& ech, std::vector<Int> x) {
    int col = 0;
    for (int r = 0; r < ech.rows; ++r) {
        int pc = -1;
        for (int c = col; c < ech.cols; ++c) {
            if (ech.at(r, c) != 0) {
                pc = c;
                break;
            }
        }
        if (pc < 0) break;
        for (int c = col; c < pc; ++c) {
            if (x[c] != 0) return false;
        }
        if (x[pc] % ech.at(r, pc) != 0) return false;
        Int q = x[pc] / ech.at(r, pc);
        if (q != 0) {
            for (int c = pc; c < ech.cols; ++c) x[c] -= q * ech.at(r, c);
        }
        col = pc + 1;
    }
    for (const Int& v : x) {
        if (v != 0) return false;
    }
    return true;
}

SmithResult smith_normal_form(ZMatrix m) {
    const int limit = std::min(m.rows, m.cols);
    SmithResult res;
    res.v = ZMatrix::identity(m.cols);
    int k = 0;
    while (k < limit) {
        int pr = -1, pc = -1;
        for (int i = k; i < m.rows; ++i) {
            for (int j = k; j < m.cols; ++j) {
                if (m.at(i, j) != 0 &&
                    (pr < 0 || mpz_cmpabs(m.at(i, j).get_mpz_t(), m.at(pr, pc).get_mpz_t()) < 0)) {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0) break;
        swap_rows(m, k, pr);
        swap_cols(m, k, pc);
        swap_cols(res.v, k, pc);

        bool dirty = false;
        for (int i = k + 1; i < m.rows; ++i) {
            if (m.at(i, k) == 0) continue;
            Int q = floor_div(m.at(i, k), m.at(k, k));
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(k, j);
            if (m.at(i, k) != 0) dirty = true;
        }
        for (int j = k + 1; j < m.cols; ++j) {
            if (m.at(k, j) == 0) continue;
            Int q = floor_div(m.at(k, j), m.at(k, k));
            for (int i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, k);
            for (int i = 0; i < res.v.rows; ++i) res.v.at(i, j) -= q * res.v.at(i, k);
            if (m.at(k, j) != 0) dirty = true;
        }
        if (dirty) continue;

        bool divides_all = true;
        for (int i = k + 1; i < m.rows && divides_all; ++i) {
            for (int j = k + 1; j < m.cols && divides_all; ++j) {
                if (m.at(i, j) % m.at(k, k) != 0) {
                    for (int j2 = 0; j2 < m.cols; ++j2) m.at(k, j2) += m.at(i, j2);
                    divides_all = false;
                }
            }
        }
        if (!divides_all) continue;

        if (m.at(k, k) < 0) negate_row(m, k);
        ++k;
    }
    res.rank = k;
    res.d = std::move(m);
    return res;
}

}  // namespace glarb
