#include "glarb/bounds.hpp"

#include <algorithm>

#include "glarb/errors.hpp"

namespace glarb {

const char* ramsey_stub_note() {
    return "ramsey-stub: multinomial (Erdos-Szekeres) upper bound; printed R() values are "
           "upper bounds, not exact Ramsey numbers";
}

namespace {

void guard_bits(const Int& v, std::size_t max_bits, const char* what) {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > max_bits)
        throw ResourceError(std::string(what) + " exceeds the " + std::to_string(max_bits) +
                            "-bit evaluation guard; the exact value is tower-sized");
}

// C(n, k) with the smaller side iterated; refuses when the result provably
// overflows the guard (C(n,k) >= 2^min(k, n-k) for the smaller side).
Int binomial(const Int& n, Int k, std::size_t max_bits) {
    if (k < 0 || k > n) return 0;
    Int other = n - k;
    if (other < k) k = other;
    if (k == 0) return 1;
    if (k > static_cast<long>(max_bits))
        throw ResourceError("binomial exceeds the " + std::to_string(max_bits) +
                            "-bit evaluation guard; the exact value is tower-sized");
    unsigned long ks = k.get_ui();
    Int res = 1;
    for (unsigned long i = 1; i <= ks; ++i) {
        res *= n - static_cast<long>(ks - i);
        res /= static_cast<long>(i);
        guard_bits(res, max_bits, "binomial");
    }
    return res;
}

Int choose2(const Int& n) { return n * (n - 1) / 2; }

Int pow2_guarded(const Int& exponent, std::size_t max_bits) {
    if (exponent < 0) throw PreconditionError("negative exponent");
    if (exponent > static_cast<long>(max_bits))
        throw ResourceError("2^" + exponent.get_str() + " exceeds the " +
                            std::to_string(max_bits) + "-bit evaluation guard");
    Int res = 1;
    mpz_mul_2exp(res.get_mpz_t(), res.get_mpz_t(), exponent.get_ui());
    return res;
}

}  // namespace

Int ramsey_upper(const std::vector<Int>& sizes, std::size_t max_bits) {
    std::vector<Int> s;
    for (const Int& n : sizes) {
        if (n < 1) throw PreconditionError("Ramsey target sizes must be positive");
        if (n == 1) return 1;  // K_1 sits in any coloring
        s.push_back(n);
    }
    if (s.empty()) return 1;
    if (s.size() == 1) return s[0];
    // multinomial coefficient C(sum(n_i - 1); n_1 - 1, ..., n_q - 1)
    Int total = 0;
    for (const Int& n : s) total += n - 1;
    Int res = 1;
    Int rem = total;
    for (const Int& n : s) {
        res *= binomial(rem, n - 1, max_bits);
        guard_bits(res, max_bits, "ramsey bound");
        rem -= n - 1;
    }
    return res;
}

Int g_long_cycle(int omega, int d, std::size_t max_bits) {
    if (omega < 1 || d < 1) throw PreconditionError("omega and d must be positive");
    Int e = Int(d) * (omega + 1) + 1;
    return Int(omega + 2) * pow2_guarded(e, max_bits);
}

SubdivisionBounds subdivision_bounds(int omega, const Int& t, int d, std::size_t max_bits) {
    if (omega < 1 || d < 1 || t < 2)
        throw PreconditionError("need omega >= 1, d >= 1, t >= 2");
    SubdivisionBounds out;
    out.r.assign(omega + 2, 0);
    out.r[omega + 1] = t + choose2(t) * (Int(omega) * omega + omega - 1);
    for (int i = omega + 1; i >= 1; --i) {
        std::vector<Int> inner(omega, out.r[i]);
        Int ri = ramsey_upper(inner, max_bits);
        out.r[i - 1] = ramsey_upper({t, ri}, max_bits);
    }
    out.c.assign(omega + 1, 0);
    Int acc = 0;
    for (int i = 1; i <= omega + 1; ++i) {
        acc += choose2(out.r[i - 1]);
        out.c[i - 1] = acc;
        guard_bits(acc, max_bits, "c");
    }
    Int cw = out.c[omega];
    Int e = Int(2) * (d + 1) * cw;
    out.f = (out.r[0] + 2 * cw) * pow2_guarded(e, max_bits);
    guard_bits(out.f, max_bits, "f");
    return out;
}

Int mu_const(int omega) {
    if (omega < 1) throw PreconditionError("omega must be positive");
    Int square = Int(omega + 2) * (omega + 2);
    Int linear = Int(2) * omega + 6;
    return square >= linear ? square : linear;
}

Int beta_const(int omega, const Int& p, std::size_t max_bits) {
    if (p < 1) throw PreconditionError("p must be positive");
    if (p > 1024)
        throw ResourceError("beta with p = " + p.get_str() + " colors is not materializable");
    std::vector<Int> sizes(p.get_ui(), mu_const(omega));
    return ramsey_upper(sizes, max_bits);
}

Int r_const(int omega, const Int& p, std::size_t max_bits) {
    Int colors = Int(omega) * omega * omega;
    if (colors > 1024)
        throw ResourceError("r with omega^3 = " + colors.get_str() +
                            " colors is not materializable");
    std::vector<Int> sizes(colors.get_ui(), beta_const(omega, p, max_bits));
    return ramsey_upper(sizes, max_bits);
}

Int f_cycle_in_subdivision(int omega, const Int& p, const Int& k, std::size_t max_bits) {
    if (k < 1) throw PreconditionError("k must be positive");
    return (r_const(omega, p, max_bits) + k) * (omega + 2);
}

}  // namespace glarb
