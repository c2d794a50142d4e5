#include "lyu/field.hpp"

#include <algorithm>
#include <map>

namespace lyu {

namespace {

using Coeffs = std::vector<std::uint64_t>;

// dense univariate arithmetic over F_p, low degree first, normalized (no
// trailing zeros)
void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mod(const FpField& f, Coeffs a, const Coeffs& m) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    auto lead_inv = f.inv(m.back());
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        std::uint64_t c = f.mul(a.back(), lead_inv);
        for (int i = 0; i <= dm; ++i)
            a[da - dm + i] = f.sub(a[da - dm + i], f.mul(c, m[i]));
        trim(a);
    }
    return a;
}

Coeffs poly_mulmod(const FpField& f, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
    if (a.empty() || b.empty()) return {};
    Coeffs prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
    return poly_mod(f, std::move(prod), m);
}

Coeffs poly_powmod(const FpField& f, Coeffs a, mpz_class e, const Coeffs& m) {
    Coeffs r{1};
    a = poly_mod(f, std::move(a), m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(f, r, a, m);
        a = poly_mulmod(f, a, a, m);
        e >>= 1;
    }
    return r;
}

Coeffs poly_gcd(const FpField& f, Coeffs a, Coeffs b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's irreducibility test for a monic degree-e polynomial over F_p.
bool is_irreducible(const FpField& f, const Coeffs& m) {
    const int e = static_cast<int>(m.size()) - 1;
    mpz_class p(static_cast<unsigned long>(f.p));
    Coeffs x{0, 1};
    // x^(p^e) == x mod m
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    Coeffs t = poly_powmod(f, x, pe, m);
    Coeffs diff = t;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = f.sub(diff[1], 1);
    trim(diff);
    if (!diff.empty()) return false;
    // gcd(x^(p^(e/q)) - x, m) == 1 for every prime q | e
    for (int q = 2; q <= e; ++q) {
        if (e % q != 0) continue;
        bool qprime = true;
        for (int r = 2; r * r <= q; ++r)
            if (q % r == 0) qprime = false;
        if (!qprime) continue;
        mpz_class pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / q);
        Coeffs u = poly_powmod(f, x, pk, m);
        u.resize(std::max<std::size_t>(u.size(), 2), 0);
        u[1] = f.sub(u[1], 1);
        trim(u);
        Coeffs g = poly_gcd(f, u, m);
        if (static_cast<int>(g.size()) - 1 != 0) return false;
    }
    return true;
}

}  // namespace

GFExtField::Elem GFExtField::inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero in GF(p^e)");
    // extended Euclid in F_p[t]
    Coeffs r0 = modulus, r1(a);
    trim(r1);
    Coeffs s0, s1{1};  // s0 = 0, s1 = 1; invariants r_i = s_i * a mod modulus
    while (!r1.empty() && static_cast<int>(r1.size()) - 1 > 0) {
        // divide r0 by r1
        Coeffs q;
        Coeffs rem = r0;
        auto li = base.inv(r1.back());
        int d1 = static_cast<int>(r1.size()) - 1;
        q.assign(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
        while (static_cast<int>(rem.size()) - 1 >= d1 && !rem.empty()) {
            int dr = static_cast<int>(rem.size()) - 1;
            std::uint64_t c = base.mul(rem.back(), li);
            q[dr - d1] = c;
            for (int i = 0; i <= d1; ++i)
                rem[dr - d1 + i] = base.sub(rem[dr - d1 + i], base.mul(c, r1[i]));
            trim(rem);
        }
        // s_next = s0 - q * s1
        Coeffs qs(q.size() + s1.size(), 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j)
                qs[i + j] = base.add(qs[i + j], base.mul(q[i], s1[j]));
        }
        Coeffs snext(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < snext.size(); ++i) {
            std::uint64_t v0 = i < s0.size() ? s0[i] : 0;
            std::uint64_t v1 = i < qs.size() ? qs[i] : 0;
            snext[i] = base.sub(v0, v1);
        }
        trim(snext);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
    Coeffs unit, su;
    if (r1.empty()) {
        unit = r0;
        su = s0;
    } else {
        unit = r1;
        su = s1;
    }
    // scale so the gcd (a nonzero constant) becomes 1
    auto ci = base.inv(unit[0]);
    Elem out(degree(), 0);
    for (std::size_t i = 0; i < su.size() && i < out.size(); ++i)
        out[i] = base.mul(su[i], ci);
    return out;
}

GFExtField make_extension(std::uint64_t p, int e) {
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    // Shipped irreducibles (low degree first, monic).
    static const std::map<std::pair<std::uint64_t, int>, std::vector<std::uint64_t>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 1, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 12}, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 16}, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {{3, 2}, {1, 0, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 1, 0, 0, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 1, 0, 0, 0, 0, 1}},
        {{5, 2}, {2, 1, 1}},
        {{5, 3}, {2, 3, 0, 1}},
        {{5, 4}, {2, 2, 1, 0, 1}},
        {{7, 2}, {3, 1, 1}},
        {{7, 3}, {2, 3, 0, 1}},
    };
    if (e == 1) return GFExtField(p, {0, 1});  // F_p itself as t - 0? use t, unused slot
    auto it = table.find({p, e});
    FpField f(p);
    if (it != table.end()) {
        if (!is_irreducible(f, it->second))
            throw std::logic_error("shipped modulus failed irreducibility check");
        return GFExtField(p, it->second);
    }
    // Deterministic fallback: scan monic polynomials x^e + c_{e-1}x^{e-1} +
    // ... + c_0 in lexicographic order of (c_0, ..., c_{e-1}).
    std::vector<std::uint64_t> c(e, 0);
    while (true) {
        Coeffs m(c.begin(), c.end());
        m.push_back(1);
        if (m[0] != 0 && is_irreducible(f, m)) return GFExtField(p, m);
        int i = 0;
        while (i < e && ++c[i] == p) c[i++] = 0;
        if (i == e) throw std::logic_error("no irreducible polynomial found");
    }
}

}  // namespace lyu
