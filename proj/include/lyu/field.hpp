#ifndef LYU_FIELD_HPP
#define LYU_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lyu {

// Coefficient field descriptor: the rationals (characteristic 0) or a prime
// field F_p with p < 2^31.
struct FieldSpec {
    long characteristic = 0;

    bool is_rationals() const { return characteristic == 0; }

    static bool is_prime(long p) {
        if (p < 2) return false;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) return false;
        return true;
    }

    static FieldSpec rationals() { return FieldSpec{0}; }

    static FieldSpec prime_field(long p) {
        if (!is_prime(p) || p >= (1L << 31))
            throw std::invalid_argument("characteristic must be a prime < 2^31");
        return FieldSpec{p};
    }

    // 0 or a prime accepted, anything else rejected.
    static FieldSpec from_characteristic(long c) {
        return c == 0 ? rationals() : prime_field(c);
    }

    bool operator==(const FieldSpec& o) const { return characteristic == o.characteristic; }
};

// Arithmetic context for exact rationals.
struct RatField {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem inv(const Elem& a) const { return Elem(1) / a; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    long characteristic() const { return 0; }
};

// Arithmetic context for F_p, p < 2^31 so products fit in 64 bits.
struct FpField {
    std::uint64_t p;

    explicit FpField(std::uint64_t p_) : p(p_) {}

    using Elem = std::uint64_t;

    Elem zero() const { return 0; }
    Elem one() const { return p == 1 ? 0 : 1; }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        return pow(a, p - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    long characteristic() const { return static_cast<long>(p); }
};

// F_{p^e} = F_p[t]/(f), elements as coefficient vectors of length e
// (low degree first).  Used only to supply big enough sample sets for
// randomized rank evaluation when |F_p| is too small.
struct GFExtField {
    FpField base;
    std::vector<std::uint64_t> modulus;  // monic, length e+1, low degree first

    using Elem = std::vector<std::uint64_t>;

    GFExtField(std::uint64_t p, std::vector<std::uint64_t> mod)
        : base(p), modulus(std::move(mod)) {}

    int degree() const { return static_cast<int>(modulus.size()) - 1; }

    Elem zero() const { return Elem(degree(), 0); }
    Elem one() const {
        Elem r(degree(), 0);
        r[0] = 1;
        return r;
    }
    Elem from_int(long v) const {
        Elem r(degree(), 0);
        r[0] = base.from_int(v);
        return r;
    }
    // element with given coefficient vector, truncated/padded to degree e
    Elem from_coeffs(const std::vector<std::uint64_t>& c) const {
        Elem r(degree(), 0);
        for (std::size_t i = 0; i < c.size() && i < r.size(); ++i) r[i] = c[i] % base.p;
        return r;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r(degree());
        for (int i = 0; i < degree(); ++i) r[i] = base.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(degree());
        for (int i = 0; i < degree(); ++i) r[i] = base.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(degree());
        for (int i = 0; i < degree(); ++i) r[i] = base.neg(a[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        int e = degree();
        std::vector<std::uint64_t> prod(2 * e - 1, 0);
        for (int i = 0; i < e; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < e; ++j)
                prod[i + j] = base.add(prod[i + j], base.mul(a[i], b[j]));
        }
        // reduce mod the monic modulus
        for (int d = 2 * e - 2; d >= e; --d) {
            std::uint64_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < e; ++i)
                prod[d - e + i] = base.sub(prod[d - e + i], base.mul(c, modulus[i]));
        }
        prod.resize(e);
        return prod;
    }
    bool is_zero(const Elem& a) const {
        for (auto c : a)
            if (c != 0) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    long characteristic() const { return static_cast<long>(base.p); }
};

// Builds F_{p^e}.  Shipped irreducibles cover the small characteristics that
// actually occur in practice; anything else falls back to a deterministic
// search (see docs/formats.md).
GFExtField make_extension(std::uint64_t p, int e);

}  // namespace lyu

#endif
