#include "rcodes/factor.hpp"

#include <algorithm>
#include <bit>

#include "rcodes/error.hpp"

namespace rcodes {

namespace gf2 {

int degree(Gf2Poly p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

Gf2Poly mul(Gf2Poly a, Gf2Poly b) {
    Gf2Poly r = 0;
    for (; b; b >>= 1, a <<= 1)
        if (b & 1) r ^= a;
    return r;
}

Gf2Poly mod(Gf2Poly a, Gf2Poly m) {
    const int dm = degree(m);
    for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
    return a;
}

Gf2Poly div(Gf2Poly a, Gf2Poly m) {
    const int dm = degree(m);
    Gf2Poly q = 0;
    for (int da = degree(a); da >= dm; da = degree(a)) {
        q |= Gf2Poly{1} << (da - dm);
        a ^= m << (da - dm);
    }
    return q;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
    while (b) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

Z4Poly to_z4(Gf2Poly p) {
    std::vector<Z4> c;
    for (int i = 0; i <= degree(p); ++i) c.emplace_back(static_cast<int>((p >> i) & 1));
    return Z4Poly(std::move(c));
}

Gf2Poly from_z4(const Z4Poly& p) {
    Gf2Poly r = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i].value() & 1) r |= Gf2Poly{1} << i;
    return r;
}

namespace {

// Bezout coefficient s with s*a + t*b = 1 (a, b coprime); returns s.
Gf2Poly inverse_mod(Gf2Poly a, Gf2Poly m) {
    Gf2Poly r0 = m, r1 = mod(a, m);
    Gf2Poly s0 = 0, s1 = 1;
    while (r1 != 0) {
        const Gf2Poly q = div(r0, r1);
        const Gf2Poly r2 = r0 ^ mul(q, r1);
        const Gf2Poly s2 = s0 ^ mul(q, s1);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw Error(ErrorKind::LiftFailure, "factors are not coprime");
    return mod(s0, m);
}

}  // namespace

}  // namespace gf2

std::vector<Gf2Poly> factor_f2(std::size_t n) {
    if (n == 0 || n > 63) throw Error(ErrorKind::BadLength, "n must lie in 1..63");
    Gf2Poly rest = (Gf2Poly{1} << n) | 1;
    std::vector<Gf2Poly> out;
    for (int d = 1; 2 * d <= gf2::degree(rest); ++d) {
        // Monic candidates of degree d in increasing mask order; the smallest divisor is irreducible.
        for (Gf2Poly f = Gf2Poly{1} << d; f < (Gf2Poly{2} << d); ++f) {
            while (gf2::degree(rest) >= d && gf2::mod(rest, f) == 0) {
                out.push_back(f);
                rest = gf2::div(rest, f);
            }
        }
    }
    if (gf2::degree(rest) > 0) out.push_back(rest);
    std::sort(out.begin(), out.end(), [](Gf2Poly a, Gf2Poly b) {
        return gf2::degree(a) != gf2::degree(b) ? gf2::degree(a) < gf2::degree(b) : a < b;
    });
    return out;
}

namespace {

bool notation_less(const Z4Poly& a, const Z4Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return format_coeff_string(a) < format_coeff_string(b);
}

}  // namespace

FactorSet::FactorSet(std::size_t n, std::vector<Z4Poly> factors) : n_(n), factors_(std::move(factors)) {
    if (factors_.size() > 63) throw Error(ErrorKind::BadLength, "too many factors");
}

Z4Poly FactorSet::product(std::uint64_t mask) const {
    Z4Poly p = Z4Poly::constant(Z4(1));
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if ((mask >> i) & 1) p *= factors_[i];
    return p;
}

std::uint64_t FactorSet::mask_of(const Z4Poly& d) const {
    if (!d.is_monic()) throw Error(ErrorKind::NotADivisor, format_coeff_string(d) + " is not monic");
    std::uint64_t mask = 0;
    Z4Poly rest = d;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto [q, r] = divmod_monic(rest, factors_[i]);
        if (r.is_zero()) {
            mask |= std::uint64_t{1} << i;
            rest = q;
        }
    }
    if (rest != Z4Poly::constant(Z4(1)) || product(mask) != d)
        throw Error(ErrorKind::NotADivisor, format_coeff_string(d) + " is not a divisor of x^" +
                                                std::to_string(n_) + "-1");
    return mask;
}

std::string FactorSet::to_json() const {
    std::string s = "{ \"n\": " + std::to_string(n_) + ", \"factors\": [";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ", ";
        s += "\"" + format_coeff_string(factors_[i]) + "\"";
    }
    return s + "] }";
}

FactorSet hensel_lift(std::size_t n, const std::vector<Gf2Poly>& binary_factors) {
    const Z4Poly target = x_n_minus_1(n);
    const Gf2Poly target2 = gf2::from_z4(target);
    std::vector<Z4Poly> lifted;
    lifted.reserve(binary_factors.size());
    for (Gf2Poly g : binary_factors) {
        // x^n - 1 = g*h mod 2. Find s with deg s < deg g such that G = g + 2s, H = h + 2t
        // satisfy G*H = x^n - 1 mod 4, i.e. s*h + t*g = (x^n - 1 - g*h)/2 mod 2.
        const Gf2Poly h = gf2::div(target2, g);
        if (gf2::mul(g, h) != target2) throw Error(ErrorKind::LiftFailure, "factor does not divide x^n+1");
        const Z4Poly diff = target - gf2::to_z4(g) * gf2::to_z4(h);
        Gf2Poly e = 0;
        for (std::size_t i = 0; i < diff.size(); ++i) {
            if (diff[i].value() & 1) throw Error(ErrorKind::LiftFailure, "product is not congruent mod 2");
            if (diff[i].value() == 2) e |= Gf2Poly{1} << i;
        }
        const Gf2Poly h_inv = gf2::inverse_mod(h, g);
        const Gf2Poly s = gf2::mod(gf2::mul(h_inv, e), g);
        lifted.push_back(gf2::to_z4(g) + Z4(2) * gf2::to_z4(s));
    }
    std::sort(lifted.begin(), lifted.end(), notation_less);
    FactorSet fs(n, std::move(lifted));
    if (fs.product(fs.full_mask()) != target)
        throw Error(ErrorKind::LiftFailure, "lifted factors do not multiply to x^" + std::to_string(n) + "-1");
    return fs;
}

FactorSet factor_x_n_minus_1(std::size_t n) {
    if (n % 2 == 0) throw Error(ErrorKind::EvenLength, "x^n-1 is only factored for odd n, got " + std::to_string(n));
    return hensel_lift(n, factor_f2(n));
}

DivisorTriple make_triple(const FactorSet& fs, std::uint64_t u_mask, std::uint64_t v_mask) {
    if ((u_mask & v_mask) != 0 || ((u_mask | v_mask) & ~fs.full_mask()) != 0)
        throw Error(ErrorKind::NotADivisor, "masks do not describe disjoint factor subsets");
    const std::uint64_t w_mask = fs.full_mask() & ~(u_mask | v_mask);
    return {fs.product(u_mask), fs.product(v_mask), fs.product(w_mask), u_mask, v_mask, w_mask};
}

std::vector<DivisorTriple> enumerate_divisor_triples(const FactorSet& fs) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) total *= 3;
    std::vector<DivisorTriple> out;
    out.reserve(total);
    for (std::size_t t = 0; t < total; ++t) {
        std::uint64_t u_mask = 0, v_mask = 0;
        std::size_t digits = t;
        for (std::size_t i = 0; i < fs.size(); ++i, digits /= 3) {
            if (digits % 3 == 0) u_mask |= std::uint64_t{1} << i;
            if (digits % 3 == 1) v_mask |= std::uint64_t{1} << i;
        }
        out.push_back(make_triple(fs, u_mask, v_mask));
    }
    return out;
}

Z4Poly gcd_divisors(const Z4Poly& d, const Z4Poly& e, const FactorSet& fs) {
    return fs.product(fs.mask_of(d) & fs.mask_of(e));
}

}  // namespace rcodes
