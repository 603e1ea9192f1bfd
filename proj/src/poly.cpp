#include "rcodes/poly.hpp"

#include <cctype>

#include "rcodes/error.hpp"

namespace rcodes {

RPoly lift(const Z4Poly& p) {
    std::vector<RElement> c;
    c.reserve(p.size());
    for (Z4 x : p.coeffs()) c.emplace_back(x);
    return RPoly(std::move(c));
}

RPoly combine(const Z4Poly& a, const Z4Poly& b) {
    const std::size_t len = std::max(a.size(), b.size());
    std::vector<RElement> c(len);
    for (std::size_t i = 0; i < len; ++i) c[i] = RElement(a[i], b[i]);
    return RPoly(std::move(c));
}

std::pair<Z4Poly, Z4Poly> split(const RPoly& p) {
    std::vector<Z4> a(p.size()), b(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        a[i] = p[i].a();
        b[i] = p[i].b();
    }
    return {Z4Poly(std::move(a)), Z4Poly(std::move(b))};
}

RPoly reduce_mod(const RPoly& p, std::size_t n, RElement lambda) {
    if (p.degree() < static_cast<int>(n)) return p;
    std::vector<RElement> c(n);
    for (std::size_t i = 0; i < p.size(); ++i) {
        RElement coeff = p[i];
        for (std::size_t k = i / n; k > 0; --k) coeff *= lambda;
        c[i % n] += coeff;
    }
    return RPoly(std::move(c));
}

RPoly mul_mod(const RPoly& a, const RPoly& b, std::size_t n, RElement lambda) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RElement> c(n);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            RElement t = a[i] * b[j];
            std::size_t k = i + j;
            while (k >= n) {
                k -= n;
                t *= lambda;
            }
            c[k] += t;
        }
    }
    return RPoly(std::move(c));
}

RPoly shift_mod(const RPoly& p, std::size_t k, std::size_t n, RElement lambda) {
    std::vector<RElement> c(n);
    for (std::size_t i = 0; i < p.size() && i < n; ++i) {
        std::size_t j = i + k;
        RElement t = p[i];
        while (j >= n) {
            j -= n;
            t *= lambda;
        }
        c[j] += t;
    }
    return RPoly(std::move(c));
}

RPoly twist(const RPoly& p) {
    std::vector<RElement> c(p.coeffs());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] *= kLambda;
    return RPoly(std::move(c));
}

RPoly twist(const Z4Poly& p) { return twist(lift(p)); }

Z4Poly x_n_minus_1(std::size_t n) {
    std::vector<Z4> c(n + 1, Z4(0));
    c[0] = Z4(3);
    c[n] += Z4(1);
    return Z4Poly(std::move(c));
}

std::pair<Z4Poly, Z4Poly> divmod_monic(const Z4Poly& a, const Z4Poly& m) {
    if (!m.is_monic()) throw Error(ErrorKind::NotADivisor, "divisor must be monic");
    std::vector<Z4> r(a.coeffs());
    const std::size_t dm = static_cast<std::size_t>(m.degree());
    if (r.size() <= dm) return {Z4Poly{}, a};
    std::vector<Z4> q(r.size() - dm, Z4(0));
    for (std::size_t i = r.size(); i-- > dm;) {
        const Z4 t = r[i];
        if (t.is_zero()) continue;
        q[i - dm] = t;
        for (std::size_t j = 0; j <= dm; ++j) r[i - dm + j] -= t * m[j];
    }
    return {Z4Poly(std::move(q)), Z4Poly(std::move(r))};
}

Z4Poly mod2(const Z4Poly& p) {
    std::vector<Z4> c(p.coeffs());
    for (auto& x : c) x = Z4(x.value() & 1);
    return Z4Poly(std::move(c));
}

RVector to_vector(const RPoly& p, std::size_t n) {
    if (p.degree() >= static_cast<int>(n))
        throw Error(ErrorKind::BadLength, "polynomial degree " + std::to_string(p.degree()) +
                                              " does not fit length " + std::to_string(n));
    RVector v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = p[i];
    return v;
}

RPoly from_vector(const RVector& v) { return RPoly(std::vector<RElement>(v.data(), v.data() + v.size())); }

Z4Poly parse_coeff_string(std::string_view text) {
    std::vector<int> high_to_low;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::BadDigit, "'" + std::string(text) + "': " + why);
    };
    while (pos < text.size()) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        if (c < '0' || c > '3') fail(std::string("unexpected character '") + c + "'");
        ++pos;
        std::size_t repeat = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) fail("'^' must be followed by a repetition count");
            repeat = std::stoul(std::string(text.substr(start, pos - start)));
            if (repeat == 0) fail("repetition count must be positive");
        }
        high_to_low.insert(high_to_low.end(), repeat, c - '0');
    }
    std::vector<Z4> low_to_high;
    low_to_high.reserve(high_to_low.size());
    for (auto it = high_to_low.rbegin(); it != high_to_low.rend(); ++it) low_to_high.emplace_back(*it);
    return Z4Poly(std::move(low_to_high));
}

std::string format_coeff_string(const Z4Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    s.reserve(p.size());
    for (std::size_t i = p.size(); i-- > 0;) s.push_back(static_cast<char>('0' + p[i].value()));
    return s;
}

}  // namespace rcodes
