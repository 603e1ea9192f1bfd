#include "rcodes/gray.hpp"

#include <cctype>
#include <sstream>

namespace rcodes {

Z4Vector phi(const RVector& v) {
    const Eigen::Index n = v.size();
    Z4Vector out(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out(i) = v(i).b();
        out(n + i) = Z4(2) * v(i).a() + v(i).b();
    }
    return out;
}

Z4Vector phi_pi(const RVector& v) {
    const Eigen::Index n = v.size();
    Z4Vector out(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out(2 * i) = v(i).b();
        out(2 * i + 1) = Z4(2) * v(i).a() + v(i).b();
    }
    return out;
}

std::vector<Eigen::Index> interleave_permutation(Eigen::Index n) {
    std::vector<Eigen::Index> p(static_cast<std::size_t>(2 * n));
    for (Eigen::Index i = 0; i < n; ++i) {
        p[static_cast<std::size_t>(2 * i)] = i;
        p[static_cast<std::size_t>(2 * i + 1)] = n + i;
    }
    return p;
}

RVector constacyclic_shift(const RVector& v, RElement eta) {
    if (!eta.is_unit()) throw Error(ErrorKind::NotAUnit, "shift constant " + to_string(eta) + " is not a unit");
    const Eigen::Index n = v.size();
    RVector out(n);
    if (n == 0) return out;
    out(0) = eta * v(n - 1);
    out.tail(n - 1) = v.head(n - 1);
    return out;
}

std::vector<Eigen::Index> nechaev_permutation(Eigen::Index n) {
    if (n <= 0 || n % 2 == 0) throw Error(ErrorKind::BadLength, "Nechaev permutation needs odd n, got " + std::to_string(n));
    std::vector<Eigen::Index> tau(static_cast<std::size_t>(2 * n));
    for (Eigen::Index j = 0; j < 2 * n; ++j) tau[static_cast<std::size_t>(j)] = j;
    for (Eigen::Index i = 1; i <= n - 2; i += 2) std::swap(tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(n + i)]);
    return tau;
}

Z4Vector nechaev(const Z4Vector& v) {
    if (v.size() % 2 != 0 || (v.size() / 2) % 2 == 0)
        throw Error(ErrorKind::BadLength, "length " + std::to_string(v.size()) + " is not twice an odd number");
    return permute(v, nechaev_permutation(v.size() / 2));
}

RVector phi_bar(const RVector& v) {
    RVector out = v;
    for (Eigen::Index i = 1; i < v.size(); i += 2) out(i) = kLambda * v(i);
    return out;
}

BinaryVector binary_gray(const Z4Vector& v) {
    static constexpr std::uint8_t first[4] = {0, 0, 1, 1};
    static constexpr std::uint8_t second[4] = {0, 1, 1, 0};
    BinaryVector out(2 * v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out(2 * i) = first[v(i).value()];
        out(2 * i + 1) = second[v(i).value()];
    }
    return out;
}

Z4Vector to_coordinates(const RVector& v) {
    const Eigen::Index n = v.size();
    Z4Vector c(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        c(i) = v(i).a();
        c(n + i) = v(i).b();
    }
    return c;
}

RVector from_coordinates(const Z4Vector& c) {
    if (c.size() % 2 != 0) throw Error(ErrorKind::BadLength, "coordinate vector must have even length");
    const Eigen::Index n = c.size() / 2;
    RVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = RElement(c(i), c(n + i));
    return v;
}

std::string to_string(const RVector& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v(i));
    }
    return s;
}

std::string to_string(const Z4Vector& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += static_cast<char>('0' + v(i).value());
    }
    return s;
}

std::string to_bitstring(const BinaryVector& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += static_cast<char>('0' + v(i));
    return s;
}

std::string to_digits(const Z4Vector& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += static_cast<char>('0' + v(i).value());
    return s;
}

RVector parse_r_vector(std::string_view text) {
    std::vector<RElement> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        items.push_back(parse_element(text.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    RVector v(static_cast<Eigen::Index>(items.size()));
    for (std::size_t i = 0; i < items.size(); ++i) v(static_cast<Eigen::Index>(i)) = items[i];
    return v;
}

Z4Vector parse_z4_vector(std::string_view text) {
    std::vector<Z4> items;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
        if (c < '0' || c > '3') throw Error(ErrorKind::BadDigit, std::string("unexpected character '") + c + "'");
        items.emplace_back(c - '0');
    }
    Z4Vector v(static_cast<Eigen::Index>(items.size()));
    for (std::size_t i = 0; i < items.size(); ++i) v(static_cast<Eigen::Index>(i)) = items[i];
    return v;
}

}  // namespace rcodes
