#include "rcodes/ring.hpp"

#include <cctype>

#include "rcodes/error.hpp"

namespace rcodes {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::BadDigit: return "BadDigit";
        case ErrorKind::BadElement: return "BadElement";
        case ErrorKind::LiftFailure: return "LiftFailure";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::BadLength: return "BadLength";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::EvenLength: return "EvenLength";
        case ErrorKind::ZeroCode: return "ZeroCode";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::BadRule: return "BadRule";
        case ErrorKind::BadTable: return "BadTable";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

std::array<RElement, 16> all_elements() {
    std::array<RElement, 16> out{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out[static_cast<std::size_t>(4 * a + b)] = RElement(Z4(a), Z4(b));
    return out;
}

RElement inverse(RElement x) {
    if (!x.is_unit()) throw Error(ErrorKind::NotAUnit, to_string(x) + " is not a unit");
    for (RElement y : all_elements())
        if (x * y == RElement(1)) return y;
    throw Error(ErrorKind::NotAUnit, to_string(x));  // unreachable for units
}

std::string to_string(Z4 x) { return std::to_string(x.value()); }

std::string to_string(RElement x) {
    const int a = x.a().value();
    const int b = x.b().value();
    if (b == 0) return std::to_string(a);
    std::string upart = b == 1 ? "u" : std::to_string(b) + "u";
    if (a == 0) return upart;
    return std::to_string(a) + "+" + upart;
}

RElement parse_element(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorKind::BadElement, "empty element");

    RElement acc;
    std::size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        if (any) {
            if (s[pos] != '+') throw Error(ErrorKind::BadElement, std::string(text));
            ++pos;
        }
        int coeff = -1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = s[pos] - '0';
            ++pos;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                throw Error(ErrorKind::BadElement, std::string(text));
        }
        const bool has_u = pos < s.size() && s[pos] == 'u';
        if (has_u) ++pos;
        if (coeff < 0 && !has_u) throw Error(ErrorKind::BadElement, std::string(text));
        if (coeff > 3) throw Error(ErrorKind::BadElement, std::string(text));
        if (coeff < 0) coeff = 1;
        acc += has_u ? RElement(Z4(0), Z4(coeff)) : RElement(coeff);
        any = true;
    }
    return acc;
}

}  // namespace rcodes
