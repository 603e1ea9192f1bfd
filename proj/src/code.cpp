#include "rcodes/code.hpp"

#include "rcodes/error.hpp"
#include "rcodes/gray.hpp"
#include "rcodes/howell.hpp"

namespace rcodes {

Z4Code::Z4Code(Eigen::Index length) : length_(length), howell_(0, length) {}

Z4Code Z4Code::from_generators(const Z4Matrix& generators) {
    Z4Code c(generators.cols());
    c.howell_ = howell_form(generators);
    for (Eigen::Index i = 0; i < c.howell_.rows(); ++i) {
        const Z4 pivot = c.howell_(i, pivot_column(c.row(i)));
        if (pivot == Z4(1)) {
            c.orders_.push_back(4);
            ++c.type_.k1;
        } else {
            c.orders_.push_back(2);
            ++c.type_.k2;
        }
    }
    return c;
}

Z4Code Z4Code::from_rows(const std::vector<Z4Vector>& rows, Eigen::Index length) {
    Z4Matrix m(static_cast<Eigen::Index>(rows.size()), length);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != length)
            throw Error(ErrorKind::LengthMismatch, "generator of length " + std::to_string(rows[i].size()) +
                                                       " in a code of length " + std::to_string(length));
        m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    }
    return from_generators(m);
}

bool Z4Code::contains(const Z4Vector& w) const {
    if (w.size() != length_)
        throw Error(ErrorKind::LengthMismatch, "word of length " + std::to_string(w.size()) +
                                                   " against code of length " + std::to_string(length_));
    Z4Vector r = w;
    for (Eigen::Index i = 0; i < howell_.rows(); ++i) {
        const Eigen::Index p = pivot_column(row(i));
        const Z4 t = r(p);
        if (t.is_zero()) continue;
        if (orders_[static_cast<std::size_t>(i)] == 4) {
            r -= t * howell_.row(i).transpose();
        } else {
            if (t.is_unit()) return false;
            r -= howell_.row(i).transpose();
        }
    }
    return std::all_of(r.data(), r.data() + r.size(), [](Z4 x) { return x.is_zero(); });
}

nlohmann::json Z4Code::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < howell_.rows(); ++i) rows.push_back(to_digits(row(i)));
    return {{"length", length_}, {"k1", type_.k1}, {"k2", type_.k2}, {"rows", rows}};
}

Z4Code Z4Code::from_json(const nlohmann::json& j) {
    const auto length = j.at("length").get<Eigen::Index>();
    std::vector<Z4Vector> rows;
    for (const auto& r : j.at("rows")) rows.push_back(parse_z4_vector(r.get<std::string>()));
    return from_rows(rows, length);
}

Z4Code dual(const Z4Code& c) { return Z4Code::from_generators(kernel(c.howell())); }

Z4Code map_code(const Z4Code& c, const std::function<Z4Vector(const Z4Vector&)>& linear_map) {
    std::vector<Z4Vector> rows;
    Eigen::Index length = c.length();
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
        rows.push_back(linear_map(c.row(i)));
        length = rows.back().size();
    }
    if (rows.empty()) length = linear_map(Z4Vector::Zero(c.length())).size();
    return Z4Code::from_rows(rows, length);
}

Z4Code permute_code(const Z4Code& c, const std::vector<Eigen::Index>& perm) {
    return map_code(c, [&perm](const Z4Vector& w) { return permute(w, perm); });
}

bool is_shift_invariant(const Z4Code& c, Eigen::Index k) {
    for (Eigen::Index i = 0; i < c.rows(); ++i)
        if (!c.contains(cyclic_shift(c.row(i), k))) return false;
    return true;
}

nlohmann::json RCode::to_json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators) {
        auto [a, b] = split(g);
        gens.push_back({{"a", format_coeff_string(a)}, {"b", format_coeff_string(b)}});
    }
    return {{"n", n}, {"lambda", to_string(lambda)}, {"generators", gens}};
}

RCode RCode::from_json(const nlohmann::json& j) {
    RCode rc;
    rc.n = j.at("n").get<std::size_t>();
    rc.lambda = parse_element(j.at("lambda").get<std::string>());
    for (const auto& g : j.at("generators"))
        rc.generators.push_back(combine(parse_coeff_string(g.at("a").get<std::string>()),
                                        parse_coeff_string(g.at("b").get<std::string>())));
    return rc;
}

Z4Code span_r_code(const RCode& rc) {
    const std::size_t n = rc.n;
    std::vector<Z4Vector> rows;
    rows.reserve(2 * n * rc.generators.size());
    for (const auto& g0 : rc.generators) {
        const RPoly g = reduce_mod(g0, n, rc.lambda);
        if (g.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const RVector v = to_vector(shift_mod(g, j, n, rc.lambda), n);
            rows.push_back(to_coordinates(v));
            rows.push_back(to_coordinates(RElement::u() * v));
        }
    }
    return Z4Code::from_rows(rows, static_cast<Eigen::Index>(2 * n));
}

Z4Code gray_image(const Z4Code& coordinates, GrayLayout layout) {
    return map_code(coordinates, [layout](const Z4Vector& c) {
        const RVector v = from_coordinates(c);
        return layout == GrayLayout::Block ? phi(v) : phi_pi(v);
    });
}

Z4Code gray_image(const RCode& rc, GrayLayout layout) { return gray_image(span_r_code(rc), layout); }

bool is_constacyclic(const Z4Code& coordinates, RElement lambda) {
    for (Eigen::Index i = 0; i < coordinates.rows(); ++i) {
        const RVector shifted = constacyclic_shift(from_coordinates(coordinates.row(i)), lambda);
        if (!coordinates.contains(to_coordinates(shifted))) return false;
    }
    return true;
}

bool is_constacyclic(const RCode& rc) { return is_constacyclic(span_r_code(rc), rc.lambda); }

Z4Code r_dual(const Z4Code& coordinates) {
    // For x = (a | b) and y = (a' | b'): x.y = (a.a' + b.b') + (a.b' + b.a')u. The first
    // component is the Z4 product with y, the second the Z4 product with swap(y) = (b' | a').
    const Eigen::Index len = coordinates.length();
    const Eigen::Index n = len / 2;
    Z4Matrix constraints(2 * coordinates.rows(), len);
    for (Eigen::Index i = 0; i < coordinates.rows(); ++i) {
        const Z4Vector x = coordinates.row(i);
        constraints.row(2 * i) = x.transpose();
        constraints.row(2 * i + 1).head(n) = x.tail(n).transpose();
        constraints.row(2 * i + 1).tail(n) = x.head(n).transpose();
    }
    return Z4Code::from_generators(kernel(constraints));
}

Z4Code map_r_code(const Z4Code& coordinates, const std::function<RVector(const RVector&)>& r_linear_map) {
    return map_code(coordinates, [&r_linear_map](const Z4Vector& c) {
        return to_coordinates(r_linear_map(from_coordinates(c)));
    });
}

}  // namespace rcodes
