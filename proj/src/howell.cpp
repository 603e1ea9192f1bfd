#include "rcodes/howell.hpp"

#include <algorithm>
#include <vector>

namespace rcodes {

namespace {

bool is_zero_row(const Z4Vector& v) {
    return std::all_of(v.data(), v.data() + v.size(), [](Z4 x) { return x.is_zero(); });
}

}  // namespace

Eigen::Index pivot_column(const Z4Vector& row) {
    for (Eigen::Index j = 0; j < row.size(); ++j)
        if (!row(j).is_zero()) return j;
    return row.size();
}

Z4Matrix howell_form(const Z4Matrix& m) {
    const Eigen::Index cols = m.cols();
    std::vector<Z4Vector> pool;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Z4Vector r = m.row(i).transpose();
        if (!is_zero_row(r)) pool.push_back(std::move(r));
    }

    std::vector<Z4Vector> result;
    for (Eigen::Index c = 0; c < cols && !pool.empty(); ++c) {
        auto pick = std::find_if(pool.begin(), pool.end(), [c](const Z4Vector& r) { return r(c).is_unit(); });
        if (pick == pool.end())
            pick = std::find_if(pool.begin(), pool.end(), [c](const Z4Vector& r) { return !r(c).is_zero(); });
        if (pick == pool.end()) continue;

        Z4Vector p = std::move(*pick);
        pool.erase(pick);

        if (p(c).is_unit()) {
            const Z4 scale = p(c);  // 1*1 = 3*3 = 1
            p *= scale;
            for (auto& q : pool) {
                const Z4 t = q(c);
                q -= t * p;
            }
            for (auto& q : result) {
                const Z4 t = q(c);
                q -= t * p;
            }
        } else {
            // Pivot 2: no odd entries remain in this column.
            for (auto& q : pool)
                if (!q(c).is_zero()) q -= p;
            for (auto& q : result)
                if (q(c).value() >= 2) q -= p;
            // The annihilator multiple 2p vanishes in column c and must stay in the span of later rows.
            pool.push_back(Z4(2) * p);
        }
        std::erase_if(pool, is_zero_row);
        result.push_back(std::move(p));
    }

    Z4Matrix h(static_cast<Eigen::Index>(result.size()), cols);
    for (std::size_t i = 0; i < result.size(); ++i) h.row(static_cast<Eigen::Index>(i)) = result[i].transpose();
    return h;
}

Z4Matrix kernel(const Z4Matrix& h) {
    // Rows of [h^T | I] span {(x^T h^T, x^T)}; the Howell rows vanishing on the
    // first block then span exactly {(0, x) : h x = 0}.
    const Eigen::Index r = h.rows();
    const Eigen::Index m = h.cols();
    Z4Matrix aug = Z4Matrix::Zero(m, r + m);
    aug.leftCols(r) = h.transpose();
    aug.rightCols(m) = Z4Matrix::Identity(m, m);
    const Z4Matrix hf = howell_form(aug);

    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < hf.rows(); ++i)
        if (pivot_column(hf.row(i).transpose()) >= r) keep.push_back(i);
    Z4Matrix k(static_cast<Eigen::Index>(keep.size()), m);
    for (std::size_t i = 0; i < keep.size(); ++i) k.row(static_cast<Eigen::Index>(i)) = hf.row(keep[i]).rightCols(m);
    return howell_form(k);
}

}  // namespace rcodes
