#include "power_series.hpp"

#include <algorithm>
#include <sstream>

namespace mzeta {

PowerSeries::PowerSeries(VarTablePtr t, int order) : table_(std::move(t)), order_(order) {
    if (order_ < 0) throw usage_error("PowerSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order_) + 1, MultiPoly(table_));
}

PowerSeries PowerSeries::one(VarTablePtr t, int order) {
    PowerSeries s(std::move(t), order);
    s.coeffs_[0] = MultiPoly::constant(s.table_, 1);
    return s;
}

PowerSeries PowerSeries::from_coeffs(VarTablePtr t, std::vector<MultiPoly> coeffs, int order) {
    PowerSeries s(std::move(t), order);
    if (static_cast<int>(coeffs.size()) > order + 1)
        throw usage_error("PowerSeries: more coefficients than the order admits");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!same_table(s.table_, coeffs[i].table()))
            throw usage_error("PowerSeries: coefficient over a different variable table");
        s.coeffs_[i] = std::move(coeffs[i]);
    }
    return s;
}

const MultiPoly& PowerSeries::coeff(int i) const {
    if (i < 0) throw usage_error("PowerSeries: negative coefficient index");
    if (i > order_)
        throw usage_error("PowerSeries: coefficient " + std::to_string(i) +
                          " requested beyond truncation order " + std::to_string(order_));
    return coeffs_[static_cast<std::size_t>(i)];
}

void PowerSeries::set_coeff(int i, MultiPoly p) {
    if (i < 0 || i > order_) throw usage_error("PowerSeries: coefficient index out of range");
    if (!same_table(table_, p.table())) throw usage_error("PowerSeries: coefficient over a different variable table");
    coeffs_[static_cast<std::size_t>(i)] = std::move(p);
}

void PowerSeries::check_compatible(const PowerSeries& o) const {
    if (!same_table(table_, o.table_)) throw usage_error("PowerSeries: mismatched variable tables");
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    check_compatible(o);
    PowerSeries r(table_, std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) r.coeffs_[static_cast<std::size_t>(i)] = coeff(i) + o.coeff(i);
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    check_compatible(o);
    PowerSeries r(table_, std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) r.coeffs_[static_cast<std::size_t>(i)] = coeff(i) - o.coeff(i);
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    check_compatible(o);
    PowerSeries r(table_, std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) {
        MultiPoly acc(table_);
        for (int j = 0; j <= i; ++j) {
            const MultiPoly& a = coeffs_[static_cast<std::size_t>(j)];
            const MultiPoly& b = o.coeffs_[static_cast<std::size_t>(i - j)];
            if (a.is_zero() || b.is_zero()) continue;
            acc += a * b;
        }
        r.coeffs_[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return r;
}

PowerSeries PowerSeries::invert() const {
    const MultiPoly& c0 = coeffs_[0];
    if (c0.term_count() != 1)
        throw domain_error("PowerSeries: inversion requires a unit monomial constant term");
    MultiPoly c0_inv = c0.pow(-1); // validates unit coefficient and invertibility
    PowerSeries r(table_, order_);
    r.coeffs_[0] = c0_inv;
    for (int i = 1; i <= order_; ++i) {
        MultiPoly acc(table_);
        for (int j = 1; j <= i; ++j) {
            const MultiPoly& a = coeffs_[static_cast<std::size_t>(j)];
            if (a.is_zero()) continue;
            acc += a * r.coeffs_[static_cast<std::size_t>(i - j)];
        }
        r.coeffs_[static_cast<std::size_t>(i)] = -(c0_inv * acc);
    }
    return r;
}

PowerSeries PowerSeries::truncated(int new_order) const {
    if (new_order > order_) throw usage_error("PowerSeries: cannot extend truncation order");
    PowerSeries r(table_, new_order);
    for (int i = 0; i <= new_order; ++i) r.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

PowerSeries PowerSeries::negate_variable() const {
    PowerSeries r = *this;
    for (int i = 1; i <= order_; i += 2) r.coeffs_[static_cast<std::size_t>(i)] = -r.coeffs_[static_cast<std::size_t>(i)];
    return r;
}

PowerSeries PowerSeries::scaled(const MultiPoly& c) const {
    PowerSeries r(table_, order_);
    for (int i = 0; i <= order_; ++i) r.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)] * c;
    return r;
}

PowerSeries PowerSeries::pow(int k) const {
    if (k < 0) throw usage_error("PowerSeries: negative power (invert first)");
    PowerSeries r = one(table_, order_);
    PowerSeries base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        if (k >>= 1) base = base * base;
    }
    return r;
}

bool PowerSeries::is_one() const {
    if (!coeffs_[0].is_one()) return false;
    for (int i = 1; i <= order_; ++i)
        if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) return false;
    return true;
}

std::string PowerSeries::render(const std::string& var_name) const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= order_; ++i) {
        const MultiPoly& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        bool wrap = c.term_count() > 1;
        if (i == 0) {
            out << c.render();
            continue;
        }
        if (c.is_one()) {
            out << var_name;
        } else {
            if (wrap) out << "(" << c.render() << ")";
            else out << c.render();
            out << "*" << var_name;
        }
        if (i > 1) out << "^" << i;
    }
    if (first) out << "0";
    out << " + O(" << var_name << "^" << (order_ + 1) << ")";
    return out.str();
}

} // namespace mzeta
