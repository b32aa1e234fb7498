#pragma once

/// @file power_series.hpp
/// @brief Truncated power series with polynomial coefficients.
///
/// A series carries an explicit truncation order; coefficients beyond the
/// order are unknown, and reading one is an error rather than zero.  Binary
/// operations propagate the minimum order of their operands.

#include <string>
#include <vector>

#include "multipoly.hpp"

namespace mzeta {

class PowerSeries {
public:
    PowerSeries(VarTablePtr t, int order);

    static PowerSeries one(VarTablePtr t, int order);
    static PowerSeries from_coeffs(VarTablePtr t, std::vector<MultiPoly> coeffs, int order);

    int order() const { return order_; }
    const VarTablePtr& table() const { return table_; }

    const MultiPoly& coeff(int i) const;
    void set_coeff(int i, MultiPoly p);

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;

    /// Multiplicative inverse; the constant term must be an invertible
    /// monomial with unit coefficient.
    PowerSeries invert() const;

    PowerSeries truncated(int new_order) const;
    /// Substitutes the series variable by its negative (coeff_i *= (-1)^i).
    PowerSeries negate_variable() const;
    PowerSeries scaled(const MultiPoly& c) const;
    /// k >= 0 integer power.
    PowerSeries pow(int k) const;

    bool is_one() const;

    /// "1 + h1*T + L*T^2"-style rendering with the given series variable name.
    std::string render(const std::string& var_name = "T") const;

private:
    void check_compatible(const PowerSeries& o) const;

    VarTablePtr table_;
    int order_;
    std::vector<MultiPoly> coeffs_; // size order_+1
};

} // namespace mzeta
