#pragma once

#include "kptau/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace kptau {

// Truncated formal series in the times t_1, t_2, ..., graded by
// weight(t_k) = k. Every identity handled by this library is homogeneous in
// that grading, so truncation by weight is exactly closed: a series of
// max_weight W carries every coefficient of weight <= W and nothing else.

/// Exponent vector: entry i is the exponent of t_{i+1}. Canonical form has no
/// trailing zeros, so the empty vector is the constant monomial.
using Monomial = std::vector<int>;

int monomial_weight(const Monomial& m);
void trim_monomial(Monomial& m);

/// Renders e.g. "t1^3 t3" ("1" for the constant monomial).
std::string monomial_to_string(const Monomial& m);

/// Orders by (weight, exponent vector); used for all reporting so the "first
/// offending monomial" of a failed check is deterministic.
bool monomial_weight_lex_less(const Monomial& a, const Monomial& b);

/// The monomial whose exponent of t_p counts the occurrences of p in parts.
Monomial monomial_from_parts(const std::vector<int>& parts);

class TimesSeries {
public:
    TimesSeries() = default;
    TimesSeries(int num_vars, int max_weight);

    static TimesSeries constant(const Rational& c, int num_vars, int max_weight);

    int num_vars() const { return num_vars_; }
    int max_weight() const { return max_weight_; }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const;
    Rational constant_term() const { return coeff({}); }

    /// Inserts/overwrites one coefficient. Monomials above max_weight are
    /// dropped (truncation is total); zero coefficients are never stored.
    void set_coeff(Monomial m, Rational c);
    void add_to_coeff(Monomial m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }

    /// Restricts to weight <= new_max_weight (which must not exceed the
    /// current max_weight: truncation never manufactures reliability).
    TimesSeries truncated(int new_max_weight) const;

    /// Re-declares the truncation weight upward. Only valid when the caller
    /// knows every omitted coefficient vanishes (exact polynomials).
    TimesSeries declared_exact_to(int new_max_weight) const;

    /// The weight-w homogeneous component, same num_vars/max_weight.
    TimesSeries weight_component(int w) const;

    /// First nonzero monomial in (weight, lex) order, or nullptr if zero.
    const std::pair<const Monomial, Rational>* leading_term() const;

    /// Coefficient-wise equality of the stored term maps.
    bool operator==(const TimesSeries& other) const { return terms_ == other.terms_; }

    TimesSeries& operator+=(const TimesSeries& other);
    TimesSeries& operator-=(const TimesSeries& other);
    TimesSeries& operator*=(const Rational& c);

private:
    int num_vars_ = 0;
    int max_weight_ = 0;
    std::map<Monomial, Rational> terms_;
};

TimesSeries operator+(TimesSeries a, const TimesSeries& b);
TimesSeries operator-(TimesSeries a, const TimesSeries& b);
TimesSeries operator*(const TimesSeries& a, const TimesSeries& b);
TimesSeries operator*(const Rational& c, TimesSeries a);
TimesSeries operator-(TimesSeries a);

/// exp(f) for f with zero constant term; truncated at f.max_weight().
TimesSeries exp_series(const TimesSeries& f);

/// log(g) for g with constant term 1; inverse of exp_series up to truncation.
TimesSeries log_series(const TimesSeries& g);

/// d/dt_k; the result is reliable to weight f.max_weight() - k.
TimesSeries diff(const TimesSeries& f, int k);

/// t_k * f (weight raised by k, truncated at f.max_weight()).
TimesSeries multiply_by_time(const TimesSeries& f, int k);

/// Monomial t_1^{e_1} t_2^{e_2} ... as a series.
TimesSeries monomial_series(Monomial m, const Rational& c, int num_vars, int max_weight);

/// Coefficient-wise scale of every variable: t_k -> c * t_k.
TimesSeries scale_vars(const TimesSeries& f, const Rational& c);

/// Renames t_k -> t_{k+offset}; the weight grading of the result treats the
/// renamed variables at their new indices, so max_weight must be supplied.
TimesSeries shift_var_indices(const TimesSeries& f, int offset, int new_num_vars,
                              int new_max_weight);

/// Deterministic pseudorandom series with small rational coefficients; used
/// by property tests and by operator-identity checks on "generic" input.
TimesSeries random_series(int num_vars, int max_weight, unsigned seed,
                          bool odd_times_only = false);

}  // namespace kptau
