/**
 * Exact scalar types, error hierarchy, and small integer helpers shared by
 * every lapsim module.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lapsim {

// Expression templates off: values are plain regular types, safe with
// std::min/std::max and auto.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
/// Always kept in lowest terms with a positive denominator by the backend.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// ---------------------------------------------------------------------------
// Errors

/// Operand dimensions do not fit the operation.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input lies outside the domain the operation is defined on.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation would exceed its configured work cap.
struct FeasibilityError : std::runtime_error {
    FeasibilityError(const std::string& what, Integer required_count)
        : std::runtime_error(what), required(std::move(required_count)) {}
    Integer required;
};

/// Two routes that must agree did not; signals a bug rather than bad input.
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Integer helpers

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return abs_value(a / gcd(a, b) * b);
}

/// Remainder in [0, |m|).
inline Integer floor_mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += abs_value(m);
    return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Binomial coefficient C(n, k); zero when k < 0 or k > n or n < 0.
inline Integer binomial(const Integer& n, long long k) {
    if (k < 0 || n < 0 || Integer(k) > n) return 0;
    Integer kk = k;
    if (kk * 2 > n) kk = n - kk;
    Integer result = 1;
    for (Integer i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;
    }
    return result;
}

inline bool is_integral(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

}  // namespace lapsim
