#pragma once

#include <map>
#include <string>

#include "kh/algebra.hpp"
#include "kh/diagram.hpp"
#include "kh/homology.hpp"

namespace kh {

// Exact Laurent polynomial in the variable A.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(const Int& coeff, int exponent);

    Int coeff(int exponent) const;
    void add_term(int exponent, const Int& coeff);
    const std::map<int, Int>& terms() const { return terms_; } // nonzero only

    LaurentPoly& operator+=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly&) const = default;

    bool is_zero() const { return terms_.empty(); }

    // Sorted descending exponents, e.g. "-A^2 - A^-2".
    std::string to_string() const;

private:
    std::map<int, Int> terms_;
};

// -A^2 - A^-2, the unreduced loop value.
LaurentPoly circle_value();

// Unreduced Kauffman bracket: sum over states of A^sigma (-A^2-A^-2)^{circles}.
LaurentPoly bracket(const LinkDiagram& d);

// Graded Euler characteristic of a framed table:
// sum (-1)^{(b-a)/2} rank(H_{a,b}) A^b. Equals bracket(d) exactly.
LaurentPoly graded_euler(const HomologyTable& framed);

} // namespace kh
