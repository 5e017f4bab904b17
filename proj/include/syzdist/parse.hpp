#ifndef SYZDIST_PARSE_HPP
#define SYZDIST_PARSE_HPP

#include <string>
#include <vector>

#include "syzdist/polynomial.hpp"

namespace syzdist {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

// `ring x,y,z,w params t0..t5 order grevlex`; ranges expand (x0..x3),
// `params` and `order` clauses optional
RingPtr parse_ring(const std::string& decl);

// integers (optionally p/q), variables, + - * ^, parentheses; implicit
// multiplication is a syntax error
Polynomial parse_polynomial(const std::string& src, const RingPtr& ring);

// sum of (poly)*dV products, one differential factor per product; returns
// one coefficient per main variable
std::vector<Polynomial> parse_form_coefficients(const std::string& src, const RingPtr& ring);

std::string poly_to_string(const Polynomial& p);
std::string form_to_string(const std::vector<Polynomial>& coeffs);

} // namespace syzdist

#endif
