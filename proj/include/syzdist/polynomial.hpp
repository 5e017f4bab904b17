#ifndef SYZDIST_POLYNOMIAL_HPP
#define SYZDIST_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "syzdist/coeff.hpp"
#include "syzdist/ring.hpp"

namespace syzdist {

// Sparse multivariate polynomial over Q with optional affine parameter
// coefficients. Terms are kept sorted descending under the ring order and
// never store zero coefficients.
class Polynomial {
public:
    struct Term {
        Monomial m;
        Coeff c;
    };

    explicit Polynomial(RingPtr ring);
    Polynomial(RingPtr ring, const Rat& constant);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rat& c) { return {std::move(ring), c}; }
    static Polynomial variable(RingPtr ring, int main_index, int power = 1);
    static Polynomial parameter(RingPtr ring, int param_index);
    static Polynomial monomial_term(RingPtr ring, Monomial m, Coeff c = Coeff(Rat(1)));
    // builds from unsorted term list, merging duplicates
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Term& leading_term() const;
    // total degree in the main variables (parameters do not count); -1 for 0
    int degree() const;
    bool is_homogeneous() const;
    bool is_parameter_free() const;
    bool is_constant() const;

    Coeff coeff_of(const Monomial& m) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const Rat& s, const Polynomial& p);
    friend Polynomial operator*(const Coeff& s, const Polynomial& p);
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(int e) const;

    // scaled-monomial multiple, the inner step of division loops
    Polynomial times_term(const Monomial& m, const Coeff& c) const;

    Polynomial derivative(int main_index) const;
    Polynomial specialize(const std::vector<Rat>& values) const;
    // extract the parameter-free coefficient polynomial of t_index (or of the
    // constant slot when index < 0)
    Polynomial param_component(int index) const;

    // substitute main variable := value (a polynomial in the same ring)
    Polynomial substitute_main(int main_index, const Polynomial& value) const;
    // simultaneous substitution x_i := images[i]
    Polynomial substitute_all(const std::vector<Polynomial>& images) const;

    // re-home into structurally different ring; variables map by name, and
    // parameter variables may become main variables in the target
    Polynomial map_to_ring(const RingPtr& target) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
    void check_ring(const Polynomial& o) const { require_same_ring(ring_, o.ring_); }
};

// Euler contraction sum x_i * d/dx_i f = deg(f) * f on homogeneous inputs
Polynomial euler_contraction(const Polynomial& f);

std::string poly_to_string(const Polynomial& p);

} // namespace syzdist

#endif
