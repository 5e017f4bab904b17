#ifndef SYZDIST_GROEBNER_HPP
#define SYZDIST_GROEBNER_HPP

#include <mutex>
#include <optional>

#include "syzdist/modpoly.hpp"
#include "syzdist/polynomial.hpp"
#include "syzdist/qlinalg.hpp"

namespace syzdist {

ModPoly to_modpoly(const Polynomial& f);
Polynomial from_modpoly(const ModPoly& f, const RingPtr& ring);

// Homogeneous-by-convention ideal over a RingSpec; generators must be
// parameter-free. The reduced Gröbner basis and the saturation are computed
// once and shared by copies (write-once caches).
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens);
    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_graded() const;

    const std::vector<Polynomial>& groebner_basis() const;
    const Ideal& saturated() const; // with respect to the irrelevant ideal

    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& J) const;
    bool equals(const Ideal& J) const;
    bool is_zero_ideal() const;
    bool is_unit_ideal() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::mutex mu;
        std::optional<std::vector<Polynomial>> gb;
        std::shared_ptr<const Ideal> sat;
    };
    std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

struct Division {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};
Division divide(const Polynomial& f, const std::vector<Polynomial>& G);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
// I : J = {f : f*J in I}
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
Ideal irrelevant_ideal(const RingPtr& ring);
// iterated quotient until stabilization
Ideal saturation(const Ideal& I, const Ideal& J);
Ideal saturation(const Ideal& I);
// generators of I intersected with the subring omitting the given variables
Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars);

long hilbert_function(const Ideal& I, int k);          // dim (S/I)_k
long ideal_piece_dim(const Ideal& I, int k);           // dim I_k
// independent row-reduction route over the monomial-multiple matrix
long ideal_piece_dim_bruteforce(const Ideal& I, int k, RrefMode mode = RrefMode::Auto);

int krull_dimension_affine(const Ideal& I);
// dimension of Proj(S/I); -1 for the irrelevant ideal, error on the unit ideal
int krull_dimension_projective(const Ideal& I);

// Nakayama-certified minimal generating set of a graded ideal, ordered by
// ascending degree then input position
std::vector<Polynomial> minimal_generators(const Ideal& I);

Polynomial poly_lcm(const Polynomial& f, const Polynomial& g);
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);
Polynomial poly_gcd(const std::vector<Polynomial>& fs);
// f / g with zero remainder required
Polynomial poly_exact_divide(const Polynomial& f, const Polynomial& g);

} // namespace syzdist

#endif
