#ifndef SYZDIST_COEFF_HPP
#define SYZDIST_COEFF_HPP

#include <utility>
#include <vector>

#include "syzdist/rational.hpp"

namespace syzdist {

// Coefficient that is affine-linear in the parameter block:
//   c + sum_i lin[i] * t_i.
// Products of two parameter-dependent coefficients are rejected so the
// block stays linear.
class Coeff {
public:
    Coeff() = default;
    Coeff(Rat c) : c_(std::move(c)) {}           // NOLINT(google-explicit-constructor)
    Coeff(long c) : c_(c) {}                     // NOLINT(google-explicit-constructor)
    static Coeff param(int index, Rat scale = Rat(1));

    bool is_zero() const { return c_ == 0 && lin_.empty(); }
    bool is_constant() const { return lin_.empty(); }
    const Rat& constant_part() const { return c_; }
    const std::vector<std::pair<int, Rat>>& linear_part() const { return lin_; }
    Rat param_coeff(int index) const;

    Rat specialize(const std::vector<Rat>& values) const;

    Coeff operator-() const;
    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(const Coeff& a, const Coeff& b);
    bool operator==(const Coeff& o) const { return c_ == o.c_ && lin_ == o.lin_; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

private:
    Rat c_ = Rat(0);
    std::vector<std::pair<int, Rat>> lin_; // sorted by index, nonzero entries
    void prune();
};

} // namespace syzdist

#endif
