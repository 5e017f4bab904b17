#include "syzdist/coeff.hpp"

#include <algorithm>
#include <stdexcept>

namespace syzdist {

Coeff Coeff::param(int index, Rat scale) {
    Coeff c;
    if (scale != 0) c.lin_.emplace_back(index, std::move(scale));
    return c;
}

Rat Coeff::param_coeff(int index) const {
    for (const auto& [i, v] : lin_)
        if (i == index) return v;
    return Rat(0);
}

Rat Coeff::specialize(const std::vector<Rat>& values) const {
    Rat r = c_;
    for (const auto& [i, v] : lin_) {
        if (i < 0 || i >= static_cast<int>(values.size()))
            throw std::invalid_argument("specialize: parameter value vector too short");
        r += v * values[i];
    }
    return r;
}

void Coeff::prune() {
    lin_.erase(std::remove_if(lin_.begin(), lin_.end(),
                              [](const auto& p) { return p.second == 0; }),
               lin_.end());
}

Coeff Coeff::operator-() const {
    Coeff r = *this;
    r.c_ = -r.c_;
    for (auto& [i, v] : r.lin_) v = -v;
    return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
    c_ += o.c_;
    if (!o.lin_.empty()) {
        std::vector<std::pair<int, Rat>> merged;
        merged.reserve(lin_.size() + o.lin_.size());
        auto a = lin_.begin();
        auto b = o.lin_.begin();
        while (a != lin_.end() || b != o.lin_.end()) {
            if (b == o.lin_.end() || (a != lin_.end() && a->first < b->first)) {
                merged.push_back(*a++);
            } else if (a == lin_.end() || b->first < a->first) {
                merged.push_back(*b++);
            } else {
                Rat v = a->second + b->second;
                if (v != 0) merged.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        lin_ = std::move(merged);
    }
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff operator*(const Coeff& a, const Coeff& b) {
    if (!a.is_constant() && !b.is_constant())
        throw std::domain_error("product of two parameter-dependent coefficients");
    const Coeff& dep = a.is_constant() ? b : a;
    const Rat& s = a.is_constant() ? a.c_ : b.c_;
    Coeff r;
    r.c_ = s * dep.c_;
    if (s != 0) {
        r.lin_.reserve(dep.lin_.size());
        for (const auto& [i, v] : dep.lin_) r.lin_.emplace_back(i, s * v);
    }
    return r;
}

} // namespace syzdist
