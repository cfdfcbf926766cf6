#pragma once

// Affine-linear forms c0 + sum c_i u_i over unknowns u_i, used as the scalar
// of PolyXY when assembling exact linear systems (the weight-by-weight double
// shuffle solver, the triangular g-span solve). Products are only defined
// when one side is constant; anything else is a solver bug and throws.

#include "cmes/rational.hpp"

#include <map>
#include <stdexcept>

namespace cmes {

class LinForm {
public:
    LinForm() = default;
    explicit LinForm(const Rational& c) : cst_(c) {}
    static LinForm unknown(int id, const Rational& coeff = Rational(1)) {
        LinForm f;
        if (!coeff.is_zero()) f.co_[id] = coeff;
        return f;
    }

    bool is_zero() const { return cst_.is_zero() && co_.empty(); }
    bool is_constant() const { return co_.empty(); }
    const Rational& constant() const { return cst_; }
    const std::map<int, Rational>& coeffs() const { return co_; }

    LinForm operator-() const {
        LinForm r;
        r.cst_ = -cst_;
        for (const auto& [i, c] : co_) r.co_[i] = -c;
        return r;
    }

    friend LinForm operator+(const LinForm& a, const LinForm& b) {
        LinForm r = a;
        r.cst_ += b.cst_;
        for (const auto& [i, c] : b.co_) {
            auto [it, inserted] = r.co_.emplace(i, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) r.co_.erase(it);
            }
        }
        return r;
    }

    friend LinForm operator-(const LinForm& a, const LinForm& b) { return a + (-b); }

    LinForm operator*(const Rational& c) const {
        LinForm r;
        if (c.is_zero()) return r;
        r.cst_ = cst_ * c;
        for (const auto& [i, v] : co_) r.co_[i] = v * c;
        return r;
    }

    friend LinForm operator*(const LinForm& a, const LinForm& b) {
        if (a.is_constant()) return b * a.cst_;
        if (b.is_constant()) return a * b.cst_;
        throw std::logic_error("LinForm: product of two non-constant forms");
    }

    friend bool operator==(const LinForm& a, const LinForm& b) {
        return a.cst_ == b.cst_ && a.co_ == b.co_;
    }

private:
    Rational cst_;
    std::map<int, Rational> co_;
};

}  // namespace cmes
