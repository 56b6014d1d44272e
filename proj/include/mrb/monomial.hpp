#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mrb/errors.hpp"

namespace mrb {

// Commutative monomial in named generators: a finite map name -> exponent
// with no zero exponents stored. The empty map is the unit 1. Exponents may
// be negative (the Laurent base); the instance validates sign constraints.
//
// Total order is graded lexicographic over the sorted generator names:
// compare total degree first, then the exponent of the alphabetically
// first generator where the two differ (larger exponent wins).
class Monomial {
public:
    using Exponents = std::vector<std::pair<std::string, int>>; // sorted by name

    Monomial() = default;

    static Monomial generator(std::string name, int exponent = 1) {
        Monomial m;
        if (exponent != 0) m.exps_.emplace_back(std::move(name), exponent);
        return m;
    }

    static Monomial from_exponents(const std::map<std::string, int>& e) {
        Monomial m;
        for (const auto& [name, k] : e)
            if (k != 0) m.exps_.emplace_back(name, k);
        return m;
    }

    bool is_unit() const { return exps_.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [name, k] : exps_) d += k;
        return d;
    }

    int exponent(const std::string& name) const {
        for (const auto& [n, k] : exps_)
            if (n == name) return k;
        return 0;
    }

    const Exponents& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const {
        Monomial out;
        out.exps_.reserve(exps_.size() + o.exps_.size());
        auto a = exps_.begin();
        auto b = o.exps_.begin();
        while (a != exps_.end() && b != o.exps_.end()) {
            if (a->first < b->first) out.exps_.push_back(*a++);
            else if (b->first < a->first) out.exps_.push_back(*b++);
            else {
                int k = a->second + b->second;
                if (k != 0) out.exps_.emplace_back(a->first, k);
                ++a; ++b;
            }
        }
        out.exps_.insert(out.exps_.end(), a, exps_.end());
        out.exps_.insert(out.exps_.end(), b, o.exps_.end());
        return out;
    }

    Monomial pow(int e) const {
        Monomial out;
        if (e == 0) return out;
        out.exps_ = exps_;
        for (auto& [name, k] : out.exps_) k *= e;
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
        auto i = a.exps_.begin();
        auto j = b.exps_.begin();
        while (i != a.exps_.end() || j != b.exps_.end()) {
            // Missing generator = exponent 0 on the side that runs short.
            if (i == a.exps_.end())
                return 0 <=> j->second;
            if (j == b.exps_.end())
                return i->second <=> 0;
            if (i->first != j->first) {
                // The alphabetically earlier name has a nonzero exponent on
                // exactly one side; that side is lex-larger iff positive.
                if (i->first < j->first) return i->second <=> 0;
                return 0 <=> j->second;
            }
            if (auto c = i->second <=> j->second; c != 0) return c;
            ++i; ++j;
        }
        return std::strong_ordering::equal;
    }

    // "x^2*y", "e^-1", "1" for the unit.
    std::string str() const {
        if (is_unit()) return "1";
        std::string s;
        for (const auto& [name, k] : exps_) {
            if (!s.empty()) s += "*";
            s += name;
            if (k != 1) s += "^" + std::to_string(k);
        }
        return s;
    }

private:
    Exponents exps_;
};

} // namespace mrb
