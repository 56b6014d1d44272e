#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mrb/errors.hpp"
#include "mrb/monomial.hpp"
#include "mrb/rational.hpp"

namespace mrb {

enum class BaseKind { trivial, polynomial, laurent };

// A pluggable commutative base algebra A with a distinguished monomial
// basis. Three kinds:
//   trivial     A = k            (the only monomial is 1)
//   polynomial  A = k[X]         (bialgebra: generators primitive)
//   laurent     A = k[e, e^-1]   (single generator, negative exponents
//                                 allowed; algebra only, no coalgebra)
class BaseInstance {
public:
    static BaseInstance trivial() { return BaseInstance(BaseKind::trivial, {}); }

    static BaseInstance polynomial(std::vector<std::string> generators) {
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        if (generators.empty())
            throw invalid_input_error("polynomial base needs at least one generator");
        return BaseInstance(BaseKind::polynomial, std::move(generators));
    }

    static BaseInstance laurent(std::string generator = "e") {
        return BaseInstance(BaseKind::laurent, {std::move(generator)});
    }

    BaseKind kind() const { return kind_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }

    bool bialgebra_enabled() const { return kind_ != BaseKind::laurent; }

    bool admits(const Monomial& m) const {
        for (const auto& [name, k] : m.exponents()) {
            if (!std::binary_search(alphabet_.begin(), alphabet_.end(), name)) return false;
            if (k < 0 && kind_ != BaseKind::laurent) return false;
        }
        return true;
    }

    void require(const Monomial& m) const {
        if (!admits(m))
            throw invalid_input_error("monomial '" + m.str() + "' is not valid over base " + describe());
    }

    std::string describe() const {
        switch (kind_) {
        case BaseKind::trivial: return "trivial";
        case BaseKind::laurent: return "laurent:" + alphabet_.front();
        case BaseKind::polynomial: {
            std::string s = "poly:";
            for (size_t i = 0; i < alphabet_.size(); ++i) {
                if (i) s += ",";
                s += alphabet_[i];
            }
            return s;
        }
        }
        return {};
    }

    friend bool operator==(const BaseInstance&, const BaseInstance&) = default;

private:
    BaseInstance(BaseKind kind, std::vector<std::string> alphabet)
        : kind_(kind), alphabet_(std::move(alphabet)) {}

    BaseKind kind_;
    std::vector<std::string> alphabet_; // sorted, unique
};

inline void require_same_instance(const BaseInstance& a, const BaseInstance& b) {
    if (!(a == b))
        throw instance_mismatch_error("operands over different base instances: " +
                                      a.describe() + " vs " + b.describe());
}

// Element of the base algebra: finite map Monomial -> Rational, no zero
// coefficients stored. Canonical form is the sorted term map itself.
class BaseElement {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit BaseElement(BaseInstance inst) : inst_(std::move(inst)) {}

    static BaseElement zero(BaseInstance inst) { return BaseElement(std::move(inst)); }

    static BaseElement unit(BaseInstance inst, Rational c = Rational(1)) {
        return from_monomial(std::move(inst), Monomial(), std::move(c));
    }

    static BaseElement from_monomial(BaseInstance inst, const Monomial& m,
                                     Rational c = Rational(1)) {
        inst.require(m);
        BaseElement e(std::move(inst));
        if (!c.is_zero()) e.terms_.emplace(m, std::move(c));
        return e;
    }

    const BaseInstance& instance() const { return inst_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }

    // Coefficient of the unit monomial.
    Rational constant_term() const {
        auto it = terms_.find(Monomial());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        inst_.require(m);
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BaseElement& operator+=(const BaseElement& o) {
        require_same_instance(inst_, o.inst_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    BaseElement& operator-=(const BaseElement& o) {
        require_same_instance(inst_, o.inst_);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    BaseElement& scale(const Rational& c) {
        if (c.is_zero()) { terms_.clear(); return *this; }
        for (auto& [m, coeff] : terms_) coeff *= c;
        return *this;
    }

    BaseElement operator-() const {
        BaseElement out(*this);
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend BaseElement operator+(BaseElement a, const BaseElement& b) { return a += b; }
    friend BaseElement operator-(BaseElement a, const BaseElement& b) { return a -= b; }

    friend BaseElement operator*(const Rational& c, BaseElement e) { return e.scale(c); }

    // Commutative bilinear product; exponent vectors add.
    friend BaseElement operator*(const BaseElement& a, const BaseElement& b) {
        require_same_instance(a.inst_, b.inst_);
        BaseElement out(a.inst_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend bool operator==(const BaseElement& a, const BaseElement& b) {
        return a.inst_ == b.inst_ && a.terms_ == b.terms_;
    }

    // Display uses descending monomial order: "3/2*x^2*y - 1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational mag = c.abs();
            if (s.empty()) s += c.is_negative() ? "-" : "";
            else s += c.is_negative() ? " - " : " + ";
            if (m.is_unit()) s += mag.str();
            else {
                if (!mag.is_one()) s += mag.str() + "*";
                s += m.str();
            }
        }
        return s;
    }

private:
    BaseInstance inst_;
    Terms terms_;
};

// Element of A (x) A, the codomain of the base coproduct.
class BaseTensorSquare {
public:
    using Terms = std::map<std::pair<Monomial, Monomial>, Rational>;

    explicit BaseTensorSquare(BaseInstance inst) : inst_(std::move(inst)) {}

    const BaseInstance& instance() const { return inst_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& l, const Monomial& r, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(std::make_pair(l, r), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BaseTensorSquare& operator+=(const BaseTensorSquare& o) {
        require_same_instance(inst_, o.inst_);
        for (const auto& [p, c] : o.terms_) add_term(p.first, p.second, c);
        return *this;
    }

    friend BaseTensorSquare operator*(const BaseTensorSquare& a, const BaseTensorSquare& b) {
        require_same_instance(a.inst_, b.inst_);
        BaseTensorSquare out(a.inst_);
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_)
                out.add_term(pa.first * pb.first, pa.second * pb.second, ca * cb);
        return out;
    }

    friend bool operator==(const BaseTensorSquare& a, const BaseTensorSquare& b) {
        return a.inst_ == b.inst_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [p, c] = *it;
            Rational mag = c.abs();
            if (s.empty()) s += c.is_negative() ? "-" : "";
            else s += c.is_negative() ? " - " : " + ";
            if (!mag.is_one()) s += mag.str() + "*";
            s += p.first.str() + " (x) " + p.second.str();
        }
        return s;
    }

private:
    BaseInstance inst_;
    Terms terms_;
};

namespace detail {

// Delta(m) for one monomial with primitive generators:
// Delta(x) = x(x)1 + 1(x)x extended multiplicatively, which expands to the
// binomial-weighted sum over exponent splits.
inline void coproduct_monomial(const BaseInstance& inst, const Monomial& m, const Rational& c,
                               BaseTensorSquare& out) {
    std::vector<std::pair<Monomial, Monomial>> splits{{Monomial(), Monomial()}};
    std::vector<Rational> coeffs{c};
    for (const auto& [name, e] : m.exponents()) {
        std::vector<std::pair<Monomial, Monomial>> next_splits;
        std::vector<Rational> next_coeffs;
        for (size_t i = 0; i < splits.size(); ++i) {
            for (int k = 0; k <= e; ++k) {
                next_splits.emplace_back(splits[i].first * Monomial::generator(name, k),
                                         splits[i].second * Monomial::generator(name, e - k));
                next_coeffs.push_back(coeffs[i] * Rational(binomial(e, k)));
            }
        }
        splits = std::move(next_splits);
        coeffs = std::move(next_coeffs);
    }
    for (size_t i = 0; i < splits.size(); ++i)
        out.add_term(splits[i].first, splits[i].second, coeffs[i]);
}

} // namespace detail

inline BaseTensorSquare coproduct(const BaseElement& x) {
    if (!x.instance().bialgebra_enabled())
        throw unsupported_coalgebra_error("base " + x.instance().describe() +
                                          " has no coalgebra structure");
    BaseTensorSquare out(x.instance());
    for (const auto& [m, c] : x.terms())
        detail::coproduct_monomial(x.instance(), m, c, out);
    return out;
}

// Counit: evaluation at generators = 0, i.e. the constant term. On the
// trivial base this is the identity of k.
inline Rational counit(const BaseElement& x) {
    if (!x.instance().bialgebra_enabled())
        throw unsupported_coalgebra_error("base " + x.instance().describe() +
                                          " has no coalgebra structure");
    return x.constant_term();
}

// Filtration degree of a single basis monomial: 0 on the trivial base,
// total degree on the polynomial base.
inline int monomial_degree(const BaseInstance& inst, const Monomial& m) {
    if (inst.kind() == BaseKind::laurent)
        throw undefined_degree_error("the Laurent base carries no filtration degree");
    return inst.kind() == BaseKind::trivial ? 0 : m.total_degree();
}

inline int degree(const BaseElement& x) {
    if (x.is_zero())
        throw undefined_degree_error("degree of the zero element is undefined");
    int d = 0;
    for (const auto& [m, c] : x.terms())
        d = std::max(d, monomial_degree(x.instance(), m));
    return d;
}

} // namespace mrb
