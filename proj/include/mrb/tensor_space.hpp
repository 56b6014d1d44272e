#pragma once

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mrb/base_algebra.hpp"

namespace mrb {

// Pure tensor a_0 (x) a_1 (x) ... (x) a_m with monomial slots. All
// linearity lives in MrbElement; keeping slots down at single monomials
// gives a unique normal form and cheap equality.
//
// Order: length-major, then slotwise monomial order. The grading of the
// ambient module is by tensor length, so the word order follows it.
class TensorWord {
public:
    explicit TensorWord(std::vector<Monomial> slots) : slots_(std::move(slots)) {
        if (slots_.empty()) throw malformed_word_error("tensor word needs at least one slot");
    }

    // The unit word [1].
    static TensorWord unit() { return TensorWord({Monomial()}); }

    // u_n = 1 (x) ... (x) 1 with n+1 slots, the basis of the trivial-base module.
    static TensorWord u(int n) {
        if (n < 0) throw invalid_input_error("u_n needs n >= 0");
        return TensorWord(std::vector<Monomial>(static_cast<size_t>(n) + 1));
    }

    size_t length() const { return slots_.size(); }
    const Monomial& slot(size_t i) const { return slots_[i]; }
    const Monomial& head() const { return slots_.front(); }
    const std::vector<Monomial>& slots() const { return slots_; }

    bool is_unit() const { return slots_.size() == 1 && slots_[0].is_unit(); }

    // a_1 (x) ... (x) a_m, defined for length >= 2.
    TensorWord tail() const {
        if (slots_.size() < 2)
            throw malformed_word_error("tail of a length-1 word");
        return TensorWord(std::vector<Monomial>(slots_.begin() + 1, slots_.end()));
    }

    // m (x) a_0 (x) ... (x) a_m
    TensorWord prepend(const Monomial& m) const {
        std::vector<Monomial> s;
        s.reserve(slots_.size() + 1);
        s.push_back(m);
        s.insert(s.end(), slots_.begin(), slots_.end());
        return TensorWord(std::move(s));
    }

    // (m * a_0) (x) a_1 (x) ... (x) a_m  -- the base action on the first slot.
    TensorWord mul_head(const Monomial& m) const {
        std::vector<Monomial> s(slots_);
        s[0] = m * s[0];
        return TensorWord(std::move(s));
    }

    friend bool operator==(const TensorWord& a, const TensorWord& b) {
        return a.slots_ == b.slots_;
    }

    friend std::strong_ordering operator<=>(const TensorWord& a, const TensorWord& b) {
        if (auto c = a.slots_.size() <=> b.slots_.size(); c != 0) return c;
        for (size_t i = 0; i < a.slots_.size(); ++i)
            if (auto c = a.slots_[i] <=> b.slots_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    // Trivial-base words print as u_n, everything else as [a0|a1|...].
    std::string str(const BaseInstance& inst) const {
        if (inst.kind() == BaseKind::trivial) return "u_" + std::to_string(slots_.size() - 1);
        std::string s = "[";
        for (size_t i = 0; i < slots_.size(); ++i) {
            if (i) s += "|";
            s += slots_[i].str();
        }
        return s + "]";
    }

private:
    std::vector<Monomial> slots_;
};

// Filtration degree deg(a_0) + ... + deg(a_m) + m.
inline int degree(const BaseInstance& inst, const TensorWord& w) {
    int d = static_cast<int>(w.length()) - 1;
    for (const auto& m : w.slots()) d += monomial_degree(inst, m);
    return d;
}

namespace detail {

// Shared sparse-linear-combination machinery for elements keyed by words,
// word pairs and word triples.
template <typename Key>
class LinearCombination {
public:
    using Terms = std::map<Key, Rational>;

    explicit LinearCombination(BaseInstance inst) : inst_(std::move(inst)) {}

    const BaseInstance& instance() const { return inst_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Key& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

protected:
    void add_all(const LinearCombination& o, bool negate) {
        require_same_instance(inst_, o.inst_);
        for (const auto& [k, c] : o.terms_) add_term(k, negate ? -c : c);
    }

    void scale_all(const Rational& c) {
        if (c.is_zero()) { terms_.clear(); return; }
        for (auto& [k, coeff] : terms_) coeff *= c;
    }

    void negate_all() {
        for (auto& [k, c] : terms_) c = -c;
    }

    BaseInstance inst_;
    Terms terms_;
};

inline std::string format_term(std::string& out, const Rational& c, const std::string& body) {
    Rational mag = c.abs();
    if (out.empty()) out += c.is_negative() ? "-" : "";
    else out += c.is_negative() ? " - " : " + ";
    if (!mag.is_one()) out += mag.str() + "*";
    out += body;
    return out;
}

} // namespace detail

// Element of the ambient k-module: a finite linear combination of tensor
// words over one base instance. Zero is the empty term map.
class MrbElement : public detail::LinearCombination<TensorWord> {
public:
    explicit MrbElement(BaseInstance inst)
        : detail::LinearCombination<TensorWord>(std::move(inst)) {}

    static MrbElement zero(BaseInstance inst) { return MrbElement(std::move(inst)); }

    // The multiplicative unit [1_A].
    static MrbElement unit(BaseInstance inst, Rational c = Rational(1)) {
        return from_word(std::move(inst), TensorWord::unit(), std::move(c));
    }

    static MrbElement from_word(BaseInstance inst, const TensorWord& w,
                                Rational c = Rational(1)) {
        for (const auto& m : w.slots()) inst.require(m);
        MrbElement e(std::move(inst));
        e.add_term(w, std::move(c));
        return e;
    }

    // c * u_n over the trivial base.
    static MrbElement u(int n, Rational c = Rational(1)) {
        return from_word(BaseInstance::trivial(), TensorWord::u(n), std::move(c));
    }

    MrbElement& operator+=(const MrbElement& o) { add_all(o, false); return *this; }
    MrbElement& operator-=(const MrbElement& o) { add_all(o, true); return *this; }
    MrbElement& scale(const Rational& c) { scale_all(c); return *this; }

    MrbElement operator-() const {
        MrbElement out(*this);
        out.negate_all();
        return out;
    }

    friend MrbElement operator+(MrbElement a, const MrbElement& b) { return a += b; }
    friend MrbElement operator-(MrbElement a, const MrbElement& b) { return a -= b; }
    friend MrbElement operator*(const Rational& c, MrbElement e) { return e.scale(c); }

    friend bool operator==(const MrbElement& a, const MrbElement& b) {
        return a.inst_ == b.inst_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            detail::format_term(s, it->second, it->first.str(inst_));
        return s;
    }
};

// Element of the square: linear combination of word pairs.
class TensorSquareElement
    : public detail::LinearCombination<std::pair<TensorWord, TensorWord>> {
public:
    explicit TensorSquareElement(BaseInstance inst)
        : detail::LinearCombination<std::pair<TensorWord, TensorWord>>(std::move(inst)) {}

    static TensorSquareElement from_pair(BaseInstance inst, const TensorWord& l,
                                         const TensorWord& r, Rational c = Rational(1)) {
        TensorSquareElement e(std::move(inst));
        e.add_term({l, r}, std::move(c));
        return e;
    }

    // a (x) b for whole elements, bilinear.
    static TensorSquareElement pure(const MrbElement& a, const MrbElement& b) {
        require_same_instance(a.instance(), b.instance());
        TensorSquareElement e(a.instance());
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms())
                e.add_term({wa, wb}, ca * cb);
        return e;
    }

    TensorSquareElement& operator+=(const TensorSquareElement& o) { add_all(o, false); return *this; }
    TensorSquareElement& operator-=(const TensorSquareElement& o) { add_all(o, true); return *this; }
    TensorSquareElement& scale(const Rational& c) { scale_all(c); return *this; }

    TensorSquareElement operator-() const {
        TensorSquareElement out(*this);
        out.negate_all();
        return out;
    }

    friend TensorSquareElement operator+(TensorSquareElement a, const TensorSquareElement& b) { return a += b; }
    friend TensorSquareElement operator-(TensorSquareElement a, const TensorSquareElement& b) { return a -= b; }
    friend TensorSquareElement operator*(const Rational& c, TensorSquareElement e) { return e.scale(c); }

    friend bool operator==(const TensorSquareElement& a, const TensorSquareElement& b) {
        return a.inst_ == b.inst_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            detail::format_term(s, it->second,
                                it->first.first.str(inst_) + " (x) " + it->first.second.str(inst_));
        return s;
    }
};

// Element of the cube; needed for coassociativity and the cocycle checks.
class TensorTripleElement
    : public detail::LinearCombination<std::tuple<TensorWord, TensorWord, TensorWord>> {
public:
    explicit TensorTripleElement(BaseInstance inst)
        : detail::LinearCombination<std::tuple<TensorWord, TensorWord, TensorWord>>(std::move(inst)) {}

    TensorTripleElement& operator+=(const TensorTripleElement& o) { add_all(o, false); return *this; }
    TensorTripleElement& operator-=(const TensorTripleElement& o) { add_all(o, true); return *this; }
    TensorTripleElement& scale(const Rational& c) { scale_all(c); return *this; }

    friend TensorTripleElement operator+(TensorTripleElement a, const TensorTripleElement& b) { return a += b; }
    friend TensorTripleElement operator-(TensorTripleElement a, const TensorTripleElement& b) { return a -= b; }

    friend bool operator==(const TensorTripleElement& a, const TensorTripleElement& b) {
        return a.inst_ == b.inst_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            detail::format_term(s, it->second,
                                std::get<0>(it->first).str(inst_) + " (x) " +
                                std::get<1>(it->first).str(inst_) + " (x) " +
                                std::get<2>(it->first).str(inst_));
        return s;
    }
};

// A word whose slots are whole base elements, before multilinear expansion.
struct RawTerm {
    Rational coeff;
    std::vector<BaseElement> slots;
};

// Multilinear normalization: expand every base-element slot distributively
// into monomial slots, merge coefficients, drop zeros. A zero slot kills
// its term; an empty word is malformed.
inline MrbElement normalize(const BaseInstance& inst, const std::vector<RawTerm>& raw) {
    MrbElement out(inst);
    for (const auto& term : raw) {
        if (term.slots.empty()) throw malformed_word_error("empty tensor word");
        bool dead = false;
        for (const auto& slot : term.slots) {
            require_same_instance(inst, slot.instance());
            if (slot.is_zero()) { dead = true; break; }
        }
        if (dead || term.coeff.is_zero()) continue;

        std::vector<std::pair<std::vector<Monomial>, Rational>> acc{
            {std::vector<Monomial>{}, term.coeff}};
        for (const auto& slot : term.slots) {
            std::vector<std::pair<std::vector<Monomial>, Rational>> next;
            next.reserve(acc.size() * slot.terms().size());
            for (const auto& [prefix, c] : acc) {
                for (const auto& [m, cm] : slot.terms()) {
                    auto slots = prefix;
                    slots.push_back(m);
                    next.emplace_back(std::move(slots), c * cm);
                }
            }
            acc = std::move(next);
        }
        for (auto& [slots, c] : acc) out.add_term(TensorWord(std::move(slots)), c);
    }
    return out;
}

inline int degree(const MrbElement& e) {
    if (e.is_zero())
        throw undefined_degree_error("degree of the zero element is undefined");
    int d = 0;
    for (const auto& [w, c] : e.terms())
        d = std::max(d, degree(e.instance(), w));
    return d;
}

// Zero lies in every filtration level.
inline bool filtration_member(const MrbElement& e, int k) {
    return e.is_zero() || degree(e) <= k;
}

} // namespace mrb
