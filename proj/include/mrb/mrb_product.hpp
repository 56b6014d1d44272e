#pragma once

#include <map>
#include <utility>

#include "mrb/tensor_space.hpp"

namespace mrb {

// Product context: base instance plus the weight kappa. The recursion on
// word pairs revisits subproblems, so pure-word products are memoized per
// context; exact arithmetic makes the cache sound. One context must not be
// shared across threads while products are being computed.
class MrbAlgebraContext {
public:
    MrbAlgebraContext(BaseInstance inst, Rational kappa)
        : inst_(std::move(inst)), kappa_(std::move(kappa)) {}

    const BaseInstance& instance() const { return inst_; }
    const Rational& kappa() const { return kappa_; }

    // The four-case recursion on pure tensors. With a = a0 (x) a', b = b0 (x) b':
    //   len 1 * len 1:  a0*b0
    //   len>1 * len 1:  (a0*b0) (x) a'
    //   len 1 * len>1:  (a0*b0) (x) b'
    //   otherwise:      (a0*b0) (x) ((1 (x) a') * b')
    //                 + (a0*b0) (x) (a' * (1 (x) b'))
    //                 + kappa * (a0*b0).(a' * b')
    // where the last term multiplies a0*b0 into the first slot, the same
    // base action as the boundary cases.
    const MrbElement& diamond_words(const TensorWord& a, const TensorWord& b) const {
        auto key = std::make_pair(a, b);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        MrbElement out(inst_);
        const size_t m = a.length() - 1;
        const size_t n = b.length() - 1;
        const Monomial h = a.head() * b.head();

        if (m == 0 && n == 0) {
            out.add_term(TensorWord({h}), Rational(1));
        } else if (n == 0) {
            out.add_term(a.mul_head(b.head()), Rational(1));
        } else if (m == 0) {
            out.add_term(b.mul_head(a.head()), Rational(1));
        } else {
            const TensorWord at = a.tail();
            const TensorWord bt = b.tail();
            const MrbElement& left = diamond_words(at.prepend(Monomial()), bt);
            const MrbElement& right = diamond_words(at, bt.prepend(Monomial()));
            const MrbElement& inner = diamond_words(at, bt);
            for (const auto& [w, c] : left.terms()) out.add_term(w.prepend(h), c);
            for (const auto& [w, c] : right.terms()) out.add_term(w.prepend(h), c);
            if (!kappa_.is_zero())
                for (const auto& [w, c] : inner.terms()) out.add_term(w.mul_head(h), kappa_ * c);
        }

        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    BaseInstance inst_;
    Rational kappa_;
    mutable std::map<std::pair<TensorWord, TensorWord>, MrbElement> memo_;
};

// The modified quasi-shuffle product, extended biadditively.
inline MrbElement diamond(const MrbElement& a, const MrbElement& b,
                          const MrbAlgebraContext& ctx) {
    require_same_instance(a.instance(), ctx.instance());
    require_same_instance(b.instance(), ctx.instance());
    MrbElement out(ctx.instance());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            const Rational c = ca * cb;
            for (const auto& [w, cw] : ctx.diamond_words(wa, wb).terms())
                out.add_term(w, c * cw);
        }
    }
    return out;
}

// The distinguished operator: prepend a unit slot to every word.
inline MrbElement operator_P(const MrbElement& a) {
    MrbElement out(a.instance());
    for (const auto& [w, c] : a.terms()) out.add_term(w.prepend(Monomial()), c);
    return out;
}

} // namespace mrb
