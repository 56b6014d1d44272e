#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mrb/tensor_space.hpp"

namespace mrb {

// Seeded source of random algebra elements for the sampling-based checks
// and property tests. mt19937_64 with explicit modulo mapping keeps the
// streams identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // Inclusive range.
    int range(int lo, int hi) {
        return lo + static_cast<int>(eng_() % static_cast<uint64_t>(hi - lo + 1));
    }

    uint64_t raw() { return eng_(); }

    Rational coefficient(int lo = -5, int hi = 5, bool nonzero = true) {
        int v = range(lo, hi);
        while (nonzero && v == 0) v = range(lo, hi);
        return Rational(v);
    }

    Monomial monomial(const BaseInstance& inst, int max_degree) {
        switch (inst.kind()) {
        case BaseKind::trivial:
            return Monomial();
        case BaseKind::laurent:
            return Monomial::generator(inst.alphabet().front(), range(-max_degree, max_degree));
        case BaseKind::polynomial: {
            std::map<std::string, int> exps;
            int budget = range(0, max_degree);
            for (int i = 0; i < budget; ++i) {
                const auto& name = inst.alphabet()[static_cast<size_t>(
                    range(0, static_cast<int>(inst.alphabet().size()) - 1))];
                ++exps[name];
            }
            return Monomial::from_exponents(exps);
        }
        }
        return Monomial();
    }

    BaseElement base_element(const BaseInstance& inst, int max_terms, int max_degree,
                             bool nonzero = true) {
        BaseElement out(inst);
        int terms = range(nonzero ? 1 : 0, max_terms);
        for (int i = 0; i < terms; ++i)
            out.add_term(monomial(inst, max_degree), coefficient());
        if (nonzero && out.is_zero())
            out.add_term(Monomial(), coefficient());
        return out;
    }

    TensorWord word(const BaseInstance& inst, int max_len, int max_slot_degree) {
        int len = range(1, max_len);
        std::vector<Monomial> slots;
        slots.reserve(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) slots.push_back(monomial(inst, max_slot_degree));
        return TensorWord(std::move(slots));
    }

    // Word with filtration degree at most `bound` (exactly budgeted).
    TensorWord word_of_degree_at_most(const BaseInstance& inst, int bound) {
        int len = range(1, bound + 1);
        int budget = bound - (len - 1);
        std::vector<Monomial> slots;
        slots.reserve(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) {
            int d = inst.kind() == BaseKind::trivial ? 0 : range(0, budget);
            slots.push_back(monomial(inst, d));
            budget -= monomial_degree(inst, slots.back());
        }
        return TensorWord(std::move(slots));
    }

    MrbElement element(const BaseInstance& inst, int max_words, int max_len,
                       int max_slot_degree) {
        MrbElement out(inst);
        int words = range(1, max_words);
        for (int i = 0; i < words; ++i)
            out.add_term(word(inst, max_len, max_slot_degree), coefficient());
        if (out.is_zero()) out.add_term(TensorWord::unit(), Rational(1));
        return out;
    }

    MrbElement element_of_degree_at_most(const BaseInstance& inst, int max_words, int bound) {
        MrbElement out(inst);
        int words = range(1, max_words);
        for (int i = 0; i < words; ++i)
            out.add_term(word_of_degree_at_most(inst, bound), coefficient());
        if (out.is_zero()) out.add_term(TensorWord::unit(), Rational(1));
        return out;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace mrb
