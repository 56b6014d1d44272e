#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mrb/mrb_product.hpp"

namespace mrb {

// A pair (phi, psi) of order-preserving injections [m] -> [m+n-r] and
// [n] -> [m+n-r] whose images jointly cover [m+n-r]; r is forced to be
// the size of the image overlap. Values are 1-based, phi[k-1] = phi(k).
struct InjectionPair {
    int m = 0, n = 0, r = 0;
    std::vector<int> phi;
    std::vector<int> psi;

    InjectionPair(int m_, int n_, int r_, std::vector<int> phi_, std::vector<int> psi_)
        : m(m_), n(n_), r(r_), phi(std::move(phi_)), psi(std::move(psi_)) {
        validate();
    }

    void validate() const {
        if (m < 1 || n < 1 || r < 0 || r > std::min(m, n))
            throw invalid_input_error("injection pair parameters out of range");
        const int cover = m + n - r;
        auto check_map = [cover](const std::vector<int>& f, int domain) {
            if (static_cast<int>(f.size()) != domain)
                throw invalid_input_error("injection domain size mismatch");
            for (int i = 0; i < domain; ++i) {
                if (f[i] < 1 || f[i] > cover)
                    throw invalid_input_error("injection value out of range");
                if (i > 0 && f[i] <= f[i - 1])
                    throw invalid_input_error("map is not strictly increasing");
            }
        };
        check_map(phi, m);
        check_map(psi, n);
        std::vector<char> covered(static_cast<size_t>(cover) + 1, 0);
        int overlap = 0;
        for (int v : phi) covered[v] = 1;
        for (int v : psi) {
            if (covered[v]) ++overlap;
            covered[v] = 1;
        }
        for (int s = 1; s <= cover; ++s)
            if (!covered[s]) throw invalid_input_error("images do not cover the codomain");
        if (overlap != r)
            throw invalid_input_error("image overlap does not equal r");
    }
};

// Overlapping degrees and the deflated maps into {0} u [m+n-2r]:
//   d_phi[k-1] = |phi([k]) n im(psi)|,   phi_tilde(k) = phi(k) - d_phi(k)
// and symmetrically for psi.
struct DeflationTables {
    std::vector<int> d_phi;
    std::vector<int> d_psi;
    std::vector<int> phi_tilde;
    std::vector<int> psi_tilde;
};

inline DeflationTables deflate(const InjectionPair& p) {
    DeflationTables t;
    t.d_phi.resize(p.phi.size());
    t.d_psi.resize(p.psi.size());
    t.phi_tilde.resize(p.phi.size());
    t.psi_tilde.resize(p.psi.size());

    auto in_image = [](const std::vector<int>& f, int v) {
        return std::binary_search(f.begin(), f.end(), v);
    };
    int d = 0;
    for (size_t k = 0; k < p.phi.size(); ++k) {
        if (in_image(p.psi, p.phi[k])) ++d;
        t.d_phi[k] = d;
        t.phi_tilde[k] = p.phi[k] - d;
    }
    d = 0;
    for (size_t l = 0; l < p.psi.size(); ++l) {
        if (in_image(p.phi, p.psi[l])) ++d;
        t.d_psi[l] = d;
        t.psi_tilde[l] = p.psi[l] - d;
    }
    return t;
}

namespace detail {

// All size-k subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace detail

// All of J_{m,n,r}, in lexicographic order of (im phi, im psi). An
// order-preserving injection is determined by its image, so we enumerate
// im(phi) directly and complete im(psi) as mandatory-complement u overlap;
// this never generates a candidate that fails the cover condition.
inline std::vector<InjectionPair> enumerate_J(int m, int n, int r) {
    if (m < 1 || n < 1)
        throw invalid_input_error("enumerate_J needs m, n >= 1");
    if (r < 0 || r > std::min(m, n))
        throw invalid_input_error("enumerate_J: r out of range");
    const int cover = m + n - r;
    std::vector<InjectionPair> out;
    for (const auto& phi : detail::subsets(cover, m)) {
        std::vector<int> complement;
        complement.reserve(cover - m);
        for (int s = 1, i = 0; s <= cover; ++s) {
            while (i < m && phi[i] < s) ++i;
            if (i >= m || phi[i] != s) complement.push_back(s);
        }
        // im(psi) = complement u T for each size-r subset T of im(phi).
        for (const auto& pick : detail::subsets(m, r)) {
            std::vector<int> psi = complement;
            for (int idx : pick) psi.push_back(phi[idx - 1]);
            std::sort(psi.begin(), psi.end());
            out.emplace_back(m, n, r, phi, std::move(psi));
        }
    }
    std::sort(out.begin(), out.end(), [](const InjectionPair& a, const InjectionPair& b) {
        if (a.phi != b.phi) return a.phi < b.phi;
        return a.psi < b.psi;
    });
    return out;
}

// The per-pair product: with c_s the product of the a_i with
// phi_tilde(i) = s and the b_j with psi_tilde(j) = s,
//   a *_{(phi,psi)} b = (a0*b0*c_0) (x) c_1 (x) ... (x) c_{m+n-2r}
// (empty products are 1). The result has length m+n-2r+1.
inline TensorWord stuffle_pair_product(const TensorWord& a, const TensorWord& b,
                                       const InjectionPair& p) {
    if (a.length() != static_cast<size_t>(p.m) + 1 || b.length() != static_cast<size_t>(p.n) + 1)
        throw invalid_input_error("word lengths do not match the injection pair");
    const DeflationTables t = deflate(p);
    std::vector<Monomial> c(static_cast<size_t>(p.m + p.n - 2 * p.r) + 1);
    for (int k = 1; k <= p.m; ++k)
        c[t.phi_tilde[k - 1]] = c[t.phi_tilde[k - 1]] * a.slot(k);
    for (int l = 1; l <= p.n; ++l)
        c[t.psi_tilde[l - 1]] = c[t.psi_tilde[l - 1]] * b.slot(l);
    c[0] = a.head() * b.head() * c[0];
    return TensorWord(std::move(c));
}

namespace detail {

inline MrbElement stuffle_words(const TensorWord& a, const TensorWord& b,
                                const MrbAlgebraContext& ctx) {
    MrbElement out(ctx.instance());
    const int m = static_cast<int>(a.length()) - 1;
    const int n = static_cast<int>(b.length()) - 1;
    if (m == 0) {
        out.add_term(b.mul_head(a.head()), Rational(1));
        return out;
    }
    if (n == 0) {
        out.add_term(a.mul_head(b.head()), Rational(1));
        return out;
    }
    Rational weight(1);
    for (int r = 0; r <= std::min(m, n); ++r) {
        if (!weight.is_zero())
            for (const auto& p : enumerate_J(m, n, r))
                out.add_term(stuffle_pair_product(a, b, p), weight);
        weight *= ctx.kappa();
    }
    return out;
}

} // namespace detail

// The explicit expansion sum_r kappa^r sum_{(phi,psi)} a *_{(phi,psi)} b,
// extended bilinearly. Coincides with the recursive diamond product; the
// verification suites test that equivalence.
inline MrbElement stuffle_product(const MrbElement& a, const MrbElement& b,
                                  const MrbAlgebraContext& ctx) {
    require_same_instance(a.instance(), ctx.instance());
    require_same_instance(b.instance(), ctx.instance());
    MrbElement out(ctx.instance());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            const Rational c = ca * cb;
            for (const auto& [w, cw] : detail::stuffle_words(wa, wb, ctx).terms())
                out.add_term(w, c * cw);
        }
    }
    return out;
}

// Closed form of u_m * u_n over the trivial base:
//   sum_{r=0}^{min(m,n)} C(m+n-r, m) C(m, r) kappa^r u_{m+n-2r}.
inline MrbElement closed_form_trivial(int m, int n, const MrbAlgebraContext& ctx) {
    if (ctx.instance().kind() != BaseKind::trivial)
        throw instance_mismatch_error("closed form is defined over the trivial base");
    if (m < 0 || n < 0) throw invalid_input_error("closed_form_trivial needs m, n >= 0");
    MrbElement out(ctx.instance());
    Rational weight(1);
    for (int r = 0; r <= std::min(m, n); ++r) {
        out.add_term(TensorWord::u(m + n - 2 * r),
                     Rational(binomial(m + n - r, m) * binomial(m, r)) * weight);
        weight *= ctx.kappa();
    }
    return out;
}

} // namespace mrb
