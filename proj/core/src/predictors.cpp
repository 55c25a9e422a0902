#include <string>

#include "check_util.hpp"
#include "dgspec/theorems.hpp"

namespace dgspec {

namespace {

std::uint64_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t out = 1;
    for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

Spectrum expand_terms(const std::vector<MultiplicityTerm>& terms, const Spectrum& laplacian, const Spectrum& signless) {
    std::vector<double> v;
    for (const auto& term : terms) {
        const Spectrum& base = term.signless ? signless : laplacian;
        for (std::uint64_t c = 0; c < term.multiplicity; ++c)
            for (double x : base) v.push_back(x + static_cast<double>(term.shift));
    }
    return Spectrum(std::move(v), std::max(laplacian.tol(), signless.tol()));
}

}  // namespace

Spectrum predict_edc_a_spectrum(const Graph& g) {
    const auto lambda = spectrum_of(g, MatrixKind::adjacency);
    std::vector<double> v;
    v.reserve(2 * lambda.size());
    for (double x : lambda) {
        v.push_back(x + 1.0);
        v.push_back(-(x + 1.0));
    }
    return Spectrum(std::move(v), lambda.tol());
}

Spectrum predict_kfold_a_spectrum(const Graph& g, std::size_t k) {
    if (k == 0) throw ParameterError("k-fold prediction needs k >= 1");
    const auto lambda = spectrum_of(g, MatrixKind::adjacency);
    std::vector<double> v((k - 1) * lambda.size(), 0.0);
    for (double x : lambda) v.push_back(static_cast<double>(k) * x);
    return Spectrum(std::move(v), static_cast<double>(k) * lambda.tol());
}

Spectrum edc_l_from_spectra(const Spectrum& laplacian, const Spectrum& signless) {
    if (laplacian.size() != signless.size()) {
        throw ParameterError("Laplacian and signless Laplacian spectra must have the same length");
    }
    std::vector<double> shifted(signless.begin(), signless.end());
    for (double& x : shifted) x += 2.0;
    return laplacian.merged(Spectrum(std::move(shifted), signless.tol()));
}

Spectrum predict_edc_l_spectrum(const Graph& g) {
    return edc_l_from_spectra(spectrum_of(g, MatrixKind::laplacian), spectrum_of(g, MatrixKind::signless_laplacian));
}

std::vector<MultiplicityTerm> iterated_edc_l_terms(std::size_t k, bool bipartite) {
    if (k == 0) throw ParameterError("iterated cover needs k >= 1");
    if (k > 62) throw ParameterError("iteration depth too large for 64-bit multiplicities");
    std::vector<MultiplicityTerm> terms;
    if (bipartite) {
        for (std::size_t r = 0; r <= k; ++r) terms.push_back({false, 2 * r, binomial(k, r)});
        return terms;
    }
    for (std::size_t r = 0; r < k; ++r) terms.push_back({false, 2 * r, binomial(k - 1, r)});
    for (std::size_t r = 1; r <= k; ++r) terms.push_back({true, 2 * r, binomial(k - 1, r - 1)});
    return terms;
}

Spectrum predict_iterated_edc_l_spectrum(const Graph& g, std::size_t k, const CheckOptions& opts) {
    if (k == 0) throw ParameterError("iterated cover needs k >= 1");
    detail::cover_order(g.order(), k, opts, "iterated extended double cover");
    return expand_terms(iterated_edc_l_terms(k, false), spectrum_of(g, MatrixKind::laplacian),
                        spectrum_of(g, MatrixKind::signless_laplacian));
}

Spectrum predict_iterated_edc_l_spectrum_bipartite(const Graph& g, std::size_t k, const CheckOptions& opts) {
    if (k == 0) throw ParameterError("iterated cover needs k >= 1");
    if (!is_bipartite(g)) throw ParameterError("bipartite predictor called on a non-bipartite graph");
    detail::cover_order(g.order(), k, opts, "iterated extended double cover");
    const auto mu = spectrum_of(g, MatrixKind::laplacian);
    return expand_terms(iterated_edc_l_terms(k, true), mu, mu);
}

Spectrum predict_kfold_l_spectrum(const Graph& g, std::size_t k) {
    if (k == 0) throw ParameterError("k-fold prediction needs k >= 1");
    const auto mu = spectrum_of(g, MatrixKind::laplacian);
    const double kd = static_cast<double>(k);
    std::vector<double> v;
    v.reserve(k * g.order());
    for (double x : mu) v.push_back(kd * x);
    for (std::size_t d : g.degrees())
        for (std::size_t c = 1; c < k; ++c) v.push_back(kd * static_cast<double>(d));
    return Spectrum(std::move(v), kd * mu.tol());
}

Spectrum predict_join_l_spectrum(const Graph& a, const Graph& b) {
    const std::size_t n1 = a.order();
    const std::size_t n2 = b.order();
    if (n1 == 0 || n2 == 0) throw ParameterError("join spectrum needs two non-null graphs");
    const auto mu = spectrum_of(a, MatrixKind::laplacian);
    const auto sigma = spectrum_of(b, MatrixKind::laplacian);
    std::vector<double> v{static_cast<double>(n1 + n2), 0.0};
    // Index 0 of each ascending spectrum is the eigenvalue 0 the join absorbs.
    for (std::size_t j = 1; j < n2; ++j) v.push_back(static_cast<double>(n1) + sigma[j]);
    for (std::size_t i = 1; i < n1; ++i) v.push_back(static_cast<double>(n2) + mu[i]);
    return Spectrum(std::move(v), std::max(mu.tol(), sigma.tol()));
}

bool product_rule_is_exact(Product product, MatrixKind kind) {
    return !(product == Product::kronecker && kind == MatrixKind::laplacian);
}

Spectrum predict_product_spectrum(const Graph& a, const Graph& b, Product product, MatrixKind kind) {
    if (kind == MatrixKind::signless_laplacian) {
        throw ParameterError("product spectra are predicted for adjacency and Laplacian matrices only");
    }
    const auto s1 = spectrum_of(a, kind);
    const auto s2 = spectrum_of(b, kind);
    std::vector<double> v;
    v.reserve(s1.size() * s2.size());
    for (double x : s1)
        for (double y : s2) v.push_back(product == Product::cartesian ? x + y : x * y);
    return Spectrum(std::move(v), std::max(s1.tol(), s2.tol()));
}

}  // namespace dgspec
