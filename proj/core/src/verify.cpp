#include <algorithm>
#include <string>

#include "check_util.hpp"
#include "dgspec/theorems.hpp"

namespace dgspec {

namespace {

const Graph& require_other(const VerifyParams& params, std::string_view id) {
    if (params.other == nullptr) throw ParameterError("theorem " + std::string(id) + " needs a second graph");
    return *params.other;
}

TheoremReport spectral(std::string id, const Spectrum& predicted, const Graph& built, MatrixKind kind,
                       std::vector<Condition> conditions, const CheckOptions& opts) {
    return compare_spectra(std::move(id), predicted, spectrum_of(built, kind), std::move(conditions), opts.eps);
}

}  // namespace

const std::vector<std::string_view>& verify_ids() {
    static const std::vector<std::string_view> ids = {
        "2.1", "2.2", "2.3", "2.4", "2.5", "2.6", "2.7", "2.8", "2.9", "edc-energy", "kfold-energy",
        "product-doubling", "3.2", "3.3", "3.4", "3.5", "3.6", "3.7", "3.8", "chain", "4.1", "4.2", "kfold-le"};
    return ids;
}

TheoremReport verify(std::string_view id, const Graph& g, const VerifyParams& params, const CheckOptions& opts) {
    detail::check_eps(opts.eps);
    const std::size_t n = g.order();
    const std::size_t k = params.k.value_or(2);

    if (id == "2.1") {
        const Graph& h = require_other(params, id);
        detail::require_order(n * h.order(), opts, "cartesian product");
        const Graph prod = cartesian_product(g, h);
        auto r = spectral("2.1", predict_product_spectrum(g, h, Product::cartesian, MatrixKind::laplacian), prod,
                          MatrixKind::laplacian, {}, opts);
        const double dev_a = max_abs_deviation(predict_product_spectrum(g, h, Product::cartesian, MatrixKind::adjacency),
                                               spectrum_of(prod, MatrixKind::adjacency));
        r.values["deviation_adjacency"] = dev_a;
        r.values["deviation_laplacian"] = r.max_abs_deviation;
        detail::finalize(r, dev_a);
        return r;
    }
    if (id == "2.2") {
        const Graph& h = require_other(params, id);
        detail::require_order(n * h.order(), opts, "Kronecker product");
        return spectral("2.2", predict_product_spectrum(g, h, Product::kronecker, MatrixKind::adjacency),
                        kronecker_product(g, h), MatrixKind::adjacency, {}, opts);
    }
    if (id == "2.3") {
        const Graph& h = require_other(params, id);
        detail::require_order(n + h.order(), opts, "join");
        return spectral("2.3", predict_join_l_spectrum(g, h), join(g, h), MatrixKind::laplacian, {}, opts);
    }
    if (id == "2.4") {
        detail::require_order(2 * n, opts, "extended double cover");
        return spectral("2.4", predict_edc_a_spectrum(g), extended_double_cover(g), MatrixKind::adjacency, {}, opts);
    }
    if (id == "2.5") {
        if (k == 0) throw ParameterError("k-fold graph needs k >= 1");
        detail::require_order(k * n, opts, "k-fold graph");
        return spectral("2.5", predict_kfold_a_spectrum(g, k), k_fold(g, k), MatrixKind::adjacency, {}, opts);
    }
    if (id == "kfold-energy") return check_energy_identity(EnergyIdentity::kfold_scaling, g, {k, 1}, opts);
    if (id == "2.6") return check_energy_identity(EnergyIdentity::kronecker_vs_double, g, {}, opts);
    if (id == "2.7") {
        return check_energy_identity(EnergyIdentity::kronecker_power_vs_kfold, g, {k, params.s.value_or(1)}, opts);
    }
    if (id == "2.8") return check_energy_identity(EnergyIdentity::edc_kronecker_vs_iterated, g, {}, opts);
    if (id == "2.9") return check_energy_identity(EnergyIdentity::bipartite_edc_vs_double, g, {}, opts);
    if (id == "edc-energy") return check_energy_identity(EnergyIdentity::edc_closed_form, g, {}, opts);
    if (id == "product-doubling") return check_energy_identity(EnergyIdentity::product_doubling, g, {}, opts);
    if (id == "3.2") {
        detail::require_order(2 * n, opts, "extended double cover");
        return spectral("3.2", predict_edc_l_spectrum(g), extended_double_cover(g), MatrixKind::laplacian, {}, opts);
    }
    if (id == "3.3") {
        const auto predicted = predict_iterated_edc_l_spectrum(g, k, opts);
        return spectral("3.3", predicted, iterated_edc(g, k), MatrixKind::laplacian, {}, opts);
    }
    if (id == "3.4") {
        const bool bipartite = is_bipartite(g);
        const auto predicted = bipartite ? predict_iterated_edc_l_spectrum_bipartite(g, k, opts)
                                         : predict_iterated_edc_l_spectrum(g, k, opts);
        return spectral("3.4", predicted, iterated_edc(g, k), MatrixKind::laplacian, {{"bipartite", bipartite, ""}},
                        opts);
    }
    if (id == "3.5") return check_edc_spanning_trees(g, opts);
    if (id == "3.6") return check_cospectrality_family(CospectralityClaim::edc_vs_cartesian_k2, g, nullptr, 1, opts);
    if (id == "3.7") return check_laplacian_integrality(g, params.k.value_or(1), opts);
    if (id == "3.8") {
        return check_cospectrality_family(CospectralityClaim::iterated_edc, g, &require_other(params, id),
                                          params.k.value_or(1), opts);
    }
    if (id == "chain") {
        return check_cospectrality_family(CospectralityClaim::bipartite_chain, g, nullptr,
                                          params.s.value_or(params.k.value_or(2)), opts);
    }
    if (id == "4.1") {
        if (k == 0) throw ParameterError("k-fold graph needs k >= 1");
        detail::require_order(k * n, opts, "k-fold graph");
        return spectral("4.1", predict_kfold_l_spectrum(g, k), k_fold(g, k), MatrixKind::laplacian, {}, opts);
    }
    if (id == "4.2") return check_le_doubling(g, opts);
    if (id == "kfold-le") return kfold_le_formula(g, k, opts);
    throw ParameterError("unknown theorem id '" + std::string(id) + "'");
}

}  // namespace dgspec
