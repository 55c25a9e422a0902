#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgspec/graph.hpp"
#include "dgspec/spectra.hpp"

namespace dgspec {

inline constexpr std::size_t kDefaultMaxVertices = 4096;

struct CheckOptions {
    double eps = 1e-7;
    // Composite graphs above this order are refused with ResourceError.
    std::size_t max_vertices = kDefaultMaxVertices;
};

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { confirmed, hypothesis_not_met, deviation };

std::string_view to_string(Verdict verdict);

struct Condition {
    std::string name;
    bool met = false;
    std::string detail;
};

// Outcome of checking one statement on one input.
//
// predicted holds the closed form (spectrum or energy values) and computed
// the direct eigencomputation of the same quantities, entry by entry. For
// statements asserting that several graphs share a value, max_abs_deviation
// also covers the spread between the computed sides. Hypothesis failure is
// data: the report is still filled in so near misses can be inspected.
struct TheoremReport {
    std::string theorem_id;
    std::vector<Condition> conditions;
    bool hypotheses_met = true;
    std::vector<double> predicted;
    std::vector<double> computed;
    double max_abs_deviation = 0.0;
    double eps = 0.0;
    Verdict verdict = Verdict::confirmed;
    // Named auxiliary quantities (theta, per-side energies, ...).
    std::map<std::string, double> values;
    // Named observations, e.g. "equality_observed" or "iff_consistent".
    std::map<std::string, bool> flags;
};

// ---------------------------------------------------------------------------
// Closed-form spectral predictors

// {+-(lambda_i + 1)}
Spectrum predict_edc_a_spectrum(const Graph& g);
// {k lambda_i} plus (k-1)n zeros.
Spectrum predict_kfold_a_spectrum(const Graph& g, std::size_t k);
// {mu_i} u {mu_i^+ + 2}
Spectrum predict_edc_l_spectrum(const Graph& g);
// The same rule stated on spectra: the Laplacian spectrum of a cover built
// from a graph with the given Laplacian and signless Laplacian spectra.
Spectrum edc_l_from_spectra(const Spectrum& laplacian, const Spectrum& signless);

// One block of the iterated-cover Laplacian spectrum: every base eigenvalue
// (mu_i, or mu_i^+ when signless) shifted by `shift`, repeated `multiplicity` times.
struct MultiplicityTerm {
    bool signless = false;
    std::size_t shift = 0;
    std::uint64_t multiplicity = 0;

    friend bool operator==(const MultiplicityTerm&, const MultiplicityTerm&) = default;
};

// General graphs: mu + 2r with C(k-1, r) for r = 0..k-1 and mu^+ + 2r with
// C(k-1, r-1) for r = 1..k. Bipartite graphs: mu + 2r with C(k, r).
std::vector<MultiplicityTerm> iterated_edc_l_terms(std::size_t k, bool bipartite);

// Throws ParameterError for k = 0 and ResourceError when 2^k n > max_vertices.
Spectrum predict_iterated_edc_l_spectrum(const Graph& g, std::size_t k, const CheckOptions& opts = {});
// Bipartite shortcut; throws ParameterError when g is not bipartite.
Spectrum predict_iterated_edc_l_spectrum_bipartite(const Graph& g, std::size_t k, const CheckOptions& opts = {});

// {k mu_i} u {k d_i, each k-1 times}
Spectrum predict_kfold_l_spectrum(const Graph& g, std::size_t k);
// Laplacian spectrum of a join; ParameterError if either graph is null.
Spectrum predict_join_l_spectrum(const Graph& a, const Graph& b);

enum class Product { cartesian, kronecker };

// All pairwise sums (cartesian) or products (kronecker) of the chosen
// spectra. kind must be adjacency or laplacian.
Spectrum predict_product_spectrum(const Graph& a, const Graph& b, Product product, MatrixKind kind);
// False for the kronecker/laplacian combination, which holds only for special
// inputs and is exposed for per-instance checking.
bool product_rule_is_exact(Product product, MatrixKind kind);

// ---------------------------------------------------------------------------
// Identity checks

// Compare a predicted spectrum with direct eigencomputation of a built graph.
TheoremReport compare_spectra(std::string theorem_id, const Spectrum& predicted, const Spectrum& computed,
                              std::vector<Condition> conditions, double eps);

enum class EnergyIdentity {
    kfold_scaling,              // E(D^k[G]) = k E(G)
    kronecker_vs_double,        // E(G (x) K_2) = E(D[G])
    kronecker_power_vs_kfold,   // E(G (x) K_2^{(x)s}) = E(D^k[G]) iff k = 2^s
    edc_kronecker_vs_iterated,  // E(G* (x) K_2) = E(G**) = 4 sum|lambda| + 4 theta
    bipartite_edc_vs_double,    // bipartite G: E(G*) = E(D[G]) iff all |lambda_i| >= 1
    edc_closed_form,            // E(G*) = 2 sum |lambda_i + 1|
    product_doubling,           // E((G (x) K_2) x K_2) = 2 E(G x K_2)
};

struct EnergyParams {
    std::size_t k = 2;
    std::size_t s = 1;
};

TheoremReport check_energy_identity(EnergyIdentity id, const Graph& g, const EnergyParams& params = {},
                                    const CheckOptions& opts = {});

// Difference between the counts of nonnegative and negative eigenvalues,
// with |lambda| <= eps counted as nonnegative.
long long signature_difference(const Spectrum& adjacency, double eps);

// Bipartite G: LE(G*) = 2 LE(G) iff min_i |mu_i - 2m/n| >= 1.
TheoremReport check_le_doubling(const Graph& g, const CheckOptions& opts = {});

// LE(D^k[G]) = k LE(G) + k(k-1) sum_i |d_i - 2m/n|.
TheoremReport kfold_le_formula(const Graph& g, std::size_t k, const CheckOptions& opts = {});

enum class CospectralityClaim {
    edc_vs_cartesian_k2,   // G* ~ G x K_2 iff G = K_1 or G bipartite
    iterated_edc,          // G1 ~ G2 iff G1^{k*} ~ G2^{k*}
    bipartite_chain,       // G^{s*}, G^{(s-1)*} x K_2, (G x K_2)^{(s-1)*}, G x Q_s
};

// `other` is required for iterated_edc; k is the iteration depth (or s for
// the chain, k >= 1).
TheoremReport check_cospectrality_family(CospectralityClaim id, const Graph& g, const Graph* other, std::size_t k,
                                         const CheckOptions& opts = {});

// G is Laplacian integral iff G^{k*} is.
TheoremReport check_laplacian_integrality(const Graph& g, std::size_t k, const CheckOptions& opts = {});

// tau(G*) by the spectral formula against the exact cofactor count of the
// built cover. Uses an absolute tolerance of 0.5 (rounding to the integer).
TheoremReport check_edc_spanning_trees(const Graph& g, const CheckOptions& opts = {});

// ---------------------------------------------------------------------------
// Equienergetic families

struct FamilySpec {
    std::string theorem_id;
    // (n, m) of each base graph.
    std::vector<std::pair<std::size_t, std::size_t>> bases;
    std::size_t p = 0;
    std::size_t k = 0;
    std::size_t t = 0;
    std::size_t composite_order = 0;
    // One entry per composite graph: 2m'/n' from the closed expression in
    // (n, m, p, k, t), and the closed-form Laplacian energy.
    std::vector<double> avg_degree_prime;
    std::vector<double> closed_form_le;
};

struct FamilyResult {
    FamilySpec spec;
    TheoremReport report;
};

// G^{t*} v K_p-bar. k is the slack of the hypotheses; when absent it is
// taken as p - 2^t n, the most permissive choice for the given p.
FamilyResult family_join_edc(const Graph& g, std::size_t p, std::size_t t, std::optional<std::size_t> k,
                             const CheckOptions& opts = {});

// D^k[G] v K_p-bar. t is the slack; when absent it is p - kn.
FamilyResult family_join_kfold(const Graph& g, std::size_t p, std::size_t k, std::optional<std::size_t> t,
                               const CheckOptions& opts = {});

enum class MixedFamily {
    double_of_cover_vs_cover_of_double,  // D(G1*) v Kp-bar  vs  D(G2)* v Kp-bar, m2 = m1 + n/4
    double_of_cover_vs_second_cover,     // D(G1*) v Kp-bar  vs  G2** v Kp-bar,  m2 = 2 m1
    double_vs_cover,                     // D[G1] v Kp-bar   vs  G2* v Kp-bar,   4 m1 = 2 m2 + n
};

std::string_view to_string(MixedFamily id);

// k is the slack; when absent it is p - 4n (p - 2n for double_vs_cover).
FamilyResult family_mixed(MixedFamily id, const Graph& g1, const Graph& g2, std::size_t p,
                          std::optional<std::size_t> k, const CheckOptions& opts = {});

// G1* x K_p versus G2* x K_p, including the closed form (p-1) LE(G) + 4pn - 4n.
FamilyResult family_cartesian(const Graph& g1, const Graph& g2, std::size_t p, const CheckOptions& opts = {});

// Compares the two sides of an equienergetic pair built from the same family.
TheoremReport compare_family_pair(const FamilyResult& a, const FamilyResult& b, double eps);

struct FeasibleParams {
    std::size_t p = 0;
    std::size_t k = 0;
    std::size_t t = 0;
};

// Smallest slack satisfying the hypotheses, with p at its minimum for it.
std::optional<FeasibleParams> smallest_feasible_join_edc(const Graph& g, std::size_t t);
std::optional<FeasibleParams> smallest_feasible_join_kfold(const Graph& g, std::size_t k);

struct MixedWitness {
    Graph g1;
    Graph g2;
    std::size_t p = 0;
    std::size_t k = 0;
};

// Builds a partner G2 on the same vertex count with the edge count the family
// requires, and the smallest admissible (p, k). nullopt when no such G2 or
// parameters exist (non-integral or out-of-range edge count, n mod 4, cap).
std::optional<MixedWitness> find_mixed_witness(MixedFamily id, const Graph& g1, const CheckOptions& opts = {});

// ---------------------------------------------------------------------------
// Dispatch by identifier, used by the command-line tool.

struct VerifyParams {
    std::optional<std::size_t> k;
    std::optional<std::size_t> s;
    const Graph* other = nullptr;
};

// Identifiers accepted by verify().
const std::vector<std::string_view>& verify_ids();

// Throws ParameterError for an unknown id or a missing second graph.
TheoremReport verify(std::string_view theorem_id, const Graph& g, const VerifyParams& params,
                     const CheckOptions& opts = {});

}  // namespace dgspec
