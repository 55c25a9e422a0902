#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dgspec/graph.hpp"

namespace dgspec {

using BigInt = boost::multiprecision::cpp_int;

enum class MatrixKind { adjacency, laplacian, signless_laplacian };

std::string_view to_string(MatrixKind kind);

// Dense real symmetric matrix, row-major. Construction rejects any pair of
// mirrored entries that differ by more than 1e-12 with ContractViolation.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t order);
    SymMatrix(std::size_t order, std::vector<double> row_major);

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    std::span<const double> data() const noexcept { return entries_; }
    double max_abs_entry() const noexcept;

private:
    std::size_t order_ = 0;
    std::vector<double> entries_;
};

// A(G), L(G) = D - A or L+(G) = D + A.
SymMatrix matrix_of(const Graph& g, MatrixKind kind);

// Eigenvalue multiset, always sorted ascending. tol is the comparison
// tolerance suggested by whoever produced it (0 for hand-written spectra).
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values, double tol = 0.0);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    double operator[](std::size_t i) const { return values_[i]; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }
    double tol() const noexcept { return tol_; }

    // Multiset union; the tolerance is the larger of the two.
    Spectrum merged(const Spectrum& other) const;

private:
    std::vector<double> values_;
    double tol_ = 0.0;
};

// 1e-8 * max(1, max|m_ij|).
double default_tolerance(const SymMatrix& m);

// Full ascending spectrum of a symmetric matrix (Householder
// tridiagonalization followed by implicit-shift QR). Deterministic.
Spectrum eigenvalues(const SymMatrix& m);

struct EigenDecomposition {
    Spectrum values;
    // Column-major orthonormal eigenvectors, column j pairs with values[j].
    std::vector<double> vectors;

    // max |M - Q diag(values) Q^T|, entrywise.
    double reconstruction_residual(const SymMatrix& m) const;
};

EigenDecomposition eigen_decomposition(const SymMatrix& m);

Spectrum spectrum_of(const Graph& g, MatrixKind kind);

// True iff same length and |a_i - b_i| <= eps elementwise after sorting.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double eps);
// max_i |a_i - b_i|; +infinity when the lengths differ.
double max_abs_deviation(const Spectrum& a, const Spectrum& b);

bool is_cospectral(const Graph& a, const Graph& b, MatrixKind kind, double eps);
bool is_laplacian_integral(const Graph& g, double eps);

// ---------------------------------------------------------------------------
// Energies

struct EnergyValue {
    double value = 0.0;
    MatrixKind kind = MatrixKind::adjacency;
    // 2m/n; present only for the Laplacian kinds.
    std::optional<double> avg_degree;
};

// 2m/n. Throws UndefinedAverageError for n = 0.
double average_degree(const Graph& g);

double absolute_sum(const Spectrum& s);
double deviation_sum(const Spectrum& s, double center);

EnergyValue energy(const Graph& g);
EnergyValue laplacian_energy(const Graph& g);
EnergyValue signless_laplacian_energy(const Graph& g);

// ---------------------------------------------------------------------------
// Spanning trees

// (1/n) * product of the n-1 largest Laplacian eigenvalues; exactly 0 for
// disconnected graphs, 1 for K_1. Throws ParameterError for n = 0.
double spanning_trees_eigen(const Graph& g);

// Matrix-tree cofactor evaluated exactly with fraction-free elimination.
BigInt spanning_trees_exact(const Graph& g);

// Exact determinant of a square integer matrix (row-major) by Bareiss
// elimination with row pivoting.
BigInt integer_determinant(std::span<const long long> row_major, std::size_t order);

struct EdcTreeFormula {
    // tau(G*) = tau(G)/2 * prod_i (mu_i^+ + 2)
    double value = 0.0;
    // tau(G) * prod_{i<n} (mu_i + 2) over the n-1 largest mu_i; bipartite G only.
    std::optional<double> bipartite_form;
    BigInt base_trees;
};

EdcTreeFormula edc_spanning_trees_formula(const Graph& g);

}  // namespace dgspec
