#include "dgspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "dgspec/errors.hpp"

namespace dgspec {

namespace {

constexpr double kSymmetryTolerance = 1e-12;

Eigen::MatrixXd to_eigen(const SymMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.order());
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return out;
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return "adjacency";
        case MatrixKind::laplacian: return "laplacian";
        case MatrixKind::signless_laplacian: return "signless_laplacian";
    }
    return "unknown";
}

SymMatrix::SymMatrix(std::size_t order) : order_(order), entries_(order * order, 0.0) {}

SymMatrix::SymMatrix(std::size_t order, std::vector<double> row_major)
    : order_(order), entries_(std::move(row_major)) {
    if (entries_.size() != order_ * order_) {
        throw ContractViolation("symmetric matrix of order " + std::to_string(order_) + " needs " +
                                std::to_string(order_ * order_) + " entries, got " + std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = i + 1; j < order_; ++j) {
            const double a = entries_[i * order_ + j];
            const double b = entries_[j * order_ + i];
            if (!(std::abs(a - b) <= kSymmetryTolerance)) {
                throw ContractViolation("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) +
                                        ")");
            }
        }
    }
}

double SymMatrix::max_abs_entry() const noexcept {
    double best = 0.0;
    for (double x : entries_) best = std::max(best, std::abs(x));
    return best;
}

SymMatrix matrix_of(const Graph& g, MatrixKind kind) {
    const std::size_t n = g.order();
    std::vector<double> m(n * n, 0.0);
    const double off = kind == MatrixKind::laplacian ? -1.0 : 1.0;
    for (const auto& e : g.edges()) {
        m[e.u * n + e.v] = off;
        m[e.v * n + e.u] = off;
    }
    if (kind != MatrixKind::adjacency) {
        for (std::size_t v = 0; v < n; ++v) m[v * n + v] = static_cast<double>(g.degree(static_cast<Vertex>(v)));
    }
    return SymMatrix(n, std::move(m));
}

// ---------------------------------------------------------------------------

Spectrum::Spectrum(std::vector<double> values, double tol) : values_(std::move(values)), tol_(tol) {
    if (tol_ < 0.0) throw ParameterError("spectrum tolerance must be nonnegative");
    std::sort(values_.begin(), values_.end());
}

Spectrum Spectrum::merged(const Spectrum& other) const {
    std::vector<double> v(values_);
    v.insert(v.end(), other.values_.begin(), other.values_.end());
    return Spectrum(std::move(v), std::max(tol_, other.tol_));
}

double default_tolerance(const SymMatrix& m) { return 1e-8 * std::max(1.0, m.max_abs_entry()); }

Spectrum eigenvalues(const SymMatrix& m) {
    if (m.order() == 0) return Spectrum({}, default_tolerance(m));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ContractViolation("symmetric eigensolver did not converge");
    }
    const auto& ev = solver.eigenvalues();
    return Spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()), default_tolerance(m));
}

EigenDecomposition eigen_decomposition(const SymMatrix& m) {
    EigenDecomposition out;
    if (m.order() == 0) {
        out.values = Spectrum({}, default_tolerance(m));
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw ContractViolation("symmetric eigensolver did not converge");
    }
    const auto& ev = solver.eigenvalues();
    out.values = Spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()), default_tolerance(m));
    const auto& q = solver.eigenvectors();
    out.vectors.assign(q.data(), q.data() + q.size());
    return out;
}

double EigenDecomposition::reconstruction_residual(const SymMatrix& m) const {
    const std::size_t n = m.order();
    if (values.size() != n || vectors.size() != n * n) {
        throw ContractViolation("decomposition does not match the matrix order");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += vectors[k * n + i] * values[k] * vectors[k * n + j];
            worst = std::max(worst, std::abs(acc - m(i, j)));
        }
    }
    return worst;
}

Spectrum spectrum_of(const Graph& g, MatrixKind kind) { return eigenvalues(matrix_of(g, kind)); }

bool spectra_equal(const Spectrum& a, const Spectrum& b, double eps) {
    if (eps < 0.0) throw ParameterError("eps must be nonnegative");
    return max_abs_deviation(a, b) <= eps;
}

double max_abs_deviation(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

bool is_cospectral(const Graph& a, const Graph& b, MatrixKind kind, double eps) {
    return spectra_equal(spectrum_of(a, kind), spectrum_of(b, kind), eps);
}

bool is_laplacian_integral(const Graph& g, double eps) {
    if (eps < 0.0) throw ParameterError("eps must be nonnegative");
    const auto s = spectrum_of(g, MatrixKind::laplacian);
    return std::all_of(s.begin(), s.end(), [eps](double x) { return std::abs(x - std::round(x)) <= eps; });
}

// ---------------------------------------------------------------------------

double average_degree(const Graph& g) {
    if (g.order() == 0) throw UndefinedAverageError("average degree 2m/n is undefined for the null graph");
    return 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
}

double absolute_sum(const Spectrum& s) {
    return std::accumulate(s.begin(), s.end(), 0.0, [](double acc, double x) { return acc + std::abs(x); });
}

double deviation_sum(const Spectrum& s, double center) {
    return std::accumulate(s.begin(), s.end(), 0.0,
                           [center](double acc, double x) { return acc + std::abs(x - center); });
}

EnergyValue energy(const Graph& g) {
    return {absolute_sum(spectrum_of(g, MatrixKind::adjacency)), MatrixKind::adjacency, std::nullopt};
}

EnergyValue laplacian_energy(const Graph& g) {
    const double avg = average_degree(g);
    return {deviation_sum(spectrum_of(g, MatrixKind::laplacian), avg), MatrixKind::laplacian, avg};
}

EnergyValue signless_laplacian_energy(const Graph& g) {
    const double avg = average_degree(g);
    return {deviation_sum(spectrum_of(g, MatrixKind::signless_laplacian), avg), MatrixKind::signless_laplacian, avg};
}

// ---------------------------------------------------------------------------

double spanning_trees_eigen(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) throw ParameterError("spanning trees are undefined for the null graph");
    if (n == 1) return 1.0;
    if (!is_connected(g)) return 0.0;
    const auto mu = spectrum_of(g, MatrixKind::laplacian);
    double product = 1.0;
    for (std::size_t i = 1; i < n; ++i) product *= mu[i];
    return product / static_cast<double>(n);
}

BigInt integer_determinant(std::span<const long long> row_major, std::size_t order) {
    if (row_major.size() != order * order) throw ParameterError("determinant needs a square matrix");
    std::vector<BigInt> a(row_major.begin(), row_major.end());
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * order + j]; };

    BigInt previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k < order; ++k) {
        if (at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < order && at(pivot, k) == 0) ++pivot;
            if (pivot == order) return 0;
            for (std::size_t j = 0; j < order; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < order; ++i) {
            for (std::size_t j = k + 1; j < order; ++j) {
                // Exact: Sylvester's identity guarantees divisibility.
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / previous;
            }
            at(i, k) = 0;
        }
        previous = at(k, k);
    }
    if (order == 0) return 1;
    return sign * at(order - 1, order - 1);
}

BigInt spanning_trees_exact(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) throw ParameterError("spanning trees are undefined for the null graph");
    const std::size_t r = n - 1;
    std::vector<long long> minor(r * r, 0);
    for (const auto& e : g.edges()) {
        if (e.u < r && e.v < r) {
            minor[e.u * r + e.v] = -1;
            minor[e.v * r + e.u] = -1;
        }
    }
    for (std::size_t v = 0; v < r; ++v) minor[v * r + v] = static_cast<long long>(g.degree(static_cast<Vertex>(v)));
    return integer_determinant(minor, r);
}

EdcTreeFormula edc_spanning_trees_formula(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) throw ParameterError("spanning trees are undefined for the null graph");
    EdcTreeFormula out;
    out.base_trees = spanning_trees_exact(g);
    const double tau = out.base_trees.convert_to<double>();

    const auto q = spectrum_of(g, MatrixKind::signless_laplacian);
    double product = 1.0;
    for (double x : q) product *= x + 2.0;
    out.value = 0.5 * tau * product;

    if (is_bipartite(g)) {
        const auto mu = spectrum_of(g, MatrixKind::laplacian);
        double p = 1.0;
        for (std::size_t i = 1; i < n; ++i) p *= mu[i] + 2.0;
        out.bipartite_form = tau * p;
    }
    return out;
}

}  // namespace dgspec
