#ifndef EXTREMAL_SPECTRAL_HPP
#define EXTREMAL_SPECTRAL_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "extremal/errors.hpp"
#include "extremal/graph.hpp"

namespace extremal {

inline constexpr double default_solver_tol = 1e-12;
/// Slack applied on each side of the printed eigenvalue windows.
inline constexpr double theorem_slack = 1e-9;
/// Maximum gap between the two copies of an eigenvalue produced by the real
/// embedding of a Hermitian block.
inline constexpr double pairing_tol = 1e-9;

/// Eigenvalues sorted in descending order plus solver metadata.
struct Spectrum
{
    std::vector<double> values;
    double tol = default_solver_tol;
    std::string solver;
    std::optional<FamilyParams> params;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Eigenvalues of a real symmetric matrix, descending.
template <typename Derived>
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixBase<Derived>& a)
{
    using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>;
    if (a.rows() == 0)
        return {};
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.derived().template cast<double>(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw solver_failure("symmetric eigensolver did not converge on a " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " matrix");
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Eigenvalues of a complex Hermitian matrix H = A + iB, computed through
/// the real symmetric embedding [[A, -B], [B, A]] whose spectrum is that of
/// H with every multiplicity doubled. Descending.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h);

Spectrum eigenvalues_dense(const Graph& g, double tol = default_solver_tol);

/// b_0, ..., b_2m: the (d+1)x(d+1) blocks of the block-circulant adjacency
/// matrix of the extremal graph. Row block p, column block q holds b_{q-p mod 2m+1}.
std::vector<Eigen::MatrixXd> blocks_of(int m, int d);

Eigen::MatrixXd assemble_block_circulant(std::span<const Eigen::MatrixXd> blocks);

struct HermitianBlock
{
    int zeta_index = 0; ///< t in [1, n]; zeta = exp(2 pi i t / n)
    Eigen::MatrixXcd entries;
};

/// H_zeta = sum_k zeta^k b_k with zeta = exp(2 pi i t / blocks.size()).
HermitianBlock hermitian_block(std::span<const Eigen::MatrixXd> blocks, int t);

/// Union over all roots of unity of the spectra of H_zeta, descending.
Spectrum eigenvalues_block_circulant(int m, int d, double tol = default_solver_tol);

struct EigenvalueWindow
{
    double lower = 0.0;
    double upper = 0.0;
};

/// [d - (2m+1)/(d+1), d - (2m+1)/(d+3)): the second-eigenvalue window.
EigenvalueWindow lambda2_window(int m, int d);

/// Second largest adjacency eigenvalue of the extremal graph. Throws
/// theorem_check_failure when it falls outside lambda2_window by more than
/// theorem_slack.
double lambda2(int m, int d, double tol = default_solver_tol);

/// Second smallest Laplacian eigenvalue (algebraic connectivity).
double algebraic_connectivity(const Graph& g);

/// Largest elementwise gap between two descending spectra of equal length.
double max_abs_difference(const Spectrum& a, const Spectrum& b);

} // namespace extremal

#endif
