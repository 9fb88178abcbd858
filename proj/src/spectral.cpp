#include "extremal/spectral.hpp"

#include <cmath>
#include <complex>
#include <future>
#include <numbers>
#include <sstream>

namespace extremal {

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h)
{
    const Eigen::Index n = h.rows();
    Eigen::MatrixXd embedded(2 * n, 2 * n);
    const Eigen::MatrixXd re = h.real();
    const Eigen::MatrixXd im = h.imag();
    embedded.topLeftCorner(n, n) = re;
    embedded.topRightCorner(n, n) = -im;
    embedded.bottomLeftCorner(n, n) = im;
    embedded.bottomRightCorner(n, n) = re;

    const std::vector<double> doubled = symmetric_eigenvalues(embedded);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k + 1 < doubled.size(); k += 2) {
        if (std::abs(doubled[k] - doubled[k + 1]) > pairing_tol) {
            std::ostringstream msg;
            msg << "Hermitian embedding of size " << n << ": eigenvalues " << doubled[k] << " and "
                << doubled[k + 1] << " do not pair within " << pairing_tol;
            throw solver_failure(msg.str());
        }
        out.push_back(0.5 * (doubled[k] + doubled[k + 1]));
    }
    return out;
}

Spectrum eigenvalues_dense(const Graph& g, double tol)
{
    if (!(tol > 0))
        throw parameter_error("eigenvalues_dense: tol must be positive");
    Spectrum s;
    s.values = symmetric_eigenvalues(g.adjacency_matrix<double>());
    s.tol = tol;
    s.solver = "dense";
    s.params = g.params();
    return s;
}

std::vector<Eigen::MatrixXd> blocks_of(int m, int d)
{
    check_family_params(m, d);
    const int size = d + 1;
    const int count = 2 * m + 1;
    std::vector<Eigen::MatrixXd> b(static_cast<std::size_t>(count), Eigen::MatrixXd::Zero(size, size));
    for (int i = 1; i <= m; ++i) {
        // single unit entry at (2i-1, 2i-2), 0-based
        b[static_cast<std::size_t>(i)](2 * i - 1, 2 * i - 2) = 1.0;
        b[static_cast<std::size_t>(count - i)] = b[static_cast<std::size_t>(i)].transpose();
    }
    Eigen::MatrixXd b0 = Eigen::MatrixXd::Ones(size, size) - Eigen::MatrixXd::Identity(size, size);
    for (int i = 1; i < count; ++i)
        b0 -= b[static_cast<std::size_t>(i)];
    b[0] = b0;
    return b;
}

Eigen::MatrixXd assemble_block_circulant(std::span<const Eigen::MatrixXd> blocks)
{
    const auto count = static_cast<Eigen::Index>(blocks.size());
    if (count == 0)
        return {};
    const Eigen::Index size = blocks[0].rows();
    Eigen::MatrixXd out(count * size, count * size);
    for (Eigen::Index p = 0; p < count; ++p)
        for (Eigen::Index q = 0; q < count; ++q)
            out.block(p * size, q * size, size, size) = blocks[static_cast<std::size_t>((q - p + count) % count)];
    return out;
}

HermitianBlock hermitian_block(std::span<const Eigen::MatrixXd> blocks, int t)
{
    const int count = static_cast<int>(blocks.size());
    const double angle = 2.0 * std::numbers::pi * t / count;
    const std::complex<double> zeta(std::cos(angle), std::sin(angle));
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(blocks[0].rows(), blocks[0].cols());
    std::complex<double> power(1.0, 0.0);
    for (int k = 0; k < count; ++k) {
        h += power * blocks[static_cast<std::size_t>(k)].cast<std::complex<double>>();
        power *= zeta;
    }
    return {t, h};
}

Spectrum eigenvalues_block_circulant(int m, int d, double tol)
{
    if (!(tol > 0))
        throw parameter_error("eigenvalues_block_circulant: tol must be positive");
    const std::vector<Eigen::MatrixXd> blocks = blocks_of(m, d);
    const int count = 2 * m + 1;

    std::vector<std::future<std::vector<double>>> parts;
    parts.reserve(static_cast<std::size_t>(count));
    for (int t = 1; t <= count; ++t)
        parts.push_back(std::async(std::launch::async, [&blocks, t] {
            return hermitian_eigenvalues(hermitian_block(blocks, t).entries);
        }));

    Spectrum s;
    for (auto& part : parts) {
        const std::vector<double> values = part.get();
        s.values.insert(s.values.end(), values.begin(), values.end());
    }
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    s.tol = tol;
    s.solver = "blocks";
    s.params = FamilyParams{m, d};
    return s;
}

EigenvalueWindow lambda2_window(int m, int d)
{
    const double k = 2.0 * m + 1.0;
    return {d - k / (d + 1.0), d - k / (d + 3.0)};
}

double lambda2(int m, int d, double tol)
{
    const Spectrum s = eigenvalues_dense(build_extremal_graph(m, d), tol);
    const double value = s.values.at(1);
    const EigenvalueWindow w = lambda2_window(m, d);
    if (!(value >= w.lower - theorem_slack && value < w.upper + theorem_slack)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "lambda2(m=" << m << ", d=" << d << ") = " << value << " outside [" << w.lower << ", " << w.upper
            << ")";
        throw theorem_check_failure(msg.str());
    }
    return value;
}

double algebraic_connectivity(const Graph& g)
{
    if (g.vertex_count() < 2)
        return 0.0;
    const std::vector<double> values = symmetric_eigenvalues(g.laplacian_matrix());
    return values[values.size() - 2];
}

double max_abs_difference(const Spectrum& a, const Spectrum& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("max_abs_difference: spectra differ in length");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace extremal
