#include <doctest.h>

#include <cmath>
#include <numeric>

#include "extremal/spectral.hpp"

using namespace extremal;

namespace {

// Reference values from an independent LAPACK (numpy.linalg.eigvalsh) run
// on an adjacency matrix built straight from the set definitions.
struct Reference
{
    int m, d;
    double lambda2;
};
constexpr Reference reference_lambda2[] = {
    {1, 4, 3.568849609531507},
    {2, 6, 5.4214185561311785},
    {3, 8, 7.33258018931609},
    {1, 5, 4.6200758584679065},
    {2, 7, 6.482482163916294},
};

} // namespace

TEST_CASE("complete graph spectrum")
{
    const Spectrum s = eigenvalues_dense(complete_graph(5));
    REQUIRE(s.size() == 5);
    CHECK(s[0] == doctest::Approx(4.0).epsilon(1e-12));
    for (std::size_t i = 1; i < 5; ++i)
        CHECK(s[i] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("dense spectrum invariants")
{
    for (int m = 1; m <= 3; ++m) {
        for (int d = 2 * m + 2; d <= 2 * m + 4; ++d) {
            CAPTURE(m);
            CAPTURE(d);
            const Graph g = build_extremal_graph(m, d);
            const Spectrum s = eigenvalues_dense(g);
            const double n = static_cast<double>(s.size());
            REQUIRE(s.size() == static_cast<std::size_t>(g.vertex_count()));
            CHECK(std::is_sorted(s.values.begin(), s.values.end(), std::greater<>()));
            CHECK(std::abs(s[0] - d) < 1e-10);
            CHECK(s[0] - s[1] > 1e-3); // simple top eigenvalue
            CHECK(std::abs(std::accumulate(s.values.begin(), s.values.end(), 0.0)) < n * 1e-11);
            const double squares =
                std::inner_product(s.values.begin(), s.values.end(), s.values.begin(), 0.0);
            CHECK(std::abs(squares - 2.0 * static_cast<double>(g.edge_count())) < n * 1e-10);
        }
    }
}

TEST_CASE("lambda2 reference values and window")
{
    for (const Reference& ref : reference_lambda2) {
        CAPTURE(ref.m);
        CAPTURE(ref.d);
        const double l2 = lambda2(ref.m, ref.d);
        CHECK(std::abs(l2 - ref.lambda2) < 1e-10);
        const EigenvalueWindow w = lambda2_window(ref.m, ref.d);
        CHECK(l2 >= w.lower);
        CHECK(l2 < w.upper);
    }
    const EigenvalueWindow w14 = lambda2_window(1, 4);
    CHECK(w14.lower == doctest::Approx(3.4));
    CHECK(w14.upper == doctest::Approx(4.0 - 3.0 / 7.0));
    const EigenvalueWindow w38 = lambda2_window(3, 8);
    CHECK(w38.lower == doctest::Approx(8.0 - 7.0 / 9.0));
    CHECK(w38.upper == doctest::Approx(8.0 - 7.0 / 11.0));
}

TEST_CASE("blocks reproduce the adjacency matrix")
{
    for (int m = 1; m <= 4; ++m) {
        for (int d = 2 * m + 2; d <= 2 * m + 4; ++d) {
            CAPTURE(m);
            CAPTURE(d);
            const auto b = blocks_of(m, d);
            REQUIRE(b.size() == static_cast<std::size_t>(2 * m + 1));
            for (int i = 1; i <= m; ++i) {
                CHECK(b[static_cast<std::size_t>(i)].sum() == 1.0);
                CHECK(b[static_cast<std::size_t>(i)](2 * i - 1, 2 * i - 2) == 1.0);
                CHECK(b[static_cast<std::size_t>(2 * m + 1 - i)] == b[static_cast<std::size_t>(i)].transpose());
            }
            Eigen::MatrixXd total = Eigen::MatrixXd::Zero(d + 1, d + 1);
            for (const auto& blk : b)
                total += blk;
            CHECK((total.rowwise().sum().array() == static_cast<double>(d)).all());
            CHECK(assemble_block_circulant(b) == build_extremal_graph(m, d).adjacency_matrix<double>());
        }
    }
}

TEST_CASE("hermitian blocks")
{
    const auto b = blocks_of(2, 6);
    for (int t = 1; t <= 5; ++t) {
        const HermitianBlock h = hermitian_block(b, t);
        CHECK(h.zeta_index == t);
        CHECK((h.entries - h.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    }
    const HermitianBlock one = hermitian_block(b, 5);
    CHECK(one.entries.imag().cwiseAbs().maxCoeff() < 1e-12);
    CHECK((one.entries.real().rowwise().sum().array() - 6.0).abs().maxCoeff() < 1e-12);

    const auto ev = hermitian_eigenvalues(one.entries);
    CHECK(ev.size() == 7);
    CHECK(ev[0] == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("hermitian embedding on a known 2x2")
{
    // [[1, i], [-i, 1]] has eigenvalues 2 and 0
    Eigen::MatrixXcd h(2, 2);
    h << 1.0, std::complex<double>(0, 1), std::complex<double>(0, -1), 1.0;
    const auto ev = hermitian_eigenvalues(h);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == doctest::Approx(2.0));
    CHECK(std::abs(ev[1]) < 1e-14);
}

TEST_CASE("block-circulant spectrum equals dense spectrum")
{
    const int cases[][2] = {{1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}};
    for (const auto& c : cases) {
        CAPTURE(c[0]);
        CAPTURE(c[1]);
        const Spectrum dense = eigenvalues_dense(build_extremal_graph(c[0], c[1]));
        const Spectrum blocks = eigenvalues_block_circulant(c[0], c[1]);
        REQUIRE(blocks.size() == static_cast<std::size_t>((2 * c[0] + 1) * (c[1] + 1)));
        CHECK(max_abs_difference(dense, blocks) < 1e-8);
        CHECK(blocks[0] == doctest::Approx(c[1]).epsilon(1e-12));
        CHECK(blocks.solver == "blocks");
    }
}

TEST_CASE("spectral domain and solver errors")
{
    CHECK_THROWS_AS(blocks_of(1, 3), parameter_error);
    CHECK_THROWS_AS(eigenvalues_dense(complete_graph(3), 0.0), parameter_error);
    CHECK_THROWS_AS(eigenvalues_block_circulant(2, 5), parameter_error);
    CHECK(algebraic_connectivity(path_graph(2)) == doctest::Approx(2.0));
    CHECK(algebraic_connectivity(Graph(1, {})) == 0.0);
}
