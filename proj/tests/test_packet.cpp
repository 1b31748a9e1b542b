#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qhj/nodal.hpp"
#include "qhj/packet.hpp"

using namespace qhjtest;
using qhj::cplx;
using qhj::GaussianPacket;
using qhj::Superposition;
using std::numbers::pi;

TEST_CASE("sigma_tilde") {
    GaussianPacket p{0.0, 0.0, std::sqrt(2.0)};
    CHECK(p.sigma_tilde(0.0).real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(p.sigma_tilde(0.0).imag() == 0.0);
    // tau = 4, so at t = 4 the spread is sigma0 (1 + i)
    CHECK(p.tau() == doctest::Approx(4.0));
    CHECK(rel_err(p.sigma_tilde(4.0), std::sqrt(2.0) * cplx(1.0, 1.0)) < 1e-14);

    GaussianPacket q{0.0, 0.0, std::sqrt(2.0) / 4.0};
    CHECK(q.tau() == doctest::Approx(0.25));
    CHECK(rel_err(q.sigma_tilde(0.25), std::sqrt(2.0) / 4.0 * cplx(1.0, 1.0)) <
          1e-14);
}

TEST_CASE("packet value at centroid") {
    GaussianPacket p{-10.0, 2.0, std::sqrt(2.0)};
    const cplx v = p.value(cplx(-10.0, 0.0), 0.0);
    CHECK(rel_err(v, std::pow(4.0 * pi, -0.25)) < 1e-14);
    // generic packet: peak value is (2 pi sigma0^2)^(-1/4)
    GaussianPacket g{3.0, -1.5, 0.7};
    CHECK(rel_err(g.value(cplx(3.0, 0.0), 0.0),
                  std::pow(2.0 * pi * 0.49, -0.25)) < 1e-14);
}

TEST_CASE("gaussian falloff exponent") {
    GaussianPacket p{1.0, 0.5, 0.8};
    const double ratio = std::abs(p.value(cplx(1.0 + 2.0 * 0.8, 0.0), 0.0)) /
                         std::abs(p.value(cplx(1.0, 0.0), 0.0));
    // exponent -(2 sigma0)^2 / (4 sigma0^2) = -1
    CHECK(ratio == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("superposition constructive at origin") {
    auto sup = case1();
    for (double t : {0.0, 1.7, 5.0, 9.3}) {
        const cplx left = sup.packets()[0].value(cplx(0.0, 0.0), t);
        CHECK(rel_err(sup.value(cplx(0.0, 0.0), t), 2.0 * left) < 1e-12);
    }
}

TEST_CASE("superposition vanishes at analytic node") {
    auto sup = case1();
    qhj::SymmetricScenario sym(sup);
    const cplx z = sym.node_position(0, 5.0);
    CHECK(std::abs(sup.value(z, 5.0)) < 1e-12);
}

TEST_CASE("single-packet superposition equals packet value") {
    GaussianPacket p{2.0, -0.3, 1.1};
    Superposition sup({p});
    const cplx z(0.4, -0.2);
    CHECK(sup.value(z, 3.0) == p.value(z, 3.0));
}

TEST_CASE("dz: symmetry zero at origin and centroid plane-wave term") {
    auto sup = case1();
    for (double t : {0.0, 2.0, 5.0, 8.5})
        CHECK(std::abs(sup.dz(cplx(0.0, 0.0), t)) < 1e-13);

    GaussianPacket p{-10.0, 2.0, std::sqrt(2.0)};
    Superposition single({p});
    const double t = 1.3;
    const cplx zc(p.center(t), 0.0);
    const cplx want = single.value(zc, t) * cplx(0.0, p.momentum() / p.hbar);
    CHECK(rel_err(single.dz(zc, t), want) < 1e-12);
}

TEST_CASE("dz and d2z match finite differences") {
    auto sup = case1();
    for (int i = 0; i < 50; ++i) {
        const cplx z(uniform(-4.0, 4.0), uniform(-2.0, 2.0));
        const double t = uniform(0.0, 10.0);
        const cplx fd1 = fd_dz([&](cplx w) { return sup.value(w, t); }, z);
        const cplx fd2 = fd_dz([&](cplx w) { return sup.dz(w, t); }, z);
        CHECK(rel_err(sup.dz(z, t), fd1) < 1e-6);
        CHECK(rel_err(sup.d2z(z, t), fd2) < 1e-6);
    }
}

TEST_CASE("symmetric pair detection") {
    CHECK(case1().is_symmetric_pair());
    CHECK(case2().is_symmetric_pair());
    GaussianPacket a{-10.0, 2.0, 1.0}, b{10.0, -2.0, 1.5};
    CHECK_FALSE(Superposition({a, b}).is_symmetric_pair());
    CHECK_FALSE(Superposition({a}).is_symmetric_pair());
}

TEST_CASE("superposition validation") {
    GaussianPacket a{-1.0, 1.0, 1.0};
    GaussianPacket b{1.0, -1.0, 1.0};
    b.mass = 2.0;
    CHECK_THROWS_AS(Superposition({a, b}), qhj::Error);
    CHECK_THROWS_AS(Superposition({}), qhj::Error);
    GaussianPacket c{0.0, 0.0, -1.0};
    CHECK_THROWS_AS(Superposition({c}), qhj::Error);
}
