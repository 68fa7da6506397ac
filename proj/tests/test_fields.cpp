#include "hitchin/algebra.hpp"
#include "hitchin/config_io.hpp"
#include "hitchin/field_config.hpp"

#include <catch2/catch.hpp>

#include <cmath>
#include <random>

using namespace hitchin;
using Catch::Detail::Approx;

TEST_CASE("exact(1) sample values", "[fields]")
{
    const auto cfg = FieldConfig<double>::exact(1.0);

    // planar coefficient p(r) = -2 r^2/(1+r^2): at (1,0) A2 = p(1) x / r^2 tau_1 = -tau_1
    const auto s = cfg(1.0, 0.0);
    CHECK(approx_equal(s.a2, Mat2d(-tau(1)), 1e-14));
    CHECK(approx_equal(s.a1, Mat2d(Mat2d::Zero()), 1e-14));
    // Phi = g (tau_2 - i tau_3) with g(1) = 1
    CHECK(approx_equal(s.phi1, tau(2), 1e-14));
    CHECK(approx_equal(s.phi2, Mat2d(-tau(3)), 1e-14));
    CHECK(approx_equal(s.phi(), Mat2d(tau(2) - std::complex<double>(0, 1) * tau(3)), 1e-14));

    // smooth at the origin: planar part vanishes, g(0) = 2
    const auto o = cfg(0.0, 0.0);
    CHECK(o.a1.cwiseAbs().maxCoeff() < 1e-14);
    CHECK(o.a2.cwiseAbs().maxCoeff() < 1e-14);
    CHECK(approx_equal(o.phi1, Mat2d(2.0 * tau(2)), 1e-14));
    CHECK(approx_equal(o.phi2, Mat2d(-2.0 * tau(3)), 1e-14));
}

TEST_CASE("planar components stay along tau_1 and Phi along (tau_2, tau_3)", "[fields]")
{
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    const auto cfg = FieldConfig<double>::fractional({{0.5, -0.3, 1.0}, {-1.0, 2.0, 1.7}});
    for (int k = 0; k < 40; ++k) {
        const double x = u(rng), y = u(rng);
        const auto s = cfg(x, y);
        for (const Mat2d* a : {&s.a1, &s.a2}) {
            const auto coords = tau_coordinates(*a);
            CHECK(std::abs(coords[0].imag()) < 1e-12);
            CHECK(std::abs(coords[1]) < 1e-12);
            CHECK(std::abs(coords[2]) < 1e-12);
        }
        const auto c1 = tau_coordinates(s.phi1);
        const auto c2 = tau_coordinates(s.phi2);
        CHECK(std::abs(c1[0]) < 1e-12);
        CHECK(std::abs(c1[2]) < 1e-12);
        CHECK(std::abs(c2[0]) < 1e-12);
        CHECK(std::abs(c2[1]) < 1e-12);
        // h = -g pointwise
        CHECK(c2[2].real() == Approx(-c1[1].real()).margin(1e-12));
    }
}

TEST_CASE("exact(1) components bounded over the plane", "[fields]")
{
    const auto cfg = FieldConfig<double>::exact(1.0);
    double worst = 0;
    for (double r : {0.0, 1e-8, 1e-3, 0.1, 1.0, 10.0, 1e4, 1e8}) {
        for (double th : {0.0, 0.7, 2.1, 4.4}) {
            const auto s = cfg(r * std::cos(th), r * std::sin(th));
            worst = std::max({worst, s.a1.cwiseAbs().maxCoeff(), s.a2.cwiseAbs().maxCoeff(),
                              s.phi1.cwiseAbs().maxCoeff(), s.phi2.cwiseAbs().maxCoeff()});
        }
    }
    CHECK(worst < 2.1); // coefficients bounded by 2, generator entries by 1/2
}

TEST_CASE("meron variants signal at their centers", "[fields]")
{
    const auto m = FieldConfig<double>::exact(2.0);
    CHECK_THROWS_AS(m(0.0, 0.0), SingularPointError);
    CHECK_NOTHROW(m(1e-3, 0.0));

    const auto fr = FieldConfig<double>::fractional({{1.0, 1.0, 0.6}});
    CHECK_THROWS_AS(fr(1.0, 1.0), SingularPointError);

    // smooth multi evaluates everywhere, including centers
    const auto mu = FieldConfig<double>::multi({{1.0, 1.0}, {-2.0, 0.5}});
    CHECK_NOTHROW(mu(1.0, 1.0));
}

TEST_CASE("multi with one particle at the origin equals exact(1)", "[fields]")
{
    const auto a = FieldConfig<double>::exact(1.0);
    const auto b = FieldConfig<double>::multi({{0.0, 0.0}});
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int k = 0; k < 25; ++k) {
        const double x = u(rng), y = u(rng);
        const auto sa = a(x, y), sb = b(x, y);
        CHECK(approx_equal(sa.a1, sb.a1, 1e-14));
        CHECK(approx_equal(sa.a2, sb.a2, 1e-14));
        CHECK(approx_equal(sa.phi1, sb.phi1, 1e-14));
        CHECK(approx_equal(sa.phi2, sb.phi2, 1e-14));
    }
}

TEST_CASE("multi configurations are translation equivariant", "[fields]")
{
    const double dx = 1.7, dy = -0.4;
    const auto base = FieldConfig<double>::multi({{0.0, 0.0}, {2.0, 1.0}, {-1.5, 0.5}});
    const auto moved = FieldConfig<double>::multi({{dx, dy}, {2.0 + dx, 1.0 + dy}, {-1.5 + dx, 0.5 + dy}});
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int k = 0; k < 25; ++k) {
        const double x = u(rng), y = u(rng);
        const auto sa = base(x, y), sb = moved(x + dx, y + dy);
        CHECK(approx_equal(sa.a1, sb.a1, 1e-14));
        CHECK(approx_equal(sa.a2, sb.a2, 1e-14));
        CHECK(approx_equal(sa.phi1, sb.phi1, 1e-14));
        CHECK(approx_equal(sa.phi2, sb.phi2, 1e-14));
    }
}

TEST_CASE("smoothness classification", "[fields]")
{
    CHECK(FieldConfig<double>::exact(1.0).smoothness() == Smoothness::smooth);
    CHECK(FieldConfig<double>::exact(2.0).smoothness() == Smoothness::meron_singular);
    CHECK(FieldConfig<double>::exact(0.5).smoothness() == Smoothness::meron_singular);
    CHECK(FieldConfig<double>::singular(1.0).smoothness() == Smoothness::meron_singular);
    CHECK(FieldConfig<double>::multi({{0, 0}, {1, 1}, {2, 0}}).smoothness() == Smoothness::smooth);
    CHECK(FieldConfig<double>::fractional({{0, 0, 1.0}, {1, 1, 1.3}}).smoothness() ==
          Smoothness::meron_singular);
}

TEST_CASE("factory preconditions", "[fields]")
{
    CHECK_THROWS_AS(FieldConfig<double>::multi({}), std::invalid_argument);
    CHECK_THROWS_AS(FieldConfig<double>::fractional({}), std::invalid_argument);
    CHECK_THROWS_AS(FieldConfig<double>::fractional({{0, 0, -1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(FieldConfig<double>::singular(0.0), std::invalid_argument);
}

TEST_CASE("singular branch config", "[fields]")
{
    const auto cfg = FieldConfig<double>::singular(1.0);
    CHECK_THROWS_AS(cfg(1.0, 0.0), SingularPointError);
    CHECK_THROWS_AS(cfg(std::cos(0.3), std::sin(0.3)), SingularPointError);
    const auto s = cfg(0.5, 0.0);
    // f(1/2) = 2/3, g(1/2) = 8/3 at c = 1
    CHECK(approx_equal(s.a2, Mat2d((2.0 / 3.0) / 0.25 * 0.5 * tau(1)), 1e-13));
    const auto cphi = tau_coordinates(s.phi1);
    CHECK(cphi[1].real() == Approx(8.0 / 3.0).margin(1e-13));
}

TEST_CASE("particle json ingestion", "[fields]")
{
    const auto multi = config_from_json(nlohmann::json::parse(
        R"({"particles":[{"x":0,"y":0},{"x":1.5,"y":-2}]})"));
    CHECK(multi.kind() == ConfigKind::multi);
    CHECK(multi.particles().size() == 2);
    CHECK(multi.particles()[1].c == 1.0);

    const auto frac = config_from_json(nlohmann::json::parse(
        R"({"particles":[{"x":0,"y":0,"c":1},{"x":1,"y":1,"c":0.5}]})"));
    CHECK(frac.kind() == ConfigKind::fractional);

    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"particles":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"points":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(
                        R"({"particles":[{"x":0,"y":0,"c":-2}]})")),
                    std::invalid_argument);
}

TEST_CASE("exclusion radius is configurable", "[fields]")
{
    auto cfg = FieldConfig<double>::exact(2.0);
    CHECK_NOTHROW(cfg(1e-6, 0.0));
    cfg.set_exclusion(1e-3);
    CHECK_THROWS_AS(cfg(1e-6, 0.0), SingularPointError);
    CHECK_THROWS_AS(cfg.set_exclusion(0.0), std::invalid_argument);
}
