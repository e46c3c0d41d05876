#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "eulerheat/analytic.hpp"
#include "eulerheat/errors.hpp"

using namespace eulerheat;
using boost::math::quadrature::gauss_kronrod;

namespace {

constexpr auto kPrinted = FormulaVariant::kAsPrinted;

// Fourth-order central first derivative.
template <class F>
double d1(F&& f, double x, double h = 1e-3) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

template <class F>
double d2(F&& f, double x, double h = 1e-3) {
  return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
}

}  // namespace

TEST_CASE("family names and validation") {
  CHECK(family_name(BTravel{}) == "b-travel");
  CHECK(family_name(DVirial{}) == "d-virial");
  CHECK_THROWS_AS(validate(SolutionFamily{ACubic{1.0, 0, 1, 0, 1, -1.0}}), ParameterError);
  CHECK_THROWS_AS(validate(SolutionFamily{BZk{1.0, -1.0}}), ParameterError);
  CHECK(is_self_similar(ACubic{}));
  CHECK_FALSE(is_self_similar(CTravel{}));
  CHECK_FALSE(has_temperature(BTravel{}));
}

TEST_CASE("a-cubic shape examples") {
  ACubic p{4.0 / 3.0, 0.0, 1.0, 0.0, 1.0, 1.0};
  // printed amplitude sqrt((4 eta^2 + 2 c1) / 3a) = 1 at eta = 1
  CHECK(shape_functions(p, 1.0, kPrinted).h == doctest::Approx(1.0));
  // corrected amplitude sqrt((eta^2 / 4 + 2 c1) / 3a)
  CHECK(shape_functions(p, 1.0).h == doctest::Approx(0.25));
  CHECK(*shape_functions(p, 1.0).f == doctest::Approx(std::cos(1.0)));
  CHECK(shape_functions(p, 1.0).g == doctest::Approx(0.5));
  ACubic neg{1.0, -1.0};
  CHECK_THROWS_AS(shape_functions(neg, 0.0), DomainError);
}

TEST_CASE("a-cubic corrected h satisfies -eta/4 = -3 a h h'") {
  ACubic p{1.7, 0.4};
  for (double eta : {0.3, 1.0, 2.5}) {
    auto h = [&](double e) { return shape_functions(p, e).h; };
    CHECK(std::fabs(-eta / 4.0 + 3.0 * p.a * h(eta) * d1(h, eta)) < 1e-10);
  }
}

TEST_CASE("a-cubic temperature forms") {
  ACubic p{1.0, 0.0, 1.0, 0.5, 2.0, 1.0};
  auto f = [&](double e) { return *shape_functions(p, e).f; };
  auto fp = [&](double e) { return *shape_functions(p, e, kPrinted).f; };
  // corrected f solves -alpha f = lambda f''; the printed one does not when alpha != lambda
  CHECK(std::fabs(p.alpha * f(0.7) + p.lambda * d2(f, 0.7)) < 1e-8);
  CHECK(std::fabs(p.alpha * fp(0.7) + p.lambda * d2(fp, 0.7)) > 1e-2);
  ACubic equal{1.0, 0.0, 1.0, 0.5, 1.0, 1.0};
  CHECK(*shape_functions(equal, 0.7).f == doctest::Approx(*shape_functions(equal, 0.7, kPrinted).f));
  ACubic negative{1.0, 0.0, 1.0, 0.5, -1.0, 2.0};
  auto fn = [&](double e) { return *shape_functions(negative, e).f; };
  CHECK(std::fabs(negative.alpha * fn(0.7) + negative.lambda * d2(fn, 0.7)) < 1e-8);
}

TEST_CASE("a-cubic state") {
  const auto s = eval_state(ACubic{}, 1.0, 1.0);
  CHECK(*s.v == doctest::Approx(0.5));
  CHECK_THROWS_AS(eval_state(ACubic{}, 1.0, 0.0), DomainError);
}

TEST_CASE("zk profile and front") {
  CHECK(zk_width_squared(2) == doctest::Approx(1.0 / 12.0));
  CHECK(zk_profile(0.0, 1.0, 1.0, 2) == doctest::Approx(1.0));
  CHECK(front_position(1.0, 1.0, 2) == doctest::Approx(std::sqrt(12.0)));
  CHECK(front_position(8.0, 1.0, 2) == doctest::Approx(2.0 * std::sqrt(12.0)));
  CHECK(zk_profile(front_position(3.0, 1.0, 2) * 1.0001, 3.0, 1.0, 2) == 0.0);
  CHECK(zk_profile(front_position(3.0, 1.0, 2), 3.0, 1.0, 2) == doctest::Approx(0.0).epsilon(1e-12));
  // front speed (A/B) beta t1^(beta-1) -> 0
  const double speed_1 = d1([](double t) { return front_position(t, 1.0, 2); }, 1.0);
  const double speed_1e6 = d1([](double t) { return front_position(t, 1.0, 2); }, 1e6, 1.0);
  CHECK(speed_1e6 < 1e-3 * speed_1);
  CHECK_THROWS_AS(zk_profile(0.0, 0.0, 1.0, 2), DomainError);
}

TEST_CASE("zk mass is time independent") {
  for (int m : {2, 3}) {
    for (double t1 : {1.0, 7.0}) {
      const double xf = front_position(t1, 1.3, m);
      const double mass = gauss_kronrod<double, 61>::integrate(
          [&](double x) { return zk_profile(x, t1, 1.3, m); }, -xf, xf, 15, 1e-13);
      CHECK(mass == doctest::Approx(zk_mass(1.3, m)).epsilon(1e-8));
    }
  }
  CHECK(zk_mass(1.0, 2) == doctest::Approx(4.0 / 3.0 * std::sqrt(12.0)));
}

TEST_CASE("zk profile solves the porous medium equation inside the support") {
  for (int m : {2, 3}) {
    for (double x : {0.0, 0.7, 1.5}) {
      const double t1 = 2.0;
      auto rho_t = [&](double t) { return zk_profile(x, t, 1.0, m); };
      auto rho_m = [&](double y) { return std::pow(zk_profile(y, t1, 1.0, m), m); };
      CHECK(std::fabs(d1(rho_t, t1) - d2(rho_m, x)) < 1e-8);
    }
  }
}

TEST_CASE("b-zk state") {
  BZk p;
  const double t = 2.0, t1 = p.b * t * t / 4.0;
  const auto inside = eval_state(p, 0.5, t);
  CHECK(inside.rho == doctest::Approx(zk_profile(0.5, t1, p.A, 2)));
  CHECK(*inside.v == doctest::Approx(2.0 * 0.5 / (3.0 * t)));
  const auto outside = eval_state(p, 10.0, t);
  CHECK(outside.rho == 0.0);
  CHECK_FALSE(outside.v.has_value());
  CHECK(outside.T.has_value());
  CHECK(shape_functions(p, front_position(1.0, p.A, 2)).h == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("kummer temperature jets match finite differences") {
  for (const KummerTemperature& k :
       {bzk_temperature(BZk{}), cgauss_temperature(CGauss{}, FormulaVariant::kCorrected),
        cgauss_temperature(CGauss{}, kPrinted), KummerTemperature{2.0 / 3.0, 0.4, 1.3, 0.7, 0.5}}) {
    for (double eta : {0.4, 1.3, 3.0}) {
      const Jet j = k.jet(eta);
      CHECK(j.d1 == doctest::Approx(d1(k, eta, 1e-4)).epsilon(1e-7));
      CHECK(j.d2 == doctest::Approx(d2(k, eta, 1e-3)).epsilon(1e-6));
      const double res = k.lambda * j.d2 - (k.kappa - 0.5) * eta * j.d1 + k.gamma * j.value;
      const double scale = std::max({1.0, std::fabs(k.lambda * j.d2), std::fabs(k.gamma * j.value)});
      CHECK(std::fabs(res) / scale < 1e-10);
    }
  }
}

TEST_CASE("kummer temperature parameters") {
  const auto k = bzk_temperature(BZk{});
  CHECK(k.first_parameter() == doctest::Approx(0.5 - 3.0));
  CHECK(k.argument_scale() == doctest::Approx(1.0 / 12.0));
  const auto printed = cgauss_temperature(CGauss{}, kPrinted);
  CHECK(printed.first_parameter() == doctest::Approx(0.5 - 1.0 / 3.0));
  CHECK(printed.argument_scale() == doctest::Approx(0.75));
  KummerTemperature with_u{1.0, 1.0, 1.0, 0.0, 1.0};
  CHECK_THROWS_AS((void)with_u.jet(0.0), DomainError);
  CHECK(std::isfinite(with_u(0.5)));
}

TEST_CASE("b-travel limits") {
  BTravel p;
  const double t = 1.5;
  // printed form: left plateau rho -> b c1 / a, v -> 0; right v -> -t
  const auto left = eval_state(p, -40.0, t, kPrinted);
  CHECK(left.rho == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*left.v == doctest::Approx(0.0));
  const auto right = eval_state(p, 1e3, t, kPrinted);
  CHECK(*right.v == doctest::Approx(-t).epsilon(1e-2));
  CHECK_FALSE(left.T.has_value());
}

TEST_CASE("b-travel corrected profile is the mirror of the printed one") {
  BTravel p{1.3, 0.8, 1.1, 0.4};
  for (double z : {-3.0, 0.0, 2.0}) {
    CHECK(btravel_profile(p, z).value == doctest::Approx(btravel_profile(p, -z, kPrinted).value));
  }
}

TEST_CASE("b-travel ODE b h h'' + h'(b h' + a) = 0") {
  BTravel p{1.3, 0.8, 1.1, 0.4};
  for (double z = -5.0; z <= 5.0; z += 0.5) {
    const Jet h = btravel_profile(p, z);
    CHECK(std::fabs(p.b * h.value * h.d2 + h.d1 * (p.b * h.d1 + p.a)) < 1e-12);
    auto hv = [&](double s) { return btravel_profile(p, s).value; };
    CHECK(h.d1 == doctest::Approx(d1(hv, z)).epsilon(1e-8));
    const Jet hp = btravel_profile(p, z, kPrinted);
    CHECK(std::fabs(p.b * hp.value * hp.d2 + hp.d1 * (p.b * hp.d1 - p.a)) < 1e-12);
  }
}

TEST_CASE("momentum defect matches direct finite differences") {
  const std::vector<SolutionFamily> families = {ACubic{1.0, 0.3}, BZk{}, BTravel{1.0, 1.0, 1.0, 1.0},
                                                CGauss{}, CTravel{1.0, 1.0, 0.5, 1.0}, DVirial{}};
  for (const auto& fam : families) {
    const EosModel eos = family_eos(fam);
    for (double x : {0.2, 0.8}) {
      const double t = 1.4;
      auto v = [&](double xx, double tt) { return *eval_state(fam, xx, tt).v; };
      auto p = [&](double xx) {
        const auto s = eval_state(fam, xx, t);
        return pressure(eos, s.rho, s.T.value_or(0.0));
      };
      const double vt = d1([&](double tt) { return v(x, tt); }, t);
      const double vx = d1([&](double xx) { return v(xx, t); }, x);
      const double direct = vt + v(x, t) * vx + d1(p, x) / eval_state(fam, x, t).rho;
      CAPTURE(family_name(fam));
      CHECK(std::fabs(direct - *momentum_defect(fam, x, t)) < 1e-8);
    }
  }
}

TEST_CASE("c-gauss corrected density satisfies continuity, printed does not") {
  CGauss p{1.4};
  auto residual = [&](FormulaVariant var, double x, double t) {
    auto rho = [&](double xx, double tt) { return eval_state(p, xx, tt, var).rho; };
    auto flux = [&](double xx) { const auto s = eval_state(p, xx, t, var); return s.rho * *s.v; };
    return d1([&](double tt) { return rho(x, tt); }, t) + d1(flux, x);
  };
  CHECK(std::fabs(residual(FormulaVariant::kCorrected, 0.6, 1.3)) < 1e-9);
  CHECK(std::fabs(residual(kPrinted, 0.6, 1.3)) > 1e-2);
}

TEST_CASE("c-travel temperature and density") {
  CTravel p{0.7, 1.2, 0.0, 2.0, 0.3, 1.5};
  const auto s = eval_state(p, 0.4, 1.1);
  CHECK(*s.v == doctest::Approx(p.a * 1.1));
  CHECK(*s.T == doctest::Approx(p.tc1 + p.tc2 * (0.4 - 0.5 * p.a * 1.1 * 1.1)));
  CHECK(*eval_state(p, 0.4, 1.1, kPrinted).v == doctest::Approx(-p.a * 1.1));
  CTravel bad{1.0, 1.0, -2.0, 1.0};
  CHECK_THROWS_AS(eval_state(bad, 5.0, 1.0), DomainError);
}

TEST_CASE("d-virial density quadrature") {
  DVirial p;
  CHECK(virial_density_quadrature(0.0, p) == doctest::Approx(p.c3));
  // oracle: exp of an independent Gauss-Kronrod integral of (z/4 + sin z) / cos z
  const double integral = gauss_kronrod<double, 31>::integrate(
      [](double z) { return (z / 4.0 + std::sin(z)) / std::cos(z); }, 0.0, 0.5, 10, 1e-14);
  CHECK(virial_density_quadrature(0.5, p) == doctest::Approx(std::exp(integral)).epsilon(1e-10));
  CHECK(virial_density_quadrature(0.5, p, kPrinted) == doctest::Approx(integral).epsilon(1e-10));
  CHECK_THROWS_AS(virial_density_quadrature(2.0, p), PoleError);
  CHECK_THROWS_AS(check_virial_zero_free(p, 1.565, 1e-2), PoleError);
  CHECK_NOTHROW(check_virial_zero_free(p, 1.5, 1e-2));
  DVirial shifted{1.0, 1.0, 1.0, 0.0, 1.0};  // f = sin(eta)
  CHECK_THROWS_AS(check_virial_zero_free(shifted, 0.5), PoleError);
}

TEST_CASE("d-virial closed form cross-check selects one convention") {
  DVirial p;
  Eigen::ArrayXd etas = Eigen::ArrayXd::LinSpaced(25, -1.2, 1.2);
  const auto check = virial_cross_check(p, etas);
  REQUIRE(check.selected.has_value());
  CHECK(*check.selected == specfun::DilogConvention::kReflectedLi2);
  CHECK(check.max_rel_deviation[1] < 1e-6);
  CHECK(check.max_rel_deviation[0] > 1e-3);
  const auto branches = virial_density(0.5, p, VirialPath::kClosedForm).branches;
  CHECK(branches.size() == 2);
  CHECK_THROWS_AS(virial_density_closed_form(0.5, DVirial{2.0}), ParameterError);
}

TEST_CASE("self-similar scalings collapse fields") {
  const std::vector<SolutionFamily> families = {ACubic{1.0, 0.3, 1.0, 0.2, 0.7, 1.1}, BZk{}, CGauss{}, DVirial{}};
  for (const auto& fam : families) {
    for (const auto& sc : self_similar_scalings(fam)) {
      for (double eta : {0.3, 0.9}) {
        double ref = 0.0;
        for (double t : {1.0, 2.0, 4.0}) {
          const double clock = sc.clock == Clock::kT1 ? std::get<BZk>(fam).b * t * t / 4.0 : t;
          const auto s = eval_state(fam, eta * std::pow(clock, sc.spread), t);
          const double value = sc.field == "rho" ? s.rho : sc.field == "v" ? *s.v : *s.T;
          const double scaled = std::pow(clock, sc.decay) * value;
          if (t == 1.0) ref = scaled;
          CAPTURE(family_name(fam));
          CAPTURE(sc.field);
          CHECK(std::fabs(scaled - ref) < 1e-12 * std::max(1.0, std::fabs(ref)));
        }
      }
    }
  }
  CHECK_THROWS_AS(self_similar_scalings(BTravel{}), ParameterError);
}

TEST_CASE("sample_family is t-major") {
  Eigen::ArrayXd xs(3), ts(2);
  xs << 0.1, 0.2, 0.3;
  ts << 1.0, 2.0;
  const auto rows = sample_family(ACubic{}, xs, ts);
  REQUIRE(rows.size() == 6);
  CHECK(rows[1].x == 0.2);
  CHECK(rows[1].t == 1.0);
  CHECK(rows[3].t == 2.0);
}
