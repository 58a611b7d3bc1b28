#include <doctest.h>

#include "gvk/calculus.hpp"
#include "gvk/duality.hpp"
#include "gvk/error.hpp"
#include "gvk/jacobi.hpp"
#include "support.hpp"

using namespace gvk;

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace

TEST_SUITE("duality") {
  TEST_CASE("phi and its inverse on the plane") {
    const auto c = make_chart({"x1", "x2"});
    const auto ctx = VolumeContext::flat(c);
    const MultiVector d1 = MultiVector::unit(c, 0);
    const MultiVector d2 = MultiVector::unit(c, 1);
    CHECK(ctx.phi(d1) == DiffForm::unit(c, 1));
    CHECK(ctx.phi(d2) == -DiffForm::unit(c, 0));
    CHECK(ctx.phi(MultiVector::scalar(c, Expr(1))) == ctx.vol());
    CHECK(ctx.phi_inv(DiffForm::unit(c, 1)) == d1);
    CHECK(ctx.phi_inv(ctx.vol()) == MultiVector::scalar(c, Expr(1)));
  }

  TEST_CASE("phi of the leaf trivector on R^4") {
    const auto c = make_chart({"x0", "x1", "x2", "y"});
    const auto ctx = VolumeContext::flat(c);
    CHECK(ctx.phi(MultiVector::basis(c, 0b0111)) == DiffForm::unit(c, 3));
  }

  TEST_CASE("volume forms must be single nonvanishing top terms") {
    const auto c = make_chart({"x1", "x2"});
    CHECK_THROWS_AS(VolumeContext(DiffForm::unit(c, 0)), ChartError);
    CHECK_THROWS_AS(VolumeContext(DiffForm(c, 2)), ChartError);
    const VolumeContext ok(DiffForm::basis(c, 0b11, Expr::exp(Expr::var(0))));
    CHECK(ok.evaluate(ok.unit_multivector()) == Expr(1));
  }

  TEST_CASE("star companions") {
    const auto c = make_chart({"x1", "x2"});
    const auto ctx = VolumeContext::flat(c);
    const MultiVector d1 = MultiVector::unit(c, 0);
    CHECK(ctx.star(d1).companion == MultiVector::unit(c, 1));
    CHECK(ctx.star(Expr(2) * d1).companion == Expr(Rational(1, 2)) * MultiVector::unit(c, 1));
    CHECK(ctx.star(Expr(2) * d1).certificate == Expr(1));

    const auto c4 = make_chart({"x0", "x1", "x2", "y"});
    const auto ctx4 = VolumeContext::flat(c4);
    CHECK(ctx4.star(MultiVector::basis(c4, 0b0111)).companion == MultiVector::unit(c4, 3));
  }

  TEST_CASE("star fails without a nonvanishing pairing") {
    const auto c = make_chart({"x1", "x2"});
    const auto ctx = VolumeContext::flat(c);
    CHECK_THROWS_AS(ctx.star(MultiVector(c, 1)), NoCompanion);
    CHECK_THROWS_AS(ctx.companion_of(MultiVector::unit(c, 0), MultiVector::unit(c, 0)), NoCompanion);
  }

  TEST_CASE("star candidates each certify and the first is the chosen one") {
    const auto c = make_chart({"a", "b", "c"});
    const auto ctx = VolumeContext::flat(c);
    const MultiVector u = MultiVector::unit(c, 0) + MultiVector::unit(c, 1);
    const auto all = ctx.star_candidates(u);
    REQUIRE(all.size() >= 2);
    CHECK(all.front().companion == ctx.star(u).companion);
    for (const auto& s : all) CHECK(ctx.evaluate(wedge(u, s.companion)) == Expr(1));
  }

  TEST_CASE("psi examples") {
    const auto c = make_chart({"x1", "x2", "x3"});
    const auto ctx = VolumeContext::flat(c);
    CHECK(ctx.psi(MultiVector::unit(c, 0)).is_zero());
    CHECK(ctx.psi(MultiVector::unit(c, 0, Expr::var(0))) == MultiVector::scalar(c, Expr(1)));
    CHECK(ctx.psi(MultiVector::basis(c, 0b011)).is_zero());
    const MultiVector beyond = ctx.psi(MultiVector(c, 4));
    CHECK(beyond.is_zero());
    CHECK(beyond.grade() == 3);
  }

  TEST_CASE("property: psi of a vector field is its divergence for flat volume") {
    const auto c = make_chart({"a", "b", "c"});
    const auto ctx = VolumeContext::flat(c);
    test::Gen g(31);
    for (int i = 0; i < 50; ++i) {
      const auto x = g.multivector(c, 1, 3);
      CHECK(ctx.psi(x) == MultiVector::scalar(c, test::divergence(x)));
    }
  }

  TEST_CASE("property: phi is inverted on every grade") {
    test::Gen g(32);
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto c = make_chart(names(n));
      const VolumeContext ctx(DiffForm::basis(c, full_mask(n), Expr(g.integer(1, 3)) * Expr::exp(Expr::var(0))));
      for (int i = 0; i < 30; ++i) {
        const int k = g.integer(0, static_cast<int>(n));
        const auto u = g.multivector(c, k);
        CHECK(ctx.phi_inv(ctx.phi(u)) == u);
        const auto w = g.form(c, k);
        CHECK(ctx.phi(ctx.phi_inv(w)) == w);
      }
    }
  }

  TEST_CASE("property: inverse duality is a contraction of the unit multivector") {
    test::Gen g(33);
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto c = make_chart(names(n));
      const auto ctx = VolumeContext::flat(c);
      for (int i = 0; i < 30; ++i) {
        const int k = g.integer(0, static_cast<int>(n));
        const auto a = g.form(c, k);
        const auto rhs = Expr(test::sign_of(k * static_cast<int>(n + 1))) * contract(a, ctx.unit_multivector());
        CHECK(ctx.phi_inv(a) == rhs);
      }
    }
  }

  TEST_CASE("property: wedge of dual forms") {
    test::Gen g(34);
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto c = make_chart(names(n));
      const auto ctx = VolumeContext::flat(c);
      const int ni = static_cast<int>(n);
      for (int i = 0; i < 30; ++i) {
        const int k = g.integer(0, ni);
        const int l = g.integer(std::max(0, ni - k), ni);
        const auto u = g.multivector(c, k);
        const auto v = g.multivector(c, l);
        const auto lhs = ctx.phi_inv(wedge(ctx.phi(u), ctx.phi(v)));
        CHECK(lhs == Expr(test::sign_of((ni + k) * (l + 1))) * contract(ctx.phi(u), v));
        CHECK(lhs == Expr(test::sign_of((ni + 1) * (ni + l))) * contract(ctx.phi(v), u));
      }
    }
  }

  TEST_CASE("property: psi of a wedge") {
    const auto c = make_chart({"a", "b", "c", "d"});
    const auto ctx = VolumeContext::flat(c);
    test::Gen g(35);
    for (int i = 0; i < 50; ++i) {
      const int k = g.integer(1, 2);
      const int l = g.integer(1, 2);
      const auto u = g.multivector(c, k);
      const auto v = g.multivector(c, l);
      const Expr s(test::sign_of(l));
      const auto rhs = s * schouten(u, v) + s * wedge(ctx.psi(u), v) + wedge(u, ctx.psi(v));
      CHECK(ctx.psi(wedge(u, v)) == rhs);
    }
  }

  TEST_CASE("power identities on rescaled structures") {
    const auto c = make_chart({"x0", "x1", "x2", "y"});
    const auto ctx = VolumeContext::flat(c);
    const MultiVector d0 = MultiVector::unit(c, 0);
    const auto base = verify_jacobi(wedge(MultiVector::unit(c, 1) - Expr::var(2) * d0, MultiVector::unit(c, 2)), d0);
    const auto j = conformal_rescale(base, Expr(1) + Expr::var(3).pow(2) + Expr::var(1) * Expr::var(3));
    const MultiVector& pi = j.pi;
    const MultiVector& e = j.reeb;
    const MultiVector psi_pi = ctx.psi(pi);
    const Expr psi_e = ctx.psi(e).scalar_value();
    const Sampler s;
    CHECK(!psi_pi.is_zero());
    for (int k = 1; k <= j.m + 1; ++k) {
      const Expr kk(k);
      const auto p1 = power(pi, k - 1);
      CHECK(check_equal("power.psi", ctx.psi(power(pi, k)),
                        kk * wedge(psi_pi, p1) + Expr(k * (k - 1)) * wedge(e, p1), s).passed);
      CHECK(check_equal("power.psi_e", ctx.psi(wedge(power(pi, k), e)),
                        -kk * wedge(wedge(psi_pi, p1), e) + psi_e * power(pi, k), s).passed);
      CHECK(check_equal("power.bracket", schouten(pi, power(pi, k)), Expr(2 * k) * wedge(e, power(pi, k)), s)
                .passed);
    }
  }
}
