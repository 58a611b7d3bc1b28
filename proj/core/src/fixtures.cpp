#include "gvk/fixtures.hpp"

#include <algorithm>
#include <array>

namespace gvk {
namespace {

constexpr std::array kFixtures{
    Fixture{"poisson-r3", "symplectic leaves dx3 = const of d/dx1^d/dx2 on R^3",
            "chart x1 x2 x3\n"
            "vol dx1^dx2^dx3\n"
            "pi = d/dx1^d/dx2\n"
            "E = 0\n"
            "run verify pair gv codim1 poissonize\n"},
    Fixture{"contact-r3", "flat contact model on R^3, a single leaf",
            "chart x0 x1 x2\n"
            "vol dx0^dx1^dx2\n"
            "pi = -x2*d/dx0^d/dx2 + d/dx1^d/dx2\n"
            "E = d/dx0\n"
            "run poissonize\n"},
    Fixture{"contact-r3-ext", "flat contact model on R^3 times a transversal line",
            "chart x0 x1 x2 y\n"
            "vol dx0^dx1^dx2^dy\n"
            "pi = -x2*d/dx0^d/dx2 + d/dx1^d/dx2\n"
            "E = d/dx0\n"
            "run verify pair gv codim1 poissonize bridge\n"},
    Fixture{"lcs-model-r2m-m1", "flat LCS model on R^2 times a transversal line",
            "chart x1 x2 y\n"
            "vol dx1^dx2^dy\n"
            "pi = d/dx1^d/dx2\n"
            "E = 0\n"
            "run verify pair gv codim1 poissonize\n"},
    Fixture{"lcs-model-r2m-m2", "flat LCS model on R^4 times a transversal line",
            "chart x1 x2 x3 x4 y\n"
            "vol dx1^dx2^dx3^dx4^dy\n"
            "pi = d/dx1^d/dx2 + d/dx3^d/dx4\n"
            "E = 0\n"
            "run verify pair gv codim1 poissonize\n"},
    Fixture{"contact-model-r2m1-m1", "flat contact model on R^3 times a transversal line",
            "chart x0 x1 x2 y\n"
            "vol dx0^dx1^dx2^dy\n"
            "pi = -x2*d/dx0^d/dx2 + d/dx1^d/dx2\n"
            "E = d/dx0\n"
            "run verify pair gv codim1 poissonize bridge\n"},
    Fixture{"contact-model-r2m1-m2", "flat contact model on R^5 times a transversal line",
            "chart x0 x1 x2 x3 x4 y\n"
            "vol dx0^dx1^dx2^dx3^dx4^dy\n"
            "pi = -x2*d/dx0^d/dx2 + d/dx1^d/dx2 - x4*d/dx0^d/dx4 + d/dx3^d/dx4\n"
            "E = d/dx0\n"
            "run verify pair gv codim1 poissonize bridge\n"},
    Fixture{"rescaled-poisson-r3", "poisson-r3 rescaled by a = exp(x3)",
            "chart x1 x2 x3\n"
            "vol dx1^dx2^dx3\n"
            "pi = exp(x3)*d/dx1^d/dx2\n"
            "E = 0\n"
            "run verify pair gv codim1 poissonize\n"},
    Fixture{"rescaled-lcs-r3", "lcs-model-r2m-m1 rescaled by a = exp(x2*y + x1*y^2); gv != 0",
            "chart x1 x2 y\n"
            "vol dx1^dx2^dy\n"
            "pi = exp(x2*y + x1*y^2)*d/dx1^d/dx2\n"
            "E = y*exp(x2*y + x1*y^2)*d/dx1 - y^2*exp(x2*y + x1*y^2)*d/dx2\n"
            "run verify pair gv codim1 poissonize\n"},
    Fixture{"rescaled-contact-r4", "contact-r3-ext rescaled by a = exp(x2 + x1*y^2); gv != 0",
            "chart x0 x1 x2 y\n"
            "vol dx0^dx1^dx2^dy\n"
            "pi = -x2*exp(x2 + x1*y^2)*d/dx0^d/dx2 + exp(x2 + x1*y^2)*d/dx1^d/dx2\n"
            "E = (exp(x2 + x1*y^2) - x2*exp(x2 + x1*y^2))*d/dx0 + exp(x2 + x1*y^2)*d/dx1"
            " - y^2*exp(x2 + x1*y^2)*d/dx2\n"
            "run verify pair gv codim1 poissonize bridge\n"},
    Fixture{"contact-form-r3", "Jacobi tensors of the contact form dx0 + x2*dx1",
            "chart x0 x1 x2\n"
            "theta = dx0 + x2*dx1\n"
            "run poissonize\n"},
    Fixture{"lcs-form-r2", "Jacobi tensors of the LCS pair (dx1, exp(x1)*dx1^dx2)",
            "chart x1 x2\n"
            "omega = dx1\n"
            "Omega = exp(x1)*dx1^dx2\n"
            "run poissonize\n"},
};

}  // namespace

std::span<const Fixture> fixtures() { return kFixtures; }

const Fixture* find_fixture(std::string_view name) {
  const auto it = std::find_if(kFixtures.begin(), kFixtures.end(), [&](const Fixture& f) { return f.name == name; });
  return it == kFixtures.end() ? nullptr : &*it;
}

}  // namespace gvk
