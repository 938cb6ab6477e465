// Library tour: build Schur polynomials several ways, take a windowed
// coefficient determinant, and verify one identity programmatically.

#include <iostream>

#include "schur/cli.hpp"

int main() {
  using namespace schur;

  // Schur polynomial of shape (2,1) in two variables, by two routes.
  ContextPtr xctx = VarContext::make(2, 0, 0, false);
  Partition lam = Partition::parse("2,1");
  Poly a = schur_poly(xctx, Bank::x, lam, 2, SchurMethod::bialternant);
  Poly b = schur_poly(xctx, Bank::x, lam, 2, SchurMethod::ssyt);
  std::cout << "s_(2,1)(x1,x2) = " << a.str() << "\n";
  std::cout << "methods agree: " << (a == b ? "yes" : "no") << "\n";

  // Coefficient determinant det(h_{lambda_i - i + j}) for the same shape.
  ContextPtr yctx = VarContext::make(0, 2, 0, false);
  Family h = Family::h(yctx, 2);
  Poly det = family_det(h, lam, Window::unbounded(2));
  std::cout << "det(h_{(2,1)_i - i + j}) = " << det.str() << "\n";

  // One bounded identity end to end.
  VerifyOptions opt;
  opt.n = 2;
  opt.bounds = {2, 2};
  opt.t_mode = TMode::repeated;
  IdentityReport rep = verify(IdentityId::bounded_t, opt);
  std::cout << emit_report_text(rep);
  return rep.equal ? 0 : 1;
}
