// Builds <e_{1,0}> for n = 7 over F_9 and prints its generator matrix, dual dimension and minimum distance.
#include <iostream>

#include "deltacodes/reference.hpp"

using namespace deltacodes;

int main() {
  auto atlas = reference::seven_three::atlas();
  auto ctx = make_context(atlas, FieldMode::paper);

  auto C = cyclic_span(ctx, atlas->e(1, 0));
  auto D = dual_delta(C);
  auto d = min_distance(C);

  std::cout << "generator matrix over " << ctx->Fqt->spec() << ":\n" << matrix_text(C);
  std::cout << "F_3-dimension " << C.k_fq() << ", dual F_3-dimension " << D.k_fq() << "\n";
  std::cout << "self-orthogonal: " << (is_self_orthogonal(C) ? "yes" : "no") << "\n";
  std::cout << "minimum distance " << d.d << (d.exact ? " (exhaustive)" : " (upper bound)") << "\n";
}
