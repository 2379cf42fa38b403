// A narrated tour of straightening: take one non-standard filling, apply a
// single exchange step at its first descent, then straighten fully and
// check the result against the signed column sum it must equal.
#include <iostream>

#include "specht/specht.hpp"

using namespace specht;

int main() {
  SkewShape shape = SkewShape::parse("3,3,2");
  SkewTableau t = SkewTableau::parse(shape, "1,2,5/4,3,7/6,8");

  std::cout << "shape " << shape.str() << ", filling " << t.str() << "\n";
  std::cout << "columns read bottom to top: ";
  for (int v : t.column_word()) std::cout << v << " ";
  std::cout << "\n\n";

  // the filling is column standard but rows 1..2 descend at column 2
  auto [sorted, sign] = column_straighten(t);
  std::cout << "column sorting gives " << sorted.str() << " with sign "
            << sign << "\n";

  Box pivot{2, 1};
  GarnirData g = garnir_data(sorted, pivot);
  std::cout << "exchange at row " << pivot.row << ", column " << pivot.col
            << ": X = {";
  for (std::size_t i = 0; i < g.xs.size(); ++i)
    std::cout << (i ? "," : "") << g.xs[i];
  std::cout << "}, Y = {";
  for (std::size_t i = 0; i < g.ys.size(); ++i)
    std::cout << (i ? "," : "") << g.ys[i];
  std::cout << "}, " << g.swaps.size() << " swaps\n";
  for (const auto& [sigma, s] : g.swaps)
    std::cout << "  sign " << (s > 0 ? "+" : "") << s << "  moves "
              << apply(sorted, sigma).str() << "\n";

  std::cout << "\nfull straightening of " << t.str() << ":\n";
  SpechtVector sv = straighten(t);
  for (const auto& [u, c] : sv.terms())
    std::cout << "  " << (c > 0 ? "+" : "") << to_string(c) << " " << u.str()
              << "   entries <= 4 fill " << m_shape(u, 4).str() << "\n";

  bool ok = expand(sv) == polytabloid(t);
  std::cout << "\nexpansion equals the signed column sum: "
            << (ok ? "yes" : "NO") << "\n";
  return ok ? 0 : 1;
}
