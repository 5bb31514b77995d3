#include "nbihom/examples.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "nbihom/constructions.hpp"
#include "nbihom/error.hpp"

namespace nbihom {

Algebra example_3lie_dim4(const Field& field) {
  Algebra a = Algebra::zero(field, 3, 4);
  struct Seed {
    std::array<std::size_t, 3> args;
    std::size_t target;
    int sign;
  };
  const Seed seeds[] = {{{0, 1, 2}, 3, -1}, {{0, 1, 3}, 2, 1}, {{0, 2, 3}, 1, -1}, {{1, 2, 3}, 0, 1}};
  for (const auto& seed : seeds) {
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
      IndexTuple t{seed.args[perm[0]], seed.args[perm[1]], seed.args[perm[2]]};
      Vector v = zero_vector(field, 4);
      v[seed.target] = field.from_int(seed.sign * permutation_sign(perm));
      a.set_structure(t, v);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return a;
}

Matrix example_dim4_alpha(const Field& field) {
  Matrix alpha(field, 4, 4);
  const Scalar minus_one = field.from_int(-1);
  alpha(1, 0) = minus_one;
  alpha(0, 1) = minus_one;
  alpha(3, 2) = minus_one;
  alpha(2, 3) = minus_one;
  return alpha;
}

Algebra example_3bihom_dim4(const Field& field) {
  Matrix alpha = example_dim4_alpha(field);
  Matrix beta = alpha.scaled(field.from_int(-1));
  return induce_from_nlie(example_3lie_dim4(field), alpha, beta);
}

Algebra example_bihom_dim2(const Scalar& m, const Scalar& n) {
  if (m.is_zero() || n.is_zero()) throw Error(ErrorCode::InvalidParams, "m and n must be nonzero");
  if (!(m.field() == n.field())) throw Error(ErrorCode::FieldMismatch, "m and n over different fields");
  const Field f = m.field();
  const Scalar one = f.one();
  Matrix alpha = Matrix::identity(f, 2);
  alpha(0, 1) = one / m;
  alpha(1, 1) = (n - one) / n;
  Algebra a(f, 2, 2, alpha, Matrix::identity(f, 2));
  const std::size_t e1e2[] = {0, 1};
  const std::size_t e2e1[] = {1, 0};
  const std::size_t e2e2[] = {1, 1};
  a.set_structure(e1e2, Vector{f.zero() - n, m});
  a.set_structure(e2e1, Vector{n - one, f.zero() - m * (n - one) / n});
  a.set_structure(e2e2, Vector{f.zero() - n / m, one});
  return a;
}

std::vector<std::string> example_names() { return {"example-3lie-dim4", "example-3bihom-dim4", "example-bihom-dim2"}; }

}  // namespace nbihom
