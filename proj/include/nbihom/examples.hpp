#pragma once

#include <string>
#include <vector>

#include "nbihom/algebra.hpp"

namespace nbihom {

/// The 4-dimensional 3-Lie algebra [e1,e2,e3]=-e4, [e1,e2,e4]=e3,
/// [e1,e3,e4]=-e2, [e2,e3,e4]=e1 (extended skew-symmetrically), identity twists.
[[nodiscard]] Algebra example_3lie_dim4(const Field& field = Field::rationals());

/// α(e1)=-e2, α(e2)=-e1, α(e3)=-e4, α(e4)=-e3.
[[nodiscard]] Matrix example_dim4_alpha(const Field& field = Field::rationals());

/// The 3-Lie algebra above twisted by α and β=-α.
[[nodiscard]] Algebra example_3bihom_dim4(const Field& field = Field::rationals());

/// Two-parameter binary family on {e1, e2} with β = id. Throws InvalidParams
/// when m or n is zero.
[[nodiscard]] Algebra example_bihom_dim2(const Scalar& m, const Scalar& n);

[[nodiscard]] std::vector<std::string> example_names();

}  // namespace nbihom
