#include "hochglue/examples.hpp"

#include "hochglue/errors.hpp"

namespace hochglue {

const std::vector<BuiltinExample>& builtin_examples() {
  static const std::vector<BuiltinExample> all = {
      {"rad-cube-zero", "radical cube zero algebra on two double arrows; new relations in both directions", "alpha", "beta", R"(# all paths of length 3 vanish
field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow mu e1 e2
arrow alpha e1 e2
arrow eta e2 e1
arrow lambda e3 e2
arrow beta e3 e4
arrow b e3 e4
arrow xi e4 e3
rel mu eta mu
rel mu eta alpha
rel alpha eta mu
rel alpha eta alpha
rel eta mu eta
rel eta alpha eta
rel lambda eta mu
rel lambda eta alpha
rel beta xi lambda
rel beta xi beta
rel beta xi b
rel b xi lambda
rel b xi beta
rel b xi b
rel xi lambda eta
rel xi beta xi
rel xi b xi
)"},
      {"a4-path", "path algebra of the linearly oriented A4 quiver", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow eta e2 e3
arrow beta e3 e4
)"},
      {"two-blocks", "two A3 blocks glued across blocks", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
vertex e5
vertex e6
arrow alpha e1 e2
arrow epsilon e2 e3
arrow delta e4 e5
arrow beta e5 e6
)"},
      {"a4-two-relations", "A4 with both length-2 paths in the ideal", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow eta e2 e3
arrow beta e3 e4
rel alpha eta
rel eta beta
)"},
      {"rad-square-zero-pairs", "radical square zero; six special pairs, four independent kernel elements", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow a e2 e1
arrow eta e3 e2
arrow beta e3 e4
arrow b e3 e4
rel alpha a
rel a alpha
rel eta a
)"},
      {"loops-t1", "radical square zero with 1 loop(s) at the source of alpha and one loop at the source of beta", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow a1 e1 e1
arrow p e3 e3
arrow beta e3 e4
rel a1 a1
rel a1 alpha
rel p p
rel p beta
)"},
      {"loops-t2", "radical square zero with 2 loop(s) at the source of alpha and one loop at the source of beta", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow a1 e1 e1
arrow a2 e1 e1
arrow p e3 e3
arrow beta e3 e4
rel a1 a1
rel a1 a2
rel a2 a1
rel a2 a2
rel a1 alpha
rel a2 alpha
rel p p
rel p beta
)"},
      {"loops-t3", "radical square zero with 3 loop(s) at the source of alpha and one loop at the source of beta", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow a1 e1 e1
arrow a2 e1 e1
arrow a3 e1 e1
arrow p e3 e3
arrow beta e3 e4
rel a1 a1
rel a1 a2
rel a1 a3
rel a2 a1
rel a2 a2
rel a2 a3
rel a3 a1
rel a3 a2
rel a3 a3
rel a1 alpha
rel a2 alpha
rel a3 alpha
rel p p
rel p beta
)"},
      {"loops-t4", "radical square zero with 4 loop(s) at the source of alpha and one loop at the source of beta", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow a1 e1 e1
arrow a2 e1 e1
arrow a3 e1 e1
arrow a4 e1 e1
arrow p e3 e3
arrow beta e3 e4
rel a1 a1
rel a1 a2
rel a1 a3
rel a1 a4
rel a2 a1
rel a2 a2
rel a2 a3
rel a2 a4
rel a3 a1
rel a3 a2
rel a3 a3
rel a3 a4
rel a4 a1
rel a4 a2
rel a4 a3
rel a4 a4
rel a1 alpha
rel a2 alpha
rel a3 alpha
rel a4 alpha
rel p p
rel p beta
)"},
      {"loops-t5", "radical square zero with 5 loop(s) at the source of alpha and one loop at the source of beta", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow a1 e1 e1
arrow a2 e1 e1
arrow a3 e1 e1
arrow a4 e1 e1
arrow a5 e1 e1
arrow p e3 e3
arrow beta e3 e4
rel a1 a1
rel a1 a2
rel a1 a3
rel a1 a4
rel a1 a5
rel a2 a1
rel a2 a2
rel a2 a3
rel a2 a4
rel a2 a5
rel a3 a1
rel a3 a2
rel a3 a3
rel a3 a4
rel a3 a5
rel a4 a1
rel a4 a2
rel a4 a3
rel a4 a4
rel a4 a5
rel a5 a1
rel a5 a2
rel a5 a3
rel a5 a4
rel a5 a5
rel a1 alpha
rel a2 alpha
rel a3 alpha
rel a4 alpha
rel a5 alpha
rel p p
rel p beta
)"},
      {"combination-generator", "path algebra where a combination of special pairs is a cocycle but neither summand is", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
vertex e5
vertex e6
arrow b e3 e1
arrow alpha e1 e2
arrow p e1 e5
arrow c e2 e5
arrow beta e5 e6
arrow a e5 e4
)"},
      {"loop-square", "loop with square zero at the source of alpha (characteristic zero)", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow xi e1 e1
arrow eta e3 e2
arrow beta e3 e4
rel xi xi
)"},
      {"loop-square-f2", "the same algebra in characteristic two", "alpha", "beta", R"(field F 2
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow xi e1 e1
arrow eta e3 e2
arrow beta e3 e4
rel xi xi
)"},
      {"different-block-image", "radical square zero, gluing across two blocks", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
vertex e5
arrow a e1 e3
arrow alpha e1 e2
arrow b e3 e2
arrow beta e4 e5
rel a b
)"},
      {"center-cancellation", "center grows by one through a cycle across both glued vertices", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow xi e2 e1
arrow a e3 e2
arrow beta e3 e4
arrow b e4 e3
rel xi alpha xi
rel b beta b
)"},
      {"zigzag-4", "radical square zero zig-zag A4", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow x2 e3 e2
arrow beta e3 e4
)"},
      {"zigzag-6", "radical square zero zig-zag A6", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
vertex e5
vertex e6
arrow alpha e1 e2
arrow x2 e3 e2
arrow x3 e3 e4
arrow x4 e5 e4
arrow beta e5 e6
)"},
      {"kronecker-line-m2", "radical square zero line with 2 parallel middle arrows", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow d1 e2 e3
arrow d2 e2 e3
arrow beta e3 e4
rel alpha d1
rel alpha d2
rel d1 beta
rel d2 beta
)"},
      {"kronecker-line-m3", "radical square zero line with 3 parallel middle arrows", "alpha", "beta", R"(field Q
vertex e1
vertex e2
vertex e3
vertex e4
arrow alpha e1 e2
arrow d1 e2 e3
arrow d2 e2 e3
arrow d3 e2 e3
arrow beta e3 e4
rel alpha d1
rel alpha d2
rel alpha d3
rel d1 beta
rel d2 beta
rel d3 beta
)"},
  };
  return all;
}

const BuiltinExample& builtin_example(const std::string& name) {
  for (const auto& e : builtin_examples()) {
    if (e.name == name) return e;
  }
  throw Error("unknown built-in example '" + name + "'");
}

}  // namespace hochglue
