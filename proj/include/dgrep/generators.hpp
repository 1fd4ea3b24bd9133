#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dgrep/complex.hpp"
#include "dgrep/dgcat.hpp"
#include "dgrep/modules.hpp"
#include "dgrep/report.hpp"

namespace dgrep {

/// y -> A(y, x), with f: y -> z acting by h -> (-1)^{|f||h|} h o f.
DgModule representable(DgCategoryPtr a, std::size_t x);

/// value(y) = F(y) (x) V, with f acting by F(f) (x) 1.
DgModule oslash(const DgModule& f, const Complex& v);

/// G_{x,n} = A(-, x) (x) D^n.
DgModule generator(DgCategoryPtr a, std::size_t x, int n);

/// The module map G_{x,n} -> M determined by m in M(x)^{n-1}:
/// h (x) e -> M(h) m and h (x) f -> M(h) dm.
ModuleMap yoneda_map(const DgModule& m, std::size_t x, int n, const Vector& element);

/// Basis positions of M(x) in degree k.
std::vector<std::size_t> degree_positions(const Complex& c, int k);

/// Every basis element of M(y)^m, lo <= m <= hi, must lie in the span of the
/// images of all maps G_{x,n} -> M with lo <= n <= hi.
Report check_generates(const DgModule& m, int lo, int hi);

/// A window of the generator category: objects are the given (x, n) and
/// hom((x,n), (y,m)) is the group of module maps G_{x,n} -> G_{y,m},
/// identified with G_{y,m}(x)^{n-1}. The result is concentrated in degree 0.
DgCategoryPtr p_window(DgCategoryPtr a, const std::vector<std::pair<std::size_t, int>>& pairs);

}  // namespace dgrep
