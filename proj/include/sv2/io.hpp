#pragma once

#include <optional>
#include <string>

#include "sv2/lie2.hpp"
#include "sv2/polyd.hpp"

namespace sv2 {

enum class Kind { assoc2, dalgebra, lie2 };
std::string kind_name(Kind k);

/// Either an algebra (assoc2, dalgebra) or a Lie algebra (lie2).
struct AlgebraFile {
	Kind kind = Kind::dalgebra;
	std::optional<Algebra> algebra;
	std::optional<LieAlgebra> lie;
};

/// Line format:
///   field gf2_<k> / kind <assoc2|dalgebra|lie2> / n <dim> / unit <idx> /
///   labels ... / tensor (or bracket) with n^2 rows of n hex scalars, row
///   (i,j) holding e_i e_j / dmat with n rows.
/// '#' starts a comment. A nonzero unit index is moved to position 0.
AlgebraFile parse_algebra_file(const std::string &text);
std::string print_algebra_file(const Algebra &a, Kind kind = Kind::dalgebra);
std::string print_lie_file(const LieAlgebra &l);

/// `P(r,s) / [rel, ...] @ deg N`; products by '*' or juxtaposition,
/// generators x<i>, xi<i>, y<i> (1-based), '^e', hex coefficients; '-' is
/// '+' in characteristic 2.
Presentation parse_presentation(const std::string &text, const Field &f);

/// True when the first non-comment character starts "P(".
bool looks_like_presentation(const std::string &text);

} // namespace sv2
