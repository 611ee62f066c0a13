#pragma once

#include <optional>

#include "sv2/polyd.hpp"

namespace sv2 {

/// P^2_0 / (x1^2 + h xi1 xi2, x2^2 + k xi1 xi2, x1 x2 + p xi1 xi2, xi1 x1,
/// xi2 x2, xi1 x2 + xi2 x1) at degree bound 4.
Presentation d7_presentation(const FieldElem &h, const FieldElem &k, const FieldElem &p);
PresentedAlgebra make_D(const FieldElem &h, const FieldElem &k, const FieldElem &p);

/// v3 coefficients of v1 w1, v2 w2, v2 w1, w1^2, w2^2, w1 w2 in the basis
/// {1, v1, v2, v3, w1, w2, w3}; they fix the rest of the products.
struct ProductTable {
	FieldElem a3, b3, g3, h3, k3, p3;
};

struct CanonicalForm7 {
	FieldElem h, k, p;
	/// D(h,k,p) -> A, verified
	Morphism iso;
	ProductTable table;
	std::size_t dim_im = 0, dim_ker = 0;
};

/// NotApplicable unless A is a 7-dimensional noncommutative d-algebra.
CanonicalForm7 classify7(const AlgebraPtr &a);

struct QReduction {
	FieldElem q;
	/// D(0,0,q) -> D(h,k,p), verified
	Morphism iso;
};

/// NeedsExtension when k t^2 + t + h (or h t^2 + t + k after the swap) has
/// no root in the field.
QReduction reduce_to_q(const FieldElem &h, const FieldElem &k, const FieldElem &p);

/// D(0,0,0) -> D(0,0,q) via x_i -> sqrt(q) xi_i + x_i, verified.
Morphism kill_q(const FieldElem &q);

struct Normalization {
	CanonicalForm7 form;
	FieldElem q;
	/// A (after any extension) -> D(0,0,0), verified
	Morphism iso;
	/// set when the field had to be doubled
	std::optional<Embedding> extension;
};

/// A ~ D(h,k,p) ~ D(0,0,q) ~ D(0,0,0), doubling the field at most once.
Normalization normalize7(const AlgebraPtr &a);

} // namespace sv2
