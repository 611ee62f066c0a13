#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sv2/algebra.hpp"

namespace sv2 {

/// y^a xi^M x^b in P^r_s, written with the y-block, then the xi-block, then
/// the x-block ascending. xi squares vanish, so M is a bit mask.
struct PMono {
	std::vector<uint32_t> y;
	uint32_t xi = 0;
	std::vector<uint32_t> x;

	std::size_t degree() const;
	std::size_t x_degree() const;
	auto operator<=>(const PMono &) const = default;
};

std::string mono_str(const PMono &m);

class PElem {
public:
	PElem(const Field &f, std::size_t r, std::size_t s) : f_(&f), r_(r), s_(s) {}

	static PElem one(const Field &f, std::size_t r, std::size_t s);
	static PElem x(const Field &f, std::size_t r, std::size_t s, std::size_t i);
	static PElem xi(const Field &f, std::size_t r, std::size_t s, std::size_t i);
	static PElem y(const Field &f, std::size_t r, std::size_t s, std::size_t i);
	static PElem mono(const Field &f, std::size_t r, std::size_t s, const PMono &m);

	const Field &field() const { return *f_; }
	std::size_t r() const { return r_; }
	std::size_t s() const { return s_; }
	const std::map<PMono, FieldElem> &terms() const { return t_; }
	bool is_zero() const { return t_.empty(); }
	/// -1 for zero
	int degree() const;

	void add_term(const PMono &m, const FieldElem &c);
	PElem operator+(const PElem &o) const;
	PElem &operator+=(const PElem &o);
	PElem scale(const FieldElem &c) const;
	bool operator==(const PElem &o) const;

	std::string str() const;

private:
	const Field *f_;
	std::size_t r_, s_;
	std::map<PMono, FieldElem> t_;
};

/// Product in normal form; x_j x_i = x_i x_j + xi_i xi_j for i < j.
/// ShapeMismatch when (r, s) or fields differ.
PElem normal_mul(const PElem &a, const PElem &b);
/// The derivation d(x_i) = xi_i, d(xi_i) = d(y_j) = 0.
PElem p_d(const PElem &a);

/// A letter of a free word: kind 0 = y, 1 = xi, 2 = x.
struct Letter {
	int kind;
	std::size_t index;
	auto operator<=>(const Letter &) const = default;
};
/// Normal form of a product of letters, applying the swap rule at the
/// leftmost or rightmost descent; the two must agree.
PElem word_normal_form(const Field &f, std::size_t r, std::size_t s,
                       const std::vector<Letter> &word, bool leftmost = true);
/// The letters of a normal monomial in order.
std::vector<Letter> mono_word(const PMono &m);

/// Normal monomials of P^r_s with degree <= bound.
std::vector<PMono> monomials_upto(std::size_t r, std::size_t s, std::size_t bound);

struct Presentation {
	const Field *field;
	std::size_t r = 0, s = 0;
	std::vector<PElem> relations;
	std::size_t degree_bound = 0;

	/// In the text syntax read by the shell.
	std::string str() const;
};

struct PresentedAlgebra {
	AlgebraPtr algebra;
	/// standard monomial of each basis vector
	std::vector<PMono> standard;
};

/// P^r_s / (relations), truncated at the degree bound. NotClosedAtBound
/// unless the standard monomials stop at some degree D with 2D <= bound
/// and the result satisfies the d-algebra axioms; RelationsNotDClosed
/// when d(relation) leaves the ideal.
PresentedAlgebra quotient_to_dalgebra(const Presentation &p);

/// Image of a polynomial under x_i -> xs[i], xi_i -> d(xs[i]), y_j -> ys[j].
Vec evaluate(const Algebra &a, const std::vector<Vec> &xs, const std::vector<Vec> &ys,
             const PElem &e);

/// Relations generating the kernel of the evaluation map on monomials up to
/// the bound. Generators with d != 0 must come first (they become the x's);
/// NotGenerating when they do not generate A at this bound.
Presentation present(const Algebra &a, const std::vector<Vec> &generators,
                     std::size_t bound);

} // namespace sv2

namespace sv2 {

/// The d-algebra map out of a presented algebra fixed by the images of the
/// x's and y's (xi_i goes to d of the image of x_i).
Morphism morphism_from_generators(const PresentedAlgebra &src, const AlgebraPtr &target,
                                  const std::vector<Vec> &xs, const std::vector<Vec> &ys);

} // namespace sv2
