#include "sv2/ideal.hpp"

namespace sv2 {

namespace {

void same_ambient(const DIdeal &i, const DIdeal &j)
{
	if (i.ambient() != j.ambient() && !(*i.ambient() == *j.ambient()))
		throw AmbientMismatch("ideals live in different algebras");
}

} // namespace

std::optional<std::string> d_ideal_defect(const Algebra &a, const Subspace &s)
{
	if (s.ambient_dim() != a.dim())
		return "ambient dimension " + std::to_string(s.ambient_dim()) + " != " +
		       std::to_string(a.dim());
	for (const Vec &v : s.basis()) {
		if (!s.contains(a.d(v)))
			return "not closed under d";
		for (std::size_t k = 0; k < a.dim(); ++k) {
			if (!s.contains(a.mul(a.basis(k), v)))
				return "not closed under left multiplication";
			if (!s.contains(a.mul(v, a.basis(k))))
				return "not closed under right multiplication";
		}
	}
	return std::nullopt;
}

DIdeal::DIdeal(AlgebraPtr ambient, Subspace space) : a_(std::move(ambient)), s_(std::move(space))
{
	if (auto why = d_ideal_defect(*a_, s_))
		throw NotDIdeal(*why);
}

DIdeal DIdeal::zero(const AlgebraPtr &a) { return DIdeal(a, Subspace(a->field(), a->dim())); }

DIdeal DIdeal::whole(const AlgebraPtr &a)
{
	return DIdeal(a, Subspace::whole(a->field(), a->dim()));
}

DIdeal close(const AlgebraPtr &ap, const std::vector<Vec> &generators)
{
	const Algebra &a = *ap;
	Subspace s(a.field(), a.dim(), generators);
	for (;;) {
		std::vector<Vec> grow = s.basis();
		for (const Vec &v : s.basis()) {
			grow.push_back(a.d(v));
			for (std::size_t k = 1; k < a.dim(); ++k)
				grow.push_back(a.mul(a.basis(k), v));
		}
		Subspace next(a.field(), a.dim(), grow);
		if (next.dim() == s.dim())
			break;
		s = std::move(next);
	}
	for (const Vec &v : s.basis())
		for (std::size_t k = 1; k < a.dim(); ++k)
			if (!s.contains(a.mul(v, a.basis(k))))
				throw TheoremViolation("left d-ideal is not a right ideal");
	return DIdeal(ap, std::move(s));
}

DIdeal ideal_sum(const DIdeal &i, const DIdeal &j)
{
	same_ambient(i, j);
	return DIdeal(i.ambient(), i.space().sum(j.space()));
}

DIdeal ideal_intersect(const DIdeal &i, const DIdeal &j)
{
	same_ambient(i, j);
	return DIdeal(i.ambient(), i.space().intersect(j.space()));
}

DIdeal ideal_product(const DIdeal &i, const DIdeal &j)
{
	same_ambient(i, j);
	const Algebra &a = *i.ambient();
	std::vector<Vec> prods;
	for (const Vec &u : i.space().basis())
		for (const Vec &v : j.space().basis())
			prods.push_back(a.mul(u, v));
	Subspace s(a.field(), a.dim(), prods);
	if (auto why = d_ideal_defect(a, s))
		throw TheoremViolation("product of d-ideals: " + *why);
	return DIdeal(i.ambient(), std::move(s));
}

DIdeal ideal_power(const DIdeal &i, std::size_t m)
{
	DIdeal r = DIdeal::whole(i.ambient());
	for (std::size_t e = 0; e < m; ++e)
		r = ideal_product(r, i);
	return r;
}

bool is_coprime(const DIdeal &i, const DIdeal &j)
{
	return ideal_sum(i, j).dim() == i.ambient()->dim();
}

std::optional<std::size_t> nilpotency_index(const DIdeal &i)
{
	DIdeal p = i;
	for (std::size_t m = 1;; ++m) {
		if (p.dim() == 0)
			return m;
		DIdeal next = ideal_product(p, i);
		if (next.dim() == p.dim())
			return std::nullopt;
		p = std::move(next);
	}
}

} // namespace sv2
