#include "sv2/polyd.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

namespace sv2 {

std::size_t PMono::degree() const
{
	return std::accumulate(y.begin(), y.end(), std::size_t{0}) +
	       static_cast<std::size_t>(std::popcount(xi)) + x_degree();
}

std::size_t PMono::x_degree() const
{
	return std::accumulate(x.begin(), x.end(), std::size_t{0});
}

std::string mono_str(const PMono &m)
{
	std::vector<std::string> parts;
	auto power = [&](const std::string &base, uint32_t e) {
		if (e == 1)
			parts.push_back(base);
		else if (e > 1)
			parts.push_back(base + "^" + std::to_string(e));
	};
	for (std::size_t j = 0; j < m.y.size(); ++j)
		power("y" + std::to_string(j + 1), m.y[j]);
	for (std::size_t i = 0; i < 32; ++i)
		if (m.xi >> i & 1)
			parts.push_back("xi" + std::to_string(i + 1));
	for (std::size_t i = 0; i < m.x.size(); ++i)
		power("x" + std::to_string(i + 1), m.x[i]);
	if (parts.empty())
		return "1";
	std::string s = parts[0];
	for (std::size_t i = 1; i < parts.size(); ++i)
		s += "*" + parts[i];
	return s;
}

// ---------------------------------------------------------------- PElem

namespace {

PMono unit_mono(std::size_t r, std::size_t s)
{
	return PMono{std::vector<uint32_t>(s, 0), 0, std::vector<uint32_t>(r, 0)};
}

void same_shape(const PElem &a, const PElem &b)
{
	if (&a.field() != &b.field() || a.r() != b.r() || a.s() != b.s())
		throw ShapeMismatch("polynomials from different P(r,s) or fields");
}

} // namespace

PElem PElem::mono(const Field &f, std::size_t r, std::size_t s, const PMono &m)
{
	if (m.x.size() != r || m.y.size() != s || (r < 32 && (m.xi >> r) != 0))
		throw ShapeMismatch("monomial does not belong to P(" + std::to_string(r) + "," +
		                    std::to_string(s) + ")");
	PElem e(f, r, s);
	e.add_term(m, f.one());
	return e;
}

PElem PElem::one(const Field &f, std::size_t r, std::size_t s)
{
	return mono(f, r, s, unit_mono(r, s));
}

PElem PElem::x(const Field &f, std::size_t r, std::size_t s, std::size_t i)
{
	if (i >= r)
		throw IndexOutOfRange("x" + std::to_string(i + 1) + " with r = " + std::to_string(r));
	PMono m = unit_mono(r, s);
	m.x[i] = 1;
	return mono(f, r, s, m);
}

PElem PElem::xi(const Field &f, std::size_t r, std::size_t s, std::size_t i)
{
	if (i >= r)
		throw IndexOutOfRange("xi" + std::to_string(i + 1) + " with r = " + std::to_string(r));
	PMono m = unit_mono(r, s);
	m.xi = uint32_t{1} << i;
	return mono(f, r, s, m);
}

PElem PElem::y(const Field &f, std::size_t r, std::size_t s, std::size_t i)
{
	if (i >= s)
		throw IndexOutOfRange("y" + std::to_string(i + 1) + " with s = " + std::to_string(s));
	PMono m = unit_mono(r, s);
	m.y[i] = 1;
	return mono(f, r, s, m);
}

int PElem::degree() const
{
	int d = -1;
	for (const auto &[m, c] : t_)
		d = std::max(d, static_cast<int>(m.degree()));
	return d;
}

void PElem::add_term(const PMono &m, const FieldElem &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = t_.try_emplace(m, c);
	if (!fresh) {
		it->second += c;
		if (it->second.is_zero())
			t_.erase(it);
	}
}

PElem PElem::operator+(const PElem &o) const
{
	PElem r = *this;
	r += o;
	return r;
}

PElem &PElem::operator+=(const PElem &o)
{
	same_shape(*this, o);
	for (const auto &[m, c] : o.t_)
		add_term(m, c);
	return *this;
}

PElem PElem::scale(const FieldElem &c) const
{
	PElem r(*f_, r_, s_);
	for (const auto &[m, v] : t_)
		r.add_term(m, v * c);
	return r;
}

bool PElem::operator==(const PElem &o) const
{
	return f_ == o.f_ && r_ == o.r_ && s_ == o.s_ && t_ == o.t_;
}

std::string PElem::str() const
{
	if (t_.empty())
		return "0";
	std::string s;
	for (const auto &[m, c] : t_) {
		if (!s.empty())
			s += " + ";
		const std::string ms = mono_str(m);
		if (c.is_one())
			s += ms;
		else
			s += c.hex() + (ms == "1" ? "" : "*" + ms);
	}
	return s;
}

// ---------------------------------------------------------------- rewriting

namespace {

using XWord = std::vector<uint8_t>;
// (extra xi mask, sorted word) -> present with odd multiplicity
using XTerms = std::map<std::pair<uint32_t, XWord>, bool>;

void toggle(XTerms &t, const std::pair<uint32_t, XWord> &k)
{
	auto [it, fresh] = t.try_emplace(k, true);
	if (!fresh)
		t.erase(it);
}

XTerms sort_x(const XWord &w, bool leftmost);

XTerms sort_x_uncached(const XWord &w, bool leftmost)
{
	std::ptrdiff_t p = -1;
	for (std::size_t i = 0; i + 1 < w.size(); ++i)
		if (w[i] > w[i + 1]) {
			p = static_cast<std::ptrdiff_t>(i);
			if (leftmost)
				break;
		}
	if (p < 0)
		return XTerms{{{0, w}, true}};
	const auto q = static_cast<std::size_t>(p);
	XWord swapped = w;
	std::swap(swapped[q], swapped[q + 1]);
	XTerms out = sort_x(swapped, leftmost);
	XWord removed;
	for (std::size_t i = 0; i < w.size(); ++i)
		if (i != q && i != q + 1)
			removed.push_back(w[i]);
	const uint32_t bits = (uint32_t{1} << w[q]) | (uint32_t{1} << w[q + 1]);
	for (const auto &[k, v] : sort_x(removed, leftmost))
		if ((k.first & bits) == 0)
			toggle(out, {k.first | bits, k.second});
	return out;
}

XTerms sort_x(const XWord &w, bool leftmost)
{
	thread_local std::map<std::pair<XWord, bool>, XTerms> memo;
	auto key = std::make_pair(w, leftmost);
	if (auto it = memo.find(key); it != memo.end())
		return it->second;
	XTerms r = sort_x_uncached(w, leftmost);
	memo.emplace(std::move(key), r);
	return r;
}

XWord x_word(const std::vector<uint32_t> &exps)
{
	XWord w;
	for (std::size_t i = 0; i < exps.size(); ++i)
		for (uint32_t e = 0; e < exps[i]; ++e)
			w.push_back(static_cast<uint8_t>(i));
	return w;
}

std::vector<uint32_t> x_exps(const XWord &w, std::size_t r)
{
	std::vector<uint32_t> e(r, 0);
	for (uint8_t i : w)
		++e[i];
	return e;
}

// y^a xi^M times an x-word, normalized
void add_normalized(PElem &out, const FieldElem &c, const std::vector<uint32_t> &y,
                    uint32_t xi, const XWord &w, bool leftmost)
{
	for (const auto &[k, v] : sort_x(w, leftmost)) {
		if (k.first & xi)
			continue;
		out.add_term(PMono{y, xi | k.first, x_exps(k.second, out.r())}, c);
	}
}

} // namespace

PElem normal_mul(const PElem &a, const PElem &b)
{
	same_shape(a, b);
	PElem out(a.field(), a.r(), a.s());
	for (const auto &[ma, ca] : a.terms())
		for (const auto &[mb, cb] : b.terms()) {
			if (ma.xi & mb.xi)
				continue;
			std::vector<uint32_t> y = ma.y;
			for (std::size_t j = 0; j < y.size(); ++j)
				y[j] += mb.y[j];
			XWord w = x_word(ma.x);
			const XWord wb = x_word(mb.x);
			w.insert(w.end(), wb.begin(), wb.end());
			add_normalized(out, ca * cb, y, ma.xi | mb.xi, w, true);
		}
	return out;
}

PElem p_d(const PElem &a)
{
	PElem out(a.field(), a.r(), a.s());
	for (const auto &[m, c] : a.terms())
		for (std::size_t i = 0; i < m.x.size(); ++i) {
			// d(x_i^e) = e xi_i x_i^(e-1)
			if (m.x[i] % 2 == 0 || (m.xi >> i & 1))
				continue;
			PMono t = m;
			t.xi |= uint32_t{1} << i;
			--t.x[i];
			out.add_term(t, c);
		}
	return out;
}

PElem word_normal_form(const Field &f, std::size_t r, std::size_t s,
                       const std::vector<Letter> &word, bool leftmost)
{
	PElem out(f, r, s);
	std::vector<uint32_t> y(s, 0);
	uint32_t xi = 0;
	XWord w;
	for (const Letter &l : word) {
		const std::size_t lim = l.kind == 0 ? s : r;
		if (l.index >= lim)
			throw IndexOutOfRange("letter index out of range");
		if (l.kind == 0)
			++y[l.index];
		else if (l.kind == 1) {
			const uint32_t bit = uint32_t{1} << l.index;
			if (xi & bit)
				return out;
			xi |= bit;
		} else
			w.push_back(static_cast<uint8_t>(l.index));
	}
	add_normalized(out, f.one(), y, xi, w, leftmost);
	return out;
}

std::vector<Letter> mono_word(const PMono &m)
{
	std::vector<Letter> w;
	for (std::size_t j = 0; j < m.y.size(); ++j)
		for (uint32_t e = 0; e < m.y[j]; ++e)
			w.push_back({0, j});
	for (std::size_t i = 0; i < 32; ++i)
		if (m.xi >> i & 1)
			w.push_back({1, i});
	for (std::size_t i = 0; i < m.x.size(); ++i)
		for (uint32_t e = 0; e < m.x[i]; ++e)
			w.push_back({2, i});
	return w;
}

namespace {

void exps_upto(std::size_t vars, std::size_t bound, std::vector<uint32_t> &cur,
               std::vector<std::vector<uint32_t>> &out)
{
	if (cur.size() == vars) {
		out.push_back(cur);
		return;
	}
	for (std::size_t e = 0; e <= bound; ++e) {
		cur.push_back(static_cast<uint32_t>(e));
		exps_upto(vars, bound - e, cur, out);
		cur.pop_back();
	}
}

std::vector<std::vector<uint32_t>> all_exps(std::size_t vars, std::size_t bound)
{
	std::vector<std::vector<uint32_t>> out;
	std::vector<uint32_t> cur;
	exps_upto(vars, bound, cur, out);
	return out;
}

std::size_t total(const std::vector<uint32_t> &v)
{
	return std::accumulate(v.begin(), v.end(), std::size_t{0});
}

} // namespace

std::vector<PMono> monomials_upto(std::size_t r, std::size_t s, std::size_t bound)
{
	if (r > 31)
		throw DegreeLimit("at most 31 odd generators");
	std::vector<PMono> out;
	for (const auto &y : all_exps(s, bound))
		for (uint32_t mask = 0; mask < (uint32_t{1} << r); ++mask) {
			const std::size_t used = total(y) + static_cast<std::size_t>(std::popcount(mask));
			if (used > bound)
				continue;
			for (const auto &x : all_exps(r, bound - used))
				out.push_back(PMono{y, mask, x});
		}
	return out;
}

std::string Presentation::str() const
{
	std::string s = "P(" + std::to_string(r) + "," + std::to_string(this->s) + ") / [";
	for (std::size_t i = 0; i < relations.size(); ++i)
		s += (i ? ", " : "") + relations[i].str();
	return s + "] @ deg " + std::to_string(degree_bound);
}

// ---------------------------------------------------------------- quotients

namespace {

auto elim_key(const PMono &m)
{
	return std::make_tuple(m.degree(), m.x_degree(), m.x, m.y, m.xi);
}

// basis order of presented algebras: 1, xi-monomials, then growing x-degree
bool output_before(const PMono &a, const PMono &b)
{
	if (a.x_degree() != b.x_degree())
		return a.x_degree() < b.x_degree();
	if (a.degree() != b.degree())
		return a.degree() < b.degree();
	if (a.x != b.x)
		return a.x > b.x;
	if (a.y != b.y)
		return a.y < b.y;
	return a.xi < b.xi;
}

// The degree-truncated ideal generated by a set of polynomials, as a
// reduced echelon form over a fixed monomial order.
class TruncatedIdeal {
public:
	TruncatedIdeal(const Field &f, std::size_t r, std::size_t s, std::size_t bound)
	    : f_(&f), r_(r), s_(s), bound_(bound), mons_(monomials_upto(r, s, bound)),
	      echelon_{Matrix(f, 0, mons_.size()), {}}
	{
		std::sort(mons_.begin(), mons_.end(),
		          [](const PMono &a, const PMono &b) { return elim_key(a) > elim_key(b); });
		for (std::size_t i = 0; i < mons_.size(); ++i)
			index_[mons_[i]] = i;
		for (const PMono &m : mons_)
			if (m.y == std::vector<uint32_t>(s, 0) && m.xi == 0)
				xmons_.push_back(PElem::mono(f, r, s, m));
	}

	const std::vector<PMono> &monomials() const { return mons_; }

	Vec vec(const PElem &e) const
	{
		Vec v = zero_vec(*f_, mons_.size());
		for (const auto &[m, c] : e.terms()) {
			auto it = index_.find(m);
			if (it == index_.end())
				throw NotClosedAtBound("term " + mono_str(m) + " exceeds degree " +
				                       std::to_string(bound_));
			v[it->second] += c;
		}
		return v;
	}

	/// Adds m * g * w for every monomial m and x-monomial w within the bound.
	void add_generator(const PElem &g)
	{
		const std::size_t dg = static_cast<std::size_t>(std::max(g.degree(), 0));
		if (dg > bound_)
			throw NotClosedAtBound("relation of degree " + std::to_string(dg) +
			                       " exceeds the bound " + std::to_string(bound_));
		std::vector<Vec> rows = echelon_.reduced.row_list();
		for (const PMono &m : mons_) {
			if (m.degree() + dg > bound_)
				continue;
			const PElem mg = normal_mul(PElem::mono(*f_, r_, s_, m), g);
			for (const PElem &w : xmons_) {
				if (m.degree() + dg + static_cast<std::size_t>(w.degree()) > bound_)
					continue;
				const PElem p = normal_mul(mg, w);
				if (!p.is_zero())
					rows.push_back(vec(p));
			}
		}
		echelon_ = rref(Matrix::from_rows(*f_, mons_.size(), rows));
		std::vector<Vec> kept;
		for (std::size_t i = 0; i < echelon_.pivots.size(); ++i)
			kept.push_back(echelon_.reduced.row(i));
		echelon_.reduced = Matrix::from_rows(*f_, mons_.size(), kept);
	}

	Vec reduce(Vec v) const
	{
		for (std::size_t i = 0; i < echelon_.pivots.size(); ++i) {
			const FieldElem c = v[echelon_.pivots[i]];
			if (!c.is_zero())
				axpy(v, c, echelon_.reduced.row(i));
		}
		return v;
	}

	bool contains(const PElem &e) const { return is_zero(reduce(vec(e))); }

	std::vector<std::size_t> standard() const
	{
		std::vector<bool> piv(mons_.size(), false);
		for (std::size_t p : echelon_.pivots)
			piv[p] = true;
		std::vector<std::size_t> out;
		for (std::size_t i = 0; i < mons_.size(); ++i)
			if (!piv[i])
				out.push_back(i);
		return out;
	}

private:
	const Field *f_;
	std::size_t r_, s_, bound_;
	std::vector<PMono> mons_;
	std::map<PMono, std::size_t> index_;
	std::vector<PElem> xmons_;
	Echelon echelon_;
};

} // namespace

PresentedAlgebra quotient_to_dalgebra(const Presentation &p)
{
	const Field &f = *p.field;
	TruncatedIdeal ideal(f, p.r, p.s, p.degree_bound);
	for (const PElem &rel : p.relations) {
		if (rel.r() != p.r || rel.s() != p.s || &rel.field() != &f)
			throw ShapeMismatch("relation from another polynomial algebra");
		ideal.add_generator(rel);
	}
	for (const PElem &rel : p.relations)
		if (!ideal.contains(p_d(rel)))
			throw RelationsNotDClosed("d(" + rel.str() + ") = " + p_d(rel).str() +
			                          " is not in the ideal");

	std::vector<PMono> standard;
	for (std::size_t i : ideal.standard())
		standard.push_back(ideal.monomials()[i]);
	std::sort(standard.begin(), standard.end(), output_before);
	if (standard.empty() || standard[0] != unit_mono(p.r, p.s))
		throw Inconsistent("the relations generate the unit ideal");
	std::size_t top = 0;
	for (const PMono &m : standard)
		top = std::max(top, m.degree());
	if (2 * top > p.degree_bound)
		throw NotClosedAtBound("standard monomials reach degree " + std::to_string(top) +
		                       "; products need bound >= " + std::to_string(2 * top) +
		                       ", have " + std::to_string(p.degree_bound));

	const std::size_t n = standard.size();
	std::vector<std::size_t> col;
	for (const PMono &m : standard)
		col.push_back(static_cast<std::size_t>(
		    std::find(ideal.monomials().begin(), ideal.monomials().end(), m) -
		    ideal.monomials().begin()));
	auto coords = [&](const PElem &e) {
		const Vec v = ideal.reduce(ideal.vec(e));
		Vec c;
		for (std::size_t i : col)
			c.push_back(v[i]);
		return c;
	};
	std::vector<PElem> elems;
	for (const PMono &m : standard)
		elems.push_back(PElem::mono(f, p.r, p.s, m));
	std::vector<FieldElem> t;
	t.reserve(n * n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const Vec c = coords(normal_mul(elems[i], elems[j]));
			t.insert(t.end(), c.begin(), c.end());
		}
	std::vector<Vec> dcols;
	for (const PElem &e : elems)
		dcols.push_back(coords(p_d(e)));
	std::vector<std::string> labels;
	for (const PMono &m : standard)
		labels.push_back(mono_str(m));
	Algebra a(f, n, std::move(t), Matrix::from_columns(f, n, dcols), std::move(labels));
	const AxiomReport rep = verify_axioms(a);
	if (!rep.passed())
		throw NotClosedAtBound("truncated quotient fails the axioms: " + rep.summary());
	return PresentedAlgebra{share(std::move(a)), std::move(standard)};
}

Vec evaluate(const Algebra &a, const std::vector<Vec> &xs, const std::vector<Vec> &ys,
             const PElem &e)
{
	if (xs.size() != e.r() || ys.size() != e.s())
		throw ShapeMismatch("generator images do not match P(r,s)");
	Vec out = a.zero();
	for (const auto &[m, c] : e.terms()) {
		Vec v = a.one();
		for (std::size_t j = 0; j < m.y.size(); ++j)
			v = a.mul(v, a.power(ys[j], m.y[j]));
		for (std::size_t i = 0; i < xs.size(); ++i)
			if (m.xi >> i & 1)
				v = a.mul(v, a.d(xs[i]));
		for (std::size_t i = 0; i < xs.size(); ++i)
			v = a.mul(v, a.power(xs[i], m.x[i]));
		axpy(out, c, v);
	}
	return out;
}

Presentation present(const Algebra &a, const std::vector<Vec> &generators, std::size_t bound)
{
	const Field &f = a.field();
	std::vector<Vec> xs, ys;
	for (const Vec &g : generators) {
		if (g.size() != a.dim())
			throw DimensionMismatch("generator has the wrong length");
		if (!is_zero(a.d(g))) {
			if (!ys.empty())
				throw NotApplicable("generators with nonzero d must come first");
			xs.push_back(g);
		} else {
			ys.push_back(g);
		}
	}
	const std::size_t r = xs.size(), s = ys.size();
	std::vector<PMono> mons = monomials_upto(r, s, bound);
	std::stable_sort(mons.begin(), mons.end(),
	                 [](const PMono &x, const PMono &y) { return x.degree() < y.degree(); });
	std::vector<Vec> cols;
	for (const PMono &m : mons)
		cols.push_back(evaluate(a, xs, ys, PElem::mono(f, r, s, m)));
	const Matrix ev = Matrix::from_columns(f, a.dim(), cols);
	if (rank(ev) < a.dim())
		throw NotGenerating("generators span only " + std::to_string(rank(ev)) + " of " +
		                    std::to_string(a.dim()) + " dimensions up to degree " +
		                    std::to_string(bound));

	Presentation p{&f, r, s, {}, bound};
	TruncatedIdeal ideal(f, r, s, bound);
	for (const Vec &k : nullspace(ev)) {
		PElem rel(f, r, s);
		for (std::size_t i = 0; i < k.size(); ++i)
			rel.add_term(mons[i], k[i]);
		if (ideal.contains(rel))
			continue;
		ideal.add_generator(rel);
		p.relations.push_back(std::move(rel));
	}
	return p;
}

} // namespace sv2

namespace sv2 {

Morphism morphism_from_generators(const PresentedAlgebra &src, const AlgebraPtr &target,
                                  const std::vector<Vec> &xs, const std::vector<Vec> &ys)
{
	const Algebra &s = *src.algebra;
	const std::size_t r = xs.size(), nys = ys.size();
	std::vector<Vec> cols;
	for (const PMono &m : src.standard)
		cols.push_back(evaluate(*target, xs, ys, PElem::mono(s.field(), r, nys, m)));
	return Morphism{src.algebra, target, Matrix::from_columns(s.field(), target->dim(), cols)};
}

} // namespace sv2
