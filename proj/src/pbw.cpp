#include "sv2/pbw.hpp"

#include <random>
#include <sstream>

namespace sv2 {

TElem TElem::word(const Field &f, Word w)
{
	TElem t;
	t.terms.emplace(std::move(w), f.one());
	return t;
}

int TElem::degree() const
{
	int d = -1;
	for (const auto &[w, c] : terms)
		d = std::max(d, static_cast<int>(w.size()));
	return d;
}

void TElem::add(const Word &w, const FieldElem &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = terms.try_emplace(w, c);
	if (!fresh) {
		it->second += c;
		if (it->second.is_zero())
			terms.erase(it);
	}
}

TElem &TElem::operator+=(const TElem &o)
{
	for (const auto &[w, c] : o.terms)
		add(w, c);
	return *this;
}

std::string TElem::str() const
{
	if (terms.empty())
		return "0";
	std::string s;
	for (const auto &[w, c] : terms) {
		if (!s.empty())
			s += " + ";
		s += c.hex() + "*";
		if (w.empty())
			s += "1";
		for (std::size_t i = 0; i < w.size(); ++i)
			s += (i ? "." : "") + std::string("v") + std::to_string(w[i]);
	}
	return s;
}

std::size_t word_defect(const Word &w)
{
	std::size_t d = 0;
	for (std::size_t i = 0; i < w.size(); ++i)
		for (std::size_t j = i + 1; j < w.size(); ++j)
			if (w[i] > w[j])
				++d;
	return d;
}

uint64_t fnv1a(const std::string &s)
{
	uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : s) {
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	return h;
}

namespace {

void add_scaled(TElem &out, const TElem &t, const FieldElem &c)
{
	for (const auto &[w, v] : t.terms)
		out.add(w, v * c);
}

Word splice(const Word &w, std::size_t p, std::size_t drop, std::initializer_list<std::size_t> mid)
{
	Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
	for (std::size_t m : mid)
		r.push_back(static_cast<uint16_t>(m));
	r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(p + drop), w.end());
	return r;
}

uint64_t splitmix(uint64_t &s)
{
	uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

} // namespace

StraightenCtx::StraightenCtx(LieAlgebra l, Matrix to_orig, std::size_t kk, std::vector<Vec> w)
    : l_(std::move(l)), to_orig_(std::move(to_orig)), kk_(kk), w_(std::move(w)),
      memo_(std::make_shared<Memo>())
{
	for (std::size_t i = 0; i < l_.dim(); ++i)
		has_d_.push_back(!is_zero(l_.dmat().column(i)));
	for (std::size_t i = 0; i < kk_; ++i)
		if (l_.d(w_.at(i)) != l_.basis(i))
			throw Inconsistent("preimage " + std::to_string(i) + " does not map to v" +
			                   std::to_string(i));
}

StraightenCtx::StraightenCtx(const LieAlgebra &orig)
    : StraightenCtx([&] {
	      const Field &f = orig.field();
	      const std::size_t n = orig.dim();
	      const Subspace im(f, n, orig.dmat().column_list());
	      std::vector<Vec> units;
	      for (std::size_t i = 0; i < n; ++i)
		      units.push_back(unit_vec(f, n, i));
	      std::vector<Vec> basis = Subspace(f, n).extend_basis(im.basis(), units);
	      const QuotientCoords coords(basis, Subspace(f, n));
	      std::vector<FieldElem> b;
	      for (std::size_t i = 0; i < n; ++i)
		      for (std::size_t j = 0; j < n; ++j) {
			      const Vec c = coords(orig.bracket(basis[i], basis[j]));
			      b.insert(b.end(), c.begin(), c.end());
		      }
	      std::vector<Vec> dcols;
	      std::vector<std::string> labels;
	      for (std::size_t j = 0; j < n; ++j) {
		      dcols.push_back(coords(orig.d(basis[j])));
		      std::string lab = "v" + std::to_string(j);
		      for (std::size_t i = 0; i < n; ++i)
			      if (j >= im.dim() && basis[j] == units[i])
				      lab = orig.label(i);
		      labels.push_back(lab);
	      }
	      LieAlgebra l(f, n, std::move(b), Matrix::from_columns(f, n, dcols), std::move(labels));
	      std::vector<Vec> w;
	      for (std::size_t i = 0; i < im.dim(); ++i)
		      w.push_back(solve(l.dmat(), l.basis(i)));
	      return StraightenCtx(std::move(l), Matrix::from_columns(f, n, basis), im.dim(),
	                           std::move(w));
      }())
{
}

StraightenCtx StraightenCtx::with_preimages(std::vector<Vec> preimages) const
{
	if (preimages.size() != kk_)
		throw DimensionMismatch("need one preimage per Im(d) basis vector");
	return StraightenCtx(l_, to_orig_, kk_, std::move(preimages));
}

std::size_t StraightenCtx::k_degree(const Word &w) const
{
	std::size_t k = 0;
	for (uint16_t i : w)
		k += has_d_.at(i) ? 1 : 0;
	return k;
}

bool StraightenCtx::is_standard(const Word &w) const
{
	for (std::size_t i = 0; i + 1 < w.size(); ++i)
		if (w[i] > w[i + 1] || (w[i] == w[i + 1] && w[i] < kk_))
			return false;
	return true;
}

TElem StraightenCtx::straighten(const Word &w, Strategy s, uint64_t seed) const
{
	for (uint16_t i : w)
		if (i >= l_.dim())
			throw IndexOutOfRange("letter " + std::to_string(i) + " outside the basis");
	uint64_t rng = seed;
	std::map<Word, TElem> scratch;
	return rewrite(w, s, rng, &scratch);
}

TElem StraightenCtx::straighten(const TElem &e, Strategy s, uint64_t seed) const
{
	TElem out;
	for (const auto &[w, c] : e.terms)
		add_scaled(out, straighten(w, s, seed), c);
	return out;
}

TElem StraightenCtx::rewrite(const Word &w, Strategy s, uint64_t &rng,
                             std::map<Word, TElem> *scratch) const
{
	std::map<Word, TElem> *shared = s == Strategy::leftmost    ? &memo_->left
	                                : s == Strategy::rightmost ? &memo_->right
	                                                           : nullptr;
	if (shared) {
		std::lock_guard<std::mutex> g(memo_->lock);
		if (auto it = shared->find(w); it != shared->end())
			return it->second;
	} else if (auto it = scratch->find(w); it != scratch->end()) {
		return it->second;
	}

	auto pick = [&](const std::vector<std::size_t> &at) {
		if (s == Strategy::leftmost)
			return at.front();
		if (s == Strategy::rightmost)
			return at.back();
		return at[splitmix(rng) % at.size()];
	};
	std::vector<std::size_t> descents, squares;
	for (std::size_t i = 0; i + 1 < w.size(); ++i) {
		if (w[i] > w[i + 1])
			descents.push_back(i);
		else if (w[i] == w[i + 1] && w[i] < kk_)
			squares.push_back(i);
	}

	TElem out;
	const Field &f = l_.field();
	if (!descents.empty()) {
		// v_a v_b = v_b v_a + d(v_b) d(v_a) + [v_a, v_b]  mod J
		const std::size_t p = pick(descents), a = w[p], b = w[p + 1];
		out = rewrite(splice(w, p, 2, {b, a}), s, rng, scratch);
		if (has_d_[a] && has_d_[b]) {
			const Vec db = l_.dmat().column(b), da = l_.dmat().column(a);
			for (std::size_t i = 0; i < db.size(); ++i)
				for (std::size_t j = 0; j < da.size(); ++j)
					if (!db[i].is_zero() && !da[j].is_zero())
						add_scaled(out, rewrite(splice(w, p, 2, {i, j}), s, rng, scratch),
						           db[i] * da[j]);
		}
		const Vec br = l_.bracket_basis(a, b);
		for (std::size_t l = 0; l < br.size(); ++l)
			if (!br[l].is_zero())
				add_scaled(out, rewrite(splice(w, p, 2, {l}), s, rng, scratch), br[l]);
	} else if (!squares.empty()) {
		// v_i^2 = [w_i, w_i]  mod J
		const std::size_t p = pick(squares);
		const Vec br = l_.bracket(w_[w[p]], w_[w[p]]);
		for (std::size_t l = 0; l < br.size(); ++l)
			if (!br[l].is_zero())
				add_scaled(out, rewrite(splice(w, p, 2, {l}), s, rng, scratch), br[l]);
	} else {
		out.add(w, f.one());
	}

	if (shared) {
		std::lock_guard<std::mutex> g(memo_->lock);
		shared->emplace(w, out);
	} else {
		scratch->emplace(w, out);
	}
	return out;
}

TElem u_mul(const StraightenCtx &ctx, const TElem &a, const TElem &b, std::size_t bound)
{
	if (a.degree() + b.degree() > static_cast<int>(bound))
		throw DegreeOverflow("product of degree " + std::to_string(a.degree() + b.degree()) +
		                     " exceeds the bound " + std::to_string(bound));
	TElem out;
	for (const auto &[wa, ca] : a.terms)
		for (const auto &[wb, cb] : b.terms) {
			Word w = wa;
			w.insert(w.end(), wb.begin(), wb.end());
			add_scaled(out, ctx.straighten(w), ca * cb);
		}
	return out;
}

namespace {

void standard_rec(std::size_t m, std::size_t kk, std::size_t deg, Word &cur,
                  std::vector<Word> &out)
{
	out.push_back(cur);
	if (cur.size() == deg)
		return;
	std::size_t from = cur.empty() ? 0 : cur.back();
	if (!cur.empty() && cur.back() < kk)
		++from;
	for (std::size_t i = from; i < m; ++i) {
		cur.push_back(static_cast<uint16_t>(i));
		standard_rec(m, kk, deg, cur, out);
		cur.pop_back();
	}
}

void all_words(std::size_t m, std::size_t deg, Word &cur, std::vector<Word> &out)
{
	out.push_back(cur);
	if (cur.size() == deg)
		return;
	for (std::size_t i = 0; i < m; ++i) {
		cur.push_back(static_cast<uint16_t>(i));
		all_words(m, deg, cur, out);
		cur.pop_back();
	}
}

} // namespace

std::vector<Word> standard_words(std::size_t m, std::size_t kk, std::size_t deg)
{
	std::vector<Word> out;
	Word cur;
	standard_rec(m, kk, deg, cur, out);
	return out;
}

std::size_t standard_count(std::size_t m, std::size_t kk, std::size_t deg)
{
	if (kk > m)
		throw std::invalid_argument("prefix larger than the basis");
	return standard_words(m, kk, deg).size();
}

AxiomReport verify_pbw(const StraightenCtx &ctx, std::size_t bound)
{
	AxiomReport rep;
	const LieAlgebra &l = ctx.lie();
	const std::size_t m = l.dim();
	const Field &f = ctx.field();
	const std::vector<Word> std_words = standard_words(m, ctx.kk(), bound);
	std::size_t tested = 0;
	for (const Word &u : std_words)
		for (const Word &v : std_words) {
			if (u.size() + v.size() + 2 > bound)
				continue;
			for (std::size_t a = 0; a < m; ++a)
				for (std::size_t b = 0; b < m; ++b) {
					auto w = [&](std::initializer_list<std::size_t> mid) {
						Word r = u;
						for (std::size_t x : mid)
							r.push_back(static_cast<uint16_t>(x));
						r.insert(r.end(), v.begin(), v.end());
						return r;
					};
					TElem g;
					g.add(w({a, b}), f.one());
					g.add(w({b, a}), f.one());
					const Vec db = l.d(l.basis(b)), da = l.d(l.basis(a));
					for (std::size_t i = 0; i < m; ++i)
						for (std::size_t j = 0; j < m; ++j)
							g.add(w({i, j}), db[i] * da[j]);
					const Vec br = l.bracket_basis(a, b);
					for (std::size_t i = 0; i < m; ++i)
						g.add(w({i}), br[i]);
					++rep.checks;
					++tested;
					const TElem p = ctx.straighten(g);
					if (!p.is_zero())
						rep.fail("P(J) = 0: " + p.str(), {a, b, u.size(), v.size()}, {}, {});
				}
		}
	std::vector<Word> words;
	Word cur;
	all_words(m, bound, cur, words);
	for (const Word &w : words) {
		const TElem p = ctx.straighten(w);
		rep.checks += 2;
		for (const auto &[x, c] : p.terms)
			if (!ctx.is_standard(x)) {
				rep.fail("output is standard", std::vector<std::size_t>(w.begin(), w.end()), {}, {});
				break;
			}
		if (!(ctx.straighten(p) == p))
			rep.fail("idempotent", std::vector<std::size_t>(w.begin(), w.end()), {}, {});
	}
	for (std::size_t i = 0; i < m; ++i) {
		++rep.checks;
		if (!(ctx.straighten(Word{static_cast<uint16_t>(i)}) == TElem::word(f, {static_cast<uint16_t>(i)})))
			rep.fail("L -> U(L) injective", {i}, {}, {});
	}
	rep.notes.push_back(std::to_string(tested) + " J-spanning elements, " +
	                    std::to_string(words.size()) + " words, " +
	                    std::to_string(std_words.size()) + " standard words up to degree " +
	                    std::to_string(bound));
	return rep;
}

ConfluenceReport confluence_test(const StraightenCtx &ctx, std::size_t trials,
                                 std::size_t max_len, uint64_t seed)
{
	const LieAlgebra &l = ctx.lie();
	const std::size_t m = l.dim();
	Vec shift = l.zero();
	for (const Vec &k : nullspace(l.dmat()))
		shift += k;
	std::vector<Vec> alt;
	for (const Vec &w : ctx.preimages())
		alt.push_back(w + shift);
	const StraightenCtx other = ctx.with_preimages(std::move(alt));

	std::mt19937_64 rng(seed);
	ConfluenceReport rep;
	std::ostringstream os;
	os << "confluence dim=" << m << " kk=" << ctx.kk() << " trials=" << trials
	   << " max_len=" << max_len << " seed=" << seed << "\n";
	for (std::size_t t = 0; t < trials; ++t) {
		const std::size_t len = 1 + rng() % std::max<std::size_t>(max_len, 1);
		Word w;
		for (std::size_t i = 0; i < len; ++i)
			w.push_back(static_cast<uint16_t>(rng() % m));
		const TElem left = ctx.straighten(w, Strategy::leftmost);
		const bool ok = left == ctx.straighten(w, Strategy::rightmost) &&
		                left == ctx.straighten(w, Strategy::random, rng()) &&
		                left == other.straighten(w, Strategy::leftmost);
		++rep.trials;
		if (!ok)
			++rep.discrepancies;
		os << "trial " << t << " word ";
		for (std::size_t i = 0; i < w.size(); ++i)
			os << (i ? "." : "") << w[i];
		char nf[17];
		std::snprintf(nf, sizeof nf, "%016llx",
		              static_cast<unsigned long long>(fnv1a(left.str())));
		os << " terms " << left.terms.size() << " nf " << nf << (ok ? " ok" : " MISMATCH")
		   << "\n";
	}
	os << "discrepancies=" << rep.discrepancies << "\n";
	rep.text = os.str();
	rep.digest = fnv1a(rep.text);
	return rep;
}

} // namespace sv2
