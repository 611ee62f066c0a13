#include "sv2/io.hpp"

#include <cctype>
#include <sstream>

namespace sv2 {

std::string kind_name(Kind k)
{
	switch (k) {
	case Kind::assoc2:
		return "assoc2";
	case Kind::dalgebra:
		return "dalgebra";
	case Kind::lie2:
		return "lie2";
	}
	return "?";
}

namespace {

struct Tok {
	std::string text;
	std::size_t line, col;
};

std::vector<std::vector<Tok>> tokenize_lines(const std::string &text)
{
	std::vector<std::vector<Tok>> lines;
	std::istringstream in(text);
	std::string raw;
	std::size_t ln = 0;
	while (std::getline(in, raw)) {
		++ln;
		if (auto h = raw.find('#'); h != std::string::npos)
			raw.resize(h);
		std::vector<Tok> toks;
		std::size_t i = 0;
		while (i < raw.size()) {
			if (std::isspace(static_cast<unsigned char>(raw[i]))) {
				++i;
				continue;
			}
			const std::size_t start = i;
			while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
				++i;
			toks.push_back({raw.substr(start, i - start), ln, start + 1});
		}
		if (!toks.empty())
			lines.push_back(std::move(toks));
	}
	return lines;
}

[[noreturn]] void syntax(const std::string &what, const Tok &t)
{
	throw SyntaxError(what, t.line, t.col);
}

std::size_t to_count(const Tok &t)
{
	std::size_t pos = 0;
	unsigned long v = 0;
	try {
		v = std::stoul(t.text, &pos);
	} catch (const std::exception &) {
		syntax("expected a number, got '" + t.text + "'", t);
	}
	if (pos != t.text.size())
		syntax("expected a number, got '" + t.text + "'", t);
	return v;
}

FieldElem to_scalar(const Field &f, const Tok &t)
{
	uint32_t bits = 0;
	try {
		bits = parse_hex(t.text);
	} catch (const std::exception &) {
		syntax("bad hex scalar '" + t.text + "'", t);
	}
	if (bits >= f.order())
		syntax("scalar " + t.text + " does not fit in " + f.name(), t);
	return f.elem(bits);
}

} // namespace

AlgebraFile parse_algebra_file(const std::string &text)
{
	const auto lines = tokenize_lines(text);
	std::size_t li = 0;
	auto next_line = [&](const std::string &what) -> const std::vector<Tok> & {
		if (li >= lines.size())
			throw SyntaxError("unexpected end of input, expected " + what,
			                  lines.empty() ? 1 : lines.back()[0].line + 1, 1);
		return lines[li++];
	};
	auto keyed = [&](const std::string &key, std::size_t args) -> const std::vector<Tok> & {
		const auto &l = next_line(key);
		if (l[0].text != key)
			syntax("expected '" + key + "', got '" + l[0].text + "'", l[0]);
		if (args != std::size_t(-1) && l.size() != args + 1)
			syntax("'" + key + "' takes " + std::to_string(args) + " value(s)", l[0]);
		return l;
	};

	const auto &fl = keyed("field", 1);
	const std::string fname = fl[1].text;
	if (fname.rfind("gf2_", 0) != 0)
		syntax("field must be gf2_<k>", fl[1]);
	const std::size_t k = to_count(Tok{fname.substr(4), fl[1].line, fl[1].col + 4});
	if (k < 1 || k > static_cast<std::size_t>(Field::max_degree))
		syntax("field degree must be 1..16", fl[1]);
	const Field &f = Field::gf(static_cast<int>(k));

	AlgebraFile out;
	const auto &kl = keyed("kind", 1);
	if (kl[1].text == "assoc2")
		out.kind = Kind::assoc2;
	else if (kl[1].text == "dalgebra")
		out.kind = Kind::dalgebra;
	else if (kl[1].text == "lie2")
		out.kind = Kind::lie2;
	else
		syntax("unknown kind '" + kl[1].text + "'", kl[1]);

	const std::size_t n = to_count(keyed("n", 1)[1]);
	if (n == 0)
		syntax("dimension must be positive", lines[li - 1][1]);
	std::size_t unit = 0;
	if (li < lines.size() && lines[li][0].text == "unit") {
		const auto &ul = keyed("unit", 1);
		unit = to_count(ul[1]);
		if (unit >= n)
			syntax("unit index out of range", ul[1]);
	}
	std::vector<std::string> labels;
	if (li < lines.size() && lines[li][0].text == "labels") {
		const auto &ll = keyed("labels", std::size_t(-1));
		if (ll.size() != n + 1)
			syntax("need " + std::to_string(n) + " labels", ll[0]);
		for (std::size_t i = 1; i < ll.size(); ++i)
			labels.push_back(ll[i].text);
	}
	const std::string tkey = out.kind == Kind::lie2 ? "bracket" : "tensor";
	keyed(tkey, 0);
	std::vector<FieldElem> t;
	t.reserve(n * n * n);
	for (std::size_t r = 0; r < n * n; ++r) {
		const auto &row = next_line(tkey + " row");
		if (row.size() != n)
			syntax(tkey + " row needs " + std::to_string(n) + " scalars", row[0]);
		for (const Tok &tok : row)
			t.push_back(to_scalar(f, tok));
	}
	keyed("dmat", 0);
	Matrix d(f, n, n);
	for (std::size_t r = 0; r < n; ++r) {
		const auto &row = next_line("dmat row");
		if (row.size() != n)
			syntax("dmat row needs " + std::to_string(n) + " scalars", row[0]);
		for (std::size_t c = 0; c < n; ++c)
			d(r, c) = to_scalar(f, row[c]);
	}
	if (li < lines.size())
		syntax("trailing input", lines[li][0]);

	if (out.kind == Kind::lie2) {
		out.lie.emplace(f, n, std::move(t), std::move(d), std::move(labels));
		return out;
	}
	Algebra a(f, n, std::move(t), std::move(d), std::move(labels));
	if (unit != 0) {
		std::vector<Vec> basis;
		std::vector<std::string> ls;
		for (std::size_t i = 0; i < n; ++i) {
			const std::size_t j = i == 0 ? unit : i == unit ? 0 : i;
			basis.push_back(unit_vec(f, n, j));
			ls.push_back(a.label(j));
		}
		a = on_basis(a, basis, std::move(ls));
	}
	out.algebra = std::move(a);
	return out;
}

namespace {

void print_body(std::ostringstream &os, const Field &f, std::size_t n,
                const std::vector<std::string> &labels, const std::string &tkey,
                const std::vector<FieldElem> &t, const Matrix &d)
{
	os << "n " << n << "\n";
	os << "labels";
	for (const auto &l : labels)
		os << " " << l;
	os << "\n" << tkey << "\n";
	for (std::size_t r = 0; r < n * n; ++r) {
		for (std::size_t l = 0; l < n; ++l)
			os << (l ? " " : "") << t[r * n + l].hex();
		os << "\n";
	}
	os << "dmat\n";
	for (std::size_t r = 0; r < n; ++r) {
		for (std::size_t c = 0; c < n; ++c)
			os << (c ? " " : "") << d(r, c).hex();
		os << "\n";
	}
	(void)f;
}

} // namespace

std::string print_algebra_file(const Algebra &a, Kind kind)
{
	std::ostringstream os;
	os << "field " << a.field().name() << "\nkind " << kind_name(kind) << "\n";
	std::ostringstream body;
	print_body(body, a.field(), a.dim(), a.labels(), "tensor", a.tensor(), a.dmat());
	const std::string b = body.str();
	// unit line goes right after n
	const std::size_t nl = b.find('\n');
	return os.str() + b.substr(0, nl + 1) + "unit 0\n" + b.substr(nl + 1);
}

std::string print_lie_file(const LieAlgebra &l)
{
	std::ostringstream os;
	os << "field " << l.field().name() << "\nkind lie2\n";
	print_body(os, l.field(), l.dim(), l.labels(), "bracket", l.tensor(), l.dmat());
	return os.str();
}

// ---------------------------------------------------------------- DSL

namespace {

class DslParser {
public:
	DslParser(const std::string &src, const Field &f) : s_(src), f_(f) {}

	Presentation parse()
	{
		expect('P');
		expect('(');
		r_ = number();
		expect(',');
		s_count_ = number();
		expect(')');
		if (r_ > 31)
			fail("at most 31 x generators");
		expect('/');
		expect('[');
		Presentation p{&f_, r_, s_count_, {}, 0};
		skip();
		if (peek() != ']') {
			for (;;) {
				p.relations.push_back(relation());
				skip();
				if (peek() == ',') {
					++i_;
					continue;
				}
				break;
			}
		}
		expect(']');
		expect('@');
		word("deg");
		p.degree_bound = number();
		skip();
		if (i_ < s_.size())
			fail("unexpected '" + std::string(1, s_[i_]) + "'");
		for (const PElem &rel : p.relations)
			if (rel.is_zero())
				throw SyntaxError("relation is zero", line_, col_);
		return p;
	}

private:
	[[noreturn]] void fail(const std::string &what)
	{
		position();
		throw SyntaxError(what, line_, col_);
	}

	void position()
	{
		line_ = 1;
		col_ = 1;
		for (std::size_t k = 0; k < i_ && k < s_.size(); ++k) {
			if (s_[k] == '\n') {
				++line_;
				col_ = 1;
			} else {
				++col_;
			}
		}
	}

	void skip()
	{
		while (i_ < s_.size()) {
			if (std::isspace(static_cast<unsigned char>(s_[i_])))
				++i_;
			else if (s_[i_] == '#')
				while (i_ < s_.size() && s_[i_] != '\n')
					++i_;
			else
				break;
		}
	}

	char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

	void expect(char c)
	{
		skip();
		if (peek() != c)
			fail(std::string("expected '") + c + "'" +
			     (i_ < s_.size() ? std::string(", got '") + s_[i_] + "'" : ", got end of input"));
		++i_;
	}

	void word(const std::string &w)
	{
		skip();
		if (s_.compare(i_, w.size(), w) != 0)
			fail("expected '" + w + "'");
		i_ += w.size();
	}

	std::size_t number()
	{
		skip();
		if (!std::isdigit(static_cast<unsigned char>(peek())))
			fail("expected a number");
		std::size_t v = 0;
		while (std::isdigit(static_cast<unsigned char>(peek()))) {
			v = v * 10 + static_cast<std::size_t>(s_[i_] - '0');
			if (v > 1000000)
				fail("number too large");
			++i_;
		}
		return v;
	}

	PElem relation()
	{
		PElem sum = term();
		for (;;) {
			skip();
			if (peek() == '+' || peek() == '-') {
				++i_;
				sum += term();
			} else {
				return sum;
			}
		}
	}

	bool factor_starts()
	{
		skip();
		const char c = peek();
		return c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c));
	}

	PElem term()
	{
		if (!factor_starts())
			fail("expected a term");
		PElem prod = factor();
		for (;;) {
			skip();
			if (peek() == '*') {
				++i_;
				if (!factor_starts())
					fail("expected a factor after '*'");
				prod = normal_mul(prod, factor());
			} else if (factor_starts()) {
				prod = normal_mul(prod, factor());
			} else {
				return prod;
			}
		}
	}

	PElem factor()
	{
		skip();
		const std::size_t start = i_;
		if (std::isdigit(static_cast<unsigned char>(peek()))) {
			std::string lit;
			if (s_.compare(i_, 2, "0x") == 0 || s_.compare(i_, 2, "0X") == 0)
				i_ += 2;
			while (std::isxdigit(static_cast<unsigned char>(peek())))
				lit += s_[i_++];
			if (lit.empty())
				fail("empty hex literal");
			const uint32_t bits = parse_hex(lit);
			if (bits >= f_.order()) {
				i_ = start;
				fail("coefficient does not fit in " + f_.name());
			}
			return PElem::one(f_, r_, s_count_).scale(f_.elem(bits));
		}
		PElem g(f_, r_, s_count_);
		if (peek() == 'y') {
			++i_;
			g = generator(start, 'y');
		} else {
			++i_;
			if (peek() == 'i') {
				++i_;
				g = generator(start, 'i');
			} else {
				g = generator(start, 'x');
			}
		}
		skip();
		if (peek() == '^') {
			++i_;
			const std::size_t e = number();
			PElem p = PElem::one(f_, r_, s_count_);
			for (std::size_t k = 0; k < e; ++k)
				p = normal_mul(p, g);
			return p;
		}
		return g;
	}

	PElem generator(std::size_t start, char which)
	{
		if (!std::isdigit(static_cast<unsigned char>(peek())))
			fail("generator needs an index");
		const std::size_t idx = number();
		const std::size_t lim = which == 'y' ? s_count_ : r_;
		if (idx == 0 || idx > lim) {
			i_ = start;
			position();
			throw IndexOutOfRange(std::string(which == 'y' ? "y" : which == 'i' ? "xi" : "x") +
			                      std::to_string(idx) + " outside P(" + std::to_string(r_) +
			                      "," + std::to_string(s_count_) + ") at line " +
			                      std::to_string(line_) + ", column " + std::to_string(col_));
		}
		if (which == 'y')
			return PElem::y(f_, r_, s_count_, idx - 1);
		if (which == 'i')
			return PElem::xi(f_, r_, s_count_, idx - 1);
		return PElem::x(f_, r_, s_count_, idx - 1);
	}

	const std::string &s_;
	const Field &f_;
	std::size_t i_ = 0;
	std::size_t r_ = 0, s_count_ = 0;
	std::size_t line_ = 1, col_ = 1;
};

} // namespace

Presentation parse_presentation(const std::string &text, const Field &f)
{
	return DslParser(text, f).parse();
}

bool looks_like_presentation(const std::string &text)
{
	std::size_t i = 0;
	while (i < text.size()) {
		if (std::isspace(static_cast<unsigned char>(text[i]))) {
			++i;
		} else if (text[i] == '#') {
			while (i < text.size() && text[i] != '\n')
				++i;
		} else {
			break;
		}
	}
	return text.compare(i, 2, "P(") == 0;
}

} // namespace sv2
