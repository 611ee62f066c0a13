#include "sv2/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sv2/dim7.hpp"
#include "sv2/io.hpp"
#include "sv2/pbw.hpp"
#include "sv2/structure.hpp"

namespace sv2::cli {

namespace {

struct Options {
	std::string input;
	int field = 0;
	std::size_t bound = 4;
	std::size_t trials = 0;
	std::size_t max_len = 6;
	uint64_t seed = 1;
	std::string format = "human";
	std::string gens;
	bool trace = false;
	int loaded_k = 0;
};

/// Ordered key/value lines; human output is "key: value", kv is "key=value".
class Report {
public:
	void add(const std::string &k, const std::string &v) { rows_.emplace_back(k, v); }
	void add(const std::string &k, std::size_t v) { add(k, std::to_string(v)); }
	void add(const std::string &k, bool v) { add(k, std::string(v ? "yes" : "no")); }
	void add(const std::string &k, const char *v) { add(k, std::string(v)); }

	void check(const std::string &name, const AxiomReport &r)
	{
		add(name, std::string(r.passed() ? "pass" : "FAIL"));
		add(name + ".checks", r.checks);
		add(name + ".failures", r.failures.size());
		std::size_t i = 0;
		for (const auto &f : r.failures) {
			std::string w;
			for (std::size_t j = 0; j < f.witness.size(); ++j)
				w += (j ? "," : "") + std::to_string(f.witness[j]);
			add(name + ".failure." + std::to_string(i++),
			    f.axiom + " (" + w + ") " + to_hex(f.lhs) + " != " + to_hex(f.rhs));
			if (i == 10)
				break;
		}
	}

	void emit(std::ostream &os, const std::string &format) const
	{
		const char *sep = format == "kv" ? "=" : ": ";
		for (const auto &[k, v] : rows_)
			os << k << sep << v << "\n";
	}

private:
	std::vector<std::pair<std::string, std::string>> rows_;
};

std::string read_input(const Options &o, std::istream &in)
{
	std::ostringstream buf;
	if (o.input.empty() || o.input == "-") {
		buf << in.rdbuf();
	} else {
		std::ifstream f(o.input);
		if (!f)
			throw Error("cannot open " + o.input);
		buf << f.rdbuf();
	}
	return buf.str();
}

/// Moves scalars up to GF(2^target) by repeated doubling.
template <class Lift>
void raise_field(const Field &from, int target, Lift lift)
{
	const Field *cur = &from;
	while (cur->degree() < target) {
		const Embedding e = field_extend(*cur);
		lift(e);
		cur = &e.target();
	}
	if (cur->degree() != target)
		throw NotApplicable("cannot move " + from.name() + " to GF(2^" + std::to_string(target) +
		                    ") by doubling");
}

AlgebraFile load(Options &o, std::istream &in)
{
	const std::string text = read_input(o, in);
	AlgebraFile file;
	if (looks_like_presentation(text)) {
		const Field &f = Field::gf(o.field ? o.field : 1);
		file.kind = Kind::dalgebra;
		o.loaded_k = f.degree();
		file.algebra = *quotient_to_dalgebra(parse_presentation(text, f)).algebra;
		return file;
	}
	file = parse_algebra_file(text);
	o.loaded_k = (file.algebra ? file.algebra->field() : file.lie->field()).degree();
	if (o.field) {
		o.loaded_k = o.field;
		if (file.algebra)
			raise_field(file.algebra->field(), o.field,
			            [&](const Embedding &e) { file.algebra = file.algebra->base_change(e); });
		else
			raise_field(file.lie->field(), o.field, [&](const Embedding &e) {
				const LieAlgebra &l = *file.lie;
				std::vector<FieldElem> t;
				for (const auto &c : l.tensor())
					t.push_back(e(c));
				file.lie.emplace(e.target(), l.dim(), std::move(t), l.dmat().base_change(e),
				                 l.labels());
			});
	}
	return file;
}

std::string matrix_hex(const Matrix &m)
{
	std::string s;
	for (std::size_t r = 0; r < m.rows(); ++r) {
		if (r)
			s += " ; ";
		for (std::size_t c = 0; c < m.cols(); ++c)
			s += (c ? " " : "") + m(r, c).hex();
	}
	return s;
}

void header(Report &rep, const AlgebraFile &file)
{
	rep.add("kind", kind_name(file.kind));
	if (file.algebra) {
		rep.add("field", file.algebra->field().name());
		rep.add("dim", file.algebra->dim());
	} else {
		rep.add("field", file.lie->field().name());
		rep.add("dim", file.lie->dim());
	}
}

const Algebra &need_dalgebra(const AlgebraFile &file)
{
	if (file.kind != Kind::dalgebra)
		throw NotApplicable("this subcommand needs a dalgebra, got " + kind_name(file.kind));
	return *file.algebra;
}

const LieAlgebra &need_lie(const AlgebraFile &file)
{
	if (file.kind != Kind::lie2)
		throw NotApplicable("this subcommand needs a lie2 file, got " + kind_name(file.kind));
	return *file.lie;
}

int gate_axioms(Report &rep, const Algebra &a)
{
	const AxiomReport ax = verify_axioms(a, AxiomSet::dalgebra);
	rep.check("axioms", ax);
	return ax.passed() ? Exit::ok : Exit::axiom;
}

int cmd_check(Options &o, std::istream &in, Report &rep)
{
	const AlgebraFile file = load(o, in);
	header(rep, file);
	if (file.kind == Kind::lie2) {
		const AxiomReport ax = verify_lie(*file.lie);
		rep.check("axioms", ax);
		if (!ax.passed())
			return Exit::axiom;
		const AxiomReport j7 = jacobi_seven_term_check(*file.lie);
		rep.check("jacobi7", j7);
		return j7.passed() ? Exit::ok : Exit::theorem;
	}
	if (file.kind == Kind::assoc2) {
		const AxiomReport ax = verify_axioms(*file.algebra, AxiomSet::associative);
		rep.check("axioms", ax);
		return ax.passed() ? Exit::ok : Exit::axiom;
	}
	const Algebra &a = *file.algebra;
	if (int rc = gate_axioms(rep, a))
		return rc;
	const AxiomReport lem = lemma_suite(a);
	rep.check("lemmas", lem);
	const AxiomReport small = small_dim_commutativity_check(a);
	rep.check("small_dim", small);
	return lem.passed() && small.passed() ? Exit::ok : Exit::theorem;
}

int cmd_invariants(Options &o, std::istream &in, Report &rep)
{
	const AlgebraFile file = load(o, in);
	header(rep, file);
	const Algebra &a = need_dalgebra(file);
	if (int rc = gate_axioms(rep, a))
		return rc;
	const AlgebraPtr ap = share(a);
	rep.add("dim_ker", ker_d(a).dim());
	rep.add("dim_im", im_d(a).dim());
	rep.add("dim_center", center(a).dim());
	rep.add("defect", defect(a));
	const auto nc = noncommuting_pair(a);
	rep.add("commutative", !nc);
	if (nc)
		rep.add("noncommuting", a.label(nc->first) + "," + a.label(nc->second));
	const auto maxes = maximal_ideals(ap);
	rep.add("maximal_ideals", maxes.size());
	for (std::size_t i = 0; i < maxes.size(); ++i)
		rep.add("maximal_ideal." + std::to_string(i) + ".dim", maxes[i].dim());
	rep.add("local", maxes.size() == 1);
	return Exit::ok;
}

int cmd_decompose(Options &o, std::istream &in, Report &rep)
{
	const AlgebraFile file = load(o, in);
	header(rep, file);
	const Algebra &a = need_dalgebra(file);
	if (int rc = gate_axioms(rep, a))
		return rc;
	const Decomposition dec = decompose(share(a));
	rep.add("factors", dec.factors.size());
	for (std::size_t i = 0; i < dec.factors.size(); ++i) {
		const std::string p = "factor." + std::to_string(i);
		const Algebra &fa = *dec.factors[i].algebra;
		rep.add(p + ".idempotent", to_hex(dec.idempotents[i]));
		rep.add(p + ".dim", fa.dim());
		rep.add(p + ".defect", defect(fa));
		rep.add(p + ".local", is_local(dec.factors[i].algebra));
	}
	rep.check("iso", verify_morphism(dec.iso));
	return Exit::ok;
}

int cmd_classify7(Options &o, std::istream &in, Report &rep)
{
	const AlgebraFile file = load(o, in);
	header(rep, file);
	const Algebra &a = need_dalgebra(file);
	if (int rc = gate_axioms(rep, a))
		return rc;
	const Normalization nm = normalize7(share(a));
	rep.add("h", nm.form.h.hex());
	rep.add("k", nm.form.k.hex());
	rep.add("p", nm.form.p.hex());
	rep.add("q", nm.q.hex());
	rep.add("extended", nm.extension.has_value());
	if (nm.extension)
		rep.add("field_used", nm.extension->target().name());
	const AxiomReport mr = verify_morphism(nm.iso);
	rep.check("iso", mr);
	rep.add("iso.matrix", matrix_hex(nm.iso.mat));
	return mr.passed() ? Exit::ok : Exit::theorem;
}

std::vector<Vec> parse_gens(const Algebra &a, const std::string &list)
{
	std::vector<Vec> out;
	std::stringstream ss(list);
	std::string name;
	while (std::getline(ss, name, ',')) {
		if (name.empty())
			continue;
		std::size_t idx = a.dim();
		for (std::size_t i = 0; i < a.dim(); ++i)
			if (a.label(i) == name)
				idx = i;
		if (idx == a.dim())
			throw SyntaxError("unknown generator '" + name + "'", 1, 1);
		out.push_back(unit_vec(a.field(), a.dim(), idx));
	}
	if (out.empty())
		throw SyntaxError("--gens needs at least one basis label", 1, 1);
	return out;
}

int cmd_present(Options &o, std::istream &in, Report &rep)
{
	const AlgebraFile file = load(o, in);
	header(rep, file);
	const Algebra &a = need_dalgebra(file);
	if (int rc = gate_axioms(rep, a))
		return rc;
	const Presentation p = present(a, parse_gens(a, o.gens), o.bound);
	rep.add("relations", p.relations.size());
	rep.add("presentation", p.str());
	const PresentedAlgebra back = quotient_to_dalgebra(p);
	rep.add("roundtrip_dim", back.algebra->dim());
	return back.algebra->dim() == a.dim() ? Exit::ok : Exit::theorem;
}

int cmd_pbw_verify(Options &o, std::istream &in, Report &rep)
{
	const AlgebraFile file = load(o, in);
	header(rep, file);
	const LieAlgebra &l = need_lie(file);
	const AxiomReport ax = verify_lie(l);
	rep.check("lie_axioms", ax);
	const StraightenCtx ctx(l);
	rep.add("kk", ctx.kk());
	rep.add("bound", o.bound);
	for (std::size_t d = 0; d <= o.bound; ++d)
		rep.add("standard." + std::to_string(d),
		        standard_count(l.dim(), ctx.kk(), d) -
		            (d ? standard_count(l.dim(), ctx.kk(), d - 1) : 0));
	const AxiomReport pr = verify_pbw(ctx, o.bound);
	rep.check("pbw", pr);
	bool good = pr.passed();
	const std::size_t trials = o.trials ? o.trials : 100;
	const ConfluenceReport cr = confluence_test(ctx, trials, o.bound, o.seed);
	rep.add("confluence.trials", cr.trials);
	rep.add("confluence.discrepancies", cr.discrepancies);
	good = good && cr.discrepancies == 0;
	if (!ax.passed())
		return Exit::axiom;
	return good ? Exit::ok : Exit::theorem;
}

int cmd_confluence(Options &o, std::istream &in, std::ostream &out, Report &rep)
{
	const AlgebraFile file = load(o, in);
	header(rep, file);
	const LieAlgebra &l = need_lie(file);
	const AxiomReport ax = verify_lie(l);
	rep.check("lie_axioms", ax);
	if (!ax.passed())
		return Exit::axiom;
	const StraightenCtx ctx(l);
	const std::size_t trials = o.trials ? o.trials : 1000;
	const ConfluenceReport cr = confluence_test(ctx, trials, o.max_len, o.seed);
	if (o.trace)
		out << cr.text;
	rep.add("trials", cr.trials);
	rep.add("max_len", o.max_len);
	rep.add("seed", std::to_string(o.seed));
	rep.add("discrepancies", cr.discrepancies);
	char hex[19];
	std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(cr.digest));
	rep.add("digest", std::string(hex));
	return cr.discrepancies == 0 ? Exit::ok : Exit::theorem;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err)
{
	CLI::App app{"sv2: d-algebras and Lie algebras over GF(2^k)"};
	app.require_subcommand(1);
	Options o;

	auto common = [&](CLI::App *sub) {
		sub->add_option("input", o.input, "algebra file or presentation (default: stdin)");
		sub->add_option("--field", o.field, "work over GF(2^k)")->check(CLI::Range(1, 16));
		sub->add_option("--format", o.format, "human or kv")
		    ->check(CLI::IsMember({"human", "kv"}));
	};
	auto *check = app.add_subcommand("check", "axiom and lemma suites");
	auto *inv = app.add_subcommand("invariants", "ker, im, center, defect, locality");
	auto *dec = app.add_subcommand("decompose", "local factors and idempotents");
	auto *c7 = app.add_subcommand("classify7", "map a 7-dim algebra onto D(0,0,0)");
	auto *pres = app.add_subcommand("present", "bounded-degree presentation");
	auto *pbw = app.add_subcommand("pbw-verify", "PBW straightening checks");
	auto *conf = app.add_subcommand("confluence", "strategy independence fuzzing");
	for (auto *s : {check, inv, dec, c7, pres, pbw, conf})
		common(s);
	pres->add_option("--gens", o.gens, "comma separated basis labels")->required();
	for (auto *s : {pres, pbw})
		s->add_option("--bound", o.bound, "degree bound");
	for (auto *s : {pbw, conf}) {
		s->add_option("--trials", o.trials, "random trials");
		s->add_option("--seed", o.seed, "rng seed");
	}
	conf->add_option("--max-len", o.max_len, "longest random word");
	conf->add_flag("--trace", o.trace, "print one line per trial");

	try {
		std::vector<std::string> rev(args.rbegin(), args.rend());
		app.parse(rev);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return Exit::ok;
	} catch (const CLI::ParseError &e) {
		err << e.what() << "\n";
		return Exit::parse;
	}

	Report rep;
	auto sub = app.get_subcommands().front();
	rep.add("command", sub->get_name());
	int rc = Exit::other;
	try {
		if (sub == check)
			rc = cmd_check(o, in, rep);
		else if (sub == inv)
			rc = cmd_invariants(o, in, rep);
		else if (sub == dec)
			rc = cmd_decompose(o, in, rep);
		else if (sub == c7)
			rc = cmd_classify7(o, in, rep);
		else if (sub == pres)
			rc = cmd_present(o, in, rep);
		else if (sub == pbw)
			rc = cmd_pbw_verify(o, in, rep);
		else
			rc = cmd_confluence(o, in, out, rep);
	} catch (const SyntaxError &e) {
		rep.add("error", std::string("syntax: ") + e.what());
		rc = Exit::parse;
	} catch (const IndexOutOfRange &e) {
		rep.add("error", std::string("index: ") + e.what());
		rc = Exit::parse;
	} catch (const TheoremViolation &e) {
		rep.add("error", std::string("theorem violation: ") + e.what());
		rc = Exit::theorem;
	} catch (const NeedsExtension &e) {
		rep.add("error", std::string("needs extension: ") + e.what());
		rc = Exit::needs_extension;
	} catch (const NonSplit &e) {
		rep.add("error", std::string("not split: ") + e.what());
		rc = Exit::needs_extension;
	} catch (const Error &e) {
		rep.add("error", e.what());
		rc = Exit::other;
	}
	if (rc == Exit::needs_extension) {
		if (o.loaded_k && 2 * o.loaded_k <= Field::max_degree)
			rep.add("suggestion", "retry with --field " + std::to_string(2 * o.loaded_k));
	}
	rep.add("exit", std::to_string(rc));
	rep.emit(out, o.format);
	return rc;
}

} // namespace sv2::cli
