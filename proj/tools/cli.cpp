#include "cli.hpp"

#include <list>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jtau/render.hpp"
#include "jtau/sampler.hpp"

namespace jtau {

namespace {

using nlohmann::json;

struct Common {
	std::string alphabet_file;
	std::string series = "lcs";
	int cap = 6;
	std::uint64_t seed = 0;
	bool machine = false;
};

void add_common(CLI::App* cmd, Common& c) {
	cmd->add_option("--alphabet", c.alphabet_file,
	                "alphabet file, lines \"name [weight]\" (default: a b)");
	cmd->add_option("--series", c.series, "series: lcs | zassenhaus:P | weight");
	cmd->add_option("-N,--cap", c.cap, "truncation cap");
	cmd->add_option("--seed", c.seed, "sampler seed");
	cmd->add_flag("--machine", c.machine, "one JSON record per result");
}

AlphabetPtr load_alphabet(const Common& c) {
	if (c.alphabet_file.empty()) return Alphabet::make_unweighted({"a", "b"});
	return Alphabet::parse_file(c.alphabet_file);
}

ReducedWord regrade(const ReducedWord& w, const AlphabetPtr& target) {
	if (w.alphabet() == target) return w;
	ReducedWord out = ReducedWord::identity(target);
	for (const auto& s : w.syllables()) out = out * ReducedWord::gen(target, s.gen, s.exp);
	return out;
}

int report_exit(const CheckReport& rep, const Common& c, const char* what, std::ostream& out,
                std::ostream& err) {
	if (c.machine) {
		out << report_to_json(rep) << "\n";
	} else if (rep.ok()) {
		out << what << ": ok\n";
	} else {
		for (const auto& v : rep.violations) out << "counterexample: " << v << "\n";
	}
	if (rep.ok()) return 0;
	err << "error: CheckFailed: " << rep.violations.size() << " violation(s) in " << what
	    << "\n";
	return 1;
}

int selftest(std::uint64_t seed, std::ostream& out, std::ostream& err);

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"exact calculator for free-group filtrations, their graded Lie algebras,\n"
	             "and automorphism invariants"};
	app.require_subcommand(1);

	int exit_code = 0;
	std::list<Common> commons;
	std::string word_text, map_file, map2_file, conj_file, expansion_file, term_text;
	int at_degree = 0;
	int samples = 0;

	auto leaf = [&](CLI::App* parent, const char* name, const char* help) {
		CLI::App* cmd = parent->add_subcommand(name, help);
		Common& c = commons.emplace_back();
		add_common(cmd, c);
		return std::make_pair(cmd, &c);
	};
	auto on = [&exit_code](CLI::App* cmd, const Common* c,
	                       std::function<int(const Common&)> body) {
		cmd->callback([&exit_code, c, body] { exit_code = body(*c); });
	};

	/* ------------------------------------------------------------- word */
	CLI::App* word = app.add_subcommand("word", "free-group word calculus");
	word->require_subcommand(1);

	{
		auto [cmd, c] = leaf(word, "reduce", "parse and freely reduce a word");
		cmd->add_option("--word", word_text, "word in the bracket DSL")->required();
		on(cmd, c, [&](const Common& cc) {
			ReducedWord w = parse_word(load_alphabet(cc), word_text);
			if (cc.machine)
				out << json{{"command", "word reduce"}, {"word", word_to_string(w)}}.dump()
				    << "\n";
			else
				out << word_to_string(w) << "\n";
			return 0;
		});
	}
	{
		auto [cmd, c] = leaf(word, "expand", "expansion of a word, x -> 1 + X");
		cmd->add_option("--word", word_text, "word in the bracket DSL")->required();
		on(cmd, c, [&](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			SeriesSpec spec = SeriesSpec::parse(cc.series, alpha);
			ReducedWord w = regrade(parse_word(alpha, word_text), spec.graded_alphabet());
			TruncatedSeries s = magnus_expand(w, spec.ring(), cc.cap);
			out << (cc.machine ? series_to_json(s) : series_to_string(s)) << "\n";
			return 0;
		});
	}

	/* ----------------------------------------------------------- series */
	CLI::App* series = app.add_subcommand("series", "filtration degree oracles");
	series->require_subcommand(1);

	{
		auto [cmd, c] = leaf(series, "degree", "filtration degree of a word");
		cmd->add_option("--word", word_text, "word in the bracket DSL")->required();
		on(cmd, c, [&](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			SeriesSpec spec = SeriesSpec::parse(cc.series, alpha);
			Degree d = series_degree(parse_word(alpha, word_text), spec, cc.cap);
			out << (cc.machine ? degree_to_json(d) : d.to_string()) << "\n";
			return 0;
		});
	}
	{
		auto [cmd, c] = leaf(series, "class", "gr-class of a word at a degree");
		cmd->add_option("--word", word_text, "word in the bracket DSL")->required();
		cmd->add_option("--degree", at_degree, "layer to take the class in")->required();
		on(cmd, c, [&](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			SeriesSpec spec = SeriesSpec::parse(cc.series, alpha);
			LieElement x = gr_class(parse_word(alpha, word_text), spec, at_degree);
			out << (cc.machine ? lie_to_json(x) : lie_to_string(x)) << "\n";
			return 0;
		});
	}
	{
		auto [cmd, c] = leaf(series, "axioms", "filtration axiom harness");
		cmd->add_option("--samples", samples, "sample count (default 64)");
		on(cmd, c, [&](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			SeriesSpec spec = SeriesSpec::parse(cc.series, alpha);
			CheckReport rep =
			    check_axioms(spec, cc.cap, cc.seed, samples > 0 ? samples : 64);
			return report_exit(rep, cc, "axioms", out, err);
		});
	}

	/* ---------------------------------------------------------- johnson */
	CLI::App* johnson = app.add_subcommand("johnson", "automorphism invariants");
	johnson->require_subcommand(1);

	{
		auto [cmd, c] = leaf(johnson, "degree", "filtration degree of a map");
		cmd->add_option("--map", map_file, "map file, lines \"name -> word\"")->required();
		on(cmd, c, [&](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			SeriesSpec spec = SeriesSpec::parse(cc.series, alpha);
			GroupMap f = parse_map_file(alpha, map_file);
			Degree d = filtration_degree(f, spec, cc.cap);
			out << (cc.machine ? degree_to_json(d) : d.to_string()) << "\n";
			return 0;
		});
	}
	{
		auto [cmd, c] = leaf(johnson, "tau", "Johnson derivation of a map");
		cmd->add_option("--map", map_file, "map file")->required();
		cmd->add_option("--degree", at_degree, "degree (default: the computed degree)");
		on(cmd, c, [&](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			SeriesSpec spec = SeriesSpec::parse(cc.series, alpha);
			FilteredAut fa = make_filtered(parse_map_file(alpha, map_file), spec, cc.cap);
			Derivation d = at_degree > 0 ? tau(fa, at_degree) : tau(fa);
			if (cc.machine)
				out << derivation_to_json(d) << "\n";
			else
				out << derivation_to_string(d);
			return 0;
		});
	}
	{
		auto [cmd, c] = leaf(johnson, "tau0", "first-layer action of a map");
		cmd->add_option("--map", map_file, "map file")->required();
		on(cmd, c, [&](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			SeriesSpec spec = SeriesSpec::parse(cc.series, alpha);
			Aut0 a = tau0(parse_map_file(alpha, map_file), spec);
			if (cc.machine) {
				json imgs = json::array();
				for (int i = 0; i < a.eg->pos()->size(); ++i)
					imgs.push_back({{"generator", a.eg->pos()->name(i)},
					                {"value", json::parse(lie_to_json(a.pos.img[i]))}});
				out << json{{"command", "johnson tau0"}, {"images", imgs}}.dump() << "\n";
			} else {
				out << aut0_to_string(a);
			}
			return 0;
		});
	}
	{
		auto [cmd, c] = leaf(johnson, "verify", "morphism identity suite");
		cmd->add_option("--map", map_file, "first map file")->required();
		cmd->add_option("--map2", map2_file, "second map file")->required();
		cmd->add_option("--conj", conj_file, "conjugating map file (default: identity)");
		on(cmd, c, [&](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			SeriesSpec spec = SeriesSpec::parse(cc.series, alpha);
			FilteredAut f = make_filtered(parse_map_file(alpha, map_file), spec, cc.cap);
			FilteredAut g = make_filtered(parse_map_file(alpha, map2_file), spec, cc.cap);
			GroupMap h = conj_file.empty() ? GroupMap::identity(alpha)
			                               : parse_map_file(alpha, conj_file);
			return report_exit(verify_morphism_identities(f, g, h), cc,
			                   "morphism identities", out, err);
		});
	}

	/* ----------------------------------------------------------- formal */
	CLI::App* formal = app.add_subcommand("formal", "expansion and group-ring machinery");
	formal->require_subcommand(1);

	auto load_expansion = [&expansion_file](const Common& cc, const AlphabetPtr& alpha) {
		if (expansion_file.empty()) return Expansion::standard(alpha, cc.cap);
		return parse_expansion_file(alpha, cc.cap, expansion_file);
	};

	{
		auto [cmd, c] = leaf(formal, "rho", "operator log of the conjugated map");
		cmd->add_option("--map", map_file, "map file")->required();
		cmd->add_option("--expansion", expansion_file, "expansion tails file");
		on(cmd, c, [&, load_expansion](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			Expansion th = load_expansion(cc, alpha);
			DerivationTail t =
			    operator_log(conjugated_endo(th, parse_map_file(alpha, map_file)), 1);
			if (cc.machine)
				out << tail_to_json(t) << "\n";
			else
				out << tail_to_string(t);
			return 0;
		});
	}
	{
		auto [cmd, c] = leaf(formal, "bch",
		                     "compare bch_product of two logs with the log of the composite");
		cmd->add_option("--map", map_file, "first map file")->required();
		cmd->add_option("--map2", map2_file, "second map file")->required();
		cmd->add_option("--expansion", expansion_file, "expansion tails file");
		on(cmd, c, [&, load_expansion](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			Expansion th = load_expansion(cc, alpha);
			GroupMap f = parse_map_file(alpha, map_file);
			GroupMap g = parse_map_file(alpha, map2_file);
			DerivationTail s = operator_log(conjugated_endo(th, f), 1);
			DerivationTail t = operator_log(conjugated_endo(th, g), 1);
			DerivationTail product = bch_product(s, t);
			DerivationTail direct =
			    operator_log(conjugated_endo(th, compose_maps(f, g)), 1);
			bool equal = tail_equal(product, direct);
			if (cc.machine) {
				out << json{{"command", "formal bch"},
				            {"bch", json::parse(tail_to_json(product))},
				            {"direct", json::parse(tail_to_json(direct))},
				            {"equal", equal}}
				           .dump()
				    << "\n";
			} else {
				out << "bch product:\n"
				    << tail_to_string(product) << "log of composite:\n"
				    << tail_to_string(direct) << (equal ? "equal\n" : "DIFFER\n");
			}
			if (!equal) err << "error: CheckFailed: bch product differs\n";
			return equal ? 0 : 1;
		});
	}
	{
		auto [cmd, c] = leaf(formal, "jdeg", "degree of a group-ring element");
		cmd->add_option("--term", term_text, "combination, e.g. \"a b - a - b + 1\"")
		    ->required();
		cmd->add_option("--expansion", expansion_file, "expansion tails file");
		on(cmd, c, [&, load_expansion](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			Expansion th = load_expansion(cc, alpha);
			Degree d = jfiltration_degree(parse_group_ring(alpha, term_text), th);
			out << (cc.machine ? degree_to_json(d) : d.to_string()) << "\n";
			return 0;
		});
	}
	{
		auto [cmd, c] = leaf(formal, "upsilon", "graded group-ring map harness");
		cmd->add_option("--degree", at_degree, "highest layer to check (default 3)");
		cmd->add_option("--samples", samples, "sample count (default 50)");
		cmd->add_option("--expansion", expansion_file, "expansion tails file");
		on(cmd, c, [&, load_expansion](const Common& cc) {
			AlphabetPtr alpha = load_alphabet(cc);
			SeriesSpec spec = SeriesSpec::lower_central(alpha);
			Expansion th = load_expansion(cc, alpha);
			CheckReport rep = upsilon_checks(spec, th, at_degree > 0 ? at_degree : 3,
			                                 cc.seed, samples > 0 ? samples : 50);
			return report_exit(rep, cc, "upsilon", out, err);
		});
	}

	/* --------------------------------------------------------- selftest */
	{
		auto [cmd, c] = leaf(&app, "selftest", "quick library verification");
		on(cmd, c, [&](const Common& cc) { return selftest(cc.seed, out, err); });
	}

	std::vector<const char*> argv;
	argv.push_back("jtau");
	for (const auto& a : args) argv.push_back(a.c_str());
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return 0;
	} catch (const CLI::ParseError& e) {
		err << "usage error: " << e.what() << "\n";
		return 2;
	} catch (const Error& e) {
		err << "error: " << e.what() << "\n";
		return 1;
	}
	return exit_code;
}

namespace {

int selftest(std::uint64_t seed, std::ostream& out, std::ostream& err) {
	int failures = 0;
	auto check = [&](bool ok, const char* name) {
		out << (ok ? "ok" : "FAIL") << " " << name << "\n";
		if (!ok) ++failures;
	};
	AlphabetPtr alpha = Alphabet::make_unweighted({"a", "b"});
	std::mt19937_64 rng(seed);

	{
		/* Lyndon basis sizes against the Moebius count */
		auto moebius = [](int n) {
			int m = 1;
			for (int p = 2; p * p <= n; ++p)
				if (n % p == 0) {
					n /= p;
					if (n % p == 0) return 0;
					m = -m;
				}
			return n > 1 ? -m : m;
		};
		bool ok = true;
		for (int d = 1; d <= 6; ++d) {
			long long sum = 0;
			for (int e = 1; e <= d; ++e)
				if (d % e == 0) sum += moebius(e) * (1LL << (d / e));
			ok &= lyndon_dim(alpha, d) == sum / d;
		}
		check(ok, "basis sizes");
	}
	{
		bool ok = true;
		for (int s = 0; s < 50 && ok; ++s) {
			ReducedWord x = random_word(rng, alpha, 4), y = random_word(rng, alpha, 4),
			            z = random_word(rng, alpha, 4);
			ok &= commutator(x, y * z) ==
			      commutator(x, y) * conjugate(y, commutator(x, z));
			ok &= commutator(x, y.inverse()).inverse() ==
			      conjugate(y.inverse(), commutator(x, y));
			ReducedWord hw = commutator(commutator(x, y), conjugate(y, z)) *
			                 commutator(commutator(y, z), conjugate(z, x)) *
			                 commutator(commutator(z, x), conjugate(x, y));
			ok &= hw.is_identity();
		}
		check(ok, "commutator laws");
	}
	{
		SeriesSpec spec = SeriesSpec::lower_central(alpha);
		bool ok = true;
		for (int m = 1; m <= 3 && ok; ++m) {
			const auto& basis = lyndon_words(alpha, m);
			for (size_t i = 0; i < basis.size(); ++i) {
				ReducedWord w = bracketing_to_group_word(alpha, basis[i]);
				ok &= series_degree(w, spec, 5) == Degree::finite(m);
				ok &= gr_class(w, spec, m) ==
				      LieElement::basis_element(alpha, spec.ring(), m,
				                                static_cast<int>(i));
			}
		}
		check(ok, "oracle cross-check");
	}
	{
		SeriesSpec spec = SeriesSpec::lower_central(alpha);
		bool ok = true;
		for (int s = 0; s < 5 && ok; ++s) {
			FilteredAut f = make_filtered(random_ia_map(rng, alpha, 2), spec, 5);
			FilteredAut g = make_filtered(random_ia_map(rng, alpha, 2), spec, 5);
			GroupMap h = random_nielsen_map(rng, alpha, 2);
			ok &= verify_morphism_identities(f, g, h).ok();
		}
		check(ok, "morphism identities");
	}
	{
		SeriesSpec spec = SeriesSpec::lower_central(alpha);
		Expansion th = Expansion::standard(alpha, 4);
		bool ok = true;
		int tried = 0;
		while (tried < 3) {
			GroupMap f = random_ia_map(rng, alpha, 2);
			FilteredAut fa = make_filtered(f, spec, 4);
			if (!fa.degree.is_finite() || fa.degree.finite_value() > 2) continue;
			++tried;
			DerivationTail t = operator_log(conjugated_endo(th, f), 1);
			if (t.is_zero() || t.leading_degree() != fa.degree.finite_value()) {
				ok = false;
				break;
			}
			Derivation lead = tau(fa);
			const Derivation& l = t.parts.begin()->second;
			for (int i = 0; i < alpha->size(); ++i)
				ok &= l.values[i] == lead.values[i].in_ring(Ring::rationals());
		}
		check(ok, "expansion leading term");
	}
	{
		/* log(exp s exp t) degree-2 part is s2 + t2 + [s1,t1]/2 */
		Expansion th = Expansion::standard(alpha, 4);
		GroupMap f = GroupMap::inner(ReducedWord::gen(alpha, 0));
		GroupMap g = GroupMap::inner(ReducedWord::gen(alpha, 1));
		DerivationTail s = operator_log(conjugated_endo(th, f), 1);
		DerivationTail t = operator_log(conjugated_endo(th, g), 1);
		DerivationTail p = bch_product(s, t);
		auto part = [](const DerivationTail& tl, int d) {
			auto it = tl.parts.find(d);
			return it != tl.parts.end() ? it->second : zero_derivation(tl.eg, d);
		};
		Derivation expect = der_add(
		    der_add(part(s, 2), part(t, 2)),
		    der_scale(der_bracket(part(s, 1), part(t, 1)), mpq_class(1, 2)));
		check(der_equal(part(p, 2), expect), "bch half term");
	}
	{
		SeriesSpec spec = SeriesSpec::lower_central(alpha);
		Expansion th = Expansion::standard(alpha, 4);
		check(upsilon_checks(spec, th, 2, seed, 10).ok(), "group-ring map");
	}

	if (failures > 0) {
		err << "error: CheckFailed: " << failures << " selftest group(s) failed\n";
		return 1;
	}
	return 0;
}

}  // namespace

}  // namespace jtau
