// command line front end: classify data, evaluate Q of relations, show
// datum summaries, run the built-in example catalog and demos

#include "hopfgal/atlas.hpp"
#include "hopfgal/parser.hpp"
#include "hopfgal/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

using namespace hopfgal;

namespace {

int status_exit(Status s)
{
	switch (s)
	{
	case Status::GT:
		return 0;
	case Status::NotGT:
		return 1;
	default:
		return 2;
	}
}

double ms_since(std::chrono::steady_clock::time_point t0)
{
	return std::chrono::duration<double, std::milli>(
	           std::chrono::steady_clock::now() - t0)
	    .count();
}

void print_verdict(const Verdict &v)
{
	std::cout << status_str(v.status) << "\n";
	for (auto &d : v.decomposition)
		std::cout << "  factor: " << d << "\n";
	for (auto &w : v.witnesses)
		std::cout << "  Q[" << w.label << "] = " << w.value.str()
		          << (w.zero ? "  (zero)" : "  (nonzero)") << "\n";
	for (auto &n : v.notes)
		std::cout << "  note: " << n << "\n";
}

int cmd_classify(const std::string &file, bool json)
{
	auto t0 = std::chrono::steady_clock::now();
	auto parsed = parse_datum_file(file);
	auto v = classify(parsed.datum);
	if (json)
		std::cout << report_json("classify", parsed.source, verdict_json(v),
		                         ms_since(t0))
		                 .dump(2)
		          << "\n";
	else
		print_verdict(v);
	return status_exit(v.status);
}

int cmd_check(const std::string &file, const std::string &relation, bool json)
{
	auto t0 = std::chrono::steady_clock::now();
	auto parsed = parse_datum_file(file);
	auto r = evaluate_relation_Q(parsed.datum, relation);
	if (json)
		std::cout << report_json("check", parsed.source + "\n" + relation,
		                         qresult_json(r), ms_since(t0))
		                 .dump(2)
		          << "\n";
	else
		std::cout << "Q[" << r.label << "] = " << r.value.str() << "\n"
		          << (r.zero ? "ZERO" : "NONZERO") << " (" << r.note << ")\n";
	return r.zero ? 0 : 1;
}

int cmd_qshow(const std::string &file, bool json)
{
	auto t0 = std::chrono::steady_clock::now();
	auto parsed = parse_datum_file(file);
	const auto &d = parsed.datum;
	auto rep = d.validate();
	nlohmann::json j;
	j["group"] = d.group().str();
	j["theta"] = d.theta();
	j["session_conductor"] = rep.session_conductor;
	j["n"] = rep.n;
	j["warnings"] = rep.warnings;
	for (int i = 0; i < d.theta(); ++i)
		j["g"].push_back(d.group().element_str(d.g(i)));
	for (int i = 0; i < d.theta(); ++i)
	{
		std::vector<std::string> row;
		for (int k = 0; k < d.theta(); ++k)
			row.push_back(d.q(i, k).str());
		j["q"].push_back(row);
	}
	try
	{
		j["cartan"] = d.cartan_or_infer();
		std::string types;
		for (auto &c : classify_cartan(d.cartan_or_infer()))
			types += (types.empty() ? "" : " + ") + c.str();
		j["cartan_type"] = types;
	}
	catch (const Error &e)
	{
		j["cartan_error"] = e.what();
	}
	j["minimal"] = d.is_minimal();
	if (json)
		std::cout << report_json("qshow", parsed.source, j, ms_since(t0))
		                 .dump(2)
		          << "\n";
	else
	{
		std::cout << "group: " << j["group"].get<std::string>()
		          << "  (theta = " << d.theta() << ")\n";
		for (int i = 0; i < d.theta(); ++i)
			std::cout << "g[" << (i + 1)
			          << "] = " << d.group().element_str(d.g(i))
			          << ", n = " << rep.n[i] << "\n";
		for (int i = 0; i < d.theta(); ++i)
			for (int k = 0; k < d.theta(); ++k)
				std::cout << "q[" << (i + 1) << "][" << (k + 1)
				          << "] = " << d.q(i, k).str() << "\n";
		if (j.contains("cartan_type"))
			std::cout << "cartan type: "
			          << j["cartan_type"].get<std::string>() << "\n";
		else
			std::cout << "cartan type: " << j["cartan_error"].get<std::string>()
			          << "\n";
		std::cout << "minimal: " << (d.is_minimal() ? "yes" : "no") << "\n";
		for (auto &w : rep.warnings)
			std::cout << "warning: " << w << "\n";
	}
	return 0;
}

int cmd_demo_sl2(long m, long degree, bool json)
{
	auto t0 = std::chrono::steady_clock::now();
	auto demo = make_sl2_demo(m);
	FieldAction act(demo.datum, demo.spec);
	auto results = act.verify_relations_on_basis(demo.relations, degree);
	auto indep = act.check_linear_independence();
	bool all = indep.independent;
	nlohmann::json j;
	j["m"] = m;
	j["degree_bound"] = degree;
	for (auto &r : results)
	{
		all = all && r.holds;
		j["relations"].push_back(
		    {{"label", r.label}, {"holds", r.holds}, {"failure", r.failure}});
	}
	j["independent"] = indep.independent;
	if (json)
		std::cout << report_json("demo sl2", std::to_string(m), j,
		                         ms_since(t0))
		                 .dump(2)
		          << "\n";
	else
	{
		std::cout << "u_q(sl2) on k(z), q = zeta" << m
		          << ": checking on z^a, |a| <= " << degree << "\n";
		for (auto &r : results)
			std::cout << (r.holds ? "  ok    " : "  FAIL  ") << r.label
			          << (r.holds ? "" : "  " + r.failure) << "\n";
		for (auto &line : indep.detail)
			std::cout << "  " << line << "\n";
	}
	return all ? 0 : 1;
}

int cmd_twists(const std::string &type, int rank, const std::string &part,
               bool json)
{
	auto t0 = std::chrono::steady_clock::now();
	long n = count_twists(type[0], rank, part == "full");
	if (json)
		std::cout << report_json("twists", type + std::to_string(rank), n,
		                         ms_since(t0))
		                 .dump(2)
		          << "\n";
	else
		std::cout << n << "\n";
	return 0;
}

int cmd_atlas(const std::string &name, bool json)
{
	auto t0 = std::chrono::steady_clock::now();
	nlohmann::json j = nlohmann::json::array();
	bool all_match = true;
	for (auto &e : atlas_entries())
	{
		if (!name.empty() && e.name != name)
			continue;
		auto v = e.decide(e.build());
		bool match = v.status == e.expected;
		all_match = all_match && match;
		if (json)
			j.push_back({{"name", e.name},
			             {"description", e.description},
			             {"expected", status_str(e.expected)},
			             {"verdict", verdict_json(v)},
			             {"match", match}});
		else
			std::cout << (match ? "ok    " : "FAIL  ") << e.name << "  "
			          << status_str(v.status) << "  (" << e.description
			          << ")\n";
	}
	if (json)
		std::cout << report_json("atlas", name, j, ms_since(t0)).dump(2)
		          << "\n";
	return all_match ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact Q-criterion tools for pointed Hopf algebra data"};
	app.require_subcommand(1);

	std::string file, relation, type = "A", part = "borel", name;
	int rank = 1;
	long order = 5, degree = 10;
	bool json = false;

	auto *classify_cmd = app.add_subcommand("classify",
	                                        "decide a datum file");
	classify_cmd->add_option("file", file)->required();
	classify_cmd->add_flag("--json", json);

	auto *check_cmd =
	    app.add_subcommand("check", "Q-value of a relation over a datum");
	check_cmd->add_option("file", file)->required();
	check_cmd->add_option("--relation", relation)->required();
	check_cmd->add_flag("--json", json);

	auto *qshow_cmd = app.add_subcommand("qshow", "summarize a datum file");
	qshow_cmd->add_option("file", file)->required();
	qshow_cmd->add_flag("--json", json);

	auto *demo_cmd = app.add_subcommand("demo", "built-in demonstrations");
	auto *sl2_cmd = demo_cmd->add_subcommand(
	    "sl2", "u_q(sl2) acting on a rational function field");
	sl2_cmd->add_option("--order", order, "order of q (odd, >= 3)");
	sl2_cmd->add_option("--degree", degree, "exponent bound for the check");
	sl2_cmd->add_flag("--json", json);
	demo_cmd->require_subcommand(1);

	auto *twists_cmd =
	    app.add_subcommand("twists", "count Galois-theoretical twists");
	twists_cmd->add_option("--type", type, "Dynkin letter A..G")->required();
	twists_cmd->add_option("--rank", rank)->required();
	twists_cmd
	    ->add_option("--part", part, "borel (default) or full")
	    ->check(CLI::IsMember({"borel", "full"}));
	twists_cmd->add_flag("--json", json);

	auto *atlas_cmd =
	    app.add_subcommand("atlas", "run the built-in example catalog");
	atlas_cmd->add_option("--name", name, "run a single entry");
	atlas_cmd->add_flag("--json", json);

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp &e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e);
		return 64;
	}

	try
	{
		if (classify_cmd->parsed())
			return cmd_classify(file, json);
		if (check_cmd->parsed())
			return cmd_check(file, relation, json);
		if (qshow_cmd->parsed())
			return cmd_qshow(file, json);
		if (demo_cmd->parsed())
			return cmd_demo_sl2(order, degree, json);
		if (twists_cmd->parsed())
			return cmd_twists(type, rank, part, json);
		if (atlas_cmd->parsed())
			return cmd_atlas(name, json);
	}
	catch (const Error &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	}
	catch (const std::exception &e)
	{
		std::cerr << "internal error: " << e.what() << "\n";
		return 3;
	}
	return 64;
}
