#include "frobtope/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "frobtope/errors.hpp"
#include "frobtope/group_spec.hpp"
#include "frobtope/oracle.hpp"
#include "frobtope/report.hpp"

namespace frobtope::cli {

namespace {

std::string join(std::vector<Point> const &v)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  return os.str();
}

std::string join_indices(std::vector<std::size_t> const &v)
{
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

std::string fvector_text(FVector const &f)
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < f.counts().size(); ++i)
    os << (i ? ", " : "") << f.counts()[i];
  os << ')';
  return os.str();
}

std::string info_text(FrobeniusSystem const &sys)
{
  std::ostringstream os;
  os << "points n:      " << sys.n() << '\n'
     << "complement h:  " << sys.h() << '\n'
     << "order |G|:     " << sys.order() << '\n'
     << "regular:       " << (sys.is_regular() ? "yes" : "no") << '\n'
     << "dimension:     " << polytope_dim(sys) << '\n'
     << "vertices:      " << sys.order() << '\n'
     << "facets:        "
     << boost::multiprecision::pow(BigInt(sys.n()), static_cast<unsigned>(sys.h())) << '\n'
     << "kernel:";
  for (auto const &p : sys.kernel())
    os << " [" << join(p.one_line()) << ']';
  os << "\ncomplement:";
  for (auto const &p : sys.complement())
    os << " [" << join(p.one_line()) << ']';
  os << '\n';
  return os.str();
}

Json elements_json(FrobeniusSystem const &sys)
{
  Json out = Json::array();
  for (auto const &g : sys.elements())
    out.push_back(to_json(g));
  return out;
}

RunResult execute(RunConfig const &config, FrobeniusSystem const &sys)
{
  RunResult result;
  bool const json = config.format == Format::json;
  Json doc{{"group", config.group_spec}};
  std::ostringstream text;

  switch (config.command) {
  case Command::info: {
    doc.update(info_json(sys));
    text << info_text(sys);
    break;
  }
  case Command::fvector: {
    auto f = fvector(sys.n(), sys.h());
    doc["n"] = sys.n();
    doc["h"] = sys.h();
    doc["dim"] = f.top_dim();
    doc["fvector"] = to_json(f);
    text << "f-vector (f_-1 .. f_" << f.top_dim() << "): " << fvector_text(f) << '\n';
    break;
  }
  case Command::facets: {
    FacetStream stream(sys);
    auto total = stream.total();
    std::size_t limit = config.all ? std::numeric_limits<std::size_t>::max()
                                   : config.cap.value_or(default_facet_listing);
    Json list = Json::array();
    std::size_t listed = 0;
    while (listed < limit) {
      auto f = stream.next();
      if (!f)
        break;
      if (json)
        list.push_back(f->members);
      else
        text << join_indices(f->members) << '\n';
      ++listed;
    }
    doc["elements"] = elements_json(sys);
    doc["total"] = to_json(total);
    doc["listed"] = listed;
    doc["truncated"] = BigInt(listed) < total;
    doc["facets"] = std::move(list);
    text << "listed " << listed << " of " << total << " facets"
         << (BigInt(listed) < total ? " (use --all for the rest)" : "") << '\n';
    break;
  }
  case Command::faces: {
    auto top = polytope_dim(sys);
    auto k = *config.dim;
    if (k < -1 || k > top) {
      result.exit_code = exit_parse_error;
      result.error = "--dim must lie in [-1, " + std::to_string(top) + "]";
      return result;
    }
    auto count = count_faces_in_dim(sys, static_cast<std::ptrdiff_t>(k));
    auto cap = config.all ? std::numeric_limits<std::size_t>::max()
                          : config.cap.value_or(default_face_listing);
    doc["dim"] = k;
    doc["count"] = to_json(count);
    text << count << " faces of dimension " << k << '\n';
    if (count <= cap) {
      Json list = Json::array();
      for (auto const &f : enumerate_faces_of_dim(sys, static_cast<std::ptrdiff_t>(k), cap)) {
        list.push_back(f.members);
        text << join_indices(f.members) << '\n';
      }
      doc["listed"] = true;
      doc["elements"] = elements_json(sys);
      doc["faces"] = std::move(list);
    } else {
      doc["listed"] = false;
      text << "(not listed: count exceeds cap of " << cap << ")\n";
    }
    break;
  }
  case Command::gram: {
    auto census = gram_census(sys);
    doc["census"] = to_json(census);
    if (config.all || sys.order() <= 200) {
      doc["elements"] = elements_json(sys);
      doc["table"] = to_json(gram_table(sys));
    }
    text << "gram census over " << sys.order() << "x" << sys.order() << " pairs\n"
         << "  diagonal = " << census.n << ":      " << census.diagonal << '\n'
         << "  same coset = 0:    " << census.same_coset_zero << '\n'
         << "  across cosets = 1: " << census.cross_coset_one << '\n'
         << "  violations:        " << census.violations << '\n';
    if (!census.holds())
      result.exit_code = exit_verify_failed;
    break;
  }
  case Command::verify: {
    auto report = oracle::verify_theorem(sys, config.cap.value_or(oracle::default_vertex_cap));
    doc.update(to_json(report));
    for (auto const &c : report.checks) {
      text << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.witness.empty())
        text << " (" << c.witness << ')';
      text << '\n';
    }
    text << "facets: " << report.facet_count << '\n'
         << "f-vector oracle:  " << fvector_text(report.fvector_oracle) << '\n'
         << "f-vector formula: " << fvector_text(report.fvector_formula) << '\n';
    if (!report.all_pass())
      result.exit_code = exit_verify_failed;
    break;
  }
  }

  result.output = json ? doc.dump(2) + "\n" : text.str();
  return result;
}

} // namespace

RunResult run(RunConfig const &config)
{
  RunResult result;
  try {
    auto spec = parse_group_spec(config.group_spec);
    if (config.command == Command::faces && !config.dim) {
      result.exit_code = exit_parse_error;
      result.error = "faces requires --dim <k>";
      return result;
    }
    auto sys = build_system(spec);
    result = execute(config, sys);
  } catch (NotFrobenius const &e) {
    result.exit_code = exit_not_frobenius;
    result.error = std::string("not_frobenius: ") + e.what() + "; witness " + e.witness();
  } catch (CapExceeded const &e) {
    result.exit_code = exit_cap_exceeded;
    result.error = std::string("cap exceeded: ") + e.what();
  } catch (std::invalid_argument const &e) {
    result.exit_code = exit_parse_error;
    result.error = std::string("invalid input: ") + e.what();
  }

  if (result.exit_code != exit_parse_error && config.output_path && !result.output.empty()) {
    std::ofstream out(*config.output_path);
    if (!out) {
      result.exit_code = exit_parse_error;
      result.error = "cannot open output file " + *config.output_path;
      return result;
    }
    out << result.output;
    result.output.clear();
  }
  return result;
}

RunResult run_args(std::vector<std::string> const &args)
{
  CLI::App app{"Frobenius polytopes: face structure and exact verification", "frobtope"};
  RunConfig config;
  std::string format = "json";

  std::map<std::string, Command> const commands{
    {"info", Command::info},   {"fvector", Command::fvector}, {"facets", Command::facets},
    {"faces", Command::faces}, {"gram", Command::gram},       {"verify", Command::verify}};

  app.add_option("command", config.command, "info | fvector | facets | faces | gram | verify")
    ->required()
    ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
  app.add_option("group", config.group_spec,
                 "dihedral:<n> | a4 | pq:<p>,<q>,<u> | cyclic:<n> | gens:<deg>;<perm>;...")
    ->required();
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--dim", config.dim, "face dimension for `faces`");
  app.add_flag("--all", config.all, "list every facet/face without truncation");
  app.add_option("--cap", config.cap, "listing cap (facets, faces) or vertex cap (verify)");
  app.add_option("--output", config.output_path, "write the report to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    return {code == 0 ? exit_ok : exit_parse_error, out.str(), err.str()};
  }
  config.format = format == "text" ? Format::text : Format::json;
  return run(config);
}

} // namespace frobtope::cli
