#include "affgr/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "affgr/bruhat.hpp"
#include "affgr/error.hpp"
#include "affgr/levi.hpp"
#include "affgr/normality.hpp"
#include "affgr/slice_algebra.hpp"
#include "affgr/verify.hpp"

namespace affgr {

namespace {

using nlohmann::json;

// Accepts "qm", "minuscule:<i>" (the fundamental coweight of node i, or 0
// for the identity coset) and comma-separated coordinates.
Coweight parse_mu(const RootDatum& d, const std::string& text) {
  const RootSystem& rs = d.system();
  if (text == "qm") {
    if (!rs.almost_simple())
      throw Error(ErrorCode::NotAlmostSimple, "qm needs an almost simple datum");
    return quasi_minuscule(rs);
  }
  const std::string prefix = "minuscule:";
  if (text.rfind(prefix, 0) == 0) {
    std::size_t i = 0;
    try {
      i = std::stoul(text.substr(prefix.size()));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad minuscule index in '" + text + "'");
    }
    if (i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
    const Coweight mu = i == 0 ? zero_coweight(rs.rank()) : fundamental_coweight(rs.rank(), i);
    const auto mins = minuscule_set(d);
    if (std::find(mins.begin(), mins.end(), mu) == mins.end())
      throw Error(ErrorCode::NotInLattice, "omega_" + std::to_string(i) + " is not minuscule in " + d.name());
    return mu;
  }
  Coweight mu = parse_coweight_coords(text);
  if (mu.size() != rs.rank())
    throw Error(ErrorCode::Parse, "expected " + std::to_string(rs.rank()) + " coordinates");
  return mu;
}

std::vector<std::size_t> parse_nodes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad node index '" + item + "'");
    }
  }
  return out;
}

json component_json(const LeviComponent& c) {
  return {{"type", c.type.name()},
          {"nodes", c.nodes},
          {"datum", c.datum.name()},
          {"pi1_invariants", c.pi1_invariants},
          {"pi1_order", c.pi1_order()}};
}

json levi_json(const LeviData& l) {
  json comps = json::array();
  for (const auto& c : l.components) comps.push_back(component_json(c));
  return {{"support", l.support},
          {"components", comps},
          {"pi1_invariants", l.pi1_invariants},
          {"pi1_order", l.pi1_order()},
          {"product_split", l.product_split},
          {"derived", datum_descriptor(l.derived)},
          {"derived_nodes", l.derived_nodes}};
}

json problem_json(const ReducedProblem& p) {
  return {{"datum", datum_descriptor(p.datum)},
          {"lambda", p.la.coords},
          {"mu", p.mu.coords},
          {"nodes", p.nodes}};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normality of Schubert varieties in affine Grassmannians"};
  app.require_subcommand(1);

  std::string datum_text, mu_text, lambda_text, engine = "certify", support_text, suite = "all",
                                                file = "-";
  Int p = 0, height = 0;
  int m = 2, degree = -1;
  bool dot = false;

  auto* classify = app.add_subcommand("classify", "Decide normality of one Schubert variety");
  classify->add_option("--datum", datum_text, "Root datum such as D6:half-spin")->required();
  classify->add_option("--mu", mu_text, "Coordinates, qm or minuscule:<i>")->required();
  classify->add_option("--char", p, "Characteristic (0 or a prime)")->required();
  classify->add_option("--engine", engine)->check(CLI::IsMember({"oracle", "certify", "both"}));

  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of dominant cocharacters");
  hasse_cmd->add_option("--datum", datum_text)->required();
  hasse_cmd->add_option("--height", height, "Bound on <2rho, mu>")->required();
  hasse_cmd->add_flag("--dot", dot, "Emit Graphviz DOT instead of JSON");

  auto* covers_cmd = app.add_subcommand("covers", "Upward covers of a dominant cocharacter");
  covers_cmd->add_option("--datum", datum_text)->required();
  covers_cmd->add_option("--lambda", lambda_text)->required();

  auto* pi1_cmd = app.add_subcommand("pi1", "Fundamental group of a datum or of a Levi");
  pi1_cmd->add_option("--datum", datum_text)->required();
  pi1_cmd->add_option("--support", support_text, "Comma-separated 1-based nodes");

  auto* levi_cmd = app.add_subcommand("levi", "Levi reduction of the slice at lambda in mu");
  levi_cmd->add_option("--datum", datum_text)->required();
  levi_cmd->add_option("--lambda", lambda_text)->required();
  levi_cmd->add_option("--mu", mu_text)->required();

  auto* ring_cmd = app.add_subcommand("slice-ring", "Rank-one slice ring and its PGL2 subring");
  ring_cmd->add_option("--m", m, "<2rho, mu>, at least 2")->required();
  ring_cmd->add_option("--char", p)->required();
  ring_cmd->add_option("--degree", degree, "Weighted degree bound (default 2m+4)");

  auto* replay_cmd = app.add_subcommand("replay", "Re-check a verdict JSON produced by classify");
  replay_cmd->add_option("--file", file, "Path, or - for stdin");

  auto* verify_cmd = app.add_subcommand("verify", "Run acceptance suites");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      const RootDatum d = parse_datum(datum_text);
      const Coweight mu = parse_mu(d, mu_text);
      if (engine == "both") {
        const Verdict o = oracle(d, mu, p);
        const Verdict c = certify(d, mu, p);
        const bool agree = o.status == c.status;
        print_json(out, {{"oracle", to_json(d, mu, p, o)},
                         {"certify", to_json(d, mu, p, c)},
                         {"agree", agree}});
        return agree ? 0 : 1;
      }
      const Verdict v = engine == "oracle" ? oracle(d, mu, p) : certify(d, mu, p);
      print_json(out, to_json(d, mu, p, v));
      return 0;
    }
    if (hasse_cmd->parsed()) {
      const HasseDiagram h = hasse(parse_datum(datum_text), height);
      if (dot) {
        out << export_dot(h);
      } else {
        print_json(out, to_json(h));
      }
      return 0;
    }
    if (covers_cmd->parsed()) {
      const RootDatum d = parse_datum(datum_text);
      json edges = json::array();
      for (const auto& e : covers_by_criteria(d, parse_mu(d, lambda_text))) edges.push_back(to_json(e));
      print_json(out, {{"datum", d.name()}, {"covers", edges}});
      return 0;
    }
    if (pi1_cmd->parsed()) {
      const RootDatum d = parse_datum(datum_text);
      json j = {{"datum", d.name()},
                {"pi1_invariants", d.pi1_invariants()},
                {"pi1_order", d.pi1_order()}};
      if (!support_text.empty()) j["levi"] = levi_json(levi_data(d, parse_nodes(support_text)));
      print_json(out, j);
      return 0;
    }
    if (levi_cmd->parsed()) {
      const RootDatum d = parse_datum(datum_text);
      const Coweight la = parse_mu(d, lambda_text);
      const Coweight mu = parse_mu(d, mu_text);
      const auto nodes = support(d, la, mu);
      json j = {{"datum", d.name()}, {"levi", levi_json(levi_data(d, nodes))}};
      if (auto red = levi_reduction(d, la, mu)) {
        json comps = json::array();
        for (const auto& c : red->components) comps.push_back(problem_json(c));
        j["reduction"] = {{"derived", problem_json(red->derived)}, {"components", comps}};
      } else {
        j["reduction"] = nullptr;
      }
      print_json(out, j);
      return 0;
    }
    if (ring_cmd->parsed()) {
      const SliceRingInfo info = gl2_slice_ring(m);
      require_characteristic(p);
      const int bound = degree >= 0 ? degree : 2 * m + 4;
      const Rank1Witness w = normality_witness_rank1(m, p);
      print_json(out, {{"ring",
                        {{"m", info.m},
                         {"relation", info.relation},
                         {"dimension", info.dimension},
                         {"singular_at_origin", info.singular_at_origin}}},
                       {"subring", to_json(pgl2_subring(m, p, bound))},
                       {"witness", to_json(w)},
                       {"status", std::string(to_string(w.status))}});
      return 0;
    }
    if (replay_cmd->parsed()) {
      json j;
      try {
        if (file == "-") {
          j = json::parse(std::cin);
        } else {
          std::ifstream in(file);
          if (!in) throw Error(ErrorCode::Parse, "cannot open " + file);
          j = json::parse(in);
        }
      } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
      }
      const Verdict v = verdict_from_json(j);
      const std::string why = replay(v);
      print_json(out, {{"status", std::string(to_string(v.status))},
                       {"replayed", why.empty()},
                       {"problem", why}});
      return why.empty() ? 0 : 1;
    }
    if (verify_cmd->parsed()) {
      bool ok = true;
      for (const auto& r : run_suite(suite)) {
        ok = ok && r.passed;
        out << std::left << std::setw(16) << r.name << (r.passed ? "PASS" : "FAIL") << "  "
            << r.summary << " [" << std::fixed << std::setprecision(1) << r.seconds << "s]\n";
        for (const auto& f : r.failures) out << "    " << f << "\n";
        if (r.failure_count > static_cast<long>(r.failures.size()))
          out << "    ... " << r.failure_count - static_cast<long>(r.failures.size()) << " more\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace affgr
