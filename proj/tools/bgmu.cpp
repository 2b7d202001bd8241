// Command-line interface for the Kottwitz-set combinatorics library.
//
// Exit codes: 0 success, 2 invalid input, 3 internal invariant violation.

#include "bgmu/catalog.hpp"
#include "bgmu/json_io.hpp"
#include "bgmu/kottwitz.hpp"
#include "bgmu/strata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using bgmu::IntVec;
using bgmu::RootDatum;
using json = nlohmann::ordered_json;

struct GroupOptions {
  std::string family;
  int n = 0;
  std::string group_file;
};

void add_group_options(CLI::App* cmd, GroupOptions& opts) {
  auto* family = cmd->add_option("--family", opts.family,
                                 "Preset family: GL, SL, PGL, Sp, SO_odd, U");
  auto* n = cmd->add_option("--n", opts.n, "Preset parameter n");
  auto* file = cmd->add_option("--group", opts.group_file,
                               "Root datum JSON file (overrides --family)");
  family->needs(n);
  n->needs(family);
  file->excludes(family);
}

RootDatum resolve_group(const GroupOptions& opts) {
  if (!opts.group_file.empty()) {
    std::ifstream in(opts.group_file);
    if (!in)
      throw std::invalid_argument("cannot open group file: " + opts.group_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return bgmu::root_datum_from_json_string(buf.str());
  }
  if (opts.family.empty())
    throw std::invalid_argument("specify either --group or --family/--n");
  return bgmu::build_group({opts.family, opts.n});
}

bgmu::LeviSubset parse_levi(const RootDatum& rd, const std::string& text) {
  bgmu::LeviSubset levi;
  if (text == "full") return rd.full_levi();
  if (text.empty() || text == "empty") return levi;
  for (const auto& v : bgmu::parse_int_vector(text)) {
    if (v < 0 || v >= rd.num_simple())
      throw std::invalid_argument("Levi index out of range: " + v.str());
    levi.indices.push_back(static_cast<int>(v));
  }
  std::sort(levi.indices.begin(), levi.indices.end());
  levi.indices.erase(std::unique(levi.indices.begin(), levi.indices.end()),
                     levi.indices.end());
  return levi;
}

int run(int argc, char** argv) {
  CLI::App app{"Kottwitz sets, Newton strata and cell combinatorics"};
  app.require_subcommand(1);

  GroupOptions group;
  std::string mu_text;
  std::string b_kappa_text;
  std::string lambda_text;
  std::string levi_text = "full";
  std::string kappa_text;
  std::string format = "json";
  bool strict_integral = false;
  bool bun_order = false;

  auto add_mu_b = [&](CLI::App* cmd) {
    cmd->add_option("--mu", mu_text, "Dominant cocharacter, e.g. 4,0")
        ->required();
    cmd->add_option("--b-kappa", b_kappa_text,
                    "Integral lift of kappa(b), e.g. 2,2")
        ->required();
  };

  auto* enumerate = app.add_subcommand(
      "enumerate", "Enumerate B(G, mu, b) with per-stratum reports");
  add_group_options(enumerate, group);
  add_mu_b(enumerate);
  enumerate->add_flag("--strict-integral", strict_integral,
                      "Also report the integral classical-point criterion");

  auto* poset = app.add_subcommand(
      "poset", "Closure poset of the Newton strata of B(G, mu, b)");
  add_group_options(poset, group);
  add_mu_b(poset);
  poset->add_option("--format", format, "Output format: json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  poset->add_flag("--bun-order", bun_order,
                  "Orient DOT edges by the opposite (specialization) order");

  auto* cells = app.add_subcommand(
      "cells", "Cell decomposition report for the complement of the weakly "
               "admissible locus");
  add_group_options(cells, group);
  add_mu_b(cells);

  auto* bol = app.add_subcommand(
      "b-of-lambda", "Generic sigma-conjugacy class of the cell of lambda");
  add_group_options(bol, group);
  bol->add_option("--lambda", lambda_text, "Cocharacter, e.g. 1,0,0,1,0,1,0")
      ->required();

  auto* minl = app.add_subcommand(
      "minimal-lambda",
      "Cocharacter of minimal <rho, .> whose cell has the given generic class");
  add_group_options(minl, group);
  minl->add_option("--levi", levi_text,
                   "Centralizer Levi of the class as simple-root indices, "
                   "'full' or 'empty' (default: full)");
  minl->add_option("--kappa", kappa_text,
                   "Integral lift of kappa in pi1(Levi)_Gamma, length = rank")
      ->required();

  auto* hn = app.add_subcommand(
      "hn-report", "Hodge-Newton decomposability report for B(G, mu, b)");
  add_group_options(hn, group);
  add_mu_b(hn);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  const RootDatum rd = resolve_group(group);

  if (enumerate->parsed()) {
    const auto set = bgmu::enumerate_kottwitz(
        rd, bgmu::parse_int_vector(mu_text),
        bgmu::parse_int_vector(b_kappa_text));
    std::cout << bgmu::strata_json(rd, set, strict_integral);
    return 0;
  }
  if (poset->parsed()) {
    const auto set = bgmu::enumerate_kottwitz(
        rd, bgmu::parse_int_vector(mu_text),
        bgmu::parse_int_vector(b_kappa_text));
    if (format == "dot")
      std::cout << bgmu::poset_dot(rd, set, bun_order);
    else
      std::cout << bgmu::strata_json(rd, set, false);
    return 0;
  }
  if (cells->parsed()) {
    const auto set = bgmu::enumerate_kottwitz(
        rd, bgmu::parse_int_vector(mu_text),
        bgmu::parse_int_vector(b_kappa_text));
    std::cout << bgmu::cells_json(rd, set);
    return 0;
  }
  if (bol->parsed()) {
    std::cout << bgmu::b_of_lambda_json(rd, bgmu::parse_int_vector(lambda_text));
    return 0;
  }
  if (minl->parsed()) {
    const bgmu::LeviSubset levi = parse_levi(rd, levi_text);
    const IntVec lift = bgmu::parse_int_vector(kappa_text);
    if (static_cast<int>(lift.size()) != rd.rank())
      throw std::invalid_argument("--kappa must have length rank");
    const bgmu::SigmaConjClass c{levi, rd.sharp_levi(lift, levi)};
    std::cout << bgmu::minimal_lambda_json(rd, c);
    return 0;
  }
  if (hn->parsed()) {
    const auto set = bgmu::enumerate_kottwitz(
        rd, bgmu::parse_int_vector(mu_text),
        bgmu::parse_int_vector(b_kappa_text));
    json doc;
    doc["group"] = rd.label();
    doc["fully_hn_decomposable"] = bgmu::is_fully_hn_decomposable(rd, set);
    {
      const auto top = bgmu::max_hn_indecomposable(rd, set);
      json t;
      json levi = json::array();
      for (int i : top.levi.indices) levi.push_back(i);
      t["levi"] = levi;
      json nu = json::array();
      for (const auto& x : bgmu::newton_point(rd, top))
        nu.push_back(bgmu::rat_string(x));
      t["newton"] = nu;
      doc["max_hn_indecomposable"] = t;
    }
    json strata = json::array();
    for (const auto& c : set.elements) {
      json s;
      json nu = json::array();
      for (const auto& x : bgmu::newton_point(rd, c))
        nu.push_back(bgmu::rat_string(x));
      s["newton"] = nu;
      const auto witness = bgmu::hn_witness_levi(rd, set, c);
      s["hn_decomposable"] = witness.has_value();
      if (witness) {
        json levi = json::array();
        for (int i : witness->indices) levi.push_back(i);
        s["hn_witness_levi"] = levi;
        s["levi_membership_verified"] =
            bgmu::hn_levi_membership_check(rd, set, c, *witness);
      } else {
        s["hn_witness_levi"] = nullptr;
      }
      strata.push_back(std::move(s));
    }
    doc["strata"] = strata;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bgmu::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
