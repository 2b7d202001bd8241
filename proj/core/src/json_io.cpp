#include "bgmu/json_io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace bgmu {

using json = nlohmann::ordered_json;

std::string rat_string(const Rat& r) {
  // cpp_rational is kept in lowest terms with a positive denominator.
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

std::string int_string(const Int& v) { return v.str(); }

IntVec parse_int_vector(const std::string& text) {
  IntVec result;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    // Trim surrounding whitespace.
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw std::invalid_argument("empty entry in integer vector: " + text);
    token = token.substr(first, last - first + 1);
    try {
      result.emplace_back(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + token + "' in vector");
    }
  }
  if (result.empty())
    throw std::invalid_argument("empty integer vector: " + text);
  return result;
}

namespace {

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational '" + text + "'");
  }
}

json int_vec_json(const IntVec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(int_string(x));
  return arr;
}

json rat_vec_json(const QVec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rat_string(x));
  return arr;
}

json levi_json(const LeviSubset& levi) {
  json arr = json::array();
  for (int i : levi.indices) arr.push_back(i);
  return arr;
}

IntVec int_vec_from_json(const json& arr, std::size_t want,
                         const std::string& what) {
  if (!arr.is_array() || (want != 0 && arr.size() != want))
    throw std::invalid_argument("bad " + what + ": expected array of length " +
                                std::to_string(want));
  IntVec v;
  for (const auto& x : arr) {
    if (x.is_number_integer())
      v.emplace_back(x.get<long long>());
    else if (x.is_string())
      v.emplace_back(x.get<std::string>());
    else
      throw std::invalid_argument("bad entry in " + what);
  }
  return v;
}

json class_json(const RootDatum& rd, const SigmaConjClass& c) {
  json obj;
  obj["levi"] = levi_json(c.levi);
  obj["kappa"] = int_vec_json(c.kappa.coords);
  obj["kappa_g"] = int_vec_json(kappa_G(rd, c).coords);
  obj["newton"] = rat_vec_json(newton_point(rd, c));
  return obj;
}

std::string node_label(const RootDatum& rd, const SigmaConjClass& c) {
  const QVec nu = newton_point(rd, c);
  std::string label = "nu=(";
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (i) label += ",";
    label += rat_string(nu[i]);
  }
  label += ")\\nkappa=(";
  for (std::size_t i = 0; i < c.kappa.coords.size(); ++i) {
    if (i) label += ",";
    label += int_string(c.kappa.coords[i]);
  }
  label += ")";
  return label;
}

}  // namespace

RootDatum root_datum_from_json_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("expected a JSON object");
  const std::string label = doc.value("label", std::string("group"));
  if (!doc.contains("rank") || !doc["rank"].is_number_integer())
    throw std::invalid_argument("missing integer field 'rank'");
  const int rank = doc["rank"].get<int>();
  if (rank <= 0) throw std::invalid_argument("rank must be positive");

  auto matrix_rows = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_array())
      throw std::invalid_argument(std::string("missing array field '") + key +
                                  "'");
    std::vector<IntVec> rows;
    for (const auto& row : doc[key])
      rows.push_back(int_vec_from_json(row, static_cast<std::size_t>(rank),
                                       std::string(key) + " row"));
    return rows;
  };

  const std::vector<IntVec> roots = matrix_rows("simple_roots");
  const std::vector<IntVec> coroots = matrix_rows("simple_coroots");
  if (roots.size() != coroots.size())
    throw std::invalid_argument(
        "simple_roots and simple_coroots must have the same length");

  std::vector<QVec> lifts;
  if (doc.contains("weight_lifts")) {
    if (!doc["weight_lifts"].is_array())
      throw std::invalid_argument("weight_lifts must be an array");
    for (const auto& row : doc["weight_lifts"]) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("bad weight_lifts row");
      QVec lift;
      for (const auto& x : row) {
        if (x.is_number_integer())
          lift.emplace_back(Int(x.get<long long>()));
        else if (x.is_string())
          lift.push_back(parse_rat(x.get<std::string>()));
        else
          throw std::invalid_argument("bad entry in weight_lifts");
      }
      lifts.push_back(std::move(lift));
    }
    if (lifts.size() != roots.size())
      throw std::invalid_argument(
          "weight_lifts must have one row per simple root");
  }

  std::vector<IntMatrix> galois;
  if (doc.contains("galois_generators")) {
    if (!doc["galois_generators"].is_array())
      throw std::invalid_argument("galois_generators must be an array");
    for (const auto& mat : doc["galois_generators"]) {
      if (!mat.is_array() || mat.size() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("bad galois generator: expected " +
                                    std::to_string(rank) + " rows");
      IntMatrix m(rank, rank);
      for (int i = 0; i < rank; ++i) {
        const IntVec row = int_vec_from_json(
            mat[static_cast<std::size_t>(i)], static_cast<std::size_t>(rank),
            "galois generator row");
        for (int j = 0; j < rank; ++j) m.at(i, j) = row[static_cast<std::size_t>(j)];
      }
      galois.push_back(std::move(m));
    }
  }

  return RootDatum(label, rank, roots, coroots, lifts, galois);
}

std::string root_datum_to_json_string(const RootDatum& rd) {
  json doc;
  doc["label"] = rd.label();
  doc["rank"] = rd.rank();
  json roots = json::array();
  json coroots = json::array();
  json lifts = json::array();
  for (std::size_t i = 0; i < rd.num_simple(); ++i) {
    roots.push_back(int_vec_json(rd.simple_roots()[i]));
    coroots.push_back(int_vec_json(rd.simple_coroots()[i]));
    lifts.push_back(rat_vec_json(rd.weight_lifts()[i]));
  }
  doc["simple_roots"] = roots;
  doc["simple_coroots"] = coroots;
  doc["weight_lifts"] = lifts;
  json gens = json::array();
  for (const auto& g : rd.galois_generators()) {
    json mat = json::array();
    for (int i = 0; i < rd.rank(); ++i) {
      json row = json::array();
      for (int j = 0; j < rd.rank(); ++j) row.push_back(int_string(g.at(i, j)));
      mat.push_back(row);
    }
    gens.push_back(mat);
  }
  doc["galois_generators"] = gens;
  return doc.dump(2) + "\n";
}

std::string strata_json(const RootDatum& rd, const KottwitzSet& set,
                        bool strict_integral) {
  const std::vector<StratumReport> reports =
      stratum_reports(rd, set, strict_integral);
  json doc;
  doc["group"] = rd.label();
  doc["mu"] = int_vec_json(set.mu);
  doc["b_kappa"] = int_vec_json(set.b_kappa.coords);
  doc["b_newton"] = rat_vec_json(set.nu_b);
  doc["delta"] = rat_vec_json(set.delta);
  doc["fully_hn_decomposable"] = is_fully_hn_decomposable(rd, set);
  doc["max_hn_indecomposable"] = class_json(rd, max_hn_indecomposable(rd, set));
  json strata = json::array();
  for (const auto& r : reports) {
    json s = class_json(rd, r.cls);
    s["basic"] = r.basic;
    s["hn_decomposable"] = r.hn_decomposable;
    s["hn_witness_levi"] =
        r.hn_witness ? levi_json(*r.hn_witness) : json(nullptr);
    s["classical_point"] = r.classical_point;
    s["classical_witness"] =
        r.classical_witness ? int_vec_json(*r.classical_witness)
                            : json(nullptr);
    if (r.classical_point_strict)
      s["classical_point_strict"] = *r.classical_point_strict;
    s["wa_meets"] = r.wa_meets ? json(*r.wa_meets) : json(nullptr);
    json upset = json::array();
    for (std::size_t j : r.closure_upset) upset.push_back(j);
    s["closure_upset"] = upset;
    strata.push_back(std::move(s));
  }
  doc["strata"] = strata;
  return doc.dump(2) + "\n";
}

std::string cells_json(const RootDatum& rd, const KottwitzSet& set) {
  const std::vector<CellReport> reports = cell_reports(rd, set);
  json doc;
  doc["group"] = rd.label();
  doc["mu"] = int_vec_json(set.mu);
  doc["b_kappa"] = int_vec_json(set.b_kappa.coords);
  json cells = json::array();
  for (const auto& r : reports) {
    json c;
    c["lambda"] = int_vec_json(r.lambda);
    c["wa_excluded"] = r.wa_excluded;
    c["classical_points"] = r.classical_points;
    c["generic_levi"] = levi_json(r.generic_class.levi);
    c["generic_kappa"] = int_vec_json(r.generic_class.kappa.coords);
    c["generic_newton"] = rat_vec_json(newton_point(rd, r.generic_class));
    c["lambda_minimal"] = r.lambda_minimal;
    c["dim_upper"] = rat_string(r.dim_upper);
    c["dim_exact"] = r.dim_exact;
    cells.push_back(std::move(c));
  }
  doc["cells"] = cells;
  return doc.dump(2) + "\n";
}

std::string poset_dot(const RootDatum& rd, const KottwitzSet& set,
                      bool bun_order) {
  const ClosurePoset poset = closure_poset(rd, set);
  std::ostringstream out;
  out << "digraph closure_poset {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    out << "  n" << i << " [label=\"" << node_label(rd, set.elements[i]);
    if (is_basic(rd, set.elements[i])) out << "\\n(basic)";
    out << "\"];\n";
  }
  for (const auto& [lower, upper] : poset.hasse_edges) {
    // Edges point from a stratum to the strata in its closure; the
    // alternative orientation follows the opposite (specialization) order.
    if (bun_order)
      out << "  n" << upper << " -> n" << lower << ";\n";
    else
      out << "  n" << lower << " -> n" << upper << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string b_of_lambda_json(const RootDatum& rd, const IntVec& lambda) {
  const SigmaConjClass c = b_of_lambda(rd, lambda);
  json doc;
  doc["group"] = rd.label();
  doc["lambda"] = int_vec_json(lambda);
  doc["class"] = class_json(rd, c);
  return doc.dump(2) + "\n";
}

std::string minimal_lambda_json(const RootDatum& rd, const SigmaConjClass& c) {
  const IntVec lambda = minimal_lambda(rd, c);
  json doc;
  doc["group"] = rd.label();
  doc["class"] = class_json(rd, c);
  doc["lambda"] = int_vec_json(lambda);
  QVec lam_q;
  for (const auto& x : lambda) lam_q.emplace_back(x);
  doc["rho_pairing"] = rat_string(rd.pairing(rd.rho(), lam_q));
  return doc.dump(2) + "\n";
}

}  // namespace bgmu
