#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <sympow/sympow.hpp>

using nlohmann::json;
using namespace sympow;

namespace {

struct GlobalOpts {
  long long field_char = 32003;
  int kmax = 3;
  bool naive = false;
  long long cell_cap = 50'000'000;
  long long node_budget = 20'000'000;
  std::string format = "json";
  unsigned long long seed = 0; // reserved for randomized property checks
};

MonomialIdeal load_ideal(const std::string& spec, int n_hint) {
  std::string text = spec;
  std::ifstream in(spec);
  if (in.good()) {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  std::size_t p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{')
    return ideal_from_json(json::parse(text));
  return parse_ideal(text, n_hint);
}

json mixed_json(const MixedMonomial& m) {
  return json{{"x", m.x}, {"y", m.y}};
}

json binomial_json(const ToricBinomial& b) {
  return json{{"lead", mixed_json(b.lead)}, {"trail", mixed_json(b.trail)}};
}

std::vector<std::vector<int>> parse_supports(const std::string& s) {
  // "1,2;3,4" -> {{0,1},{2,3}} (1-based on the wire, 0-based inside)
  std::vector<std::vector<int>> out;
  std::stringstream blocks(s);
  std::string block;
  while (std::getline(blocks, block, ';')) {
    std::vector<int> b;
    std::stringstream items(block);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) continue;
      b.push_back(std::stoi(item) - 1);
    }
    if (!b.empty()) out.push_back(std::move(b));
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic powers, regularity and Rees data of monomial ideals"};
  app.set_version_flag("--version", "sympow 0.1.0");
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--char", g.field_char, "field characteristic for homology (0 = exact rationals)");
  app.add_option("--kmax", g.kmax, "bound for 'for all k' statements");
  app.add_flag("--naive", g.naive, "force the defining Ass-intersection route for symbolic powers");
  app.add_option("--cell-cap", g.cell_cap, "cap on enumerated cells (boxes, covers)");
  app.add_option("--node-budget", g.node_budget, "cap on linear-quotients search nodes");
  app.add_option("--format", g.format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "seed for randomized property checks (sweeps are exhaustive)");

  std::string ideal_spec;
  int n_hint = -1;
  int k_arg = 1;
  auto add_ideal_opts = [&](CLI::App* cmd, bool with_k = false) {
    cmd->add_option("--ideal", ideal_spec, "ideal, inline text or a file (text or JSON)")
        ->required();
    cmd->add_option("--n", n_hint, "ambient variable count (default: inferred)");
    if (with_k) cmd->add_option("--k", k_arg, "power order")->required();
  };

  // construct
  auto* c_construct = app.add_subcommand("construct", "build a named family instance");
  std::string family;
  int fam_n = 0, fam_d = 0;
  std::string caps_str, indices_str, supports_str;
  c_construct->add_option("--family", family, "veronese|veronese-type|borel|transversal|matching")
      ->required()
      ->check(CLI::IsMember({"veronese", "veronese-type", "borel", "transversal", "matching"}));
  c_construct->add_option("--n", fam_n, "ambient variables")->required();
  c_construct->add_option("--d", fam_d, "degree (veronese families)");
  c_construct->add_option("--caps", caps_str, "comma-separated exponent caps");
  c_construct->add_option("--indices", indices_str, "weakly increasing borel indices, 1-based");
  c_construct->add_option("--supports", supports_str, "prime supports, e.g. \"1,2;3,4\"");

  auto* c_sympow = app.add_subcommand("symbolic-power", "I^{(k)}");
  add_ideal_opts(c_sympow, true);

  auto* c_compare = app.add_subcommand("compare-powers", "per-k symbolic vs ordinary verdicts");
  add_ideal_opts(c_compare);

  auto* c_ass = app.add_subcommand("ass", "associated primes");
  add_ideal_opts(c_ass);

  auto* c_dec = app.add_subcommand("decompose", "irredundant irreducible decomposition");
  add_ideal_opts(c_dec);

  auto* c_height = app.add_subcommand("height", "height of the ideal");
  add_ideal_opts(c_height);

  auto* c_betti = app.add_subcommand("betti", "multigraded Betti table");
  add_ideal_opts(c_betti);

  auto* c_reg = app.add_subcommand("regularity", "Castelnuovo-Mumford regularity");
  bool force_homology = false;
  add_ideal_opts(c_reg);
  c_reg->add_flag("--force-homology", force_homology, "disable the linear-quotients shortcut");

  auto* c_check = app.add_subcommand("check", "boolean structure checks");
  std::string property;
  add_ideal_opts(c_check);
  c_check
      ->add_option("--property", property,
                   "polymatroidal|matroidal|strong-exchange|vertex-splittable|"
                   "linear-quotients|cwl|cwp|koenig|packed")
      ->required();

  auto* c_rees = app.add_subcommand("rees-generators", "symbolic Rees algebra generators");
  add_ideal_opts(c_rees);

  auto* c_dk = app.add_subcommand("d-of-k", "knapsack degree bound d(I,k)");
  add_ideal_opts(c_dk, true);

  auto* c_cover = app.add_subcommand("cover-function", "linear cover function fit");
  add_ideal_opts(c_cover);

  auto* c_toric = app.add_subcommand("toric-groebner",
                                     "defining ideal of the symbolic Rees algebra");
  bool want_x_condition = false, report_degrees = false;
  add_ideal_opts(c_toric);
  c_toric->add_flag("--x-condition", want_x_condition, "report the x-condition verdict");
  c_toric->add_flag("--report-degrees", report_degrees,
                    "tabulate initial-ideal generator degrees");

  auto* c_pack = app.add_subcommand("packing-theorem-sweep",
                                    "matroidal packing equivalence sweep");
  int pack_n = 4;
  c_pack->add_option("--n", pack_n, "variable count (<= 5)")->required();

  auto* c_verify = app.add_subcommand("verify-conjectures", "regularity/cwl sweep");
  std::string verify_family;
  int verify_n = 3, verify_dmax = 4, verify_cap = 4;
  std::string verify_ideal;
  bool with_timing = false;
  c_verify->add_option("--family", verify_family, "matroidal|polymatroidal");
  c_verify->add_option("--n", verify_n, "variable count");
  c_verify->add_option("--dmax", verify_dmax, "degree cap (polymatroidal family)");
  c_verify->add_option("--cap", verify_cap, "exponent cap (polymatroidal family)");
  c_verify->add_option("--ideal", verify_ideal, "single ideal instead of a family");
  c_verify->add_flag("--timing", with_timing, "include per-instance seconds in the output");

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  LinearityOptions lopts;
  lopts.field_char = g.field_char;
  lopts.cell_cap = g.cell_cap;
  lopts.node_budget = g.node_budget;
  SymbolicOptions sopts{g.naive};

  try {
    if (*c_construct) {
      MonomialIdeal I;
      if (family == "veronese") {
        I = squarefree_veronese(fam_n, fam_d);
      } else if (family == "veronese-type") {
        std::vector<Exponent> caps;
        std::stringstream ss(caps_str);
        std::string item;
        while (std::getline(ss, item, ',')) caps.push_back(std::stoi(item));
        I = veronese_type({fam_n, fam_d, caps});
      } else if (family == "borel") {
        std::vector<int> idx;
        std::stringstream ss(indices_str);
        std::string item;
        while (std::getline(ss, item, ',')) idx.push_back(std::stoi(item) - 1);
        I = principal_borel(fam_n, idx);
      } else if (family == "transversal") {
        I = transversal(fam_n, parse_supports(supports_str));
      } else {
        I = matching_matroidal(fam_n, parse_supports(supports_str));
      }
      std::cout << to_json(I).dump() << "\n";
      return 0;
    }

    if (*c_sympow) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      SymbolicPowerReport r = symbolic_power_report(I, k_arg, sopts);
      json j;
      j["k"] = r.k;
      j["ideal"] = to_json(r.generators);
      j["degrees"] = r.degrees;
      j["alpha"] = r.alpha;
      j["omega"] = r.omega;
      j["equals_ordinary"] = r.equals_ordinary;
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (*c_compare) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      json arr = json::array();
      bool all = true;
      for (auto [k, eq] : powers_coincide(I, g.kmax, sopts)) {
        arr.push_back(json{{"k", k}, {"equal", eq}});
        all = all && eq;
      }
      std::cout << json{{"k_max", g.kmax}, {"per_k", arr}, {"all_equal", all}}.dump() << "\n";
      return 0;
    }

    if (*c_ass) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      json arr = json::array();
      for (const MonomialPrime& P : associated_primes(I)) {
        std::vector<int> s;
        for (int i : P.support) s.push_back(i + 1);
        arr.push_back(s);
      }
      std::cout << json{{"ass", arr}}.dump() << "\n";
      return 0;
    }

    if (*c_dec) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      json arr = json::array();
      for (const IrreducibleComponent& C : irreducible_decomposition(I)) {
        json comp = json::array();
        for (auto [i, e] : C.entries) comp.push_back(json{{"var", i + 1}, {"exp", e}});
        arr.push_back(comp);
      }
      std::cout << json{{"components", arr}}.dump() << "\n";
      return 0;
    }

    if (*c_height) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      std::cout << json{{"height", height(I)}}.dump() << "\n";
      return 0;
    }

    if (*c_betti) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      BettiTable T = betti_table(I, g.field_char, g.cell_cap);
      int max_i = 0, min_j = I.alpha(), max_j = 0;
      for (const auto& [ij, b] : T.coarse)
        if (b > 0) {
          max_i = std::max(max_i, ij.first);
          max_j = std::max(max_j, ij.second);
          min_j = std::min(min_j, ij.second);
        }
      json table = json::array();
      for (int i = 0; i <= max_i; ++i) {
        json row = json::array();
        for (int j = min_j; j <= max_j; ++j) row.push_back(T.beta(i, j));
        table.push_back(row);
      }
      std::cout << json{{"char", T.field_char},
                        {"min_j", min_j},
                        {"table", table},
                        {"regularity", T.regularity}}
                       .dump()
                << "\n";
      return 0;
    }

    if (*c_reg) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      LinearityOptions o = lopts;
      o.allow_shortcut = !force_homology;
      RegularityResult r = regularity(I, o);
      std::cout << json{{"regularity", r.value},
                        {"via_linear_quotients", r.via_linear_quotients},
                        {"char", o.field_char}}
                       .dump()
                << "\n";
      return 0;
    }

    if (*c_check) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      json j;
      bool value = false;
      if (property == "polymatroidal") value = is_polymatroidal(I);
      else if (property == "matroidal") value = is_matroidal(I);
      else if (property == "strong-exchange") value = has_strong_exchange(I);
      else if (property == "vertex-splittable") value = is_vertex_splittable(I);
      else if (property == "linear-quotients") {
        auto witness = linear_quotients_order(I, {}, g.node_budget);
        value = witness.has_value();
        if (witness) {
          json arr = json::array();
          for (const Monomial& m : witness->order) arr.push_back(m.exponents());
          j["witness"] = arr;
        }
      } else if (property == "cwl") value = is_componentwise_linear(I, lopts);
      else if (property == "cwp") value = is_componentwise_polymatroidal(I);
      else if (property == "koenig") value = is_koenig(I);
      else if (property == "packed") value = is_packed(I);
      else throw domain_error("unknown property: " + property);
      j["property"] = property;
      j["value"] = value;
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (*c_rees) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      ReesGenerators R = rees_generators(I, g.kmax, g.cell_cap);
      json arr = json::array();
      for (const auto& [u, q] : R.generators)
        arr.push_back(json{{"a", u.exponents()}, {"k", q}});
      std::cout << json{{"k_max", g.kmax},
                        {"stable_at_kmax", R.stable},
                        {"generators", arr}}
                       .dump()
                << "\n";
      return 0;
    }

    if (*c_dk) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      std::cout << json{{"k", k_arg}, {"d", d_of_k(I, k_arg, g.cell_cap)}}.dump() << "\n";
      return 0;
    }

    if (*c_cover) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      auto fit = linear_cover_function(I, g.kmax, g.cell_cap);
      json j;
      j["k_max"] = g.kmax;
      j["linear"] = fit.has_value();
      if (fit) {
        j["c"] = fit->first;
        j["d"] = fit->second;
      }
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (*c_toric) {
      MonomialIdeal I = load_ideal(ideal_spec, n_hint);
      ToricCaps caps;
      XConditionReport rep = check_x_condition(I, g.kmax, caps, g.cell_cap);
      json j;
      json gens = json::array();
      for (const auto& [u, q] : rep.generators)
        gens.push_back(json{{"a", u.exponents()}, {"k", q}});
      j["generators"] = gens;
      if (rep.verdict == XConditionReport::Verdict::incomplete) {
        j["verdict"] = "incomplete";
        std::cout << j.dump() << "\n";
        return 2;
      }
      json gb = json::array();
      for (const ToricBinomial& b : rep.groebner) gb.push_back(binomial_json(b));
      j["groebner"] = gb;
      json init = json::array();
      for (const MixedMonomial& m : initial_ideal(rep.groebner)) init.push_back(mixed_json(m));
      j["initial_ideal"] = init;
      if (want_x_condition) {
        j["verdict"] = rep.verdict == XConditionReport::Verdict::holds ? "holds" : "fails";
        if (rep.witness) j["witness"] = mixed_json(*rep.witness);
      }
      if (report_degrees) {
        std::map<std::pair<long long, long long>, int> shapes; // (xdeg, ydeg) -> count
        for (const MixedMonomial& m : initial_ideal(rep.groebner)) {
          long long xd = 0, yd = 0;
          for (Exponent e : m.x) xd += e;
          for (Exponent e : m.y) yd += e;
          shapes[{xd, yd}] += 1;
        }
        json arr = json::array();
        for (auto [key, cnt] : shapes)
          arr.push_back(json{{"x_degree", key.first}, {"y_degree", key.second}, {"count", cnt}});
        j["degree_profile"] = arr;
      }
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (*c_pack) {
      std::vector<PackingRecord> recs = packing_sweep(pack_n, g.kmax);
      bool equivalence = true;
      if (g.format == "csv") {
        std::cout << "ideal,packed,disjoint_form,powers_coincide_k" << g.kmax << "\n";
        for (const PackingRecord& r : recs) {
          std::cout << '"' << to_string(r.ideal) << '"' << ',' << (r.packed ? 1 : 0) << ','
                    << (r.disjoint_form ? 1 : 0) << ',' << (r.powers_coincide_k3 ? 1 : 0)
                    << "\n";
          equivalence = equivalence && (r.packed == r.disjoint_form) &&
                        (r.packed == r.powers_coincide_k3);
        }
      } else {
        for (const PackingRecord& r : recs) {
          std::cout << json{{"ideal", to_json(r.ideal)},
                            {"packed", r.packed},
                            {"disjoint_form", r.disjoint_form},
                            {"powers_coincide", r.powers_coincide_k3}}
                           .dump()
                    << "\n";
          equivalence = equivalence && (r.packed == r.disjoint_form) &&
                        (r.packed == r.powers_coincide_k3);
        }
      }
      return equivalence ? 0 : 1;
    }

    if (*c_verify) {
      std::vector<SweepReport> reports;
      if (!verify_ideal.empty()) {
        MonomialIdeal I = load_ideal(verify_ideal, n_hint);
        reports.push_back(verify_instance("ideal[" + to_string(I) + "]", I, g.kmax, lopts, sopts));
      } else if (verify_family == "matroidal") {
        reports = sweep_matroidal(verify_n, g.kmax, lopts);
      } else if (verify_family == "polymatroidal") {
        std::cerr << "# caps: degree <= " << verify_dmax << ", exponent <= " << verify_cap
                  << "\n";
        reports = sweep_polymatroidal(verify_n, verify_dmax, verify_cap, g.kmax, lopts);
      } else {
        throw domain_error("verify-conjectures needs --family or --ideal");
      }
      for (const SweepReport& r : reports)
        std::cout << to_json(r, g.kmax, with_timing).dump() << "\n";
      return sweep_exit_code(reports);
    }
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
