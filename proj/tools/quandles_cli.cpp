// Command-line front end: validate quandle tables, inspect inner
// automorphism groups, compute coset presentations and realizable-kernel
// closures, decide factorization of surjections, and enumerate small
// connected quandles.
//
// Exit codes are a stable contract:
//   0 success, 1 parse error, 2 axiom violation, 3 disconnected input,
//   4 non-normal subgroup, 5 no factorization, 6 precondition violation,
//   64 usage error, 70 internal consistency failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quandles/augment.hpp"
#include "quandles/catalog.hpp"
#include "quandles/coset.hpp"
#include "quandles/error.hpp"
#include "quandles/factorize.hpp"
#include "quandles/io.hpp"
#include "quandles/quotient.hpp"

namespace {

using nlohmann::json;
using namespace quandles;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitAxiom = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitNonNormal = 4;
constexpr int kExitNoFactorization = 5;
constexpr int kExitPrecondition = 6;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct ExitWith {
  int code;
  std::string message;
};

std::string axiom_name(QuandleAxiom axiom) {
  switch (axiom) {
    case QuandleAxiom::Idempotence:
      return "i";
    case QuandleAxiom::RightInvertibility:
      return "ii";
    case QuandleAxiom::RightDistributivity:
      return "iii";
  }
  return "?";
}

json orbits_to_json(const std::vector<std::vector<int>>& orbits) {
  json out = json::array();
  for (const auto& orbit : orbits) out.push_back(orbit);
  return out;
}

std::string orbits_to_text(const std::vector<std::vector<int>>& orbits) {
  std::string out;
  for (const auto& orbit : orbits) {
    out += "{";
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(orbit[i]);
    }
    out += "}";
  }
  return out;
}

std::vector<std::vector<int>> inn_orbits(const Quandle& q, const PermGroup& group) {
  std::vector<std::vector<int>> orbits_list;
  std::vector<char> seen(q.size(), 0);
  for (int x = 0; x < q.size(); ++x) {
    if (seen[x]) continue;
    auto orb = orbit(x, group);
    for (int p : orb) seen[p] = 1;
    orbits_list.push_back(std::move(orb));
  }
  return orbits_list;
}

int cmd_validate(const std::string& path, bool as_json) {
  QuandleDocument doc = [&] {
    try {
      return load_quandle_file(path);
    } catch (const AxiomError& e) {
      if (as_json) {
        json out{{"valid", false},
                 {"axiom", axiom_name(e.violation().axiom)},
                 {"message", e.violation().describe()}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "invalid: " << e.violation().describe() << "\n";
      }
      throw ExitWith{kExitAxiom, ""};
    }
  }();
  if (as_json) {
    json out{{"valid", true},
             {"size", doc.quandle.size()},
             {"axioms", {{"i", "ok"}, {"ii", "ok"}, {"iii", "ok"}}}};
    if (doc.name) out["name"] = *doc.name;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "valid quandle of size " << doc.quandle.size();
    if (doc.name) std::cout << " (" << *doc.name << ")";
    std::cout << "\naxiom i (idempotence): ok\naxiom ii (right-invertibility): ok\n"
              << "axiom iii (right-distributivity): ok\n";
  }
  return kExitOk;
}

int cmd_inn(const std::string& path, bool as_json) {
  QuandleDocument doc = load_quandle_file(path);
  PermGroup group = inn(doc.quandle);
  auto orbits_list = inn_orbits(doc.quandle, group);
  bool connected = orbits_list.size() == 1;

  if (as_json) {
    json gens = json::array();
    for (int x = 0; x < doc.quandle.size(); ++x)
      gens.push_back(group.generators()[static_cast<std::size_t>(x)].cycle_string());
    json out{{"order", group.order()},
             {"generators", gens},
             {"orbits", orbits_to_json(orbits_list)},
             {"connected", connected}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "inner automorphism group order: " << group.order() << "\n";
    for (int x = 0; x < doc.quandle.size(); ++x)
      std::cout << "  S" << x << " = " << group.generators()[static_cast<std::size_t>(x)].cycle_string()
                << "\n";
    std::cout << "orbits: " << orbits_to_text(orbits_list) << "\n";
    std::cout << "connected: " << (connected ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_present(const std::string& path, int base, bool as_json) {
  QuandleDocument doc = load_quandle_file(path);
  if (base < 0 || base >= doc.quandle.size())
    throw ExitWith{kExitUsage, "base point out of range"};
  if (!is_connected(doc.quandle)) {
    auto orbits_list = inn_orbits(doc.quandle, inn(doc.quandle));
    if (as_json) {
      json out{{"connected", false}, {"orbits", orbits_to_json(orbits_list)}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "not connected; orbits: " << orbits_to_text(orbits_list) << "\n";
    }
    return kExitDisconnected;
  }

  Presented presented = to_presentation(doc.quandle, base);
  const CosetPresentation& p = presented.presentation;
  Quandle on_cosets = from_presentation(p).quandle;
  if (as_json) {
    json stab = json::array();
    for (const auto& h : p.stabilizer.elements()) stab.push_back(h.cycle_string());
    json reps = json::array();
    for (const auto& coset : p.cosets) reps.push_back(coset.representative.cycle_string());
    json out{{"group_order", p.group.order()},
             {"stabilizer", stab},
             {"eta", p.eta.cycle_string()},
             {"cosets", reps},
             {"coset_table", on_cosets.table()},
             {"identification", presented.identification},
             {"base", base},
             {"operation_formula", "checked"}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "G = Inn(Q), order " << p.group.order() << "\n";
    std::cout << "H (stabilizer of " << base << "), order " << p.stabilizer.order() << ":";
    for (const auto& h : p.stabilizer.elements()) std::cout << " " << h.cycle_string();
    std::cout << "\neta = " << p.eta.cycle_string() << "\n";
    std::cout << "cosets (" << p.cosets.size() << "):\n";
    for (std::size_t i = 0; i < p.cosets.size(); ++i)
      std::cout << "  H*" << p.cosets[i].representative.cycle_string() << " <-> element "
                << presented.identification[i] << "\n";
    std::cout << "coset table (row i, column j holds i |> j):\n";
    for (int x = 0; x < on_cosets.size(); ++x) {
      std::cout << " ";
      for (int y = 0; y < on_cosets.size(); ++y) std::cout << " " << on_cosets.op(x, y);
      std::cout << "\n";
    }
    std::cout << "operation formula Hg |> Hc = H g c^-1 eta c: checked\n";
  }
  return kExitOk;
}

int cmd_closure(const std::string& path, const std::vector<std::string>& generator_text,
                bool as_json) {
  QuandleDocument doc = load_quandle_file(path);
  const Quandle& q = doc.quandle;
  PermGroup group = inn(q);

  std::vector<Permutation> gens;
  for (const auto& text : generator_text) gens.push_back(parse_permutation(text, q.size()));
  PermGroup subgroup = PermGroup::generate(q.size(), gens);

  for (const auto& e : subgroup.elements())
    if (!group.contains(e))
      throw ExitWith{kExitNonNormal,
                     "subgroup does not lie in Inn(Q): " + e.cycle_string() + " is not inner"};
  if (!is_normal(subgroup, group)) {
    for (const auto& g : group.elements())
      for (const auto& h : subgroup.elements()) {
        Permutation conjugate = g.inverse() * h * g;
        if (!subgroup.contains(conjugate))
          throw ExitWith{kExitNonNormal, "subgroup is not normal in Inn(Q): " +
                                             g.cycle_string() + "^-1 " + h.cycle_string() + " " +
                                             g.cycle_string() + " = " + conjugate.cycle_string() +
                                             " escapes"};
      }
  }

  // Both formulas, computed separately here as well as cross-checked inside
  // realizable_closure.
  OrbitQuotient oq = orbit_quotient(q, subgroup);
  PermGroup via_kernel = induced_inn_hom(oq.projection).kernel;
  PermGroup via_stabilizers = group;
  for (const auto& block : oq.blocks)
    via_stabilizers = intersect(via_stabilizers, setwise_stabilizer(block, group));
  PermGroup closure = realizable_closure(q, subgroup);
  bool agree = via_kernel == via_stabilizers && closure == via_kernel;
  bool realizable = closure == subgroup;
  if (as_json) {
    json members = json::array();
    for (const auto& e : closure.elements()) members.push_back(e.cycle_string());
    json out{{"subgroup_order", subgroup.order()},
             {"closure_order_kernel_formula", via_kernel.order()},
             {"closure_order_stabilizer_formula", via_stabilizers.order()},
             {"closure", members},
             {"both_formulas_agree", agree},
             {"realizable", realizable}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "N: order " << subgroup.order() << "\n";
    std::cout << "closure (kernel formula): order " << via_kernel.order() << "\n";
    std::cout << "closure (stabilizer formula): order " << via_stabilizers.order()
              << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
    std::cout << "closure elements:";
    for (const auto& e : closure.elements()) std::cout << " " << e.cycle_string();
    std::cout << "\nrealizable kernel: " << (realizable ? "yes" : "no") << "\n";
  }
  if (!agree) throw ExitWith{kExitInternal, "closure formulas disagree"};
  return kExitOk;
}

json certificate_to_json(const FactorizationCertificate& cert) {
  json out{{"exists", cert.exists},
           {"kernel_h_order", cert.kernel_h.order()},
           {"kernel_g_order", cert.kernel_g.order()},
           {"quotient_h_size", cert.quotient_h.size()},
           {"quotient_g_size", cert.quotient_g.size()}};
  if (cert.phi) out["phi"] = cert.phi->map();
  if (cert.failure_reason) {
    out["failure"] = to_string(*cert.failure_reason);
    out["failure_detail"] = cert.failure_detail;
  }
  if (cert.witness_element) out["witness"] = cert.witness_element->cycle_string();
  if (cert.omega_map) out["omega"] = cert.omega_map->map();
  if (cert.transported_kernel) out["transported_kernel_order"] = cert.transported_kernel->order();
  if (cert.kernel_closure) out["kernel_closure_order"] = cert.kernel_closure->order();
  if (cert.rigid_descent) out["rigid_descent"] = cert.rigid_descent->map();
  if (cert.stabilizer_via_h) out["stabilizer_via_h_order"] = cert.stabilizer_via_h->order();
  if (cert.stabilizer_via_g) out["stabilizer_via_g_order"] = cert.stabilizer_via_g->order();
  if (cert.rigid_phi) out["rigid_phi"] = cert.rigid_phi->map();
  return out;
}

void print_certificate(const FactorizationCertificate& cert) {
  std::cout << "pipeline:\n";
  std::cout << "  |ker Inn(h)| = " << cert.kernel_h.order() << ", |ker Inn(g)| = "
            << cert.kernel_g.order() << "\n";
  std::cout << "  |Q/N1| = " << cert.quotient_h.size() << ", |Q/N2| = " << cert.quotient_g.size()
            << "\n";
  if (cert.omega_map) std::cout << "  descent Q/N1 -> Q/N2: exists\n";
  if (cert.transported_kernel && cert.kernel_closure)
    std::cout << "  transported kernel order " << cert.transported_kernel->order()
              << ", closure order " << cert.kernel_closure->order() << "\n";
  if (cert.stabilizer_via_h && cert.stabilizer_via_g)
    std::cout << "  stabilizers: via h order " << cert.stabilizer_via_h->order()
              << ", via g order " << cert.stabilizer_via_g->order() << "\n";
}

int cmd_factor(const std::string& g_path, const std::string& h_path, bool oracle_only, bool trace,
               bool as_json) {
  HomDocument g_doc = load_hom_file(g_path);
  HomDocument h_doc = load_hom_file(h_path);

  if (!(g_doc.source.quandle == h_doc.source.quandle))
    throw ExitWith{kExitPrecondition, "the two homomorphisms do not share a source"};

  auto build = [&](const HomDocument& doc, const std::string& which) {
    HomCheck check = check_hom(doc.map, doc.source.quandle, doc.target.quandle);
    if (!check.hom)
      throw ExitWith{kExitPrecondition,
                     which + " is not a quandle homomorphism: law fails at (" +
                         std::to_string(check.violation->x) + ", " +
                         std::to_string(check.violation->y) + ")"};
    if (!check.hom->is_surjective())
      throw ExitWith{kExitPrecondition, which + " is not surjective"};
    return *check.hom;
  };
  QuandleHom g = build(g_doc, "g");
  QuandleHom h = build(h_doc, "h");

  if (!is_connected(g.source()))
    throw ExitWith{kExitPrecondition, "the shared source is not connected"};
  if (!is_connected(g.target()))
    throw ExitWith{kExitPrecondition, "the target of g is not connected"};
  if (!is_connected(h.target()))
    throw ExitWith{kExitPrecondition, "the target of h is not connected"};

  if (oracle_only) {
    OracleResult result = factor_oracle(g, h);
    if (result.hom) {
      if (as_json) {
        json out{{"exists", true}, {"phi", result.hom->map()}, {"decider", "oracle"}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "g factors through h; phi = " << json(result.hom->map()).dump() << "\n";
      }
      return kExitOk;
    }
    if (as_json) {
      json out{{"exists", false},
               {"decider", "oracle"},
               {"witness", {result.witness->first, result.witness->second}}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "no factorization: h merges (" << result.witness->first << ", "
                << result.witness->second << ") but g separates them\n";
    }
    return kExitNoFactorization;
  }

  AgreementReport report = check_agreement(g, h);
  if (!report.agree) throw ExitWith{kExitInternal, "decider divergence: " + report.divergence};

  FactorizationCertificate cert = factor_structural(g, h);
  if (as_json) {
    json out = trace ? certificate_to_json(cert)
                     : json{{"exists", cert.exists}};
    if (!trace && cert.phi) out["phi"] = cert.phi->map();
    if (!trace && cert.failure_reason) {
      out["failure"] = to_string(*cert.failure_reason);
      out["failure_detail"] = cert.failure_detail;
    }
    out["deciders_agree"] = true;
    std::cout << out.dump(2) << "\n";
  } else {
    if (cert.exists) {
      std::cout << "g factors through h; phi = " << json(cert.phi->map()).dump() << "\n";
    } else {
      std::cout << "no factorization: " << to_string(*cert.failure_reason) << "\n"
                << cert.failure_detail << "\n";
    }
    std::cout << "both deciders agree\n";
    if (trace) print_certificate(cert);
  }
  return cert.exists ? kExitOk : kExitNoFactorization;
}

int cmd_enumerate(int n, std::string method, std::size_t max_group_order,
                  const std::string& out_dir, bool as_json) {
  if (method.empty()) method = n <= 6 ? "both" : "triples";
  if (method != "triples" && method != "exhaustive" && method != "both")
    throw ExitWith{kExitUsage, "--method must be triples, exhaustive or both"};

  std::optional<std::vector<QuandleRecord>> by_triples, by_search;
  if (method == "triples" || method == "both")
    by_triples = enumerate_connected_by_triples(n, max_group_order);
  if (method == "exhaustive" || method == "both") by_search = enumerate_connected_exhaustive(n);

  if (by_triples && by_search) {
    bool agree = by_triples->size() == by_search->size();
    for (std::size_t i = 0; agree && i < by_triples->size(); ++i)
      agree = (*by_triples)[i].canonical_form == (*by_search)[i].canonical_form;
    if (!agree)
      throw ExitWith{kExitInternal,
                     "triple enumeration and exhaustive search disagree at size " +
                         std::to_string(n)};
  }

  const std::vector<QuandleRecord>& records = by_search ? *by_search : *by_triples;
  std::vector<std::string> files;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < records.size(); ++i) {
      QuandleDocument doc{"Q(" + std::to_string(n) + "," + std::to_string(i + 1) + ")",
                          std::nullopt, records[i].quandle};
      std::string file =
          (std::filesystem::path(out_dir) /
           ("q" + std::to_string(n) + "_" + std::to_string(i + 1) + ".json")).string();
      std::ofstream out(file, std::ios::binary);
      out << serialize_quandle_document(doc);
      files.push_back(std::move(file));
    }
  }

  if (as_json) {
    json out{{"size", n}, {"count", records.size()}, {"method", method}};
    if (by_triples && by_search) out["methods_agree"] = true;
    if (!files.empty()) out["files"] = files;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "connected quandles of size " << n << ": " << records.size() << " (method "
              << method << ")\n";
    if (by_triples && by_search) std::cout << "triple and exhaustive enumerations agree\n";
    for (const auto& file : files) std::cout << "wrote " << file << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("QUANDLES_ELEMENT_CAP")) {
    try {
      set_default_element_cap(std::stoull(cap));
    } catch (const std::exception&) {
      std::cerr << "ignoring invalid QUANDLES_ELEMENT_CAP\n";
    }
  }

  CLI::App app{"finite quandle toolkit: validation, inner automorphism groups, coset "
               "presentations, realizable-kernel closures, factorization of surjections, "
               "catalog enumeration"};
  app.require_subcommand(1);

  std::string path, g_path, h_path, out_dir;
  std::vector<std::string> subgroup_gens;
  int base = 0, size = 1;
  bool as_json = false, oracle_only = false, trace = false;
  std::string method;
  std::size_t max_group_order = 48;

  auto* validate = app.add_subcommand("validate", "check a quandle file against the axioms");
  validate->add_option("file", path)->required();
  validate->add_flag("--json", as_json);

  auto* inn_cmd = app.add_subcommand("inn", "inner automorphism group, orbits, connectivity");
  inn_cmd->add_option("file", path)->required();
  inn_cmd->add_flag("--json", as_json);

  auto* present = app.add_subcommand("present", "stabilizer-coset presentation of a connected quandle");
  present->add_option("file", path)->required();
  present->add_option("--base", base, "base point (default 0)");
  present->add_flag("--json", as_json);

  auto* closure = app.add_subcommand("closure", "realizable-kernel closure of a normal subgroup");
  closure->add_option("file", path)->required();
  closure->add_option("--subgroup", subgroup_gens, "generator in cycle notation (repeatable)")
      ->required();
  closure->add_flag("--json", as_json);

  auto* factor = app.add_subcommand("factor", "decide whether g factors through h");
  factor->add_option("gfile", g_path, "homomorphism file for g")->required();
  factor->add_option("hfile", h_path, "homomorphism file for h")->required();
  factor->add_flag("--oracle", oracle_only, "brute-force decider only");
  factor->add_flag("--trace", trace, "print the full certificate");
  factor->add_flag("--json", as_json);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate connected quandles of a given size");
  enumerate->add_option("n", size, "quandle size")->required();
  enumerate->add_option("--method", method, "triples | exhaustive | both");
  enumerate->add_option("--max-group-order", max_group_order, "group catalog cap (<= 48)");
  enumerate->add_option("--out", out_dir, "directory for emitted quandle files");
  enumerate->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, as_json);
    if (inn_cmd->parsed()) return cmd_inn(path, as_json);
    if (present->parsed()) return cmd_present(path, base, as_json);
    if (closure->parsed()) return cmd_closure(path, subgroup_gens, as_json);
    if (factor->parsed()) return cmd_factor(g_path, h_path, oracle_only, trace, as_json);
    if (enumerate->parsed()) return cmd_enumerate(size, method, max_group_order, out_dir, as_json);
  } catch (const ExitWith& e) {
    if (!e.message.empty()) std::cerr << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const AxiomError& e) {
    std::cerr << e.what() << "\n";
    return kExitAxiom;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ResourceLimitError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
