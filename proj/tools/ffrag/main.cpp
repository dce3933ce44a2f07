#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffrag/eliminate.hpp"
#include "ffrag/enumerate.hpp"
#include "ffrag/fragments.hpp"
#include "ffrag/generate.hpp"
#include "ffrag/godel.hpp"
#include "ffrag/interpret.hpp"
#include "ffrag/model.hpp"
#include "ffrag/oracle.hpp"
#include "ffrag/parse.hpp"
#include "ffrag/print.hpp"
#include "ffrag/series.hpp"
#include "ffrag/strata.hpp"
#include "ffrag/toy.hpp"

using json = nlohmann::ordered_json;
using namespace ffrag;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

struct GlobalOptions {
  bool json_out = false;
  uint64_t seed = 1;
  uint64_t budget = 10000;
  uint64_t prime_bound = 10000;
  std::string battery;  // e.g. "trivval:5,trivval:7"
};

json base_record() {
  json j;
  j["trace_v"] = 1;
  return j;
}

void emit(const GlobalOptions& g, const json& j, const std::string& plain) {
  if (g.json_out)
    std::cout << j.dump() << "\n";
  else
    std::cout << plain << "\n";
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Yes: return kExitYes;
    case Verdict::No: return kExitNo;
    case Verdict::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

const Signature& signature_by_name(const std::string& name) {
  if (name == "ring") return ring_signature();
  if (name == "val") return valued_signature();
  if (name == "val-varpi") return valued_varpi_signature();
  if (name == "onesorted") return onesorted_signature();
  throw Error(ErrorKind::Usage, "unknown signature '" + name + "'");
}

// model specs: fp:<p>, zmod:<n>, gf4, f2eps, trivval:<p>, json:<path>@<sig>
StructurePtr model_by_spec(const std::string& spec) {
  auto num_after = [&](const std::string& prefix) -> uint64_t {
    return std::stoull(spec.substr(prefix.size()));
  };
  if (spec.rfind("fp:", 0) == 0) return prime_field(num_after("fp:"));
  if (spec.rfind("zmod:", 0) == 0) return zmod(num_after("zmod:"));
  if (spec == "gf4") return gf4();
  if (spec == "f2eps") return f2_dual_numbers();
  if (spec.rfind("trivval:", 0) == 0) return trivially_valued(prime_field(num_after("trivval:")));
  if (spec.rfind("json:", 0) == 0) {
    std::string rest = spec.substr(5);
    std::string path = rest, signame = "ring";
    if (auto at = rest.find('@'); at != std::string::npos) {
      path = rest.substr(0, at);
      signame = rest.substr(at + 1);
    }
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Usage, "cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return TableStructure::from_json_text(ss.str(), signature_by_name(signame), path);
  }
  throw Error(ErrorKind::Usage, "unknown model spec '" + spec + "'");
}

std::vector<StructurePtr> battery_by_spec(const std::string& spec) {
  std::vector<StructurePtr> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(model_by_spec(item));
  return out;
}

struct OracleBinding {
  std::string impl;
  std::shared_ptr<const ToyInstance> toy;  // set for toy:<k>
};

OracleBinding resolve_oracle(const std::string& impl,
                             std::map<int, std::shared_ptr<const ToyInstance>>& toy_cache) {
  OracleBinding b;
  b.impl = impl;
  if (impl.rfind("toy:", 0) == 0) {
    int k = std::stoi(impl.substr(4));
    auto it = toy_cache.find(k);
    if (it == toy_cache.end()) it = toy_cache.emplace(k, std::make_shared<ToyInstance>(k)).first;
    b.toy = it->second;
  }
  return b;
}

json answer_record(const OracleAnswer& a) {
  json j = base_record();
  j["verdict"] = to_string(a.verdict);
  j["soundness"] = to_string(a.soundness);
  j["evidence"] = a.evidence;
  return j;
}

// ---- subcommand handlers ----

int run_parse(const GlobalOptions& g, const std::string& signame, const std::string& text) {
  const Signature& sig = signature_by_name(signame);
  Sentence s = parse_sentence(text, sig);
  json j = base_record();
  j["canonical"] = print_canonical(s);
  j["godel_code"] = godel_code(s).str();
  j["well_sorted"] = check_well_sorted(s, sig).empty();
  emit(g, j, print_canonical(s));
  return kExitYes;
}

int run_classify(const GlobalOptions& g, const std::string& signame, const std::string& fragment,
                 const std::string& text) {
  const Signature& sig = signature_by_name(signame);
  Sentence s = parse_sentence(text, sig);
  Membership m = classify(s);
  json j = base_record();
  j["qf"] = m.qf;
  j["exists"] = m.exists;
  j["forall"] = m.forall;
  j["bar_exists"] = m.bar_exists;
  if (m.exists) j["e"] = m.exists_budget;
  if (m.forall) j["e_forall"] = m.forall_budget;
  std::string plain;
  if (m.qf) plain += "qf ";
  if (m.exists) plain += "exists(e=" + std::to_string(m.exists_budget) + ") ";
  if (m.forall) plain += "forall(e=" + std::to_string(m.forall_budget) + ") ";
  if (m.bar_exists) plain += "bar-exists ";
  plain += "all";
  if (!fragment.empty()) {
    auto f = fragment_from_cli_name(fragment, sig);
    if (!f) throw Error(ErrorKind::Usage, "unknown fragment '" + fragment + "'");
    bool member = m.in(*f);
    j["fragment"] = fragment;
    j["member"] = member;
    emit(g, j, plain + (member ? " | member of " : " | not in ") + fragment);
    return member ? kExitYes : kExitNo;
  }
  emit(g, j, plain);
  return kExitYes;
}

int run_translate(const GlobalOptions& g, const std::string& map_name, const std::string& text) {
  Sentence image;
  if (map_name == "residue") {
    image = residue_interpret(parse_sentence(text, ring_signature()));
  } else if (map_name == "onesorted") {
    image = onesorted_to_valued(parse_sentence(text, onesorted_signature()));
  } else if (map_name == "identity") {
    image = parse_sentence(text, ring_signature());
  } else {
    throw Error(ErrorKind::Usage, "unknown map '" + map_name + "'");
  }
  json j = base_record();
  j["map"] = map_name;
  j["image"] = print_canonical(image);
  emit(g, j, print_canonical(image));
  return kExitYes;
}

int run_eval(const GlobalOptions& g, const std::string& model_spec, const std::string& signame,
             const std::string& text) {
  StructurePtr m = model_by_spec(model_spec);
  Sentence s = parse_sentence(text, signature_by_name(signame));
  bool v = evaluate(*m, s);
  json j = base_record();
  j["model"] = m->name();
  j["verdict"] = v ? "true" : "false";
  emit(g, j, v ? "true" : "false");
  return v ? kExitYes : kExitNo;
}

int run_decide(const GlobalOptions& g, const std::string& oracle, const std::string& stratum,
               int index, const std::string& text) {
  std::map<int, std::shared_ptr<const ToyInstance>> toys;
  OracleBinding b = resolve_oracle(oracle, toys);
  OracleAnswer a;
  if (b.toy) {
    Sentence s = parse_sentence(text, b.toy->sig());
    if (stratum == "sigma") a = toy_oracles(b.toy).sigma(s);
    else if (stratum == "zero") a = query_stratum(*b.toy, StratQuery::zero(), s);
    else if (stratum == "pos") a = query_stratum(*b.toy, StratQuery::greater_than(0), s);
    else if (stratum == "inf") a = query_stratum(*b.toy, StratQuery::eventually(), s);
    else if (stratum == "n") a = query_stratum(*b.toy, StratQuery::at(index), s);
    else if (stratum == "uniform") a = query_stratum(*b.toy, StratQuery::uniform(index), s);
    else throw Error(ErrorKind::Usage, "unknown stratum '" + stratum + "'");
  } else if (oracle.rfind("fp:", 0) == 0) {
    a = decide_finite_field(std::stoull(oracle.substr(3)),
                            parse_sentence(text, ring_signature()));
  } else if (oracle == "q-exists1") {
    a = decide_exists1_Q(parse_sentence(text, ring_signature()));
  } else if (oracle.rfind("bounded-primes", 0) == 0) {
    // "bounded-primes" alone takes the bound from the configuration
    uint64_t bound = oracle.size() > 15 ? std::stoull(oracle.substr(15)) : g.prime_bound;
    a = bounded_prime_check(parse_sentence(text, ring_signature()), bound);
  } else if (oracle.rfind("laurent:", 0) == 0) {
    // laurent:<p>:<D>:<N> over the ring language with varpi
    std::stringstream ss(oracle.substr(8));
    std::string p, d, n;
    std::getline(ss, p, ':');
    std::getline(ss, d, ':');
    std::getline(ss, n, ':');
    WitnessSearchResult w = laurent_witness_search(
        parse_sentence(text, valued_varpi_signature()), std::stoul(p),
        d.empty() ? 2 : std::stoul(d), n.empty() ? 16 : std::stoul(n));
    a.verdict = w.status == WitnessStatus::Unknown ? Verdict::Unknown : Verdict::Yes;
    a.soundness = Soundness::WitnessSound;
    a.evidence = w.evidence;
  } else {
    throw Error(ErrorKind::Usage, "unknown oracle '" + oracle + "'");
  }
  emit(g, answer_record(a), to_string(a.verdict) + " (" + to_string(a.soundness) + "): " + a.evidence);
  return verdict_exit(a.verdict);
}

int run_reduce(const GlobalOptions& g, const std::vector<std::string>& oracle_specs,
               const std::string& alg, int n, const std::string& text) {
  std::map<int, std::shared_ptr<const ToyInstance>> toys;
  std::map<std::string, OracleBinding> roles;
  for (const std::string& spec : oracle_specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Usage, "oracle binding must be role=impl: " + spec);
    roles[spec.substr(0, eq)] = resolve_oracle(spec.substr(eq + 1), toys);
  }
  // family=toy:<k> binds every role to the same instance
  std::shared_ptr<const ToyInstance> inst;
  if (auto it = roles.find("family"); it != roles.end() && it->second.toy) inst = it->second.toy;
  for (auto& [role, b] : roles)
    if (!inst && b.toy) inst = b.toy;
  if (!inst)
    throw Error(ErrorKind::Usage,
                "reduce needs a toy oracle family, e.g. --oracle family=toy:4");

  Sentence phi = parse_sentence(text, inst->sig());
  ToyOracleFamily fam = toy_oracles(inst);
  CharFamily cf = toy_char_family(inst);
  AlgorithmOptions opts;
  opts.step_cap = static_cast<int>(g.budget);
  StepTrace trace;
  OracleAnswer a;
  json j = base_record();
  j["alg"] = alg;

  if (alg == "split") {
    a = split_membership(phi, fam.sigma0, fam.positive, &trace);
  } else if (alg == "zero") {
    a = decide_zero_char(phi, fam.sigma, fam.positive, fam.eventually, cf, opts, &trace);
  } else if (alg == "positive") {
    a = decide_positive(phi, fam.eventually, fam.positive, fam.uniform, cf, opts, &trace);
  } else if (alg == "uniform") {
    if (n < 1) throw Error(ErrorKind::Usage, "uniform needs --n >= 1");
    Sentence psi = reduce_uniform(phi, n, cf);
    j["image"] = print_canonical(psi);
    a = fam.sigma(psi);
    trace.record(1, "sigma", psi, a);
  } else {
    throw Error(ErrorKind::Usage, "unknown algorithm '" + alg + "'");
  }

  j["verdict"] = to_string(a.verdict);
  j["soundness"] = to_string(a.soundness);
  j["evidence"] = a.evidence;
  json steps = json::array();
  for (const StepRecord& r : trace.steps) {
    json sj;
    sj["step"] = r.step;
    sj["oracle"] = r.oracle;
    sj["query"] = r.sentence;
    sj["verdict"] = r.verdict;
    steps.push_back(sj);
  }
  j["steps"] = steps;
  std::string plain = to_string(a.verdict) + ": " + a.evidence + " (" +
                      std::to_string(trace.steps.size()) + " oracle calls)";
  emit(g, j, plain);
  return verdict_exit(a.verdict);
}

int run_eliminate(const GlobalOptions& g, const std::string& bridge, const std::string& prover_spec,
                  const std::string& candidates_kind, bool graded, bool no_fast_path,
                  uint64_t resume, const std::string& text) {
  EliminationOptions opts;
  opts.budget = g.budget;
  opts.fast_path = !no_fast_path;
  opts.start_pair = resume;

  TranslationMap iota;
  CandidateEnumerator cands;
  std::shared_ptr<Prover> prover;
  Sentence psi;
  std::function<CandidateEnumerator(int)> graded_factory;

  if (bridge.rfind("toy:", 0) == 0) {
    int k = std::stoi(bridge.substr(4));
    auto inst = std::make_shared<ToyInstance>(k, 0);
    auto sig_r = std::shared_ptr<const Signature>(inst, &inst->sig());
    std::vector<std::string> sn;
    for (int i = 1; i <= k; ++i) sn.push_back("s" + std::to_string(i));
    auto sig_s = std::make_shared<Signature>(propositional_signature(sn));
    iota = prop_rename_map(sig_r, sig_s);
    psi = parse_sentence(text, *sig_s);
    if (candidates_kind == "lt") {
      auto lt = std::make_shared<LtClassEnumerator>(inst);
      cands = {"lt-classes", [lt](uint64_t i) { return lt->at(i); }, lt->size()};
    } else {
      auto base = std::make_shared<SentenceEnumerator>(*sig_r);
      auto members = std::make_shared<std::vector<size_t>>();
      auto scanned = std::make_shared<size_t>(0);
      cands = {"toy-language", [base, inst, members, scanned](uint64_t i) {
                 while (members->size() <= i) {
                   if (inst->in_language(base->at(*scanned))) members->push_back(*scanned);
                   ++*scanned;
                 }
                 return base->at((*members)[i]);
               },
               std::nullopt};
    }
    graded_factory = [cands](int) { return cands; };
    if (prover_spec == "tt") {
      prover = truth_table_prover(all_assignments(*sig_s), {});
    }
  } else if (bridge == "residue") {
    iota = residue_map();
    psi = parse_sentence(text, valued_signature());
    auto mk = [](int nq) {
      auto en = std::make_shared<FragmentEnumerator>(
          nq < 0 ? fragment_exists(ring_signature()) : fragment_exists_n(ring_signature(), nq));
      return CandidateEnumerator{"ring-fragment", [en](uint64_t i) { return en->at(i); },
                                 std::nullopt};
    };
    cands = mk(-1);
    graded_factory = [mk](int nq) { return mk(nq); };
  } else {
    throw Error(ErrorKind::Usage, "unknown bridge '" + bridge + "'");
  }

  if (!prover) {
    if (prover_spec == "tt") {
      throw Error(ErrorKind::Usage, "tt prover needs a finite toy bridge");
    } else if (prover_spec.rfind("refute:", 0) == 0) {
      prover = finite_model_refuter_prover(battery_by_spec(prover_spec.substr(7)));
    } else if (prover_spec.rfind("ground:", 0) == 0) {
      prover = ground_saturation_prover(valued_signature(), {},
                                        std::stoi(prover_spec.substr(7)));
    } else {
      throw Error(ErrorKind::Usage, "unknown prover '" + prover_spec + "'");
    }
  }
  if (!g.battery.empty()) opts.refuter_battery = battery_by_spec(g.battery);

  SearchOutcome out = graded
                          ? search_elimination_graded(psi, iota, graded_factory, *prover, opts)
                          : search_elimination(psi, iota, cands, *prover, opts);

  json j = base_record();
  j["status"] = out.status == SearchOutcome::Status::Found ? "found" : "budget-exhausted";
  if (out.candidate) j["candidate"] = print_canonical(*out.candidate);
  j["pairs_visited"] = out.pairs_visited;
  j["frontier"] = out.frontier;
  j["fast_path"] = out.used_fast_path;
  j["detail"] = out.detail;
  std::string plain = out.candidate
                          ? "found " + print_canonical(*out.candidate) + " (" +
                                std::to_string(out.pairs_visited) + " pairs)"
                          : "budget exhausted at pair " + std::to_string(out.frontier);
  emit(g, j, plain);
  return out.status == SearchOutcome::Status::Found ? kExitYes : kExitUnknown;
}

int run_verify(const GlobalOptions& g, const std::string& bridge, int corpus_size,
               int corpus_depth) {
  json j = base_record();
  bool all_pass = true;
  json reports = json::array();
  auto add = [&](const LawReport& r) {
    json rj;
    rj["law"] = r.law;
    rj["status"] = r.pass ? "pass" : "fail";
    if (!r.witness.empty()) rj["witness"] = r.witness;
    rj["corpus_hash"] = r.corpus_hash;
    reports.push_back(rj);
    all_pass = all_pass && r.pass;
  };

  if (bridge.rfind("toy:", 0) == 0) {
    int k = std::stoi(bridge.substr(4));
    auto inst = std::make_shared<ToyInstance>(k, 0);
    auto sig_r = std::shared_ptr<const Signature>(inst, &inst->sig());
    std::vector<std::string> sn;
    for (int i = 1; i <= k; ++i) sn.push_back("s" + std::to_string(i));
    auto sig_s = std::make_shared<Signature>(propositional_signature(sn));
    TranslationMap iota = prop_rename_map(sig_r, sig_s);
    TranslationMap back;
    back.name = "rename-back";
    back.apply = [iota](const Sentence& s) { return *iota.invert(s); };

    Rng rng(g.seed);
    std::vector<Sentence> corpus1;
    for (int i = 0; i < corpus_size; ++i)
      corpus1.push_back(gen_toy_sentence(rng, *inst, corpus_depth));
    std::vector<Sentence> corpus2;
    for (const Sentence& s : corpus1) corpus2.push_back(iota.apply(s));

    Context c1{fragment_all(*sig_r), Theory::explicit_theory({}), sig_r.get()};
    Context c2{fragment_all(*sig_s), Theory::explicit_theory({}), sig_s.get()};
    std::vector<StructurePtr> u1 = all_assignments(*sig_r), u2 = all_assignments(*sig_s);
    for (const LawReport& r :
         verify_translation_laws(iota, &back, c1, c2, u1, u2, corpus1, corpus2))
      add(r);

    BridgeDescriptor b{"toy", c1, c2, [sig_r](const StructurePtr& m) -> StructurePtr {
                         auto pm = std::dynamic_pointer_cast<const PropStructure>(m);
                         return std::make_shared<PropStructure>(*sig_r, pm->assignment());
                       }};
    BridgeAxiomReports rep = verify_bridge_axioms(b, u2, u1, corpus1, corpus2, corpus1);
    add(rep.sur);
    add(rep.mon);
    add(rep.wm);
  } else if (bridge.rfind("residue:", 0) == 0) {
    // universes: prime fields and their trivially valued wrappers
    std::vector<StructurePtr> u1, u2;
    std::stringstream ss(bridge.substr(8));
    std::string p;
    while (std::getline(ss, p, ',')) {
      u1.push_back(prime_field(std::stoull(p)));
      u2.push_back(trivially_valued(prime_field(std::stoull(p))));
    }
    Rng rng(g.seed);
    GenOptions go;
    go.max_depth = corpus_depth;
    std::vector<Sentence> corpus1;
    for (int i = 0; i < corpus_size; ++i) corpus1.push_back(gen_ring_sentence(rng, go));
    std::vector<Sentence> corpus2;
    for (const Sentence& s : corpus1) corpus2.push_back(residue_interpret(s));

    Context c1{fragment_all(ring_signature()), Theory::explicit_theory({}), &ring_signature()};
    Context c2{fragment_all(valued_signature()), Theory::explicit_theory({}),
               &valued_signature()};
    // sigma of a trivially valued wrapper is its residue field; for the
    // prime-field universes this bridge names, that is F_|K|
    BridgeDescriptor b{"residue", c1, c2, [](const StructurePtr& m) -> StructurePtr {
                         return prime_field(m->carrier_size("K"));
                       }};
    BridgeAxiomReports rep = verify_bridge_axioms(b, u2, u1, corpus1, corpus2, corpus1);
    add(rep.sur);
    add(rep.mon);
    add(rep.wm);
  } else {
    throw Error(ErrorKind::Usage, "unknown bridge '" + bridge + "'");
  }

  j["reports"] = reports;
  std::string plain;
  for (const auto& r : reports)
    plain += std::string(r["law"]) + ": " + std::string(r["status"]) + "\n";
  if (!plain.empty()) plain.pop_back();
  emit(g, j, plain);
  return all_pass ? kExitYes : kExitNo;
}

void apply_config_file(const std::string& path, GlobalOptions& g, bool& seed_set,
                       bool& budget_set) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot open config file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Usage, "config line is not key=value: " + line);
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key == "budget") {
      if (!budget_set) g.budget = std::stoull(value);
    } else if (key == "seed") {
      if (!seed_set) g.seed = std::stoull(value);
    } else if (key == "prime_bound") {
      g.prime_bound = std::stoull(value);
    } else if (key == "battery") {
      if (g.battery.empty()) g.battery = value;
    } else {
      throw Error(ErrorKind::Usage, "unknown config key '" + key + "'");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first-order fragment toolkit"};
  app.require_subcommand(1);

  GlobalOptions g;
  std::string config_path;
  auto* seed_opt = app.add_option("--seed", g.seed, "seed for randomized corpora");
  auto* budget_opt = app.add_option("--budget", g.budget, "search/step budget");
  app.add_flag("--json", g.json_out, "emit one JSON object per result");
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--battery", g.battery, "refuter battery, e.g. trivval:5,trivval:7");

  std::string signame = "ring", text, map_name, model_spec, oracle = "fp:2", fragment;
  std::string stratum = "sigma", alg = "split", bridge = "toy:3", prover_spec = "tt";
  std::string candidates_kind = "raw";
  std::vector<std::string> oracle_specs;
  int index = 1, corpus_size = 200, corpus_depth = 3;
  bool graded = false, no_fast_path = false;
  uint64_t resume = 0;

  CLI::App* cmd_parse = app.add_subcommand("parse", "parse and print the canonical form");
  cmd_parse->add_option("--sig", signame, "signature: ring|val|val-varpi|onesorted");
  cmd_parse->add_option("sentence", text, "canonical S-expression")->required();

  CLI::App* cmd_classify = app.add_subcommand("classify", "fragment membership flags");
  cmd_classify->add_option("--sig", signame, "signature");
  cmd_classify->add_option("--fragment", fragment,
                           "membership test: qf|exists|exists:N|forall|forall:N|bar-exists|all");
  cmd_classify->add_option("sentence", text)->required();

  CLI::App* cmd_translate = app.add_subcommand("translate", "apply a translation map");
  cmd_translate->add_option("--map", map_name, "residue|onesorted|identity")->required();
  cmd_translate->add_option("sentence", text)->required();

  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate in a finite model");
  cmd_eval->add_option("--model", model_spec, "fp:<p>|zmod:<n>|gf4|f2eps|trivval:<p>|json:<path>@<sig>")
      ->required();
  cmd_eval->add_option("--sig", signame, "signature of the sentence");
  cmd_eval->add_option("sentence", text)->required();

  CLI::App* cmd_decide = app.add_subcommand("decide", "run a decision oracle");
  cmd_decide->add_option("--oracle", oracle,
                         "fp:<p>|q-exists1|bounded-primes:<B>|toy:<k>|laurent:<p>[:D[:N]]")
      ->required();
  cmd_decide->add_option("--stratum", stratum, "toy stratum: sigma|zero|pos|inf|n");
  cmd_decide->add_option("--n", index, "stratum index for --stratum n");
  cmd_decide->add_option("sentence", text)->required();

  CLI::App* cmd_reduce = app.add_subcommand("reduce", "stratification algorithms");
  cmd_reduce->add_option("--alg", alg, "split|zero|uniform|positive")->required();
  cmd_reduce->add_option("--oracle", oracle_specs, "role=impl bindings, e.g. family=toy:4");
  cmd_reduce->add_option("--n", index, "uniform pair index");
  cmd_reduce->add_option("sentence", text)->required();

  CLI::App* cmd_eliminate = app.add_subcommand("eliminate", "proof-search elimination");
  cmd_eliminate->add_option("--target", text, "target sentence")->required();
  cmd_eliminate->add_option("--bridge", bridge, "toy:<k>|residue");
  cmd_eliminate->add_option("--prover", prover_spec, "tt|refute:<battery>|ground:<depth>");
  cmd_eliminate->add_option("--candidates", candidates_kind, "raw|lt");
  cmd_eliminate->add_flag("--graded", graded, "grade candidates by the target's budget");
  cmd_eliminate->add_flag("--no-fast-path", no_fast_path, "disable the syntactic inverse");
  cmd_eliminate->add_option("--resume", resume, "resume from this pair index");

  CLI::App* cmd_verify = app.add_subcommand("verify", "translation/bridge law checks");
  cmd_verify->add_option("--bridge", bridge, "toy:<k>|residue:<p,p,...>");
  cmd_verify->add_option("--corpus-size", corpus_size, "sentences in the corpus");
  cmd_verify->add_option("--corpus-depth", corpus_depth, "corpus connective depth");

  // global flags may appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    bool seed_set = seed_opt->count() > 0, budget_set = budget_opt->count() > 0;
    if (!config_path.empty()) apply_config_file(config_path, g, seed_set, budget_set);
    if (const char* env = std::getenv("FF_BUDGET")) g.budget = std::stoull(env);

    if (*cmd_parse) return run_parse(g, signame, text);
    if (*cmd_classify) return run_classify(g, signame, fragment, text);
    if (*cmd_translate) return run_translate(g, map_name, text);
    if (*cmd_eval) return run_eval(g, model_spec, signame, text);
    if (*cmd_decide) return run_decide(g, oracle, stratum, index, text);
    if (*cmd_reduce) return run_reduce(g, oracle_specs, alg, index, text);
    if (*cmd_eliminate)
      return run_eliminate(g, bridge, prover_spec, candidates_kind, graded, no_fast_path, resume,
                           text);
    if (*cmd_verify) return run_verify(g, bridge, corpus_size, corpus_depth);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
