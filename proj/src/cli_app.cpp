#include "gb/cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

namespace gb {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw CLI::ValidationError("not an exact rational: " + s);
  r.canonicalize();
  return r;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<RatVec> parse_borel(const std::string& s) {
  std::vector<RatVec> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ';')) {
    RatVec v;
    std::stringstream ps(part);
    std::string item;
    while (std::getline(ps, item, ',')) v.push_back(parse_rational(item));
    out.push_back(std::move(v));
  }
  return out;
}

ordered_json weight_json(const RatVec& w) {
  ordered_json arr = ordered_json::array();
  for (const Rational& x : w) arr.push_back(x.get_str());
  return arr;
}

ordered_json graded_weight_json(const GradedWeight& gw) {
  ordered_json j;
  j["weight"] = weight_json(gw.weight);
  j["grade"] = gw.grade;
  return j;
}

std::string weight_text(const RatVec& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].get_str();
  }
  return s + "]";
}

std::string antichain_text(const WeightPoset& poset, const Antichain& a) {
  std::string s = "{";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    const GradedWeight& gw = poset.element(a[i]);
    s += weight_text(gw.weight) + "@" + std::to_string(gw.grade);
  }
  return s + "}";
}

ordered_json grading_json(const GradingBundle& bundle) {
  ordered_json g;
  g["family"] = std::string(1, family_to_char(bundle.label.family));
  g["rank"] = bundle.label.rank;
  g["label"] = bundle.label.s;
  g["r"] = bundle.label.twist;
  g["n"] = bundle.label.n;
  ordered_json dims = ordered_json::array();
  for (unsigned j = 0; j < bundle.decomp->modulus(); ++j)
    dims.push_back(bundle.decomp->component_dim(j));
  g["dims"] = dims;
  ordered_json delta = ordered_json::array();
  for (const RatVec& d : bundle.decomp->delta0()) delta.push_back(weight_json(d));
  g["delta0"] = delta;
  return g;
}

struct Config {
  std::string family_str = "A";
  int rank = 0;
  std::string label_str;
  int twist = 1;
  unsigned n = 0;
  unsigned k = 1;
  std::string preset;
  std::string borel_str;
  std::string format = "json";
  bool serial = false;

  Execution exec() const { return serial ? Execution::serial : Execution::parallel; }

  GradingBundle build() const {
    if (!preset.empty()) {
      if (find_preset(preset) == nullptr)
        throw CLI::ValidationError("unknown preset: " + preset);
      return build_preset(preset);
    }
    if (rank <= 0) throw CLI::ValidationError("--rank is required without --preset");
    if (label_str.empty()) throw CLI::ValidationError("--label is required without --preset");
    std::optional<std::vector<RatVec>> borel;
    if (!borel_str.empty()) borel = parse_borel(borel_str);
    return build_grading(family_from_char(family_str.at(0)), rank, twist,
                         parse_int_list(label_str), borel);
  }
};

}  // namespace

std::string classify_output_json(const GradingBundle& bundle, unsigned k,
                                 const std::vector<Antichain>& antichains) {
  ordered_json out;
  out["grading"] = grading_json(bundle);
  out["k"] = k;
  ordered_json sp = ordered_json::array();
  for (const GradedWeight& gw : bundle.poset->elements()) sp.push_back(graded_weight_json(gw));
  out["sigmaPlus"] = sp;
  ordered_json acs = ordered_json::array();
  for (const Antichain& a : antichains) {
    ordered_json one = ordered_json::array();
    for (size_t e : a) one.push_back(graded_weight_json(bundle.poset->element(e)));
    acs.push_back(one);
  }
  out["antichains"] = acs;
  out["count"] = antichains.size();
  return out.dump(2) + "\n";
}

ParsedClassifyOutput parse_classify_output(const std::string& json_text) {
  ordered_json in = ordered_json::parse(json_text);
  ParsedClassifyOutput parsed;
  parsed.k = in.at("k").get<unsigned>();
  parsed.count = in.at("count").get<size_t>();
  auto to_gw = [](const ordered_json& j) {
    GradedWeight gw;
    gw.grade = j.at("grade").get<unsigned>();
    for (const auto& s : j.at("weight")) gw.weight.push_back(parse_rational(s.get<std::string>()));
    return gw;
  };
  for (const auto& j : in.at("sigmaPlus")) parsed.sigma_plus.push_back(to_gw(j));
  for (const auto& a : in.at("antichains")) {
    std::vector<GradedWeight> one;
    for (const auto& j : a) one.push_back(to_gw(j));
    parsed.antichains.push_back(std::move(one));
  }
  return parsed;
}

VerifyOutcome run_verify(const GradingBundle& bundle, unsigned k, Execution exec,
                         const std::function<void(std::vector<Antichain>&)>& tamper) {
  VerifyOutcome v;
  std::vector<Antichain> classified = classify_antichains(*bundle.poset, k, exec);
  if (tamper) tamper(classified);
  std::vector<Antichain> oracle = brute_force_classify(*bundle.poset, k, exec);
  v.classifier_count = classified.size();
  v.oracle_count = oracle.size();
  v.agree = classified == oracle;
  std::ostringstream os;
  os << "classifier: " << classified.size() << " antichains, oracle: " << oracle.size()
     << " antichains\n";
  if (!v.agree) {
    for (const Antichain& a : classified)
      if (std::find(oracle.begin(), oracle.end(), a) == oracle.end())
        os << "  classifier only: " << antichain_text(*bundle.poset, a) << "\n";
    for (const Antichain& a : oracle)
      if (std::find(classified.begin(), classified.end(), a) == classified.end())
        os << "  oracle only: " << antichain_text(*bundle.poset, a) << "\n";
  } else {
    os << "agree\n";
  }
  v.report = os.str();
  return v;
}

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  std::ostringstream out;

  CLI::App app{"exact classifier for graded nilpotent Borel-module subalgebras"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* cmd, bool with_k) {
    cmd->add_option("--family", cfg.family_str, "simple type family (A..G)");
    cmd->add_option("--rank", cfg.rank, "rank of the simple type");
    cmd->add_option("--label", cfg.label_str, "Kac label, comma separated");
    cmd->add_option("--r", cfg.twist, "twist (1 or 2)");
    cmd->add_option("--preset", cfg.preset, "named configuration");
    cmd->add_option("--borel", cfg.borel_str,
                    "Delta_0 override: value-lists 'a,b,..;c,d,..' on the h0 basis");
    cmd->add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--serial", cfg.serial, "run kernels on the serial reference path");
    if (with_k) cmd->add_option("--k", cfg.k, "nilpotency degree (k=1 is abelian)");
  };

  CLI::App* labels = app.add_subcommand("labels", "enumerate Kac labels up to conjugacy");
  labels->add_option("family", cfg.family_str)->required();
  labels->add_option("rank", cfg.rank)->required();
  labels->add_option("--n", cfg.n, "automorphism order")->required();
  labels->add_option("--r", cfg.twist, "twist (1 or 2)");
  labels->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* grade = app.add_subcommand("grade", "build a grading and print its shape");
  add_common(grade, false);
  CLI::App* poset = app.add_subcommand("poset", "emit the graded-weight poset");
  add_common(poset, false);
  CLI::App* classify = app.add_subcommand("classify", "classify subalgebra antichains");
  add_common(classify, true);
  CLI::App* verify = app.add_subcommand("verify", "compare classifier with the oracle");
  add_common(verify, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    if (e.get_exit_code() == 0) {
      // --help and friends
      result.out = app.help();
      result.exit_code = 0;
      return result;
    }
    err << e.what() << "\n";
    result.err = err.str();
    result.exit_code = 2;
    return result;
  }

  try {
    if (labels->parsed()) {
      std::vector<KacLabel> found =
          enumerate_kac_labels(family_from_char(cfg.family_str.at(0)), cfg.rank, cfg.n,
                               cfg.twist);
      if (cfg.format == "text") {
        for (const KacLabel& l : found) {
          for (size_t i = 0; i < l.s.size(); ++i) out << (i ? "," : "") << l.s[i];
          out << "\n";
        }
      } else {
        ordered_json j;
        j["family"] = cfg.family_str;
        j["rank"] = cfg.rank;
        j["n"] = cfg.n;
        j["r"] = cfg.twist;
        ordered_json arr = ordered_json::array();
        for (const KacLabel& l : found) arr.push_back(l.s);
        j["labels"] = arr;
        j["count"] = found.size();
        out << j.dump(2) << "\n";
      }
    } else if (grade->parsed()) {
      GradingBundle bundle = cfg.build();
      if (cfg.format == "text") {
        out << "type " << bundle.algebra->roots().type_name() << ", n = " << bundle.label.n
            << "\n";
        for (unsigned j = 0; j < bundle.decomp->modulus(); ++j) {
          out << "g_" << j << ": dim " << bundle.decomp->component_dim(j) << ", weights";
          for (const WeightSpace& ws : bundle.decomp->weights(j))
            out << " " << weight_text(ws.weight) << "x" << ws.vectors.size();
          out << "\n";
        }
        out << "delta0:";
        for (const RatVec& d : bundle.decomp->delta0()) out << " " << weight_text(d);
        out << "\n";
      } else {
        ordered_json j;
        j["grading"] = grading_json(bundle);
        ordered_json comps = ordered_json::array();
        for (unsigned g = 0; g < bundle.decomp->modulus(); ++g) {
          ordered_json cj;
          cj["grade"] = g;
          cj["dim"] = bundle.decomp->component_dim(g);
          ordered_json ws = ordered_json::array();
          for (const WeightSpace& w : bundle.decomp->weights(g)) {
            ordered_json wj;
            wj["weight"] = weight_json(w.weight);
            wj["dim"] = w.vectors.size();
            ws.push_back(wj);
          }
          cj["weights"] = ws;
          comps.push_back(cj);
        }
        j["components"] = comps;
        out << j.dump(2) << "\n";
      }
    } else if (poset->parsed()) {
      GradingBundle bundle = cfg.build();
      const WeightPoset& p = *bundle.poset;
      if (cfg.format == "text") {
        for (size_t i = 0; i < p.size(); ++i)
          out << i << ": " << weight_text(p.element(i).weight) << "@" << p.element(i).grade
              << "\n";
        for (size_t a = 0; a < p.size(); ++a)
          for (size_t b = 0; b < p.size(); ++b)
            if (a != b && p.leq_members(a, b)) out << a << " <= " << b << "\n";
      } else {
        ordered_json j;
        j["grading"] = grading_json(bundle);
        ordered_json sp = ordered_json::array();
        for (const GradedWeight& gw : p.elements()) sp.push_back(graded_weight_json(gw));
        j["sigmaPlus"] = sp;
        ordered_json rel = ordered_json::array();
        for (size_t a = 0; a < p.size(); ++a)
          for (size_t b = 0; b < p.size(); ++b)
            if (a != b && p.leq_members(a, b)) rel.push_back({a, b});
        j["relations"] = rel;
        out << j.dump(2) << "\n";
      }
    } else if (classify->parsed()) {
      GradingBundle bundle = cfg.build();
      std::vector<Antichain> antichains =
          classify_antichains(*bundle.poset, cfg.k, cfg.exec());
      if (cfg.format == "text") {
        for (const Antichain& a : antichains)
          out << antichain_text(*bundle.poset, a) << "\n";
      } else {
        out << classify_output_json(bundle, cfg.k, antichains);
      }
    } else if (verify->parsed()) {
      GradingBundle bundle = cfg.build();
      VerifyOutcome v = run_verify(bundle, cfg.k, cfg.exec());
      out << v.report;
      result.exit_code = v.agree ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 2;
    return result;
  } catch (const std::invalid_argument& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 2;
    return result;
  } catch (const std::exception& e) {
    result.err = std::string("internal error: ") + e.what() + "\n";
    result.exit_code = 2;
    return result;
  }

  result.out = out.str();
  return result;
}

}  // namespace gb
