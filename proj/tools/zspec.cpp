// zspec — exact computations in the Zaremba spectrum: the function Z(a/b),
// the classified spectrum above 1/3 with brute-force verification, Nielsen
// word families, Markoff triples and exact limit points.
//
// Exit codes: 0 success (and verification agreement), 1 verification
// disagreement, 2 usage or domain error.

#include "CLI11.hpp"
#include "json.hpp"

#include "zspec/chains.hpp"
#include "zspec/markoff.hpp"
#include "zspec/nielsen.hpp"
#include "zspec/rational_core.hpp"
#include "zspec/spectrum.hpp"
#include "zspec/zaremba.hpp"

#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace zspec;

namespace {

enum class Format { Plain, Json, Csv };

struct Options {
  Format format = Format::Plain;
  std::size_t digits = 12;
};

std::string rat_str(const Rat& x) {
  return num(x).get_str() + "/" + den(x).get_str();
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

json surd_json(const QuadraticSurd& s, std::size_t digits) {
  return json{{"p", s.p().get_str()},
              {"q", s.q().get_str()},
              {"D", s.d().get_str()},
              {"r", s.r().get_str()},
              {"decimal", s.decimal(digits)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::pair<long, long> parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("expected a fraction a/b");
  std::size_t ua = 0, ub = 0;
  const long a = std::stol(text.substr(0, slash), &ua);
  const long b = std::stol(text.substr(slash + 1), &ub);
  if (ua != slash || ub != text.size() - slash - 1)
    throw std::invalid_argument("expected a fraction a/b");
  return {a, b};
}

Rat parse_rat(const std::string& text) {
  const auto [a, b] = parse_fraction(text);
  return make_rat(a, b);
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stol(item, &used));
    if (used != item.size())
      throw std::invalid_argument("bad list entry '" + item + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

// ----------------------------------------------------------------- compute

int cmd_compute(const std::string& fraction, const Options& opt) {
  const auto [a, b] = parse_fraction(fraction);
  const ZResult brute = z_bruteforce(a, b);
  const ZResult perron = z_perron(a, b);
  const Chain canonical = cf_from_rat(make_rat(a, b), Parity::Canonical);
  const Chain even = cf_from_rat(make_rat(a, b), Parity::Even);
  if (brute.value != perron.value)
    throw ClassificationViolation("compute: brute force and Perron disagree");
  switch (opt.format) {
    case Format::Plain:
      std::cout << "input: " << a << "/" << b << "\n"
                << "value: " << rat_str(brute.value) << "\n"
                << "witness_q: " << brute.witness << "\n"
                << "chain_canonical: " << canonical.str() << "\n"
                << "chain_even: " << even.str() << "\n"
                << "perron_witness_index: " << perron.witness << "\n";
      break;
    case Format::Json:
      emit(json{{"command", "compute"},
                {"input", std::to_string(a) + "/" + std::to_string(b)},
                {"value", rat_str(brute.value)},
                {"witness_q", brute.witness},
                {"chain_canonical", canonical.str()},
                {"chain_even", even.str()},
                {"perron_witness_index", perron.witness}});
      break;
    case Format::Csv:
      std::cout << "input,value,witness_q,chain_canonical,chain_even,"
                   "perron_witness_index\n"
                << a << "/" << b << "," << rat_str(brute.value) << ","
                << brute.witness << "," << csv_quote(canonical.str()) << ","
                << csv_quote(even.str()) << "," << perron.witness << "\n";
      break;
  }
  return 0;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(long bound, const std::string& threshold,
                 const std::string& mode, const Options& opt) {
  if (bound < 2) throw std::domain_error("spectrum: bound must be >= 2");
  const Rat thr = parse_rat(threshold);
  if (mode == "brute") {
    const auto entries = bruteforce_spectrum(bound, thr);
    if (opt.format == Format::Plain) {
      std::cout << "bound: " << bound << "\nthreshold: " << rat_str(thr)
                << "\ncount: " << entries.size() << "\n";
      for (const auto& e : entries) {
        std::cout << rat_str(e.value) << "  witnesses:";
        for (const auto& w : e.witnesses) std::cout << " " << rat_str(w);
        std::cout << "\n";
      }
    } else if (opt.format == Format::Json) {
      json values = json::array();
      for (const auto& e : entries) {
        json wits = json::array();
        for (const auto& w : e.witnesses) wits.push_back(rat_str(w));
        values.push_back({{"value", rat_str(e.value)}, {"witnesses", wits}});
      }
      emit(json{{"command", "spectrum"},
                {"mode", "brute"},
                {"bound", bound},
                {"threshold", rat_str(thr)},
                {"count", entries.size()},
                {"values", values}});
    } else {
      std::cout << "value,witnesses\n";
      for (const auto& e : entries) {
        std::cout << rat_str(e.value) << ",";
        for (std::size_t i = 0; i < e.witnesses.size(); ++i)
          std::cout << (i ? ";" : "") << rat_str(e.witnesses[i]);
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (mode == "classified") {
    if (thr != make_rat(1, 3))
      throw std::domain_error(
          "spectrum: the classified mode is defined for threshold 1/3");
    const auto points = classified_spectrum(bound);
    if (opt.format == Format::Plain) {
      std::cout << "bound: " << bound << "\ncount: " << points.size() << "\n";
      for (const auto& p : points) {
        std::cout << rat_str(p.value) << "  witness: " << rat_str(p.witness)
                  << "  via:";
        for (const auto& pr : p.provenances) std::cout << " " << pr.str();
        std::cout << "\n";
      }
    } else if (opt.format == Format::Json) {
      json values = json::array();
      for (const auto& p : points) {
        json provs = json::array();
        for (const auto& pr : p.provenances) {
          switch (pr.family) {
            case Provenance::Family::Fibonacci:
              provs.push_back({{"family", "fibonacci"}, {"n", pr.n}});
              break;
            case Provenance::Family::AllTwos:
              provs.push_back({{"family", "all_twos"}, {"n", pr.n}});
              break;
            case Provenance::Family::Nielsen:
              provs.push_back({{"family", "nielsen"},
                               {"psi", pr.psi.letters()},
                               {"k", pr.k}});
              break;
          }
        }
        values.push_back({{"value", rat_str(p.value)},
                          {"witness", rat_str(p.witness)},
                          {"denominator", p.denominator.get_str()},
                          {"provenances", provs}});
      }
      emit(json{{"command", "spectrum"},
                {"mode", "classified"},
                {"bound", bound},
                {"threshold", rat_str(thr)},
                {"count", points.size()},
                {"values", values}});
    } else {
      std::cout << "value,witness,denominator,provenances\n";
      for (const auto& p : points) {
        std::cout << rat_str(p.value) << "," << rat_str(p.witness) << ","
                  << p.denominator.get_str() << ",";
        for (std::size_t i = 0; i < p.provenances.size(); ++i)
          std::cout << (i ? ";" : "") << p.provenances[i].str();
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (mode == "verify") {
    if (thr != make_rat(1, 3))
      throw std::domain_error(
          "spectrum: verification is defined for threshold 1/3");
    const VerificationReport rep = verify_classification(bound);
    if (opt.format == Format::Plain) {
      std::cout << "bound: " << rep.bound
                << "\nbrute_count: " << rep.brute_values.size()
                << "\nclassified_count: " << rep.classified_values.size()
                << "\nagree: " << (rep.agree ? "true" : "false") << "\n";
      for (const auto& v : rep.missing_from_classified)
        std::cout << "missing_from_classified: " << rat_str(v) << "\n";
      for (const auto& v : rep.missing_from_brute)
        std::cout << "missing_from_brute: " << rat_str(v) << "\n";
    } else if (opt.format == Format::Json) {
      json mc = json::array(), mb = json::array(), vals = json::array();
      for (const auto& v : rep.missing_from_classified)
        mc.push_back(rat_str(v));
      for (const auto& v : rep.missing_from_brute) mb.push_back(rat_str(v));
      for (const auto& v : rep.brute_values) vals.push_back(rat_str(v));
      emit(json{{"command", "spectrum"},
                {"mode", "verify"},
                {"bound", rep.bound},
                {"threshold", rat_str(thr)},
                {"agree", rep.agree},
                {"brute_count", rep.brute_values.size()},
                {"classified_count", rep.classified_values.size()},
                {"brute_values", vals},
                {"missing_from_classified", mc},
                {"missing_from_brute", mb}});
    } else {
      std::cout << "bound,agree,brute_count,classified_count\n"
                << rep.bound << "," << (rep.agree ? "true" : "false") << ","
                << rep.brute_values.size() << ","
                << rep.classified_values.size() << "\n";
    }
    return rep.agree ? 0 : 1;
  }
  throw std::invalid_argument("spectrum: unknown mode '" + mode + "'");
}

// ------------------------------------------------------------------- chain

int cmd_chain(const std::string& literal, const std::string& action,
              const Options& opt) {
  const Chain chain = Chain::parse(literal);
  if (action == "canonical") {
    const Chain canonical = canonicalize_chain(chain);
    if (opt.format == Format::Plain)
      std::cout << "canonical: " << canonical.str() << "\n";
    else if (opt.format == Format::Json)
      emit(json{{"command", "chain"},
                {"action", "canonical"},
                {"chain", chain.str()},
                {"canonical", canonical.str()}});
    else
      std::cout << "chain,canonical\n"
                << csv_quote(chain.str()) << "," << csv_quote(canonical.str())
                << "\n";
    return 0;
  }
  if (action == "zeta") {
    const PerronResult pr = perron_value(chain);
    const Rat z = Rat(1) / pr.value;
    if (opt.format == Format::Plain)
      std::cout << "z: " << rat_str(z) << "\n"
                << "perron_witness_index: " << pr.witness_index << "\n";
    else if (opt.format == Format::Json)
      emit(json{{"command", "chain"},
                {"action", "zeta"},
                {"chain", chain.str()},
                {"z", rat_str(z)},
                {"perron_witness_index", pr.witness_index}});
    else
      std::cout << "chain,z,perron_witness_index\n"
                << csv_quote(chain.str()) << "," << rat_str(z) << ","
                << pr.witness_index << "\n";
    return 0;
  }
  if (action == "check") {
    const bool only_12 = std::all_of(chain.terms().begin(),
                                     chain.terms().end(),
                                     [](long t) { return t <= 2; });
    const Chain canonical = only_12 ? canonicalize_chain(chain) : chain;
    std::optional<RejectionReason> reason =
        only_12 ? quick_reject(canonical) : std::nullopt;
    const bool admissible = is_admissible(chain);
    if (!reason && !admissible) {
      // the filter cannot name a small lemma; report the failing section
      reason = RejectionReason{RejectTag::SectionBelowThird,
                               perron_value(chain).witness_index};
    }
    if (opt.format == Format::Plain) {
      std::cout << "chain: " << chain.str() << "\n"
                << "canonical: " << canonical.str() << "\n"
                << "admissible: " << (admissible ? "true" : "false") << "\n";
      if (reason)
        std::cout << "rejection: " << reject_tag_name(reason->tag) << " at "
                  << reason->location << "\n";
    } else if (opt.format == Format::Json) {
      json rej;
      if (reason)
        rej = json{{"tag", reject_tag_name(reason->tag)},
                   {"location", reason->location}};
      emit(json{{"command", "chain"},
                {"action", "check"},
                {"chain", chain.str()},
                {"canonical", canonical.str()},
                {"admissible", admissible},
                {"rejection", reason ? rej : json()}});
    } else {
      std::cout << "chain,canonical,admissible,rejection_tag,"
                   "rejection_location\n"
                << csv_quote(chain.str()) << "," << csv_quote(canonical.str())
                << "," << (admissible ? "true" : "false") << ","
                << (reason ? reject_tag_name(reason->tag) : "") << ","
                << (reason ? std::to_string(reason->location) : "") << "\n";
    }
    return 0;
  }
  throw std::invalid_argument("chain: unknown action '" + action + "'");
}

// ----------------------------------------------------------------- nielsen

int cmd_nielsen(const std::string& word, long k, const std::string& action,
                const Options& opt) {
  const NielsenWord psi(word);
  if (action == "build") {
    const Chain r = build_r(psi, k);
    const Rat value = rho(r);
    if (opt.format == Format::Plain)
      std::cout << "chain: " << r.str() << "\n"
                << "rho: " << rat_str(value) << "\n";
    else if (opt.format == Format::Json)
      emit(json{{"command", "nielsen"},
                {"action", "build"},
                {"word", word},
                {"k", k},
                {"chain", r.str()},
                {"rho", rat_str(value)}});
    else
      std::cout << "word,k,chain,rho\n"
                << word << "," << k << "," << csv_quote(r.str()) << ","
                << rat_str(value) << "\n";
    return 0;
  }
  if (action == "zeta") {
    const Rat z = z_closed_form(psi, k);
    if (opt.format == Format::Plain)
      std::cout << "z: " << rat_str(z) << "\n";
    else if (opt.format == Format::Json)
      emit(json{{"command", "nielsen"},
                {"action", "zeta"},
                {"word", word},
                {"k", k},
                {"z", rat_str(z)}});
    else
      std::cout << "word,k,z\n" << word << "," << k << "," << rat_str(z)
                << "\n";
    return 0;
  }
  if (action == "limit") {
    const QuadraticSurd limit = limit_of_family(psi);
    if (opt.format == Format::Plain)
      std::cout << "limit: " << limit.str() << "\n"
                << "decimal: " << limit.decimal(opt.digits) << "\n";
    else if (opt.format == Format::Json)
      emit(json{{"command", "nielsen"},
                {"action", "limit"},
                {"word", word},
                {"limit", surd_json(limit, opt.digits)}});
    else
      std::cout << "word,p,q,D,r,decimal\n"
                << word << "," << limit.p() << "," << limit.q() << ","
                << limit.d() << "," << limit.r() << ","
                << limit.decimal(opt.digits) << "\n";
    return 0;
  }
  if (action == "triple") {
    const MarkoffTriple t = trace_triple(psi);
    const Int zp = z_prime(t);
    const bool ok = matrix_form_check(psi);
    if (opt.format == Format::Plain)
      std::cout << "triple: (" << t.x << ", " << t.y << ", " << t.z << ")\n"
                << "z_prime: " << zp << "\n"
                << "matrix_form_ok: " << (ok ? "true" : "false") << "\n";
    else if (opt.format == Format::Json)
      emit(json{{"command", "nielsen"},
                {"action", "triple"},
                {"word", word},
                {"x", t.x.get_str()},
                {"y", t.y.get_str()},
                {"z", t.z.get_str()},
                {"z_prime", zp.get_str()},
                {"matrix_form_ok", ok}});
    else
      std::cout << "word,x,y,z,z_prime,matrix_form_ok\n"
                << word << "," << t.x << "," << t.y << "," << t.z << "," << zp
                << "," << (ok ? "true" : "false") << "\n";
    return 0;
  }
  throw std::invalid_argument("nielsen: unknown action '" + action + "'");
}

// ----------------------------------------------------------------- markoff

int cmd_markoff(long max, const std::string& action, const Options& opt) {
  if (max < 0) throw std::domain_error("markoff: max must be >= 0");
  if (action == "tree") {
    const auto triples = markoff_tree(max);
    if (opt.format == Format::Plain) {
      std::cout << "count: " << triples.size() << "\n";
      for (const auto& t : triples)
        std::cout << t.x << " " << t.y << " " << t.z << "\n";
    } else if (opt.format == Format::Json) {
      json arr = json::array();
      for (const auto& t : triples)
        arr.push_back({t.x.get_str(), t.y.get_str(), t.z.get_str()});
      emit(json{{"command", "markoff"},
                {"action", "tree"},
                {"max", max},
                {"count", triples.size()},
                {"triples", arr}});
    } else {
      std::cout << "x,y,z\n";
      for (const auto& t : triples)
        std::cout << t.x << "," << t.y << "," << t.z << "\n";
    }
    return 0;
  }
  if (action == "limits") {
    const auto entries = limit_points_above_third(max, opt.digits);
    if (opt.format == Format::Plain) {
      for (const auto& e : entries)
        std::cout << "m = " << e.m << "  " << e.value.str() << "  "
                  << e.decimal << "\n";
    } else if (opt.format == Format::Json) {
      json arr = json::array();
      for (const auto& e : entries)
        arr.push_back(
            {{"m", e.m.get_str()}, {"value", surd_json(e.value, opt.digits)}});
      emit(json{{"command", "markoff"},
                {"action", "limits"},
                {"max", max},
                {"points", arr}});
    } else {
      std::cout << "m,p,q,D,r,decimal\n";
      for (const auto& e : entries)
        std::cout << e.m << "," << e.value.p() << "," << e.value.q() << ","
                  << e.value.d() << "," << e.value.r() << "," << e.decimal
                  << "\n";
    }
    return 0;
  }
  throw std::invalid_argument("markoff: unknown action '" + action + "'");
}

// ------------------------------------------------------------- below-third

int cmd_below_third(const std::string& ns_text, const Options& opt) {
  const std::vector<long> ns = parse_long_list(ns_text);
  const BelowThirdResult res = below_third_value(ns);
  const Chain chain = construct_R(ns);
  if (opt.format == Format::Plain) {
    std::cout << "chain: " << chain.str() << "\n"
              << "z: " << rat_str(res.z) << "\n"
              << "gap: " << rat_str(res.epsilon_bound) << "\n"
              << "in_window: " << (res.in_window ? "true" : "false") << "\n"
              << "section_formula_applies: "
              << (res.section_formula_applies ? "true" : "false") << "\n";
  } else if (opt.format == Format::Json) {
    emit(json{{"command", "below_third"},
              {"ns", ns},
              {"chain", chain.str()},
              {"z", rat_str(res.z)},
              {"gap", rat_str(res.epsilon_bound)},
              {"in_window", res.in_window},
              {"section_formula_applies", res.section_formula_applies}});
  } else {
    std::cout << "ns,chain,z,gap,in_window,section_formula_applies\n";
    for (std::size_t i = 0; i < ns.size(); ++i)
      std::cout << (i ? ";" : "") << ns[i];
    std::cout << "," << csv_quote(chain.str()) << "," << rat_str(res.z) << ","
              << rat_str(res.epsilon_bound) << ","
              << (res.in_window ? "true" : "false") << ","
              << (res.section_formula_applies ? "true" : "false") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Zaremba spectrum computations"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--digits may follow the subcommand

  Options opt;
  std::string format = "plain";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--digits", opt.digits, "decimal digits for surds")
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000}))
      ->capture_default_str();

  std::string fraction, chain_literal, chain_action, word, nielsen_action,
      markoff_action, ns_text;
  std::string threshold = "1/3", mode = "verify";
  long bound = 0, k = 1, markoff_max = 0;

  CLI::App* compute = app.add_subcommand("compute", "Z of a reduced fraction");
  compute->add_option("fraction", fraction, "reduced a/b in (0,1)")
      ->required();

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "spectrum values above a threshold");
  spectrum->add_option("--bound", bound, "witness denominator bound")
      ->required();
  spectrum->add_option("--threshold", threshold, "cutoff value (brute mode)")
      ->capture_default_str();
  spectrum->add_option("--mode", mode, "brute|classified|verify")
      ->check(CLI::IsMember({"brute", "classified", "verify"}))
      ->capture_default_str();

  CLI::App* chain = app.add_subcommand("chain", "inspect a chain literal");
  chain->add_option("literal", chain_literal, "chain, e.g. [0;1,1,2,2,1,1]")
      ->required();
  chain->add_option("action", chain_action, "check|zeta|canonical")
      ->required();

  CLI::App* nielsen =
      app.add_subcommand("nielsen", "Nielsen word family computations");
  nielsen->add_option("word", word, "word over U and V (may be empty)")
      ->required();
  nielsen->add_option("--k", k, "family index")->capture_default_str();
  nielsen->add_option("action", nielsen_action, "build|zeta|limit|triple")
      ->required();

  CLI::App* markoff =
      app.add_subcommand("markoff", "Markoff triples and limit points");
  markoff->add_option("--max", markoff_max, "largest coordinate")->required();
  markoff->add_option("action", markoff_action, "tree|limits")->required();

  CLI::App* below =
      app.add_subcommand("below-third", "points just below one third");
  below->add_option("ns", ns_text, "comma list n1,n2,...")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  opt.format = format == "json" ? Format::Json
               : format == "csv" ? Format::Csv
                                 : Format::Plain;
  try {
    if (compute->parsed()) return cmd_compute(fraction, opt);
    if (spectrum->parsed()) return cmd_spectrum(bound, threshold, mode, opt);
    if (chain->parsed()) return cmd_chain(chain_literal, chain_action, opt);
    if (nielsen->parsed()) return cmd_nielsen(word, k, nielsen_action, opt);
    if (markoff->parsed()) return cmd_markoff(markoff_max, markoff_action, opt);
    if (below->parsed()) return cmd_below_third(ns_text, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
