#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoidp/enumeration.hpp"
#include "monoidp/factorizations.hpp"
#include "monoidp/families.hpp"
#include "monoidp/gluing.hpp"
#include "monoidp/semigroups.hpp"

namespace monoidp::cli {

namespace {

using json = nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string const& s) {
  auto const first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto const last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Int parse_int(std::string const& token) {
  std::string const t = trim(token);
  Int value           = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw InputError("not an integer: '" + token + "'");
  }
  return value;
}

std::vector<std::string> split(std::string const& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

bool looks_affine(std::string const& text) {
  return text.find(';') != std::string::npos
         || trim(text).find_first_of(" \t") != std::string::npos;
}

json to_json(Factorization const& u) { return json(u.exponents); }

json to_json(PresentationPair const& p) {
  return json{{"first", to_json(p.first)},
              {"second", to_json(p.second)},
              {"element", p.element.size() == 1 ? json(p.element[0])
                                                : json(p.element)},
              {"indispensable", p.indispensable}};
}

json element_json(Vec const& v) {
  return v.size() == 1 ? json(v[0]) : json(v);
}

std::string element_text(Vec const& v) {
  return v.size() == 1 ? std::to_string(v[0]) : format_tuple(v);
}

std::string join(std::vector<std::string> const& parts,
                 std::string const& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_ints(std::vector<Int> const& v, std::string const& sep) {
  std::vector<std::string> parts;
  for (Int x : v) parts.push_back(std::to_string(x));
  return join(parts, sep);
}

std::string gens_text(NumericalSemigroup const& s) {
  return join_ints(s.minimal_generators(), ",");
}

std::string presentation_text(std::vector<PresentationPair> const& pairs) {
  std::string out;
  for (auto const& p : pairs) out += format_pair(p) + "\n";
  return out;
}

std::vector<std::size_t> parse_part(std::string const& text,
                                    std::size_t generator_count) {
  std::vector<std::size_t> out;
  for (auto const& token : split(text, ',')) {
    Int idx = parse_int(token);
    if (idx < 1 || static_cast<std::size_t>(idx) > generator_count) {
      throw InputError("part index " + token + " out of range 1.."
                       + std::to_string(generator_count));
    }
    out.push_back(static_cast<std::size_t>(idx - 1));
  }
  return out;
}

std::string part_text(std::vector<std::size_t> const& idx) {
  std::vector<std::string> parts;
  for (std::size_t i : idx) parts.push_back(std::to_string(i + 1));
  return "{" + join(parts, ",") + "}";
}

json part_json(std::vector<std::size_t> const& idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

json gluing_json(GluingDecomposition const& g) {
  return json{{"part1", part_json(g.part1)},
              {"part2", part_json(g.part2)},
              {"d", element_json(g.d)},
              {"u", to_json(g.u)},
              {"v", to_json(g.v)}};
}

std::string gluing_text(GluingDecomposition const& g) {
  return part_text(g.part1) + " | " + part_text(g.part2)
         + " d = " + element_text(g.d) + " u = " + format_tuple(g.u.exponents)
         + " v = " + format_tuple(g.v.exponents);
}

AffineSemigroup affine_input(std::string const& text) {
  if (looks_affine(text)) {
    auto gens = parse_affine(text);
    return AffineSemigroup(gens.front().size(), gens);
  }
  return AffineSemigroup(1, lift(parse_numerical(text)));
}

struct Output {
  std::string command;
  json input;
  json result;
  bool truncated = false;
  std::string text;
};

}  // namespace

std::vector<Int> parse_numerical(std::string const& text) {
  std::vector<Int> out;
  for (auto const& token : split(text, ',')) out.push_back(parse_int(token));
  if (out.empty()) throw InputError("no generators given");
  return out;
}

std::vector<Vec> parse_affine(std::string const& text) {
  std::vector<Vec> out;
  for (auto const& row : split(text, ';')) {
    std::istringstream in(row);
    Vec v;
    std::string token;
    while (in >> token) v.push_back(parse_int(token));
    if (v.empty()) throw InputError("empty generator vector");
    if (!out.empty() && v.size() != out.front().size()) {
      throw InputError("generator vectors differ in length");
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) throw InputError("no generators given");
  return out;
}

std::string format_tuple(std::vector<Int> const& v) {
  return "(" + join_ints(v, ",") + ")";
}

std::string format_pair(PresentationPair const& p) {
  std::string out = format_tuple(p.first.exponents) + " "
                    + format_tuple(p.second.exponents) + " @"
                    + element_text(p.element);
  if (p.indispensable) out += " indispensable";
  return out;
}

std::vector<PresentationPair> parse_pairs(std::string const& text) {
  std::vector<PresentationPair> out;
  std::string const body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json doc;
    try {
      doc = json::parse(body);
    } catch (json::exception const& e) {
      throw InputError(std::string("malformed presentation JSON: ") + e.what());
    }
    json const& pairs = doc.contains("result") ? doc["result"] : doc;
    for (auto const& p : pairs) {
      PresentationPair pair{
          Factorization{p.at("first").get<std::vector<Int>>()},
          Factorization{p.at("second").get<std::vector<Int>>()},
          {},
          p.value("indispensable", false)};
      out.push_back(std::move(pair));
    }
    return out;
  }
  std::regex const tuple(R"(\(([^()]*)\))");
  for (auto const& line : split(text, '\n')) {
    if (trim(line).empty()) continue;
    std::vector<Factorization> found;
    for (auto it = std::sregex_iterator(line.begin(), line.end(), tuple);
         it != std::sregex_iterator() && found.size() < 2; ++it) {
      found.push_back(Factorization{parse_numerical((*it)[1].str())});
    }
    if (found.size() != 2) {
      throw InputError("expected two tuples per line: '" + line + "'");
    }
    out.push_back(PresentationPair{found[0], found[1], {}, false});
  }
  return out;
}

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti elements, minimal presentations and gluings of "
               "numerical and affine semigroups",
               "monoidp"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Emit one JSON document")
      ->configurable(false);
  app.fallthrough();

  std::function<Output()> action;
  std::string gens;
  Int element = 0;
  Int bound   = -1;

  auto add_gens = [&](CLI::App* sub, std::string const& help) {
    sub->add_option("gens", gens, help)->required();
  };
  char const* numerical_help = "Generators, e.g. 4,6,21";
  char const* any_help = "Generators: 4,6,21 or affine rows \"2 0;0 3;2 1\"";

  // betti
  auto* betti = app.add_subcommand("betti", "Betti elements");
  add_gens(betti, any_help);
  betti->add_option("--degree-bound", bound,
                    "Coordinate-sum bound (affine input only)");
  betti->callback([&] {
    action = [&] {
      Output o{"betti", {{"gens", gens}}, {}, false, {}};
      if (looks_affine(gens)) {
        if (bound < 0) throw InputError("affine input needs --degree-bound");
        auto s      = affine_input(gens);
        auto result = affine_betti_up_to(s, bound);
        o.input["degree_bound"] = bound;
        o.result                = json::array();
        std::vector<std::string> parts;
        for (auto const& b : result.elements) {
          o.result.push_back(b);
          parts.push_back(format_tuple(b));
        }
        o.truncated = result.truncated;
        o.text      = join(parts, " ") + "\n";
      } else {
        auto b   = betti_elements(NumericalSemigroup(parse_numerical(gens)));
        o.result = b;
        o.text   = join_ints(b, " ") + "\n";
      }
      return o;
    };
  });

  auto* betti_min = app.add_subcommand("betti-minimal", "Betti-minimal elements");
  add_gens(betti_min, numerical_help);
  betti_min->callback([&] {
    action = [&] {
      auto b = betti_minimal_elements(NumericalSemigroup(parse_numerical(gens)));
      return Output{"betti-minimal", {{"gens", gens}}, b, false,
                    join_ints(b, " ") + "\n"};
    };
  });

  auto* facts = app.add_subcommand("factorizations", "Factorizations of an element");
  add_gens(facts, numerical_help);
  facts->add_option("element", element, "Element")->required();
  facts->callback([&] {
    action = [&] {
      auto fs = factorizations(NumericalSemigroup(parse_numerical(gens)), element);
      json result = json::array();
      std::vector<std::string> parts;
      for (auto const& u : fs.factorizations()) {
        result.push_back(to_json(u));
        parts.push_back(format_tuple(u.exponents));
      }
      return Output{"factorizations", {{"gens", gens}, {"element", element}},
                    result, false, join(parts, " ") + "\n"};
    };
  });

  auto* rclasses = app.add_subcommand("rclasses", "R-classes of the factorizations of an element");
  add_gens(rclasses, numerical_help);
  rclasses->add_option("element", element, "Element")->required();
  rclasses->callback([&] {
    action = [&] {
      auto fs   = factorizations(NumericalSemigroup(parse_numerical(gens)), element);
      auto part = r_classes(fs);
      json result = json::array();
      std::string text;
      for (auto const& c : part.classes) {
        json members = json::array();
        std::vector<std::string> parts;
        for (std::size_t k : c.members) {
          members.push_back(to_json(fs[k]));
          parts.push_back(format_tuple(fs[k].exponents));
        }
        result.push_back(members);
        text += "{" + join(parts, " ") + "}\n";
      }
      return Output{"rclasses", {{"gens", gens}, {"element", element}},
                    result, false, text};
    };
  });

  std::string topology = "star";
  auto* minpres = app.add_subcommand("minpres", "A minimal presentation");
  add_gens(minpres, any_help);
  minpres->add_option("--topology", topology, "star or path")
      ->check(CLI::IsMember({"star", "path"}));
  minpres->add_option("--degree-bound", bound,
                      "Coordinate-sum bound (affine input only)");
  minpres->callback([&] {
    action = [&] {
      Topology const t = topology == "path" ? Topology::Path : Topology::Star;
      Output o{"minpres", {{"gens", gens}, {"topology", topology}}, {}, false, {}};
      Presentation pres;
      if (looks_affine(gens)) {
        if (bound < 0) throw InputError("affine input needs --degree-bound");
        auto bounded = affine_minimal_presentation(affine_input(gens), bound, t);
        o.input["degree_bound"] = bound;
        o.truncated             = bounded.truncated;
        pres                    = std::move(bounded.presentation);
      } else {
        pres = minimal_presentation(NumericalSemigroup(parse_numerical(gens)), t);
      }
      o.result = json::array();
      for (auto const& p : pres.pairs) o.result.push_back(to_json(p));
      o.text = presentation_text(pres.pairs);
      return o;
    };
  });

  auto* unique = app.add_subcommand("unique", "Whether the minimal presentation is unique");
  add_gens(unique, any_help);
  unique->add_option("--degree-bound", bound,
                     "Coordinate-sum bound (affine input only)");
  unique->callback([&] {
    action = [&] {
      Output o{"unique", {{"gens", gens}}, {}, false, {}};
      UniquenessAnswer answer;
      if (looks_affine(gens)) {
        if (bound < 0) throw InputError("affine input needs --degree-bound");
        auto bounded = affine_is_uniquely_presented(affine_input(gens), bound);
        o.input["degree_bound"] = bound;
        o.truncated             = bounded.truncated;
        answer                  = bounded.uniqueness;
      } else {
        answer = is_uniquely_presented(NumericalSemigroup(parse_numerical(gens)));
      }
      o.result = json{{"answer", answer.answer}, {"witness", nullptr}};
      if (answer.answer) {
        o.text = "yes\n";
      } else {
        auto const& w        = *answer.witness;
        o.result["witness"] = json{{"element", element_json(w.element)},
                                   {"factorization_count", w.factorization_count},
                                   {"r_class_count", w.r_class_count}};
        o.text = "no (witness: " + element_text(w.element) + " has "
                 + std::to_string(w.factorization_count) + " factorizations)\n";
      }
      return o;
    };
  });

  auto* indisp = app.add_subcommand("indispensable", "Indispensable presentation pairs");
  add_gens(indisp, numerical_help);
  indisp->callback([&] {
    action = [&] {
      auto pres = minimal_presentation(NumericalSemigroup(parse_numerical(gens)));
      std::vector<PresentationPair> kept;
      for (auto const& p : pres.pairs) {
        if (p.indispensable) kept.push_back(p);
      }
      json result = json::array();
      for (auto const& p : kept) result.push_back(to_json(p));
      return Output{"indispensable", {{"gens", gens}}, result, false,
                    presentation_text(kept)};
    };
  });

  std::string pairs_file = "-";
  auto* verify = app.add_subcommand("verify", "Check that pairs generate the kernel congruence");
  add_gens(verify, numerical_help);
  verify->add_option("--bound", bound, "Window bound, at least F + 2 max(gens)")
      ->required();
  verify->add_option("--pairs", pairs_file,
                     "File with minpres output, '-' for standard input");
  verify->callback([&] {
    action = [&] {
      std::string text;
      if (pairs_file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream file(pairs_file);
        if (!file) throw InputError("cannot read " + pairs_file);
        text.assign(std::istreambuf_iterator<char>(file), {});
      }
      NumericalSemigroup s(parse_numerical(gens));
      Presentation pres{lift(s.minimal_generators()), parse_pairs(text)};
      bool ok = verify_presentation(s, pres, bound);
      return Output{"verify", {{"gens", gens}, {"bound", bound}}, ok, false,
                    ok ? "true\n" : "false\n"};
    };
  });

  Int frobenius    = 0;
  bool count_flag  = false;
  bool unique_flag = false;
  bool list_flag   = false;
  bool sequence    = false;
  auto* enumerate  = app.add_subcommand("enum", "Numerical semigroups by Frobenius number");
  enumerate->add_option("--frobenius", frobenius, "Frobenius number")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--count", count_flag, "Print how many there are");
  enumerate->add_flag("--unique", unique_flag, "Also count (or only list) uniquely presented ones");
  enumerate->add_flag("--list", list_flag, "List generators, one semigroup per line");
  enumerate->add_flag("--sequence", sequence,
                      "Print both counts for every Frobenius number 1..F");
  enumerate->callback([&] {
    action = [&] {
      Output o{"enum", {{"frobenius", frobenius}}, json::object(), false, {}};
      unsigned const threads = threads_from_environment();
      if (sequence) {
        auto counts = count_by_frobenius(frobenius, threads);
        o.result    = json{{"totals", counts.totals},
                           {"uniquely_presented", counts.uniquely_presented}};
        std::vector<std::string> a, b;
        for (auto x : counts.totals) a.push_back(std::to_string(x));
        for (auto x : counts.uniquely_presented) b.push_back(std::to_string(x));
        o.text = join(a, " ") + "\n" + join(b, " ") + "\n";
        return o;
      }
      auto all = semigroups_with_frobenius(frobenius);
      std::vector<bool> up;
      if (unique_flag) {
        for (auto const& s : all) up.push_back(is_uniquely_presented(s).answer);
      }
      if (list_flag) {
        json listed = json::array();
        for (std::size_t k = 0; k < all.size(); ++k) {
          if (unique_flag && !up[k]) continue;
          listed.push_back(all[k].minimal_generators());
          o.text += gens_text(all[k]) + "\n";
        }
        o.result["semigroups"] = listed;
      }
      if (count_flag || !list_flag) {
        o.result["count"] = all.size();
        std::string line  = std::to_string(all.size());
        if (unique_flag) {
          auto n = static_cast<std::size_t>(std::count(up.begin(), up.end(), true));
          o.result["uniquely_presented"] = n;
          line += " " + std::to_string(n);
        }
        o.text += line + "\n";
      }
      return o;
    };
  });

  std::string part;
  auto* glue_check = app.add_subcommand("glue-check", "Test one partition of the generators for a gluing");
  glue_check->add_option("--gens", gens, any_help)->required();
  glue_check->add_option("--part", part, "1-based generator indices of the first part, e.g. 1,2,3")
      ->required();
  glue_check->callback([&] {
    action = [&] {
      auto s = affine_input(gens);
      auto g = check_gluing(s, parse_part(part, s.size()));
      Output o{"glue-check", {{"gens", gens}, {"part", part}}, nullptr, false, {}};
      if (g) {
        o.result = gluing_json(*g);
        o.text   = gluing_text(*g) + "\n";
      } else {
        o.text = "not a gluing\n";
      }
      return o;
    };
  });

  auto* glue_find = app.add_subcommand("glue-find", "All gluing decompositions");
  glue_find->add_option("--gens,gens", gens, any_help)->required();
  glue_find->callback([&] {
    action = [&] {
      auto found  = find_gluings(affine_input(gens));
      json result = json::array();
      std::string text;
      for (auto const& g : found) {
        result.push_back(gluing_json(g));
        text += gluing_text(g) + "\n";
      }
      return Output{"glue-find", {{"gens", gens}}, result, false, text};
    };
  });

  Int lambda = 0;
  Int mu     = 0;
  auto* glue_num = app.add_subcommand("glue-num", "Glue lambda*S with <mu>");
  add_gens(glue_num, numerical_help);
  glue_num->add_option("--lambda", lambda, "Scaling factor, at least 2")->required();
  glue_num->add_option("--mu", mu, "Non-generator element of S coprime to lambda")
      ->required();
  glue_num->callback([&] {
    action = [&] {
      auto glued = glue_numerical(NumericalSemigroup(parse_numerical(gens)),
                                  lambda, mu);
      return Output{
          "glue-num",
          {{"gens", gens}, {"lambda", lambda}, {"mu", mu}},
          json{{"gens", glued.semigroup.minimal_generators()},
               {"d", glued.decomposition.d[0]}},
          false,
          gens_text(glued.semigroup) + " d = "
              + std::to_string(glued.decomposition.d[0]) + "\n"};
    };
  });

  auto* family = app.add_subcommand("family", "Closed forms for special families");
  family->require_subcommand(1);

  Int fa = 0, fx = 0;
  auto* interval = family->add_subcommand("interval", "<a, a+1, ..., a+x>");
  interval->add_option("a", fa)->required();
  interval->add_option("x", fx)->required();
  interval->callback([&] {
    action = [&] {
      IntervalParams p{fa, fx};
      auto s      = interval_semigroup(p);
      bool up     = interval_uniquely_presented(p);
      json result = {{"gens", s.minimal_generators()}, {"uniquely_presented", up}};
      std::string text = "gens " + gens_text(s) + "\nuniquely_presented "
                         + (up ? "yes" : "no") + "\n";
      if (fx == 2 || fx == 3) {
        auto cf                     = interval_betti_closed_form(p);
        result["betti"]             = cf.elements;
        result["betti_lower_bound"] = cf.lower_bound_only;
        text += "betti " + join_ints(cf.elements, " ")
                + (cf.lower_bound_only ? " (partial)" : "") + "\n";
      }
      return Output{"family interval", {{"a", fa}, {"x", fx}}, result, false, text};
    };
  });

  std::vector<Int> ed3_args;
  auto* ed3 = family->add_subcommand("ed3", "<a m1, a m2, b m1 + c m2>");
  ed3->add_option("params", ed3_args, "m1 m2 a b c")->required()->expected(5);
  ed3->callback([&] {
    action = [&] {
      ED3SymmetricParams p{ed3_args[0], ed3_args[1], ed3_args[2], ed3_args[3],
                           ed3_args[4]};
      auto s     = ed3_symmetric(p);
      auto betti = ed3_symmetric_betti(p);
      bool up    = ed3_symmetric_uniquely_presented(p);
      return Output{
          "family ed3",
          {{"m1", p.m1}, {"m2", p.m2}, {"a", p.a}, {"b", p.b}, {"c", p.c}},
          json{{"gens", s.minimal_generators()},
               {"symmetric", is_symmetric(s)},
               {"betti", betti},
               {"uniquely_presented", up}},
          false,
          "gens " + gens_text(s) + "\nsymmetric "
              + (is_symmetric(s) ? "yes" : "no") + "\nbetti "
              + join_ints(betti, " ") + "\nuniquely_presented "
              + (up ? "yes" : "no") + "\n"};
    };
  });

  auto* med = family->add_subcommand("med", "Maximal embedding dimension");
  add_gens(med, numerical_help);
  med->callback([&] {
    action = [&] {
      NumericalSemigroup s(parse_numerical(gens));
      auto betti = med_betti_closed_form(s);
      bool up    = med_uniquely_presented(s);
      return Output{"family med", {{"gens", gens}},
                    json{{"betti", betti}, {"uniquely_presented", up}}, false,
                    "betti " + join_ints(betti, " ") + "\nuniquely_presented "
                        + (up ? "yes" : "no") + "\n"};
    };
  });

  int step     = 0;
  auto* telesc = family->add_subcommand("telescopic", "Doubling sequence S_i");
  telesc->add_option("i", step)->required();
  telesc->callback([&] {
    action = [&] {
      auto t      = telescopic_sequence(step);
      json result = {{"gens", t.semigroup.minimal_generators()},
                     {"betti", t.predicted_betti},
                     {"presentation", json::array()}};
      for (auto const& p : t.predicted_presentation.pairs) {
        result["presentation"].push_back(to_json(p));
      }
      return Output{"family telescopic", {{"i", step}}, result, false,
                    "gens " + gens_text(t.semigroup) + "\nbetti "
                        + join_ints(t.predicted_betti, " ") + "\n"
                        + presentation_text(t.predicted_presentation.pairs)};
    };
  });

  auto* inv = app.add_subcommand("invariants", "Classical invariants");
  add_gens(inv, numerical_help);
  inv->callback([&] {
    action = [&] {
      NumericalSemigroup s(parse_numerical(gens));
      auto i = invariants(s);
      return Output{
          "invariants",
          {{"gens", gens}},
          json{{"gens", s.minimal_generators()},
               {"multiplicity", i.multiplicity},
               {"embedding_dimension", i.embedding_dimension},
               {"frobenius", i.frobenius},
               {"genus", i.genus},
               {"symmetric", is_symmetric(s)},
               {"med", is_med(s)}},
          false,
          "gens " + gens_text(s) + "\nmultiplicity "
              + std::to_string(i.multiplicity) + "\nembedding_dimension "
              + std::to_string(i.embedding_dimension) + "\nfrobenius "
              + std::to_string(i.frobenius) + "\ngenus "
              + std::to_string(i.genus) + "\nsymmetric "
              + (is_symmetric(s) ? "yes" : "no") + "\nmed "
              + (is_med(s) ? "yes" : "no") + "\n"};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    Output o = action();
    if (json_mode) {
      json doc{{"command", o.command},
               {"input", o.input},
               {"result", o.result},
               {"truncated", o.truncated}};
      out << doc.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return kOk;
  } catch (InputError const& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return e.is_input_error() ? kInvalidInput : kInternal;
  } catch (json::exception const& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace monoidp::cli
