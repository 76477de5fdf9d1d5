#include "superdop/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <regex>
#include <sstream>

#include "superdop/clifford.hpp"
#include "superdop/format.hpp"
#include "superdop/random.hpp"
#include "superdop/session.hpp"

namespace superdop {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Result {
  std::string label;
  std::string text;
  json record;
};

struct Verdict {
  std::string name;
  bool passed = true;
  unsigned checked = 0;
  std::string witness;
};

struct Report {
  std::vector<Result> results;
  std::vector<Verdict> verdicts;
};

json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json rational(const Rational& r) { return {{"num", integer(r.get_num())}, {"den", integer(r.get_den())}}; }

json odd_slots(OddMask m) {
  json out = json::array();
  for (unsigned s = 0; s < 32; ++s) {
    if (m & (OddMask{1} << s)) out.push_back(s + 1);
  }
  return out;
}

json function_terms(const Superfunction& f) {
  json out = json::array();
  for (const auto& [index, c] : f.terms()) {
    json t = {{"alpha", index.powers}, {"beta", odd_slots(index.odd)}};
    t.update(rational(c));
    out.push_back(std::move(t));
  }
  return out;
}

json record(const std::string& kind, const Chart& chart, json terms) {
  return {{"kind", kind}, {"chart", chart.to_string()}, {"terms", std::move(terms)}};
}

json to_json(const Superfunction& f) { return record("function", f.chart(), function_terms(f)); }

json to_json(const SuperVectorField& x) {
  const Chart& chart = x.chart();
  json terms = json::array();
  for (std::size_t k = 0; k < chart.dimension(); ++k) {
    std::vector<unsigned> d_alpha(chart.even_count(), 0U);
    json d_beta = json::array();
    if (chart.is_odd(k)) {
      d_beta.push_back(chart.odd_slot(k) + 1);
    } else {
      d_alpha[k] = 1;
    }
    for (auto t : function_terms(x.coefficient(k))) {
      t["d_alpha"] = d_alpha;
      t["d_beta"] = d_beta;
      terms.push_back(std::move(t));
    }
  }
  return record("field", chart, std::move(terms));
}

json to_json(const SuperDiffOp& d) {
  json terms = json::array();
  for (const auto& [word, c] : d.terms()) {
    for (auto t : function_terms(c)) {
      t["d_alpha"] = word.powers;
      t["d_beta"] = odd_slots(word.odd);
      terms.push_back(std::move(t));
    }
  }
  return record("operator", d.chart(), std::move(terms));
}

json to_json(const SuperOneForm& omega) {
  const Chart& chart = omega.chart();
  json terms = json::array();
  for (std::size_t k = 0; k < chart.dimension(); ++k) {
    for (auto t : function_terms(omega.components()[k])) {
      t["du"] = chart.name(k);
      terms.push_back(std::move(t));
    }
  }
  return record("form", chart, std::move(terms));
}

json to_json(const D1Element& e) {
  return {{"kind", "d1"}, {"chart", e.chart().to_string()}, {"scalar", to_json(e.scalar)}, {"field", to_json(e.field)}};
}

json to_json(const GeneralizedDivergence& g) {
  return {{"kind", "gdiv"}, {"chart", g.chart().to_string()}, {"a", rational(g.a())}, {"omega", to_json(g.omega())}};
}

json to_json(const BerezinianSection& s) { return record("berezinian", s.chart(), function_terms(s.rho())); }

json to_json(const FockMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m.at(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return {{"kind", "matrix"}, {"q", m.q()}, {"rows", std::move(rows)}};
}

template <class T>
Result result(std::string label, const T& x) {
  return {std::move(label), format(x), to_json(x)};
}

Result text_result(std::string label, std::string text) {
  json r = {{"kind", "text"}, {"value", text}};
  return {std::move(label), std::move(text), std::move(r)};
}

std::string gdiv_summary(const GeneralizedDivergence& g) {
  return "(a=" + format(g.a()) + ", omega=" + format(g.omega()) + ")";
}

Chart chart_option(const std::string& spec) {
  static const std::regex dims(R"(\s*(\d+)\s*\|\s*(\d+)\s*)");
  std::smatch m;
  if (std::regex_match(spec, m, dims)) return Chart::standard(std::stoul(m[1]), std::stoul(m[2]));
  return parse_chart(spec);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read session file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Command {
 public:
  Command(Session& session, std::vector<std::string> operands, unsigned trials, std::uint64_t seed)
      : session_(session), operands_(std::move(operands)), trials_(trials), seed_(seed) {}

  Report run(const std::string& name) {
    static const std::map<std::string, void (Command::*)()> table{
        {"nf", &Command::nf},
        {"order", &Command::order},
        {"bracket", &Command::bracket_cmd},
        {"split", &Command::split},
        {"grade", &Command::grade},
        {"decompose", &Command::decompose},
        {"div", &Command::div},
        {"cocycle-check", &Command::cocycle_check},
        {"cocycle-classify", &Command::cocycle_classify},
        {"coboundary", &Command::coboundary},
        {"berezinian-div", &Command::berezinian_div},
        {"transform", &Command::transform},
        {"auto-check", &Command::auto_check},
        {"exceptional", &Command::exceptional},
        {"clifford-rep", &Command::clifford_rep},
        {"clifford-span", &Command::clifford_span},
        {"swap", &Command::swap},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw UsageError("unknown command '" + name + "'");
    name_ = name;
    (this->*(it->second))();
    return std::move(report_);
  }

 private:
  void arity(std::size_t lo, std::size_t hi) const {
    if (operands_.size() < lo || operands_.size() > hi) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      throw UsageError(name_ + " takes " + want + " operand(s), got " + std::to_string(operands_.size()));
    }
  }

  Value operand(std::size_t i) const { return evaluate(session_, operands_.at(i)); }

  template <class T>
  T operand_as(std::size_t i, const char* what) const {
    const Value v = operand(i);
    if (const auto* x = std::get_if<T>(&v)) return *x;
    throw BindingError(name_ + ": operand " + std::to_string(i + 1) + " must be a " + what + ", got a " + kind_name(v));
  }

  void add(Result r) { report_.results.push_back(std::move(r)); }
  void verdict(std::string name, bool passed, unsigned checked, std::string witness = {}) {
    report_.verdicts.push_back({std::move(name), passed, checked, std::move(witness)});
  }

  const Chart& chart() const {
    if (!session_.chart()) throw BindingError(name_ + ": no chart declared");
    return *session_.chart();
  }

  void nf() {
    arity(1, 1);
    add(result("", as_operator(operand(0))));
  }

  void order() {
    arity(1, 1);
    const int n = as_operator(operand(0)).order();
    add({"", std::to_string(n), json{{"kind", "integer"}, {"value", n}}});
  }

  void bracket_cmd() {
    arity(2, 2);
    add(result("", scommutator(as_operator(operand(0)), as_operator(operand(1)))));
  }

  void split() {
    arity(1, 1);
    const D1Element e = split_d1(as_operator(operand(0)));
    add(result("scalar", e.scalar));
    add(result("field", e.field));
  }

  void grade() {
    arity(1, 1);
    const SuperVectorField x = as_field(operand(0));
    SuperVectorField sum(x.chart());
    for (const auto& [k, part] : z_grading_decompose(x)) {
      add(result(std::to_string(k), part));
      sum += part;
    }
    verdict("resum", sum == x, 1, sum == x ? "" : "components sum to " + format(sum));
  }

  void decompose() {
    arity(1, 1);
    const SuperVectorField x = as_field(operand(0));
    SuperVectorField sum(x.chart());
    const auto pairs = commutator_decompose(x);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& [xi, yi] = pairs[i];
      json r = {{"kind", "pair"}, {"x", to_json(xi)}, {"y", to_json(yi)}};
      add({std::to_string(i + 1), "[" + format(xi) + ", " + format(yi) + "]", std::move(r)});
      sum += bracket(xi, yi);
    }
    verdict("resum", sum == x, static_cast<unsigned>(pairs.size()), sum == x ? "" : "brackets sum to " + format(sum));
  }

  void div() {
    arity(1, 2);
    const SuperVectorField x = as_field(operand(0));
    if (operands_.size() == 1) {
      add(result("", candiv(x)));
      return;
    }
    const Value g = operand(1);
    if (const auto* gd = std::get_if<GeneralizedDivergence>(&g)) {
      add(result("", apply_gd(*gd, x)));
    } else if (const auto* s = std::get_if<BerezinianSection>(&g)) {
      add(result("", div_from_berezinian(*s, x)));
    } else {
      throw BindingError("div: operand 2 must be a gdiv or a berezinian, got a " + kind_name(g));
    }
  }

  void cocycle_check() {
    if (operands_.size() != 1 && operands_.size() != 3) throw UsageError("cocycle-check takes 1 or 3 operands");
    const auto g = operand_as<GeneralizedDivergence>(0, "gdiv");
    auto witness = [](const SuperVectorField& x, const SuperVectorField& y) {
      return "X = " + format(x) + ", Y = " + format(y);
    };
    if (operands_.size() == 3) {
      const SuperVectorField x = as_field(operand(1));
      const SuperVectorField y = as_field(operand(2));
      const bool ok = verify_cocycle(g, x, y);
      verdict("cocycle", ok, 1, ok ? "" : witness(x, y));
      return;
    }
    RandomSource rng(seed_);
    Verdict cocycle{"cocycle", true, 0, {}};
    Verdict law{"gdiv-law", true, 0, {}};
    for (unsigned i = 0; i < trials_; ++i) {
      const SuperVectorField x = rng.field(g.chart(), rng.parity());
      const SuperVectorField y = rng.field(g.chart(), rng.parity());
      const Superfunction f = rng.function(g.chart(), rng.parity());
      ++cocycle.checked;
      if (cocycle.passed && !verify_cocycle(g, x, y)) {
        cocycle.passed = false;
        cocycle.witness = witness(x, y);
      }
      ++law.checked;
      if (law.passed && !verify_gdiv_law(g, x, f)) {
        law.passed = false;
        law.witness = "X = " + format(x) + ", f = " + format(f);
      }
    }
    report_.verdicts.push_back(cocycle);
    report_.verdicts.push_back(law);
  }

  FieldFunctional functional(const Value& v) const {
    if (const auto* g = std::get_if<GeneralizedDivergence>(&v)) {
      return [g = *g](const SuperVectorField& x) { return apply_gd(g, x); };
    }
    if (const auto* s = std::get_if<BerezinianSection>(&v)) {
      return [s = *s](const SuperVectorField& x) { return div_from_berezinian(s, x); };
    }
    if (const auto* f = std::get_if<Superfunction>(&v)) {
      return [f = *f](const SuperVectorField& x) { return apply(x.to_operator(), f); };
    }
    throw BindingError(name_ + ": expected a gdiv, berezinian or function, got a " + kind_name(v));
  }

  void cocycle_classify() {
    arity(1, 1);
    const Value v = operand(0);
    const Chart c = std::visit([](const auto& x) -> Chart {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, ChartMorphism>) {
        return x.source();
      } else {
        return x.chart();
      }
    }, v);
    ClassifyOptions options;
    options.seed = seed_;
    const GeneralizedDivergence g = classify_cocycle(c, functional(v), options);
    add({"", gdiv_summary(g), to_json(g)});
  }

  void coboundary() {
    arity(1, 1);
    const auto g = operand_as<GeneralizedDivergence>(0, "gdiv");
    if (const auto f = is_coboundary(g)) {
      add(result("", *f));
    } else {
      add(text_result("", "none"));
    }
  }

  void berezinian_div() {
    arity(2, 2);
    const auto s = operand_as<BerezinianSection>(0, "berezinian");
    add(result("", div_from_berezinian(s, as_field(operand(1)))));
  }

  void transform() {
    arity(2, 2);
    const auto s = operand_as<BerezinianSection>(0, "berezinian");
    const auto phi = operand_as<ChartMorphism>(1, "morphism");
    add(result("", berezinian_transform(s, phi)));
  }

  void auto_check() {
    arity(1, 1);
    const auto a = operand_as<D1Automorphism>(0, "d1auto");
    const AutomorphismReport r = verify_d1_automorphism(a, trials_, seed_);
    verdict("automorphism", r.passed, r.pairs_checked, r.witness);
  }

  Chart exceptional_chart(std::size_t p, std::size_t q) const {
    if (session_.chart() && session_.chart()->even_count() == p && session_.chart()->odd_count() == q) {
      return *session_.chart();
    }
    return Chart::standard(p, q);
  }

  template <class T, class Map>
  void bracket_table(const std::vector<T>& basis, const Map& map, Verdict& v) {
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        ++v.checked;
        if (!v.passed) continue;
        if (auto w = bracket_witness(map, a, b)) {
          v.passed = false;
          v.witness = *w;
        }
      }
    }
  }

  template <class T, class Map>
  void involution(const std::vector<T>& elements, const Map& map) {
    Verdict v{"involution", true, 0, {}};
    for (const auto& e : elements) {
      ++v.checked;
      if (v.passed && !(map(map(e)) == e)) {
        v.passed = false;
        v.witness = format(e) + " maps twice to " + format(map(map(e)));
      }
    }
    report_.verdicts.push_back(v);
  }

  void exceptional() {
    arity(1, 2);
    const std::string kind = operands_[0];
    if (kind != "0|1" && kind != "1|1" && kind != "0|2") {
      throw UsageError("exceptional: kind must be 0|1, 1|1 or 0|2");
    }
    if (operands_.size() == 2) {
      const Value e = operand(1);
      if (kind == "0|1") {
        add(result("", exceptional_0_1(split_d1(as_operator(e)))));
      } else if (kind == "1|1") {
        add(result("", exceptional_1_1(as_field(e))));
      } else {
        add(result("", exceptional_0_2(as_field(e))));
      }
      return;
    }
    Verdict brackets{"brackets", true, 0, {}};
    if (kind == "0|1") {
      const Chart c = exceptional_chart(0, 1);
      const auto probes = d1_probes(c);
      bracket_table(probes, D1Map(exceptional_0_1), brackets);
      report_.verdicts.push_back(brackets);
      const Superfunction xi = Superfunction::coordinate(c, 0);
      const D1Element image = exceptional_0_1(D1Element(xi, SuperVectorField(c)));
      add(result(format(xi), image));
      verdict("leaves-functions", !image.field.is_zero(), 1, image.field.is_zero() ? "xi stays a function" : "");
      involution(probes, exceptional_0_1);
      return;
    }
    const bool one_one = kind == "1|1";
    const Chart c = one_one ? exceptional_chart(1, 1) : exceptional_chart(0, 2);
    const FieldMap map = one_one ? FieldMap(exceptional_1_1) : FieldMap(exceptional_0_2);
    auto basis = field_basis(c, 2);
    bracket_table(basis, map, brackets);
    if (one_one) {
      RandomSource rng(seed_);
      for (unsigned i = 0; i < trials_; ++i) {
        const SuperVectorField x = rng.field(c, rng.parity());
        const SuperVectorField y = rng.field(c, rng.parity());
        basis.push_back(x);
        ++brackets.checked;
        if (!brackets.passed) continue;
        if (auto w = bracket_witness(map, x, y)) {
          brackets.passed = false;
          brackets.witness = *w;
        }
      }
    }
    report_.verdicts.push_back(brackets);
    involution(basis, map);
    const std::size_t last = c.dimension() - 1;
    SuperVectorField epsilon = SuperVectorField(c);
    if (one_one) {
      epsilon = left_mul(Superfunction::coordinate(c, last), SuperVectorField::partial(c, last));
    } else {
      for (std::size_t k = 0; k < c.dimension(); ++k) {
        epsilon += left_mul(Superfunction::coordinate(c, k), SuperVectorField::partial(c, k));
      }
    }
    const SuperVectorField image = map(epsilon);
    add(result(format(epsilon), image));
    verdict("negates-epsilon", image == -epsilon, 1, image == -epsilon ? "" : "image " + format(image));
  }

  void clifford_rep() {
    arity(1, 1);
    add(result("", rep(as_operator(operand(0)))));
  }

  void clifford_span() {
    arity(1, 1);
    unsigned q = 0;
    try {
      std::size_t used = 0;
      q = static_cast<unsigned>(std::stoul(operands_[0], &used));
      if (used != operands_[0].size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw UsageError("clifford-span: Q must be a nonnegative integer");
    }
    const bool spans = spans_full_endomorphisms(q);
    const std::size_t rank = endomorphism_rank(q);
    const std::size_t full = std::size_t{1} << (2 * q);
    const std::string text =
        std::string(spans ? "true" : "false") + " (rank " + std::to_string(rank) + " / " + std::to_string(full) + ")";
    add({"", text, json{{"kind", "span"}, {"spans", spans}, {"rank", rank}, {"full", full}}});
    verdict("spans", spans, 1, spans ? "" : "rank " + std::to_string(rank));
  }

  void swap() {
    arity(1, 1);
    add(result("", swap_automorphism(as_operator(operand(0)))));
  }

  Session& session_;
  std::vector<std::string> operands_;
  unsigned trials_;
  std::uint64_t seed_;
  std::string name_;
  Report report_;
};

void print(const std::string& command, const Report& report, bool as_json, std::ostream& out) {
  if (as_json) {
    json results = json::array();
    for (const auto& r : report.results) {
      json entry = r.record;
      if (!r.label.empty()) entry["label"] = r.label;
      results.push_back(std::move(entry));
    }
    json verdicts = json::array();
    for (const auto& v : report.verdicts) {
      verdicts.push_back({{"name", v.name}, {"passed", v.passed}, {"checked", v.checked}, {"witness", v.witness}});
    }
    out << json{{"command", command}, {"results", results}, {"verdicts", verdicts}}.dump(2) << "\n";
    return;
  }
  for (const auto& r : report.results) {
    if (!r.label.empty()) out << r.label << ": ";
    out << r.text << "\n";
  }
  for (const auto& v : report.verdicts) {
    if (v.passed) {
      out << "PASS " << v.name << " (" << v.checked << " checked)\n";
    } else {
      out << "FAIL " << v.name << ": " << v.witness << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact superdifferential operator calculus", "superdop"};
  std::string command;
  std::vector<std::string> operands;
  std::string session_file;
  std::string chart_spec;
  bool as_json = false;
  unsigned trials = 100;
  std::uint64_t seed = 1;
  app.add_option("command", command, "nf, order, bracket, split, grade, decompose, div, cocycle-check, "
                                     "cocycle-classify, coboundary, berezinian-div, transform, auto-check, "
                                     "exceptional, clifford-rep, clifford-span, swap")
      ->required();
  app.add_option("operands", operands, "declarations (NAME = EXPR) and operand expressions");
  app.add_option("--session", session_file, "file of newline-separated declarations");
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--trials", trials, "random instances for check commands")->capture_default_str();
  app.add_option("--seed", seed, "seed for random instances")->capture_default_str();
  app.add_option("--chart", chart_spec, "chart as (x | xi1, xi2) or p|q");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Session session;
    if (!chart_spec.empty()) session.declare_chart("M", chart_option(chart_spec));
    if (!session_file.empty()) load_declarations(session, read_file(session_file));
    std::vector<std::string> expressions;
    for (const auto& op : operands) {
      if (op.find('=') != std::string::npos) {
        load_declarations(session, op);
      } else {
        expressions.push_back(op);
      }
    }
    Command cmd(session, std::move(expressions), trials, seed);
    const Report report = cmd.run(command);
    print(command, report, as_json, out);
    for (const auto& v : report.verdicts) {
      if (!v.passed) return kExitVerdictFailed;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BindingError& e) {
    err << "binding error: " << e.what() << "\n";
    return kExitBinding;
  } catch (const ChartMismatch& e) {
    err << "chart mismatch: " << e.what() << "\n";
    return kExitChartMismatch;
  } catch (const ParityError& e) {
    err << "parity error: " << e.what() << "\n";
    return kExitParity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace superdop
