#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "apsidon/apsidon.hpp"
#include "apsidon/json_io.hpp"

namespace {

using apsidon::json;
using apsidon::Rational;

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;  // mathematical negative or exhausted search
constexpr int kExitUsage = 2;     // malformed input, bad flags, internal faults

enum class Format { json_fmt, csv_fmt, text_fmt };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return std::move(out).str();
}

json load_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Rational parse_rational_arg(const std::string& s) {
  auto r = Rational::try_parse(s);
  if (!r) throw std::invalid_argument("malformed rational: \"" + s + "\"");
  return *r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

apsidon::FiniteSet parse_set_arg(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@')
    return apsidon::finite_set_from_json(load_json_file(spec.substr(1)));
  std::vector<Rational> elems;
  for (const std::string& tok : split(spec, ',')) elems.push_back(parse_rational_arg(tok));
  return apsidon::FiniteSet(std::move(elems));
}

apsidon::Mapping parse_mapping_arg(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@')
    return apsidon::mapping_from_json(load_json_file(spec.substr(1)));
  auto m = apsidon::parse_mapping_spec(spec);
  if (!m)
    throw std::invalid_argument(
        "malformed mapping \"" + spec +
        "\" (expected affine:A,B | poly:C0,C1,... | cantor | @file.json)");
  return *m;
}

apsidon::Box parse_box_arg(const std::string& spec) {
  const auto parts = split(spec, ',');
  if (parts.size() != 4) throw std::invalid_argument("box needs four rationals \"x0,x1,y0,y1\"");
  apsidon::Box box{parse_rational_arg(parts[0]), parse_rational_arg(parts[1]),
                   parse_rational_arg(parts[2]), parse_rational_arg(parts[3])};
  if (box.x_hi < box.x_lo || box.y_hi < box.y_lo)
    throw std::invalid_argument("box intervals must satisfy x0 <= x1 and y0 <= y1");
  return box;
}

apsidon::IntervalUnion parse_interval_union_arg(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@')
    return apsidon::interval_union_from_json(load_json_file(spec.substr(1)));
  if (spec.rfind("fat-cantor:", 0) == 0)
    return apsidon::fat_cantor(std::stoi(spec.substr(11)));
  if (spec.rfind("gap-probes:", 0) == 0)
    return apsidon::fat_cantor_gap_probes(std::stoi(spec.substr(11)));
  std::vector<apsidon::IntervalUnion::Interval> parts;
  for (const std::string& piece : split(spec, ';')) {
    const auto ends = split(piece, ',');
    if (ends.size() != 2)
      throw std::invalid_argument("interval union: each piece is \"lo,hi\", got \"" + piece + "\"");
    parts.emplace_back(parse_rational_arg(ends[0]), parse_rational_arg(ends[1]));
  }
  return apsidon::IntervalUnion(std::move(parts));
}

apsidon::Pattern parse_pattern_arg(const std::string& spec) {
  if (spec.rfind("alternating:", 0) == 0)
    return apsidon::Pattern::alternating(std::stoi(spec.substr(12)));
  std::vector<int> assignment;
  for (const std::string& tok : split(spec, ',')) assignment.push_back(std::stoi(tok));
  return apsidon::Pattern(std::move(assignment));
}

json quadruple_to_json(const apsidon::Quadruple& q) {
  return json{{"a", apsidon::rational_to_json(q.a)},
              {"b", apsidon::rational_to_json(q.b)},
              {"c", apsidon::rational_to_json(q.c)},
              {"d", apsidon::rational_to_json(q.d)}};
}

json rational_list_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(apsidon::rational_to_json(r));
  return out;
}

json box_to_json(const apsidon::Box& b) {
  return json::array({apsidon::rational_to_json(b.x_lo), apsidon::rational_to_json(b.x_hi),
                      apsidon::rational_to_json(b.y_lo), apsidon::rational_to_json(b.y_hi)});
}

// Options shared across subcommands; each subcommand registers only the ones
// it consumes. The seed falls back to APSIDON_SEED so scripted runs stay
// reproducible without editing command lines.
struct CommonOpts {
  std::uint64_t seed = 0;
  long budget = 2000;
  std::uint64_t denom_bound = 65536;
  int n_max = 6;
  int digits = 6;
  std::string box_spec;
  std::string format = "json";

  Format parsed_format() const {
    if (format == "json") return Format::json_fmt;
    if (format == "csv") return Format::csv_fmt;
    if (format == "text") return Format::text_fmt;
    throw std::invalid_argument("unknown format \"" + format + "\"");
  }
};

void add_seed(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "PRNG seed (64-bit)")->envname("APSIDON_SEED");
}
void add_budget(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--budget", o.budget, "candidate budget")->check(CLI::PositiveNumber);
}
void add_denom(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--denom-bound", o.denom_bound, "max denominator for sampled rationals")
      ->check(CLI::Range(static_cast<std::uint64_t>(2), static_cast<std::uint64_t>(1) << 62));
}
void add_box(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--box", o.box_spec, "search box \"x0,x1,y0,y1\" (rationals)");
}
void add_format(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}
void add_digits(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--digits", o.digits, "decimal places for rendered roots")
      ->check(CLI::Range(1, 64));
}

void emit(const json& j, const CommonOpts& o, const std::string& text) {
  switch (o.parsed_format()) {
    case Format::json_fmt:
      std::cout << j.dump(2) << "\n";
      return;
    case Format::text_fmt:
      std::cout << text;
      return;
    case Format::csv_fmt:
      throw std::invalid_argument("csv format is only available for the growth table");
  }
}

json config_echo(const CommonOpts& o, bool with_search_fields, const apsidon::Box* box = nullptr) {
  json cfg{{"format", o.format}};
  if (with_search_fields) {
    cfg["seed"] = o.seed;
    cfg["budget"] = o.budget;
    cfg["denom_bound"] = o.denom_bound;
    if (box != nullptr) cfg["box"] = box_to_json(*box);
  }
  return cfg;
}

// ---- subcommand bodies ----

int run_check_sidon(const std::string& set_spec, const CommonOpts& o) {
  const apsidon::FiniteSet s = parse_set_arg(set_spec);
  const auto witness = apsidon::sidon_witness(s);
  json out{{"size", s.size()}, {"sidon", !witness.has_value()}};
  out["witness"] = witness ? quadruple_to_json(*witness) : json(nullptr);
  out["config"] = config_echo(o, false);
  std::ostringstream text;
  text << "size " << s.size() << "\n" << (witness ? "sidon no" : "sidon yes") << "\n";
  if (witness)
    text << "witness " << witness->a.to_string() << " + " << witness->b.to_string() << " = "
         << witness->c.to_string() << " + " << witness->d.to_string() << "\n";
  emit(out, o, text.str());
  return witness ? kExitNegative : kExitSuccess;
}

int run_gamma(const std::string& set_spec, const CommonOpts& o) {
  const apsidon::FiniteSet s = parse_set_arg(set_spec);
  const apsidon::FiniteSet g = apsidon::forbidden_closure(s);
  json out{{"input_size", s.size()}, {"size", g.size()}, {"gamma", apsidon::finite_set_to_json(g)}};
  out["config"] = config_echo(o, false);
  std::ostringstream text;
  text << "input size " << s.size() << "\ngamma size " << g.size() << "\n";
  for (const Rational& r : g) text << r.to_string() << "\n";
  emit(out, o, text.str());
  return kExitSuccess;
}

int run_energy(const std::string& set_spec, const CommonOpts& o) {
  const apsidon::FiniteSet s = parse_set_arg(set_spec);
  const std::int64_t energy = apsidon::additive_energy(s);
  const std::int64_t bound = apsidon::sidon_energy_bound(static_cast<std::int64_t>(s.size()));
  json out{{"size", s.size()}, {"energy", energy}, {"sidon_bound", bound},
           {"sidon", energy == bound}};
  out["config"] = config_echo(o, false);
  std::ostringstream text;
  text << "size " << s.size() << "\nenergy " << energy << "\nsidon bound " << bound << "\n";
  emit(out, o, text.str());
  return kExitSuccess;
}

int run_bnorm(const std::string& input, const std::string& unit_set, const CommonOpts& o) {
  apsidon::EPolynomial p;
  if (!input.empty()) {
    p = apsidon::epolynomial_from_json(load_json_file(input));
  } else if (!unit_set.empty()) {
    p = apsidon::EPolynomial::unit_coefficients(parse_set_arg(unit_set));
  } else {
    throw std::invalid_argument("bnorm needs --input FILE or --unit-set LIST");
  }
  const Rational b2sq = apsidon::b2_norm_squared(p);
  const Rational b4p4 = apsidon::b4_norm_fourth(p);
  json out{{"terms", p.size()},
           {"b2_squared", apsidon::rational_to_json(b2sq)},
           {"b4_fourth", apsidon::rational_to_json(b4p4)},
           {"b2", apsidon::root_floor_decimal(b2sq, 2, o.digits)},
           {"b4", apsidon::root_floor_decimal(b4p4, 4, o.digits)}};
  out["config"] = config_echo(o, false);
  std::ostringstream text;
  text << "terms " << p.size() << "\nb2^2 " << b2sq.to_string() << "\nb4^4 " << b4p4.to_string()
       << "\nb2 " << apsidon::root_floor_decimal(b2sq, 2, o.digits) << "\nb4 "
       << apsidon::root_floor_decimal(b4p4, 4, o.digits) << "\n";
  emit(out, o, text.str());
  return kExitSuccess;
}

int run_growth(int n_max, const CommonOpts& o) {
  if (n_max < 1) throw std::invalid_argument("growth: --n-max >= 1 required");
  struct Row {
    long n;
    mpz_class gamma4_pow4;
    std::string ratio;
    mpz_class sidon_bound;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    const mpz_class e = apsidon::dirichlet_kernel_energy(n);
    // gamma4(n) / n^(3/4) = (e / n^3)^(1/4), rendered in decimal
    const Rational ratio(e, mpz_class(n) * n * n);
    rows.push_back(Row{n, e, apsidon::root_floor_decimal(ratio, 4, o.digits),
                       mpz_class(2) * n * n - n});
  }
  if (o.parsed_format() == Format::csv_fmt) {
    std::ostringstream csv;
    csv << "N,gamma4_pow4,ratio,sidon_bound\r\n";
    for (const Row& r : rows)
      csv << r.n << "," << r.gamma4_pow4.get_str() << "," << r.ratio << ","
          << r.sidon_bound.get_str() << "\r\n";
    std::cout << csv.str();
    return kExitSuccess;
  }
  json jrows = json::array();
  std::ostringstream text;
  text << "N gamma4_pow4 ratio sidon_bound\n";
  for (const Row& r : rows) {
    jrows.push_back(json{{"n", r.n},
                         {"gamma4_pow4", r.gamma4_pow4.get_str()},
                         {"ratio", r.ratio},
                         {"sidon_bound", r.sidon_bound.get_str()}});
    text << r.n << " " << r.gamma4_pow4.get_str() << " " << r.ratio << " "
         << r.sidon_bound.get_str() << "\n";
  }
  json out{{"rows", std::move(jrows)}};
  out["config"] = config_echo(o, false);
  out["config"]["digits"] = o.digits;
  out["config"]["n_max"] = n_max;
  emit(out, o, text.str());
  return kExitSuccess;
}

int run_find_progression(const std::string& phi_spec, int n, const std::string& forbidden_spec,
                         bool grid, const CommonOpts& o) {
  const apsidon::Mapping phi = parse_mapping_arg(phi_spec);
  apsidon::ConstraintSpec spec{n, parse_set_arg(forbidden_spec)};
  apsidon::SearchConfig cfg;
  cfg.budget = o.budget;
  cfg.seed = o.seed;
  cfg.denom_bound = o.denom_bound;
  if (!o.box_spec.empty()) cfg.box = parse_box_arg(o.box_spec);
  cfg.mode = grid ? apsidon::SampleMode::grid : apsidon::SampleMode::random;

  auto result = apsidon::find_progression(phi, spec, cfg);
  json cfg_json = config_echo(o, true, &cfg.box);
  cfg_json["n"] = n;
  cfg_json["mode"] = grid ? "grid" : "random";
  if (const auto* p = std::get_if<apsidon::Progression>(&result)) {
    json out{{"x", apsidon::rational_to_json(p->x())},
             {"y", apsidon::rational_to_json(p->y())},
             {"n", p->n()},
             {"terms", rational_list_to_json(p->terms())}};
    out["config"] = std::move(cfg_json);
    std::ostringstream text;
    text << "x " << p->x().to_string() << "\ny " << p->y().to_string() << "\n";
    emit(out, o, text.str());
    return kExitSuccess;
  }
  const auto& fail = std::get<apsidon::SearchFailure>(result);
  json out{{"failure", apsidon::search_failure_to_json(fail)}};
  out["config"] = std::move(cfg_json);
  std::ostringstream text;
  text << "search failed after " << fail.candidates_tried << " candidates\n";
  emit(out, o, text.str());
  return kExitNegative;
}

int run_build_chain(const std::string& phi_spec, const CommonOpts& o) {
  if (o.n_max < 4) throw std::invalid_argument("build-chain: --n-max >= 4 required");
  const apsidon::Mapping phi = parse_mapping_arg(phi_spec);
  apsidon::SearchConfig cfg;
  cfg.budget = o.budget;
  cfg.seed = o.seed;
  cfg.denom_bound = o.denom_bound;
  if (!o.box_spec.empty()) cfg.box = parse_box_arg(o.box_spec);

  const char* regime =
      phi.nonlinearity_class() == apsidon::NonlinearityClass::positive_measure
          ? "theorem"
          : (phi.nonlinearity_class() == apsidon::NonlinearityClass::nowhere_dense_null
                 ? "experimental (open question)"
                 : "outside-theorem");

  auto result = apsidon::build_chain(phi, o.n_max, cfg);
  json cfg_json = config_echo(o, true, &cfg.box);
  cfg_json["n_max"] = o.n_max;
  if (const auto* state = std::get_if<apsidon::ChainState>(&result)) {
    json out = apsidon::chain_state_to_json(phi, *state, o.seed);
    out["regime"] = regime;
    out["config"] = std::move(cfg_json);
    std::ostringstream text;
    for (const auto& stage : state->stages)
      text << "n " << stage.n << " x " << stage.a.x().to_string() << " y "
           << stage.a.y().to_string() << "\n";
    emit(out, o, text.str());
    return kExitSuccess;
  }
  const auto& fail = std::get<apsidon::ChainFailure>(result);
  json out{{"failed_stage", fail.stage_n},
           {"failure", apsidon::search_failure_to_json(fail.failure)},
           {"regime", regime},
           {"seed", o.seed}};
  out["config"] = std::move(cfg_json);
  std::ostringstream text;
  text << "stage " << fail.stage_n << " failed after " << fail.failure.candidates_tried
       << " candidates\n";
  emit(out, o, text.str());
  return kExitNegative;
}

int run_verify_kernel(int k_max, const CommonOpts& o) {
  const apsidon::KernelReport report = apsidon::verify_kernel(k_max);
  json out = apsidon::kernel_report_to_json(report);
  out["config"] = config_echo(o, false);
  std::ostringstream text;
  text << "K " << report.k_max << "\ntuples " << report.tuples_checked << "\ncounterexamples "
       << report.counterexamples.size() << "\n";
  emit(out, o, text.str());
  return report.counterexamples.empty() ? kExitSuccess : kExitNegative;
}

int run_affine_copy(const std::string& phi_spec, int window, const std::string& a_spec,
                    const std::string& b_spec, const CommonOpts& o) {
  const apsidon::Mapping phi = parse_mapping_arg(phi_spec);
  if (a_spec.empty() != b_spec.empty())
    throw std::invalid_argument("affine-copy: give both --a and --b, or neither to search");
  if (!a_spec.empty()) {
    const Rational a = parse_rational_arg(a_spec);
    const Rational b = parse_rational_arg(b_spec);
    const auto report = apsidon::check_affine_copy(phi, a, b, window);
    json out{{"ok", report.ok}, {"window", window}};
    out["collision"] = report.collision
                           ? json{{"k1", report.collision->k1},
                                  {"k2", report.collision->k2},
                                  {"value", apsidon::rational_to_json(report.collision->value)}}
                           : json(nullptr);
    out["witness"] = report.witness ? quadruple_to_json(*report.witness) : json(nullptr);
    out["config"] = config_echo(o, false);
    std::ostringstream text;
    text << (report.ok ? "ok" : "not an embedded copy") << "\n";
    emit(out, o, text.str());
    return report.ok ? kExitSuccess : kExitNegative;
  }
  apsidon::SearchConfig cfg = apsidon::affine_copy_defaults();
  cfg.budget = o.budget;
  cfg.seed = o.seed;
  cfg.denom_bound = o.denom_bound;
  if (!o.box_spec.empty()) cfg.box = parse_box_arg(o.box_spec);
  auto result = apsidon::find_affine_copy(phi, window, cfg);
  json cfg_json = config_echo(o, true, &cfg.box);
  cfg_json["window"] = window;
  if (const auto* found = std::get_if<apsidon::AffineCopy>(&result)) {
    json out{{"a", apsidon::rational_to_json(found->a)},
             {"b", apsidon::rational_to_json(found->b)},
             {"window", window}};
    out["config"] = std::move(cfg_json);
    std::ostringstream text;
    text << "a " << found->a.to_string() << "\nb " << found->b.to_string() << "\n";
    emit(out, o, text.str());
    return kExitSuccess;
  }
  const auto& fail = std::get<apsidon::SearchFailure>(result);
  json out{{"failure", apsidon::search_failure_to_json(fail)}};
  out["config"] = std::move(cfg_json);
  std::ostringstream text;
  text << "search failed after " << fail.candidates_tried << " candidates\n";
  emit(out, o, text.str());
  return kExitNegative;
}

int run_lemma3_search(const std::string& e1_spec, const std::string& e2_spec,
                      const std::string& pattern_spec, const CommonOpts& o) {
  const apsidon::IntervalUnion e1 = parse_interval_union_arg(e1_spec);
  const apsidon::IntervalUnion e2 = parse_interval_union_arg(e2_spec);
  const apsidon::Pattern pattern = parse_pattern_arg(pattern_spec);
  apsidon::PatternedApConfig cfg;
  cfg.budget = o.budget;
  cfg.seed = o.seed;
  cfg.denom_bound = o.denom_bound;

  auto result = apsidon::find_patterned_ap(e1, e2, pattern, cfg);
  json cfg_json = config_echo(o, true);
  cfg_json["n"] = pattern.n();
  if (const auto* ap = std::get_if<apsidon::PatternedAp>(&result)) {
    json terms = json::array();
    for (int k = 1; k <= pattern.n(); ++k)
      terms.push_back(json{{"k", k},
                           {"target", pattern.target(k)},
                           {"t", apsidon::rational_to_json(ap->x + Rational(k) * ap->y)}});
    json out{{"x", apsidon::rational_to_json(ap->x)},
             {"y", apsidon::rational_to_json(ap->y)},
             {"terms", std::move(terms)}};
    out["config"] = std::move(cfg_json);
    std::ostringstream text;
    text << "x " << ap->x.to_string() << "\ny " << ap->y.to_string() << "\n";
    emit(out, o, text.str());
    return kExitSuccess;
  }
  const auto& fail = std::get<apsidon::SearchFailure>(result);
  json out{{"failure", apsidon::search_failure_to_json(fail)}};
  out["config"] = std::move(cfg_json);
  std::ostringstream text;
  text << "search failed after " << fail.candidates_tried << " candidates\n";
  emit(out, o, text.str());
  return kExitNegative;
}

int run_cantor_experiment(const std::string& t_spec, long samples, const CommonOpts& o) {
  if (!t_spec.empty()) {
    const Rational t = parse_rational_arg(t_spec);
    const Rational value = apsidon::cantor_value(t);
    json out{{"t", apsidon::rational_to_json(t)},
             {"value", apsidon::rational_to_json(value)},
             {"decimal", value.decimal(o.digits)}};
    out["config"] = config_echo(o, false);
    std::ostringstream text;
    text << "c(" << t.to_string() << ") = " << value.to_string() << " = " << value.decimal(o.digits)
         << "\n";
    emit(out, o, text.str());
    return kExitSuccess;
  }
  // identity sweep: self-similarity c(t/3) = c(t)/2 and symmetry
  // c(1-t) = 1 - c(t) on seeded random rationals in [0, 1]
  apsidon::SplitMix64 rng(o.seed);
  long violations = 0;
  for (long i = 0; i < samples; ++i) {
    const Rational t = apsidon::sample_rational(rng, Rational(0), Rational(1), 1000000);
    const Rational c = apsidon::cantor_value(t);
    if (apsidon::cantor_value(t / Rational(3)) != c / Rational(2)) ++violations;
    if (apsidon::cantor_value(Rational(1) - t) != Rational(1) - c) ++violations;
  }
  json out{{"samples", samples}, {"identities_checked", 2 * samples}, {"violations", violations}};
  out["config"] = config_echo(o, false);
  out["config"]["seed"] = o.seed;
  std::ostringstream text;
  text << "checked " << 2 * samples << " identities, violations " << violations << "\n";
  emit(out, o, text.str());
  return violations == 0 ? kExitSuccess : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for Sidon sets, constraint progressions, and staircase experiments"};
  app.require_subcommand(1);

  CommonOpts o;

  std::string set_spec, phi_spec, forbidden_spec = "0";
  std::string input_file, unit_set;
  std::string a_spec, b_spec;
  std::string e1_spec, e2_spec, pattern_spec;
  std::string t_spec;
  int n = 4, k_max = 20, window = 3;
  long samples = 1000;
  bool grid = false;

  auto* check_sidon = app.add_subcommand("check-sidon", "decide distinct pair sums");
  check_sidon->add_option("--set", set_spec, "comma list of rationals or @file.json")->required();
  add_format(check_sidon, o);

  auto* gamma = app.add_subcommand("gamma", "closure of a set under sums and differences");
  gamma->add_option("--set", set_spec, "comma list of rationals or @file.json")->required();
  add_format(gamma, o);

  auto* energy = app.add_subcommand("energy", "additive energy and the Sidon bound");
  energy->add_option("--set", set_spec, "comma list of rationals or @file.json")->required();
  add_format(energy, o);

  auto* bnorm = app.add_subcommand("bnorm", "exact Besicovitch norms of an exponential polynomial");
  bnorm->add_option("--input", input_file, "exponential polynomial JSON file");
  bnorm->add_option("--unit-set", unit_set, "unit coefficients over this frequency set");
  add_format(bnorm, o);
  add_digits(bnorm, o);

  auto* growth = app.add_subcommand("growth", "Dirichlet kernel fourth-power growth table");
  growth->add_option("--n-max", o.n_max, "last table row")->check(CLI::PositiveNumber);
  add_format(growth, o);
  add_digits(growth, o);

  auto* find_prog = app.add_subcommand("find-progression", "search for a constraint-passing progression");
  find_prog->add_option("--phi", phi_spec, "mapping spec or @file.json")->required();
  find_prog->add_option("--n", n, "progression length (>= 4)")->check(CLI::Range(4, 1000));
  find_prog->add_option("--forbidden", forbidden_spec, "forbidden value set (default {0})");
  find_prog->add_flag("--grid", grid, "deterministic nested-grid schedule instead of sampling");
  add_seed(find_prog, o);
  add_budget(find_prog, o);
  add_denom(find_prog, o);
  add_box(find_prog, o);
  add_format(find_prog, o);

  auto* build = app.add_subcommand("build-chain", "inductively extend progressions with Sidon image union");
  build->add_option("--phi", phi_spec, "mapping spec or @file.json")->required();
  build->add_option("--n-max", o.n_max, "final progression length (>= 4)");
  add_seed(build, o);
  add_budget(build, o);
  add_denom(build, o);
  add_box(build, o);
  add_format(build, o);

  auto* verify = app.add_subcommand("verify-kernel", "moment matrix kernel and determinant sweep");
  verify->add_option("--k-max", k_max, "check all tuples in [1, K] (4 <= K <= 64)");
  add_format(verify, o);

  auto* affine = app.add_subcommand("affine-copy", "injective Sidon window along a*k + b");
  affine->add_option("--phi", phi_spec, "mapping spec or @file.json")->required();
  affine->add_option("--window", window, "check k in [-K, K]")->check(CLI::Range(1, 64));
  affine->add_option("--a", a_spec, "step (check mode)");
  affine->add_option("--b", b_spec, "offset (check mode)");
  add_seed(affine, o);
  add_budget(affine, o);
  add_denom(affine, o);
  add_box(affine, o);
  add_format(affine, o);

  auto* lemma3 = app.add_subcommand("lemma3-search", "progression with prescribed membership pattern");
  lemma3->add_option("--e1", e1_spec, "interval union: \"lo,hi;...\", fat-cantor:M, gap-probes:M, @file.json")
      ->required();
  lemma3->add_option("--e2", e2_spec, "interval union for target 2")->required();
  lemma3->add_option("--pattern", pattern_spec, "comma list of 1/2 or alternating:N")->required();
  add_seed(lemma3, o);
  add_budget(lemma3, o);
  add_denom(lemma3, o);
  add_format(lemma3, o);

  auto* cantor = app.add_subcommand("cantor-experiment", "staircase values and identity sweeps");
  cantor->add_option("--t", t_spec, "evaluate at this rational in [0, 1]");
  cantor->add_option("--samples", samples, "identity sweep size when no --t given")
      ->check(CLI::PositiveNumber);
  add_seed(cantor, o);
  add_format(cantor, o);
  add_digits(cantor, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (check_sidon->parsed()) return run_check_sidon(set_spec, o);
    if (gamma->parsed()) return run_gamma(set_spec, o);
    if (energy->parsed()) return run_energy(set_spec, o);
    if (bnorm->parsed()) return run_bnorm(input_file, unit_set, o);
    if (growth->parsed()) return run_growth(o.n_max, o);
    if (find_prog->parsed()) return run_find_progression(phi_spec, n, forbidden_spec, grid, o);
    if (build->parsed()) return run_build_chain(phi_spec, o);
    if (verify->parsed()) return run_verify_kernel(k_max, o);
    if (affine->parsed()) return run_affine_copy(phi_spec, window, a_spec, b_spec, o);
    if (lemma3->parsed()) return run_lemma3_search(e1_spec, e2_spec, pattern_spec, o);
    if (cantor->parsed()) return run_cantor_experiment(t_spec, samples, o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
