// soergel: command-line front end. Data goes to stdout, diagnostics to
// stderr. Exit 0 on success, 2 when a verification fails, 1 on bad input.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "soergel/bimodule.hpp"
#include "soergel/categorify.hpp"
#include "soergel/category_o.hpp"
#include "soergel/coxeter.hpp"
#include "soergel/errors.hpp"
#include "soergel/geomrep.hpp"
#include "soergel/kl_table.hpp"
#include "soergel/serialize.hpp"

namespace {

using namespace soergel;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;

struct Config {
  std::string format = "text";
  std::string convention = "corrected";
  std::size_t max_elements = kDefaultMaxElements;
  unsigned threads = 0;
  std::string matrix_file;
  std::vector<std::string> args;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// Positional arguments after the optional TYPE, which --matrix replaces.
struct Loaded {
  CoxeterMatrix matrix;
  std::string label;
  std::vector<std::string> rest;
};

Loaded load_matrix(const Config& cfg) {
  if (!cfg.matrix_file.empty()) return {CoxeterMatrix::from_json_file(cfg.matrix_file), cfg.matrix_file, cfg.args};
  if (cfg.args.empty()) throw UsageError("missing Coxeter type (or --matrix FILE)");
  return {CoxeterMatrix::from_type(cfg.args.front()), cfg.args.front(),
          std::vector<std::string>(cfg.args.begin() + 1, cfg.args.end())};
}

void expect_args(const std::vector<std::string>& rest, std::size_t n, const char* what) {
  if (rest.size() != n) throw UsageError(std::string("expected ") + what);
}

KLTableOptions table_options(const Config& cfg) {
  KLTableOptions o;
  o.threads = cfg.threads;
  return o;
}

bool json_out(const Config& cfg) { return cfg.format == "json"; }
bool csv_out(const Config& cfg) { return cfg.format == "csv"; }

void print_json(const Json& j) { std::cout << j.dump() << "\n"; }

std::string class_text(const CoxeterSystem& sys, const SBimClass& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : c.summands()) {
    if (!first) os << " + ";
    first = false;
    if (s.mult != 1) os << s.mult.get_str() << "*";
    os << "B_{" << sys.word_string(s.w) << "}";
    if (s.shift != 0) os << "(" << s.shift << ")";
  }
  return os.str();
}

int cmd_coxeter_info(const Config& cfg) {
  const auto ld = load_matrix(cfg);
  expect_args(ld.rest, 0, "TYPE only");
  const auto sys = CoxeterSystem::build(ld.matrix, cfg.max_elements);
  const LaurentPoly gen = length_gen_poly(sys);
  if (json_out(cfg)) {
    print_json(Json{{"type", ld.label},
                    {"rank", sys.rank()},
                    {"size", sys.size()},
                    {"longest_length", sys.max_length()},
                    {"longest_word", sys.word_string(sys.longest_element())},
                    {"length_gen_poly", laurent_to_json(gen)}});
  } else if (csv_out(cfg)) {
    std::cout << "type,rank,size,longest_length,longest_word\n"
              << csv_field(ld.label) << "," << sys.rank() << "," << sys.size() << "," << sys.max_length() << ","
              << csv_field(sys.word_string(sys.longest_element())) << "\n";
  } else {
    std::cout << "type: " << ld.label << "\n"
              << "rank: " << sys.rank() << "\n"
              << "size: " << sys.size() << "\n"
              << "longest length: " << sys.max_length() << "\n"
              << "longest word: " << sys.word_string(sys.longest_element()) << "\n"
              << "length generating function: " << gen.to_string("q") << "\n";
  }
  return kExitOk;
}

int cmd_kl_table(const Config& cfg) {
  const auto ld = load_matrix(cfg);
  expect_args(ld.rest, 0, "TYPE only");
  const auto sys = CoxeterSystem::build(ld.matrix, cfg.max_elements);
  const auto table = KLTable::build(sys, table_options(cfg));
  if (json_out(cfg)) {
    print_json(kl_table_json(table));
  } else if (csv_out(cfg)) {
    std::cout << kl_table_csv(table);
  } else {
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const ElementRef x(static_cast<std::uint32_t>(i));
      for (const auto& [y, h] : table.column(x))
        std::cout << "h[" << sys.word_string(y) << " ; " << sys.word_string(x) << "] = " << h.to_string() << "\n";
    }
  }
  return kExitOk;
}

ElementRef element_arg(const CoxeterSystem& sys, const std::string& w) {
  return sys.element_of(parse_word(w, sys.rank()));
}

int cmd_kl_poly(const Config& cfg) {
  const auto ld = load_matrix(cfg);
  expect_args(ld.rest, 2, "TYPE Y_WORD X_WORD");
  const auto sys = CoxeterSystem::build(ld.matrix, cfg.max_elements);
  const auto table = KLTable::build(sys, table_options(cfg));
  const LaurentPoly h = table.poly(element_arg(sys, ld.rest[0]), element_arg(sys, ld.rest[1]));
  if (csv_out(cfg)) {
    std::cout << "exponent,coeff\n";
    for (const auto& t : h.terms()) std::cout << t.exponent << "," << t.coeff.get_str() << "\n";
  } else {
    print_json(laurent_to_json(h));
  }
  return kExitOk;
}

int cmd_mu(const Config& cfg) {
  const auto ld = load_matrix(cfg);
  expect_args(ld.rest, 2, "TYPE Y_WORD X_WORD");
  const auto sys = CoxeterSystem::build(ld.matrix, cfg.max_elements);
  const auto table = KLTable::build(sys, table_options(cfg));
  const BigInt m = table.mu(element_arg(sys, ld.rest[0]), element_arg(sys, ld.rest[1]));
  if (json_out(cfg))
    print_json(Json{{"mu", bigint_to_json(m)}});
  else
    std::cout << m.get_str() << "\n";
  return kExitOk;
}

int cmd_bs_decompose(const Config& cfg) {
  const auto ld = load_matrix(cfg);
  expect_args(ld.rest, 1, "TYPE WORD");
  const auto sys = CoxeterSystem::build(ld.matrix, cfg.max_elements);
  const auto table = KLTable::build(sys, table_options(cfg));
  const Word word = parse_word(ld.rest[0], sys.rank());
  const SBimClass c = bs_class(table, word);
  if (json_out(cfg)) {
    print_json(sbim_class_json(sys, word, c));
  } else if (csv_out(cfg)) {
    std::cout << "w,shift,mult\n";
    for (const auto& s : c.summands())
      std::cout << csv_field(sys.word_string(s.w)) << "," << s.shift << "," << s.mult.get_str() << "\n";
  } else {
    std::cout << "BS(" << format_word(word) << ") = " << class_text(sys, c) << "\n";
  }
  return kExitOk;
}

int cmd_hom_rank(const Config& cfg) {
  const auto ld = load_matrix(cfg);
  expect_args(ld.rest, 2, "TYPE X_WORD Y_WORD");
  const auto sys = CoxeterSystem::build(ld.matrix, cfg.max_elements);
  const auto table = KLTable::build(sys, table_options(cfg));
  const LaurentPoly r = hom_graded_rank(table, SBimClass::indecomposable(element_arg(sys, ld.rest[0])),
                                        SBimClass::indecomposable(element_arg(sys, ld.rest[1])));
  if (json_out(cfg))
    print_json(laurent_to_json(r));
  else
    std::cout << r.to_string() << "\n";
  return kExitOk;
}

int cmd_inversion_verify(const Config& cfg) {
  const auto ld = load_matrix(cfg);
  expect_args(ld.rest, 0, "TYPE only");
  const Convention conv = parse_convention(cfg.convention);
  const auto sys = CoxeterSystem::build(ld.matrix, cfg.max_elements);
  const auto table = KLTable::build(sys, table_options(cfg));
  std::size_t failures = 0;
  Json first = nullptr;
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = 0; j < sys.size(); ++j) {
      const ElementRef x(static_cast<std::uint32_t>(i)), y(static_cast<std::uint32_t>(j));
      const LaurentPoly d = inversion_defect(table, x, y, conv);
      if (d.is_zero()) continue;
      if (failures++ == 0)
        first = Json{{"x", sys.word_string(x)}, {"y", sys.word_string(y)}, {"defect", laurent_to_json(d)}};
    }
  print_json(Json{{"check", "inversion"},
                  {"type", ld.label},
                  {"convention", convention_name(conv)},
                  {"pairs", sys.size() * sys.size()},
                  {"failures", failures},
                  {"first_failure", first},
                  {"ok", failures == 0}});
  return failures == 0 ? kExitOk : kExitVerify;
}

void print_matrix(const Config& cfg, const CoxeterSystem& sys, const std::vector<std::vector<BigInt>>& m,
                  const char* row_label) {
  if (json_out(cfg)) {
    Json words = Json::array(), rows = Json::array();
    for (std::size_t i = 0; i < sys.size(); ++i) words.push_back(sys.word_string(ElementRef(static_cast<std::uint32_t>(i))));
    for (const auto& r : m) {
      Json row = Json::array();
      for (const auto& c : r) row.push_back(bigint_to_json(c));
      rows.push_back(std::move(row));
    }
    print_json(Json{{"rows", row_label}, {"columns", "verma"}, {"elements", words}, {"matrix", rows}});
    return;
  }
  std::cout << row_label;
  for (std::size_t i = 0; i < sys.size(); ++i)
    std::cout << "," << csv_field(sys.word_string(ElementRef(static_cast<std::uint32_t>(i))));
  std::cout << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::cout << csv_field(sys.word_string(ElementRef(static_cast<std::uint32_t>(i))));
    for (const auto& c : m[i]) std::cout << "," << c.get_str();
    std::cout << "\n";
  }
}

int cmd_proj_classes(const Config& cfg) {
  const auto ld = load_matrix(cfg);
  expect_args(ld.rest, 0, "TYPE only");
  const auto sys = CoxeterSystem::build(ld.matrix, cfg.max_elements);
  const auto table = KLTable::build(sys, table_options(cfg));
  print_matrix(cfg, sys, projective_transition_matrix(table), "projective");
  return kExitOk;
}

int cmd_simple_classes(const Config& cfg) {
  const auto ld = load_matrix(cfg);
  expect_args(ld.rest, 0, "TYPE only");
  const auto sys = CoxeterSystem::build(ld.matrix, cfg.max_elements);
  const auto table = KLTable::build(sys, table_options(cfg));
  print_matrix(cfg, sys, simple_transition_matrix(table, parse_convention(cfg.convention)), "simple");
  return kExitOk;
}

int cmd_polo_search(const Config& cfg, int max_n) {
  expect_args(cfg.args, 1, "POLY (in q)");
  const LaurentPoly q = parse_laurent(cfg.args[0], 'q');
  const auto r = polo_search(q, max_n, table_options(cfg));
  Json out{{"target", laurent_to_json(q)}, {"max_n", max_n}, {"found", r.witness.has_value()}};
  if (r.witness) {
    out["m"] = r.witness->m;
    out["n"] = r.witness->n;
    out["y"] = format_word(r.witness->y);
    out["x"] = format_word(r.witness->x);
  }
  print_json(out);
  return kExitOk;
}

int cmd_bimodule_rank(const Config& cfg, int nvars) {
  expect_args(cfg.args, 1, "WORD");
  const Word word = parse_word(cfg.args[0], std::max(nvars - 1, 0));
  const BSBimodule m(nvars, word);
  const LaurentPoly r = m.graded_left_rank();
  if (json_out(cfg) || csv_out(cfg))
    print_json(laurent_to_json(r));
  else
    std::cout << r.to_string() << "\n";
  return kExitOk;
}

int cmd_bimodule_split_check(const Config&) {
  Json out{{"check", "split_BsBs"}};
  bool ok = false;
  try {
    const SplitReport r = split_BsBs();
    const HomBasisResult hom = hom_basis_Bs_Bs();
    Json degrees = Json::array();
    for (const auto& g : hom.generators) degrees.push_back(g.degree);
    const LaurentPoly expected = LaurentPoly::from_terms({{0, 1}, {2, 1}});
    LaurentPoly found;
    for (const auto& g : hom.generators) found += LaurentPoly::v_pow(g.degree);
    out["idempotent"] = r.idempotent;
    out["orthogonal"] = r.orthogonal;
    out["complete"] = r.complete;
    out["images_isomorphic"] = r.image1_iso && r.image2_iso;
    out["shifts"] = Json::array({r.shift1, r.shift2});
    out["image_ranks"] = Json::array({laurent_to_json(r.rank1), laurent_to_json(r.rank2)});
    out["hom_degrees"] = degrees;
    out["hom_formula_holds"] = found == expected;
    ok = r.ok() && found == expected;
  } catch (const SplitFailed& e) {
    out["error"] = e.what();
  }
  out["ok"] = ok;
  print_json(out);
  return ok ? kExitOk : kExitVerify;
}

int cmd_bimodule_cyclic(const Config& cfg, int nvars) {
  expect_args(cfg.args, 1, "WORD");
  const Word word = parse_word(cfg.args[0], std::max(nvars - 1, 0));
  const CyclicReport r = cyclic_generation_check(word, nvars);
  Json per = Json::array();
  for (const auto& [d, gen, full] : r.per_degree) per.push_back(Json{{"degree", d}, {"generated", gen}, {"full", full}});
  print_json(Json{{"word", format_word(word)}, {"nvars", nvars}, {"generated_by_top_tensor", r.generated}, {"degrees", per}});
  return kExitOk;
}

int cmd_geom_check(const Config& cfg) {
  const auto ld = load_matrix(cfg);
  expect_args(ld.rest, 0, "TYPE only");
  const GeometricRep rep = build_geometric_rep(ld.matrix);
  const RelationReport rel = verify_relations(rep);
  const bool form_ok = reflections_preserve_form(rep);
  Json out{{"check", "geometric_representation"}, {"type", ld.label}};
  Json violations = Json::array();
  for (const auto& v : rel.violations) violations.push_back(Json{{"s", v.s + 1}, {"t", v.t + 1}, {"m", v.order}});
  out["relation_violations"] = violations;
  out["pairs_checked"] = rel.pairs_checked;
  out["pairs_skipped_infinite"] = rel.pairs_skipped_infinite;
  out["form_preserved"] = form_ok;
  bool ok = rel.ok() && form_ok;
  if (!ld.matrix.has_infinite_bond()) {
    const auto sys = CoxeterSystem::build(ld.matrix, cfg.max_elements);
    const FaithfulnessReport f = faithfulness_check(sys);
    out["elements"] = f.elements;
    out["distinct_matrices"] = f.distinct_matrices;
    out["faithful"] = f.faithful;
    ok = ok && f.faithful;
  }
  out["ok"] = ok;
  if (cfg.format == "text") {
    for (int s = 0; s < rep.rank(); ++s) {
      const auto& m = reflection_matrix(rep, s);
      std::cout << "s" << s + 1 << " exact:\n" << m.to_string() << "s" << s + 1 << " approx:\n" << m.to_string_approx();
    }
  }
  print_json(out);
  return ok ? kExitOk : kExitVerify;
}

int cmd_positivity_scan(const Config& cfg, bool structure) {
  const auto ld = load_matrix(cfg);
  expect_args(ld.rest, 0, "TYPE only");
  const auto sys = CoxeterSystem::build(ld.matrix, cfg.max_elements);
  const auto table = KLTable::build(sys, table_options(cfg));
  ScanOptions opts;
  opts.structure_constants = structure;
  const auto r = positivity_scan(table, opts);
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"kind", v.kind == PositivityViolation::Kind::kl_polynomial ? "kl_polynomial" : "structure_constant"},
                              {"a", sys.word_string(v.a)},
                              {"b", sys.word_string(v.b)},
                              {"c", sys.word_string(v.c)},
                              {"value", laurent_to_json(v.value)}});
  print_json(Json{{"check", "positivity"},
                  {"type", ld.label},
                  {"polynomials_checked", r.polynomials_checked},
                  {"structure_constants_scanned", r.structure_constants_scanned},
                  {"products_checked", r.products_checked},
                  {"violations", violations},
                  {"ok", r.ok()}});
  return r.ok() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter groups, Hecke algebras, Kazhdan-Lusztig polynomials and Soergel bimodules"};
  app.fallthrough();
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--convention", cfg.convention, "Inversion-formula sign convention")
      ->check(CLI::IsMember({"paper", "corrected"}));
  app.add_option("--max-elements", cfg.max_elements, "Enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads for KL tables (0 = all cores)");
  app.add_option("--matrix", cfg.matrix_file, "Coxeter matrix JSON file {\"rank\": n, \"m\": [[...]]}, used instead of TYPE");

  std::function<int()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("args", cfg.args, "Positional arguments");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  auto* coxeter = group("coxeter", "Group enumeration");
  leaf(coxeter, "info", "TYPE: size, longest element, length generating function", [&] { return cmd_coxeter_info(cfg); });
  auto* kl = group("kl", "Kazhdan-Lusztig polynomials");
  leaf(kl, "table", "TYPE: every h_{y,x}", [&] { return cmd_kl_table(cfg); });
  leaf(kl, "poly", "TYPE Y X: h_{y,x} as JSON", [&] { return cmd_kl_poly(cfg); });
  leaf(&app, "mu", "TYPE Y X: the v-coefficient of h_{y,x}", [&] { return cmd_mu(cfg); });
  auto* bs = group("bs", "Bott-Samelson classes");
  leaf(bs, "decompose", "TYPE WORD: indecomposable summands", [&] { return cmd_bs_decompose(cfg); });
  auto* hom = group("hom", "Graded Hom ranks");
  leaf(hom, "rank", "TYPE X Y: graded rank of Hom(B_x, B_y)", [&] { return cmd_hom_rank(cfg); });
  auto* inversion = group("inversion", "Inversion formula");
  leaf(inversion, "verify", "TYPE: check every pair under --convention", [&] { return cmd_inversion_verify(cfg); });
  auto* proj = group("proj", "Projective classes");
  leaf(proj, "classes", "TYPE: projective-to-Verma transition matrix", [&] { return cmd_proj_classes(cfg); });
  auto* simple = group("simple", "Simple classes");
  leaf(simple, "classes", "TYPE: simple-to-Verma transition matrix", [&] { return cmd_simple_classes(cfg); });
  auto* polo = group("polo", "Polo witnesses");
  int max_n = 4;
  leaf(polo, "search", "POLY: find v^m q(v^2) = h_{y,x} in some S_n", [&] { return cmd_polo_search(cfg, max_n); })
      ->add_option("--max-n", max_n, "Largest symmetric group to scan")
      ->check(CLI::PositiveNumber);
  auto* bimodule = group("bimodule", "Type A Bott-Samelson bimodules");
  int nvars = 2;
  leaf(bimodule, "rank", "WORD: graded left rank", [&] { return cmd_bimodule_rank(cfg, nvars); })
      ->add_option("-n,--vars", nvars, "Number of polynomial variables");
  leaf(bimodule, "split-check", "Verify B_s B_s = B_s(1) + B_s(-1) and the End(B_s) degrees",
       [&] { return cmd_bimodule_split_check(cfg); });
  leaf(bimodule, "cyclic", "WORD: is BS(word) generated by 1 (x) ... (x) 1", [&] { return cmd_bimodule_cyclic(cfg, nvars); })
      ->add_option("-n,--vars", nvars, "Number of polynomial variables");
  auto* geom = group("geom", "Geometric representation");
  leaf(geom, "check", "TYPE: relations, form invariance, faithfulness", [&] { return cmd_geom_check(cfg); });
  auto* positivity = group("positivity", "Positivity");
  bool no_structure = false;
  leaf(positivity, "scan", "TYPE: signs of KL polynomials and structure constants", [&] {
    return cmd_positivity_scan(cfg, !no_structure);
  })->add_flag("--no-structure-constants", no_structure, "Only scan KL polynomials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
