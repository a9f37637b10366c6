// rloop: construct, validate and analyze right loops given as Cayley tables,
// their twists, normalized right transversals with c-groupoid data, and the
// symbolic twisted integer loops over the infinite dihedral group.
//
// Exit codes: 0 success / property holds; 1 a check ran and failed (invalid
// table, failing property, witness found, open closure); 2 usage or parse
// error.  Diagnostics go to stderr, data to stdout.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rloop/analysis.hpp"
#include "rloop/dinf.hpp"
#include "rloop/errors.hpp"
#include "rloop/group.hpp"
#include "rloop/looptab.hpp"
#include "rloop/transversal.hpp"
#include "rloop/twist.hpp"

using namespace rloop;

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (item.empty()) throw ParseError("empty item in list '" + text + "'");
    out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int name_to_index(const CayleyTable& table, const std::string& name) {
  if (auto index = table.index_of(name)) return *index;
  throw ParseError("unknown element name '" + name + "'");
}

std::vector<int> names_to_indices(const CayleyTable& table, const std::string& list) {
  std::vector<int> out;
  for (const std::string& name : split_commas(list)) out.push_back(name_to_index(table, name));
  return out;
}

std::vector<BigInt> parse_int_list(const std::string& list) {
  std::vector<BigInt> out;
  for (const std::string& item : split_commas(list)) {
    try {
      out.push_back(BigInt::from_string(item));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

// --eta accepts an image list in the element order of the table's header
// ("e,b,a,...") or @file with one "name:image" pair per line.
Permutation parse_eta(const CayleyTable& table, const std::string& spec) {
  int n = table.order();
  std::vector<int> images(static_cast<std::size_t>(n), -1);
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw ParseError("cannot open eta file '" + spec.substr(1) + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string token;
      if (!(ls >> token)) continue;
      auto colon = token.find(':');
      if (colon == std::string::npos)
        throw ParseError(spec.substr(1) + ":" + std::to_string(lineno) +
                         ": expected 'name:image'");
      int from = name_to_index(table, token.substr(0, colon));
      int to = name_to_index(table, token.substr(colon + 1));
      if (images[static_cast<std::size_t>(from)] >= 0)
        throw ParseError(spec.substr(1) + ":" + std::to_string(lineno) + ": '" +
                         token.substr(0, colon) + "' mapped twice");
      images[static_cast<std::size_t>(from)] = to;
      std::string rest;
      if (ls >> rest)
        throw ParseError(spec.substr(1) + ":" + std::to_string(lineno) + ": trailing content");
    }
    for (int i = 0; i < n; ++i)
      if (images[static_cast<std::size_t>(i)] < 0)
        throw ParseError("eta file gives no image for '" + table.name(i) + "'");
  } else {
    std::vector<std::string> items = split_commas(spec);
    if (static_cast<int>(items.size()) != n)
      throw ParseError("eta image list has " + std::to_string(items.size()) +
                       " entries, table order is " + std::to_string(n));
    for (int i = 0; i < n; ++i)
      images[static_cast<std::size_t>(i)] = name_to_index(table, items[static_cast<std::size_t>(i)]);
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("eta is not a permutation: ") + e.what());
  }
}

RightLoopTable load_right_loop(const std::string& path) {
  LoopFile file = read_looptab_file(path);
  return RightLoopTable(file.table, file.identity);
}

FiniteGroup load_finite_group(const std::string& path) {
  LoopFile file = read_looptab_file(path);
  return FiniteGroup::from_table(file.table, file.identity);
}

void write_output_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + path + "'");
  out << content;
}

std::string format_word(const TranslationWord& word,
                        const std::vector<std::string>& labels) {
  if (word.letters.empty()) return "1";
  // composition order: leftmost factor applied last
  std::string out;
  for (std::size_t i = word.letters.size(); i-- > 0;) {
    const auto& letter = word.letters[i];
    out += "R[" + labels[static_cast<std::size_t>(letter.generator)] + "]";
    if (letter.exponent < 0) out += "^-1";
    if (i != 0) out += "*";
  }
  return out;
}

constexpr std::size_t kMovedDisplayCap = 32;

// ---------------------------------------------------------------- verbs ---

int cmd_validate(const std::string& path, const std::string& kind_name) {
  auto kind = table_kind_from_name(kind_name);
  if (!kind) throw ParseError("unknown kind '" + kind_name + "'");
  LoopFile file = read_looptab_file(path);
  ValidationReport report = validate(file.table, file.identity, *kind);
  if (report.valid()) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << "invalid\n";
  for (const auto& v : report.violations) std::cout << v.axiom << ": " << v.message << "\n";
  return 1;
}

int cmd_twist(const std::string& path, const std::string& b_list, const std::string& eta_spec,
              const std::string& out_path) {
  RightLoopTable base = load_right_loop(path);
  TwistSpec spec(names_to_indices(base.table(), b_list), parse_eta(base.table(), eta_spec));
  RightLoopTable twisted = twist(base, spec);
  write_output_file(out_path, looptab_string(twisted.table(), twisted.identity()));
  return 0;
}

int cmd_nrt(const std::string& path, const std::string& subgroup_list, bool enumerate,
            const std::string& choose, const std::string& emit_loop,
            const std::string& emit_cgroupoid) {
  FiniteGroup group = load_finite_group(path);
  Subgroup subgroup =
      subgroup_closure(group, names_to_indices(group.table(), subgroup_list));

  if (enumerate) {
    if (!emit_loop.empty() || !emit_cgroupoid.empty())
      throw ParseError("--emit-loop/--emit-cgroupoid need --choose, not --enumerate");
    NrtEnumerator it(group, subgroup);
    std::cout << "cosets: " << it.cosets().size() << "\n";
    std::cout << "count: " << it.total() << "\n";
    std::size_t index = 0;
    while (auto t = it.next()) {
      std::cout << "nrt " << index++ << ":";
      for (int x : t->chosen) std::cout << " " << group.name(x);
      std::cout << "\n";
    }
    return 0;
  }

  // --choose coset-index:name,...
  auto cosets = right_cosets(group, subgroup);
  std::vector<int> chosen(cosets.size(), -1);
  chosen[0] = group.identity();
  for (const std::string& item : split_commas(choose)) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("--choose items look like 'coset-index:name', got '" + item + "'");
    int coset_index = 0;
    try {
      coset_index = std::stoi(item.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("bad coset index in '" + item + "'");
    }
    if (coset_index <= 0 || coset_index >= static_cast<int>(cosets.size()))
      throw ParseError("coset index " + std::to_string(coset_index) +
                       " out of range (1.." + std::to_string(cosets.size() - 1) + ")");
    chosen[static_cast<std::size_t>(coset_index)] =
        name_to_index(group.table(), item.substr(colon + 1));
  }
  for (std::size_t c = 1; c < chosen.size(); ++c)
    if (chosen[c] < 0)
      throw ParseError("--choose gives no representative for coset " + std::to_string(c));

  Transversal transversal = transversal_from_elements(group, subgroup, chosen);
  std::cout << "transversal:";
  for (int x : transversal.chosen) std::cout << " " << group.name(x);
  std::cout << "\n";

  if (!emit_loop.empty()) {
    RightLoopTable induced = induced_operation(group, subgroup, transversal);
    write_output_file(emit_loop, looptab_string(induced.table(), induced.identity()));
  }
  if (!emit_cgroupoid.empty()) {
    CGroupoidData data = c_groupoid(group, subgroup, transversal);
    std::ostringstream text;
    write_cgroupoid(text, group, data);
    write_output_file(emit_cgroupoid, text.str());
  }
  return 0;
}

int cmd_cgroupoid(const std::string& path, const std::string& subgroup_list,
                  const std::string& transversal_list, const std::string& out_path) {
  FiniteGroup group = load_finite_group(path);
  Subgroup subgroup =
      subgroup_closure(group, names_to_indices(group.table(), subgroup_list));
  Transversal transversal = transversal_from_elements(
      group, subgroup, names_to_indices(group.table(), transversal_list));
  CGroupoidData data = c_groupoid(group, subgroup, transversal);
  ThetaActionReport action = theta_action_check(group, data);
  std::ostringstream text;
  write_cgroupoid(text, group, data);
  write_output_file(out_path, text.str());
  if (!action.ok()) {
    std::cerr << "theta action check failed\n";
    return 1;
  }
  return 0;
}

int cmd_dinf(const std::string& b_list, long window, bool check_iso,
             const std::string& emit_loop) {
  if (window < 1) throw ParseError("--window must be a positive integer");
  ZBLoop loop(parse_int_list(b_list));

  int rc = 0;
  if (check_iso) {
    IsoReport report = isomorphism_check(loop, window);
    for (const std::string& warning : report.warnings) std::cerr << "warning: " << warning << "\n";
    if (report.ok()) {
      std::cout << "isomorphism holds: window " << window << ", " << report.pairs_checked
                << " pairs\n";
    } else {
      for (const auto& m : report.mismatches)
        std::cout << "isomorphism fails: i=" << m.i << " k=" << m.k
                  << " transversal=" << m.via_transversal << " loop=" << m.via_loop << "\n";
      rc = 1;
    }
  }
  if (!emit_loop.empty()) {
    std::ostringstream text;
    write_dinf_looptab(text, loop, window);
    write_output_file(emit_loop, text.str());
  }
  if (!check_iso && emit_loop.empty()) write_dinf_window(std::cout, loop, window);
  return rc;
}

int cmd_analyze(const std::string& path, const std::string& props_list) {
  RightLoopTable table = load_right_loop(path);
  int rc = 0;
  auto witness_names = [&](const std::vector<int>& w) {
    std::string out = " witness=(";
    for (std::size_t i = 0; i < w.size(); ++i)
      out += (i ? "," : "") + table.name(w[static_cast<std::size_t>(i)]);
    return out + ")";
  };

  bool ip_known_failed = false;
  for (const std::string& prop : split_commas(props_list)) {
    if (prop == "loop" || prop == "commutative" || prop == "ip") {
      LoopProperty property = prop == "loop"      ? LoopProperty::loop
                              : prop == "commutative" ? LoopProperty::commutative
                                                      : LoopProperty::inverse_property;
      PropertyReport report = check_property(table, property);
      if (report.holds) {
        std::cout << prop << " holds\n";
      } else {
        std::cout << prop << " fails" << witness_names(report.witnesses.front()) << "\n";
        if (property == LoopProperty::inverse_property) ip_known_failed = true;
        rc = 1;
      }
    } else if (prop == "lemma1") {
      if (ip_known_failed || !check_property(table, LoopProperty::inverse_property).holds) {
        std::cout << "lemma1 skipped (inverse-property fails)\n";
        rc = 1;
        continue;
      }
      Lemma1Report report = lemma1_check(table);
      if (report.ok()) {
        std::cout << "lemma1 holds\n";
      } else {
        std::vector<int> bad = report.failing.empty() ? report.double_inverse_failing
                                                      : report.failing;
        std::cout << "lemma1 fails" << witness_names({bad.front()}) << "\n";
        rc = 1;
      }
    } else {
      throw ParseError("unknown property '" + prop + "' (expected loop,commutative,ip,lemma1)");
    }
  }
  return rc;
}

int cmd_mulgroup(const std::string& path, std::uint64_t cap) {
  RightLoopTable table = load_right_loop(path);
  MulGroupResult result = right_mult_group(table, cap);
  std::cout << "generators: " << result.generator_count << "\n";
  std::cout << "order: " << (result.closed ? "" : ">=") << result.order << "\n";
  std::cout << "closed: " << (result.closed ? "yes" : "no") << "\n";
  return result.closed ? 0 : 1;
}

int cmd_alpha(const std::string& path, const std::string& a_name, const std::string& b_name,
              const std::string& eta_spec, bool check_identity) {
  RightLoopTable base = load_right_loop(path);
  int a = name_to_index(base.table(), a_name);
  int b = name_to_index(base.table(), b_name);
  Permutation eta = eta_spec.empty() ? Permutation::identity(base.order())
                                     : parse_eta(base.table(), eta_spec);

  AlphaResult alpha = build_alpha(base, a, b, eta);
  int one_over_a = base.right_divide(base.identity(), a);
  std::cout << "B: " << base.name(one_over_a) << " " << base.name(b) << "\n";

  std::vector<std::string> labels;
  for (int i = 0; i < base.order(); ++i) labels.push_back(base.name(i));
  std::cout << "word: " << format_word(alpha.word, labels) << "\n";

  std::cout << "alpha:";
  for (int x = 0; x < base.order(); ++x) std::cout << " " << base.name(alpha.realized(x));
  std::cout << "\n";

  SupportReport census = support(alpha.realized);
  std::cout << "support: " << census.moved_count << "\n";
  if (!census.moved_points.empty() && census.moved_points.size() <= kMovedDisplayCap) {
    std::cout << "moved:";
    for (int x : census.moved_points) std::cout << " " << base.name(x);
    std::cout << "\n";
  }

  if (check_identity) {
    AlphaIdentityReport report = alpha_identity_check(base, a, b, eta);
    if (!report.ok()) {
      std::cout << "alpha-identity fails at";
      for (int x : report.mismatch_points) std::cout << " " << base.name(x);
      std::cout << "\n";
      return 1;
    }
    std::cout << "alpha-identity holds\n";
  }
  return 0;
}

int cmd_witness(const std::string& path, const std::string& dinf_b, int max_len,
                std::uint64_t max_support) {
  if (max_len < 0) throw ParseError("--max-len must be nonnegative");

  if (!path.empty()) {
    RightLoopTable table = load_right_loop(path);
    std::vector<Permutation> generators;
    std::vector<std::string> labels;
    for (int a = 0; a < table.order(); ++a) {
      generators.push_back(table.right_translation(a));
      labels.push_back(table.name(a));
    }
    auto hits = witness_search(generators, max_len, max_support);
    if (hits.empty()) {
      std::cout << "no witness found\n";
      return 0;
    }
    for (const auto& hit : hits) {
      std::cout << "word=" << format_word(hit.word, labels)
                << " support=" << hit.moved.moved_count << " moved=[";
      std::size_t shown = std::min(hit.moved.moved_points.size(), kMovedDisplayCap);
      for (std::size_t i = 0; i < shown; ++i)
        std::cout << (i ? " " : "") << table.name(hit.moved.moved_points[i]);
      if (shown < hit.moved.moved_points.size()) std::cout << " ...";
      std::cout << "]\n";
    }
    return 1;
  }

  // symbolic search over Z^B right translations, k in {0,±1..±5} ∪ B
  ZBLoop loop(parse_int_list(dinf_b));
  std::vector<BigInt> ks;
  for (long k = -5; k <= 5; ++k) ks.emplace_back(k);
  for (const BigInt& v : loop.b())
    if (std::find(ks.begin(), ks.end(), v) == ks.end()) ks.push_back(v);
  std::sort(ks.begin(), ks.end());

  std::vector<AffineMap> generators;
  std::vector<std::string> labels;
  for (const BigInt& k : ks) {
    generators.push_back(loop.right_translation(k));
    labels.push_back(k.str());
  }
  auto hits = witness_search(generators, max_len, max_support);
  if (hits.empty()) {
    std::cout << "no witness found\n";
    return 0;
  }
  for (const auto& hit : hits) {
    std::ostringstream moved;
    moved << hit.moved;
    std::cout << "word=" << format_word(hit.word, labels) << " support=inf moved=["
              << moved.str() << "]\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"right-loop workbench: Cayley tables, twists, transversals"};
  app.require_subcommand(1);

  std::string file, kind, b_list, eta_spec, out_path, subgroup_list, transversal_list;
  std::string choose, emit_loop, emit_cgroupoid, props, a_name, b_name, dinf_b;
  bool enumerate = false, check_iso = false, check_identity = false;
  long window = 0;
  std::uint64_t cap = 0, max_support = 0;
  int max_len = 0;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check table axioms");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->add_option("--kind", kind, "right-loop|loop|group")->required();

  CLI::App* twist_cmd = app.add_subcommand("twist", "twist a loop over a column set B");
  twist_cmd->add_option("file", file)->required();
  twist_cmd->add_option("--b", b_list, "comma-separated element names (may be empty)")
      ->required();
  twist_cmd->add_option("--eta", eta_spec, "image list in element order, or @file")->required();
  twist_cmd->add_option("-o", out_path, "output LOOPTAB file")->required();

  CLI::App* nrt_cmd = app.add_subcommand("nrt", "normalized right transversals");
  nrt_cmd->add_option("groupfile", file)->required();
  nrt_cmd->add_option("--subgroup", subgroup_list, "generators of H, comma-separated")
      ->required();
  nrt_cmd->add_flag("--enumerate", enumerate);
  nrt_cmd->add_option("--choose", choose, "coset-index:name,...");
  nrt_cmd->add_option("--emit-loop", emit_loop);
  nrt_cmd->add_option("--emit-cgroupoid", emit_cgroupoid);

  CLI::App* cg_cmd = app.add_subcommand("cgroupoid", "extract (f, sigma, theta)");
  cg_cmd->add_option("groupfile", file)->required();
  cg_cmd->add_option("--subgroup", subgroup_list)->required();
  cg_cmd->add_option("--transversal", transversal_list)->required();
  cg_cmd->add_option("-o", out_path)->required();

  CLI::App* dinf_cmd = app.add_subcommand("dinf", "twisted integer loops over D-infinity");
  dinf_cmd->add_option("--b", dinf_b, "comma-separated integers (may be empty)")->required();
  dinf_cmd->add_option("--window", window)->required();
  dinf_cmd->add_flag("--check-iso", check_iso);
  dinf_cmd->add_option("--emit-loop", emit_loop);

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "property checks");
  analyze_cmd->add_option("file", file)->required();
  analyze_cmd->add_option("--props", props, "loop,commutative,ip,lemma1")->required();

  CLI::App* mul_cmd = app.add_subcommand("mulgroup", "right multiplication group closure");
  mul_cmd->add_option("file", file)->required();
  mul_cmd->add_option("--cap", cap)->required();

  CLI::App* alpha_cmd = app.add_subcommand("alpha", "the four-letter finite-support word");
  alpha_cmd->add_option("file", file)->required();
  alpha_cmd->add_option("--a", a_name)->required();
  alpha_cmd->add_option("--b", b_name)->required();
  alpha_cmd->add_option("--eta", eta_spec);
  alpha_cmd->add_flag("--check-identity", check_identity);

  CLI::App* witness_cmd = app.add_subcommand("witness", "search words for finite support");
  witness_cmd->add_option("file", file);
  witness_cmd->add_option("--dinf-b", dinf_b);
  witness_cmd->add_option("--max-len", max_len)->required();
  witness_cmd->add_option("--max-support", max_support)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file, kind);
    if (twist_cmd->parsed()) return cmd_twist(file, b_list, eta_spec, out_path);
    if (nrt_cmd->parsed()) {
      bool chose = nrt_cmd->count("--choose") > 0;
      if (enumerate == chose)
        throw ParseError("nrt needs exactly one of --enumerate or --choose");
      return cmd_nrt(file, subgroup_list, enumerate, choose, emit_loop, emit_cgroupoid);
    }
    if (cg_cmd->parsed()) return cmd_cgroupoid(file, subgroup_list, transversal_list, out_path);
    if (dinf_cmd->parsed()) return cmd_dinf(dinf_b, window, check_iso, emit_loop);
    if (analyze_cmd->parsed()) return cmd_analyze(file, props);
    if (mul_cmd->parsed()) return cmd_mulgroup(file, cap);
    if (alpha_cmd->parsed()) return cmd_alpha(file, a_name, b_name, eta_spec, check_identity);
    if (witness_cmd->parsed()) {
      bool has_file = witness_cmd->count("file") > 0;
      bool has_dinf = witness_cmd->count("--dinf-b") > 0;
      if (has_file == has_dinf)
        throw ParseError("witness needs a table file or --dinf-b, not both");
      return cmd_witness(has_file ? file : "", dinf_b, max_len, max_support);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SpecViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
