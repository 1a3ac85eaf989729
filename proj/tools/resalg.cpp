// resalg: a workbench for finite residuated lattices and bounded hoops.
//
// Exit codes: 0 true/pass, 1 false/fail (predicates and the suite), 2 usage
// or parse error, 3 invalid algebra.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "resalg/algebra.hpp"
#include "resalg/constructions.hpp"
#include "resalg/enumeration.hpp"
#include "resalg/io.hpp"
#include "resalg/morphisms.hpp"
#include "resalg/structure.hpp"
#include "resalg/suite.hpp"
#include "resalg/varieties.hpp"

namespace {

using nlohmann::json;
using namespace resalg;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;

struct CliError {
  int code;
  std::string message;
};

// Arguments name either an algebra document on disk or a catalog entry.
FiniteAlgebra load_input(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    LoadResult r = load_algebra(arg);
    if (r.relabeled) std::cerr << arg << ": " << r.notice << "\n";
    return std::move(r.algebra);
  }
  try {
    return catalog_get(arg);
  } catch (const std::invalid_argument&) {
    throw CliError{kExitUsage, "no such file or catalog name: " + arg};
  }
}

std::vector<FiniteAlgebra> load_class_dir(const std::string& dir) {
  if (!std::filesystem::is_directory(dir))
    throw CliError{kExitUsage, "--class expects a directory: " + dir};
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  std::vector<FiniteAlgebra> out;
  for (const auto& f : files) out.push_back(load_algebra(f).algebra);
  if (out.empty()) throw CliError{kExitUsage, "class directory is empty"};
  return out;
}

void write_or_print(const FiniteAlgebra& a, const std::string& out_path) {
  if (out_path.empty())
    std::cout << to_document(a);
  else
    save_algebra(a, out_path);
}

json profile_to_json(const VarietyProfile& p) {
  json j;
  j["equations"] = json::object();
  for (const auto& [eq, v] : p.equation_flags) j["equations"][to_string(eq)] = v;
  j["memberships"] = json::array();
  for (Variety v : p.memberships) j["memberships"].push_back(to_string(v));
  j["linearly_ordered"] = p.linearly_ordered;
  return j;
}

json morphism_to_json(const Morphism& m) {
  json j = json::array();
  for (Elem v : m.map) j.push_back(v);
  return j;
}

int cmd_validate(const std::string& file, bool as_json) {
  try {
    LoadResult r = std::filesystem::exists(file)
                       ? load_algebra(file)
                       : LoadResult{load_input(file), false, ""};
    if (as_json) {
      json j;
      j["valid"] = true;
      j["name"] = r.algebra.name;
      j["relabeled"] = r.relabeled;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "valid\n";
    }
    return kExitTrue;
  } catch (const ValidationError& e) {
    if (as_json) {
      json j;
      j["valid"] = false;
      j["violations"] = json::array();
      for (const auto& v : e.report.violations) {
        json vj;
        vj["axiom"] = v.axiom;
        vj["witness"] = v.witness;
        vj["detail"] = v.detail;
        j["violations"].push_back(vj);
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << e.report.summary();
    }
    return kExitInvalid;
  }
}

int cmd_classify(const FiniteAlgebra& a, bool as_json) {
  const VarietyProfile p = classify(a);
  if (as_json) {
    std::cout << profile_to_json(p).dump(2) << "\n";
    return kExitTrue;
  }
  std::cout << "equations:";
  for (const auto& [eq, v] : p.equation_flags)
    std::cout << ' ' << to_string(eq) << (v ? "=yes" : "=no");
  std::cout << "\nmemberships:";
  for (Variety v : p.memberships) std::cout << ' ' << to_string(v);
  std::cout << "\nlinearly-ordered: " << (p.linearly_ordered ? "yes" : "no")
            << "\n";
  return kExitTrue;
}

int cmd_filters(const FiniteAlgebra& a, bool maximal, bool as_json) {
  const auto filters = all_filters(a, maximal);
  if (as_json) {
    json j = json::array();
    for (const auto& f : filters) j.push_back(f.member_list());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& f : filters) std::cout << set_to_string(f.members) << "\n";
  }
  return kExitTrue;
}

int cmd_radical(const FiniteAlgebra& a, bool as_json) {
  const RadicalReport r = radical_report(a);
  if (as_json) {
    json j;
    j["radical"] = r.radical.member_list();
    j["dense"] = r.dense.member_list();
    if (r.principal_unity) j["principal_unity"] = *r.principal_unity;
    j["semisimple"] = r.semisimple;
    j["radical_dense"] = r.radical_dense;
    std::cout << j.dump(2) << "\n";
    return kExitTrue;
  }
  std::cout << "radical: " << set_to_string(r.radical.members) << "\n"
            << "dense: " << set_to_string(r.dense.members) << "\n";
  std::cout << "principal-unity: ";
  if (r.principal_unity)
    std::cout << *r.principal_unity << "\n";
  else
    std::cout << "none\n";
  std::cout << "semisimple: " << (r.semisimple ? "yes" : "no") << "\n"
            << "radical-dense: " << (r.radical_dense ? "yes" : "no") << "\n";
  return kExitTrue;
}

int cmd_hom(const FiniteAlgebra& a, const FiniteAlgebra& b,
            const std::vector<std::string>& pins, bool mono, bool iso,
            bool count, bool exists, bool as_json) {
  SearchConstraint c;
  if (mono) c.mode = SearchMode::Mono;
  if (iso) c.mode = SearchMode::Iso;
  if (count && !mono && !iso) c.mode = SearchMode::Count;
  if (exists && !count && !mono && !iso) c.mode = SearchMode::Exists;
  for (const auto& pin : pins) {
    const auto eq = pin.find('=');
    if (eq == std::string::npos)
      throw CliError{kExitUsage, "--pin expects s=t, got " + pin};
    try {
      c.pins.push_back(
          {std::stoi(pin.substr(0, eq)), std::stoi(pin.substr(eq + 1))});
    } catch (const std::exception&) {
      throw CliError{kExitUsage, "--pin expects integer indices: " + pin};
    }
  }
  const SearchResult r = homomorphisms(a, b, c);
  if (as_json) {
    json j;
    j["count"] = r.count;
    j["exists"] = r.exists;
    if (!count && !exists) {
      j["morphisms"] = json::array();
      for (const auto& m : r.morphisms)
        j["morphisms"].push_back(morphism_to_json(m));
    }
    std::cout << j.dump(2) << "\n";
  } else if (count) {
    std::cout << r.count << "\n";
  } else if (exists) {
    std::cout << (r.exists ? "yes" : "no") << "\n";
  } else {
    for (const auto& m : r.morphisms) std::cout << m.to_string() << "\n";
  }
  if (exists) return r.exists ? kExitTrue : kExitFalse;
  return kExitTrue;
}

int run(int argc, char** argv) {
  CLI::App app{"finite residuated-lattice and bounded-hoop workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // subcommands inherit this: --json may trail them
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file_a, file_b, out_path, filter_arg, class_dir, only;
  std::vector<std::string> pins;
  bool maximal = false, mono = false, iso = false, count = false,
       exists = false, count_only = false;
  int size = 0;
  std::string variety, signature = "rl", catalog_name;

  auto* validate = app.add_subcommand("validate", "check the axioms");
  validate->add_option("algebra", file_a)->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "equations and varieties");
  classify_cmd->add_option("algebra", file_a)->required();

  auto* filters = app.add_subcommand("filters", "implicative filters");
  filters->add_option("algebra", file_a)->required();
  filters->add_flag("--maximal", maximal, "maximal proper filters only");

  auto* radical = app.add_subcommand("radical", "radical and dense machinery");
  radical->add_option("algebra", file_a)->required();

  auto* quot = app.add_subcommand("quotient", "quotient by a filter");
  quot->add_option("algebra", file_a)->required();
  quot->add_option("--filter", filter_arg, "filter members i,j,k")->required();
  quot->add_option("-o,--output", out_path);

  auto* product = app.add_subcommand("product", "direct product");
  product->add_option("left", file_a)->required();
  product->add_option("right", file_b)->required();
  product->add_option("-o,--output", out_path);

  auto* diamond_cmd = app.add_subcommand("diamond", "order-pair extension");
  diamond_cmd->add_option("algebra", file_a)->required();
  diamond_cmd->add_option("-o,--output", out_path);

  auto* subs = app.add_subcommand("subalgebras", "all subuniverses");
  subs->add_option("algebra", file_a)->required();

  auto* hom = app.add_subcommand("hom", "homomorphism search");
  hom->add_option("source", file_a)->required();
  hom->add_option("target", file_b)->required();
  hom->add_flag("--mono", mono, "injective only");
  hom->add_flag("--iso", iso, "isomorphisms only");
  hom->add_flag("--count", count, "print the count");
  hom->add_flag("--exists", exists, "existence; exit 1 when none");
  hom->add_option("--pin", pins, "pin source=target, repeatable");

  auto* retract = app.add_subcommand("retract", "is A a retract of C");
  retract->add_option("algebra", file_a)->required();
  retract->add_option("containing", file_b)->required();

  auto* absretract =
      app.add_subcommand("absretract", "absolute retract relative to a class");
  absretract->add_option("algebra", file_a)->required();
  absretract->add_option("--class", class_dir, "directory of algebra files")
      ->required();

  auto* injective =
      app.add_subcommand("injective", "injectivity relative to a class");
  injective->add_option("algebra", file_a)->required();
  injective->add_option("--class", class_dir, "directory of algebra files")
      ->required();

  auto* enumerate = app.add_subcommand("enumerate", "all algebras of a size");
  enumerate->add_option("--size", size, "carrier size")->required();
  enumerate->add_option("--variety", variety, "membership constraint");
  enumerate->add_option("--signature", signature, "rl|hoop|bounded_hoop");
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_option("-o,--output", out_path, "directory for documents");

  auto* catalog = app.add_subcommand("catalog", "named algebras");
  auto* catalog_list_cmd = catalog->add_subcommand("list", "known names");
  auto* catalog_get_cmd = catalog->add_subcommand("get", "emit one algebra");
  catalog_get_cmd->add_option("name", catalog_name)->required();
  catalog_get_cmd->add_option("-o,--output", out_path);
  catalog->require_subcommand(1);

  auto* suite = app.add_subcommand("paper-suite", "run the theorem battery");
  suite->add_option("--only", only, "run checks whose name contains this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (validate->parsed()) return cmd_validate(file_a, as_json);
  if (classify_cmd->parsed()) return cmd_classify(load_input(file_a), as_json);
  if (filters->parsed())
    return cmd_filters(load_input(file_a), maximal, as_json);
  if (radical->parsed()) return cmd_radical(load_input(file_a), as_json);

  if (quot->parsed()) {
    const FiniteAlgebra a = load_input(file_a);
    ElemSet members = 0;
    try {
      size_t pos = 0;
      while (pos < filter_arg.size()) {
        size_t comma = filter_arg.find(',', pos);
        if (comma == std::string::npos) comma = filter_arg.size();
        const int idx = std::stoi(filter_arg.substr(pos, comma - pos));
        if (idx < 0 || idx >= a.size)
          throw CliError{kExitUsage, "filter member out of range"};
        members = set_add(members, idx);
        pos = comma + 1;
      }
    } catch (const std::invalid_argument&) {
      throw CliError{kExitUsage, "--filter expects indices i,j,k"};
    }
    if (!is_filter(a, members))
      throw CliError{kExitUsage,
                     set_to_string(members) + " is not an implicative filter"};
    write_or_print(quotient(a, Filter{&a, members}).algebra, out_path);
    return kExitTrue;
  }

  if (product->parsed()) {
    write_or_print(direct_product(load_input(file_a), load_input(file_b)),
                   out_path);
    return kExitTrue;
  }

  if (diamond_cmd->parsed()) {
    write_or_print(diamond(load_input(file_a)).algebra, out_path);
    return kExitTrue;
  }

  if (subs->parsed()) {
    const FiniteAlgebra a = load_input(file_a);
    const auto all = all_subalgebras(a);
    if (as_json) {
      json j = json::array();
      for (ElemSet s : all) j.push_back(set_to_vector(s));
      std::cout << j.dump(2) << "\n";
    } else {
      for (ElemSet s : all) std::cout << set_to_string(s) << "\n";
    }
    return kExitTrue;
  }

  if (hom->parsed()) {
    const FiniteAlgebra a = load_input(file_a);
    const FiniteAlgebra b = load_input(file_b);
    return cmd_hom(a, b, pins, mono, iso, count, exists, as_json);
  }

  if (retract->parsed()) {
    const FiniteAlgebra a = load_input(file_a);
    const FiniteAlgebra c = load_input(file_b);
    const RetractResult r = is_retract_of(a, c);
    if (as_json) {
      json j;
      j["retract"] = r.retract;
      if (r.retract) {
        j["embedding"] = morphism_to_json(r.embedding);
        j["retraction"] = morphism_to_json(r.retraction);
      }
      std::cout << j.dump(2) << "\n";
    } else if (r.retract) {
      std::cout << "retract: yes\nembedding: " << r.embedding.to_string()
                << "\nretraction: " << r.retraction.to_string() << "\n";
    } else {
      std::cout << "retract: no\n";
    }
    return r.retract ? kExitTrue : kExitFalse;
  }

  if (absretract->parsed() || injective->parsed()) {
    const FiniteAlgebra a = load_input(file_a);
    const auto cls = load_class_dir(class_dir);
    std::vector<const FiniteAlgebra*> ptrs;
    for (const auto& m : cls) ptrs.push_back(&m);
    // A positive answer refutes nothing outside the supplied class, so it is
    // always labeled as class-relative.
    if (absretract->parsed()) {
      const AbsoluteRetractResult r = is_absolute_retract_relative(a, ptrs);
      if (as_json) {
        json j;
        j["absolute_retract_relative_to_class"] = r.holds;
        j["class_size"] = ptrs.size();
        if (!r.holds) {
          j["failing_member"] = cls[r.failing_member].name;
          j["failing_embedding"] = morphism_to_json(r.failing_embedding);
        }
        std::cout << j.dump(2) << "\n";
      } else if (r.holds) {
        std::cout << "absolute retract relative to class (" << ptrs.size()
                  << " algebras): yes\n";
      } else {
        std::cout << "absolute retract relative to class: no\n"
                  << "failing embedding into " << cls[r.failing_member].name
                  << ": " << r.failing_embedding.to_string() << "\n";
      }
      return r.holds ? kExitTrue : kExitFalse;
    }
    const InjectivityResult r = is_injective_relative(a, ptrs);
    if (as_json) {
      json j;
      j["injective_relative_to_class"] = r.holds;
      j["class_size"] = ptrs.size();
      if (!r.holds) {
        j["mono_source"] = cls[r.b_index].name;
        j["mono_target"] = cls[r.c_index].name;
        j["mono"] = morphism_to_json(r.mono);
        j["hom"] = morphism_to_json(r.hom);
      }
      std::cout << j.dump(2) << "\n";
    } else if (r.holds) {
      std::cout << "injective relative to class (" << ptrs.size()
                << " algebras): yes\n";
    } else {
      std::cout << "injective relative to class: no\n"
                << "unextendable: hom from " << cls[r.b_index].name
                << " along mono into " << cls[r.c_index].name << "\n";
    }
    return r.holds ? kExitTrue : kExitFalse;
  }

  if (enumerate->parsed()) {
    const auto sig = signature_from_string(signature);
    if (!sig) throw CliError{kExitUsage, "unknown signature " + signature};
    EnumerationFilter f;
    if (!variety.empty()) {
      const auto v = variety_from_string(variety);
      if (!v) throw CliError{kExitUsage, "unknown variety " + variety};
      f.require_memberships.insert(*v);
    }
    std::vector<FiniteAlgebra> found;
    try {
      found = enumerate_algebras(size, *sig, f);
    } catch (const std::invalid_argument& e) {
      throw CliError{kExitUsage, e.what()};
    }
    if (count_only) {
      if (as_json) {
        json j;
        j["count"] = found.size();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << found.size() << "\n";
      }
      return kExitTrue;
    }
    if (!out_path.empty()) {
      std::filesystem::create_directories(out_path);
      json index = json::array();
      for (const auto& a : found) {
        const std::string fname = a.name + ".json";
        save_algebra(a, (std::filesystem::path(out_path) / fname).string());
        json entry;
        entry["file"] = fname;
        entry["name"] = a.name;
        entry["size"] = a.size;
        entry["memberships"] = json::array();
        for (Variety v : classify(a).memberships)
          entry["memberships"].push_back(to_string(v));
        index.push_back(entry);
      }
      std::ofstream idx(std::filesystem::path(out_path) / "index.json");
      idx << index.dump(2) << "\n";
      std::cout << found.size() << " algebras written to " << out_path << "\n";
      return kExitTrue;
    }
    if (as_json) {
      json j = json::array();
      for (const auto& a : found) j.push_back(a.name);
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& a : found) std::cout << a.name << "\n";
    }
    return kExitTrue;
  }

  if (catalog->parsed()) {
    if (catalog_list_cmd->parsed()) {
      if (as_json) {
        json j = catalog_list();
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& name : catalog_list()) std::cout << name << "\n";
      }
      return kExitTrue;
    }
    if (catalog_get_cmd->parsed()) {
      try {
        write_or_print(catalog_get(catalog_name), out_path);
      } catch (const std::invalid_argument& e) {
        throw CliError{kExitUsage, e.what()};
      }
      return kExitTrue;
    }
  }

  if (suite->parsed()) {
    const SuiteReport report = run_paper_suite(only);
    if (as_json) {
      json j = json::array();
      for (const auto& c : report.checks) {
        json cj;
        cj["name"] = c.name;
        cj["anchor"] = c.anchor;
        cj["status"] = c.status == CheckStatus::Pass   ? "pass"
                       : c.status == CheckStatus::Fail ? "fail"
                                                       : "skip";
        cj["detail"] = c.detail;
        cj["seconds"] = c.seconds;
        j.push_back(cj);
      }
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& c : report.checks) {
        const char* tag = c.status == CheckStatus::Pass   ? "PASS"
                          : c.status == CheckStatus::Fail ? "FAIL"
                                                          : "SKIP";
        std::cout << tag << " " << c.name << " (" << c.anchor << ")";
        if (c.status == CheckStatus::Fail) std::cout << " " << c.detail;
        std::cout << "\n";
      }
    }
    return report.all_passed() ? kExitTrue : kExitFalse;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
