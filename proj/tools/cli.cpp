#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cfga/closure.hpp"
#include "cfga/errors.hpp"
#include "cfga/harness.hpp"
#include "cfga/search.hpp"
#include "cfga/text.hpp"

namespace cfga::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

Grammar load_grammar(const std::string& path) {
  try {
    return parse_grammar(read_file(path));
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.line(), path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw Error(path + ": " + e.what());
  }
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".cfg") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> corpus;
  corpus.reserve(files.size());
  for (const auto& path : files) {
    corpus.push_back(CorpusEntry{path.stem().string(), load_grammar(path.string())});
  }
  return corpus;
}

struct BoundsOptions {
  std::size_t max_steps = 8;
  std::size_t max_len = 12;
  std::size_t form_cap = 1'000'000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-steps", max_steps, "Maximum derivation steps")
        ->capture_default_str();
    cmd->add_option("--max-len", max_len, "Maximum reported form length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--form-cap", form_cap, "Explored-form budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  SearchBounds search() const { return SearchBounds{max_steps, max_len, form_cap}; }
};

void write_counterexamples(const SuiteSummary& summary, const std::string& dir,
                           std::ostream& err) {
  fs::create_directories(dir);
  std::size_t n = 0;
  for (const TheoremReport& report : summary.reports) {
    if (!report.counterexample) continue;
    const Counterexample& cex = *report.counterexample;
    const std::string base =
        (fs::path(dir) / ("cex" + std::to_string(n++))).string();
    for (std::size_t i = 0; i < cex.inputs.size(); ++i) {
      write_file(base + ".input" + std::to_string(i) + ".cfg",
                 serialize_grammar(cex.inputs[i].grammar));
    }
    if (cex.constructed) {
      write_file(base + ".constructed.cfg", serialize_grammar(*cex.constructed));
    }
    write_file(base + ".form.cert",
               serialize_certificate(Derivation{cex.form, {}}));
    err << "counterexample for " << theorem_name(report.id) << " "
        << report.inputs << " written to " << base << ".*\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"cfga — an executable algebra of context-free grammars:\n"
               "closure constructions, derivation certificates, and bounded\n"
               "verification of their correctness theorems."};
  app.require_subcommand(1);

  // union / cat / star ------------------------------------------------
  std::string in_a, in_b, out_path;
  auto* uni = app.add_subcommand("union", "Union grammar of A and B");
  uni->add_option("A", in_a, "First grammar file")->required();
  uni->add_option("B", in_b, "Second grammar file")->required();
  uni->add_option("-o,--output", out_path, "Output grammar file")->required();

  auto* cat = app.add_subcommand("cat", "Concatenation grammar of A and B");
  cat->add_option("A", in_a, "First grammar file")->required();
  cat->add_option("B", in_b, "Second grammar file")->required();
  cat->add_option("-o,--output", out_path, "Output grammar file")->required();

  auto* star = app.add_subcommand("star", "Kleene closure grammar of A");
  star->add_option("A", in_a, "Source grammar file")->required();
  star->add_option("-o,--output", out_path, "Output grammar file")->required();

  // enum ---------------------------------------------------------------
  std::string enum_grammar;
  BoundsOptions enum_bounds;
  bool sentences_only = false;
  auto* enum_cmd = app.add_subcommand(
      "enum", "Enumerate reachable sentential forms (shortlex order)");
  enum_cmd->add_option("G", enum_grammar, "Grammar file")->required();
  enum_bounds.attach(enum_cmd);
  enum_cmd->add_flag("--sentences-only", sentences_only,
                     "Only terminal-only forms");

  // check ----------------------------------------------------------------
  std::string check_grammar, check_cert;
  auto* check_cmd =
      app.add_subcommand("check", "Check a derivation certificate");
  check_cmd->add_option("G", check_grammar, "Grammar file")->required();
  check_cmd->add_option("CERT", check_cert, "Certificate file")->required();

  // search ---------------------------------------------------------------
  std::string search_grammar, search_from, search_to, search_out;
  BoundsOptions search_bounds_opt;
  auto* search_cmd = app.add_subcommand(
      "search", "Breadth-first search for a derivation between two forms");
  search_cmd->add_option("G", search_grammar, "Grammar file")->required();
  search_cmd->add_option("--from", search_from, "Start form")->required();
  search_cmd->add_option("--to", search_to, "Target form")->required();
  search_bounds_opt.attach(search_cmd);
  search_cmd->add_option("-o,--output", search_out,
                         "Write the certificate here instead of stdout");

  // classify-union ---------------------------------------------------------
  std::string cls_a, cls_b, cls_form;
  auto* classify_cmd = app.add_subcommand(
      "classify-union", "Classify a union-grammar sentential form");
  classify_cmd->add_option("A", cls_a, "First source grammar")->required();
  classify_cmd->add_option("B", cls_b, "Second source grammar")->required();
  classify_cmd->add_option("--form", cls_form, "Form to classify")->required();

  // decompose-cat ------------------------------------------------------------
  std::string dc_a, dc_b, dc_form, dc_out;
  BoundsOptions dc_bounds;
  auto* dcat_cmd = app.add_subcommand(
      "decompose-cat", "Decompose a concatenation-grammar form");
  dcat_cmd->add_option("A", dc_a, "First source grammar")->required();
  dcat_cmd->add_option("B", dc_b, "Second source grammar")->required();
  dcat_cmd->add_option("--form", dc_form, "Form to decompose")->required();
  dc_bounds.attach(dcat_cmd);
  dcat_cmd->add_option("-o,--output", dc_out,
                       "Certificate file prefix (.first/.second.cert)");

  // decompose-star -----------------------------------------------------------
  std::string ds_a, ds_form, ds_out;
  BoundsOptions ds_bounds;
  auto* dstar_cmd = app.add_subcommand(
      "decompose-star", "Decompose a closure-grammar form");
  dstar_cmd->add_option("A", ds_a, "Source grammar")->required();
  dstar_cmd->add_option("--form", ds_form, "Form to decompose")->required();
  ds_bounds.attach(dstar_cmd);
  dstar_cmd->add_option("-o,--output", ds_out,
                        "Certificate file prefix (.prefix/.tail.cert)");

  // verify ---------------------------------------------------------------
  std::string verify_corpus, verify_out;
  std::size_t verify_random = 0;
  std::uint64_t verify_seed = 0;
  BoundsOptions verify_bounds;
  std::size_t verify_segments = 3, verify_contexts = 12,
              verify_cases = 10'000'000;
  bool verify_mutants = false;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run the theorem suite over a grammar corpus");
  auto* source = verify_cmd->add_option_group("corpus source");
  source->add_option("--corpus", verify_corpus,
                     "Directory of .cfg grammar files");
  source->add_option("--random", verify_random,
                     "Number of generated grammars")
      ->check(CLI::PositiveNumber);
  source->require_option(1);
  verify_cmd->add_option("--seed", verify_seed, "Generator seed")
      ->capture_default_str();
  verify_bounds.attach(verify_cmd);
  verify_cmd
      ->add_option("--max-segments", verify_segments,
                   "Closure witness segments")
      ->capture_default_str();
  verify_cmd
      ->add_option("--max-contexts", verify_contexts,
                   "Context forms for the embedding lemma")
      ->capture_default_str();
  verify_cmd->add_option("--max-cases", verify_cases, "Per-check case budget")
      ->capture_default_str();
  verify_cmd->add_flag("--mutants", verify_mutants,
                       "Run the construction-mutant sensitivity checks");
  verify_cmd->add_option("-o,--output", verify_out,
                         "Directory for counterexample files");

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cfga");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (uni->parsed()) {
      write_file(out_path,
                 serialize_grammar(union_grammar(load_grammar(in_a),
                                                 load_grammar(in_b))));
      return 0;
    }
    if (cat->parsed()) {
      write_file(out_path,
                 serialize_grammar(concat_grammar(load_grammar(in_a),
                                                  load_grammar(in_b))));
      return 0;
    }
    if (star->parsed()) {
      write_file(out_path, serialize_grammar(kleene_grammar(load_grammar(in_a))));
      return 0;
    }

    if (enum_cmd->parsed()) {
      const Grammar g = load_grammar(enum_grammar);
      for (const RankedForm& rf : enumerate_forms(g, enum_bounds.search())) {
        if (sentences_only &&
            std::any_of(rf.form.begin(), rf.form.end(),
                        [](const Symbol& s) { return s.is_nonterminal(); })) {
          continue;
        }
        out << "steps=" << rf.steps << ":";
        if (!rf.form.empty()) out << " " << form_text(rf.form);
        out << "\n";
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      const Grammar g = load_grammar(check_grammar);
      const Derivation d = parse_certificate(read_file(check_cert));
      const CheckResult r = check_derivation(g, d);
      if (!r.accepted) {
        err << "rejected at step " << r.failed_step << ": " << r.reason << "\n";
        return 1;
      }
      out << form_text(r.final_form) << "\n";
      return 0;
    }

    if (search_cmd->parsed()) {
      const Grammar g = load_grammar(search_grammar);
      const auto d = derive_search(g, parse_form(search_from),
                                   parse_form(search_to),
                                   search_bounds_opt.search());
      if (!d) {
        err << "no derivation within bounds (exhaustively refuted)\n";
        return 1;
      }
      const std::string cert = serialize_certificate(*d);
      if (search_out.empty()) {
        out << cert;
      } else {
        write_file(search_out, cert);
      }
      return 0;
    }

    if (classify_cmd->parsed()) {
      const Grammar a = load_grammar(cls_a);
      const Grammar b = load_grammar(cls_b);
      const UnionClassification cls =
          union_classify(a, b, parse_form(cls_form));
      switch (cls.kind) {
        case UnionClassification::Kind::StartForm:
          out << "start-form\n";
          break;
        case UnionClassification::Kind::FromFirst:
          out << "from-first: " << form_text(cls.unlifted) << "\n";
          break;
        case UnionClassification::Kind::FromSecond:
          out << "from-second: " << form_text(cls.unlifted) << "\n";
          break;
        case UnionClassification::Kind::NotLifted:
          out << "not-lifted\n";
          break;
      }
      return 0;
    }

    if (dcat_cmd->parsed()) {
      const Grammar a = load_grammar(dc_a);
      const Grammar b = load_grammar(dc_b);
      const auto dec =
          cat_decompose(a, b, parse_form(dc_form), dc_bounds.search());
      if (!dec) {
        err << "no decomposition within bounds\n";
        return 1;
      }
      out << "first: " << form_text(dec->first) << "\n";
      out << "second: " << form_text(dec->second) << "\n";
      out << "first-steps: " << dec->first_witness.step_count() << "\n";
      out << "second-steps: " << dec->second_witness.step_count() << "\n";
      if (!dc_out.empty()) {
        write_file(dc_out + ".first.cert",
                   serialize_certificate(dec->first_witness));
        write_file(dc_out + ".second.cert",
                   serialize_certificate(dec->second_witness));
      }
      return 0;
    }

    if (dstar_cmd->parsed()) {
      const Grammar a = load_grammar(ds_a);
      const auto dec = clo_decompose(a, parse_form(ds_form), ds_bounds.search());
      if (!dec) {
        err << "no decomposition within bounds\n";
        return 1;
      }
      switch (dec->kind) {
        case CloDecomposition::Kind::EmptyForm:
          out << "empty-form\n";
          break;
        case CloDecomposition::Kind::StartForm:
          out << "start-form\n";
          break;
        case CloDecomposition::Kind::Split:
          out << "prefix: " << form_text(dec->prefix) << "\n";
          out << "tail: " << form_text(dec->tail) << "\n";
          out << "prefix-steps: " << dec->prefix_witness.step_count() << "\n";
          out << "tail-steps: " << dec->tail_witness.step_count() << "\n";
          if (!ds_out.empty()) {
            write_file(ds_out + ".prefix.cert",
                       serialize_certificate(dec->prefix_witness));
            write_file(ds_out + ".tail.cert",
                       serialize_certificate(dec->tail_witness));
          }
          break;
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      SuiteConfig config;
      if (!verify_corpus.empty()) {
        config.corpus = load_corpus_dir(verify_corpus);
      } else {
        config.corpus = random_corpus(verify_random, verify_seed);
      }
      config.bounds =
          CheckBounds{verify_bounds.max_steps, verify_bounds.max_len,
                      verify_bounds.form_cap, verify_segments,
                      verify_contexts, verify_cases};
      config.mutants = verify_mutants;
      const SuiteSummary summary = run_suite(config);
      out << summary.text();
      if (!verify_out.empty()) {
        write_counterexamples(summary, verify_out, err);
      }
      return summary.all_passed() ? 0 : 1;
    }
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace cfga::cli
