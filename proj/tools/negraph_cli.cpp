// negraph command-line front end. Talks to the core exclusively through
// the C API in negraph.h.
//
// Exit codes: 0 success, 1 input/data error, 2 pattern syntax error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "negraph.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitPatternError = 2;

int exit_code_for(ng_status status) {
  return status == NG_ERR_PATTERN ? kExitPatternError : kExitDataError;
}

int complain(ng_status status) {
  std::cerr << "negraph: " << ng_last_error() << "\n";
  return exit_code_for(status);
}

// Expand a --in value: a literal path, or a '*'/'?' glob over its parent
// directory (filename component only).
std::vector<std::string> expand_input(const std::string& pattern) {
  if (pattern.find('*') == std::string::npos &&
      pattern.find('?') == std::string::npos)
    return {pattern};

  fs::path p(pattern);
  fs::path dir = p.parent_path().empty() ? fs::path(".") : p.parent_path();
  const std::string name = p.filename().string();

  auto matches = [&name](const std::string& candidate) {
    // Greedy wildcard match with backtracking on '*'.
    std::size_t ni = 0, ci = 0, star = std::string::npos, restart = 0;
    while (ci < candidate.size()) {
      if (ni < name.size() &&
          (name[ni] == '?' || name[ni] == candidate[ci])) {
        ++ni;
        ++ci;
      } else if (ni < name.size() && name[ni] == '*') {
        star = ni++;
        restart = ci;
      } else if (star != std::string::npos) {
        ni = star + 1;
        ci = ++restart;
      } else {
        return false;
      }
    }
    while (ni < name.size() && name[ni] == '*') ++ni;
    return ni == name.size();
  };

  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    if (matches(entry.path().filename().string()))
      out.push_back(entry.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CorpusHandle {
  ng_corpus* corpus = nullptr;
  ~CorpusHandle() { ng_corpus_close(corpus); }
};

int load_corpus(const std::vector<std::string>& inputs, CorpusHandle& handle) {
  std::vector<std::string> files;
  for (const std::string& in : inputs)
    for (std::string& f : expand_input(in)) files.push_back(std::move(f));
  if (files.empty()) {
    std::cerr << "negraph: no input files\n";
    return kExitDataError;
  }
  ng_status status = ng_corpus_open(&handle.corpus);
  if (status != NG_OK) return complain(status);
  for (const std::string& f : files) {
    status = ng_corpus_add_file(handle.corpus, f.c_str());
    if (status != NG_OK) return complain(status);
  }
  return kExitOk;
}

// Data goes to stdout unless --out is set; then it is written to a
// temporary file and renamed, so failures leave no partial output.
int write_output(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << data;
    return kExitOk;
  }
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) {
      std::cerr << "negraph: cannot write '" << tmp << "'\n";
      return kExitDataError;
    }
    out << data;
    if (!out) {
      out.close();
      fs::remove(tmp);
      std::cerr << "negraph: write failed for '" << tmp << "'\n";
      return kExitDataError;
    }
  }
  std::error_code ec;
  fs::rename(tmp, out_path, ec);
  if (ec) {
    fs::remove(tmp);
    std::cerr << "negraph: cannot rename to '" << out_path << "'\n";
    return kExitDataError;
  }
  return kExitOk;
}

int run_detect(const std::string& rules, const std::string& lexicon,
               const std::vector<std::string>& inputs,
               const std::string& out_path, int jobs) {
  ng_engine* engine = nullptr;
  ng_status status = ng_engine_open(rules.c_str(), lexicon.c_str(), &engine);
  if (status != NG_OK) return complain(status);

  CorpusHandle corpus;
  int code = load_corpus(inputs, corpus);
  if (code != kExitOk) {
    ng_engine_close(engine);
    return code;
  }

  ng_results* results = nullptr;
  status = ng_detect(engine, corpus.corpus, jobs, &results);
  ng_engine_close(engine);
  if (status != NG_OK) return complain(status);

  char* jsonl = nullptr;
  status = ng_results_to_jsonl(results, &jsonl);
  ng_results_close(results);
  if (status != NG_OK) return complain(status);
  code = write_output(jsonl, out_path);
  ng_free(jsonl);
  return code;
}

int run_eval(const std::vector<std::string>& inputs, const std::string& gold,
             const std::string& mode, const std::string& out_path) {
  if (inputs.size() != 1) {
    std::cerr << "negraph: eval expects exactly one --in results file\n";
    return kExitDataError;
  }
  ng_results* results = nullptr;
  ng_status status = ng_results_open_jsonl(inputs[0].c_str(), &results);
  if (status != NG_OK) return complain(status);

  const int eval_mode =
      mode == "negation" ? NG_EVAL_NEGATION : NG_EVAL_POSITIVE;
  char* report = nullptr;
  status = ng_evaluate(results, gold.c_str(), eval_mode, &report);
  ng_results_close(results);
  if (status != NG_OK) return complain(status);
  int code = write_output(report, out_path);
  ng_free(report);
  return code;
}

int run_match(const std::string& pattern,
              const std::vector<std::string>& inputs,
              const std::string& anchor, const std::string& out_path) {
  CorpusHandle corpus;
  int code = load_corpus(inputs, corpus);
  if (code != kExitOk) return code;

  char* report = nullptr;
  ng_status status =
      ng_explain_pattern(pattern.c_str(), corpus.corpus,
                         anchor.empty() ? nullptr : anchor.c_str(), &report);
  if (status != NG_OK) return complain(status);
  code = write_output(report, out_path);
  ng_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negation and uncertainty detection over dependency graphs"};
  app.require_subcommand(1);

  std::string rules, lexicon, out_path, gold, mode = "positive", pattern,
                                              anchor;
  std::vector<std::string> inputs;
  int jobs = 1;

  CLI::App* detect =
      app.add_subcommand("detect", "classify findings in CoNLL-U input");
  detect->add_option("--rules", rules, "rule file (TSV)")->required();
  detect->add_option("--lexicon", lexicon, "lexicon file (TSV)")->required();
  detect->add_option("--in", inputs, "input CoNLL-U files (repeatable, glob)")
      ->required();
  detect->add_option("--out", out_path, "output JSONL path (default stdout)");
  detect->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  CLI::App* eval =
      app.add_subcommand("eval", "score detection results against gold");
  eval->add_option("--in", inputs, "results JSONL file")->required();
  eval->add_option("--gold", gold, "gold JSONL file")->required();
  eval->add_option("--mode", mode, "positive | negation")
      ->check(CLI::IsMember({"positive", "negation"}));
  eval->add_option("--out", out_path, "report path (default stdout)");

  CLI::App* match =
      app.add_subcommand("match", "debug a pattern against CoNLL-U input");
  match->add_option("--pattern", pattern, "pattern source")->required();
  match->add_option("--in", inputs, "input CoNLL-U files (repeatable, glob)")
      ->required();
  match->add_option("--anchor", anchor,
                    "anchor vertex index or lemma (default: all vertices)");
  match->add_option("--out", out_path, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "negraph: " << e.what() << "\n";
    std::cerr << app.help();
    return kExitDataError;
  }

  if (detect->parsed()) return run_detect(rules, lexicon, inputs, out_path, jobs);
  if (eval->parsed()) return run_eval(inputs, gold, mode, out_path);
  if (match->parsed()) return run_match(pattern, inputs, anchor, out_path);
  return kExitDataError;
}
