// Copyright 2026 The Wubikit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wubi/bleu.hpp"
#include "wubi/bootstrap.hpp"
#include "wubi/bpe.hpp"
#include "wubi/chars.hpp"
#include "wubi/codec.hpp"
#include "wubi/errors.hpp"
#include "wubi/io.hpp"
#include "wubi/line_pipeline.hpp"
#include "wubi/report.hpp"
#include "wubi/segmenter.hpp"
#include "wubi/stats.hpp"
#include "wubi/vocab.hpp"
#include "wubi/wubi_table.hpp"

namespace {

using namespace wubi;

// Shared option values; each subcommand registers only the flags it uses.
struct Options {
  std::string input = "-";
  std::string hyp_path;
  std::string hyp_b_path;
  std::string ref_path;
  std::string table_path;
  std::string punct_path;
  std::string lexicon_path;
  std::string merges_path;
  std::string vocab_path;
  std::string source_path;
  std::string report_path;
  std::string mode = "strict";
  std::uint64_t cap = 50000;
  std::size_t bpe_size = 10000;
  std::uint64_t bin_width = kDefaultBinWidth;
  std::uint64_t samples = kDefaultBootstrapSamples;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  bool undo = false;
  bool normalize_cn = false;
};

Mode parse_mode(const std::string& mode) {
  return mode == "lenient" ? Mode::lenient : Mode::strict;
}

// Runs fn with the chosen input stream ("-" means stdin).
template <typename Fn>
void with_input(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cin, std::string("stdin"));
    return;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open input file: " + path);
  fn(file, path);
}

std::vector<std::string> read_corpus(const std::string& path) {
  if (path == "-") return read_lines(std::cin);
  return read_lines_file(path);
}

WubiTable load_table_for(const Options& opt) {
  if (opt.table_path.empty()) {
    throw Error("a character table is required (--table or WUBI_TABLE)");
  }
  const WubiTable table = disambiguate(load_table_file(opt.table_path));
  const ValidationReport report = validate(table);
  if (!report.ok()) {
    throw Error("table failed validation: " + report.violations.front().message);
  }
  return table;
}

PunctuationMap load_punct_for(const Options& opt) {
  if (opt.punct_path.empty()) return PunctuationMap::builtin();
  return PunctuationMap::load_file(opt.punct_path);
}

// Serializes lenient-mode diagnostics to stderr, one line each.
class DiagnosticPrinter {
 public:
  explicit DiagnosticPrinter(std::string source) : source_(std::move(source)) {}

  void print(std::size_t line_no, const std::vector<Diagnostic>& diags) {
    if (diags.empty()) return;
    std::lock_guard lock(mutex_);
    for (const auto& diag : diags) {
      std::cerr << source_ << ':' << line_no << ": " << diag.note << " ('"
                << diag.subject << "')\n";
    }
  }

 private:
  std::string source_;
  std::mutex mutex_;
};

// Rethrows codec errors with the input name and line number attached.
template <typename Fn>
std::string guarded(const std::string& source, std::size_t line_no, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(source + ":" + std::to_string(line_no) + ": " + e.what());
  }
}

void write_report(const Options& opt, const nlohmann::json& payload) {
  if (opt.report_path.empty()) return;
  std::ofstream out(opt.report_path, std::ios::binary);
  if (!out) throw Error("cannot write report file: " + opt.report_path);
  out << payload.dump(2) << '\n';
}

std::ostream& null_stream() {
  static struct NullBuffer : std::streambuf {
    int overflow(int c) override { return c; }
  } buffer;
  static std::ostream stream(&buffer);
  return stream;
}

int run_encode(const Options& opt) {
  const WubiTable table = load_table_for(opt);
  const PunctuationMap punct = load_punct_for(opt);
  const Mode mode = parse_mode(opt.mode);
  std::optional<Lexicon> lexicon;
  if (!opt.lexicon_path.empty()) lexicon = load_lexicon_file(opt.lexicon_path);

  with_input(opt.input, [&](std::istream& in, const std::string& source) {
    DiagnosticPrinter diag_out(source);
    const LineFn fn = [&](std::string_view line, std::size_t line_no) {
      return guarded(source, line_no, [&] {
        std::string segmented;
        std::string_view text = line;
        if (lexicon) {
          segmented = segment(line, *lexicon);
          text = segmented;
        }
        std::vector<Diagnostic> diags;
        std::string rendered =
            encode_sentence(text, table, punct, mode, &diags).rendering();
        diag_out.print(line_no, diags);
        return rendered;
      });
    };
    for_each_line_ordered(in, std::cout, opt.threads, fn);
  });
  return 0;
}

int run_decode(const Options& opt) {
  const WubiTable table = load_table_for(opt);
  const PunctuationMap punct = load_punct_for(opt);
  const Mode mode = parse_mode(opt.mode);

  with_input(opt.input, [&](std::istream& in, const std::string& source) {
    DiagnosticPrinter diag_out(source);
    const LineFn fn = [&](std::string_view line, std::size_t line_no) {
      return guarded(source, line_no, [&] {
        std::vector<Diagnostic> diags;
        std::string decoded = decode_sentence(line, table, punct, mode, &diags);
        diag_out.print(line_no, diags);
        return decoded;
      });
    };
    for_each_line_ordered(in, std::cout, opt.threads, fn);
  });
  return 0;
}

int run_segment(const Options& opt) {
  Lexicon lexicon;
  if (!opt.lexicon_path.empty()) lexicon = load_lexicon_file(opt.lexicon_path);

  with_input(opt.input, [&](std::istream& in, const std::string& source) {
    const LineFn fn = [&](std::string_view line, std::size_t line_no) {
      return guarded(source, line_no,
                     [&] { return segment(line, lexicon); });
    };
    for_each_line_ordered(in, std::cout, opt.threads, fn);
  });
  return 0;
}

int run_roundtrip_check(const Options& opt) {
  const WubiTable table = load_table_for(opt);
  const PunctuationMap punct = load_punct_for(opt);
  const Mode mode = parse_mode(opt.mode);

  std::atomic<std::uint64_t> mismatches{0};
  with_input(opt.input, [&](std::istream& in, const std::string& source) {
    const LineFn fn = [&](std::string_view line, std::size_t line_no) {
      return guarded(source, line_no, [&] {
        const std::string encoded =
            encode_sentence(line, table, punct, mode).rendering();
        const std::string decoded = decode_sentence(encoded, table, punct, mode);
        if (decoded != line) mismatches.fetch_add(1);
        return std::string();
      });
    };
    for_each_line_ordered(in, null_stream(), opt.threads, fn);
  });
  std::cout << mismatches.load() << " mismatches\n";
  return mismatches.load() == 0 ? 0 : 1;
}

int run_vocab(const Options& opt) {
  if (!opt.vocab_path.empty()) {
    // Apply mode: substitute out-of-vocabulary tokens.
    const Vocabulary vocab = Vocabulary::load_file(opt.vocab_path);
    with_input(opt.input, [&](std::istream& in, const std::string&) {
      const LineFn fn = [&](std::string_view line, std::size_t) {
        return apply_vocab(line, vocab);
      };
      for_each_line_ordered(in, std::cout, opt.threads, fn);
    });
    return 0;
  }

  TokenCounts counts;
  std::uint64_t total = 0;
  with_input(opt.input, [&](std::istream& in, const std::string&) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      total += count_tokens(line, counts);
    }
  });
  const Vocabulary vocab = build_vocab(counts, total, opt.cap);
  vocab.save(std::cout);
  std::cerr << "vocab: " << vocab.entries().size() << " entries, coverage "
            << vocab.coverage() << '\n';
  write_report(opt, vocab_summary_json(vocab, total));
  return 0;
}

int run_bpe_learn(const Options& opt) {
  BpeModel model;
  with_input(opt.input, [&](std::istream& in, const std::string&) {
    model = bpe_learn(in, opt.bpe_size);
  });
  model.save(std::cout);
  std::cerr << "bpe: " << model.merges.size() << " merges, "
            << model.vocab.size() << " symbols\n";
  return 0;
}

int run_bpe_apply(const Options& opt) {
  if (opt.undo) {
    with_input(opt.input, [&](std::istream& in, const std::string&) {
      const LineFn fn = [](std::string_view line, std::size_t) {
        return bpe_undo(line);
      };
      for_each_line_ordered(in, std::cout, opt.threads, fn);
    });
    return 0;
  }
  if (opt.merges_path.empty()) {
    throw Error("bpe-apply needs --merges (or --undo)");
  }
  const BpeModel model = BpeModel::load_file(opt.merges_path);
  const BpeApplier applier(model);
  with_input(opt.input, [&](std::istream& in, const std::string&) {
    const LineFn fn = [&](std::string_view line, std::size_t) {
      return applier.apply_sentence(line);
    };
    for_each_line_ordered(in, std::cout, opt.threads, fn);
  });
  return 0;
}

int run_chars(const Options& opt) {
  with_input(opt.input, [&](std::istream& in, const std::string& source) {
    const LineFn fn = [&](std::string_view line, std::size_t line_no) {
      return guarded(source, line_no, [&] {
        return opt.undo ? from_characters(line) : to_characters(line);
      });
    };
    for_each_line_ordered(in, std::cout, opt.threads, fn);
  });
  return 0;
}

int run_stats(const Options& opt) {
  StatsAccumulator acc;
  with_input(opt.input, [&](std::istream& in, const std::string&) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      acc.add_sentence(line);
    }
  });
  const CorpusStats stats = acc.finish();
  std::cout << human_summary(stats) << '\n';
  write_report(opt, to_json(stats));
  return 0;
}

// Shared by bleu / binned-bleu / bootstrap: optional Wubi normalization of
// Chinese-side streams before scoring.
std::vector<std::string> maybe_normalize(const Options& opt,
                                         std::vector<std::string> lines,
                                         const char* what) {
  if (!opt.normalize_cn) return lines;
  const WubiTable table = load_table_for(opt);
  const PunctuationMap punct = load_punct_for(opt);
  std::vector<std::string> diagnostics;
  auto normalized = normalize_for_bleu(lines, table, punct, &diagnostics);
  for (const auto& diag : diagnostics) {
    std::cerr << what << ": " << diag << '\n';
  }
  return normalized;
}

std::optional<std::vector<std::uint64_t>> load_source_lengths(
    const Options& opt) {
  if (opt.source_path.empty()) return std::nullopt;
  std::vector<std::uint64_t> lengths;
  for (const auto& line : read_lines_file(opt.source_path)) {
    lengths.push_back(split_tokens(line).size());
  }
  return lengths;
}

int run_bleu(const Options& opt, bool binned_only) {
  const auto hyp = maybe_normalize(opt, read_corpus(opt.hyp_path), "hyp");
  const auto ref = maybe_normalize(opt, read_corpus(opt.ref_path), "ref");
  const auto source_lengths = load_source_lengths(opt);
  const BleuReport report = corpus_bleu(
      hyp, ref, source_lengths ? &*source_lengths : nullptr, opt.bin_width);
  if (binned_only) {
    std::cout << bins_tsv(report.bins);
  } else {
    std::cout << human_summary(report) << '\n';
  }
  write_report(opt, to_json(report));
  return 0;
}

int run_bootstrap(const Options& opt) {
  const auto hyp_a = maybe_normalize(opt, read_corpus(opt.hyp_path), "hyp-a");
  const auto hyp_b = maybe_normalize(opt, read_corpus(opt.hyp_b_path), "hyp-b");
  const auto ref = maybe_normalize(opt, read_corpus(opt.ref_path), "ref");
  const SignificanceResult result =
      paired_bootstrap(hyp_a, hyp_b, ref, opt.samples, opt.seed);
  std::cout << human_summary(result) << '\n';
  write_report(opt, to_json(result));
  return 0;
}

void add_table_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--table", opt.table_path, "Character table (TSV)")
      ->envname("WUBI_TABLE");
  cmd->add_option("--punct", opt.punct_path,
                  "Punctuation map (TSV); built-in map when omitted")
      ->envname("WUBI_PUNCT");
}

void add_mode_option(CLI::App* cmd, Options& opt) {
  cmd->add_option("--mode", opt.mode, "strict: abort on bad input; lenient: report and continue")
      ->check(CLI::IsMember({"strict", "lenient"}))
      ->envname("WUBI_MODE");
}

void add_threads_option(CLI::App* cmd, Options& opt) {
  cmd->add_option("--threads", opt.threads, "Worker threads (output order is preserved)")
      ->check(CLI::Range(1u, 256u))
      ->envname("WUBI_THREADS");
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"Reversible Chinese<->Wubi encoding and MT evaluation toolkit"};
  app.require_subcommand(1);
  Options opt;
  int (*action)(const Options&) = nullptr;
  bool binned_only = false;

  auto* encode = app.add_subcommand("encode", "Encode segmented Chinese to Wubi ASCII");
  encode->add_option("input", opt.input, "Input file or - for stdin");
  add_table_options(encode, opt);
  add_mode_option(encode, opt);
  add_threads_option(encode, opt);
  encode->add_option("--segment", opt.lexicon_path,
                     "Segment unsegmented input with this lexicon first");
  encode->callback([&] { action = run_encode; });

  auto* decode = app.add_subcommand("decode", "Decode Wubi ASCII back to Chinese");
  decode->add_option("input", opt.input, "Input file or - for stdin");
  add_table_options(decode, opt);
  add_mode_option(decode, opt);
  add_threads_option(decode, opt);
  decode->callback([&] { action = run_decode; });

  auto* seg = app.add_subcommand("segment", "Segment Chinese text (forward maximum matching)");
  seg->add_option("input", opt.input, "Input file or - for stdin");
  seg->add_option("--lexicon", opt.lexicon_path, "Word list; per-character fallback when omitted")
      ->envname("WUBI_LEXICON");
  add_threads_option(seg, opt);
  seg->callback([&] { action = run_segment; });

  auto* vocab = app.add_subcommand("vocab", "Build a capped frequency vocabulary, or apply one");
  vocab->add_option("input", opt.input, "Input file or - for stdin");
  vocab->add_option("--cap", opt.cap, "Maximum vocabulary size")->check(CLI::PositiveNumber);
  vocab->add_option("--apply", opt.vocab_path,
                    "Apply this vocabulary file: replace OOV tokens by <unk>");
  vocab->add_option("--report", opt.report_path, "Write a JSON summary here");
  add_threads_option(vocab, opt);
  vocab->callback([&] { action = run_vocab; });

  auto* bpe_learn_cmd = app.add_subcommand("bpe-learn", "Learn BPE merges from a corpus");
  bpe_learn_cmd->add_option("input", opt.input, "Input file or - for stdin");
  bpe_learn_cmd->add_option("--bpe-size", opt.bpe_size, "Symbol inventory cap")
      ->check(CLI::PositiveNumber);
  bpe_learn_cmd->callback([&] { action = run_bpe_learn; });

  auto* bpe_apply_cmd = app.add_subcommand("bpe-apply", "Apply (or undo) learned BPE merges");
  bpe_apply_cmd->add_option("input", opt.input, "Input file or - for stdin");
  bpe_apply_cmd->add_option("--merges", opt.merges_path, "Merges file from bpe-learn");
  bpe_apply_cmd->add_flag("--undo", opt.undo, "Join @@ continuations back into words");
  add_threads_option(bpe_apply_cmd, opt);
  bpe_apply_cmd->callback([&] { action = run_bpe_apply; });

  auto* chars_cmd = app.add_subcommand("chars", "Character granularity (spaces become <sp>)");
  chars_cmd->add_option("input", opt.input, "Input file or - for stdin");
  chars_cmd->add_flag("--undo", opt.undo, "Invert the character transform");
  add_threads_option(chars_cmd, opt);
  chars_cmd->callback([&] { action = run_chars; });

  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics (mean/std, divisor N)");
  stats_cmd->add_option("input", opt.input, "Input file or - for stdin");
  stats_cmd->add_option("--report", opt.report_path, "Write a JSON report here");
  stats_cmd->callback([&] { action = run_stats; });

  auto* bleu_cmd = app.add_subcommand("bleu", "Corpus BLEU of a hypothesis file against a reference");
  bleu_cmd->add_option("hyp", opt.hyp_path, "Hypothesis file or -")->required();
  bleu_cmd->add_option("ref", opt.ref_path, "Reference file")->required();
  bleu_cmd->add_flag("--normalize-cn", opt.normalize_cn,
                     "Encode Chinese-side lines to Wubi before scoring");
  add_table_options(bleu_cmd, opt);
  bleu_cmd->add_option("--source", opt.source_path,
                       "Source file supplying per-sentence lengths for binning");
  bleu_cmd->add_option("--bin-width", opt.bin_width, "Source-length bin width")
      ->check(CLI::PositiveNumber);
  bleu_cmd->add_option("--report", opt.report_path, "Write a JSON report here");
  add_threads_option(bleu_cmd, opt);
  bleu_cmd->callback([&] {
    action = nullptr;
    binned_only = false;
  });

  auto* binned_cmd = app.add_subcommand(
      "binned-bleu", "Sentence BLEU binned by source length (TSV output)");
  binned_cmd->add_option("hyp", opt.hyp_path, "Hypothesis file or -")->required();
  binned_cmd->add_option("ref", opt.ref_path, "Reference file")->required();
  binned_cmd->add_flag("--normalize-cn", opt.normalize_cn,
                       "Encode Chinese-side lines to Wubi before scoring");
  add_table_options(binned_cmd, opt);
  binned_cmd->add_option("--source", opt.source_path,
                         "Source file supplying per-sentence lengths");
  binned_cmd->add_option("--bin-width", opt.bin_width, "Source-length bin width")
      ->check(CLI::PositiveNumber);
  binned_cmd->add_option("--report", opt.report_path, "Write a JSON report here");
  binned_cmd->callback([&] {
    action = nullptr;
    binned_only = true;
  });

  auto* boot_cmd = app.add_subcommand(
      "bootstrap", "Paired bootstrap significance of system B vs system A");
  boot_cmd->add_option("hyp-a", opt.hyp_path, "System A hypothesis file")->required();
  boot_cmd->add_option("hyp-b", opt.hyp_b_path, "System B hypothesis file")->required();
  boot_cmd->add_option("ref", opt.ref_path, "Reference file")->required();
  boot_cmd->add_option("--samples", opt.samples, "Bootstrap resamples")
      ->check(CLI::PositiveNumber)
      ->envname("WUBI_SAMPLES");
  boot_cmd->add_option("--seed", opt.seed, "RNG seed")->envname("WUBI_SEED");
  boot_cmd->add_flag("--normalize-cn", opt.normalize_cn,
                     "Encode Chinese-side lines to Wubi before scoring");
  add_table_options(boot_cmd, opt);
  boot_cmd->add_option("--report", opt.report_path, "Write a JSON report here");
  boot_cmd->callback([&] { action = run_bootstrap; });

  auto* rt_cmd = app.add_subcommand(
      "roundtrip-check", "encode|decode a corpus and count non-identical lines");
  rt_cmd->add_option("input", opt.input, "Input file or - for stdin");
  add_table_options(rt_cmd, opt);
  add_mode_option(rt_cmd, opt);
  add_threads_option(rt_cmd, opt);
  rt_cmd->callback([&] { action = run_roundtrip_check; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bleu_cmd->parsed() || binned_cmd->parsed()) {
      return run_bleu(opt, binned_only);
    }
    if (action) return action(opt);
  } catch (const Error& e) {
    std::cerr << "wubi: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "wubi: unexpected error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
