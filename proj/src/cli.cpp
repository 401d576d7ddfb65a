#include "lyndon/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <string>

#include "lyndon/cscount.hpp"
#include "lyndon/debruijn.hpp"
#include "lyndon/oracle.hpp"
#include "lyndon/ranking.hpp"
#include "lyndon/text_format.hpp"

namespace lyndon {

namespace {

struct Options {
  std::uint32_t sigma = 0;
  std::string format;
  std::string word;
  std::size_t n = 0;
  std::string k;
  std::string engine = "fast";
  bool divisors = false;
};

class CommandLine {
 public:
  CommandLine(const Options& opts, std::ostream& out, std::ostream& err)
      : opts_(opts), alphabet_(opts.sigma), format_(resolve_format()), out_(out), err_(err) {}

  void rank() {
    const Word w = read_word();
    const RankResult r = rank_lyndon(w);
    if (!is_lyndon(w)) {
      err_ << "note: " << format_word(w, format_) << " is not a Lyndon word; ranked "
           << format_word(r.normalized_word, format_) << '\n';
    }
    out_ << r.rank.to_string() << '\n';
  }

  void unrank() { out_ << format_word(unrank_lyndon(opts_.n, read_k(), alphabet_), format_) << '\n'; }

  void cs_count() {
    const Word w = read_word();
    const Word normalized = prev_self_minimal(w);
    if (!(normalized == w)) {
      err_ << "note: " << format_word(w, format_) << " is not self-minimal; counted "
           << format_word(normalized, format_) << '\n';
    }
    const CsEngine engine = opts_.engine == "matrix" ? CsEngine::matrix : CsEngine::fast;
    out_ << lyndon::cs_count(normalized, engine).to_string() << '\n';
  }

  void decode() { out_ << lyndon::decode(read_word()).to_string() << '\n'; }

  void db_symbol() { out_ << lyndon::db_symbol(opts_.n, read_k(), alphabet_) << '\n'; }

  void dbprime_symbol() { out_ << db_prime_symbol(opts_.n, read_k(), alphabet_) << '\n'; }

  void db_generate() { out_ << format_word(oracle::brute_db(opts_.n, alphabet_), format_) << '\n'; }

  void lyndon_list() {
    for (const Word& w : oracle::enumerate_lyndon(opts_.n, alphabet_, opts_.divisors)) {
      out_ << format_word(w, format_) << '\n';
    }
  }

 private:
  WordFormat resolve_format() const {
    if (opts_.format.empty()) return default_format(alphabet_);
    if (opts_.format == "csv") return WordFormat::csv;
    if (opts_.format == "letters") return WordFormat::letters;
    return WordFormat::chars;
  }

  Word read_word() const { return parse_word(opts_.word, alphabet_, format_); }
  BigCount read_k() const { return BigCount::from_decimal(opts_.k); }

  const Options& opts_;
  Alphabet alphabet_;
  WordFormat format_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ranking of Lyndon words and decoding of minimal de Bruijn sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--sigma", opts.sigma, "alphabet size")->required()->check(CLI::Range(2u, 1u << 30));
  app.add_option("--format", opts.format, "word notation (default chars for sigma <= 36, else csv)")
      ->check(CLI::IsMember({"chars", "csv", "letters"}));

  std::map<CLI::App*, std::function<void(CommandLine&)>> actions;
  auto word_cmd = [&](const char* name, const char* help, void (CommandLine::*fn)()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("word", opts.word, "input word")->required();
    actions[sub] = [fn](CommandLine& c) { (c.*fn)(); };
    return sub;
  };
  auto nk_cmd = [&](const char* name, const char* help, void (CommandLine::*fn)()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("n", opts.n, "word length")->required();
    sub->add_option("k", opts.k, "1-based rank or position")->required();
    actions[sub] = [fn](CommandLine& c) { (c.*fn)(); };
    return sub;
  };
  auto n_cmd = [&](const char* name, const char* help, void (CommandLine::*fn)()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("n", opts.n, "word length")->required();
    actions[sub] = [fn](CommandLine& c) { (c.*fn)(); };
    return sub;
  };

  word_cmd("rank", "number of Lyndon words of the same length that are <= word", &CommandLine::rank);
  nk_cmd("unrank", "k-th Lyndon word of length n", &CommandLine::unrank);
  word_cmd("cs-count", "number of words whose minimal rotation is <= word (self-minimal input)",
           &CommandLine::cs_count)
      ->add_option("--engine", opts.engine, "fast or matrix")
      ->check(CLI::IsMember({"fast", "matrix"}));
  word_cmd("decode", "position of word in the minimal de Bruijn sequence", &CommandLine::decode);
  nk_cmd("db-symbol", "k-th symbol of the minimal de Bruijn sequence of order n", &CommandLine::db_symbol);
  nk_cmd("dbprime-symbol", "k-th symbol of the concatenated Lyndon words of length n",
         &CommandLine::dbprime_symbol);
  n_cmd("db-generate", "print the minimal de Bruijn sequence of order n", &CommandLine::db_generate);
  n_cmd("lyndon-list", "list Lyndon words of length n", &CommandLine::lyndon_list)
      ->add_flag("--divisors", opts.divisors, "include every length dividing n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsageError;
  }

  try {
    CommandLine cmd(opts, out, err);
    for (const auto& [sub, action] : actions) {
      if (sub->parsed()) action(cmd);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace lyndon
