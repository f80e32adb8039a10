#include <algorithm>
#include <filesystem>
#include <random>
#include <set>

#include <doctest.h>

#include "condense/error.hpp"
#include "condense/preproc.hpp"
#include "condense/resources.hpp"
#include "condense/utf8.hpp"

using namespace condense;

namespace {

PreprocConfig Bare() {
  PreprocConfig config;
  config.lemmas = LemmaTable({}, {});
  return config;
}

using Tokens = std::vector<std::string>;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected condense::Error");
  return ErrorCode::kInvalidConfig;
}

std::vector<std::string> CorpusFiles() {
  std::vector<std::string> files;
  for (const char* lang : {"fr", "es"}) {
    for (const auto& entry : std::filesystem::directory_iterator(
             std::filesystem::path(CONDENSE_SOURCE_DIR) / "corpus" / lang)) {
      files.push_back(entry.path().string());
    }
  }
  std::ranges::sort(files);
  return files;
}

}  // namespace

TEST_CASE("tokenize splits letter runs and lowercases") {
  CHECK(Tokenize("Les puces chantaient.") == Tokens{"les", "puces", "chantaient"});
  CHECK(Tokenize("").empty());
  // Digits are not letters and never form a token.
  CHECK(Tokenize("A-t-il 42 puces?") == Tokens{"a-t-il", "puces"});
}

TEST_CASE("tokenize keeps diacritics, internal joiners and normalizes them") {
  CHECK(Tokenize("ÉTÉ Noël, AÑO") == Tokens{"été", "noël", "año"});
  CHECK(Tokenize("l’arbre porte‑clés") == Tokens{"l'arbre", "porte-clés"});
  // Leading, trailing and doubled joiners are not internal.
  CHECK(Tokenize("-avant après- a--b 'x'") == Tokens{"avant", "après", "a", "b", "x"});
  CHECK(Tokenize("abc123def") == Tokens{"abc", "def"});
}

TEST_CASE("filter removes stopwords, digit and symbol tokens") {
  PreprocConfig config = Bare();
  config.stopwords = {"les"};
  CHECK(FilterTokens(Tokens{"les", "puces"}, config) == Tokens{"puces"});
  CHECK(FilterTokens(Tokens{"puces", "42", "puces"}, config) == Tokens{"puces", "puces"});
  CHECK(FilterTokens(Tokens{"%", "--", "x"}, config) == Tokens{"x"});

  config.strip_digits_symbols = false;
  CHECK(FilterTokens(Tokens{"puces", "42"}, config) == Tokens{"puces", "42"});
}

TEST_CASE("filter splits French elisions before the stopword test") {
  const PreprocConfig config = PreprocConfig::Defaults(Language::kFrench);
  CHECK(FilterTokens(Tokens{"l'homme", "qu'il", "aujourd'hui", "d'abord"}, config) ==
        Tokens{"homme", "abord"});
}

TEST_CASE("parenthetical spans are deleted before tokenizing") {
  const Document doc = Preprocess("a (b c) d", Bare());
  REQUIRE(doc.size() == 1);
  CHECK(doc.segments[0].terms == Tokens{"a", "d"});
  CHECK(doc.n_m == 2);
  // The raw segment text is kept verbatim.
  CHECK(doc.segments[0].raw_text == "a (b c) d");
}

TEST_CASE("only innermost parenthetical spans are masked") {
  CHECK(MaskParentheticals("a (b (c) d) e") == "a (b     d) e");
  CHECK(MaskParentheticals("x (y") == "x (y");
  CHECK(MaskParentheticals("(é)") == std::string(4, ' '));

  PreprocConfig config = Bare();
  config.strip_parentheticals = false;
  CHECK(Preprocess("a (b c) d", config).n_m == 4);
}

TEST_CASE("separators inside a parenthetical do not split") {
  const Document doc = Preprocess("Un mot (voir p. 3. ici) suit. Fin.", Bare());
  REQUIRE(doc.size() == 2);
  CHECK(doc.segments[0].raw_text == "Un mot (voir p. 3. ici) suit.");
  CHECK(doc.segments[0].terms == Tokens{"un", "mot", "suit"});
}

TEST_CASE("lemmatize with the default French tables") {
  const PreprocConfig config = PreprocConfig::Defaults(Language::kFrench);
  CHECK(Lemmatize("chantaient", config) == "chant");
  CHECK(Lemmatize("puces", config) == "puce");
  CHECK(Lemmatize("nopal", config) == "nopal");
  // Other forms of the same verb collapse onto the same stem.
  CHECK(Lemmatize("chanté", config) == "chant");
  CHECK(Lemmatize("chanteront", config) == "chant");
  CHECK(Lemmatize("chanter", config) == "chant");
  CHECK(Lemmatize("yeux", config) == "oeil");
}

TEST_CASE("lemmatize with the default Spanish tables") {
  const PreprocConfig config = PreprocConfig::Defaults(Language::kSpanish);
  CHECK(Lemmatize("nopales", config) == "nopal");
  CHECK(Lemmatize("naciones", config) == "nación");
  CHECK(Lemmatize("felices", config) == "feliz");
  CHECK(Lemmatize("cantaban", config) == "cant");
  CHECK(Lemmatize("países", config) == "país");
}

TEST_CASE("lemma rules respect order and the minimum stem") {
  const LemmaTable table({{"aient", ""}, {"ent", ""}, {"s", ""}}, {}, 3);
  CHECK(table.Lemmatize("chantaient") == "chant");  // first match, not "ent"
  CHECK(table.Lemmatize("dent") == "dent");         // stem "d" too short
  CHECK(table.Lemmatize("parents") == "par");       // s, then ent
}

TEST_CASE("lemma table rejects rules that do not shorten") {
  CHECK(CodeOf([] { LemmaTable({{"a", "aa"}}, {}); }) == ErrorCode::kResourceFormat);
  CHECK(CodeOf([] { LemmaTable({{"ab", "cd"}}, {}); }) == ErrorCode::kResourceFormat);
  CHECK(CodeOf([] { LemmaTable({}, {}, 0); }) == ErrorCode::kInvalidConfig);
}

TEST_CASE("exception chains resolve to their final term") {
  const LemmaTable table({{"s", ""}}, {{"a", "b"}, {"b", "c"}, {"vues", "voir"}});
  CHECK(table.Lemmatize("a") == "c");
  CHECK(table.Lemmatize("b") == "c");
  CHECK(table.Lemmatize("c") == "c");
  CHECK(table.Lemmatize("vues") == "voir");
  CHECK(table.Lemmatize("voir") == "voir");
  CHECK(CodeOf([] { LemmaTable({}, {{"x", "y"}, {"y", "x"}}); }) ==
        ErrorCode::kResourceFormat);
}

TEST_CASE("segment_text splits after separators followed by whitespace") {
  const PreprocConfig config = Bare();
  CHECK(SegmentText("A b. C d! E f?", config) == Tokens{"A b.", "C d!", "E f?"});
  CHECK(SegmentText("x: y.", config) == Tokens{"x:", "y."});
  CHECK(SegmentText("3.14 est pi.", config) == Tokens{"3.14 est pi."});
  CHECK(SegmentText("Quoi?! Non...  Si", config) == Tokens{"Quoi?!", "Non...", "Si"});
  CHECK(SegmentText("Oui ! Non.", config) == Tokens{"Oui !", "Non."});
  CHECK(CodeOf([&] { SegmentText(" \n\t", config); }) == ErrorCode::kSegmentationEmpty);
}

TEST_CASE("custom separators") {
  PreprocConfig config = Bare();
  config.separators = {';'};
  CHECK(SegmentText("a; b. c", config) == Tokens{"a;", "b. c"});
  config.separators.clear();
  CHECK(CodeOf([&] { SegmentText("a", config); }) == ErrorCode::kInvalidConfig);
}

TEST_CASE("preprocess runs the full chain") {
  PreprocConfig config = PreprocConfig::Defaults(Language::kFrench);
  config.stopwords = {"les"};
  const Document doc = Preprocess("Les puces piquent. Les puces sautent.", config);
  REQUIRE(doc.size() == 2);
  CHECK(doc.n_m == 6);
  CHECK(doc.n_f == 4);
  CHECK(doc.segments[0].terms == Tokens{"puce", "piqu"});
  CHECK(doc.segments[1].terms == Tokens{"puce", "saut"});
  CHECK(doc.segments[1].index == 1);

  CHECK(CodeOf([&] { Preprocess("", config); }) == ErrorCode::kSegmentationEmpty);

  config.stopwords.clear();
  const Document single = Preprocess("Grands nopales verdes.", config);
  CHECK(single.size() == 1);
  CHECK(single.n_m == single.n_f);
}

TEST_CASE("stopword-only segments are kept with no terms") {
  PreprocConfig config = Bare();
  config.stopwords = {"le", "la"};
  const Document doc = Preprocess("Le la. Chat chat.", config);
  REQUIRE(doc.size() == 2);
  CHECK(doc.segments[0].terms.empty());
  CHECK(doc.n_m == 4);
  CHECK(doc.n_f == 2);
}

TEST_CASE("high-frequency filter is off by default and drops dominant terms") {
  PreprocConfig config = Bare();
  CHECK(Preprocess("x x x y. y z.", config).n_f == 6);
  config.max_term_share = 0.4;  // x holds 3/6 of all terms
  const Document doc = Preprocess("x x x y. y z.", config);
  CHECK(doc.n_f == 3);
  CHECK(doc.segments[0].terms == Tokens{"y"});
  config.max_term_share = 1.5;
  CHECK(CodeOf([&] { Preprocess("x.", config); }) == ErrorCode::kInvalidConfig);
}

TEST_CASE("resource file parsing") {
  const auto stop = ParseStopwords("# comment\nLes\n\n  la \r\naujourd’hui\n");
  CHECK(stop == std::unordered_set<std::string>{"les", "la", "aujourd'hui"});

  const auto rules = ParseLemmaRules("# c\naient\t\naux\tal\n");
  REQUIRE(rules.size() == 2);
  CHECK(rules[0] == LemmaRule{"aient", ""});
  CHECK(rules[1] == LemmaRule{"aux", "al"});
  CHECK(CodeOf([] { ParseLemmaRules("nope\n"); }) == ErrorCode::kResourceFormat);
  CHECK(CodeOf([] { ParseLemmaRules("\tx\n"); }) == ErrorCode::kResourceFormat);

  const auto exc = ParseLemmaExceptions("Yeux\toeil\n");
  REQUIRE(exc.size() == 1);
  CHECK(exc[0] == std::pair<std::string, std::string>{"yeux", "oeil"});
  CHECK(CodeOf([] { ParseLemmaExceptions("a\t\n"); }) == ErrorCode::kResourceFormat);
}

TEST_CASE("embedded resources parse for both languages") {
  for (Language lang : {Language::kFrench, Language::kSpanish}) {
    const PreprocConfig config = PreprocConfig::Defaults(lang);
    CHECK(config.stopwords.size() > 50);
    CHECK(config.lemmas.rules().size() > 10);
    CHECK_FALSE(config.lemmas.exceptions().empty());
  }
}

TEST_CASE("property: lemmatize is idempotent over the shipped tables") {
  std::mt19937_64 rng(7);
  for (Language lang : {Language::kFrench, Language::kSpanish}) {
    const PreprocConfig config = PreprocConfig::Defaults(lang);
    std::set<std::string> vocabulary;
    for (const auto& [surface, term] : config.lemmas.exceptions()) {
      vocabulary.insert(surface);
      vocabulary.insert(term);
    }
    for (const auto& word : config.stopwords) vocabulary.insert(word);
    for (const auto& path : CorpusFiles()) {
      for (auto& token : Tokenize(ReadFile(path))) vocabulary.insert(token);
    }
    // Synthetic words: random stems followed by every rule suffix.
    const std::string letters = "abcdeilmnorstu";
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<int> length(1, 6);
    for (int k = 0; k < 300; ++k) {
      std::string stem;
      for (int n = length(rng); n > 0; --n) stem += letters[pick(rng)];
      vocabulary.insert(stem);
      for (const LemmaRule& rule : config.lemmas.rules()) {
        vocabulary.insert(stem + rule.suffix);
        vocabulary.insert(stem + rule.replacement);
      }
    }
    for (const std::string& word : vocabulary) {
      const std::string once = Lemmatize(word, config);
      CHECK_MESSAGE(Lemmatize(once, config) == once, word);
    }
  }
}

TEST_CASE("property: n_f <= n_m and contiguous indices on random texts") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> words = {
      "Les", "puces", "chantaient", "le", "(note)", "42", "l'homme", "arbre", "de",
      "sautent", "grands", "et", "nopal", "été", "x-y", "%"};
  const std::vector<std::string> seps = {" ", " ", " ", ". ", "! ", ": ", "? "};
  const PreprocConfig config = PreprocConfig::Defaults(Language::kFrench);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    std::uniform_int_distribution<int> n(1, 60);
    for (int k = n(rng); k > 0; --k) {
      text += words[rng() % words.size()];
      text += seps[rng() % seps.size()];
    }
    const Document doc = Preprocess(text, config);
    CHECK(doc.n_f <= doc.n_m);
    std::size_t terms = 0;
    for (std::size_t k = 0; k < doc.size(); ++k) {
      CHECK(doc.segments[k].index == k);
      CHECK_FALSE(utf8::Trim(doc.segments[k].raw_text).empty());
      terms += doc.segments[k].terms.size();
    }
    CHECK(terms == doc.n_f);
  }
}

TEST_CASE("property: reprocessing shuffled segments gives the same term lists") {
  std::mt19937_64 rng(3);
  for (const auto& path : CorpusFiles()) {
    const Language lang =
        path.find("/es/") != std::string::npos ? Language::kSpanish : Language::kFrench;
    const PreprocConfig config = PreprocConfig::Defaults(lang);
    const Document doc = Preprocess(ReadFile(path), config);
    std::vector<std::string> raw;
    std::multiset<std::vector<std::string>> expected;
    for (const Segment& s : doc.segments) {
      raw.push_back(s.raw_text);
      expected.insert(s.terms);
    }
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(raw.begin(), raw.end(), rng);
      const Document again = PreprocessSegments(raw, config);
      std::multiset<std::vector<std::string>> got;
      for (const Segment& s : again.segments) got.insert(s.terms);
      CHECK(got == expected);
      CHECK(again.n_m == doc.n_m);
      CHECK(again.n_f == doc.n_f);
    }
  }
}
