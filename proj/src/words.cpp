#include "dualcox/words.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "dualcox/errors.hpp"

namespace dualcox {

namespace {

struct Letter {
  std::size_t pos;
  Element value;
};

class WordParser {
 public:
  WordParser(const GroupPtr& g, std::string_view text) : g_(g), text_(text) {}

  std::vector<Letter> top_level() {
    auto letters = sequence();
    if (pos_ < text_.size()) fail("unmatched ')'");
    return letters;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("word, position " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (!std::isspace(static_cast<unsigned char>(c)) && c != '*' && c != '.') break;
      ++pos_;
    }
  }

  std::vector<Letter> sequence() {
    std::vector<Letter> out;
    for (skip(); pos_ < text_.size() && text_[pos_] != ')'; skip()) {
      const std::size_t start = pos_;
      if (text_[pos_] == '(') {
        ++pos_;
        Element product = Element::identity(g_);
        for (const auto& l : sequence()) product = product * l.value;
        if (pos_ >= text_.size()) fail("unclosed '('");
        ++pos_;
        out.push_back({start, std::move(product)});
      } else {
        out.push_back({start, token()});
      }
    }
    return out;
  }

  std::size_t number(std::size_t from, std::size_t bound, const char* what) {
    std::size_t end = from;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == from || end - from > 9) fail(std::string("expected the index of a ") + what);
    const std::size_t v = std::stoul(std::string(text_.substr(from, end - from)));
    if (v >= bound) {
      fail(std::string(what) + " " + std::to_string(v) + " outside 0.." + std::to_string(bound - 1));
    }
    pos_ = end;
    return v;
  }

  Element token() {
    const char c = text_[pos_];
    const bool digit_next =
        pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
    const std::size_t rank = g_->rank();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return simple(number(pos_, rank, "simple generator"));
    }
    if (c == 's' && digit_next) return simple(number(pos_ + 1, rank, "simple generator"));
    if (c == 't' && digit_next) {
      return reflection_element(g_, static_cast<ReflIndex>(
                                        number(pos_ + 1, g_->reflection_count(), "reflection")));
    }
    const std::string_view aliases = "stuv";
    const std::size_t alias = aliases.find(c);
    const bool alone = pos_ + 1 >= text_.size() ||
                       !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1]));
    if (alias != std::string_view::npos && alone) {
      if (alias >= rank) fail(std::string("generator '") + c + "' needs rank at least " + std::to_string(alias + 1));
      ++pos_;
      return simple(alias);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Element simple(std::size_t i) const {
    const unsigned letter = static_cast<unsigned>(i);
    return element_from_simple_word(g_, std::span<const unsigned>(&letter, 1));
  }

  const GroupPtr& g_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const GroupPtr& g, std::string_view text) {
  Element product = Element::identity(g);
  for (const auto& l : WordParser(g, text).top_level()) product = product * l.value;
  return product;
}

ReflWord parse_reflection_word(const GroupPtr& g, std::string_view text) {
  ReflWord out;
  for (const auto& l : WordParser(g, text).top_level()) {
    auto t = as_reflection(l.value);
    if (!t) {
      throw UsageError("word, position " + std::to_string(l.pos) + ": letter is not a reflection");
    }
    out.letters.push_back(*t);
  }
  return out;
}

}  // namespace dualcox
